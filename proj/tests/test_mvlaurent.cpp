#include <random>

#include "doctest.h"
#include "vkt/error.hpp"
#include "vkt/fusion.hpp"
#include "vkt/mvlaurent.hpp"

using namespace vkt;

namespace {

LaurentPoly L(std::int64_t e, std::int64_t c = 1) { return LaurentPoly::monomial(e, c); }

}  // namespace

TEST_CASE("Laurent arithmetic") {
  const LaurentPoly p = L(2) + L(-1, 3) - LaurentPoly(4);
  CHECK(p.to_string() == "L^2 - 4 + 3*L^-1");
  CHECK(p.bar() == L(-2) + L(1, 3) - LaurentPoly(4));
  CHECK((p - p).is_zero());
  CHECK((L(1) - L(-1)) * (L(1) + L(-1)) == L(2) - L(-2));
  CHECK(divide_exact(L(2) - L(-2), L(1) - L(-1)) == L(1) + L(-1));
  CHECK(!divide_exact(L(2) + LaurentPoly(1), L(1) - LaurentPoly(1)));
  CHECK(divide_exact(LaurentPoly(), L(3)) == LaurentPoly());
  CHECK_THROWS_AS(SymmetricPoly(L(1)), Error);
}

TEST_CASE("rho") {
  CHECK(rho(0).poly() == LaurentPoly(1));
  CHECK(rho(1).poly() == L(1) + L(-1));
  CHECK(rho(3).poly() == L(3) + L(1) + L(-1) + L(-3));
  CHECK(rho(-1).poly().is_zero());
  CHECK(rho(4).rho_coordinates() == std::vector<std::int64_t>{0, 0, 0, 0, 1});
  for (std::int64_t k = 0; k <= 20; ++k)
    for (std::int64_t l = 0; l <= 20; ++l) {
      LaurentPoly expected;
      for (std::int64_t i = 0; i <= std::min(k, l); ++i) expected += rho(k + l - 2 * i).poly();
      CHECK(rho(k).poly() * rho(l).poly() == expected);
    }
}

TEST_CASE("R(T) as a module over R(SU(2))") {
  for (std::int64_t n = 1; n <= 12; ++n) {
    const auto [p0, p1] = express_in_RT_basis(L(n));
    CHECK(p0.poly() == -rho(n - 2).poly());
    CHECK(p1.poly() == rho(n - 1).poly());
  }
  {
    const auto [p0, p1] = express_in_RT_basis(LaurentPoly(1));
    CHECK(p0.poly() == LaurentPoly(1));
    CHECK(p1.poly().is_zero());
  }
  {
    const auto [p0, p1] = express_in_RT_basis(L(-1));
    CHECK(p0.poly() == rho(1).poly());
    CHECK(p1.poly() == LaurentPoly(-1));
  }
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> e(-7, 7), c(-5, 5);
  for (int trial = 0; trial < 200; ++trial) {
    LaurentPoly p;
    for (int t = 0; t < 5; ++t) p += L(e(rng), c(rng));
    const auto [p0, p1] = express_in_RT_basis(p);
    CHECK(p0.poly() + p1.poly() * L(1) == p);
  }
}

TEST_CASE("S^3") {
  const auto r0 = mv_s3(0);
  CHECK(r0.middle == IntMatrix{{1, -1}, {0, 0}});
  CHECK(r0.k0.to_string() == "Z");
  CHECK(r0.k1.to_string() == "Z");
  CHECK(mv_s3(1).k0.is_zero());
  CHECK(mv_s3(1).k1.is_zero());
  CHECK(mv_s3(6).k1.to_string() == "Z/6");
  for (std::int64_t n = 1; n <= 20; ++n) {
    const auto r = mv_s3(n);
    CHECK(r.k0.is_zero());
    CHECK(r.k1.free_rank == 0);
    if (n > 1) {
      REQUIRE(r.k1.torsion.size() == 1);
      CHECK(r.k1.torsion[0] == n);
    }
  }
  CHECK_THROWS_AS(mv_s3(-1), Error);
}

TEST_CASE("U(1)") {
  const auto a = mv_u1(3, 0);
  CHECK(a.rank == 3);
  CHECK(a.kernel_zero);
  CHECK(a.relation == L(3) - LaurentPoly(1));
  const auto b = mv_u1(2, 1);
  CHECK(b.rank == 2);
  CHECK(b.relation == -L(2) - LaurentPoly(1));
  CHECK(mv_u1(1, 0).rank == 1);
  CHECK(u1_reduce(2, 1, 2) == std::pair<std::int64_t, int>{0, -1});
  CHECK(u1_reduce(3, 0, -1) == std::pair<std::int64_t, int>{2, 1});

  const auto u1 = root_datum_from_name("U(1)");
  for (std::int64_t n = 1; n <= 10; ++n)
    for (int eps = 0; eps <= 1; ++eps) {
      const auto r = mv_u1(n, eps);
      CHECK(r.determinant == r.relation);
      const auto tw = twisting_from_level(u1, {n}, std::nullopt, {eps});
      CHECK(enumerate_basis_orbits(u1, tw).size() == r.rank);
      for (std::int64_t k = -3 * n; k <= 3 * n; ++k) {
        const auto [rem, sign] = u1_reduce(n, eps, k);
        CHECK(torus_pushforward(u1, tw, Weight{k}).support ==
              std::map<Weight, std::int64_t>{{Weight{rem}, sign}});
      }
    }
}

TEST_CASE("SU(2)") {
  const auto r5 = mv_su2(5);
  CHECK(r5.rank == 4);
  CHECK(r5.kernel_zero);
  CHECK(r5.middle[0][1] == rho(3));
  CHECK(r5.middle[1][1].poly() == -rho(4).poly());
  CHECK(r5.relation == rho(4));
  CHECK(mv_su2(1).rank == 0);
  CHECK(mv_su2(2).rank == 1);
  CHECK(su2_reduce(2, {0, 1}) == std::vector<std::int64_t>{0});
  CHECK(su2_reduce(5, {0, 0, 0, 0, 0, 0, 1}) == std::vector<std::int64_t>{0, 0, -1, 0});

  const auto su2 = root_datum_from_name("SU(2)");
  for (std::int64_t n = 1; n <= 12; ++n) {
    CAPTURE(n);
    const FusionRing ring(su2, twisting_from_level(su2, {n}));
    const auto r = mv_su2(n);
    CHECK(ring.size() == r.rank);
    // The quotient map agrees with orbit reduction on every ρ_k.
    for (std::int64_t k = 0; k <= 3 * n; ++k) {
      std::vector<std::int64_t> c(static_cast<std::size_t>(k) + 1, 0);
      c.back() = 1;
      const auto fused = ring.class_from_weight(Weight{k});
      CHECK(su2_reduce(n, c) == (ring.size() ? ring.coordinates(fused) : std::vector<std::int64_t>{}));
    }
    // And so does the product.
    if (n >= 2) {
      const auto& N = ring.structure_constants();
      for (std::int64_t a = 0; a < n - 1; ++a)
        for (std::int64_t b = 0; b < n - 1; ++b) {
          const auto prod = SymmetricPoly(rho(a).poly() * rho(b).poly()).rho_coordinates();
          CHECK(su2_reduce(n, prod) == N[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]);
        }
    }
  }
}
