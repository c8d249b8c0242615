#include <set>

#include "doctest.h"
#include "vkt/error.hpp"
#include "vkt/twist.hpp"

using namespace vkt;

namespace {

Rational q(long a, long b) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::InvalidArgument;
}

// Independent check of b(x) - ε/2 ∈ Λ.
bool in_f_epsilon(const Twisting& tw, const TorusPoint& x) {
  const std::size_t n = tw.rank();
  for (std::size_t i = 0; i < n; ++i) {
    Rational s = q(-tw.epsilon()[i], 2);
    for (std::size_t j = 0; j < n; ++j) s += Rational(tw.b()(i, j)) * x.coords[j];
    s.canonicalize();
    if (s.get_den() != 1) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("levels assemble b") {
  const auto su2 = root_datum_from_name("SU(2)");
  for (std::int64_t n = 1; n <= 6; ++n) {
    const auto tw = twisting_from_level(su2, {n});
    CHECK(tw.b() == IntMatrix{{2 * n}});
    CHECK(tw.order() == 2 * n);
    CHECK(tw.primitive());
  }
  const auto u1 = root_datum_from_name("U(1)");
  const auto tu = twisting_from_level(u1, {5}, std::nullopt, {1});
  CHECK(tu.b() == IntMatrix{{5}});
  CHECK(tu.lambda_epsilon() == RatVector{q(1, 2)});
  CHECK(!tu.primitive());

  const auto su3 = root_datum_from_name("SU(3)");
  const auto t3 = twisting_from_level(su3, {4});
  CHECK(t3.b() == IntMatrix{{8, -4}, {-4, 8}});
  CHECK(t3.order() == 48);

  const auto mixed = root_datum_from_name("SU(2) x U(1)");
  const auto tm = twisting_from_level(mixed, {3, 2});
  CHECK(tm.b() == IntMatrix{{6, 0}, {0, 2}});
  CHECK(tm.primitive());
  CHECK(!twisting_from_level(mixed, {3, 3}).primitive());

  const auto t2 = root_datum_from_name("U(1)^2");
  const auto tt = twisting_from_level(t2, {}, IntMatrix{{2, 1}, {1, 3}});
  CHECK(tt.order() == 5);
}

TEST_CASE("dual Coxeter shift") {
  CHECK(shift_by_dual_coxeter(root_datum_from_name("SU(2)"), {3}) ==
        std::vector<std::int64_t>{5});
  CHECK(shift_by_dual_coxeter(root_datum_from_name("SU(3)"), {0}) ==
        std::vector<std::int64_t>{3});
  CHECK(shift_by_dual_coxeter(root_datum_from_name("U(1)"), {7}) ==
        std::vector<std::int64_t>{7});
  CHECK(shift_by_dual_coxeter(root_datum_from_name("Spin(5)"), {1}) ==
        std::vector<std::int64_t>{4});
  CHECK(shift_by_dual_coxeter(root_datum_from_name("SU(2) x U(1)"), {1, 4}) ==
        std::vector<std::int64_t>{3, 4});
  TwistSpec spec;
  spec.levels = {3};
  spec.dual_coxeter_shift = true;
  CHECK(twisting_from_spec(root_datum_from_name("SU(2)"), spec).b() == IntMatrix{{10}});
}

TEST_CASE("validation") {
  const auto su2 = root_datum_from_name("SU(2)");
  CHECK(kind_of([&] { twisting_from_level(su2, {0}); }) == ErrorKind::Degenerate);
  CHECK(kind_of([&] { twisting_from_level(su2, {1, 2}); }) == ErrorKind::InvalidTwist);
  const auto su3 = root_datum_from_name("SU(3)");
  CHECK(kind_of([&] { twisting_from_matrix(su3, IntMatrix{{2, 0}, {0, 2}}); }) ==
        ErrorKind::NotEquivariant);
  // (1,0) on SU(3) is not W-invariant mod 2: s_1 moves it by alpha_1 = (2,-1).
  CHECK(kind_of([&] { twisting_from_level(su3, {4}, std::nullopt, {1, 0}); }) ==
        ErrorKind::InvalidTwist);
  const auto t2 = root_datum_from_name("U(1)^2");
  CHECK(kind_of([&] { twisting_from_matrix(t2, IntMatrix{{1, 2}, {0, 1}}); }) ==
        ErrorKind::InvalidTwist);
  // ε = 1 on SU(2) is W-invariant mod 2 but nonzero on the coroot.
  const auto odd = twisting_from_level(su2, {3}, std::nullopt, {1});
  CHECK(!odd.epsilon_trivial_on_coroots());
}

TEST_CASE("F_epsilon points") {
  const auto su2 = root_datum_from_name("SU(2)");
  const auto p = f_epsilon_points(su2, twisting_from_level(su2, {3}));
  REQUIRE(p.size() == 6);
  for (int t = 0; t < 6; ++t) CHECK(p[t].coords[0] == q(t, 6));

  const auto u1 = root_datum_from_name("U(1)");
  for (std::int64_t n = 1; n <= 7; ++n) {
    const auto pts = f_epsilon_points(u1, twisting_from_level(u1, {n}));
    REQUIRE(pts.size() == static_cast<std::size_t>(n));
    for (std::int64_t j = 0; j < n; ++j) CHECK(pts[j].coords[0] == q(j, n));
  }
  const auto h = f_epsilon_points(u1, twisting_from_level(u1, {2}, std::nullopt, {1}));
  CHECK(h == std::vector<TorusPoint>{{{q(1, 4)}}, {{q(3, 4)}}});
}

TEST_CASE("F_epsilon properties across groups") {
  struct Case {
    const char* group;
    std::vector<std::int64_t> levels;
    std::optional<IntMatrix> torus;
    std::vector<std::int64_t> eps;
  };
  const std::vector<Case> cases = {
      {"SU(2)", {5}, std::nullopt, {}},
      {"SU(3)", {4}, std::nullopt, {}},
      {"Spin(5)", {5}, std::nullopt, {}},
      {"U(1)^2", {}, IntMatrix{{3, 0}, {0, 3}}, {1, 0}},
      {"U(1)^2", {}, IntMatrix{{2, 1}, {1, 3}}, {}},
      {"SU(2) x U(1)", {4, 3}, std::nullopt, {0, 1}},
  };
  for (const auto& c : cases) {
    CAPTURE(c.group);
    const auto rd = root_datum_from_name(c.group);
    const auto tw = twisting_from_level(rd, c.levels, c.torus, c.eps);
    const auto pts = f_epsilon_points(rd, tw);
    CHECK(pts.size() == static_cast<std::size_t>(tw.order()));
    CHECK(BigInt(tw.order()) == *tw.F().order());
    std::set<TorusPoint> set(pts.begin(), pts.end());
    CHECK(set.size() == pts.size());
    for (const auto& x : pts) {
      CHECK(in_f_epsilon(tw, x));
      for (const auto& xc : x.coords) CHECK((xc >= 0 && xc < 1));
    }
    for (const auto& w : weyl_group_elements(rd))
      for (const auto& x : pts) CHECK(set.count(apply(w.on_coweights, x).reduced()) == 1);
  }
}

TEST_CASE("degree parity") {
  CHECK(degree_parity(root_datum_from_name("SU(2)")) == 1);
  CHECK(degree_parity(root_datum_from_name("SU(3)")) == 0);
}
