#include <deque>
#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "vkt/affineweyl.hpp"

using namespace vkt;

namespace {

Rational q(long a, long b) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}

// Independent orbit search: breadth-first over simple reflections and the
// translations ±b(e_j), inside a window, tracking signs. Returns the points
// of the orbit inside the box b([0,1)^n) with every sign they were reached by.
std::map<Weight, std::set<int>> orbit_in_box(const RootDatum& rd, const Twisting& tw,
                                             const Weight& start, std::int64_t window) {
  const std::size_t n = rd.rank();
  std::map<Weight, int> seen{{start, 1}};
  std::map<Weight, std::set<int>> conflicts;
  std::deque<Weight> queue{start};
  auto visit = [&](const Weight& w, int s) {
    for (std::size_t i = 0; i < n; ++i)
      if (std::abs(w[i]) > window) return;
    auto [it, fresh] = seen.emplace(w, s);
    if (fresh) queue.push_back(w);
    else if (it->second != s) conflicts[w].insert(s);
  };
  while (!queue.empty()) {
    const Weight cur = queue.front();
    queue.pop_front();
    const int s = seen.at(cur);
    for (std::size_t i = 0; i < rd.semisimple_rank(); ++i)
      visit(rd.reflection_on_weights(i).apply(cur), -s);
    for (std::size_t j = 0; j < n; ++j) {
      Coweight e(n);
      e[j] = 1;
      const int t = tw.epsilon()[j] ? -s : s;
      visit(cur + tw.apply_b(e), t);
      visit(cur - tw.apply_b(e), t);
    }
  }
  std::map<Weight, std::set<int>> out;
  for (const auto& [w, s] : seen) {
    // In the box iff b^{-1} w ∈ [0,1)^n.
    bool inside = true;
    for (std::size_t i = 0; i < n; ++i) {
      std::int64_t v = 0;
      for (std::size_t j = 0; j < n; ++j) v += tw.inverse_numerator(i, j) * w[j];
      if (v < 0 || v >= tw.inverse_denominator()) inside = false;
    }
    if (!inside) continue;
    out[w].insert(s);
  }
  bool any_conflict = !conflicts.empty();
  if (any_conflict)
    for (auto& [w, s] : out) s.insert(-*s.begin());
  return out;
}

}  // namespace

TEST_CASE("action and composition") {
  const auto su2 = root_datum_from_name("SU(2)");
  const auto tw = twisting_from_level(su2, {3});
  const auto e = affine_identity(su2);
  CHECK(act(tw, e, Weight{4}) == Weight{4});
  const AffineElement t{Coweight{1}, e.w};
  CHECK(act(tw, t, Weight{1}) == Weight{7});
  const AffineElement s{Coweight{0}, weyl_group_elements(su2)[1]};
  for (std::int64_t k = -3; k <= 3; ++k) CHECK(act(tw, s, Weight{k}) == Weight{-k});

  const auto su3 = root_datum_from_name("SU(3)");
  const auto t3 = twisting_from_level(su3, {4});
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-3, 3);
  const auto& W = weyl_group_elements(su3);
  std::uniform_int_distribution<std::size_t> wi(0, W.size() - 1);
  for (int trial = 0; trial < 200; ++trial) {
    const AffineElement g1{Coweight{d(rng), d(rng)}, W[wi(rng)]};
    const AffineElement g2{Coweight{d(rng), d(rng)}, W[wi(rng)]};
    const Weight l{d(rng), d(rng)};
    CHECK(act(t3, compose(su3, g1, g2), l) == act(t3, g1, act(t3, g2, l)));
    CHECK(sign_character(t3, compose(su3, g1, g2)) ==
          sign_character(t3, g1) * sign_character(t3, g2));
  }
}

TEST_CASE("sign character") {
  const auto su2 = root_datum_from_name("SU(2)");
  const auto tw = twisting_from_level(su2, {5});
  CHECK(sign_character(tw, affine_identity(su2)) == 1);
  CHECK(sign_character(tw, {Coweight{0}, weyl_group_elements(su2)[1]}) == -1);
  const auto u1 = root_datum_from_name("U(1)");
  const auto t1 = twisting_from_level(u1, {4}, std::nullopt, {1});
  CHECK(sign_character(t1, {Coweight{1}, affine_identity(u1).w}) == -1);
}

TEST_CASE("orbit normal form examples") {
  const auto su2 = root_datum_from_name("SU(2)");
  const auto tw = twisting_from_level(su2, {5});
  const auto a = orbit_normal_form(su2, tw, Weight{7});
  CHECK(!a.zero);
  CHECK(a.representative == Weight{3});
  CHECK(a.sign == -1);
  CHECK(act(tw, a.witness, Weight{7}) == Weight{3});
  CHECK(orbit_normal_form(su2, tw, Weight{5}).zero);
  const auto c = orbit_normal_form(su2, tw, Weight{3});
  CHECK(c.representative == Weight{3});
  CHECK(c.sign == 1);
  CHECK(c.witness == affine_identity(su2));
}

TEST_CASE("basis orbits") {
  const auto su2 = root_datum_from_name("SU(2)");
  CHECK(enumerate_basis_orbits(su2, twisting_from_level(su2, {5})) ==
        std::vector<Weight>{Weight{1}, Weight{2}, Weight{3}, Weight{4}});
  for (std::int64_t n = 1; n <= 12; ++n)
    CHECK(enumerate_basis_orbits(su2, twisting_from_level(su2, {n})).size() ==
          static_cast<std::size_t>(n - 1));
  const auto u1 = root_datum_from_name("U(1)");
  for (std::int64_t n = 1; n <= 10; ++n)
    for (std::int64_t e = 0; e <= 1; ++e)
      CHECK(enumerate_basis_orbits(u1, twisting_from_level(u1, {n}, std::nullopt, {e})).size() ==
            static_cast<std::size_t>(n));
  const auto su3 = root_datum_from_name("SU(3)");
  CHECK(enumerate_basis_orbits(su3, twisting_from_level(su3, {4})).size() == 3);
  CHECK(enumerate_basis_orbits(su3, twisting_from_level(su3, {5})).size() == 6);
}

TEST_CASE("normal form against an independent orbit search") {
  struct Case {
    const char* group;
    std::vector<std::int64_t> levels;
    std::vector<std::int64_t> eps;
  };
  for (const Case& c : {Case{"SU(2)", {5}, {}}, Case{"SU(2)", {4}, {1}}, Case{"SU(3)", {4}, {}},
                        Case{"SU(2) x U(1)", {3, 2}, {0, 1}}, Case{"Spin(5)", {4}, {}}}) {
    CAPTURE(c.group);
    const auto rd = root_datum_from_name(c.group);
    const auto tw = twisting_from_level(rd, c.levels, std::nullopt, c.eps);
    std::int64_t window = 0;
    for (std::size_t i = 0; i < rd.rank(); ++i)
      for (std::size_t j = 0; j < rd.rank(); ++j) window += BigInt(abs(tw.b()(i, j))).get_si();
    window *= 2;
    for (const Weight& start : box_points(rd, tw)) {
      const auto box = orbit_in_box(rd, tw, start, window);
      REQUIRE(!box.empty());
      const auto red = orbit_normal_form(rd, tw, start);
      CHECK(red.representative == box.begin()->first);
      const auto& signs = box.begin()->second;
      CHECK(red.zero == (signs.size() == 2));
      if (!red.zero) CHECK(red.sign == *signs.begin());
    }
  }
}

TEST_CASE("normal form is equivariant") {
  for (const char* g : {"SU(3)", "Spin(5)", "SU(2) x U(1)"}) {
    CAPTURE(g);
    const auto rd = root_datum_from_name(g);
    const auto tw = rd.rank() == 2 && rd.semisimple_rank() == 1
                        ? twisting_from_level(rd, {4, 3}, std::nullopt, {0, 1})
                        : twisting_from_level(rd, {5});
    const auto& W = weyl_group_elements(rd);
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> d(-12, 12);
    std::uniform_int_distribution<std::size_t> wi(0, W.size() - 1);
    for (int trial = 0; trial < 300; ++trial) {
      Weight l(rd.rank());
      Coweight p(rd.rank());
      for (std::size_t i = 0; i < rd.rank(); ++i) {
        l[i] = d(rng);
        p[i] = d(rng) / 4;
      }
      const AffineElement gg{p, W[wi(rng)]};
      const auto a = orbit_normal_form(rd, tw, l);
      const auto b = orbit_normal_form(rd, tw, act(tw, gg, l));
      CHECK(a.zero == b.zero);
      CHECK(a.representative == b.representative);
      if (!a.zero) {
        CHECK(a.sign == b.sign * sign_character(tw, gg));
        CHECK(act(tw, a.witness, l) == a.representative);
      }
    }
  }
}

TEST_CASE("for ε = 0 the surviving orbits are exactly the free ones") {
  for (const char* g : {"SU(2)", "SU(3)", "Spin(5)"})
    for (std::int64_t k = 3; k <= 6; ++k) {
      const auto rd = root_datum_from_name(g);
      const auto census = orbit_census(rd, twisting_from_level(rd, {k}));
      CHECK(census.basis.size() == census.free_orbits);
      CHECK(census.sign_trivial_nonfree.empty());
    }
  // ε nonzero on the coroot of SU(2): the criteria part ways.
  const auto su2 = root_datum_from_name("SU(2)");
  const auto odd = orbit_census(su2, twisting_from_level(su2, {3}, std::nullopt, {1}));
  CHECK(!odd.sign_trivial_nonfree.empty());
}

TEST_CASE("stabilizers") {
  const auto su2 = root_datum_from_name("SU(2)");
  const auto g0 = stabilizer_generators(su2, TorusPoint{{q(0, 1)}});
  REQUIRE(g0.size() == 1);
  CHECK(g0[0].translation == Coweight{0});
  CHECK(g0[0].w.det == -1);
  CHECK(stabilizer_generators(su2, TorusPoint{{q(1, 3)}}).empty());

  const auto su3 = root_datum_from_name("SU(3)");
  const TorusPoint vertex{{q(2, 3), q(1, 3)}};
  const auto gv = stabilizer_generators(su3, vertex);
  CHECK(gv.size() == 2);
  CHECK(generated_subgroup(su3, gv) == stabilizer_brute_force(su3, vertex));
  CHECK(stabilizer_brute_force(su3, vertex).size() == 6);
  CHECK(stabilizer_generators(su3, TorusPoint{{q(1, 7), q(3, 11)}}).empty());

  for (const char* g : {"SU(3)", "Spin(5)"}) {
    const auto rd = root_datum_from_name(g);
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> den(1, 6);
    for (int trial = 0; trial < 50; ++trial) {
      TorusPoint x;
      for (std::size_t i = 0; i < rd.rank(); ++i) {
        const int dd = den(rng);
        std::uniform_int_distribution<int> num(-2 * dd, 2 * dd);
        x.coords.push_back(q(num(rng), dd));
      }
      const auto gens = stabilizer_generators(rd, x);
      for (const auto& s : gens) CHECK(act_on_torus(s, x) == x);
      CHECK(generated_subgroup(rd, gens) == stabilizer_brute_force(rd, x));
    }
  }
}
