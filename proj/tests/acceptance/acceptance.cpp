// One PASS/FAIL line per acceptance criterion. All checks are exact.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "support/oracle.hpp"
#include "vkt/fusion.hpp"
#include "vkt/mvlaurent.hpp"

using namespace vkt;

namespace {

using Clock = std::chrono::steady_clock;

struct Check {
  bool ok = true;
  std::string first_failure;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      first_failure = what;
    }
  }
};

struct GridCase {
  std::string label;
  const char* group;
  std::vector<std::int64_t> levels;
  std::vector<std::int64_t> eps;
  std::optional<IntMatrix> torus;
};

std::vector<GridCase> grid() {
  return {
      {"SU(2) n=3", "SU(2)", {3}, {}, {}},
      {"SU(2) n=5", "SU(2)", {5}, {}, {}},
      {"SU(2) n=8", "SU(2)", {8}, {}, {}},
      {"SU(3) n=4", "SU(3)", {4}, {}, {}},
      {"SU(3) n=5", "SU(3)", {5}, {}, {}},
      {"SU(3) n=6", "SU(3)", {6}, {}, {}},
      {"U(1)^2 diag(2,3)", "U(1)^2", {}, {}, IntMatrix{{2, 0}, {0, 3}}},
      {"U(1)^2 diag(3,3) eps=(1,0)", "U(1)^2", {}, {1, 0}, IntMatrix{{3, 0}, {0, 3}}},
      {"U(1)^2 [[2,1],[1,3]]", "U(1)^2", {}, {}, IntMatrix{{2, 1}, {1, 3}}},
      {"SU(2)xU(1) (3,2)", "SU(2) x U(1)", {3, 2}, {}, {}},
      {"SU(2)xU(1) (4,3) eps=(0,1)", "SU(2) x U(1)", {4, 3}, {0, 1}, {}},
      {"SU(2)xU(1) (5,4)", "SU(2) x U(1)", {5, 4}, {}, {}},
      {"Spin(5) n=4", "Spin(5)", {4}, {}, {}},
      {"Spin(5) n=5", "Spin(5)", {5}, {}, {}},
      {"Spin(5) n=6", "Spin(5)", {6}, {}, {}},
  };
}

FusionRing make(const char* g, const std::vector<std::int64_t>& levels, const std::vector<std::int64_t>& eps = {},
                const std::optional<IntMatrix>& torus = std::nullopt) {
  auto rd = root_datum_from_name(g);
  auto tw = twisting_from_level(rd, levels, torus, eps);
  return FusionRing(std::move(rd), std::move(tw));
}

KClass basis_class(const FusionRing& ring, std::size_t a) {
  std::vector<std::int64_t> e(ring.size(), 0);
  e[a] = 1;
  return ring.from_coordinates(e);
}

int failures = 0;

void report(int id, const std::string& title, const std::function<void(Check&)>& body, double budget_s = 0) {
  Check c;
  const auto t0 = Clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.require(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  if (budget_s > 0) {
    std::ostringstream s;
    s << "runtime " << secs << " s over budget " << budget_s << " s";
    c.require(secs < budget_s, s.str());
  }
  if (!c.ok) ++failures;
  std::printf("%s %d %s (%.3f s)%s%s%s%s\n", c.ok ? "PASS" : "FAIL", id, title.c_str(), secs,
              c.detail.empty() ? "" : " ", c.detail.c_str(), c.ok ? "" : ": ", c.first_failure.c_str());
}

// ρ_a ρ_b = Σ_{i=0}^{min(a,b)} ρ_{a+b-2i}.
std::vector<std::int64_t> clebsch_gordan(std::int64_t a, std::int64_t b) {
  std::vector<std::int64_t> c(static_cast<std::size_t>(a + b) + 1, 0);
  for (std::int64_t i = 0; i <= std::min(a, b); ++i) ++c[static_cast<std::size_t>(a + b - 2 * i)];
  return c;
}

}  // namespace

int main() {
  std::mt19937_64 rng(20261015);

  report(1, "SU(2) family n=2..12: basis n-1, R(SU(2))/(rho_{n-1}), oracle constants", [](Check& c) {
    double worst = 0;
    for (std::int64_t n = 2; n <= 12; ++n) {
      const auto t0 = Clock::now();
      const std::string at = "n=" + std::to_string(n);
      const FusionRing ring = make("SU(2)", {n});
      c.require(ring.size() == static_cast<std::size_t>(n - 1), at + ": basis size");
      const SU2Report mv = mv_su2(n);
      std::vector<std::int64_t> rel(static_cast<std::size_t>(n), 0);
      rel.back() = 1;
      c.require(mv.relation.rho_coordinates() == rel, at + ": relation is not rho_{n-1}");
      c.require(mv.kernel_zero && mv.rank == ring.size(), at + ": Mayer-Vietoris rank");
      const auto& N = ring.structure_constants();
      for (std::int64_t a = 0; a < n - 1; ++a)
        for (std::int64_t b = 0; b < n - 1; ++b)
          c.require(su2_reduce(n, clebsch_gordan(a, b)) == N[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)],
                    at + ": product differs from the quotient ring");
      const auto oracle_N = oracle::structure_constants(ring);
      c.require(oracle_N.has_value() && *oracle_N == N, at + ": character-table oracle disagrees");
      const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
      worst = std::max(worst, secs);
      c.require(secs < 1.0, at + ": over 1 s");
    }
    c.detail = "[slowest n " + std::to_string(worst) + " s]";
  });

  report(2, "U(1) family n=1..10, eps in {0,1}: basis n, relation, pushforward", [](Check& c) {
    const auto u1 = root_datum_from_name("U(1)");
    for (std::int64_t n = 1; n <= 10; ++n)
      for (int eps = 0; eps <= 1; ++eps) {
        const std::string at = "n=" + std::to_string(n) + " eps=" + std::to_string(eps);
        const auto tw = twisting_from_level(u1, {n}, std::nullopt, {eps});
        const FusionRing ring(u1, tw);
        c.require(ring.size() == static_cast<std::size_t>(n), at + ": basis size");
        const U1Report mv = mv_u1(n, eps);
        const LaurentPoly expected = LaurentPoly::monomial(n, eps ? -1 : 1) - LaurentPoly(1);
        c.require(mv.relation == expected && mv.determinant == expected, at + ": Mayer-Vietoris relation");
        c.require(mv.rank == ring.size(), at + ": Mayer-Vietoris rank");
        // L^n = (-1)^eps in the orbit pipeline.
        KClass one;
        one.add(Weight{0}, eps ? -1 : 1);
        c.require(torus_pushforward(u1, tw, Weight{n}) == one, at + ": relation in the pipeline");
        for (std::int64_t k = -4 * n; k <= 4 * n; ++k) {
          const std::int64_t q = (k >= 0 ? k : k - n + 1) / n;
          KClass image;
          image.add(Weight{k - q * n}, (eps && (q % 2 != 0)) ? -1 : 1);
          c.require(torus_pushforward(u1, tw, Weight{k}) == image, at + ": pushforward of L^" + std::to_string(k));
        }
      }
  });

  report(3, "S^3: (0, Z/n) for n=1..20, (Z, Z) for n=0", [](Check& c) {
    const auto r0 = mv_s3(0);
    c.require(r0.k0 == AbelianGroup{1, {}} && r0.k1 == AbelianGroup{1, {}}, "n=0");
    for (std::int64_t n = 1; n <= 20; ++n) {
      const auto r = mv_s3(n);
      const AbelianGroup zn{0, n == 1 ? std::vector<BigInt>{} : std::vector<BigInt>{BigInt(n)}};
      c.require(r.k0.is_zero() && r.k1 == zn, "n=" + std::to_string(n));
    }
  });

  report(4, "double count: basis orbits = Verlinde classes on the 15-case grid", [](Check& c) {
    for (const auto& g : grid()) {
      const FusionRing ring = make(g.group, g.levels, g.eps, g.torus);
      const auto basis = enumerate_basis_orbits(ring.root_datum(), ring.twisting());
      const auto classes = verlinde_classes(ring.root_datum(), ring.twisting());
      c.require(basis.size() == classes.size() && !basis.empty(), g.label);
    }
  }, 5.0);

  report(5, "ideal annihilation: vanishing characters give the zero class", [](Check& c) {
    std::size_t vanishing = 0, tested = 0;
    for (const auto& g : grid()) {
      const FusionRing ring = make(g.group, g.levels, g.eps, g.torus);
      const auto& rd = ring.root_datum();
      const std::int64_t m = ring.class_order();
      std::vector<KClass> basis;
      for (std::size_t a = 0; a < ring.size(); ++a) basis.push_back(basis_class(ring, a));
      for (const auto& l : dominant_weights_up_to(rd, 8)) {
        ++tested;
        bool vanishes = true;
        for (const auto& cls : ring.classes())
          if (!eval_character_at_point(rd, l, cls.point, m).is_zero()) {
            vanishes = false;
            break;
          }
        const std::string at = g.label + " lambda=(" + l.to_string() + ")";
        c.require(vanishes == ring.class_from_weight(l).is_zero(), at + ": vanishing vs zero class");
        if (!vanishes) continue;
        ++vanishing;
        for (const auto& k : basis) c.require(ring.act(l, k).is_zero(), at + ": does not annihilate");
      }
    }
    c.detail = "[" + std::to_string(vanishing) + " of " + std::to_string(tested) + " weights in the ideal]";
  });

  report(6, "multiplication by U has determinant +-1 on the grid", [](Check& c) {
    for (const auto& g : grid()) {
      const FusionRing ring = make(g.group, g.levels, g.eps, g.torus);
      const BigInt d = determinant(ring.mult_by_U_matrix());
      c.require(d == 1 || d == -1, g.label + ": det " + d.get_str());
    }
  });

  report(7, "distribution identity: 100 random (f, g) per case, regular part = full sum", [&rng](Check& c) {
    for (const auto& g : grid()) {
      const FusionRing ring = make(g.group, g.levels, g.eps, g.torus);
      const auto& rd = ring.root_datum();
      const auto& tw = ring.twisting();
      const auto box = box_points(rd, tw);
      std::uniform_int_distribution<std::size_t> pick(0, box.size() - 1);
      std::uniform_int_distribution<std::int64_t> val(-4, 4), far(-25, 25);
      std::uniform_int_distribution<std::size_t> basis_pick(0, ring.size() - 1);
      auto random_g = [&] {
        Weight w(rd.rank());
        for (std::size_t i = 0; i < rd.rank(); ++i) w[i] = far(rng);
        return w;
      };
      for (int t = 0; t < 100; ++t) {
        BoxFunction f;
        for (int k = 0; k < 4; ++k) f[box[pick(rng)]] = val(rng);
        const Weight x = random_g();
        c.require(delta_eval(rd, tw, f, x) == evaluate_equivariant(tw, f, x),
                  g.label + ": delta_f(g) != f(g) at g=(" + x.to_string() + ")");
      }
      for (int t = 0; t < 20; ++t) {
        KClass k;
        for (int j = 0; j < 3; ++j) k += ring.from_coordinates([&] {
          std::vector<std::int64_t> e(ring.size(), 0);
          e[basis_pick(rng)] = val(rng);
          return e;
        }());
        const BoxFunction f = equivariant_function(ring, k);
        const Weight x = random_g();
        const Rational full = delta_eval(rd, tw, f, x);
        c.require(full == evaluate_equivariant(tw, f, x), g.label + ": equivariant f");
        c.require(delta_eval_regular(rd, tw, f, x) == full, g.label + ": regular part differs");
      }
    }
  });

  report(8, "affine Weyl stabilizers: 50 random points each for SU(3) and Spin(5)", [&rng](Check& c) {
    std::size_t nontrivial = 0;
    for (const char* name : {"SU(3)", "Spin(5)"}) {
      const auto rd = root_datum_from_name(name);
      std::uniform_int_distribution<int> den(1, 6);
      for (int t = 0; t < 50; ++t) {
        TorusPoint x;
        for (std::size_t i = 0; i < rd.rank(); ++i) {
          const int d = den(rng);
          std::uniform_int_distribution<int> num(-2 * d, 2 * d);
          Rational q(num(rng), d);
          q.canonicalize();
          x.coords.push_back(q);
        }
        const auto brute = stabilizer_brute_force(rd, x);
        const auto generated = generated_subgroup(rd, stabilizer_generators(rd, x));
        if (brute.size() > 1) ++nontrivial;
        c.require(brute == generated, std::string(name) + " x=" + x.to_string());
      }
    }
    c.detail = "[" + std::to_string(nontrivial) + " of 100 points with nontrivial stabilizer]";
  }, 10.0);

  report(9, "fusion axioms: SU(2) n<=8, SU(3) n<=6", [](Check& c) {
    std::vector<std::pair<const char*, std::int64_t>> cases;
    for (std::int64_t n = 2; n <= 8; ++n) cases.push_back({"SU(2)", n});
    for (std::int64_t n = 3; n <= 6; ++n) cases.push_back({"SU(3)", n});
    for (const auto& [g, n] : cases) {
      const FusionRing ring = make(g, {n});
      const std::string at = std::string(g) + " n=" + std::to_string(n);
      const auto& N = ring.structure_constants();
      const std::size_t s = ring.size();
      c.require(ring.unit().has_value(), at + ": no unit");
      for (std::size_t a = 0; a < s; ++a)
        for (std::size_t b = 0; b < s; ++b)
          for (std::size_t d = 0; d < s; ++d) {
            c.require(N[a][b][d] >= 0, at + ": negative constant");
            c.require(N[a][b][d] == N[b][a][d], at + ": not commutative");
            for (std::size_t e = 0; e < s; ++e) {
              std::int64_t left = 0, right = 0;
              for (std::size_t f = 0; f < s; ++f) {
                left += N[a][b][f] * N[f][d][e];
                right += N[b][d][f] * N[a][f][e];
              }
              c.require(left == right, at + ": not associative");
            }
          }
    }
  });

  return failures == 0 ? 0 : 1;
}
