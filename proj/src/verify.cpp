#include "vkt/verify.hpp"

#include <random>
#include <set>
#include <sstream>

#include "vkt/error.hpp"
#include "vkt/mvlaurent.hpp"

namespace vkt {

namespace {

constexpr std::size_t kMaxCounterexamples = 5;

std::string weight_str(const Weight& w) { return "(" + w.to_string() + ")"; }

void fail(SuiteResult& r, const std::string& what) {
  r.status = SuiteStatus::Fail;
  if (r.counterexamples.size() < kMaxCounterexamples) r.counterexamples.push_back(what);
}

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t p) {
  return static_cast<std::int64_t>(static_cast<__int128>(a) * b % p);
}

bool nonsingular_mod_p(std::vector<std::vector<std::int64_t>> a, std::int64_t p) {
  const std::size_t n = a.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) return false;
    std::swap(a[piv], a[c]);
    std::int64_t inv = 1, base = a[c][c], e = p - 2;
    while (e) {
      if (e & 1) inv = mulmod(inv, base, p);
      base = mulmod(base, base, p);
      e >>= 1;
    }
    for (std::size_t r = c + 1; r < n; ++r) {
      const std::int64_t f = mulmod(a[r][c], inv, p);
      for (std::size_t k = c; k < n; ++k) a[r][k] = ((a[r][k] - mulmod(f, a[c][k], p)) % p + p) % p;
    }
  }
  return true;
}

KClass unit_vector(const FusionRing& ring, std::size_t a) {
  std::vector<std::int64_t> e(ring.size(), 0);
  e[a] = 1;
  return ring.from_coordinates(e);
}

SuiteResult double_count(const FusionRing& ring) {
  SuiteResult r{"double_count", SuiteStatus::Pass, 1, {}, ""};
  const OrbitCensus census = orbit_census(ring.root_datum(), ring.twisting());
  r.note = "basis " + std::to_string(ring.size()) + ", Verlinde classes " +
           std::to_string(ring.classes().size()) + ", free orbits " + std::to_string(census.free_orbits);
  if (ring.size() != ring.classes().size()) fail(r, r.note);
  return r;
}

SuiteResult character_oracle(const FusionRing& ring) {
  SuiteResult r{"character_oracle", SuiteStatus::Pass, 0, {}, ""};
  if (!ring.twisting().primitive()) {
    r.status = SuiteStatus::Skipped;
    r.note = "twisting is not primitive";
    return r;
  }
  const auto expected = character_table_constants(ring);
  if (!expected) {
    fail(r, "character table is singular or gives non-integral constants");
    return r;
  }
  const auto& N = ring.structure_constants();
  for (std::size_t a = 0; a < ring.size(); ++a)
    for (std::size_t b = 0; b < ring.size(); ++b) {
      ++r.checked;
      if (N[a][b] != (*expected)[a][b]) fail(r, "N[" + std::to_string(a) + "][" + std::to_string(b) + "]");
    }
  return r;
}

SuiteResult fusion_axioms(const FusionRing& ring) {
  SuiteResult r{"fusion_axioms", SuiteStatus::Pass, 0, {}, ""};
  if (!ring.twisting().primitive()) {
    r.status = SuiteStatus::Skipped;
    r.note = "twisting is not primitive";
    return r;
  }
  const auto& N = ring.structure_constants();
  const std::size_t n = ring.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (N[a][b] != N[b][a]) fail(r, "not commutative at " + std::to_string(a) + "," + std::to_string(b));
      for (std::size_t c = 0; c < n; ++c) {
        ++r.checked;
        if (N[a][b][c] < 0) fail(r, "negative N at " + std::to_string(a) + "," + std::to_string(b));
        for (std::size_t d = 0; d < n; ++d) {
          std::int64_t left = 0, right = 0;
          for (std::size_t e = 0; e < n; ++e) {
            left += N[a][b][e] * N[e][c][d];
            right += N[b][c][e] * N[a][e][d];
          }
          if (left != right)
            fail(r, "not associative at " + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c));
        }
      }
    }
  if (n > 0 && !ring.unit()) fail(r, "no unit");
  if (ring.unit())
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t c = 0; c < n; ++c)
        if (N[*ring.unit()][a][c] != (a == c ? 1 : 0)) fail(r, "unit does not act trivially");
  return r;
}

SuiteResult ideal_annihilation(const FusionRing& ring, std::int64_t height) {
  SuiteResult r{"ideal_annihilation", SuiteStatus::Pass, 0, {}, ""};
  std::vector<KClass> basis;
  for (std::size_t a = 0; a < ring.size(); ++a) basis.push_back(unit_vector(ring, a));
  std::map<Weight, std::pair<Weight, std::int64_t>> seen;
  std::size_t members = 0;
  for (const Weight& l : dominant_weights_up_to(ring.root_datum(), height)) {
    ++r.checked;
    const KClass k = ring.class_from_weight(l);
    const bool member = ring.verlinde_ideal_member({{l, 1}});
    if (member != k.is_zero()) fail(r, "V" + weight_str(l) + ": ideal membership and zero class disagree");
    if (member) {
      ++members;
      for (const auto& bc : basis)
        if (!ring.act(l, bc).is_zero()) fail(r, "V" + weight_str(l) + " does not annihilate");
      continue;
    }
    const auto& [rep, s] = *k.support.begin();
    auto [it, fresh] = seen.emplace(rep, std::make_pair(l, s));
    if (fresh) continue;
    const RepCombination p{{l, it->second.second}, {it->second.first, -s}};
    if (!ring.verlinde_ideal_member(p))
      fail(r, "V" + weight_str(l) + " and V" + weight_str(it->second.first) + " share a class but differ on I");
    for (const auto& bc : basis)
      if (!ring.act(p, bc).is_zero())
        fail(r, "V" + weight_str(l) + " - V" + weight_str(it->second.first) + " does not annihilate");
  }
  r.note = std::to_string(members) + " irreducible ideal elements up to height " + std::to_string(height);
  return r;
}

SuiteResult mult_by_U(const FusionRing& ring) {
  SuiteResult r{"mult_by_U", SuiteStatus::Pass, 1, {}, ""};
  const BigInt d = determinant(ring.mult_by_U_matrix());
  r.note = "det " + d.get_str();
  if (ring.size() > 0 && d != 1 && d != -1) fail(r, r.note);
  return r;
}

SuiteResult delta_identity(const FusionRing& ring, int trials, std::mt19937_64& rng) {
  SuiteResult r{"delta_identity", SuiteStatus::Pass, 0, {}, ""};
  const auto& rd = ring.root_datum();
  const auto& tw = ring.twisting();
  const auto box = box_points(rd, tw);
  std::int64_t spread = 1;
  for (std::size_t i = 0; i < tw.rank(); ++i)
    for (std::size_t j = 0; j < tw.rank(); ++j) spread = std::max<std::int64_t>(spread, to_int64(abs(tw.b()(i, j))));
  std::uniform_int_distribution<std::size_t> pick(0, box.size() - 1);
  std::uniform_int_distribution<int> val(-3, 3);
  std::uniform_int_distribution<std::int64_t> far(-3 * spread, 3 * spread);
  auto random_g = [&] {
    Weight g(rd.rank());
    for (std::size_t i = 0; i < rd.rank(); ++i) g[i] = far(rng);
    return g;
  };
  for (int t = 0; t < trials; ++t) {
    BoxFunction f;
    for (int k = 0; k < 3; ++k) f[box[pick(rng)]] = val(rng);
    const Weight g = random_g();
    ++r.checked;
    const Rational lhs = delta_eval(rd, tw, f, g);
    if (lhs != evaluate_equivariant(tw, f, g)) fail(r, "g = " + weight_str(g) + ": " + lhs.get_str());
  }
  for (std::size_t a = 0; a < ring.size(); ++a) {
    const BoxFunction f = equivariant_function(ring, unit_vector(ring, a));
    const Weight g = random_g();
    ++r.checked;
    const Rational full = delta_eval(rd, tw, f, g);
    if (full != evaluate_equivariant(tw, f, g)) fail(r, "basis " + std::to_string(a) + ", g = " + weight_str(g));
    if (delta_eval_regular(rd, tw, f, g) != full)
      fail(r, "basis " + std::to_string(a) + ": regular part differs, g = " + weight_str(g));
  }
  return r;
}

SuiteResult stabilizers(const FusionRing& ring, int trials, std::mt19937_64& rng) {
  SuiteResult r{"stabilizers", SuiteStatus::Pass, 0, {}, ""};
  const auto& rd = ring.root_datum();
  std::uniform_int_distribution<int> den(1, 6);
  for (int t = 0; t < trials; ++t) {
    TorusPoint x;
    for (std::size_t i = 0; i < rd.rank(); ++i) {
      const int d = den(rng);
      std::uniform_int_distribution<int> num(-2 * d, 2 * d);
      Rational c(num(rng), d);
      c.canonicalize();
      x.coords.push_back(c);
    }
    ++r.checked;
    const auto gens = stabilizer_generators(rd, x);
    if (generated_subgroup(rd, gens) != stabilizer_brute_force(rd, x)) fail(r, "x = " + x.to_string());
  }
  return r;
}

SuiteResult presentation(const FusionRing& ring) {
  SuiteResult r{"presentation", SuiteStatus::Skipped, 0, {}, ""};
  const auto& rd = ring.root_datum();
  const auto& tw = ring.twisting();
  const bool su2 = rd.rank() == 1 && rd.semisimple_rank() == 1 && rd.simply_connected();
  const bool u1 = rd.rank() == 1 && rd.semisimple_rank() == 0;
  if (su2 && tw.epsilon_is_zero()) {
    r.status = SuiteStatus::Pass;
    const std::int64_t n = to_int64(BigInt(tw.b()(0, 0) / 2));
    const SU2Report rep = mv_su2(n);
    ++r.checked;
    if (rep.rank != ring.size()) fail(r, "rank " + std::to_string(rep.rank) + " vs basis " + std::to_string(ring.size()));
    for (std::int64_t k = 0; k <= 3 * n && ring.size() == rep.rank; ++k) {
      ++r.checked;
      std::vector<std::int64_t> c(static_cast<std::size_t>(k) + 1, 0);
      c.back() = 1;
      if (su2_reduce(n, c) != ring.coordinates(ring.class_from_weight(Weight{k})))
        fail(r, "rho_" + std::to_string(k));
    }
    r.note = "R(SU(2))/(rho_" + std::to_string(n - 1) + ")";
  } else if (u1) {
    r.status = SuiteStatus::Pass;
    const std::int64_t n = to_int64(abs(tw.b()(0, 0)));
    const int eps = static_cast<int>(tw.epsilon()[0] % 2);
    const U1Report rep = mv_u1(n, eps);
    ++r.checked;
    if (rep.rank != ring.size()) fail(r, "rank");
    for (std::int64_t k = -2 * n; k <= 2 * n; ++k) {
      ++r.checked;
      const auto [rem, sign] = u1_reduce(n, eps, k);
      const KClass expected = [&] {
        KClass e;
        e.add(Weight{rem}, sign);
        return e;
      }();
      if (torus_pushforward(rd, tw, Weight{k}) != expected) fail(r, "L^" + std::to_string(k));
    }
    r.note = "Z[L^{+-1}]/(" + rep.relation.to_string() + ")";
  } else {
    r.note = "only for SU(2) and U(1)";
  }
  return r;
}

}  // namespace

std::string to_string(SuiteStatus s) {
  switch (s) {
    case SuiteStatus::Pass: return "pass";
    case SuiteStatus::Fail: return "fail";
    case SuiteStatus::Skipped: return "skipped";
  }
  return "?";
}

std::optional<std::vector<std::vector<std::vector<std::int64_t>>>> character_table_constants(
    const FusionRing& ring) {
  const std::size_t n = ring.size();
  const auto& cls = ring.classes();
  if (cls.size() != n) return std::nullopt;
  using Table = std::vector<std::vector<std::vector<std::int64_t>>>;
  if (n == 0) return Table{};
  const std::int64_t m = ring.class_order();
  std::vector<std::vector<CyclotomicInt>> chi(n);
  for (std::size_t j = 0; j < n; ++j)
    for (const Weight& l : ring.transversal())
      chi[j].push_back(eval_character_at_point(ring.root_datum(), l, cls[j].point, m));

  bool invertible = false;
  std::int64_t floor = 1'000'000;
  for (int attempt = 0; attempt < 4 && !invertible; ++attempt) {
    const PrimeRoot pr = prime_with_root_of_unity(m, floor);
    floor = pr.p;
    std::vector<std::vector<std::int64_t>> a(n, std::vector<std::int64_t>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a[i][j] = chi[i][j].reduce_mod(pr.p, pr.root);
    invertible = nonsingular_mod_p(std::move(a), pr.p);
  }
  if (!invertible) return std::nullopt;

  const std::size_t phi = cyclotomic_polynomial(m).size() - 1;
  IntMatrix a(n * phi, n), rhs(n * phi, n * n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t c = 0; c < n; ++c) {
      const std::vector<std::int64_t> co = chi[j][c].promote(m).coeffs();
      for (std::size_t k = 0; k < phi; ++k) a(j * phi + k, c) = co[k];
    }
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        const std::vector<std::int64_t> co = (chi[j][x] * chi[j][y]).promote(m).coeffs();
        for (std::size_t k = 0; k < phi; ++k) rhs(j * phi + k, x * n + y) = co[k];
      }
  }
  const auto sol = solve_unique(a, rhs);
  if (!sol) return std::nullopt;
  Table out(n, std::vector<std::vector<std::int64_t>>(n, std::vector<std::int64_t>(n)));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t c = 0; c < n; ++c) {
        Rational v = (*sol)[c][x * n + y];
        v.canonicalize();
        if (v.get_den() != 1) return std::nullopt;
        out[x][y][c] = to_int64(v.get_num());
      }
  return out;
}

std::vector<SuiteResult> run_verification(const FusionRing& ring, const VerifyOptions& opt) {
  std::mt19937_64 rng(opt.seed);
  std::vector<SuiteResult> out;
  out.push_back(double_count(ring));
  out.push_back(character_oracle(ring));
  out.push_back(fusion_axioms(ring));
  out.push_back(ideal_annihilation(ring, opt.height));
  out.push_back(mult_by_U(ring));
  out.push_back(delta_identity(ring, opt.trials, rng));
  out.push_back(stabilizers(ring, std::min(opt.trials, 50), rng));
  out.push_back(presentation(ring));
  return out;
}

}  // namespace vkt
