#include "vkt/rootdata.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>

#include "vkt/error.hpp"

namespace vkt {

struct RootDatum::WeylCache {
  std::once_flag elements_once;
  std::vector<WeylElement> elements;
  std::map<std::vector<std::int64_t>, std::size_t> index;
  std::once_flag reflections_once;
  std::vector<WeylElement> reflections;
};

namespace {

IntMatrix cartan_matrix(char type, std::size_t r) {
  IntMatrix c(r, r);
  for (std::size_t i = 0; i < r; ++i) c(i, i) = 2;
  const std::size_t chain = (type == 'D') ? r - 1 : r;
  for (std::size_t i = 0; i + 1 < chain; ++i) {
    c(i, i + 1) = -1;
    c(i + 1, i) = -1;
  }
  if (type == 'B') {
    c(r - 1, r - 2) = -2;
  } else if (type == 'C') {
    c(r - 2, r - 1) = -2;
  } else if (type == 'D') {
    c(r - 3, r - 1) = -1;
    c(r - 1, r - 3) = -1;
  }
  return c;
}

struct FactorName {
  std::string family;
  std::int64_t n = 0;
  std::int64_t power = 1;
};

[[noreturn]] void bad_name(const std::string& name, const std::string& why) {
  throw Error(ErrorKind::InvalidArgument, "group \"" + name + "\": " + why);
}

std::vector<FactorName> parse_group_name(const std::string& name) {
  std::string s;
  // Accept the UTF-8 multiplication sign as a separator.
  for (std::size_t i = 0; i < name.size(); ++i) {
    if (name.compare(i, 2, "\xC3\x97") == 0) {
      s += " x ";
      ++i;
    } else {
      s += name[i];
    }
  }
  std::vector<FactorName> out;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  auto read_int = [&]() -> std::int64_t {
    skip_ws();
    const std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (start == i || i - start > 6) bad_name(name, "expected a small integer");
    return std::stoll(s.substr(start, i - start));
  };
  bool expect_factor = true;
  skip_ws();
  while (i < s.size()) {
    if (!expect_factor) {
      if (s[i] != 'x' && s[i] != '*') bad_name(name, "expected 'x' between factors");
      ++i;
      skip_ws();
      expect_factor = true;
      continue;
    }
    std::size_t start = i;
    while (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i]))) ++i;
    FactorName f;
    f.family = s.substr(start, i - start);
    if (f.family != "SU" && f.family != "Spin" && f.family != "Sp" && f.family != "U")
      bad_name(name, "unknown factor '" + f.family + "'");
    skip_ws();
    if (i >= s.size() || s[i] != '(') bad_name(name, "expected '('");
    ++i;
    f.n = read_int();
    skip_ws();
    if (i >= s.size() || s[i] != ')') bad_name(name, "expected ')'");
    ++i;
    skip_ws();
    if (i < s.size() && s[i] == '^') {
      ++i;
      f.power = read_int();
      if (f.power < 1) bad_name(name, "exponent must be positive");
      skip_ws();
    }
    out.push_back(f);
    expect_factor = false;
  }
  if (out.empty() || expect_factor) bad_name(name, "empty or truncated group name");
  return out;
}

// Semisimple part under construction: simple roots/coroots in full lattice
// coordinates plus the bookkeeping that ties them to named factors.
struct Assembly {
  std::size_t rank = 0;
  std::vector<Weight> roots;
  std::vector<Coweight> coroots;
  std::vector<Block> blocks;
  // Per simple root: lattice coordinates of its Simple block component and a
  // display name, filled for named and Cartan-given factors.
  std::vector<std::string> root_factor_name;
  std::vector<bool> root_has_coords;
};

void pad(Assembly& a) {
  for (auto& w : a.roots) {
    auto v = w.coords();
    v.resize(a.rank, 0);
    w = Weight(v);
  }
  for (auto& w : a.coroots) {
    auto v = w.coords();
    v.resize(a.rank, 0);
    w = Coweight(v);
  }
}

void add_simple_block(Assembly& a, const std::string& name, const IntMatrix& c) {
  const std::size_t r = c.rows();
  const std::size_t offset = a.rank;
  Block blk;
  blk.kind = BlockKind::Simple;
  blk.name = name;
  for (std::size_t k = 0; k < r; ++k) blk.coords.push_back(offset + k);
  a.blocks.push_back(blk);
  a.rank += r;
  pad(a);
  for (std::size_t i = 0; i < r; ++i) {
    Weight alpha(a.rank);
    Coweight co(a.rank);
    for (std::size_t k = 0; k < r; ++k) alpha[offset + k] = to_int64(c(k, i));
    co[offset + i] = 1;
    a.roots.push_back(alpha);
    a.coroots.push_back(co);
    a.root_factor_name.push_back(name);
    a.root_has_coords.push_back(true);
  }
}

void add_torus_block(Assembly& a, const std::string& name, std::size_t k,
                     std::optional<IntMatrix> form) {
  Block blk;
  blk.kind = BlockKind::Torus;
  blk.name = name;
  for (std::size_t j = 0; j < k; ++j) blk.coords.push_back(a.rank + j);
  if (!form) form = IntMatrix::identity(k);
  if (form->rows() != k || form->cols() != k)
    throw Error(ErrorKind::InvalidArgument, "torus_form must be " + std::to_string(k) + "x" +
                                                std::to_string(k));
  if (!(form->transpose() == *form))
    throw Error(ErrorKind::InvalidArgument, "torus_form must be symmetric");
  blk.form = std::move(form);
  a.blocks.push_back(blk);
  a.rank += k;
  pad(a);
}

void add_unitary_block(Assembly& a, const std::string& name, std::size_t n) {
  Block blk;
  blk.kind = BlockKind::Unitary;
  blk.name = name;
  const std::size_t offset = a.rank;
  for (std::size_t j = 0; j < n; ++j) blk.coords.push_back(offset + j);
  blk.form = IntMatrix::identity(n);
  a.blocks.push_back(blk);
  a.rank += n;
  pad(a);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    Weight alpha(a.rank);
    alpha[offset + i] = 1;
    alpha[offset + i + 1] = -1;
    a.roots.push_back(alpha);
    a.coroots.push_back(Coweight(alpha.coords()));
    a.root_factor_name.push_back(name);
    a.root_has_coords.push_back(false);
  }
}

void add_named_factor(Assembly& a, const FactorName& f, const std::string& whole) {
  const std::string label = f.family + "(" + std::to_string(f.n) + ")";
  if (f.family == "U") {
    if (f.n < 1) bad_name(whole, "U(n) needs n >= 1");
    if (f.n == 1)
      add_torus_block(a, label, 1, std::nullopt);
    else
      add_unitary_block(a, label, static_cast<std::size_t>(f.n));
    return;
  }
  if (f.family == "SU") {
    if (f.n < 2) bad_name(whole, "SU(n) needs n >= 2");
    add_simple_block(a, label, cartan_matrix('A', static_cast<std::size_t>(f.n - 1)));
    return;
  }
  if (f.family == "Sp") {
    if (f.n < 1) bad_name(whole, "Sp(n) needs n >= 1");
    add_simple_block(a, label,
                     f.n == 1 ? cartan_matrix('A', 1)
                              : cartan_matrix('C', static_cast<std::size_t>(f.n)));
    return;
  }
  // Spin(n)
  if (f.n < 3) bad_name(whole, "Spin(n) needs n >= 3");
  const auto r = static_cast<std::size_t>(f.n / 2);
  if (f.n % 2 == 1) {
    add_simple_block(a, label, r == 1 ? cartan_matrix('A', 1) : cartan_matrix('B', r));
  } else if (r == 2) {
    // Spin(4) = SU(2) x SU(2): one block, two components.
    IntMatrix c(2, 2);
    c(0, 0) = 2;
    c(1, 1) = 2;
    add_simple_block(a, label, c);
  } else if (r == 3) {
    add_simple_block(a, label, cartan_matrix('A', 3));
  } else {
    add_simple_block(a, label, cartan_matrix('D', r));
  }
}

// Connected components of the Dynkin diagram, ordered by smallest node.
std::vector<std::vector<std::size_t>> dynkin_components(const IntMatrix& c) {
  const std::size_t r = c.rows();
  std::vector<int> comp(r, -1);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t s = 0; s < r; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<std::size_t> nodes;
    std::deque<std::size_t> q{s};
    comp[s] = static_cast<int>(out.size());
    while (!q.empty()) {
      const std::size_t i = q.front();
      q.pop_front();
      nodes.push_back(i);
      for (std::size_t j = 0; j < r; ++j)
        if (j != i && c(i, j) != 0 && comp[j] < 0) {
          comp[j] = static_cast<int>(out.size());
          q.push_back(j);
        }
    }
    std::sort(nodes.begin(), nodes.end());
    out.push_back(nodes);
  }
  return out;
}

void invalid_cartan(const std::string& why) {
  throw Error(ErrorKind::InvalidCartanData, why);
}

// Symmetrizer d with C[i][j] d_j = C[j][i] d_i, minimum 1 on each component;
// validates finite type.
std::vector<std::int64_t> validate_cartan(const IntMatrix& c) {
  const std::size_t r = c.rows();
  if (!c.is_square()) invalid_cartan("Cartan matrix must be square");
  for (std::size_t i = 0; i < r; ++i) {
    if (c(i, i) != 2) invalid_cartan("Cartan diagonal entries must be 2");
    for (std::size_t j = 0; j < r; ++j) {
      if (i == j) continue;
      if (c(i, j) > 0) invalid_cartan("off-diagonal Cartan entries must be <= 0");
      if ((c(i, j) == 0) != (c(j, i) == 0)) invalid_cartan("Cartan zero pattern not symmetric");
    }
  }
  std::vector<Rational> d(r, Rational(0));
  for (const auto& comp : dynkin_components(c)) {
    d[comp.front()] = 1;
    std::deque<std::size_t> q{comp.front()};
    std::vector<bool> seen(r, false);
    seen[comp.front()] = true;
    while (!q.empty()) {
      const std::size_t i = q.front();
      q.pop_front();
      for (std::size_t j : comp) {
        if (j == i || c(i, j) == 0) continue;
        Rational dj = d[i] * Rational(c(j, i)) / Rational(c(i, j));
        if (!seen[j]) {
          seen[j] = true;
          d[j] = dj;
          q.push_back(j);
        } else if (d[j] != dj) {
          invalid_cartan("Cartan matrix is not symmetrizable");
        }
      }
    }
    Rational mn = d[comp.front()];
    for (std::size_t j : comp) mn = std::min(mn, d[j]);
    BigInt den = 1;
    for (std::size_t j : comp) {
      d[j] /= mn;
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d[j].get_den_mpz_t());
    }
    for (std::size_t j : comp) d[j] *= den;
  }
  std::vector<std::int64_t> out(r);
  for (std::size_t i = 0; i < r; ++i) {
    if (d[i].get_den() != 1) invalid_cartan("symmetrizer is not integral");
    out[i] = to_int64(d[i].get_num());
  }
  // Positive definiteness of the symmetrized matrix (C[i][j] / d_i), via
  // leading principal minors of S[i][j] = C[i][j] * L / d_i.
  BigInt l = 1;
  for (auto v : out) mpz_lcm_ui(l.get_mpz_t(), l.get_mpz_t(), static_cast<unsigned long>(v));
  IntMatrix s(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) s(i, j) = c(i, j) * l / out[i];
  for (std::size_t k = 1; k <= r; ++k) {
    IntMatrix m(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) m(i, j) = s(i, j);
    if (determinant(m) <= 0) invalid_cartan("Cartan matrix is not of finite type");
  }
  return out;
}

SquareMatrix simple_reflection(const Weight& alpha, const Coweight& co) {
  const std::size_t n = alpha.size();
  SquareMatrix m = SquareMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) -= alpha[i] * co[j];
  return m;
}

}  // namespace

RootDatum root_datum_from_name(const std::string& name) {
  GroupSpec spec;
  spec.name = name;
  return root_datum_from_spec(spec);
}

RootDatum root_datum_from_spec(const GroupSpec& spec) {
  Assembly a;
  const int sources = (!spec.name.empty()) + spec.cartan.has_value() +
                      (spec.simple_roots.has_value() || spec.simple_coroots.has_value());
  if (sources > 1)
    throw Error(ErrorKind::InvalidArgument,
                "give exactly one of a group name, a Cartan matrix, or explicit roots");
  if (sources == 0 && spec.torus_rank == 0)
    throw Error(ErrorKind::InvalidArgument, "empty group description");

  std::vector<std::string> desc;
  if (!spec.name.empty()) {
    for (const auto& f : parse_group_name(spec.name))
      for (std::int64_t k = 0; k < f.power; ++k) {
        add_named_factor(a, f, spec.name);
        desc.push_back(f.family + "(" + std::to_string(f.n) + ")");
      }
  } else if (spec.cartan) {
    const IntMatrix& c = *spec.cartan;
    if (!c.is_square() || c.rows() == 0) invalid_cartan("Cartan matrix must be square and nonempty");
    add_simple_block(a, "cartan", c);
    desc.push_back("cartan " + c.to_string());
  } else if (spec.simple_roots || spec.simple_coroots) {
    if (!spec.simple_roots || !spec.simple_coroots)
      throw Error(ErrorKind::InvalidArgument, "simple_roots and simple_coroots go together");
    const IntMatrix& r = *spec.simple_roots;
    const IntMatrix& cr = *spec.simple_coroots;
    if (r.rows() != cr.rows() || r.cols() != cr.cols() || r.cols() == 0)
      throw Error(ErrorKind::InvalidArgument, "simple_roots and simple_coroots shapes differ");
    if (r.rows() > r.cols())
      throw Error(ErrorKind::InvalidCartanData, "more simple roots than the rank");
    a.rank = r.cols();
    Block blk;
    blk.kind = BlockKind::Explicit;
    blk.name = "explicit";
    for (std::size_t j = 0; j < a.rank; ++j) blk.coords.push_back(j);
    a.blocks.push_back(blk);
    const auto rr = r.to_int64();
    const auto cc = cr.to_int64();
    for (std::size_t i = 0; i < r.rows(); ++i) {
      a.roots.emplace_back(rr[i]);
      a.coroots.emplace_back(cc[i]);
      a.root_factor_name.push_back("explicit");
      a.root_has_coords.push_back(false);
    }
    desc.push_back("explicit rank " + std::to_string(a.rank));
  }
  if (spec.torus_form && spec.torus_rank == 0)
    throw Error(ErrorKind::InvalidArgument, "torus_form given without torus_rank");
  if (spec.torus_rank > 0) {
    const std::string label = spec.torus_rank == 1
                                  ? std::string("U(1)")
                                  : "U(1)^" + std::to_string(spec.torus_rank);
    add_torus_block(a, label, spec.torus_rank, spec.torus_form);
    desc.push_back(label);
  }

  RootDatum rd;
  rd.rank_ = a.rank;
  rd.simple_roots_ = a.roots;
  rd.simple_coroots_ = a.coroots;
  {
    std::string d;
    for (std::size_t i = 0; i < desc.size(); ++i) d += (i ? " x " : "") + desc[i];
    rd.description_ = d;
  }
  const std::size_t r = a.roots.size();

  // Cartan integers and validation.
  rd.cartan_ = IntMatrix(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      rd.cartan_(i, j) = static_cast<long>(pairing(a.roots[j], a.coroots[i]));
  rd.symmetrizer_ = r ? validate_cartan(rd.cartan_) : std::vector<std::int64_t>{};
  std::int64_t lcm_d = 1;
  for (auto v : rd.symmetrizer_) lcm_d = std::lcm(lcm_d, v);
  rd.root_form_.assign(r, std::vector<std::int64_t>(r, 0));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      rd.root_form_[i][j] = to_int64(rd.cartan_(i, j)) * lcm_d / rd.symmetrizer_[i];

  // π₁ torsion-free: the coroots span a saturated sublattice of Π.
  if (r > 0) {
    IntMatrix co(r, a.rank);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < a.rank; ++j) co(i, j) = static_cast<long>(a.coroots[i][j]);
    const auto snf = smith_normal_form(co);
    for (const auto& dv : snf.diagonal())
      if (dv != 1)
        throw Error(ErrorKind::NotTorsionFreePi1,
                    "coroot lattice is not saturated in Π (π₁ has torsion)");
  }

  // Full root system by closure under simple reflections.
  {
    std::map<Weight, std::size_t> seen;
    std::deque<Root> queue;
    for (std::size_t i = 0; i < r; ++i) {
      Root root;
      root.weight = a.roots[i];
      root.coroot = a.coroots[i];
      root.simple.assign(r, 0);
      root.simple[i] = 1;
      queue.push_back(root);
    }
    std::vector<Root> all;
    while (!queue.empty()) {
      Root cur = std::move(queue.front());
      queue.pop_front();
      if (seen.count(cur.weight)) continue;
      seen.emplace(cur.weight, all.size());
      all.push_back(cur);
      if (all.size() > 100000) invalid_cartan("root system too large");
      for (std::size_t j = 0; j < r; ++j) {
        const std::int64_t k = pairing(cur.weight, a.coroots[j]);
        if (k == 0) continue;
        Root nxt = cur;
        nxt.weight = cur.weight - k * a.roots[j];
        nxt.coroot = cur.coroot - pairing(a.roots[j], cur.coroot) * a.coroots[j];
        nxt.simple[j] -= k;
        if (!seen.count(nxt.weight)) queue.push_back(std::move(nxt));
      }
    }
    std::vector<Root> pos;
    for (auto& root : all) {
      root.height = std::accumulate(root.simple.begin(), root.simple.end(), std::int64_t{0});
      const bool nonneg = std::all_of(root.simple.begin(), root.simple.end(),
                                      [](std::int64_t v) { return v >= 0; });
      const bool nonpos = std::all_of(root.simple.begin(), root.simple.end(),
                                      [](std::int64_t v) { return v <= 0; });
      if (!nonneg && !nonpos) invalid_cartan("root with mixed-sign coefficients");
      root.positive = nonneg;
      if (nonneg) pos.push_back(root);
    }
    std::sort(pos.begin(), pos.end(), [](const Root& x, const Root& y) {
      if (x.height != y.height) return x.height < y.height;
      return x.simple > y.simple;
    });
    if (2 * pos.size() != all.size()) invalid_cartan("root system not symmetric");
    rd.roots_ = pos;
    for (std::size_t i = 0; i < pos.size(); ++i) {
      Root neg = pos[i];
      neg.weight = -neg.weight;
      neg.coroot = -neg.coroot;
      for (auto& v : neg.simple) v = -v;
      neg.height = -neg.height;
      neg.positive = false;
      rd.roots_.push_back(neg);
      rd.positive_.push_back(i);
    }
  }

  // ρ and ρ~.
  rd.two_rho_ = Weight(a.rank);
  for (std::size_t i : rd.positive_) rd.two_rho_ += rd.roots_[i].weight;
  rd.rho_integral_ = std::all_of(rd.two_rho_.coords().begin(), rd.two_rho_.coords().end(),
                                 [](std::int64_t v) { return v % 2 == 0; });
  if (rd.rho_integral_) {
    rd.rho_tilde_ = Weight(a.rank);
    for (std::size_t i = 0; i < a.rank; ++i) rd.rho_tilde_[i] = rd.two_rho_[i] / 2;
    rd.rho_tilde_rule_ = "rho";
  } else {
    // Solve <x, alpha_i^vee> = 1 through U A V = [I | 0].
    IntMatrix co(r, a.rank);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < a.rank; ++j) co(i, j) = static_cast<long>(a.coroots[i][j]);
    const auto snf = smith_normal_form(co);
    IntVector ones(r, BigInt(1));
    IntVector uy = snf.U * ones;
    IntVector y(a.rank, BigInt(0));
    for (std::size_t i = 0; i < r; ++i) y[i] = uy[i];
    IntVector x = snf.V * y;
    rd.rho_tilde_ = Weight(a.rank);
    for (std::size_t i = 0; i < a.rank; ++i) rd.rho_tilde_[i] = to_int64(x[i]);
    rd.rho_tilde_rule_ = "snf-lift";
  }
  for (std::size_t i = 0; i < r; ++i)
    if (pairing(rd.rho_tilde_, a.coroots[i]) != 1)
      throw std::logic_error("rho~ construction failed");

  // Dynkin components, highest roots, dual Coxeter numbers, basic forms.
  const auto comps = dynkin_components(rd.cartan_);
  for (const auto& nodes : comps) {
    SimpleComponent sc;
    sc.simple = nodes;
    sc.name = a.root_factor_name[nodes.front()];
    std::int64_t best = -1;
    for (std::size_t idx : rd.positive_) {
      const Root& root = rd.roots_[idx];
      bool inside = true;
      for (std::size_t j = 0; j < r && inside; ++j)
        if (root.simple[j] != 0 &&
            std::find(nodes.begin(), nodes.end(), j) == nodes.end())
          inside = false;
      if (inside && root.height > best) {
        best = root.height;
        sc.highest_root = idx;
      }
    }
    sc.dual_coxeter = pairing(rd.two_rho_, rd.roots_[sc.highest_root].coroot) / 2 + 1;
    if (std::all_of(nodes.begin(), nodes.end(), [&](std::size_t j) { return a.root_has_coords[j]; })) {
      // Simple-block components: the coordinate of alpha_j^vee is the one
      // where its unit entry sits.
      for (std::size_t j : nodes) {
        for (std::size_t k = 0; k < a.rank; ++k)
          if (a.coroots[j][k] == 1) sc.coords.push_back(k);
      }
      const std::size_t m = nodes.size();
      IntMatrix kappa(m, m);
      for (std::size_t p = 0; p < m; ++p)
        for (std::size_t q = 0; q < m; ++q)
          kappa(p, q) = rd.cartan_(nodes[p], nodes[q]) * rd.symmetrizer_[nodes[q]];
      sc.kappa = kappa;
    }
    rd.components_.push_back(sc);
  }
  for (auto& blk : a.blocks) {
    for (std::size_t ci = 0; ci < rd.components_.size(); ++ci) {
      const std::size_t j = rd.components_[ci].simple.front();
      bool in = true;
      for (std::size_t k = 0; k < a.rank; ++k)
        if (a.coroots[j][k] != 0 &&
            std::find(blk.coords.begin(), blk.coords.end(), k) == blk.coords.end())
          in = false;
      if (in) blk.components.push_back(ci);
    }
    if (blk.kind == BlockKind::Simple)
      for (std::size_t ci : blk.components) rd.components_[ci].name = blk.name;
  }
  rd.blocks_ = a.blocks;

  for (std::size_t i = 0; i < r; ++i) {
    rd.gen_weights_.push_back(simple_reflection(a.roots[i], a.coroots[i]));
    rd.gen_coweights_.push_back(rd.gen_weights_.back().transpose());
  }
  rd.weyl_ = std::make_shared<RootDatum::WeylCache>();
  return rd;
}

std::vector<std::int64_t> RootDatum::dynkin_labels(const Weight& l) const {
  std::vector<std::int64_t> out;
  out.reserve(simple_coroots_.size());
  for (const auto& c : simple_coroots_) out.push_back(pairing(l, c));
  return out;
}

bool RootDatum::is_dominant(const Weight& l) const {
  for (const auto& c : simple_coroots_)
    if (pairing(l, c) < 0) return false;
  return true;
}

const std::vector<WeylElement>& RootDatum::weyl_group(std::size_t bound) const {
  WeylCache& cache = *weyl_;
  std::call_once(cache.elements_once, [&] {
    std::vector<WeylElement> elems;
    std::map<std::vector<std::int64_t>, std::size_t> index;
    WeylElement e{SquareMatrix::identity(rank_), SquareMatrix::identity(rank_), 1, {}};
    index.emplace(e.on_weights.entries(), 0);
    elems.push_back(e);
    for (std::size_t head = 0; head < elems.size(); ++head) {
      for (std::size_t i = 0; i < gen_weights_.size(); ++i) {
        SquareMatrix m = gen_weights_[i] * elems[head].on_weights;
        if (index.count(m.entries())) continue;
        if (elems.size() >= bound)
          throw Error(ErrorKind::GroupTooLarge,
                      "Weyl group exceeds " + std::to_string(bound) + " elements");
        WeylElement h;
        h.on_weights = std::move(m);
        h.on_coweights = gen_coweights_[i] * elems[head].on_coweights;
        h.det = -elems[head].det;
        h.word.push_back(static_cast<int>(i));
        h.word.insert(h.word.end(), elems[head].word.begin(), elems[head].word.end());
        index.emplace(h.on_weights.entries(), elems.size());
        elems.push_back(std::move(h));
      }
    }
    cache.elements = std::move(elems);
    cache.index = std::move(index);
  });
  if (cache.elements.size() > bound)
    throw Error(ErrorKind::GroupTooLarge,
                "Weyl group exceeds " + std::to_string(bound) + " elements");
  return cache.elements;
}

std::optional<std::size_t> RootDatum::weyl_index(const SquareMatrix& on_weights) const {
  weyl_group();
  auto it = weyl_->index.find(on_weights.entries());
  if (it == weyl_->index.end()) return std::nullopt;
  return it->second;
}

const WeylElement& RootDatum::reflection(std::size_t root_index) const {
  WeylCache& cache = *weyl_;
  std::call_once(cache.reflections_once, [&] {
    const auto& elems = weyl_group();
    std::vector<WeylElement> refl;
    for (const Root& root : roots_) {
      auto idx = weyl_index(simple_reflection(root.weight, root.coroot));
      if (!idx) throw std::logic_error("reflection not found in W");
      refl.push_back(elems[*idx]);
    }
    cache.reflections = std::move(refl);
  });
  return cache.reflections.at(root_index);
}

WeylElement RootDatum::compose(const WeylElement& x, const WeylElement& y) const {
  SquareMatrix m = x.on_weights * y.on_weights;
  if (auto idx = weyl_index(m)) return weyl_group()[*idx];
  throw std::logic_error("product not in W");
}

WeylElement RootDatum::inverse(const WeylElement& w) const {
  if (auto idx = weyl_index(w.on_coweights.transpose())) return weyl_group()[*idx];
  throw std::logic_error("inverse not in W");
}

const std::vector<WeylElement>& weyl_group_elements(const RootDatum& rd, std::size_t bound) {
  return rd.weyl_group(bound);
}

DominantForm dominant_representative(const RootDatum& rd, const Weight& l) {
  const std::size_t n = rd.rank();
  DominantForm out;
  out.dominant = l;
  out.w = WeylElement{SquareMatrix::identity(n), SquareMatrix::identity(n), 1, {}};
  for (;;) {
    std::optional<std::size_t> neg;
    const auto labels = rd.dynkin_labels(out.dominant);
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (labels[i] < 0) {
        neg = i;
        break;
      }
    if (!neg) break;
    const std::size_t i = *neg;
    out.dominant = rd.reflection_on_weights(i).apply(out.dominant);
    out.w.on_weights = rd.reflection_on_weights(i) * out.w.on_weights;
    out.w.on_coweights = rd.reflection_on_coweights(i) * out.w.on_coweights;
    out.w.det = -out.w.det;
    out.w.word.insert(out.w.word.begin(), static_cast<int>(i));
  }
  out.sign = out.w.det;
  const auto labels = rd.dynkin_labels(out.dominant);
  out.on_wall = std::any_of(labels.begin(), labels.end(), [](std::int64_t v) { return v == 0; });
  return out;
}

WeightMultiset weight_multiplicities(const RootDatum& rd, const Weight& l) {
  if (!rd.is_dominant(l))
    throw Error(ErrorKind::InvalidArgument, "weight_multiplicities needs a dominant weight");
  const std::size_t r = rd.semisimple_rank();
  const auto labels = rd.dynkin_labels(l);
  std::int64_t lcm_d = 1;
  for (auto v : rd.symmetrizer()) lcm_d = std::lcm(lcm_d, v);

  using Beta = std::vector<std::int64_t>;
  auto form = [&](const Beta& x, const Beta& y) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < r; ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < r; ++j) s += x[i] * y[j] * rd.root_form(i, j);
    }
    return s;
  };
  // (λ + c ρ, alpha_j) in the scaled form, c = 0 or 1.
  auto lam_dot = [&](const Beta& y, std::int64_t c) {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < r; ++j)
      s += y[j] * (labels[j] + c) * (lcm_d / rd.symmetrizer()[j]);
    return s;
  };

  std::vector<Beta> pos;
  for (std::size_t idx : rd.positive_roots()) pos.push_back(rd.roots()[idx].simple);

  std::map<Beta, std::int64_t> mult;
  std::vector<Beta> level{Beta(r, 0)};
  mult[level.front()] = 1;
  while (!level.empty()) {
    std::set<Beta> candidates;
    for (const Beta& b : level)
      for (std::size_t i = 0; i < r; ++i) {
        Beta c = b;
        ++c[i];
        candidates.insert(c);
      }
    std::vector<Beta> next;
    for (const Beta& beta : candidates) {
      const std::int64_t denom = 2 * lam_dot(beta, 1) - form(beta, beta);
      if (denom <= 0) continue;
      std::int64_t num = 0;
      for (const Beta& alpha : pos) {
        Beta shifted = beta;
        for (std::int64_t j = 1;; ++j) {
          bool ok = true;
          for (std::size_t i = 0; i < r; ++i) {
            shifted[i] -= alpha[i];
            if (shifted[i] < 0) ok = false;
          }
          if (!ok) break;
          auto it = mult.find(shifted);
          if (it == mult.end()) continue;
          // (λ - shifted, alpha)
          num += it->second * (lam_dot(alpha, 0) - form(shifted, alpha));
        }
      }
      num *= 2;
      if (num % denom != 0) throw std::logic_error("Freudenthal recursion not integral");
      const std::int64_t m = num / denom;
      if (m < 0) throw std::logic_error("Freudenthal recursion negative");
      if (m > 0) {
        mult[beta] = m;
        next.push_back(beta);
      }
    }
    level = std::move(next);
  }

  WeightMultiset out;
  for (const auto& [beta, m] : mult) {
    Weight w = l;
    for (std::size_t i = 0; i < r; ++i)
      if (beta[i]) w -= beta[i] * rd.simple_roots()[i];
    out[w] = m;
  }
  return out;
}

BigInt weyl_dimension(const RootDatum& rd, const Weight& l) {
  Rational d = 1;
  for (std::size_t idx : rd.positive_roots()) {
    const Coweight& co = rd.roots()[idx].coroot;
    const std::int64_t top = 2 * pairing(l, co) + pairing(rd.two_rho(), co);
    d *= Rational(top, pairing(rd.two_rho(), co));
  }
  d.canonicalize();
  if (d.get_den() != 1) throw std::logic_error("Weyl dimension not integral");
  return d.get_num();
}

WeightMultiset tensor_decompose(const RootDatum& rd, const Weight& l, const Weight& m) {
  if (!rd.is_dominant(l) || !rd.is_dominant(m))
    throw Error(ErrorKind::InvalidArgument, "tensor_decompose needs dominant weights");
  const bool l_small = weyl_dimension(rd, l) < weyl_dimension(rd, m);
  const Weight& big = l_small ? m : l;
  const Weight& small = l_small ? l : m;
  WeightMultiset acc;
  for (const auto& [nu, mult] : weight_multiplicities(rd, small)) {
    const DominantForm df = dominant_representative(rd, big + nu + rd.rho_tilde());
    if (df.on_wall) continue;
    acc[df.dominant - rd.rho_tilde()] += df.sign * mult;
  }
  WeightMultiset out;
  for (const auto& [w, c] : acc) {
    if (c < 0) throw std::logic_error("negative tensor multiplicity");
    if (c > 0) out.emplace(w, c);
  }
  return out;
}

}  // namespace vkt
