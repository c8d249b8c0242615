#include "vkt/twist.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "vkt/error.hpp"

namespace vkt {

TorusPoint TorusPoint::reduced() const {
  TorusPoint out = *this;
  for (auto& c : out.coords) {
    BigInt fl;
    mpz_fdiv_q(fl.get_mpz_t(), c.get_num_mpz_t(), c.get_den_mpz_t());
    c -= fl;
    c.canonicalize();
  }
  return out;
}

std::int64_t TorusPoint::denominator() const {
  BigInt l = 1;
  for (Rational c : coords) {
    c.canonicalize();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  }
  return to_int64(l);
}

std::string TorusPoint::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) s += ',';
    s += coords[i].get_str();
  }
  return s;
}

TorusPoint apply(const SquareMatrix& m, const TorusPoint& x) {
  TorusPoint out{RatVector(x.size(), Rational(0))};
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j)
      if (m(i, j) != 0) out.coords[i] += Rational(static_cast<long>(m(i, j))) * x.coords[j];
  return out;
}

std::vector<LevelSlot> level_slots(const RootDatum& rd) {
  std::vector<LevelSlot> out;
  for (const Block& blk : rd.blocks()) {
    switch (blk.kind) {
      case BlockKind::Simple:
        for (std::size_t ci : blk.components) {
          const SimpleComponent& c = rd.components()[ci];
          out.push_back({c.name, BlockKind::Simple, c.coords, *c.kappa, c.dual_coxeter});
        }
        break;
      case BlockKind::Torus:
      case BlockKind::Unitary:
        out.push_back({blk.name, blk.kind, blk.coords, *blk.form, 0});
        break;
      case BlockKind::Explicit:
        break;
    }
  }
  return out;
}

namespace {

[[noreturn]] void invalid_twist(const std::string& why) {
  throw Error(ErrorKind::InvalidTwist, why);
}

std::vector<std::int64_t> normalize_epsilon(const std::vector<std::int64_t>& eps, std::size_t n) {
  if (eps.empty()) return std::vector<std::int64_t>(n, 0);
  if (eps.size() != n)
    invalid_twist("epsilon has " + std::to_string(eps.size()) + " entries, rank is " +
                  std::to_string(n));
  std::vector<std::int64_t> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = ((eps[i] % 2) + 2) % 2;
  return out;
}

}  // namespace

Twisting twisting_from_matrix(const RootDatum& rd, const IntMatrix& b,
                              const std::vector<std::int64_t>& epsilon) {
  const std::size_t n = rd.rank();
  if (b.rows() != n || b.cols() != n)
    invalid_twist("b must be " + std::to_string(n) + "x" + std::to_string(n));
  Twisting tw;
  tw.b_ = b;
  tw.b64_ = b.to_int64();
  tw.epsilon_ = normalize_epsilon(epsilon, n);
  tw.det_ = determinant(b);
  if (tw.det_ == 0) throw Error(ErrorKind::Degenerate, "det b = 0: twisting is degenerate");
  if (!(b.transpose() == b)) invalid_twist("b must be symmetric");
  for (std::size_t i = 0; i < rd.semisimple_rank(); ++i) {
    const SquareMatrix& sl = rd.reflection_on_weights(i);
    const SquareMatrix& sp = rd.reflection_on_coweights(i);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        std::int64_t lhs = 0, rhs = 0;
        for (std::size_t k = 0; k < n; ++k) {
          lhs += sl(r, k) * tw.b64_[k][c];
          rhs += tw.b64_[r][k] * sp(k, c);
        }
        if (lhs != rhs)
          throw Error(ErrorKind::NotEquivariant,
                      "b does not commute with simple reflection " + std::to_string(i + 1));
      }
    // ε ∈ Λ/2Λ must be fixed: s_i ε - ε = -<ε, α_i^vee> α_i ∈ 2Λ.
    std::int64_t e = 0;
    for (std::size_t k = 0; k < n; ++k) e += tw.epsilon_[k] * rd.simple_coroots()[i][k];
    const Weight& alpha = rd.simple_roots()[i];
    for (std::size_t k = 0; k < n; ++k)
      if ((e * alpha[k]) % 2 != 0) invalid_twist("epsilon is not W-invariant mod 2");
  }
  for (const Root& root : rd.roots()) {
    std::int64_t e = 0;
    for (std::size_t k = 0; k < n; ++k) e += tw.epsilon_[k] * root.coroot[k];
    if (e % 2 != 0) tw.eps_coroot_trivial_ = false;
  }
  tw.F_ = cokernel_structure(b);
  tw.order_ = to_int64(abs(tw.det_));

  const auto inv = rational_inverse(b);
  tw.inv_den_ = tw.order_;
  tw.inv_num_.assign(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rational v = (*inv)[i][j] * tw.order_;
      if (v.get_den() != 1) throw std::logic_error("adjugate not integral");
      tw.inv_num_[i][j] = to_int64(v.get_num());
    }

  // Primitivity: ε = 0, no cross terms between simple components and the
  // rest, each simple block a multiple of its κ, residual diagonal even.
  bool prim = tw.epsilon_is_zero();
  std::vector<bool> simple_coord(n, false);
  for (const auto& c : rd.components()) {
    if (!c.kappa) continue;
    for (std::size_t k : c.coords) simple_coord[k] = true;
    std::optional<Rational> level;
    const IntMatrix& kap = *c.kappa;
    for (std::size_t p = 0; p < c.coords.size() && prim; ++p)
      for (std::size_t q = 0; q < c.coords.size(); ++q) {
        const BigInt& entry = b(c.coords[p], c.coords[q]);
        if (kap(p, q) == 0) {
          if (entry != 0) prim = false;
          continue;
        }
        Rational ratio(entry, kap(p, q));
        ratio.canonicalize();
        if (!level) level = ratio;
        if (*level != ratio) prim = false;
      }
    if (level && level->get_den() != 1) prim = false;
    for (std::size_t k : c.coords)
      for (std::size_t j = 0; j < n; ++j)
        if (std::find(c.coords.begin(), c.coords.end(), j) == c.coords.end() && b(k, j) != 0)
          prim = false;
  }
  for (std::size_t k = 0; k < n; ++k)
    if (!simple_coord[k] && b(k, k) % 2 != 0) prim = false;
  tw.primitive_ = prim;
  return tw;
}

Twisting twisting_from_level(const RootDatum& rd, const std::vector<std::int64_t>& levels,
                             const std::optional<IntMatrix>& torus_block,
                             const std::vector<std::int64_t>& epsilon) {
  const auto slots = level_slots(rd);
  const std::size_t n = rd.rank();
  std::size_t covered = 0;
  for (const auto& s : slots) covered += s.coords.size();
  if (covered != n) invalid_twist("explicit lattices need an explicit b");

  IntMatrix b(n, n);
  std::vector<std::size_t> torus_coords;
  std::size_t next = 0;
  std::size_t expected = 0;
  for (const auto& s : slots)
    if (!(torus_block && s.kind == BlockKind::Torus)) ++expected;
  if (levels.size() != expected)
    invalid_twist("expected " + std::to_string(expected) + " levels, got " +
                  std::to_string(levels.size()));
  for (const auto& s : slots) {
    if (torus_block && s.kind == BlockKind::Torus) {
      torus_coords.insert(torus_coords.end(), s.coords.begin(), s.coords.end());
      continue;
    }
    const std::int64_t level = levels[next++];
    for (std::size_t p = 0; p < s.coords.size(); ++p)
      for (std::size_t q = 0; q < s.coords.size(); ++q)
        b(s.coords[p], s.coords[q]) = s.kappa(p, q) * level;
  }
  if (torus_block) {
    const std::size_t k = torus_coords.size();
    if (k == 0) invalid_twist("torus block given but the group has no torus factor");
    if (torus_block->rows() != k || torus_block->cols() != k)
      invalid_twist("torus block must be " + std::to_string(k) + "x" + std::to_string(k));
    for (std::size_t p = 0; p < k; ++p)
      for (std::size_t q = 0; q < k; ++q) b(torus_coords[p], torus_coords[q]) = (*torus_block)(p, q);
  }
  Twisting tw = twisting_from_matrix(rd, b, epsilon);
  tw.levels_ = levels;
  return tw;
}

std::vector<std::int64_t> shift_by_dual_coxeter(const RootDatum& rd,
                                                const std::vector<std::int64_t>& loop_levels) {
  const auto slots = level_slots(rd);
  std::vector<const LevelSlot*> used;
  for (const auto& s : slots) used.push_back(&s);
  if (loop_levels.size() != slots.size()) {
    used.clear();
    for (const auto& s : slots)
      if (s.kind != BlockKind::Torus) used.push_back(&s);
    if (loop_levels.size() != used.size())
      invalid_twist("level count does not match the group's factors");
  }
  std::vector<std::int64_t> out = loop_levels;
  for (std::size_t i = 0; i < used.size(); ++i) {
    if (used[i]->kind == BlockKind::Unitary)
      invalid_twist("dual Coxeter shift is not defined for " + used[i]->name);
    out[i] += used[i]->dual_coxeter;
  }
  return out;
}

Twisting twisting_from_spec(const RootDatum& rd, const TwistSpec& spec) {
  if (spec.b) {
    if (!spec.levels.empty() || spec.torus || spec.dual_coxeter_shift)
      invalid_twist("b excludes levels, torus and shift");
    return twisting_from_matrix(rd, *spec.b, spec.epsilon);
  }
  std::vector<std::int64_t> levels = spec.levels;
  if (spec.dual_coxeter_shift) levels = shift_by_dual_coxeter(rd, levels);
  return twisting_from_level(rd, levels, spec.torus, spec.epsilon);
}

RatVector Twisting::lambda_epsilon() const {
  RatVector out;
  for (auto e : epsilon_) {
    out.emplace_back(e, 2);
    out.back().canonicalize();
  }
  return out;
}

bool Twisting::epsilon_is_zero() const {
  return std::all_of(epsilon_.begin(), epsilon_.end(), [](std::int64_t e) { return e == 0; });
}

Weight Twisting::apply_b(const Coweight& p) const {
  const std::size_t n = rank();
  Weight out(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < n; ++j) {
      std::int64_t t = 0;
      if (__builtin_mul_overflow(b64_[i][j], p[j], &t) || __builtin_add_overflow(s, t, &s))
        throw std::overflow_error("int64 overflow applying b");
    }
    out[i] = s;
  }
  return out;
}

int Twisting::epsilon_parity(const Coweight& p) const {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < p.size(); ++i) s += epsilon_[i] * (p[i] % 2);
  return static_cast<int>(((s % 2) + 2) % 2);
}

TorusPoint Twisting::preimage(const RatVector& l) const {
  const std::size_t n = rank();
  TorusPoint x{RatVector(n, Rational(0))};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) x.coords[i] += Rational(inv_num_[i][j]) * l[j];
    x.coords[i] /= inv_den_;
    x.coords[i].canonicalize();
  }
  return x;
}

std::vector<TorusPoint> f_epsilon_points(const RootDatum& rd, const Twisting& tw) {
  const std::size_t n = rd.rank();
  const auto snf = smith_normal_form(tw.b());
  const auto uinv = rational_inverse(snf.U);
  const IntVector d = snf.diagonal();
  const RatVector half = tw.lambda_epsilon();
  std::vector<TorusPoint> out;
  std::vector<std::int64_t> y(n, 0);
  for (;;) {
    RatVector l = half;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) l[i] += (*uinv)[i][j] * y[j];
    out.push_back(tw.preimage(l).reduced());
    std::size_t k = 0;
    while (k < n) {
      if (++y[k] < to_int64(d[k])) break;
      y[k] = 0;
      ++k;
    }
    if (k == n) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace vkt
