#include "vkt/fusion.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <set>

#include "vkt/error.hpp"

namespace vkt {

void KClass::add(const Weight& rep, std::int64_t c) {
  if (c == 0) return;
  auto [it, fresh] = support.emplace(rep, c);
  if (fresh) return;
  it->second += c;
  if (it->second == 0) support.erase(it);
}

KClass& KClass::operator+=(const KClass& o) {
  for (const auto& [w, c] : o.support) add(w, c);
  return *this;
}

namespace {

bool regular_point(const RootDatum& rd, const TorusPoint& x) {
  for (const WeylElement& w : weyl_group_elements(rd)) {
    if (w.is_identity()) continue;
    if (apply(w.on_coweights, x).reduced() == x) return false;
  }
  return true;
}

bool regular_weight(const RootDatum& rd, const Twisting& tw, const Weight& l) {
  const Weight r = reduce_to_box(tw, l).first;
  for (const WeylElement& w : weyl_group_elements(rd)) {
    if (w.is_identity()) continue;
    if (reduce_to_box(tw, w.apply(l)).first == r) return false;
  }
  return true;
}

RatVector as_rational(const Weight& l) {
  RatVector v;
  v.reserve(l.size());
  for (std::size_t i = 0; i < l.size(); ++i) v.emplace_back(l[i]);
  return v;
}

// Affine reflections through the walls <θ, x> = 1 bring b^{-1}(μ) into the
// fundamental alcove; the torus directions are left alone.
Weight alcove_point(const RootDatum& rd, const Twisting& tw, Weight mu) {
  for (;;) {
    mu = dominant_representative(rd, mu).dominant;
    const TorusPoint x = tw.preimage(as_rational(mu));
    bool moved = false;
    for (const SimpleComponent& c : rd.components()) {
      const Root& theta = rd.roots()[c.highest_root];
      Rational t = 0;
      for (std::size_t i = 0; i < x.size(); ++i)
        if (theta.weight[i]) t += Rational(theta.weight[i]) * x.coords[i];
      if (t > 1) {
        mu = rd.reflection(c.highest_root).apply(mu) + tw.apply_b(theta.coroot);
        moved = true;
        break;
      }
    }
    if (!moved) return mu;
  }
}

std::int64_t exponent_at(const Weight& l, const TorusPoint& x, std::int64_t m) {
  Rational s = 0;
  for (std::size_t i = 0; i < l.size(); ++i)
    if (l[i]) s += Rational(l[i]) * x.coords[i];
  s *= m;
  s.canonicalize();
  if (s.get_den() != 1) throw Error(ErrorKind::InvalidArgument, "order does not clear the denominator");
  const std::int64_t k = to_int64(s.get_num()) % m;
  return k < 0 ? k + m : k;
}

std::int64_t lcm_of_denominators(const std::vector<TorusPoint>& pts) {
  std::int64_t m = 1;
  for (const auto& x : pts) m = std::lcm(m, x.denominator());
  return m;
}

Rational delta_sum(const RootDatum& rd, const Twisting& tw, const BoxFunction& f, const Weight& g,
                   bool regular_only) {
  std::vector<TorusPoint> pts = f_epsilon_points(rd, tw);
  if (regular_only)
    std::erase_if(pts, [&](const TorusPoint& x) { return !regular_point(rd, x); });
  const std::int64_t m = lcm_of_denominators(pts);
  std::vector<std::int64_t> e(static_cast<std::size_t>(m), 0);
  for (const auto& [l, c] : f) {
    if (c == 0) continue;
    if (regular_only && !regular_weight(rd, tw, l)) continue;
    const Weight nu = g - l;
    for (const auto& x : pts) e[static_cast<std::size_t>(exponent_at(nu, x, m))] += c;
  }
  const auto total = CyclotomicInt::from_powers(m, e).integer_value();
  if (!total) throw Error(ErrorKind::InvalidArgument, "distribution value is not rational");
  Rational r(*total, tw.order());
  r.canonicalize();
  return r;
}

}  // namespace

std::vector<VerlindeClass> verlinde_classes(const RootDatum& rd, const Twisting& tw) {
  std::set<TorusPoint> reps;
  for (const TorusPoint& x : f_epsilon_points(rd, tw)) {
    if (!regular_point(rd, x)) continue;
    TorusPoint best = x;
    for (const WeylElement& w : weyl_group_elements(rd)) {
      TorusPoint y = apply(w.on_coweights, x).reduced();
      if (y < best) best = std::move(y);
    }
    reps.insert(best);
  }
  std::vector<VerlindeClass> out;
  for (const auto& p : reps) out.push_back({p, weyl_group_elements(rd).size()});
  return out;
}

struct FusionRing::Cache {
  std::once_flag classes_once;
  std::vector<VerlindeClass> classes;
  std::int64_t order = 1;
  std::once_flag table_once;
  std::vector<std::vector<std::vector<std::int64_t>>> table;
};

FusionRing::FusionRing(RootDatum rd, Twisting tw)
    : rd_(std::move(rd)), tw_(std::move(tw)), cache_(std::make_shared<Cache>()) {
  basis_ = enumerate_basis_orbits(rd_, tw_);
  for (std::size_t i = 0; i < basis_.size(); ++i) index_[basis_[i]] = i;
  for (const Weight& r : basis_) {
    const Weight mu = alcove_point(rd_, tw_, r);
    const OrbitReduction red = orbit_normal_form(rd_, tw_, mu);
    transversal_.push_back(mu - rd_.rho_tilde());
    signs_.push_back(red.sign);
  }
  const OrbitReduction one = orbit_normal_form(rd_, tw_, rd_.rho_tilde());
  if (!one.zero) unit_ = index_.at(one.representative);
}

std::optional<std::size_t> FusionRing::index_of(const Weight& rep) const {
  auto it = index_.find(rep);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const std::vector<VerlindeClass>& FusionRing::classes() const {
  std::call_once(cache_->classes_once, [&] {
    cache_->classes = verlinde_classes(rd_, tw_);
    std::int64_t m = 1;
    for (const auto& c : cache_->classes) m = std::lcm(m, c.point.denominator());
    cache_->order = m;
  });
  return cache_->classes;
}

std::int64_t FusionRing::class_order() const {
  classes();
  return cache_->order;
}

KClass FusionRing::class_from_weight(const Weight& l) const {
  KClass k;
  const OrbitReduction red = orbit_normal_form(rd_, tw_, l + rd_.rho_tilde());
  if (!red.zero) k.add(red.representative, red.sign);
  return k;
}

std::vector<std::int64_t> FusionRing::coordinates(const KClass& k) const {
  std::vector<std::int64_t> c(basis_.size(), 0);
  for (const auto& [w, v] : k.support) {
    auto it = index_.find(w);
    if (it == index_.end()) throw Error(ErrorKind::InvalidArgument, "class is not on the basis");
    c[it->second] = v * signs_[it->second];
  }
  return c;
}

KClass FusionRing::from_coordinates(const std::vector<std::int64_t>& c) const {
  if (c.size() != basis_.size()) throw Error(ErrorKind::InvalidArgument, "wrong number of coordinates");
  KClass k;
  for (std::size_t i = 0; i < c.size(); ++i) k.add(basis_[i], c[i] * signs_[i]);
  return k;
}

KClass FusionRing::fusion_product(std::size_t a, std::size_t b) const {
  if (!tw_.primitive())
    throw Error(ErrorKind::NotPrimitive, "the twisting is not primitive; only the R(G)-module structure is available");
  if (a >= size() || b >= size()) throw Error(ErrorKind::InvalidArgument, "basis index out of range");
  KClass k;
  for (const auto& [nu, m] : tensor_decompose(rd_, transversal_[a], transversal_[b])) {
    const OrbitReduction red = orbit_normal_form(rd_, tw_, nu + rd_.rho_tilde());
    if (!red.zero) k.add(red.representative, m * red.sign);
  }
  return k;
}

const std::vector<std::vector<std::vector<std::int64_t>>>& FusionRing::structure_constants() const {
  if (!tw_.primitive())
    throw Error(ErrorKind::NotPrimitive, "the twisting is not primitive; only the R(G)-module structure is available");
  std::call_once(cache_->table_once, [&] {
    auto& t = cache_->table;
    t.assign(size(), std::vector<std::vector<std::int64_t>>(size()));
    for (std::size_t a = 0; a < size(); ++a)
      for (std::size_t b = a; b < size(); ++b) {
        t[a][b] = coordinates(fusion_product(a, b));
        t[b][a] = t[a][b];
      }
  });
  return cache_->table;
}

KClass FusionRing::act(const Weight& nu, const KClass& k) const {
  const WeightMultiset chi = weight_multiplicities(rd_, nu);
  KClass out;
  for (const auto& [r, c] : k.support)
    for (const auto& [beta, m] : chi) {
      const OrbitReduction red = orbit_normal_form(rd_, tw_, r + beta);
      if (!red.zero) out.add(red.representative, c * m * red.sign);
    }
  return out;
}

KClass FusionRing::act(const RepCombination& p, const KClass& k) const {
  KClass out;
  for (const auto& [nu, c] : p) {
    if (c == 0) continue;
    KClass t = act(nu, k);
    for (auto& [w, v] : t.support) v *= c;
    out += t;
  }
  return out;
}

bool FusionRing::verlinde_ideal_member(const RepCombination& p) const {
  const auto& cls = classes();
  const std::int64_t m = class_order();
  std::vector<WeightMultiset> chars;
  for (const auto& [nu, c] : p)
    if (c != 0) chars.push_back(weight_multiplicities(rd_, nu));
  for (const auto& x : cls) {
    std::vector<std::int64_t> e(static_cast<std::size_t>(m), 0);
    std::size_t i = 0;
    for (const auto& [nu, c] : p) {
      if (c == 0) continue;
      for (const auto& [beta, mult] : chars[i])
        e[static_cast<std::size_t>(exponent_at(beta, x.point, m))] += c * mult;
      ++i;
    }
    if (!CyclotomicInt::from_powers(m, e).is_zero()) return false;
  }
  return true;
}

IntMatrix FusionRing::mult_by_U_matrix() const {
  IntMatrix u(size(), size());
  for (std::size_t a = 0; a < size(); ++a)
    for (const auto& [w, c] : class_from_weight(transversal_[a]).support) u(index_.at(w), a) = c;
  return u;
}

std::vector<Weight> dominant_weights_up_to(const RootDatum& rd, std::int64_t height) {
  const std::size_t n = rd.rank();
  std::vector<Weight> out;
  if (n == 0) return {Weight(0)};
  std::vector<std::int64_t> v(n, -height);
  for (;;) {
    Weight l(n);
    for (std::size_t i = 0; i < n; ++i) l[i] = v[i];
    if (rd.is_dominant(l)) {
      std::int64_t h = 0;
      for (auto a : rd.dynkin_labels(l)) h += a;
      if (h <= height) out.push_back(l);
    }
    std::size_t k = n;
    while (k-- > 0) {
      if (++v[k] <= height) break;
      v[k] = -height;
      if (k == 0) {
        std::sort(out.begin(), out.end());
        return out;
      }
    }
  }
}

std::vector<Weight> ideal_generator_candidates(const FusionRing& ring, std::int64_t height) {
  std::vector<Weight> out;
  for (const Weight& l : dominant_weights_up_to(ring.root_datum(), height))
    if (ring.verlinde_ideal_member({{l, 1}})) out.push_back(l);
  return out;
}

std::pair<Weight, int> reduce_to_box(const Twisting& tw, const Weight& l) {
  const std::size_t n = tw.rank();
  Coweight p(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < n; ++j) s += tw.inverse_numerator(i, j) * l[j];
    p[i] = floor_div(s, tw.inverse_denominator());
  }
  return {l - tw.apply_b(p), tw.epsilon_parity(p) ? -1 : 1};
}

std::int64_t evaluate_equivariant(const Twisting& tw, const BoxFunction& f, const Weight& g) {
  const auto [r, s] = reduce_to_box(tw, g);
  auto it = f.find(r);
  return it == f.end() ? 0 : s * it->second;
}

BoxFunction equivariant_function(const FusionRing& ring, const KClass& k) {
  BoxFunction f;
  for (const Weight& l : box_points(ring.root_datum(), ring.twisting())) {
    const OrbitReduction red = orbit_normal_form(ring.root_datum(), ring.twisting(), l);
    if (red.zero) continue;
    auto it = k.support.find(red.representative);
    if (it != k.support.end()) f[l] = red.sign * it->second;
  }
  return f;
}

Rational delta_eval(const RootDatum& rd, const Twisting& tw, const BoxFunction& f, const Weight& g) {
  return delta_sum(rd, tw, f, g, false);
}

Rational delta_eval_regular(const RootDatum& rd, const Twisting& tw, const BoxFunction& f,
                            const Weight& g) {
  return delta_sum(rd, tw, f, g, true);
}

KClass torus_pushforward(const RootDatum& rd, const Twisting& tw, const Weight& l) {
  if (!rd.roots().empty()) throw Error(ErrorKind::NotATorus, "pushforward needs a group without roots");
  KClass k;
  const OrbitReduction red = orbit_normal_form(rd, tw, l);
  if (!red.zero) k.add(red.representative, red.sign);
  return k;
}

}  // namespace vkt
