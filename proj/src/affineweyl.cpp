#include "vkt/affineweyl.hpp"

#include <algorithm>
#include <set>

#include "vkt/error.hpp"

namespace vkt {

AffineElement affine_identity(const RootDatum& rd) {
  return {Coweight(rd.rank()), weyl_group_elements(rd).front()};
}

AffineElement compose(const RootDatum& rd, const AffineElement& g1, const AffineElement& g2) {
  return {g1.translation + g1.w.apply(g2.translation), rd.compose(g1.w, g2.w)};
}

Weight act(const Twisting& tw, const AffineElement& g, const Weight& l) {
  return g.w.apply(l) + tw.apply_b(g.translation);
}

TorusPoint act_on_torus(const AffineElement& g, const TorusPoint& x) {
  TorusPoint y = apply(g.w.on_coweights, x);
  for (std::size_t i = 0; i < y.size(); ++i) y.coords[i] += g.translation[i];
  return y;
}

int sign_character(const Twisting& tw, const AffineElement& g) {
  return g.w.det * (tw.epsilon_parity(g.translation) ? -1 : 1);
}

namespace {

// π = floor(b^{-1} μ), so that μ - b(π) lies in b([0,1)^n).
Coweight box_floor(const Twisting& tw, const Weight& mu) {
  const std::size_t n = tw.rank();
  Coweight p(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < n; ++j) s += tw.inverse_numerator(i, j) * mu[j];
    p[i] = floor_div(s, tw.inverse_denominator());
  }
  return p;
}

}  // namespace

OrbitReduction orbit_normal_form(const RootDatum& rd, const Twisting& tw, const Weight& l) {
  const auto& W = weyl_group_elements(rd);
  OrbitReduction out;
  bool have = false;
  bool plus = false, minus = false;
  for (const WeylElement& w : W) {
    const Weight mu = w.apply(l);
    const Coweight p = box_floor(tw, mu);
    const Weight r = mu - tw.apply_b(p);
    AffineElement g{-p, w};
    const int s = sign_character(tw, g);
    if (!have || r < out.representative) {
      have = true;
      out.representative = r;
      out.witness = g;
      out.sign = s;
      out.stabilizer_order = 1;
      plus = s > 0;
      minus = s < 0;
    } else if (r == out.representative) {
      ++out.stabilizer_order;
      (s > 0 ? plus : minus) = true;
    }
  }
  out.zero = plus && minus;
  if (out.zero) out.sign = 0;
  return out;
}

std::vector<Weight> box_points(const RootDatum& rd, const Twisting& tw) {
  const std::size_t n = rd.rank();
  const auto snf = smith_normal_form(tw.b());
  const auto uinv = rational_inverse(snf.U);
  const IntVector d = snf.diagonal();
  std::vector<Weight> out;
  std::vector<std::int64_t> y(n, 0);
  for (;;) {
    Weight l(n);
    for (std::size_t i = 0; i < n; ++i) {
      Rational s = 0;
      for (std::size_t j = 0; j < n; ++j) s += (*uinv)[i][j] * y[j];
      l[i] = to_int64(s.get_num());
    }
    out.push_back(l - tw.apply_b(box_floor(tw, l)));
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

OrbitCensus orbit_census(const RootDatum& rd, const Twisting& tw) {
  OrbitCensus c;
  for (const Weight& r : box_points(rd, tw)) {
    const OrbitReduction red = orbit_normal_form(rd, tw, r);
    if (red.representative != r) continue;
    ++c.orbits;
    if (red.free()) ++c.free_orbits;
    if (!red.zero) c.basis.push_back(r);
    if (!red.zero && !red.free()) c.sign_trivial_nonfree.push_back(r);
  }
  return c;
}

std::vector<Weight> enumerate_basis_orbits(const RootDatum& rd, const Twisting& tw) {
  return orbit_census(rd, tw).basis;
}

namespace {

Rational root_value(const Weight& alpha, const TorusPoint& x) {
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (alpha[i]) s += Rational(alpha[i]) * x.coords[i];
  return s;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace

std::vector<AffineElement> stabilizer_generators(const RootDatum& rd, const TorusPoint& x) {
  if (x.size() != rd.rank()) throw Error(ErrorKind::InvalidArgument, "point has wrong rank");
  std::vector<std::size_t> rx;
  for (std::size_t idx : rd.positive_roots()) {
    Rational v = root_value(rd.roots()[idx].weight, x);
    v.canonicalize();
    if (is_integer(v)) rx.push_back(idx);
  }
  std::set<Weight> members;
  for (std::size_t idx : rx) members.insert(rd.roots()[idx].weight);
  std::vector<AffineElement> gens;
  for (std::size_t idx : rx) {
    const Weight& a = rd.roots()[idx].weight;
    bool decomposable = false;
    for (std::size_t jdx : rx) {
      const Weight& b = rd.roots()[jdx].weight;
      if (b == a) continue;
      if (members.count(a - b)) {
        decomposable = true;
        break;
      }
    }
    if (decomposable) continue;
    Rational k = root_value(a, x);
    k.canonicalize();
    const std::int64_t kk = to_int64(k.get_num());
    gens.push_back({kk * rd.roots()[idx].coroot, rd.reflection(idx)});
  }
  return gens;
}

std::vector<AffineElement> stabilizer_brute_force(const RootDatum& rd, const TorusPoint& x) {
  std::vector<AffineElement> out;
  for (const WeylElement& w : weyl_group_elements(rd)) {
    const TorusPoint wx = apply(w.on_coweights, x);
    Coweight p(rd.rank());
    bool integral = true;
    for (std::size_t i = 0; i < x.size() && integral; ++i) {
      Rational d = x.coords[i] - wx.coords[i];
      d.canonicalize();
      if (!is_integer(d)) integral = false;
      else p[i] = to_int64(d.get_num());
    }
    if (integral) out.push_back({p, w});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<AffineElement> generated_subgroup(const RootDatum& rd,
                                              const std::vector<AffineElement>& gens) {
  std::set<AffineElement> seen{affine_identity(rd)};
  std::vector<AffineElement> frontier{affine_identity(rd)};
  while (!frontier.empty()) {
    std::vector<AffineElement> next;
    for (const auto& g : frontier)
      for (const auto& s : gens) {
        AffineElement h = compose(rd, s, g);
        if (seen.insert(h).second) next.push_back(h);
        if (seen.size() > 10'000'000)
          throw Error(ErrorKind::GroupTooLarge, "generated subgroup is too large");
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

}  // namespace vkt
