#include "vkt/mvlaurent.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "vkt/error.hpp"

namespace vkt {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("Laurent coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("Laurent coefficient overflow");
  return r;
}

}  // namespace

LaurentPoly::LaurentPoly(std::int64_t c) { add_term(0, c); }

LaurentPoly LaurentPoly::monomial(std::int64_t exponent, std::int64_t c) {
  LaurentPoly p;
  p.add_term(exponent, c);
  return p;
}

void LaurentPoly::add_term(std::int64_t e, std::int64_t c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(e, c);
  if (fresh) return;
  it->second = checked_add(it->second, c);
  if (it->second == 0) terms_.erase(it);
}

std::int64_t LaurentPoly::coeff(std::int64_t e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? 0 : it->second;
}

std::int64_t LaurentPoly::min_degree() const {
  if (terms_.empty()) throw Error(ErrorKind::InvalidArgument, "degree of the zero polynomial");
  return terms_.begin()->first;
}

std::int64_t LaurentPoly::max_degree() const {
  if (terms_.empty()) throw Error(ErrorKind::InvalidArgument, "degree of the zero polynomial");
  return terms_.rbegin()->first;
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly p;
  for (const auto& [e, c] : terms_) p.add_term(-e, c);
  return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly p;
  for (const auto& [e1, c1] : a.terms_)
    for (const auto& [e2, c2] : b.terms_) p.add_term(checked_add(e1, e2), checked_mul(c1, c2));
  return p;
}

LaurentPoly operator*(std::int64_t k, const LaurentPoly& a) {
  LaurentPoly p;
  for (const auto& [e, c] : a.terms_) p.add_term(e, checked_mul(k, c));
  return p;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto [e, c] = *it;
    if (!s.empty()) s += c > 0 ? " + " : " - ";
    else if (c < 0) s += "-";
    const std::int64_t a = c < 0 ? -c : c;
    if (e == 0) {
      s += std::to_string(a);
      continue;
    }
    if (a != 1) s += std::to_string(a) + "*";
    s += "L";
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

std::optional<LaurentPoly> divide_exact(const LaurentPoly& p, const LaurentPoly& d) {
  if (d.is_zero()) throw Error(ErrorKind::InvalidArgument, "division by zero");
  const std::int64_t dt = d.max_degree();
  const std::int64_t lc = d.coeff(dt);
  LaurentPoly r = p, q;
  if (p.is_zero()) return q;
  const std::int64_t lowest = p.min_degree() - d.min_degree();
  while (!r.is_zero()) {
    const std::int64_t e = r.max_degree();
    const std::int64_t c = r.coeff(e);
    if (c % lc != 0) return std::nullopt;
    if (e - dt < lowest) return std::nullopt;
    const LaurentPoly t = LaurentPoly::monomial(e - dt, c / lc);
    q += t;
    r -= t * d;
  }
  return q;
}

SymmetricPoly::SymmetricPoly(LaurentPoly p) : p_(std::move(p)) {
  if (!p_.is_symmetric()) throw Error(ErrorKind::InvalidArgument, "polynomial is not symmetric: " + p_.to_string());
}

std::vector<std::int64_t> SymmetricPoly::rho_coordinates() const {
  LaurentPoly r = p_;
  std::vector<std::int64_t> out;
  while (!r.is_zero()) {
    const std::int64_t d = r.max_degree();
    const std::int64_t c = r.coeff(d);
    if (out.size() <= static_cast<std::size_t>(d)) out.resize(static_cast<std::size_t>(d) + 1, 0);
    out[static_cast<std::size_t>(d)] = c;
    r -= c * rho(d).poly();
  }
  return out;
}

SymmetricPoly rho(std::int64_t k) {
  if (k < -1) throw Error(ErrorKind::InvalidArgument, "rho index below -1");
  LaurentPoly p;
  for (std::int64_t e = -k; e <= k; e += 2) p += LaurentPoly::monomial(e);
  return SymmetricPoly(p);
}

std::pair<SymmetricPoly, SymmetricPoly> express_in_RT_basis(const LaurentPoly& p) {
  // p - p̄ = p1 (L - L^{-1}).
  const LaurentPoly diff = p - p.bar();
  const LaurentPoly step = LaurentPoly::monomial(1) - LaurentPoly::monomial(-1);
  const auto p1 = divide_exact(diff, step);
  if (!p1) throw Error(ErrorKind::InvalidArgument, "not divisible by L - L^{-1}");
  const LaurentPoly p0 = p - *p1 * LaurentPoly::monomial(1);
  return {SymmetricPoly(p0), SymmetricPoly(*p1)};
}

AbelianGroup AbelianGroup::from(const FiniteAbelianGroup& g) {
  return {g.free_rank, g.invariant_factors};
}

std::string AbelianGroup::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  if (free_rank == 1) s = "Z";
  else if (free_rank > 1) s = "Z^" + std::to_string(free_rank);
  for (const auto& d : torsion) {
    if (!s.empty()) s += " + ";
    s += "Z/" + d.get_str();
  }
  return s;
}

S3Report mv_s3(std::int64_t n) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "twist must be >= 0");
  S3Report r;
  r.n = n;
  r.middle = IntMatrix{{1, static_cast<long long>(n - 1)}, {0, static_cast<long long>(-n)}};
  r.k0.free_rank = kernel_basis(r.middle).size();
  r.k1 = AbelianGroup::from(cokernel_structure(r.middle));
  return r;
}

std::pair<std::int64_t, int> u1_reduce(std::int64_t n, int epsilon, std::int64_t k) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "twist must be >= 1");
  const std::int64_t q = floor_div(k, n);
  const std::int64_t r = k - q * n;
  // L^n = (-1)^ε, so L^{qn + r} = (-1)^{εq} L^r.
  const int sign = (epsilon % 2 != 0 && q % 2 != 0) ? -1 : 1;
  return {r, sign};
}

U1Report mv_u1(std::int64_t n, int epsilon) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "twist must be >= 1");
  U1Report r;
  r.n = n;
  r.epsilon = epsilon % 2 != 0 ? 1 : 0;
  const std::int64_t s = r.epsilon ? -1 : 1;
  r.middle[0][0] = LaurentPoly(1);
  r.middle[0][1] = LaurentPoly::monomial(n, -s);
  r.middle[1][0] = LaurentPoly(1);
  r.middle[1][1] = LaurentPoly(-1);
  r.determinant = r.middle[0][0] * r.middle[1][1] - r.middle[0][1] * r.middle[1][0];
  r.relation = LaurentPoly::monomial(n, s) - LaurentPoly(1);
  r.kernel_zero = !r.determinant.is_zero();
  // The relation has unit extreme coefficients, so the quotient is free on
  // L^0..L^{span-1}.
  const auto& t = r.relation.terms();
  const bool units = std::abs(t.begin()->second) == 1 && std::abs(t.rbegin()->second) == 1;
  r.rank = units ? static_cast<std::size_t>(r.relation.max_degree() - r.relation.min_degree()) : 0;
  return r;
}

std::vector<std::int64_t> su2_reduce(std::int64_t n, std::vector<std::int64_t> c) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "twist must be >= 1");
  const std::size_t top = static_cast<std::size_t>(n - 1);
  for (std::size_t d = c.size(); d-- > top;) {
    const std::int64_t v = c[d];
    if (v == 0) continue;
    // ρ_{n-1} ρ_j = Σ_{i=0}^{min(n-1, j)} ρ_{n-1+j-2i}, leading term ρ_d.
    const std::int64_t j = static_cast<std::int64_t>(d) - (n - 1);
    for (std::int64_t i = 0; i <= std::min(n - 1, j); ++i)
      c[static_cast<std::size_t>(static_cast<std::int64_t>(d) - 2 * i)] -= v;
  }
  c.resize(top, 0);
  return c;
}

SU2Report mv_su2(std::int64_t n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "twist must be >= 1");
  SU2Report r;
  r.n = n;
  r.top[0] = LaurentPoly(1);
  r.top[1] = LaurentPoly::monomial(n, -1);
  r.middle[0][0] = SymmetricPoly(LaurentPoly(1));
  r.middle[1][0] = SymmetricPoly();
  const auto [p0, p1] = express_in_RT_basis(r.top[1]);
  r.middle[0][1] = p0;
  r.middle[1][1] = p1;
  r.relation = SymmetricPoly(-p1.poly());
  const LaurentPoly det = r.middle[0][0].poly() * r.middle[1][1].poly() -
                          r.middle[0][1].poly() * r.middle[1][0].poly();
  r.kernel_zero = !det.is_zero();
  // R(SU(2)) = Z[ρ_1] and the relation is monic in ρ_1 of degree n-1.
  const auto rc = r.relation.rho_coordinates();
  r.rank = !rc.empty() && rc.back() == 1 ? rc.size() - 1 : 0;
  return r;
}

}  // namespace vkt
