#include "vkt/cyclo.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "vkt/error.hpp"

namespace vkt {

namespace {

std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("cyclotomic coefficient overflow");
  return r;
}

std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("cyclotomic coefficient overflow");
  return r;
}

std::int64_t mod(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t p) {
  return static_cast<std::int64_t>(static_cast<__int128>(a) * b % p);
}

std::int64_t powmod(std::int64_t a, std::int64_t e, std::int64_t p) {
  std::int64_t r = 1 % p;
  a = mod(a, p);
  while (e > 0) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

// Exact division of polynomials with integer coefficients by a monic divisor.
std::vector<std::int64_t> divide_exact(std::vector<std::int64_t> num,
                                       const std::vector<std::int64_t>& den) {
  const std::size_t dn = den.size() - 1;
  std::vector<std::int64_t> q(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    const std::int64_t c = num[i];
    q[i - dn] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] = add(num[i - dn + j], -mul(c, den[j]));
  }
  return q;
}

std::mutex poly_mutex;
std::map<std::int64_t, std::unique_ptr<std::vector<std::int64_t>>> poly_cache;

}  // namespace

const std::vector<std::int64_t>& cyclotomic_polynomial(std::int64_t m) {
  if (m < 1) throw Error(ErrorKind::InvalidArgument, "cyclotomic order must be >= 1");
  {
    std::lock_guard<std::mutex> lock(poly_mutex);
    auto it = poly_cache.find(m);
    if (it != poly_cache.end()) return *it->second;
  }
  std::vector<std::int64_t> p(static_cast<std::size_t>(m) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(m)] = 1;
  for (std::int64_t d = 1; d < m; ++d)
    if (m % d == 0) p = divide_exact(p, cyclotomic_polynomial(d));
  std::lock_guard<std::mutex> lock(poly_mutex);
  auto& slot = poly_cache[m];
  if (!slot) slot = std::make_unique<std::vector<std::int64_t>>(std::move(p));
  return *slot;
}

CyclotomicInt::CyclotomicInt(std::int64_t m) : m_(m) {
  if (m < 1) throw Error(ErrorKind::InvalidArgument, "cyclotomic order must be >= 1");
  c_.assign(cyclotomic_polynomial(m).size() - 1, 0);
}

CyclotomicInt CyclotomicInt::from_powers(std::int64_t m, const std::vector<std::int64_t>& powers) {
  std::vector<std::int64_t> r = powers;
  const auto& phi = cyclotomic_polynomial(m);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t i = r.size(); i-- > deg;) {
    const std::int64_t c = r[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= deg; ++j) r[i - deg + j] = add(r[i - deg + j], -mul(c, phi[j]));
  }
  CyclotomicInt out(m);
  for (std::size_t i = 0; i < deg && i < r.size(); ++i) out.c_[i] = r[i];
  return out;
}

CyclotomicInt CyclotomicInt::integer(std::int64_t m, std::int64_t v) {
  std::vector<std::int64_t> e(1, v);
  return from_powers(m, e);
}

CyclotomicInt CyclotomicInt::zeta_power(std::int64_t m, std::int64_t k) {
  std::vector<std::int64_t> e(static_cast<std::size_t>(m), 0);
  e[static_cast<std::size_t>(mod(k, m))] = 1;
  return from_powers(m, e);
}

bool CyclotomicInt::is_zero() const {
  for (auto v : c_)
    if (v != 0) return false;
  return true;
}

std::optional<std::int64_t> CyclotomicInt::integer_value() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return std::nullopt;
  return c_.empty() ? 0 : c_[0];
}

CyclotomicInt CyclotomicInt::promote(std::int64_t big) const {
  if (big % m_ != 0) throw Error(ErrorKind::InvalidArgument, "promote: order does not divide");
  if (big == m_) return *this;
  const std::int64_t step = big / m_;
  std::vector<std::int64_t> e(static_cast<std::size_t>(big), 0);
  for (std::size_t i = 0; i < c_.size(); ++i)
    e[static_cast<std::size_t>(mod(static_cast<std::int64_t>(i) * step, big))] =
        add(e[static_cast<std::size_t>(mod(static_cast<std::int64_t>(i) * step, big))], c_[i]);
  return from_powers(big, e);
}

CyclotomicInt& CyclotomicInt::operator+=(const CyclotomicInt& o) {
  const std::int64_t l = std::lcm(m_, o.m_);
  if (l != m_) *this = promote(l);
  const CyclotomicInt b = o.promote(l);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = add(c_[i], b.c_[i]);
  return *this;
}

CyclotomicInt& CyclotomicInt::operator-=(const CyclotomicInt& o) { return *this += (-1) * o; }

CyclotomicInt operator*(const CyclotomicInt& a0, const CyclotomicInt& b0) {
  const std::int64_t l = std::lcm(a0.m_, b0.m_);
  const CyclotomicInt a = a0.promote(l), b = b0.promote(l);
  std::vector<std::int64_t> e(static_cast<std::size_t>(l), 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j] == 0) continue;
      auto& slot = e[(i + j) % static_cast<std::size_t>(l)];
      slot = add(slot, mul(a.c_[i], b.c_[j]));
    }
  }
  return CyclotomicInt::from_powers(l, e);
}

CyclotomicInt operator*(std::int64_t k, const CyclotomicInt& a) {
  CyclotomicInt out = a;
  for (auto& v : out.c_) v = mul(v, k);
  return out;
}

bool operator==(const CyclotomicInt& a, const CyclotomicInt& b) {
  const std::int64_t l = std::lcm(a.m_, b.m_);
  return a.promote(l).c_ == b.promote(l).c_;
}

std::complex<double> CyclotomicInt::to_complex() const {
  std::complex<double> s = 0;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i]) s += static_cast<double>(c_[i]) * std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(m_));
  return s;
}

std::int64_t CyclotomicInt::reduce_mod(std::int64_t p, std::int64_t root) const {
  std::int64_t s = 0, z = 1;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    s = (s + mulmod(mod(c_[i], p), z, p)) % p;
    z = mulmod(z, root, p);
  }
  return s;
}

std::string CyclotomicInt::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!s.empty()) s += c_[i] > 0 ? " + " : " - ";
    else if (c_[i] < 0) s += "-";
    const std::int64_t a = std::abs(c_[i]);
    if (i == 0) {
      s += std::to_string(a);
      continue;
    }
    if (a != 1) s += std::to_string(a) + "*";
    s += "z" + std::to_string(m_);
    if (i > 1) s += "^" + std::to_string(i);
  }
  return s.empty() ? "0" : s;
}

CyclotomicInt eval_weight_at_point(const Weight& l, const TorusPoint& x,
                                   std::optional<std::int64_t> order) {
  const std::int64_t den = x.denominator();
  const std::int64_t m = order.value_or(den);
  if (m % den != 0) throw Error(ErrorKind::InvalidArgument, "order is not a multiple of the denominator");
  std::int64_t k = 0;
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (l[i] == 0) continue;
    Rational v = x.coords[i] * m;
    v.canonicalize();
    k = mod(add(k, mul(mod(l[i], m), mod(to_int64(v.get_num()), m))), m);
  }
  return CyclotomicInt::zeta_power(m, k);
}

CyclotomicInt eval_weight_at_point(const RootDatum& rd, const Weight& l, const TorusPoint& x) {
  if (l.size() != rd.rank() || x.size() != rd.rank())
    throw Error(ErrorKind::InvalidArgument, "weight/point rank mismatch");
  return eval_weight_at_point(l, x);
}

CyclotomicInt eval_character_at_point(const RootDatum& rd, const Weight& l, const TorusPoint& x,
                                      std::optional<std::int64_t> order) {
  const std::int64_t m = order.value_or(x.denominator());
  std::vector<std::int64_t> e(static_cast<std::size_t>(m), 0);
  for (const auto& [nu, mult] : weight_multiplicities(rd, l)) {
    std::int64_t k = 0;
    for (std::size_t i = 0; i < nu.size(); ++i) {
      if (nu[i] == 0) continue;
      Rational v = x.coords[i] * m;
    v.canonicalize();
      k = mod(add(k, mul(mod(nu[i], m), mod(to_int64(v.get_num()), m))), m);
    }
    e[static_cast<std::size_t>(k)] = add(e[static_cast<std::size_t>(k)], mult);
  }
  return CyclotomicInt::from_powers(m, e);
}

PrimeRoot prime_with_root_of_unity(std::int64_t m, std::int64_t floor) {
  auto is_prime = [](std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  };
  std::vector<std::int64_t> prime_factors;
  {
    std::int64_t r = m;
    for (std::int64_t d = 2; d * d <= r; ++d)
      if (r % d == 0) {
        prime_factors.push_back(d);
        while (r % d == 0) r /= d;
      }
    if (r > 1) prime_factors.push_back(r);
  }
  for (std::int64_t k = floor / m + 1;; ++k) {
    const std::int64_t p = k * m + 1;
    if (!is_prime(p)) continue;
    for (std::int64_t a = 2; a < p; ++a) {
      const std::int64_t g = powmod(a, (p - 1) / m, p);
      bool ok = true;
      for (auto f : prime_factors)
        if (powmod(g, m / f, p) == 1) ok = false;
      if (ok) return {p, g};
    }
  }
}

}  // namespace vkt
