#pragma once

// Exact arithmetic in Z[ζ_m], stored as the residue of a polynomial in ζ
// modulo the cyclotomic polynomial Φ_m.

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vkt/rootdata.hpp"
#include "vkt/twist.hpp"
#include "vkt/weight.hpp"

namespace vkt {

/// Φ_m, lowest degree first. Cached.
const std::vector<std::int64_t>& cyclotomic_polynomial(std::int64_t m);

class CyclotomicInt {
 public:
  CyclotomicInt() : CyclotomicInt(1) {}
  /// Zero of order m.
  explicit CyclotomicInt(std::int64_t m);

  static CyclotomicInt integer(std::int64_t m, std::int64_t v);
  /// ζ_m^k.
  static CyclotomicInt zeta_power(std::int64_t m, std::int64_t k);
  /// Σ c[k] ζ_m^k for an arbitrary coefficient vector.
  static CyclotomicInt from_powers(std::int64_t m, const std::vector<std::int64_t>& c);

  std::int64_t order() const noexcept { return m_; }
  const std::vector<std::int64_t>& coeffs() const noexcept { return c_; }
  bool is_zero() const;
  /// The value when it lies in Z.
  std::optional<std::int64_t> integer_value() const;

  /// Same number written in Z[ζ_M]; requires m | M.
  CyclotomicInt promote(std::int64_t big) const;

  CyclotomicInt& operator+=(const CyclotomicInt& o);
  CyclotomicInt& operator-=(const CyclotomicInt& o);
  friend CyclotomicInt operator+(CyclotomicInt a, const CyclotomicInt& b) { return a += b; }
  friend CyclotomicInt operator-(CyclotomicInt a, const CyclotomicInt& b) { return a -= b; }
  friend CyclotomicInt operator*(const CyclotomicInt& a, const CyclotomicInt& b);
  friend CyclotomicInt operator*(std::int64_t k, const CyclotomicInt& a);
  friend bool operator==(const CyclotomicInt& a, const CyclotomicInt& b);

  std::complex<double> to_complex() const;
  /// Image under Z[ζ_m] -> F_p, ζ ↦ root (root must have order m mod p).
  std::int64_t reduce_mod(std::int64_t p, std::int64_t root) const;
  std::string to_string() const;

 private:
  std::int64_t m_ = 1;
  std::vector<std::int64_t> c_;
};

/// ζ_m^{<λ, m x>} with m the denominator of x (or the given multiple of it).
CyclotomicInt eval_weight_at_point(const Weight& l, const TorusPoint& x,
                                   std::optional<std::int64_t> order = std::nullopt);
CyclotomicInt eval_weight_at_point(const RootDatum& rd, const Weight& l, const TorusPoint& x);

/// Σ m(ν) ν(x) over the weights of V_λ.
CyclotomicInt eval_character_at_point(const RootDatum& rd, const Weight& l, const TorusPoint& x,
                                      std::optional<std::int64_t> order = std::nullopt);

/// Smallest prime p ≡ 1 mod m above `floor`, with an element of order m.
struct PrimeRoot {
  std::int64_t p = 0;
  std::int64_t root = 0;
};
PrimeRoot prime_with_root_of_unity(std::int64_t m, std::int64_t floor = 1'000'000);

}  // namespace vkt
