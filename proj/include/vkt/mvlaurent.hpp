#pragma once

// Laurent polynomials over Z and the three small Mayer-Vietoris computations:
// S^3 with twist n, U(1) with twist (n, ε), and SU(2) with twist n.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vkt/zlattice.hpp"

namespace vkt {

/// Σ c_k L^k; zero coefficients are never stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(std::int64_t c);
  static LaurentPoly monomial(std::int64_t exponent, std::int64_t c = 1);

  const std::map<std::int64_t, std::int64_t>& terms() const noexcept { return terms_; }
  std::int64_t coeff(std::int64_t e) const;
  bool is_zero() const noexcept { return terms_.empty(); }
  std::int64_t min_degree() const;
  std::int64_t max_degree() const;
  /// p(L^{-1}).
  LaurentPoly bar() const;
  bool is_symmetric() const { return bar() == *this; }

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator-(const LaurentPoly& a) { return LaurentPoly() - a; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(std::int64_t k, const LaurentPoly& a);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  std::string to_string() const;

 private:
  void add_term(std::int64_t e, std::int64_t c);
  std::map<std::int64_t, std::int64_t> terms_;
};

/// q with q·d = p, if it exists.
std::optional<LaurentPoly> divide_exact(const LaurentPoly& p, const LaurentPoly& d);

/// A Laurent polynomial fixed by L ↦ L^{-1}; an element of R(SU(2)).
class SymmetricPoly {
 public:
  SymmetricPoly() = default;
  /// Throws InvalidArgument unless p is symmetric.
  explicit SymmetricPoly(LaurentPoly p);
  const LaurentPoly& poly() const noexcept { return p_; }
  /// Coefficients on ρ_0, ρ_1, ... (Clebsch-Gordan basis).
  std::vector<std::int64_t> rho_coordinates() const;
  friend bool operator==(const SymmetricPoly&, const SymmetricPoly&) = default;

 private:
  LaurentPoly p_;
};

/// ρ_k = L^k + L^{k-2} + ... + L^{-k}.
SymmetricPoly rho(std::int64_t k);

/// The unique symmetric (p0, p1) with p = p0 + p1·L.
std::pair<SymmetricPoly, SymmetricPoly> express_in_RT_basis(const LaurentPoly& p);

/// Abelian group Z^r ⊕ ⊕ Z/d_i.
struct AbelianGroup {
  std::size_t free_rank = 0;
  std::vector<BigInt> torsion;

  static AbelianGroup from(const FiniteAbelianGroup& g);
  bool is_zero() const noexcept { return free_rank == 0 && torsion.empty(); }
  std::string to_string() const;
  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

struct S3Report {
  std::int64_t n = 0;
  IntMatrix middle;   // [[1, n-1], [0, -n]]
  AbelianGroup k0;    // kernel
  AbelianGroup k1;    // cokernel
};

S3Report mv_s3(std::int64_t n);

struct U1Report {
  std::int64_t n = 0;
  int epsilon = 0;
  LaurentPoly middle[2][2];  // [[1, -(-1)^ε L^n], [1, -1]]
  LaurentPoly determinant;
  LaurentPoly relation;      // (-1)^ε L^n - 1
  bool kernel_zero = false;
  std::size_t rank = 0;      // of the cokernel over Z
};

U1Report mv_u1(std::int64_t n, int epsilon);
/// L^k = sign · L^r in Z[L^{±1}]/((-1)^ε L^n - 1), 0 <= r < n.
std::pair<std::int64_t, int> u1_reduce(std::int64_t n, int epsilon, std::int64_t k);

struct SU2Report {
  std::int64_t n = 0;
  LaurentPoly top[2];        // (1, -L^n) over R(T)
  SymmetricPoly middle[2][2];  // [[1, ρ_{n-2}], [0, -ρ_{n-1}]] over R(SU(2))
  SymmetricPoly relation;    // ρ_{n-1}
  bool kernel_zero = false;
  std::size_t rank = 0;
};

SU2Report mv_su2(std::int64_t n);
/// Reduction of Σ c_k ρ_k modulo ρ_{n-1}, on the basis ρ_0..ρ_{n-2}.
std::vector<std::int64_t> su2_reduce(std::int64_t n, std::vector<std::int64_t> rho_coords);

}  // namespace vkt
