#pragma once

// Exact integer linear algebra over arbitrary-precision integers: Smith and
// Hermite normal forms, kernels, cokernels and a small exact rational solver.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace vkt {

using BigInt = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<BigInt>;
using RatVector = std::vector<Rational>;

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows,
                             std::size_t cols_if_empty = 0);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  IntVector row(std::size_t r) const;
  IntVector col(std::size_t c) const;
  IntMatrix transpose() const;
  bool is_zero() const;
  bool is_square() const noexcept { return rows_ == cols_; }

  /// Entries as int64; throws std::overflow_error if any entry does not fit.
  std::vector<std::vector<std::int64_t>> to_int64() const;

  std::string to_string() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntVector operator*(const IntMatrix& a, const IntVector& v);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

/// U * M * V = D with U, V unimodular and D diagonal, d_i >= 0, d_i | d_{i+1}.
struct SmithDecomposition {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
  std::size_t rank = 0;

  IntVector diagonal() const;
};

/// U * M = H with H in row Hermite normal form (pivots positive, entries above
/// a pivot reduced into [0, pivot)).
struct HermiteDecomposition {
  IntMatrix U;
  IntMatrix H;
  std::size_t rank = 0;
};

struct FiniteAbelianGroup {
  IntVector invariant_factors;  // all > 1, each dividing the next
  std::size_t free_rank = 0;
  // One target-lattice vector per invariant factor, then one per free summand.
  std::vector<IntVector> generator_reps;

  bool is_trivial() const { return invariant_factors.empty() && free_rank == 0; }
  /// Order of the group; nullopt when it is infinite.
  std::optional<BigInt> order() const;
};

SmithDecomposition smith_normal_form(const IntMatrix& m);
HermiteDecomposition hermite_normal_form(const IntMatrix& m);

FiniteAbelianGroup cokernel_structure(const IntMatrix& m);

/// Z-basis of {v : M v = 0}, in row Hermite normal form; empty if the kernel is 0.
std::vector<IntVector> kernel_basis(const IntMatrix& m);

std::size_t rank(const IntMatrix& m);
BigInt determinant(const IntMatrix& m);
bool is_unimodular(const IntMatrix& m);

/// Inverse over Q; nullopt when singular.
std::optional<std::vector<RatVector>> rational_inverse(const IntMatrix& m);

/// Unique X with A X = B over Q. nullopt if A has a nontrivial kernel or the
/// system is inconsistent.
std::optional<std::vector<RatVector>> solve_unique(const IntMatrix& a, const IntMatrix& b);

/// floor(a / b) for b != 0.
std::int64_t floor_div(std::int64_t a, std::int64_t b);
std::int64_t to_int64(const BigInt& v);

}  // namespace vkt
