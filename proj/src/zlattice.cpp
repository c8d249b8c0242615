#include "vkt/zlattice.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "vkt/error.hpp"

namespace vkt {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, BigInt(0)) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorKind::InvalidArgument, "ragged matrix literal");
    for (long long v : r) data_.emplace_back(static_cast<long>(v));
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows,
                               std::size_t cols_if_empty) {
  const std::size_t c = rows.empty() ? cols_if_empty : rows.front().size();
  IntMatrix m(rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw Error(ErrorKind::InvalidArgument, "ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = static_cast<long>(rows[i][j]);
  }
  return m;
}

IntVector IntMatrix::row(std::size_t r) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

IntVector IntMatrix::col(std::size_t c) const {
  IntVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, c);
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const BigInt& v) { return v == 0; });
}

std::vector<std::vector<std::int64_t>> IntMatrix::to_int64() const {
  std::vector<std::vector<std::int64_t>> out(rows_, std::vector<std::int64_t>(cols_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i][j] = vkt::to_int64((*this)(i, j));
  return out;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << ", ";
    os << '[';
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ", ";
      os << (*this)(i, j);
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorKind::InvalidArgument, "matrix shape mismatch");
  IntMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const BigInt& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

IntVector operator*(const IntMatrix& a, const IntVector& v) {
  if (a.cols_ != v.size()) throw Error(ErrorKind::InvalidArgument, "matrix/vector shape mismatch");
  IntVector out(a.rows_, BigInt(0));
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j) out[i] += a(i, j) * v[j];
  return out;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

IntVector SmithDecomposition::diagonal() const {
  IntVector d;
  for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) d.push_back(D(i, i));
  return d;
}

std::optional<BigInt> FiniteAbelianGroup::order() const {
  if (free_rank != 0) return std::nullopt;
  BigInt n = 1;
  for (const auto& f : invariant_factors) n *= f;
  return n;
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

// row[dst] += q * row[src]
void add_row(IntMatrix& m, std::size_t dst, std::size_t src, const BigInt& q) {
  if (q == 0) return;
  for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) += q * m(src, j);
}

void add_col(IntMatrix& m, std::size_t dst, std::size_t src, const BigInt& q) {
  if (q == 0) return;
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) += q * m(i, src);
}

void negate_row(IntMatrix& m, std::size_t r) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = -m(r, j);
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  IntMatrix a = m;
  IntMatrix u = IntMatrix::identity(rows);
  IntMatrix v = IntMatrix::identity(cols);
  std::size_t s = 0;

  for (; s < std::min(rows, cols); ++s) {
    for (;;) {
      // Smallest |entry| in the trailing block; ties go to the earlier row, then column.
      bool found = false;
      std::size_t pr = s, pc = s;
      BigInt best;
      for (std::size_t i = s; i < rows; ++i)
        for (std::size_t j = s; j < cols; ++j) {
          if (a(i, j) == 0) continue;
          BigInt mag = abs(a(i, j));
          if (!found || mag < best) {
            found = true;
            best = mag;
            pr = i;
            pc = j;
          }
        }
      if (!found) goto done;

      swap_rows(a, s, pr);
      swap_rows(u, s, pr);
      swap_cols(a, s, pc);
      swap_cols(v, s, pc);

      bool clean = true;
      for (std::size_t i = s + 1; i < rows; ++i) {
        if (a(i, s) == 0) continue;
        BigInt q = a(i, s) / a(s, s);
        add_row(a, i, s, -q);
        add_row(u, i, s, -q);
        if (a(i, s) != 0) clean = false;
      }
      for (std::size_t j = s + 1; j < cols; ++j) {
        if (a(s, j) == 0) continue;
        BigInt q = a(s, j) / a(s, s);
        add_col(a, j, s, -q);
        add_col(v, j, s, -q);
        if (a(s, j) != 0) clean = false;
      }
      if (!clean) continue;

      // The pivot must divide everything left; otherwise fold the offending row in.
      bool divides = true;
      for (std::size_t i = s + 1; i < rows && divides; ++i)
        for (std::size_t j = s + 1; j < cols; ++j)
          if (a(i, j) % a(s, s) != 0) {
            add_row(a, s, i, BigInt(1));
            add_row(u, s, i, BigInt(1));
            divides = false;
            break;
          }
      if (!divides) continue;

      if (a(s, s) < 0) {
        negate_row(a, s);
        negate_row(u, s);
      }
      break;
    }
  }
done:
  return SmithDecomposition{std::move(u), std::move(a), std::move(v), s};
}

HermiteDecomposition hermite_normal_form(const IntMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  IntMatrix h = m;
  IntMatrix u = IntMatrix::identity(rows);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    // Euclid down the column until a single nonzero entry remains at row r.
    for (;;) {
      std::size_t pivot = rows;
      for (std::size_t i = r; i < rows; ++i)
        if (h(i, c) != 0 && (pivot == rows || abs(h(i, c)) < abs(h(pivot, c)))) pivot = i;
      if (pivot == rows) break;
      swap_rows(h, r, pivot);
      swap_rows(u, r, pivot);
      bool done = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (h(i, c) == 0) continue;
        BigInt q = h(i, c) / h(r, c);
        add_row(h, i, r, -q);
        add_row(u, i, r, -q);
        if (h(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (h(r, c) == 0) continue;
    if (h(r, c) < 0) {
      negate_row(h, r);
      negate_row(u, r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      BigInt q;
      mpz_fdiv_q(q.get_mpz_t(), h(i, c).get_mpz_t(), h(r, c).get_mpz_t());
      add_row(h, i, r, -q);
      add_row(u, i, r, -q);
    }
    ++r;
  }
  return HermiteDecomposition{std::move(u), std::move(h), r};
}

FiniteAbelianGroup cokernel_structure(const IntMatrix& m) {
  const SmithDecomposition snf = smith_normal_form(m);
  FiniteAbelianGroup g;
  g.free_rank = m.rows() - snf.rank;
  // U M V = D, so the target basis adapted to D is given by the columns of U^{-1}.
  const auto u_inv = rational_inverse(snf.U);
  auto column = [&](std::size_t k) {
    IntVector out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) out[i] = (*u_inv)[i][k].get_num();
    return out;
  };
  for (std::size_t i = 0; i < snf.rank; ++i) {
    if (snf.D(i, i) == 1) continue;
    g.invariant_factors.push_back(snf.D(i, i));
    g.generator_reps.push_back(column(i));
  }
  for (std::size_t i = snf.rank; i < m.rows(); ++i) g.generator_reps.push_back(column(i));
  return g;
}

std::vector<IntVector> kernel_basis(const IntMatrix& m) {
  const SmithDecomposition snf = smith_normal_form(m);
  const std::size_t k = m.cols() - snf.rank;
  if (k == 0) return {};
  IntMatrix basis(k, m.cols());
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) basis(i, j) = snf.V(j, snf.rank + i);
  const HermiteDecomposition hnf = hermite_normal_form(basis);
  std::vector<IntVector> out;
  for (std::size_t i = 0; i < hnf.rank; ++i) out.push_back(hnf.H.row(i));
  return out;
}

std::size_t rank(const IntMatrix& m) { return smith_normal_form(m).rank; }

BigInt determinant(const IntMatrix& m) {
  if (!m.is_square()) throw Error(ErrorKind::InvalidArgument, "determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  // Fraction-free Bareiss elimination.
  IntMatrix a = m;
  BigInt sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      swap_rows(a, k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = t;
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

bool is_unimodular(const IntMatrix& m) {
  if (!m.is_square()) return false;
  return abs(determinant(m)) == 1;
}

namespace {

// Reduced row echelon form of [A | B] over Q, returning pivot columns of A.
std::vector<std::size_t> rref(std::vector<RatVector>& aug, std::size_t a_cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  const std::size_t rows = aug.size();
  for (std::size_t c = 0; c < a_cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && aug[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(aug[r], aug[p]);
    const Rational inv = 1 / aug[r][c];
    for (auto& x : aug[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || aug[i][c] == 0) continue;
      const Rational f = aug[i][c];
      for (std::size_t j = c; j < aug[i].size(); ++j) aug[i][j] -= f * aug[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::optional<std::vector<RatVector>> rational_inverse(const IntMatrix& m) {
  if (!m.is_square()) return std::nullopt;
  const std::size_t n = m.rows();
  return solve_unique(m, IntMatrix::identity(n));
}

std::optional<std::vector<RatVector>> solve_unique(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows()) throw Error(ErrorKind::InvalidArgument, "solve: row mismatch");
  const std::size_t n = a.cols();
  const std::size_t k = b.cols();
  std::vector<RatVector> aug(a.rows(), RatVector(n + k));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = a(i, j);
    for (std::size_t j = 0; j < k; ++j) aug[i][n + j] = b(i, j);
  }
  const auto pivots = rref(aug, n);
  if (pivots.size() != n) return std::nullopt;
  for (std::size_t i = n; i < aug.size(); ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (aug[i][n + j] != 0) return std::nullopt;
  std::vector<RatVector> x(n, RatVector(k));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < k; ++j) x[i][j] = aug[i][n + j];
  return x;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t to_int64(const BigInt& v) {
  if (!v.fits_slong_p()) throw std::overflow_error("integer does not fit in 64 bits");
  return v.get_si();
}

}  // namespace vkt
