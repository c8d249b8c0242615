#include "vkt/weight.hpp"

#include <stdexcept>

#include "vkt/error.hpp"
#include "vkt/zlattice.hpp"

namespace vkt {

SquareMatrix::SquareMatrix(std::size_t n, std::vector<std::int64_t> entries)
    : n_(n), a_(std::move(entries)) {
  if (a_.size() != n * n) throw Error(ErrorKind::InvalidArgument, "SquareMatrix: wrong entry count");
}

SquareMatrix SquareMatrix::identity(std::size_t n) {
  SquareMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

SquareMatrix SquareMatrix::transpose() const {
  SquareMatrix t(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

std::int64_t SquareMatrix::determinant() const {
  IntMatrix m(n_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) m(i, j) = static_cast<long>((*this)(i, j));
  return to_int64(vkt::determinant(m));
}

SquareMatrix operator*(const SquareMatrix& x, const SquareMatrix& y) {
  if (x.n_ != y.n_) throw Error(ErrorKind::InvalidArgument, "SquareMatrix: size mismatch");
  SquareMatrix out(x.n_);
  for (std::size_t i = 0; i < x.n_; ++i)
    for (std::size_t k = 0; k < x.n_; ++k) {
      const std::int64_t xik = x(i, k);
      if (xik == 0) continue;
      for (std::size_t j = 0; j < x.n_; ++j)
        out(i, j) = SquareMatrix::checked_fma(out(i, j), xik, y(k, j));
    }
  return out;
}

std::int64_t SquareMatrix::checked_fma(std::int64_t acc, std::int64_t a, std::int64_t b) {
  std::int64_t prod = 0;
  std::int64_t sum = 0;
  if (__builtin_mul_overflow(a, b, &prod) || __builtin_add_overflow(acc, prod, &sum))
    throw std::overflow_error("int64 overflow in lattice action");
  return sum;
}

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NotTorsionFreePi1: return "NotTorsionFreePi1";
    case ErrorKind::InvalidCartanData: return "InvalidCartanData";
    case ErrorKind::GroupTooLarge: return "GroupTooLarge";
    case ErrorKind::Degenerate: return "Degenerate";
    case ErrorKind::NotEquivariant: return "NotEquivariant";
    case ErrorKind::InvalidTwist: return "InvalidTwist";
    case ErrorKind::NotPrimitive: return "NotPrimitive";
    case ErrorKind::NotATorus: return "NotATorus";
    case ErrorKind::Parse: return "ParseError";
  }
  return "Unknown";
}

}  // namespace vkt
