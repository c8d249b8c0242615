#pragma once

// Small fixed-rank integer vectors and matrices for weights (Λ) and coweights
// (Π). Coordinates stay tiny at desk scale, so these use int64 with overflow
// checks in the matrix action; the arbitrary-precision engine lives in
// zlattice.hpp.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace vkt {

template <class Tag>
class LatticeVec {
 public:
  LatticeVec() = default;
  explicit LatticeVec(std::size_t n) : coords_(n, 0) {}
  explicit LatticeVec(std::vector<std::int64_t> c) : coords_(std::move(c)) {}
  LatticeVec(std::initializer_list<std::int64_t> c) : coords_(c) {}

  std::size_t size() const noexcept { return coords_.size(); }
  std::int64_t operator[](std::size_t i) const { return coords_[i]; }
  std::int64_t& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<std::int64_t>& coords() const noexcept { return coords_; }

  bool is_zero() const {
    for (auto v : coords_)
      if (v != 0) return false;
    return true;
  }

  LatticeVec& operator+=(const LatticeVec& o) {
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
    return *this;
  }
  LatticeVec& operator-=(const LatticeVec& o) {
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
  }
  friend LatticeVec operator+(LatticeVec a, const LatticeVec& b) { return a += b; }
  friend LatticeVec operator-(LatticeVec a, const LatticeVec& b) { return a -= b; }
  friend LatticeVec operator-(LatticeVec a) {
    for (auto& v : a.coords_) v = -v;
    return a;
  }
  friend LatticeVec operator*(std::int64_t k, LatticeVec a) {
    for (auto& v : a.coords_) v *= k;
    return a;
  }

  friend auto operator<=>(const LatticeVec&, const LatticeVec&) = default;
  friend bool operator==(const LatticeVec&, const LatticeVec&) = default;

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(coords_[i]);
    }
    return s;
  }

 private:
  std::vector<std::int64_t> coords_;
};

using Weight = LatticeVec<struct WeightTag>;
using Coweight = LatticeVec<struct CoweightTag>;

inline std::int64_t pairing(const Weight& l, const Coweight& p) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < l.size(); ++i) s += l[i] * p[i];
  return s;
}

/// Square int64 matrix acting on column vectors.
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t n) : n_(n), a_(n * n, 0) {}
  SquareMatrix(std::size_t n, std::vector<std::int64_t> entries);

  static SquareMatrix identity(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return a_[r * n_ + c]; }
  std::int64_t& operator()(std::size_t r, std::size_t c) { return a_[r * n_ + c]; }
  const std::vector<std::int64_t>& entries() const noexcept { return a_; }

  SquareMatrix transpose() const;
  std::int64_t determinant() const;

  template <class Tag>
  LatticeVec<Tag> apply(const LatticeVec<Tag>& v) const {
    LatticeVec<Tag> out(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      std::int64_t s = 0;
      for (std::size_t j = 0; j < n_; ++j) s = checked_fma(s, a_[i * n_ + j], v[j]);
      out[i] = s;
    }
    return out;
  }

  friend SquareMatrix operator*(const SquareMatrix& x, const SquareMatrix& y);
  friend auto operator<=>(const SquareMatrix&, const SquareMatrix&) = default;
  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  static std::int64_t checked_fma(std::int64_t acc, std::int64_t a, std::int64_t b);

  std::size_t n_ = 0;
  std::vector<std::int64_t> a_;
};

}  // namespace vkt
