#pragma once

// Twisting data (b, ε): the W-equivariant injection b: Π -> Λ, the grading
// ε: Π -> Z/2, the finite group F = Λ/b(Π) and the points F_ε of the torus.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vkt/rootdata.hpp"
#include "vkt/weight.hpp"
#include "vkt/zlattice.hpp"

namespace vkt {

/// Rational point of t = Π ⊗ R, usually reduced modulo Π into [0,1)^n.
struct TorusPoint {
  RatVector coords;

  std::size_t size() const noexcept { return coords.size(); }
  TorusPoint reduced() const;
  /// Least common denominator of the coordinates.
  std::int64_t denominator() const;
  std::string to_string() const;

  friend bool operator==(const TorusPoint&, const TorusPoint&) = default;
  friend bool operator<(const TorusPoint& a, const TorusPoint& b) { return a.coords < b.coords; }
};

/// x ↦ w(x) for w given by its matrix on Π.
TorusPoint apply(const SquareMatrix& on_coweights, const TorusPoint& x);

/// One integer level multiplies one basic form: a simple Dynkin component,
/// a U(n) factor or a torus block.
struct LevelSlot {
  std::string name;
  BlockKind kind = BlockKind::Simple;
  std::vector<std::size_t> coords;
  IntMatrix kappa;
  std::int64_t dual_coxeter = 0;  // 0 for tori
};

std::vector<LevelSlot> level_slots(const RootDatum& rd);

/// Twist as written in a spec file.
struct TwistSpec {
  std::vector<std::int64_t> levels;
  bool dual_coxeter_shift = false;
  std::optional<IntMatrix> torus;
  std::vector<std::int64_t> epsilon;
  std::optional<IntMatrix> b;

  friend bool operator==(const TwistSpec&, const TwistSpec&) = default;
};

class Twisting {
 public:
  /// Matrix of b: column j is b(e_j) in Λ coordinates.
  const IntMatrix& b() const noexcept { return b_; }
  std::size_t rank() const noexcept { return b_.rows(); }
  const std::vector<std::int64_t>& epsilon() const noexcept { return epsilon_; }
  const FiniteAbelianGroup& F() const noexcept { return F_; }
  const BigInt& det() const noexcept { return det_; }
  /// |F| = |det b|.
  std::int64_t order() const noexcept { return order_; }
  /// ε/2, coordinatewise.
  RatVector lambda_epsilon() const;
  /// Integer levels per slot when built from levels; empty for an explicit b.
  const std::vector<std::int64_t>& levels() const noexcept { return levels_; }
  /// ε(α^vee) = 0 for every coroot.
  bool epsilon_trivial_on_coroots() const noexcept { return eps_coroot_trivial_; }
  bool epsilon_is_zero() const;
  /// ε = 0 and b = ⊕ level·κ on simple components ⊕ an even residual block.
  bool primitive() const noexcept { return primitive_; }

  Weight apply_b(const Coweight& p) const;
  /// ε(π) mod 2.
  int epsilon_parity(const Coweight& p) const;
  /// b^{-1} = inverse_numerator / inverse_denominator.
  std::int64_t inverse_numerator(std::size_t i, std::size_t j) const { return inv_num_[i][j]; }
  std::int64_t inverse_denominator() const noexcept { return inv_den_; }
  TorusPoint preimage(const RatVector& l) const;

 private:
  friend Twisting twisting_from_matrix(const RootDatum& rd, const IntMatrix& b,
                                       const std::vector<std::int64_t>& epsilon);

  IntMatrix b_;
  std::vector<std::vector<std::int64_t>> b64_;
  std::vector<std::int64_t> epsilon_;
  FiniteAbelianGroup F_;
  BigInt det_;
  std::int64_t order_ = 0;
  std::vector<std::int64_t> levels_;
  bool eps_coroot_trivial_ = true;
  bool primitive_ = false;
  std::vector<std::vector<std::int64_t>> inv_num_;
  std::int64_t inv_den_ = 1;

  friend Twisting twisting_from_level(const RootDatum&, const std::vector<std::int64_t>&,
                                      const std::optional<IntMatrix>&,
                                      const std::vector<std::int64_t>&);
};

/// Validated twisting from a matrix. Errors: Degenerate, NotEquivariant,
/// InvalidTwist (shape, asymmetric b, ε not W-invariant mod 2).
Twisting twisting_from_matrix(const RootDatum& rd, const IntMatrix& b,
                              const std::vector<std::int64_t>& epsilon = {});

/// b = ⊕ level_i κ_i. Levels are total twists, one per level slot; when
/// `torus_block` is given it replaces the torus slots and `levels` covers the
/// remaining slots only.
Twisting twisting_from_level(const RootDatum& rd, const std::vector<std::int64_t>& levels,
                             const std::optional<IntMatrix>& torus_block = std::nullopt,
                             const std::vector<std::int64_t>& epsilon = {});

Twisting twisting_from_spec(const RootDatum& rd, const TwistSpec& spec);

/// Adds h^vee to each simple slot; torus slots are unchanged. `loop_levels`
/// indexes all slots, or only the non-torus slots.
std::vector<std::int64_t> shift_by_dual_coxeter(const RootDatum& rd,
                                                const std::vector<std::int64_t>& loop_levels);

/// All x in t/Π with b(x) ≡ λ_ε mod Λ, sorted.
std::vector<TorusPoint> f_epsilon_points(const RootDatum& rd, const Twisting& tw);

/// Degree in which K^τ_G(G) is nonzero, mod 2.
inline int degree_parity(const RootDatum& rd) { return static_cast<int>(rd.rank() % 2); }

}  // namespace vkt
