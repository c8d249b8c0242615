#pragma once

// The Verlinde ring of a twisting: basis of free Wa-orbits, the fusion
// product, Verlinde conjugacy classes, the ideal I^τ, the map "multiply by U",
// the distributions δ_f and the pushforward from a torus.

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "vkt/affineweyl.hpp"
#include "vkt/cyclo.hpp"
#include "vkt/rootdata.hpp"
#include "vkt/twist.hpp"

namespace vkt {

/// Finite Z-combination of canonical orbit representatives.
struct KClass {
  std::map<Weight, std::int64_t> support;

  bool is_zero() const noexcept { return support.empty(); }
  void add(const Weight& rep, std::int64_t c);
  KClass& operator+=(const KClass& o);
  friend bool operator==(const KClass&, const KClass&) = default;
};

struct VerlindeClass {
  TorusPoint point;  // lex-least point of its W-orbit in [0,1)^n
  std::size_t orbit_size = 0;
};

/// Free W-orbits on F_ε, one representative each, sorted.
std::vector<VerlindeClass> verlinde_classes(const RootDatum& rd, const Twisting& tw);

/// Combination Σ c_λ [V_λ] in R(G), keyed by dominant weights.
using RepCombination = std::map<Weight, std::int64_t>;

class FusionRing {
 public:
  FusionRing(RootDatum rd, Twisting tw);

  const RootDatum& root_datum() const noexcept { return rd_; }
  const Twisting& twisting() const noexcept { return tw_; }
  std::size_t size() const noexcept { return basis_.size(); }
  /// Canonical orbit representatives, lex-ordered.
  const std::vector<Weight>& basis() const noexcept { return basis_; }
  /// Dominant λ_a with λ_a + ρ̃ in the fundamental alcove and in orbit a.
  const std::vector<Weight>& transversal() const noexcept { return transversal_; }
  /// [V_{λ_a}] = sign_a · [basis_a].
  const std::vector<int>& basis_signs() const noexcept { return signs_; }
  const Weight& rho_tilde() const noexcept { return rd_.rho_tilde(); }
  /// Index of the class of the trivial representation; none when that class
  /// is zero.
  std::optional<std::size_t> unit() const noexcept { return unit_; }
  std::optional<std::size_t> index_of(const Weight& rep) const;

  const std::vector<VerlindeClass>& classes() const;
  /// Common order of the roots of unity met at the Verlinde classes.
  std::int64_t class_order() const;

  /// orbit_normal_form(λ + ρ̃) as a KClass.
  KClass class_from_weight(const Weight& l) const;
  /// Coefficients in the distinguished basis {[V_{λ_a}]}.
  std::vector<std::int64_t> coordinates(const KClass& k) const;
  KClass from_coordinates(const std::vector<std::int64_t>& c) const;

  /// [V_{λ_a}] · [V_{λ_b}]. Throws NotPrimitive unless the twisting is primitive.
  KClass fusion_product(std::size_t a, std::size_t b) const;
  /// N_{ab}^c in the distinguished basis; filled once, then shared.
  const std::vector<std::vector<std::vector<std::int64_t>>>& structure_constants() const;

  /// R(G)-module action: V_ν acting on a class, for any twisting.
  KClass act(const Weight& nu, const KClass& k) const;
  KClass act(const RepCombination& p, const KClass& k) const;

  /// Character of p vanishes at every Verlinde class.
  bool verlinde_ideal_member(const RepCombination& p) const;

  /// Column a is class_from_weight(λ_a) in the canonical basis.
  IntMatrix mult_by_U_matrix() const;

 private:
  RootDatum rd_;
  Twisting tw_;
  std::vector<Weight> basis_;
  std::vector<Weight> transversal_;
  std::vector<int> signs_;
  std::map<Weight, std::size_t> index_;
  std::optional<std::size_t> unit_;
  struct Cache;
  std::shared_ptr<Cache> cache_;
};

/// Dominant weights with Dynkin labels summing to at most `height` and
/// torus-direction coordinates in [-height, height], lex-ordered.
std::vector<Weight> dominant_weights_up_to(const RootDatum& rd, std::int64_t height);

/// Dominant λ found by `dominant_weights_up_to(height)` with V_λ ∈ I^τ.
std::vector<Weight> ideal_generator_candidates(const FusionRing& ring, std::int64_t height);

/// λ = r + b(π) with r in the box b([0,1)^n); returns (r, (-1)^{ε(π)}).
std::pair<Weight, int> reduce_to_box(const Twisting& tw, const Weight& l);

/// Π-equivariant function given by its values on box points.
using BoxFunction = std::map<Weight, std::int64_t>;

/// f(g), extended by f(λ + b(π)) = (-1)^{ε(π)} f(λ).
std::int64_t evaluate_equivariant(const Twisting& tw, const BoxFunction& f, const Weight& g);

/// The Wa-equivariant function whose class is k.
BoxFunction equivariant_function(const FusionRing& ring, const KClass& k);

/// (1/|F|) Σ_{λ ∈ F^τ, x ∈ F_ε} f(λ) λ^{-1}(x) g(x), exactly.
Rational delta_eval(const RootDatum& rd, const Twisting& tw, const BoxFunction& f, const Weight& g);
/// Same sum over W-regular λ and W-regular x only.
Rational delta_eval_regular(const RootDatum& rd, const Twisting& tw, const BoxFunction& f,
                            const Weight& g);

/// Image of λ ∈ R(T) in K^τ_T(T). Throws NotATorus when rd has roots.
KClass torus_pushforward(const RootDatum& rd, const Twisting& tw, const Weight& l);

}  // namespace vkt
