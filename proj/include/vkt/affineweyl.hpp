#pragma once

// The extended affine Weyl group Wa = Π ⋊ W acting on Λ^τ ≅ Λ through
// (π, w)·λ = w(λ) + b(π), its sign character, orbit normal forms and
// stabilizers of points of t.

#include <cstddef>
#include <vector>

#include "vkt/rootdata.hpp"
#include "vkt/twist.hpp"
#include "vkt/weight.hpp"

namespace vkt {

struct AffineElement {
  Coweight translation;
  WeylElement w;

  friend bool operator==(const AffineElement& a, const AffineElement& b) {
    return a.translation == b.translation && a.w.on_weights == b.w.on_weights;
  }
  friend bool operator<(const AffineElement& a, const AffineElement& b) {
    if (a.translation != b.translation) return a.translation < b.translation;
    return a.w.on_weights < b.w.on_weights;
  }
};

AffineElement affine_identity(const RootDatum& rd);
/// (π1, w1)(π2, w2) = (π1 + w1 π2, w1 w2).
AffineElement compose(const RootDatum& rd, const AffineElement& g1, const AffineElement& g2);

Weight act(const Twisting& tw, const AffineElement& g, const Weight& l);
/// Action on t: x ↦ w(x) + π.
TorusPoint act_on_torus(const AffineElement& g, const TorusPoint& x);

/// det(w) · (-1)^{ε(π)}.
int sign_character(const Twisting& tw, const AffineElement& g);

struct OrbitReduction {
  bool zero = false;
  Weight representative;     // lex-least orbit point in b([0,1)^n)
  int sign = 1;              // [λ] = sign · [representative]; 0 when zero
  AffineElement witness;     // act(witness, λ) = representative
  std::size_t stabilizer_order = 1;
  bool free() const noexcept { return stabilizer_order == 1; }
};

OrbitReduction orbit_normal_form(const RootDatum& rd, const Twisting& tw, const Weight& l);

/// Canonical representatives of the orbits that survive the sign test,
/// lex-ordered.
std::vector<Weight> enumerate_basis_orbits(const RootDatum& rd, const Twisting& tw);

struct OrbitCensus {
  std::vector<Weight> basis;        // surviving orbits
  std::size_t orbits = 0;           // all Wa-orbits on Λ^τ
  std::size_t free_orbits = 0;
  // Orbits with a nontrivial stabilizer on which the sign character is
  // trivial: these survive the sign test but are not free.
  std::vector<Weight> sign_trivial_nonfree;
};

OrbitCensus orbit_census(const RootDatum& rd, const Twisting& tw);

/// All points of Λ in the half-open box b([0,1)^n), lex-ordered.
std::vector<Weight> box_points(const RootDatum& rd, const Twisting& tw);

/// Affine reflections through the walls containing x, one per simple root of
/// R_x = {α : <α, x> ∈ Z}; they generate Stab_Wa(x).
std::vector<AffineElement> stabilizer_generators(const RootDatum& rd, const TorusPoint& x);

/// Every (π, w) with w(x) + π = x, by running over W.
std::vector<AffineElement> stabilizer_brute_force(const RootDatum& rd, const TorusPoint& x);

/// Subgroup generated by `gens` (assumed finite), sorted.
std::vector<AffineElement> generated_subgroup(const RootDatum& rd,
                                              const std::vector<AffineElement>& gens);

}  // namespace vkt
