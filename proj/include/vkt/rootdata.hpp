#pragma once

// Root data of connected compact Lie groups with torsion-free π₁: lattices,
// roots and coroots, Weyl group, dominant chamber, weight multiplicities and
// tensor product decomposition in R(G).
//
// Coordinates: Λ and Π are both Z^n with dual bases, so the pairing is the dot
// product. Simple factors use the fundamental-weight basis on Λ and the simple
// coroot basis on Π; torus factors use the standard basis of Z^k on both sides;
// U(n) uses the standard basis e_1..e_n on both sides.

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "vkt/weight.hpp"
#include "vkt/zlattice.hpp"

namespace vkt {

/// Textual group description, as read from a spec file or the command line.
struct GroupSpec {
  std::string name;                         // e.g. "SU(2) x U(1)"
  std::optional<IntMatrix> cartan;          // a_ij = <alpha_i^vee, alpha_j>
  std::size_t torus_rank = 0;               // extra torus block
  std::optional<IntMatrix> torus_form;      // symmetric form on that block
  std::optional<IntMatrix> simple_roots;    // rows, Λ coordinates
  std::optional<IntMatrix> simple_coroots;  // rows, Π coordinates

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

struct Root {
  Weight weight;                       // Λ coordinates
  Coweight coroot;                     // Π coordinates
  std::vector<std::int64_t> simple;    // coefficients on the simple roots
  bool positive = false;
  std::int64_t height = 0;
};

/// A connected component of the Dynkin diagram.
struct SimpleComponent {
  std::string name;
  std::vector<std::size_t> simple;  // indices of its simple roots
  std::size_t highest_root = 0;     // index into RootDatum::roots()
  std::int64_t dual_coxeter = 0;    // <rho, theta^vee> + 1
  // Lattice coordinates and basic form (Π-block -> Λ-block). Empty for
  // explicitly supplied lattices, which carry no preferred splitting.
  std::vector<std::size_t> coords;
  std::optional<IntMatrix> kappa;
};

enum class BlockKind { Simple, Torus, Unitary, Explicit };

/// A direct summand of the lattice as the group was described: one named
/// factor, a torus block, or explicitly supplied data.
struct Block {
  BlockKind kind = BlockKind::Simple;
  std::string name;
  std::vector<std::size_t> coords;        // lattice coordinates it occupies
  std::vector<std::size_t> components;    // Dynkin components inside it
  std::optional<IntMatrix> form;          // Torus: its form; Unitary: identity
};

struct WeylElement {
  SquareMatrix on_weights;
  SquareMatrix on_coweights;
  int det = 1;
  std::vector<int> word;  // s_{word[0]} s_{word[1]} ... (rightmost acts first)

  Weight apply(const Weight& l) const { return on_weights.apply(l); }
  Coweight apply(const Coweight& p) const { return on_coweights.apply(p); }
  bool is_identity() const { return word.empty(); }
};

class RootDatum {
 public:
  static constexpr std::size_t kDefaultWeylBound = 1'000'000;

  std::size_t rank() const noexcept { return rank_; }
  std::size_t semisimple_rank() const noexcept { return simple_roots_.size(); }
  const std::string& description() const noexcept { return description_; }

  const std::vector<Weight>& simple_roots() const noexcept { return simple_roots_; }
  const std::vector<Coweight>& simple_coroots() const noexcept { return simple_coroots_; }
  const IntMatrix& cartan() const noexcept { return cartan_; }
  const std::vector<std::int64_t>& symmetrizer() const noexcept { return symmetrizer_; }

  const std::vector<Root>& roots() const noexcept { return roots_; }
  const std::vector<std::size_t>& positive_roots() const noexcept { return positive_; }
  const std::vector<SimpleComponent>& components() const noexcept { return components_; }
  const std::vector<Block>& blocks() const noexcept { return blocks_; }

  /// 2ρ, the sum of the positive roots.
  const Weight& two_rho() const noexcept { return two_rho_; }
  bool rho_integral() const noexcept { return rho_integral_; }
  /// Integral weight with <rho~, alpha_i^vee> = 1 for every simple coroot.
  const Weight& rho_tilde() const noexcept { return rho_tilde_; }
  const std::string& rho_tilde_rule() const noexcept { return rho_tilde_rule_; }
  bool simply_connected() const noexcept { return semisimple_rank() == rank_; }

  const SquareMatrix& reflection_on_weights(std::size_t i) const { return gen_weights_[i]; }
  const SquareMatrix& reflection_on_coweights(std::size_t i) const { return gen_coweights_[i]; }

  /// W-invariant integral inner product on the root lattice, (alpha_i, alpha_j).
  std::int64_t root_form(std::size_t i, std::size_t j) const { return root_form_[i][j]; }

  std::vector<std::int64_t> dynkin_labels(const Weight& l) const;
  bool is_dominant(const Weight& l) const;

  /// Enumerates W by closure under the simple reflections; cached after the
  /// first successful call. Throws GroupTooLarge past `bound` elements.
  const std::vector<WeylElement>& weyl_group(std::size_t bound = kDefaultWeylBound) const;
  std::optional<std::size_t> weyl_index(const SquareMatrix& on_weights) const;
  /// The reflection s_alpha for roots()[root_index].
  const WeylElement& reflection(std::size_t root_index) const;
  WeylElement compose(const WeylElement& a, const WeylElement& b) const;
  WeylElement inverse(const WeylElement& w) const;

 private:
  friend RootDatum root_datum_from_spec(const GroupSpec& spec);

  struct WeylCache;

  std::size_t rank_ = 0;
  std::string description_;
  std::vector<Weight> simple_roots_;
  std::vector<Coweight> simple_coroots_;
  IntMatrix cartan_;
  std::vector<std::int64_t> symmetrizer_;
  std::vector<std::vector<std::int64_t>> root_form_;
  std::vector<Root> roots_;
  std::vector<std::size_t> positive_;
  std::vector<SimpleComponent> components_;
  std::vector<Block> blocks_;
  Weight two_rho_;
  bool rho_integral_ = true;
  Weight rho_tilde_;
  std::string rho_tilde_rule_;
  std::vector<SquareMatrix> gen_weights_;
  std::vector<SquareMatrix> gen_coweights_;
  std::shared_ptr<WeylCache> weyl_;
};

/// Builds and validates a root datum. Errors: NotTorsionFreePi1,
/// InvalidCartanData, InvalidArgument for unknown names.
RootDatum root_datum_from_spec(const GroupSpec& spec);
RootDatum root_datum_from_name(const std::string& name);

const std::vector<WeylElement>& weyl_group_elements(
    const RootDatum& rd, std::size_t bound = RootDatum::kDefaultWeylBound);

struct DominantForm {
  Weight dominant;  // w(λ)
  WeylElement w;
  int sign = 1;     // det(w)
  bool on_wall = false;  // λ is fixed by some reflection
};

DominantForm dominant_representative(const RootDatum& rd, const Weight& l);

using WeightMultiset = std::map<Weight, std::int64_t>;

/// Full weight system of V_λ (Freudenthal). λ must be dominant.
WeightMultiset weight_multiplicities(const RootDatum& rd, const Weight& l);

/// Weyl dimension formula.
BigInt weyl_dimension(const RootDatum& rd, const Weight& l);

/// V_λ ⊗ V_μ by Brauer–Klimyk over the smaller factor.
WeightMultiset tensor_decompose(const RootDatum& rd, const Weight& l, const Weight& m);

}  // namespace vkt
