#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "solchar/characters.hpp"
#include "solchar/fpmod.hpp"
#include "solchar/lattice.hpp"

namespace solchar {

/// (maximal class, conjugate index) pairs from pairwise distinct classes.
using MaximalFamily = std::vector<std::pair<std::size_t, std::size_t>>;

enum class IntersectionKind { Complete, Regular };

struct IntersectionWitness {
  Subgroup subgroup; // the intersection of the family members
  std::size_t lattice_class = 0;
  MaximalFamily family;
  IntersectionKind kind = IntersectionKind::Complete;
};

/// Complete and regular intersections of one group. Results are computed
/// on first use and kept; the object is not safe for concurrent mutation.
class Intersections {
public:
  explicit Intersections(LatticePtr lattice);

  Lattice const &lattice() const { return *lattice_; }
  GroupPtr const &group() const { return lattice_->group(); }

  /// G is p-solvable for every prime p dividing |G:M|.
  bool admissible(std::size_t maximal_class) const;

  /// Transitivity of G on the product of the coset spaces, via
  /// [prod (1_{M_i})^G, 1] = 1. Throws SolvabilityHypothesisFailed for an
  /// inadmissible class and NotSubgroup for a repeated or non-maximal one.
  bool is_complete_family(std::vector<std::size_t> const &classes) const;

  /// Subgroup U realizing a complete family: representatives intersected one
  /// class at a time, each time with the first conjugate giving the full
  /// index drop.
  IntersectionWitness realize(std::vector<std::size_t> const &classes) const;

  /// One witness per conjugacy class of complete intersections, in lattice
  /// class order (the last one is G, from the empty family).
  std::vector<IntersectionWitness> const &complete_intersections() const;
  std::optional<IntersectionWitness> complete_witness(std::size_t lattice_class) const;

  /// A regular family intersecting exactly to U, if one exists.
  std::optional<IntersectionWitness> is_regular(ElementSet const &U) const;

  FpModule const &x_module_of(std::size_t maximal_class) const;
  /// X_a is isomorphic neither to X_b nor to its dual.
  bool modules_independent(std::size_t a, std::size_t b) const;

  /// Complete intersections on which chi has no zeros.
  std::vector<IntersectionWitness> frak_M(ClassFunction const &chi) const;
  /// The members of frak_M maximal under inclusion up to conjugacy.
  std::vector<IntersectionWitness> frak_M0(ClassFunction const &chi) const;

  /// (1_{M})^G for a maximal class, as integers per G-class.
  std::vector<std::int64_t> const &permutation_values(std::size_t maximal_class) const;

private:
  LatticePtr lattice_;
  std::vector<std::size_t> maximal_;
  std::map<std::size_t, std::vector<std::int64_t>> perm_;
  mutable std::optional<std::vector<IntersectionWitness>> complete_;
  mutable std::map<std::size_t, std::unique_ptr<FpModule>> modules_;
  mutable std::map<std::pair<std::size_t, std::size_t>, bool> independent_;

  std::size_t index_of(std::size_t maximal_class) const;
  void check_family(std::vector<std::size_t> const &classes) const;
};

} // namespace solchar
