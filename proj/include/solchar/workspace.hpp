#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "solchar/intersections.hpp"
#include "solchar/predicates.hpp"

namespace solchar {

struct Caps {
  std::size_t max_order = kDefaultOrderCap;
  std::size_t max_subgroup_classes = kDefaultClassCap;
  double seconds_per_group = 0; // 0 disables the budget
};

/// Everything computed about one group, shared by all verifiers. Not safe
/// for concurrent use; the harness gives each group its own workspace.
class Workspace {
public:
  static std::shared_ptr<Workspace> create(GroupPtr G, Caps const &caps = {});

  GroupPtr const &group() const { return G_; }
  Lattice const &lattice() const { return *L_; }
  LatticePtr const &lattice_ptr() const { return L_; }
  CharacterTable const &table() const { return *T_; }
  TableCache const &cache() const { return *cache_; }
  Intersections const &intersections() const { return *inter_; }
  Caps const &caps() const { return caps_; }

  std::size_t num_characters() const { return T_->size(); }
  ClassFunction const &chi(std::size_t i) const { return (*T_)[i]; }
  std::int64_t degree(std::size_t i) const { return T_->degree(i); }

  bool quasi_primitive(std::size_t i) const;
  bool strongly_irreducible(std::size_t i) const;
  /// G is p-solvable for every prime p dividing chi_i(1).
  bool pi_solvable(std::size_t i) const;
  ElementSet const &center_of_character(std::size_t i) const;
  ElementSet const &kernel_of_character(std::size_t i) const;
  /// chi_i(x) conj(chi_i(x)) per class.
  std::vector<Cyclotomic> const &norm_values(std::size_t i) const;

  /// (1_U)^G per class for a lattice class U.
  std::vector<std::int64_t> const &permutation_values(std::size_t c) const;
  /// Lattice classes U with chi_i conj(chi_i) = (1_U)^G.
  std::vector<std::size_t> const &permutation_equation_classes(std::size_t i) const;
  /// Regular witness for a lattice class, computed once.
  std::optional<IntersectionWitness> const &regular_witness(std::size_t c) const;
  std::vector<IntersectionWitness> const &frak_M0(std::size_t i) const;

  /// Workspace of a subgroup class representative, with element maps.
  struct Sub {
    std::shared_ptr<Workspace> ws;
    EmbeddedSubgroup embedded; // embedded.group() == ws->group()
    std::vector<std::int64_t> from_parent; // -1 outside the subgroup
  };
  Sub const &subgroup_workspace(std::size_t c) const;

  /// Restriction of chi_i to the subgroup workspace of class c.
  ClassFunction restrict_character(std::size_t i, std::size_t c) const;
  /// Parent-indexed set mapped into the subgroup's element indices.
  ElementSet to_subgroup(Sub const &sub, ElementSet const &s) const;
  ElementSet from_subgroup(Sub const &sub, ElementSet const &s) const;

  /// Throws ResourceCap once the configured wall-clock budget is spent.
  void check_budget() const;

private:
  GroupPtr G_;
  LatticePtr L_;
  TablePtr T_;
  std::unique_ptr<TableCache> cache_;
  std::unique_ptr<Intersections> inter_;
  Caps caps_;
  double started_ = 0;

  mutable std::map<std::size_t, bool> qp_, si_;
  mutable std::map<std::size_t, ElementSet> center_, kernel_;
  mutable std::map<std::size_t, std::vector<Cyclotomic>> norms_;
  mutable std::map<std::size_t, std::vector<std::int64_t>> perm_;
  mutable std::map<std::size_t, std::vector<std::size_t>> equation_;
  mutable std::map<std::size_t, std::optional<IntersectionWitness>> regular_;
  mutable std::map<std::size_t, std::vector<IntersectionWitness>> m0_;
  mutable std::map<std::size_t, std::unique_ptr<Sub>> subs_;
};

double monotonic_seconds();

} // namespace solchar
