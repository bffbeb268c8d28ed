#pragma once

#include <memory>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "solchar/subgroup.hpp"

namespace solchar {

inline constexpr std::size_t kDefaultClassCap = 5000;

struct SubgroupClass {
  Subgroup representative; // least conjugate in ElementSet order
  std::vector<ElementSet> conjugates; // conjugates[0] is the representative
  std::vector<Elem> conjugators;      // representative^conjugators[i] == conjugates[i]
  ElementSet normalizer;              // of the representative
  std::size_t class_size() const { return conjugates.size(); }
  std::size_t order() const { return representative.order(); }
};

struct ChiefSeries {
  std::vector<Subgroup> chain; // 1 = chain[0] < ... < chain.back() = G
};

enum class CoverAvoid { Covers, Avoids, Neither };

/// Subgroups of G up to conjugacy. Classes are sorted by order and then by
/// representative, so class 0 is the trivial subgroup and the last class
/// is G.
class Lattice {
public:
  static std::shared_ptr<Lattice const> build(GroupPtr G, std::size_t class_cap = kDefaultClassCap);

  GroupPtr const &group() const { return G_; }
  std::vector<SubgroupClass> const &classes() const { return classes_; }
  SubgroupClass const &operator[](std::size_t c) const { return classes_[c]; }
  std::size_t size() const { return classes_.size(); }
  std::size_t total_subgroups() const { return index_.size(); }

  /// (class, conjugate) of a subgroup given by its members.
  std::optional<std::pair<std::size_t, std::size_t>> locate(ElementSet const &s) const;
  std::size_t class_of(ElementSet const &s) const;

  /// Some conjugate of class c lies inside the representative of class d.
  bool class_below(std::size_t c, std::size_t d) const;
  /// Indices of the conjugates of class c containing the subgroup s.
  std::vector<std::size_t> conjugates_containing(std::size_t c, ElementSet const &s) const;

  std::vector<std::size_t> const &maximal_classes() const { return maximal_; }
  /// Normal subgroups as class indices, in class order.
  std::vector<std::size_t> const &normal_classes() const { return normal_; }
  std::vector<Subgroup> normal_subgroups() const;
  ChiefSeries const &chief_series() const { return chief_; }
  bool is_solvable() const { return solvable_; }
  bool is_p_solvable(std::uint64_t p) const;

private:
  GroupPtr G_;
  std::vector<SubgroupClass> classes_;
  std::unordered_map<ElementSet, std::pair<std::size_t, std::size_t>, ElementSetHash> index_;
  std::vector<std::size_t> maximal_;
  std::vector<std::size_t> normal_;
  ChiefSeries chief_;
  bool solvable_ = true;

  void enumerate(std::size_t class_cap);
  void derive();
};

using LatticePtr = std::shared_ptr<Lattice const>;

/// Requires L, K normal in U's parent with K/L a chief factor.
CoverAvoid cover_or_avoid(Subgroup const &U, Subgroup const &K, Subgroup const &L);

/// True when no normal subgroup of G lies strictly between L and K.
bool is_chief_factor(Group const &G, ElementSet const &K, ElementSet const &L);

bool is_p_solvable(ChiefSeries const &series, std::uint64_t p);

} // namespace solchar
