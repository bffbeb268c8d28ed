#pragma once

#include <cstdint>
#include <vector>

#include "solchar/group.hpp"

namespace solchar {

/// Subset of a group's element indices, stored as a bitset.
class ElementSet {
public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe);
  ElementSet(std::size_t universe, std::vector<Elem> const &members);

  std::size_t universe() const { return universe_; }
  std::size_t count() const;
  bool empty() const { return count() == 0; }
  bool contains(Elem x) const { return (words_[x >> 6] >> (x & 63)) & 1u; }
  void insert(Elem x) { words_[x >> 6] |= std::uint64_t(1) << (x & 63); }
  void erase(Elem x) { words_[x >> 6] &= ~(std::uint64_t(1) << (x & 63)); }

  std::vector<Elem> elements() const;
  bool is_subset_of(ElementSet const &other) const;
  ElementSet operator&(ElementSet const &other) const;
  ElementSet operator|(ElementSet const &other) const;

  std::vector<std::uint64_t> const &words() const { return words_; }

  friend bool operator==(ElementSet const &, ElementSet const &) = default;
  /// Smaller sets first; equal sizes compare by the smallest element of the
  /// symmetric difference, the set holding it being smaller.
  friend bool operator<(ElementSet const &a, ElementSet const &b);

private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(ElementSet const &s) const noexcept;
};

struct Subgroup {
  GroupPtr parent;
  ElementSet members;
  std::vector<Elem> generators;
  std::int64_t id = -1;

  std::size_t order() const { return members.count(); }
  bool contains(Elem x) const { return members.contains(x); }
};

/// Membership set of the subgroup generated by `gens`.
ElementSet closure(Group const &G, std::vector<Elem> const &gens);
/// Closure of `base` (already a subgroup) with further generators.
ElementSet closure(Group const &G, ElementSet const &base, std::vector<Elem> const &gens);

bool is_subgroup(Group const &G, ElementSet const &s);
bool is_normal(Group const &G, ElementSet const &s);

/// A short generating list, built greedily from elements of largest order.
std::vector<Elem> generating_set(Group const &G, ElementSet const &s);

Subgroup make_subgroup(GroupPtr const &G, ElementSet members);
Subgroup whole_group(GroupPtr const &G);
Subgroup trivial_subgroup(GroupPtr const &G);

ElementSet conjugate_set(Group const &G, ElementSet const &s, Elem g);
Subgroup conjugate(Subgroup const &H, Elem g);

Subgroup centralizer(GroupPtr const &G, Elem x);
ElementSet centralizer_of_set(Group const &G, ElementSet const &s);
ElementSet normalizer(Group const &G, ElementSet const &H);
ElementSet core(Group const &G, ElementSet const &H);
Subgroup core(Subgroup const &H);
ElementSet center(Group const &G);
ElementSet derived_subgroup(Group const &G, ElementSet const &H);
/// Subgroup generated by the commutators [a,b], a in A, b in B.
ElementSet commutator_subgroup(Group const &G, ElementSet const &A, ElementSet const &B);
/// Product set AB, which is a subgroup when A or B is normal.
ElementSet product_set(Group const &G, ElementSet const &A, ElementSet const &B);

bool is_solvable(Group const &G);

struct Quotient {
  GroupPtr group;
  /// projection[g] = image of g in the quotient
  std::vector<Elem> projection;
};

Quotient quotient_group(GroupPtr const &G, Subgroup const &N);

/// H as a standalone group together with its element map into the parent.
struct Embedding {
  GroupPtr group;
  std::vector<Elem> to_parent;
};

Embedding embed(Subgroup const &H);

} // namespace solchar
