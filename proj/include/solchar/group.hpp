#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "solchar/permutation.hpp"

namespace solchar {

/// Index of a group element. Index 0 is always the identity.
using Elem = std::uint32_t;

inline constexpr std::size_t kDefaultOrderCap = 5000;
inline constexpr std::size_t kHardOrderLimit = 65535;

class Group;
using GroupPtr = std::shared_ptr<Group const>;

struct ConjugacyClass {
  Elem representative = 0;
  std::vector<Elem> members; // sorted
  std::uint64_t centralizer_order = 0;
  std::uint32_t element_order = 1;

  std::size_t size() const { return members.size(); }
};

/// A finite group given by a faithful permutation representation together
/// with its full multiplication table.
///
/// Classes are ordered by (element order, class size, representative), so
/// class 0 is the identity class. The representative of a class is its
/// smallest element index.
class Group {
public:
  static GroupPtr from_generators(std::string name, std::size_t degree,
                                  std::vector<Permutation> const &gens,
                                  std::size_t cap = kDefaultOrderCap);

  /// Closure of `gens` under an abstract associative product on integer
  /// codes. The permutation representation is the right regular one.
  static GroupPtr from_multiplication(std::string name, std::uint64_t identity,
                                      std::vector<std::uint64_t> const &gens,
                                      std::function<std::uint64_t(std::uint64_t, std::uint64_t)> const &mul,
                                      std::size_t cap = kDefaultOrderCap,
                                      std::vector<std::uint64_t> *codes = nullptr);

  /// The subgroup of `parent` generated by `gens`, as a group in its own
  /// right. `to_parent` receives the element map.
  static GroupPtr from_subgroup(std::string name, GroupPtr const &parent,
                                std::vector<Elem> const &gens,
                                std::vector<Elem> *to_parent);

  std::string const &name() const { return name_; }
  std::size_t order() const { return n_; }
  std::size_t degree() const { return degree_; }
  std::uint64_t exponent() const { return exponent_; }
  bool is_abelian() const { return classes_.size() == n_; }

  Elem mul(Elem a, Elem b) const { return table_[std::size_t(a) * n_ + b]; }
  Elem inv(Elem a) const { return inv_[a]; }
  Elem pow(Elem a, std::int64_t m) const;
  /// g^-1 x g
  Elem conj(Elem x, Elem g) const { return mul(mul(inv_[g], x), g); }
  /// a^-1 b^-1 a b
  Elem commutator(Elem a, Elem b) const { return mul(mul(inv_[a], inv_[b]), mul(a, b)); }
  std::uint32_t element_order(Elem a) const { return order_[a]; }

  std::vector<Elem> const &generators() const { return gens_; }
  std::vector<Permutation> generator_permutations() const;

  Permutation permutation(Elem a) const;
  std::optional<Elem> find(Permutation const &p) const;

  std::vector<ConjugacyClass> const &classes() const { return classes_; }
  std::size_t num_classes() const { return classes_.size(); }
  std::size_t class_of(Elem a) const { return class_of_[a]; }
  std::size_t inverse_class(std::size_t c) const { return inverse_class_[c]; }
  std::size_t power_class(std::size_t c, std::int64_t m) const;

  /// x_p: the power of x whose order is the p-part of o(x) and which
  /// agrees with x on the p-primary component.
  Elem p_part(Elem x, std::uint64_t p) const;

private:
  struct Closure;
  static GroupPtr assemble(std::string name, Closure &&c);

  std::string name_;
  std::size_t n_ = 0;
  std::size_t degree_ = 0;
  std::uint64_t exponent_ = 1;
  std::vector<std::uint16_t> table_;
  std::vector<Elem> inv_;
  std::vector<std::uint32_t> order_;
  std::vector<Elem> gens_;
  std::vector<Permutation> gen_perms_;

  // Exactly one permutation source is used: stored images, the right
  // regular action, or the images of the parent group.
  std::vector<Permutation> perms_;
  bool regular_ = false;
  GroupPtr parent_;
  std::vector<Elem> to_parent_;
  std::unordered_map<Permutation, Elem, PermutationHash> lookup_;
  std::unordered_map<Elem, Elem> from_parent_;

  std::vector<ConjugacyClass> classes_;
  std::vector<std::uint32_t> class_of_;
  std::vector<std::uint32_t> inverse_class_;

  void build_classes();
};

} // namespace solchar
