#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace solchar {

using Point = std::uint32_t;

/// A permutation of {0, ..., degree-1}. Products act on the right:
/// x^(g*h) = (x^g)^h, so `g * h` applies g first.
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);

  /// Builds a permutation from disjoint cycles. Points are 1-based when
  /// `one_based` is set, as in the group file format.
  static Permutation from_cycles(std::size_t degree,
                                 std::vector<std::vector<std::int64_t>> const &cycles,
                                 bool one_based);

  std::size_t degree() const { return images_.size(); }
  Point operator[](std::size_t x) const { return images_[x]; }
  std::vector<Point> const &images() const { return images_; }

  Permutation operator*(Permutation const &rhs) const;
  Permutation inverse() const;
  bool is_identity() const;

  /// Same permutation on a larger point set, moved up by `shift` points.
  Permutation embedded(std::size_t degree, std::size_t shift) const;

  /// Nontrivial cycles, 0-based, each starting at its smallest point.
  std::vector<std::vector<Point>> cycles() const;
  std::string to_cycle_string(bool one_based = true) const;

  friend bool operator==(Permutation const &, Permutation const &) = default;

private:
  std::vector<Point> images_;
};

struct PermutationHash {
  std::size_t operator()(Permutation const &p) const noexcept;
};

} // namespace solchar
