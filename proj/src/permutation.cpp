#include "solchar/permutation.hpp"

#include <sstream>

#include "solchar/error.hpp"

namespace solchar {

Permutation::Permutation(std::vector<Point> images)
: images_(std::move(images))
{
  std::vector<bool> seen(images_.size(), false);
  for (Point y : images_) {
    if (y >= images_.size() || seen[y])
      throw Error(ErrorKind::InvalidPermutation, "images do not form a bijection");
    seen[y] = true;
  }
}

Permutation Permutation::identity(std::size_t degree)
{
  std::vector<Point> im(degree);
  for (std::size_t i = 0; i < degree; ++i)
    im[i] = static_cast<Point>(i);
  Permutation p;
  p.images_ = std::move(im);
  return p;
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     std::vector<std::vector<std::int64_t>> const &cycles,
                                     bool one_based)
{
  std::vector<Point> im(degree);
  for (std::size_t i = 0; i < degree; ++i)
    im[i] = static_cast<Point>(i);
  std::vector<bool> used(degree, false);
  std::int64_t const offset = one_based ? 1 : 0;

  for (auto const &cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      std::int64_t x = cycle[i] - offset;
      std::int64_t y = cycle[(i + 1) % cycle.size()] - offset;
      if (x < 0 || y < 0 || x >= static_cast<std::int64_t>(degree) ||
          y >= static_cast<std::int64_t>(degree))
        throw Error(ErrorKind::InvalidPermutation, "cycle point out of range");
      if (used[x])
        throw Error(ErrorKind::InvalidPermutation, "cycles are not disjoint");
      used[x] = true;
      im[x] = static_cast<Point>(y);
    }
  }
  return Permutation(std::move(im));
}

Permutation Permutation::operator*(Permutation const &rhs) const
{
  Permutation out;
  out.images_.resize(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x)
    out.images_[x] = rhs.images_[images_[x]];
  return out;
}

Permutation Permutation::inverse() const
{
  Permutation out;
  out.images_.resize(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x)
    out.images_[images_[x]] = static_cast<Point>(x);
  return out;
}

bool Permutation::is_identity() const
{
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (images_[x] != x)
      return false;
  return true;
}

Permutation Permutation::embedded(std::size_t degree, std::size_t shift) const
{
  Permutation out = identity(degree);
  for (std::size_t x = 0; x < images_.size(); ++x)
    out.images_[x + shift] = static_cast<Point>(images_[x] + shift);
  return out;
}

std::vector<std::vector<Point>> Permutation::cycles() const
{
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start)
      continue;
    std::vector<Point> cycle;
    for (Point x = static_cast<Point>(start); !seen[x]; x = images_[x]) {
      seen[x] = true;
      cycle.push_back(x);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::string Permutation::to_cycle_string(bool one_based) const
{
  auto cs = cycles();
  if (cs.empty())
    return "()";
  std::ostringstream os;
  for (auto const &c : cs) {
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i)
      os << (i ? "," : "") << (c[i] + (one_based ? 1 : 0));
    os << ')';
  }
  return os.str();
}

std::size_t PermutationHash::operator()(Permutation const &p) const noexcept
{
  std::size_t h = 1469598103934665603ull;
  for (Point x : p.images())
    h = (h ^ x) * 1099511628211ull;
  return h;
}

} // namespace solchar
