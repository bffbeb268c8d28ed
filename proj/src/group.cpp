#include "solchar/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <tuple>

#include "solchar/error.hpp"
#include "solchar/numtheory.hpp"

namespace solchar {

struct Group::Closure {
  std::size_t degree = 0;
  // rmul[s][e] = index of e * gen_s
  std::vector<std::vector<Elem>> rmul;
  // BFS tree: element j > 0 equals parent[j] * gen_{label[j]}, parent[j] < j.
  std::vector<Elem> parent;
  std::vector<std::uint32_t> label;
  std::vector<Permutation> perms;
  std::vector<Permutation> gen_perms;
  bool regular = false;
  GroupPtr parent_group;
  std::vector<Elem> to_parent;
};

namespace {

template <class Code, class Hash, class Mul>
void saturate(std::vector<Code> &elements, std::vector<Code> const &gens, Mul const &mul,
              std::vector<std::vector<Elem>> &rmul, std::vector<Elem> &parent,
              std::vector<std::uint32_t> &label, std::size_t cap)
{
  std::unordered_map<Code, Elem, Hash> index;
  index.emplace(elements[0], 0);
  parent.assign(1, 0);
  label.assign(1, 0);
  rmul.assign(gens.size(), {});
  for (std::size_t e = 0; e < elements.size(); ++e) {
    for (std::size_t s = 0; s < gens.size(); ++s) {
      Code next = mul(elements[e], gens[s]);
      auto [it, fresh] = index.emplace(std::move(next), static_cast<Elem>(elements.size()));
      if (fresh) {
        if (elements.size() >= cap || elements.size() >= kHardOrderLimit)
          throw Error(ErrorKind::CapExceeded,
                      "group closure exceeds order cap " + std::to_string(cap));
        elements.push_back(it->first);
        parent.push_back(static_cast<Elem>(e));
        label.push_back(static_cast<std::uint32_t>(s));
      }
      rmul[s].push_back(it->second);
    }
  }
}

struct U64Hash {
  std::size_t operator()(std::uint64_t x) const noexcept
  {
    x ^= x >> 33;
    x *= 0xff51afd7ed558ccdULL;
    x ^= x >> 33;
    return static_cast<std::size_t>(x);
  }
};

} // namespace

GroupPtr Group::from_generators(std::string name, std::size_t degree,
                                std::vector<Permutation> const &gens, std::size_t cap)
{
  if (cap < 1)
    throw Error(ErrorKind::CapExceeded, "order cap must be positive");
  for (auto const &g : gens)
    if (g.degree() != degree)
      throw Error(ErrorKind::InvalidPermutation,
                  "generator degree " + std::to_string(g.degree()) + " differs from " +
                      std::to_string(degree));
  Closure c;
  c.degree = degree;
  c.perms.push_back(Permutation::identity(degree));
  saturate<Permutation, PermutationHash>(
      c.perms, gens, [](Permutation const &a, Permutation const &b) { return a * b; }, c.rmul,
      c.parent, c.label, cap);
  c.gen_perms = gens;
  return assemble(std::move(name), std::move(c));
}

GroupPtr Group::from_multiplication(std::string name, std::uint64_t identity,
                                    std::vector<std::uint64_t> const &gens,
                                    std::function<std::uint64_t(std::uint64_t, std::uint64_t)> const &mul,
                                    std::size_t cap, std::vector<std::uint64_t> *codes_out)
{
  if (cap < 1)
    throw Error(ErrorKind::CapExceeded, "order cap must be positive");
  std::vector<std::uint64_t> codes{identity};
  Closure c;
  saturate<std::uint64_t, U64Hash>(codes, gens, mul, c.rmul, c.parent, c.label, cap);
  c.degree = codes.size();
  c.regular = true;
  if (codes_out)
    *codes_out = codes;
  return assemble(std::move(name), std::move(c));
}

GroupPtr Group::from_subgroup(std::string name, GroupPtr const &parent,
                              std::vector<Elem> const &gens, std::vector<Elem> *to_parent)
{
  std::vector<std::uint64_t> codes{0};
  std::vector<std::uint64_t> gcodes(gens.begin(), gens.end());
  Closure c;
  saturate<std::uint64_t, U64Hash>(
      codes, gcodes,
      [&](std::uint64_t a, std::uint64_t b) {
        return std::uint64_t(parent->mul(static_cast<Elem>(a), static_cast<Elem>(b)));
      },
      c.rmul, c.parent, c.label, kHardOrderLimit);
  c.degree = parent->degree();
  c.parent_group = parent;
  c.to_parent.assign(codes.begin(), codes.end());
  if (to_parent)
    *to_parent = c.to_parent;
  return assemble(std::move(name), std::move(c));
}

GroupPtr Group::assemble(std::string name, Closure &&c)
{
  auto g = std::shared_ptr<Group>(new Group());
  g->name_ = std::move(name);
  std::size_t const n = c.parent.size();
  g->n_ = n;
  g->degree_ = c.degree;

  g->table_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    std::uint16_t *row = &g->table_[i * n];
    row[0] = static_cast<std::uint16_t>(i);
    for (std::size_t j = 1; j < n; ++j)
      row[j] = static_cast<std::uint16_t>(c.rmul[c.label[j]][row[c.parent[j]]]);
  }

  g->inv_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    std::uint16_t const *row = &g->table_[i * n];
    for (std::size_t j = 0; j < n; ++j)
      if (row[j] == 0) {
        g->inv_[i] = static_cast<Elem>(j);
        break;
      }
  }

  g->order_.assign(n, 1);
  std::uint64_t ex = 1;
  for (std::size_t i = 1; i < n; ++i) {
    Elem x = static_cast<Elem>(i);
    std::uint32_t k = 1;
    while (x != 0) {
      x = g->mul(x, static_cast<Elem>(i));
      ++k;
    }
    g->order_[i] = k;
    ex = std::lcm(ex, std::uint64_t(k));
  }
  g->exponent_ = ex;

  for (auto const &r : c.rmul)
    g->gens_.push_back(r.empty() ? 0 : r[0]);

  g->regular_ = c.regular;
  g->perms_ = std::move(c.perms);
  g->parent_ = std::move(c.parent_group);
  g->to_parent_ = std::move(c.to_parent);
  g->gen_perms_ = std::move(c.gen_perms);
  for (std::size_t i = 0; i < g->perms_.size(); ++i)
    g->lookup_.emplace(g->perms_[i], static_cast<Elem>(i));
  for (std::size_t i = 0; i < g->to_parent_.size(); ++i)
    g->from_parent_.emplace(g->to_parent_[i], static_cast<Elem>(i));

  g->build_classes();
  return g;
}

void Group::build_classes()
{
  std::vector<std::int64_t> owner(n_, -1);
  std::vector<std::vector<Elem>> orbits;
  for (Elem x = 0; x < n_; ++x) {
    if (owner[x] >= 0)
      continue;
    std::vector<Elem> orbit{x};
    owner[x] = static_cast<std::int64_t>(orbits.size());
    for (std::size_t k = 0; k < orbit.size(); ++k)
      for (Elem s : gens_) {
        Elem y = conj(orbit[k], s);
        if (owner[y] < 0) {
          owner[y] = owner[x];
          orbit.push_back(y);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }
  std::sort(orbits.begin(), orbits.end(), [&](auto const &a, auto const &b) {
    return std::make_tuple(order_[a[0]], a.size(), a[0]) <
           std::make_tuple(order_[b[0]], b.size(), b[0]);
  });
  classes_.clear();
  class_of_.assign(n_, 0);
  for (std::size_t c = 0; c < orbits.size(); ++c) {
    ConjugacyClass cc;
    cc.representative = orbits[c][0];
    cc.members = std::move(orbits[c]);
    cc.centralizer_order = n_ / cc.members.size();
    cc.element_order = order_[cc.representative];
    for (Elem x : cc.members)
      class_of_[x] = static_cast<std::uint32_t>(c);
    classes_.push_back(std::move(cc));
  }
  inverse_class_.resize(classes_.size());
  for (std::size_t c = 0; c < classes_.size(); ++c)
    inverse_class_[c] = class_of_[inv_[classes_[c].representative]];
}

Elem Group::pow(Elem a, std::int64_t m) const
{
  std::uint64_t o = order_[a];
  std::int64_t r = m % static_cast<std::int64_t>(o);
  if (r < 0)
    r += static_cast<std::int64_t>(o);
  Elem result = 0, base = a;
  auto e = static_cast<std::uint64_t>(r);
  while (e) {
    if (e & 1)
      result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

std::size_t Group::power_class(std::size_t c, std::int64_t m) const
{
  return class_of_[pow(classes_[c].representative, m)];
}

Elem Group::p_part(Elem x, std::uint64_t p) const
{
  if (!is_prime(p))
    throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  std::uint64_t o = order_[x];
  std::uint64_t pa = p_part_of(o, p);
  std::uint64_t m = o / pa;
  if (pa == 1)
    return 0;
  // a = 1 mod pa, a = 0 mod m
  std::uint64_t a = (m * invmod(m % pa, pa)) % o;
  return pow(x, static_cast<std::int64_t>(a));
}

std::vector<Permutation> Group::generator_permutations() const
{
  if (!gen_perms_.empty())
    return gen_perms_;
  std::vector<Permutation> out;
  for (Elem g : gens_)
    out.push_back(permutation(g));
  return out;
}

Permutation Group::permutation(Elem a) const
{
  if (!perms_.empty())
    return perms_[a];
  if (regular_) {
    std::vector<Point> img(n_);
    for (std::size_t j = 0; j < n_; ++j)
      img[j] = mul(static_cast<Elem>(j), a);
    return Permutation(std::move(img));
  }
  return parent_->permutation(to_parent_[a]);
}

std::optional<Elem> Group::find(Permutation const &p) const
{
  if (p.degree() != degree_)
    return std::nullopt;
  if (!perms_.empty()) {
    auto it = lookup_.find(p);
    if (it == lookup_.end())
      return std::nullopt;
    return it->second;
  }
  if (regular_) {
    Elem a = p[0];
    if (permutation(a) == p)
      return a;
    return std::nullopt;
  }
  auto q = parent_->find(p);
  if (!q)
    return std::nullopt;
  auto it = from_parent_.find(*q);
  if (it == from_parent_.end())
    return std::nullopt;
  return it->second;
}

} // namespace solchar
