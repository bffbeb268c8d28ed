#include "solchar/subgroup.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "solchar/error.hpp"

namespace solchar {

ElementSet::ElementSet(std::size_t universe)
    : universe_(universe), words_((universe + 63) / 64, 0)
{
}

ElementSet::ElementSet(std::size_t universe, std::vector<Elem> const &members)
    : ElementSet(universe)
{
  for (Elem x : members)
    insert(x);
}

std::size_t ElementSet::count() const
{
  std::size_t c = 0;
  for (auto w : words_)
    c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::vector<Elem> ElementSet::elements() const
{
  std::vector<Elem> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t w = words_[i];
    while (w) {
      out.push_back(static_cast<Elem>(i * 64 + std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

bool ElementSet::is_subset_of(ElementSet const &other) const
{
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i])
      return false;
  return true;
}

ElementSet ElementSet::operator&(ElementSet const &other) const
{
  ElementSet r(*this);
  for (std::size_t i = 0; i < words_.size(); ++i)
    r.words_[i] &= other.words_[i];
  return r;
}

ElementSet ElementSet::operator|(ElementSet const &other) const
{
  ElementSet r(*this);
  for (std::size_t i = 0; i < words_.size(); ++i)
    r.words_[i] |= other.words_[i];
  return r;
}

bool operator<(ElementSet const &a, ElementSet const &b)
{
  std::size_t ca = a.count(), cb = b.count();
  if (ca != cb)
    return ca < cb;
  for (std::size_t i = 0; i < a.words_.size(); ++i) {
    std::uint64_t d = a.words_[i] ^ b.words_[i];
    if (d) {
      std::uint64_t low = d & (~d + 1);
      return (a.words_[i] & low) != 0;
    }
  }
  return false;
}

std::size_t ElementSetHash::operator()(ElementSet const &s) const noexcept
{
  std::uint64_t h = 1469598103934665603ULL;
  for (auto w : s.words()) {
    h ^= w;
    h *= 1099511628211ULL;
    h ^= h >> 29;
  }
  return static_cast<std::size_t>(h);
}

ElementSet closure(Group const &G, ElementSet const &base, std::vector<Elem> const &gens)
{
  // The result is kept as a union of left cosets xB of the base subgroup B,
  // so it is closed under right multiplication by B at every step.
  ElementSet S = base;
  std::vector<Elem> const B = base.elements();
  std::vector<Elem> queue = B;
  for (std::size_t k = 0; k < queue.size(); ++k)
    for (Elem s : gens) {
      Elem y = G.mul(queue[k], s);
      if (S.contains(y))
        continue;
      for (Elem b : B) {
        Elem z = G.mul(y, b);
        S.insert(z);
        queue.push_back(z);
      }
    }
  return S;
}

ElementSet closure(Group const &G, std::vector<Elem> const &gens)
{
  return closure(G, ElementSet(G.order(), {0}), gens);
}

bool is_subgroup(Group const &G, ElementSet const &s)
{
  if (s.universe() != G.order() || !s.contains(0))
    return false;
  auto el = s.elements();
  for (Elem a : el) {
    if (!s.contains(G.inv(a)))
      return false;
    for (Elem b : el)
      if (!s.contains(G.mul(a, b)))
        return false;
  }
  return true;
}

bool is_normal(Group const &G, ElementSet const &s)
{
  for (Elem x : s.elements())
    for (Elem g : G.generators())
      if (!s.contains(G.conj(x, g)))
        return false;
  return true;
}

std::vector<Elem> generating_set(Group const &G, ElementSet const &s)
{
  auto el = s.elements();
  std::stable_sort(el.begin(), el.end(), [&](Elem a, Elem b) {
    return G.element_order(a) > G.element_order(b);
  });
  ElementSet cur(G.order(), {0});
  std::vector<Elem> gens;
  std::size_t const target = s.count();
  for (Elem x : el) {
    if (cur.count() == target)
      break;
    if (cur.contains(x))
      continue;
    cur = closure(G, cur, {x});
    gens.push_back(x);
  }
  return gens;
}

Subgroup make_subgroup(GroupPtr const &G, ElementSet members)
{
  Subgroup H;
  H.parent = G;
  H.generators = generating_set(*G, members);
  H.members = std::move(members);
  return H;
}

Subgroup whole_group(GroupPtr const &G)
{
  Subgroup H;
  H.parent = G;
  H.members = ElementSet(G->order());
  for (Elem x = 0; x < G->order(); ++x)
    H.members.insert(x);
  H.generators = G->generators();
  return H;
}

Subgroup trivial_subgroup(GroupPtr const &G)
{
  Subgroup H;
  H.parent = G;
  H.members = ElementSet(G->order(), {0});
  return H;
}

ElementSet conjugate_set(Group const &G, ElementSet const &s, Elem g)
{
  ElementSet r(G.order());
  for (Elem x : s.elements())
    r.insert(G.conj(x, g));
  return r;
}

Subgroup conjugate(Subgroup const &H, Elem g)
{
  Group const &G = *H.parent;
  Subgroup K;
  K.parent = H.parent;
  K.members = conjugate_set(G, H.members, g);
  for (Elem x : H.generators)
    K.generators.push_back(G.conj(x, g));
  return K;
}

Subgroup centralizer(GroupPtr const &G, Elem x)
{
  if (x >= G->order())
    throw Error(ErrorKind::ElementNotInGroup, "element index out of range");
  return make_subgroup(G, centralizer_of_set(*G, ElementSet(G->order(), {x})));
}

ElementSet centralizer_of_set(Group const &G, ElementSet const &s)
{
  auto gens = s.elements();
  ElementSet r(G.order());
  for (Elem g = 0; g < G.order(); ++g) {
    bool ok = true;
    for (Elem x : gens)
      if (G.mul(g, x) != G.mul(x, g)) {
        ok = false;
        break;
      }
    if (ok)
      r.insert(g);
  }
  return r;
}

ElementSet normalizer(Group const &G, ElementSet const &H)
{
  auto gens = generating_set(G, H);
  ElementSet r(G.order());
  for (Elem g = 0; g < G.order(); ++g) {
    bool ok = true;
    for (Elem x : gens)
      if (!H.contains(G.conj(x, g))) {
        ok = false;
        break;
      }
    if (ok)
      r.insert(g);
  }
  return r;
}

ElementSet core(Group const &G, ElementSet const &H)
{
  // The core is the union of the conjugacy classes lying inside H.
  ElementSet r(G.order());
  for (auto const &c : G.classes()) {
    if (!H.contains(c.representative))
      continue;
    bool inside = std::all_of(c.members.begin(), c.members.end(),
                              [&](Elem x) { return H.contains(x); });
    if (inside)
      for (Elem x : c.members)
        r.insert(x);
  }
  return r;
}

Subgroup core(Subgroup const &H)
{
  return make_subgroup(H.parent, core(*H.parent, H.members));
}

ElementSet center(Group const &G)
{
  ElementSet r(G.order());
  for (auto const &c : G.classes())
    if (c.size() == 1)
      r.insert(c.representative);
  return r;
}

namespace {

ElementSet normal_closure(Group const &G, std::vector<Elem> const &conjugators,
                          std::vector<Elem> seeds)
{
  ElementSet S = closure(G, seeds);
  for (std::size_t k = 0; k < seeds.size(); ++k)
    for (Elem g : conjugators) {
      Elem y = G.conj(seeds[k], g);
      if (!S.contains(y)) {
        S = closure(G, S, {y});
        seeds.push_back(y);
      }
    }
  return S;
}

} // namespace

ElementSet commutator_subgroup(Group const &G, ElementSet const &A, ElementSet const &B)
{
  auto ga = generating_set(G, A), gb = generating_set(G, B);
  std::vector<Elem> seeds;
  for (Elem a : ga)
    for (Elem b : gb)
      seeds.push_back(G.commutator(a, b));
  std::vector<Elem> conjugators = ga;
  conjugators.insert(conjugators.end(), gb.begin(), gb.end());
  return normal_closure(G, conjugators, std::move(seeds));
}

ElementSet derived_subgroup(Group const &G, ElementSet const &H)
{
  return commutator_subgroup(G, H, H);
}

ElementSet product_set(Group const &G, ElementSet const &A, ElementSet const &B)
{
  ElementSet r(G.order());
  auto eb = B.elements();
  for (Elem a : A.elements())
    for (Elem b : eb)
      r.insert(G.mul(a, b));
  return r;
}

bool is_solvable(Group const &G)
{
  ElementSet H(G.order());
  for (Elem x = 0; x < G.order(); ++x)
    H.insert(x);
  while (H.count() > 1) {
    ElementSet D = derived_subgroup(G, H);
    if (D.count() == H.count())
      return false;
    H = std::move(D);
  }
  return true;
}

Quotient quotient_group(GroupPtr const &G, Subgroup const &N)
{
  if (!is_normal(*G, N.members))
    throw Error(ErrorKind::NotNormal, "subgroup is not normal in " + G->name());
  std::size_t const n = G->order();
  std::vector<Elem> rep(n, 0);
  std::vector<bool> seen(n, false);
  auto nel = N.members.elements();
  for (Elem g = 0; g < n; ++g) {
    if (seen[g])
      continue;
    for (Elem x : nel) {
      Elem y = G->mul(x, g);
      seen[y] = true;
      rep[y] = g;
    }
  }
  std::vector<std::uint64_t> gens;
  for (Elem s : G->generators())
    gens.push_back(rep[s]);
  std::vector<std::uint64_t> codes;
  auto Q = Group::from_multiplication(
      G->name() + "/N", 0, gens,
      [&](std::uint64_t a, std::uint64_t b) {
        return std::uint64_t(rep[G->mul(static_cast<Elem>(a), static_cast<Elem>(b))]);
      },
      kHardOrderLimit, &codes);
  std::unordered_map<std::uint64_t, Elem> index;
  for (std::size_t i = 0; i < codes.size(); ++i)
    index.emplace(codes[i], static_cast<Elem>(i));
  Quotient q;
  q.group = Q;
  q.projection.resize(n);
  for (Elem g = 0; g < n; ++g)
    q.projection[g] = index.at(rep[g]);
  return q;
}

Embedding embed(Subgroup const &H)
{
  Embedding e;
  auto gens = H.generators.empty() && H.order() > 1 ? generating_set(*H.parent, H.members)
                                                     : H.generators;
  e.group = Group::from_subgroup(H.parent->name() + "_sub", H.parent, gens, &e.to_parent);
  return e;
}

} // namespace solchar
