#include "solchar/lattice.hpp"

#include <algorithm>
#include <numeric>

#include "solchar/error.hpp"
#include "solchar/numtheory.hpp"

namespace solchar {

std::shared_ptr<Lattice const> Lattice::build(GroupPtr G, std::size_t class_cap)
{
  auto L = std::shared_ptr<Lattice>(new Lattice());
  L->G_ = std::move(G);
  L->solvable_ = solchar::is_solvable(*L->G_);
  L->enumerate(class_cap);
  L->derive();
  return L;
}

void Lattice::enumerate(std::size_t class_cap)
{
  Group const &G = *G_;
  std::size_t const n = G.order();

  auto add_class = [&](ElementSet S) {
    if (classes_.size() >= class_cap)
      throw Error(ErrorKind::CapExceeded,
                  "subgroup classes of " + G.name() + " exceed cap " + std::to_string(class_cap));
    SubgroupClass c;
    std::size_t const id = classes_.size();
    index_.emplace(S, std::make_pair(id, std::size_t(0)));
    c.conjugates.push_back(std::move(S));
    c.conjugators.push_back(0);
    for (std::size_t k = 0; k < c.conjugates.size(); ++k)
      for (Elem s : G.generators()) {
        ElementSet T = conjugate_set(G, c.conjugates[k], s);
        auto [it, fresh] = index_.emplace(T, std::make_pair(id, c.conjugates.size()));
        if (fresh) {
          c.conjugates.push_back(std::move(T));
          c.conjugators.push_back(G.mul(c.conjugators[k], s));
        }
      }
    classes_.push_back(std::move(c));
  };

  add_class(ElementSet(n, {0}));
  for (std::size_t k = 0; k < classes_.size(); ++k) {
    ElementSet const H = classes_[k].conjugates[0];
    if (H.count() == n)
      continue;
    std::vector<Elem> candidates;
    if (solvable_) {
      candidates = normalizer(G, H).elements();
    } else {
      candidates.resize(n);
      std::iota(candidates.begin(), candidates.end(), Elem(0));
    }
    ElementSet done = H;
    for (Elem x : candidates) {
      if (done.contains(x))
        continue;
      if (solvable_) {
        // Extend only by elements of prime order modulo H.
        std::uint64_t i = 1;
        Elem y = x;
        while (!H.contains(y)) {
          y = G.mul(y, x);
          ++i;
        }
        if (!is_prime(i))
          continue;
      }
      ElementSet K = closure(G, H, {x});
      if (solvable_) {
        // K/H has prime order, so every element of K outside H gives K.
        for (Elem y : K.elements())
          done.insert(y);
      } else {
        for (Elem h : H.elements())
          done.insert(G.mul(h, x));
      }
      if (!index_.count(K))
        add_class(std::move(K));
    }
  }
}

void Lattice::derive()
{
  Group const &G = *G_;

  for (auto &c : classes_) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < c.conjugates.size(); ++i)
      if (c.conjugates[i] < c.conjugates[best])
        best = i;
    if (best != 0) {
      Elem gi = G.inv(c.conjugators[best]);
      std::rotate(c.conjugates.begin(), c.conjugates.begin() + best, c.conjugates.end());
      std::rotate(c.conjugators.begin(), c.conjugators.begin() + best, c.conjugators.end());
      for (auto &g : c.conjugators)
        g = G.mul(gi, g);
    }
  }
  std::sort(classes_.begin(), classes_.end(), [](SubgroupClass const &a, SubgroupClass const &b) {
    return a.conjugates[0] < b.conjugates[0];
  });
  index_.clear();
  for (std::size_t id = 0; id < classes_.size(); ++id) {
    auto &c = classes_[id];
    c.representative = make_subgroup(G_, c.conjugates[0]);
    c.representative.id = static_cast<std::int64_t>(id);
    c.normalizer = normalizer(G, c.conjugates[0]);
    for (std::size_t i = 0; i < c.conjugates.size(); ++i)
      index_.emplace(c.conjugates[i], std::make_pair(id, i));
  }

  for (std::size_t c = 0; c < classes_.size(); ++c)
    if (classes_[c].class_size() == 1)
      normal_.push_back(c);

  std::size_t const top = classes_.size() - 1;
  for (std::size_t c = 0; c < top; ++c) {
    std::size_t const oc = classes_[c].order();
    if (solvable_ && prime_of_prime_power(G.order() / oc) == 0)
      continue;
    bool maximal = true;
    for (std::size_t d = c + 1; d < top && maximal; ++d) {
      std::size_t const od = classes_[d].order();
      if (od > oc && od % oc == 0 && class_below(c, d))
        maximal = false;
    }
    if (maximal)
      maximal_.push_back(c);
  }

  // Sorted order means the first normal subgroup strictly above L is a
  // minimal one.
  ElementSet L = classes_[0].conjugates[0];
  chief_.chain.push_back(classes_[0].representative);
  while (L.count() < G.order()) {
    for (std::size_t c : normal_) {
      ElementSet const &K = classes_[c].conjugates[0];
      if (K.count() > L.count() && L.is_subset_of(K)) {
        chief_.chain.push_back(classes_[c].representative);
        L = K;
        break;
      }
    }
  }
}

std::optional<std::pair<std::size_t, std::size_t>> Lattice::locate(ElementSet const &s) const
{
  auto it = index_.find(s);
  if (it == index_.end())
    return std::nullopt;
  return it->second;
}

std::size_t Lattice::class_of(ElementSet const &s) const
{
  auto loc = locate(s);
  if (!loc)
    throw Error(ErrorKind::NotSubgroup, "set is not a subgroup of " + G_->name());
  return loc->first;
}

bool Lattice::class_below(std::size_t c, std::size_t d) const
{
  ElementSet const &D = classes_[d].conjugates[0];
  if (classes_[c].order() > D.count() || D.count() % classes_[c].order() != 0)
    return false;
  for (auto const &C : classes_[c].conjugates)
    if (C.is_subset_of(D))
      return true;
  return false;
}

std::vector<std::size_t> Lattice::conjugates_containing(std::size_t c, ElementSet const &s) const
{
  std::vector<std::size_t> out;
  auto const &conj = classes_[c].conjugates;
  for (std::size_t i = 0; i < conj.size(); ++i)
    if (s.is_subset_of(conj[i]))
      out.push_back(i);
  return out;
}

std::vector<Subgroup> Lattice::normal_subgroups() const
{
  std::vector<Subgroup> out;
  for (std::size_t c : normal_)
    out.push_back(classes_[c].representative);
  return out;
}

bool Lattice::is_p_solvable(std::uint64_t p) const { return solvable_ || solchar::is_p_solvable(chief_, p); }

bool is_p_solvable(ChiefSeries const &series, std::uint64_t p)
{
  for (std::size_t i = 1; i < series.chain.size(); ++i) {
    std::uint64_t f = series.chain[i].order() / series.chain[i - 1].order();
    if (f % p == 0 && !is_power_of(f, p))
      return false;
  }
  return true;
}

bool is_chief_factor(Group const &G, ElementSet const &K, ElementSet const &L)
{
  if (!L.is_subset_of(K) || L.count() == K.count())
    return false;
  if (!is_normal(G, K) || !is_normal(G, L))
    return false;
  for (auto const &c : G.classes()) {
    if (!K.contains(c.representative) || L.contains(c.representative))
      continue;
    if (closure(G, L, c.members).count() != K.count())
      return false;
  }
  return true;
}

CoverAvoid cover_or_avoid(Subgroup const &U, Subgroup const &K, Subgroup const &L)
{
  Group const &G = *U.parent;
  if (!is_chief_factor(G, K.members, L.members))
    throw Error(ErrorKind::NotChiefFactor, "K/L is not a chief factor of " + G.name());
  ElementSet I = U.members & K.members;
  if (I.is_subset_of(L.members))
    return CoverAvoid::Avoids;
  std::size_t li = (L.members & I).count();
  if (L.order() * I.count() / li == K.order())
    return CoverAvoid::Covers;
  return CoverAvoid::Neither;
}

} // namespace solchar
