#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "solchar/builtins.hpp"
#include "solchar/error.hpp"
#include "solchar/lattice.hpp"
#include "solchar/numtheory.hpp"

using namespace solchar;

namespace {

using Bits = std::vector<bool>;

Bits join(Group const &G, Bits s, Elem x)
{
  // Naive saturation under products, independent of the library closure.
  s[x] = true;
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Elem> el;
    for (Elem i = 0; i < G.order(); ++i)
      if (s[i])
        el.push_back(i);
    for (Elem a : el)
      for (Elem b : el)
        if (!s[G.mul(a, b)]) {
          s[G.mul(a, b)] = true;
          grew = true;
        }
  }
  return s;
}

// Every subgroup is a join of cyclic subgroups; saturate under joins.
std::set<Bits> all_subgroups_brute(Group const &G)
{
  Bits triv(G.order(), false);
  triv[0] = true;
  std::set<Bits> found{triv};
  std::vector<Bits> queue{triv};
  for (std::size_t k = 0; k < queue.size(); ++k)
    for (Elem x = 0; x < G.order(); ++x) {
      if (queue[k][x])
        continue;
      Bits j = join(G, queue[k], x);
      if (found.insert(j).second)
        queue.push_back(j);
    }
  return found;
}

std::multiset<std::size_t> orders_of(Lattice const &L, std::vector<std::size_t> const &ids)
{
  std::multiset<std::size_t> out;
  for (auto c : ids)
    out.insert(L[c].order());
  return out;
}

std::vector<std::size_t> all_ids(Lattice const &L)
{
  std::vector<std::size_t> ids(L.size());
  for (std::size_t i = 0; i < ids.size(); ++i)
    ids[i] = i;
  return ids;
}

std::vector<std::size_t> chain_orders(ChiefSeries const &s)
{
  std::vector<std::size_t> out;
  for (auto const &H : s.chain)
    out.push_back(H.order());
  return out;
}

std::size_t find_class(Lattice const &L, std::size_t order, std::size_t class_size = 0)
{
  for (std::size_t c = 0; c < L.size(); ++c)
    if (L[c].order() == order && (class_size == 0 || L[c].class_size() == class_size))
      return c;
  FAIL("no class of order " << order);
  return 0;
}

GroupPtr a5()
{
  return Group::from_generators(
      "a5", 5,
      {Permutation::from_cycles(5, {{1, 2, 3}}, true), Permutation::from_cycles(5, {{1, 2, 3, 4, 5}}, true)});
}

} // namespace

TEST_CASE("subgroup classes of small groups")
{
  auto c6 = Lattice::build(cyclic(6));
  CHECK(orders_of(*c6, all_ids(*c6)) == std::multiset<std::size_t>{1, 2, 3, 6});

  auto d6 = Lattice::build(dihedral(6));
  REQUIRE(d6->size() == 4);
  CHECK(orders_of(*d6, all_ids(*d6)) == std::multiset<std::size_t>{1, 2, 3, 6});
  CHECK((*d6)[find_class(*d6, 2)].class_size() == 3);

  auto f21 = Lattice::build(frobenius(7, 3));
  CHECK(orders_of(*f21, all_ids(*f21)) == std::multiset<std::size_t>{1, 3, 7, 21});

  CHECK((*d6)[0].order() == 1);
  CHECK((*d6)[d6->size() - 1].order() == 6);
}

TEST_CASE("lattice agrees with brute-force subgroup enumeration")
{
  for (auto G : {dihedral(6), dihedral(10), cyclic(12), frobenius(7, 3), gl23(), abelian({2, 2, 2, 2}),
                 abelian({4, 4}), abelian({2, 4, 6}), extraspecial(3), a5()}) {
    CAPTURE(G->name());
    auto L = Lattice::build(G);
    auto brute = all_subgroups_brute(*G);
    std::size_t total = 0;
    for (auto const &c : L->classes()) {
      total += c.class_size();
      CHECK(c.class_size() * c.normalizer.count() == G->order());
      CHECK(G->order() % c.order() == 0);
      for (std::size_t i = 0; i < c.conjugates.size(); ++i) {
        Bits b(G->order());
        for (Elem x : c.conjugates[i].elements())
          b[x] = true;
        CHECK(brute.count(b) == 1);
        CHECK(conjugate_set(*G, c.conjugates[0], c.conjugators[i]) == c.conjugates[i]);
        CHECK(c.conjugates[i].count() == c.order());
      }
    }
    CHECK(total == brute.size());
    CHECK(L->total_subgroups() == brute.size());
  }
}

TEST_CASE("maximal subgroup classes")
{
  auto c12 = Lattice::build(cyclic(12));
  CHECK(orders_of(*c12, c12->maximal_classes()) == std::multiset<std::size_t>{4, 6});

  auto d6 = Lattice::build(dihedral(6));
  CHECK(orders_of(*d6, d6->maximal_classes()) == std::multiset<std::size_t>{2, 3});

  auto fr = Lattice::build(fullyramified(5, 3));
  auto m = orders_of(*fr, fr->maximal_classes());
  CHECK(m.count(15) == 1);
  CHECK(m.count(125) == 1);

  auto a = Lattice::build(a5());
  CHECK(orders_of(*a, a->maximal_classes()) == std::multiset<std::size_t>{6, 10, 12});
}

TEST_CASE("normal subgroups, cores and chief series")
{
  auto c7 = Lattice::build(cyclic(7));
  CHECK(orders_of(*c7, c7->normal_classes()) == std::multiset<std::size_t>{1, 7});
  auto d6 = Lattice::build(dihedral(6));
  CHECK(orders_of(*d6, d6->normal_classes()) == std::multiset<std::size_t>{1, 3, 6});
  auto fr = Lattice::build(fullyramified(5, 3));
  CHECK(orders_of(*fr, fr->normal_classes()) == std::multiset<std::size_t>{1, 5, 125, 375});

  auto U = (*fr)[find_class(*fr, 15)].representative;
  CHECK(core(U).order() == 5);
  auto refl = (*d6)[find_class(*d6, 2)].representative;
  CHECK(core(refl).order() == 1);
  auto rot = (*d6)[find_class(*d6, 3)].representative;
  CHECK(core(rot).members == rot.members);

  auto c12 = Lattice::build(cyclic(12));
  auto ch = chain_orders(c12->chief_series());
  std::multiset<std::size_t> factors;
  for (std::size_t i = 1; i < ch.size(); ++i)
    factors.insert(ch[i] / ch[i - 1]);
  CHECK(factors == std::multiset<std::size_t>{2, 2, 3});
  CHECK(chain_orders(d6->chief_series()) == std::vector<std::size_t>{1, 3, 6});
  CHECK(chain_orders(fr->chief_series()) == std::vector<std::size_t>{1, 5, 125, 375});

  for (auto const &L : {c12, d6, fr}) {
    auto const &chain = L->chief_series().chain;
    for (std::size_t i = 1; i < chain.size(); ++i) {
      CHECK(is_normal(*L->group(), chain[i].members));
      CHECK(is_chief_factor(*L->group(), chain[i].members, chain[i - 1].members));
    }
  }
}

TEST_CASE("cover and avoid")
{
  auto d6 = Lattice::build(dihedral(6));
  auto const &chain = d6->chief_series().chain;
  auto rot = (*d6)[find_class(*d6, 3)].representative;
  auto refl = (*d6)[find_class(*d6, 2)].representative;
  CHECK(cover_or_avoid(rot, chain[1], chain[0]) == CoverAvoid::Covers);
  CHECK(cover_or_avoid(refl, chain[1], chain[0]) == CoverAvoid::Avoids);
  CHECK_THROWS_AS(cover_or_avoid(refl, chain[2], chain[0]), Error);

  auto fr = Lattice::build(fullyramified(5, 3));
  auto const &fc = fr->chief_series().chain;
  auto U = (*fr)[find_class(*fr, 15)].representative;
  CHECK(cover_or_avoid(U, fc[2], fc[1]) == CoverAvoid::Avoids);
  CHECK(cover_or_avoid(U, fc[1], fc[0]) == CoverAvoid::Covers);
  CHECK(cover_or_avoid(U, fc[3], fc[2]) == CoverAvoid::Covers);
}

TEST_CASE("solvability predicates")
{
  auto ab = Lattice::build(abelian({2, 6}));
  for (std::uint64_t p : {2, 3, 5})
    CHECK(ab->is_p_solvable(p));
  auto gl = Lattice::build(gl23());
  CHECK(gl->is_solvable());
  CHECK(gl->is_p_solvable(2));
  CHECK(gl->is_p_solvable(3));
  CHECK(Lattice::build(dihedral(6))->is_solvable());
  auto a = Lattice::build(a5());
  CHECK_FALSE(a->is_solvable());
  CHECK_FALSE(a->is_p_solvable(2));
  CHECK(a->is_p_solvable(7));
}

TEST_CASE("maximal subgroups avoid exactly one chief factor")
{
  for (auto G : {gl23(), fullyramified(5, 3), frobenius(13, 3), abelian({2, 2, 12}), dihedral(10)}) {
    CAPTURE(G->name());
    auto L = Lattice::build(G);
    auto const &chain = L->chief_series().chain;
    for (std::size_t m : L->maximal_classes()) {
      auto const &M = (*L)[m].representative;
      std::size_t index = G->order() / M.order();
      CHECK(prime_of_prime_power(index) != 0);
      std::size_t avoided = 0;
      for (std::size_t i = 1; i < chain.size(); ++i) {
        auto r = cover_or_avoid(M, chain[i], chain[i - 1]);
        CHECK(r != CoverAvoid::Neither);
        avoided += r == CoverAvoid::Avoids;
      }
      CHECK(avoided == 1);
    }
    // Maximal subgroups with equal cores are conjugate.
    auto const &mx = L->maximal_classes();
    for (std::size_t i = 0; i < mx.size(); ++i)
      for (std::size_t j = 0; j < mx.size(); ++j) {
        auto ci = core(*G, (*L)[mx[i]].conjugates[0]);
        for (auto const &Mj : (*L)[mx[j]].conjugates)
          CHECK((core(*G, Mj) == ci) == (i == j));
      }
  }
}

TEST_CASE("class cap")
{
  CHECK_THROWS_AS(Lattice::build(gl23(), 5), Error);
}
