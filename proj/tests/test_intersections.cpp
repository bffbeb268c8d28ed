#include <doctest.h>

#include <functional>
#include <set>

#include "solchar/builtins.hpp"
#include "solchar/error.hpp"
#include "solchar/intersections.hpp"

using namespace solchar;

namespace {

std::size_t class_of_order(Lattice const &L, std::size_t order)
{
  for (std::size_t c = 0; c < L.size(); ++c)
    if (L[c].order() == order)
      return c;
  FAIL("no subgroup of order " << order);
  return 0;
}

// Complete-intersection classes straight from the definition: some set of
// maximal subgroups over U meets in U with the product of indices |G:U|.
std::set<std::size_t> complete_classes_brute(Lattice const &L)
{
  std::size_t const n = L.group()->order();
  std::vector<ElementSet> maxes;
  for (auto c : L.maximal_classes())
    for (auto const &m : L[c].conjugates)
      maxes.push_back(m);
  std::set<std::size_t> out;
  for (std::size_t c = 0; c < L.size(); ++c) {
    auto const &U = L[c].representative.members;
    std::vector<ElementSet> over;
    for (auto const &m : maxes)
      if (U.is_subset_of(m))
        over.push_back(m);
    bool found = false;
    std::function<void(std::size_t, ElementSet const &, std::size_t)> dfs = [&](std::size_t i, ElementSet const &acc,
                                                                                std::size_t prod) {
      if (found || prod > n)
        return;
      if (acc == U && prod == n / U.count()) {
        found = true;
        return;
      }
      for (std::size_t j = i; j < over.size(); ++j)
        dfs(j + 1, acc & over[j], prod * (n / over[j].count()));
    };
    dfs(0, whole_group(L.group()).members, 1);
    if (found)
      out.insert(c);
  }
  return out;
}

std::set<std::size_t> classes_of(std::vector<IntersectionWitness> const &ws)
{
  std::set<std::size_t> s;
  for (auto const &w : ws)
    s.insert(w.lattice_class);
  return s;
}

} // namespace

TEST_CASE("completeness of families in the dihedral group of order six")
{
  auto L = Lattice::build(dihedral(6));
  Intersections I(L);
  auto a = class_of_order(*L, 3), b = class_of_order(*L, 2);
  CHECK(I.is_complete_family({}));
  CHECK(I.is_complete_family({a}));
  CHECK(I.is_complete_family({b}));
  CHECK(I.is_complete_family({a, b}));
  CHECK(I.realize({a, b}).subgroup.order() == 1);
  CHECK_THROWS_AS(I.is_complete_family({a, a}), Error);
  CHECK_THROWS_AS(I.is_complete_family({0}), Error);
  CHECK(I.complete_intersections().size() == 4);
}

TEST_CASE("complete intersections of small groups")
{
  SUBCASE("cyclic of prime order")
  {
    auto L = Lattice::build(cyclic(7));
    Intersections I(L);
    CHECK(classes_of(I.complete_intersections()) == std::set<std::size_t>{0, 1});
  }
  SUBCASE("fullyramified(5,3)")
  {
    auto L = Lattice::build(group_from_name("fullyramified(5,3)"));
    Intersections I(L);
    std::multiset<std::size_t> orders;
    for (auto const &w : I.complete_intersections())
      orders.insert(w.subgroup.order());
    CHECK(orders.count(375) == 1);
    CHECK(orders.count(125) == 1);
    CHECK(orders.count(15) >= 1);
    CHECK(orders.count(5) >= 1); // complement meets E in Z
  }
  for (auto const *name : {"dihedral(10)", "cyclic(12)", "frobenius(7,3)", "gl23", "extraspecial(3)", "abelian(2,2,2)",
                           "fullyramified(5,3)", "direct_product(dihedral(6),cyclic(3))"}) {
    CAPTURE(name);
    auto L = Lattice::build(group_from_name(name));
    Intersections I(L);
    CHECK(classes_of(I.complete_intersections()) == complete_classes_brute(*L));
  }
}

TEST_CASE("complete intersection calculus")
{
  for (auto const *name : {"gl23", "abelian(2,2,2)", "fullyramified(5,3)", "direct_product(frobenius(7,3),cyclic(3))"}) {
    CAPTURE(name);
    auto L = Lattice::build(group_from_name(name));
    Intersections I(L);
    auto const &G = *L->group();
    for (auto const &w : I.complete_intersections()) {
      std::vector<std::size_t> cls;
      for (auto const &m : w.family)
        cls.push_back(m.first);
      std::size_t prod = 1;
      for (auto c : cls)
        prod *= G.order() / (*L)[c].order();
      CHECK(G.order() / w.subgroup.order() == prod);
      // Every split into two disjoint sub-families has U_I U_J = G.
      for (std::size_t mask = 0; mask < (std::size_t(1) << cls.size()); ++mask) {
        std::vector<std::size_t> A, B;
        for (std::size_t i = 0; i < cls.size(); ++i)
          ((mask >> i) & 1 ? A : B).push_back(cls[i]);
        CHECK(I.is_complete_family(A));
        auto UA = I.realize(A).subgroup.members, UB = I.realize(B).subgroup.members;
        CHECK(UA.count() * UB.count() / (UA & UB).count() == G.order());
      }
    }
  }
}

TEST_CASE("regular intersections")
{
  SUBCASE("the whole group via the empty family")
  {
    auto L = Lattice::build(gl23());
    Intersections I(L);
    auto w = I.is_regular(whole_group(L->group()).members);
    REQUIRE(w);
    CHECK(w->family.empty());
  }
  SUBCASE("trivial subgroup of the dihedral group of order six")
  {
    auto L = Lattice::build(dihedral(6));
    Intersections I(L);
    auto w = I.is_regular(trivial_subgroup(L->group()).members);
    REQUIRE(w);
    CHECK(w->family.size() == 2);
    CHECK(w->kind == IntersectionKind::Regular);
  }
  SUBCASE("the order-15 complement of fullyramified(5,3)")
  {
    auto L = Lattice::build(group_from_name("fullyramified(5,3)"));
    Intersections I(L);
    auto w = I.is_regular((*L)[class_of_order(*L, 15)].representative.members);
    REQUIRE(w);
    CHECK(w->family.size() == 1);
  }
  SUBCASE("regular witnesses are complete and cover or avoid every chief factor")
  {
    for (auto const *name : {"gl23", "abelian(2,4)", "fullyramified(5,3)", "frobenius(7,3)", "extraspecial(3)"}) {
      CAPTURE(name);
      auto L = Lattice::build(group_from_name(name));
      Intersections I(L);
      auto const &chain = L->chief_series().chain;
      int regular = 0;
      for (std::size_t c = 0; c < L->size(); ++c) {
        auto w = I.is_regular((*L)[c].representative.members);
        if (!w)
          continue;
        ++regular;
        std::vector<std::size_t> cls;
        for (auto const &m : w->family)
          cls.push_back(m.first);
        CHECK(I.is_complete_family(cls));
        for (std::size_t i = 1; i < chain.size(); ++i)
          CHECK(cover_or_avoid(w->subgroup, chain[i], chain[i - 1]) != CoverAvoid::Neither);
      }
      CHECK(regular >= 1);
    }
  }
}

TEST_CASE("frak_M and frak_M0")
{
  SUBCASE("linear characters")
  {
    auto G = frobenius(7, 3);
    auto L = Lattice::build(G);
    auto T = CharacterTable::compute(G);
    Intersections I(L);
    for (auto const &chi : T->irreducibles())
      if (chi.int_degree() == 1) {
        auto m0 = I.frak_M0(chi);
        REQUIRE(m0.size() == 1);
        CHECK(m0[0].subgroup.order() == G->order());
      }
  }
  SUBCASE("abelian groups")
  {
    auto G = abelian({2, 6});
    auto L = Lattice::build(G);
    auto T = CharacterTable::compute(G);
    Intersections I(L);
    for (auto const &chi : T->irreducibles()) {
      auto m0 = I.frak_M0(chi);
      REQUIRE(m0.size() == 1);
      CHECK(m0[0].lattice_class + 1 == L->size());
    }
  }
  SUBCASE("degree-5 characters of fullyramified(5,3)")
  {
    auto G = group_from_name("fullyramified(5,3)");
    auto L = Lattice::build(G);
    auto T = CharacterTable::compute(G);
    Intersections I(L);
    for (auto const &chi : T->irreducibles()) {
      if (chi.int_degree() != 5)
        continue;
      auto m0 = I.frak_M0(chi);
      REQUIRE(m0.size() == 1);
      CHECK(m0[0].subgroup.order() == 15);
      CHECK(chi.conj() * chi == permutation_character(G, m0[0].subgroup.members));
    }
  }
  SUBCASE("reducible input")
  {
    auto G = dihedral(6);
    Intersections I(Lattice::build(G));
    try {
      I.frak_M(regular_character(G));
      FAIL("expected a throw");
    } catch (Error const &e) {
      CHECK(e.kind() == ErrorKind::NotIrreducible);
    }
  }
}
