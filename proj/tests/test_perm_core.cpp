#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "solchar/builtins.hpp"
#include "solchar/error.hpp"
#include "solchar/numtheory.hpp"
#include "solchar/subgroup.hpp"

using namespace solchar;

namespace {

// Saturates a generator set under all pairwise products until no new
// permutation appears. Independent of the BFS closure in Group.
std::set<std::vector<Point>> saturate_by_products(std::vector<Permutation> const &gens)
{
  std::set<std::vector<Point>> all;
  std::vector<Permutation> list;
  for (auto const &g : gens)
    if (all.insert(g.images()).second)
      list.push_back(g);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Permutation> fresh;
    for (auto const &a : list)
      for (auto const &b : list) {
        auto c = a * b;
        if (all.insert(c.images()).second) {
          fresh.push_back(c);
          grew = true;
        }
      }
    list.insert(list.end(), fresh.begin(), fresh.end());
  }
  return all;
}

std::multiset<std::size_t> brute_class_sizes(Group const &G)
{
  std::vector<Permutation> el;
  for (Elem i = 0; i < G.order(); ++i)
    el.push_back(G.permutation(i));
  std::set<std::vector<Point>> seen;
  std::multiset<std::size_t> sizes;
  for (auto const &x : el) {
    if (seen.count(x.images()))
      continue;
    std::set<std::vector<Point>> cls;
    for (auto const &g : el)
      cls.insert((g.inverse() * x * g).images());
    seen.insert(cls.begin(), cls.end());
    sizes.insert(cls.size());
  }
  return sizes;
}

} // namespace

TEST_CASE("permutation basics")
{
  auto a = Permutation::from_cycles(4, {{1, 2, 3, 4}}, true);
  auto b = Permutation::from_cycles(4, {{1, 2}}, true);
  CHECK((a * a.inverse()).is_identity());
  CHECK((a * b)[0] == b[a[0]]);
  CHECK(a.to_cycle_string() == "(1,2,3,4)");
  CHECK_THROWS_AS(Permutation(std::vector<Point>{0, 0, 1}), Error);
  CHECK_THROWS_AS(Permutation::from_cycles(3, {{1, 4}}, true), Error);
}

TEST_CASE("closure orders")
{
  auto c4 = Group::from_generators("c4", 4, {Permutation::from_cycles(4, {{0, 1, 2, 3}}, false)});
  CHECK(c4->order() == 4);
  CHECK(gl23()->order() == 48);

  auto fr = fullyramified(5, 3);
  CHECK(fr->order() == 375);
  CHECK(saturate_by_products(fr->generator_permutations()).size() == 375);
  CHECK(saturate_by_products(gl23()->generator_permutations()).size() == 48);

  CHECK(extraspecial(5)->order() == 125);
  CHECK(extraspecial(5)->exponent() == 5);
  CHECK(frobenius(7, 3)->order() == 21);
  CHECK(dihedral(10)->order() == 10);
  CHECK(abelian({2, 4, 6})->order() == 48);
  CHECK(fullyramified(11, 3)->order() == 3993);
}

TEST_CASE("closure errors")
{
  auto g = Permutation::from_cycles(10, {{0, 1, 2, 3, 4, 5, 6, 7, 8, 9}}, false);
  CHECK_THROWS_AS(Group::from_generators("c10", 10, {g}, 5), Error);
  try {
    Group::from_generators("c10", 10, {g}, 5);
  } catch (Error const &e) {
    CHECK(e.kind() == ErrorKind::CapExceeded);
  }
  CHECK_THROWS_AS(Group::from_generators("bad", 5, {g}), Error);
}

TEST_CASE("multiplication table agrees with permutations")
{
  for (auto G : {gl23(), dihedral(10), frobenius(13, 3)}) {
    for (Elem a = 0; a < G->order(); ++a)
      for (Elem b = 0; b < G->order(); b += 3)
        REQUIRE(G->permutation(G->mul(a, b)) == G->permutation(a) * G->permutation(b));
    for (Elem a = 0; a < G->order(); ++a)
      REQUIRE(G->find(G->permutation(a)) == a);
  }
  auto fr = fullyramified(5, 3);
  for (Elem a = 0; a < fr->order(); a += 7)
    for (Elem b = 0; b < fr->order(); b += 11)
      REQUIRE(fr->permutation(fr->mul(a, b)) == fr->permutation(a) * fr->permutation(b));
}

TEST_CASE("conjugacy classes")
{
  auto c3 = cyclic(3);
  CHECK(c3->num_classes() == 3);

  auto d6 = dihedral(6);
  std::multiset<std::size_t> sizes;
  for (auto const &c : d6->classes())
    sizes.insert(c.size());
  CHECK(sizes == std::multiset<std::size_t>{1, 2, 3});
  CHECK(sizes == brute_class_sizes(*d6));

  auto gl = gl23();
  CHECK(gl->num_classes() == 8);
  std::multiset<std::size_t> gsizes;
  for (auto const &c : gl->classes())
    gsizes.insert(c.size());
  CHECK(gsizes == brute_class_sizes(*gl));

  for (auto G : {gl, fullyramified(5, 3), frobenius(11, 5)}) {
    std::size_t total = 0;
    for (auto const &c : G->classes()) {
      total += c.size();
      CHECK(G->order() % c.size() == 0);
      CHECK(c.size() * c.centralizer_order == G->order());
      CHECK(std::binary_search(c.members.begin(), c.members.end(), c.representative));
    }
    CHECK(total == G->order());
    CHECK(G->classes()[0].representative == 0);
    for (std::size_t c = 0; c < G->num_classes(); ++c)
      CHECK(G->power_class(c, 1) == c);
  }
}

TEST_CASE("p-parts")
{
  auto c6 = cyclic(6);
  Elem x = c6->generators()[0];
  CHECK(c6->p_part(x, 2) == c6->pow(x, 3));
  auto c8 = cyclic(8);
  Elem y = c8->generators()[0];
  CHECK(c8->p_part(y, 2) == y);
  auto c15 = cyclic(15);
  Elem z = c15->generators()[0];
  CHECK(c15->p_part(z, 3) == c15->pow(z, 10));
  CHECK_THROWS_AS(c6->p_part(x, 4), Error);

  for (auto G : {gl23(), abelian({2, 2, 12}), frobenius(13, 3)}) {
    for (Elem a = 0; a < G->order(); ++a) {
      std::uint64_t o = G->element_order(a);
      for (auto p : prime_divisors(G->order())) {
        Elem ap = G->p_part(a, p);
        CHECK(G->mul(ap, a) == G->mul(a, ap));
        CHECK(G->element_order(ap) == p_part_of(o, p));
        // The complementary factor has order coprime to p.
        Elem rest = G->mul(G->inv(ap), a);
        CHECK(G->element_order(rest) % p != 0);
        CHECK(G->mul(ap, rest) == a);
      }
    }
  }
}

TEST_CASE("centralizers")
{
  auto d6 = dihedral(6);
  CHECK(centralizer(d6, 0).order() == 6);
  Elem refl = 0;
  for (Elem a = 0; a < 6; ++a)
    if (d6->element_order(a) == 2)
      refl = a;
  auto C = centralizer(d6, refl);
  CHECK(C.order() == 2);
  for (Elem g = 0; g < 6; ++g)
    CHECK(C.contains(g) == (d6->mul(g, refl) == d6->mul(refl, g)));

  auto gl = gl23();
  auto Z = center(*gl);
  CHECK(Z.count() == 2);
  for (Elem z : Z.elements())
    CHECK(centralizer(gl, z).order() == 48);
  CHECK_THROWS_AS(centralizer(d6, 99), Error);
}

TEST_CASE("quotients")
{
  auto d6 = dihedral(6);
  auto whole = whole_group(d6);
  CHECK(quotient_group(d6, whole).group->order() == 1);

  ElementSet rot(6);
  for (Elem a = 0; a < 6; ++a)
    if (d6->element_order(a) != 2)
      rot.insert(a);
  auto q = quotient_group(d6, make_subgroup(d6, rot));
  CHECK(q.group->order() == 2);

  auto fr = fullyramified(5, 3);
  ElementSet E(fr->order());
  for (Elem a = 0; a < fr->order(); ++a)
    if (is_power_of(fr->element_order(a), 5))
      E.insert(a);
  REQUIRE(E.count() == 125);
  auto qe = quotient_group(fr, make_subgroup(fr, E));
  CHECK(qe.group->order() == 3);
  for (Elem a = 0; a < fr->order(); ++a) {
    CHECK((qe.projection[a] == 0) == E.contains(a));
    for (Elem b = 0; b < fr->order(); b += 13)
      REQUIRE(qe.projection[fr->mul(a, b)] ==
              qe.group->mul(qe.projection[a], qe.projection[b]));
  }

  ElementSet refl(6, {0});
  for (Elem a = 0; a < 6; ++a)
    if (d6->element_order(a) == 2) {
      refl.insert(a);
      break;
    }
  CHECK_THROWS_AS(quotient_group(d6, make_subgroup(d6, refl)), Error);
}

TEST_CASE("solvability and derived subgroups")
{
  CHECK(is_solvable(*gl23()));
  CHECK(is_solvable(*fullyramified(5, 3)));
  auto a5 = Group::from_generators(
      "a5", 5,
      {Permutation::from_cycles(5, {{1, 2, 3}}, true), Permutation::from_cycles(5, {{1, 2, 3, 4, 5}}, true)});
  CHECK(a5->order() == 60);
  CHECK_FALSE(is_solvable(*a5));
  auto gl = gl23();
  ElementSet all(48);
  for (Elem a = 0; a < 48; ++a)
    all.insert(a);
  CHECK(derived_subgroup(*gl, all).count() == 24);
}

TEST_CASE("group names and files")
{
  auto g = group_from_name("direct_product(fullyramified(5,3), cyclic(5))");
  CHECK(g->order() == 1875);
  CHECK(g->name() == "direct_product(fullyramified(5,3),cyclic(5))");
  CHECK(group_from_name("gl23")->order() == 48);
  CHECK(group_from_name("abelian(2,2,2)")->order() == 8);
  CHECK_THROWS_AS(group_from_name("cyclic(3"), Error);
  CHECK_THROWS_AS(group_from_name("nosuch(3)"), Error);
  CHECK_THROWS_AS(group_from_name("frobenius(7,4)"), Error);

  auto s3 = group_from_json_text(
      R"({"name":"s3","degree":3,"generators":[[[1,2,3]],[[1,2]]]})");
  CHECK(s3->order() == 6);
  CHECK(s3->name() == "s3");
  CHECK_THROWS_AS(group_from_json_text("{"), Error);
  CHECK_THROWS_AS(group_from_json_text(R"({"degree":3,"generators":[[[1,1]]]})"), Error);
}

TEST_CASE("element sets")
{
  ElementSet a(100, {1, 5, 70}), b(100, {1, 6, 70});
  CHECK(a.count() == 3);
  CHECK(a < b);
  CHECK_FALSE(b < a);
  CHECK((a & b).count() == 2);
  CHECK((a | b).count() == 4);
  CHECK((a & b).is_subset_of(a));
  CHECK(a.elements() == std::vector<Elem>{1, 5, 70});
}
