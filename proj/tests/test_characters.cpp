#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>

#include "solchar/builtins.hpp"
#include "solchar/characters.hpp"
#include "solchar/error.hpp"
#include "solchar/lattice.hpp"

using namespace solchar;

namespace {

std::vector<std::int64_t> sorted_degrees(CharacterTable const &T)
{
  std::vector<std::int64_t> d;
  for (std::size_t i = 0; i < T.size(); ++i)
    d.push_back(T.degree(i));
  std::sort(d.begin(), d.end());
  return d;
}

Subgroup class_rep_of_order(Lattice const &L, std::size_t order)
{
  for (auto const &c : L.classes())
    if (c.order() == order)
      return c.representative;
  FAIL("no subgroup of order " << order);
  return {};
}

// Central characters omega(C_i) = |C_i| chi(g_i)/chi(1) multiply like the
// class sums. Structure constants are counted directly from the table.
void check_class_algebra(CharacterTable const &T)
{
  Group const &G = *T.group();
  std::size_t const k = G.num_classes();
  std::vector<std::vector<std::vector<std::int64_t>>> a(k, std::vector<std::vector<std::int64_t>>(k, std::vector<std::int64_t>(k, 0)));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (Elem x : G.classes()[i].members)
        for (std::size_t r = 0; r < k; ++r) {
          Elem z = G.classes()[r].representative;
          Elem y = G.mul(G.inv(x), z);
          a[i][j][r] += G.class_of(y) == j;
        }
  for (auto const &chi : T.irreducibles()) {
    Rational d(chi.int_degree());
    std::vector<Cyclotomic> w;
    for (std::size_t i = 0; i < k; ++i)
      w.push_back(chi[i] * (Rational(static_cast<std::int64_t>(G.classes()[i].size())) / d));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        Cyclotomic rhs(0);
        for (std::size_t r = 0; r < k; ++r)
          rhs += w[r] * Rational(a[i][j][r]);
        CHECK(w[i] * w[j] == rhs);
      }
  }
}

void check_orthogonality_exact(CharacterTable const &T)
{
  for (std::size_t i = 0; i < T.size(); ++i)
    for (std::size_t j = 0; j < T.size(); ++j)
      CHECK(inner_product(T[i], T[j]) == Rational(i == j ? 1 : 0));
  Group const &G = *T.group();
  for (std::size_t r = 0; r < G.num_classes(); ++r)
    for (std::size_t s = 0; s < G.num_classes(); ++s) {
      Cyclotomic sum(0);
      for (auto const &chi : T.irreducibles())
        sum += chi[r] * chi[G.inverse_class(s)];
      Cyclotomic want(r == s ? static_cast<std::int64_t>(G.classes()[r].centralizer_order) : 0);
      CHECK(sum == want);
    }
}

std::size_t row_with(CharacterTable const &T, std::int64_t degree, bool faithful)
{
  for (std::size_t i = 0; i < T.size(); ++i)
    if (T.degree(i) == degree && (kernel(T[i]).count() == 1) == faithful)
      return i;
  FAIL("no such row");
  return 0;
}

} // namespace

TEST_CASE("cyclic group of order two")
{
  auto T = CharacterTable::compute(cyclic(2));
  REQUIRE(T->size() == 2);
  CHECK(T->irreducibles()[0].values == std::vector<Cyclotomic>{Cyclotomic(1), Cyclotomic(1)});
  CHECK(T->irreducibles()[1].values == std::vector<Cyclotomic>{Cyclotomic(1), Cyclotomic(-1)});
}

TEST_CASE("dihedral group of order six decomposes its regular character")
{
  auto G = dihedral(6);
  auto T = CharacterTable::compute(G);
  CHECK(sorted_degrees(*T) == std::vector<std::int64_t>{1, 1, 2});
  auto reg = regular_character(G);
  for (std::size_t i = 0; i < T->size(); ++i)
    CHECK(inner_product(reg, (*T)[i]) == Rational(T->degree(i)));
  CHECK(trivial_character(G) == (*T)[0]);
}

TEST_CASE("GL(2,3) table")
{
  auto G = gl23();
  auto T = CharacterTable::compute(G);
  CHECK(G->num_classes() == 8);
  CHECK(sorted_degrees(*T) == std::vector<std::int64_t>{1, 1, 2, 2, 2, 3, 3, 4});
  check_orthogonality_exact(*T);
  check_class_algebra(*T);

  SUBCASE("a second modular prime gives the same table")
  {
    CHECK(T->modular_prime() == 73);
    auto U = CharacterTable::compute(G, TableOptions{97});
    CHECK(U->modular_prime() == 97);
    CHECK(U->irreducibles() == T->irreducibles());
  }
}

TEST_CASE("tables of the larger catalog groups are valid")
{
  for (auto const *name : {"frobenius(7,3)", "frobenius(11,5)", "extraspecial(3)", "fullyramified(5,3)", "abelian(2,4,6)"}) {
    CAPTURE(name);
    auto G = group_from_name(name);
    auto T = CharacterTable::compute(G);
    std::int64_t s = 0;
    for (std::size_t i = 0; i < T->size(); ++i) {
      s += T->degree(i) * T->degree(i);
      CHECK(G->order() % T->degree(i) == 0);
    }
    CHECK(s == static_cast<std::int64_t>(G->order()));
    check_orthogonality_exact(*T);
    for (std::size_t i = 0; i < T->size(); ++i)
      for (std::size_t j = 0; j < T->size(); ++j)
        CHECK(T->scaled_row_product(i, j) == (i == j ? static_cast<std::int64_t>(G->order()) : 0));
  }
}

TEST_CASE("fast decomposition agrees with exact inner products")
{
  auto G = group_from_name("fullyramified(5,3)");
  auto T = CharacterTable::compute(G);
  auto L = Lattice::build(G);
  for (auto const &c : L->classes()) {
    auto pc = permutation_character(G, c.representative.members);
    auto m = T->decompose(pc);
    for (std::size_t i = 0; i < T->size(); ++i)
      CHECK(Rational(m[i]) == inner_product(pc, (*T)[i]));
  }
  auto sq = (*T)[T->size() - 1].conj() * (*T)[T->size() - 1];
  auto m = T->decompose(sq);
  for (std::size_t i = 0; i < T->size(); ++i)
    CHECK(Rational(m[i]) == inner_product(sq, (*T)[i]));
}

TEST_CASE("induction and restriction")
{
  auto G = frobenius(7, 3);
  auto T = CharacterTable::compute(G);
  auto L = Lattice::build(G);

  SUBCASE("a nontrivial linear character of C7 induces irreducibly")
  {
    auto H = embed_subgroup(class_rep_of_order(*L, 7));
    auto TH = CharacterTable::compute(H.group());
    auto psi = induce((*TH)[1], H);
    CHECK(psi.int_degree() == 3);
    CHECK(inner_product(psi, psi) == Rational(1));
  }

  SUBCASE("Frobenius reciprocity on every subgroup class")
  {
    for (auto const &c : L->classes()) {
      auto H = embed_subgroup(c.representative);
      auto TH = CharacterTable::compute(H.group());
      for (auto const &theta : TH->irreducibles())
        for (auto const &chi : T->irreducibles())
          CHECK(inner_product(induce(theta, H), chi) == inner_product(theta, restrict_to(chi, H)));
      CHECK(induce(trivial_character(H.group()), H) == permutation_character(G, c.representative.members));
    }
  }

  SUBCASE("restricting to the whole group and inducing back is the identity")
  {
    auto H = embed_subgroup(whole_group(G));
    for (auto const &chi : T->irreducibles())
      CHECK(induce(restrict_to(chi, H), H) == chi);
  }

  SUBCASE("restriction rejects a subgroup of another group")
  {
    auto H = embed_subgroup(whole_group(dihedral(6)));
    CHECK_THROWS_AS(restrict_to((*T)[0], H), Error);
  }
}

TEST_CASE("permutation characters")
{
  auto G = group_from_name("fullyramified(5,3)");
  auto L = Lattice::build(G);
  CHECK(permutation_character(G, whole_group(G).members) == trivial_character(G));
  CHECK(permutation_character(G, trivial_subgroup(G).members) == regular_character(G));
  auto U = class_rep_of_order(*L, 15);
  auto pc = permutation_character(G, U.members);
  CHECK(pc.int_degree() == 25);
  for (auto const &v : pc.values) {
    REQUIRE(v.is_integer());
    CHECK(!(v.to_rational() < Rational(0)));
  }
}

TEST_CASE("values on GL(2,3)")
{
  auto G = gl23();
  auto T = CharacterTable::compute(G);
  auto const &chi = (*T)[row_with(*T, 2, true)];
  Elem y = 0;
  for (Elem g = 0; g < G->order(); ++g)
    if (G->element_order(g) == 8)
      y = g;
  REQUIRE(G->element_order(y) == 8);
  CHECK(!chi.at(y).is_zero());
  CHECK(norm_squared(chi, G->mul(y, y)) == Cyclotomic(0));
  CHECK(norm_squared(chi, 0) == Cyclotomic(4));
  CHECK(n_chi(chi) == 24);
  CHECK(n_chi(trivial_character(G)) == G->exponent());
}

TEST_CASE("values on the Frobenius group of order 21")
{
  auto G = frobenius(7, 3);
  auto T = CharacterTable::compute(G);
  auto const &chi = (*T)[T->size() - 1];
  REQUIRE(chi.int_degree() == 3);
  for (Elem g = 0; g < G->order(); ++g)
    if (G->element_order(g) == 7)
      CHECK(norm_squared(chi, g) == Cyclotomic(2));
  CHECK(n_chi(chi) == 7);
  CHECK(n_chi(chi) == G->order() / 3);
}

TEST_CASE("kernels and centers")
{
  auto G = group_from_name("fullyramified(5,3)");
  auto T = CharacterTable::compute(G);
  CHECK(kernel((*T)[0]).count() == G->order());
  CHECK(center_of((*T)[0]).count() == G->order());
  auto const &chi = (*T)[T->size() - 1];
  REQUIRE(chi.int_degree() == 5);
  auto Z = center_of(chi);
  CHECK(Z.count() == 5);
  CHECK(Z == center(*G));
  CHECK(is_normal(*G, kernel(chi)));

  auto A = abelian({2, 4, 6});
  auto TA = CharacterTable::compute(A);
  for (auto const &lam : TA->irreducibles())
    CHECK(center_of(lam).count() == A->order());
}

TEST_CASE("commutator sums recover |chi(x)|^2 on irreducible restrictions")
{
  for (auto const *name : {"gl23", "fullyramified(5,3)", "extraspecial(3)"}) {
    CAPTURE(name);
    auto G = group_from_name(name);
    auto T = CharacterTable::compute(G);
    auto L = Lattice::build(G);
    int instances = 0;
    for (auto const &N : L->normal_subgroups())
      for (auto const &chi : T->irreducibles()) {
        if (norm_on(chi, N.members) != Rational(1))
          continue;
        auto const ks = N.members.elements();
        for (auto const &cl : G->classes()) {
          Elem x = cl.representative;
          Cyclotomic sum(0);
          for (Elem k : ks)
            sum += chi.at(G->commutator(x, k));
          Rational scale(chi.int_degree(), static_cast<std::int64_t>(ks.size()));
          CHECK(norm_squared(chi, x) == sum * scale);
          ++instances;
        }
      }
    CHECK(instances > 0);
  }
}

TEST_CASE("inner products across different groups are rejected")
{
  auto a = trivial_character(cyclic(3));
  auto b = trivial_character(cyclic(3));
  CHECK_THROWS_AS(inner_product(a, b), Error);
  try {
    inner_product(a, b);
  } catch (Error const &e) {
    CHECK(e.kind() == ErrorKind::GroupMismatch);
  }
}
