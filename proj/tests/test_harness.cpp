#include <doctest.h>

#include <set>

#include "solchar/builtins.hpp"
#include "solchar/error.hpp"
#include "solchar/harness.hpp"

using namespace solchar;

namespace {

std::shared_ptr<Workspace> ws_of(std::string const &name) { return Workspace::create(group_from_name(name)); }

std::vector<VerificationReport> of_status(std::vector<VerificationReport> const &rs, Status s)
{
  std::vector<VerificationReport> out;
  for (auto const &r : rs)
    if (r.status == s)
      out.push_back(r);
  return out;
}

std::size_t row_of_degree(Workspace const &ws, std::int64_t d)
{
  for (std::size_t i = 0; i < ws.num_characters(); ++i)
    if (ws.degree(i) == d)
      return i;
  FAIL("no character of degree " << d);
  return 0;
}

// Irreducible theta of a proper subgroup with theta^G a multiple of chi.
bool induces_multiple(Workspace const &ws, std::size_t i)
{
  auto const &L = ws.lattice();
  auto const &chi = ws.chi(i);
  for (std::size_t c = 0; c + 1 < L.size(); ++c) {
    auto H = embed_subgroup(L[c].representative);
    auto T = CharacterTable::compute(H.group());
    for (auto const &theta : T->irreducibles()) {
      auto ind = induce(theta, H);
      auto e = inner_product(ind, chi);
      if (e.num > 0 && ind == chi * e)
        return true;
    }
  }
  return false;
}

json strip_seconds(json j)
{
  j.erase("seconds");
  return j;
}

} // namespace

TEST_CASE("config parsing")
{
  auto c = parse_config(json::parse(R"({"groups": ["gl23"], "theorems": ["C"], "caps": {"max_order": 100}})"));
  CHECK(c.groups == std::vector<std::string>{"gl23"});
  CHECK(c.theorems == std::vector<std::string>{"C"});
  CHECK(c.caps.max_order == 100);

  auto d = parse_config(json::object());
  CHECK(d.groups.size() == default_catalog().size());
  CHECK(d.theorems == theorem_ids());

  for (char const *bad : {R"([])", R"({"group": []})", R"({"theorems": ["Z"]})", R"({"groups": [1]})",
                          R"({"caps": {"max_order": -1}})", R"({"caps": {"speed": 1}})",
                          R"({"caps": {"max_order": 1000000}})"}) {
    CAPTURE(bad);
    try {
      parse_config(json::parse(bad));
      FAIL("accepted");
    } catch (Error const &e) {
      CHECK(e.kind() == ErrorKind::ConfigError);
    }
  }
}

TEST_CASE("catalog entries build with their expected orders")
{
  for (auto const &e : default_catalog()) {
    if (e.expected_order > 1000)
      continue;
    CAPTURE(e.name);
    CHECK(build_group(e.name, Caps{})->order() == e.expected_order);
  }
  CHECK_THROWS_AS(verify("D", *ws_of("cyclic(2)")), Error);
}

TEST_CASE("empty group list gives an empty summary")
{
  RunConfig c = default_config();
  c.groups.clear();
  auto s = run_catalog(c);
  CHECK(s.groups.empty());
  CHECK(s.counts.empty());
  CHECK(exit_code(s) == 0);
}

TEST_CASE("theorem C on gl23: one aggregated HypothesesNotSatisfied")
{
  RunConfig c;
  c.groups = {"gl23"};
  c.theorems = {"C"};
  auto s = run_catalog(c);
  REQUIRE(s.groups.size() == 1);
  auto const &rs = s.groups[0].reports;
  CHECK(of_status(rs, Status::HypothesesNotSatisfied).size() == 1);
  CHECK(of_status(rs, Status::Fail).empty());
  CHECK(exit_code(s) == 0);
  // Degree-2 quasi-primitive characters: the exhaustive scan finds no U.
  auto const hns = of_status(rs, Status::HypothesesNotSatisfied);
  auto const &scan = hns[0].payload.at("even_degree_scan");
  REQUIRE(scan.size() == 2);
  for (auto const &entry : scan) {
    CHECK(entry.at("character").at("degree") == 2);
    CHECK(entry.at("permutation_equation_subgroups").empty());
    CHECK(entry.at("subgroup_classes_scanned") == 16);
  }
}

TEST_CASE("theorem C on fullyramified(5,3) against a brute-force scan")
{
  auto ws = ws_of("fullyramified(5,3)");
  auto rs = verify("C", *ws);
  std::size_t checked = 0;
  for (auto const &r : rs) {
    if (!r.nontrivial)
      continue;
    CHECK(r.status == Status::Pass);
    CHECK(r.payload.at("U").at("subgroup").at("order") == 15);
    // Every subgroup class with chi conj(chi) = (1_U)^G, by induction.
    auto const &chi = ws->chi(*r.character);
    auto const norm = chi * chi.conj();
    std::vector<std::size_t> brute;
    for (std::size_t c = 0; c < ws->lattice().size(); ++c)
      if (permutation_character(ws->group(), ws->lattice()[c].representative.members) == norm)
        brute.push_back(c);
    CHECK(brute == std::vector<std::size_t>{r.payload.at("U").at("lattice_class").get<std::size_t>()});
    ++checked;
  }
  CHECK(checked == 12);
}

TEST_CASE("theorem A is trivial on abelian groups")
{
  for (char const *name : {"cyclic(12)", "abelian(2,4,6)", "abelian(3,15)"}) {
    auto rs = verify("A", *ws_of(name));
    CHECK(rs.size() == group_from_name(name)->order());
    CHECK(of_status(rs, Status::Pass).size() == rs.size());
  }
}

TEST_CASE("theorem K check against subgroup induction")
{
  auto fr = ws_of("fullyramified(5,3)");
  auto r = theorem_K_check(*fr, row_of_degree(*fr, 5));
  CHECK(r.status == Status::Pass);
  CHECK(r.nontrivial);
  CHECK(theorem_K_check(*fr, 0).status == Status::Pass);

  auto f21 = ws_of("frobenius(7,3)");
  try {
    theorem_K_check(*f21, row_of_degree(*f21, 3));
    FAIL("hypotheses accepted");
  } catch (Error const &e) {
    CHECK(e.kind() == ErrorKind::HypothesesNotSatisfied);
  }

  // Pass exactly when no proper subgroup induces a multiple of chi.
  for (char const *name : {"extraspecial(3)", "fullyramified(5,3)", "frobenius(7,3)", "abelian(3,3)", "cyclic(7)"}) {
    auto ws = ws_of(name);
    for (std::size_t i = 0; i < ws->num_characters(); ++i) {
      CAPTURE(name);
      CAPTURE(i);
      VerificationReport k;
      try {
        k = theorem_K_check(*ws, i);
      } catch (Error const &) {
        continue;
      }
      CHECK((k.status == Status::Pass) == !induces_multiple(*ws, i));
    }
  }
}

TEST_CASE("theorems on small groups produce no Fail")
{
  for (char const *name : {"dihedral(6)", "frobenius(7,3)", "extraspecial(3)", "gl23", "abelian(2,2,2)"}) {
    auto ws = ws_of(name);
    for (auto const &t : theorem_ids()) {
      CAPTURE(name);
      CAPTURE(t);
      auto rs = verify(t, *ws);
      REQUIRE(!rs.empty());
      CHECK(of_status(rs, Status::Fail).empty());
      // Either qualifying instances, or exactly one Vacuous report.
      if (!of_status(rs, Status::Vacuous).empty())
        CHECK(rs.size() == 1);
      std::set<std::string> keys;
      for (auto const &r : rs)
        keys.insert(r.instance);
      CHECK(keys.size() == rs.size());
    }
  }
}

TEST_CASE("frobenius(7,3): degree-3 characters are monomial")
{
  auto ws = ws_of("frobenius(7,3)");
  std::size_t nontrivial = 0;
  for (auto const &r : verify("O", *ws))
    if (r.nontrivial) {
      CHECK(r.status == Status::Pass);
      CHECK(r.payload.at("induced_from").at("H").at("order") == 7);
      ++nontrivial;
    }
  CHECK(nontrivial == 2);
}

TEST_CASE("R3 and I are vacuous on even order")
{
  for (char const *t : {"I", "R3"}) {
    auto rs = verify(t, *ws_of("gl23"));
    REQUIRE(rs.size() == 1);
    CHECK(rs[0].status == Status::Vacuous);
  }
}

TEST_CASE("run order does not change the report stream")
{
  RunConfig c;
  c.groups = {"frobenius(7,3)", "dihedral(6)", "extraspecial(3)", "cyclic(12)"};
  c.theorems = {"A", "G", "H", "R3"};
  c.threads = 1;
  auto one = run_catalog(c);
  c.threads = 3;
  std::reverse(c.groups.begin(), c.groups.end());
  auto three = run_catalog(c);
  REQUIRE(one.groups.size() == three.groups.size());
  for (std::size_t g = 0; g < one.groups.size(); ++g) {
    REQUIRE(one.groups[g].reports.size() == three.groups[g].reports.size());
    for (std::size_t k = 0; k < one.groups[g].reports.size(); ++k)
      CHECK(strip_seconds(to_json(one.groups[g].reports[k])) == strip_seconds(to_json(three.groups[g].reports[k])));
  }
  CHECK(one.counts == three.counts);
}

TEST_CASE("resource caps")
{
  Caps caps;
  caps.max_order = 100;
  auto out = run_group("fullyramified(5,3)", {"A"}, caps);
  REQUIRE(out.error);
  CHECK(out.reports.empty());
  RunSummary s;
  s.groups.push_back(out);
  CHECK(exit_code(s) == 2);

  caps = Caps{};
  caps.max_subgroup_classes = 3;
  CHECK(run_group("gl23", {"A"}, caps).error);

  caps = Caps{};
  caps.seconds_per_group = 1e-9;
  auto late = run_group("fullyramified(5,3)", {"A", "B"}, caps);
  REQUIRE(late.error);
  CHECK(late.error->find("budget") != std::string::npos);
}

TEST_CASE("dump documents")
{
  auto c2 = dump("table", *ws_of("cyclic(2)"));
  CHECK(c2.at("characters") == json::parse("[[1, 1], [1, -1]]"));
  CHECK(c2.at("classes").size() == 2);

  CHECK(dump("chiefseries", *ws_of("fullyramified(5,3)")).at("orders") == json::parse("[1, 5, 125, 375]"));
  CHECK(dump("intersections", *ws_of("dihedral(6)")).at("complete_intersections").size() == 4);

  auto subs = dump("subgroups", *ws_of("gl23"));
  CHECK(subs.at("classes").size() == 16);
  CHECK(subs.at("classes").back().at("order") == 48);

  auto f21 = dump("table", *ws_of("frobenius(7,3)"));
  bool irrational = false;
  for (auto const &row : f21.at("characters"))
    for (auto const &v : row)
      irrational = irrational || v.is_object();
  CHECK(irrational);

  CHECK_THROWS_AS(dump("lattice", *ws_of("cyclic(2)")), Error);
}
