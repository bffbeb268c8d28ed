#include "solchar/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <ostream>
#include <thread>
#include <tuple>

#include "solchar/builtins.hpp"
#include "solchar/error.hpp"

namespace solchar {

namespace {

CatalogEntry entry(std::string name, std::size_t order, std::vector<std::string> extra = {})
{
  std::vector<std::string> tags{"solvable"};
  if (order % 2 == 1)
    tags.push_back("odd");
  tags.insert(tags.end(), extra.begin(), extra.end());
  return CatalogEntry{std::move(name), order, std::move(tags)};
}

} // namespace

std::vector<CatalogEntry> const &default_catalog()
{
  static std::vector<CatalogEntry> const cat{
      entry("cyclic(2)", 2, {"abelian"}),
      entry("cyclic(7)", 7, {"abelian"}),
      entry("cyclic(12)", 12, {"abelian"}),
      entry("cyclic(30)", 30, {"abelian"}),
      entry("cyclic(48)", 48, {"abelian"}),
      entry("abelian(2,2)", 4, {"abelian"}),
      entry("abelian(3,3)", 9, {"abelian"}),
      entry("abelian(2,2,2)", 8, {"abelian"}),
      entry("abelian(2,4,6)", 48, {"abelian"}),
      entry("abelian(3,15)", 45, {"abelian"}),
      entry("dihedral(6)", 6),
      entry("dihedral(10)", 10),
      entry("frobenius(7,3)", 21),
      entry("frobenius(11,5)", 55),
      entry("frobenius(13,3)", 39),
      entry("extraspecial(3)", 27),
      entry("extraspecial(5)", 125),
      entry("fullyramified(5,3)", 375),
      entry("fullyramified(11,3)", 3993),
      entry("gl23", 48),
      entry("direct_product(fullyramified(5,3),cyclic(5))", 1875, {"product"}),
      entry("direct_product(fullyramified(5,3),cyclic(7))", 2625, {"product"}),
  };
  return cat;
}

CatalogEntry const *find_catalog_entry(std::string const &name)
{
  for (auto const &e : default_catalog())
    if (e.name == name)
      return &e;
  return nullptr;
}

RunConfig default_config()
{
  RunConfig c;
  for (auto const &e : default_catalog())
    c.groups.push_back(e.name);
  c.theorems = theorem_ids();
  return c;
}

RunConfig parse_config(json const &j)
{
  auto fail = [](std::string const &m) { throw Error(ErrorKind::ConfigError, m); };
  if (!j.is_object())
    fail("config must be a JSON object");
  RunConfig c = default_config();
  for (auto const &[k, v] : j.items()) {
    if (k == "groups") {
      if (!v.is_array())
        fail("'groups' must be an array of strings");
      c.groups.clear();
      for (auto const &g : v) {
        if (!g.is_string())
          fail("'groups' must be an array of strings");
        c.groups.push_back(g.get<std::string>());
      }
    } else if (k == "theorems") {
      if (!v.is_array())
        fail("'theorems' must be an array of strings");
      c.theorems.clear();
      for (auto const &t : v) {
        if (!t.is_string())
          fail("'theorems' must be an array of strings");
        auto id = t.get<std::string>();
        auto const &ids = theorem_ids();
        if (std::find(ids.begin(), ids.end(), id) == ids.end())
          fail("unknown theorem id '" + id + "'");
        c.theorems.push_back(id);
      }
    } else if (k == "caps") {
      if (!v.is_object())
        fail("'caps' must be an object");
      for (auto const &[ck, cv] : v.items()) {
        if (!cv.is_number() || cv.get<double>() < 0)
          fail("cap '" + ck + "' must be a nonnegative number");
        if (ck == "max_order")
          c.caps.max_order = cv.get<std::size_t>();
        else if (ck == "max_subgroup_classes")
          c.caps.max_subgroup_classes = cv.get<std::size_t>();
        else if (ck == "seconds_per_group")
          c.caps.seconds_per_group = cv.get<double>();
        else
          fail("unknown cap '" + ck + "'");
      }
      if (c.caps.max_order > kHardOrderLimit)
        fail("max_order above the hard limit " + std::to_string(kHardOrderLimit));
    } else if (k == "threads") {
      if (!v.is_number_unsigned())
        fail("'threads' must be a nonnegative integer");
      c.threads = v.get<unsigned>();
    } else {
      fail("unknown config key '" + k + "'");
    }
  }
  return c;
}

bool RunSummary::any_fail() const
{
  for (auto const &[t, m] : counts)
    if (auto it = m.find(Status::Fail); it != m.end() && it->second > 0)
      return true;
  return false;
}

bool RunSummary::any_error() const
{
  return std::any_of(groups.begin(), groups.end(), [](GroupOutcome const &g) { return g.error.has_value(); });
}

GroupPtr build_group(std::string const &spec, Caps const &caps)
{
  GroupPtr G;
  try {
    G = resolve_group(spec, std::min(caps.max_order, kHardOrderLimit));
  } catch (Error const &e) {
    if (e.kind() == ErrorKind::CapExceeded)
      throw Error(ErrorKind::ResourceCap, e.what());
    throw;
  }
  if (auto const *e = find_catalog_entry(spec); e && G->order() != e->expected_order)
    throw Error(ErrorKind::ConfigError, spec + " has order " + std::to_string(G->order()) + ", catalog expects " +
                                            std::to_string(e->expected_order));
  return G;
}

GroupOutcome run_group(std::string const &spec, std::vector<std::string> const &theorems, Caps const &caps)
{
  GroupOutcome out;
  out.group = spec;
  double const t0 = monotonic_seconds();
  try {
    auto ws = Workspace::create(build_group(spec, caps), caps);
    for (auto const &t : theorems) {
      auto r = verify(t, *ws);
      for (auto &x : r)
        x.group = spec;
      out.reports.insert(out.reports.end(), std::make_move_iterator(r.begin()), std::make_move_iterator(r.end()));
    }
  } catch (std::exception const &e) {
    out.error = e.what();
    out.reports.clear();
  }
  std::stable_sort(out.reports.begin(), out.reports.end(), [](auto const &a, auto const &b) {
    return std::tie(a.theorem, a.instance) < std::tie(b.theorem, b.instance);
  });
  out.seconds = monotonic_seconds() - t0;
  return out;
}

RunSummary run_catalog(RunConfig const &config)
{
  RunSummary s;
  s.groups.resize(config.groups.size());
  unsigned threads = config.threads ? config.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, config.groups.size())));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < config.groups.size();)
      s.groups[i] = run_group(config.groups[i], config.theorems, config.caps);
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t)
    pool.emplace_back(worker);
  worker();
  for (auto &t : pool)
    t.join();
  std::sort(s.groups.begin(), s.groups.end(),
            [](GroupOutcome const &a, GroupOutcome const &b) { return a.group < b.group; });
  for (auto const &g : s.groups)
    for (auto const &r : g.reports)
      ++s.counts[r.theorem][r.status];
  return s;
}

void write_ndjson(std::ostream &os, RunSummary const &s)
{
  for (auto const &g : s.groups) {
    if (g.error)
      os << json{{"group", g.group}, {"error", *g.error}}.dump() << '\n';
    for (auto const &r : g.reports)
      os << to_json(r).dump() << '\n';
  }
}

void write_summary(std::ostream &os, RunSummary const &s)
{
  char line[160];
  std::snprintf(line, sizeof line, "%-6s %8s %8s %8s %8s %12s\n", "thm", "Pass", "Fail", "HNS", "Vacuous",
                "nontrivial");
  os << line;
  for (auto const &t : theorem_ids()) {
    auto it = s.counts.find(t);
    if (it == s.counts.end())
      continue;
    auto get = [&](Status st) {
      auto jt = it->second.find(st);
      return jt == it->second.end() ? std::size_t(0) : jt->second;
    };
    std::size_t nontrivial = 0;
    for (auto const &g : s.groups)
      for (auto const &r : g.reports)
        nontrivial += r.theorem == t && r.status == Status::Pass && r.nontrivial;
    std::snprintf(line, sizeof line, "%-6s %8zu %8zu %8zu %8zu %12zu\n", t.c_str(), get(Status::Pass),
                  get(Status::Fail), get(Status::HypothesesNotSatisfied), get(Status::Vacuous), nontrivial);
    os << line;
  }
  for (auto const &g : s.groups) {
    std::snprintf(line, sizeof line, "%-48s %8.2fs%s\n", g.group.c_str(), g.seconds, g.error ? "  ERROR" : "");
    os << line;
    if (g.error)
      os << "  " << *g.error << '\n';
  }
}

int exit_code(RunSummary const &s)
{
  if (s.any_error())
    return 2;
  return s.any_fail() ? 1 : 0;
}

json dump(std::string const &kind, Workspace const &ws)
{
  Group const &G = *ws.group();
  auto const &L = ws.lattice();
  json doc{{"group", G.name()}, {"order", G.order()}, {"kind", kind}};
  if (kind == "table") {
    json classes = json::array();
    for (auto const &c : G.classes())
      classes.push_back(json{{"representative", element_json(G, c.representative)},
                             {"size", c.size()},
                             {"element_order", c.element_order}});
    json rows = json::array();
    for (std::size_t i = 0; i < ws.num_characters(); ++i) {
      json row = json::array();
      for (auto const &v : ws.chi(i).values)
        row.push_back(to_json(v));
      rows.push_back(std::move(row));
    }
    doc["classes"] = std::move(classes);
    doc["characters"] = std::move(rows);
  } else if (kind == "subgroups") {
    auto const &maxi = L.maximal_classes();
    auto const &norm = L.normal_classes();
    json classes = json::array();
    for (std::size_t c = 0; c < L.size(); ++c) {
      json j = subgroup_json(L[c].representative);
      j["class"] = c;
      j["class_size"] = L[c].class_size();
      j["normal"] = std::find(norm.begin(), norm.end(), c) != norm.end();
      j["maximal"] = std::find(maxi.begin(), maxi.end(), c) != maxi.end();
      classes.push_back(std::move(j));
    }
    doc["classes"] = std::move(classes);
  } else if (kind == "chiefseries") {
    json orders = json::array(), chain = json::array();
    for (auto const &H : L.chief_series().chain) {
      orders.push_back(H.order());
      chain.push_back(subgroup_json(H));
    }
    doc["orders"] = std::move(orders);
    doc["chain"] = std::move(chain);
  } else if (kind == "intersections") {
    json ws_json = json::array();
    for (auto const &w : ws.intersections().complete_intersections())
      ws_json.push_back(witness_json(w));
    doc["complete_intersections"] = std::move(ws_json);
  } else {
    throw Error(ErrorKind::ConfigError, "unknown dump kind '" + kind + "'");
  }
  return doc;
}

} // namespace solchar
