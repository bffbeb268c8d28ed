#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "solchar/error.hpp"
#include "solchar/harness.hpp"

using namespace solchar;

namespace {

std::vector<std::string> split_ids(std::string const &s)
{
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string t; std::getline(ss, t, ',');)
    if (!t.empty())
      out.push_back(t);
  return out;
}

void write_stream(std::string const &path, RunSummary const &s)
{
  if (path.empty())
    return;
  if (path == "-") {
    write_ndjson(std::cout, s);
    return;
  }
  std::ofstream os(path);
  if (!os)
    throw Error(ErrorKind::ConfigError, "cannot write " + path);
  write_ndjson(os, s);
}

RunConfig load_config(std::string const &path)
{
  if (path.empty())
    return default_config();
  std::ifstream is(path);
  if (!is)
    throw Error(ErrorKind::ConfigError, "cannot read " + path);
  json j;
  try {
    j = json::parse(is);
  } catch (json::parse_error const &e) {
    throw Error(ErrorKind::ConfigError, path + ": " + e.what());
  }
  return parse_config(j);
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Character-theoretic verifier for finite solvable groups"};
  app.require_subcommand(1);

  std::string group, theorems = "A,B,C,E,F,G,H,I,J,K,M,N,O,R3", json_out, config_path, kind;
  std::size_t max_order = Caps{}.max_order;

  auto *verify_cmd = app.add_subcommand("verify", "Verify theorems on one group");
  verify_cmd->add_option("--group", group, "Group expression or group file")->required();
  verify_cmd->add_option("--theorems", theorems, "Comma-separated theorem ids");
  verify_cmd->add_option("--json", json_out, "Write the report stream here ('-' for stdout)");
  verify_cmd->add_option("--max-order", max_order, "Largest group order accepted");

  auto *catalog_cmd = app.add_subcommand("catalog", "Bundled catalog");
  catalog_cmd->require_subcommand(1);
  auto *run_cmd = catalog_cmd->add_subcommand("run", "Verify the configured theorems on the configured groups");
  run_cmd->add_option("--config", config_path, "JSON config {groups, theorems, caps}");
  run_cmd->add_option("--json", json_out, "Write the report stream here ('-' for stdout)");
  auto *list_cmd = catalog_cmd->add_subcommand("list", "Print the bundled catalog");

  auto *dump_cmd = app.add_subcommand("dump", "Print a JSON document about one group");
  dump_cmd->add_option("--kind", kind, "Document kind")
      ->required()
      ->check(CLI::IsMember({"table", "subgroups", "chiefseries", "intersections"}));
  dump_cmd->add_option("--group", group, "Group expression or group file")->required();
  dump_cmd->add_option("--max-order", max_order, "Largest group order accepted");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const &e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*verify_cmd) {
      RunConfig c;
      c.groups = {group};
      c.theorems = split_ids(theorems);
      c.caps.max_order = max_order;
      c = parse_config(json{{"groups", c.groups}, {"theorems", c.theorems}, {"caps", {{"max_order", max_order}}}});
      auto s = run_catalog(c);
      for (auto const &g : s.groups)
        for (auto const &r : g.reports)
          std::cout << r.theorem << ' ' << r.instance << ' ' << to_string(r.status) << '\n';
      write_summary(std::cout, s);
      write_stream(json_out, s);
      return exit_code(s);
    }
    if (*run_cmd) {
      auto s = run_catalog(load_config(config_path));
      write_summary(std::cout, s);
      write_stream(json_out, s);
      return exit_code(s);
    }
    if (*list_cmd) {
      for (auto const &e : default_catalog())
        std::cout << json{{"name", e.name}, {"order", e.expected_order}, {"tags", e.tags}}.dump() << '\n';
      return 0;
    }
    if (*dump_cmd) {
      Caps caps;
      caps.max_order = max_order;
      auto ws = Workspace::create(build_group(group, caps), caps);
      std::cout << dump(kind, *ws).dump(2) << '\n';
      return 0;
    }
  } catch (std::exception const &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
