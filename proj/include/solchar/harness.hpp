#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "solchar/verify.hpp"

namespace solchar {

struct CatalogEntry {
  std::string name; // a group_from_name expression
  std::size_t expected_order = 0;
  std::vector<std::string> tags; // "solvable", "odd", "abelian", ...
};

/// The bundled catalog, in run order.
std::vector<CatalogEntry> const &default_catalog();
CatalogEntry const *find_catalog_entry(std::string const &name);

struct RunConfig {
  std::vector<std::string> groups; // names or group file paths
  std::vector<std::string> theorems;
  Caps caps;
  unsigned threads = 0; // 0 uses the hardware concurrency
};

/// Every catalog group and every theorem id.
RunConfig default_config();
/// Missing keys keep their defaults. Throws ConfigError on unknown keys,
/// wrong types or unknown theorem ids.
RunConfig parse_config(json const &j);

struct GroupOutcome {
  std::string group;
  std::vector<VerificationReport> reports; // sorted by (theorem, instance)
  std::optional<std::string> error;         // set when the group was abandoned
  double seconds = 0;
};

struct RunSummary {
  std::vector<GroupOutcome> groups; // sorted by name
  std::map<std::string, std::map<Status, std::size_t>> counts; // per theorem
  bool any_fail() const;
  bool any_error() const;
};

/// Builds a group, checking a catalog entry's expected order when the name
/// is in the catalog. Throws ConfigError on a mismatch.
GroupPtr build_group(std::string const &spec, Caps const &caps);

/// Verifies the theorems on one group; errors end up in the outcome.
GroupOutcome run_group(std::string const &spec, std::vector<std::string> const &theorems, Caps const &caps);

/// Groups run concurrently; the result does not depend on completion order.
RunSummary run_catalog(RunConfig const &config);

void write_ndjson(std::ostream &os, RunSummary const &s);
void write_summary(std::ostream &os, RunSummary const &s);
/// 0 clean, 1 any Fail, 2 any group abandoned on an error.
int exit_code(RunSummary const &s);

/// kind is one of table, subgroups, chiefseries, intersections; anything
/// else throws ConfigError.
json dump(std::string const &kind, Workspace const &ws);

} // namespace solchar
