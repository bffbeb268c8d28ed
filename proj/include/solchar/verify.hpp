#pragma once

#include <optional>
#include <string>
#include <vector>

#include "solchar/serialize.hpp"
#include "solchar/workspace.hpp"

namespace solchar {

enum class Status { Pass, Fail, HypothesesNotSatisfied, Vacuous };

char const *to_string(Status s) noexcept;

struct VerificationReport {
  std::string theorem;
  std::string group;
  std::string instance; // stable key, unique per (group, theorem)
  std::optional<std::size_t> character;
  Status status = Status::Pass;
  /// Degenerate instances (linear characters, U = G) pass by inspection.
  bool nontrivial = false;
  json payload = json::object();
  double seconds = 0;
};

json to_json(VerificationReport const &r);

/// Ids accepted by verify, in canonical order.
std::vector<std::string> const &theorem_ids();

/// Reports for one theorem on one group: one per qualifying instance, plus
/// one aggregated HypothesesNotSatisfied report listing the instances that
/// fail the hypotheses. With no qualifying instance the result is a single
/// Vacuous report. Throws ConfigError for an unknown id.
std::vector<VerificationReport> verify(std::string const &theorem, Workspace const &ws);

/// No proper subgroup H carries a character theta with theta^G = e chi.
/// It suffices to look at maximal M: a solution is a nonzero nonnegative
/// vector over Irr(M) orthogonal to every restriction psi|_M (psi != chi);
/// with nonnegative entries that is possible exactly when some psi_j of M
/// is a constituent of chi|_M alone.
VerificationReport theorem_K_check(Workspace const &ws, std::size_t chi);

} // namespace solchar
