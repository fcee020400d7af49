#pragma once

// Command-line front end: instance files, the describe / gamma / verify /
// graph commands and their exit codes.

#include "l2poly/graphrep.hpp"
#include "l2poly/oracle.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace l2poly::cli {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int verify_failed = 1;
inline constexpr int parse_error = 2;
inline constexpr int negative_cycle = 3;
inline constexpr int infeasible = 4;  // also: enumeration cap exceeded
}  // namespace exit_code

/// Malformed instance file, description file or option value.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Either an L2 pair (e1, e2) or an L-natural pair (lnat), 1-based in the file.
struct Instance {
  int n = 0;
  std::optional<L2Instance> l2;
  std::optional<std::pair<LnatSystem, LnatSystem>> lnat;
  std::optional<Window> window;

  bool is_lnat() const noexcept { return lnat.has_value(); }
  /// The L2 instance itself, or the (n+1)-dimensional embedding of the L-natural pair.
  L2Instance graph_instance() const;
};

/// Throws ParseError, or NegativeCycleError when a summand is empty.
Instance parse_instance(std::string_view json_text);
Instance load_instance(const std::string& path);

/// One inequality per line over x1..xn; blank lines and '#' comments are skipped.
InequalitySystem parse_description(std::string_view text, int n);

enum class Route { Fm, Pairs, Cycles };

struct ListedRow {
  LinearInequality row;
  RowSupport support;
  RedundancyLabel label = RedundancyLabel::Irredundant;
};

struct Listing {
  std::vector<ListedRow> rows;
  EliminationTrace trace;

  InequalitySystem system(int n) const;
};

/// Canonical description by the chosen route. With keep_redundant the graph
/// routes list every candidate and label the redundant ones.
Listing describe(const Instance& inst, Route route, bool keep_redundant);

/// "rows" (text, I, J, bound, label) and "trace".
std::string listing_json(const Listing& l);

struct CommandResult {
  int exit_code = exit_code::ok;
  std::string out;
  std::string err;
};

/// args[0] is the program name.
CommandResult run(const std::vector<std::string>& args);

}  // namespace l2poly::cli
