#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "ninf/group.hpp"

namespace ninf {

/// A parsed CLI invocation.
struct Command {
  /// marks, idempotents, weyl, hsets, operad, transfer-systems, isotropy,
  /// compatible, verdict, model, gfp
  std::string verb;
  std::string group;
  std::vector<std::string> args;
  /// Long options without the leading dashes; flags map to "true".
  std::map<std::string, std::string> options;
};

/// Verb output: command echo, group summary, verb-specific payload and the
/// citation anchors attached to any verdict.
struct Report {
  std::vector<std::string> command;
  std::string group_name;
  std::size_t group_order = 0;
  std::size_t group_classes = 0;
  nlohmann::ordered_json result;
  std::vector<std::string> citations;

  friend bool operator==(const Report &, const Report &) = default;
};

nlohmann::ordered_json to_json(const Report &report);
/// Throws ParseError if `j` does not have the shape to_json produces.
Report report_from_json(const nlohmann::ordered_json &j);

/// Pretty-printed JSON with a trailing newline.
std::string render(const Report &report);

/// Runs one verb. Errors surface as ninf::Error subclasses. When the command
/// carries a `dot` option, the relevant Hasse diagram is written there.
Report run(const Command &command, const Caps &caps = {});

const std::vector<std::string> &verbs();

} // namespace ninf
