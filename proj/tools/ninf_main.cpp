// Command-line front end: parses arguments into a ninf::Command, runs it and
// prints the JSON report. Exit codes: 0 ok, 2 parse, 3 domain, 4 resource.

#include <iostream>

#include <CLI11.hpp>

#include "ninf/error.hpp"
#include "ninf/report.hpp"

namespace {

struct VerbSpec {
  const char *name;
  const char *help;
  std::vector<const char *> positionals;
  std::vector<const char *> options; // value options
  std::vector<const char *> flags;
};

const std::vector<VerbSpec> &verb_specs() {
  static const std::vector<VerbSpec> specs{
      {"marks", "table of marks", {}, {"dot"}, {}},
      {"idempotents", "idempotents of the rational Burnside ring", {}, {"dot"}, {}},
      {"weyl", "Weyl group N_G(H)/H", {"subgroup"}, {}, {}},
      {"hsets", "H-sets of cardinality n", {"subgroup", "n"}, {}, {}},
      {"operad", "admissible sets of an N-infinity operad",
       {}, {"kind", "operad", "universe", "family"}, {}},
      {"transfer-systems", "enumerate transfer systems", {}, {"dot"}, {"count-only"}},
      {"isotropy", "geometric isotropy of a spectrum expression", {"expr"}, {}, {}},
      {"compatible", "O-compatibility check",
       {}, {"operad", "kind", "universe", "spectrum", "mode", "nmax"}, {}},
      {"verdict", "lifted model structure verdict",
       {}, {"operad", "kind", "universe", "spectrum"}, {}},
      {"model", "algebraic model factors", {}, {}, {}},
      {"gfp", "geometric fixed-point modules of a wedge of orbits", {"expr"}, {"class"}, {}},
  };
  return specs;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Finite combinatorics of N-infinity operads and rational G-spectra"};
  app.require_subcommand(1);

  struct Bound {
    std::string group;
    std::vector<std::string> positionals;
    std::map<std::string, std::string> options;
    std::map<std::string, bool> flags;
  };
  std::map<std::string, Bound> bound;
  for (const auto &spec : verb_specs()) {
    auto *sub = app.add_subcommand(spec.name, spec.help);
    Bound &b = bound[spec.name];
    b.positionals.resize(spec.positionals.size());
    sub->add_option("group", b.group, "catalog name (C6, S3, Q8, ...) or cycle generators")
        ->required();
    for (std::size_t i = 0; i < spec.positionals.size(); ++i)
      sub->add_option(spec.positionals[i], b.positionals[i])->required();
    for (const char *opt : spec.options)
      sub->add_option(std::string("--") + opt, b.options[opt]);
    for (const char *flag : spec.flags)
      sub->add_flag(std::string("--") + flag, b.flags[flag]);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : static_cast<int>(ninf::ErrorCode::Parse);
  }

  try {
    ninf::Command command;
    for (const auto &spec : verb_specs()) {
      auto *sub = app.get_subcommand(spec.name);
      if (!sub->parsed())
        continue;
      Bound &b = bound[spec.name];
      command.verb = spec.name;
      command.group = b.group;
      command.args = b.positionals;
      for (const char *opt : spec.options)
        if (sub->count(std::string("--") + opt))
          command.options[opt] = b.options[opt];
      for (const char *flag : spec.flags)
        if (b.flags[flag])
          command.options[flag] = "true";
    }
    const ninf::Report report = ninf::run(command, ninf::Caps::from_environment());
    std::cout << ninf::render(report);
    return 0;
  } catch (const ninf::Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(e.code());
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
