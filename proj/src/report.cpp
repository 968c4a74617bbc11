#include "ninf/report.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <memory>

#include "ninf/algebraic_model.hpp"
#include "ninf/burnside.hpp"
#include "ninf/compatibility.hpp"
#include "ninf/error.hpp"
#include "ninf/operad.hpp"
#include "ninf/transfer.hpp"

namespace ninf {

using json = nlohmann::ordered_json;

const std::vector<std::string> &verbs() {
  static const std::vector<std::string> v{
      "marks",    "idempotents", "weyl",       "hsets",   "operad", "transfer-systems",
      "isotropy", "compatible",  "verdict",    "model",   "gfp"};
  return v;
}

json to_json(const Report &report) {
  json j;
  j["command"] = report.command;
  j["group"] = {{"name", report.group_name},
                {"order", report.group_order},
                {"classes", report.group_classes}};
  j["result"] = report.result;
  j["citations"] = report.citations;
  return j;
}

Report report_from_json(const json &j) {
  try {
    Report r;
    r.command = j.at("command").get<std::vector<std::string>>();
    const auto &g = j.at("group");
    r.group_name = g.at("name").get<std::string>();
    r.group_order = g.at("order").get<std::size_t>();
    r.group_classes = g.at("classes").get<std::size_t>();
    r.result = j.at("result");
    r.citations = j.at("citations").get<std::vector<std::string>>();
    return r;
  } catch (const nlohmann::json::exception &e) {
    throw ParseError(std::string("malformed report: ") + e.what());
  }
}

std::string render(const Report &report) { return to_json(report).dump(2) + "\n"; }

namespace {

struct Context {
  const Command &command;
  const Caps &caps;
  std::shared_ptr<const SubgroupLattice> lattice;

  const SubgroupLattice &lat() const { return *lattice; }

  const std::string *option(const std::string &key) const {
    auto it = command.options.find(key);
    return it == command.options.end() ? nullptr : &it->second;
  }

  const std::string &require_option(const std::string &key) const {
    if (const auto *v = option(key))
      return *v;
    throw ParseError("missing required option --" + key);
  }

  const std::string &arg(std::size_t i, const char *what) const {
    if (i >= command.args.size())
      throw ParseError(std::string("missing argument: ") + what);
    return command.args[i];
  }

  std::size_t number(const std::string &text, const char *what) const {
    if (text.empty() || text.size() > 9 ||
        !std::all_of(text.begin(), text.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw ParseError(std::string("expected a positive integer for ") + what +
                       ", got '" + text + "'");
    const std::size_t n = std::stoul(text);
    if (n == 0)
      throw ParseError(std::string(what) + " must be positive");
    return n;
  }

  std::string label(SubgroupId h) const { return lat().class_label(lat().class_of(h)); }

  void write_dot(const std::string &contents) const {
    const auto *path = option("dot");
    if (!path)
      return;
    std::ofstream out(*path);
    if (!out)
      throw DomainError("cannot write DOT file '" + *path + "'");
    out << contents;
  }
};

std::vector<std::string> echo(const Command &c) {
  std::vector<std::string> out{c.verb, c.group};
  out.insert(out.end(), c.args.begin(), c.args.end());
  for (const auto &[k, v] : c.options)
    out.push_back("--" + k + "=" + v);
  return out;
}

json weyl_json(const WeylGroup &w) {
  json gens = json::array();
  for (const auto &p : w.group.generators())
    gens.push_back(p.cycles());
  return {{"order", w.group.order()}, {"degree", w.group.degree()}, {"generators", gens}};
}

json marks_json(const TableOfMarks &tom) {
  return json(tom.marks);
}

OperadModel make_operad(const Context &ctx) {
  const std::string *kind = ctx.option("operad");
  if (!kind)
    kind = ctx.option("kind");
  if (!kind)
    throw ParseError("missing required option --operad (e1, eG or geometric)");
  std::string k = *kind;
  std::transform(k.begin(), k.end(), k.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (k == "e1")
    return OperadModel::minimal(ctx.lattice);
  if (k == "eg")
    return OperadModel::maximal(ctx.lattice);
  if (k != "geometric")
    throw ParseError("unknown operad kind '" + *kind + "'");
  const std::string &spec = ctx.require_option("universe");
  std::vector<SubgroupId> stabilizers;
  std::size_t start = 0;
  while (start <= spec.size()) {
    std::size_t end = spec.find(',', start);
    if (end == std::string::npos)
      end = spec.size();
    std::string piece = spec.substr(start, end - start);
    piece.erase(0, piece.find_first_not_of(' '));
    piece.erase(piece.find_last_not_of(' ') + 1);
    const auto slash = piece.find('/');
    const std::string label = slash == std::string::npos ? piece : piece.substr(slash + 1);
    try {
      stabilizers.push_back(ctx.lat().representative(ctx.lat().class_by_label(label)));
    } catch (const ParseError &e) {
      throw ParseError(e.what(), start);
    }
    start = end + 1;
  }
  return OperadModel::geometric(ctx.lattice,
                                PermutationUniverse::from_orbits(ctx.lat(), stabilizers));
}

json classes_json(const Context &ctx, const IsotropySet &iso) {
  json out = json::array();
  for (ClassId c : iso.members())
    out.push_back(ctx.lat().class_label(c));
  return out;
}

json graph_json(const Context &ctx, const GraphSubgroup &gamma) {
  json elements = json::array();
  for (const auto &[g, s] : gamma.elements)
    elements.push_back({{"g", ctx.lat().group().element(g).cycles()}, {"sigma", s.cycles()}});
  return {{"subgroup", ctx.label(gamma.projection())},
          {"hset", describe(ctx.lat(), gamma.structure)},
          {"trivial", gamma.is_product()},
          {"order", gamma.order()},
          {"graph", elements}};
}

json run_marks(const Context &ctx, bool with_idempotents) {
  const TablePtr tom = table_of_marks(ctx.lat());
  json orders = json::array();
  for (SubgroupId h : tom->representatives)
    orders.push_back(ctx.lat().subgroup(h).order());
  json result{{"classes", tom->labels}, {"orders", orders}, {"marks", marks_json(*tom)}};
  if (with_idempotents) {
    json list = json::array();
    const auto es = idempotents(tom);
    for (std::size_t c = 0; c < es.size(); ++c) {
      json coeffs = json::array();
      for (const auto &q : es[c].coefficients())
        coeffs.push_back(to_string(q));
      list.push_back({{"class", tom->labels[c]}, {"coefficients", coeffs}});
    }
    result["idempotents"] = list;
  }
  ctx.write_dot(ctx.lat().hasse_dot());
  return result;
}

json run_weyl(const Context &ctx) {
  const SubgroupId h = ctx.lat().representative(ctx.lat().class_by_label(ctx.arg(0, "subgroup")));
  const WeylGroup w = weyl_group(ctx.lat(), h);
  return {{"subgroup", ctx.label(h)},
          {"subgroup_order", ctx.lat().subgroup(h).order()},
          {"normalizer", ctx.label(w.normalizer)},
          {"normalizer_order", ctx.lat().subgroup(w.normalizer).order()},
          {"weyl", weyl_json(w)}};
}

json run_hsets(const Context &ctx) {
  const SubgroupId h = ctx.lat().representative(ctx.lat().class_by_label(ctx.arg(0, "subgroup")));
  const std::size_t n = ctx.number(ctx.arg(1, "n"), "n");
  if (n > ctx.caps.n_max)
    throw ResourceError("n = " + std::to_string(n) + " exceeds n_max = " +
                        std::to_string(ctx.caps.n_max));
  json list = json::array();
  for (const auto &t : hset_structures(ctx.lat(), h, n))
    list.push_back(describe(ctx.lat(), t));
  return {{"subgroup", ctx.label(h)}, {"n", n}, {"structures", list}};
}

json run_operad(const Context &ctx) {
  const OperadModel op = make_operad(ctx);
  json result{{"operad", op.name()}, {"kind", to_string(op.kind())}};
  if (const auto *f = ctx.option("family")) {
    const std::size_t n = ctx.number(*f, "--family");
    json members = json::array();
    for (const auto &gamma : family(op, n, ctx.caps.n_max))
      members.push_back(graph_json(ctx, gamma));
    result["n"] = n;
    result["family"] = members;
  } else {
    json orbits = json::array();
    for (ClassId c = 0; c < static_cast<ClassId>(ctx.lat().num_classes()); ++c) {
      const SubgroupId h = ctx.lat().representative(c);
      for (SubgroupId k : ctx.lat().subgroups_of(h)) {
        if (k != ctx.lat().canonical_within(h, k))
          continue;
        const auto t = orbit_structure(ctx.lat(), h, k);
        if (op.admissible(t))
          orbits.push_back({{"subgroup", ctx.label(h)}, {"orbit", describe(ctx.lat(), t)}});
      }
    }
    result["admissible_orbits"] = orbits;
  }
  return result;
}

json run_transfer(const Context &ctx) {
  const auto systems = enumerate_transfer_systems(ctx.lat(), ctx.caps.transfer_subgroup_cap);
  json result{{"count", systems.size()}};
  if (!ctx.option("count-only")) {
    json list = json::array();
    for (const auto &t : systems) {
      json pairs = json::array();
      for (const auto &[k, l] : t.transfers)
        pairs.push_back({{"from", k}, {"to", l}, {"text", ctx.label(k) + "->" + ctx.label(l)}});
      list.push_back(pairs);
    }
    result["subgroups"] = [&] {
      json subs = json::array();
      for (std::size_t h = 0; h < ctx.lat().size(); ++h)
        subs.push_back(ctx.label(static_cast<SubgroupId>(h)));
      return subs;
    }();
    result["systems"] = list;
  }
  ctx.write_dot(transfer_systems_dot(ctx.lat(), systems));
  return result;
}

SpectrumExpr spectrum(const Context &ctx, const std::string &text) {
  return parse_spectrum(ctx.lattice, text);
}

json run_isotropy(const Context &ctx) {
  const SpectrumExpr e = spectrum(ctx, ctx.arg(0, "spectrum expression"));
  return {{"spectrum", e.to_string()},
          {"isotropy", classes_json(ctx, isotropy(e))},
          {"free", is_free(e)}};
}

json run_compatible(const Context &ctx) {
  const OperadModel op = make_operad(ctx);
  const SpectrumExpr e = spectrum(ctx, ctx.require_option("spectrum"));
  CheckMode mode = CheckMode::OrbitReduction;
  if (const auto *m = ctx.option("mode")) {
    if (*m == "direct")
      mode = CheckMode::DirectPerN;
    else if (*m != "orbit" && *m != "orbit-reduction")
      throw ParseError("unknown mode '" + *m + "' (orbit or direct)");
  }
  const std::size_t n_max =
      ctx.option("nmax") ? ctx.number(*ctx.option("nmax"), "--nmax") : 6;
  const auto report = check_compatibility(op, e, mode, n_max);
  json violations = json::array();
  for (const auto &v : report.violations)
    violations.push_back({{"subgroup", ctx.label(v.h)},
                          {"orbit", describe(ctx.lat(), orbit_structure(ctx.lat(), v.h, v.k))},
                          {"n", v.n}});
  return {{"operad", op.name()},
          {"spectrum", e.to_string()},
          {"isotropy", classes_json(ctx, isotropy(e))},
          {"compatible", report.compatible},
          {"method", to_string(report.method)},
          {"n_checked", report.n_checked},
          {"violations", violations}};
}

json run_verdict(const Context &ctx, std::vector<std::string> &citations) {
  const OperadModel op = make_operad(ctx);
  const SpectrumExpr e = spectrum(ctx, ctx.require_option("spectrum"));
  const Verdict v = lifting_verdict(op, e);
  json witness = nullptr;
  if (v.witness)
    witness = {{"subgroup", ctx.label(v.witness->k)},
               {"orbit", describe(ctx.lat(), orbit_structure(ctx.lat(), v.witness->k,
                                                             ctx.lat().trivial()))},
               {"level", v.witness->level}};
  citations.push_back(v.citation);
  return {{"operad", op.name()},
          {"spectrum", e.to_string()},
          {"verdict", to_string(v.tag)},
          {"citation", v.citation},
          {"witness", witness}};
}

json run_model(const Context &ctx) {
  const auto model = algebraic_model(ctx.lat());
  json factors = json::array();
  for (const auto &f : model.factors)
    factors.push_back({{"class", ctx.lat().class_label(f.class_id)},
                       {"subgroup_order", ctx.lat().subgroup(f.representative).order()},
                       {"factor", f.label},
                       {"weyl", weyl_json(*f.weyl)}});
  return {{"factors", factors}};
}

json run_gfp(const Context &ctx) {
  const SpectrumExpr e = spectrum(ctx, ctx.arg(0, "spectrum expression"));
  std::vector<ClassId> classes;
  if (const auto *c = ctx.option("class")) {
    classes.push_back(ctx.lat().class_by_label(*c));
  } else {
    for (ClassId c = 0; c < static_cast<ClassId>(ctx.lat().num_classes()); ++c)
      classes.push_back(c);
  }
  json modules = json::array();
  for (ClassId c : classes) {
    const FixedPointModule m = fixed_point_module(e, c);
    modules.push_back({{"class", ctx.lat().class_label(c)},
                       {"dimension", m.dimension()},
                       {"weyl_order", m.weyl->group.order()},
                       {"orbits", m.wset.orbits()}});
  }
  return {{"spectrum", e.to_string()}, {"modules", modules}, {"pi0_rank", pi0_rank(e)}};
}

} // namespace

Report run(const Command &command, const Caps &caps) {
  if (std::find(verbs().begin(), verbs().end(), command.verb) == verbs().end())
    throw ParseError("unknown verb '" + command.verb + "'");
  auto group = std::make_shared<const FiniteGroup>(parse_group(command.group, caps));
  auto lattice = std::make_shared<const SubgroupLattice>(SubgroupLattice::enumerate(group, caps));
  const Context ctx{command, caps, lattice};

  Report report;
  report.command = echo(command);
  report.group_name = group->name();
  report.group_order = group->order();
  report.group_classes = lattice->num_classes();

  const std::string &v = command.verb;
  if (v == "marks")
    report.result = run_marks(ctx, false);
  else if (v == "idempotents")
    report.result = run_marks(ctx, true);
  else if (v == "weyl")
    report.result = run_weyl(ctx);
  else if (v == "hsets")
    report.result = run_hsets(ctx);
  else if (v == "operad")
    report.result = run_operad(ctx);
  else if (v == "transfer-systems")
    report.result = run_transfer(ctx);
  else if (v == "isotropy")
    report.result = run_isotropy(ctx);
  else if (v == "compatible")
    report.result = run_compatible(ctx);
  else if (v == "verdict")
    report.result = run_verdict(ctx, report.citations);
  else if (v == "model")
    report.result = run_model(ctx);
  else
    report.result = run_gfp(ctx);
  return report;
}

} // namespace ninf
