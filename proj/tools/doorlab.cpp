#include "doorlab/error.hpp"
#include "doorlab/search.hpp"
#include "doorlab/verify.hpp"

#include <CLI11.hpp>

#include <cctype>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

using namespace doorlab;
using nlohmann::json;

namespace {

struct Options {
  std::optional<int> n;
  std::string form;
  std::optional<int> a, b, p, q;
  std::string subset;
  std::string values;
  std::string equation = "eq2";
  std::string mode;
  std::string what;
  std::string id;
  std::string family;
  std::string function;
  std::string out;
  std::optional<std::string> write_golden;
  int workers = 0;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<ExactComplex> parse_values(const std::string& s) {
  if (s.empty()) throw DomainError("--values is required");
  std::vector<ExactComplex> out;
  for (const auto& part : split(s, ',')) out.push_back(ExactComplex::parse(part));
  return out;
}

int need_n(const Options& o) {
  if (!o.n) throw DomainError("--n is required");
  return *o.n;
}

GroundSet ground(const Options& o) { return GroundSet(need_n(o)); }

SubsetMask parse_subset(GroundSet g, const std::string& s) {
  if (s.empty()) throw DomainError("--subset is required");
  std::vector<Point> pts;
  for (const auto& part : split(s, ',')) {
    if (part.empty()) continue;
    try {
      pts.push_back(std::stoi(part));
    } catch (const std::exception&) {
      throw DomainError("malformed point '" + part + "'");
    }
  }
  return parse_family(g, {pts}).members().front();
}

// Hex bitset or a JSON array of point lists.
FamilyMask parse_family_arg(GroundSet g, const std::string& s) {
  if (s.empty()) throw DomainError("--family is required");
  if (s.front() == '[') {
    try {
      return family_from_json(g, json::parse(s));
    } catch (const json::exception& e) {
      throw DomainError(std::string("malformed family JSON: ") + e.what());
    }
  }
  return family_from_hex(g, s);
}

Seed seed_of(const std::optional<int>& p) { return p ? Seed::principal(*p) : Seed::free(); }

int need(const std::optional<int>& v, const char* flag) {
  if (!v) throw DomainError(std::string(flag) + " is required");
  return *v;
}

FormDescriptor descriptor(const Options& o, GroundSet g) {
  const std::string& f = o.form;
  if (f == "excluded-point") return ExcludedPoint{need(o.a, "--a")};
  if (f == "included-point") return IncludedPoint{need(o.a, "--a")};
  if (f == "ultrafilter") return UltrafilterType{seed_of(o.p)};
  if (f == "form1a") return Form1A{need(o.a, "--a"), seed_of(o.p)};
  if (f == "form1b") return Form1B{need(o.a, "--a"), seed_of(o.p)};
  if (f == "form2") return Form2{parse_subset(g, o.subset), seed_of(o.p), seed_of(o.q)};
  if (f == "form3") return Form3{need(o.a, "--a"), need(o.b, "--b")};
  if (f == "t2shape") return T2Shape{parse_subset(g, o.subset), seed_of(o.p), seed_of(o.q)};
  throw DomainError("unknown form '" + f + "'");
}

json run_construct(const Options& o) {
  GroundSet g = ground(o);
  FormDescriptor d = descriptor(o, g);
  Topology t = construct_topology(d, g);
  json j = {{"descriptor", to_json(d)}, {"topology", to_json(t)}};
  if (!std::holds_alternative<Form2>(d)) {
    SetFunction f = f_from_form(d, g);
    j["valuation"] = to_json(f);
    j["designated_value"] = designated_value(d);
  }
  return j;
}

json run_check(const Options& o) {
  std::string what = o.what.empty() ? "topology" : o.what;
  if (what == "function") {
    if (o.function.empty()) throw DomainError("--function is required");
    json raw;
    try {
      raw = json::parse(o.function);
    } catch (const json::exception& e) {
      throw DomainError(std::string("malformed function JSON: ") + e.what());
    }
    SetFunction f = set_function_from_json(raw);
    json j = {{"valuation", to_json(satisfies_valuation(f))},
              {"disjoint_additivity", to_json(satisfies_disjoint_additivity(f))}};
    if (f.is_powerset_domain()) {
      auto dec = modular_decompose(f);
      j["modular"] = dec.params ? to_json(*dec.params) : json(nullptr);
    }
    if (!f.includes_empty() && f.value_set().size() == 2) j["two_valued_additive"] = to_json(verify_theorem2(f));
    return j;
  }
  GroundSet g = ground(o);
  FamilyMask fam = parse_family_arg(g, o.family);
  if (what == "algebra") {
    json j = {{"family", to_json(fam)}, {"is_algebra", is_algebra(fam)}};
    if (is_algebra(fam)) {
      Algebra sigma(fam);
      auto atoms = json::array();
      for (auto a : sigma.atoms()) atoms.push_back(to_json(a));
      auto ultra = json::array();
      for (const auto& u : enumerate_ultrafilters(sigma)) ultra.push_back(to_json(u));
      j["atoms"] = atoms;
      j["ultrafilters"] = ultra;
    }
    return j;
  }
  if (what == "filter") {
    Algebra p = powerset_algebra(g);
    return {{"family", to_json(fam)}, {"is_filter", is_filter(fam, p)}, {"is_ultrafilter", is_ultrafilter(fam, p)}};
  }
  if (what != "topology") throw DomainError("check --what must be topology, algebra, filter or function");
  Topology t = validate_topology(fam);
  json j = {{"topology", to_json(t)}, {"space", to_json(space_report(t))}, {"occ", to_json(occ_satisfied(t))}};
  if (is_connected_door(t)) j["lemma1"] = to_json(lemma1_check(t));
  j["forms"] = to_json(recognize_form(t));
  return j;
}

json run_classify(const Options& o) {
  GroundSet g = ground(o);
  Topology t = validate_topology(parse_family_arg(g, o.family));
  return {{"topology", to_json(t)}, {"classification", to_json(classify_connected_door(t))}};
}

json run_solve(const Options& o) {
  int n = need_n(o);
  auto values = parse_values(o.values);
  Equation eq;
  if (o.equation == "eq1") eq = Equation::Eq1Disjoint;
  else if (o.equation == "eq2") eq = Equation::Eq2;
  else throw DomainError("--equation must be eq1 or eq2");
  SolveMode mode;
  if (o.mode.empty() || o.mode == "brute") mode = SolveMode::Brute;
  else if (o.mode == "modular") mode = SolveMode::Modular;
  else throw DomainError("solve --mode must be brute or modular");
  auto sols = enumerate_solutions(n, values, eq, mode, o.workers);
  auto list = json::array();
  for (const auto& f : sols) list.push_back(to_json(f));
  auto vs = json::array();
  for (const auto& v : values) vs.push_back(v.to_string());
  return {{"n", n}, {"values", vs}, {"equation", to_string(eq)}, {"mode", to_string(mode)},
          {"count", sols.size()}, {"solutions", list}};
}

json run_enumerate(const Options& o) {
  int n = need_n(o);
  std::string what = o.what.empty() ? "topologies" : o.what;
  auto listing = [](const std::vector<Topology>& ts) {
    auto a = json::array();
    for (const auto& t : ts) a.push_back(to_hex(t.opens()));
    return a;
  };
  if (what == "topologies") {
    TopologyMode mode;
    if (o.mode.empty() || o.mode == "closure") mode = TopologyMode::ClosureDfs;
    else if (o.mode == "raw") mode = TopologyMode::RawScan;
    else throw DomainError("enumerate --mode must be closure or raw");
    auto e = enumerate_topologies(n, mode, o.workers);
    return {{"report", to_json(e.report)}, {"count", e.topologies.size()}, {"hex", listing(e.topologies)}};
  }
  if (what == "connected-door") {
    GroundSet g(n);
    auto ts = enumerate_connected_door(n, o.workers);
    auto items = json::array();
    for (const auto& t : ts)
      items.push_back({{"hex", to_hex(t.opens())}, {"classification", to_json(classify_connected_door(t))}});
    return {{"n", n}, {"count", ts.size()}, {"topologies", items}};
  }
  if (what == "occ-door") {
    GroundSet g(n);
    auto r = enumerate_occ_door(n, o.workers);
    json j = {{"n", n}, {"count", r.topologies.size()}, {"hex", listing(r.topologies)}};
    if (r.capability_note) j["capability_note"] = *r.capability_note;
    return j;
  }
  if (what == "algebras") {
    GroundSet g(n);
    auto items = json::array();
    for (const auto& a : all_algebras(g)) items.push_back(to_json(a.members()));
    return {{"n", n}, {"count", items.size()}, {"algebras", items}};
  }
  throw DomainError("enumerate --what must be topologies, connected-door, occ-door or algebras");
}

json run_report(const Options& o) {
  std::vector<int> ns;
  if (o.n) ns.push_back(*o.n);
  else ns = {1, 2, 3, 4, 5};
  auto rows = json::array();
  for (int n : ns) {
    auto r = counts_report(n, o.workers);
    if (o.write_golden) write_golden(r, o.write_golden->empty() ? golden_dir_default() : *o.write_golden);
    rows.push_back(to_json(r));
  }
  return {{"reports", rows}};
}

// Returns the JSON and whether every claim held.
std::pair<json, bool> run_verify(const Options& o) {
  VerifyOptions v;
  v.workers = o.workers;
  v.n = o.n;
  if (!o.values.empty()) v.values = parse_values(o.values);
  if (o.id.empty()) throw DomainError("--id is required (one of the claim ids, or all)");
  std::vector<std::string> ids = o.id == "all" ? claim_ids() : std::vector<std::string>{o.id};
  auto reports = json::array();
  bool holds = true;
  for (const auto& id : ids) {
    auto r = verify_claim(id, v);
    holds = holds && r.holds;
    reports.push_back(to_json(r));
  }
  if (ids.size() == 1) return {reports.front(), holds};
  return {json{{"claims", reports}, {"holds", holds}}, holds};
}

void emit(const json& j, const std::string& out) {
  std::string text = j.dump(2) + "\n";
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw DomainError("cannot write " + out);
  f << text;
}

// "--values -1,0,1" would otherwise parse -1 as a flag.
std::vector<std::string> normalize_args(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::vector<std::string> out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--values" && i + 1 < args.size() && !args[i + 1].empty() && args[i + 1][0] == '-') {
      out.push_back("--values=" + args[i + 1]);
      ++i;
    } else {
      out.push_back(args[i]);
    }
  }
  return out;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"doorlab: door topologies, ultrafilters and set-function equations on small finite sets"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--n", o.n, "ground set size");
    sub->add_option("--workers", o.workers, "worker threads (0 = available parallelism)");
    sub->add_option("--out", o.out, "write JSON to FILE instead of standard output");
  };

  auto* construct = app.add_subcommand("construct", "build the topology of a named form");
  add_common(construct);
  construct->add_option("--form", o.form, "excluded-point | included-point | ultrafilter | form1a | form1b | form2 | form3 | t2shape")
      ->required();
  construct->add_option("--a", o.a, "distinguished point a");
  construct->add_option("--b", o.b, "second point b (form3)");
  construct->add_option("--p", o.p, "principal point of the first ultrafilter (omit for free)");
  construct->add_option("--q", o.q, "principal point of the second ultrafilter (omit for free)");
  construct->add_option("--subset", o.subset, "comma list of points of the part A (form2, t2shape)");

  auto* check = app.add_subcommand("check", "check a family or set function");
  add_common(check);
  check->add_option("--what", o.what, "topology (default) | algebra | filter | function");
  check->add_option("--family", o.family, "family as hex bitset or JSON array of point lists");
  check->add_option("--function", o.function, "set function JSON");

  auto* classify = app.add_subcommand("classify", "label a connected door topology");
  add_common(classify);
  classify->add_option("--family", o.family, "family as hex bitset or JSON array of point lists")->required();

  auto* solve = app.add_subcommand("solve", "enumerate surjective solutions of an equation");
  add_common(solve);
  solve->add_option("--values", o.values, "comma list of exact values, e.g. -1,0,1 or 0,2+i")->required();
  solve->add_option("--equation", o.equation, "eq1 (disjoint additivity) | eq2 (valuation)");
  solve->add_option("--mode", o.mode, "brute | modular");

  auto* enumerate = app.add_subcommand("enumerate", "enumerate topologies or algebras");
  add_common(enumerate);
  enumerate->add_option("--what", o.what, "topologies | connected-door | occ-door | algebras");
  enumerate->add_option("--mode", o.mode, "closure | raw (topologies only)");

  auto* verify = app.add_subcommand("verify-theorem", "run one exhaustive claim check");
  add_common(verify);
  std::string id_help = "claim id or all:";
  for (const auto& id : claim_ids()) id_help += " " + id;
  verify->add_option("--id", o.id, id_help)->required();
  verify->add_option("--values", o.values, "comma list of exact values");

  auto* report = app.add_subcommand("report", "topology, door, connected door and OCC door counts");
  add_common(report);
  report->add_option("--write-golden", o.write_golden, "write golden files to DIR (default: golden directory)")
      ->expected(0, 1);

  auto args = normalize_args(argc, argv);
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    std::cout << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n";
    auto subs = app.get_subcommands();
    std::cerr << (subs.empty() ? app.help() : subs.front()->help());
    return 2;
  }

  try {
    if (construct->parsed()) emit(run_construct(o), o.out);
    else if (check->parsed()) emit(run_check(o), o.out);
    else if (classify->parsed()) emit(run_classify(o), o.out);
    else if (solve->parsed()) emit(run_solve(o), o.out);
    else if (enumerate->parsed()) emit(run_enumerate(o), o.out);
    else if (report->parsed()) emit(run_report(o), o.out);
    else if (verify->parsed()) {
      auto [j, holds] = run_verify(o);
      emit(j, o.out);
      return holds ? 0 : 1;
    }
    return 0;
  } catch (const TheoremViolation& e) {
    std::cerr << "theorem violation: " << e.what() << "\n";
    return 1;
  } catch (const CapabilityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
