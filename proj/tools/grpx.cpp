// grpx: command-line driver over the grpx library.
//
// Exit codes: 0 success, 1 usage, 2 parse or bad construction, 3 budget,
// 4 verification failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <iomanip>
#include <iostream>
#include <sstream>

#include "grpx/cache.hpp"
#include "grpx/complexes.hpp"
#include "grpx/corpus.hpp"
#include "grpx/dsl.hpp"
#include "grpx/error.hpp"
#include "grpx/graphs.hpp"
#include "grpx/verify.hpp"

using namespace grpx;

namespace {

enum Exit { kOk = 0, kUsage = 1, kParse = 2, kBudget = 3, kVerify = 4 };

int exit_code(ErrorCode c) {
  switch (c) {
    case ErrorCode::SearchBudgetExceeded:
    case ErrorCode::FaceBudgetExceeded: return kBudget;
    case ErrorCode::Io:
    case ErrorCode::CacheVersionMismatch:
    case ErrorCode::CorruptCache:
    case ErrorCode::NotAPGroup:
    case ErrorCode::NotAbelian:
    case ErrorCode::NotSolvable:
    case ErrorCode::NotPrime: return kUsage;
    default: return kParse;
  }
}

// Corpus keys and construction text are both accepted.
FiniteGroup group_of(const std::string& spec) { return build_group(spec); }

std::shared_ptr<const SubgroupLattice> lattice_of(const FiniteGroup& g) { return cached_lattice(g).lattice; }

std::string map_text(const std::vector<std::uint32_t>& m) { return nlohmann::json(m).dump(); }

// One line per search; returns false when the budget ran out.
bool report(const std::string& label, const SearchOutcome<std::vector<std::uint32_t>>& r,
            const std::string& reason = {}) {
  std::cout << label << ": ";
  switch (r.status) {
    case SearchStatus::Found: std::cout << map_text(*r.value); break;
    case SearchStatus::Exhausted: std::cout << "NONE (exhausted)"; break;
    case SearchStatus::BudgetExceeded: std::cout << "UNKNOWN (budget)"; break;
  }
  if (!reason.empty()) std::cout << " [" << reason << "]";
  std::cout << '\n';
  return !r.budget_exceeded();
}

ComplexKind complex_kind(const std::string& k) { return k == "strong" ? ComplexKind::Strong : ComplexKind::Independence; }

int cmd_build(const std::string& spec) {
  auto g = group_of(spec);
  std::cout << "construction: " << print_construction(parse_construction(spec)) << '\n'
            << "order: " << g.order() << '\n'
            << "hash: " << std::hex << g.hash() << std::dec << '\n'
            << "element orders:";
  for (auto [o, c] : order_statistics(g)) std::cout << ' ' << o << ':' << c;
  std::cout << '\n';
  return kOk;
}

int cmd_analyze(const std::string& spec) {
  auto g = group_of(spec);
  std::cout << to_text(structure_report(*lattice_of(g)));
  return kOk;
}

int cmd_graph(const std::string& spec, const std::string& kind, const std::string& out) {
  auto g = group_of(spec);
  if (kind == "dpower") {
    auto d = directed_power_graph(g);
    std::cout << (out == "json" ? to_json(d) : to_dot(d, &g));
  } else {
    auto u = kind == "enhanced" ? enhanced_power_graph(g) : power_graph(g);
    std::cout << (out == "json" ? to_json(u) : to_dot(u, &g));
  }
  std::cout << '\n';
  return kOk;
}

int cmd_complex(const std::string& spec, const std::string& kind, const std::string& out, std::uint32_t max_card,
                std::size_t face_budget) {
  auto g = group_of(spec);
  ComplexOptions opt;
  opt.max_cardinality = max_card;
  opt.face_budget = face_budget;
  auto c = build_complex(*lattice_of(g), complex_kind(kind), opt);
  if (out == "faces") {
    std::cout << export_faces(c);
  } else if (out == "json") {
    std::cout << export_json(c, spec) << '\n';
  } else {
    std::cout << nlohmann::json(f_vector(c)).dump() << '\n';
  }
  return kOk;
}

int cmd_iso(const std::string& s1, const std::string& s2, const std::string& on, std::string kind, bool index_preserving) {
  auto a = group_of(s1);
  auto b = group_of(s2);
  const auto budget = default_budget();
  bool decided = true;
  if (on == "group") {
    auto r = group_isomorphism(a, b, budget);
    SearchOutcome<std::vector<std::uint32_t>> m{r.status, std::nullopt, r.nodes};
    if (r.found()) m.value = r.value->images;
    decided = report("group", m);
  } else if (on == "lattice") {
    decided = report(index_preserving ? "lattice (index-preserving)" : "lattice",
                     lattice_isomorphism(*lattice_of(a), *lattice_of(b), index_preserving, budget));
  } else if (on == "graph") {
    if (kind == "all" || kind == "power")
      decided &= report("power", graph_isomorphism(power_graph(a), power_graph(b), {}, {}, budget));
    if (kind == "all" || kind == "enhanced")
      decided &= report("enhanced", graph_isomorphism(enhanced_power_graph(a), enhanced_power_graph(b), {}, {}, budget));
    if (kind == "all" || kind == "dpower")
      decided &= report("dpower",
                        graph_isomorphism(directed_power_graph(a), directed_power_graph(b), {}, {}, budget));
  } else {
    auto la = lattice_of(a), lb = lattice_of(b);
    for (auto k : {ComplexKind::Independence, ComplexKind::Strong}) {
      if (kind != "all" && complex_kind(kind) != k) continue;
      auto r = group_complex_isomorphism(*la, *lb, k, {}, budget);
      decided &= report(k == ComplexKind::Strong ? "strong" : "independence", r.outcome, r.refuted_by);
    }
  }
  return decided ? kOk : kBudget;
}

int cmd_verify(const std::vector<std::string>& suites, const std::vector<std::string>& groups, bool json) {
  RunOptions opt;
  opt.suites = suites;
  if (!groups.empty()) {
    for (const auto& k : groups)
      if (!find_corpus_entry(k)) throw Error(ErrorCode::UnknownName, "no corpus group '" + k + "'");
    opt.groups = groups;
  }
  for (const auto& s : suites) {
    auto names = suite_names();
    if (std::find(names.begin(), names.end(), s) == names.end())
      throw CLI::ValidationError("--suite", "unknown suite '" + s + "'");
  }
  opt.source = [](const CorpusEntry& e) { return lattice_of(build_group(e.spec)); };
  auto r = run_corpus(opt);
  std::cout << (json ? r.to_json() + "\n" : r.to_table());
  return r.ok() ? kOk : kVerify;
}

int cmd_corpus_list() {
  for (const auto& e : corpus()) {
    std::ostringstream tags;
    for (std::size_t i = 0; i < e.tags.size(); ++i) tags << (i ? "," : "") << e.tags[i];
    std::cout << std::left << std::setw(10) << e.key << std::right << std::setw(6) << e.order << "  "
              << std::left << std::setw(22) << tags.str() << e.spec << '\n';
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite groups, their power graphs and independence complexes"};
  app.require_subcommand(1);

  std::string spec, spec2, kind, out, on = "complex";
  std::uint32_t max_card = 0;
  std::size_t face_budget = ComplexOptions{}.face_budget;
  bool index_preserving = false, json = false;
  std::vector<std::string> suites, groups;
  std::function<int()> run;

  auto* build = app.add_subcommand("build", "Build a group and print a summary");
  build->add_option("spec", spec, "Construction or corpus key")->required();
  build->callback([&] { run = [&] { return cmd_build(spec); }; });

  auto* analyze = app.add_subcommand("analyze", "Structure report from the subgroup lattice");
  analyze->add_option("spec", spec)->required();
  analyze->callback([&] { run = [&] { return cmd_analyze(spec); }; });

  auto* graph = app.add_subcommand("graph", "Export a power graph");
  graph->add_option("spec", spec)->required();
  graph->add_option("--kind", kind)->check(CLI::IsMember({"power", "dpower", "enhanced"}))->default_val("power");
  graph->add_option("--out", out)->check(CLI::IsMember({"dot", "json"}))->default_val("dot");
  graph->callback([&] { run = [&] { return cmd_graph(spec, kind, out); }; });

  auto* complex = app.add_subcommand("complex", "Independence or strong independence complex");
  complex->add_option("spec", spec)->required();
  complex->add_option("--kind", kind)->check(CLI::IsMember({"ind", "strong"}))->default_val("ind");
  complex->add_option("--out", out)->check(CLI::IsMember({"faces", "fvector", "json"}))->default_val("fvector");
  complex->add_option("--max-card", max_card, "Largest face cardinality, 0 for the natural bound");
  complex->add_option("--face-budget", face_budget);
  complex->callback([&] { run = [&] { return cmd_complex(spec, kind, out, max_card, face_budget); }; });

  auto* iso = app.add_subcommand("iso", "Search for an isomorphism between two groups' structures");
  iso->add_option("spec1", spec)->required();
  iso->add_option("spec2", spec2)->required();
  iso->add_option("--on", on)->check(CLI::IsMember({"complex", "graph", "lattice", "group"}))->default_val("complex");
  iso->add_option("--kind", kind, "ind|strong for complexes, power|enhanced|dpower for graphs")
      ->check(CLI::IsMember({"all", "ind", "strong", "power", "enhanced", "dpower"}))
      ->default_val("all");
  iso->add_flag("--index-preserving", index_preserving, "Lattice maps must keep subgroup orders");
  iso->callback([&] {
    const bool graph_kind = kind == "power" || kind == "enhanced" || kind == "dpower";
    if (kind != "all" && (on == "complex" ? graph_kind : on == "graph" ? !graph_kind : true))
      throw CLI::ValidationError("--kind", "'" + kind + "' does not apply to --on " + on);
    if (index_preserving && on != "lattice")
      throw CLI::ValidationError("--index-preserving", "only applies to --on lattice");
    run = [&] { return cmd_iso(spec, spec2, on, kind, index_preserving); };
  });

  auto* verify = app.add_subcommand("verify", "Run the corpus checks and print a report");
  verify->add_option("--suite", suites, "Suite name, repeatable");
  verify->add_option("--group", groups, "Corpus key, repeatable");
  verify->add_flag("--json", json);
  verify->callback([&] { run = [&] { return cmd_verify(suites, groups, json); }; });

  auto* corpus_cmd = app.add_subcommand("corpus", "Corpus of example groups");
  corpus_cmd->require_subcommand(1);
  auto* list = corpus_cmd->add_subcommand("list", "List corpus groups");
  list->callback([&] { run = [] { return cmd_corpus_list(); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kOk : kUsage;
  }

  try {
    return run();
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}
