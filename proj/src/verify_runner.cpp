#include <atomic>
#include <chrono>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "grpx/dsl.hpp"
#include "grpx/error.hpp"
#include "grpx/graphs.hpp"
#include "grpx/parallel.hpp"
#include "grpx/verify.hpp"

namespace grpx {

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::SkippedBudget: return "skipped-budget";
  }
  return "?";
}

std::size_t VerificationReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [](const ReportEntry& e) { return e.status == CheckStatus::Fail; }));
}

std::string VerificationReport::to_table() const {
  std::size_t wc = 5, wg = 6;
  std::vector<std::string> groups;
  for (const auto& e : entries) {
    std::string g;
    for (std::size_t i = 0; i < e.groups.size(); ++i) g += (i ? "," : "") + e.groups[i];
    groups.push_back(g);
    wc = std::max(wc, e.check.size());
    wg = std::max(wg, g.size());
  }
  auto pad = [](std::string s, std::size_t w) {
    s.resize(std::max(s.size(), w), ' ');
    return s;
  };
  std::ostringstream os;
  os << pad("check", wc) << "  " << pad("groups", wg) << "  " << pad("status", 14) << "  " << pad("ms", 9) << "  witness\n";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& e = entries[i];
    std::ostringstream ms;
    ms.precision(1);
    ms << std::fixed << e.millis;
    os << pad(e.check, wc) << "  " << pad(groups[i], wg) << "  " << pad(std::string(to_string(e.status)), 14) << "  "
       << pad(ms.str(), 9) << "  " << e.witness << '\n';
  }
  os << entries.size() << " checks, " << failures() << " failed\n";
  return os.str();
}

std::string VerificationReport::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& e : entries)
    out.push_back({{"check", e.check},
                   {"anchor", e.anchor},
                   {"groups", e.groups},
                   {"status", std::string(to_string(e.status))},
                   {"witness", e.witness},
                   {"millis", e.millis}});
  return out.dump(2);
}

namespace {

using Lattices = std::vector<const SubgroupLattice*>;

CheckOutcome pass(std::string w) { return {CheckStatus::Pass, std::move(w)}; }
CheckOutcome verdict(bool ok, std::string w) { return {ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(w)}; }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

CheckOutcome run_q3(const Lattices& ls, std::uint64_t budget) {
  const auto r = q3_characterization_check(*ls[0], budget);
  std::ostringstream os;
  os << "direct=" << yes_no(r.direct.holds) << " monotone=" << yes_no(r.monotone) << " basis=" << yes_no(r.basis);
  if (r.classification) {
    os << " structure=";
    const auto s = non_nilp_classification(*ls[0]);
    if (s)
      os << to_string(s->branch) << "(p=" << s->p << ",q=" << s->q << (s->m ? ",m=" + std::to_string(*s->m) : "") << ")";
    else
      os << "absent";
  }
  if (r.complexes_equal) os << " complexes-equal=" << yes_no(*r.complexes_equal);
  if (!r.direct.holds) os << "; " << r.direct.detail;
  return verdict(r.agree(), os.str());
}

CheckOutcome run_prime_power_orders(const Lattices& ls, std::uint64_t budget) {
  if (!sigma_equals_tilde_direct(*ls[0], budget)) return pass("premise false");
  const auto& g = ls[0]->group();
  for (Elem x = 0; x < g.order(); ++x) {
    const auto o = g.element_order(x);
    if (o > 1 && !prime_power_base(o))
      return {CheckStatus::Fail, "element " + std::to_string(x) + " has order " + std::to_string(o)};
  }
  return pass("all element orders are prime powers");
}

CheckOutcome run_subgroups_inherit(const Lattices& ls, std::uint64_t budget) {
  const auto& l = *ls[0];
  if (!sigma_equals_tilde_direct(l, budget)) return pass("premise false");
  // Each subgroup is rebuilt as a group of its own and checked from scratch.
  for (std::size_t h = 0; h < l.size(); ++h) {
    const auto sl = enumerate_subgroups(induced_group(l.group(), l.members(h)));
    const auto r = sigma_equals_tilde_direct(sl, budget);
    if (!r) return {CheckStatus::Fail, "subgroup #" + std::to_string(h) + ": " + r.detail};
  }
  return pass(std::to_string(l.size()) + " subgroups rechecked");
}

CheckOutcome run_iwasawa(const Lattices& ls, std::uint64_t) {
  const auto& l = *ls[0];
  const auto p = *p_group_prime(l.group());
  const auto w = iwasawa_decomposition(l, p);
  const bool modular = is_modular_lattice(l), ham = is_hamiltonian(l);
  std::ostringstream os;
  os << "modular=" << yes_no(modular) << " hamiltonian=" << yes_no(ham) << " witness=";
  if (w)
    os << "A#" << w->a << ",b=" << w->b << ",s=" << w->s;
  else
    os << "none";
  return verdict(w.has_value() == (modular && !ham), os.str());
}

CheckOutcome run_sigma_to_graph(const Lattices& ls, std::uint64_t) {
  const auto r = skeleton_complement_check(*ls[0]);
  return verdict(r.ok(), "power=" + yes_no(r.power) + " enhanced=" + yes_no(r.enhanced));
}

std::string status_word(const SearchOutcome<std::vector<std::uint32_t>>& o) { return std::string(to_string(o.status)); }

CheckOutcome run_graph_equivalence(const Lattices& ls, std::uint64_t budget) {
  const auto r = eq_graphs_consistency(ls[0]->group(), ls[1]->group(), budget);
  std::ostringstream os;
  os << "power=" << status_word(r.power) << " enhanced=" << status_word(r.enhanced)
     << " directed=" << status_word(r.directed);
  if (r.orders_preserved) os << " orders-preserved=" << yes_no(*r.orders_preserved);
  if (!r.decided()) return {CheckStatus::SkippedBudget, os.str()};
  return verdict(r.agree(), os.str());
}

// Complex isomorphism of one kind, or nullopt when the complexes do not fit.
std::optional<GroupComplexIso> try_complex_iso(const SubgroupLattice& a, const SubgroupLattice& b, ComplexKind kind,
                                               std::uint64_t budget) {
  try {
    return group_complex_isomorphism(a, b, kind, {}, budget);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::FaceBudgetExceeded) throw;
    return std::nullopt;
  }
}

// phi maps every Sylow subgroup of a onto a Sylow subgroup of b.
bool sylows_map_to_sylows(const SubgroupLattice& a, const SubgroupLattice& b, const std::vector<std::uint32_t>& phi) {
  for (auto p : prime_factors(a.group().order())) {
    const auto s = characteristic_subgroup(a, {SubgroupKind::Sylow, 1, static_cast<std::uint32_t>(p)});
    std::vector<Elem> image;
    s.members.for_each([&](std::size_t x) { image.push_back(phi[x]); });
    if (closure(b.group(), image).count() != s.order()) return false;
  }
  return true;
}

CheckOutcome run_complex_transfer(const Lattices& ls, std::uint64_t budget) {
  const auto& a = *ls[0];
  const auto& b = *ls[1];
  const auto sigma = try_complex_iso(a, b, ComplexKind::Independence, budget);
  const auto strong = try_complex_iso(a, b, ComplexKind::Strong, budget);
  std::ostringstream os;
  auto describe = [&](const char* name, const std::optional<GroupComplexIso>& r) {
    os << name << '=';
    if (!r)
      os << "too-large";
    else if (!r->refuted_by.empty())
      os << "refuted(" << r->refuted_by << ")";
    else
      os << status_word(r->outcome);
  };
  describe("sigma", sigma);
  os << ' ';
  describe("strong", strong);
  if ((sigma && sigma->outcome.budget_exceeded()) || (strong && strong->outcome.budget_exceeded()))
    return {CheckStatus::SkippedBudget, os.str()};

  std::vector<std::string> failed;
  const bool abelian = a.group().is_abelian();
  const bool p_groups = p_group_prime(a.group()) && p_group_prime(a.group()) == p_group_prime(b.group());
  for (const auto* r : {&sigma, &strong}) {
    if (!*r || !(*r)->outcome.found()) continue;
    const auto& phi = *(*r)->outcome.value;
    if (is_nilpotent(a.group()) != is_nilpotent(b.group())) failed.push_back("nilpotency");
    if (order_statistics(a.group()) != order_statistics(b.group())) failed.push_back("order census");
    if (abelian && !a.is_cyclic(a.top()) && !sylows_map_to_sylows(a, b, phi)) failed.push_back("sylow images");
  }
  if (sigma && sigma->outcome.found()) {
    if (abelian && strong && !strong->outcome.found()) failed.push_back("strong complexes");
    if (p_groups && ell_sequence(a, *p_group_prime(a.group())) != ell_sequence(b, *p_group_prime(b.group())))
      failed.push_back("ell sequence");
  }
  if (!failed.empty()) {
    os << "; broken:";
    for (const auto& f : failed) os << ' ' << f;
  }
  return verdict(failed.empty(), os.str());
}

CheckOutcome run_lemma_suite(const Lattices& ls, std::uint64_t budget) {
  const auto r = group_complex_isomorphism(*ls[0], *ls[1], ComplexKind::Independence, {}, budget);
  if (r.outcome.budget_exceeded()) return {CheckStatus::SkippedBudget, "complex search ran out of budget"};
  if (!r.outcome.found()) return {CheckStatus::Fail, "no complex isomorphism to work from"};
  const auto suite = conditional_lemma_suite(*ls[0], *ls[1], *r.outcome.value);
  std::ostringstream os;
  for (const auto& c : suite.results) os << c.name << '=' << (c.holds ? "ok" : "FAIL(" + c.detail + ")") << ' ';
  return verdict(suite.all_pass(), os.str());
}

CheckOutcome run_abelian_partner(const Lattices& ls, std::uint64_t budget) {
  const auto& l = *ls[0];
  const auto& g = l.group();
  if (!is_nilpotent(g)) {
    // Complexes of abelian groups force nilpotency; confirm no abelian group of this order matches.
    for (const auto& spec : abelian_group_specs(g.order())) {
      const auto al = enumerate_subgroups(build_group(spec));
      const auto r = try_complex_iso(al, l, ComplexKind::Independence, budget);
      if (r && r->outcome.found()) return {CheckStatus::Fail, "non-nilpotent group matches " + spec};
    }
    return pass("not nilpotent, no abelian match");
  }
  const bool structural = sylows_modular_nonhamiltonian(l);
  const auto partner = abelian_partner(l, budget);
  if (structural) {
    if (!partner) return {CheckStatus::Fail, "Sylows modular and nonhamiltonian but no abelian lattice partner"};
    if (partner->sigma.budget_exceeded() || partner->strong.budget_exceeded())
      return {CheckStatus::SkippedBudget, "partner " + partner->spec + ", complex search ran out of budget"};
    const bool ok = partner->sigma.found() && partner->strong.found();
    return verdict(ok, "partner " + partner->spec + " sigma=" + status_word(partner->sigma) +
                           " strong=" + status_word(partner->strong));
  }
  if (partner) return {CheckStatus::Fail, "unexpected partner " + partner->spec};
  // No abelian group of this order may have an isomorphic complex.
  for (const auto& spec : abelian_group_specs(g.order())) {
    const auto al = enumerate_subgroups(build_group(spec));
    for (auto kind : {ComplexKind::Independence, ComplexKind::Strong}) {
      const auto r = try_complex_iso(al, l, kind, budget);
      if (!r) continue;
      if (r->outcome.budget_exceeded()) return {CheckStatus::SkippedBudget, "search against " + spec};
      if (r->outcome.found()) return {CheckStatus::Fail, std::string(to_string(kind)) + " complex matches " + spec};
    }
  }
  return pass("no partner; every abelian group of order " + std::to_string(g.order()) + " refuted");
}

CheckOutcome run_strong_to_p(const Lattices& ls, std::uint64_t) {
  const auto r = strong_to_p_check(*ls[0], 3);
  std::ostringstream os;
  os << r.sets_checked << " sets, lemma=" << yes_no(r.lemma_holds) << " classes=" << yes_no(r.classes_agree);
  if (!r.counterexample.empty()) {
    os << " counterexample {";
    for (std::size_t i = 0; i < r.counterexample.size(); ++i) os << (i ? "," : "") << r.counterexample[i];
    os << '}';
  }
  return verdict(r.ok(), os.str());
}

bool any(const CorpusEntry&) { return true; }

const std::vector<std::pair<std::string, std::string>> kGraphPairs = {
    {"C4", "V4"},         {"C9xC3", "ES27"},    {"C8xC2", "M16"},    {"G42_1", "G42_2"}, {"G605_2", "G605_3"},
    {"G605_2", "G605_4"}, {"G605_3", "G605_4"}, {"BL3125", "FC3125"}};

const std::vector<std::pair<std::string, std::string>> kComplexPairs = {
    {"C4", "V4"},         {"C9xC3", "ES27"},    {"C8xC2", "M16"},    {"C4xC2", "D8"},     {"G42_1", "G42_2"},
    {"G605_2", "G605_3"}, {"G605_2", "G605_4"}, {"G605_3", "G605_4"}, {"BL3125", "FC3125"}};

}  // namespace

const std::vector<CorpusCheck>& standard_checks() {
  static const std::vector<CorpusCheck> checks = [] {
    std::vector<CorpusCheck> c;
    c.push_back({"q3-characterization", "equal complexes iff monotone with basis property", "q3", any, {}, run_q3});
    c.push_back({"prime-power-orders", "equal complexes force prime power element orders", "q3", any, {},
                 run_prime_power_orders});
    c.push_back({"subgroups-inherit", "equal complexes pass to subgroups", "q3",
                 [](const CorpusEntry& e) { return e.order <= 1000; }, {}, run_subgroups_inherit});
    c.push_back({"iwasawa", "modular nonhamiltonian iff Iwasawa decomposition", "iwasawa",
                 [](const CorpusEntry& e) { return e.order <= 64 && e.order > 1 && prime_power_base(e.order); }, {},
                 run_iwasawa});
    c.push_back({"sigma-to-graph", "complex skeletons complement the power graphs", "graphs", any, {},
                 run_sigma_to_graph});
    c.push_back({"graph-equivalence", "power, enhanced and directed graphs agree", "graphs", nullptr, kGraphPairs,
                 run_graph_equivalence});
    c.push_back({"complex-transfer", "invariants carried by complex isomorphisms", "pairs", nullptr, kComplexPairs,
                 run_complex_transfer});
    c.push_back({"lemma-suite", "consequences of a complex isomorphism with an abelian p-group", "pairs", nullptr,
                 {{"C9xC3", "ES27"}, {"C8xC2", "M16"}}, run_lemma_suite});
    c.push_back({"abelian-partner", "abelian complex partners of nilpotent groups", "partner",
                 [](const CorpusEntry& e) { return e.order <= 128; }, {}, run_abelian_partner});
    c.push_back({"strong-to-p", "strong independence through p-parts", "strong-to-p",
                 [](const CorpusEntry& e) { return e.has_tag("abelian") && e.order <= 24; }, {}, run_strong_to_p});
    return c;
  }();
  return checks;
}

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& c : standard_checks())
    if (std::find(out.begin(), out.end(), c.suite) == out.end()) out.push_back(c.suite);
  return out;
}

VerificationReport run_corpus(const std::vector<CorpusCheck>& checks, const RunOptions& opt) {
  std::vector<const CorpusEntry*> selected;
  if (opt.groups) {
    for (const auto& key : *opt.groups) {
      const auto* e = find_corpus_entry(key);
      if (!e) throw Error(ErrorCode::UnknownName, "no corpus entry named '" + key + "'");
      selected.push_back(e);
    }
  } else {
    for (const auto& e : corpus()) selected.push_back(&e);
  }
  for (const auto& s : opt.suites)
    if (std::none_of(checks.begin(), checks.end(), [&](const CorpusCheck& c) { return c.suite == s; }))
      throw Error(ErrorCode::InvalidInput, "unknown suite '" + s + "'");
  auto suite_on = [&](const CorpusCheck& c) {
    return opt.suites.empty() || std::find(opt.suites.begin(), opt.suites.end(), c.suite) != opt.suites.end();
  };
  auto is_selected = [&](const std::string& key) {
    return std::any_of(selected.begin(), selected.end(), [&](const CorpusEntry* e) { return e->key == key; });
  };

  struct Job {
    const CorpusCheck* check;
    std::vector<const CorpusEntry*> entries;
  };
  std::vector<Job> jobs;
  for (const auto& c : checks) {
    if (!suite_on(c)) continue;
    if (c.applies)
      for (const auto* e : selected)
        if (c.applies(*e)) jobs.push_back({&c, {e}});
    for (const auto& [x, y] : c.pairs)
      if (is_selected(x) && is_selected(y)) jobs.push_back({&c, {find_corpus_entry(x), find_corpus_entry(y)}});
  }

  struct Slot {
    std::once_flag once;
    std::shared_ptr<const SubgroupLattice> lattice;
  };
  std::map<std::string, Slot> slots;
  for (const auto& j : jobs)
    for (const auto* e : j.entries) slots[e->key];
  auto lattice_of = [&](const CorpusEntry& e) -> const SubgroupLattice& {
    auto& s = slots.at(e.key);
    std::call_once(s.once, [&] {
      s.lattice = opt.source ? opt.source(e)
                             : std::make_shared<const SubgroupLattice>(enumerate_subgroups(build_group(e.spec)));
    });
    return *s.lattice;
  };

  VerificationReport report;
  report.entries.resize(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < jobs.size();) {
      const auto& job = jobs[i];
      auto& out = report.entries[i];
      out.check = job.check->name;
      out.anchor = job.check->anchor;
      for (const auto* e : job.entries) out.groups.push_back(e->key);
      const auto start = std::chrono::steady_clock::now();
      try {
        Lattices ls;
        for (const auto* e : job.entries) ls.push_back(&lattice_of(*e));
        const auto r = job.check->run(ls, opt.budget);
        out.status = r.status;
        out.witness = r.witness;
      } catch (const Error& e) {
        const bool budget = e.code() == ErrorCode::SearchBudgetExceeded || e.code() == ErrorCode::FaceBudgetExceeded;
        out.status = budget ? CheckStatus::SkippedBudget : CheckStatus::Fail;
        out.witness = std::string(to_string(e.code())) + ": " + e.what();
      } catch (const std::exception& e) {
        out.status = CheckStatus::Fail;
        out.witness = std::string("error: ") + e.what();
      }
      out.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }
  };
  const unsigned workers = std::max(1u, std::min<unsigned>(thread_count(), static_cast<unsigned>(jobs.size())));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return report;
}

VerificationReport run_corpus(const RunOptions& opt) { return run_corpus(standard_checks(), opt); }

}  // namespace grpx
