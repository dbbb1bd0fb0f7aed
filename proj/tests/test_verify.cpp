#include <gtest/gtest.h>

#include <json.hpp>

#include "fixtures.hpp"
#include "grpx/complexes.hpp"
#include "grpx/error.hpp"
#include "grpx/verify.hpp"
#include "oracles.hpp"

using namespace grpx;

namespace {

std::vector<std::string> keys_up_to(std::size_t order) {
  std::vector<std::string> out;
  for (const auto& e : corpus())
    if (e.order <= order) out.push_back(e.key);
  return out;
}

// m(H) <= d(K) for all H <= K, straight from subgroup lists.
bool direct_by_oracle(const FiniteGroup& g) {
  auto subs = oracle::all_subgroups(g);
  std::vector<std::vector<Elem>> list(subs.begin(), subs.end());
  std::vector<std::size_t> d, m;
  for (const auto& h : list) {
    d.push_back(oracle::min_gens(g, h));
    m.push_back(oracle::max_min_gens(g, h));
  }
  for (std::size_t i = 0; i < list.size(); ++i)
    for (std::size_t j = 0; j < list.size(); ++j)
      if (std::includes(list[j].begin(), list[j].end(), list[i].begin(), list[i].end()) && m[i] > d[j]) return false;
  return true;
}

bool prime_power_orders(const FiniteGroup& g) {
  for (Elem x = 0; x < g.order(); ++x)
    if (!prime_power_base(g.element_order(x)) && g.element_order(x) != 1) return false;
  return true;
}

std::shared_ptr<const SubgroupLattice> fixture_source(const CorpusEntry& e) {
  return std::shared_ptr<const SubgroupLattice>(&fixture::lattice(e.key), [](const SubgroupLattice*) {});
}

}  // namespace

TEST(Direct, QuaternionHolds) { EXPECT_TRUE(sigma_equals_tilde_direct(fixture::lattice("Q8")).holds); }

TEST(Direct, CyclicSixFailsWithWitness) {
  const auto& l = fixture::lattice("C6");
  auto r = sigma_equals_tilde_direct(l);
  ASSERT_FALSE(r.holds);
  EXPECT_EQ(r.subgroups.size(), 2u);
  EXPECT_EQ(r.elements.size(), 2u);
  EXPECT_TRUE(is_independent(l, r.elements));
  EXPECT_FALSE(is_strongly_independent(l, r.elements));
}

TEST(Direct, ExtendedQuaternionWitness) {
  const auto& l = fixture::lattice("Q8_C3");
  auto r = sigma_equals_tilde_direct(l);
  ASSERT_FALSE(r.holds);
  EXPECT_EQ(l.order(r.subgroups.front()), 6u);
  EXPECT_TRUE(is_independent(l, r.elements));
  EXPECT_FALSE(is_strongly_independent(l, r.elements));
  EXPECT_FALSE(non_nilp_classification(l).has_value());
}

class DirectOracle : public ::testing::TestWithParam<std::string> {};

TEST_P(DirectOracle, AgreesWithBruteForce) {
  const auto& l = fixture::lattice(GetParam());
  EXPECT_EQ(sigma_equals_tilde_direct(l).holds, direct_by_oracle(l.group()));
}

TEST_P(DirectOracle, MaxMinimalMatchesOracle) {
  const auto& l = fixture::lattice(GetParam());
  auto m = max_minimal_generating_all(l);
  for (std::size_t i = 0; i < l.size(); ++i)
    EXPECT_EQ(m[i], oracle::max_min_gens(l.group(), l.members(i).to_vector())) << i;
}

INSTANTIATE_TEST_SUITE_P(SmallCorpus, DirectOracle, ::testing::ValuesIn(keys_up_to(24)));

TEST(BGroup, Examples) {
  EXPECT_FALSE(b_group_check(fixture::lattice("C6")).holds);
  const auto& q8 = fixture::lattice("Q8");
  EXPECT_TRUE(b_group_check(q8).holds);
  EXPECT_TRUE(basis_property_check(q8).holds);
  EXPECT_TRUE(monotone_check(q8).holds);
  const auto& s3 = fixture::lattice("S3");
  EXPECT_TRUE(basis_property_check(s3).holds);
  EXPECT_TRUE(monotone_check(s3).holds);
}

TEST(BGroup, MonotoneFailureNamesPair) {
  // Two-generated, with an elementary abelian subgroup of rank 3.
  const auto& l = fixture::lattice("S4 x C(2)");
  auto r = monotone_check(l);
  ASSERT_FALSE(r.holds);
  ASSERT_EQ(r.subgroups.size(), 2u);
  EXPECT_TRUE(l.leq(r.subgroups[0], r.subgroups[1]));
  EXPECT_GT(l.d(r.subgroups[0]), l.d(r.subgroups[1]));
}

TEST(Classification, SymmetricThreeIsPowerAction) {
  const auto& l = fixture::lattice("S3");
  auto c = non_nilp_classification(l);
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(c->p, 3u);
  EXPECT_EQ(c->q, 2u);
  EXPECT_EQ(c->branch, NonNilpotentStructure::Branch::PowerAction);
  ASSERT_TRUE(c->m.has_value());
  EXPECT_EQ(*c->m % 3, 2u);
  const auto& g = l.group();
  for (Elem x : l.members(c->P).to_vector())
    EXPECT_EQ(g.mul(g.mul(g.inv(c->alpha), x), c->alpha), g.power(x, static_cast<long long>(*c->m)));
}

TEST(Classification, AlternatingFourIsHomocyclic) {
  auto c = non_nilp_classification(fixture::lattice("A4"));
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(c->p, 2u);
  EXPECT_EQ(c->branch, NonNilpotentStructure::Branch::Homocyclic);
  EXPECT_EQ(c->alpha_order, 3u);
}

TEST(Classification, Absent) {
  for (const char* key : {"G605_2", "S4", "Q8_C3", "Q8", "C6"})
    EXPECT_FALSE(non_nilp_classification(fixture::lattice(key)).has_value()) << key;
}

class Q3Corpus : public ::testing::TestWithParam<std::string> {};

TEST_P(Q3Corpus, ConditionsAgree) {
  const auto& l = fixture::lattice(GetParam());
  auto r = q3_characterization_check(l);
  EXPECT_TRUE(r.agree()) << r.direct.detail;
  if (r.direct.holds) EXPECT_TRUE(prime_power_orders(l.group()));
  if (r.complexes_equal) EXPECT_EQ(*r.complexes_equal, r.direct.holds);
}

INSTANTIATE_TEST_SUITE_P(Corpus, Q3Corpus, ::testing::ValuesIn(keys_up_to(1000)));

TEST(Partner, ExtraspecialMapsToAbelian) {
  const auto& l = fixture::lattice("ES27");
  auto p = abelian_partner(l);
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ(p->spec, "C(9) x C(3)");
  ASSERT_TRUE(p->sigma.found());
  auto a = build_complex(l, ComplexKind::Independence);
  auto b = build_complex(*p->lattice, ComplexKind::Independence);
  EXPECT_TRUE(is_complex_isomorphism(a, b, *p->sigma.value));
}

TEST(Partner, DihedralHasNone) { EXPECT_FALSE(abelian_partner(fixture::lattice("D8")).has_value()); }

TEST(Partner, AbelianIsItsOwnPartner) {
  for (const char* key : {"C4xC2", "C9xC3", "C12xC2"}) {
    auto p = abelian_partner(fixture::lattice(key));
    ASSERT_TRUE(p.has_value()) << key;
    EXPECT_TRUE(group_isomorphism(p->lattice->group(), fixture::group(key)).found()) << key;
  }
}

TEST(Partner, SpecCounts) {
  EXPECT_EQ(abelian_group_specs(1).size(), 1u);
  EXPECT_EQ(abelian_group_specs(16).size(), 5u);
  EXPECT_EQ(abelian_group_specs(72).size(), 6u);
  EXPECT_EQ(abelian_group_specs(3125).size(), 7u);
}

TEST(GraphsConsistency, KleinVersusCyclic) {
  auto r = eq_graphs_consistency(fixture::group("C4"), fixture::group("V4"));
  EXPECT_TRUE(r.decided());
  EXPECT_TRUE(r.agree());
  EXPECT_FALSE(r.power.found());
  EXPECT_FALSE(r.enhanced.found());
  EXPECT_FALSE(r.directed.found());
}

TEST(GraphsConsistency, SelfPairs) {
  for (const char* key : {"S3", "Q8", "A4", "C9xC3"}) {
    auto r = eq_graphs_consistency(fixture::group(key), fixture::group(key));
    EXPECT_TRUE(r.power.found() && r.enhanced.found() && r.directed.found()) << key;
    EXPECT_EQ(r.orders_preserved, std::optional<bool>(true)) << key;
  }
}

TEST(GraphsConsistency, FrobeniusPair) {
  auto r = eq_graphs_consistency(fixture::group("G605_2"), fixture::group("G605_3"));
  EXPECT_TRUE(r.power.found());
  EXPECT_TRUE(r.enhanced.found());
  EXPECT_TRUE(r.directed.found());
  EXPECT_TRUE(r.agree());
}

TEST(Lemmas, AbelianPairs) {
  for (auto [a, b] : {std::pair{"C9xC3", "ES27"}, std::pair{"C8xC2", "M16"}}) {
    const auto& l1 = fixture::lattice(a);
    const auto& l2 = fixture::lattice(b);
    auto iso = group_complex_isomorphism(l1, l2, ComplexKind::Independence);
    ASSERT_TRUE(iso.outcome.found()) << b;
    auto suite = conditional_lemma_suite(l1, l2, *iso.outcome.value);
    EXPECT_TRUE(suite.all_pass()) << b;
    EXPECT_GE(suite.results.size(), 8u);
  }
}

TEST(Lemmas, RejectsBadPremises) {
  const auto& l = fixture::lattice("S3");
  std::vector<std::uint32_t> id(6);
  for (std::uint32_t i = 0; i < 6; ++i) id[i] = i;
  EXPECT_THROW(conditional_lemma_suite(l, l, id), Error);
  const auto& c4 = fixture::lattice("C4");
  EXPECT_THROW(conditional_lemma_suite(c4, fixture::lattice("V4"), {0, 1, 2, 3}), Error);
}

TEST(StrongToP, AbelianExamples) {
  for (const char* key : {"C6", "C12", "C12xC2", "V4", "C4xC2"}) {
    auto r = strong_to_p_check(fixture::lattice(key));
    EXPECT_TRUE(r.ok()) << key;
    EXPECT_GT(r.sets_checked, 0u);
  }
}

TEST(Runner, EmptySelection) {
  RunOptions opt;
  opt.groups = std::vector<std::string>{};
  EXPECT_TRUE(run_corpus(opt).entries.empty());
}

TEST(Runner, SyntheticFailureIsReported) {
  CorpusCheck bad;
  bad.name = "always-fails";
  bad.anchor = "synthetic";
  bad.suite = "test";
  bad.applies = [](const CorpusEntry&) { return true; };
  bad.run = [](const std::vector<const SubgroupLattice*>& ls, std::uint64_t) {
    return CheckOutcome{CheckStatus::Fail, "order " + std::to_string(ls[0]->group().order())};
  };
  RunOptions opt;
  opt.groups = std::vector<std::string>{"S3"};
  opt.source = fixture_source;
  auto r = run_corpus({bad}, opt);
  ASSERT_EQ(r.entries.size(), 1u);
  EXPECT_EQ(r.failures(), 1u);
  EXPECT_EQ(r.entries[0].witness, "order 6");
  EXPECT_NE(r.to_table().find("always-fails"), std::string::npos);

  auto j = nlohmann::json::parse(r.to_json());
  ASSERT_TRUE(j.is_array());
  for (const char* field : {"check", "anchor", "groups", "status", "witness", "millis"})
    EXPECT_TRUE(j[0].contains(field)) << field;
  EXPECT_EQ(j[0]["status"], "fail");
}

TEST(Runner, BudgetBecomesSkipped) {
  CorpusCheck slow;
  slow.name = "slow";
  slow.suite = "test";
  slow.applies = [](const CorpusEntry&) { return true; };
  slow.run = [](const std::vector<const SubgroupLattice*>&, std::uint64_t) -> CheckOutcome {
    throw Error(ErrorCode::SearchBudgetExceeded, "out of nodes");
  };
  RunOptions opt;
  opt.groups = std::vector<std::string>{"C2"};
  opt.source = fixture_source;
  auto r = run_corpus({slow}, opt);
  ASSERT_EQ(r.entries.size(), 1u);
  EXPECT_EQ(r.entries[0].status, CheckStatus::SkippedBudget);
  EXPECT_TRUE(r.ok());
}

TEST(Runner, SmallGroupsPassEverySuite) {
  RunOptions opt;
  opt.groups = keys_up_to(24);
  opt.source = fixture_source;
  auto r = run_corpus(opt);
  EXPECT_FALSE(r.entries.empty());
  EXPECT_TRUE(r.ok()) << r.to_table();
  for (const auto& s : suite_names()) EXPECT_FALSE(s.empty());
}
