#include <gtest/gtest.h>

#include <cmath>

#include "fixtures.hpp"
#include "grpx/error.hpp"
#include "grpx/lattice.hpp"
#include "oracles.hpp"

using namespace grpx;

namespace {

std::vector<std::string> small_keys() {
  std::vector<std::string> out;
  for (const auto& e : corpus())
    if (e.order <= 24) out.push_back(e.key);
  return out;
}

std::vector<Elem> as_vector(const Bitset& b) {
  std::vector<Elem> v;
  b.for_each([&](std::size_t i) { v.push_back(static_cast<Elem>(i)); });
  return v;
}

}  // namespace

TEST(Lattice, SmallCounts) {
  EXPECT_EQ(fixture::lattice("Q8").size(), 6u);
  EXPECT_EQ(fixture::lattice("V4").size(), 5u);
  EXPECT_EQ(fixture::lattice("C5").size(), 2u);
  EXPECT_EQ(fixture::lattice("Triv").size(), 1u);
}

TEST(Lattice, BottomAndTop) {
  for (const auto& key : small_keys()) {
    const auto& l = fixture::lattice(key);
    EXPECT_EQ(l.order(l.bottom()), 1u) << key;
    EXPECT_EQ(l.order(l.top()), l.group().order()) << key;
  }
}

class SmallCorpus : public ::testing::TestWithParam<std::string> {};

TEST_P(SmallCorpus, SubgroupsMatchOracle) {
  const auto& l = fixture::lattice(GetParam());
  const auto expected = oracle::all_subgroups(l.group());
  std::set<std::vector<Elem>> got;
  for (std::size_t i = 0; i < l.size(); ++i) got.insert(as_vector(l.members(i)));
  EXPECT_EQ(got, expected);
  EXPECT_EQ(l.size(), expected.size());
}

TEST_P(SmallCorpus, DMatchesOracle) {
  const auto& l = fixture::lattice(GetParam());
  for (std::size_t i = 0; i < l.size(); ++i)
    EXPECT_EQ(l.d(i), oracle::min_gens(l.group(), as_vector(l.members(i)))) << "subgroup " << i;
}

TEST_P(SmallCorpus, MMatchesOracle) {
  const auto& l = fixture::lattice(GetParam());
  for (std::size_t i = 0; i < l.size(); ++i)
    EXPECT_EQ(max_minimal_generating(l, i), oracle::max_min_gens(l.group(), as_vector(l.members(i))))
        << "subgroup " << i;
}

TEST_P(SmallCorpus, ContainmentAndMeetJoin) {
  const auto& l = fixture::lattice(GetParam());
  for (std::size_t i = 0; i < l.size(); ++i)
    for (std::size_t j = 0; j < l.size(); ++j) {
      EXPECT_EQ(l.leq(i, j), l.members(i).is_subset_of(l.members(j)));
      const auto m = l.meet(i, j);
      Bitset both = l.members(i);
      both &= l.members(j);
      EXPECT_EQ(l.members(m), both);
      EXPECT_EQ(m, l.meet(j, i));
      const auto k = l.join(i, j);
      EXPECT_EQ(k, l.join(j, i));
      Bitset either = l.members(i);
      either |= l.members(j);
      EXPECT_EQ(as_vector(l.members(k)), oracle::members(oracle::close(l.group(), as_vector(either))));
    }
  for (std::size_t i = 0; i < l.size(); ++i) {
    EXPECT_EQ(l.meet(i, i), i);
    EXPECT_EQ(l.join(i, i), i);
  }
}

TEST_P(SmallCorpus, FrattiniIsIntersectionOfMaximals) {
  const auto& l = fixture::lattice(GetParam());
  for (std::size_t i = 0; i < l.size(); ++i) {
    Bitset phi = l.members(i);
    for (auto c : l.lower_covers(i)) phi &= l.members(c);
    EXPECT_EQ(l.members(l.frattini(i)), phi);
  }
}

INSTANTIATE_TEST_SUITE_P(Corpus, SmallCorpus, ::testing::ValuesIn(small_keys()),
                         [](const auto& info) { return info.param; });

TEST(Lattice, BurnsideBasisOnPGroups) {
  for (const auto& e : corpus()) {
    const auto& l = fixture::lattice(e.key);
    if (!p_group_prime(l.group()) || e.order == 1) continue;
    const auto p = *p_group_prime(l.group());
    for (std::size_t i = 0; i < l.size(); ++i) {
      const auto idx = l.order(i) / l.order(l.frattini(i));
      EXPECT_EQ(l.d(i), valuation(idx, p)) << e.key << " subgroup " << i;
    }
  }
}

TEST(Lattice, MinGenerators) {
  EXPECT_EQ(min_generators(fixture::lattice("Triv"), 0), 0u);
  EXPECT_EQ(fixture::lattice("Q8").d(fixture::lattice("Q8").top()), 2u);
  EXPECT_EQ(fixture::lattice("C9xC3").d(fixture::lattice("C9xC3").top()), 2u);
}

TEST(Lattice, MaxMinimalGenerating) {
  const auto& s3 = fixture::lattice("S3");
  EXPECT_EQ(max_minimal_generating(s3, s3.top()), 2u);
  const auto& v4 = fixture::lattice("V4");
  EXPECT_EQ(max_minimal_generating(v4, v4.top()), 2u);
  const auto& c6 = fixture::lattice("C6");
  EXPECT_EQ(max_minimal_generating(c6, c6.top()), 2u);
  const auto& c5 = fixture::lattice("C5");
  EXPECT_EQ(max_minimal_generating(c5, c5.top()), 1u);
}

TEST(Lattice, CharacteristicSubgroups) {
  const auto& a = fixture::lattice("C9xC3");
  EXPECT_EQ(characteristic_subgroup(a, {SubgroupKind::Frattini}).order(), 3u);
  EXPECT_EQ(characteristic_subgroup(a, {SubgroupKind::Mho, 1, 3}).order(), 3u);
  EXPECT_EQ(center(fixture::group("S3")).count(), 1u);
  EXPECT_EQ(derived_subgroup(fixture::group("S3")).count(), 3u);
  EXPECT_EQ(omega(fixture::group("SG32_32"), 2, 1).count(), 4u);
  EXPECT_EQ(characteristic_subgroup(fixture::lattice("S4"), {SubgroupKind::Sylow, 1, 2}).order(), 8u);
  EXPECT_EQ(lower_central_term(fixture::group("D8"), 2).count(), 2u);
  EXPECT_EQ(lower_central_term(fixture::group("D8"), 3).count(), 1u);
  EXPECT_THROW(omega(fixture::group("S3"), 3, 1), Error);
}

TEST(Lattice, GroupPredicates) {
  EXPECT_TRUE(is_solvable(fixture::group("S4")));
  EXPECT_FALSE(is_nilpotent(fixture::group("S4")));
  EXPECT_TRUE(is_nilpotent(fixture::group("Q8")));
  EXPECT_TRUE(is_nilpotent(fixture::group("C12xC2")));
  EXPECT_FALSE(is_nilpotent(fixture::group("S3")));
}

TEST(Lattice, Modular) {
  EXPECT_TRUE(is_modular_lattice(fixture::lattice("C4xC2")));
  EXPECT_TRUE(is_modular_lattice(fixture::lattice("E8")));
  EXPECT_TRUE(is_modular_lattice(fixture::lattice("Q8")));
  EXPECT_TRUE(is_modular_lattice(fixture::lattice("M16")));
  EXPECT_FALSE(is_modular_lattice(fixture::lattice("D8")));
}

TEST(Lattice, DedekindAndHamiltonian) {
  EXPECT_TRUE(is_hamiltonian(fixture::lattice("Q8")));
  EXPECT_TRUE(is_dedekind(fixture::lattice("Q8")));
  EXPECT_FALSE(is_hamiltonian(fixture::lattice("V4")));
  EXPECT_TRUE(is_dedekind(fixture::lattice("V4")));
  EXPECT_FALSE(is_hamiltonian(fixture::lattice("S3")));
}

TEST(Lattice, Metacyclic) {
  EXPECT_TRUE(is_metacyclic(fixture::lattice("Q8")));
  EXPECT_FALSE(is_metacyclic(fixture::lattice("E8")));
  EXPECT_TRUE(is_metacyclic(fixture::lattice("C9")));
  EXPECT_TRUE(is_metacyclic(fixture::lattice("S3")));
  EXPECT_FALSE(is_metacyclic(fixture::lattice("SG32_32")));
}

TEST(Lattice, PowerfulAndHomocyclic) {
  EXPECT_TRUE(is_powerful(fixture::group("C4xC2"), 2));
  EXPECT_FALSE(is_powerful(fixture::group("D8"), 2));
  EXPECT_TRUE(is_powerful(fixture::group("ES27"), 3));
  EXPECT_TRUE(is_homocyclic(build_group("C(9) x C(9)"), 3));
  EXPECT_FALSE(is_homocyclic(fixture::group("C9xC3"), 3));
  EXPECT_TRUE(is_homocyclic(build_group("C(11) x C(11)"), 11));
  EXPECT_THROW(is_homocyclic(fixture::group("ES27"), 3), Error);
  EXPECT_THROW(is_powerful(fixture::group("S3"), 3), Error);
}

TEST(Lattice, IwasawaWitnessConjugation) {
  const auto& l = fixture::lattice("M16");
  auto w = iwasawa_decomposition(l, 2);
  ASSERT_TRUE(w);
  EXPECT_EQ(l.order(w->a), 8u);
  EXPECT_TRUE(l.is_cyclic(w->a));
  EXPECT_EQ(w->s, 2u);
  const auto& g = l.group();
  l.members(w->a).for_each([&](std::size_t a) {
    EXPECT_EQ(g.conj(static_cast<Elem>(a), w->b), g.power(static_cast<Elem>(a), 1 + 4));
  });
  EXPECT_FALSE(iwasawa_decomposition(fixture::lattice("D8"), 2));
  EXPECT_FALSE(iwasawa_decomposition(fixture::lattice("Q8"), 2));
}

TEST(Lattice, IwasawaAbelianConvention) {
  auto w = iwasawa_decomposition(fixture::lattice("C9xC3"), 3);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->b, 0u);
  EXPECT_EQ(w->s, 2u);
}

TEST(Lattice, IsomorphismNotIndexPreserving) {
  const auto a = enumerate_subgroups(build_group("C(3) x C(3)"));
  const auto& b = fixture::lattice("S3");
  EXPECT_TRUE(lattice_isomorphism(a, b, false).found());
  EXPECT_TRUE(lattice_isomorphism(a, b, true).exhausted());
  const auto& x = fixture::lattice("G42_1");
  const auto& y = fixture::lattice("G42_2");
  auto iso = lattice_isomorphism(x, y, false);
  ASSERT_TRUE(iso.found());
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) EXPECT_EQ(x.leq(i, j), y.leq((*iso.value)[i], (*iso.value)[j]));
  EXPECT_TRUE(lattice_isomorphism(x, y, true).exhausted());
}

TEST(Lattice, IsomorphismReflexive) {
  for (const auto& e : corpus()) {
    if (e.has_tag("slow")) continue;
    const auto& l = fixture::lattice(e.key);
    EXPECT_TRUE(lattice_isomorphism(l, l, true).found()) << e.key;
  }
}

TEST(Lattice, IndexPreservingAbelianPartners) {
  EXPECT_TRUE(lattice_isomorphism(fixture::lattice("C9xC3"), fixture::lattice("ES27"), true).found());
  EXPECT_TRUE(lattice_isomorphism(fixture::lattice("C8xC2"), fixture::lattice("M16"), true).found());
  EXPECT_TRUE(lattice_isomorphism(fixture::lattice("C4xC2"), fixture::lattice("D8"), false).exhausted());
}

TEST(Lattice, ChiefNonFrattini) {
  EXPECT_EQ(chief_non_frattini_count(fixture::lattice("C5")), 1u);
  EXPECT_EQ(chief_non_frattini_count(fixture::lattice("V4")), 2u);
  EXPECT_EQ(chief_non_frattini_count(fixture::lattice("S3")), 2u);
  EXPECT_EQ(chief_non_frattini_count(fixture::lattice("C4")), 1u);
  for (const auto& e : corpus()) {
    if (e.has_tag("slow")) continue;
    const auto& l = fixture::lattice(e.key);
    if (!is_solvable(l.group())) continue;
    EXPECT_EQ(chief_non_frattini_count(l), max_minimal_generating(l, l.top())) << e.key;
  }
}

TEST(Lattice, Rank) {
  EXPECT_EQ(rank(fixture::lattice("C12")), 1u);
  EXPECT_EQ(rank(fixture::lattice("V4")), 2u);
  EXPECT_EQ(rank(fixture::lattice("BL3125")), 4u);
  EXPECT_EQ(rank(fixture::lattice("FC3125")), 3u);
}

TEST(Lattice, ReportInvariants) {
  for (const auto& e : corpus()) {
    if (e.has_tag("slow")) continue;
    const auto r = structure_report(fixture::lattice(e.key));
    EXPECT_LE(r.d, r.m) << e.key;
    EXPECT_LE(r.d, r.rank) << e.key;
    if (r.is_hamiltonian) EXPECT_TRUE(r.is_dedekind && !r.is_abelian) << e.key;
    EXPECT_EQ(r.subgroup_count, e.fingerprint.subgroups) << e.key;
    EXPECT_FALSE(to_text(r).empty());
  }
}

TEST(Lattice, InducedAndQuotient) {
  const auto& l = fixture::lattice("S4");
  std::size_t v4 = 0;
  for (std::size_t i = 0; i < l.size(); ++i)
    if (l.order(i) == 4 && l.is_normal(i)) v4 = i;
  ASSERT_NE(v4, 0u);
  const auto q = quotient_group(l.group(), l.members(v4));
  EXPECT_EQ(q.order(), 6u);
  EXPECT_FALSE(q.is_abelian());
  std::vector<Elem> emb;
  const auto h = induced_group(l.group(), l.members(v4), &emb);
  EXPECT_EQ(h.order(), 4u);
  EXPECT_EQ(h.exponent(), 2u);
}
