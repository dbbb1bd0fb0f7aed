#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "grpx/error.hpp"
#include "grpx/lattice.hpp"

using namespace grpx;

namespace {

ErrorCode code_of(const std::string& text) {
  try {
    build_group(text);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error for " << text;
  return ErrorCode::Io;
}

}  // namespace

TEST(Dsl, DirectProductShape) {
  auto s = parse_construction("C(9) x C(3)");
  ASSERT_EQ(s.kind, ConstructionSpec::Kind::Direct);
  EXPECT_EQ(s.left->kind, ConstructionSpec::Kind::Cyclic);
  EXPECT_EQ(s.left->n, 9u);
  EXPECT_EQ(s.right->n, 3u);
}

TEST(Dsl, SemidirectMatrix) {
  auto s = parse_construction("SD(C(11) x C(11), C(5), mat[3 0; 0 9])");
  ASSERT_EQ(s.kind, ConstructionSpec::Kind::Semidirect);
  EXPECT_EQ(s.action.kind, ActionSpec::Kind::Matrix);
  EXPECT_EQ(s.action.matrix, (std::vector<std::vector<long long>>{{3, 0}, {0, 9}}));
  EXPECT_EQ(build_group(s).order(), 605u);
}

TEST(Dsl, SyntaxErrorPosition) {
  try {
    parse_construction("C(");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SyntaxError);
    EXPECT_NE(std::string(e.what()).find("column 3"), std::string::npos) << e.what();
  }
}

TEST(Dsl, ErrorKinds) {
  EXPECT_EQ(code_of("Nope"), ErrorCode::UnknownName);
  EXPECT_EQ(code_of("SD(C(3) x C(3), C(3), mat[1 1 1; 0 1 0])"), ErrorCode::DimensionMismatch);
  EXPECT_EQ(code_of("C(3) x"), ErrorCode::SyntaxError);
  EXPECT_EQ(code_of("SD(C(3), C(2), pow(3))"), ErrorCode::ActionNotAutomorphism);
  EXPECT_EQ(code_of("SD(C(7), C(2), pow(2))"), ErrorCode::ActionNotHomomorphism);
}

TEST(Dsl, MultiLineErrorReportsLine) {
  try {
    parse_construction("C(3) x\n  C(]");
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos) << e.what();
  }
}

TEST(Dsl, NamedAndParenthesized) {
  EXPECT_EQ(build_group("Q8 x C(3)").order(), 24u);
  EXPECT_EQ(build_group("(C(2) x C(2)) x C(2)").order(), 8u);
  EXPECT_EQ(parse_construction("S3").kind, ConstructionSpec::Kind::Named);
}

TEST(Dsl, PcAndPerm) {
  EXPECT_EQ(build_group("PC{3; a; }").order(), 3u);
  EXPECT_EQ(build_group("Perm(3; (0 1 2), (0 1))").order(), 6u);
}

TEST(Dsl, RoundTrip) {
  std::vector<std::string> texts{"C(9) x C(3)", "(C(2) x C(2)) x C(2)", "C(2) x (C(2) x C(2))",
                                 "SD(C(7), C(6), pow(2))", "Perm(4; (0 1 2 3), (0 1))", "Q8 x C(3)"};
  for (const auto& e : corpus()) texts.push_back(e.spec);
  for (const auto& t : texts) {
    const auto a = parse_construction(t);
    const auto printed = print_construction(a);
    const auto b = parse_construction(printed);
    EXPECT_TRUE(a == b) << t << " printed as " << printed;
    EXPECT_EQ(print_construction(b), printed);
  }
}

TEST(Dsl, CorpusFingerprints) {
  for (const auto& e : corpus()) {
    const auto& g = fixture::group(e.key);
    EXPECT_EQ(g.order(), e.order) << e.key;
    EXPECT_EQ(order_statistics(g), e.fingerprint.orders) << e.key;
    const auto& l = fixture::lattice(e.key);
    EXPECT_EQ(l.size(), e.fingerprint.subgroups) << e.key;
    EXPECT_EQ(l.d(l.top()), e.fingerprint.d) << e.key;
    EXPECT_EQ(rank(l), e.fingerprint.rank) << e.key;
  }
}

TEST(Dsl, CorpusTags) {
  EXPECT_GE(corpus().size(), 20u);
  for (const auto& e : corpus()) {
    const auto& l = fixture::lattice(e.key);
    const auto& g = l.group();
    if (e.has_tag("abelian")) EXPECT_TRUE(g.is_abelian()) << e.key;
    if (e.has_tag("cyclic")) EXPECT_TRUE(l.is_cyclic(l.top())) << e.key;
    if (e.has_tag("nilpotent")) EXPECT_TRUE(is_nilpotent(g) && !g.is_abelian()) << e.key;
    if (e.has_tag("hamiltonian")) EXPECT_TRUE(is_hamiltonian(l)) << e.key;
    if (e.has_tag("modular-nonhamiltonian"))
      EXPECT_TRUE(is_modular_lattice(l) && !is_hamiltonian(l)) << e.key;
  }
}

TEST(Dsl, BlackburnGroupProperties) {
  const auto& l = fixture::lattice("BL3125");
  const auto& g = l.group();
  EXPECT_EQ(g.exponent(), 5u);
  // Maximal class: |G : gamma_2| = p^2 and gamma_i drops by p after that.
  EXPECT_EQ(lower_central_term(g, 2).count(), 125u);
  EXPECT_EQ(lower_central_term(g, 3).count(), 25u);
  EXPECT_EQ(lower_central_term(g, 4).count(), 5u);
  EXPECT_EQ(lower_central_term(g, 5).count(), 1u);
  bool abelian_maximal = false;
  for (auto c : l.lower_covers(l.top())) abelian_maximal |= l.is_abelian(c);
  EXPECT_TRUE(abelian_maximal);
}

TEST(Dsl, FreeClassThreeProperties) {
  const auto& g = fixture::group("FC3125");
  EXPECT_EQ(g.exponent(), 5u);
  EXPECT_EQ(lower_central_term(g, 3).count(), 25u);
  EXPECT_EQ(lower_central_term(g, 4).count(), 1u);
}
