#include <gtest/gtest.h>

#include <numeric>
#include <set>

#include "grpx/error.hpp"
#include "grpx/group.hpp"
#include "grpx/pc_presentation.hpp"

using namespace grpx;

namespace {

std::vector<std::vector<std::uint32_t>> z_mod(std::uint32_t n) {
  std::vector<std::vector<std::uint32_t>> t(n, std::vector<std::uint32_t>(n));
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  return t;
}

std::multiset<std::uint32_t> order_multiset(const FiniteGroup& g) {
  return {g.orders().begin(), g.orders().end()};
}

// Brute-force order of x by repeated multiplication.
std::uint32_t naive_order(const FiniteGroup& g, Elem x) {
  std::uint32_t k = 1;
  for (Elem y = x; y != 0; y = g.mul(y, x)) ++k;
  return k;
}

void expect_group_axioms(const FiniteGroup& g) {
  const auto n = g.order();
  for (Elem x = 0; x < n; ++x) {
    EXPECT_EQ(g.mul(0, x), x);
    EXPECT_EQ(g.mul(x, 0), x);
    EXPECT_EQ(g.mul(x, g.inv(x)), 0u);
    EXPECT_EQ(n % g.element_order(x), 0u);
    EXPECT_EQ(g.element_order(g.inv(x)), g.element_order(x));
  }
}

Permutation cycle_perm(std::size_t degree, std::initializer_list<std::vector<std::uint32_t>> cycles) {
  Permutation p(degree);
  std::iota(p.begin(), p.end(), 0U);
  for (const auto& c : cycles)
    for (std::size_t i = 0; i < c.size(); ++i) p[c[i]] = c[(i + 1) % c.size()];
  return p;
}

}  // namespace

TEST(CayleyTable, TrivialGroup) {
  auto g = group_from_cayley_table({{0}});
  EXPECT_EQ(g.order(), 1u);
  EXPECT_EQ(g.element_order(0), 1u);
}

TEST(CayleyTable, Z2) {
  auto g = group_from_cayley_table(z_mod(2));
  EXPECT_EQ(g.orders(), (std::vector<std::uint32_t>{1, 2}));
}

TEST(CayleyTable, NonAssociativeRejected) {
  // A Latin square of order 6 with identity 0 that is not a group (a loop).
  std::vector<std::vector<std::uint32_t>> t = {
      {0, 1, 2, 3, 4, 5}, {1, 0, 3, 2, 5, 4}, {2, 4, 0, 5, 1, 3},
      {3, 5, 1, 0, 2, 4}, {4, 2, 5, 1, 3, 0}, {5, 3, 4, 2, 0, 1}};
  try {
    group_from_cayley_table(t);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_TRUE(e.code() == ErrorCode::NotAssociative || e.code() == ErrorCode::NotLatinSquare) << e.what();
  }
}

TEST(CayleyTable, NotLatinNamesCell) {
  std::vector<std::vector<std::uint32_t>> t = {{0, 1}, {1, 1}};
  try {
    group_from_cayley_table(t);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotLatinSquare);
    EXPECT_NE(std::string(e.what()).find("(1,1)"), std::string::npos) << e.what();
  }
}

TEST(CayleyTable, IdentityRelabeled) {
  // Z3 with identity labelled 2.
  std::vector<std::vector<std::uint32_t>> t = {{1, 2, 0}, {2, 0, 1}, {0, 1, 2}};
  auto g = group_from_cayley_table(t);
  EXPECT_EQ(g.order(), 3u);
  ASSERT_EQ(g.input_labels().size(), 3u);
  EXPECT_EQ(g.input_labels()[0], 2u);
  expect_group_axioms(g);
}

TEST(CayleyTable, NoIdentity) {
  // A Latin square with no row equal to the column labels.
  std::vector<std::vector<std::uint32_t>> bad = {{1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
  try {
    group_from_cayley_table(bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NoIdentity);
  }
}

TEST(CayleyTable, TextRoundTrip) {
  auto g = make_direct_product(make_cyclic(4), make_cyclic(2));
  auto back = read_cayley_table(write_cayley_table(g));
  EXPECT_TRUE(back == g);
}

TEST(Permutations, SymmetricGroupS3) {
  auto g = group_from_permutations(3, {cycle_perm(3, {{0, 1, 2}}), cycle_perm(3, {{0, 1}})});
  EXPECT_EQ(g.order(), 6u);
  EXPECT_FALSE(g.is_abelian());
  expect_group_axioms(g);
}

TEST(Permutations, FourCycle) {
  auto g = group_from_permutations(4, {cycle_perm(4, {{0, 1, 2, 3}})});
  EXPECT_EQ(g.order(), 4u);
  EXPECT_EQ(g.exponent(), 4u);
}

TEST(Permutations, QuaternionHasOneInvolution) {
  auto g = group_from_permutations(8, {cycle_perm(8, {{0, 1, 4, 5}, {2, 3, 6, 7}}),
                                       cycle_perm(8, {{0, 2, 4, 6}, {1, 7, 5, 3}})});
  EXPECT_EQ(g.order(), 8u);
  std::size_t involutions = 0;
  for (Elem x = 0; x < g.order(); ++x) involutions += naive_order(g, x) == 2;
  EXPECT_EQ(involutions, 1u);
}

TEST(Permutations, CapEnforced) {
  Permutation cyc(8), tr(8);
  std::iota(cyc.begin(), cyc.end(), 1U);
  cyc[7] = 0;
  std::iota(tr.begin(), tr.end(), 0U);
  std::swap(tr[0], tr[1]);
  try {
    group_from_permutations(8, {cyc, tr}, 1000);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::OrderCapExceeded);
  }
}

TEST(Cyclic, Orders) {
  EXPECT_EQ(make_cyclic(1).order(), 1u);
  EXPECT_EQ(order_multiset(make_cyclic(6)), (std::multiset<std::uint32_t>{1, 2, 3, 3, 6, 6}));
  EXPECT_EQ(make_cyclic(9).element_order(1), 9u);
  EXPECT_EQ(element_order(make_cyclic(6), 1), 6u);
}

TEST(DirectProduct, C9xC3) {
  auto g = make_direct_product(make_cyclic(9), make_cyclic(3));
  EXPECT_EQ(g.order(), 27u);
  std::size_t nine = 0;
  for (Elem x = 0; x < 27; ++x) nine += naive_order(g, x) == 9;
  EXPECT_EQ(nine, 18u);
}

TEST(DirectProduct, KleinAndTrivialFactor) {
  auto v = make_direct_product(make_cyclic(2), make_cyclic(2));
  EXPECT_EQ(order_statistics(v).at(2), 3u);
  auto g = make_cyclic(6);
  EXPECT_TRUE(make_direct_product(g, make_cyclic(1)) == g);
}

TEST(DirectProduct, CapEnforced) {
  EXPECT_THROW(make_direct_product(make_cyclic(200), make_cyclic(200)), Error);
}

TEST(Semidirect, S3FromInversion) {
  auto n = make_cyclic(3), h = make_cyclic(2);
  GroupHom inv{n, n, {0, 2, 1}};
  auto action = action_from_generators(n, h, {inv});
  auto g = make_semidirect_product(n, h, action);
  EXPECT_EQ(g.order(), 6u);
  EXPECT_EQ(order_statistics(g).at(2), 3u);
  expect_group_axioms(g);
}

TEST(Semidirect, TrivialActionEqualsDirect) {
  auto n = make_cyclic(4), h = make_cyclic(3);
  std::vector<GroupHom> action(3, identity_hom(n));
  EXPECT_TRUE(make_semidirect_product(n, h, action) == make_direct_product(n, h));
}

TEST(Semidirect, RejectsBadActions) {
  auto n = make_cyclic(3), h = make_cyclic(2);
  try {
    action_from_generators(n, h, {GroupHom{n, n, {0, 1, 1}}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ActionNotAutomorphism);
  }
  // Inversion has order 2, so it cannot be the image of a generator of C3.
  auto c3 = make_cyclic(3);
  try {
    action_from_generators(n, c3, {GroupHom{n, n, {0, 2, 1}}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ActionNotHomomorphism);
  }
}

TEST(Semidirect, Order605) {
  auto f = make_direct_product(make_cyclic(11), make_cyclic(11));
  auto c5 = make_cyclic(5);
  // diag(3, 9) on F_11^2 with element index a*11 + b.
  std::vector<Elem> img(121);
  for (Elem a = 0; a < 11; ++a)
    for (Elem b = 0; b < 11; ++b) img[a * 11 + b] = (3 * a % 11) * 11 + (9 * b % 11);
  auto g = make_semidirect_product(f, c5, action_from_generators(f, c5, {GroupHom{f, f, img}}));
  EXPECT_EQ(g.order(), 605u);
  auto stats = order_statistics(g);
  EXPECT_EQ(stats.at(11), 120u);
  EXPECT_EQ(stats.at(5), 484u);
}

namespace {

PcPresentation sg81() {
  PcPresentation p;
  p.prime = 3;
  p.names = {"a", "b", "c", "d"};
  p.power[0] = {{3, 1}};
  p.power[1] = {{3, 2}};
  p.comm[{1, 0}] = {{2, 1}};
  p.comm[{2, 0}] = {{3, 1}};
  return p;
}

PcPresentation sg32() {
  PcPresentation p;
  p.prime = 2;
  p.names = {"a", "b", "c", "d", "e"};
  p.power[0] = {{3, 1}};
  p.power[1] = {{4, 1}};
  p.power[2] = {{3, 1}, {4, 1}};
  p.comm[{1, 0}] = {{4, 1}};
  p.comm[{2, 0}] = {{3, 1}};
  return p;
}

}  // namespace

TEST(PcPresentation, CyclicOfOrder3) {
  PcPresentation p;
  p.prime = 3;
  p.names = {"a"};
  auto g = group_from_pc_presentation(p);
  EXPECT_EQ(g.order(), 3u);
  EXPECT_EQ(g.exponent(), 3u);
}

TEST(PcPresentation, SmallGroup81_10SatisfiesPublishedRelations) {
  auto g = group_from_pc_presentation(sg81());
  ASSERT_EQ(g.order(), 81u);
  EXPECT_EQ(g.exponent(), 9u);
  const Elem a = 27, b = 9, c = 3;
  EXPECT_EQ(g.power(a, 9), 0u);
  EXPECT_EQ(g.power(b, 9), 0u);
  EXPECT_EQ(g.power(c, 3), 0u);
  EXPECT_EQ(g.power(a, 3), g.power(b, -3));
  EXPECT_EQ(g.comm(c, b), 0u);
  EXPECT_EQ(g.comm(b, a), c);
  EXPECT_EQ(g.comm(c, a), g.power(a, 3));
  expect_group_axioms(g);
}

TEST(PcPresentation, SmallGroup32_32SatisfiesPublishedRelations) {
  auto g = group_from_pc_presentation(sg32());
  ASSERT_EQ(g.order(), 32u);
  const Elem a = 16, b = 8, c = 4;
  EXPECT_EQ(g.power(a, 4), 0u);
  EXPECT_EQ(g.power(b, 4), 0u);
  EXPECT_EQ(g.power(c, 2), g.mul(g.power(a, 2), g.power(b, 2)));
  EXPECT_EQ(g.comm(a, b), g.power(b, 2));
  EXPECT_EQ(g.comm(a, c), g.power(a, 2));
  EXPECT_EQ(g.comm(b, c), 0u);
  std::size_t omega1 = 0;
  for (Elem x = 0; x < 32; ++x) omega1 += g.element_order(x) <= 2;
  EXPECT_EQ(omega1, 4u);
}

TEST(PcPresentation, ExponentPElementsHaveOrderP) {
  PcPresentation p;
  p.prime = 5;
  p.names = {"a", "b", "c", "d", "e"};
  p.comm[{1, 0}] = {{2, 1}};
  p.comm[{2, 0}] = {{3, 1}};
  p.comm[{2, 1}] = {{4, 1}};
  auto g = group_from_pc_presentation(p);
  ASSERT_EQ(g.order(), 3125u);
  for (Elem x = 1; x < g.order(); ++x) ASSERT_EQ(g.element_order(x), 5u);
}

TEST(PcPresentation, InconsistentRejected) {
  // a^2 = b, [b,a] = b would make b trivial: the normal words collapse.
  PcPresentation p;
  p.prime = 2;
  p.names = {"a", "b"};
  p.power[0] = {{1, 1}};
  p.comm[{1, 0}] = {{1, 1}};
  EXPECT_THROW(group_from_pc_presentation(p), Error);
}

TEST(GroupIso, CyclicVsKlein) {
  auto r = group_isomorphism(make_cyclic(4), make_direct_product(make_cyclic(2), make_cyclic(2)));
  EXPECT_TRUE(r.exhausted());
}

TEST(GroupIso, ReflexiveAndSymmetric) {
  auto s3perm = group_from_permutations(3, {cycle_perm(3, {{0, 1, 2}}), cycle_perm(3, {{0, 1}})});
  auto n = make_cyclic(3), h = make_cyclic(2);
  auto s3sd = make_semidirect_product(n, h, action_from_generators(n, h, {GroupHom{n, n, {0, 2, 1}}}));
  auto self = group_isomorphism(s3perm, s3perm);
  ASSERT_TRUE(self.found());
  auto ab = group_isomorphism(s3perm, s3sd);
  auto ba = group_isomorphism(s3sd, s3perm);
  ASSERT_TRUE(ab.found());
  ASSERT_TRUE(ba.found());
  EXPECT_TRUE(ab.value->is_automorphism() || (ab.value->is_bijective() && ab.value->is_homomorphism()));
}

TEST(GroupIso, C6VsS3) {
  auto s3 = group_from_permutations(3, {cycle_perm(3, {{0, 1, 2}}), cycle_perm(3, {{0, 1}})});
  EXPECT_TRUE(group_isomorphism(make_cyclic(6), s3).exhausted());
}
