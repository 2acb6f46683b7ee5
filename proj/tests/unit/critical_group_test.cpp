#include <random>
#include <set>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "sgcf/sgcf.hpp"

using namespace sgcf;

namespace {

IntVector factors(std::initializer_list<long> v) {
  IntVector out;
  for (long x : v) out.emplace_back(x);
  return out;
}

}  // namespace

TEST(ClassLabel, InvariantUnderFiring) {
  std::mt19937_64 rng(51);
  std::uniform_int_distribution<long> entry(-9, 9);
  for (int trial = 0; trial < 40; ++trial) {
    const auto p = make_pair(fixtures::to_signed_graph(oracle::random_graph(rng, 2 + trial % 6, 0.5)));
    Configuration c(p.dimension());
    IntVector z(p.dimension());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = entry(rng), z[i] = entry(rng);
    EXPECT_EQ(class_label(p, c), class_label(p, fire_multiset(p, c, z)));
    const ClassLabel l = class_label(p, c);
    for (std::size_t i = 0; i < l.residues.size(); ++i) {
      EXPECT_GE(l.residues[i], 0);
      EXPECT_LT(l.residues[i], std::max(p.snf().d[i], BigInt(1)));
    }
    EXPECT_EQ(class_label(p, class_representative(p, l)), l);
  }
}

TEST(ClassLabel, EqualLabelsIffDifferenceInImage) {
  std::mt19937_64 rng(52);
  std::uniform_int_distribution<long> entry(-4, 4);
  for (int trial = 0; trial < 40; ++trial) {
    const auto p = make_pair(fixtures::to_signed_graph(oracle::random_graph(rng, 2 + trial % 4, 0.5)));
    for (int k = 0; k < 20; ++k) {
      Configuration c(p.dimension()), d(p.dimension());
      for (std::size_t i = 0; i < c.size(); ++i) c[i] = entry(rng), d[i] = entry(rng);
      const Configuration diff = c - d;
      bool integral = true;
      for (const auto& v : mat_vec(p.L_inv(), diff.span())) integral = integral && v.is_integer();
      EXPECT_EQ(same_class(p, c, d), integral);
    }
  }
}

TEST(ClassLabel, Examples) {
  const auto g = make_pair(fixtures::g_phi());
  for (std::size_t i = 0; i < 8; ++i)
    EXPECT_EQ(class_label(g, fixtures::g_phi_criticals()[i]), class_label(g, fixtures::g_phi_superstables()[i]));
  const auto c3 = make_pair(build({FamilyKind::cycle, 3, Variant::all_negative, {}}));
  EXPECT_TRUE(same_class(c3, Configuration{1, 0}, Configuration{0, 1}));
  EXPECT_FALSE(same_class(c3, Configuration{0, 0}, Configuration{1, 1}));
  EXPECT_FALSE(same_class(c3, Configuration{1, 1}, Configuration{2, 2}));
}

TEST(AllLabels, LexicographicAndComplete) {
  const auto h = make_pair(fixtures::h_phi());
  const auto labels = all_labels(h);
  ASSERT_EQ(labels.size(), 12u);
  EXPECT_TRUE(std::is_sorted(labels.begin(), labels.end()));
  EXPECT_EQ(std::set<ClassLabel>(labels.begin(), labels.end()).size(), 12u);
}

TEST(CriticalGroup, Examples) {
  const auto g = critical_group(make_pair(fixtures::g_phi()));
  EXPECT_EQ(g.invariant_factors, factors({8}));
  EXPECT_EQ(g.order, 8);
  EXPECT_EQ(critical_group(make_pair(fixtures::h_phi())).invariant_factors, factors({12}));
  std::mt19937_64 rng(53);
  for (std::size_t n = 3; n <= 8; ++n) {
    std::vector<Sign> signs(n);
    for (auto& s : signs) s = rng() % 2 ? Sign::positive : Sign::negative;
    const auto group = critical_group(make_pair(build({FamilyKind::cycle, n, Variant::explicit_signs, signs})));
    EXPECT_EQ(group.invariant_factors, factors({static_cast<long>(n)}));
  }
}

TEST(Identity, Examples) {
  EXPECT_EQ(identity(make_pair(fixtures::g_phi())), (Configuration{3, 3, 1}));
  const SignedGraph k4 = build({FamilyKind::complete, 4, Variant::all_positive, {}});
  EXPECT_EQ(identity(make_pair(k4)), (Configuration{2, 2, 2}));

  // -C_5: the underlying cycle's identity is all ones, so the answer is
  // LM^{-1} 1 = L adj(M) 1 / det M.
  const SignedGraph c5 = build({FamilyKind::cycle, 5, Variant::all_negative, {}});
  oracle::Graph og{5, 4, {{0, 1, -1}, {1, 2, -1}, {2, 3, -1}, {3, 4, 1}, {4, 0, 1}}};
  const oracle::Pair op(og);
  oracle::Vec image = oracle::mul(oracle::mul(op.L, oracle::adjugate(op.M)), oracle::Vec(4, 1));
  const long long dm = oracle::det(op.M);
  for (auto& v : image) {
    ASSERT_EQ(v % dm, 0);
    v /= dm;
  }
  EXPECT_EQ(identity(make_pair(c5)), fixtures::config(image));
}

TEST(GroupAdd, Examples) {
  const auto g = make_pair(fixtures::g_phi());
  const Configuration e{3, 3, 1};
  EXPECT_EQ(group_add(g, e, e), e);
  for (const auto& c : fixtures::g_phi_criticals()) EXPECT_EQ(group_add(g, e, c), c);
  std::set<Configuration> orbit;
  Configuration x{4, 5, 1};
  for (int i = 0; i < 8; ++i) {
    orbit.insert(x);
    x = group_add(g, x, Configuration{4, 5, 1});
  }
  EXPECT_EQ(orbit.size(), 8u);
  EXPECT_EQ(x, (Configuration{4, 5, 1}));
  try {
    group_add(g, Configuration(3), e);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::precondition);
  }
}

TEST(GroupAdd, LabelMapIsAHomomorphism) {
  std::mt19937_64 rng(54);
  int graphs = 0;
  while (graphs < 8) {
    const auto sg = fixtures::to_signed_graph(oracle::random_graph(rng, 3 + graphs % 3, 0.6));
    if (!sg.is_connected_without_sink()) continue;
    const auto p = make_pair(sg);
    if (abs(p.det_L()) > 64) continue;
    ++graphs;
    const auto crit = enumerate_criticals(p);
    const Configuration e = identity(p);
    EXPECT_TRUE(is_critical(p, e));
    EXPECT_EQ(e, critical_rep(p, Configuration(p.dimension())));
    for (const auto& a : crit) {
      EXPECT_EQ(group_add(p, e, a), a);
      for (const auto& b : crit)
        EXPECT_EQ(class_label(p, group_add(p, a, b)), add_labels(p, class_label(p, a), class_label(p, b)));
    }
  }
}
