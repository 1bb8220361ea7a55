#include <gtest/gtest.h>

#include <random>

#include "cobweb/cobweb.hpp"
#include "cobweb/oracle.hpp"
#include "support.hpp"

namespace cobweb {
namespace {

using testing::chain_of;
using testing::graph_of;
using testing::node;
using testing::V;

const LevelSequence kFib = LevelSequence::fibonacci();

const std::vector<Vertex> kPrintedX = {V(1, 0), V(1, 1), V(1, 2), V(1, 3), V(2, 3), V(1, 4), V(2, 4),
                                       V(3, 4), V(1, 5), V(2, 5), V(3, 5), V(4, 5), V(5, 5)};
const std::vector<Vertex> kPrintedY = {V(1, 0), V(1, 1), V(1, 2), V(2, 3), V(1, 3), V(3, 4), V(2, 4),
                                       V(1, 4), V(5, 5), V(4, 5), V(3, 5), V(2, 5), V(1, 5)};

TEST(Chains, PrintedFibonacciPrefixes) {
  auto p = build_cobweb(kFib, 5);
  EXPECT_EQ(chain_x(p).order(), kPrintedX);
  EXPECT_EQ(chain_y(p).order(), kPrintedY);
}

TEST(Chains, SingletonLevelsCoincide) {
  auto p = build_cobweb(LevelSequence::constant(1), 2);
  EXPECT_EQ(chain_x(p).order(), (std::vector<Vertex>{V(1, 0), V(1, 1), V(1, 2)}));
  EXPECT_EQ(chain_x(p), chain_y(p));
}

TEST(Chains, LinearExtensionsAndLevelReversal) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 80; ++trial) {
    const std::uint64_t max_level = rng() % 7;
    auto p = build_cobweb(testing::random_explicit_sequence(max_level + 1, rng), max_level);
    auto x = chain_x(p), y = chain_y(p);
    EXPECT_TRUE(is_linear_extension(x, p.hasse()));
    EXPECT_TRUE(is_linear_extension(y, p.hasse()));
    EXPECT_TRUE(is_admissible(x, p.hasse()));
    EXPECT_TRUE(is_admissible(y, p.hasse()));
    for (const auto& u : p.hasse().vertices())
      for (const auto& v : p.hasse().vertices()) {
        if (u.level != v.level) {
          EXPECT_EQ(x.leq(u, v), y.leq(u, v));
        } else if (u != v) {
          EXPECT_NE(x.leq(u, v), y.leq(u, v));
        }
      }
  }
}

TEST(IntersectChains, Examples) {
  auto c = chain_of({2, 0, 1});
  auto self = intersect_chains(c, c);
  EXPECT_EQ(self.pair_count(), 6u);
  EXPECT_TRUE(self.contains(node(2), node(1)));

  auto anti = intersect_chains(chain_of({0, 1}), chain_of({1, 0}));
  EXPECT_EQ(testing::pair_set(anti), (std::set<Arc>{{node(0), node(0)}, {node(1), node(1)}}));

  EXPECT_THROW(intersect_chains(chain_of({0, 1}), chain_of({0, 2})), VertexSetMismatch);

  auto p = build_cobweb(kFib, 5);
  EXPECT_EQ(intersect_chains(chain_x(p), chain_y(p)), strict_order_relation(p).reflexive_closure());
}

TEST(IntersectChains, AlwaysAPartialOrder) {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 12;
    std::vector<Vertex> a, b;
    for (std::size_t k = 0; k < n; ++k) a.push_back(node(k));
    b = a;
    std::shuffle(a.begin(), a.end(), rng);
    std::shuffle(b.begin(), b.end(), rng);
    auto r = intersect_chains(Chain(a), Chain(b));
    EXPECT_TRUE(r.is_reflexive());
    EXPECT_TRUE(r.is_antisymmetric());
    EXPECT_TRUE(r.is_transitive());
  }
}

TEST(VerifyRealizer, FibonacciIdentityAndSingleChainFailure) {
  for (std::uint64_t level = 0; level <= 7; ++level) {
    auto p = build_cobweb(kFib, level);
    EXPECT_TRUE(verify_realizer(Realizer(chain_x(p), chain_y(p), p.hasse()))) << level;
  }
  auto p = build_cobweb(kFib, 4);
  auto res = verify_realizer(Realizer(chain_x(p), chain_x(p), p.hasse()));
  EXPECT_FALSE(res);
  ASSERT_TRUE(res.witness);
  EXPECT_EQ(res.witness->first.level, res.witness->second.level);
  EXPECT_NE(res.witness->first, res.witness->second);
}

TEST(VerifyRealizer, NPosetAgainstPairwiseBruteForce) {
  auto g = testing::n_poset();
  auto closure = testing::closure_by_squaring(g);
  auto exts = oracle::enumerate_linear_extensions(oracle::FinitePoset::from_digraph(g), 100);
  ASSERT_EQ(exts.size(), 5u);
  std::size_t realizing = 0;
  for (const auto& a : exts)
    for (const auto& b : exts) {
      bool expected = true;
      for (const auto& u : g.vertices())
        for (const auto& v : g.vertices()) {
          bool in_both = a.leq(u, v) && b.leq(u, v);
          bool in_order = u == v || closure.contains({u, v});
          expected = expected && in_both == in_order;
        }
      realizing += expected;
      EXPECT_EQ(bool(verify_realizer(Realizer(a, b, g))), expected);
    }
  EXPECT_GT(realizing, 0u);
}

TEST(Realizer, RejectsNonExtensions) {
  auto path = graph_of(3, {{0, 1}, {1, 2}});
  EXPECT_THROW(Realizer(chain_of({1, 0, 2}), chain_of({0, 1, 2}), path), NotLinearExtension);
  EXPECT_THROW(Realizer(chain_of({0, 1}), chain_of({0, 1, 2}), path), VertexSetMismatch);
}

TEST(ConjugateChain, Examples) {
  auto p = build_cobweb(kFib, 6);
  auto y = conjugate_chain(chain_x(p), p.hasse());
  ASSERT_TRUE(std::holds_alternative<Chain>(y));
  EXPECT_EQ(std::get<Chain>(y), chain_y(p));
  auto back = conjugate_chain(chain_y(p), p.hasse());
  EXPECT_EQ(std::get<Chain>(back), chain_x(p));

  auto none = graph_of(4, {});
  EXPECT_EQ(std::get<Chain>(conjugate_chain(chain_of({2, 0, 3, 1}), none)), chain_of({1, 3, 0, 2}));

  auto path = graph_of(3, {{0, 1}, {1, 2}});
  EXPECT_EQ(std::get<Chain>(conjugate_chain(chain_of({0, 1, 2}), path)), chain_of({0, 1, 2}));

  EXPECT_THROW(conjugate_chain(chain_of({1, 0, 2}), path), NotLinearExtension);
}

TEST(ConjugateChain, InadmissibleExtensionGivesCycle) {
  auto g = graph_of(3, {{0, 2}});
  auto x = chain_of({0, 1, 2});
  auto res = conjugate_chain(x, g);
  ASSERT_TRUE(std::holds_alternative<ConjugateCycle>(res));
  const auto& cycle = std::get<ConjugateCycle>(res).cycle;
  ASSERT_EQ(cycle.size(), 3u);
  auto reach = reachability(g);
  auto before = [&](const Vertex& a, const Vertex& b) {
    return reach.contains(a, b) || (!reach.contains(b, a) && x.rank(b) < x.rank(a));
  };
  for (std::size_t i = 0; i < cycle.size(); ++i) EXPECT_TRUE(before(cycle[i], cycle[(i + 1) % cycle.size()]));
}

TEST(ConjugateChain, AdmissibleExtensionsAlwaysConjugate) {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 150; ++trial) {
    auto g = transitive_reduction(testing::random_dag(1 + rng() % 7, 0.4, rng));
    auto exts = oracle::enumerate_linear_extensions(oracle::FinitePoset::from_digraph(g), 5040);
    for (const auto& x : exts) {
      auto res = conjugate_chain(x, g);
      EXPECT_EQ(std::holds_alternative<Chain>(res), bool(is_admissible(x, g)));
      if (auto* y = std::get_if<Chain>(&res)) {
        EXPECT_TRUE(verify_realizer(Realizer(x, *y, g)));
      }
    }
  }
}

TEST(DecideOdag, FibonacciCobwebs) {
  for (std::uint64_t level = 0; level <= 7; ++level) {
    auto p = build_cobweb(kFib, level);
    auto verdict = decide_odag(p.hasse());
    ASSERT_TRUE(verdict.orderable()) << level;
    EXPECT_TRUE(verdict.exhaustive);
    const Realizer& r = *verdict.realizer();
    EXPECT_TRUE(verify_realizer(r));
    EXPECT_EQ(intersect_chains(r.first(), r.second()), intersect_chains(chain_x(p), chain_y(p)));
    EXPECT_EQ(r.first(), chain_x(p));
  }
}

TEST(DecideOdag, NegativeVerdicts) {
  auto tri = decide_odag(graph_of(3, {{0, 1}, {1, 2}, {0, 2}}));
  ASSERT_TRUE(std::holds_alternative<NotRegular>(tri.outcome));
  EXPECT_EQ(std::get<NotRegular>(tri.outcome).witness, (Arc{node(0), node(2)}));
  EXPECT_EQ(tri.kind(), "not_regular");

  auto s3 = decide_odag(testing::standard_example_s3());
  EXPECT_TRUE(std::holds_alternative<NoAdmissibleChain>(s3.outcome));
  EXPECT_TRUE(s3.exhaustive);

  EXPECT_THROW(decide_odag(graph_of(2, {{0, 1}, {1, 0}})), CyclicInput);
  EXPECT_THROW(decide_odag(graph_of(2, {}), 0), InvalidInput);
}

TEST(DecideOdag, TrivialGraphs) {
  auto empty = decide_odag(Digraph{});
  ASSERT_TRUE(empty.orderable());
  EXPECT_EQ(empty.realizer()->first().size(), 0u);

  auto one = decide_odag(graph_of(1, {}));
  ASSERT_TRUE(one.orderable());
  EXPECT_EQ(one.realizer()->first(), chain_of({0}));
  EXPECT_EQ(one.realizer()->second(), chain_of({0}));
}

TEST(DecideOdag, HeuristicFallbackWhenBudgetIsTight) {
  auto antichain = graph_of(10, {});
  auto v = decide_odag(antichain, 5);
  EXPECT_FALSE(v.exhaustive);
  ASSERT_TRUE(v.orderable());
  EXPECT_TRUE(verify_realizer(*v.realizer()));

  auto s3 = decide_odag(testing::standard_example_s3(), 2);
  EXPECT_FALSE(s3.exhaustive);
  EXPECT_TRUE(std::holds_alternative<NoAdmissibleChain>(s3.outcome));
}

TEST(DecideOdag, HeuristicSweepIsDeterministic) {
  std::mt19937_64 rng(34);
  for (int trial = 0; trial < 20; ++trial) {
    auto g = transitive_reduction(testing::random_dag(12, 0.3, rng));
    auto a = decide_odag(g, 3);
    auto b = decide_odag(g, 3);
    EXPECT_EQ(a.kind(), b.kind());
    EXPECT_EQ(a.explored, b.explored);
    if (a.orderable()) {
      EXPECT_EQ(a.realizer()->first(), b.realizer()->first());
      EXPECT_TRUE(verify_realizer(*a.realizer()));
    }
  }
}

TEST(DecideOdag, AgreesWithOracleOnSixVertices) {
  std::mt19937_64 rng(35);
  for (int trial = 0; trial < 300; ++trial) {
    auto g = transitive_reduction(testing::random_dag(6, 0.45, rng));
    auto verdict = decide_odag(g);
    ASSERT_TRUE(verdict.exhaustive);
    EXPECT_EQ(verdict.orderable(), bool(oracle::brute_force_dim_le_2(oracle::FinitePoset::from_digraph(g))));
  }
}

}  // namespace
}  // namespace cobweb

namespace cobweb {
namespace {

// Every DAG on six vertices up to isomorphism appears among the labeled
// ones generated here.
TEST(DecideOdag, AgreesWithOracleOnAllRegularDagsUpToSixVertices) {
  std::size_t regular = 0, orderable = 0;
  for (std::size_t n = 0; n <= 6; ++n)
    testing::for_each_labeled_dag(n, [&](const Digraph& g) {
      if (!is_regular(g)) return;
      ++regular;
      auto verdict = decide_odag(g);
      ASSERT_TRUE(verdict.exhaustive);
      const bool brute = bool(oracle::brute_force_dim_le_2(oracle::FinitePoset::from_digraph(g)));
      ASSERT_EQ(verdict.orderable(), brute) << g.arc_count() << " arcs";
      if (verdict.orderable()) {
        ++orderable;
        ASSERT_TRUE(verify_realizer(*verdict.realizer()));
      }
    });
  EXPECT_LT(orderable, regular);
}

}  // namespace
}  // namespace cobweb
