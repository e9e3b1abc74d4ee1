#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "blockseq/biarc.hpp"
#include "blockseq/errors.hpp"
#include "blockseq/oracle.hpp"

using namespace blockseq;

namespace {

Page one_group(PageStyle style, std::size_t split, std::vector<Edge> edges) {
  Page p;
  p.groups.push_back(PageGroup{style, split, 1, edges.size()});
  for (const auto& e : edges) p.edges.push_back(DrawnEdge{e, 0, 0});
  return p;
}

std::vector<Edge> sorted_edges(const PagePartition& pp) {
  std::vector<Edge> out;
  for (const auto& page : pp.pages) {
    for (const auto& de : page.edges) out.push_back(de.edge);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(ValidateGraph, Rejects) {
  EXPECT_THROW(validate_graph({3, {{2, 1}}}), InvalidInput);
  EXPECT_THROW(validate_graph({3, {{1, 4}}}), InvalidInput);
  EXPECT_THROW(validate_graph({3, {{1, 2}, {1, 2}}}), InvalidInput);
  EXPECT_THROW(validate_graph({3, {{0, 2}}}), InvalidInput);
  EXPECT_NO_THROW(validate_graph({3, {{1, 3}, {1, 2}}}));
}

TEST(HalfSplit, Examples) {
  EXPECT_EQ(half_split({5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}}}), 3u);
  EXPECT_EQ(half_split({2, {{1, 2}}}), 1u);
  EXPECT_EQ(half_split({5, {{1, 2}, {1, 3}, {1, 4}, {1, 5}}}), 3u);
  EXPECT_THROW(half_split({4, {}}), InvalidInput);
}

TEST(PartitionMultiset, Examples) {
  const MultisetPartition eq = partition_multiset(std::vector<double>(12, 2.0), 3);
  ASSERT_EQ(eq.parts.size(), 1u);
  EXPECT_EQ(eq.parts[0].direction, Direction::increasing);
  EXPECT_TRUE(eq.deleted.empty());

  const MultisetPartition dec = partition_multiset({9, 8, 7, 6, 5, 4, 3, 2, 1}, 3);
  EXPECT_EQ(dec.parts.size(), 1u);
}

TEST(PartitionMultiset, RightEndpointsOfRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const OrderedGraph g = gen_random_graph(40, 300, seed);
    std::vector<Edge> es = g.edges;
    std::sort(es.begin(), es.end());
    std::vector<double> rs;
    for (const auto& e : es) rs.push_back(static_cast<double>(e.r));
    const MultisetPartition mp = partition_multiset(rs, 4);
    EXPECT_LE(mp.deleted.size(), 9u);
    std::vector<int> hit(rs.size(), 0);
    for (const auto& w : mp.parts) {
      EXPECT_TRUE(validate_multiset_witness(rs, w));
      EXPECT_GE(w.depth(), 4u);
      for (std::size_t i : w.indices()) hit[i]++;
    }
    for (std::size_t i : mp.deleted) hit[i]++;
    EXPECT_TRUE(std::all_of(hit.begin(), hit.end(), [](int h) { return h == 1; }));
  }
}

TEST(SpineCrossing, Examples) {
  EXPECT_NEAR(spine_crossing({2, 7}, 4, 10), 4.765, 1e-12);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const OrderedGraph g = gen_random_graph(30, 200, seed);
    for (const auto& e : g.edges) {
      for (std::size_t b = e.l; b < e.r; ++b) {
        const double c = spine_crossing(e, b, g.n);
        EXPECT_GT(c, static_cast<double>(b));
        EXPECT_LT(c, static_cast<double>(b + 1));
      }
    }
  }
}

TEST(SpineCrossing, ReverseLexicographicAndInjective) {
  const std::size_t n = 12, b = 6;
  std::vector<Edge> es;
  for (std::size_t l = 1; l <= b; ++l) {
    for (std::size_t r = b + 1; r <= n; ++r) es.push_back({l, r});
  }
  std::sort(es.begin(), es.end());
  for (std::size_t i = 1; i < es.size(); ++i) {
    EXPECT_GT(spine_crossing(es[i - 1], b, n), spine_crossing(es[i], b, n));
  }
}

TEST(LayoutPage, Styles) {
  const ArcDrawing up = layout_page(one_group(PageStyle::upper_arcs, 99, {{2, 7}}), 10);
  ASSERT_EQ(up.size(), 1u);
  ASSERT_EQ(up[0].size(), 1u);
  EXPECT_EQ(up[0][0].a, 2.0);
  EXPECT_EQ(up[0][0].b, 7.0);
  EXPECT_TRUE(up[0][0].upper);

  const ArcDrawing bi = layout_page(one_group(PageStyle::biarcs, 4, {{2, 7}}), 10);
  ASSERT_EQ(bi[0].size(), 2u);
  EXPECT_TRUE(bi[0][0].upper);
  EXPECT_NEAR(bi[0][0].b, 4.765, 1e-12);
  EXPECT_FALSE(bi[0][1].upper);
  EXPECT_EQ(bi[0][1].b, 7.0);
}

TEST(CountPageCrossings, Examples) {
  EXPECT_EQ(count_page_crossings(one_group(PageStyle::upper_arcs, 0, {{1, 4}, {2, 6}}), 6), 1u);
  EXPECT_EQ(count_page_crossings(one_group(PageStyle::upper_arcs, 0, {{1, 6}, {2, 5}}), 6), 0u);
  // Same-direction pairs: both halves nest. Opposite-direction pairs meet below the spine.
  const Page same = one_group(PageStyle::biarcs, 3, {{1, 5}, {2, 6}});
  const Page opposite = one_group(PageStyle::biarcs, 3, {{1, 6}, {2, 5}});
  EXPECT_EQ(count_page_crossings(same, 6), 0u);
  EXPECT_EQ(oracle::brute_crossings_geometric(same, 6), 0u);
  EXPECT_EQ(count_page_crossings(opposite, 6), 1u);
  EXPECT_EQ(oracle::brute_crossings_geometric(opposite, 6), 1u);
}

TEST(CountPageCrossings, MatchesGeometry) {
  std::mt19937_64 rng(3);
  std::size_t pairs = 0;
  for (int trial = 0; pairs < 500; ++trial) {
    const std::size_t n = 20;
    std::uniform_int_distribution<std::size_t> pick(1, n);
    const std::size_t b = 5 + trial % 10;
    std::vector<Edge> es;
    while (es.size() < 2) {
      std::size_t l = pick(rng), r = pick(rng);
      if (l > r) std::swap(l, r);
      if (l == r || l > b || r <= b) continue;
      if (!es.empty() && es[0] == Edge{l, r}) continue;
      es.push_back({l, r});
    }
    for (PageStyle style : {PageStyle::upper_arcs, PageStyle::biarcs}) {
      const Page p = one_group(style, b, es);
      EXPECT_EQ(count_page_crossings(p, n), oracle::brute_crossings_geometric(p, n));
      ++pairs;
    }
  }
}

TEST(Paginate, SingleEdgeAndNested) {
  const PagePartition one = paginate({2, {{1, 2}}}, 0.5);
  ASSERT_EQ(one.pages.size(), 1u);
  EXPECT_EQ(one.crossings[0], 0u);

  const OrderedGraph nested{8, {{1, 8}, {2, 7}, {3, 6}, {4, 5}}};
  const PagePartition pp = paginate(nested, 0.5);
  for (std::size_t c : pp.crossings) EXPECT_EQ(c, 0u);
  EXPECT_EQ(sorted_edges(pp), (std::vector<Edge>{{1, 8}, {2, 7}, {3, 6}, {4, 5}}));
  EXPECT_THROW(paginate(nested, 0.0), InvalidInput);
  EXPECT_THROW(paginate(nested, 1.5), InvalidInput);
  EXPECT_THROW(paginate({3, {}}, 0.5), InvalidInput);
}

TEST(Paginate, RandomGraphsMeetCrossingBudget) {
  for (auto [m, eps] : {std::pair{200, 0.5}, std::pair{2000, 0.2}, std::pair{600, 1.0}}) {
    const OrderedGraph g = gen_random_graph(120, m, 17 + m);
    const PagePartition pp = paginate(g, eps);
    std::vector<Edge> want = g.edges;
    std::sort(want.begin(), want.end());
    EXPECT_EQ(sorted_edges(pp), want);
    for (std::size_t i = 0; i < pp.pages.size(); ++i) {
      const Page& page = pp.pages[i];
      const double s = static_cast<double>(page.size());
      EXPECT_EQ(pp.crossings[i], count_page_crossings(page, g.n));
      EXPECT_LE(static_cast<double>(pp.crossings[i]), eps * s * s);
      EXPECT_LE(pp.crossings[i], page.block_crossing_bound());
    }
  }
}

TEST(Paginate, CrossBlockPairsNeverCross) {
  const OrderedGraph g = gen_random_graph(80, 900, 5);
  const PagePartition pp = paginate(g, 0.25);
  for (const auto& page : pp.pages) {
    const ArcDrawing d = layout_page(page, g.n);
    for (std::size_t i = 0; i < page.size(); ++i) {
      for (std::size_t j = i + 1; j < page.size(); ++j) {
        const auto& a = page.edges[i];
        const auto& b = page.edges[j];
        if (a.group == b.group && a.block != b.block) {
          ASSERT_FALSE(drawn_edges_cross(d[i], d[j]));
        }
      }
    }
  }
}

TEST(Paginate, GeometricOracleOnPages) {
  const OrderedGraph g = gen_random_graph(40, 250, 9);
  const PagePartition pp = paginate(g, 0.34);
  for (std::size_t i = 0; i < pp.pages.size(); ++i) {
    EXPECT_EQ(pp.crossings[i], oracle::brute_crossings_geometric(pp.pages[i], g.n));
  }
}
