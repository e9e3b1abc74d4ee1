#include <gtest/gtest.h>

#include <cmath>

#include "blockseq/errors.hpp"
#include "blockseq/extract.hpp"
#include "blockseq/oracle.hpp"

using namespace blockseq;

namespace {

Sequence sorted(std::size_t n) {
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<double>(i + 1);
  return Sequence(v);
}

}  // namespace

TEST(GappedChainDp, Examples) {
  EXPECT_EQ(gapped_chain_dp(Sequence({1, 3, 2, 4}), 0, Direction::increasing).chain.size(), 3u);
  const GappedChain ch = gapped_chain_dp(sorted(10), 2, Direction::increasing);
  EXPECT_EQ(ch.chain, (std::vector<std::size_t>{0, 3, 6, 9}));
  const Sequence cl = gen_clustered(2, 2, ClusterOrder::increasing, 0.1);
  EXPECT_EQ(gapped_chain_dp(cl, 2, Direction::increasing).chain.size(), 2u);
  EXPECT_TRUE(gapped_chain_dp(Sequence{}, 1, Direction::increasing).chain.empty());
}

TEST(GappedChainDp, SortedClosedForm) {
  for (std::size_t n = 1; n <= 30; ++n) {
    for (std::size_t s = 0; s <= 5; ++s) {
      EXPECT_EQ(gapped_chain_dp(sorted(n), s, Direction::increasing).chain.size(), (n - 1) / (s + 1) + 1);
    }
  }
}

TEST(GappedChainDp, MatchesBruteForceOnSmallInputs) {
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    const Sequence s = gen_random(5 + seed % 8, seed);
    for (Direction d : {Direction::increasing, Direction::decreasing}) {
      for (std::size_t gap = 0; gap <= 3; ++gap) {
        const GappedChain ch = gapped_chain_dp(s, gap, d);
        const auto brute = oracle::brute_gapped_chain(s, gap, d);
        ASSERT_EQ(ch.dp_lengths, brute);
        ASSERT_EQ(ch.chain.size(), *std::max_element(brute.begin(), brute.end()));
        ASSERT_TRUE(oracle::is_gapped_chain(s, ch.chain, gap, d));
      }
    }
  }
}

TEST(GappedChainDp, LengthNonIncreasingInS) {
  const Sequence s = gen_random(400, 12);
  for (Direction d : {Direction::increasing, Direction::decreasing}) {
    std::size_t prev = s.size();
    for (std::size_t gap = 0; gap <= 30; ++gap) {
      const std::size_t len = gapped_chain_dp(s, gap, d).chain.size();
      EXPECT_LE(len, prev);
      prev = len;
    }
  }
}

TEST(ChainToBlocks, Examples) {
  const Sequence s = sorted(10);
  const BlockWitness w = chain_to_blocks(s, gapped_chain_dp(s, 2, Direction::increasing));
  EXPECT_EQ(w.blocks, (std::vector<std::vector<std::size_t>>{{1, 2}, {4, 5}, {7, 8}}));
  EXPECT_TRUE(validate_block_witness(s, w));

  GappedChain two{Direction::increasing, 3, {0, 9}, {}, {}};
  const BlockWitness one = chain_to_blocks(s, two);
  EXPECT_EQ(one.depth(), 1u);
  EXPECT_EQ(one.blocks.front(), (std::vector<std::size_t>{1, 2, 3}));

  GappedChain shorty{Direction::increasing, 2, {4}, {}, {}};
  EXPECT_THROW(chain_to_blocks(s, shorty), InvalidInput);
}

TEST(ChainToBlocks, AlwaysValid) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Sequence s = gen_random(300, seed);
    for (std::size_t gap = 1; gap <= 6; ++gap) {
      for (Direction d : {Direction::increasing, Direction::decreasing}) {
        const GappedChain ch = gapped_chain_dp(s, gap, d);
        if (ch.chain.size() < 2) continue;
        const BlockWitness w = chain_to_blocks(s, ch);
        EXPECT_TRUE(validate_block_witness(s, w));
        EXPECT_EQ(w.depth(), ch.chain.size() - 1);
        EXPECT_EQ(w.block_size(), gap);
      }
    }
  }
}

TEST(ExtractBlockMonotone, Examples) {
  const Sequence s({2, 4, 1, 5, 3});
  const BlockWitness w = extract_block_monotone(s, 3);
  EXPECT_EQ(w.depth(), 3u);
  EXPECT_EQ(w.block_size(), 1u);
  EXPECT_TRUE(validate_block_witness(s, w));
  EXPECT_THROW(extract_block_monotone(Sequence({1, 2, 3, 4}), 3), PreconditionFailed);
  const BlockWitness t = extract_block_monotone(sorted(12), 3);
  EXPECT_TRUE(validate_block_witness(sorted(12), t));
  EXPECT_GE(t.depth(), 3u);
  EXPECT_EQ(oracle::max_blocksize_exact(sorted(12), 3), 4u);
}

TEST(ExtractBlockMonotone, GappedBranchMeetsBlockSizeFloor) {
  for (std::size_t n : {200, 800}) {
    for (std::size_t k = 2; k <= 4; ++k) {
      const double c = 2.0;
      const Sequence s = gen_random(n, n + k);
      const BlockWitness w = extract_block_monotone(s, k, c);
      EXPECT_TRUE(validate_block_witness(s, w));
      EXPECT_GE(w.depth(), k);
      const double denom = c * static_cast<double>(k);
      EXPECT_GE(w.block_size(), static_cast<std::size_t>(std::ceil(static_cast<double>(n) / (denom * denom))));
    }
  }
}

TEST(MaxGappedBlocksize, Examples) {
  EXPECT_EQ(max_gapped_blocksize(sorted(10), 3).s_star, 2u);
  EXPECT_EQ(max_gapped_blocksize(sorted(10), 9).s_star, 0u);
  EXPECT_THROW(max_gapped_blocksize(sorted(3), 3), InvalidInput);
  const GappedOptimum g = max_gapped_blocksize(gen_clustered(2, 4, ClusterOrder::decreasing, 0.25), 2);
  EXPECT_EQ(g.s_star, 2u);
  EXPECT_EQ(oracle::max_blocksize_exact(gen_clustered(2, 4, ClusterOrder::decreasing, 0.25), 2), 8u);
}

TEST(MaxGappedBlocksize, WitnessMatchesOptimumAndOracleDominates) {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const Sequence s = gen_random(24, seed);
    for (std::size_t k = 2; k <= 3; ++k) {
      const GappedOptimum g = max_gapped_blocksize(s, k);
      EXPECT_TRUE(validate_block_witness(s, g.witness));
      if (g.s_star > 0) {
        EXPECT_EQ(g.witness.block_size(), g.s_star);
        EXPECT_EQ(g.witness.depth(), k);
      }
      EXPECT_LE(extract_largest(s, k, true).block_size(), oracle::max_blocksize_exact(s, k));
    }
  }
}

TEST(ExtractLargest, ExactDepthAndValidity) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Sequence s = gen_random(500, seed);
    for (std::size_t k = 2; k <= 6; ++k) {
      const BlockWitness w = extract_largest(s, k, true);
      EXPECT_EQ(w.depth(), k);
      EXPECT_TRUE(validate_block_witness(s, w));
      const BlockWitness loose = extract_largest(s, k);
      EXPECT_GE(loose.depth(), k);
      EXPECT_TRUE(validate_block_witness(s, loose));
    }
  }
}
