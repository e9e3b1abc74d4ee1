#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "blockseq/errors.hpp"
#include "blockseq/partition.hpp"

using namespace blockseq;

namespace {

Sequence sorted(std::size_t n, bool up = true) {
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<double>(up ? i + 1 : n - i);
  return Sequence(v);
}

PointIds iota_ids(std::size_t n) {
  PointIds ids(n);
  std::iota(ids.begin(), ids.end(), 0);
  return ids;
}

// Exact cover of 0..n-1 by the parts and the remainder.
bool covers(const SequencePartition& sp, std::size_t n) {
  std::vector<int> hit(n, 0);
  for (const auto& w : sp.parts) {
    for (std::size_t i : w.indices()) {
      if (i >= n || hit[i]++) return false;
    }
  }
  for (std::size_t i : sp.remainder) {
    if (i >= n || hit[i]++) return false;
  }
  return std::all_of(hit.begin(), hit.end(), [](int h) { return h == 1; });
}

void expect_valid(const Sequence& seq, const SequencePartition& sp, std::size_t k) {
  EXPECT_TRUE(covers(sp, seq.size()));
  EXPECT_LE(sp.remainder.size(), (k - 1) * (k - 1));
  for (const auto& w : sp.parts) {
    EXPECT_TRUE(validate_block_witness(seq, w));
    EXPECT_GE(w.depth(), k);
  }
}

}  // namespace

TEST(SeqToPoints, Examples) {
  const PointSet p = seq_to_points(Sequence({5, 1}));
  EXPECT_EQ(p, (PointSet{{1, 5}, {2, 1}}));
  EXPECT_TRUE(seq_to_points(Sequence{}).empty());
  const Sequence s = gen_random(50, 3);
  EXPECT_EQ(points_to_seq(seq_to_points(s)), s);
}

TEST(BlockSizeFloor, Values) {
  EXPECT_EQ(block_size_floor(10, 2, 40.0), 1u);
  EXPECT_EQ(block_size_floor(100, 1, 0.5), 45u);  // 100 / 2.25
  EXPECT_EQ(pullout_round_ceiling(2), 6u);
  EXPECT_EQ(pullout_round_ceiling(4), 18u);
}

TEST(Pullout, Examples) {
  const PointSet small = seq_to_points(gen_random(9, 1));
  const Pullout none = pullout(small, iota_ids(9), 4);
  EXPECT_TRUE(none.parts.empty());
  EXPECT_EQ(none.residue.size(), 9u);

  const PointSet line = seq_to_points(sorted(23));
  const Pullout one = pullout(line, iota_ids(23), 4);
  ASSERT_EQ(one.parts.size(), 1u);
  EXPECT_LT(one.residue.size(), 4u);
  EXPECT_TRUE(validate_block_set(line, one.parts[0], 4));

  const PointSet rnd = seq_to_points(gen_random(1000, 5));
  const Pullout p = pullout(rnd, iota_ids(1000), 4);
  EXPECT_LE(p.residue.size(), 250u);
  EXPECT_LE(p.rounds, pullout_round_ceiling(4));
  std::size_t total = p.residue.size();
  for (const auto& part : p.parts) {
    EXPECT_TRUE(validate_block_set(rnd, part, 4));
    total += part.size();
  }
  EXPECT_EQ(total, 1000u);
}

TEST(TrimExact, Examples) {
  BlockSet w;
  for (std::size_t b = 0; b < 3; ++b) {
    PointIds block;
    for (std::size_t i = 0; i < 5; ++i) block.push_back(5 * b + i);
    w.blocks.push_back(block);
  }
  const Trimmed t = trim_exact(w, 7);
  EXPECT_EQ(t.core.block_size(), 2u);
  EXPECT_EQ(t.exact.size(), 7u);
  EXPECT_EQ(t.leftover.size(), 2u);

  const Trimmed id = trim_exact(w, 0);
  EXPECT_EQ(id.core.blocks, w.blocks);
  EXPECT_TRUE(id.exact.empty() && id.leftover.empty());

  const Trimmed all = trim_exact(w, 15);
  EXPECT_EQ(all.core.size(), 0u);
  EXPECT_EQ(all.exact.size(), 15u);
  EXPECT_TRUE(all.leftover.empty());
  EXPECT_THROW(trim_exact(w, 16), InvalidInput);
}

TEST(TrimExact, SizeArithmetic) {
  for (std::size_t k = 1; k <= 5; ++k) {
    for (std::size_t s = 1; s <= 6; ++s) {
      BlockSet w;
      for (std::size_t b = 0; b < k; ++b) {
        PointIds block;
        for (std::size_t i = 0; i < s; ++i) block.push_back(s * b + i);
        w.blocks.push_back(block);
      }
      for (std::size_t m = 0; m <= k * s; ++m) {
        const Trimmed t = trim_exact(w, m);
        EXPECT_EQ(t.core.size() + t.exact.size() + t.leftover.size(), k * s);
        EXPECT_EQ(t.exact.size(), m);
        EXPECT_LT(t.leftover.size(), k);
      }
    }
  }
}

TEST(ValidateConfiguration, Examples) {
  const PointSet pts{{0, 0}, {1, 1}, {2, 2}, {3, -2}};
  Configuration solo;
  solo.odd = {{0, 1, 2}};
  EXPECT_TRUE(validate_configuration(pts, solo, 1, 40.0));

  Configuration y;
  y.odd = {{0}, {2}};
  y.even = {BlockSet{Direction::increasing, {{1}}}};
  y.orientation = Orientation::up_right;
  EXPECT_TRUE(validate_configuration(pts, y, 1, 40.0));
  y.odd[1] = {3};
  EXPECT_FALSE(validate_configuration(pts, y, 1, 40.0));
}

TEST(StepPattern, SmallOutcome) {
  const PointSet pts = seq_to_points(gen_random(9, 2));
  Pattern p;
  p.config.odd = {iota_ids(9)};
  const StepResult r = step_pattern(pts, p, 2);
  EXPECT_EQ(r.outcome, StepOutcome::small);
  EXPECT_EQ(r.rest.size(), 9u);
  EXPECT_TRUE(r.parts.empty());
}

TEST(StepPattern, FirstStepNeverWidens) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    for (std::size_t k : {2, 3}) {
      const PointSet pts = seq_to_points(gen_random(400 + 37 * seed, seed));
      Pattern p;
      p.config.odd = {iota_ids(pts.size())};
      const StepResult r = step_pattern(pts, p, k);
      EXPECT_NE(r.outcome, StepOutcome::widened);
      if (r.outcome != StepOutcome::small) {
        EXPECT_TRUE(validate_pattern(pts, r.next, k, kDefaultC));
        EXPECT_LE(static_cast<double>(r.leftovers.size()), 2.0 * std::pow(9.0 * 1600 * k - 1, 2) + 3 * k);
      }
      for (const auto& part : r.parts) EXPECT_TRUE(validate_block_set(pts, part, k));
    }
  }
}

TEST(StepPattern, RejectsBadShapes) {
  const PointSet pts = seq_to_points(gen_random(10, 2));
  Pattern p;
  p.config.odd = {iota_ids(10)};
  p.sides.resize(8);
  EXPECT_THROW(step_pattern(pts, p, 2), InvalidInput);
}

TEST(PartitionPointSet, Trivial) {
  const LabeledPartition line = partition_point_set(seq_to_points(sorted(40)), 3);
  EXPECT_EQ(line.parts.size(), 1u);
  EXPECT_TRUE(line.remainder.empty());
  const LabeledPartition tiny = partition_point_set(seq_to_points(gen_random(4, 1)), 3);
  EXPECT_TRUE(tiny.parts.empty());
  EXPECT_EQ(tiny.remainder.size(), 4u);
  EXPECT_THROW(partition_point_set(seq_to_points(gen_random(10, 1)), 1), InvalidInput);
}

TEST(PartitionPointSet, RandomTenThousand) {
  const std::size_t k = 3;
  const PointSet pts = seq_to_points(gen_random(10000, 2024));
  const LabeledPartition lp = partition_point_set(pts, k);
  std::size_t total = lp.remainder.size();
  for (const auto& part : lp.parts) {
    EXPECT_TRUE(validate_block_set(pts, part, k));
    total += part.size();
  }
  EXPECT_EQ(total, pts.size());
  EXPECT_LE(lp.remainder.size(), 4u);
  EXPECT_LE(lp.metrics.iterations, 12 * k);
  const auto& h = lp.metrics.lt_history;
  for (std::size_t i = 1; i < h.size(); ++i) EXPECT_GE(h[i], h[i - 1]);
  for (std::size_t i = 2; i < h.size(); ++i) EXPECT_GT(h[i], h[i - 2]);
}

TEST(PartitionSequence, Trivial) {
  const Sequence rev = sorted(30, false);
  EXPECT_EQ(partition_sequence(rev, 3).parts.size(), 1u);
  EXPECT_EQ(greedy_partition(rev, 3).parts.size(), 1u);
}

TEST(PartitionSequence, ClusteredPinned) {
  const Sequence seq = gen_clustered(3, 3, ClusterOrder::seeded_random, 0.2, 7);
  ASSERT_EQ(seq.size(), 27u);
  const SequencePartition full = partition_sequence(seq, 3);
  const SequencePartition greedy = greedy_partition(seq, 3);
  expect_valid(seq, full, 3);
  expect_valid(seq, greedy, 3);
  EXPECT_EQ(full.parts.size(), 4u);
  EXPECT_EQ(greedy.parts.size(), 4u);
}

TEST(PartitionSequence, RandomFixtures) {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    for (std::size_t k = 2; k <= 4; ++k) {
      const Sequence seq = gen_random(100 + 90 * seed, seed * 7 + k);
      expect_valid(seq, partition_sequence(seq, k), k);
      const SequencePartition g = greedy_partition(seq, k);
      expect_valid(seq, g, k);
      EXPECT_LE(static_cast<double>(g.parts.size()), 2.0 * k * std::log2(seq.size()) + k);
    }
  }
}

TEST(PartitionSequence, DeterministicOutput) {
  const Sequence seq = gen_random(2000, 99);
  const SequencePartition a = partition_sequence(seq, 3), b = partition_sequence(seq, 3);
  ASSERT_EQ(a.parts.size(), b.parts.size());
  for (std::size_t i = 0; i < a.parts.size(); ++i) EXPECT_EQ(a.parts[i], b.parts[i]);
  EXPECT_EQ(a.remainder, b.remainder);
}
