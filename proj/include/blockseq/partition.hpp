#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "blockseq/extract.hpp"
#include "blockseq/geometry.hpp"
#include "blockseq/sequence.hpp"

namespace blockseq {

// Point sets are handled as id lists into one backing PointSet, so every
// operation below preserves exact-cover bookkeeping.
using PointIds = std::vector<std::size_t>;

// Block-monotone point set: blocks sorted by x, x-separated, equal sizes.
struct BlockSet {
  Direction direction = Direction::increasing;
  std::vector<PointIds> blocks;

  std::size_t depth() const { return blocks.size(); }
  std::size_t block_size() const { return blocks.empty() ? 0 : blocks.front().size(); }
  std::size_t size() const;
  PointIds ids() const;
};

enum class Orientation { up_right, down_right };

// Staircase Y_1, Y_2, ..., Y_{2t+1}: odd[j] is Y_{2j+1}, even[j] is Y_{2j+2}.
struct Configuration {
  std::vector<PointIds> odd;
  std::vector<BlockSet> even;
  Orientation orientation = Orientation::up_right;

  std::size_t t() const { return even.size(); }
  std::size_t size() const;
  PointIds ids() const;
};

struct Pattern {
  std::vector<BlockSet> sides;  // S_1..S_l
  Configuration config;         // Y

  std::size_t l() const { return sides.size(); }
  std::size_t t() const { return config.t(); }
  std::size_t size() const;
  PointIds ids() const;
};

struct PartitionMetrics {
  std::size_t iterations = 0;
  std::vector<std::size_t> lt_history;  // l + t before each step
  std::vector<std::string> outcomes;
  std::string termination;  // small | wide | deep
};

struct LabeledPartition {
  std::vector<BlockSet> parts;
  PointIds remainder;
  PartitionMetrics metrics;
};

struct PartitionOptions {
  double c = kDefaultC;
};

PointSet seq_to_points(const Sequence& seq);
Sequence points_to_seq(const PointSet& points);

// Block-size floor for a set of the given size: ceil(size/(3ck)^2) when that
// exceeds 1, else 1.
std::size_t block_size_floor(std::size_t set_size, std::size_t k, double c);

bool validate_block_set(const PointSet& pts, const BlockSet& b, std::size_t min_depth);
bool validate_configuration(const PointSet& pts, const Configuration& y, std::size_t k, double c);
bool validate_pattern(const PointSet& pts, const Pattern& p, std::size_t k, double c);

struct Pullout {
  std::vector<BlockSet> parts;
  PointIds residue;
  std::size_t rounds = 0;
};

// Repeated extraction of depth-k block-monotone subsets until the residue has
// at most max(|P|/k, (k-1)^2) points.
Pullout pullout(const PointSet& pts, const PointIds& ids, std::size_t depth);

// Pullout ceiling on the number of rounds: ceil(2k log2 k) + 2.
std::size_t pullout_round_ceiling(std::size_t k);

struct Trimmed {
  BlockSet core;
  PointIds exact;
  PointIds leftover;
};

// Removes ceil(m/k) points from the end of every block: m of them form
// `exact`, the rest `leftover`. Throws InvalidInput when m exceeds the size.
Trimmed trim_exact(const BlockSet& w, std::size_t m);

enum class StepOutcome { small, deepened, widened };
std::string to_string(StepOutcome o);

struct StepResult {
  StepOutcome outcome = StepOutcome::small;
  std::vector<BlockSet> parts;
  Pattern next;            // valid when outcome != small
  PointIds rest;           // P' as a plain set when outcome == small
  PointIds leftovers;
};

// One step of the pattern recursion for l < 4k, t < k. Throws InvalidInput if
// the shape or the pattern itself is invalid.
StepResult step_pattern(const PointSet& pts, const Pattern& p, std::size_t k,
                        const PartitionOptions& opt = {});

struct Flattened {
  std::vector<BlockSet> parts;
  PointIds leftovers;
};

// l == 4k: quadrant pigeonhole plus stitching of the configuration residue.
Flattened flatten_wide(const PointSet& pts, const Pattern& p, std::size_t k,
                       const PartitionOptions& opt = {});
// t == k: double pullout of the odd parts plus stitching across even parts.
Flattened flatten_deep(const PointSet& pts, const Pattern& p, std::size_t k,
                       const PartitionOptions& opt = {});

LabeledPartition partition_point_set(const PointSet& pts, std::size_t k,
                                     const PartitionOptions& opt = {});

// Partition of a sequence as block witnesses over sequence positions.
struct SequencePartition {
  std::vector<BlockWitness> parts;
  std::vector<std::size_t> remainder;
  PartitionMetrics metrics;
};

SequencePartition partition_sequence(const Sequence& seq, std::size_t k,
                                     const PartitionOptions& opt = {});
SequencePartition greedy_partition(const Sequence& seq, std::size_t k);

// Block witness over sequence positions from a block set over seq_to_points ids.
BlockWitness to_witness(const BlockSet& b);

}  // namespace blockseq
