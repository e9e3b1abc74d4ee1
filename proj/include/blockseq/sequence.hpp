#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace blockseq {

enum class Direction { increasing, decreasing };

constexpr Direction flip(Direction d) {
  return d == Direction::increasing ? Direction::decreasing : Direction::increasing;
}

// Ordered list of pairwise distinct finite reals. Positions are 0-based in the
// C++ API; the JSON form uses 1-based indices.
class Sequence {
 public:
  Sequence() = default;
  explicit Sequence(std::vector<double> values);

  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }
  double operator[](std::size_t i) const { return values_[i]; }
  std::span<const double> values() const { return values_; }

  // Subsequence at the given (increasing) positions.
  Sequence subsequence(std::span<const std::size_t> positions) const;

  friend bool operator==(const Sequence&, const Sequence&) = default;

 private:
  std::vector<double> values_;
};

// k disjoint, positionally separated blocks of equal size whose transversals
// are all monotone in `direction`.
struct BlockWitness {
  Direction direction = Direction::increasing;
  std::vector<std::vector<std::size_t>> blocks;

  std::size_t depth() const { return blocks.size(); }
  std::size_t block_size() const { return blocks.empty() ? 0 : blocks.front().size(); }
  std::size_t total() const;
  std::vector<std::size_t> indices() const;

  friend bool operator==(const BlockWitness&, const BlockWitness&) = default;
};

// Throws InvalidInput if an index is out of range. A witness with no blocks
// or with an empty block is rejected (returns false).
bool validate_block_witness(const Sequence& seq, const BlockWitness& w);

struct MonotoneRun {
  Direction direction = Direction::increasing;
  std::vector<std::size_t> indices;
};

// Longest monotone subsequence in O(n log n). Ties prefer increasing, then the
// lexicographically smallest index list. Throws InvalidInput on empty input.
MonotoneRun longest_monotone(const Sequence& seq);

// Longest strictly monotone subsequence in a fixed direction, lexicographically
// smallest index list among the longest.
std::vector<std::size_t> longest_in_direction(const Sequence& seq, Direction d);

struct InversionStats {
  std::uint64_t increasing_pairs = 0;
  std::uint64_t decreasing_pairs = 0;
  std::size_t n = 0;

  bool eps_increasing(double eps) const;
  bool eps_decreasing(double eps) const;
  bool eps_monotone(double eps) const { return eps_increasing(eps) || eps_decreasing(eps); }
};

InversionStats inversion_stats(const Sequence& seq);

// Regroups consecutive blocks of `w` into exactly `depth` blocks, each the
// union of floor(w.depth()/depth) original blocks. Trailing blocks that do not
// fit are returned in `dropped`.
struct Coarsened {
  BlockWitness witness;
  std::vector<std::size_t> dropped;
};
Coarsened coarsen(const BlockWitness& w, std::size_t depth);

// Witness made of single-entry blocks along a monotone run.
BlockWitness singleton_blocks(const MonotoneRun& run);

// ---- fixture generators ----

// k descending runs: (k..1, 2k..k+1, ..., k^2..k(k-1)+1).
Sequence gen_es_extremal(std::size_t k);

enum class ClusterOrder { increasing, decreasing, seeded_random };

// gen_es_extremal(k) with each entry v replaced by s values in [v, v + delta).
Sequence gen_clustered(std::size_t k, std::size_t s, ClusterOrder inner, double delta,
                       std::uint64_t seed = 0);

// Pseudorandom permutation of 1..n, deterministic in `seed`.
Sequence gen_random(std::size_t n, std::uint64_t seed);

}  // namespace blockseq
