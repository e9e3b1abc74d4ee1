#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "blockseq/sequence.hpp"

namespace blockseq {

using Color = std::uint8_t;

// q-coloring of all pairs i < j of vertices 0..n-1 with colors 1..q, stored densely.
class PairColoring {
 public:
  PairColoring() = default;
  PairColoring(std::size_t n, std::size_t q, Color fill = 1);

  std::size_t n() const { return n_; }
  std::size_t q() const { return q_; }
  Color color(std::size_t i, std::size_t j) const;
  void set_color(std::size_t i, std::size_t j, Color c);

 private:
  std::size_t n_ = 0;
  std::size_t q_ = 0;
  std::vector<Color> colors_;  // row-major, both triangles mirrored
};

// Block-monotone path: p_0 < V_0 < p_1 < ... < V_{k-1} < p_k
// with every spoke (p_i, v), (v, p_{i+1}) in `color`.
struct BlockPathWitness {
  Color color = 1;
  std::vector<std::size_t> endpoints;             // k+1 vertices
  std::vector<std::vector<std::size_t>> blocks;   // k blocks

  std::size_t depth() const { return blocks.size(); }
  std::size_t block_size() const { return blocks.empty() ? 0 : blocks.front().size(); }
};

struct MonochromaticPath {
  Color color = 1;
  std::vector<std::size_t> vertices;
};

// Color 1 for increasing pairs, 2 for decreasing ones.
PairColoring coloring_from_sequence(const Sequence& seq);

// K(k, q): k^q vertices, base case monochromatic, cross-copy pairs get the new color.
PairColoring gen_recursive_coloring(std::size_t k, std::size_t q);

// Independent uniform colors in 1..q, deterministic in `seed`.
PairColoring gen_random_coloring(std::size_t n, std::size_t q, std::uint64_t seed);

// Exact longest monochromatic monotone path (length counts vertices). Ties go to
// the smaller color. Throws InvalidInput when n == 0.
MonochromaticPath longest_monochromatic_path(const PairColoring& c);

// Largest bucket of monochromatic 3-paths (u, x, v) sharing (color, u, v);
// ties break toward the smallest (color, u, v).
std::optional<BlockPathWitness> depth1_block_path(const PairColoring& c);

// Number of x with u < x < v and color(u,x) == color(x,v) == color.
std::size_t count_middles(const PairColoring& c, Color color, std::size_t u, std::size_t v);

// Chain DP over pairs with at least s common-color middles, per color.
// Returns a depth-k, block-size-s witness if one exists in this chain form.
std::optional<BlockPathWitness> find_block_path(const PairColoring& c, std::size_t k,
                                                std::size_t s);

// Checks sizes, interleaving, and spoke colors. Throws InvalidInput for
// out-of-range vertices.
bool validate_block_path(const PairColoring& c, const BlockPathWitness& w);

// For sequence-derived colorings: blocks become a sequence witness
// (color 1 -> increasing, 2 -> decreasing).
BlockWitness to_sequence_witness(const BlockPathWitness& w);

}  // namespace blockseq
