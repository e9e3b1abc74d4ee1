#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "blockseq/partition.hpp"
#include "blockseq/sequence.hpp"

namespace blockseq {

// Edge (l, r) with 1 <= l < r <= n, vertices numbered along the spine.
struct Edge {
  std::size_t l = 0;
  std::size_t r = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct OrderedGraph {
  std::size_t n = 0;
  std::vector<Edge> edges;
};

// Throws InvalidInput on an out-of-range, reversed or duplicate edge.
void validate_graph(const OrderedGraph& g);

// Largest b whose prefix [1..b] induces at most |E|/2 edges. Throws
// InvalidInput on an empty edge set.
std::size_t half_split(const OrderedGraph& g);

// Partition of a multiset into block-nondecreasing (direction increasing) or
// block-nonincreasing (direction decreasing) parts; equal values are ranked
// by position.
struct MultisetPartition {
  std::vector<BlockWitness> parts;
  std::vector<std::size_t> deleted;
};
MultisetPartition partition_multiset(const std::vector<double>& values, std::size_t k,
                                     const PartitionOptions& opt = {});

// Witness check with non-strict comparisons between consecutive blocks.
bool validate_multiset_witness(const std::vector<double>& values, const BlockWitness& w);

enum class PageStyle { upper_arcs, biarcs };
std::string to_string(PageStyle s);

// One block-monotone group of edges drawn together; groups on a page occupy
// disjoint vertex ranges.
struct PageGroup {
  PageStyle style = PageStyle::upper_arcs;
  std::size_t split = 0;  // b in force for biarcs
  std::size_t depth = 1;
  std::size_t block_size = 1;
};

struct DrawnEdge {
  Edge edge;
  std::size_t group = 0;
  std::size_t block = 0;
};

struct Page {
  std::vector<DrawnEdge> edges;
  std::vector<PageGroup> groups;

  std::size_t size() const { return edges.size(); }
  // Sum over groups of depth * C(block_size, 2).
  std::size_t block_crossing_bound() const;
};

// Spine position b + 1 - l/n - r/(2n^2) where a biarc changes sides.
double spine_crossing(const Edge& e, std::size_t b, std::size_t n);

struct Semicircle {
  double a = 0;  // left end on the spine
  double b = 0;  // right end
  bool upper = true;
};

// Per-edge semicircles: one for an upper arc, two for a biarc.
using ArcDrawing = std::vector<std::vector<Semicircle>>;
ArcDrawing layout_page(const Page& p, std::size_t n);

// Pairs of edges that cross: same-side semicircles with strictly interleaved
// ends. A pair crossing in both halves counts once.
std::size_t count_page_crossings(const Page& p, std::size_t n);
bool drawn_edges_cross(const std::vector<Semicircle>& a, const std::vector<Semicircle>& b);

struct PagePartition {
  std::vector<Page> pages;
  double epsilon = 1.0;
  std::size_t k = 1;
  std::vector<std::size_t> crossings;  // per page
};

// Recursive split into pages whose drawings have at most eps * |page|^2
// crossing pairs. Throws InvalidInput for eps outside (0, 1] or an empty graph.
PagePartition paginate(const OrderedGraph& g, double epsilon, const PartitionOptions& opt = {});

// Random simple graph with the given edge count.
OrderedGraph gen_random_graph(std::size_t n, std::size_t m, std::uint64_t seed);

}  // namespace blockseq
