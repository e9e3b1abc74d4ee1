#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "blockseq/geometry.hpp"

namespace blockseq {

// Non-vertical line y = slope * x + intercept.
struct Line {
  double slope = 0.0;
  double intercept = 0.0;

  double at(double x) const { return slope * x + intercept; }
  // Positive above the line, negative below.
  double offset(const Point& p) const { return p.y - at(p.x); }
};

enum class Side { upper, lower };

struct BalancedLine {
  Line line;
  Side side = Side::upper;
};

// Line H with exactly m points of P and m points of Q strictly on `side`, and
// no point of P or Q on H. P and Q must have equal size n >= m >= 1 and lie
// strictly on opposite sides of L. Throws InvalidInput on a violated
// precondition.
BalancedLine balanced_line(const PointSet& p, const PointSet& q, const Line& l, std::size_t m);

// Affine map (x, y) -> (a11 x + a12 y + b1, a21 x + a22 y + b2).
struct AffineMap {
  double a11 = 1, a12 = 0, a21 = 0, a22 = 1, b1 = 0, b2 = 0;

  Point apply(const Point& p) const { return {a11 * p.x + a12 * p.y + b1, a21 * p.x + a22 * p.y + b2}; }
  double det() const { return a11 * a22 - a12 * a21; }
};

// Map sending H to the y-axis with its `side` half-plane to x < 0, and L to
// the x-axis with its upper half-plane to y > 0.
AffineMap normalizing_map(const Line& l, const BalancedLine& h);

struct AvoidingWitness {
  std::vector<PointSet> a_blocks;
  std::vector<PointSet> b_blocks;
  std::vector<std::vector<std::size_t>> a_ids;  // indices into the input set
  std::vector<std::vector<std::size_t>> b_ids;
  double guarantee = 0.0;  // smallest block size over |P|
};

// 2k disjoint subsets whose transversals are pairwise mutually avoiding.
// Requires general position and |P| > 24k^2 (PreconditionFailed otherwise).
AvoidingWitness mutually_avoiding_sets(const PointSet& pts, std::size_t k);

// True iff every line through points of two different A blocks has all B
// points strictly on one side, and vice versa. Throws InvalidInput on a
// collinear triple.
bool check_avoiding(const AvoidingWitness& w);

// ---- fixture generators ----

// Uniform points in the unit square.
PointSet gen_random_points(std::size_t n, std::uint64_t seed);

// k x k unit grid with each node replaced by `per_cluster` points within
// `spread` of it.
PointSet gen_grid_clusters(std::size_t k, std::size_t per_cluster, double spread, std::uint64_t seed);

}  // namespace blockseq
