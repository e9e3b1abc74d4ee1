#pragma once

#include <vector>

namespace blockseq {

struct Point {
  double x = 0.0;
  double y = 0.0;
  friend bool operator==(const Point&, const Point&) = default;
};

using PointSet = std::vector<Point>;

// Twice the signed area of (a, b, c); positive for a counter-clockwise turn.
inline double orient(const Point& a, const Point& b, const Point& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

}  // namespace blockseq
