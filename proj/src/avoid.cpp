#include "blockseq/avoid.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>

#include "blockseq/errors.hpp"
#include "blockseq/extract.hpp"
#include "blockseq/sequence.hpp"

namespace blockseq {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct Counts {
  std::size_t p = 0, q = 0;
  bool touching = false;
};

Counts count_side(const PointSet& p, const PointSet& q, const Line& h, Side side) {
  Counts c;
  auto on_side = [&](const Point& pt) {
    const double off = h.offset(pt);
    if (off == 0.0) c.touching = true;
    return side == Side::upper ? off > 0.0 : off < 0.0;
  };
  for (const auto& pt : p) c.p += on_side(pt) ? 1 : 0;
  for (const auto& pt : q) c.q += on_side(pt) ? 1 : 0;
  return c;
}

bool balanced(const PointSet& p, const PointSet& q, const BalancedLine& b, std::size_t m) {
  const Counts c = count_side(p, q, b.line, b.side);
  return !c.touching && c.p == m && c.q == m;
}

// Normal direction (sin psi, cos psi); P's m-th and (m+1)-th largest
// projections bracket the threshold.
struct Probe {
  std::size_t q_above = 0;
  BalancedLine line;
  bool usable = false;
};

Probe probe(const PointSet& p, const PointSet& q, std::size_t m, double psi) {
  const double ux = std::sin(psi), uy = std::cos(psi);
  Probe out;
  if (std::abs(uy) < 1e-12) return out;
  std::vector<double> proj(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) proj[i] = ux * p[i].x + uy * p[i].y;
  std::nth_element(proj.begin(), proj.begin() + static_cast<std::ptrdiff_t>(m - 1), proj.end(), std::greater<>());
  const double mth = proj[m - 1];
  const double next = *std::max_element(proj.begin() + static_cast<std::ptrdiff_t>(m), proj.end());
  const double t = next + (mth - next) / 2.0;
  for (const auto& pt : q) out.q_above += (ux * pt.x + uy * pt.y > t) ? 1 : 0;
  // u.p > t  <=>  y > (t - ux x) / uy when uy > 0
  out.line.line = {-ux / uy, t / uy};
  out.line.side = uy > 0 ? Side::upper : Side::lower;
  out.usable = true;
  return out;
}

std::optional<BalancedLine> rotation_search(const PointSet& p, const PointSet& q, std::size_t m) {
  double lo = 1e-9, hi = kPi - 1e-9;
  Probe plo = probe(p, q, m, lo), phi = probe(p, q, m, hi);
  if (!plo.usable || !phi.usable) return std::nullopt;
  if (plo.q_above == m && balanced(p, q, plo.line, m)) return plo.line;
  if (phi.q_above == m && balanced(p, q, phi.line, m)) return phi.line;
  if (!(plo.q_above < m && phi.q_above > m)) return std::nullopt;
  for (int iter = 0; iter < 200; ++iter) {
    double mid = lo + (hi - lo) / 2.0;
    if (std::abs(mid - kPi / 2) < 1e-12) mid += (hi - lo) / 8.0;
    const Probe pm = probe(p, q, m, mid);
    if (!pm.usable) return std::nullopt;
    if (pm.q_above == m) {
      if (balanced(p, q, pm.line, m)) return pm.line;
      return std::nullopt;
    }
    (pm.q_above < m ? lo : hi) = mid;
  }
  return std::nullopt;
}

// Lines through pairs of input points, nudged so each of the two points falls
// on a chosen side.
std::optional<BalancedLine> exhaustive_search(const PointSet& p, const PointSet& q, std::size_t m) {
  PointSet all = p;
  all.insert(all.end(), q.begin(), q.end());
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      const Point a = all[i], b = all[j];
      if (a.x == b.x) continue;
      const double slope = (b.y - a.y) / (b.x - a.x);
      const Line base{slope, a.y - slope * a.x};
      double gap = std::numeric_limits<double>::infinity();
      double span = 0;
      for (std::size_t r = 0; r < all.size(); ++r) {
        if (r == i || r == j) continue;
        gap = std::min(gap, std::abs(base.offset(all[r])));
        span = std::max(span, std::abs(all[r].x - (a.x + b.x) / 2));
      }
      if (!(gap > 0)) continue;
      const double delta = gap / (2.0 * (1.0 + 2.0 * span / std::abs(b.x - a.x)));
      for (int mask = 0; mask < 4; ++mask) {
        const double da = (mask & 1) ? delta : -delta;
        const double db = (mask & 2) ? delta : -delta;
        const Point a2{a.x, a.y + da}, b2{b.x, b.y + db};
        const double s2 = (b2.y - a2.y) / (b2.x - a2.x);
        const Line cand{s2, a2.y - s2 * a2.x};
        for (Side side : {Side::upper, Side::lower}) {
          const BalancedLine bl{cand, side};
          if (balanced(p, q, bl, m)) return bl;
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

BalancedLine balanced_line(const PointSet& p, const PointSet& q, const Line& l, std::size_t m) {
  if (p.size() != q.size() || m < 1 || m > p.size()) {
    throw InvalidInput("balanced_line: needs |P| = |Q| >= m >= 1");
  }
  if (!std::isfinite(l.slope) || !std::isfinite(l.intercept)) throw InvalidInput("balanced_line: L must be finite");
  bool p_up = true, p_down = true, q_up = true, q_down = true;
  for (const auto& pt : p) {
    p_up = p_up && l.offset(pt) > 0;
    p_down = p_down && l.offset(pt) < 0;
  }
  for (const auto& pt : q) {
    q_up = q_up && l.offset(pt) > 0;
    q_down = q_down && l.offset(pt) < 0;
  }
  if (!((p_up && q_down) || (p_down && q_up))) throw InvalidInput("balanced_line: L does not separate P and Q");

  if (m == p.size()) {
    const double slope = l.slope + 1.0;
    double lowest = std::numeric_limits<double>::infinity();
    for (const auto& set : {&p, &q}) {
      for (const auto& pt : *set) lowest = std::min(lowest, pt.y - slope * pt.x);
    }
    return {{slope, lowest - 1.0}, Side::upper};
  }
  // The rotation argument assumes P above; swap roles otherwise.
  const PointSet& upper = p_up ? p : q;
  const PointSet& lower = p_up ? q : p;
  if (auto found = rotation_search(upper, lower, m)) return *found;
  if (auto found = exhaustive_search(p, q, m)) return *found;
  throw std::logic_error("balanced_line: no balanced line found");
}

AffineMap normalizing_map(const Line& l, const BalancedLine& h) {
  if (l.slope == h.line.slope) throw InvalidInput("normalizing_map: L and H are parallel");
  const double s = h.side == Side::upper ? -1.0 : 1.0;
  AffineMap f;
  f.a11 = -s * h.line.slope;
  f.a12 = s;
  f.b1 = -s * h.line.intercept;
  f.a21 = -l.slope;
  f.a22 = 1.0;
  f.b2 = -l.intercept;
  return f;
}

bool check_avoiding(const AvoidingWitness& w) {
  auto one_side = [](const std::vector<PointSet>& lines_from, const std::vector<PointSet>& against) {
    for (std::size_t i = 0; i < lines_from.size(); ++i) {
      for (std::size_t j = i + 1; j < lines_from.size(); ++j) {
        for (const auto& a : lines_from[i]) {
          for (const auto& b : lines_from[j]) {
            int sign = 0;
            for (const auto& block : against) {
              for (const auto& c : block) {
                const double o = orient(a, b, c);
                if (o == 0.0) throw InvalidInput("check_avoiding: collinear triple");
                const int sg = o > 0 ? 1 : -1;
                if (sign == 0) {
                  sign = sg;
                } else if (sg != sign) {
                  return false;
                }
              }
            }
          }
        }
      }
    }
    return true;
  };
  return one_side(w.a_blocks, w.b_blocks) && one_side(w.b_blocks, w.a_blocks);
}

namespace {

// Positions of a point-id list sorted by key, as a Sequence of value ranks.
Sequence rank_sequence(const std::vector<double>& values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<double> ranks(values.size());
  for (std::size_t r = 0; r < order.size(); ++r) ranks[order[r]] = static_cast<double>(r);
  return Sequence(std::move(ranks));
}

Line median_line(const PointSet& pts) {
  for (double slope : {0.0, 1e-3, -1e-3, 0.01, -0.01, 0.1, -0.1, 1.0}) {
    std::vector<double> v(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) v[i] = pts[i].y - slope * pts[i].x;
    std::sort(v.begin(), v.end());
    const std::size_t half = pts.size() / 2;
    const double below = v[half - 1];
    const double above = v[pts.size() - half];
    if (pts.size() % 2 == 0 && below < above) return {slope, below + (above - below) / 2};
    if (pts.size() % 2 == 1 && below < v[half] && v[half] < above) {
      return {slope, v[half]};
    }
  }
  throw InvalidInput("mutually_avoiding_sets: no halving line found");
}

}  // namespace

AvoidingWitness mutually_avoiding_sets(const PointSet& pts, std::size_t k) {
  const std::size_t n = pts.size();
  if (k < 1) throw InvalidInput("mutually_avoiding_sets: k must be >= 1");
  if (n <= 24 * k * k) throw PreconditionFailed("mutually_avoiding_sets: needs n > 24k^2");
  for (const auto& p : pts) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) throw InvalidInput("mutually_avoiding_sets: non-finite point");
  }

  const Line l = median_line(pts);
  std::vector<std::size_t> up_ids, down_ids;
  PointSet up, down;
  for (std::size_t i = 0; i < n; ++i) {
    const double off = l.offset(pts[i]);
    if (off > 0) {
      up_ids.push_back(i);
      up.push_back(pts[i]);
    } else if (off < 0) {
      down_ids.push_back(i);
      down.push_back(pts[i]);
    }
  }
  const std::size_t m = n / 6;
  const BalancedLine h = balanced_line(up, down, l, m);
  const AffineMap f = normalizing_map(l, h);
  std::vector<Point> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = f.apply(pts[i]);

  // Sweep N from H into x > 0 until one strip half holds m points.
  std::vector<std::size_t> right;
  for (std::size_t i = 0; i < n; ++i) {
    if (img[i].x > 0 && img[i].y != 0 && l.offset(pts[i]) != 0) right.push_back(i);
  }
  std::sort(right.begin(), right.end(), [&](std::size_t a, std::size_t b) { return img[a].x < img[b].x; });
  std::size_t cnt_up = 0, cnt_down = 0, stop = 0;
  for (; stop < right.size(); ++stop) {
    (img[right[stop]].y > 0 ? cnt_up : cnt_down) += 1;
    if (cnt_up == m || cnt_down == m) break;
  }
  if (stop == right.size()) throw std::logic_error("mutually_avoiding_sets: sweep did not reach n/6");
  const double ysign = cnt_up == m ? 1.0 : -1.0;
  const double nx = img[right[stop]].x;
  double cut = nx + 1.0;
  if (stop + 1 < right.size()) cut = nx + (img[right[stop + 1]].x - nx) / 2.0;

  std::vector<std::size_t> qs, left_flank, right_flank;
  for (std::size_t i = 0; i < n; ++i) {
    if (l.offset(pts[i]) == 0) continue;
    const double x = img[i].x, y = ysign * img[i].y;
    if (0 < x && x < cut && y > 0) qs.push_back(i);
    if (x < 0 && y < 0) left_flank.push_back(i);
    if (x > cut && y < 0) right_flank.push_back(i);
  }

  // Extract Q's blocks by x-order with y as value.
  std::sort(qs.begin(), qs.end(), [&](std::size_t a, std::size_t b) { return img[a].x < img[b].x; });
  std::vector<double> qy;
  for (std::size_t id : qs) qy.push_back(ysign * img[id].y);
  const std::size_t depth = 2 * k + 1;
  BlockWitness qw;
  if (qs.size() > (depth - 1) * (depth - 1)) {
    qw = extract_largest(Sequence(qy), depth, true);
  } else {
    // |Q| = (2k)^2 exactly: only a long enough monotone run will do.
    const MonotoneRun run = longest_monotone(Sequence(qy));
    if (run.indices.size() < depth) throw Indeterminate("mutually_avoiding_sets: strip has no monotone run of length 2k+1");
    qw = coarsen(singleton_blocks(run), depth).witness;
  }
  std::vector<std::vector<std::size_t>> qblocks;
  for (const auto& block : qw.blocks) {
    std::vector<std::size_t> ids;
    for (std::size_t pos : block) ids.push_back(qs[pos]);
    qblocks.push_back(std::move(ids));
  }
  // Block-increasing Q: mirror x about the strip so it reads decreasing and
  // the right flank becomes the left one.
  const bool mirrored = qw.direction == Direction::increasing;
  std::vector<std::size_t> flank = left_flank;
  auto fx = [&](std::size_t id) { return mirrored ? cut - img[id].x : img[id].x; };
  auto fy = [&](std::size_t id) { return ysign * img[id].y; };
  if (mirrored) {
    flank = right_flank;
    std::reverse(qblocks.begin(), qblocks.end());
  }

  // Polar order of the flank around the middle point of Q_{k+1}.
  std::vector<std::size_t> mid_block = qblocks[k];
  std::sort(mid_block.begin(), mid_block.end(), [&](std::size_t a, std::size_t b) { return fx(a) < fx(b); });
  const std::size_t qid = mid_block[mid_block.size() / 2];
  const double qx = fx(qid), qy0 = fy(qid);
  std::vector<double> angle(flank.size());
  for (std::size_t i = 0; i < flank.size(); ++i) {
    angle[i] = std::atan2(fy(flank[i]) - qy0, fx(flank[i]) - qx);
  }
  std::vector<std::size_t> order(flank.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return angle[a] < angle[b]; });
  std::vector<std::size_t> polar;
  std::vector<double> dist;
  for (std::size_t i : order) {
    polar.push_back(flank[i]);
    dist.push_back(std::hypot(fx(flank[i]) - qx, fy(flank[i]) - qy0));
  }
  if (polar.size() <= (k - 1) * (k - 1)) throw std::logic_error("mutually_avoiding_sets: flank too small");
  const BlockWitness aw = extract_largest(rank_sequence(dist), k, true);

  AvoidingWitness w;
  for (const auto& block : aw.blocks) {
    std::vector<std::size_t> ids;
    for (std::size_t pos : block) ids.push_back(polar[pos]);
    w.a_ids.push_back(std::move(ids));
  }
  const std::size_t offset = aw.direction == Direction::decreasing ? 0 : k + 1;
  for (std::size_t i = 0; i < k; ++i) w.b_ids.push_back(qblocks[offset + i]);

  std::size_t smallest = n;
  for (auto* family : {&w.a_ids, &w.b_ids}) {
    for (auto& ids : *family) {
      std::sort(ids.begin(), ids.end());
      smallest = std::min(smallest, ids.size());
    }
  }
  for (const auto& ids : w.a_ids) {
    PointSet block;
    for (std::size_t id : ids) block.push_back(pts[id]);
    w.a_blocks.push_back(std::move(block));
  }
  for (const auto& ids : w.b_ids) {
    PointSet block;
    for (std::size_t id : ids) block.push_back(pts[id]);
    w.b_blocks.push_back(std::move(block));
  }
  w.guarantee = static_cast<double>(smallest) / static_cast<double>(n);
  return w;
}

PointSet gen_random_points(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  PointSet pts(n);
  for (auto& p : pts) {
    p.x = u(rng);
    p.y = u(rng);
  }
  return pts;
}

PointSet gen_grid_clusters(std::size_t k, std::size_t per_cluster, double spread, std::uint64_t seed) {
  if (k == 0 || per_cluster == 0) throw InvalidInput("gen_grid_clusters: k and cluster size must be >= 1");
  if (!(spread > 0 && spread < 0.5)) throw InvalidInput("gen_grid_clusters: spread must lie in (0, 1/2)");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-spread, spread);
  PointSet pts;
  pts.reserve(k * k * per_cluster);
  for (std::size_t gx = 0; gx < k; ++gx) {
    for (std::size_t gy = 0; gy < k; ++gy) {
      for (std::size_t c = 0; c < per_cluster; ++c) {
        pts.push_back({static_cast<double>(gx) + u(rng), static_cast<double>(gy) + u(rng)});
      }
    }
  }
  return pts;
}

}  // namespace blockseq
