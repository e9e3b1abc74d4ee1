#include "blockseq/partition.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "blockseq/errors.hpp"

namespace blockseq {

std::size_t BlockSet::size() const {
  std::size_t s = 0;
  for (const auto& b : blocks) s += b.size();
  return s;
}

PointIds BlockSet::ids() const {
  PointIds out;
  for (const auto& b : blocks) out.insert(out.end(), b.begin(), b.end());
  return out;
}

std::size_t Configuration::size() const {
  std::size_t s = 0;
  for (const auto& o : odd) s += o.size();
  for (const auto& e : even) s += e.size();
  return s;
}

PointIds Configuration::ids() const {
  PointIds out;
  for (const auto& o : odd) out.insert(out.end(), o.begin(), o.end());
  for (const auto& e : even) {
    PointIds ids = e.ids();
    out.insert(out.end(), ids.begin(), ids.end());
  }
  return out;
}

std::size_t Pattern::size() const {
  std::size_t s = config.size();
  for (const auto& side : sides) s += side.size();
  return s;
}

PointIds Pattern::ids() const {
  PointIds out = config.ids();
  for (const auto& side : sides) {
    PointIds ids = side.ids();
    out.insert(out.end(), ids.begin(), ids.end());
  }
  return out;
}

std::string to_string(StepOutcome o) {
  switch (o) {
    case StepOutcome::small: return "small";
    case StepOutcome::deepened: return "deepened";
    case StepOutcome::widened: return "widened";
  }
  return "?";
}

PointSet seq_to_points(const Sequence& seq) {
  PointSet pts(seq.size());
  for (std::size_t i = 0; i < seq.size(); ++i) pts[i] = {static_cast<double>(i + 1), seq[i]};
  return pts;
}

Sequence points_to_seq(const PointSet& points) {
  PointSet sorted = points;
  std::sort(sorted.begin(), sorted.end(), [](const Point& a, const Point& b) { return a.x < b.x; });
  std::vector<double> v;
  v.reserve(sorted.size());
  for (const auto& p : sorted) v.push_back(p.y);
  return Sequence(std::move(v));
}

std::size_t block_size_floor(std::size_t set_size, std::size_t k, double c) {
  const double denom = 3.0 * c * static_cast<double>(k);
  const double threshold = static_cast<double>(set_size) / (denom * denom);
  if (threshold <= 1.0) return 1;
  return static_cast<std::size_t>(std::ceil(threshold));
}

std::size_t pullout_round_ceiling(std::size_t k) {
  const double kk = static_cast<double>(k);
  return static_cast<std::size_t>(std::ceil(2.0 * kk * std::log2(kk))) + 2;
}

namespace {

// Views points with y multiplied by `ysign`; a down-right staircase becomes
// up-right under ysign = -1.
struct Frame {
  const PointSet& pts;
  double ysign = 1.0;

  double x(std::size_t id) const { return pts[id].x; }
  double y(std::size_t id) const { return ysign * pts[id].y; }
};

struct Box {
  bool empty = true;
  double minx = 0, maxx = 0, miny = 0, maxy = 0;

  void add(double x, double y) {
    if (empty) {
      minx = maxx = x;
      miny = maxy = y;
      empty = false;
      return;
    }
    minx = std::min(minx, x);
    maxx = std::max(maxx, x);
    miny = std::min(miny, y);
    maxy = std::max(maxy, y);
  }
  void add(const Box& o) {
    if (o.empty) return;
    add(o.minx, o.miny);
    add(o.maxx, o.maxy);
  }
};

Box box_of(const Frame& f, const PointIds& ids) {
  Box b;
  for (std::size_t id : ids) b.add(f.x(id), f.y(id));
  return b;
}

Box box_of(const Frame& f, const BlockSet& s) {
  Box b;
  for (const auto& block : s.blocks) b.add(box_of(f, block));
  return b;
}

// Quadrant of `inner` relative to `outer`: 0 = up-left, 1 = up-right,
// 2 = down-left, 3 = down-right, -1 = none. Empty sets are in every quadrant.
int quadrant(const Box& outer, const Box& inner) {
  if (outer.empty || inner.empty) return 1;
  const bool up = inner.miny > outer.maxy;
  const bool down = inner.maxy < outer.miny;
  const bool left = inner.maxx < outer.minx;
  const bool right = inner.minx > outer.maxx;
  if (up && left) return 0;
  if (up && right) return 1;
  if (down && left) return 2;
  if (down && right) return 3;
  return -1;
}

void sort_by_x(const PointSet& pts, PointIds& ids) {
  std::sort(ids.begin(), ids.end(), [&](std::size_t a, std::size_t b) { return pts[a].x < pts[b].x; });
}

void append(PointIds& dst, const PointIds& src) { dst.insert(dst.end(), src.begin(), src.end()); }

struct Extracted {
  BlockSet set;
  PointIds rest;
};

// Runs the sequence extractor on the x-ordered frame y-values of `ids`.
Extracted extract_on(const Frame& f, PointIds ids, std::size_t depth, bool exact_depth) {
  sort_by_x(f.pts, ids);
  std::vector<double> ys;
  ys.reserve(ids.size());
  for (std::size_t id : ids) ys.push_back(f.y(id));
  const BlockWitness w = extract_largest(Sequence(std::move(ys)), depth, exact_depth);
  Extracted out;
  out.set.direction = f.ysign > 0 ? w.direction : flip(w.direction);
  std::vector<char> used(ids.size(), 0);
  for (const auto& block : w.blocks) {
    PointIds b;
    for (std::size_t pos : block) {
      b.push_back(ids[pos]);
      used[pos] = 1;
    }
    out.set.blocks.push_back(std::move(b));
  }
  for (std::size_t pos = 0; pos < ids.size(); ++pos) {
    if (!used[pos]) out.rest.push_back(ids[pos]);
  }
  return out;
}

std::size_t deep_depth(std::size_t k, double c) {
  const double d = std::ceil(9.0 * c * c * static_cast<double>(k));
  if (d > 1e15) return static_cast<std::size_t>(1e15);
  return std::max<std::size_t>(1, static_cast<std::size_t>(d));
}

// Block set from groups that are pairwise in monotone position.
BlockSet assemble(const PointSet& pts, std::vector<PointIds> groups, Direction dir) {
  for (auto& g : groups) sort_by_x(pts, g);
  std::sort(groups.begin(), groups.end(), [&](const PointIds& a, const PointIds& b) {
    return pts[a.front()].x < pts[b.front()].x;
  });
  return BlockSet{dir, std::move(groups)};
}

struct Absorbed {
  std::vector<BlockSet> parts;
  PointIds leftovers;
};

// Pulls block-monotone sets out of `z`, then stitches the residue onto `x`
// as an extra block when it is no larger than x's blocks. `z` must lie
// entirely on one monotone side of `x`.
Absorbed absorb(const PointSet& pts, const BlockSet& x, const PointIds& z,
                const std::vector<std::size_t>& depths) {
  Absorbed out;
  PointIds residue = z;
  for (std::size_t d : depths) {
    Pullout po = pullout(pts, residue, d);
    for (auto& p : po.parts) out.parts.push_back(std::move(p));
    residue = std::move(po.residue);
  }
  if (residue.empty()) {
    out.parts.push_back(x);
    return out;
  }
  const std::size_t m = residue.size();
  if (m > x.block_size()) {
    out.parts.push_back(x);
    append(out.leftovers, residue);
    return out;
  }
  std::vector<PointIds> head{residue};
  std::vector<PointIds> tail;
  for (const auto& block : x.blocks) {
    head.emplace_back(block.begin(), block.begin() + static_cast<std::ptrdiff_t>(m));
    if (block.size() > m) tail.emplace_back(block.begin() + static_cast<std::ptrdiff_t>(m), block.end());
  }
  out.parts.push_back(assemble(pts, std::move(head), x.direction));
  if (!tail.empty()) out.parts.push_back(BlockSet{x.direction, std::move(tail)});
  return out;
}

// A coordinate strictly inside (lo, hi) that differs from every value in `taken`.
double free_between(double lo, double hi, std::vector<double> taken) {
  std::vector<double> cuts{lo};
  for (double v : taken) {
    if (lo < v && v < hi) cuts.push_back(v);
  }
  cuts.push_back(hi);
  std::sort(cuts.begin(), cuts.end());
  return cuts[0] + (cuts[1] - cuts[0]) / 2.0;
}

void require_shape(bool ok, const char* what) {
  if (!ok) throw InvalidInput(what);
}

}  // namespace

bool validate_block_set(const PointSet& pts, const BlockSet& b, std::size_t min_depth) {
  if (b.depth() == 0 || b.depth() < min_depth) return false;
  const std::size_t s = b.block_size();
  if (s == 0) return false;
  const Frame f{pts, 1.0};
  Box prev;
  for (const auto& block : b.blocks) {
    if (block.size() != s) return false;
    for (std::size_t id : block) {
      if (id >= pts.size()) return false;
    }
    for (std::size_t i = 0; i + 1 < block.size(); ++i) {
      if (!(pts[block[i]].x < pts[block[i + 1]].x)) return false;
    }
    const Box cur = box_of(f, block);
    if (!prev.empty) {
      if (!(prev.maxx < cur.minx)) return false;
      if (b.direction == Direction::increasing && !(prev.maxy < cur.miny)) return false;
      if (b.direction == Direction::decreasing && !(prev.miny > cur.maxy)) return false;
    }
    prev = cur;
  }
  return true;
}

bool validate_configuration(const PointSet& pts, const Configuration& y, std::size_t k, double c) {
  if (y.odd.size() != y.even.size() + 1) return false;
  std::size_t largest_odd = 0;
  for (const auto& o : y.odd) {
    largest_odd = std::max(largest_odd, o.size());
    for (std::size_t id : o) {
      if (id >= pts.size()) return false;
    }
  }
  const std::size_t floor_size = block_size_floor(largest_odd, k, c);
  for (const auto& e : y.even) {
    if (e.depth() != k || !validate_block_set(pts, e, k)) return false;
    if (e.block_size() < floor_size) return false;
  }
  if (y.t() == 0) return true;

  const Frame f{pts, y.orientation == Orientation::up_right ? 1.0 : -1.0};
  std::vector<Box> parts;
  for (std::size_t j = 0; j < y.odd.size(); ++j) {
    parts.push_back(box_of(f, y.odd[j]));
    if (j < y.even.size()) parts.push_back(box_of(f, y.even[j]));
  }
  Box later;
  for (std::size_t i = parts.size(); i-- > 0;) {
    if (!later.empty && !parts[i].empty) {
      if (!(later.minx > parts[i].maxx && later.miny > parts[i].maxy)) return false;
    }
    later.add(parts[i]);
  }
  return true;
}

bool validate_pattern(const PointSet& pts, const Pattern& p, std::size_t k, double c) {
  if (!validate_configuration(pts, p.config, k, c)) return false;
  PointIds all = p.ids();
  std::unordered_set<std::size_t> seen;
  for (std::size_t id : all) {
    if (id >= pts.size() || !seen.insert(id).second) return false;
  }
  const std::size_t floor_size = block_size_floor(p.config.size(), k, c);
  const Frame f{pts, 1.0};
  Box later = box_of(f, p.config.ids());
  for (std::size_t i = p.sides.size(); i-- > 0;) {
    const BlockSet& s = p.sides[i];
    if (s.depth() != k || !validate_block_set(pts, s, k)) return false;
    if (s.block_size() < floor_size) return false;
    const Box sb = box_of(f, s);
    if (quadrant(sb, later) < 0) return false;
    later.add(sb);
  }
  return true;
}

Pullout pullout(const PointSet& pts, const PointIds& ids, std::size_t depth) {
  if (depth == 0) throw InvalidInput("pullout: depth must be >= 1");
  Pullout out;
  out.residue = ids;
  const double dm1 = static_cast<double>(depth - 1);
  const double target = std::max(static_cast<double>(ids.size()) / static_cast<double>(depth), dm1 * dm1);
  const Frame f{pts, 1.0};
  while (static_cast<double>(out.residue.size()) > target) {
    Extracted e = extract_on(f, out.residue, depth, false);
    out.parts.push_back(std::move(e.set));
    out.residue = std::move(e.rest);
    ++out.rounds;
  }
  return out;
}

Trimmed trim_exact(const BlockSet& w, std::size_t m) {
  if (m > w.size()) throw InvalidInput("trim_exact: m exceeds the block set size");
  Trimmed out;
  out.core.direction = w.direction;
  if (m == 0) {
    out.core = w;
    return out;
  }
  const std::size_t k = w.depth();
  const std::size_t per = (m + k - 1) / k;
  PointIds removed;
  for (const auto& block : w.blocks) {
    const auto cut = block.end() - static_cast<std::ptrdiff_t>(per);
    if (cut != block.begin()) out.core.blocks.emplace_back(block.begin(), cut);
    removed.insert(removed.end(), cut, block.end());
  }
  if (!out.core.blocks.empty() && out.core.blocks.size() != k) out.core.blocks.clear();
  out.exact.assign(removed.begin(), removed.begin() + static_cast<std::ptrdiff_t>(m));
  out.leftover.assign(removed.begin() + static_cast<std::ptrdiff_t>(m), removed.end());
  return out;
}

StepResult step_pattern(const PointSet& pts, const Pattern& p, std::size_t k,
                        const PartitionOptions& opt) {
  require_shape(k >= 1, "step_pattern: k must be >= 1");
  require_shape(p.l() < 4 * k && p.t() < k, "step_pattern: needs l < 4k and t < k");
  require_shape(validate_pattern(pts, p, k, opt.c), "step_pattern: input is not a valid pattern");

  const Configuration& y = p.config;
  const std::size_t t = y.t();
  std::size_t m = 0;
  for (std::size_t j = 1; j < y.odd.size(); ++j) {
    if (y.odd[j].size() > y.odd[m].size()) m = j;
  }
  const PointIds& largest = y.odd[m];

  StepResult res;
  auto finish_small = [&]() {
    res.outcome = StepOutcome::small;
    res.parts = p.sides;
    res.parts.insert(res.parts.end(), y.even.begin(), y.even.end());
    for (const auto& o : y.odd) append(res.rest, o);
    return res;
  };
  if (largest.size() <= (3 * k - 1) * (3 * k - 1)) return finish_small();

  double ysign = (t > 0 && y.orientation == Orientation::down_right) ? -1.0 : 1.0;
  Extracted ex = extract_on(Frame{pts, ysign}, largest, 3 * k, true);
  // The extractor fell short of the block-size floor the staircase needs.
  if (ex.set.block_size() < block_size_floor(largest.size(), k, opt.c)) return finish_small();

  const BlockSet& x = ex.set;
  Direction frame_dir = ysign > 0 ? x.direction : flip(x.direction);
  if (t == 0 && frame_dir == Direction::increasing) {
    ysign = -ysign;
    frame_dir = Direction::decreasing;
  }
  const Frame f{pts, ysign};
  auto slice = [&](std::size_t from) {
    return BlockSet{x.direction, std::vector<PointIds>(x.blocks.begin() + static_cast<std::ptrdiff_t>(from),
                                                      x.blocks.begin() + static_cast<std::ptrdiff_t>(from + k))};
  };
  const BlockSet x1 = slice(0), x2 = slice(k), x3 = slice(2 * k);
  const std::size_t deep = deep_depth(k, opt.c);

  if (frame_dir == Direction::increasing) {
    // odd parts before and after the largest one are absorbed by X1 and X3
    PointIds z1, z3;
    for (std::size_t j = 0; j < m; ++j) append(z1, y.odd[j]);
    for (std::size_t j = m + 1; j < y.odd.size(); ++j) append(z3, y.odd[j]);
    res.parts.push_back(x2);
    for (const auto* pair : {&z1, &z3}) {
      Absorbed a = absorb(pts, pair == &z1 ? x1 : x3, *pair, {deep, k, k});
      for (auto& part : a.parts) res.parts.push_back(std::move(part));
      append(res.leftovers, a.leftovers);
    }
    res.outcome = StepOutcome::widened;
    res.next.sides = p.sides;
    for (std::size_t j = 0; j < m; ++j) res.next.sides.push_back(y.even[j]);
    for (std::size_t j = t; j-- > m;) res.next.sides.push_back(y.even[j]);
    res.next.config.odd = {ex.rest};
    res.next.config.orientation = Orientation::up_right;
    return res;
  }

  // 3x3 grid through points between blocks k, k+1 and 2k, 2k+1.
  std::vector<double> xs, ys;
  for (std::size_t id : largest) {
    xs.push_back(f.x(id));
    ys.push_back(f.y(id));
  }
  const Box bk = box_of(f, x.blocks[k - 1]), bk1 = box_of(f, x.blocks[k]);
  const Box b2k = box_of(f, x.blocks[2 * k - 1]), b2k1 = box_of(f, x.blocks[2 * k]);
  const double gx1 = free_between(bk.maxx, bk1.minx, xs);
  const double gy1 = free_between(bk1.maxy, bk.miny, ys);
  const double gx2 = free_between(b2k.maxx, b2k1.minx, xs);
  const double gy2 = free_between(b2k1.maxy, b2k.miny, ys);

  PointIds low_left, up_right, z1, z3;
  for (std::size_t id : ex.rest) {
    const double px = f.x(id), py = f.y(id);
    const int col = px < gx1 ? 0 : (px < gx2 ? 1 : 2);
    const int row = py > gy1 ? 0 : (py > gy2 ? 1 : 2);
    const int region = row * 3 + col + 1;
    if (region == 7) {
      low_left.push_back(id);
    } else if (region == 3) {
      up_right.push_back(id);
    } else if (region == 5 || region == 6 || region == 8 || region == 9) {
      z1.push_back(id);
    } else {
      z3.push_back(id);
    }
  }
  res.parts.clear();
  for (const auto& [xpart, z] : {std::pair{&x1, &z1}, std::pair{&x3, &z3}}) {
    Absorbed a = absorb(pts, *xpart, *z, {deep, k});
    for (auto& part : a.parts) res.parts.push_back(std::move(part));
    append(res.leftovers, a.leftovers);
  }
  res.outcome = StepOutcome::deepened;
  res.next.sides = p.sides;
  Configuration& ny = res.next.config;
  ny.orientation = ysign > 0 ? Orientation::up_right : Orientation::down_right;
  ny.odd.assign(y.odd.begin(), y.odd.begin() + static_cast<std::ptrdiff_t>(m));
  ny.odd.push_back(std::move(low_left));
  ny.odd.push_back(std::move(up_right));
  ny.odd.insert(ny.odd.end(), y.odd.begin() + static_cast<std::ptrdiff_t>(m + 1), y.odd.end());
  ny.even.assign(y.even.begin(), y.even.begin() + static_cast<std::ptrdiff_t>(m));
  ny.even.push_back(x2);
  ny.even.insert(ny.even.end(), y.even.begin() + static_cast<std::ptrdiff_t>(m), y.even.end());
  return res;
}

Flattened flatten_wide(const PointSet& pts, const Pattern& p, std::size_t k,
                       const PartitionOptions& opt) {
  require_shape(p.l() == 4 * k, "flatten_wide: needs exactly 4k sides");
  require_shape(validate_pattern(pts, p, k, opt.c), "flatten_wide: input is not a valid pattern");
  Flattened out;
  out.parts = p.config.even;
  PointIds odd;
  for (const auto& o : p.config.odd) append(odd, o);
  Pullout po = pullout(pts, odd, deep_depth(k, opt.c));
  for (auto& part : po.parts) out.parts.push_back(std::move(part));
  const PointIds residue = std::move(po.residue);

  std::vector<char> chosen(p.l(), 0);
  int region = -1;
  if (!residue.empty()) {
    const Frame f{pts, 1.0};
    const Box ybox = box_of(f, p.config.ids());
    std::vector<std::vector<std::size_t>> by_region(4);
    for (std::size_t i = 0; i < p.l(); ++i) {
      // region of S_i relative to Y
      const int q = quadrant(ybox, box_of(f, p.sides[i]));
      if (q >= 0) by_region[static_cast<std::size_t>(q)].push_back(i);
    }
    std::size_t best = 0;
    for (std::size_t q = 1; q < 4; ++q) {
      if (by_region[q].size() > by_region[best].size()) best = q;
    }
    if (by_region[best].size() >= k) {
      std::size_t smallest = std::numeric_limits<std::size_t>::max();
      for (std::size_t j = 0; j < k; ++j) smallest = std::min(smallest, p.sides[by_region[best][j]].size());
      if (residue.size() <= smallest) {
        region = static_cast<int>(best);
        for (std::size_t j = 0; j < k; ++j) chosen[by_region[best][j]] = 1;
      }
    }
  }
  if (region < 0) {
    for (const auto& s : p.sides) out.parts.push_back(s);
    append(out.leftovers, residue);
    return out;
  }
  // Sides above-left or below-right of Y chain downward into Y.
  const Direction dir = (region == 0 || region == 3) ? Direction::decreasing : Direction::increasing;
  std::vector<PointIds> groups{residue};
  for (std::size_t i = 0; i < p.l(); ++i) {
    if (!chosen[i]) {
      out.parts.push_back(p.sides[i]);
      continue;
    }
    Trimmed tr = trim_exact(p.sides[i], residue.size());
    if (!tr.core.blocks.empty()) out.parts.push_back(std::move(tr.core));
    groups.push_back(std::move(tr.exact));
    append(out.leftovers, tr.leftover);
  }
  out.parts.push_back(assemble(pts, std::move(groups), dir));
  return out;
}

Flattened flatten_deep(const PointSet& pts, const Pattern& p, std::size_t k,
                       const PartitionOptions& opt) {
  require_shape(p.t() == k && k >= 1, "flatten_deep: needs t == k");
  require_shape(validate_pattern(pts, p, k, opt.c), "flatten_deep: input is not a valid pattern");
  const Configuration& y = p.config;
  Flattened out;
  out.parts = p.sides;
  std::vector<PointIds> twice(y.odd.size());
  for (std::size_t j = 0; j < y.odd.size(); ++j) {
    Pullout first = pullout(pts, y.odd[j], deep_depth(k, opt.c));
    Pullout second = pullout(pts, first.residue, k + 1);
    for (auto& part : first.parts) out.parts.push_back(std::move(part));
    for (auto& part : second.parts) out.parts.push_back(std::move(part));
    twice[j] = std::move(second.residue);
  }
  std::size_t min_even = std::numeric_limits<std::size_t>::max();
  for (const auto& e : y.even) min_even = std::min(min_even, e.size());

  // Stitch the smallest residues while their total fits inside every even part.
  std::vector<std::size_t> order;
  for (std::size_t j = 0; j < twice.size(); ++j) {
    if (!twice[j].empty()) order.push_back(j);
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return twice[a].size() < twice[b].size(); });
  std::vector<char> stitched(twice.size(), 0);
  std::size_t total = 0;
  for (std::size_t j : order) {
    if (total + twice[j].size() > min_even) break;
    total += twice[j].size();
    stitched[j] = 1;
  }
  for (std::size_t j = 0; j < twice.size(); ++j) {
    if (!stitched[j]) append(out.leftovers, twice[j]);
  }
  if (total == 0) {
    out.parts.insert(out.parts.end(), y.even.begin(), y.even.end());
    return out;
  }
  const Direction dir =
      y.orientation == Orientation::up_right ? Direction::increasing : Direction::decreasing;
  std::vector<std::vector<PointIds>> groups(twice.size());
  for (std::size_t j = 0; j < twice.size(); ++j) {
    if (stitched[j]) groups[j].push_back(twice[j]);
  }
  for (const auto& e : y.even) {
    Trimmed tr = trim_exact(e, total);
    if (!tr.core.blocks.empty()) out.parts.push_back(std::move(tr.core));
    append(out.leftovers, tr.leftover);
    std::size_t offset = 0;
    for (std::size_t j = 0; j < twice.size(); ++j) {
      if (!stitched[j]) continue;
      const auto first = tr.exact.begin() + static_cast<std::ptrdiff_t>(offset);
      groups[j].emplace_back(first, first + static_cast<std::ptrdiff_t>(twice[j].size()));
      offset += twice[j].size();
    }
  }
  for (std::size_t j = 0; j < twice.size(); ++j) {
    if (stitched[j]) out.parts.push_back(assemble(pts, std::move(groups[j]), dir));
  }
  return out;
}

namespace {

bool is_monotone_set(const PointSet& pts, PointIds ids) {
  sort_by_x(pts, ids);
  bool inc = true, dec = true;
  for (std::size_t i = 0; i + 1 < ids.size(); ++i) {
    inc = inc && pts[ids[i]].y < pts[ids[i + 1]].y;
    dec = dec && pts[ids[i]].y > pts[ids[i + 1]].y;
  }
  return inc || dec;
}

void check_partition(const PointSet& pts, const LabeledPartition& lp, std::size_t k) {
  std::vector<char> seen(pts.size(), 0);
  auto mark = [&](std::size_t id) {
    if (id >= pts.size() || seen[id]) throw std::logic_error("partition: ids are not an exact cover");
    seen[id] = 1;
  };
  for (const auto& part : lp.parts) {
    if (!validate_block_set(pts, part, k)) throw std::logic_error("partition: emitted an invalid part");
    for (std::size_t id : part.ids()) mark(id);
  }
  for (std::size_t id : lp.remainder) mark(id);
  if (std::count(seen.begin(), seen.end(), 0) != 0) throw std::logic_error("partition: points lost");
}

}  // namespace

LabeledPartition partition_point_set(const PointSet& pts, std::size_t k, const PartitionOptions& opt) {
  if (k < 2) throw InvalidInput("partition: k must be >= 2");
  {
    std::vector<double> xs, ys;
    for (const auto& q : pts) {
      xs.push_back(q.x);
      ys.push_back(q.y);
    }
    Sequence(std::move(xs));
    Sequence(std::move(ys));
  }
  LabeledPartition lp;
  PointIds all(pts.size());
  std::iota(all.begin(), all.end(), 0);
  const std::size_t budget = (k - 1) * (k - 1);
  if (pts.size() <= budget) {
    lp.remainder = all;
    lp.metrics.termination = "small";
    return lp;
  }
  if (is_monotone_set(pts, all)) {
    BlockSet whole;
    sort_by_x(pts, all);
    whole.direction = pts[all.front()].y < pts[all.back()].y ? Direction::increasing : Direction::decreasing;
    for (std::size_t id : all) whole.blocks.push_back({id});
    lp.parts.push_back(std::move(whole));
    lp.metrics.termination = "small";
    return lp;
  }

  Pattern cur;
  cur.config.odd = {all};
  PointIds extra;
  const std::size_t small_size = k * (3 * k - 1) * (3 * k - 1);
  while (true) {
    lp.metrics.lt_history.push_back(cur.l() + cur.t());
    if (cur.size() <= small_size) {
      lp.parts.insert(lp.parts.end(), cur.sides.begin(), cur.sides.end());
      lp.parts.insert(lp.parts.end(), cur.config.even.begin(), cur.config.even.end());
      for (const auto& o : cur.config.odd) append(extra, o);
      lp.metrics.termination = "small";
      break;
    }
    if (cur.l() >= 4 * k) {
      const std::size_t drop = cur.l() - 4 * k;
      lp.parts.insert(lp.parts.end(), cur.sides.begin(), cur.sides.begin() + static_cast<std::ptrdiff_t>(drop));
      cur.sides.erase(cur.sides.begin(), cur.sides.begin() + static_cast<std::ptrdiff_t>(drop));
      Flattened fl = flatten_wide(pts, cur, k, opt);
      for (auto& part : fl.parts) lp.parts.push_back(std::move(part));
      append(extra, fl.leftovers);
      lp.metrics.termination = "wide";
      break;
    }
    if (cur.t() >= k) {
      Flattened fl = flatten_deep(pts, cur, k, opt);
      for (auto& part : fl.parts) lp.parts.push_back(std::move(part));
      append(extra, fl.leftovers);
      lp.metrics.termination = "deep";
      break;
    }
    StepResult r = step_pattern(pts, cur, k, opt);
    ++lp.metrics.iterations;
    lp.metrics.outcomes.push_back(to_string(r.outcome));
    for (auto& part : r.parts) lp.parts.push_back(std::move(part));
    append(extra, r.leftovers);
    if (r.outcome == StepOutcome::small) {
      append(extra, r.rest);
      lp.metrics.termination = "small";
      break;
    }
    if (!validate_pattern(pts, r.next, k, opt.c)) throw std::logic_error("partition: step produced an invalid pattern");
    cur = std::move(r.next);
  }

  // Clean up the accumulated leftovers down to the (k-1)^2 deletion budget.
  const Frame f{pts, 1.0};
  while (extra.size() > budget) {
    Extracted e = extract_on(f, extra, k, false);
    lp.parts.push_back(std::move(e.set));
    extra = std::move(e.rest);
  }
  lp.remainder = std::move(extra);
  std::sort(lp.remainder.begin(), lp.remainder.end());
  check_partition(pts, lp, k);
  return lp;
}

BlockWitness to_witness(const BlockSet& b) {
  BlockWitness w;
  w.direction = b.direction;
  for (const auto& block : b.blocks) {
    std::vector<std::size_t> sorted = block;
    std::sort(sorted.begin(), sorted.end());
    w.blocks.push_back(std::move(sorted));
  }
  return w;
}

SequencePartition partition_sequence(const Sequence& seq, std::size_t k, const PartitionOptions& opt) {
  const PointSet pts = seq_to_points(seq);
  LabeledPartition lp = partition_point_set(pts, k, opt);
  SequencePartition out;
  for (const auto& part : lp.parts) out.parts.push_back(to_witness(part));
  out.remainder = std::move(lp.remainder);
  out.metrics = std::move(lp.metrics);
  return out;
}

SequencePartition greedy_partition(const Sequence& seq, std::size_t k) {
  if (k < 2) throw InvalidInput("partition: k must be >= 2");
  const std::size_t budget = (k - 1) * (k - 1);
  std::vector<std::size_t> rest(seq.size());
  std::iota(rest.begin(), rest.end(), 0);
  SequencePartition out;
  while (rest.size() > budget) {
    const BlockWitness w = extract_largest(seq.subsequence(rest), k);
    BlockWitness mapped;
    mapped.direction = w.direction;
    std::vector<char> used(rest.size(), 0);
    for (const auto& block : w.blocks) {
      std::vector<std::size_t> b;
      for (std::size_t pos : block) {
        b.push_back(rest[pos]);
        used[pos] = 1;
      }
      mapped.blocks.push_back(std::move(b));
    }
    out.parts.push_back(std::move(mapped));
    std::vector<std::size_t> next;
    for (std::size_t pos = 0; pos < rest.size(); ++pos) {
      if (!used[pos]) next.push_back(rest[pos]);
    }
    rest = std::move(next);
    ++out.metrics.iterations;
  }
  out.remainder = std::move(rest);
  out.metrics.termination = "greedy";
  return out;
}

}  // namespace blockseq
