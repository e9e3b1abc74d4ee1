#include "blockseq/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "blockseq/errors.hpp"

namespace blockseq::oracle {

CutGrid make_cut_grid(const Sequence& seq) {
  CutGrid g;
  g.n = seq.size();
  std::vector<std::size_t> order(g.n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return seq[a] < seq[b]; });
  g.rank.assign(g.n, 0);
  for (std::size_t r = 0; r < g.n; ++r) g.rank[order[r]] = r;
  return g;
}

bool exists_block_monotone(const Sequence& seq, std::size_t k, std::size_t s) {
  if (k == 0 || s == 0) throw InvalidInput("exists_block_monotone: k and s must be >= 1");
  const std::size_t n = seq.size();
  if (n > 80) throw BudgetExceeded("exists_block_monotone: n > 80");
  if (k * s > n) return false;
  const CutGrid g = make_cut_grid(seq);
  for (bool decreasing : {false, true}) {
    // pre[p][v]: entries at positions < p with (oriented) rank < v
    std::vector<std::vector<std::size_t>> pre(n + 1, std::vector<std::size_t>(n + 1, 0));
    for (std::size_t p = 0; p < n; ++p) {
      const std::size_t r = decreasing ? n - 1 - g.rank[p] : g.rank[p];
      for (std::size_t v = 0; v <= n; ++v) pre[p + 1][v] = pre[p][v] + (r < v ? 1 : 0);
    }
    auto box = [&](std::size_t p0, std::size_t p1, std::size_t v0, std::size_t v1) {
      return pre[p1][v1] - pre[p0][v1] - pre[p1][v0] + pre[p0][v0];
    };
    // reach[p][v]: j windows fit inside positions < p, ranks < v
    std::vector<std::vector<char>> reach(n + 1, std::vector<char>(n + 1, 1));
    for (std::size_t j = 0; j < k; ++j) {
      std::vector<std::vector<char>> next(n + 1, std::vector<char>(n + 1, 0));
      for (std::size_t p0 = 0; p0 <= n; ++p0) {
        for (std::size_t v0 = 0; v0 <= n; ++v0) {
          if (!reach[p0][v0]) continue;
          for (std::size_t p1 = p0 + 1; p1 <= n; ++p1) {
            for (std::size_t v1 = v0 + 1; v1 <= n; ++v1) {
              if (!next[p1][v1] && box(p0, p1, v0, v1) >= s) next[p1][v1] = 1;
            }
          }
        }
      }
      reach = std::move(next);
    }
    for (const auto& row : reach) {
      if (std::find(row.begin(), row.end(), 1) != row.end()) return true;
    }
  }
  return false;
}

std::size_t max_blocksize_exact(const Sequence& seq, std::size_t k) {
  if (k == 0 || seq.size() < k) throw InvalidInput("max_blocksize_exact: needs n >= k >= 1");
  for (std::size_t s = seq.size() / k; s >= 1; --s) {
    if (exists_block_monotone(seq, k, s)) return s;
  }
  return 0;
}

std::size_t brute_longest_monotone(const Sequence& seq) {
  const std::size_t n = seq.size();
  if (n > 20) throw BudgetExceeded("brute_longest_monotone: n > 20");
  std::size_t best = 0;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    const std::size_t bits = static_cast<std::size_t>(__builtin_popcount(mask));
    if (bits <= best) continue;
    bool inc = true, dec = true;
    double prev = 0;
    bool first = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (!(mask >> i & 1u)) continue;
      if (!first) {
        inc = inc && prev < seq[i];
        dec = dec && prev > seq[i];
      }
      prev = seq[i];
      first = false;
    }
    if (inc || dec) best = bits;
  }
  return best;
}

namespace {

bool gapped(const Sequence& seq, std::size_t i, std::size_t j, std::size_t s, Direction d) {
  const double a = seq[i], b = seq[j];
  if (d == Direction::increasing ? !(a < b) : !(a > b)) return false;
  const double lo = std::min(a, b), hi = std::max(a, b);
  std::size_t between = 0;
  for (std::size_t t = i + 1; t < j; ++t) {
    if (lo < seq[t] && seq[t] < hi) ++between;
  }
  return between >= s;
}

}  // namespace

bool is_gapped_chain(const Sequence& seq, const std::vector<std::size_t>& chain, std::size_t s,
                     Direction d) {
  for (std::size_t t = 0; t + 1 < chain.size(); ++t) {
    if (chain[t] >= chain[t + 1] || chain[t + 1] >= seq.size()) return false;
    if (!gapped(seq, chain[t], chain[t + 1], s, d)) return false;
  }
  return true;
}

std::vector<std::size_t> brute_gapped_chain(const Sequence& seq, std::size_t s, Direction d) {
  const std::size_t n = seq.size();
  if (n > 16) throw BudgetExceeded("brute_gapped_chain: n > 16");
  std::vector<std::vector<char>> ok(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) ok[i][j] = gapped(seq, i, j, s, d) ? 1 : 0;
  }
  std::vector<std::size_t> best(n, 1);
  // enumerate every chain from every start
  std::function<void(std::size_t, std::size_t)> walk = [&](std::size_t last, std::size_t len) {
    best[last] = std::max(best[last], len);
    for (std::size_t j = last + 1; j < n; ++j) {
      if (ok[last][j]) walk(j, len + 1);
    }
  };
  for (std::size_t i = 0; i < n; ++i) walk(i, 1);
  return best;
}

bool brute_avoiding_transversals(const AvoidingWitness& w) {
  double total = 1;
  for (const auto* family : {&w.a_blocks, &w.b_blocks}) {
    for (const auto& block : *family) {
      if (block.empty()) throw InvalidInput("brute_avoiding_transversals: empty block");
      total *= static_cast<double>(block.size());
    }
  }
  if (total > 1e6) throw BudgetExceeded("brute_avoiding_transversals: more than 10^6 transversal pairs");

  auto pick = [](const std::vector<PointSet>& family, std::vector<std::size_t>& idx) {
    PointSet out;
    for (std::size_t i = 0; i < family.size(); ++i) out.push_back(family[i][idx[i]]);
    return out;
  };
  auto advance = [](const std::vector<PointSet>& family, std::vector<std::size_t>& idx) {
    for (std::size_t i = 0; i < family.size(); ++i) {
      if (++idx[i] < family[i].size()) return true;
      idx[i] = 0;
    }
    return false;
  };
  // a line through two points of `from` misses the hull of `to`
  auto avoids = [](const PointSet& from, const PointSet& to) {
    for (std::size_t i = 0; i < from.size(); ++i) {
      for (std::size_t j = i + 1; j < from.size(); ++j) {
        bool pos = false, neg = false;
        for (const auto& c : to) {
          const double o = (from[j].x - from[i].x) * (c.y - from[i].y) - (from[j].y - from[i].y) * (c.x - from[i].x);
          if (o == 0) throw InvalidInput("brute_avoiding_transversals: collinear triple");
          (o > 0 ? pos : neg) = true;
        }
        if (pos && neg) return false;
      }
    }
    return true;
  };
  std::vector<std::size_t> ia(w.a_blocks.size(), 0);
  do {
    const PointSet a = pick(w.a_blocks, ia);
    std::vector<std::size_t> ib(w.b_blocks.size(), 0);
    do {
      const PointSet b = pick(w.b_blocks, ib);
      if (!avoids(a, b) || !avoids(b, a)) return false;
    } while (advance(w.b_blocks, ib));
  } while (advance(w.a_blocks, ia));
  return true;
}

bool geometric_cross(const std::vector<Semicircle>& a, const std::vector<Semicircle>& b) {
  constexpr long double tol = 1e-9L;
  for (const auto& x : a) {
    for (const auto& y : b) {
      if (x.upper != y.upper) continue;
      if (x.a == y.a || x.a == y.b || x.b == y.a || x.b == y.b) continue;
      const long double m1 = (static_cast<long double>(x.a) + x.b) / 2, r1 = (static_cast<long double>(x.b) - x.a) / 2;
      const long double m2 = (static_cast<long double>(y.a) + y.b) / 2, r2 = (static_cast<long double>(y.b) - y.a) / 2;
      if (m1 == m2) continue;  // concentric circles never meet
      const long double xs = (r1 * r1 - r2 * r2 + m2 * m2 - m1 * m1) / (2 * (m2 - m1));
      const long double h2 = r1 * r1 - (xs - m1) * (xs - m1);
      if (std::fabs(h2) <= tol) throw Indeterminate("geometric_cross: near-tangent semicircles");
      if (h2 > 0) return true;
    }
  }
  return false;
}

std::size_t brute_crossings_geometric(const Page& p, std::size_t n) {
  std::vector<std::vector<Semicircle>> arcs;
  const double nn = static_cast<double>(n);
  for (const auto& de : p.edges) {
    const PageGroup& g = p.groups.at(de.group);
    const double l = static_cast<double>(de.edge.l), r = static_cast<double>(de.edge.r);
    if (g.style == PageStyle::upper_arcs) {
      arcs.push_back({{l, r, true}});
    } else {
      const double c = static_cast<double>(g.split) + 1.0 - l / nn - r / (2.0 * nn * nn);
      arcs.push_back({{l, c, true}, {c, r, false}});
    }
  }
  std::size_t total = 0;
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    for (std::size_t j = i + 1; j < arcs.size(); ++j) total += geometric_cross(arcs[i], arcs[j]) ? 1 : 0;
  }
  return total;
}

std::size_t brute_monochromatic_path(const PairColoring& c) {
  const std::size_t n = c.n();
  if (n > 12) throw BudgetExceeded("brute_monochromatic_path: n > 12");
  std::size_t best = n > 0 ? 1 : 0;
  std::function<void(std::size_t, Color, std::size_t)> walk = [&](std::size_t last, Color col, std::size_t len) {
    best = std::max(best, len);
    for (std::size_t j = last + 1; j < n; ++j) {
      if (c.color(last, j) == col) walk(j, col, len + 1);
    }
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t q = 1; q <= c.q(); ++q) walk(i, static_cast<Color>(q), 1);
  }
  return best;
}

}  // namespace blockseq::oracle
