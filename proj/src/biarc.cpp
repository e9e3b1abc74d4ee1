#include "blockseq/biarc.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>

#include "blockseq/errors.hpp"

namespace blockseq {

void validate_graph(const OrderedGraph& g) {
  std::set<Edge> seen;
  for (const auto& e : g.edges) {
    if (e.l < 1 || e.l >= e.r || e.r > g.n) throw InvalidInput("graph: edge endpoints must satisfy 1 <= l < r <= n");
    if (!seen.insert(e).second) throw InvalidInput("graph: duplicate edge");
  }
}

namespace {

// Largest b in [lo, hi] with at most |E|/2 edges inside [lo..b].
std::size_t split_range(const std::vector<Edge>& edges, std::size_t lo, std::size_t hi) {
  std::vector<std::size_t> rights;
  rights.reserve(edges.size());
  for (const auto& e : edges) rights.push_back(e.r);
  std::sort(rights.begin(), rights.end());
  std::size_t best = lo;
  std::size_t within = 0;
  for (std::size_t b = lo; b <= hi; ++b) {
    while (within < rights.size() && rights[within] <= b) ++within;
    if (2 * within <= edges.size()) best = b;
  }
  return best;
}

}  // namespace

std::size_t half_split(const OrderedGraph& g) {
  if (g.edges.empty()) throw InvalidInput("half_split: empty edge set");
  validate_graph(g);
  return split_range(g.edges, 1, g.n);
}

MultisetPartition partition_multiset(const std::vector<double>& values, std::size_t k,
                                     const PartitionOptions& opt) {
  if (k < 2) throw InvalidInput("partition_multiset: k must be >= 2");
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<double> ranks(values.size());
  for (std::size_t r = 0; r < order.size(); ++r) ranks[order[r]] = static_cast<double>(r);
  SequencePartition sp = partition_sequence(Sequence(std::move(ranks)), k, opt);
  return {std::move(sp.parts), std::move(sp.remainder)};
}

bool validate_multiset_witness(const std::vector<double>& values, const BlockWitness& w) {
  if (w.blocks.empty() || w.block_size() == 0) return false;
  std::size_t last = 0;
  bool first = true;
  double prev_min = 0, prev_max = 0;
  for (const auto& block : w.blocks) {
    if (block.size() != w.block_size()) return false;
    double lo = 0, hi = 0;
    for (std::size_t i = 0; i < block.size(); ++i) {
      const std::size_t pos = block[i];
      if (pos >= values.size()) throw InvalidInput("witness index out of range");
      if (!first && pos <= last) return false;
      first = false;
      last = pos;
      lo = i == 0 ? values[pos] : std::min(lo, values[pos]);
      hi = i == 0 ? values[pos] : std::max(hi, values[pos]);
    }
    if (&block != &w.blocks.front()) {
      if (w.direction == Direction::increasing && !(prev_max <= lo)) return false;
      if (w.direction == Direction::decreasing && !(prev_min >= hi)) return false;
    }
    prev_min = lo;
    prev_max = hi;
  }
  return true;
}

std::string to_string(PageStyle s) { return s == PageStyle::upper_arcs ? "upper-arcs" : "biarcs"; }

std::size_t Page::block_crossing_bound() const {
  std::size_t total = 0;
  for (const auto& g : groups) total += g.depth * (g.block_size * (g.block_size - 1) / 2);
  return total;
}

double spine_crossing(const Edge& e, std::size_t b, std::size_t n) {
  const double nn = static_cast<double>(n);
  return static_cast<double>(b) + 1.0 - static_cast<double>(e.l) / nn -
         static_cast<double>(e.r) / (2.0 * nn * nn);
}

ArcDrawing layout_page(const Page& p, std::size_t n) {
  ArcDrawing out;
  out.reserve(p.edges.size());
  for (const auto& de : p.edges) {
    const PageGroup& g = p.groups.at(de.group);
    const double l = static_cast<double>(de.edge.l), r = static_cast<double>(de.edge.r);
    if (g.style == PageStyle::upper_arcs) {
      out.push_back({{l, r, true}});
    } else {
      const double c = spine_crossing(de.edge, g.split, n);
      out.push_back({{l, c, true}, {c, r, false}});
    }
  }
  return out;
}

bool drawn_edges_cross(const std::vector<Semicircle>& a, const std::vector<Semicircle>& b) {
  for (const auto& x : a) {
    for (const auto& y : b) {
      if (x.upper != y.upper) continue;
      if ((x.a < y.a && y.a < x.b && x.b < y.b) || (y.a < x.a && x.a < y.b && y.b < x.b)) return true;
    }
  }
  return false;
}

std::size_t count_page_crossings(const Page& p, std::size_t n) {
  const ArcDrawing d = layout_page(p, n);
  std::size_t total = 0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      // different groups live on disjoint vertex ranges
      if (p.edges[i].group != p.edges[j].group) continue;
      total += drawn_edges_cross(d[i], d[j]) ? 1 : 0;
    }
  }
  return total;
}

namespace {

Page single_edge_page(const Edge& e) {
  Page p;
  p.groups.push_back({PageStyle::upper_arcs, 0, 1, 1});
  p.edges.push_back({e, 0, 0});
  return p;
}

void merge_into(Page& dst, const Page& src) {
  const std::size_t offset = dst.groups.size();
  dst.groups.insert(dst.groups.end(), src.groups.begin(), src.groups.end());
  for (DrawnEdge de : src.edges) {
    de.group += offset;
    dst.edges.push_back(de);
  }
}

std::vector<Page> paginate_range(std::vector<Edge> edges, std::size_t lo, std::size_t hi, std::size_t k,
                                 const PartitionOptions& opt) {
  std::vector<Page> pages;
  if (edges.empty()) return pages;
  if (edges.size() == 1) {
    pages.push_back(single_edge_page(edges.front()));
    return pages;
  }
  const std::size_t b = split_range(edges, lo, hi);
  std::vector<Edge> cross, left, right;
  for (const auto& e : edges) {
    if (e.r <= b) {
      left.push_back(e);
    } else if (e.l > b) {
      right.push_back(e);
    } else {
      cross.push_back(e);
    }
  }
  std::sort(cross.begin(), cross.end());

  if (k < 2) {
    // depth 1: the whole cut fits one block of upper arcs
    Page p;
    p.groups.push_back({PageStyle::upper_arcs, b, 1, cross.size()});
    for (const auto& e : cross) p.edges.push_back({e, 0, 0});
    if (!cross.empty()) pages.push_back(std::move(p));
  } else {
    std::vector<double> rights;
    for (const auto& e : cross) rights.push_back(static_cast<double>(e.r));
    const MultisetPartition mp = partition_multiset(rights, k, opt);
    for (const auto& w : mp.parts) {
      const PageStyle style = w.direction == Direction::decreasing ? PageStyle::upper_arcs : PageStyle::biarcs;
      Page p;
      p.groups.push_back({style, b, w.depth(), w.block_size()});
      for (std::size_t j = 0; j < w.blocks.size(); ++j) {
        for (std::size_t pos : w.blocks[j]) p.edges.push_back({cross[pos], 0, j});
      }
      pages.push_back(std::move(p));
    }
    for (std::size_t pos : mp.deleted) pages.push_back(single_edge_page(cross[pos]));
  }

  std::vector<Page> lp = paginate_range(std::move(left), lo, b, k, opt);
  std::vector<Page> rp = paginate_range(std::move(right), b + 1, hi, k, opt);
  for (std::size_t i = 0; i < std::max(lp.size(), rp.size()); ++i) {
    Page merged;
    if (i < lp.size()) merge_into(merged, lp[i]);
    if (i < rp.size()) merge_into(merged, rp[i]);
    pages.push_back(std::move(merged));
  }
  return pages;
}

}  // namespace

PagePartition paginate(const OrderedGraph& g, double epsilon, const PartitionOptions& opt) {
  if (!(epsilon > 0.0 && epsilon <= 1.0)) throw InvalidInput("paginate: epsilon must lie in (0, 1]");
  if (g.edges.empty()) throw InvalidInput("paginate: empty edge set");
  validate_graph(g);
  PagePartition out;
  out.epsilon = epsilon;
  out.k = static_cast<std::size_t>(std::ceil(1.0 / epsilon - 1e-12));
  out.pages = paginate_range(g.edges, 1, g.n, out.k, opt);
  for (const auto& p : out.pages) out.crossings.push_back(count_page_crossings(p, g.n));
  return out;
}

OrderedGraph gen_random_graph(std::size_t n, std::size_t m, std::uint64_t seed) {
  if (n < 2 || m > n * (n - 1) / 2) throw InvalidInput("gen_random_graph: too many edges for n");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(1, n);
  std::set<Edge> chosen;
  while (chosen.size() < m) {
    std::size_t a = pick(rng), b = pick(rng);
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    chosen.insert({a, b});
  }
  OrderedGraph g{n, {chosen.begin(), chosen.end()}};
  std::shuffle(g.edges.begin(), g.edges.end(), rng);
  return g;
}

}  // namespace blockseq
