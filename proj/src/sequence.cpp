#include "blockseq/sequence.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include "blockseq/errors.hpp"

namespace blockseq {

namespace {

// Ranks 0..n-1 of the values (values are distinct).
std::vector<std::size_t> value_ranks(std::span<const double> v) {
  std::vector<std::size_t> order(v.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
  std::vector<std::size_t> rank(v.size());
  for (std::size_t r = 0; r < order.size(); ++r) rank[order[r]] = r;
  return rank;
}

class MaxFenwick {
 public:
  explicit MaxFenwick(std::size_t n) : tree_(n + 1, 0) {}
  void update(std::size_t pos, std::size_t value) {
    for (++pos; pos < tree_.size(); pos += pos & (~pos + 1)) tree_[pos] = std::max(tree_[pos], value);
  }
  // max over [0, pos)
  std::size_t prefix_max(std::size_t pos) const {
    std::size_t best = 0;
    for (; pos > 0; pos -= pos & (~pos + 1)) best = std::max(best, tree_[pos]);
    return best;
  }

 private:
  std::vector<std::size_t> tree_;
};

}  // namespace

Sequence::Sequence(std::vector<double> values) : values_(std::move(values)) {
  for (double v : values_) {
    if (!std::isfinite(v)) throw InvalidInput("sequence values must be finite");
  }
  std::vector<double> sorted = values_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InvalidInput("sequence values must be pairwise distinct");
  }
}

Sequence Sequence::subsequence(std::span<const std::size_t> positions) const {
  std::vector<double> out;
  out.reserve(positions.size());
  for (std::size_t p : positions) {
    if (p >= values_.size()) throw InvalidInput("subsequence position out of range");
    out.push_back(values_[p]);
  }
  return Sequence(std::move(out));
}

std::size_t BlockWitness::total() const {
  std::size_t t = 0;
  for (const auto& b : blocks) t += b.size();
  return t;
}

std::vector<std::size_t> BlockWitness::indices() const {
  std::vector<std::size_t> out;
  for (const auto& b : blocks) out.insert(out.end(), b.begin(), b.end());
  return out;
}

bool validate_block_witness(const Sequence& seq, const BlockWitness& w) {
  for (const auto& block : w.blocks) {
    for (std::size_t i : block) {
      if (i >= seq.size()) {
        throw InvalidInput("witness index " + std::to_string(i) + " out of range for n=" +
                           std::to_string(seq.size()));
      }
    }
  }
  if (w.blocks.empty()) return false;
  const std::size_t s = w.blocks.front().size();
  if (s == 0) return false;

  struct Span {
    std::size_t min_pos, max_pos;
    double min_val, max_val;
  };
  std::vector<Span> spans;
  spans.reserve(w.blocks.size());
  for (const auto& block : w.blocks) {
    if (block.size() != s) return false;
    std::vector<std::size_t> sorted = block;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    Span sp{sorted.front(), sorted.back(), seq[sorted.front()], seq[sorted.front()]};
    for (std::size_t i : sorted) {
      sp.min_val = std::min(sp.min_val, seq[i]);
      sp.max_val = std::max(sp.max_val, seq[i]);
    }
    spans.push_back(sp);
  }
  for (std::size_t j = 0; j + 1 < spans.size(); ++j) {
    const Span& a = spans[j];
    const Span& b = spans[j + 1];
    if (a.max_pos >= b.min_pos) return false;
    if (w.direction == Direction::increasing) {
      if (!(a.max_val < b.min_val)) return false;
    } else {
      if (!(a.min_val > b.max_val)) return false;
    }
  }
  return true;
}

std::vector<std::size_t> longest_in_direction(const Sequence& seq, Direction d) {
  const std::size_t n = seq.size();
  if (n == 0) return {};
  std::vector<std::size_t> rank = value_ranks(seq.values());
  if (d == Direction::decreasing) {
    for (auto& r : rank) r = n - 1 - r;
  }
  // suffix[i] = longest increasing (in rank) run starting at i. Scanning from
  // the right, query the max over ranks greater than rank[i] via the mirrored
  // index n-1-rank.
  std::vector<std::size_t> suffix(n);
  MaxFenwick fw(n);
  for (std::size_t i = n; i-- > 0;) {
    const std::size_t mirrored = n - 1 - rank[i];
    suffix[i] = 1 + fw.prefix_max(mirrored);
    fw.update(mirrored, suffix[i]);
  }
  std::size_t need = *std::max_element(suffix.begin(), suffix.end());
  std::vector<std::size_t> out;
  out.reserve(need);
  for (std::size_t i = 0; i < n && need > 0; ++i) {
    if (suffix[i] != need) continue;
    if (!out.empty() && rank[i] <= rank[out.back()]) continue;
    out.push_back(i);
    --need;
  }
  return out;
}

MonotoneRun longest_monotone(const Sequence& seq) {
  if (seq.empty()) throw InvalidInput("longest_monotone needs a non-empty sequence");
  auto inc = longest_in_direction(seq, Direction::increasing);
  auto dec = longest_in_direction(seq, Direction::decreasing);
  if (dec.size() > inc.size()) return {Direction::decreasing, std::move(dec)};
  return {Direction::increasing, std::move(inc)};
}

bool InversionStats::eps_increasing(double eps) const {
  return static_cast<double>(decreasing_pairs) < eps * static_cast<double>(n) * static_cast<double>(n);
}

bool InversionStats::eps_decreasing(double eps) const {
  return static_cast<double>(increasing_pairs) < eps * static_cast<double>(n) * static_cast<double>(n);
}

InversionStats inversion_stats(const Sequence& seq) {
  const std::size_t n = seq.size();
  std::vector<std::size_t> rank = value_ranks(seq.values());
  std::vector<std::uint64_t> bit(n + 1, 0);
  std::uint64_t inc = 0;
  for (std::size_t i = 0; i < n; ++i) {
    // earlier entries with smaller rank
    for (std::size_t p = rank[i]; p > 0; p -= p & (~p + 1)) inc += bit[p];
    for (std::size_t p = rank[i] + 1; p <= n; p += p & (~p + 1)) ++bit[p];
  }
  const std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n == 0 ? 0 : n - 1) / 2;
  return InversionStats{inc, pairs - inc, n};
}

Coarsened coarsen(const BlockWitness& w, std::size_t depth) {
  if (depth == 0 || depth > w.depth()) {
    throw InvalidInput("coarsen: target depth must be in 1..depth()");
  }
  const std::size_t per = w.depth() / depth;
  Coarsened out;
  out.witness.direction = w.direction;
  out.witness.blocks.resize(depth);
  for (std::size_t j = 0; j < depth * per; ++j) {
    auto& dst = out.witness.blocks[j / per];
    dst.insert(dst.end(), w.blocks[j].begin(), w.blocks[j].end());
  }
  for (std::size_t j = depth * per; j < w.depth(); ++j) {
    out.dropped.insert(out.dropped.end(), w.blocks[j].begin(), w.blocks[j].end());
  }
  return out;
}

BlockWitness singleton_blocks(const MonotoneRun& run) {
  BlockWitness w;
  w.direction = run.direction;
  for (std::size_t i : run.indices) w.blocks.push_back({i});
  return w;
}

Sequence gen_es_extremal(std::size_t k) {
  if (k == 0) throw InvalidInput("gen_es_extremal: k must be >= 1");
  std::vector<double> v;
  v.reserve(k * k);
  for (std::size_t run = 0; run < k; ++run) {
    for (std::size_t j = 0; j < k; ++j) v.push_back(static_cast<double>(run * k + k - j));
  }
  return Sequence(std::move(v));
}

Sequence gen_clustered(std::size_t k, std::size_t s, ClusterOrder inner, double delta,
                       std::uint64_t seed) {
  if (s == 0) throw InvalidInput("gen_clustered: s must be >= 1");
  if (!(delta > 0.0) || delta >= 0.5) {
    throw InvalidInput("gen_clustered: delta must lie in (0, 1/2)");
  }
  const Sequence base = gen_es_extremal(k);
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> slots(s);
  std::vector<double> v;
  v.reserve(base.size() * s);
  for (double center : base.values()) {
    std::iota(slots.begin(), slots.end(), 0);
    if (inner == ClusterOrder::decreasing) std::reverse(slots.begin(), slots.end());
    if (inner == ClusterOrder::seeded_random) std::shuffle(slots.begin(), slots.end(), rng);
    for (std::size_t j : slots) {
      v.push_back(center + delta * static_cast<double>(j) / static_cast<double>(s));
    }
  }
  return Sequence(std::move(v));
}

Sequence gen_random(std::size_t n, std::uint64_t seed) {
  std::vector<double> v(n);
  std::iota(v.begin(), v.end(), 1.0);
  std::mt19937_64 rng(seed);
  std::shuffle(v.begin(), v.end(), rng);
  return Sequence(std::move(v));
}

}  // namespace blockseq
