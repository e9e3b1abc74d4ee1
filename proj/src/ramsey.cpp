#include "blockseq/ramsey.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <string>

#include "blockseq/errors.hpp"

namespace blockseq {

PairColoring::PairColoring(std::size_t n, std::size_t q, Color fill)
    : n_(n), q_(q), colors_(n * n, fill) {
  if (q == 0 || q > 255) throw InvalidInput("PairColoring: q must be in 1..255");
  if (fill == 0 || fill > q) throw InvalidInput("PairColoring: fill color out of range");
}

Color PairColoring::color(std::size_t i, std::size_t j) const { return colors_[i * n_ + j]; }

void PairColoring::set_color(std::size_t i, std::size_t j, Color c) {
  if (i >= n_ || j >= n_ || i == j) throw InvalidInput("PairColoring: bad pair");
  if (c == 0 || c > q_) throw InvalidInput("PairColoring: color out of range");
  colors_[i * n_ + j] = c;
  colors_[j * n_ + i] = c;
}

PairColoring coloring_from_sequence(const Sequence& seq) {
  PairColoring c(seq.size(), 2);
  for (std::size_t i = 0; i < seq.size(); ++i) {
    for (std::size_t j = i + 1; j < seq.size(); ++j) c.set_color(i, j, seq[i] < seq[j] ? 1 : 2);
  }
  return c;
}

PairColoring gen_random_coloring(std::size_t n, std::size_t q, std::uint64_t seed) {
  if (q < 1 || q > 255) throw InvalidInput("gen_random_coloring: q must lie in 1..255");
  PairColoring c(n, q);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(1, static_cast<int>(q));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) c.set_color(i, j, static_cast<Color>(pick(rng)));
  }
  return c;
}

PairColoring gen_recursive_coloring(std::size_t k, std::size_t q) {
  if (k == 0 || q == 0) throw InvalidInput("gen_recursive_coloring: k, q must be >= 1");
  std::size_t n = 1;
  for (std::size_t i = 0; i < q; ++i) {
    if (n > (std::size_t{1} << 16) / k) throw InvalidInput("gen_recursive_coloring: k^q too large");
    n *= k;
  }
  PairColoring c(n, q);
  if (k == 1) return c;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      // color = 1 + most significant base-k digit where i and j differ
      std::size_t a = i, b = j, level = 0, top = 0;
      while (a != b) {
        if (a % k != b % k) top = level;
        a /= k;
        b /= k;
        ++level;
      }
      c.set_color(i, j, static_cast<Color>(top + 1));
    }
  }
  return c;
}

MonochromaticPath longest_monochromatic_path(const PairColoring& c) {
  const std::size_t n = c.n();
  if (n == 0) throw InvalidInput("longest_monochromatic_path: empty vertex set");
  MonochromaticPath best;
  best.vertices = {0};
  std::vector<std::size_t> len(n), pred(n);
  for (std::size_t col = 1; col <= c.q(); ++col) {
    std::size_t end = 0;
    for (std::size_t i = 0; i < n; ++i) {
      len[i] = 1;
      pred[i] = i;
      for (std::size_t j = 0; j < i; ++j) {
        if (c.color(j, i) == col && len[j] + 1 > len[i]) {
          len[i] = len[j] + 1;
          pred[i] = j;
        }
      }
      if (len[i] > len[end]) end = i;
    }
    if (len[end] > best.vertices.size()) {
      best.color = static_cast<Color>(col);
      best.vertices.clear();
      for (std::size_t v = end;; v = pred[v]) {
        best.vertices.push_back(v);
        if (pred[v] == v) break;
      }
      std::reverse(best.vertices.begin(), best.vertices.end());
    }
  }
  return best;
}

namespace {

// Per color: out[u] has bit x set iff x > u and color(u,x) == col; in[v] has
// bit x set iff x < v and color(x,v) == col.
struct SpokeBits {
  std::size_t words = 0;
  std::vector<std::vector<std::uint64_t>> out, in;  // [color-1][vertex*words + w]

  explicit SpokeBits(const PairColoring& c) : words((c.n() + 63) / 64) {
    const std::size_t n = c.n();
    out.assign(c.q(), std::vector<std::uint64_t>(n * words, 0));
    in.assign(c.q(), std::vector<std::uint64_t>(n * words, 0));
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t x = u + 1; x < n; ++x) {
        const std::size_t col = c.color(u, x) - 1;
        out[col][u * words + x / 64] |= std::uint64_t{1} << (x % 64);
        in[col][x * words + u / 64] |= std::uint64_t{1} << (u % 64);
      }
    }
  }

  std::size_t middles(std::size_t col, std::size_t u, std::size_t v) const {
    const std::uint64_t* a = &out[col][u * words];
    const std::uint64_t* b = &in[col][v * words];
    std::size_t total = 0;
    for (std::size_t w = u / 64; w <= v / 64 && w < words; ++w) total += std::popcount(a[w] & b[w]);
    return total;
  }
};

std::vector<std::size_t> first_middles(const PairColoring& c, Color col, std::size_t u,
                                       std::size_t v, std::size_t limit) {
  std::vector<std::size_t> mids;
  for (std::size_t x = u + 1; x < v && mids.size() < limit; ++x) {
    if (c.color(u, x) == col && c.color(x, v) == col) mids.push_back(x);
  }
  return mids;
}

}  // namespace

std::size_t count_middles(const PairColoring& c, Color color, std::size_t u, std::size_t v) {
  if (u >= c.n() || v >= c.n()) throw InvalidInput("count_middles: vertex out of range");
  std::size_t total = 0;
  for (std::size_t x = u + 1; x < v; ++x) total += c.color(u, x) == color && c.color(x, v) == color;
  return total;
}

std::optional<BlockPathWitness> depth1_block_path(const PairColoring& c) {
  const std::size_t n = c.n();
  if (n < 3) return std::nullopt;
  const SpokeBits bits(c);
  std::size_t best = 0, best_col = 0, best_u = 0, best_v = 0;
  for (std::size_t col = 0; col < c.q(); ++col) {
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = u + 2; v < n; ++v) {
        const std::size_t m = bits.middles(col, u, v);
        if (m > best) {
          best = m;
          best_col = col;
          best_u = u;
          best_v = v;
        }
      }
    }
  }
  if (best == 0) return std::nullopt;
  BlockPathWitness w;
  w.color = static_cast<Color>(best_col + 1);
  w.endpoints = {best_u, best_v};
  w.blocks = {first_middles(c, w.color, best_u, best_v, best)};
  return w;
}

std::optional<BlockPathWitness> find_block_path(const PairColoring& c, std::size_t k,
                                                std::size_t s) {
  if (k == 0 || s == 0) throw InvalidInput("find_block_path: k and s must be >= 1");
  const std::size_t n = c.n();
  if (n < (k + 1) + k * s) return std::nullopt;
  const SpokeBits bits(c);
  std::vector<std::size_t> len(n), pred(n);
  for (std::size_t col = 0; col < c.q(); ++col) {
    for (std::size_t i = 0; i < n; ++i) {
      len[i] = 1;
      pred[i] = i;
      for (std::size_t j = 0; j + s < i; ++j) {
        if (len[j] + 1 > len[i] && bits.middles(col, j, i) >= s) {
          len[i] = len[j] + 1;
          pred[i] = j;
        }
      }
      if (len[i] >= k + 1) {
        std::vector<std::size_t> chain;
        for (std::size_t v = i; chain.size() < k + 1; v = pred[v]) chain.push_back(v);
        std::reverse(chain.begin(), chain.end());
        BlockPathWitness w;
        w.color = static_cast<Color>(col + 1);
        w.endpoints = chain;
        for (std::size_t t = 0; t < k; ++t) {
          w.blocks.push_back(first_middles(c, w.color, chain[t], chain[t + 1], s));
        }
        return w;
      }
    }
  }
  return std::nullopt;
}

bool validate_block_path(const PairColoring& c, const BlockPathWitness& w) {
  auto check_range = [&](std::size_t v) {
    if (v >= c.n()) throw InvalidInput("block path vertex " + std::to_string(v) + " out of range");
  };
  for (std::size_t p : w.endpoints) check_range(p);
  for (const auto& b : w.blocks) {
    for (std::size_t v : b) check_range(v);
  }
  const std::size_t k = w.blocks.size();
  if (k == 0 || w.endpoints.size() != k + 1) return false;
  if (w.color == 0 || w.color > c.q()) return false;
  const std::size_t s = w.blocks.front().size();
  if (s == 0) return false;
  for (std::size_t i = 0; i < k; ++i) {
    const auto& b = w.blocks[i];
    if (b.size() != s) return false;
    std::vector<std::size_t> sorted = b;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    const std::size_t p = w.endpoints[i];
    const std::size_t q = w.endpoints[i + 1];
    for (std::size_t v : b) {
      if (!(p < v && v < q)) return false;
      if (c.color(p, v) != w.color || c.color(v, q) != w.color) return false;
    }
  }
  return true;
}

BlockWitness to_sequence_witness(const BlockPathWitness& w) {
  BlockWitness out;
  out.direction = w.color == 1 ? Direction::increasing : Direction::decreasing;
  for (const auto& b : w.blocks) {
    std::vector<std::size_t> sorted = b;
    std::sort(sorted.begin(), sorted.end());
    out.blocks.push_back(std::move(sorted));
  }
  return out;
}

}  // namespace blockseq
