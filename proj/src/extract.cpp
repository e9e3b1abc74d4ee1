#include "blockseq/extract.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "blockseq/errors.hpp"

namespace blockseq {

namespace {

// Positions with dp_length >= b form level b. Each level keeps its prefix
// minima (in direction-adjusted rank), which decrease as positions increase.
// If some j at level b is gapped with i, the level's prefix minimum at or
// before j dominates it (its box contains j's box), so scanning the frontier
// suffix below rank[i] finds the smallest qualifying position.
struct Frontiers {
  std::vector<std::vector<std::size_t>> levels;  // levels[b-1]
};

}  // namespace

GappedChain gapped_chain_dp(const Sequence& seq, std::size_t s, Direction d) {
  const DominanceCounter counter(seq);
  return gapped_chain_dp(counter, seq, s, d);
}

GappedChain gapped_chain_dp(const DominanceCounter& counter, const Sequence& seq, std::size_t s,
                            Direction d, std::size_t max_length) {
  const std::size_t n = seq.size();
  if (counter.size() != n) throw InvalidInput("gapped_chain_dp: counter built for another sequence");
  GappedChain out;
  out.direction = d;
  out.s = s;
  out.dp_lengths.assign(n, 0);
  out.dp_pred.assign(n, kNoPredecessor);
  if (n == 0) return out;

  std::vector<std::size_t> key(n);
  for (std::size_t i = 0; i < n; ++i) {
    key[i] = d == Direction::increasing ? counter.rank(i) : n - 1 - counter.rank(i);
  }

  Frontiers fr;
  std::size_t best_len = 0;
  std::size_t best_end = 0;
  std::size_t scanned = n;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t len = 1;
    for (std::size_t b = fr.levels.size(); b >= 1 && len == 1; --b) {
      const auto& level = fr.levels[b - 1];
      auto it = std::partition_point(level.begin(), level.end(),
                                     [&](std::size_t j) { return key[j] > key[i]; });
      for (; it != level.end(); ++it) {
        const std::size_t j = *it;
        if (i - j - 1 < s) break;  // later frontier entries are even closer
        if (key[i] - key[j] - 1 < s) continue;
        if (s == 0 || counter.gap_count(j, i) >= s) {
          len = b + 1;
          out.dp_pred[i] = j;
          break;
        }
      }
    }
    out.dp_lengths[i] = len;
    if (fr.levels.size() < len) fr.levels.resize(len);
    for (std::size_t b = 1; b <= len; ++b) {
      auto& level = fr.levels[b - 1];
      if (level.empty() || key[i] < key[level.back()]) level.push_back(i);
    }
    if (len > best_len) {
      best_len = len;
      best_end = i;
    }
    if (best_len >= max_length) {
      scanned = i + 1;
      break;
    }
  }
  // positions after an early stop were never evaluated
  for (std::size_t i = scanned; i < n; ++i) out.dp_lengths[i] = 0;

  for (std::size_t cur = best_end;; cur = out.dp_pred[cur]) {
    out.chain.push_back(cur);
    if (out.dp_pred[cur] == kNoPredecessor) break;
  }
  std::reverse(out.chain.begin(), out.chain.end());
  return out;
}

BlockWitness chain_to_blocks(const Sequence& seq, const GappedChain& chain) {
  if (chain.chain.size() < 2) throw InvalidInput("chain_to_blocks: chain must have length >= 2");
  if (chain.s == 0) throw InvalidInput("chain_to_blocks: s must be >= 1");
  BlockWitness w;
  w.direction = chain.direction;
  for (std::size_t t = 0; t + 1 < chain.chain.size(); ++t) {
    const std::size_t i = chain.chain[t];
    const std::size_t j = chain.chain[t + 1];
    if (i >= j || j >= seq.size()) throw InvalidInput("chain_to_blocks: malformed chain");
    const double lo = std::min(seq[i], seq[j]);
    const double hi = std::max(seq[i], seq[j]);
    std::vector<std::size_t> block;
    for (std::size_t x = i + 1; x < j && block.size() < chain.s; ++x) {
      if (lo < seq[x] && seq[x] < hi) block.push_back(x);
    }
    if (block.size() < chain.s) throw InvalidInput("chain_to_blocks: pair is not s-gapped");
    w.blocks.push_back(std::move(block));
  }
  return w;
}

namespace {

void require_extractable(std::size_t n, std::size_t k) {
  if (k == 0) throw InvalidInput("extraction depth k must be >= 1");
  const std::size_t km1 = k - 1;
  if (n <= km1 * km1) {
    throw PreconditionFailed("extraction needs n > (k-1)^2 (n=" + std::to_string(n) +
                             ", k=" + std::to_string(k) + ")");
  }
}

// Longer chain of the two directions; increasing wins ties.
GappedChain best_direction(const DominanceCounter& counter, const Sequence& seq, std::size_t s,
                           std::size_t max_length) {
  GappedChain inc = gapped_chain_dp(counter, seq, s, Direction::increasing, max_length);
  if (inc.chain.size() >= max_length) return inc;
  GappedChain dec = gapped_chain_dp(counter, seq, s, Direction::decreasing, max_length);
  return dec.chain.size() > inc.chain.size() ? dec : inc;
}

GappedOptimum max_gapped_impl(const DominanceCounter& counter, const Sequence& seq,
                              std::size_t k) {
  const std::size_t n = seq.size();
  GappedOptimum out;
  // k blocks of s plus k+1 endpoints must fit
  const std::size_t hi_bound = (n - (k + 1)) / k;
  auto feasible = [&](std::size_t s) {
    return best_direction(counter, seq, s, k + 1).chain.size() >= k + 1;
  };
  std::size_t lo = 0, hi = hi_bound;  // invariant: lo feasible (0 always is)
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo + 1) / 2;
    if (feasible(mid)) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  out.s_star = lo;
  if (lo == 0) {
    out.witness = singleton_blocks(longest_monotone(seq));
    return out;
  }
  GappedChain ch = best_direction(counter, seq, lo, k + 1);
  out.witness = chain_to_blocks(seq, ch);
  return out;
}

}  // namespace

GappedOptimum max_gapped_blocksize(const Sequence& seq, std::size_t k) {
  if (k == 0) throw InvalidInput("max_gapped_blocksize: k must be >= 1");
  if (seq.size() <= k) throw InvalidInput("max_gapped_blocksize: needs n >= k+1");
  const DominanceCounter counter(seq);
  return max_gapped_impl(counter, seq, k);
}

BlockWitness extract_block_monotone(const Sequence& seq, std::size_t k, double c) {
  require_extractable(seq.size(), k);
  if (!(c > 0.0)) throw InvalidInput("extraction constant c must be positive");
  const double n = static_cast<double>(seq.size());
  const double ck2 = (c * static_cast<double>(k)) * (c * static_cast<double>(k));
  if (n < ck2) return singleton_blocks(longest_monotone(seq));

  const auto s = static_cast<std::size_t>(std::ceil(n / ck2));
  const DominanceCounter counter(seq);
  GappedChain ch = best_direction(counter, seq, s, std::numeric_limits<std::size_t>::max());
  if (ch.chain.size() >= k + 1) return chain_to_blocks(seq, ch);

  if (seq.size() > k) {
    GappedOptimum opt = max_gapped_impl(counter, seq, k);
    if (opt.s_star > 0) return opt.witness;
  }
  return singleton_blocks(longest_monotone(seq));
}

BlockWitness extract_largest(const Sequence& seq, std::size_t k, bool exact_depth) {
  require_extractable(seq.size(), k);
  BlockWitness run = singleton_blocks(longest_monotone(seq));
  if (exact_depth) run = coarsen(run, k).witness;
  if (seq.size() <= k) return run;

  const DominanceCounter counter(seq);
  const GappedOptimum opt = max_gapped_impl(counter, seq, k);
  if (opt.s_star == 0) return run;
  GappedChain full =
      best_direction(counter, seq, opt.s_star, std::numeric_limits<std::size_t>::max());
  BlockWitness gapped = chain_to_blocks(seq, full);
  if (exact_depth) gapped = coarsen(gapped, k).witness;
  return gapped.total() >= run.total() ? gapped : run;
}

}  // namespace blockseq
