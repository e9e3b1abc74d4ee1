#include "blockseq/range_count.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <utility>

#include "blockseq/errors.hpp"

namespace blockseq {

DominanceCounter::DominanceCounter(const Sequence& seq) {
  const std::size_t n = seq.size();
  std::vector<std::pair<double, std::size_t>> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = {seq[i], i};
  std::sort(order.begin(), order.end());
  sorted_values_.resize(n);
  ranks_.resize(n);
  for (std::size_t r = 0; r < n; ++r) {
    sorted_values_[r] = order[r].first;
    ranks_[order[r].second] = r;
  }

  levels_ = 1;
  while ((std::size_t{1} << levels_) < n) ++levels_;
  words_ = n / 64 + 1;
  bits_.assign(levels_ * words_, 0);
  prefix_.assign(levels_ * words_, 0);
  zeros_.assign(levels_, 0);

  // each level stably moves the entries with a 0 bit in front
  std::vector<std::uint32_t> cur(ranks_.begin(), ranks_.end()), next(n);
  for (std::size_t lv = 0; lv < levels_; ++lv) {
    const std::size_t shift = levels_ - 1 - lv;
    std::uint64_t* words = &bits_[lv * words_];
    std::size_t zi = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if ((cur[i] >> shift) & 1) words[i / 64] |= std::uint64_t{1} << (i % 64);
      else ++zi;
    }
    zeros_[lv] = zi;
    std::uint32_t run = 0;
    for (std::size_t w = 0; w < words_; ++w) {
      prefix_[lv * words_ + w] = run;
      run += static_cast<std::uint32_t>(std::popcount(words[w]));
    }
    std::size_t z = 0, o = zi;
    for (std::size_t i = 0; i < n; ++i) {
      if ((cur[i] >> shift) & 1) next[o++] = cur[i];
      else next[z++] = cur[i];
    }
    cur.swap(next);
  }
}

std::size_t DominanceCounter::rank1(std::size_t level, std::size_t i) const {
  const std::size_t w = i / 64, b = i % 64;
  const std::uint64_t mask = b == 0 ? 0 : (~std::uint64_t{0} >> (64 - b));
  return prefix_[level * words_ + w] + static_cast<std::size_t>(std::popcount(bits_[level * words_ + w] & mask));
}

std::size_t DominanceCounter::count_below(std::size_t first, std::size_t last, std::size_t bound) const {
  if (bound >= (std::size_t{1} << levels_)) return last - first;
  std::size_t below = 0;
  for (std::size_t lv = 0; lv < levels_ && first < last; ++lv) {
    const std::size_t ones_first = rank1(lv, first), ones_last = rank1(lv, last);
    if ((bound >> (levels_ - 1 - lv)) & 1) {
      below += (last - first) - (ones_last - ones_first);
      first = zeros_[lv] + ones_first;
      last = zeros_[lv] + ones_last;
    } else {
      first -= ones_first;
      last -= ones_last;
    }
  }
  return below;
}

std::size_t DominanceCounter::count_ranks(std::size_t first, std::size_t last,
                                          std::size_t rank_lo, std::size_t rank_hi) const {
  last = std::min(last, size());
  rank_hi = std::min(rank_hi, size());
  if (first >= last || rank_lo >= rank_hi) return 0;
  return count_below(first, last, rank_hi) - count_below(first, last, rank_lo);
}

std::size_t DominanceCounter::count_open_box(double i_lo, double i_hi, double v_lo,
                                             double v_hi) const {
  if (std::isnan(i_lo) || std::isnan(i_hi) || std::isnan(v_lo) || std::isnan(v_hi)) {
    throw InvalidInput("count_open_box: NaN bound");
  }
  if (!(i_lo < i_hi) || !(v_lo < v_hi)) {
    throw InvalidInput("count_open_box: bounds must satisfy lo < hi");
  }
  const double n = static_cast<double>(size());
  // integer positions p with i_lo < p < i_hi, clamped to [0, n)
  const double first_d = std::max(0.0, std::floor(i_lo) + 1.0);
  const double last_d = std::min(n, std::ceil(i_hi));
  if (!(first_d < last_d)) return 0;
  const auto first = static_cast<std::size_t>(first_d);
  const auto last = static_cast<std::size_t>(last_d);
  const auto rank_lo = static_cast<std::size_t>(
      std::upper_bound(sorted_values_.begin(), sorted_values_.end(), v_lo) - sorted_values_.begin());
  const auto rank_hi = static_cast<std::size_t>(
      std::lower_bound(sorted_values_.begin(), sorted_values_.end(), v_hi) - sorted_values_.begin());
  return count_ranks(first, last, rank_lo, rank_hi);
}

std::size_t DominanceCounter::gap_count(std::size_t i, std::size_t j) const {
  const std::size_t a = ranks_[i];
  const std::size_t b = ranks_[j];
  const std::size_t lo = std::min(a, b) + 1;
  const std::size_t hi = std::max(a, b);
  return count_ranks(i + 1, j, lo, hi);
}

bool is_gapped_pair(const DominanceCounter& counter, const Sequence& seq, std::size_t i,
                    std::size_t j, std::size_t s) {
  if (!(i < j) || j >= seq.size() || counter.size() != seq.size()) {
    throw InvalidInput("is_gapped_pair: need i < j < n");
  }
  if (s == 0) return true;
  if (j - i - 1 < s) return false;
  return counter.gap_count(i, j) >= s;
}

}  // namespace blockseq
