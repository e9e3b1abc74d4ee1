#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "blockseq/avoid.hpp"
#include "blockseq/biarc.hpp"
#include "blockseq/ramsey.hpp"
#include "blockseq/sequence.hpp"

namespace blockseq::oracle {

// Slow reference implementations. None of them reuse the library algorithms
// they are meant to check.

// Candidate cuts for block windows: position cuts 0..n and value-rank cuts 0..n.
struct CutGrid {
  std::size_t n = 0;
  std::vector<std::size_t> rank;  // value rank of each position
};
CutGrid make_cut_grid(const Sequence& seq);

// Exact decision: k position windows and matching monotone value windows each
// holding >= s entries. O(k n^4); refuses n > 80 with BudgetExceeded.
bool exists_block_monotone(const Sequence& seq, std::size_t k, std::size_t s);

// Largest s admitting a depth-k block-monotone subsequence (0 if none).
// Throws InvalidInput when n < k.
std::size_t max_blocksize_exact(const Sequence& seq, std::size_t k);

// Longest monotone subsequence by subset enumeration; refuses n > 20.
std::size_t brute_longest_monotone(const Sequence& seq);

// Longest s-gapped chain ending at each position, by exhaustive DFS over a
// naively computed gap table; refuses n > 16.
std::vector<std::size_t> brute_gapped_chain(const Sequence& seq, std::size_t s, Direction d);

// True iff all pairs of a transversal chain of s-gapped pairs hold.
bool is_gapped_chain(const Sequence& seq, const std::vector<std::size_t>& chain, std::size_t s,
                     Direction d);

// Literal transversal enumeration; BudgetExceeded beyond 10^6 transversal pairs.
bool brute_avoiding_transversals(const AvoidingWitness& w);

// Whether two drawn edges meet off the spine, by circle intersection with
// tolerance 1e-9. Throws Indeterminate for near-tangencies.
bool geometric_cross(const std::vector<Semicircle>& a, const std::vector<Semicircle>& b);

// Crossing pairs over all edge pairs of the page, computed geometrically.
std::size_t brute_crossings_geometric(const Page& p, std::size_t n);

// Longest monochromatic monotone path by DFS; refuses n > 12.
std::size_t brute_monochromatic_path(const PairColoring& c);

}  // namespace blockseq::oracle
