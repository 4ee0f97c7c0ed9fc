// Streaming generators for partitions with bounded parts and for plane
// partitions (piles of unit boxes) bounded cellwise by a given pile.
// Both prune by the maximal weight still reachable, so only prefixes that
// extend to at least one result are ever explored.

#pragma once

#include <functional>
#include <vector>

namespace lozenge {

// A plane partition with explicit zeros: left-justified rows of weakly
// decreasing lengths, entries weakly decreasing along rows and columns.
using Pile = std::vector<std::vector<int>>;

int weight(const std::vector<int>& parts);
int weight(const Pile& pile);

// True iff `pile` is a plane partition (shape may contain zeros).
bool is_pile(const Pile& pile);

// All weakly decreasing sequences (k_1,...,k_n) with k_i <= limit[i] and
// total `target`, emitted in decreasing lexicographic order with explicit
// trailing zeros.  `limit` must be weakly decreasing and nonnegative.
// Errors: BadSize.
void limited_partitions(const std::vector<int>& limit, int target,
                        const std::function<void(const std::vector<int>&)>& emit);

// All piles A <= P cellwise, with the shape of P and total weight `target`.
// Errors: NotAPlanePartition, BadSize.
void limited_plane_partitions(const Pile& P, int target,
                              const std::function<void(const Pile&)>& emit);

// All piles A <= P, ordered by weight then lexicographically.
std::vector<Pile> all_limited_plane_partitions(const Pile& P);

// Conjugate partition (transpose of the Young diagram); trailing zeros are
// dropped from the input and absent from the output.
std::vector<int> conjugate(const std::vector<int>& parts);

}  // namespace lozenge
