#pragma once

#include <vector>

namespace equifix {

/// All partitions of n, each as an ascending vector of parts, listed in
/// lexicographic order. partitions_of(0) = { {} }.
std::vector<std::vector<long>> partitions_of(long n);

/// All ways to write value as a product of exactly `parts` positive
/// integers, each factor list ascending, listed in lexicographic order.
std::vector<std::vector<long>> factorizations_into(long value, long parts);

/// Descending tuple (a >= b >= c >= d >= 0) of at most four nonnegative
/// integers with sum of squares s, zeros stripped; the lexicographically
/// smallest such descending tuple. Exists for every s >= 0.
std::vector<long> four_square_decomposition(long s);

}  // namespace equifix
