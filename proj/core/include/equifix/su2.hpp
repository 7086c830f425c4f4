#pragma once

#include <vector>

namespace equifix {

/// Canonical tangential weight data at a fixed point: positive weights in
/// ascending order plus the orientation sign of the chosen complex
/// structure (sign of the product of the signed weights).
struct WeightSet {
    std::vector<long> m;
    int eps = 1;

    bool operator==(const WeightSet& o) const { return m == o.m && eps == o.eps; }
    bool operator<(const WeightSet& o) const {
        return m != o.m ? m < o.m : eps < o.eps;
    }
};

/// Weights of the complex d-dimensional irreducible representation of
/// SU(2) restricted to the maximal circle: d-1, d-3, ..., -(d-1).
std::vector<long> irrep_weights(long d);

/// Every tangential weight system possible at an S3-fixed point that is
/// isolated for the restricted circle action, one per partition of n into
/// even parts (a zero weight would come from any odd-dimensional summand
/// and contradict isolation). Empty for odd n. Sorted by (m, eps).
std::vector<WeightSet> enumerate_isolated_tangent_sets(long n);

/// Max over the tangent sets of the product of the weights; 0 when the
/// list is empty.
long max_weight_product(long n);

}  // namespace equifix
