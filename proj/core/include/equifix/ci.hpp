#pragma once

#include <optional>
#include <vector>

#include "equifix/rat.hpp"
#include "equifix/trunc_series.hpp"

namespace equifix {

/// Transversal intersection of r hypersurfaces of degrees d_1 <= ... <= d_r
/// (each >= 2) in complex projective (n+r)-space, of complex dimension n.
struct CompleteIntersection {
    CompleteIntersection(long n, std::vector<long> degrees);

    long n;
    std::vector<long> degrees;  // ascending

    long r() const { return static_cast<long>(degrees.size()); }
};

/// Truncated total Pontryagin series in the variable x^2: coefficient j is
/// the integer c_j with p_j = c_j x^{2j}, from
/// (1+x^2)^{n+r+1} * prod (1+d_i^2 x^2)^{-1}, carried to grade floor(n/2).
TruncSeries total_pontryagin_series(const CompleteIntersection& ci);

/// <x^n, mu> = prod d_i.
Int degree(const CompleteIntersection& ci);

/// <x^q * p_I, mu>: the series coefficients for the partition I times the
/// degree. Requires q + 2*sum(I) = n and q >= 0.
Int char_number_ci(const CompleteIntersection& ci, long q, const std::vector<long>& I);

/// Signature via the L-polynomial in grade n/2 evaluated through
/// char_number_ci. Requires even n.
Int signature_ci(const CompleteIntersection& ci);

/// Euler characteristic: coefficient of x^n in (1+x)^{n+r+1} *
/// prod (1+d_i x)^{-1}, times the degree.
Int euler_characteristic_ci(const CompleteIntersection& ci);

/// Data certifying N * p1 + sum y_j^2 = 0: the multiplier N and the
/// multiples k_j with y_j = k_j x, satisfying
/// N * (n+r+1 - sum d_i^2) + sum k_j^2 = 0.
struct SemiNegWitness {
    long N = 1;
    std::vector<long> ks;
};

struct SemiNegDecision {
    bool semi_negative = false;
    std::optional<SemiNegWitness> witness;
};

/// TRUE with a witness (N = 1, ks a four-square decomposition of
/// sum d_i^2 - (n+r+1)) iff sum d_i^2 >= n+r+1; FALSE otherwise. The FALSE
/// branch is exact for n >= 2: degree 2 is generated by x, so any
/// candidate relation reads N*c1*x^2 + sum (k_j x)^2 = 0 with x^2 of
/// infinite order, impossible for c1 > 0.
SemiNegDecision is_semi_negative(const CompleteIntersection& ci);

/// All multidegrees (ascending, entries >= 2) with sum d_i^2 < n+r+1 -
/// the finitely many non-semi-negative complete intersections of complex
/// dimension n. Sorted by length, then lexicographically.
std::vector<std::vector<long>> scan_non_semi_negative(long n);

/// The power-sum characteristic number in top grade, via Newton's
/// identities over char_number_ci. Requires even n.
Int milnor_number_ci(const CompleteIntersection& ci);

}  // namespace equifix
