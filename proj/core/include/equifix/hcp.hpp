#pragma once

#include <vector>

#include "equifix/budget.hpp"
#include "equifix/model.hpp"
#include "equifix/rat.hpp"

namespace equifix {

/// One admissible local geometry for a cohomology-CPn circle action: the
/// model (k = 1, n+1 points, the S3-fixed point carrying a = 0) plus the
/// coefficients c_j of its Pontryagin classes p_j = c_j x^{2j}.
struct HcpCandidate {
    FixedPointModel model;
    std::vector<Rat> pontryagin_coeffs;  // c_1 .. c_{n/2}
};

/// Weight identity for a single line bundle generating degree 2: at every
/// point s, |prod_{t != s} (a_t - a_s)| = prod_i m_{s,i}. Repeated
/// a-values zero the left side and fail the identity. Requires k = 1.
bool check_weight_identity(const FixedPointModel& model);

/// Exhaustive desk-scale enumeration of the admissible weight systems:
/// pick the S3 tangent set, solve the weight identity for the remaining
/// line weights and tangential weights, keep the systems whose top-degree
/// characteristic numbers are integral with <x^n> = 1, deduplicate by
/// point multiset. Even n only (odd n has no isolated S3 tangent set).
EnumResult<HcpCandidate> enumerate_hcp_models(long n, SearchBudget& budget);
EnumResult<HcpCandidate> enumerate_hcp_models(long n);

/// Recompute c_j = <x^{n-2j} p_j> for j = 1..n/2 from the candidate's
/// model; throws std::logic_error if a value is non-integral, which the
/// enumeration filters are supposed to make impossible.
std::vector<Rat> pontryagin_class_candidates(const HcpCandidate& c);

}  // namespace equifix
