#pragma once

#include <map>
#include <utility>
#include <vector>

#include "equifix/budget.hpp"
#include "equifix/localization.hpp"
#include "equifix/model.hpp"

namespace equifix {

/// Complete vector of top-degree characteristic numbers in canonical
/// monomial order; equal fingerprints mean the models are not separated
/// by any rational bordism invariant this artifact computes.
using Fingerprint = std::map<CharMonomial, Rat>;

/// Every model with at most C fixed points, k line bundles and multiplier
/// N that passes all admissibility constraints: one S3-fixed point (line
/// weights zero, tangent set from the S3 list), all other points solving
/// sum a^2 + N sum m^2 = C'' for the C'' fixed by the S3 point.
/// Deduplicated by point multiset, deterministic order, every output
/// passes validate.
EnumResult<FixedPointModel> enumerate_admissible_models(long n, long C, long k, long N,
                                                        SearchBudget& budget);
EnumResult<FixedPointModel> enumerate_admissible_models(long n, long C, long k, long N);

Fingerprint bordism_fingerprint(const FixedPointModel& model);

/// Split into (kept, rejected): kept models have all fingerprint values
/// integral, and in dimension 4 (n = 2) a p1-number divisible by 3.
std::pair<std::vector<FixedPointModel>, std::vector<FixedPointModel>> integrality_filter(
    const std::vector<FixedPointModel>& models);

/// Group by exact fingerprint equality; groups ordered by fingerprint.
std::vector<std::vector<FixedPointModel>> fingerprint_partition(
    const std::vector<FixedPointModel>& models);

}  // namespace equifix
