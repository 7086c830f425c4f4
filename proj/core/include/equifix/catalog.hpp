#pragma once

#include <vector>

#include "equifix/model.hpp"

namespace equifix {

/// Linearly rotated complex projective n-space: one fixed point per
/// rotation number w_s, tangential weights |w_t - w_s|, orientation the
/// sign of prod (w_t - w_s), and the hyperplane class lift a_s = w_s.
/// Rotation numbers must be pairwise distinct.
FixedPointModel projective_space_model(const std::vector<long>& rotation_numbers);

/// projective_space_model with rotation numbers 0..n (k = 1, N = 1).
FixedPointModel linear_cp(long n);

/// Speed-u rotation of the 2-sphere with the degree lift a = (u, -u):
/// two fixed points (m=u, eps=+1, a=u) and (m=u, eps=-1, a=-u).
FixedPointModel rotation_sphere(long u = 1);

/// Product of two rotation 2-spheres with speeds u and v; four fixed
/// points, k = 2, the factor lifts carried across.
FixedPointModel sphere_product(long u = 1, long v = 1);

/// Reference models the cross-check suites loop over (all with k >= 1).
std::vector<FixedPointModel> reference_catalog();

}  // namespace equifix
