#pragma once

#include <vector>

#include "equifix/graded_poly.hpp"

namespace equifix {

/// L1..Lt of the multiplicative sequence attached to u/tanh(u), each
/// expressed in p1..pt. Lt is homogeneous of grade t.
std::vector<GradedPoly> l_polynomials(long t);

/// The power sum of the squared formal roots in grade t (the class
/// sum u_i^{2t}), written in p1..pt through Newton's identities.
GradedPoly newton_s_from_p(long t);

/// Coefficient of u^{2j} in u/tanh(u): B_{2j} * 2^{2j} / (2j)!.
Rat tanh_genus_coefficient(long j);

}  // namespace equifix
