#pragma once

#include <optional>
#include <string>
#include <vector>

#include "equifix/rat.hpp"

namespace equifix {

/// One isolated fixed point: positive tangential weights (ascending),
/// orientation sign, line bundle weights a_1..a_k, and whether the point
/// is fixed by the whole S3 and not just the circle.
struct FixedPoint {
    FixedPoint(std::vector<long> m_in, int eps_in, std::vector<long> a_in,
               bool s3_fixed_in = false);

    std::vector<long> m;
    int eps;
    std::vector<long> a;
    bool s3_fixed;

    bool operator==(const FixedPoint& o) const {
        return m == o.m && eps == o.eps && a == o.a && s3_fixed == o.s3_fixed;
    }
    bool operator<(const FixedPoint& o) const;
};

/// A manifold's local S1-geometry: dimension 2n, k line bundles, a
/// positive multiplier N, and one entry per fixed point. Structural
/// consistency (sizes, positivity) is enforced at construction; the
/// admissibility constraints live in validate().
class FixedPointModel {
public:
    FixedPointModel(long n, long k, long N, std::vector<FixedPoint> points,
                    std::string label = "");

    long n() const { return n_; }
    long k() const { return k_; }
    long multiplier() const { return N_; }
    const std::vector<FixedPoint>& points() const { return points_; }
    const std::string& label() const { return label_; }

private:
    long n_;
    long k_;
    long N_;
    std::vector<FixedPoint> points_;
    std::string label_;
};

/// A failed admissibility constraint; data, not an exception.
struct Violation {
    std::optional<std::size_t> point;
    std::string constraint;  // one of the constraint_names() entries
    std::string detail;

    bool operator==(const Violation& o) const {
        return point == o.point && constraint == o.constraint && detail == o.detail;
    }
    bool operator<(const Violation& o) const;
};

const std::vector<std::string>& constraint_names();

struct ValidationOptions {
    /// Check that sum a^2 + N * sum m^2 is the same at every point.
    bool check_eq1 = true;
    /// Require at least one S3-fixed point.
    bool require_s3_point = false;
};

/// Empty result means admissible under the selected options. Violations
/// are sorted and deterministic.
std::vector<Violation> validate(const FixedPointModel& model, ValidationOptions opts = {});

/// Number of fixed points.
long euler_characteristic(const FixedPointModel& model);

/// The constant value sum a^2 + N * sum m^2 takes at every point of an
/// admissible model, computed at the first S3-fixed point (where all line
/// weights vanish). Throws when the model has no S3-fixed point.
Int square_sum_constant(const FixedPointModel& model);

/// Same model with line bundle j (0-based) re-lifted: a_{s,j} += delta at
/// every point. Not applicable to S3-fixed points, whose lift is pinned
/// to weight zero; throws if the model has one and delta != 0.
FixedPointModel shifted_line_weights(const FixedPointModel& model, std::size_t j,
                                     long delta);

}  // namespace equifix
