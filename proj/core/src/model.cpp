#include "equifix/model.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "equifix/su2.hpp"

namespace equifix {
namespace {

std::string join(const std::vector<long>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            os << ",";
        os << v[i];
    }
    return os.str();
}

Int point_square_sum(const FixedPointModel& model, const FixedPoint& p) {
    Int acc = 0;
    for (long aj : p.a)
        acc += Int(aj) * Int(aj);
    for (long mi : p.m)
        acc += Int(model.multiplier()) * Int(mi) * Int(mi);
    return acc;
}

}  // namespace

FixedPoint::FixedPoint(std::vector<long> m_in, int eps_in, std::vector<long> a_in,
                       bool s3_fixed_in)
    : m(std::move(m_in)), eps(eps_in), a(std::move(a_in)), s3_fixed(s3_fixed_in) {
    if (m.empty())
        throw std::domain_error("FixedPoint: empty tangential weight list");
    for (long mi : m)
        if (mi < 1)
            throw std::domain_error(
                "FixedPoint: tangential weights must be positive (isolated fixed point)");
    if (eps != 1 && eps != -1)
        throw std::domain_error("FixedPoint: eps must be +1 or -1");
    std::sort(m.begin(), m.end());
}

bool FixedPoint::operator<(const FixedPoint& o) const {
    return std::tie(m, eps, a, s3_fixed) < std::tie(o.m, o.eps, o.a, o.s3_fixed);
}

FixedPointModel::FixedPointModel(long n, long k, long N, std::vector<FixedPoint> points,
                                 std::string label)
    : n_(n), k_(k), N_(N), points_(std::move(points)), label_(std::move(label)) {
    if (n_ < 1)
        throw std::invalid_argument("FixedPointModel: n must be positive");
    if (k_ < 0)
        throw std::invalid_argument("FixedPointModel: k must be nonnegative");
    if (N_ < 1)
        throw std::invalid_argument("FixedPointModel: N must be positive");
    if (points_.empty())
        throw std::invalid_argument("FixedPointModel: at least one fixed point required");
    for (const auto& p : points_) {
        if (static_cast<long>(p.m.size()) != n_)
            throw std::invalid_argument("FixedPointModel: point has wrong weight count");
        if (static_cast<long>(p.a.size()) != k_)
            throw std::invalid_argument("FixedPointModel: point has wrong line weight count");
    }
}

bool Violation::operator<(const Violation& o) const {
    return std::tie(point, constraint, detail) < std::tie(o.point, o.constraint, o.detail);
}

const std::vector<std::string>& constraint_names() {
    static const std::vector<std::string> names = {
        "eq1-constancy",
        "s3-line-weight-zero",
        "s3-tangent-set",
        "star-no-s3-point",
    };
    return names;
}

std::vector<Violation> validate(const FixedPointModel& model, ValidationOptions opts) {
    std::vector<Violation> out;
    auto tangent_sets = enumerate_isolated_tangent_sets(model.n());
    bool any_s3 = false;
    for (std::size_t s = 0; s < model.points().size(); ++s) {
        const auto& p = model.points()[s];
        if (!p.s3_fixed)
            continue;
        any_s3 = true;
        if (std::any_of(p.a.begin(), p.a.end(), [](long x) { return x != 0; }))
            out.push_back({s, "s3-line-weight-zero",
                           "line weights (" + join(p.a) + ") must vanish at an S3-fixed point"});
        WeightSet ws{p.m, p.eps};
        if (std::find(tangent_sets.begin(), tangent_sets.end(), ws) == tangent_sets.end())
            out.push_back({s, "s3-tangent-set",
                           "(m=(" + join(p.m) + "), eps=" + std::to_string(p.eps) +
                               ") is not an isolated S3 tangent representation"});
    }
    if (opts.require_s3_point && !any_s3)
        out.push_back({std::nullopt, "star-no-s3-point", "model has no S3-fixed point"});
    if (opts.check_eq1 && model.points().size() > 1) {
        std::vector<Int> sums;
        sums.reserve(model.points().size());
        for (const auto& p : model.points())
            sums.push_back(point_square_sum(model, p));
        bool constant = std::all_of(sums.begin(), sums.end(),
                                    [&](const Int& v) { return v == sums.front(); });
        if (!constant) {
            std::ostringstream os;
            os << "per-point values ";
            for (std::size_t i = 0; i < sums.size(); ++i) {
                if (i)
                    os << ", ";
                os << sums[i].get_str();
            }
            out.push_back({std::nullopt, "eq1-constancy", os.str()});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

long euler_characteristic(const FixedPointModel& model) {
    return static_cast<long>(model.points().size());
}

Int square_sum_constant(const FixedPointModel& model) {
    for (const auto& p : model.points()) {
        if (!p.s3_fixed)
            continue;
        Int acc = 0;
        for (long mi : p.m)
            acc += Int(model.multiplier()) * Int(mi) * Int(mi);
        return acc;
    }
    throw std::domain_error("square_sum_constant: model has no S3-fixed point");
}

FixedPointModel shifted_line_weights(const FixedPointModel& model, std::size_t j,
                                     long delta) {
    if (static_cast<long>(j) >= model.k())
        throw std::invalid_argument("shifted_line_weights: no such line bundle");
    if (delta != 0)
        for (const auto& p : model.points())
            if (p.s3_fixed)
                throw std::domain_error(
                    "shifted_line_weights: lift at an S3-fixed point is pinned to zero");
    std::vector<FixedPoint> points;
    points.reserve(model.points().size());
    for (const auto& p : model.points()) {
        std::vector<long> a = p.a;
        a[j] += delta;
        points.emplace_back(p.m, p.eps, std::move(a), p.s3_fixed);
    }
    return FixedPointModel(model.n(), model.k(), model.multiplier(), std::move(points),
                           model.label());
}

}  // namespace equifix
