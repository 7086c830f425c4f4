#include "equifix/catalog.hpp"

#include <set>
#include <stdexcept>
#include <string>

namespace equifix {

FixedPointModel projective_space_model(const std::vector<long>& w) {
    if (w.size() < 2)
        throw std::invalid_argument("projective_space_model: need at least two rotation numbers");
    if (std::set<long>(w.begin(), w.end()).size() != w.size())
        throw std::invalid_argument("projective_space_model: rotation numbers must be distinct");
    long n = static_cast<long>(w.size()) - 1;
    std::vector<FixedPoint> points;
    for (std::size_t s = 0; s < w.size(); ++s) {
        std::vector<long> m;
        int eps = 1;
        for (std::size_t t = 0; t < w.size(); ++t) {
            if (t == s)
                continue;
            long d = w[t] - w[s];
            m.push_back(d < 0 ? -d : d);
            if (d < 0)
                eps = -eps;
        }
        points.emplace_back(std::move(m), eps, std::vector<long>{w[s]}, false);
    }
    return FixedPointModel(n, 1, 1, std::move(points),
                           "cp" + std::to_string(n) + "-linear");
}

FixedPointModel linear_cp(long n) {
    if (n < 1)
        throw std::invalid_argument("linear_cp: n must be positive");
    std::vector<long> w;
    for (long s = 0; s <= n; ++s)
        w.push_back(s);
    return projective_space_model(w);
}

FixedPointModel rotation_sphere(long u) {
    if (u < 1)
        throw std::invalid_argument("rotation_sphere: speed must be positive");
    std::vector<FixedPoint> points;
    points.emplace_back(std::vector<long>{u}, 1, std::vector<long>{u}, false);
    points.emplace_back(std::vector<long>{u}, -1, std::vector<long>{-u}, false);
    return FixedPointModel(1, 1, 1, std::move(points), "s2-rotation");
}

FixedPointModel sphere_product(long u, long v) {
    if (u < 1 || v < 1)
        throw std::invalid_argument("sphere_product: speeds must be positive");
    std::vector<FixedPoint> points;
    for (int su : {1, -1})
        for (int sv : {1, -1})
            points.emplace_back(std::vector<long>{u, v}, su * sv,
                                std::vector<long>{su * u, sv * v}, false);
    return FixedPointModel(2, 2, 1, std::move(points), "s2xs2-rotation");
}

std::vector<FixedPointModel> reference_catalog() {
    std::vector<FixedPointModel> out;
    for (long n = 1; n <= 4; ++n)
        out.push_back(linear_cp(n));
    out.push_back(rotation_sphere(1));
    out.push_back(rotation_sphere(2));
    out.push_back(sphere_product(1, 1));
    out.push_back(sphere_product(1, 2));
    return out;
}

}  // namespace equifix
