#include "equifix/su2.hpp"

#include <algorithm>
#include <stdexcept>

#include "equifix/partitions.hpp"

namespace equifix {

std::vector<long> irrep_weights(long d) {
    if (d < 1)
        throw std::domain_error("irrep_weights: dimension must be positive");
    std::vector<long> w;
    w.reserve(static_cast<std::size_t>(d));
    for (long x = d - 1; x >= -(d - 1); x -= 2)
        w.push_back(x);
    return w;
}

std::vector<WeightSet> enumerate_isolated_tangent_sets(long n) {
    if (n < 1)
        throw std::domain_error("enumerate_isolated_tangent_sets: n must be positive");
    std::vector<WeightSet> out;
    if (n % 2 != 0)
        return out;
    for (const auto& half : partitions_of(n / 2)) {
        WeightSet ws;
        int sign = 1;
        for (long part : half) {
            for (long w : irrep_weights(2 * part)) {
                ws.m.push_back(w < 0 ? -w : w);
                if (w < 0)
                    sign = -sign;
            }
        }
        std::sort(ws.m.begin(), ws.m.end());
        ws.eps = sign;
        out.push_back(std::move(ws));
    }
    std::sort(out.begin(), out.end());
    return out;
}

long max_weight_product(long n) {
    long best = 0;
    for (const auto& ws : enumerate_isolated_tangent_sets(n)) {
        long prod = 1;
        for (long w : ws.m)
            prod *= w;
        best = std::max(best, prod);
    }
    return best;
}

}  // namespace equifix
