#include "equifix/partitions.hpp"

#include <stdexcept>

namespace equifix {
namespace {

void partition_rec(long n, long min_part, std::vector<long>& cur,
                   std::vector<std::vector<long>>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (long part = min_part; part <= n; ++part) {
        cur.push_back(part);
        partition_rec(n - part, part, cur, out);
        cur.pop_back();
    }
}

void factor_rec(long value, long parts, long min_factor, std::vector<long>& cur,
                std::vector<std::vector<long>>& out) {
    if (parts == 1) {
        if (value >= min_factor) {
            cur.push_back(value);
            out.push_back(cur);
            cur.pop_back();
        }
        return;
    }
    for (long f = min_factor; f <= value; ++f) {
        if (value % f != 0)
            continue;
        cur.push_back(f);
        factor_rec(value / f, parts - 1, f, cur, out);
        cur.pop_back();
    }
}

long isqrt(long s) {
    long r = 0;
    while ((r + 1) * (r + 1) <= s)
        ++r;
    return r;
}

}  // namespace

std::vector<std::vector<long>> partitions_of(long n) {
    if (n < 0)
        throw std::domain_error("partitions_of: negative n");
    std::vector<std::vector<long>> out;
    std::vector<long> cur;
    partition_rec(n, 1, cur, out);
    return out;
}

std::vector<std::vector<long>> factorizations_into(long value, long parts) {
    if (value < 1 || parts < 1)
        throw std::domain_error("factorizations_into: value and parts must be positive");
    std::vector<std::vector<long>> out;
    std::vector<long> cur;
    factor_rec(value, parts, 1, cur, out);
    return out;
}

std::vector<long> four_square_decomposition(long s) {
    if (s < 0)
        throw std::domain_error("four_square_decomposition: negative input");
    long top = isqrt(s);
    // a is the largest entry; scanning a, then b, then c ascending yields
    // the lexicographically smallest descending tuple.
    for (long a = 0; a <= top; ++a) {
        long ra = s - a * a;
        if (ra > 3 * a * a)
            continue;
        for (long b = 0; b <= a; ++b) {
            long rb = ra - b * b;
            if (rb < 0)
                break;
            if (rb > 2 * b * b)
                continue;
            for (long c = 0; c <= b; ++c) {
                long rc = rb - c * c;
                if (rc < 0)
                    break;
                long d = isqrt(rc);
                if (d * d == rc && d <= c) {
                    std::vector<long> out;
                    for (long x : {a, b, c, d})
                        if (x > 0)
                            out.push_back(x);
                    return out;
                }
            }
        }
    }
    throw std::logic_error("four_square_decomposition: unreachable");
}

}  // namespace equifix
