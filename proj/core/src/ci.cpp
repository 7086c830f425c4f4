#include "equifix/ci.hpp"

#include <algorithm>
#include <stdexcept>

#include "equifix/genus.hpp"
#include "equifix/partitions.hpp"

namespace equifix {
namespace {

// (1 + c z)^e as a truncated series in z, any integer e.
TruncSeries binomial_series(int order, const Int& c, long e) {
    std::vector<Rat> lin(static_cast<std::size_t>(order) + 1, Rat(0));
    lin[0] = Rat(1);
    if (order >= 1)
        lin[1] = Rat(c);
    return TruncSeries(order, std::move(lin)).pow(e);
}

Rat char_number_rat(const CompleteIntersection& ci, long q, std::vector<long> I) {
    if (q < 0)
        throw std::invalid_argument("char_number_ci: negative line class power");
    std::sort(I.begin(), I.end());
    long grade = 0;
    for (long i : I) {
        if (i < 1)
            throw std::invalid_argument("char_number_ci: partition parts must be >= 1");
        grade += i;
    }
    if (q + 2 * grade != ci.n)
        throw std::invalid_argument("char_number_ci: monomial degree != n");
    TruncSeries p = total_pontryagin_series(ci);
    Rat coeff(1);
    for (long i : I)
        coeff *= p.coeff(static_cast<int>(i));
    return coeff * Rat(degree(ci));
}

void scan_rec(long n, long r, long min_d, long sum_sq, std::vector<long>& cur,
              std::vector<std::vector<long>>& out) {
    if (static_cast<long>(cur.size()) == r) {
        out.push_back(cur);
        return;
    }
    long remaining = r - static_cast<long>(cur.size());
    for (long d = min_d;; ++d) {
        // all later degrees are >= d, so d^2 * remaining must stay under bound
        if (sum_sq + d * d * remaining >= n + r + 1)
            break;
        cur.push_back(d);
        scan_rec(n, r, d, sum_sq + d * d, cur, out);
        cur.pop_back();
    }
}

}  // namespace

CompleteIntersection::CompleteIntersection(long n_in, std::vector<long> degrees_in)
    : n(n_in), degrees(std::move(degrees_in)) {
    if (n < 1)
        throw std::invalid_argument("CompleteIntersection: n must be positive");
    if (degrees.empty())
        throw std::invalid_argument("CompleteIntersection: need at least one degree");
    for (long d : degrees)
        if (d < 2)
            throw std::invalid_argument("CompleteIntersection: degrees must be >= 2");
    std::sort(degrees.begin(), degrees.end());
}

TruncSeries total_pontryagin_series(const CompleteIntersection& ci) {
    int order = static_cast<int>(ci.n / 2);
    TruncSeries s = binomial_series(order, 1, ci.n + ci.r() + 1);
    for (long d : ci.degrees)
        s = s * binomial_series(order, Int(d) * Int(d), -1);
    return s;
}

Int degree(const CompleteIntersection& ci) {
    Int prod = 1;
    for (long d : ci.degrees)
        prod *= d;
    return prod;
}

Int char_number_ci(const CompleteIntersection& ci, long q, const std::vector<long>& I) {
    Rat v = char_number_rat(ci, q, I);
    if (!v.is_integer())
        throw std::logic_error("char_number_ci: non-integral value");
    return v.numerator();
}

Int signature_ci(const CompleteIntersection& ci) {
    if (ci.n % 2 != 0)
        throw std::domain_error("signature_ci: n must be even");
    long t = ci.n / 2;
    GradedPoly l = l_polynomials(t).back();
    Rat v = l.evaluate_monomials(
        [&](const std::vector<long>& I) { return char_number_rat(ci, 0, I); });
    if (!v.is_integer())
        throw std::logic_error("signature_ci: non-integral signature");
    return v.numerator();
}

Int euler_characteristic_ci(const CompleteIntersection& ci) {
    int order = static_cast<int>(ci.n);
    TruncSeries s = binomial_series(order, 1, ci.n + ci.r() + 1);
    for (long d : ci.degrees)
        s = s * binomial_series(order, d, -1);
    Rat v = s.coeff(order) * Rat(degree(ci));
    if (!v.is_integer())
        throw std::logic_error("euler_characteristic_ci: non-integral value");
    return v.numerator();
}

SemiNegDecision is_semi_negative(const CompleteIntersection& ci) {
    Int sum_sq = 0;
    for (long d : ci.degrees)
        sum_sq += Int(d) * Int(d);
    Int deficit = sum_sq - Int(ci.n + ci.r() + 1);
    if (deficit < 0)
        return {false, std::nullopt};
    SemiNegWitness w;
    w.N = 1;
    w.ks = four_square_decomposition(deficit.get_si());
    return {true, w};
}

std::vector<std::vector<long>> scan_non_semi_negative(long n) {
    if (n < 2)
        throw std::domain_error("scan_non_semi_negative: n must be >= 2");
    std::vector<std::vector<long>> out;
    // sum d^2 >= 4r forces 4r < n+r+1 for anything to show up.
    for (long r = 1; 4 * r < n + r + 1; ++r) {
        std::vector<long> cur;
        scan_rec(n, r, 2, 0, cur, out);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return out;
}

Int milnor_number_ci(const CompleteIntersection& ci) {
    if (ci.n % 2 != 0)
        throw std::domain_error("milnor_number_ci: n must be even");
    GradedPoly s = newton_s_from_p(ci.n / 2);
    Rat v = s.evaluate_monomials(
        [&](const std::vector<long>& I) { return char_number_rat(ci, 0, I); });
    if (!v.is_integer())
        throw std::logic_error("milnor_number_ci: non-integral value");
    return v.numerator();
}

}  // namespace equifix
