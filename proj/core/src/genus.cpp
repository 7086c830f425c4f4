#include "equifix/genus.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

namespace equifix {
namespace {

// Dense-exponent multivariate scratch polynomial, used only to expand the
// generating series and peel it back onto elementary symmetric functions.
using Expo = std::vector<int>;
using MultiPoly = std::map<Expo, Rat>;

int total_deg(const Expo& e) {
    return std::accumulate(e.begin(), e.end(), 0);
}

void mp_add(MultiPoly& p, const Expo& e, const Rat& c) {
    auto it = p.find(e);
    Rat v = (it == p.end() ? Rat(0) : it->second) + c;
    if (v.is_zero()) {
        if (it != p.end())
            p.erase(it);
    } else {
        p[e] = v;
    }
}

MultiPoly mp_mul_trunc(const MultiPoly& a, const MultiPoly& b, int maxdeg) {
    MultiPoly r;
    for (const auto& [e1, c1] : a)
        for (const auto& [e2, c2] : b) {
            if (total_deg(e1) + total_deg(e2) > maxdeg)
                continue;
            Expo e = e1;
            for (std::size_t i = 0; i < e.size(); ++i)
                e[i] += e2[i];
            mp_add(r, e, c1 * c2);
        }
    return r;
}

void subsets_rec(int nvars, int i, int start, Expo& cur, MultiPoly& out) {
    if (i == 0) {
        out.emplace(cur, Rat(1));
        return;
    }
    for (int v = start; v <= nvars - i; ++v) {
        cur[static_cast<std::size_t>(v)] = 1;
        subsets_rec(nvars, i - 1, v + 1, cur, out);
        cur[static_cast<std::size_t>(v)] = 0;
    }
}

MultiPoly elem_sym(int nvars, int i) {
    MultiPoly out;
    Expo cur(static_cast<std::size_t>(nvars), 0);
    subsets_rec(nvars, i, 0, cur, out);
    return out;
}

MultiPoly homogeneous_part(const MultiPoly& p, int grade) {
    MultiPoly out;
    for (const auto& [e, c] : p)
        if (total_deg(e) == grade)
            out.emplace(e, c);
    return out;
}

Int factorial(long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

// Rewrite a symmetric polynomial as a polynomial in e_1..e_nvars by
// repeatedly subtracting the elementary product matching the
// lexicographically greatest monomial.
GradedPoly to_elementary_basis(MultiPoly f, int nvars) {
    GradedPoly out;
    while (!f.empty()) {
        const auto& [lead, c0] = *f.rbegin();
        Rat c = c0;
        std::vector<long> partition;
        MultiPoly e_term{{Expo(static_cast<std::size_t>(nvars), 0), Rat(1)}};
        for (int i = 1; i <= nvars; ++i) {
            int next = i < nvars ? lead[static_cast<std::size_t>(i)] : 0;
            int count = lead[static_cast<std::size_t>(i) - 1] - next;
            if (count < 0)
                throw std::logic_error("to_elementary_basis: input not symmetric");
            for (int r = 0; r < count; ++r)
                partition.push_back(i);
            auto ei = elem_sym(nvars, i);
            for (int r = 0; r < count; ++r)
                e_term = mp_mul_trunc(e_term, ei, total_deg(lead));
        }
        out += GradedPoly::monomial(partition, c);
        for (const auto& [e, v] : e_term)
            mp_add(f, e, -(c * v));
    }
    return out;
}

}  // namespace

Rat tanh_genus_coefficient(long j) {
    if (j < 0)
        throw std::domain_error("tanh_genus_coefficient: negative index");
    if (j == 0)
        return Rat(1);
    return bernoulli(static_cast<int>(2 * j)) * Rat(int_pow(2, 2 * j)) /
           Rat(factorial(2 * j));
}

std::vector<GradedPoly> l_polynomials(long t) {
    if (t < 1)
        throw std::domain_error("l_polynomials: t must be positive");
    int nvars = static_cast<int>(t);
    std::vector<Rat> q(static_cast<std::size_t>(t) + 1);
    for (long j = 0; j <= t; ++j)
        q[static_cast<std::size_t>(j)] = tanh_genus_coefficient(j);

    MultiPoly product{{Expo(static_cast<std::size_t>(nvars), 0), Rat(1)}};
    for (int v = 0; v < nvars; ++v) {
        MultiPoly factor;
        for (long j = 0; j <= t; ++j) {
            Expo e(static_cast<std::size_t>(nvars), 0);
            e[static_cast<std::size_t>(v)] = static_cast<int>(j);
            factor.emplace(e, q[static_cast<std::size_t>(j)]);
        }
        product = mp_mul_trunc(product, factor, nvars);
    }

    std::vector<GradedPoly> out;
    for (int g = 1; g <= nvars; ++g)
        out.push_back(to_elementary_basis(homogeneous_part(product, g), nvars));
    return out;
}

GradedPoly newton_s_from_p(long t) {
    if (t < 1)
        throw std::domain_error("newton_s_from_p: t must be positive");
    std::vector<GradedPoly> s(static_cast<std::size_t>(t) + 1);
    for (long k = 1; k <= t; ++k) {
        GradedPoly acc;
        for (long i = 1; i < k; ++i) {
            GradedPoly term = GradedPoly::p(i) * s[static_cast<std::size_t>(k - i)];
            acc += (i % 2 == 1) ? term : -term;
        }
        GradedPoly tail = GradedPoly::monomial({k}, Rat(k));
        acc += (k % 2 == 1) ? tail : -tail;
        s[static_cast<std::size_t>(k)] = acc;
    }
    return s[static_cast<std::size_t>(t)];
}

}  // namespace equifix
