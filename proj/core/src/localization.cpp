#include "equifix/localization.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "equifix/partitions.hpp"
#include "equifix/trunc_series.hpp"

namespace equifix {
namespace {

// e_i(m_1^2, ..., m_n^2) for i = 0..n by the usual one-variable-at-a-time
// recurrence.
std::vector<Int> elem_sym_of_squares(const std::vector<long>& m) {
    std::vector<Int> e(m.size() + 1, Int(0));
    e[0] = 1;
    for (long mi : m) {
        Int sq = Int(mi) * Int(mi);
        for (std::size_t i = e.size() - 1; i >= 1; --i)
            e[i] += sq * e[i - 1];
    }
    return e;
}

Int signed_int_pow(long base, long e) {
    return int_pow(Int(base), e);
}

void enumerate_q(long k, long budget, std::vector<long>& q,
                 std::vector<std::vector<long>>& out) {
    if (static_cast<long>(q.size()) == k) {
        long used = std::accumulate(q.begin(), q.end(), 0L);
        if ((budget - used) % 2 == 0)
            out.push_back(q);
        return;
    }
    long used = std::accumulate(q.begin(), q.end(), 0L);
    for (long v = 0; v <= budget - used; ++v) {
        q.push_back(v);
        enumerate_q(k, budget, q, out);
        q.pop_back();
    }
}

}  // namespace

long CharMonomial::degree() const {
    long d = std::accumulate(q.begin(), q.end(), 0L);
    for (long i : I)
        d += 2 * i;
    return d;
}

bool CharMonomial::operator<(const CharMonomial& o) const {
    long gi = std::accumulate(I.begin(), I.end(), 0L);
    long go = std::accumulate(o.I.begin(), o.I.end(), 0L);
    if (gi != go)
        return gi < go;
    if (q != o.q)
        return q < o.q;
    return I < o.I;
}

std::string CharMonomial::to_string() const {
    std::vector<std::string> factors;
    for (std::size_t j = 0; j < q.size(); ++j) {
        if (q[j] == 0)
            continue;
        std::string f = q.size() == 1 ? "x" : "x" + std::to_string(j + 1);
        if (q[j] != 1)
            f += "^" + std::to_string(q[j]);
        factors.push_back(f);
    }
    std::size_t i = 0;
    while (i < I.size()) {
        std::size_t j = i;
        while (j < I.size() && I[j] == I[i])
            ++j;
        std::string f = "p" + std::to_string(I[i]);
        if (j - i > 1)
            f += "^" + std::to_string(j - i);
        factors.push_back(f);
        i = j;
    }
    if (factors.empty())
        return "1";
    std::ostringstream os;
    for (std::size_t t = 0; t < factors.size(); ++t) {
        if (t)
            os << "*";
        os << factors[t];
    }
    return os.str();
}

std::vector<CharMonomial> top_degree_monomials(long n, long k) {
    std::vector<std::vector<long>> qs;
    std::vector<long> scratch;
    enumerate_q(k, n, scratch, qs);
    std::vector<CharMonomial> out;
    for (const auto& q : qs) {
        long used = std::accumulate(q.begin(), q.end(), 0L);
        for (const auto& I : partitions_of((n - used) / 2))
            out.push_back(CharMonomial{q, I});
    }
    std::sort(out.begin(), out.end());
    return out;
}

RatFn local_signature_term(const FixedPoint& p) {
    LaurentPoly num(p.eps);
    LaurentPoly den = LaurentPoly::one();
    for (long mi : p.m) {
        num *= LaurentPoly::monomial(mi) + LaurentPoly::one();
        den *= LaurentPoly::monomial(mi) - LaurentPoly::one();
    }
    return RatFn(num, den);
}

LaurentPoly char_at(const BundleExpr& e, const FixedPoint& p) {
    if (e.k() != static_cast<long>(p.a.size()))
        throw std::invalid_argument("char_at: twist and point disagree on line bundle count");
    LaurentPoly tangent_char;
    for (long mi : p.m)
        tangent_char += LaurentPoly::monomial(mi) + LaurentPoly::monomial(-mi);
    LaurentPoly acc;
    for (const auto& [mono, c] : e.terms()) {
        long shift = 0;
        for (std::size_t j = 0; j < mono.line.size(); ++j)
            shift += mono.line[j] * p.a[j];
        LaurentPoly term = LaurentPoly::monomial(shift, Rat(c));
        term *= tangent_char.pow(mono.tangent);
        acc += term;
    }
    return acc;
}

RatFn equivariant_twisted_signature(const FixedPointModel& model, const BundleExpr& e) {
    RatFn acc;
    for (const auto& p : model.points())
        acc += local_signature_term(p) * RatFn::from_poly(char_at(e, p));
    return acc;
}

Rat nonequivariant_index(const FixedPointModel& model, const BundleExpr& e) {
    return equivariant_twisted_signature(model, e).limit_at_one();
}

Rat cohom_twisted_signature(const FixedPointModel& model, const BundleExpr& e) {
    const int order = static_cast<int>(2 * model.n() + 2);
    Rat acc(0);
    for (const auto& p : model.points()) {
        // prod_i (1 + e^{-m h}) / (1 - e^{-m h}) = h^{-n} * prod_i N_i / D_i
        // with N_i = 1 + e^{-m h} and D_i = (1 - e^{-m h}) / h regular.
        TruncSeries regular = TruncSeries::constant(order, Rat(1));
        for (long mi : p.m) {
            TruncSeries em = exp_series(order + 1, Rat(-mi));
            TruncSeries numer(order);
            {
                std::vector<Rat> c(static_cast<std::size_t>(order) + 1);
                for (int i = 0; i <= order; ++i)
                    c[static_cast<std::size_t>(i)] = (i == 0 ? Rat(1) : Rat(0)) + em.coeff(i);
                numer = TruncSeries(order, std::move(c));
            }
            TruncSeries denom(order);
            {
                std::vector<Rat> c(static_cast<std::size_t>(order) + 1);
                for (int i = 0; i <= order; ++i)
                    c[static_cast<std::size_t>(i)] = -em.coeff(i + 1);
                denom = TruncSeries(order, std::move(c));
            }
            regular = regular * numer * denom.inverse();
        }
        TruncSeries twist(order);
        const LaurentPoly character = char_at(e, p);
        for (const auto& [exp, c] : character.terms())
            twist = twist + exp_series(order, Rat(exp)).scaled(c);
        TruncSeries total = regular * twist;
        // h^{-n} times the series: the h^0 coefficient is coeff n.
        acc += Rat(p.eps) * total.coeff(static_cast<int>(model.n()));
    }
    return acc;
}

Rat char_number(const FixedPointModel& model, const CharMonomial& mono) {
    if (static_cast<long>(mono.q.size()) != model.k())
        throw std::invalid_argument("char_number: monomial has wrong line class count");
    if (mono.degree() != model.n())
        throw std::invalid_argument("char_number: monomial degree != n");
    Rat acc(0);
    for (const auto& p : model.points()) {
        Int numer = 1;
        for (std::size_t j = 0; j < mono.q.size(); ++j)
            numer *= signed_int_pow(p.a[j], mono.q[j]);
        auto e = elem_sym_of_squares(p.m);
        for (long i : mono.I)
            numer *= e[static_cast<std::size_t>(i)];
        Int denom = 1;
        for (long mi : p.m)
            denom *= mi;
        acc += Rat(p.eps) * Rat(numer, denom);
    }
    return acc;
}

std::map<std::vector<long>, Rat> pontryagin_numbers(const FixedPointModel& model) {
    std::map<std::vector<long>, Rat> out;
    if (model.n() % 2 != 0)
        return out;
    for (const auto& I : partitions_of(model.n() / 2)) {
        CharMonomial mono{std::vector<long>(static_cast<std::size_t>(model.k()), 0), I};
        out.emplace(I, char_number(model, mono));
    }
    return out;
}

Rat milnor_number(const FixedPointModel& model) {
    if (model.n() % 2 != 0)
        throw std::domain_error("milnor_number: n must be even");
    Rat acc(0);
    for (const auto& p : model.points()) {
        Int numer = 0;
        for (long mi : p.m)
            numer += int_pow(Int(mi), model.n());
        Int denom = 1;
        for (long mi : p.m)
            denom *= mi;
        acc += Rat(p.eps) * Rat(numer, denom);
    }
    return acc;
}

}  // namespace equifix
