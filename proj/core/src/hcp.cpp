#include "equifix/hcp.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "equifix/localization.hpp"
#include "equifix/partitions.hpp"
#include "equifix/su2.hpp"

namespace equifix {
namespace {

Int abs_diff_product(const std::vector<long>& a_values, std::size_t s) {
    Int prod = 1;
    for (std::size_t t = 0; t < a_values.size(); ++t) {
        if (t == s)
            continue;
        prod *= Int(a_values[t] - a_values[s]);
    }
    return prod < 0 ? Int(-prod) : prod;
}

// Strictly increasing nonzero integers a_1 < ... < a_n with product of
// absolute values equal to remaining; every |a_i| must divide it.
void a_vectors_rec(long n, long bound, long next_min, long remaining,
                   std::vector<long>& cur, std::vector<std::vector<long>>& out,
                   SearchBudget& budget, bool& complete) {
    if (static_cast<long>(cur.size()) == n) {
        if (remaining == 1)
            out.push_back(cur);
        return;
    }
    for (long x = next_min; x <= bound; ++x) {
        if (x == 0)
            continue;
        if (!budget.tick()) {
            complete = false;
            return;
        }
        long ax = x < 0 ? -x : x;
        if (ax > remaining || remaining % ax != 0)
            continue;
        cur.push_back(x);
        a_vectors_rec(n, bound, x + 1, remaining / ax, cur, out, budget, complete);
        cur.pop_back();
        if (!complete)
            return;
    }
}

struct Assembly {
    long n;
    const WeightSet* tangent0;
    const std::vector<long>* a_values;            // a_1..a_n
    const std::vector<int>* eps;                  // eps_1..eps_n
    const std::vector<std::vector<std::vector<long>>>* factorizations;  // per point
};

FixedPointModel build_model(const Assembly& as, const std::vector<std::size_t>& pick) {
    std::vector<FixedPoint> points;
    points.emplace_back(as.tangent0->m, as.tangent0->eps, std::vector<long>{0}, true);
    for (std::size_t s = 0; s < as.a_values->size(); ++s)
        points.emplace_back((*as.factorizations)[s][pick[s]], (*as.eps)[s],
                            std::vector<long>{(*as.a_values)[s]}, false);
    return FixedPointModel(as.n, 1, 1, std::move(points));
}

bool passes_filters(const FixedPointModel& model) {
    for (const auto& mono : top_degree_monomials(model.n(), 1)) {
        Rat v = char_number(model, mono);
        if (!v.is_integer())
            return false;
        bool pure_line = mono.I.empty();
        if (pure_line && v != Rat(1))
            return false;
    }
    if (!validate(model, ValidationOptions{false, true}).empty())
        return false;
    return check_weight_identity(model);
}

std::vector<FixedPoint> canonical_key(const FixedPointModel& model) {
    std::vector<FixedPoint> key = model.points();
    std::sort(key.begin(), key.end());
    return key;
}

}  // namespace

bool check_weight_identity(const FixedPointModel& model) {
    if (model.k() != 1)
        throw std::invalid_argument("check_weight_identity: needs exactly one line bundle");
    std::vector<long> a_values;
    for (const auto& p : model.points())
        a_values.push_back(p.a[0]);
    for (std::size_t s = 0; s < model.points().size(); ++s) {
        Int lhs = abs_diff_product(a_values, s);
        Int rhs = 1;
        for (long mi : model.points()[s].m)
            rhs *= mi;
        if (lhs != rhs)
            return false;
    }
    return true;
}

EnumResult<HcpCandidate> enumerate_hcp_models(long n, SearchBudget& budget) {
    if (n < 1)
        throw std::domain_error("enumerate_hcp_models: n must be positive");
    EnumResult<HcpCandidate> result;
    std::set<std::vector<FixedPoint>> seen;

    for (const auto& tangent0 : enumerate_isolated_tangent_sets(n)) {
        long bound = 1;
        for (long mi : tangent0.m)
            bound *= mi;

        std::vector<std::vector<long>> a_lists;
        std::vector<long> scratch;
        a_vectors_rec(n, bound, -bound, bound, scratch, a_lists, budget, result.complete);
        if (!result.complete)
            break;

        const std::vector<CharMonomial> monos = top_degree_monomials(n, 1);

        for (const auto& a_values : a_lists) {
            std::vector<long> all_a = a_values;
            all_a.push_back(0);
            std::vector<Int> f_values;                 // per nonzero point
            std::vector<std::vector<std::vector<long>>> factor_lists;
            for (std::size_t s = 0; s < a_values.size(); ++s) {
                std::vector<long> others{0};
                others.insert(others.end(), a_values.begin(), a_values.end());
                Int f = abs_diff_product(others, s + 1);
                f_values.push_back(f);
                factor_lists.push_back(factorizations_into(f.get_si(), n));
            }

            // Precompute, per point and per factorization choice, the
            // eps-free contribution of that point to every top-degree
            // characteristic number; the hot loop below then screens a
            // combination with a few exact additions instead of
            // recomputing the numbers from scratch.
            std::vector<Rat> s3_contrib(monos.size());
            {
                FixedPointModel one_pt(
                    n, 1, 1,
                    {FixedPoint(tangent0.m, tangent0.eps, std::vector<long>{0}, true)});
                for (std::size_t j = 0; j < monos.size(); ++j)
                    s3_contrib[j] = char_number(one_pt, monos[j]);
            }
            std::vector<std::vector<std::vector<Rat>>> contrib(a_values.size());
            for (std::size_t s = 0; s < a_values.size(); ++s) {
                contrib[s].reserve(factor_lists[s].size());
                for (const auto& f : factor_lists[s]) {
                    FixedPointModel one_pt(
                        n, 1, 1,
                        {FixedPoint(f, 1, std::vector<long>{a_values[s]}, false)});
                    std::vector<Rat> vals(monos.size());
                    for (std::size_t j = 0; j < monos.size(); ++j)
                        vals[j] = char_number(one_pt, monos[j]);
                    contrib[s].push_back(std::move(vals));
                }
            }

            for (long pattern = 0; pattern < (1L << n); ++pattern) {
                std::vector<int> eps;
                for (long s = 0; s < n; ++s)
                    eps.push_back((pattern >> s) & 1 ? 1 : -1);

                // <x^n> depends only on eps and the products prod m = F_s,
                // so the sign pattern can be settled before factorizations.
                Rat xn(0);
                for (std::size_t s = 0; s < a_values.size(); ++s)
                    xn += Rat(eps[s]) * Rat(int_pow(Int(a_values[s]), n), f_values[s]);
                if (xn != Rat(1))
                    continue;

                Assembly as{n, &tangent0, &a_values, &eps, &factor_lists};
                std::vector<std::size_t> pick(a_values.size(), 0);
                bool done = false;
                while (!done) {
                    if (!budget.tick()) {
                        result.complete = false;
                        break;
                    }
                    bool all_integral = true;
                    for (std::size_t j = 0; j < monos.size() && all_integral; ++j) {
                        Rat v = s3_contrib[j];
                        for (std::size_t s = 0; s < pick.size(); ++s) {
                            if (eps[s] > 0)
                                v += contrib[s][pick[s]][j];
                            else
                                v -= contrib[s][pick[s]][j];
                        }
                        all_integral = v.is_integer();
                    }
                    if (all_integral) {
                        FixedPointModel model = build_model(as, pick);
                        if (passes_filters(model)) {
                            auto key = canonical_key(model);
                            if (seen.insert(key).second) {
                                HcpCandidate c{model, {}};
                                c.pontryagin_coeffs = pontryagin_class_candidates(c);
                                result.items.push_back(std::move(c));
                            }
                        }
                    }
                    // advance the mixed-radix picker
                    std::size_t i = 0;
                    while (i < pick.size()) {
                        if (++pick[i] < factor_lists[i].size())
                            break;
                        pick[i] = 0;
                        ++i;
                    }
                    done = (i == pick.size());
                }
                if (!result.complete)
                    break;
            }
            if (!result.complete)
                break;
        }
        if (!result.complete)
            break;
    }

    std::sort(result.items.begin(), result.items.end(),
              [](const HcpCandidate& x, const HcpCandidate& y) {
                  return canonical_key(x.model) < canonical_key(y.model);
              });
    return result;
}

EnumResult<HcpCandidate> enumerate_hcp_models(long n) {
    SearchBudget budget;
    return enumerate_hcp_models(n, budget);
}

std::vector<Rat> pontryagin_class_candidates(const HcpCandidate& c) {
    const auto& model = c.model;
    std::vector<Rat> out;
    for (long j = 1; 2 * j <= model.n(); ++j) {
        CharMonomial mono{{model.n() - 2 * j}, {j}};
        Rat v = char_number(model, mono);
        if (!v.is_integer())
            throw std::logic_error(
                "pontryagin_class_candidates: non-integral value escaped the filters");
        out.push_back(v);
    }
    return out;
}

}  // namespace equifix
