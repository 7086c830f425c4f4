#include "equifix/finiteness.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "equifix/su2.hpp"

namespace equifix {
namespace {

struct PointType {
    std::vector<long> a;
    std::vector<long> m;
    int eps;
};

long isqrt(long s) {
    long r = 0;
    while ((r + 1) * (r + 1) <= s)
        ++r;
    return r;
}

// Ascending positive m-tuples with N * sum m^2 exactly `target`.
bool m_tuples_rec(long slots, long N, long min_m, long target, std::vector<long>& cur,
                  std::vector<std::vector<long>>& out, SearchBudget& budget) {
    if (slots == 0) {
        if (target == 0)
            out.push_back(cur);
        return true;
    }
    for (long m = min_m; N * m * m * slots <= target; ++m) {
        if (!budget.tick())
            return false;
        cur.push_back(m);
        bool ok = m_tuples_rec(slots - 1, N, m, target - N * m * m, cur, out, budget);
        cur.pop_back();
        if (!ok)
            return false;
    }
    return true;
}

// Integer a-vectors (componentwise in [-A, A]) with sum of squares at most
// `max_sq`, paired with every m-solution of the remaining square sum.
bool point_types_rec(long k, long n, long N, long cpp, std::vector<long>& a,
                     std::vector<PointType>& out, SearchBudget& budget) {
    if (static_cast<long>(a.size()) == k) {
        long used = 0;
        for (long aj : a)
            used += aj * aj;
        std::vector<std::vector<long>> ms;
        std::vector<long> scratch;
        if (!m_tuples_rec(n, N, 1, cpp - used, scratch, ms, budget))
            return false;
        for (const auto& m : ms)
            for (int eps : {-1, 1})
                out.push_back(PointType{a, m, eps});
        return true;
    }
    long used = 0;
    for (long aj : a)
        used += aj * aj;
    long room = cpp - N * n - used;  // the m-part needs at least N*n
    if (room < 0)
        return true;
    long bound = isqrt(room);
    for (long v = -bound; v <= bound; ++v) {
        if (!budget.tick())
            return false;
        a.push_back(v);
        bool ok = point_types_rec(k, n, N, cpp, a, out, budget);
        a.pop_back();
        if (!ok)
            return false;
    }
    return true;
}

bool combos_rec(const std::vector<PointType>& types, std::size_t need, std::size_t start,
                std::vector<std::size_t>& cur, std::vector<std::vector<std::size_t>>& out,
                SearchBudget& budget) {
    if (need == 0) {
        out.push_back(cur);
        return true;
    }
    for (std::size_t i = start; i < types.size(); ++i) {
        if (!budget.tick())
            return false;
        cur.push_back(i);
        bool ok = combos_rec(types, need - 1, i, cur, out, budget);
        cur.pop_back();
        if (!ok)
            return false;
    }
    return true;
}

std::vector<FixedPoint> canonical_key(const FixedPointModel& model) {
    std::vector<FixedPoint> key = model.points();
    std::sort(key.begin(), key.end());
    return key;
}

}  // namespace

EnumResult<FixedPointModel> enumerate_admissible_models(long n, long C, long k, long N,
                                                        SearchBudget& budget) {
    if (n < 1 || C < 1 || k < 0 || N < 1)
        throw std::domain_error("enumerate_admissible_models: need n,C,N >= 1 and k >= 0");
    EnumResult<FixedPointModel> result;
    std::set<std::vector<FixedPoint>> seen;

    for (const auto& tangent : enumerate_isolated_tangent_sets(n)) {
        long cpp = 0;
        for (long mi : tangent.m)
            cpp += N * mi * mi;
        FixedPoint s3_point(tangent.m, tangent.eps,
                            std::vector<long>(static_cast<std::size_t>(k), 0), true);

        std::vector<PointType> types;
        std::vector<long> scratch;
        if (!point_types_rec(k, n, N, cpp, scratch, types, budget)) {
            result.complete = false;
            break;
        }

        for (long chi = 1; chi <= C; ++chi) {
            std::vector<std::vector<std::size_t>> combos;
            std::vector<std::size_t> cur;
            if (!combos_rec(types, static_cast<std::size_t>(chi - 1), 0, cur, combos,
                            budget)) {
                result.complete = false;
                break;
            }
            for (const auto& combo : combos) {
                std::vector<FixedPoint> points{s3_point};
                for (std::size_t idx : combo)
                    points.emplace_back(types[idx].m, types[idx].eps, types[idx].a, false);
                FixedPointModel model(n, k, N, std::move(points));
                if (seen.insert(canonical_key(model)).second)
                    result.items.push_back(std::move(model));
            }
        }
        if (!result.complete)
            break;
    }

    std::sort(result.items.begin(), result.items.end(),
              [](const FixedPointModel& x, const FixedPointModel& y) {
                  auto kx = canonical_key(x);
                  auto ky = canonical_key(y);
                  return kx.size() != ky.size() ? kx.size() < ky.size() : kx < ky;
              });
    return result;
}

EnumResult<FixedPointModel> enumerate_admissible_models(long n, long C, long k, long N) {
    SearchBudget budget;
    return enumerate_admissible_models(n, C, k, N, budget);
}

Fingerprint bordism_fingerprint(const FixedPointModel& model) {
    Fingerprint fp;
    for (const auto& mono : top_degree_monomials(model.n(), model.k()))
        fp.emplace(mono, char_number(model, mono));
    return fp;
}

std::pair<std::vector<FixedPointModel>, std::vector<FixedPointModel>> integrality_filter(
    const std::vector<FixedPointModel>& models) {
    std::vector<FixedPointModel> kept;
    std::vector<FixedPointModel> rejected;
    for (const auto& model : models) {
        bool ok = true;
        for (const auto& [mono, value] : bordism_fingerprint(model)) {
            if (!value.is_integer()) {
                ok = false;
                break;
            }
        }
        if (ok && model.n() == 2) {
            CharMonomial p1{std::vector<long>(static_cast<std::size_t>(model.k()), 0), {1}};
            Rat v = char_number(model, p1);
            if (!v.is_integer() || v.numerator() % 3 != 0)
                ok = false;
        }
        (ok ? kept : rejected).push_back(model);
    }
    return {kept, rejected};
}

std::vector<std::vector<FixedPointModel>> fingerprint_partition(
    const std::vector<FixedPointModel>& models) {
    std::vector<std::pair<Fingerprint, FixedPointModel>> tagged;
    tagged.reserve(models.size());
    for (const auto& model : models)
        tagged.emplace_back(bordism_fingerprint(model), model);
    std::sort(tagged.begin(), tagged.end(), [](const auto& x, const auto& y) {
        if (x.first != y.first)
            return x.first < y.first;
        return canonical_key(x.second) < canonical_key(y.second);
    });
    std::vector<std::vector<FixedPointModel>> groups;
    for (std::size_t i = 0; i < tagged.size(); ++i) {
        if (i == 0 || tagged[i].first != tagged[i - 1].first)
            groups.emplace_back();
        groups.back().push_back(tagged[i].second);
    }
    return groups;
}

}  // namespace equifix
