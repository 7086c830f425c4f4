#include "equifix/graded_poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace equifix {

void GradedPoly::add(const std::vector<long>& partition, const Rat& c) {
    auto it = terms_.find(partition);
    Rat v = (it == terms_.end() ? Rat(0) : it->second) + c;
    if (v.is_zero()) {
        if (it != terms_.end())
            terms_.erase(it);
    } else {
        terms_[partition] = v;
    }
}

GradedPoly GradedPoly::monomial(std::vector<long> partition, const Rat& c) {
    for (long part : partition)
        if (part < 1)
            throw std::invalid_argument("GradedPoly: partition parts must be >= 1");
    std::sort(partition.begin(), partition.end());
    GradedPoly g;
    g.add(partition, c);
    return g;
}

Rat GradedPoly::coeff(std::vector<long> partition) const {
    std::sort(partition.begin(), partition.end());
    auto it = terms_.find(partition);
    return it == terms_.end() ? Rat(0) : it->second;
}

GradedPoly GradedPoly::operator-() const {
    GradedPoly r;
    for (const auto& [part, c] : terms_)
        r.terms_.emplace(part, -c);
    return r;
}

GradedPoly GradedPoly::operator+(const GradedPoly& o) const {
    GradedPoly r = *this;
    for (const auto& [part, c] : o.terms_)
        r.add(part, c);
    return r;
}

GradedPoly GradedPoly::operator-(const GradedPoly& o) const {
    GradedPoly r = *this;
    for (const auto& [part, c] : o.terms_)
        r.add(part, -c);
    return r;
}

GradedPoly GradedPoly::operator*(const GradedPoly& o) const {
    GradedPoly r;
    for (const auto& [p1, c1] : terms_)
        for (const auto& [p2, c2] : o.terms_) {
            std::vector<long> prod = p1;
            prod.insert(prod.end(), p2.begin(), p2.end());
            std::sort(prod.begin(), prod.end());
            r.add(prod, c1 * c2);
        }
    return r;
}

GradedPoly GradedPoly::scaled(const Rat& c) const {
    GradedPoly r;
    if (c.is_zero())
        return r;
    for (const auto& [part, v] : terms_)
        r.terms_.emplace(part, v * c);
    return r;
}

bool GradedPoly::is_homogeneous(long grade) const {
    for (const auto& [part, c] : terms_) {
        long g = std::accumulate(part.begin(), part.end(), 0L);
        if (g != grade)
            return false;
    }
    return true;
}

Rat GradedPoly::evaluate_monomials(
    const std::function<Rat(const std::vector<long>&)>& value) const {
    Rat acc(0);
    for (const auto& [part, c] : terms_)
        acc += c * value(part);
    return acc;
}

Rat GradedPoly::evaluate(const std::function<Rat(long)>& value_of_p) const {
    return evaluate_monomials([&](const std::vector<long>& part) {
        Rat prod(1);
        for (long j : part)
            prod *= value_of_p(j);
        return prod;
    });
}

std::string GradedPoly::to_string() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [part, c] : terms_) {
        if (first) {
            if (c.sign() < 0)
                os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        Rat mag = c.abs();
        if (part.empty()) {
            os << mag.to_string();
            continue;
        }
        bool unit = (mag == Rat(1));
        if (!unit)
            os << mag.to_string() << "*";
        std::size_t i = 0;
        bool wrote = false;
        while (i < part.size()) {
            std::size_t j = i;
            while (j < part.size() && part[j] == part[i])
                ++j;
            if (wrote)
                os << "*";
            os << "p" << part[i];
            if (j - i > 1)
                os << "^" << (j - i);
            wrote = true;
            i = j;
        }
    }
    return os.str();
}

}  // namespace equifix
