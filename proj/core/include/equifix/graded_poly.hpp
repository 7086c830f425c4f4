#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "equifix/rat.hpp"

namespace equifix {

/// Polynomial in the formal symbols p1, p2, ... with rational coefficients.
/// A monomial is a partition: the ascending multiset of indices whose
/// product it is, so p1^2*p2 is (1,1,2). Grade of a monomial = sum of its
/// parts (deg p_j = j).
class GradedPoly {
public:
    GradedPoly() = default;

    static GradedPoly monomial(std::vector<long> partition, const Rat& c);
    static GradedPoly p(long j) { return monomial({j}, Rat(1)); }
    static GradedPoly constant(const Rat& c) { return monomial({}, c); }

    bool is_zero() const { return terms_.empty(); }
    Rat coeff(std::vector<long> partition) const;
    const std::map<std::vector<long>, Rat>& terms() const { return terms_; }

    GradedPoly operator-() const;
    GradedPoly operator+(const GradedPoly& o) const;
    GradedPoly operator-(const GradedPoly& o) const;
    GradedPoly operator*(const GradedPoly& o) const;
    GradedPoly& operator+=(const GradedPoly& o) { return *this = *this + o; }
    GradedPoly& operator-=(const GradedPoly& o) { return *this = *this - o; }
    GradedPoly scaled(const Rat& c) const;

    bool operator==(const GradedPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const GradedPoly& o) const { return terms_ != o.terms_; }

    /// True when every monomial has the given grade.
    bool is_homogeneous(long grade) const;

    /// Sum of coeff * value(partition) over all monomials; the caller
    /// supplies the value of each product p_I as a whole.
    Rat evaluate_monomials(const std::function<Rat(const std::vector<long>&)>& value) const;

    /// Substitute a value for each individual symbol p_j.
    Rat evaluate(const std::function<Rat(long)>& value_of_p) const;

    std::string to_string() const;

private:
    void add(const std::vector<long>& partition, const Rat& c);

    std::map<std::vector<long>, Rat> terms_;
};

}  // namespace equifix
