#pragma once

#include <map>
#include <string>
#include <vector>

#include "equifix/rat.hpp"

namespace equifix {

/// Laurent polynomial in one variable lambda with exact rational
/// coefficients. Stored sparsely; no zero coefficient is ever kept, so the
/// zero polynomial has an empty support.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(const Rat& constant) { set(0, constant); }
    LaurentPoly(long constant) { set(0, Rat(constant)); }

    static LaurentPoly monomial(long exp, const Rat& coeff = Rat(1)) {
        LaurentPoly p;
        p.set(exp, coeff);
        return p;
    }
    static LaurentPoly one() { return LaurentPoly(1); }

    bool is_zero() const { return coeffs_.empty(); }
    Rat coeff(long exp) const {
        auto it = coeffs_.find(exp);
        return it == coeffs_.end() ? Rat(0) : it->second;
    }
    /// Lowest / highest exponent of the support; invalid on zero.
    long min_exp() const;
    long max_exp() const;
    const std::map<long, Rat>& terms() const { return coeffs_; }

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
    LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    LaurentPoly scaled(const Rat& c) const;
    LaurentPoly shifted(long k) const;  // multiply by lambda^k
    LaurentPoly pow(long e) const;      // e >= 0

    bool operator==(const LaurentPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const LaurentPoly& o) const { return coeffs_ != o.coeffs_; }

    /// Exact evaluation; x must be nonzero when the support has negative
    /// exponents.
    Rat eval(const Rat& x) const;

    std::string to_string(const std::string& var = "lambda") const;

private:
    void set(long exp, const Rat& c) {
        if (c.is_zero())
            coeffs_.erase(exp);
        else
            coeffs_[exp] = c;
    }

    std::map<long, Rat> coeffs_;

    friend LaurentPoly poly_from_dense(long offset, const std::vector<Rat>& dense);
};

/// Rebuild a Laurent polynomial from dense coefficients, dense[i] being the
/// coefficient of lambda^(offset + i).
LaurentPoly poly_from_dense(long offset, const std::vector<Rat>& dense);

}  // namespace equifix
