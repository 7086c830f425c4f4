#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "equifix/laurent.hpp"

namespace equifix {

/// Genuine pole where a finite value was required.
struct pole_error : std::domain_error {
    using std::domain_error::domain_error;
};

/// Reduced quotient of Laurent polynomials in lambda.
///
/// Canonical form: gcd(num, den) = 1 over Q[lambda], den is an ordinary
/// polynomial with nonzero constant term (minimal exponent 0) and leading
/// coefficient 1. The unique representation makes equality and the
/// constancy check syntactic.
class RatFn {
public:
    RatFn() : num_(), den_(LaurentPoly::one()) {}
    RatFn(const Rat& constant) : num_(constant), den_(LaurentPoly::one()) {}
    RatFn(long constant) : RatFn(Rat(constant)) {}

    /// Normalizing constructor; rejects a zero denominator.
    RatFn(const LaurentPoly& num, const LaurentPoly& den);

    static RatFn from_poly(const LaurentPoly& p) { return RatFn(p, LaurentPoly::one()); }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }

    RatFn operator-() const;
    RatFn operator+(const RatFn& o) const;
    RatFn operator-(const RatFn& o) const;
    RatFn operator*(const RatFn& o) const;
    RatFn operator/(const RatFn& o) const;
    RatFn& operator+=(const RatFn& o) { return *this = *this + o; }
    RatFn& operator*=(const RatFn& o) { return *this = *this * o; }

    bool operator==(const RatFn& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFn& o) const { return !(*this == o); }

    /// Exact value at x; x must be nonzero and not a pole.
    Rat eval(const Rat& x) const;

    /// The constant value when num = c * den, otherwise empty.
    std::optional<Rat> is_constant() const;

    /// Value at lambda = 1 after cancelling all (lambda - 1) factors by
    /// synthetic division. Throws pole_error on a genuine pole, which for
    /// index sums signals inadmissible weight data.
    Rat limit_at_one() const;

    std::string to_string(const std::string& var = "lambda") const;

private:
    LaurentPoly num_;
    LaurentPoly den_;
};

}  // namespace equifix
