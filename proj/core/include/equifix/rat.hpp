#pragma once

#include <gmpxx.h>

#include <compare>
#include <stdexcept>
#include <string>

namespace equifix {

using Int = mpz_class;

/// Exact rational scalar. Always kept in lowest terms with a positive
/// denominator; zero is represented as 0/1.
class Rat {
public:
    Rat() : value_(0) {}
    Rat(int n) : value_(n) {}
    Rat(long n) : value_(n) {}
    Rat(long long n) : value_(static_cast<long>(n)) {}
    Rat(const Int& n) : value_(n) {}

    Rat(const Int& num, const Int& den) {
        if (den == 0)
            throw std::domain_error("Rat: zero denominator");
        value_ = mpq_class(num, den);
        value_.canonicalize();
    }
    Rat(long num, long den) : Rat(Int(num), Int(den)) {}

    const Int numerator() const { return value_.get_num(); }
    const Int denominator() const { return value_.get_den(); }

    bool is_zero() const { return value_ == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    Rat operator-() const { return Rat(mpq_class(-value_)); }
    Rat operator+(const Rat& o) const { return Rat(mpq_class(value_ + o.value_)); }
    Rat operator-(const Rat& o) const { return Rat(mpq_class(value_ - o.value_)); }
    Rat operator*(const Rat& o) const { return Rat(mpq_class(value_ * o.value_)); }
    Rat operator/(const Rat& o) const {
        if (o.is_zero())
            throw std::domain_error("Rat: division by zero");
        return Rat(mpq_class(value_ / o.value_));
    }

    Rat& operator+=(const Rat& o) { value_ += o.value_; return *this; }
    Rat& operator-=(const Rat& o) { value_ -= o.value_; return *this; }
    Rat& operator*=(const Rat& o) { value_ *= o.value_; return *this; }
    Rat& operator/=(const Rat& o) { return *this = *this / o; }

    bool operator==(const Rat& o) const { return value_ == o.value_; }
    bool operator!=(const Rat& o) const { return value_ != o.value_; }
    bool operator<(const Rat& o) const { return value_ < o.value_; }
    bool operator<=(const Rat& o) const { return value_ <= o.value_; }
    bool operator>(const Rat& o) const { return value_ > o.value_; }
    bool operator>=(const Rat& o) const { return value_ >= o.value_; }

    Rat abs() const { return sign() < 0 ? -*this : *this; }

    Rat reciprocal() const {
        if (is_zero())
            throw std::domain_error("Rat: reciprocal of zero");
        return Rat(denominator(), numerator());
    }

    /// Integer power; negative exponents invert (base must be nonzero).
    Rat pow(long e) const {
        if (e < 0)
            return reciprocal().pow(-e);
        Rat base = *this, acc = Rat(1);
        while (e > 0) {
            if (e & 1)
                acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    /// Lowest-terms "p/q" (plain "p" for integers).
    std::string to_string() const {
        std::string s = value_.get_num().get_str();
        if (value_.get_den() != 1)
            s += "/" + value_.get_den().get_str();
        return s;
    }

private:
    explicit Rat(const mpq_class& q) : value_(q) {}
    mpq_class value_;
};

inline Rat operator*(long n, const Rat& r) { return Rat(n) * r; }
inline Rat operator+(long n, const Rat& r) { return Rat(n) + r; }
inline Rat operator-(long n, const Rat& r) { return Rat(n) - r; }

/// n-th Bernoulli number with the B1 = -1/2 convention.
Rat bernoulli(int k);

/// Exact binomial coefficient C(n, k).
Int binomial(long n, long k);

/// Exact integer power.
Int int_pow(const Int& base, long e);

}  // namespace equifix
