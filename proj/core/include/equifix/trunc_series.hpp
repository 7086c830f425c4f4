#pragma once

#include <string>
#include <vector>

#include "equifix/rat.hpp"

namespace equifix {

/// Power series truncated at a fixed order T: exactly the coefficients of
/// degrees 0..T are carried, everything higher is discarded. All binary
/// operations require matching orders.
class TruncSeries {
public:
    explicit TruncSeries(int order) : c_(static_cast<std::size_t>(order) + 1, Rat(0)) {
        if (order < 0)
            throw std::domain_error("TruncSeries: negative order");
    }
    TruncSeries(int order, std::vector<Rat> coeffs);

    static TruncSeries constant(int order, const Rat& value);

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const Rat& coeff(int i) const { return c_.at(static_cast<std::size_t>(i)); }
    const std::vector<Rat>& coeffs() const { return c_; }

    TruncSeries operator+(const TruncSeries& o) const;
    TruncSeries operator-(const TruncSeries& o) const;
    TruncSeries operator*(const TruncSeries& o) const;
    TruncSeries scaled(const Rat& v) const;

    /// Multiplicative inverse; requires coeff(0) != 0.
    TruncSeries inverse() const;
    /// Integer power; negative exponents go through inverse().
    TruncSeries pow(long e) const;

    bool operator==(const TruncSeries& o) const { return c_ == o.c_; }
    bool operator!=(const TruncSeries& o) const { return c_ != o.c_; }

    std::string to_string(const std::string& var = "z") const;

private:
    std::vector<Rat> c_;
};

/// Series of exp(rate * z) up to the given order.
TruncSeries exp_series(int order, const Rat& rate);

}  // namespace equifix
