#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "equifix/rat.hpp"

namespace equifix {

struct expr_parse_error : std::runtime_error {
    explicit expr_parse_error(const std::string& what, std::size_t position)
        : std::runtime_error(what), pos(position) {}
    std::size_t pos;
};

/// Formal integer-coefficient polynomial in the line bundles L1..Lk (with
/// inverses) and the tangent bundle T. A monomial is the list of line
/// exponents (possibly negative) plus a nonnegative T exponent.
class BundleExpr {
public:
    struct Monomial {
        std::vector<long> line;  // size k
        long tangent = 0;

        bool operator<(const Monomial& o) const {
            return line != o.line ? line < o.line : tangent < o.tangent;
        }
        bool operator==(const Monomial& o) const {
            return line == o.line && tangent == o.tangent;
        }
    };

    /// Zero expression over k line bundles.
    explicit BundleExpr(long k);

    static BundleExpr constant(long k, const Int& c);
    static BundleExpr one(long k) { return constant(k, 1); }
    /// L_j (1-based), raised to exp.
    static BundleExpr line(long k, long j, long exp = 1);
    static BundleExpr tangent(long k);

    long k() const { return k_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, Int>& terms() const { return terms_; }

    BundleExpr operator-() const;
    BundleExpr operator+(const BundleExpr& o) const;
    BundleExpr operator-(const BundleExpr& o) const;
    BundleExpr operator*(const BundleExpr& o) const;

    /// Nonnegative powers always work; a negative power needs a single
    /// monomial with coefficient +-1 and no T factor.
    BundleExpr pow(long e) const;

    bool operator==(const BundleExpr& o) const {
        return k_ == o.k_ && terms_ == o.terms_;
    }
    bool operator!=(const BundleExpr& o) const { return !(*this == o); }

    std::string to_string() const;

    /// Grammar: sums/differences of products of factors; factor = integer,
    /// T, L<j>, or a parenthesized expression, optionally ^<int>. T cannot
    /// take negative exponents. Example: "1 + 2*L1^-1*T - (L2 - 1)^2".
    static BundleExpr parse(const std::string& text, long k);

private:
    void add(const Monomial& mono, const Int& c);

    long k_;
    std::map<Monomial, Int> terms_;
};

}  // namespace equifix
