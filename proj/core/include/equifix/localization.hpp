#pragma once

#include <map>
#include <string>
#include <vector>

#include "equifix/bundle_expr.hpp"
#include "equifix/model.hpp"
#include "equifix/ratfn.hpp"

namespace equifix {

/// A top-degree characteristic monomial: powers q_j of the line classes
/// c1(L_j) times the Pontryagin product over the partition I. Total
/// degree in the degree-2 generator is sum(q) + 2 * sum(I).
struct CharMonomial {
    std::vector<long> q;  // size k
    std::vector<long> I;  // ascending partition

    long degree() const;

    /// Grading-first order: sum(I), then q, then I. Puts the pure line
    /// monomial before the Pontryagin ones.
    bool operator<(const CharMonomial& o) const;
    bool operator==(const CharMonomial& o) const { return q == o.q && I == o.I; }

    /// "x^2", "x1*x2^3*p1^2*p2", "p2" style; the line class is printed as
    /// x when there is a single line bundle and x1..xk otherwise.
    std::string to_string() const;
};

/// All monomials of degree n for a model with k line bundles, in
/// CharMonomial order.
std::vector<CharMonomial> top_degree_monomials(long n, long k);

/// Local term of the fixed point formula for the signature operator:
/// eps * prod_i (lambda^{m_i}+1)/(lambda^{m_i}-1).
RatFn local_signature_term(const FixedPoint& p);

/// Restriction of a twist bundle to a fixed point as a character:
/// L_j -> lambda^{a_j}, T -> sum_i (lambda^{m_i} + lambda^{-m_i}).
LaurentPoly char_at(const BundleExpr& e, const FixedPoint& p);

/// Sum over fixed points of local term times twist character, as a
/// normalized rational function of lambda.
RatFn equivariant_twisted_signature(const FixedPointModel& model, const BundleExpr& e);

/// Value of the equivariant twisted signature at lambda -> 1. Throws
/// pole_error when the function has a genuine pole there (inadmissible
/// weight data).
Rat nonequivariant_index(const FixedPointModel& model, const BundleExpr& e);

/// The same index by the cohomological route: per point, the h^0
/// coefficient of prod_i (1+e^{-m_i h})/(1-e^{-m_i h}) times the twist
/// character at lambda = e^h, expanded as exact truncated series.
Rat cohom_twisted_signature(const FixedPointModel& model, const BundleExpr& e);

/// Localized characteristic number of one top-degree monomial:
/// sum_s eps_s * prod_j a_{s,j}^{q_j} * prod_{i in I} e_i(m_s^2) / prod_i m_{s,i},
/// where e_i is the i-th elementary symmetric function of the squared
/// weights. The monomial degree must equal n.
Rat char_number(const FixedPointModel& model, const CharMonomial& mono);

/// char_number for every partition of n/2 with q = 0. Empty map when n is
/// odd (no top-degree Pontryagin monomials).
std::map<std::vector<long>, Rat> pontryagin_numbers(const FixedPointModel& model);

/// The localized power-sum number sum_s eps_s * (sum_i m_{s,i}^n) / prod_i m_{s,i}.
/// Requires even n.
Rat milnor_number(const FixedPointModel& model);

}  // namespace equifix
