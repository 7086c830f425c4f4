#include "equifix/ratfn.hpp"

#include <utility>
#include <vector>

namespace equifix {
namespace {

// Dense coefficient vector of an ordinary polynomial (min exponent 0).
std::vector<Rat> to_vec(const LaurentPoly& p) {
    std::vector<Rat> v(static_cast<std::size_t>(p.max_exp()) + 1, Rat(0));
    for (const auto& [e, c] : p.terms())
        v[static_cast<std::size_t>(e)] = c;
    return v;
}

void trim(std::vector<Rat>& v) {
    while (!v.empty() && v.back().is_zero())
        v.pop_back();
}

std::vector<Rat> poly_rem(std::vector<Rat> a, const std::vector<Rat>& b) {
    trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        Rat c = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i)
            a[shift + i] -= c * b[i];
        trim(a);
    }
    return a;
}

// Monic gcd over Q[x]; empty vector encodes 0.
std::vector<Rat> poly_gcd(std::vector<Rat> a, std::vector<Rat> b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        auto r = poly_rem(std::move(a), b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Rat lead = a.back();
        for (auto& c : a)
            c /= lead;
    }
    return a;
}

// Exact quotient; b must divide a.
std::vector<Rat> poly_div(std::vector<Rat> a, const std::vector<Rat>& b) {
    trim(a);
    std::vector<Rat> q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rat(0));
    while (a.size() >= b.size() && !a.empty()) {
        Rat c = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i)
            a[shift + i] -= c * b[i];
        trim(a);
    }
    return q;
}

// Quotient of p by (lambda - 1); requires p(1) = 0. The lambda^min_exp
// factor is split off first, so Laurent support is fine.
LaurentPoly div_by_lambda_minus_one(const LaurentPoly& p) {
    long o = p.min_exp();
    auto v = to_vec(p.shifted(-o));
    std::vector<Rat> q(v.size() - 1, Rat(0));
    Rat carry(0);
    for (std::size_t i = v.size(); i-- > 1;) {
        carry += v[i];
        q[i - 1] = carry;
    }
    return poly_from_dense(o, q);
}

}  // namespace

RatFn::RatFn(const LaurentPoly& num, const LaurentPoly& den) {
    if (den.is_zero())
        throw std::domain_error("RatFn: zero denominator");
    den_ = LaurentPoly::one();
    if (num.is_zero())
        return;
    long k = num.min_exp() - den.min_exp();
    auto p = to_vec(num.shifted(-num.min_exp()));
    auto q = to_vec(den.shifted(-den.min_exp()));
    auto g = poly_gcd(p, q);
    if (g.size() > 1) {
        p = poly_div(std::move(p), g);
        q = poly_div(std::move(q), g);
    }
    Rat lead = q.back();
    for (auto& c : p)
        c /= lead;
    for (auto& c : q)
        c /= lead;
    num_ = poly_from_dense(k, p);
    den_ = poly_from_dense(0, q);
}

RatFn RatFn::operator-() const {
    RatFn r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RatFn RatFn::operator+(const RatFn& o) const {
    return RatFn(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFn RatFn::operator-(const RatFn& o) const {
    return RatFn(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFn RatFn::operator*(const RatFn& o) const {
    return RatFn(num_ * o.num_, den_ * o.den_);
}

RatFn RatFn::operator/(const RatFn& o) const {
    if (o.is_zero())
        throw std::domain_error("RatFn: division by zero");
    return RatFn(num_ * o.den_, den_ * o.num_);
}

Rat RatFn::eval(const Rat& x) const {
    if (x.is_zero())
        throw std::domain_error("RatFn: evaluation at lambda = 0");
    Rat d = den_.eval(x);
    if (d.is_zero())
        throw pole_error("RatFn: pole at lambda = " + x.to_string() + ", factor " +
                         den_.to_string() + " vanishes");
    return num_.eval(x) / d;
}

std::optional<Rat> RatFn::is_constant() const {
    if (den_ != LaurentPoly::one())
        return std::nullopt;
    if (num_.is_zero())
        return Rat(0);
    if (num_.min_exp() == 0 && num_.max_exp() == 0)
        return num_.coeff(0);
    return std::nullopt;
}

Rat RatFn::limit_at_one() const {
    LaurentPoly n = num_;
    LaurentPoly d = den_;
    while (true) {
        Rat dv = d.eval(Rat(1));
        if (!dv.is_zero())
            return n.eval(Rat(1)) / dv;
        if (n.is_zero() || !n.eval(Rat(1)).is_zero())
            throw pole_error("RatFn: genuine pole at lambda = 1");
        n = div_by_lambda_minus_one(n);
        d = div_by_lambda_minus_one(d);
    }
}

std::string RatFn::to_string(const std::string& var) const {
    if (den_ == LaurentPoly::one())
        return num_.to_string(var);
    return "(" + num_.to_string(var) + ") / (" + den_.to_string(var) + ")";
}

}  // namespace equifix
