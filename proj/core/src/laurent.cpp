#include "equifix/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace equifix {

long LaurentPoly::min_exp() const {
    if (coeffs_.empty())
        throw std::logic_error("LaurentPoly: zero polynomial has no support");
    return coeffs_.begin()->first;
}

long LaurentPoly::max_exp() const {
    if (coeffs_.empty())
        throw std::logic_error("LaurentPoly: zero polynomial has no support");
    return coeffs_.rbegin()->first;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : coeffs_)
        r.coeffs_.emplace(e, -c);
    return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.coeffs_)
        r.set(e, r.coeff(e) + c);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.coeffs_)
        r.set(e, r.coeff(e) - c);
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (const auto& [e1, c1] : coeffs_)
        for (const auto& [e2, c2] : o.coeffs_)
            r.set(e1 + e2, r.coeff(e1 + e2) + c1 * c2);
    return r;
}

LaurentPoly LaurentPoly::scaled(const Rat& c) const {
    LaurentPoly r;
    if (c.is_zero())
        return r;
    for (const auto& [e, v] : coeffs_)
        r.coeffs_.emplace(e, v * c);
    return r;
}

LaurentPoly LaurentPoly::shifted(long k) const {
    LaurentPoly r;
    for (const auto& [e, v] : coeffs_)
        r.coeffs_.emplace(e + k, v);
    return r;
}

LaurentPoly LaurentPoly::pow(long e) const {
    if (e < 0)
        throw std::domain_error("LaurentPoly: negative power");
    LaurentPoly acc = one();
    LaurentPoly base = *this;
    while (e > 0) {
        if (e & 1)
            acc *= base;
        e >>= 1;
        if (e)
            base *= base;
    }
    return acc;
}

Rat LaurentPoly::eval(const Rat& x) const {
    if (!coeffs_.empty() && coeffs_.begin()->first < 0 && x.is_zero())
        throw std::domain_error("LaurentPoly: evaluation at 0 with negative exponents");
    Rat acc(0);
    for (const auto& [e, c] : coeffs_)
        acc += c * x.pow(e);
    return acc;
}

std::string LaurentPoly::to_string(const std::string& var) const {
    if (coeffs_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        const auto& [e, c] = *it;
        if (first) {
            if (c.sign() < 0)
                os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        Rat mag = c.abs();
        if (e == 0) {
            os << mag.to_string();
        } else {
            if (mag != Rat(1))
                os << mag.to_string() << "*";
            os << var;
            if (e != 1)
                os << "^" << e;
        }
    }
    return os.str();
}

LaurentPoly poly_from_dense(long offset, const std::vector<Rat>& dense) {
    LaurentPoly p;
    for (std::size_t i = 0; i < dense.size(); ++i)
        p.set(offset + static_cast<long>(i), dense[i]);
    return p;
}

}  // namespace equifix
