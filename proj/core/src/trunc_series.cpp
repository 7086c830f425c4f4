#include "equifix/trunc_series.hpp"

#include <sstream>
#include <stdexcept>

namespace equifix {
namespace {

void require_same_order(const TruncSeries& a, const TruncSeries& b) {
    if (a.order() != b.order())
        throw std::invalid_argument("TruncSeries: order mismatch");
}

}  // namespace

TruncSeries::TruncSeries(int order, std::vector<Rat> coeffs) : TruncSeries(order) {
    if (coeffs.size() != c_.size())
        throw std::invalid_argument("TruncSeries: need exactly order+1 coefficients");
    c_ = std::move(coeffs);
}

TruncSeries TruncSeries::constant(int order, const Rat& value) {
    TruncSeries s(order);
    s.c_[0] = value;
    return s;
}

TruncSeries TruncSeries::operator+(const TruncSeries& o) const {
    require_same_order(*this, o);
    TruncSeries r(order());
    for (std::size_t i = 0; i < c_.size(); ++i)
        r.c_[i] = c_[i] + o.c_[i];
    return r;
}

TruncSeries TruncSeries::operator-(const TruncSeries& o) const {
    require_same_order(*this, o);
    TruncSeries r(order());
    for (std::size_t i = 0; i < c_.size(); ++i)
        r.c_[i] = c_[i] - o.c_[i];
    return r;
}

TruncSeries TruncSeries::operator*(const TruncSeries& o) const {
    require_same_order(*this, o);
    TruncSeries r(order());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero())
            continue;
        for (std::size_t j = 0; i + j < c_.size(); ++j)
            r.c_[i + j] += c_[i] * o.c_[j];
    }
    return r;
}

TruncSeries TruncSeries::scaled(const Rat& v) const {
    TruncSeries r(order());
    for (std::size_t i = 0; i < c_.size(); ++i)
        r.c_[i] = c_[i] * v;
    return r;
}

TruncSeries TruncSeries::inverse() const {
    if (c_[0].is_zero())
        throw std::domain_error("TruncSeries: inverse needs nonzero constant term");
    TruncSeries r(order());
    r.c_[0] = Rat(1) / c_[0];
    for (std::size_t k = 1; k < c_.size(); ++k) {
        Rat acc(0);
        for (std::size_t i = 1; i <= k; ++i)
            acc += c_[i] * r.c_[k - i];
        r.c_[k] = -acc / c_[0];
    }
    return r;
}

TruncSeries TruncSeries::pow(long e) const {
    if (e < 0)
        return inverse().pow(-e);
    TruncSeries acc = constant(order(), Rat(1));
    TruncSeries base = *this;
    while (e > 0) {
        if (e & 1)
            acc = acc * base;
        e >>= 1;
        if (e)
            base = base * base;
    }
    return acc;
}

std::string TruncSeries::to_string(const std::string& var) const {
    std::ostringstream os;
    bool any = false;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero())
            continue;
        if (any)
            os << (c_[i].sign() < 0 ? " - " : " + ");
        else if (c_[i].sign() < 0)
            os << "-";
        Rat mag = c_[i].abs();
        if (i == 0) {
            os << mag.to_string();
        } else {
            if (mag != Rat(1))
                os << mag.to_string() << "*";
            os << var;
            if (i > 1)
                os << "^" << i;
        }
        any = true;
    }
    if (!any)
        return "0";
    return os.str();
}

TruncSeries exp_series(int order, const Rat& rate) {
    TruncSeries s(order);
    std::vector<Rat> c(static_cast<std::size_t>(order) + 1);
    c[0] = Rat(1);
    for (int i = 1; i <= order; ++i)
        c[static_cast<std::size_t>(i)] = c[static_cast<std::size_t>(i) - 1] * rate / Rat(i);
    return TruncSeries(order, std::move(c));
}

}  // namespace equifix
