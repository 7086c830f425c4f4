#include "equifix/bundle_expr.hpp"

#include <cctype>
#include <sstream>

namespace equifix {
namespace {

void require_same_k(const BundleExpr& a, const BundleExpr& b) {
    if (a.k() != b.k())
        throw std::invalid_argument("BundleExpr: line bundle count mismatch");
}

// Recursive descent parser over a flat token-free scan of the text.
class Parser {
public:
    Parser(const std::string& text, long k) : s_(text), k_(k) {}

    BundleExpr run() {
        BundleExpr e = expr();
        skip_ws();
        if (pos_ != s_.size())
            fail("unexpected trailing input");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw expr_parse_error("twist expression: " + msg + " at position " +
                                   std::to_string(pos_),
                               pos_);
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    long integer() {
        skip_ws();
        std::size_t start = pos_;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+'))
            ++pos_;
        std::size_t digits = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        if (pos_ == digits)
            fail("expected an integer");
        return std::stol(s_.substr(start, pos_ - start));
    }

    BundleExpr expr() {
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        BundleExpr acc = term();
        if (neg)
            acc = -acc;
        while (true) {
            if (eat('+'))
                acc = acc + term();
            else if (eat('-'))
                acc = acc - term();
            else
                return acc;
        }
    }

    BundleExpr term() {
        BundleExpr acc = factor();
        while (eat('*'))
            acc = acc * factor();
        return acc;
    }

    BundleExpr factor() {
        BundleExpr base = primary();
        if (!eat('^'))
            return base;
        long e = integer();
        try {
            return base.pow(e);
        } catch (const std::domain_error& ex) {
            fail(ex.what());
        }
    }

    BundleExpr primary() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            eat('(');
            BundleExpr e = expr();
            if (!eat(')'))
                fail("expected ')'");
            return e;
        }
        if (c == 'T') {
            ++pos_;
            return BundleExpr::tangent(k_);
        }
        if (c == 'L') {
            ++pos_;
            long j = integer();
            if (j < 1 || j > k_)
                fail("line bundle index L" + std::to_string(j) + " out of range (k=" +
                     std::to_string(k_) + ")");
            return BundleExpr::line(k_, j);
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return BundleExpr::constant(k_, integer());
        fail("expected a factor");
    }

    const std::string& s_;
    long k_;
    std::size_t pos_ = 0;
};

}  // namespace

BundleExpr::BundleExpr(long k) : k_(k) {
    if (k < 0)
        throw std::invalid_argument("BundleExpr: k must be nonnegative");
}

void BundleExpr::add(const Monomial& mono, const Int& c) {
    auto it = terms_.find(mono);
    Int v = (it == terms_.end() ? Int(0) : it->second) + c;
    if (v == 0) {
        if (it != terms_.end())
            terms_.erase(it);
    } else {
        terms_[mono] = v;
    }
}

BundleExpr BundleExpr::constant(long k, const Int& c) {
    BundleExpr e(k);
    e.add(Monomial{std::vector<long>(static_cast<std::size_t>(k), 0), 0}, c);
    return e;
}

BundleExpr BundleExpr::line(long k, long j, long exp) {
    if (j < 1 || j > k)
        throw std::invalid_argument("BundleExpr: line bundle index out of range");
    BundleExpr e(k);
    Monomial mono{std::vector<long>(static_cast<std::size_t>(k), 0), 0};
    mono.line[static_cast<std::size_t>(j - 1)] = exp;
    e.add(mono, 1);
    return e;
}

BundleExpr BundleExpr::tangent(long k) {
    BundleExpr e(k);
    e.add(Monomial{std::vector<long>(static_cast<std::size_t>(k), 0), 1}, 1);
    return e;
}

BundleExpr BundleExpr::operator-() const {
    BundleExpr r(k_);
    for (const auto& [mono, c] : terms_)
        r.terms_.emplace(mono, -c);
    return r;
}

BundleExpr BundleExpr::operator+(const BundleExpr& o) const {
    require_same_k(*this, o);
    BundleExpr r = *this;
    for (const auto& [mono, c] : o.terms_)
        r.add(mono, c);
    return r;
}

BundleExpr BundleExpr::operator-(const BundleExpr& o) const {
    require_same_k(*this, o);
    BundleExpr r = *this;
    for (const auto& [mono, c] : o.terms_)
        r.add(mono, -c);
    return r;
}

BundleExpr BundleExpr::operator*(const BundleExpr& o) const {
    require_same_k(*this, o);
    BundleExpr r(k_);
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) {
            Monomial mono = m1;
            for (std::size_t i = 0; i < mono.line.size(); ++i)
                mono.line[i] += m2.line[i];
            mono.tangent += m2.tangent;
            r.add(mono, c1 * c2);
        }
    return r;
}

BundleExpr BundleExpr::pow(long e) const {
    if (e < 0) {
        if (terms_.size() != 1)
            throw std::domain_error("BundleExpr: negative power of a sum");
        const auto& [mono, c] = *terms_.begin();
        if (mono.tangent != 0)
            throw std::domain_error("BundleExpr: the tangent bundle has no inverse");
        if (c != 1 && c != -1)
            throw std::domain_error("BundleExpr: negative power needs coefficient +-1");
        BundleExpr r(k_);
        Monomial inv{std::vector<long>(mono.line.size(), 0), 0};
        for (std::size_t i = 0; i < mono.line.size(); ++i)
            inv.line[i] = mono.line[i] * e;
        r.add(inv, c == 1 ? Int(1) : Int(e % 2 == 0 ? 1 : -1));
        return r;
    }
    BundleExpr acc = one(k_);
    BundleExpr base = *this;
    while (e > 0) {
        if (e & 1)
            acc = acc * base;
        e >>= 1;
        if (e)
            base = base * base;
    }
    return acc;
}

std::string BundleExpr::to_string() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mono, c] : terms_) {
        Int mag = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0)
                os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        std::vector<std::string> factors;
        for (std::size_t i = 0; i < mono.line.size(); ++i) {
            if (mono.line[i] == 0)
                continue;
            std::string f = "L" + std::to_string(i + 1);
            if (mono.line[i] != 1)
                f += "^" + std::to_string(mono.line[i]);
            factors.push_back(f);
        }
        if (mono.tangent != 0) {
            std::string f = "T";
            if (mono.tangent != 1)
                f += "^" + std::to_string(mono.tangent);
            factors.push_back(f);
        }
        if (factors.empty()) {
            os << mag.get_str();
            continue;
        }
        if (mag != 1)
            os << mag.get_str() << "*";
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (i)
                os << "*";
            os << factors[i];
        }
    }
    return os.str();
}

BundleExpr BundleExpr::parse(const std::string& text, long k) {
    return Parser(text, k).run();
}

}  // namespace equifix
