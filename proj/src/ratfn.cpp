#include "f4ms/ratfn.hpp"

#include <cctype>

#include "f4ms/errors.hpp"

namespace f4ms {

RatFn::RatFn(Gf2Poly num, Gf2Poly den) {
    if (den.is_zero()) throw ZeroDenominator();
    if (num.is_zero()) {
        num_ = Gf2Poly::zero();
        den_ = Gf2Poly::one();
        return;
    }
    if (den.is_one()) {
        num_ = std::move(num);
        den_ = std::move(den);
        return;
    }
    Gf2Poly g = Gf2Poly::gcd(num, den);
    if (g.is_one()) {
        num_ = std::move(num);
        den_ = std::move(den);
    } else {
        num_ = num.divexact(g);
        den_ = den.divexact(g);
    }
}

RatFn rat_normalize(const Gf2Poly& num, const Gf2Poly& den) { return RatFn(num, den); }

RatFn operator+(const RatFn& x, const RatFn& y) {
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    if (x.den_.is_one() && y.den_.is_one()) return RatFn(x.num_ + y.num_);
    // reduce by the common part of the denominators first
    Gf2Poly g = Gf2Poly::gcd(x.den_, y.den_);
    if (g.is_one()) return RatFn(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
    Gf2Poly xd = x.den_.divexact(g), yd = y.den_.divexact(g);
    return RatFn(x.num_ * yd + y.num_ * xd, x.den_ * yd);
}

RatFn operator*(const RatFn& x, const RatFn& y) {
    if (x.is_zero() || y.is_zero()) return RatFn::zero();
    // cross-reduce so the result needs no further gcd
    Gf2Poly g1 = Gf2Poly::gcd(x.num_, y.den_);
    Gf2Poly g2 = Gf2Poly::gcd(y.num_, x.den_);
    Gf2Poly n = (g1.is_one() ? x.num_ : x.num_.divexact(g1)) *
                (g2.is_one() ? y.num_ : y.num_.divexact(g2));
    Gf2Poly d = (g2.is_one() ? x.den_ : x.den_.divexact(g2)) *
                (g1.is_one() ? y.den_ : y.den_.divexact(g1));
    RatFn r;
    r.num_ = std::move(n);
    r.den_ = std::move(d);
    return r;
}

RatFn RatFn::inv() const {
    if (is_zero()) throw ZeroDenominator();
    RatFn r;
    r.num_ = den_;
    r.den_ = num_;
    return r;
}

RatFn operator/(const RatFn& x, const RatFn& y) { return x * y.inv(); }

RatFn RatFn::square() const {
    RatFn r;
    r.num_ = num_.square();
    r.den_ = den_.square();
    return r;
}

RatFn RatFn::pow(int n) const {
    if (n < 0) return inv().pow(-n);
    RatFn r;
    r.num_ = num_.pow(static_cast<unsigned>(n));
    r.den_ = den_.pow(static_cast<unsigned>(n));
    return r;
}

std::string RatFn::str() const {
    if (den_.is_one()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

// ------------------------------------------------------------------ parser
//
// expr    := term ( ('+' ) term )*
// term    := factor ( ('*' | '/') factor )*
// factor  := atom [ '^' uint ]
// atom    := '0' | '1' | 'a' | 'b' | '(' expr ')'

namespace {

struct Parser {
    std::string_view s;
    std::size_t i = 0;

    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char c) {
        skip();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw ParseError(what + " at position " + std::to_string(i) + " in '" + std::string(s) + "'");
    }

    RatFn expr() {
        RatFn v = term();
        while (eat('+')) v = v + term();
        return v;
    }
    RatFn term() {
        RatFn v = factor();
        for (;;) {
            if (eat('*'))
                v = v * factor();
            else if (eat('/'))
                v = v / factor();
            else
                return v;
        }
    }
    RatFn factor() {
        RatFn v = atom();
        if (eat('^')) {
            skip();
            if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) fail("expected exponent");
            int n = 0;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
                n = n * 10 + (s[i] - '0');
                if (n > degree_cap()) fail("exponent exceeds degree cap");
                ++i;
            }
            v = v.pow(n);
        }
        return v;
    }
    RatFn atom() {
        skip();
        if (i >= s.size()) fail("unexpected end of input");
        char c = s[i];
        if (c == '0') {
            ++i;
            return RatFn::zero();
        }
        if (c == '1') {
            ++i;
            return RatFn::one();
        }
        if (c == 'a') {
            ++i;
            return RatFn::var_a();
        }
        if (c == 'b') {
            ++i;
            return RatFn::var_b();
        }
        if (c == '(') {
            ++i;
            RatFn v = expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

} // namespace

RatFn RatFn::parse(std::string_view text) {
    Parser p{text};
    RatFn v = p.expr();
    p.skip();
    if (p.i != text.size()) p.fail("trailing input");
    return v;
}

} // namespace f4ms
