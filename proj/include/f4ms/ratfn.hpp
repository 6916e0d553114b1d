#ifndef F4MS_RATFN_HPP
#define F4MS_RATFN_HPP

#include <string>
#include <string_view>

#include "f4ms/gf2poly.hpp"

namespace f4ms {

// Normalized rational function over GF(2) in a, b: gcd(num, den) = 1 and
// den != 0. Over GF(2) every polynomial is monic, so the gcd-reduced form
// is already canonical and equality is component equality.
class RatFn {
public:
    RatFn() : num_(), den_(Gf2Poly::one()) {}
    RatFn(Gf2Poly num, Gf2Poly den);
    /* implicit */ RatFn(const Gf2Poly& p) : num_(p), den_(Gf2Poly::one()) {}

    static RatFn zero() { return RatFn(); }
    static RatFn one() { return RatFn(Gf2Poly::one()); }
    static RatFn var_a() { return RatFn(Gf2Poly::var_a()); }
    static RatFn var_b() { return RatFn(Gf2Poly::var_b()); }

    const Gf2Poly& num() const { return num_; }
    const Gf2Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_poly() const { return den_.is_one(); }
    int max_deg() const { return std::max(num_.total_deg(), den_.total_deg()); }

    friend RatFn operator+(const RatFn& x, const RatFn& y);
    friend RatFn operator*(const RatFn& x, const RatFn& y);
    friend RatFn operator/(const RatFn& x, const RatFn& y);
    RatFn& operator+=(const RatFn& o) { return *this = *this + o; }
    RatFn& operator*=(const RatFn& o) { return *this = *this * o; }

    RatFn inv() const;
    RatFn square() const;
    RatFn pow(int n) const;

    bool operator==(const RatFn& o) const { return num_ == o.num_ && den_ == o.den_; }
    std::uint64_t hash() const { return num_.hash() * 0x2545f4914f6cdd1dULL + den_.hash(); }

    std::string str() const;
    static RatFn parse(std::string_view text);

private:
    Gf2Poly num_, den_;
    struct raw_tag {};
    RatFn(Gf2Poly num, Gf2Poly den, raw_tag) : num_(std::move(num)), den_(std::move(den)) {}
};

RatFn rat_normalize(const Gf2Poly& num, const Gf2Poly& den);

} // namespace f4ms

#endif
