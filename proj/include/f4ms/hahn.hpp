#ifndef F4MS_HAHN_HPP
#define F4MS_HAHN_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "f4ms/gf2poly.hpp"

namespace f4ms {

// Exponent a + b*sqrt(2) in the ordered group Z + Z*sqrt(2); comparisons are
// decided exactly by sign analysis (a^2 vs 2b^2 in the mixed-sign case).
struct SqrtTwoExp {
    std::int64_t a = 0, b = 0;

    friend SqrtTwoExp operator+(SqrtTwoExp x, SqrtTwoExp y) { return {x.a + y.a, x.b + y.b}; }
    friend bool operator==(SqrtTwoExp x, SqrtTwoExp y) { return x.a == y.a && x.b == y.b; }
    int sign() const;
    friend bool operator<(SqrtTwoExp x, SqrtTwoExp y) { return SqrtTwoExp{x.a - y.a, x.b - y.b}.sign() < 0; }
    std::string str() const;
};

// Finite-support Hahn series over GF(2) with exponents in Z + Z*sqrt(2);
// support kept strictly sorted, present exponents have coefficient 1.
class HahnSeries {
public:
    HahnSeries() = default;
    static HahnSeries term(SqrtTwoExp e) { return HahnSeries(std::vector<SqrtTwoExp>{e}); }
    explicit HahnSeries(std::vector<SqrtTwoExp> support);

    bool is_zero() const { return sup_.empty(); }
    std::size_t support_size() const { return sup_.size(); }
    const std::vector<SqrtTwoExp>& support() const { return sup_; }
    bool constant_coeff() const; // coefficient at exponent (0,0)

    friend HahnSeries operator+(const HahnSeries& x, const HahnSeries& y);
    friend HahnSeries operator*(const HahnSeries& x, const HahnSeries& y);

    bool operator==(const HahnSeries& o) const { return sup_ == o.sup_; }
    std::string str() const;

private:
    std::vector<SqrtTwoExp> sup_;
};

// cap on the support size of products (SupportOverflow past it)
std::size_t hahn_support_cap();
void set_hahn_support_cap(std::size_t cap);

// theta on Hahn series: exponent g -> sqrt(2)*g, i.e. (a,b) -> (2b,a)
HahnSeries hahn_theta(const HahnSeries& x);

// ring embedding of GF(2)[a,b] sending b -> t, a -> t^sqrt(2):
// the monomial a^i b^j maps to t^(j + i*sqrt(2))
HahnSeries embed_poly(const Gf2Poly& p);

enum class TraceObstruction { NotATrace, Inconclusive };

// Any v + v^theta has constant coefficient 0 in characteristic 2, so a
// constant coefficient of 1 certifies that x is not a Tits trace.
TraceObstruction trace_obstruction(const HahnSeries& x);

} // namespace f4ms

#endif
