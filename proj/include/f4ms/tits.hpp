#ifndef F4MS_TITS_HPP
#define F4MS_TITS_HPP

#include <optional>
#include <utility>
#include <variant>

#include "f4ms/ratfn.hpp"

namespace f4ms {

inline RatFn frobenius(const RatFn& x) { return x.square(); }

// Endomorphism of K = GF(2)(a,b) with theta^2 = Frobenius, determined by the
// images of the generators. The standard instance maps a -> b^2, b -> a.
class TitsEndo {
public:
    TitsEndo() : TitsEndo(RatFn::parse("b^2"), RatFn::var_a()) {}
    TitsEndo(RatFn image_a, RatFn image_b);

    static TitsEndo standard() { return TitsEndo(); }

    const RatFn& image_a() const { return img_a_; }
    const RatFn& image_b() const { return img_b_; }
    bool is_standard() const { return standard_; }

    RatFn operator()(const RatFn& x) const;

private:
    RatFn img_a_, img_b_;
    bool standard_;
    RatFn subst_poly(const Gf2Poly& p) const;
};

struct TraceWitness {
    RatFn lambda; // lambda^theta + lambda equals the query exactly
};
struct NoWitnessUpTo {
    int maxdeg; // bounded negative: no witness with num/den degree <= maxdeg
};
using TraceAnswer = std::variant<TraceWitness, NoWitnessUpTo>;

// Bounded search for lambda with lambda^theta + lambda = x. Enumerates
// denominators over the full monomial basis of degree <= maxdeg and solves a
// GF(2)-linear system for the numerator in each case. maxdeg <= 4 (the basis
// sweep is exponential in the monomial count).
TraceAnswer tits_trace_search(const TitsEndo& theta, const RatFn& x, int maxdeg);

inline bool is_witness(const TitsEndo& theta, const RatFn& lambda, const RatFn& x) {
    return theta(lambda) + lambda == x;
}

// Coordinates of t in K over F = K^theta with basis {1, b}: t = f1 + f2*b,
// f1, f2 in F. Clears the denominator by den/den, then splits by b-parity.
std::pair<RatFn, RatFn> f_decompose(const RatFn& t);

// true when x lies in F = GF(2)(a, b^2), i.e. only even b-exponents appear
bool is_in_subfield_f(const RatFn& x);

// Preimage under theta of an element of F = K^theta. The standard
// endomorphism inverts by the monomial swap a^i b^(2j) -> a^j b^i; other
// endomorphisms fall back to a bounded GF(2)-linear solve.
RatFn theta_inverse(const TitsEndo& theta, const RatFn& y);

} // namespace f4ms

#endif
