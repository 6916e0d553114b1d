#ifndef F4MS_POLARITY_ALGEBRA_HPP
#define F4MS_POLARITY_ALGEBRA_HPP

#include <vector>

#include "f4ms/f4_space.hpp"
#include "f4ms/report.hpp"

namespace f4ms {

// The product on V = E + E + [K]:
//   (a,b,r)(u,v,s) = ( sa + alpha(ubar^th b + beta^{-1} v^th bbar),
//                      sb + u^th a + beta^{-1} v^th abar,
//                      s^th r + beta^{-1} r (u ubar + alpha v vbar)
//                        + alpha beta^{-1}( a^th u vbar + abar^th ubar v
//                            + beta^{-1}( b^th ubar vbar + bbar^th u v ) ) )
// with th the chosen extension of theta to E and bars the Galois conjugation.
VElem pa_mul(const VElem& x, const VElem& y);

// v^{-1} = q(v)^{-1} v (anisotropy keeps q nonzero away from zero)
VElem pa_inv(const VElem& x);

// For nonzero d outside the radical: e with f(d,e) = 1, f(d,ed) = 0 and
// f(ee,d) = 0, built by solving the two f-conditions and then replacing
// e by e + (f(ee,d)/q(d)) dd.
VElem polar_pair(const VElem& d);

// b = aa; then b^{-1} b = a
VElem root_pair(const VElem& a);

// the axioms (R1)-(R7)
std::vector<NamedCheck> polarity_axiom_checks(const TriplePtr& tri, int deg);

// the derived identity set: bilinear-radical identities, the two expansion
// identities, multiplicativity of q, inverse identities, the polar-pair
// construction, and the nonvanishing lemma
std::vector<NamedCheck> polarity_identity_checks(const TriplePtr& tri, int deg);

// test hook: the product with the conjugation bars swapped in one term,
// used to demonstrate that the suite catches a broken product
VElem pa_mul_mutated(const VElem& x, const VElem& y);
std::vector<NamedCheck> polarity_axiom_checks_mutated(const TriplePtr& tri, int deg);

} // namespace f4ms

#endif
