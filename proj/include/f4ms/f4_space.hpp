#ifndef F4MS_F4_SPACE_HPP
#define F4MS_F4_SPACE_HPP

#include <array>
#include <memory>
#include <optional>
#include <vector>

#include "f4ms/quad_ext.hpp"

namespace f4ms {

class Rng;

// Polar triple (E/K, theta_i, beta) with alpha = beta^{-theta}; carries the
// quadratic space V = E + E + [K] with q(u,v,t) = beta^{-1}(N(u) + alpha N(v)) + t^theta.
// The stored third slot is the plain K-value t; the theta-twist of the
// paper's [t] lives in scalar_mul and q.
struct PolarTriple {
    ExtPtr ext;
    int theta_choice; // 1 or 2: which extension of theta the algebra uses
    RatFn beta;
    RatFn alpha; // = theta_K(beta)^{-1}, an element of F

    RatFn theta_k(const RatFn& x) const { return ext->theta(x); }
    ExtElem theta_e(const ExtElem& x) const { return x.theta(theta_choice); }
};

using TriplePtr = std::shared_ptr<const PolarTriple>;

TriplePtr make_polar_triple(ExtPtr ext, int theta_choice, RatFn beta);

// the builtin instance: delta = a + b^2, lambda = a, beta = b, standard theta
TriplePtr tru7_triple();

class VElem {
public:
    VElem(TriplePtr tri, ExtElem u, ExtElem v, RatFn t);

    static VElem zero(const TriplePtr& tri);
    static VElem from_k_coords(const TriplePtr& tri, const RatFn& u_a, const RatFn& u_b,
                               const RatFn& v_a, const RatFn& v_b, const RatFn& t);

    const ExtElem& u() const { return u_; }
    const ExtElem& v() const { return v_; }
    const RatFn& t() const { return t_; }
    const TriplePtr& tri() const { return tri_; }

    bool is_zero() const { return u_.is_zero() && v_.is_zero() && t_.is_zero(); }
    bool in_radical() const { return u_.is_zero() && v_.is_zero(); }

    friend VElem operator+(const VElem& x, const VElem& y);
    VElem& operator+=(const VElem& o) { return *this = *this + o; }

    bool operator==(const VElem& o) const { return u_ == o.u_ && v_ == o.v_ && t_ == o.t_; }
    std::string str() const;

private:
    TriplePtr tri_;
    ExtElem u_, v_;
    RatFn t_;
};

void require_same_triple(const VElem& x, const VElem& y);

RatFn q_eval(const VElem& x);
RatFn f_eval(const VElem& x, const VElem& y);

// (cu, cv, c^theta t): the [K]-slot twist
VElem scalar_mul(const RatFn& c, const VElem& x);

// g(x, y) = (0, 0, f(x, y)), a radical vector
VElem g_map(const VElem& x, const VElem& y);

// Fixed K-basis of V: (1,0,0), (g,0,0), (0,1,0), (0,g,0), (0,0,1), (0,0,beta).
// The twisted slot uses {1, beta} since beta lies outside F.
std::array<VElem, 6> v_basis(const TriplePtr& tri);

// coordinates of x in the basis above (twisted-scalar combination)
std::array<RatFn, 6> v_coordinates(const VElem& x);
VElem v_from_coordinates(const TriplePtr& tri, const std::array<RatFn, 6>& c);

// One exact solution e of the K-linear system f(c_i, e) = r_i, chosen by
// deterministic row reduction with first-nonzero pivot and zero free
// variables. Throws Unsolvable / InconsistentSystem.
VElem solve_f_conditions(const TriplePtr& tri,
                         const std::vector<std::pair<VElem, RatFn>>& constraints);

struct AnisotropyReport {
    int trials = 0;
    int nonzero_values = 0;
    std::vector<VElem> isotropic_witnesses; // nonzero x with q(x) = 0: hard failure
    bool ok() const { return isotropic_witnesses.empty(); }
};

AnisotropyReport anisotropy_sample(const TriplePtr& tri, int trials, Rng& rng, int max_deg,
                                   const std::vector<VElem>& extra_probes = {});

// samplers shared by the verification suites
RatFn sample_poly(Rng& rng, int max_deg);
RatFn sample_ratfn(Rng& rng, int num_deg, int den_deg);
RatFn sample_nonzero_ratfn(Rng& rng, int num_deg, int den_deg);
ExtElem sample_ext(const TriplePtr& tri, Rng& rng, int max_deg, int den_deg = 1);
VElem sample_v(const TriplePtr& tri, Rng& rng, int max_deg, int den_deg = 1);
VElem sample_nonzero_v(const TriplePtr& tri, Rng& rng, int max_deg, int den_deg = 1);

} // namespace f4ms

#endif
