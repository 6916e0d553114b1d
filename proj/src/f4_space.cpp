#include "f4ms/f4_space.hpp"

#include "f4ms/errors.hpp"
#include "f4ms/rng.hpp"

namespace f4ms {

TriplePtr make_polar_triple(ExtPtr ext, int theta_choice, RatFn beta) {
    if (beta.is_zero()) throw ZeroBeta();
    if (theta_choice != 1 && theta_choice != 2)
        throw std::invalid_argument("theta_choice must be 1 or 2");
    RatFn alpha = ext->theta(beta).inv();
    return std::make_shared<PolarTriple>(
        PolarTriple{std::move(ext), theta_choice, std::move(beta), std::move(alpha)});
}

TriplePtr tru7_triple() {
    static const TriplePtr tri = [] {
        ExtPtr ext = make_extension(RatFn::parse("a+b^2"), RatFn::var_a(), TitsEndo::standard());
        return make_polar_triple(ext, 1, RatFn::var_b());
    }();
    return tri;
}

VElem::VElem(TriplePtr tri, ExtElem u, ExtElem v, RatFn t)
    : tri_(std::move(tri)), u_(std::move(u)), v_(std::move(v)), t_(std::move(t)) {
    if (u_.ext() != tri_->ext || v_.ext() != tri_->ext) throw DescriptorMismatch();
}

VElem VElem::zero(const TriplePtr& tri) {
    return {tri, ExtElem::zero(tri->ext), ExtElem::zero(tri->ext), RatFn::zero()};
}

VElem VElem::from_k_coords(const TriplePtr& tri, const RatFn& u_a, const RatFn& u_b,
                           const RatFn& v_a, const RatFn& v_b, const RatFn& t) {
    return {tri, ExtElem(tri->ext, u_a, u_b), ExtElem(tri->ext, v_a, v_b), t};
}

void require_same_triple(const VElem& x, const VElem& y) {
    if (x.tri() != y.tri()) throw DescriptorMismatch();
}

VElem operator+(const VElem& x, const VElem& y) {
    require_same_triple(x, y);
    return {x.tri_, x.u_ + y.u_, x.v_ + y.v_, x.t_ + y.t_};
}

std::string VElem::str() const {
    return "(" + u_.str() + ", " + v_.str() + ", " + t_.str() + ")";
}

RatFn q_eval(const VElem& x) {
    const PolarTriple& tri = *x.tri();
    RatFn inside = x.u().norm() + tri.alpha * x.v().norm();
    return inside * tri.beta.inv() + tri.theta_k(x.t());
}

RatFn f_eval(const VElem& x, const VElem& y) {
    require_same_triple(x, y);
    const PolarTriple& tri = *x.tri();
    // beta^{-1}(u ybar_u + ubar y_u + alpha(v ybar_v + vbar y_v)); the [K]
    // slot lies in the radical and does not enter
    ExtElem s = x.u() * y.u().conj() + x.u().conj() * y.u();
    ExtElem tpart = x.v() * y.v().conj() + x.v().conj() * y.v();
    ExtElem total = s + ExtElem::from_k(tri.ext, tri.alpha) * tpart;
    return total.k_value() * tri.beta.inv();
}

VElem scalar_mul(const RatFn& c, const VElem& x) {
    ExtElem ce = ExtElem::from_k(x.tri()->ext, c);
    return {x.tri(), ce * x.u(), ce * x.v(), x.tri()->theta_k(c) * x.t()};
}

VElem g_map(const VElem& x, const VElem& y) {
    return {x.tri(), ExtElem::zero(x.tri()->ext), ExtElem::zero(x.tri()->ext), f_eval(x, y)};
}

std::array<VElem, 6> v_basis(const TriplePtr& tri) {
    const ExtPtr& e = tri->ext;
    ExtElem zero = ExtElem::zero(e), one = ExtElem::one(e), gen = ExtElem::gen(e);
    return {VElem(tri, one, zero, RatFn::zero()),  VElem(tri, gen, zero, RatFn::zero()),
            VElem(tri, zero, one, RatFn::zero()),  VElem(tri, zero, gen, RatFn::zero()),
            VElem(tri, zero, zero, RatFn::one()),  VElem(tri, zero, zero, tri->beta)};
}

std::array<RatFn, 6> v_coordinates(const VElem& x) {
    const PolarTriple& tri = *x.tri();
    // the twisted slot: t = f1 + f2*beta with f1, f2 in F, coordinates are
    // the theta-preimages
    auto [f1, f2] = f_decompose(x.t());
    return {x.u().a(), x.u().b(), x.v().a(), x.v().b(),
            theta_inverse(tri.ext->theta, f1), theta_inverse(tri.ext->theta, f2)};
}

VElem v_from_coordinates(const TriplePtr& tri, const std::array<RatFn, 6>& c) {
    auto basis = v_basis(tri);
    VElem acc = VElem::zero(tri);
    for (std::size_t i = 0; i < 6; ++i) acc += scalar_mul(c[i], basis[i]);
    return acc;
}

VElem solve_f_conditions(const TriplePtr& tri,
                         const std::vector<std::pair<VElem, RatFn>>& constraints) {
    auto basis = v_basis(tri);
    const std::size_t n = constraints.size();
    // rows: [ f(c_i, b_j) | r_i ]; the radical basis vectors contribute zero
    // columns, so only 4 unknowns are live, but keep all 6 for clarity
    std::vector<std::array<RatFn, 7>> rows(n);
    for (std::size_t i = 0; i < n; ++i) {
        bool any = false;
        for (std::size_t j = 0; j < 6; ++j) {
            rows[i][j] = f_eval(constraints[i].first, basis[j]);
            any = any || !rows[i][j].is_zero();
        }
        rows[i][6] = constraints[i].second;
        if (!any && !rows[i][6].is_zero())
            throw Unsolvable("constraint vector lies in the radical of f");
    }
    // Gaussian elimination, first-nonzero pivot
    std::vector<int> pivot_col(n, -1);
    std::size_t rank = 0;
    for (int col = 0; col < 6 && rank < n; ++col) {
        std::size_t p = rank;
        while (p < n && rows[p][static_cast<std::size_t>(col)].is_zero()) ++p;
        if (p == n) continue;
        std::swap(rows[rank], rows[p]);
        RatFn inv = rows[rank][static_cast<std::size_t>(col)].inv();
        for (auto& v : rows[rank]) v = v * inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == rank) continue;
            const RatFn& factor = rows[r][static_cast<std::size_t>(col)];
            if (factor.is_zero()) continue;
            RatFn f0 = factor;
            for (std::size_t c2 = 0; c2 < 7; ++c2) rows[r][c2] = rows[r][c2] + f0 * rows[rank][c2];
        }
        pivot_col[rank] = col;
        ++rank;
    }
    for (std::size_t r = rank; r < n; ++r)
        if (!rows[r][6].is_zero()) throw InconsistentSystem("contradictory constraints");
    std::array<RatFn, 6> x{};
    for (std::size_t r = 0; r < rank; ++r) x[static_cast<std::size_t>(pivot_col[r])] = rows[r][6];
    return v_from_coordinates(tri, x);
}

AnisotropyReport anisotropy_sample(const TriplePtr& tri, int trials, Rng& rng, int max_deg,
                                   const std::vector<VElem>& extra_probes) {
    AnisotropyReport rep;
    auto probe = [&](const VElem& x) {
        if (x.is_zero()) return;
        ++rep.trials;
        if (q_eval(x).is_zero())
            rep.isotropic_witnesses.push_back(x);
        else
            ++rep.nonzero_values;
    };
    for (const VElem& x : extra_probes) probe(x);
    for (int i = 0; i < trials; ++i) probe(sample_nonzero_v(tri, rng, max_deg));
    return rep;
}

// ----------------------------------------------------------------- sampling

RatFn sample_poly(Rng& rng, int max_deg) {
    // each monomial of total degree <= max_deg present with probability 1/2
    std::vector<std::pair<int, int>> terms;
    for (int d = 0; d <= max_deg; ++d)
        for (int ea = d; ea >= 0; --ea)
            if (rng.coin()) terms.emplace_back(ea, d - ea);
    return RatFn(Gf2Poly::from_terms(terms));
}

RatFn sample_ratfn(Rng& rng, int num_deg, int den_deg) {
    RatFn num = sample_poly(rng, num_deg);
    if (den_deg <= 0) return num;
    RatFn den = sample_poly(rng, den_deg);
    while (den.is_zero()) den = sample_poly(rng, den_deg);
    return num / den;
}

RatFn sample_nonzero_ratfn(Rng& rng, int num_deg, int den_deg) {
    RatFn x = sample_ratfn(rng, num_deg, den_deg);
    while (x.is_zero()) x = sample_ratfn(rng, num_deg, den_deg);
    return x;
}

ExtElem sample_ext(const TriplePtr& tri, Rng& rng, int max_deg, int den_deg) {
    return {tri->ext, sample_ratfn(rng, max_deg, den_deg), sample_ratfn(rng, max_deg, den_deg)};
}

VElem sample_v(const TriplePtr& tri, Rng& rng, int max_deg, int den_deg) {
    return {tri, sample_ext(tri, rng, max_deg, den_deg), sample_ext(tri, rng, max_deg, den_deg),
            sample_ratfn(rng, max_deg, den_deg)};
}

VElem sample_nonzero_v(const TriplePtr& tri, Rng& rng, int max_deg, int den_deg) {
    VElem x = sample_v(tri, rng, max_deg, den_deg);
    while (x.is_zero()) x = sample_v(tri, rng, max_deg, den_deg);
    return x;
}

} // namespace f4ms
