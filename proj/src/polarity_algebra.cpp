#include "f4ms/polarity_algebra.hpp"

#include "f4ms/errors.hpp"
#include "f4ms/rng.hpp"

namespace f4ms {

namespace {

struct ProductParts {
    ExtElem r1, r2;
    ExtElem r3; // must be K-valued
};

ProductParts pa_mul_parts(const VElem& x, const VElem& y, bool mutate) {
    require_same_triple(x, y);
    const PolarTriple& tri = *x.tri();
    const ExtPtr& E = tri.ext;
    auto K = [&](const RatFn& c) { return ExtElem::from_k(E, c); };
    const ExtElem alpha = K(tri.alpha);
    const ExtElem beta_inv = K(tri.beta.inv());
    const ExtElem &p1 = x.u(), &p2 = x.v();
    const RatFn& p3 = x.t();
    const ExtElem &q1 = y.u(), &q2 = y.v();
    const RatFn& q3 = y.t();
    auto th = [&](const ExtElem& z) { return tri.theta_e(z); };

    ExtElem r1 = K(q3) * p1 + alpha * (th(q1.conj()) * p2 + beta_inv * th(q2) * p2.conj());
    ExtElem p1_for_r2 = mutate ? p1.conj() : p1; // test hook: wrong conjugation
    ExtElem r2 = K(q3) * p2 + th(q1) * p1_for_r2 + beta_inv * th(q2) * p1.conj();
    ExtElem r3 = K(tri.theta_k(q3) * p3) + beta_inv * K(p3) * (q1 * q1.conj() + alpha * q2 * q2.conj()) +
                 alpha * beta_inv *
                     (th(p1) * q1 * q2.conj() + th(p1.conj()) * q1.conj() * q2 +
                      beta_inv * (th(p2) * q1.conj() * q2.conj() + th(p2.conj()) * q1 * q2));
    return {r1, r2, r3};
}

} // namespace

VElem pa_mul(const VElem& x, const VElem& y) {
    ProductParts p = pa_mul_parts(x, y, false);
    return {x.tri(), p.r1, p.r2, p.r3.k_value()};
}

VElem pa_mul_mutated(const VElem& x, const VElem& y) {
    ProductParts p = pa_mul_parts(x, y, true);
    return {x.tri(), p.r1, p.r2, p.r3.k_value()};
}

VElem pa_inv(const VElem& x) {
    if (x.is_zero()) throw ZeroElement();
    return scalar_mul(q_eval(x).inv(), x);
}

VElem polar_pair(const VElem& d) {
    if (d.is_zero()) throw ZeroElement();
    if (d.in_radical()) throw RadicalInput();
    const TriplePtr& tri = d.tri();
    VElem dd = pa_mul(d, d);
    // f(d,ed) = 0 is the plain condition f(dd,e) = 0 via g(u,vw) = g(uw,v)
    VElem e = solve_f_conditions(
        tri, {{d, RatFn::one()}, {dd, RatFn::zero()}});
    RatFn lam = f_eval(pa_mul(e, e), d) / q_eval(d);
    return e + scalar_mul(lam, dd);
}

VElem root_pair(const VElem& a) {
    if (a.is_zero()) throw ZeroElement();
    return pa_mul(a, a);
}

// --------------------------------------------------------------- the suite

namespace {

using Product = VElem (*)(const VElem&, const VElem&);

std::string cex2(const char* nx, const VElem& x, const char* ny, const VElem& y) {
    return std::string(nx) + " = " + x.str() + "; " + ny + " = " + y.str();
}

std::vector<NamedCheck> axiom_checks(const TriplePtr& tri, int deg, Product mul) {
    std::vector<NamedCheck> cs;
    auto sample = [tri, deg](Rng& rng) { return sample_v(tri, rng, deg); };
    auto sample_nz = [tri, deg](Rng& rng) { return sample_nonzero_v(tri, rng, deg); };
    auto radical = [tri](const RatFn& t) {
        return VElem(tri, ExtElem::zero(tri->ext), ExtElem::zero(tri->ext), t);
    };

    cs.push_back({"x->xv additive", 1, [=](Rng& rng) -> std::optional<std::string> {
        VElem x = sample(rng), y = sample(rng), v = sample(rng);
        if (mul(x + y, v) == mul(x, v) + mul(y, v)) return std::nullopt;
        return cex2("x", x, "y", y) + "; v = " + v.str();
    }});
    cs.push_back({"x->xv homogeneous", 1, [=](Rng& rng) -> std::optional<std::string> {
        VElem x = sample(rng), v = sample(rng);
        RatFn c = sample_ratfn(rng, deg, 1);
        if (mul(scalar_mul(c, x), v) == scalar_mul(c, mul(x, v))) return std::nullopt;
        return cex2("x", x, "v", v) + "; c = " + c.str();
    }});
    cs.push_back({"v[t]=tv", 1, [=](Rng& rng) -> std::optional<std::string> {
        VElem v = sample(rng);
        RatFn t = sample_ratfn(rng, deg, 1);
        if (mul(v, radical(t)) == scalar_mul(t, v)) return std::nullopt;
        return "v = " + v.str() + "; t = " + t.str();
    }});
    cs.push_back({"u(tv)=t^th(uv)", 1, [=](Rng& rng) -> std::optional<std::string> {
        VElem u = sample(rng), v = sample(rng);
        RatFn t = sample_ratfn(rng, deg, 1);
        if (mul(u, scalar_mul(t, v)) == scalar_mul(tri->theta_k(t), mul(u, v))) return std::nullopt;
        return cex2("u", u, "v", v) + "; t = " + t.str();
    }});
    cs.push_back({"[t]v=[tq(v)]", 1, [=](Rng& rng) -> std::optional<std::string> {
        VElem v = sample(rng);
        RatFn t = sample_ratfn(rng, deg, 1);
        if (mul(radical(t), v) == radical(t * q_eval(v))) return std::nullopt;
        return "v = " + v.str() + "; t = " + t.str();
    }});
    cs.push_back({"uv.v=q(v)^th u", 1, [=](Rng& rng) -> std::optional<std::string> {
        VElem u = sample(rng), v = sample(rng);
        if (mul(mul(u, v), v) == scalar_mul(tri->theta_k(q_eval(v)), u)) return std::nullopt;
        return cex2("u", u, "v", v);
    }});
    cs.push_back({"v.uv=q(v)vu", 1, [=](Rng& rng) -> std::optional<std::string> {
        VElem u = sample(rng), v = sample(rng);
        if (mul(v, mul(u, v)) == scalar_mul(q_eval(v), mul(v, u))) return std::nullopt;
        return cex2("u", u, "v", v);
    }});
    cs.push_back({"u(v+w)=uv+uw+g(vu,w)", 1, [=](Rng& rng) -> std::optional<std::string> {
        VElem u = sample(rng), v = sample(rng), w = sample(rng);
        if (mul(u, v + w) == mul(u, v) + mul(u, w) + g_map(mul(v, u), w)) return std::nullopt;
        return cex2("u", u, "v", v) + "; w = " + w.str();
    }});
    (void)sample_nz;
    return cs;
}

} // namespace

std::vector<NamedCheck> polarity_axiom_checks(const TriplePtr& tri, int deg) {
    return axiom_checks(tri, deg, &pa_mul);
}

std::vector<NamedCheck> polarity_axiom_checks_mutated(const TriplePtr& tri, int deg) {
    return axiom_checks(tri, deg, &pa_mul_mutated);
}

std::vector<NamedCheck> polarity_identity_checks(const TriplePtr& tri, int deg) {
    std::vector<NamedCheck> cs;
    auto sample = [tri, deg](Rng& rng) { return sample_v(tri, rng, deg); };
    auto sample_nz = [tri, deg](Rng& rng) { return sample_nonzero_v(tri, rng, deg); };
    auto th = [tri](const RatFn& x) { return tri->theta_k(x); };
    auto radical = [tri](const RatFn& t) {
        return VElem(tri, ExtElem::zero(tri->ext), ExtElem::zero(tri->ext), t);
    };

    cs.push_back({"g(u,uw)=0", 1, [=](Rng& rng) -> std::optional<std::string> {
        VElem u = sample(rng), w = sample(rng);
        if (f_eval(u, pa_mul(u, w)).is_zero()) return std::nullopt;
        return cex2("u", u, "w", w);
    }});
    cs.push_back({"g(u,vw)=g(uw,v)", 1, [=](Rng& rng) -> std::optional<std::string> {
        VElem u = sample(rng), v = sample(rng), w = sample(rng);
        if (f_eval(u, pa_mul(v, w)) == f_eval(pa_mul(u, w), v)) return std::nullopt;
        return cex2("u", u, "v", v) + "; w = " + w.str();
    }});
    cs.push_back({"g(u,v)w=g(q(w)u,v)", 1, [=](Rng& rng) -> std::optional<std::string> {
        VElem u = sample(rng), v = sample(rng), w = sample(rng);
        if (pa_mul(g_map(u, v), w) == g_map(scalar_mul(q_eval(w), u), v)) return std::nullopt;
        return cex2("u", u, "v", v) + "; w = " + w.str();
    }});
    cs.push_back({"tg(u,v)=g(t^th u,v)", 1, [=](Rng& rng) -> std::optional<std::string> {
        VElem u = sample(rng), v = sample(rng);
        RatFn t = sample_ratfn(rng, deg, 1);
        if (scalar_mul(t, g_map(u, v)) == g_map(scalar_mul(th(t), u), v)) return std::nullopt;
        return cex2("u", u, "v", v) + "; t = " + t.str();
    }});
    cs.push_back({"v.wu=f(u,vw)u+f(u,v)uw+q(u)vw", 1, [=](Rng& rng) -> std::optional<std::string> {
        VElem u = sample(rng), v = sample(rng), w = sample(rng);
        VElem lhs = pa_mul(v, pa_mul(w, u));
        VElem rhs = scalar_mul(f_eval(u, pa_mul(v, w)), u) +
                    scalar_mul(f_eval(u, v), pa_mul(u, w)) +
                    scalar_mul(q_eval(u), pa_mul(v, w));
        if (lhs == rhs) return std::nullopt;
        return cex2("u", u, "v", v) + "; w = " + w.str();
    }});
    cs.push_back({"uv.w+uw.v=g(v,f(v,wu)w)+f(v,w)^th u", 1, [=](Rng& rng) -> std::optional<std::string> {
        VElem u = sample(rng), v = sample(rng), w = sample(rng);
        VElem lhs = pa_mul(pa_mul(u, v), w) + pa_mul(pa_mul(u, w), v);
        VElem rhs = g_map(v, scalar_mul(f_eval(v, pa_mul(w, u)), w)) +
                    scalar_mul(th(f_eval(v, w)), u);
        if (lhs == rhs) return std::nullopt;
        return cex2("u", u, "v", v) + "; w = " + w.str();
    }});
    cs.push_back({"q(uv)=q(u)q(v)^th", 1, [=](Rng& rng) -> std::optional<std::string> {
        VElem u = sample(rng), v = sample(rng);
        if (q_eval(pa_mul(u, v)) == q_eval(u) * th(q_eval(v))) return std::nullopt;
        return cex2("u", u, "v", v);
    }});
    cs.push_back({"q([t])=t^th", 1, [=](Rng& rng) -> std::optional<std::string> {
        RatFn t = sample_ratfn(rng, deg, 1);
        if (q_eval(radical(t)) == th(t)) return std::nullopt;
        return "t = " + t.str();
    }});
    cs.push_back({"f(uv,uw)=f(v,wu)^th+q(u)f(v,w)^th", 1, [=](Rng& rng) -> std::optional<std::string> {
        VElem u = sample(rng), v = sample(rng), w = sample(rng);
        RatFn lhs = f_eval(pa_mul(u, v), pa_mul(u, w));
        RatFn rhs = th(f_eval(v, pa_mul(w, u))) + q_eval(u) * th(f_eval(v, w));
        if (lhs == rhs) return std::nullopt;
        return cex2("u", u, "v", v) + "; w = " + w.str();
    }});
    cs.push_back({"f(uv,wv)=q(v)^th f(u,w)", 1, [=](Rng& rng) -> std::optional<std::string> {
        VElem u = sample(rng), v = sample(rng), w = sample(rng);
        if (f_eval(pa_mul(u, v), pa_mul(w, v)) == th(q_eval(v)) * f_eval(u, w)) return std::nullopt;
        return cex2("u", u, "v", v) + "; w = " + w.str();
    }});
    cs.push_back({"(uv)^-1=u^-1 v^-1", 1, [=](Rng& rng) -> std::optional<std::string> {
        VElem u = sample_nz(rng), v = sample_nz(rng);
        if (pa_inv(pa_mul(u, v)) == pa_mul(pa_inv(u), pa_inv(v))) return std::nullopt;
        return cex2("u", u, "v", v);
    }});
    cs.push_back({"u^-1.vu=uv", 1, [=](Rng& rng) -> std::optional<std::string> {
        VElem u = sample_nz(rng), v = sample(rng);
        if (pa_mul(pa_inv(u), pa_mul(v, u)) == pa_mul(u, v)) return std::nullopt;
        return cex2("u", u, "v", v);
    }});
    cs.push_back({"uv.v^-1=u", 1, [=](Rng& rng) -> std::optional<std::string> {
        VElem u = sample(rng), v = sample_nz(rng);
        if (pa_mul(pa_mul(u, v), pa_inv(v)) == u) return std::nullopt;
        return cex2("u", u, "v", v);
    }});
    cs.push_back({"g(uv.w,zv)=f(w,v)g(uv,z)+q(v)g(uw,z)", 1, [=](Rng& rng) -> std::optional<std::string> {
        VElem u = sample(rng), v = sample(rng), w = sample(rng), z = sample(rng);
        VElem lhs = g_map(pa_mul(pa_mul(u, v), w), pa_mul(z, v));
        VElem rhs = scalar_mul(f_eval(w, v), g_map(pa_mul(u, v), z)) +
                    scalar_mul(q_eval(v), g_map(pa_mul(u, w), z));
        if (lhs == rhs) return std::nullopt;
        return cex2("u", u, "v", v) + "; " + cex2("w", w, "z", z);
    }});
    cs.push_back({"g(uv.w,uz) six-term expansion", 1, [=](Rng& rng) -> std::optional<std::string> {
        VElem u = sample(rng), v = sample(rng), w = sample(rng), z = sample(rng);
        VElem lhs = g_map(pa_mul(pa_mul(u, v), w), pa_mul(u, z));
        VElem rhs = scalar_mul(f_eval(pa_mul(v, u), z), w) + scalar_mul(f_eval(pa_mul(w, u), v), z) +
                    scalar_mul(f_eval(pa_mul(w, u), z), v) + scalar_mul(f_eval(w, v), pa_mul(z, u)) +
                    scalar_mul(f_eval(w, z), pa_mul(v, u)) + scalar_mul(f_eval(v, z), pa_mul(w, u));
        if (lhs == rhs) return std::nullopt;
        return cex2("u", u, "v", v) + "; " + cex2("w", w, "z", z);
    }});
    cs.push_back({"f(uv,zw)+f(uw,zv)=f(u,z)f(v,w)^th", 1, [=](Rng& rng) -> std::optional<std::string> {
        VElem u = sample(rng), v = sample(rng), w = sample(rng), z = sample(rng);
        RatFn lhs = f_eval(pa_mul(u, v), pa_mul(z, w)) + f_eval(pa_mul(u, w), pa_mul(z, v));
        if (lhs == f_eval(u, z) * th(f_eval(v, w))) return std::nullopt;
        return cex2("u", u, "v", v) + "; " + cex2("w", w, "z", z);
    }});
    cs.push_back({"uv.vu=q(uv)u", 1, [=](Rng& rng) -> std::optional<std::string> {
        VElem u = sample(rng), v = sample(rng);
        VElem uv = pa_mul(u, v);
        if (pa_mul(uv, pa_mul(v, u)) == scalar_mul(q_eval(uv), u)) return std::nullopt;
        return cex2("u", u, "v", v);
    }});
    cs.push_back({"uv.vw=q(wv)u+f(u,w)q(v)^th w+f(uv,w)wv", 1, [=](Rng& rng) -> std::optional<std::string> {
        VElem u = sample(rng), v = sample(rng), w = sample(rng);
        VElem uv = pa_mul(u, v), wv = pa_mul(w, v);
        VElem lhs = pa_mul(uv, pa_mul(v, w));
        VElem rhs = scalar_mul(q_eval(wv), u) + scalar_mul(f_eval(u, w) * th(q_eval(v)), w) +
                    scalar_mul(f_eval(uv, w), wv);
        if (lhs == rhs) return std::nullopt;
        return cex2("u", u, "v", v) + "; w = " + w.str();
    }});
    cs.push_back({"uv.vw=(u.vw).v", 1, [=](Rng& rng) -> std::optional<std::string> {
        VElem u = sample(rng), v = sample(rng), w = sample(rng);
        VElem vw = pa_mul(v, w);
        if (pa_mul(pa_mul(u, v), vw) == pa_mul(pa_mul(u, vw), v)) return std::nullopt;
        return cex2("u", u, "v", v) + "; w = " + w.str();
    }});
    cs.push_back({"(vv)^-1.vv=v", 1, [=](Rng& rng) -> std::optional<std::string> {
        VElem v = sample_nz(rng);
        VElem vv = pa_mul(v, v);
        if (pa_mul(pa_inv(vv), vv) == v) return std::nullopt;
        return "v = " + v.str();
    }});
    cs.push_back({"(u^-1 u).(u^-1 u)=u", 1, [=](Rng& rng) -> std::optional<std::string> {
        VElem u = sample_nz(rng);
        VElem w = pa_mul(pa_inv(u), u);
        if (pa_mul(w, w) == u) return std::nullopt;
        return "u = " + u.str();
    }});
    cs.push_back({"u^-1(ww+u+g(u,w))+w nonzero", 1, [=](Rng& rng) -> std::optional<std::string> {
        VElem u = sample_nz(rng), w = sample(rng);
        VElem v = pa_mul(w, w) + u + g_map(u, w);
        if (!(pa_mul(pa_inv(u), v) + w).is_zero()) return std::nullopt;
        return cex2("u", u, "w", w);
    }});
    cs.push_back({"polar pair construction", 1, [=](Rng& rng) -> std::optional<std::string> {
        VElem d = sample_nz(rng);
        while (d.in_radical()) d = sample_nz(rng);
        VElem e = polar_pair(d);
        VElem dd = pa_mul(d, d), ed = pa_mul(e, d), de = pa_mul(d, e);
        RatFn qd = q_eval(d), qe = q_eval(e);
        RatFn s = f_eval(de, ed);
        if (!(f_eval(d, e) == RatFn::one())) return "f(d,e) != 1; d = " + d.str();
        if (!f_eval(d, ed).is_zero()) return "f(d,ed) != 0; d = " + d.str();
        if (!f_eval(pa_mul(e, e), d).is_zero()) return "f(ee,d) != 0; d = " + d.str();
        if (!(f_eval(dd, ed) == th(qd))) return "f(dd,ed) != q(d)^th; d = " + d.str();
        if (!(scalar_mul(th(qd), de) == scalar_mul(s, dd) + scalar_mul(qd, ed)))
            return "q(d)^th de != f(de,ed)dd + q(d)ed; d = " + d.str();
        if (!(qd * qe == s + th(s))) return "q(d)q(e) not the trace of f(de,ed); d = " + d.str();
        return std::nullopt;
    }});
    return cs;
}

} // namespace f4ms
