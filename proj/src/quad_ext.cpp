#include "f4ms/quad_ext.hpp"

#include "f4ms/errors.hpp"

namespace f4ms {

ExtPtr make_extension(RatFn delta, RatFn lambda, TitsEndo theta) {
    if (theta(lambda) + lambda != delta) throw WitnessMismatch();
    // bounded irreducibility sanity check: reject delta = y^2 + y for y in
    // the degree-<=2 polynomial span (a visible Artin-Schreier root)
    std::vector<Gf2Poly> basis;
    for (int d = 0; d <= 2; ++d)
        for (int ea = d; ea >= 0; --ea) basis.push_back(Gf2Poly::monomial(ea, d - ea));
    for (std::uint64_t mask = 1; mask < (1ULL << basis.size()); ++mask) {
        Gf2Poly y;
        for (std::size_t j = 0; j < basis.size(); ++j)
            if (mask & (1ULL << j)) y += basis[j];
        RatFn ry(y);
        if (ry.square() + ry == delta)
            throw Error("delta = y^2 + y for y = " + ry.str() + "; x^2+x+delta is reducible");
    }
    return std::make_shared<ExtDescriptor>(ExtDescriptor{std::move(delta), std::move(lambda), std::move(theta)});
}

void require_same_ext(const ExtElem& x, const ExtElem& y) {
    if (x.ext() != y.ext()) throw DescriptorMismatch();
}

const RatFn& ExtElem::k_value() const {
    if (!b_.is_zero()) throw Error("element not in K: " + str());
    return a_;
}

ExtElem operator+(const ExtElem& x, const ExtElem& y) {
    require_same_ext(x, y);
    return {x.ext_, x.a_ + y.a_, x.b_ + y.b_};
}

ExtElem operator*(const ExtElem& x, const ExtElem& y) {
    require_same_ext(x, y);
    // (a + b g)(c + d g) = (ac + bd delta) + (ad + bc + bd) g
    RatFn ac = x.a_ * y.a_, bd = x.b_ * y.b_;
    RatFn ad = x.a_ * y.b_, bc = x.b_ * y.a_;
    return {x.ext_, ac + bd * x.ext_->delta, ad + bc + bd};
}

ExtElem ExtElem::conj() const { return {ext_, a_ + b_, b_}; }

RatFn ExtElem::norm() const { return a_.square() + a_ * b_ + b_.square() * ext_->delta; }

RatFn ExtElem::trace() const { return b_; }

ExtElem ExtElem::inv() const {
    if (is_zero()) throw ZeroElement();
    RatFn n_inv = norm().inv();
    ExtElem c = conj();
    return {ext_, c.a_ * n_inv, c.b_ * n_inv};
}

ExtElem ExtElem::theta(int which) const {
    // theta_1(a + b g) = (a^th + b^th lambda) + b^th g, theta_2 = chi . theta_1
    const TitsEndo& th = ext_->theta;
    RatFn at = th(a_), bt = th(b_);
    ExtElem r{ext_, at + bt * ext_->lambda, bt};
    if (which == 2) return r.conj();
    if (which != 1) throw std::invalid_argument("theta extension index must be 1 or 2");
    return r;
}

ExtElem ExtElem::square() const { return *this * *this; }

std::string ExtElem::str() const {
    if (b_.is_zero()) return a_.str();
    std::string s = b_.is_one() ? "g" : b_.str() + "*g";
    if (a_.is_zero()) return s;
    return a_.str() + " + " + s;
}

} // namespace f4ms
