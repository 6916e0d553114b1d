#include "f4ms/tits.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "f4ms/errors.hpp"

namespace f4ms {

TitsEndo::TitsEndo(RatFn image_a, RatFn image_b)
    : img_a_(std::move(image_a)), img_b_(std::move(image_b)) {
    standard_ = img_a_ == RatFn(Gf2Poly::monomial(0, 2)) && img_b_ == RatFn::var_a();
    // theta^2 = Frobenius is checkable on the generators
    if ((*this)((*this)(RatFn::var_a())) != RatFn::var_a().square() ||
        (*this)((*this)(RatFn::var_b())) != RatFn::var_b().square())
        throw Error("generator images do not define a Tits endomorphism");
}

RatFn TitsEndo::subst_poly(const Gf2Poly& p) const {
    if (p.is_zero()) return RatFn::zero();
    if (standard_)
        return RatFn(p.map_terms([](int ea, int eb) { return std::pair<int, int>{eb, 2 * ea}; }));
    // generic substitution with memoized generator powers
    std::map<int, RatFn> pow_a, pow_b;
    auto power = [](std::map<int, RatFn>& memo, const RatFn& base, int e) -> const RatFn& {
        auto it = memo.find(e);
        if (it == memo.end()) it = memo.emplace(e, base.pow(e)).first;
        return it->second;
    };
    RatFn acc;
    for (auto& [ea, eb] : p.terms())
        acc += power(pow_a, img_a_, ea) * power(pow_b, img_b_, eb);
    return acc;
}

RatFn TitsEndo::operator()(const RatFn& x) const {
    if (standard_) {
        // images are monomials, so numerator and denominator map separately
        auto swap2 = [](int ea, int eb) { return std::pair<int, int>{eb, 2 * ea}; };
        return RatFn(x.num().map_terms(swap2), x.den().map_terms(swap2));
    }
    return subst_poly(x.num()) / subst_poly(x.den());
}

// ---------------------------------------------------------- linear algebra

namespace {

// Dense GF(2) row reduction. Rows are bit masks over ncols unknowns plus a
// trailing rhs bit; returns a particular solution with free unknowns zero.
class Gf2System {
public:
    explicit Gf2System(int ncols) : ncols_(ncols) {}

    // add equation sum_j coeffs[j]*x_j = rhs_bit, sparse over monomial rows
    void accumulate(int col, const Gf2Poly& poly) {
        for (auto& t : poly.terms()) row_for(t) ^= bit(col);
    }
    void accumulate_rhs(const Gf2Poly& poly) {
        for (auto& t : poly.terms()) row_for(t) ^= bit(ncols_);
    }

    std::optional<std::vector<bool>> solve() const {
        std::vector<std::uint64_t> rows;
        rows.reserve(rows_.size());
        for (auto& [mono, mask] : rows_)
            if (mask) rows.push_back(mask);
        int rank = 0;
        for (int col = 0; col <= ncols_; ++col) {
            std::size_t pivot = static_cast<std::size_t>(rank);
            while (pivot < rows.size() && !(rows[pivot] & bit(col))) ++pivot;
            if (pivot == rows.size()) continue;
            std::swap(rows[static_cast<std::size_t>(rank)], rows[pivot]);
            for (std::size_t r = 0; r < rows.size(); ++r)
                if (r != static_cast<std::size_t>(rank) && (rows[r] & bit(col)))
                    rows[r] ^= rows[static_cast<std::size_t>(rank)];
            if (col == ncols_) return std::nullopt; // pivot in rhs: inconsistent
            ++rank;
        }
        std::vector<bool> x(static_cast<std::size_t>(ncols_), false);
        for (auto mask : rows) {
            if (!mask) continue;
            int lead = __builtin_ctzll(mask);
            x[static_cast<std::size_t>(lead)] = (mask >> ncols_) & 1;
        }
        return x;
    }

private:
    int ncols_;
    std::map<std::pair<int, int>, std::uint64_t> rows_;
    static std::uint64_t bit(int c) { return 1ULL << c; }
    std::uint64_t& row_for(const std::pair<int, int>& mono) { return rows_[mono]; }
};

std::vector<Gf2Poly> monomial_basis(int maxdeg) {
    std::vector<Gf2Poly> basis;
    for (int d = 0; d <= maxdeg; ++d)
        for (int ea = d; ea >= 0; --ea) basis.push_back(Gf2Poly::monomial(ea, d - ea));
    // reorder so index 0 is the constant 1 (degree-graded already: d=0 first)
    return basis;
}

} // namespace

TraceAnswer tits_trace_search(const TitsEndo& theta, const RatFn& x, int maxdeg) {
    if (maxdeg < 0) throw std::invalid_argument("maxdeg must be >= 0");
    if (x.is_zero()) return TraceWitness{RatFn::zero()};
    std::vector<Gf2Poly> basis = monomial_basis(maxdeg);
    if (basis.size() > 20) throw DegreeOverflow("trace search basis too large (maxdeg > 4)");
    std::vector<Gf2Poly> theta_basis;
    theta_basis.reserve(basis.size());
    for (auto& m : basis) {
        RatFn im = theta(RatFn(m));
        theta_basis.push_back(im.num()); // monomial images of monomials are polynomials
        if (!im.den().is_one()) throw Error("trace search requires polynomial theta images");
    }
    const Gf2Poly& xn = x.num();
    const Gf2Poly& xd = x.den();

    // denominator d ranges over nonzero subsets of the basis; the linear
    // system expresses theta(p)*d*xd + p*theta(d)*xd = xn*d*theta(d)
    const std::uint64_t count = 1ULL << basis.size();
    for (std::uint64_t mask = 1; mask < count; ++mask) {
        Gf2Poly d, theta_d;
        for (std::size_t j = 0; j < basis.size(); ++j)
            if (mask & (1ULL << j)) {
                d += basis[j];
                theta_d += theta_basis[j];
            }
        Gf2Poly dxd = d * xd;
        Gf2Poly tdxd = theta_d * xd;
        Gf2System sys(static_cast<int>(basis.size()));
        for (std::size_t j = 0; j < basis.size(); ++j) {
            sys.accumulate(static_cast<int>(j), theta_basis[j] * dxd);
            sys.accumulate(static_cast<int>(j), basis[j] * tdxd);
        }
        sys.accumulate_rhs(xn * d * theta_d);
        auto sol = sys.solve();
        if (!sol) continue;
        Gf2Poly p;
        for (std::size_t j = 0; j < basis.size(); ++j)
            if ((*sol)[j]) p += basis[j];
        RatFn lambda(p, d);
        if (is_witness(theta, lambda, x)) return TraceWitness{lambda};
    }
    return NoWitnessUpTo{maxdeg};
}

std::pair<RatFn, RatFn> f_decompose(const RatFn& t) {
    if (t.is_zero()) return {RatFn::zero(), RatFn::zero()};
    // t = (num*den)/den^2 and den^2 lies in F
    Gf2Poly nd = t.num() * t.den();
    Gf2Poly d2 = t.den().square();
    return {RatFn(nd.even_b_part(), d2), RatFn(nd.odd_b_part_div_b(), d2)};
}

bool is_in_subfield_f(const RatFn& x) {
    return x.num().all_b_even() && x.den().all_b_even();
}

RatFn theta_inverse(const TitsEndo& theta, const RatFn& y) {
    if (y.is_zero()) return RatFn::zero();
    if (theta.is_standard()) {
        if (!is_in_subfield_f(y)) throw Error("theta_inverse: element not in K^theta");
        auto unswap = [](int ea, int eb) { return std::pair<int, int>{eb / 2, ea}; };
        RatFn r(y.num().map_terms(unswap), y.den().map_terms(unswap));
        if (theta(r) != y) throw std::logic_error("theta_inverse: standard-path check failed");
        return r;
    }
    // solve theta(p)*y_den = y_num*theta(q) for p, q jointly; the system is
    // homogeneous, so fix each candidate q-monomial coefficient to 1 in turn
    int bound = std::max(1, std::max(y.num().total_deg(), y.den().total_deg()));
    std::vector<Gf2Poly> basis = monomial_basis(bound);
    if (basis.size() * 2 > 62) throw DegreeOverflow("theta_inverse search basis too large");
    std::vector<Gf2Poly> tb;
    for (auto& m : basis) {
        RatFn im = theta(RatFn(m));
        if (!im.den().is_one()) throw Error("theta_inverse requires polynomial theta images");
        tb.push_back(im.num());
    }
    for (std::size_t pin = 0; pin < basis.size(); ++pin) {
        Gf2System sys(static_cast<int>(basis.size() + pin));
        // unknowns: p over full basis, q over basis[0..pin) with q += basis[pin]
        for (std::size_t j = 0; j < basis.size(); ++j)
            sys.accumulate(static_cast<int>(j), tb[j] * y.den());
        for (std::size_t j = 0; j < pin; ++j)
            sys.accumulate(static_cast<int>(basis.size() + j), y.num() * tb[j]);
        sys.accumulate_rhs(y.num() * tb[pin]);
        auto sol = sys.solve();
        if (!sol) continue;
        Gf2Poly p, q = basis[pin];
        for (std::size_t j = 0; j < basis.size(); ++j)
            if ((*sol)[j]) p += basis[j];
        for (std::size_t j = 0; j < pin; ++j)
            if ((*sol)[basis.size() + j]) q += basis[j];
        if (q.is_zero()) continue;
        RatFn r(p, q);
        if (theta(r) == y) return r;
    }
    throw Error("theta_inverse: no preimage found within degree bound");
}

} // namespace f4ms
