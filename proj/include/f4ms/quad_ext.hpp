#ifndef F4MS_QUAD_EXT_HPP
#define F4MS_QUAD_EXT_HPP

#include <memory>
#include <string>

#include "f4ms/ratfn.hpp"
#include "f4ms/tits.hpp"

namespace f4ms {

// Artin-Schreier extension E = K(g) with g^2 + g + delta = 0, carrying the
// trace witness lambda (lambda^theta + lambda = delta) that defines the two
// extensions theta_1, theta_2 of theta to E. All ExtElems of one computation
// share one descriptor; mixing descriptors throws DescriptorMismatch.
struct ExtDescriptor {
    RatFn delta;
    RatFn lambda;
    TitsEndo theta;
};

using ExtPtr = std::shared_ptr<const ExtDescriptor>;

// Validates the witness equation and runs a bounded reducibility rejection
// (delta must not be y^2 + y for y in the low-degree polynomial basis).
ExtPtr make_extension(RatFn delta, RatFn lambda, TitsEndo theta);

class ExtElem {
public:
    ExtElem(ExtPtr ext, RatFn a, RatFn b)
        : ext_(std::move(ext)), a_(std::move(a)), b_(std::move(b)) {}

    static ExtElem zero(const ExtPtr& e) { return {e, RatFn::zero(), RatFn::zero()}; }
    static ExtElem one(const ExtPtr& e) { return {e, RatFn::one(), RatFn::zero()}; }
    static ExtElem gen(const ExtPtr& e) { return {e, RatFn::zero(), RatFn::one()}; }
    static ExtElem from_k(const ExtPtr& e, RatFn x) { return {e, std::move(x), RatFn::zero()}; }

    const RatFn& a() const { return a_; }
    const RatFn& b() const { return b_; }
    const ExtPtr& ext() const { return ext_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_in_k() const { return b_.is_zero(); }
    // the K-part of a K-valued element; throws if a genuine g-component remains
    const RatFn& k_value() const;

    friend ExtElem operator+(const ExtElem& x, const ExtElem& y);
    friend ExtElem operator*(const ExtElem& x, const ExtElem& y);
    ExtElem& operator+=(const ExtElem& o) { return *this = *this + o; }

    ExtElem conj() const;    // Galois conjugation: g -> g + 1
    RatFn norm() const;      // a^2 + a*b + b^2*delta
    RatFn trace() const;     // x + conj(x) = b
    ExtElem inv() const;     // conj(x) / norm(x)
    ExtElem theta(int which) const; // which in {1, 2}; theta_2 = chi . theta_1
    ExtElem square() const;

    bool operator==(const ExtElem& o) const { return a_ == o.a_ && b_ == o.b_; }
    std::string str() const;

private:
    ExtPtr ext_;
    RatFn a_, b_;
};

void require_same_ext(const ExtElem& x, const ExtElem& y);

} // namespace f4ms

#endif
