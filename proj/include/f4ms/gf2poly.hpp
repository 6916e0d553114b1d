#ifndef F4MS_GF2POLY_HPP
#define F4MS_GF2POLY_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace f4ms {

// Univariate polynomial over GF(2) in the variable b, stored as a bit
// vector (bit i = coefficient of b^i).
class BitPoly {
public:
    BitPoly() = default;

    static BitPoly one() { return monomial(0); }
    static BitPoly monomial(int k);

    bool is_zero() const { return w_.empty(); }
    int deg() const; // -1 for the zero polynomial
    bool get(int i) const;
    void flip(int i);

    BitPoly& operator^=(const BitPoly& o);
    friend BitPoly operator^(BitPoly a, const BitPoly& b) { return a ^= b; }
    friend BitPoly operator*(const BitPoly& a, const BitPoly& b);

    BitPoly square() const;
    BitPoly shifted(int k) const; // multiply by b^k

    static void divrem(const BitPoly& a, const BitPoly& d, BitPoly& q, BitPoly& r);
    BitPoly divexact(const BitPoly& d) const;
    static BitPoly gcd(BitPoly a, BitPoly b);

    // keep only bits with even (odd) index; the odd variant shifts down by one
    BitPoly even_bits() const;
    BitPoly odd_bits_shifted() const;
    bool all_even() const;

    bool operator==(const BitPoly& o) const { return w_ == o.w_; }
    std::uint64_t hash() const;

    void trim();
    const std::vector<std::uint64_t>& words() const { return w_; }

private:
    std::vector<std::uint64_t> w_;
};

// Polynomial over GF(2) in the variables a, b. Recursive representation:
// c_[i] is the BitPoly coefficient of a^i. The term set view (exponent
// pairs, implicit coefficient 1) is what addition-as-symmetric-difference
// and the canonical-form contract refer to.
class Gf2Poly {
public:
    Gf2Poly() = default;

    static Gf2Poly zero() { return {}; }
    static Gf2Poly one() { return monomial(0, 0); }
    static Gf2Poly var_a() { return monomial(1, 0); }
    static Gf2Poly var_b() { return monomial(0, 1); }
    static Gf2Poly monomial(int ea, int eb);
    static Gf2Poly from_terms(const std::vector<std::pair<int, int>>& ts);

    bool is_zero() const { return c_.empty(); }
    bool is_one() const;
    int deg_a() const { return static_cast<int>(c_.size()) - 1; }
    int deg_b() const;
    int total_deg() const; // -1 for zero
    std::size_t term_count() const;

    friend Gf2Poly operator+(const Gf2Poly& x, const Gf2Poly& y);
    Gf2Poly& operator+=(const Gf2Poly& o);
    friend Gf2Poly operator*(const Gf2Poly& x, const Gf2Poly& y);
    Gf2Poly square() const;
    Gf2Poly pow(unsigned n) const;

    std::vector<std::pair<int, int>> terms() const; // (ea, eb), graded-lex desc, a > b

    // applies fn to every exponent pair; fn must be injective on the support
    template <class F>
    Gf2Poly map_terms(F&& fn) const {
        std::vector<std::pair<int, int>> out;
        for (auto& t : terms()) out.push_back(fn(t.first, t.second));
        return from_terms(out);
    }

    Gf2Poly even_b_part() const;
    Gf2Poly odd_b_part_div_b() const;
    bool all_b_even() const;

    static Gf2Poly gcd(const Gf2Poly& x, const Gf2Poly& y);
    Gf2Poly divexact(const Gf2Poly& d) const;

    bool operator==(const Gf2Poly& o) const { return c_ == o.c_; }
    std::uint64_t hash() const;
    std::string str() const; // e.g. "a^2*b+a+1"

    const BitPoly& coeff(int i) const { return c_[static_cast<std::size_t>(i)]; }

private:
    std::vector<BitPoly> c_;
    void trim();
    friend Gf2Poly scale_by(const Gf2Poly& p, const BitPoly& c, int shift_a);
    friend BitPoly poly_content(const Gf2Poly& p);
    friend Gf2Poly divexact_content(const Gf2Poly& p, const BitPoly& c);
};

// total-degree cap shared by all polynomial products (DegreeOverflow past it);
// set once at startup, before any worker threads run
int degree_cap();
void set_degree_cap(int cap);

} // namespace f4ms

#endif
