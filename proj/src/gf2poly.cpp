#include "f4ms/gf2poly.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <stdexcept>

#include "f4ms/errors.hpp"

namespace f4ms {

namespace {
std::atomic<int> g_degree_cap{256};

constexpr std::uint64_t kEvenMask = 0x5555555555555555ULL;
} // namespace

int degree_cap() { return g_degree_cap.load(std::memory_order_relaxed); }
void set_degree_cap(int cap) { g_degree_cap.store(cap, std::memory_order_relaxed); }

// ---------------------------------------------------------------- BitPoly

void BitPoly::trim() {
    while (!w_.empty() && w_.back() == 0) w_.pop_back();
}

BitPoly BitPoly::monomial(int k) {
    BitPoly p;
    p.w_.assign(static_cast<std::size_t>(k / 64) + 1, 0);
    p.w_[static_cast<std::size_t>(k / 64)] = 1ULL << (k % 64);
    return p;
}

int BitPoly::deg() const {
    if (w_.empty()) return -1;
    std::uint64_t top = w_.back();
    int bit = 63;
    while (!(top >> bit)) --bit;
    return static_cast<int>(w_.size() - 1) * 64 + bit;
}

bool BitPoly::get(int i) const {
    std::size_t word = static_cast<std::size_t>(i) / 64;
    if (word >= w_.size()) return false;
    return (w_[word] >> (i % 64)) & 1;
}

void BitPoly::flip(int i) {
    std::size_t word = static_cast<std::size_t>(i) / 64;
    if (word >= w_.size()) w_.resize(word + 1, 0);
    w_[word] ^= 1ULL << (i % 64);
    trim();
}

BitPoly& BitPoly::operator^=(const BitPoly& o) {
    if (o.w_.size() > w_.size()) w_.resize(o.w_.size(), 0);
    for (std::size_t i = 0; i < o.w_.size(); ++i) w_[i] ^= o.w_[i];
    trim();
    return *this;
}

BitPoly operator*(const BitPoly& a, const BitPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    const BitPoly& small = a.w_.size() <= b.w_.size() ? a : b;
    const BitPoly& big = a.w_.size() <= b.w_.size() ? b : a;
    BitPoly acc;
    acc.w_.assign(a.w_.size() + b.w_.size(), 0);
    int ds = small.deg();
    for (int i = 0; i <= ds; ++i) {
        if (!small.get(i)) continue;
        // acc ^= big << i
        int wshift = i / 64, bshift = i % 64;
        for (std::size_t j = 0; j < big.w_.size(); ++j) {
            std::uint64_t w = big.w_[j];
            acc.w_[j + static_cast<std::size_t>(wshift)] ^= w << bshift;
            if (bshift)
                acc.w_[j + static_cast<std::size_t>(wshift) + 1] ^= w >> (64 - bshift);
        }
    }
    acc.trim();
    return acc;
}

namespace {
// interleave zeros into the low 32 bits of x
std::uint64_t spread_bits(std::uint64_t x) {
    x &= 0xffffffffULL;
    x = (x | (x << 16)) & 0x0000ffff0000ffffULL;
    x = (x | (x << 8)) & 0x00ff00ff00ff00ffULL;
    x = (x | (x << 4)) & 0x0f0f0f0f0f0f0f0fULL;
    x = (x | (x << 2)) & 0x3333333333333333ULL;
    x = (x | (x << 1)) & kEvenMask;
    return x;
}
} // namespace

BitPoly BitPoly::square() const {
    BitPoly r;
    r.w_.assign(w_.size() * 2, 0);
    for (std::size_t i = 0; i < w_.size(); ++i) {
        r.w_[2 * i] = spread_bits(w_[i]);
        r.w_[2 * i + 1] = spread_bits(w_[i] >> 32);
    }
    r.trim();
    return r;
}

BitPoly BitPoly::shifted(int k) const {
    if (is_zero() || k == 0) return *this;
    BitPoly r;
    int wshift = k / 64, bshift = k % 64;
    r.w_.assign(w_.size() + static_cast<std::size_t>(wshift) + 1, 0);
    for (std::size_t j = 0; j < w_.size(); ++j) {
        r.w_[j + static_cast<std::size_t>(wshift)] ^= w_[j] << bshift;
        if (bshift) r.w_[j + static_cast<std::size_t>(wshift) + 1] ^= w_[j] >> (64 - bshift);
    }
    r.trim();
    return r;
}

void BitPoly::divrem(const BitPoly& a, const BitPoly& d, BitPoly& q, BitPoly& r) {
    if (d.is_zero()) throw ZeroDenominator();
    q = BitPoly();
    r = a;
    int dd = d.deg();
    while (!r.is_zero() && r.deg() >= dd) {
        int k = r.deg() - dd;
        q.flip(k);
        r ^= d.shifted(k);
    }
}

BitPoly BitPoly::divexact(const BitPoly& d) const {
    BitPoly q, r;
    divrem(*this, d, q, r);
    if (!r.is_zero()) throw std::logic_error("BitPoly::divexact: not divisible");
    return q;
}

BitPoly BitPoly::gcd(BitPoly a, BitPoly b) {
    while (!b.is_zero()) {
        BitPoly q, r;
        divrem(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

BitPoly BitPoly::even_bits() const {
    BitPoly r;
    r.w_.assign(w_.size(), 0);
    for (std::size_t i = 0; i < w_.size(); ++i) {
        std::uint64_t lo = w_[i] & kEvenMask; // bits 0,2,4,... of word i
        // compress: inverse of spread_bits
        std::uint64_t x = lo;
        x = (x | (x >> 1)) & 0x3333333333333333ULL;
        x = (x | (x >> 2)) & 0x0f0f0f0f0f0f0f0fULL;
        x = (x | (x >> 4)) & 0x00ff00ff00ff00ffULL;
        x = (x | (x >> 8)) & 0x0000ffff0000ffffULL;
        x = (x | (x >> 16)) & 0xffffffffULL;
        r.w_[i / 2] |= (i % 2) ? (x << 32) : x;
    }
    r.trim();
    return r;
}

BitPoly BitPoly::odd_bits_shifted() const {
    BitPoly shifted_down;
    shifted_down.w_.assign(w_.size(), 0);
    for (std::size_t i = 0; i < w_.size(); ++i) {
        shifted_down.w_[i] = w_[i] >> 1;
        if (i + 1 < w_.size()) shifted_down.w_[i] |= w_[i + 1] << 63;
    }
    shifted_down.trim();
    return shifted_down.even_bits();
}

bool BitPoly::all_even() const {
    for (std::uint64_t w : w_)
        if (w & ~kEvenMask) return false;
    return true;
}

std::uint64_t BitPoly::hash() const {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (std::uint64_t w : w_) {
        h ^= w;
        h *= 0x100000001b3ULL;
    }
    return h;
}

// ---------------------------------------------------------------- Gf2Poly

void Gf2Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Gf2Poly Gf2Poly::monomial(int ea, int eb) {
    Gf2Poly p;
    p.c_.resize(static_cast<std::size_t>(ea) + 1);
    p.c_[static_cast<std::size_t>(ea)] = BitPoly::monomial(eb);
    return p;
}

Gf2Poly Gf2Poly::from_terms(const std::vector<std::pair<int, int>>& ts) {
    Gf2Poly p;
    for (auto& [ea, eb] : ts) {
        if (static_cast<std::size_t>(ea) >= p.c_.size())
            p.c_.resize(static_cast<std::size_t>(ea) + 1);
        p.c_[static_cast<std::size_t>(ea)].flip(eb);
    }
    p.trim();
    return p;
}

bool Gf2Poly::is_one() const {
    return c_.size() == 1 && c_[0] == BitPoly::one();
}

int Gf2Poly::deg_b() const {
    int d = -1;
    for (auto& c : c_) d = std::max(d, c.deg());
    return d;
}

int Gf2Poly::total_deg() const {
    int d = -1;
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (!c_[i].is_zero()) d = std::max(d, static_cast<int>(i) + c_[i].deg());
    return d;
}

std::size_t Gf2Poly::term_count() const {
    std::size_t n = 0;
    for (auto& c : c_)
        for (std::uint64_t w : c.words()) n += static_cast<std::size_t>(__builtin_popcountll(w));
    return n;
}

Gf2Poly& Gf2Poly::operator+=(const Gf2Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] ^= o.c_[i];
    trim();
    return *this;
}

Gf2Poly operator+(const Gf2Poly& x, const Gf2Poly& y) {
    Gf2Poly r = x;
    r += y;
    return r;
}

Gf2Poly operator*(const Gf2Poly& x, const Gf2Poly& y) {
    if (x.is_zero() || y.is_zero()) return {};
    int dx = x.total_deg(), dy = y.total_deg();
    if (dx + dy > degree_cap())
        throw DegreeOverflow("product degree " + std::to_string(dx + dy));
    Gf2Poly r;
    r.c_.resize(x.c_.size() + y.c_.size() - 1);
    for (std::size_t i = 0; i < x.c_.size(); ++i) {
        if (x.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < y.c_.size(); ++j) {
            if (y.c_[j].is_zero()) continue;
            r.c_[i + j] ^= x.c_[i] * y.c_[j];
        }
    }
    r.trim();
    return r;
}

Gf2Poly Gf2Poly::square() const {
    if (is_zero()) return {};
    if (2 * total_deg() > degree_cap())
        throw DegreeOverflow("square degree " + std::to_string(2 * total_deg()));
    Gf2Poly r;
    r.c_.resize(c_.size() * 2 - 1);
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[2 * i] = c_[i].square();
    r.trim();
    return r;
}

Gf2Poly Gf2Poly::pow(unsigned n) const {
    Gf2Poly r = one(), base = *this;
    while (n) {
        if (n & 1) r = r * base;
        n >>= 1;
        if (n) base = base.square();
    }
    return r;
}

std::vector<std::pair<int, int>> Gf2Poly::terms() const {
    std::vector<std::pair<int, int>> ts;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        int d = c_[i].deg();
        for (int j = 0; j <= d; ++j)
            if (c_[i].get(j)) ts.emplace_back(static_cast<int>(i), j);
    }
    // graded-lex descending with a > b
    std::sort(ts.begin(), ts.end(), [](auto& l, auto& r) {
        int dl = l.first + l.second, dr = r.first + r.second;
        if (dl != dr) return dl > dr;
        return l.first > r.first;
    });
    return ts;
}

Gf2Poly Gf2Poly::even_b_part() const {
    Gf2Poly r;
    r.c_.resize(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        BitPoly even = c_[i].even_bits();
        r.c_[i] = even.square(); // restore original even exponents
    }
    r.trim();
    return r;
}

Gf2Poly Gf2Poly::odd_b_part_div_b() const {
    Gf2Poly r;
    r.c_.resize(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        BitPoly odd = c_[i].odd_bits_shifted(); // exponent (2k+1) -> k
        r.c_[i] = odd.square();                 // -> 2k, so term b^(2k+1) = b^(2k)*b
    }
    r.trim();
    return r;
}

bool Gf2Poly::all_b_even() const {
    for (auto& c : c_)
        if (!c.all_even()) return false;
    return true;
}

// multiply by c * a^shift_a, coefficient-wise
Gf2Poly scale_by(const Gf2Poly& p, const BitPoly& c, int shift_a) {
    if (p.is_zero() || c.is_zero()) return {};
    Gf2Poly r;
    r.c_.resize(p.c_.size() + static_cast<std::size_t>(shift_a));
    for (std::size_t i = 0; i < p.c_.size(); ++i)
        if (!p.c_[i].is_zero()) r.c_[i + static_cast<std::size_t>(shift_a)] = p.c_[i] * c;
    r.trim();
    return r;
}

BitPoly poly_content(const Gf2Poly& p) {
    BitPoly g;
    for (auto& c : p.c_) {
        if (c.is_zero()) continue;
        g = g.is_zero() ? c : BitPoly::gcd(g, c);
        if (g == BitPoly::one()) break;
    }
    return g;
}

Gf2Poly divexact_content(const Gf2Poly& p, const BitPoly& c) {
    if (c == BitPoly::one()) return p;
    Gf2Poly r;
    r.c_.resize(p.c_.size());
    for (std::size_t i = 0; i < p.c_.size(); ++i)
        if (!p.c_[i].is_zero()) r.c_[i] = p.c_[i].divexact(c);
    r.trim();
    return r;
}

namespace {

// GF(2) pseudo-remainder of p by q in the variable a
Gf2Poly prem_a(Gf2Poly p, const Gf2Poly& q) {
    int dq = q.deg_a();
    const BitPoly lq = q.coeff(dq);
    while (!p.is_zero() && p.deg_a() >= dq) {
        const BitPoly lp = p.coeff(p.deg_a());
        int shift = p.deg_a() - dq;
        p = scale_by(p, lq, 0) + scale_by(q, lp, shift);
    }
    return p;
}

Gf2Poly primitive_part(const Gf2Poly& p) {
    if (p.is_zero()) return p;
    return divexact_content(p, poly_content(p));
}

// Kronecker substitution b -> t, a -> t^m maps monomials injectively for
// m > deg_b; coprime images prove coprime inputs (one-sided check only).
bool kronecker_coprime(const Gf2Poly& x, const Gf2Poly& y) {
    int m = std::max(x.deg_b(), y.deg_b()) + 1;
    auto pack = [m](const Gf2Poly& p) {
        BitPoly r;
        for (int i = 0; i <= p.deg_a(); ++i) {
            const BitPoly& c = p.coeff(i);
            for (int j = 0; j <= c.deg(); ++j)
                if (c.get(j)) r.flip(i * m + j);
        }
        return r;
    };
    return BitPoly::gcd(pack(x), pack(y)) == BitPoly::one();
}

} // namespace

Gf2Poly Gf2Poly::gcd(const Gf2Poly& x, const Gf2Poly& y) {
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    if (x.is_one() || y.is_one()) return one();
    if (x.total_deg() >= 12 && y.total_deg() >= 12 && kronecker_coprime(x, y)) return one();

    BitPoly cx = poly_content(x), cy = poly_content(y);
    Gf2Poly p = divexact_content(x, cx);
    Gf2Poly q = divexact_content(y, cy);
    if (p.deg_a() < q.deg_a()) std::swap(p, q);
    // primitive PRS in a over GF(2)[b]
    while (!q.is_zero()) {
        Gf2Poly r = prem_a(p, q);
        p = std::move(q);
        q = primitive_part(r);
    }
    Gf2Poly g = primitive_part(p);
    BitPoly cg = BitPoly::gcd(cx, cy);
    return scale_by(g, cg, 0);
}

Gf2Poly Gf2Poly::divexact(const Gf2Poly& d) const {
    if (d.is_zero()) throw ZeroDenominator();
    if (is_zero()) return {};
    if (d.is_one()) return *this;
    Gf2Poly rem = *this, q;
    int dd = d.deg_a();
    const BitPoly& ld = d.coeff(dd);
    q.c_.resize(static_cast<std::size_t>(std::max(0, deg_a() - dd)) + 1);
    while (!rem.is_zero()) {
        int dr = rem.deg_a();
        if (dr < dd) throw std::logic_error("Gf2Poly::divexact: not divisible (deg)");
        BitPoly qc = rem.coeff(dr).divexact(ld);
        q.c_[static_cast<std::size_t>(dr - dd)] ^= qc;
        rem += scale_by(d, qc, dr - dd);
    }
    q.trim();
    return q;
}

std::uint64_t Gf2Poly::hash() const {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (auto& c : c_) h = h * 0x100000001b3ULL + c.hash() + 1;
    return h;
}

std::string Gf2Poly::str() const {
    if (is_zero()) return "0";
    std::string s;
    for (auto& [ea, eb] : terms()) {
        if (!s.empty()) s += "+";
        std::string t;
        if (ea) {
            t += "a";
            if (ea > 1) t += "^" + std::to_string(ea);
        }
        if (eb) {
            if (!t.empty()) t += "*";
            t += "b";
            if (eb > 1) t += "^" + std::to_string(eb);
        }
        if (t.empty()) t = "1";
        s += t;
    }
    return s;
}

} // namespace f4ms
