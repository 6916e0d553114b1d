#include "f4ms/hahn.hpp"

#include <algorithm>
#include <atomic>

#include "f4ms/errors.hpp"

namespace f4ms {

namespace {
std::atomic<std::size_t> g_support_cap{4096};
}

std::size_t hahn_support_cap() { return g_support_cap.load(std::memory_order_relaxed); }
void set_hahn_support_cap(std::size_t cap) { g_support_cap.store(cap, std::memory_order_relaxed); }

int SqrtTwoExp::sign() const {
    if (a == 0 && b == 0) return 0;
    if (a >= 0 && b >= 0) return 1;
    if (a <= 0 && b <= 0) return -1;
    // mixed signs: a + b*sqrt(2) > 0  iff  sign(a) * (a^2 - 2b^2) > 0
    __int128 lhs = static_cast<__int128>(a) * a - 2 * static_cast<__int128>(b) * b;
    int s = lhs > 0 ? 1 : (lhs < 0 ? -1 : 0);
    return a > 0 ? s : -s;
}

std::string SqrtTwoExp::str() const {
    return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

HahnSeries::HahnSeries(std::vector<SqrtTwoExp> support) : sup_(std::move(support)) {
    std::sort(sup_.begin(), sup_.end());
    // GF(2): duplicate pairs cancel
    std::vector<SqrtTwoExp> out;
    for (std::size_t i = 0; i < sup_.size();) {
        std::size_t j = i;
        while (j < sup_.size() && sup_[j] == sup_[i]) ++j;
        if ((j - i) % 2) out.push_back(sup_[i]);
        i = j;
    }
    sup_ = std::move(out);
}

bool HahnSeries::constant_coeff() const {
    return std::binary_search(sup_.begin(), sup_.end(), SqrtTwoExp{0, 0});
}

HahnSeries operator+(const HahnSeries& x, const HahnSeries& y) {
    std::vector<SqrtTwoExp> all = x.sup_;
    all.insert(all.end(), y.sup_.begin(), y.sup_.end());
    return HahnSeries(std::move(all));
}

HahnSeries operator*(const HahnSeries& x, const HahnSeries& y) {
    if (x.is_zero() || y.is_zero()) return {};
    if (x.sup_.size() * y.sup_.size() > hahn_support_cap())
        throw SupportOverflow(x.sup_.size() * y.sup_.size());
    std::vector<SqrtTwoExp> all;
    all.reserve(x.sup_.size() * y.sup_.size());
    for (auto& e : x.sup_)
        for (auto& f : y.sup_) all.push_back(e + f);
    HahnSeries r(std::move(all));
    if (r.support_size() > hahn_support_cap()) throw SupportOverflow(r.support_size());
    return r;
}

HahnSeries hahn_theta(const HahnSeries& x) {
    std::vector<SqrtTwoExp> out;
    out.reserve(x.support_size());
    for (auto& e : x.support()) out.push_back({2 * e.b, e.a});
    return HahnSeries(std::move(out));
}

HahnSeries embed_poly(const Gf2Poly& p) {
    std::vector<SqrtTwoExp> out;
    for (auto& [ea, eb] : p.terms()) out.push_back({eb, ea});
    return HahnSeries(std::move(out));
}

TraceObstruction trace_obstruction(const HahnSeries& x) {
    return x.constant_coeff() ? TraceObstruction::NotATrace : TraceObstruction::Inconclusive;
}

std::string HahnSeries::str() const {
    if (sup_.empty()) return "0";
    std::string s;
    for (auto& e : sup_) {
        if (!s.empty()) s += "+";
        s += (e.a == 0 && e.b == 0) ? "1" : "t^" + e.str();
    }
    return s;
}

} // namespace f4ms
