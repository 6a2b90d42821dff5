#pragma once

#include <algorithm>
#include <optional>

#include "ordkit/rational.hpp"

namespace ordkit {

// Closed interval with exact rational endpoints.  All arithmetic is exact,
// so "outward rounding" never loses containment.
struct QInterval {
    Rat lo, hi;

    QInterval() : lo(0), hi(0) {}
    QInterval(Rat v) : lo(v), hi(v) {}
    QInterval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi) throw ContractViolation("interval with lo > hi");
    }

    Rat width() const { return hi - lo; }
    Rat mid() const { return (lo + hi) / 2; }
    bool contains(const Rat& v) const { return lo <= v && v <= hi; }
    bool contains(const QInterval& o) const { return lo <= o.lo && o.hi <= hi; }
    bool contains_zero() const { return sgn(lo) <= 0 && sgn(hi) >= 0; }

    // Sign of every point in the interval; nullopt if the interval straddles 0.
    std::optional<int> definite_sign() const {
        if (sgn(lo) > 0) return +1;
        if (sgn(hi) < 0) return -1;
        if (sgn(lo) == 0 && sgn(hi) == 0) return 0;
        return std::nullopt;
    }

    bool operator==(const QInterval&) const = default;
};

inline QInterval operator+(const QInterval& a, const QInterval& b) {
    return {a.lo + b.lo, a.hi + b.hi};
}

inline QInterval operator-(const QInterval& a) { return {-a.hi, -a.lo}; }

inline QInterval operator-(const QInterval& a, const QInterval& b) { return a + (-b); }

inline QInterval operator*(const QInterval& a, const QInterval& b) {
    Rat p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return {std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4})};
}

inline QInterval operator*(const Rat& c, const QInterval& a) { return QInterval(c) * a; }

// Caller must ensure b excludes zero.
inline QInterval operator/(const QInterval& a, const QInterval& b) {
    if (b.contains_zero()) throw DivisionByZero("interval division by an interval containing 0");
    QInterval inv(Rat(1) / b.hi, Rat(1) / b.lo);
    return a * inv;
}

inline QInterval pow(const QInterval& a, unsigned e) {
    QInterval r{Rat(1)};
    for (unsigned i = 0; i < e; ++i) r = r * a;
    return r;
}

inline QInterval intersect(const QInterval& a, const QInterval& b) {
    Rat l = std::max(a.lo, b.lo), h = std::min(a.hi, b.hi);
    if (l > h) throw ContractViolation("empty interval intersection (binding not nested?)");
    return {l, h};
}

inline bool intersects(const QInterval& a, const QInterval& b) {
    return std::max(a.lo, b.lo) <= std::min(a.hi, b.hi);
}

}  // namespace ordkit
