#pragma once

#include <optional>
#include <utility>

#include "ordkit/symreal.hpp"

namespace ordkit {

// Point of S^1 as an angle theta in [0, 1) (the element e^{2 pi i theta}).
// Rational angles are reduced mod 1 at construction; symbolic angles must
// already lie in [0, 1), certified by sign tests.
class CircleElem {
public:
    CircleElem() : theta_(Rat(0)) {}

    explicit CircleElem(SymbolicReal theta) : theta_(std::move(theta)) {
        if (auto q = theta_.as_rational()) {
            Rat r = *q - Rat(floor_rat(*q));
            theta_ = SymbolicReal(r);
        } else {
            if (theta_.sign() < 0 || (theta_ - SymbolicReal(Rat(1))).sign() >= 0)
                throw ContractViolation("angle must lie in [0, 1)");
        }
    }

    const SymbolicReal& theta() const { return theta_; }
    bool is_identity() const { return theta_.is_zero(); }
    bool operator==(const CircleElem& o) const { return theta_ == o.theta_; }

private:
    SymbolicReal theta_;
};

// Group law of S^1: angle addition mod 1.
inline CircleElem circle_mul(const CircleElem& x, const CircleElem& y) {
    SymbolicReal s = x.theta() + y.theta();
    if ((s - SymbolicReal(Rat(1))).sign() >= 0) s = s - SymbolicReal(Rat(1));
    return CircleElem(s);
}

inline CircleElem circle_inverse(const CircleElem& x) {
    if (x.is_identity()) return x;
    return CircleElem(SymbolicReal(Rat(1)) - x.theta());
}

// Orientation cocycle of S^1: +1 if (x, y, z) is anti-clockwise, -1 if
// clockwise, 0 if any two coincide.
inline int cocycle(const CircleElem& x, const CircleElem& y, const CircleElem& z) {
    if (x == y || y == z || x == z) return 0;
    auto mod1 = [](SymbolicReal d) {
        if (d.sign() < 0) d = d + SymbolicReal(Rat(1));
        return d;
    };
    SymbolicReal u = mod1(y.theta() - x.theta());
    SymbolicReal v = mod1(z.theta() - x.theta());
    return (u - v).sign() < 0 ? +1 : -1;
}

// Element (g, n) of the central extension of a circle subgroup by Z.
struct ZelevaElement {
    CircleElem g;
    Int n;

    bool operator==(const ZelevaElement& o) const { return g == o.g && n == o.n; }
};

// (a, n)(b, m) = (ab, n + m + eps_{a,b}) with eps = 0 if a = 1 or b = 1 or
// c(1, a, ab) = 1, and eps = 1 if ab = 1 with a != 1 or c(1, ab, a) = 1.
inline ZelevaElement zeleva_mul(const ZelevaElement& p, const ZelevaElement& q) {
    CircleElem ab = circle_mul(p.g, q.g);
    int eps;
    if (p.g.is_identity() || q.g.is_identity()) {
        eps = 0;
    } else if (ab.is_identity()) {
        eps = 1;
    } else {
        eps = cocycle(CircleElem(), p.g, ab) == 1 ? 0 : 1;
    }
    return {ab, p.n + q.n + eps};
}

inline ZelevaElement zeleva_identity() { return {CircleElem(), Int(0)}; }

inline ZelevaElement zeleva_inverse(const ZelevaElement& p) {
    if (p.g.is_identity()) return {p.g, -p.n};
    return {circle_inverse(p.g), -p.n - 1};
}

inline ZelevaElement zeleva_pow(const ZelevaElement& p, long n) {
    if (n < 0) return zeleva_inverse(zeleva_pow(p, -n));
    ZelevaElement acc = zeleva_identity();
    for (long i = 0; i < n; ++i) acc = zeleva_mul(acc, p);
    return acc;
}

// (a, m) < (b, n) iff m < n, or m = n and c(1, a, b) = 1.  On the fiber the
// cocycle rule is angle comparison: c(1, a, b) = 1 iff theta_a < theta_b for
// distinct non-identity points, with theta(1) = 0 extending it to the ends.
inline int zeleva_compare(const ZelevaElement& p, const ZelevaElement& q) {
    if (p.n != q.n) return p.n < q.n ? -1 : +1;
    return (p.g.theta() - q.g.theta()).sign();
}

// Least n <= cap with floor(n*alpha) < floor(n*beta), together with
// k = floor(n*alpha); the witness pair behind the rigidity of circle
// embeddings (the extension evaluates (g,0)^n inconsistently at k and k+1).
inline std::optional<std::pair<long, Int>> find_separating_power(const SymbolicReal& alpha,
                                                                 const SymbolicReal& beta,
                                                                 long cap) {
    if (alpha.sign() < 0 || (beta - alpha).sign() <= 0 ||
        (beta - SymbolicReal(Rat(1))).sign() >= 0)
        throw ContractViolation("requires 0 <= alpha < beta < 1");
    for (long n = 1; n <= cap; ++n) {
        SymbolicReal na = Rat(n) * alpha, nb = Rat(n) * beta;
        Int fa = na.floor(), fb = nb.floor();
        if (fa < fb) return std::make_pair(n, fa);
    }
    return std::nullopt;
}

}  // namespace ordkit
