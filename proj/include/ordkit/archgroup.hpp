#pragma once

#include <functional>
#include <span>
#include <vector>

#include "ordkit/linalg.hpp"
#include "ordkit/subgroup.hpp"
#include "ordkit/symreal.hpp"

namespace ordkit {

// Normalized type vector (alpha_1, ..., alpha_n): alpha_1 = +-1 and the
// entries are Q-linearly independent.  Independence is checked exactly at
// construction via the rank of the coordinate matrix.
class TypeVector {
public:
    explicit TypeVector(std::vector<SymbolicReal> entries) : entries_(std::move(entries)) {
        if (entries_.empty()) throw ContractViolation("type vector needs at least one entry");
        auto a1 = entries_[0].as_rational();
        if (!a1 || (*a1 != 1 && *a1 != -1))
            throw ContractViolation("first type entry must be +1 or -1");
        auto cs = detail::CoordinateSpace::build(entries_);
        QMatrix m;
        for (auto& e : entries_) m.push_back(cs.coordinates(e));
        if (rref(m).size() != entries_.size())
            throw ContractViolation("type entries are not Q-linearly independent");
    }

    const std::vector<SymbolicReal>& entries() const { return entries_; }
    int rank() const { return static_cast<int>(entries_.size()); }

private:
    std::vector<SymbolicReal> entries_;
};

// Q^n or Z^n carrying the Archimedean order x < y  iff  sum x_i a_i < sum y_i a_i.
class OrderedVectorGroup {
public:
    OrderedVectorGroup(TypeVector type, SpanMode scalar_field)
        : type_(std::move(type)), field_(scalar_field) {}

    const TypeVector& type() const { return type_; }
    SpanMode scalar_field() const { return field_; }
    int rank() const { return type_.rank(); }

    // -1 if x < y, 0 iff x = y, +1 if x > y.
    int compare(std::span<const Rat> x, std::span<const Rat> y) const {
        if (static_cast<int>(x.size()) != rank() || static_cast<int>(y.size()) != rank())
            throw DimensionMismatch("vector length does not match the type rank");
        if (field_ == SpanMode::Z)
            for (size_t i = 0; i < x.size(); ++i)
                if (!is_integer(x[i]) || !is_integer(y[i]))
                    throw ContractViolation("scalar field Z requires integer coordinates");
        SymbolicReal diff(Rat(0));
        for (int i = 0; i < rank(); ++i)
            diff = diff + (x[i] - y[i]) * type_.entries()[i];
        return diff.sign();
    }

private:
    TypeVector type_;
    SpanMode field_;
};

// Oracle bundle for an abstract ordered group element type.
template <class T>
struct GroupOps {
    std::function<int(const T&, const T&)> cmp;  // -1 / 0 / +1
    std::function<T(const T&, const T&)> add;
    std::function<T(const T&)> neg;
    T zero;
};

namespace detail {

// n * x by binary doubling; n >= 0.
template <class T>
T nmul(const GroupOps<T>& ops, const T& x, const Int& n) {
    if (n == 0) return ops.zero;
    T acc = ops.zero, base = x;
    Int k = n;
    for (;;) {
        if (mpz_odd_p(k.get_mpz_t())) acc = ops.add(acc, base);
        k >>= 1;
        if (k == 0) break;
        base = ops.add(base, base);
    }
    return acc;
}

}  // namespace detail

// Dedekind-cut realization: an interval of width <= eps around
// x(t) = sup { m/n : m*u < n*t }, the image of t under the order embedding
// normalized by the designated positive unit u.
template <class T>
QInterval holder_cut(const GroupOps<T>& ops, const T& u, const T& t, const Rat& eps) {
    if (sgn(eps) <= 0) throw ContractViolation("holder_cut requires eps > 0");
    if (ops.cmp(u, ops.zero) <= 0) throw UnitNotPositive();
    int ct = ops.cmp(t, ops.zero);
    if (ct == 0) return QInterval(Rat(0));
    if (ct < 0) return -holder_cut(ops, u, ops.neg(t), eps);

    // probe: is m/n in the left set, i.e. m*u < n*t ?
    auto in_left = [&](const Rat& q) {
        T mu = detail::nmul(ops, u, q.get_num());
        T nt = detail::nmul(ops, t, q.get_den());
        return ops.cmp(mu, nt) < 0;
    };

    Rat lo(0), hi(1);
    while (in_left(hi)) hi *= 2;  // Archimedean: terminates
    while (hi - lo > eps) {
        Rat mid = (lo + hi) / 2;
        if (in_left(mid))
            lo = mid;
        else
            hi = mid;
    }
    return {lo, hi};
}

// Recovers the type of an additive order on Z^n through the cut realization,
// normalizing by u = e1 if e1 > 0 and u = -e1 otherwise.
inline std::vector<QInterval> extract_type(
    const std::function<int(const QVec&, const QVec&)>& cmp, int n, const Rat& eps) {
    if (n < 1) throw ContractViolation("rank must be >= 1");
    GroupOps<QVec> ops;
    ops.cmp = cmp;
    ops.add = [](const QVec& a, const QVec& b) {
        QVec r(a.size());
        for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
        return r;
    };
    ops.neg = [](const QVec& a) {
        QVec r(a.size());
        for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
        return r;
    };
    ops.zero = QVec(n, Rat(0));

    QVec e1(n, Rat(0));
    e1[0] = 1;
    QVec u = e1;
    if (cmp(u, ops.zero) < 0) u = ops.neg(u);

    std::vector<QInterval> out;
    for (int i = 0; i < n; ++i) {
        QVec ei(n, Rat(0));
        ei[i] = 1;
        out.push_back(holder_cut(ops, u, ei, eps));
    }
    return out;
}

}  // namespace ordkit
