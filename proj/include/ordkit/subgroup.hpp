#pragma once

#include <algorithm>
#include <vector>

#include "ordkit/linalg.hpp"
#include "ordkit/symreal.hpp"

namespace ordkit {

enum class SpanMode { Z, Q };

namespace detail {

// Common coordinate space for a list of symbolic reals: a shared polynomial
// denominator D and the sorted (leading first) list of monomials of the
// numerators g*D.  The coordinate map depends only on the Q-span of the
// inputs, which keeps reduced bases canonical.
struct CoordinateSpace {
    Polynomial den;
    std::vector<Monomial> monos;  // descending graded-lex
    RegistryPtr reg;

    static CoordinateSpace build(const std::vector<SymbolicReal>& xs) {
        CoordinateSpace cs;
        cs.den = Polynomial(Rat(1));
        for (auto& x : xs) {
            cs.den = lcm(cs.den, x.den());
            if (x.registry()) cs.reg = x.registry();
        }
        std::set<Monomial, MonomialLess> ms;
        for (auto& x : xs) {
            Polynomial n = x.num() * div_exact(cs.den, x.den());
            for (auto& [m, c] : n.terms()) ms.insert(m);
        }
        cs.monos.assign(ms.rbegin(), ms.rend());
        return cs;
    }

    QVec coordinates(const SymbolicReal& x) const {
        Polynomial n = x.num() * div_exact(den, x.den());
        QVec v(monos.size(), Rat(0));
        for (size_t j = 0; j < monos.size(); ++j) {
            auto it = n.terms().find(monos[j]);
            if (it != n.terms().end()) v[j] = it->second;
        }
        return v;
    }

    SymbolicReal from_coordinates(const QVec& v) const {
        Polynomial n;
        for (size_t j = 0; j < monos.size(); ++j) n.add_term(monos[j], v[j]);
        return SymbolicReal(n, den, reg);
    }
};

}  // namespace detail

// Finitely generated additive subgroup of R: the Z-span or Q-span of its
// generators.  A canonical reduced basis is computed at construction (RREF
// over Q for divisible groups, Hermite normal form over Z otherwise).
class Subgroup {
public:
    Subgroup(std::vector<SymbolicReal> generators, SpanMode mode)
        : mode_(mode) {
        if (generators.empty()) throw ContractViolation("subgroup needs at least one generator");
        for (auto& g : generators)
            if (g.is_zero()) throw ContractViolation("zero generator");
        normalize(std::move(generators));
    }

    SpanMode span_mode() const { return mode_; }
    const std::vector<SymbolicReal>& basis() const { return basis_; }
    int rank() const { return static_cast<int>(basis_.size()); }

    // Coefficients of x over basis() (integers in mode Z, rationals in mode
    // Q), or nullopt if x is not in the group.
    std::optional<QVec> member(const SymbolicReal& x) const {
        std::vector<SymbolicReal> all = basis_;
        all.push_back(x);
        auto cs = detail::CoordinateSpace::build(all);
        std::vector<QVec> cols;
        for (auto& b : basis_) cols.push_back(cs.coordinates(b));
        auto sol = solve_columns(cols, cs.coordinates(x));
        if (!sol) return std::nullopt;
        if (mode_ == SpanMode::Z)
            for (auto& a : *sol)
                if (!is_integer(a)) return std::nullopt;
        return sol;
    }

    Subgroup scale(const SymbolicReal& lambda) const {
        if (lambda.is_zero()) throw DivisionByZero("scaling by a symbolically zero value");
        std::vector<SymbolicReal> gens;
        for (auto& b : basis_) gens.push_back(lambda * b);
        return Subgroup(std::move(gens), mode_);
    }

    // All bounded coefficient combinations of the basis, in a deterministic
    // order: graded by the largest coefficient magnitude, ties lexicographic.
    std::vector<SymbolicReal> element_enum(int height) const {
        if (height < 1) throw ContractViolation("element_enum requires height >= 1");
        std::vector<Rat> coeffs;
        std::vector<size_t> magnitudes;
        coefficient_pool(height, coeffs, magnitudes);
        // tuple indices into coeffs, sorted by (grade, lexicographic)
        size_t k = basis_.size(), n = coeffs.size();
        std::vector<std::vector<size_t>> tuples{{}};
        for (size_t i = 0; i < k; ++i) {
            std::vector<std::vector<size_t>> next;
            for (auto& t : tuples)
                for (size_t c = 0; c < n; ++c) {
                    auto t2 = t;
                    t2.push_back(c);
                    next.push_back(std::move(t2));
                }
            tuples = std::move(next);
        }
        auto grade = [&](const std::vector<size_t>& t) {
            size_t g = 0;
            for (size_t c : t) g = std::max(g, magnitudes[c]);
            return g;
        };
        std::stable_sort(tuples.begin(), tuples.end(),
                         [&](const auto& a, const auto& b) { return grade(a) < grade(b); });
        std::vector<SymbolicReal> out;
        out.reserve(tuples.size());
        for (auto& t : tuples) {
            SymbolicReal acc(Rat(0));
            for (size_t i = 0; i < k; ++i) acc = acc + coeffs[t[i]] * basis_[i];
            out.push_back(std::move(acc));
        }
        return out;
    }

    // Set equality of the underlying groups (mutual basis membership).
    bool same_group(const Subgroup& o) const {
        if (mode_ != o.mode_) return false;
        for (auto& b : basis_)
            if (!o.member(b)) return false;
        for (auto& b : o.basis_)
            if (!member(b)) return false;
        return true;
    }

    const RegistryPtr& registry() const { return reg_; }

private:
    void normalize(std::vector<SymbolicReal> gens) {
        for (auto& g : gens)
            if (g.registry()) reg_ = g.registry();
        auto cs = detail::CoordinateSpace::build(gens);
        QMatrix m;
        for (auto& g : gens) m.push_back(cs.coordinates(g));
        if (mode_ == SpanMode::Q) {
            rref(m);
            for (auto& row : m) basis_.push_back(cs.from_coordinates(row));
        } else {
            Int scale = 1;
            for (auto& row : m)
                for (auto& e : row) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), e.get_den_mpz_t());
            ZMatrix zm;
            for (auto& row : m) {
                ZVec zr;
                for (auto& e : row) {
                    Rat scaled = e * Rat(scale);
                    zr.push_back(scaled.get_num());
                }
                zm.push_back(std::move(zr));
            }
            zm = hnf_rows(std::move(zm));
            for (auto& row : zm) {
                QVec qr;
                for (auto& e : row) qr.push_back(rat(e, scale));
                basis_.push_back(cs.from_coordinates(qr));
            }
        }
        if (basis_.empty()) throw ContractViolation("generators span the trivial group");
    }

    // mode Z: -h..h; mode Q: reduced p/q with |p| <= h, 1 <= q <= h.
    // Sorted by (magnitude, numerator, denominator) with magnitude max(|p|, q).
    void coefficient_pool(int height, std::vector<Rat>& pool,
                          std::vector<size_t>& magnitudes) const {
        if (mode_ == SpanMode::Z) {
            for (long c = -height; c <= height; ++c) pool.push_back(Rat(c));
        } else {
            std::set<std::pair<Int, Int>> seen;
            for (long p = -height; p <= height; ++p)
                for (long q = 1; q <= height; ++q) {
                    Rat r = rat(p, q);
                    if (seen.insert({r.get_num(), r.get_den()}).second) pool.push_back(r);
                }
        }
        auto mag = [](const Rat& r) {
            if (r == 0) return Int(0);
            Int m = ::abs(r.get_num());
            if (r.get_den() > m) m = r.get_den();
            return m;
        };
        std::sort(pool.begin(), pool.end(), [&](const Rat& a, const Rat& b) {
            Int ma = mag(a), mb = mag(b);
            if (ma != mb) return ma < mb;
            if (a.get_num() != b.get_num()) return a.get_num() < b.get_num();
            return a.get_den() < b.get_den();
        });
        for (auto& r : pool) magnitudes.push_back(mag(r).get_ui());
    }

    SpanMode mode_;
    std::vector<SymbolicReal> basis_;
    RegistryPtr reg_;
};

}  // namespace ordkit
