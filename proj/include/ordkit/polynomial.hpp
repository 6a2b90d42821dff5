#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "ordkit/interval.hpp"
#include "ordkit/rational.hpp"

namespace ordkit {

// Power product of symbols, sparse: var id -> exponent > 0.
struct Monomial {
    std::map<int, int> exps;

    int degree() const {
        int d = 0;
        for (auto& [v, e] : exps) d += e;
        return d;
    }

    int exponent_of(int var) const {
        auto it = exps.find(var);
        return it == exps.end() ? 0 : it->second;
    }

    bool is_one() const { return exps.empty(); }

    Monomial operator*(const Monomial& o) const {
        Monomial r = *this;
        for (auto& [v, e] : o.exps) {
            int ne = r.exponent_of(v) + e;
            r.exps[v] = ne;
        }
        return r;
    }

    // Exact quotient, or nullopt if o does not divide *this.
    std::optional<Monomial> operator/(const Monomial& o) const {
        Monomial r = *this;
        for (auto& [v, e] : o.exps) {
            int ne = r.exponent_of(v) - e;
            if (ne < 0) return std::nullopt;
            if (ne == 0)
                r.exps.erase(v);
            else
                r.exps[v] = ne;
        }
        return r;
    }

    bool operator==(const Monomial&) const = default;
};

// Graded lexicographic: total degree first; ties broken so that the monomial
// with the larger exponent on the smallest var id is the larger one.
struct MonomialLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        int da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        auto ia = a.exps.begin(), ib = b.exps.begin();
        while (ia != a.exps.end() && ib != b.exps.end()) {
            if (ia->first != ib->first)
                // smaller var id present => larger monomial
                return ia->first > ib->first;
            if (ia->second != ib->second) return ia->second < ib->second;
            ++ia, ++ib;
        }
        return false;  // equal (both exhausted given equal degree)
    }
};

// Multivariate polynomial over Q in graded-lex canonical term order.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rat, MonomialLess>;

    Polynomial() = default;
    explicit Polynomial(const Rat& c) {
        if (c != 0) terms_[Monomial{}] = c;
    }
    static Polynomial variable(int var) {
        Polynomial p;
        Monomial m;
        m.exps[var] = 1;
        p.terms_[m] = 1;
        return p;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
    }
    Rat constant_value() const {
        if (terms_.empty()) return Rat(0);
        return terms_.begin()->second;
    }
    int degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.degree(); }

    const Monomial& leading_monomial() const { return terms_.rbegin()->first; }
    const Rat& leading_coeff() const { return terms_.rbegin()->second; }

    std::set<int> vars() const {
        std::set<int> vs;
        for (auto& [m, c] : terms_)
            for (auto& [v, e] : m.exps) vs.insert(v);
        return vs;
    }

    void add_term(const Monomial& m, const Rat& c) {
        if (c == 0) return;
        auto [it, fresh] = terms_.emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Polynomial operator+(const Polynomial& o) const {
        Polynomial r = *this;
        for (auto& [m, c] : o.terms_) r.add_term(m, c);
        return r;
    }
    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }
    Polynomial operator-(const Polynomial& o) const { return *this + (-o); }
    Polynomial operator*(const Polynomial& o) const {
        Polynomial r;
        for (auto& [m1, c1] : terms_)
            for (auto& [m2, c2] : o.terms_) r.add_term(m1 * m2, c1 * c2);
        return r;
    }
    Polynomial operator*(const Rat& c) const {
        Polynomial r;
        if (c == 0) return r;
        r.terms_ = terms_;
        for (auto& [m, co] : r.terms_) co *= c;
        return r;
    }
    Polynomial operator/(const Rat& c) const {
        if (c == 0) throw DivisionByZero();
        return *this * (Rat(1) / c);
    }

    bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }

    // Interval evaluation; lookup maps var ids to enclosing intervals.
    QInterval evaluate(const std::function<QInterval(int)>& lookup) const {
        QInterval acc{Rat(0)};
        for (auto& [m, c] : terms_) {
            QInterval t{c};
            for (auto& [v, e] : m.exps) t = t * pow(lookup(v), static_cast<unsigned>(e));
            acc = acc + t;
        }
        return acc;
    }

    Rat evaluate_rational(const std::function<Rat(int)>& lookup) const {
        Rat acc(0);
        for (auto& [m, c] : terms_) {
            Rat t = c;
            for (auto& [v, e] : m.exps)
                for (int i = 0; i < e; ++i) t *= lookup(v);
            acc += t;
        }
        return acc;
    }

private:
    TermMap terms_;
};

// ---- exact division -------------------------------------------------------

// Quotient of a by b when the division is exact; nullopt otherwise.
inline std::optional<Polynomial> try_div_exact(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    Polynomial rem = a, quot;
    while (!rem.is_zero()) {
        auto mq = rem.leading_monomial() / b.leading_monomial();
        if (!mq) return std::nullopt;
        Rat cq = rem.leading_coeff() / b.leading_coeff();
        Polynomial t;
        t.add_term(*mq, cq);
        quot = quot + t;
        rem = rem - t * b;
    }
    return quot;
}

inline Polynomial div_exact(const Polynomial& a, const Polynomial& b) {
    auto q = try_div_exact(a, b);
    if (!q) throw ContractViolation("inexact polynomial division");
    return *q;
}

// ---- gcd (primitive pseudo-remainder sequence) -----------------------------

// Scale to integer coefficients with content 1 and positive leading coeff.
inline Polynomial normalize_primitive(const Polynomial& p) {
    if (p.is_zero()) return p;
    Int den_lcm = 1, num_gcd = 0;
    for (auto& [m, c] : p.terms()) {
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    }
    Polynomial q = p * Rat(den_lcm);
    for (auto& [m, c] : q.terms()) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
    }
    q = q / Rat(num_gcd);
    if (sgn(q.leading_coeff()) < 0) q = -q;
    return q;
}

inline int degree_in(const Polynomial& p, int var) {
    int d = 0;
    for (auto& [m, c] : p.terms()) d = std::max(d, m.exponent_of(var));
    return d;
}

// Coefficient of var^k, a polynomial in the remaining vars.
inline Polynomial coeff_in(const Polynomial& p, int var, int k) {
    Polynomial r;
    for (auto& [m, c] : p.terms()) {
        if (m.exponent_of(var) != k) continue;
        Monomial m2 = m;
        m2.exps.erase(var);
        r.add_term(m2, c);
    }
    return r;
}

inline Polynomial monomial_pow(int var, int e) {
    Polynomial p(Rat(1));
    if (e > 0) {
        Polynomial x = Polynomial::variable(var);
        for (int i = 0; i < e; ++i) p = p * x;
    }
    return p;
}

// Pseudo-remainder of a by b with respect to var (deg_in(b, var) >= 1).
inline Polynomial pseudo_rem(const Polynomial& a, const Polynomial& b, int var) {
    int db = degree_in(b, var);
    Polynomial lcb = coeff_in(b, var, db);
    Polynomial r = a;
    while (!r.is_zero()) {
        int dr = degree_in(r, var);
        if (dr < db) break;
        Polynomial lcr = coeff_in(r, var, dr);
        r = r * lcb - lcr * monomial_pow(var, dr - db) * b;
    }
    return r;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b);

// gcd of the var-coefficients: the content of p with respect to var.
inline Polynomial content_in(const Polynomial& p, int var) {
    Polynomial c;
    for (int k = 0; k <= degree_in(p, var); ++k) {
        Polynomial ck = coeff_in(p, var, k);
        if (!ck.is_zero()) c = gcd(c, ck);
    }
    return c;
}

// Polynomial gcd over Q[x...], unique up to the primitive/positive-lead
// normalization.  gcd(0, 0) = 0.
inline Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero()) return normalize_primitive(b);
    if (b.is_zero()) return normalize_primitive(a);
    if (a.is_constant() || b.is_constant()) return Polynomial(Rat(1));

    auto va = a.vars(), vb = b.vars();
    int var = std::max(*va.rbegin(), *vb.rbegin());

    Polynomial ca = content_in(a, var), cb = content_in(b, var);
    Polynomial c = gcd(ca, cb);
    Polynomial pa = div_exact(a, ca), pb = div_exact(b, cb);
    if (degree_in(pa, var) < degree_in(pb, var)) std::swap(pa, pb);

    while (!pb.is_zero()) {
        if (degree_in(pb, var) == 0) {
            // primitive and var-free => unit
            pa = Polynomial(Rat(1));
            break;
        }
        Polynomial r = pseudo_rem(pa, pb, var);
        pa = pb;
        pb = r.is_zero() ? Polynomial() : div_exact(r, content_in(r, var));
    }
    return normalize_primitive(c * div_exact(pa, content_in(pa, var)));
}

inline Polynomial lcm(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    return normalize_primitive(div_exact(a * b, gcd(a, b)));
}

}  // namespace ordkit
