#pragma once

#include <optional>
#include <sstream>
#include <string>

#include "ordkit/polynomial.hpp"
#include "ordkit/symbol.hpp"

namespace ordkit {

// Exact real number: a rational function over Q in declared-independent
// symbols, kept in canonical form (gcd-reduced, monic denominator, graded-lex
// term order).  Equal values compare equal structurally.
class SymbolicReal {
public:
    SymbolicReal() : num_(), den_(Rat(1)) {}
    SymbolicReal(const Rat& c) : num_(c), den_(Rat(1)) {}
    SymbolicReal(long c) : num_(Rat(c)), den_(Rat(1)) {}

    SymbolicReal(Polynomial num, Polynomial den, RegistryPtr reg)
        : num_(std::move(num)), den_(std::move(den)), reg_(std::move(reg)) {
        if (den_.is_zero()) throw DivisionByZero("denominator is the zero polynomial");
        reduce();
    }

    static SymbolicReal symbol(const RegistryPtr& reg, const std::string& name) {
        int id = reg->require(name);
        return SymbolicReal(Polynomial::variable(id), Polynomial(Rat(1)), reg);
    }
    static SymbolicReal symbol(const RegistryPtr& reg, int id) {
        return SymbolicReal(Polynomial::variable(id), Polynomial(Rat(1)), reg);
    }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    const RegistryPtr& registry() const { return reg_; }

    bool is_zero() const { return num_.is_zero(); }

    std::optional<Rat> as_rational() const {
        if (num_.is_constant() && den_.is_constant())
            return num_.constant_value() / den_.constant_value();
        return std::nullopt;
    }

    bool operator==(const SymbolicReal& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const SymbolicReal& o) const { return !(*this == o); }

    SymbolicReal operator+(const SymbolicReal& o) const {
        return SymbolicReal(num_ * o.den_ + o.num_ * den_, den_ * o.den_, merged_reg(o));
    }
    SymbolicReal operator-() const {
        SymbolicReal r = *this;
        r.num_ = -r.num_;
        return r;
    }
    SymbolicReal operator-(const SymbolicReal& o) const { return *this + (-o); }

    SymbolicReal operator*(const SymbolicReal& o) const {
        if (!as_rational() && !o.as_rational()) require_algebraic(o, "mul");
        return SymbolicReal(num_ * o.num_, den_ * o.den_, merged_reg(o));
    }

    SymbolicReal operator/(const SymbolicReal& o) const {
        if (o.is_zero()) throw DivisionByZero();
        if (!o.as_rational()) require_algebraic(o, "div");
        return SymbolicReal(num_ * o.den_, den_ * o.num_, merged_reg(o));
    }

    // sign of the exact value: 0 iff symbolically zero, otherwise refine
    // symbol intervals until the value interval excludes 0.
    int sign() const {
        if (is_zero()) return 0;
        if (auto q = as_rational()) return sgn(*q);
        int result = 0;
        refine_until([&](const QInterval& iv) {
            auto s = iv.definite_sign();
            if (!s || *s == 0) return false;
            result = *s;
            return true;
        });
        return result;
    }

    // Interval of width <= eps containing the exact value; nested for
    // decreasing eps.
    QInterval approx(const Rat& eps) const {
        if (sgn(eps) <= 0) throw ContractViolation("approx requires eps > 0");
        if (auto q = as_rational()) return QInterval(*q);
        QInterval out;
        refine_until([&](const QInterval& iv) {
            if (iv.width() > eps) return false;
            out = iv;
            return true;
        });
        return out;
    }

    // Exact floor of the value.  Exact on rationals; otherwise the value is
    // irrational (by the independence contract) and refinement terminates.
    Int floor() const {
        if (auto q = as_rational()) return floor_rat(*q);
        Int out;
        refine_until([&](const QInterval& iv) {
            Int n = floor_rat(Rat(iv.lo));
            if (iv.hi < Rat(n) + 1) {
                out = n;
                return true;
            }
            return false;
        });
        return out;
    }

    std::string to_string() const;

private:
    // Canonical form: divide by gcd, make the denominator monic.
    void reduce() {
        if (num_.is_zero()) {
            den_ = Polynomial(Rat(1));
            return;
        }
        Polynomial g = gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = div_exact(num_, g);
            den_ = div_exact(den_, g);
        }
        Rat lead = den_.leading_coeff();
        if (lead != 1) {
            num_ = num_ / lead;
            den_ = den_ / lead;
        }
    }

    RegistryPtr merged_reg(const SymbolicReal& o) const {
        if (reg_ && o.reg_ && reg_ != o.reg_)
            throw ContractViolation("operands belong to different symbol registries");
        return reg_ ? reg_ : o.reg_;
    }

    // mul/div of two non-constant values require every involved symbol to be
    // algebraic-mode (scalar arithmetic stays linear-sound).
    void require_algebraic(const SymbolicReal& o, const char* op) const {
        for (const SymbolicReal* p : {this, &o}) {
            for (int v : p->num_.vars())
                if (p->reg_->mode(v) != Mode::algebraic)
                    throw ModeViolation(std::string(op) + " on linear-mode symbol " +
                                        p->reg_->name(v));
            for (int v : p->den_.vars())
                if (p->reg_->mode(v) != Mode::algebraic)
                    throw ModeViolation(std::string(op) + " on linear-mode symbol " +
                                        p->reg_->name(v));
        }
    }

    // Evaluate at increasing refinement levels until `done` accepts the
    // value interval.  Division by an interval containing zero just refines
    // further (the denominator is symbolically nonzero).
    template <class F>
    void refine_until(F&& done) const {
        if (!reg_) throw Error("symbolic value without a registry");
        long cap = reg_->config().refine_cap;
        bool constant_bindings_checked = false;
        for (long level = 2;; ++level) {
            if (level - 2 > cap)
                throw RefinementBudgetExceeded(
                    "refinement cap exceeded; bindings likely violate the independence contract");
            auto lookup = [&](int v) { return reg_->interval_at_level(v, level); };
            QInterval dn = den_.evaluate(lookup);
            if (!dn.contains_zero()) {
                QInterval iv = num_.evaluate(lookup) / dn;
                if (done(iv)) return;
            }
            if (!constant_bindings_checked) {
                // if every involved symbol is pinned to a point, no further
                // level can help
                bool all_exact = true;
                for (int v : num_.vars())
                    if (reg_->interval_at_level(v, level).width() != 0) all_exact = false;
                for (int v : den_.vars())
                    if (reg_->interval_at_level(v, level).width() != 0) all_exact = false;
                if (all_exact)
                    throw RefinementBudgetExceeded(
                        "bindings are exact rationals but the query cannot resolve; "
                        "independence contract violated");
                constant_bindings_checked = true;
            }
        }
    }

    Polynomial num_, den_;
    RegistryPtr reg_;
};

inline SymbolicReal operator+(const Rat& c, const SymbolicReal& x) { return SymbolicReal(c) + x; }
inline SymbolicReal operator*(const Rat& c, const SymbolicReal& x) { return SymbolicReal(c) * x; }

// ---- printing --------------------------------------------------------------

namespace detail {
inline void print_monomial(std::ostream& os, const Monomial& m, const RegistryPtr& reg) {
    bool first = true;
    for (auto& [v, e] : m.exps) {
        if (!first) os << "*";
        first = false;
        os << (reg ? reg->name(v) : "x" + std::to_string(v));
        if (e > 1) os << "^" << e;
    }
}

inline void print_poly(std::ostream& os, const Polynomial& p, const RegistryPtr& reg) {
    if (p.is_zero()) {
        os << "0";
        return;
    }
    bool first = true;
    // leading term first
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        Rat a = c;
        if (first) {
            if (sgn(a) < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (sgn(a) < 0 ? " - " : " + ");
            a = abs(a);
        }
        first = false;
        if (m.is_one()) {
            os << to_string(a);
        } else {
            if (a != 1) os << to_string(a) << "*";
            print_monomial(os, m, reg);
        }
    }
}
}  // namespace detail

inline std::string SymbolicReal::to_string() const {
    std::ostringstream os;
    if (den_.is_constant()) {
        detail::print_poly(os, num_, reg_);
    } else {
        os << "(";
        detail::print_poly(os, num_, reg_);
        os << ")/(";
        detail::print_poly(os, den_, reg_);
        os << ")";
    }
    return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const SymbolicReal& x) {
    return os << x.to_string();
}

}  // namespace ordkit
