#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "ordkit/interval.hpp"
#include "ordkit/rational.hpp"

namespace ordkit {

// linear: only Q-linear combinations of symbols are allowed (soundness needs
// Q-linear independence of {1} U symbols).  algebraic: full field arithmetic
// (soundness needs algebraic independence).
enum class Mode { linear, algebraic };

// A refinement oracle: for any eps > 0 returns a rational interval of width
// <= eps containing the bound real.  Successive results need not nest; the
// registry intersects them per level.
class Binding {
public:
    virtual ~Binding() = default;
    virtual QInterval refine(const Rat& eps) = 0;
};

class RationalBinding final : public Binding {
public:
    explicit RationalBinding(Rat v) : v_(std::move(v)) {}
    QInterval refine(const Rat&) override { return QInterval(v_); }

private:
    Rat v_;
};

// A finite decimal truncation "d.ddd..." of an unknown real.  With k
// fractional digits used, the real lies in [t, t + 10^-k] (times the sign).
class DecimalBinding final : public Binding {
public:
    explicit DecimalBinding(const std::string& digits) {
        std::string s = digits;
        if (!s.empty() && s[0] == '-') {
            negative_ = true;
            s = s.substr(1);
        }
        auto dot = s.find('.');
        if (dot == std::string::npos) {
            int_part_ = s;
        } else {
            int_part_ = s.substr(0, dot);
            frac_ = s.substr(dot + 1);
        }
        if (int_part_.empty()) int_part_ = "0";
        for (char c : int_part_ + frac_)
            if (c < '0' || c > '9') throw ParseError("bad digit in decimal binding: " + digits);
    }

    QInterval refine(const Rat& eps) override {
        unsigned long k = 0;
        while (pow10_neg(k) > eps) {
            ++k;
            if (k > frac_.size())
                throw RefinementBudgetExceeded(
                    "decimal binding has too few digits for requested precision");
        }
        Int num = parse_int(int_part_ + frac_.substr(0, k));
        Rat t = rat(num, pow_int(10, k));
        QInterval iv(t, t + pow10_neg(k));
        return negative_ ? -iv : iv;
    }

private:
    bool negative_ = false;
    std::string int_part_, frac_;
};

// pi via Machin's formula, e and ln 2 via their series; partial sums are
// exact rationals with explicit tail bounds.
class NamedConstantBinding final : public Binding {
public:
    enum class Which { pi, e, ln2 };

    static std::optional<Which> by_name(const std::string& name) {
        if (name == "pi") return Which::pi;
        if (name == "e") return Which::e;
        if (name == "ln2") return Which::ln2;
        return std::nullopt;
    }

    explicit NamedConstantBinding(Which w) : which_(w) {}

    QInterval refine(const Rat& eps) override {
        unsigned long terms = 4;
        for (;;) {
            QInterval iv = compute(terms);
            if (iv.width() <= eps) return iv;
            terms *= 2;
        }
    }

private:
    QInterval compute(unsigned long terms) const {
        switch (which_) {
            case Which::e: {
                Rat sum(0), fact(1);
                for (unsigned long k = 0; k <= terms; ++k) {
                    if (k > 0) fact *= Rat(static_cast<long>(k));
                    sum += Rat(1) / fact;
                }
                Rat tail = Rat(2) / (fact * Rat(static_cast<long>(terms + 1)));
                return {sum, sum + tail};
            }
            case Which::ln2: {
                Rat sum(0), p(1);
                for (unsigned long k = 1; k <= terms; ++k) {
                    p /= 2;
                    sum += p / Rat(static_cast<long>(k));
                }
                Rat tail = pow2_neg(terms) / Rat(static_cast<long>(terms + 1));
                return {sum, sum + tail};
            }
            case Which::pi: {
                auto [a5, t5] = arctan_inv(5, terms);
                auto [a239, t239] = arctan_inv(239, terms);
                Rat lo = 16 * (a5 - t5) - 4 * (a239 + t239);
                Rat hi = 16 * (a5 + t5) - 4 * (a239 - t239);
                return {lo, hi};
            }
        }
        throw Error("unreachable");
    }

    // (partial sum, tail bound) of arctan(1/x).
    static std::pair<Rat, Rat> arctan_inv(long x, unsigned long terms) {
        Rat sum(0);
        Rat xpow = Rat(1) / Rat(x);
        Rat x2 = Rat(1) / (Rat(x) * Rat(x));
        for (unsigned long j = 0; j <= terms; ++j) {
            Rat term = xpow / Rat(static_cast<long>(2 * j + 1));
            sum += (j % 2 == 0) ? term : -term;
            xpow *= x2;
        }
        Rat tail = xpow / Rat(static_cast<long>(2 * terms + 3));
        return {sum, tail};
    }

    Which which_;
};

// Sparse-digit stream sigma_c = sum_k d_k 10^(-k!) with d_k in 1..9 varying
// with c.  Default binding for the reserved ODAG color symbols; independence
// of the family is asserted, not proven.
class LiouvilleBinding final : public Binding {
public:
    explicit LiouvilleBinding(int c) : c_(c) {}

    QInterval refine(const Rat& eps) override {
        Rat sum(0);
        Int fact(1);
        for (unsigned long k = 1;; ++k) {
            fact *= static_cast<long>(k);
            long d = 1 + ((static_cast<long>(c_) + 1) * static_cast<long>(k)) % 9;
            sum += Rat(d) * rat(Int(1), pow_int(10, fact.get_ui()));
            Int next_fact = fact * static_cast<long>(k + 1);
            Rat tail = Rat(10) * rat(Int(1), pow_int(10, next_fact.get_ui()));
            if (tail <= eps) return {sum, sum + tail};
        }
    }

private:
    int c_;
};

// Symbol table: names, modes, bindings, and per-level cached intervals.
// Level k corresponds to precision 2^-k; each level is intersected with the
// previous so intervals are nested and deterministic regardless of call
// history or thread interleaving.
class Registry {
public:
    struct Config {
        long refine_cap = 1000000;  // max refinement levels per query
    };

    int declare(const std::string& name, Mode mode, std::unique_ptr<Binding> binding) {
        std::lock_guard<std::mutex> lk(mu_);
        if (by_name_.count(name)) throw ContractViolation("symbol redeclared: " + name);
        symbols_.push_back(Entry{name, mode, std::move(binding), {}});
        by_name_[name] = static_cast<int>(symbols_.size()) - 1;
        return static_cast<int>(symbols_.size()) - 1;
    }

    std::optional<int> lookup(const std::string& name) const {
        std::lock_guard<std::mutex> lk(mu_);
        auto it = by_name_.find(name);
        if (it == by_name_.end()) return std::nullopt;
        return it->second;
    }

    int require(const std::string& name) const {
        auto id = lookup(name);
        if (!id) throw UnknownSymbol("unknown symbol: " + name);
        return *id;
    }

    const std::string& name(int id) const { return symbols_.at(id).name; }
    Mode mode(int id) const { return symbols_.at(id).mode; }
    int size() const { return static_cast<int>(symbols_.size()); }

    // Reserved ODAG color symbol, declared on first use.
    int ensure_sigma(int color) {
        std::string nm = "sigma" + std::to_string(color);
        if (auto id = lookup(nm)) return *id;
        return declare(nm, Mode::algebraic, std::make_unique<LiouvilleBinding>(color));
    }

    // Interval of width <= 2^-level, nested in all lower levels.
    QInterval interval_at_level(int id, long level) {
        std::lock_guard<std::mutex> lk(mu_);
        Entry& e = symbols_.at(id);
        if (level < 0) level = 0;
        while (static_cast<long>(e.levels.size()) <= level) {
            long k = static_cast<long>(e.levels.size());
            QInterval iv = e.binding->refine(pow2_neg(static_cast<unsigned long>(k)));
            if (!e.levels.empty()) iv = intersect(iv, e.levels.back());
            e.levels.push_back(iv);
        }
        return e.levels[level];
    }

    Config& config() { return config_; }
    const Config& config() const { return config_; }

private:
    struct Entry {
        std::string name;
        Mode mode;
        std::unique_ptr<Binding> binding;
        std::vector<QInterval> levels;
    };

    mutable std::mutex mu_;
    std::vector<Entry> symbols_;
    std::unordered_map<std::string, int> by_name_;
    Config config_;
};

using RegistryPtr = std::shared_ptr<Registry>;

}  // namespace ordkit
