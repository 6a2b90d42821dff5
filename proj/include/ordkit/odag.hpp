#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "ordkit/classify.hpp"
#include "ordkit/clo.hpp"
#include "ordkit/symreal.hpp"

namespace ordkit {

// Element of G_L: finite support map position -> coefficient pair (q0, q1)
// meaning q0 + q1 * sigma_{color(position)}; zero pairs are dropped.
struct OdagElement {
    std::map<int, std::pair<Rat, Rat>> coords;

    OdagElement() = default;
    explicit OdagElement(std::map<int, std::pair<Rat, Rat>> cs) : coords(std::move(cs)) {
        for (auto it = coords.begin(); it != coords.end();) {
            if (it->second.first == 0 && it->second.second == 0)
                it = coords.erase(it);
            else
                ++it;
        }
    }

    static OdagElement unit(int pos, Rat q0, Rat q1) {
        OdagElement e;
        if (q0 != 0 || q1 != 0) e.coords[pos] = {std::move(q0), std::move(q1)};
        return e;
    }

    bool is_zero() const { return coords.empty(); }
    bool operator==(const OdagElement&) const = default;
};

inline OdagElement odag_add(const OdagElement& f, const OdagElement& g) {
    std::map<int, std::pair<Rat, Rat>> out = f.coords;
    for (auto& [p, c] : g.coords) {
        auto& slot = out[p];
        slot.first += c.first;
        slot.second += c.second;
    }
    return OdagElement(std::move(out));
}

inline OdagElement odag_neg(const OdagElement& f) {
    auto out = f.coords;
    for (auto& [p, c] : out) {
        c.first = -c.first;
        c.second = -c.second;
    }
    return OdagElement(std::move(out));
}

// The ordered divisible group G_L built over a colored linear order: finite
// support functions with f(n) in H_{color(n)} = span_Q{1, sigma_{color(n)}},
// under the reverse lexicographic order (the largest differing position
// decides).
class OdagGroup {
public:
    OdagGroup(ColoredLinearOrder order, RegistryPtr reg)
        : order_(std::move(order)), reg_(std::move(reg)) {
        for (int c : order_.color) reg_->ensure_sigma(c);
    }

    const ColoredLinearOrder& order() const { return order_; }
    const RegistryPtr& registry() const { return reg_; }

    SymbolicReal sigma(int color) const { return SymbolicReal::symbol(reg_, reg_->ensure_sigma(color)); }

    SymbolicReal coordinate_value(int pos, const std::pair<Rat, Rat>& c) const {
        return SymbolicReal(c.first) + c.second * sigma(order_.color[pos]);
    }

    void check_support(const OdagElement& f) const {
        for (auto& [p, c] : f.coords)
            if (p < 0 || p >= order_.size())
                throw ContractViolation("element support outside the order");
    }

    // -1 / 0 / +1 under reverse-lex: compare at the maximal differing position.
    int compare(const OdagElement& f, const OdagElement& g) const {
        check_support(f);
        check_support(g);
        int best = -1;
        for (auto& [p, c] : f.coords) {
            auto it = g.coords.find(p);
            if (it != g.coords.end() && it->second == c) continue;
            if (best < 0 || order_.less(best, p)) best = p;
        }
        for (auto& [p, c] : g.coords) {
            if (f.coords.count(p)) continue;  // handled above
            if (best < 0 || order_.less(best, p)) best = p;
        }
        if (best < 0) return 0;
        std::pair<Rat, Rat> cf{0, 0}, cg{0, 0};
        if (auto it = f.coords.find(best); it != f.coords.end()) cf = it->second;
        if (auto it = g.coords.find(best); it != g.coords.end()) cg = it->second;
        if (cf.second == cg.second) return sgn(cf.first - cg.first);
        return (coordinate_value(best, cf) - coordinate_value(best, cg)).sign();
    }

private:
    ColoredLinearOrder order_;
    RegistryPtr reg_;
};

inline OdagGroup clo_to_odag(const ColoredLinearOrder& L, const RegistryPtr& reg) {
    return OdagGroup(L, reg);
}

// The induced group embedding G_K -> G_L of a CLO embedding j:
// g(m) = f(n) when m = j(n), otherwise 0.
class OdagEmbedding {
public:
    OdagEmbedding(std::vector<int> j, const ColoredLinearOrder& K, const ColoredLinearOrder& L)
        : j_(std::move(j)) {
        if (static_cast<int>(j_.size()) != K.size())
            throw InvalidInjection("injection must be defined on every position");
        std::vector<bool> used(L.size(), false);
        for (int n = 0; n < K.size(); ++n) {
            int t = j_[n];
            if (t < 0 || t >= L.size() || used[t]) throw InvalidInjection("not an injection");
            used[t] = true;
            if (L.color[t] != K.color[n]) throw InvalidInjection("colors not preserved");
            for (int m = 0; m < n; ++m)
                if (K.less(m, n) != L.less(j_[m], t))
                    throw InvalidInjection("order not preserved");
        }
    }

    const std::vector<int>& positions() const { return j_; }

    OdagElement apply(const OdagElement& f) const {
        std::map<int, std::pair<Rat, Rat>> out;
        for (auto& [p, c] : f.coords) {
            if (p < 0 || p >= static_cast<int>(j_.size()))
                throw ContractViolation("element support outside the source order");
            out[j_[p]] = c;
        }
        return OdagElement(std::move(out));
    }

private:
    std::vector<int> j_;
};

inline OdagEmbedding odag_embed_from_clo(const std::vector<int>& j, const ColoredLinearOrder& K,
                                         const ColoredLinearOrder& L) {
    return OdagEmbedding(j, K, L);
}

// Structured candidate embeddings G_K -> G_L: an order preserving injection
// of positions together with a per-position scaling H_{c_K(n)} -> H_{c_L(p(n))}
// (the shape every embedding has per the Archimedean-class analysis).  The
// per-position color groups embed iff the unit-span decider finds a scalar.
struct StructuredEmbedding {
    std::vector<int> positions;
};

inline std::optional<StructuredEmbedding> find_structured_embedding(const OdagGroup& K,
                                                                    const OdagGroup& L) {
    const auto& ko = K.order();
    const auto& lo = L.order();
    int nk = ko.size(), nl = lo.size();

    std::map<std::pair<int, int>, bool> color_embeds;
    auto embeddable = [&](int ck, int cl) {
        auto key = std::make_pair(ck, cl);
        auto it = color_embeds.find(key);
        if (it != color_embeds.end()) return it->second;
        bool ok;
        if (ck == cl) {
            ok = true;
        } else {
            ok = decide_unit_span(K.sigma(ck), L.sigma(cl), MapMode::embed).has_value();
        }
        color_embeds[key] = ok;
        return ok;
    };

    std::vector<int> f(nk, -1);
    std::vector<bool> used(nl, false);
    auto consistent = [&](int n, int t) {
        if (!embeddable(ko.color[n], lo.color[t])) return false;
        for (int m = 0; m < n; ++m)
            if (ko.less(m, n) != lo.less(f[m], t) || ko.less(n, m) != lo.less(t, f[m]))
                return false;
        return true;
    };
    std::function<bool(int)> go = [&](int n) -> bool {
        if (n == nk) return true;
        for (int t = 0; t < nl; ++t) {
            if (used[t] || !consistent(n, t)) continue;
            f[n] = t;
            used[t] = true;
            if (go(n + 1)) return true;
            used[t] = false;
        }
        return false;
    };
    if (!go(0)) return std::nullopt;
    return StructuredEmbedding{f};
}

}  // namespace ordkit
