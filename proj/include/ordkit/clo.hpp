#pragma once

#include <optional>
#include <vector>

#include "ordkit/errors.hpp"

namespace ordkit {

// Finite colored linear order: a strict total order on {0..size-1} given as
// a rank list (rank[i] = position of i in the chain) plus a coloring.
struct ColoredLinearOrder {
    std::vector<int> rank;
    std::vector<int> color;

    ColoredLinearOrder() = default;
    ColoredLinearOrder(std::vector<int> rank_, std::vector<int> color_)
        : rank(std::move(rank_)), color(std::move(color_)) {
        if (rank.size() != color.size())
            throw ContractViolation("rank and color lists must have equal length");
        std::vector<bool> seen(rank.size(), false);
        for (int r : rank) {
            if (r < 0 || r >= static_cast<int>(rank.size()) || seen[r])
                throw ContractViolation("rank list is not a permutation");
            seen[r] = true;
        }
        for (int c : color)
            if (c < 0) throw ContractViolation("colors must be nonnegative");
    }

    // The chain listed from least to greatest, as a color sequence.
    static ColoredLinearOrder from_chain(const std::vector<int>& chain,
                                         const std::vector<int>& colors) {
        std::vector<int> rank(chain.size());
        std::vector<bool> seen(chain.size(), false);
        for (size_t r = 0; r < chain.size(); ++r) {
            int pos = chain[r];
            if (pos < 0 || pos >= static_cast<int>(chain.size()) || seen[pos])
                throw ContractViolation("chain is not a permutation of the positions");
            seen[pos] = true;
            rank[pos] = static_cast<int>(r);
        }
        return ColoredLinearOrder(std::move(rank), colors);
    }

    int size() const { return static_cast<int>(rank.size()); }
    bool less(int i, int j) const { return rank[i] < rank[j]; }
};

// Backtracking search for an order-and-color preserving injection K -> L;
// returns the lexicographically least one (as a map on positions) or nullopt.
inline std::optional<std::vector<int>> clo_embed_bruteforce(const ColoredLinearOrder& K,
                                                            const ColoredLinearOrder& L) {
    int nk = K.size(), nl = L.size();
    std::vector<int> f(nk, -1);
    std::vector<bool> used(nl, false);

    auto consistent = [&](int n, int target) {
        if (L.color[target] != K.color[n]) return false;
        for (int m = 0; m < n; ++m)
            if (K.less(m, n) != L.less(f[m], target) || K.less(n, m) != L.less(target, f[m]))
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
            f[n] = -1;
        }
        return false;
    };

    if (!go(0)) return std::nullopt;
    return f;
}

}  // namespace ordkit
