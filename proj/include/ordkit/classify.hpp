#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ordkit/subgroup.hpp"

namespace ordkit {

enum class MapMode { embed, iso };

// A Hion scalar: every order preserving homomorphism between subgroups of R
// is x -> lambda * x for a positive lambda.
struct Witness {
    SymbolicReal lambda;
    MapMode direction = MapMode::embed;
    bool verified = false;
};

// embed: lambda * basis(G) lands in H.  iso: additionally lambda * G covers a
// basis of H, i.e. lambda * G = H.
inline bool verify_scaling(const Subgroup& G, const Subgroup& H, const SymbolicReal& lambda,
                           MapMode mode) {
    if (lambda.sign() <= 0) throw ContractViolation("scaling witness must be positive");
    for (auto& g : G.basis())
        if (!H.member(lambda * g)) return false;
    if (mode == MapMode::iso) {
        Subgroup scaled = G.scale(lambda);
        for (auto& h : H.basis())
            if (!scaled.member(h)) return false;
    }
    return true;
}

// ---- pointed groups (distinguished positive element) ------------------------

struct PointedGroup {
    Subgroup group;
    SymbolicReal point;

    PointedGroup(Subgroup g, SymbolicReal p) : group(std::move(g)), point(std::move(p)) {
        if (point.sign() <= 0) throw ContractViolation("distinguished point must be positive");
        if (!group.member(point))
            throw ContractViolation("distinguished point must belong to the group");
    }
};

// Complete for finitely generated pointed groups: the only candidate scalar
// is the ratio of the distinguished points.
inline std::optional<Witness> decide_pointed(const PointedGroup& A, const PointedGroup& B,
                                             MapMode mode) {
    SymbolicReal lambda = B.point / A.point;
    if (!verify_scaling(A.group, B.group, lambda, mode)) return std::nullopt;
    return Witness{lambda, mode, true};
}

inline std::optional<Witness> decide_pointed_iso(const PointedGroup& A, const PointedGroup& B) {
    return decide_pointed(A, B, MapMode::iso);
}

inline std::optional<Witness> decide_pointed_embed(const PointedGroup& A, const PointedGroup& B) {
    return decide_pointed(A, B, MapMode::embed);
}

// ---- rank-1 characteristics --------------------------------------------------

// Prime-divisibility heights of a subgroup of Q containing 1; unlisted primes
// have height 0.
class Rank1Characteristic {
public:
    Rank1Characteristic() = default;
    Rank1Characteristic(std::map<long, long> finite_heights, std::set<long> infinite_heights)
        : finite_(std::move(finite_heights)), infinite_(std::move(infinite_heights)) {
        for (auto& [p, h] : finite_) {
            check_prime(p);
            if (h < 1) throw ContractViolation("finite heights must be >= 1");
            if (infinite_.count(p)) throw ContractViolation("prime listed twice");
        }
        for (long p : infinite_) check_prime(p);
    }

    const std::map<long, long>& finite_heights() const { return finite_; }
    const std::set<long>& infinite_primes() const { return infinite_; }

    bool is_infinite(long p) const { return infinite_.count(p) > 0; }
    long height(long p) const {
        auto it = finite_.find(p);
        return it == finite_.end() ? 0 : it->second;
    }

private:
    static void check_prime(long p) {
        if (p < 2) throw ContractViolation("not a prime");
        for (long d = 2; d * d <= p; ++d)
            if (p % d == 0) throw ContractViolation("not a prime");
    }

    std::map<long, long> finite_;
    std::set<long> infinite_;
};

// Baer equivalence of characteristic sequences.  Two finitely supported
// characteristics disagree at only finitely many primes by construction, so
// the groups are isomorphic exactly when every disagreement is at a finite
// height, i.e. when the infinite-height prime sets coincide (the finite
// disagreements are absorbed by a rational scalar).
inline bool decide_rank1_iso(const Rank1Characteristic& a, const Rank1Characteristic& b) {
    return a.infinite_primes() == b.infinite_primes();
}

// Embeddability of rank-1 groups: a positive rational scalar can raise any
// finitely many finite heights but never pay for an infinitely divisible
// prime, so q*G_a lands in G_b exactly when the infinite-height primes of a
// are among those of b.
inline bool decide_rank1_embed(const Rank1Characteristic& a, const Rank1Characteristic& b) {
    return std::includes(b.infinite_primes().begin(), b.infinite_primes().end(),
                         a.infinite_primes().begin(), a.infinite_primes().end());
}

// ---- span_Q{1, alpha} groups -------------------------------------------------

// Fractional-linear witness: alpha = (k*beta + l)/(m*beta + n), lambda = m*beta + n.
struct UnitSpanWitness {
    Rat k, l, m, n;
    SymbolicReal lambda;
};

// Decides embeddability / isomorphism of span_Q{1, alpha} and span_Q{1, beta}
// for irrational alpha, beta.  Exact and complete: solves the linear system
// alpha*(m*beta + n) - k*beta - l = 0 over Q; an embedding exists iff the
// solution space is nonzero, an isomorphism iff it contains a matrix with
// k*n - l*m != 0.
inline std::optional<UnitSpanWitness> decide_unit_span(const SymbolicReal& alpha,
                                                       const SymbolicReal& beta, MapMode mode) {
    if (alpha.as_rational() || beta.as_rational())
        throw RationalAlpha("unit-span decider requires irrational alpha and beta");

    SymbolicReal one(Rat(1));
    std::vector<SymbolicReal> prods{alpha * beta, alpha, beta, one};  // coeffs of m, n, -k, -l
    auto cs = detail::CoordinateSpace::build(prods);
    std::vector<QVec> cols;
    for (auto& p : prods) cols.push_back(cs.coordinates(p));

    size_t rows = cs.monos.size();
    QMatrix sys(rows, QVec(4, Rat(0)));
    for (size_t i = 0; i < rows; ++i) {
        sys[i][0] = -cols[2][i];  // k
        sys[i][1] = -cols[3][i];  // l
        sys[i][2] = cols[0][i];   // m
        sys[i][3] = cols[1][i];   // n
    }
    auto basis = nullspace(std::move(sys));
    if (basis.empty()) return std::nullopt;

    auto make_witness = [&](QVec v) -> UnitSpanWitness {
        SymbolicReal lambda = v[2] * beta + SymbolicReal(v[3]);
        if (lambda.sign() < 0) {
            for (auto& c : v) c = -c;
            lambda = -lambda;
        }
        return UnitSpanWitness{v[0], v[1], v[2], v[3], lambda};
    };

    if (mode == MapMode::embed) {
        // any nonzero solution has m*beta + n != 0 (beta irrational)
        return make_witness(basis[0]);
    }

    // isomorphism: the determinant k*n - l*m is a quadratic form on the
    // solution space; if it is not identically zero, some small integer
    // combination witnesses it (degree-2 polynomials cannot vanish on a
    // {0,1,2}^d grid)
    size_t d = basis.size();
    std::vector<size_t> idx(d, 0);
    for (;;) {
        QVec v(4, Rat(0));
        bool nonzero = false;
        for (size_t i = 0; i < d; ++i) {
            if (idx[i] == 0) continue;
            nonzero = true;
            for (int j = 0; j < 4; ++j) v[j] += Rat(static_cast<long>(idx[i])) * basis[i][j];
        }
        if (nonzero && v[0] * v[3] - v[1] * v[2] != 0) return make_witness(v);
        size_t i = 0;
        while (i < d && idx[i] == 2) idx[i++] = 0;
        if (i == d) break;
        ++idx[i];
    }
    return std::nullopt;
}

// ---- subfields of R ----------------------------------------------------------

// Q(S) for a finite set S of declared algebraically independent symbols.
struct FieldDescriptor {
    std::set<std::string> symbols;
    bool operator==(const FieldDescriptor&) const = default;
};

// Order embeddability of subfields of R is exactly inclusion.
inline bool decide_field_embed(const FieldDescriptor& F1, const FieldDescriptor& F2) {
    return std::includes(F2.symbols.begin(), F2.symbols.end(), F1.symbols.begin(),
                         F1.symbols.end());
}

// ---- bounded witness search --------------------------------------------------

// Hion constrains any embedding G -> H to x -> (h/g1)x with h in H; this
// enumerates that set to finite height.  Sound (witnesses are verified),
// incomplete (absence proves nothing).
inline std::optional<Witness> search_embed(const Subgroup& G, const Subgroup& H, int height,
                                           MapMode mode) {
    const SymbolicReal& g1 = G.basis().front();
    int sg = g1.sign();
    for (auto& h : H.element_enum(height)) {
        if (h.is_zero() || h.sign() != sg) continue;
        SymbolicReal lambda = h / g1;
        if (verify_scaling(G, H, lambda, mode)) return Witness{lambda, mode, true};
    }
    return std::nullopt;
}

// ---- the (A_G, R) invariant ---------------------------------------------------

// G/r for r in G\{0}.
inline Subgroup invariant_slice(const Subgroup& G, const SymbolicReal& r) {
    if (r.is_zero()) throw DivisionByZero("slice by zero");
    if (!G.member(r)) throw NotAMember("slice element is not a member of the group");
    return G.scale(SymbolicReal(Rat(1)) / r);
}

// Finite fragment of A_G = {G/r} with the relation triples
// R(H, K, r') <=> r' in H\{0} and K = H/r'.
struct InvariantFragment {
    struct Slice {
        SymbolicReal r;  // positive representative (G/r = G/(-r))
        Subgroup group;
    };
    struct Triple {
        int from, to;
        SymbolicReal ratio;
    };
    std::vector<Slice> slices;
    std::vector<Triple> triples;
};

inline InvariantFragment emit_invariant(const Subgroup& G, int height) {
    InvariantFragment out;
    std::vector<SymbolicReal> reps;
    for (auto& e : G.element_enum(height)) {
        if (e.is_zero()) continue;
        SymbolicReal r = e.sign() > 0 ? e : -e;
        bool seen = false;
        for (auto& p : reps)
            if (p == r) {
                seen = true;
                break;
            }
        if (seen) continue;
        reps.push_back(r);
        Subgroup slice = invariant_slice(G, r);
        bool merged = false;
        for (auto& s : out.slices)
            if (s.group.same_group(slice)) {
                merged = true;
                break;
            }
        if (!merged) out.slices.push_back({r, std::move(slice)});
    }
    int n = static_cast<int>(out.slices.size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            SymbolicReal ratio = out.slices[j].r / out.slices[i].r;
            if (out.slices[i].group.member(ratio)) out.triples.push_back({i, j, ratio});
        }
    return out;
}

// ---- general decision with provenance -----------------------------------------

enum class Verdict { yes, no, unknown };

struct Decision {
    Verdict verdict = Verdict::unknown;
    std::optional<Witness> witness;
    std::optional<UnitSpanWitness> matrix;
    std::string decider;  // which procedure answered
    int height = 0;       // bounded-search height, when used
};

namespace detail {

// G as a rescaled copy of span_Q{1, alpha}: returns alpha = b2/b1 and the
// positive unit factor 1/|b1| mapping G onto span_Q{1, alpha}.
struct UnitSpanForm {
    SymbolicReal alpha;
    SymbolicReal to_unit;
};

inline std::optional<UnitSpanForm> unit_span_form(const Subgroup& G) {
    if (G.span_mode() != SpanMode::Q || G.rank() != 2) return std::nullopt;
    SymbolicReal unit = G.basis()[0], other = G.basis()[1];
    // normalize by a rational basis element when there is one, so the group
    // presents as span_Q{1, alpha} with the expected alpha
    if (other.as_rational()) std::swap(unit, other);
    SymbolicReal alpha = other / unit;
    if (alpha.as_rational()) return std::nullopt;  // cannot happen for a rank-2 basis
    SymbolicReal abs_unit = unit.sign() > 0 ? unit : -unit;
    return UnitSpanForm{alpha, SymbolicReal(Rat(1)) / abs_unit};
}

}  // namespace detail

// Three-valued isomorphism decision: exact answers from the structured-family
// deciders where they apply, otherwise a bounded witness search.
inline Decision decide_iso(const Subgroup& G, const Subgroup& H, int height = 3) {
    Decision d;
    d.height = height;
    if (G.span_mode() != H.span_mode()) {
        d.verdict = Verdict::no;
        d.decider = "divisibility-invariant";
        return d;
    }
    if (G.rank() != H.rank()) {
        d.verdict = Verdict::no;
        d.decider = "rank-invariant";
        return d;
    }
    try {
        if (G.rank() == 1) {
            // any two ordered rank-1 groups of the same span mode are
            // isomorphic via the ratio of generators
            SymbolicReal lambda = H.basis()[0] / G.basis()[0];
            if (lambda.sign() < 0) lambda = -lambda;
            if (verify_scaling(G, H, lambda, MapMode::iso)) {
                d.verdict = Verdict::yes;
                d.witness = Witness{lambda, MapMode::iso, true};
                d.decider = "rank1-ratio";
                return d;
            }
        }
        auto fg = detail::unit_span_form(G), fh = detail::unit_span_form(H);
        if (fg && fh) {
            auto us = decide_unit_span(fg->alpha, fh->alpha, MapMode::iso);
            d.decider = "unit-span";
            if (!us) {
                d.verdict = Verdict::no;
                return d;
            }
            SymbolicReal lambda = fg->to_unit * us->lambda / fh->to_unit;
            Witness w{lambda, MapMode::iso, verify_scaling(G, H, lambda, MapMode::iso)};
            if (w.verified) {
                d.verdict = Verdict::yes;
                d.witness = w;
                d.matrix = us;
                return d;
            }
        }
    } catch (const ModeViolation&) {
        // exact deciders need algebraic-mode divisions; fall through
    }
    try {
        if (auto w = search_embed(G, H, height, MapMode::iso)) {
            d.verdict = Verdict::yes;
            d.witness = w;
            d.decider = "bounded-search";
            return d;
        }
    } catch (const ModeViolation&) {
        d.verdict = Verdict::unknown;
        d.decider = "bounded-search (mode-limited)";
        return d;
    }
    d.verdict = Verdict::unknown;
    d.decider = "bounded-search";
    return d;
}

inline Decision decide_embed(const Subgroup& G, const Subgroup& H, int height = 3) {
    Decision d;
    d.height = height;
    if (G.span_mode() == SpanMode::Q && H.span_mode() == SpanMode::Z) {
        // a divisible group has no nontrivial map into a free one
        d.verdict = Verdict::no;
        d.decider = "divisibility-invariant";
        return d;
    }
    if (G.rank() > H.rank()) {
        d.verdict = Verdict::no;
        d.decider = "rank-invariant";
        return d;
    }
    try {
        if (G.rank() == 1) {
            const SymbolicReal& h = H.basis().front();
            SymbolicReal lambda = h / G.basis().front();
            if (lambda.sign() < 0) lambda = -lambda;
            if (verify_scaling(G, H, lambda, MapMode::embed)) {
                d.verdict = Verdict::yes;
                d.witness = Witness{lambda, MapMode::embed, true};
                d.decider = "rank1-ratio";
                return d;
            }
        }
        auto fg = detail::unit_span_form(G), fh = detail::unit_span_form(H);
        if (fg && fh) {
            auto us = decide_unit_span(fg->alpha, fh->alpha, MapMode::embed);
            d.decider = "unit-span";
            if (!us) {
                d.verdict = Verdict::no;
                return d;
            }
            SymbolicReal lambda = fg->to_unit * us->lambda / fh->to_unit;
            Witness w{lambda, MapMode::embed, verify_scaling(G, H, lambda, MapMode::embed)};
            if (w.verified) {
                d.verdict = Verdict::yes;
                d.witness = w;
                d.matrix = us;
                return d;
            }
        }
    } catch (const ModeViolation&) {
    }
    try {
        if (auto w = search_embed(G, H, height, MapMode::embed)) {
            d.verdict = Verdict::yes;
            d.witness = w;
            d.decider = "bounded-search";
            return d;
        }
    } catch (const ModeViolation&) {
        d.verdict = Verdict::unknown;
        d.decider = "bounded-search (mode-limited)";
        return d;
    }
    d.verdict = Verdict::unknown;
    d.decider = "bounded-search";
    return d;
}

// A_G = A_H iff the groups are order isomorphic; answered through the exact
// deciders or a bounded search, else unknown.
inline Decision invariant_equal(const Subgroup& G, const Subgroup& H, int height = 3) {
    return decide_iso(G, H, height);
}

}  // namespace ordkit
