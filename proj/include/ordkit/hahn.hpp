#pragma once

#include <algorithm>
#include <vector>

#include "ordkit/archgroup.hpp"
#include "ordkit/odag.hpp"

namespace ordkit {

// Exponent-group adapters.  A HahnSeries stores a pointer to its adapter;
// series over different adapter instances never mix.

struct VectorExponentGroup {
    using Elem = QVec;
    const OrderedVectorGroup* group;

    explicit VectorExponentGroup(const OrderedVectorGroup* g) : group(g) {}

    int compare(const Elem& a, const Elem& b) const { return group->compare(a, b); }
    Elem add(const Elem& a, const Elem& b) const {
        Elem r(a.size());
        for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
        return r;
    }
    Elem neg(const Elem& a) const {
        Elem r(a.size());
        for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
        return r;
    }
    Elem zero() const { return Elem(group->rank(), Rat(0)); }
};

struct OdagExponentGroup {
    using Elem = OdagElement;
    const OdagGroup* group;

    explicit OdagExponentGroup(const OdagGroup* g) : group(g) {}

    int compare(const Elem& a, const Elem& b) const { return group->compare(a, b); }
    Elem add(const Elem& a, const Elem& b) const { return odag_add(a, b); }
    Elem neg(const Elem& a) const { return odag_neg(a); }
    Elem zero() const { return Elem(); }
};

// Finite-support formal series sum a_g t^g with rational coefficients over an
// ordered exponent group; ordered by the sign of the coefficient at the
// minimal exponent (t^g with g > 0 is a positive infinitesimal).
template <class G>
class HahnSeries {
public:
    using Elem = typename G::Elem;
    using Term = std::pair<Elem, Rat>;

    explicit HahnSeries(const G* grp) : grp_(grp) {}

    HahnSeries(const G* grp, std::vector<Term> terms) : grp_(grp) {
        for (auto& [g, c] : terms) add_term(g, c);
    }

    static HahnSeries monomial(const G* grp, Elem g, Rat c = Rat(1)) {
        HahnSeries s(grp);
        s.add_term(g, c);
        return s;
    }
    static HahnSeries constant(const G* grp, Rat c) { return monomial(grp, grp->zero(), std::move(c)); }

    const G* exponent_group() const { return grp_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Elem& g, const Rat& c) {
        if (c == 0) return;
        auto it = std::lower_bound(terms_.begin(), terms_.end(), g, [&](const Term& t, const Elem& e) {
            return grp_->compare(t.first, e) < 0;
        });
        if (it != terms_.end() && grp_->compare(it->first, g) == 0) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        } else {
            terms_.insert(it, {g, c});
        }
    }

    // min of the support under the exponent order.
    const Elem& valuation() const {
        if (terms_.empty()) throw ZeroSeries();
        return terms_.front().first;
    }

    const Rat& leading_coeff() const {
        if (terms_.empty()) throw ZeroSeries();
        return terms_.front().second;
    }

    friend HahnSeries operator+(const HahnSeries& f, const HahnSeries& g) {
        f.require_same_group(g);
        HahnSeries r = f;
        for (auto& [e, c] : g.terms_) r.add_term(e, c);
        return r;
    }

    friend HahnSeries operator-(const HahnSeries& f) {
        HahnSeries r = f;
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }

    friend HahnSeries operator-(const HahnSeries& f, const HahnSeries& g) { return f + (-g); }

    // distributive convolution; t^g t^h = t^{g+h} with addition computed in
    // the exponent group
    friend HahnSeries operator*(const HahnSeries& f, const HahnSeries& g) {
        f.require_same_group(g);
        HahnSeries r(f.grp_);
        for (auto& [e1, c1] : f.terms_)
            for (auto& [e2, c2] : g.terms_) r.add_term(f.grp_->add(e1, e2), c1 * c2);
        return r;
    }

    bool operator==(const HahnSeries& o) const {
        if (terms_.size() != o.terms_.size()) return false;
        for (size_t i = 0; i < terms_.size(); ++i) {
            if (terms_[i].second != o.terms_[i].second) return false;
            if (grp_->compare(terms_[i].first, o.terms_[i].first) != 0) return false;
        }
        return true;
    }

    // 0 < f iff the coefficient at the valuation is positive.
    friend int compare(const HahnSeries& f, const HahnSeries& g) {
        f.require_same_group(g);
        HahnSeries diff = f - g;
        if (diff.is_zero()) return 0;
        return sgn(diff.leading_coeff());
    }

private:
    void require_same_group(const HahnSeries& o) const {
        if (grp_ != o.grp_) throw ExponentGroupMismatch("series over different exponent groups");
    }

    const G* grp_;
    std::vector<Term> terms_;  // ascending by exponent order
};

}  // namespace ordkit
