#pragma once

#include <string>
#include <vector>

#include "ordkit/classify.hpp"
#include "ordkit/subgroup.hpp"

namespace ordkit {

// Integer matrix with determinant +-1, acting on reals by fractional linear
// transformations x -> (a x + b)/(c x + d).
struct Gl2zMatrix {
    long a, b, c, d;

    Gl2zMatrix(long a_, long b_, long c_, long d_) : a(a_), b(b_), c(c_), d(d_) {
        long det = a * d - b * c;
        if (det != 1 && det != -1) throw ContractViolation("matrix determinant must be +1 or -1");
    }

    Gl2zMatrix operator*(const Gl2zMatrix& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
};

inline SymbolicReal gl2_apply(const Gl2zMatrix& M, const SymbolicReal& x) {
    SymbolicReal den = Rat(M.c) * x + SymbolicReal(Rat(M.d));
    if (den.is_zero()) throw PoleAtInput("c*x + d vanishes at the input");
    SymbolicReal num = Rat(M.a) * x + SymbolicReal(Rat(M.b));
    return num / den;
}

// span_Q{1, alpha} with the order inherited from R.
inline Subgroup unit_span_group(const SymbolicReal& alpha) {
    if (alpha.as_rational()) throw RationalAlpha("unit-span group requires irrational alpha");
    return Subgroup({SymbolicReal(Rat(1)), alpha}, SpanMode::Q);
}

// Q(S) for the deduplicated set of declared independent symbols.
inline FieldDescriptor countable_set_to_field(const Registry& reg,
                                              const std::vector<std::string>& names) {
    FieldDescriptor f;
    for (auto& n : names) {
        auto id = reg.lookup(n);
        if (!id) throw UnknownSymbol("unknown symbol: " + n);
        if (reg.mode(*id) != Mode::algebraic)
            throw ModeViolation("field symbols must be algebraic-mode: " + n);
        f.symbols.insert(n);
    }
    return f;
}

}  // namespace ordkit
