#pragma once

#include <random>
#include <vector>

#include "ordkit/ordkit.hpp"

namespace ordkit::testing {

// 80-digit truncations; enough head-room for every precision the suites ask for.
inline const char* kSqrt2 =
    "1.4142135623730950488016887242096980785696718753769480731766797379907324784621070";
inline const char* kSqrt3 =
    "1.7320508075688772935274463415058723669428052538103806280558069794519330169088000";
inline const char* kSqrt5 =
    "2.2360679774997896964091736687312762354406183596115257242708972454105209256378049";
inline const char* kPi =
    "3.1415926535897932384626433832795028841971693993751058209749445923078164062862090";
inline const char* kGolden =
    "1.6180339887498948482045868343656381177203091798057628621354486227052604628189024";
inline const char* kCbrt2 =
    "1.2599210498948731647672106072782283505702514647015079800819751121552996765139595";

// s1..s3, t, g are decimal-stream oracles for the worked examples (their
// values are the usual constants, fine for the specific queries asserted).
// a1..a3 are sparse Liouville streams honoring the independence contract for
// randomized value-dependent property tests.  u1, u2 are linear-mode.
inline RegistryPtr make_registry() {
    auto reg = std::make_shared<Registry>();
    reg->declare("s1", Mode::algebraic, std::make_unique<DecimalBinding>(kSqrt2));
    reg->declare("s2", Mode::algebraic, std::make_unique<DecimalBinding>(kPi));
    reg->declare("s3", Mode::algebraic, std::make_unique<DecimalBinding>(kSqrt3));
    reg->declare("t", Mode::algebraic, std::make_unique<DecimalBinding>(kCbrt2));
    reg->declare("g", Mode::algebraic, std::make_unique<DecimalBinding>(kGolden));
    reg->declare("a1", Mode::algebraic, std::make_unique<LiouvilleBinding>(10));
    reg->declare("a2", Mode::algebraic, std::make_unique<LiouvilleBinding>(11));
    reg->declare("a3", Mode::algebraic, std::make_unique<LiouvilleBinding>(12));
    reg->declare("u1", Mode::linear, std::make_unique<DecimalBinding>(kSqrt2));
    reg->declare("u2", Mode::linear, std::make_unique<DecimalBinding>(kSqrt3));
    return reg;
}

inline SymbolicReal sym(const RegistryPtr& reg, const std::string& name) {
    return SymbolicReal::symbol(reg, name);
}

// Deterministic RNG for property samples.
struct Rng {
    std::mt19937_64 gen;
    explicit Rng(unsigned long seed) : gen(seed) {}

    long integer(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(gen);
    }
    Rat rational(long mag, long den = 4) {
        return rat(integer(-mag, mag), integer(1, den));
    }
    Rat positive_rational(long mag, long den = 4) {
        return rat(integer(1, mag), integer(1, den));
    }
};

// Random symbolic real built from ops over the given symbols; degree stays
// small, denominators optional.
inline SymbolicReal random_symreal(Rng& rng, const RegistryPtr& reg,
                                   const std::vector<std::string>& symbols, int depth = 3,
                                   bool allow_div = false) {
    if (depth == 0 || rng.integer(0, 3) == 0) {
        if (rng.integer(0, 1) == 0) return SymbolicReal(rng.rational(6));
        return sym(reg, symbols[rng.integer(0, static_cast<long>(symbols.size()) - 1)]);
    }
    SymbolicReal a = random_symreal(rng, reg, symbols, depth - 1, allow_div);
    SymbolicReal b = random_symreal(rng, reg, symbols, depth - 1, allow_div);
    switch (rng.integer(0, allow_div ? 3 : 2)) {
        case 0: return a + b;
        case 1: return a - b;
        case 2: return a * b;
        default: return b.is_zero() ? a : a / b;
    }
}

}  // namespace ordkit::testing
