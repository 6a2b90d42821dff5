#include <catch2/catch_amalgamated.hpp>

#include <thread>

#include "helpers.hpp"

using namespace ordkit;
using namespace ordkit::testing;

TEST_CASE("arithmetic examples") {
    auto reg = make_registry();
    SymbolicReal s1 = sym(reg, "s1"), t = sym(reg, "t");

    SECTION("additive inverse") { CHECK((s1 + (-s1)).is_zero()); }

    SECTION("monomial product") {
        SymbolicReal t2 = t * t;
        CHECK(t2 == t * t);
        CHECK(t2.num().degree() == 2);
        CHECK(t2.den().is_constant());
    }

    SECTION("gcd reduction: (t^2 - 1)/(t - 1) = t + 1") {
        SymbolicReal one(Rat(1));
        SymbolicReal q = (t * t - one) / (t - one);
        CHECK(q == t + one);  // expected value built without division
    }

    SECTION("canonical cancellation across representations") {
        // (t+1)*t / t collapses back to t+1
        SymbolicReal one(Rat(1));
        CHECK(((t + one) * t) / t == t + one);
    }
}

TEST_CASE("division and mode errors") {
    auto reg = make_registry();
    SymbolicReal s1 = sym(reg, "s1"), u1 = sym(reg, "u1"), u2 = sym(reg, "u2");

    CHECK_THROWS_AS(s1 / (s1 - s1), DivisionByZero);
    CHECK_THROWS_AS(u1 * u2, ModeViolation);
    CHECK_THROWS_AS(u1 / u2, ModeViolation);
    CHECK_THROWS_AS(SymbolicReal(Rat(1)) / u1, ModeViolation);
    // scalar arithmetic stays legal in linear mode
    CHECK_NOTHROW(Rat(3) * u1 - u2);
    CHECK_NOTHROW(u1 / SymbolicReal(Rat(2)));
}

TEST_CASE("is_zero") {
    auto reg = make_registry();
    SymbolicReal s1 = sym(reg, "s1"), s2 = sym(reg, "s2"), t = sym(reg, "t");

    CHECK((s1 - s1).is_zero());
    CHECK_FALSE((Rat(3) * s1 - s2).is_zero());
    // the engine treats t as transcendental: t*t - 2 is a nonzero polynomial
    CHECK_FALSE((t * t - SymbolicReal(Rat(2))).is_zero());
}

TEST_CASE("sign examples") {
    auto reg = make_registry();
    SymbolicReal s1 = sym(reg, "s1"), s2 = sym(reg, "s2"), s3 = sym(reg, "s3");

    CHECK((Rat(3) * s1 - s2).sign() == +1);  // 3*1.4142 - 3.1416 > 0
    CHECK(SymbolicReal(Rat(0)).sign() == 0);
    CHECK((s1 - s3).sign() == -1);  // 1.4142 < 1.7321
}

TEST_CASE("approx examples") {
    auto reg = make_registry();
    SymbolicReal s1 = sym(reg, "s1");

    QInterval c = SymbolicReal(rat(1, 3)).approx(rat(1, 1000));
    CHECK(c.width() <= rat(1, 1000));
    CHECK(c.contains(rat(1, 3)));

    QInterval a = s1.approx(rat(1, 100));
    CHECK(a.width() <= rat(1, 100));
    CHECK(a.lo >= rat(140, 100));
    CHECK(a.hi <= rat(143, 100));

    QInterval d = (s1 + s1).approx(rat(1, 100));
    CHECK(d.lo >= rat(281, 100));
    CHECK(d.hi <= rat(284, 100));
}

TEST_CASE("floor examples") {
    auto reg = make_registry();
    SymbolicReal s1 = sym(reg, "s1");

    CHECK(SymbolicReal(rat(7, 3)).floor() == 2);
    CHECK(s1.floor() == 1);
    CHECK((-s1).floor() == -2);
    CHECK(SymbolicReal(rat(-7, 3)).floor() == -3);
}

TEST_CASE("as_rational") {
    auto reg = make_registry();
    SymbolicReal s1 = sym(reg, "s1"), t = sym(reg, "t");

    CHECK(*SymbolicReal(rat(5, 2)).as_rational() == rat(5, 2));
    CHECK_FALSE(s1.as_rational());
    CHECK(*((Rat(2) * t) / t).as_rational() == 2);
}

TEST_CASE("named constant and rational bindings") {
    auto reg = std::make_shared<Registry>();
    reg->declare("pi", Mode::algebraic,
                 std::make_unique<NamedConstantBinding>(NamedConstantBinding::Which::pi));
    reg->declare("e", Mode::algebraic,
                 std::make_unique<NamedConstantBinding>(NamedConstantBinding::Which::e));
    reg->declare("l2", Mode::algebraic,
                 std::make_unique<NamedConstantBinding>(NamedConstantBinding::Which::ln2));
    reg->declare("half", Mode::algebraic, std::make_unique<RationalBinding>(rat(1, 2)));

    // each interval must intersect the 30-digit truncation bracket
    auto bracket = [](const std::string& trunc) {
        Rat t = parse_rat(trunc);
        return QInterval(t, t + pow10_neg(30));
    };
    QInterval pi = sym(reg, "pi").approx(pow10_neg(30));
    CHECK(intersects(pi, bracket("3141592653589793238462643383279/1000000000000000000000000000000")));
    QInterval e = sym(reg, "e").approx(pow10_neg(30));
    CHECK(intersects(e, bracket("2718281828459045235360287471352/1000000000000000000000000000000")));
    QInterval l2 = sym(reg, "l2").approx(pow10_neg(30));
    CHECK(intersects(l2, bracket("693147180559945309417232121458/1000000000000000000000000000000")));
    CHECK((sym(reg, "pi") - sym(reg, "e")).sign() == +1);
    CHECK(sym(reg, "half").approx(pow10_neg(12)).contains(rat(1, 2)));
}

TEST_CASE("refinement budget errors") {
    auto reg = std::make_shared<Registry>();
    reg->declare("short", Mode::algebraic, std::make_unique<DecimalBinding>("1.41"));
    reg->declare("r", Mode::linear, std::make_unique<RationalBinding>(rat(1, 2)));

    // digit stream exhausted before the sign of short - 1.41421 resolves
    CHECK_THROWS_AS((sym(reg, "short") - SymbolicReal(parse_rat("141421/100000"))).sign(),
                    RefinementBudgetExceeded);
    // binding pinned to 1/2 makes r - 1/2 numerically zero but symbolically
    // nonzero: detectable contract violation
    CHECK_THROWS_AS((sym(reg, "r") - SymbolicReal(rat(1, 2))).sign(), RefinementBudgetExceeded);
}

TEST_CASE("canonicalization idempotence and ring laws", "[property]") {
    auto reg = make_registry();
    std::vector<std::string> syms{"s1", "s2", "t"};
    Rng rng(20240811);

    for (int i = 0; i < 1000; ++i) {
        SymbolicReal a = random_symreal(rng, reg, syms);
        SymbolicReal b = random_symreal(rng, reg, syms);
        SymbolicReal c = random_symreal(rng, reg, syms);

        // canonical forms are stable under re-normalization
        SymbolicReal re(a.num(), a.den(), reg);
        REQUIRE(re == a);

        REQUIRE(a + b == b + a);
        REQUIRE((a + b) + c == a + (b + c));
        REQUIRE(a * b == b * a);
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE(a * (b + c) == a * b + a * c);
        REQUIRE((a - a).is_zero());
    }
}

TEST_CASE("division round trips", "[property]") {
    auto reg = make_registry();
    std::vector<std::string> syms{"s1", "t"};
    Rng rng(77);

    for (int i = 0; i < 300; ++i) {
        SymbolicReal a = random_symreal(rng, reg, syms);
        SymbolicReal b = random_symreal(rng, reg, syms);
        if (b.is_zero()) continue;
        REQUIRE((a * b) / b == a);
        REQUIRE((a / b) * b == a);
    }
}

TEST_CASE("sign agrees with approx midpoints", "[property]") {
    auto reg = make_registry();
    std::vector<std::string> syms{"a1", "a2", "a3"};
    Rng rng(4242);

    int checked = 0;
    for (int i = 0; i < 1000 && checked < 400; ++i) {
        SymbolicReal x = random_symreal(rng, reg, syms);
        if (x.is_zero()) continue;
        ++checked;
        int s = x.sign();
        REQUIRE(s != 0);
        // shrink eps until the interval itself excludes zero
        Rat eps(1);
        for (;;) {
            QInterval iv = x.approx(eps);
            if (!iv.contains_zero()) {
                REQUIRE(sgn(iv.mid()) == s);
                break;
            }
            eps /= 2;
        }
    }
    REQUIRE(checked >= 400);
}

TEST_CASE("approx nestedness", "[property]") {
    auto reg = make_registry();
    std::vector<std::string> syms{"s1", "s2", "t"};
    Rng rng(99);

    for (int i = 0; i < 200; ++i) {
        SymbolicReal x = random_symreal(rng, reg, syms);
        QInterval coarse = x.approx(rat(1, 8));
        QInterval fine = x.approx(rat(1, 1 << 12));
        REQUIRE(coarse.contains(fine));
    }
}

TEST_CASE("floor brackets the value", "[property]") {
    auto reg = make_registry();
    std::vector<std::string> syms{"a1", "a2", "a3"};
    Rng rng(1001);

    for (int i = 0; i < 200; ++i) {
        SymbolicReal x = random_symreal(rng, reg, syms, 2);
        Int f = x.floor();
        QInterval iv = x.approx(pow10_neg(9));
        REQUIRE(iv.hi >= Rat(f));
        REQUIRE(iv.lo < Rat(f) + 1);
    }
}

TEST_CASE("concurrent queries agree with sequential results") {
    auto make = [] {
        auto reg = std::make_shared<Registry>();
        reg->declare("p", Mode::algebraic,
                     std::make_unique<NamedConstantBinding>(NamedConstantBinding::Which::pi));
        reg->declare("q", Mode::algebraic, std::make_unique<LiouvilleBinding>(3));
        return reg;
    };

    // sequential reference
    auto ref = make();
    SymbolicReal pr = sym(ref, "p"), qr = sym(ref, "q");
    QInterval a_ref = (pr * qr).approx(pow10_neg(12));
    QInterval b_ref = (pr - Rat(3) * qr).approx(pow10_neg(12));
    int s_ref = (pr - qr).sign();

    // many threads race the same registry; caches are per-level so results
    // must be identical to the sequential run
    auto reg = make();
    SymbolicReal p = sym(reg, "p"), q = sym(reg, "q");
    std::vector<std::thread> threads;
    std::vector<QInterval> a_out(8), b_out(8);
    std::vector<int> s_out(8);
    for (int i = 0; i < 8; ++i)
        threads.emplace_back([&, i] {
            a_out[i] = (p * q).approx(pow10_neg(12));
            b_out[i] = (p - Rat(3) * q).approx(pow10_neg(12));
            s_out[i] = (p - q).sign();
        });
    for (auto& t : threads) t.join();
    for (int i = 0; i < 8; ++i) {
        CHECK(a_out[i] == a_ref);
        CHECK(b_out[i] == b_ref);
        CHECK(s_out[i] == s_ref);
    }
}

TEST_CASE("printer and parser round trip", "[property]") {
    auto reg = make_registry();
    std::vector<std::string> syms{"s1", "s2", "t"};
    Rng rng(1618);

    for (int i = 0; i < 400; ++i) {
        SymbolicReal x = random_symreal(rng, reg, syms, 3, /*allow_div=*/true);
        REQUIRE(parse_expr(x.to_string(), reg) == x);
    }

    // grammar essentials
    CHECK(parse_expr("(3*s1 - s2)/2", reg) ==
          (Rat(3) * sym(reg, "s1") - sym(reg, "s2")) / SymbolicReal(Rat(2)));
    CHECK(parse_expr("-s1^2 + 1/3", reg) ==
          SymbolicReal(rat(1, 3)) - sym(reg, "s1") * sym(reg, "s1"));
    CHECK_THROWS_AS(parse_expr("nope + 1", reg), UnknownSymbol);
    CHECK_THROWS_AS(parse_expr("1 +", reg), ParseError);
    CHECK_THROWS_AS(parse_expr("(1", reg), ParseError);
}

TEST_CASE("gcd reduction across common factors", "[property]") {
    auto reg = make_registry();
    std::vector<std::string> syms{"s1", "t"};
    Rng rng(555);

    for (int i = 0; i < 200; ++i) {
        SymbolicReal a = random_symreal(rng, reg, syms, 2);
        SymbolicReal b = random_symreal(rng, reg, syms, 2);
        SymbolicReal d = random_symreal(rng, reg, syms, 2);
        if (b.is_zero() || d.is_zero()) continue;
        REQUIRE((a * d) / (b * d) == a / b);
    }
}
