#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "ordkit/session.hpp"

using namespace ordkit;

namespace {

// run a script and return the last report
Report run_script(Session& s, const std::vector<std::string>& lines) {
    Report last;
    for (auto& l : lines) {
        last = s.run_line(l);
        INFO(l << " -> " << last.data.dump());
        REQUIRE(last.exit_code == 0);
    }
    return last;
}

const std::vector<std::string> kPrelude{
    "sym s1 algebraic decimal:" + std::string(ordkit::testing::kSqrt2),
    "sym s2 algebraic decimal:" + std::string(ordkit::testing::kPi),
};

}  // namespace

TEST_CASE("declarations and decisions") {
    Session s;
    auto lines = kPrelude;
    lines.push_back("group G q [1, s1]");
    lines.push_back("group H q [1, 1/s1]");
    Report r = run_script(s, lines);

    SECTION("unit-span family decision with witness matrix") {
        Report d = s.run_line("decide iso G H --family unit-span");
        REQUIRE(d.exit_code == 0);
        CHECK(d.data["status"] == "yes");
        REQUIRE(d.data.contains("matrix"));
    }

    SECTION("general decision on identical names") {
        Report d = s.run_line("decide iso G G");
        REQUIRE(d.exit_code == 0);
        CHECK(d.data["status"] == "yes");
        CHECK(d.data["witness"]["lambda"] == "1");
    }

    SECTION("distinct symbols answer no") {
        s.run_line("group K q [1, s2]");
        Report d = s.run_line("decide iso G K");
        CHECK(d.data["status"] == "no");
        CHECK(d.data["decider"] == "unit-span");
    }
}

TEST_CASE("circ separate example") {
    Session s;
    Report r = s.run_line("circ separate 1/3 1/2 --cap 10");
    REQUIRE(r.exit_code == 0);
    CHECK(r.data["status"] == "found");
    CHECK(r.data["n"] == 2);
    CHECK(r.data["k"] == "0");
}

TEST_CASE("zeleva commands") {
    Session s;
    Report m = s.run_line("zeleva mul (1/3,0) (1/3,0)");
    CHECK(m.data["result"] == "(2/3, 0)");
    Report p = s.run_line("zeleva pow (1/3,0) 3");
    CHECK(p.data["result"] == "(0, 1)");
    Report c = s.run_line("zeleva cmp (1/4,0) (1/2,0)");
    CHECK(c.data["cmp"] == -1);
}

TEST_CASE("order, holder, gl2, eval commands") {
    Session s;
    run_script(s, kPrelude);
    s.run_line("type T [1, s1]");

    Report o = s.run_line("order cmp T [1,0] [0,1]");
    CHECK(o.data["cmp"] == -1);

    Report h = s.run_line("holder T [0,1] --eps 1/4096");
    REQUIRE(h.exit_code == 0);
    Rat lo = parse_rat(h.data["lo"].get<std::string>());
    Rat hi = parse_rat(h.data["hi"].get<std::string>());
    CHECK(hi - lo <= rat(1, 4096));
    CHECK(lo <= parse_rat("14143/10000"));
    CHECK(hi >= parse_rat("14142/10000"));

    Report g = s.run_line("gl2 apply 0 1 1 0 s1");
    CHECK(g.data["result"] == "(1)/(s1)");

    Report e = s.run_line("eval (3*s1-s2)/2 --eps 1/100");
    REQUIRE(e.exit_code == 0);
    CHECK(e.data["sign"] == 1);
}

TEST_CASE("clo and odag commands") {
    Session s;
    s.run_line("clo K --order \"0<1\" --colors \"0,0\"");
    s.run_line("clo L --order \"0<1<2\" --colors \"0,1,0\"");

    Report e = s.run_line("clo embed K L");
    CHECK(e.data["status"] == "yes");
    CHECK(e.data["injection"] == std::vector<int>{0, 2});

    Report ne = s.run_line("clo embed L K");
    CHECK(ne.data["status"] == "no");

    Report c = s.run_line(R"(odag cmp L {"0":[100,0]} {"2":[0,1]})");
    CHECK(c.data["cmp"] == -1);
}

TEST_CASE("hahn eval command") {
    Session s;
    run_script(s, kPrelude);
    s.run_line("type T [1, s1]");
    Report r = s.run_line("hahn eval T \"(t^([0,0]) + t^([0,1])) * (t^([0,0]) - t^([0,1]))\"");
    REQUIRE(r.exit_code == 0);
    CHECK(r.data["result"] == "t^([0, 0]) - t^([0, 2])");

    s.run_line("clo L --order \"0<1\" --colors \"0,1\"");
    Report r2 = s.run_line(R"x(hahn eval L 3/2*t^({"1":[1,0]})-t^({}))x");
    REQUIRE(r2.exit_code == 0);
}

TEST_CASE("rank1, field and pointed families through the CLI") {
    Session s;
    run_script(s, kPrelude);

    s.run_line("rank1 A [2=inf]");
    s.run_line("rank1 B [2=inf, 3=1]");
    s.run_line("rank1 C [3=inf]");
    CHECK(s.run_line("decide iso A B --family rank1").data["status"] == "yes");
    CHECK(s.run_line("decide iso A C --family rank1").data["status"] == "no");

    s.run_line("field F1 [s1]");
    s.run_line("field F2 [s1, s2]");
    CHECK(s.run_line("decide embed F1 F2 --family field").data["status"] == "yes");
    CHECK(s.run_line("decide embed F2 F1 --family field").data["status"] == "no");
    CHECK(s.run_line("decide iso F2 F2 --family field").data["status"] == "yes");

    s.run_line("group G z [1, s1]");
    s.run_line("group H z [3, 3*s1]");
    s.run_line("pointed P G 1");
    s.run_line("pointed Q H 3");
    Report d = s.run_line("decide iso P Q --family pointed");
    CHECK(d.data["status"] == "yes");
    CHECK(d.data["witness"]["lambda"] == "3");
}

TEST_CASE("invariant emit and equal") {
    Session s;
    run_script(s, kPrelude);
    s.run_line("group G z [1, s1]");

    Report e = s.run_line("invariant emit G --height 1");
    REQUIRE(e.exit_code == 0);
    CHECK(e.data["slices"] == 4);
    std::string frag = e.data["fragment"].get<std::string>();
    CHECK(frag.find("slice 0") != std::string::npos);
    CHECK(frag.find("triple") != std::string::npos);

    s.run_line("group H z [2/3, 2/3*s1]");
    Report q = s.run_line("invariant equal G H --height 2");
    CHECK(q.data["status"] == "yes");
}

TEST_CASE("exit codes") {
    Session s;
    CHECK(s.run_line("nonsense command").exit_code == 2);
    CHECK(s.run_line("group G z [0]").exit_code == 3);
    CHECK(s.run_line("decide iso A B").exit_code == 2);  // unknown names

    // budget exceeded surfaces as exit 4
    s.run_line("sym short algebraic decimal:1.41");
    CHECK(s.run_line("eval short-141421/100000 --eps 1/100000000").exit_code == 4);

    // unknown verdicts still exit 0
    run_script(s, kPrelude);
    s.run_line("group G z [1, s1]");
    s.run_line("group H z [1, 2*s1]");
    Report r = s.run_line("decide iso G H --height 2");
    CHECK(r.exit_code == 0);
    CHECK(r.data["status"] == "unknown");
}

TEST_CASE("determinism: identical scripts give byte-identical reports") {
    std::vector<std::string> script = {
        "sym s1 algebraic decimal:" + std::string(ordkit::testing::kSqrt2),
        "group G q [1, s1]",
        "group H q [2, 2*s1]",
        "decide iso G H",
        "invariant emit G --height 1",
        "circ separate 1/4 1/3 --cap 10",
    };
    auto run_all = [&] {
        Session s;
        std::string out;
        for (auto& l : script) out += s.run_line(l).data.dump() + "\n";
        return out;
    };
    CHECK(run_all() == run_all());
}

TEST_CASE("serialized objects re-parse to structurally equal objects") {
    Session s;
    run_script(s, kPrelude);
    Report r = s.run_line("group G z [1+s1, 1-s1]");
    REQUIRE(r.exit_code == 0);

    // rebuild the group from its serialized basis
    std::string lit = "[";
    auto basis = r.data["group"]["basis"];
    for (size_t i = 0; i < basis.size(); ++i)
        lit += (i ? ", " : "") + basis[i].get<std::string>();
    lit += "]";
    Report r2 = s.run_line("group G2 z " + lit);
    REQUIRE(r2.exit_code == 0);
    CHECK(r2.data["group"] == r.data["group"]);

    const Subgroup &G = s.group("G"), &G2 = s.group("G2");
    REQUIRE(G.basis().size() == G2.basis().size());
    for (size_t i = 0; i < G.basis().size(); ++i) REQUIRE(G.basis()[i] == G2.basis()[i]);
}

TEST_CASE("object names are unique across kinds") {
    Session s;
    run_script(s, kPrelude);
    REQUIRE(s.run_line("group G z [1]").exit_code == 0);
    CHECK(s.run_line("group G z [2]").exit_code == 3);
    CHECK(s.run_line("type G [1, s1]").exit_code == 3);
    CHECK(s.run_line("sym s1 algebraic rat:2/1").exit_code == 3);  // symbol redeclared
}

TEST_CASE("invariant emit writes the fragment to a file") {
    Session s;
    run_script(s, kPrelude);
    s.run_line("group G z [1, s1]");
    std::string path = "emit_test_fragment.txt";
    Report r = s.run_line("invariant emit G --height 1 --out " + path);
    REQUIRE(r.exit_code == 0);
    CHECK(r.data["written"] == path);
    std::ifstream in(path);
    REQUIRE(in.good());
    std::string first;
    std::getline(in, first);
    CHECK(first == "slices 4");
    in.close();
    std::remove(path.c_str());
}
