#pragma once

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "ordkit/circular.hpp"
#include "ordkit/classify.hpp"
#include "ordkit/expr.hpp"
#include "ordkit/hahn.hpp"
#include "ordkit/reductions.hpp"

namespace ordkit {

using Json = nlohmann::ordered_json;

struct Report {
    int exit_code = 0;
    Json data;

    std::string text() const {
        std::ostringstream os;
        bool first = true;
        for (auto& [k, v] : data.items()) {
            if (k == "version" || k == "command") continue;
            if (!first) os << "  ";
            first = false;
            os << k << "=" << (v.is_string() ? v.get<std::string>() : v.dump());
        }
        return os.str();
    }
};

namespace cli {

inline const char* kVersion = "0.1.0";

// Splits a command line into tokens; [..], (..), {..} and ".." group into a
// single token (nesting aware), everything else splits on whitespace.
inline std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> out;
    size_t i = 0, n = line.size();
    auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
    while (i < n) {
        while (i < n && is_space(line[i])) ++i;
        if (i >= n) break;
        char c = line[i];
        if (c == '"') {
            size_t j = line.find('"', i + 1);
            if (j == std::string::npos) throw ParseError("unterminated quote");
            out.push_back(line.substr(i + 1, j - i - 1));
            i = j + 1;
        } else if (c == '[' || c == '(' || c == '{') {
            char open = c, close = (c == '[' ? ']' : c == '(' ? ')' : '}');
            int depth = 0;
            size_t j = i;
            for (; j < n; ++j) {
                if (line[j] == open) ++depth;
                if (line[j] == close && --depth == 0) break;
            }
            if (j >= n) throw ParseError(std::string("unbalanced '") + open + "'");
            out.push_back(line.substr(i, j - i + 1));
            i = j + 1;
        } else {
            size_t j = i;
            while (j < n && !is_space(line[j])) ++j;
            out.push_back(line.substr(i, j - i));
            i = j;
        }
    }
    return out;
}

// "[a, b, c]" -> {"a", "b", "c"} splitting on top-level commas.
inline std::vector<std::string> split_list(const std::string& tok) {
    if (tok.size() < 2 || tok.front() != '[' || tok.back() != ']')
        throw ParseError("expected a [...] list, got: " + tok);
    std::vector<std::string> items;
    std::string cur;
    int depth = 0;
    for (size_t i = 1; i + 1 < tok.size(); ++i) {
        char c = tok[i];
        if (c == '(' || c == '[' || c == '{') ++depth;
        if (c == ')' || c == ']' || c == '}') --depth;
        if (c == ',' && depth == 0) {
            items.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty() || !items.empty()) items.push_back(cur);
    for (auto& s : items) {
        size_t a = s.find_first_not_of(" \t");
        size_t b = s.find_last_not_of(" \t");
        s = (a == std::string::npos) ? "" : s.substr(a, b - a + 1);
        if (s.empty()) throw ParseError("empty list item in " + tok);
    }
    return items;
}

struct Args {
    std::vector<std::string> positional;
    std::map<std::string, std::string> flags;

    static Args parse(const std::vector<std::string>& tokens, size_t start) {
        Args a;
        for (size_t i = start; i < tokens.size(); ++i) {
            if (tokens[i].rfind("--", 0) == 0) {
                if (i + 1 >= tokens.size()) throw ParseError("flag without value: " + tokens[i]);
                a.flags[tokens[i].substr(2)] = tokens[i + 1];
                ++i;
            } else {
                a.positional.push_back(tokens[i]);
            }
        }
        return a;
    }

    const std::string& at(size_t i) const {
        if (i >= positional.size()) throw ParseError("missing argument");
        return positional[i];
    }
    std::optional<std::string> flag(const std::string& k) const {
        auto it = flags.find(k);
        if (it == flags.end()) return std::nullopt;
        return it->second;
    }
};

}  // namespace cli

// Named-object store plus a symbol registry; executes the command language
// documented in the README.  A session script is just a re-runnable list of
// these commands.
class Session {
public:
    Session() : reg_(std::make_shared<Registry>()) {}

    const RegistryPtr& registry() const { return reg_; }

    struct Config {
        int default_height = 3;
        long default_cap = 64;
        Rat default_eps = rat(1, 1024);
    };
    Config& config() { return config_; }

    Report run_line(const std::string& line) {
        Report r;
        r.data["version"] = cli::kVersion;
        r.data["command"] = line;
        try {
            dispatch(line, r);
        } catch (const ParseError& e) {
            r.exit_code = 2;
            r.data["error"] = std::string("parse: ") + e.what();
        } catch (const RefinementBudgetExceeded& e) {
            r.exit_code = 4;
            r.data["error"] = std::string("budget: ") + e.what();
        } catch (const ContractViolation& e) {
            r.exit_code = 3;
            r.data["error"] = std::string("contract: ") + e.what();
        } catch (const Error& e) {
            r.exit_code = 3;
            r.data["error"] = e.what();
        } catch (const std::exception& e) {
            r.exit_code = 2;
            r.data["error"] = std::string("parse: ") + e.what();
        }
        return r;
    }

    // object accessors used by tests
    const Subgroup& group(const std::string& name) const { return find(groups_, name, "group"); }
    const OrderedVectorGroup& type(const std::string& name) const {
        return find(types_, name, "type");
    }
    const ColoredLinearOrder& clo(const std::string& name) const { return find(clos_, name, "clo"); }

private:
    template <class M>
    static const typename M::mapped_type& find(const M& m, const std::string& name,
                                               const char* kind) {
        auto it = m.find(name);
        if (it == m.end()) throw ParseError(std::string("unknown ") + kind + ": " + name);
        return it->second;
    }

    // object names are unique across every kind in the store
    void ensure_fresh(const std::string& name) const {
        if (groups_.count(name) || types_.count(name) || clos_.count(name) ||
            fields_.count(name) || rank1s_.count(name) || pointed_.count(name))
            throw ContractViolation("object name already in use: " + name);
    }

    std::string fresh_name(const std::string& prefix) {
        return prefix + std::to_string(++fresh_counter_);
    }

    SymbolicReal expr(const std::string& s) const { return parse_expr(s, reg_); }

    std::vector<SymbolicReal> expr_list(const std::string& tok) const {
        std::vector<SymbolicReal> out;
        for (auto& s : cli::split_list(tok)) out.push_back(expr(s));
        return out;
    }

    QVec vec_literal(const std::string& tok) const {
        QVec v;
        for (auto& s : cli::split_list(tok)) {
            auto q = expr(s).as_rational();
            if (!q) throw ParseError("vector entries must be rational: " + s);
            v.push_back(*q);
        }
        return v;
    }

    OdagElement odag_literal(const std::string& tok) const {
        Json j;
        try {
            j = Json::parse(tok);
        } catch (const Json::parse_error& e) {
            throw ParseError(std::string("bad element literal: ") + e.what());
        }
        std::map<int, std::pair<Rat, Rat>> coords;
        for (auto& [k, v] : j.items()) {
            if (!v.is_array() || v.size() != 2)
                throw ParseError("element coordinates must be [q0, q1] pairs");
            auto ratof = [&](const Json& x) {
                return x.is_string() ? parse_rat(x.get<std::string>())
                                     : parse_rat(x.dump());
            };
            coords[std::stoi(k)] = {ratof(v[0]), ratof(v[1])};
        }
        return OdagElement(std::move(coords));
    }

    ZelevaElement zeleva_literal(const std::string& tok) const {
        if (tok.size() < 2 || tok.front() != '(' || tok.back() != ')')
            throw ParseError("expected (angle, n), got: " + tok);
        std::string body = tok.substr(1, tok.size() - 2);
        auto comma = body.rfind(',');
        if (comma == std::string::npos) throw ParseError("expected (angle, n)");
        SymbolicReal theta = expr(body.substr(0, comma));
        std::string ns = body.substr(comma + 1);
        ns.erase(0, ns.find_first_not_of(" \t"));
        ns.erase(ns.find_last_not_of(" \t") + 1);
        return {CircleElem(theta), parse_int(ns)};
    }

    std::string interval_str(const QInterval& iv) const {
        return "[" + to_string(iv.lo) + ", " + to_string(iv.hi) + "]";
    }

    Json group_json(const Subgroup& g) const {
        Json j;
        j["span"] = g.span_mode() == SpanMode::Z ? "z" : "q";
        Json basis = Json::array();
        for (auto& b : g.basis()) basis.push_back(b.to_string());
        j["basis"] = basis;
        return j;
    }

    Json witness_json(const Witness& w) const {
        Json j;
        j["lambda"] = w.lambda.to_string();
        j["direction"] = w.direction == MapMode::iso ? "iso" : "embed";
        j["verified"] = w.verified;
        return j;
    }

    void decision_json(Report& r, const Decision& d) const {
        r.data["status"] = d.verdict == Verdict::yes      ? "yes"
                           : d.verdict == Verdict::no     ? "no"
                                                          : "unknown";
        if (d.witness) r.data["witness"] = witness_json(*d.witness);
        if (d.matrix) {
            r.data["matrix"] = Json::array({to_string(d.matrix->k), to_string(d.matrix->l),
                                            to_string(d.matrix->m), to_string(d.matrix->n)});
        }
        r.data["decider"] = d.decider;
        r.data["height"] = d.height;
    }

    void dispatch(const std::string& line, Report& r) {
        auto toks = cli::tokenize(line);
        if (toks.empty()) throw ParseError("empty command");
        const std::string& cmd = toks[0];

        if (cmd == "sym") return cmd_sym(toks, r);
        if (cmd == "group") return cmd_group(toks, r);
        if (cmd == "type") return cmd_type(toks, r);
        if (cmd == "pointed") return cmd_pointed(toks, r);
        if (cmd == "field") return cmd_field(toks, r);
        if (cmd == "rank1") return cmd_rank1(toks, r);
        if (cmd == "clo") return cmd_clo(toks, r);
        if (cmd == "order") return cmd_order(toks, r);
        if (cmd == "holder") return cmd_holder(toks, r);
        if (cmd == "decide") return cmd_decide(toks, r);
        if (cmd == "invariant") return cmd_invariant(toks, r);
        if (cmd == "gl2") return cmd_gl2(toks, r);
        if (cmd == "odag") return cmd_odag(toks, r);
        if (cmd == "circ") return cmd_circ(toks, r);
        if (cmd == "zeleva") return cmd_zeleva(toks, r);
        if (cmd == "hahn") return cmd_hahn(toks, r);
        if (cmd == "eval") return cmd_eval(toks, r);
        throw ParseError("unknown command: " + cmd);
    }

    // sym <name> <linear|algebraic> <decimal:...|rat:p/q|const:pi|e|ln2>
    void cmd_sym(const std::vector<std::string>& toks, Report& r) {
        cli::Args a = cli::Args::parse(toks, 1);
        const std::string& name = a.at(0);
        Mode mode;
        if (a.at(1) == "linear")
            mode = Mode::linear;
        else if (a.at(1) == "algebraic")
            mode = Mode::algebraic;
        else
            throw ParseError("mode must be linear or algebraic");
        const std::string& spec = a.at(2);
        std::unique_ptr<Binding> binding;
        auto colon = spec.find(':');
        if (colon == std::string::npos) throw ParseError("binding must be kind:value");
        std::string kind = spec.substr(0, colon), val = spec.substr(colon + 1);
        if (kind == "decimal") {
            binding = std::make_unique<DecimalBinding>(val);
        } else if (kind == "rat") {
            binding = std::make_unique<RationalBinding>(parse_rat(val));
        } else if (kind == "const") {
            auto w = NamedConstantBinding::by_name(val);
            if (!w) throw ParseError("unknown constant: " + val);
            binding = std::make_unique<NamedConstantBinding>(*w);
        } else {
            throw ParseError("unknown binding kind: " + kind);
        }
        reg_->declare(name, mode, std::move(binding));
        r.data["declared"] = name;
    }

    // group <name|new> <z|q> [g1, g2, ...]
    void cmd_group(const std::vector<std::string>& toks, Report& r) {
        cli::Args a = cli::Args::parse(toks, 1);
        std::string name = a.at(0) == "new" ? fresh_name("G") : a.at(0);
        SpanMode mode;
        if (a.at(1) == "z")
            mode = SpanMode::Z;
        else if (a.at(1) == "q")
            mode = SpanMode::Q;
        else
            throw ParseError("span mode must be z or q");
        ensure_fresh(name);
        Subgroup g(expr_list(a.at(2)), mode);
        groups_.emplace(name, std::move(g));
        r.data["declared"] = name;
        r.data["group"] = group_json(groups_.at(name));
    }

    // type <name|new> [a1, ...] [--field z|q]
    void cmd_type(const std::vector<std::string>& toks, Report& r) {
        cli::Args a = cli::Args::parse(toks, 1);
        std::string name = a.at(0) == "new" ? fresh_name("T") : a.at(0);
        ensure_fresh(name);
        TypeVector tv(expr_list(a.at(1)));
        SpanMode field = SpanMode::Q;
        if (auto f = a.flag("field")) field = (*f == "z") ? SpanMode::Z : SpanMode::Q;
        types_.emplace(name, OrderedVectorGroup(std::move(tv), field));
        r.data["declared"] = name;
        r.data["rank"] = types_.at(name).rank();
    }

    // pointed <name|new> <group> <point-expr>
    void cmd_pointed(const std::vector<std::string>& toks, Report& r) {
        cli::Args a = cli::Args::parse(toks, 1);
        std::string name = a.at(0) == "new" ? fresh_name("P") : a.at(0);
        ensure_fresh(name);
        PointedGroup p(group(a.at(1)), expr(a.at(2)));
        pointed_.emplace(name, std::move(p));
        r.data["declared"] = name;
    }

    // field <name|new> [s1, s2, ...]
    void cmd_field(const std::vector<std::string>& toks, Report& r) {
        cli::Args a = cli::Args::parse(toks, 1);
        std::string name = a.at(0) == "new" ? fresh_name("F") : a.at(0);
        ensure_fresh(name);
        std::vector<std::string> names;
        if (a.at(1) != "[]") names = cli::split_list(a.at(1));
        fields_[name] = countable_set_to_field(*reg_, names);
        r.data["declared"] = name;
        r.data["symbols"] = fields_[name].symbols;
    }

    // rank1 <name|new> [2=inf, 3=1, ...]
    void cmd_rank1(const std::vector<std::string>& toks, Report& r) {
        cli::Args a = cli::Args::parse(toks, 1);
        std::string name = a.at(0) == "new" ? fresh_name("R") : a.at(0);
        ensure_fresh(name);
        std::map<long, long> fin;
        std::set<long> inf;
        if (a.at(1) != "[]") {
            for (auto& item : cli::split_list(a.at(1))) {
                auto eq = item.find('=');
                if (eq == std::string::npos) throw ParseError("expected prime=height");
                long p = std::stol(item.substr(0, eq));
                std::string h = item.substr(eq + 1);
                if (h == "inf")
                    inf.insert(p);
                else
                    fin[p] = std::stol(h);
            }
        }
        rank1s_[name] = Rank1Characteristic(std::move(fin), std::move(inf));
        r.data["declared"] = name;
    }

    // clo <name|new> --order "0<1<2" --colors "0,1,0"   |   clo embed <K> <L>
    void cmd_clo(const std::vector<std::string>& toks, Report& r) {
        if (toks.size() > 1 && toks[1] == "embed") {
            cli::Args a = cli::Args::parse(toks, 2);
            auto j = clo_embed_bruteforce(clo(a.at(0)), clo(a.at(1)));
            r.data["status"] = j ? "yes" : "no";
            if (j) r.data["injection"] = *j;
            return;
        }
        cli::Args a = cli::Args::parse(toks, 1);
        std::string name = a.at(0) == "new" ? fresh_name("L") : a.at(0);
        auto order = a.flag("order");
        auto colors = a.flag("colors");
        if (!order || !colors) throw ParseError("clo needs --order and --colors");
        std::vector<int> chain;
        {
            std::stringstream ss(*order);
            std::string part;
            while (std::getline(ss, part, '<'))
                if (!part.empty()) chain.push_back(std::stoi(part));
        }
        std::vector<int> cols;
        {
            std::stringstream ss(*colors);
            std::string part;
            while (std::getline(ss, part, ','))
                if (!part.empty()) cols.push_back(std::stoi(part));
        }
        ensure_fresh(name);
        ColoredLinearOrder L = chain.empty() && cols.empty()
                                   ? ColoredLinearOrder({}, {})
                                   : ColoredLinearOrder::from_chain(chain, cols);
        clos_.emplace(name, std::move(L));
        r.data["declared"] = name;
        r.data["size"] = clos_.at(name).size();
    }

    // order cmp <type> [x...] [y...]
    void cmd_order(const std::vector<std::string>& toks, Report& r) {
        if (toks.size() < 2 || toks[1] != "cmp") throw ParseError("usage: order cmp <type> <x> <y>");
        cli::Args a = cli::Args::parse(toks, 2);
        const auto& T = type(a.at(0));
        r.data["cmp"] = T.compare(vec_literal(a.at(1)), vec_literal(a.at(2)));
    }

    // holder <type> [t...] --eps <r>
    void cmd_holder(const std::vector<std::string>& toks, Report& r) {
        cli::Args a = cli::Args::parse(toks, 1);
        const auto& T = type(a.at(0));
        QVec t = vec_literal(a.at(1));
        Rat eps = a.flag("eps") ? parse_rat(*a.flag("eps")) : config_.default_eps;
        GroupOps<QVec> ops;
        ops.cmp = [&](const QVec& x, const QVec& y) { return T.compare(x, y); };
        ops.add = [](const QVec& x, const QVec& y) {
            QVec z(x.size());
            for (size_t i = 0; i < x.size(); ++i) z[i] = x[i] + y[i];
            return z;
        };
        ops.neg = [](const QVec& x) {
            QVec z(x.size());
            for (size_t i = 0; i < x.size(); ++i) z[i] = -x[i];
            return z;
        };
        ops.zero = QVec(T.rank(), Rat(0));
        QVec u(T.rank(), Rat(0));
        u[0] = 1;
        if (ops.cmp(u, ops.zero) < 0) u = ops.neg(u);
        QInterval cut = holder_cut(ops, u, t, eps);
        r.data["lo"] = to_string(cut.lo);
        r.data["hi"] = to_string(cut.hi);
    }

    // decide <iso|embed> <A> <B> [--height k] [--family ...] [--points "pa;pb"]
    void cmd_decide(const std::vector<std::string>& toks, Report& r) {
        if (toks.size() < 2) throw ParseError("usage: decide iso|embed A B");
        MapMode mode;
        if (toks[1] == "iso")
            mode = MapMode::iso;
        else if (toks[1] == "embed")
            mode = MapMode::embed;
        else
            throw ParseError("decide mode must be iso or embed");
        cli::Args a = cli::Args::parse(toks, 2);
        int height = a.flag("height") ? std::stoi(*a.flag("height")) : config_.default_height;
        std::string family = a.flag("family").value_or("");

        if (family == "field") {
            const auto &F1 = find(fields_, a.at(0), "field"), &F2 = find(fields_, a.at(1), "field");
            bool fwd = decide_field_embed(F1, F2);
            bool ans = mode == MapMode::embed ? fwd : (fwd && decide_field_embed(F2, F1));
            r.data["status"] = ans ? "yes" : "no";
            r.data["decider"] = "field-inclusion";
            return;
        }
        if (family == "rank1") {
            const auto &c1 = find(rank1s_, a.at(0), "rank1"), &c2 = find(rank1s_, a.at(1), "rank1");
            bool ans = mode == MapMode::iso ? decide_rank1_iso(c1, c2)
                                            : decide_rank1_embed(c1, c2);
            r.data["status"] = ans ? "yes" : "no";
            r.data["decider"] = "baer-characteristic";
            return;
        }
        if (family == "pointed") {
            const auto &A = find(pointed_, a.at(0), "pointed"),
                       &B = find(pointed_, a.at(1), "pointed");
            auto w = decide_pointed(A, B, mode);
            r.data["status"] = w ? "yes" : "no";
            if (w) r.data["witness"] = witness_json(*w);
            r.data["decider"] = "pointed-ratio";
            return;
        }
        if (family == "unit-span") {
            const auto &G = group(a.at(0)), &H = group(a.at(1));
            auto fg = detail::unit_span_form(G), fh = detail::unit_span_form(H);
            if (!fg || !fh)
                throw ContractViolation("unit-span family needs rank-2 divisible groups");
            auto us = decide_unit_span(fg->alpha, fh->alpha, mode);
            r.data["status"] = us ? "yes" : "no";
            if (us)
                r.data["matrix"] = Json::array({to_string(us->k), to_string(us->l),
                                                to_string(us->m), to_string(us->n)});
            r.data["decider"] = "unit-span";
            return;
        }
        if (!family.empty()) throw ParseError("unknown family: " + family);

        const auto &G = group(a.at(0)), &H = group(a.at(1));
        Decision d = mode == MapMode::iso ? decide_iso(G, H, height) : decide_embed(G, H, height);
        decision_json(r, d);
    }

    // invariant emit <G> --height k [--out file]   |   invariant equal <G> <H> [--height k]
    void cmd_invariant(const std::vector<std::string>& toks, Report& r) {
        if (toks.size() < 2) throw ParseError("usage: invariant emit|equal ...");
        cli::Args a = cli::Args::parse(toks, 2);
        int height = a.flag("height") ? std::stoi(*a.flag("height")) : config_.default_height;
        if (toks[1] == "equal") {
            Decision d = invariant_equal(group(a.at(0)), group(a.at(1)), height);
            decision_json(r, d);
            return;
        }
        if (toks[1] != "emit") throw ParseError("usage: invariant emit|equal ...");
        InvariantFragment frag = emit_invariant(group(a.at(0)), height);
        std::ostringstream os;
        os << "slices " << frag.slices.size() << "\n";
        for (size_t i = 0; i < frag.slices.size(); ++i) {
            os << "slice " << i << " r " << frag.slices[i].r.to_string() << " basis [";
            const auto& b = frag.slices[i].group.basis();
            for (size_t j = 0; j < b.size(); ++j) os << (j ? ", " : "") << b[j].to_string();
            os << "]\n";
        }
        os << "triples " << frag.triples.size() << "\n";
        for (auto& t : frag.triples)
            os << "triple " << t.from << " " << t.to << " " << t.ratio.to_string() << "\n";
        if (auto out = a.flag("out")) {
            std::ofstream f(*out);
            if (!f) throw Error("cannot open output file: " + *out);
            f << os.str();
            r.data["written"] = *out;
        } else {
            r.data["fragment"] = os.str();
        }
        r.data["slices"] = frag.slices.size();
        r.data["triples"] = frag.triples.size();
        r.data["height"] = height;
    }

    // gl2 apply <a> <b> <c> <d> <expr>
    void cmd_gl2(const std::vector<std::string>& toks, Report& r) {
        if (toks.size() < 2 || toks[1] != "apply") throw ParseError("usage: gl2 apply a b c d expr");
        cli::Args a = cli::Args::parse(toks, 2);
        Gl2zMatrix M(std::stol(a.at(0)), std::stol(a.at(1)), std::stol(a.at(2)), std::stol(a.at(3)));
        r.data["result"] = gl2_apply(M, expr(a.at(4))).to_string();
    }

    // odag cmp <clo> <f> <g>
    void cmd_odag(const std::vector<std::string>& toks, Report& r) {
        if (toks.size() < 2 || toks[1] != "cmp") throw ParseError("usage: odag cmp <clo> <f> <g>");
        cli::Args a = cli::Args::parse(toks, 2);
        OdagGroup G(clo(a.at(0)), reg_);
        r.data["cmp"] = G.compare(odag_literal(a.at(1)), odag_literal(a.at(2)));
    }

    // circ cocycle <t1> <t2> <t3>   |   circ separate <a> <b> --cap N
    void cmd_circ(const std::vector<std::string>& toks, Report& r) {
        if (toks.size() < 2) throw ParseError("usage: circ cocycle|separate ...");
        cli::Args a = cli::Args::parse(toks, 2);
        if (toks[1] == "cocycle") {
            r.data["cocycle"] = cocycle(CircleElem(expr(a.at(0))), CircleElem(expr(a.at(1))),
                                        CircleElem(expr(a.at(2))));
            return;
        }
        if (toks[1] == "separate") {
            long cap = a.flag("cap") ? std::stol(*a.flag("cap")) : config_.default_cap;
            auto nk = find_separating_power(expr(a.at(0)), expr(a.at(1)), cap);
            r.data["status"] = nk ? "found" : "absent";
            if (nk) {
                r.data["n"] = nk->first;
                r.data["k"] = nk->second.get_str();
            }
            return;
        }
        throw ParseError("unknown circ subcommand: " + toks[1]);
    }

    // zeleva mul|cmp|pow ...
    void cmd_zeleva(const std::vector<std::string>& toks, Report& r) {
        if (toks.size() < 2) throw ParseError("usage: zeleva mul|cmp|pow ...");
        cli::Args a = cli::Args::parse(toks, 2);
        auto elem_json = [&](const ZelevaElement& z) {
            return "(" + z.g.theta().to_string() + ", " + z.n.get_str() + ")";
        };
        if (toks[1] == "mul") {
            r.data["result"] = elem_json(zeleva_mul(zeleva_literal(a.at(0)), zeleva_literal(a.at(1))));
            return;
        }
        if (toks[1] == "cmp") {
            r.data["cmp"] = zeleva_compare(zeleva_literal(a.at(0)), zeleva_literal(a.at(1)));
            return;
        }
        if (toks[1] == "pow") {
            r.data["result"] = elem_json(zeleva_pow(zeleva_literal(a.at(0)), std::stol(a.at(1))));
            return;
        }
        throw ParseError("unknown zeleva subcommand: " + toks[1]);
    }

    // hahn eval <type|clo> "<series expr>"
    void cmd_hahn(const std::vector<std::string>& toks, Report& r) {
        if (toks.size() < 2 || toks[1] != "eval")
            throw ParseError("usage: hahn eval <exponent-group> \"series\"");
        cli::Args a = cli::Args::parse(toks, 2);
        const std::string& gname = a.at(0);
        if (types_.count(gname)) {
            VectorExponentGroup eg(&types_.at(gname));
            auto s = parse_series(eg, a.at(1));
            r.data["result"] = series_str(eg, s);
        } else if (clos_.count(gname)) {
            OdagGroup og(clos_.at(gname), reg_);
            OdagExponentGroup eg(&og);
            auto s = parse_series(eg, a.at(1));
            r.data["result"] = series_str(eg, s);
        } else {
            throw ParseError("unknown exponent group: " + gname);
        }
    }

    // eval <expr>  (convenience: canonical form / sign / approx of an expression)
    void cmd_eval(const std::vector<std::string>& toks, Report& r) {
        cli::Args a = cli::Args::parse(toks, 1);
        SymbolicReal x = expr(a.at(0));
        r.data["canonical"] = x.to_string();
        r.data["sign"] = x.sign();
        if (auto q = x.as_rational()) r.data["rational"] = to_string(*q);
        if (auto eps = a.flag("eps")) r.data["approx"] = interval_str(x.approx(parse_rat(*eps)));
    }

    // series grammar: term ('+'|'-' term)*, term: factor ('*' factor)*,
    // factor: rational | t^(<exponent literal>) | '(' series ')'
    template <class EG>
    HahnSeries<EG> parse_series(const EG& eg, const std::string& src) {
        size_t pos = 0;
        auto s = parse_series_sum(eg, src, pos);
        while (pos < src.size() && isspace(static_cast<unsigned char>(src[pos]))) ++pos;
        if (pos != src.size()) throw ParseError("trailing input in series");
        return s;
    }

    template <class EG>
    HahnSeries<EG> parse_series_sum(const EG& eg, const std::string& src, size_t& pos) {
        auto skip = [&] {
            while (pos < src.size() && isspace(static_cast<unsigned char>(src[pos]))) ++pos;
        };
        skip();
        bool neg = false;
        if (pos < src.size() && (src[pos] == '-' || src[pos] == '+')) neg = src[pos++] == '-';
        HahnSeries<EG> acc = parse_series_product(eg, src, pos);
        if (neg) acc = -acc;
        for (;;) {
            skip();
            if (pos >= src.size() || (src[pos] != '+' && src[pos] != '-')) return acc;
            bool minus = src[pos++] == '-';
            HahnSeries<EG> t = parse_series_product(eg, src, pos);
            acc = minus ? acc - t : acc + t;
        }
    }

    template <class EG>
    HahnSeries<EG> parse_series_product(const EG& eg, const std::string& src, size_t& pos) {
        auto skip = [&] {
            while (pos < src.size() && isspace(static_cast<unsigned char>(src[pos]))) ++pos;
        };
        HahnSeries<EG> acc = parse_series_factor(eg, src, pos);
        for (;;) {
            skip();
            if (pos >= src.size() || src[pos] != '*') return acc;
            ++pos;
            acc = acc * parse_series_factor(eg, src, pos);
        }
    }

    template <class EG>
    HahnSeries<EG> parse_series_factor(const EG& eg, const std::string& src, size_t& pos) {
        auto skip = [&] {
            while (pos < src.size() && isspace(static_cast<unsigned char>(src[pos]))) ++pos;
        };
        skip();
        if (pos >= src.size()) throw ParseError("unexpected end of series");
        if (src[pos] == '(') {
            ++pos;
            auto s = parse_series_sum(eg, src, pos);
            skip();
            if (pos >= src.size() || src[pos] != ')') throw ParseError("expected ')' in series");
            ++pos;
            return s;
        }
        if (src[pos] == 't') {
            ++pos;
            skip();
            if (pos >= src.size() || src[pos] != '^') throw ParseError("expected '^' after t");
            ++pos;
            skip();
            if (pos >= src.size() || src[pos] != '(')
                throw ParseError("expected '(' around the exponent");
            int depth = 0;
            size_t start = pos;
            for (; pos < src.size(); ++pos) {
                if (src[pos] == '(' || src[pos] == '[' || src[pos] == '{') ++depth;
                if (src[pos] == ')' || src[pos] == ']' || src[pos] == '}')
                    if (--depth == 0) break;
            }
            if (pos >= src.size()) throw ParseError("unbalanced exponent");
            std::string inner = src.substr(start + 1, pos - start - 1);
            ++pos;
            return HahnSeries<EG>::monomial(&eg, exponent_literal(eg, inner));
        }
        // rational literal
        size_t start = pos;
        while (pos < src.size() &&
               (isdigit(static_cast<unsigned char>(src[pos])) || src[pos] == '/'))
            ++pos;
        if (start == pos) throw ParseError("expected a series term");
        return HahnSeries<EG>::constant(&eg, parse_rat(src.substr(start, pos - start)));
    }

    QVec exponent_literal(const VectorExponentGroup& eg, const std::string& s) {
        QVec v = vec_literal(s);
        if (static_cast<int>(v.size()) != eg.group->rank())
            throw DimensionMismatch("exponent has wrong rank");
        return v;
    }
    OdagElement exponent_literal(const OdagExponentGroup&, const std::string& s) {
        return odag_literal(s);
    }

    template <class EG>
    std::string series_str(const EG& eg, const HahnSeries<EG>& s) {
        if (s.is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto& [e, c] : s.terms()) {
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
            if (a != 1) os << to_string(a) << "*";
            os << "t^(" << exponent_str(eg, e) << ")";
        }
        return os.str();
    }

    std::string exponent_str(const VectorExponentGroup&, const QVec& v) {
        std::ostringstream os;
        os << "[";
        for (size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << to_string(v[i]);
        os << "]";
        return os.str();
    }
    std::string exponent_str(const OdagExponentGroup&, const OdagElement& e) {
        Json j = Json::object();
        for (auto& [p, c] : e.coords)
            j[std::to_string(p)] = Json::array({to_string(c.first), to_string(c.second)});
        return j.dump();
    }

    RegistryPtr reg_;
    Config config_;
    std::map<std::string, Subgroup> groups_;
    std::map<std::string, OrderedVectorGroup> types_;
    std::map<std::string, ColoredLinearOrder> clos_;
    std::map<std::string, FieldDescriptor> fields_;
    std::map<std::string, Rank1Characteristic> rank1s_;
    std::map<std::string, PointedGroup> pointed_;
    long fresh_counter_ = 0;
};

}  // namespace ordkit
