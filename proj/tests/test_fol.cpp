#include "doctest.h"
#include "support.hpp"

#include "odrl/fol.hpp"
#include "odrl/ground.hpp"
#include "odrl/sat.hpp"

#include <map>
#include <set>

using namespace odrl;
using namespace odrl::fol;
using odrl::testing::Rng;
using odrl::testing::coin;
using odrl::testing::pick;

namespace {

// Propositional reading: 0-ary atoms only.
bool eval(const Formula& f, const std::map<std::string, bool>& v) {
    switch (f->kind) {
        case Kind::True: return true;
        case Kind::False: return false;
        case Kind::Atom: return v.at(f->symbol);
        case Kind::Not: return !eval(f->children[0], v);
        case Kind::And:
            for (const auto& c : f->children)
                if (!eval(c, v)) return false;
            return true;
        case Kind::Or:
            for (const auto& c : f->children)
                if (eval(c, v)) return true;
            return false;
        case Kind::Implies: return !eval(f->children[0], v) || eval(f->children[1], v);
        case Kind::Iff: return eval(f->children[0], v) == eval(f->children[1], v);
        default: FAIL("unexpected node"); return false;
    }
}

Formula random_prop(Rng& rng, int depth) {
    static const char* names[] = {"p", "q", "r"};
    if (depth == 0 || coin(rng, 0.25)) return atom(names[pick(rng, 3)], {});
    switch (pick(rng, 5)) {
        case 0: return negate(random_prop(rng, depth - 1));
        case 1: return conj({random_prop(rng, depth - 1), random_prop(rng, depth - 1)});
        case 2: return disj({random_prop(rng, depth - 1), random_prop(rng, depth - 1)});
        case 3: return implies(random_prop(rng, depth - 1), random_prop(rng, depth - 1));
        default: return iff(random_prop(rng, depth - 1), random_prop(rng, depth - 1));
    }
}

bool nnf_shape(const Formula& f) {
    switch (f->kind) {
        case Kind::Not: return f->children[0]->kind == Kind::Atom || f->children[0]->kind == Kind::Equal;
        case Kind::Implies:
        case Kind::Iff: return false;
        default:
            for (const auto& c : f->children)
                if (!nnf_shape(c)) return false;
            return true;
    }
}

bool brute_sat(int vars, const std::vector<std::vector<int>>& clauses) {
    for (unsigned m = 0; m < (1u << vars); ++m) {
        bool all = true;
        for (const auto& cl : clauses) {
            bool any = false;
            for (int l : cl) any = any || (((m >> (std::abs(l) - 1)) & 1u) == (l > 0 ? 1u : 0u));
            all = all && any;
        }
        if (all) return true;
    }
    return false;
}

Problem small_problem(Formula conjecture, std::vector<Formula> axioms = {}) {
    Problem p;
    p.id = "t";
    p.constants = {"a", "b"};
    p.predicates = {{"p", 1}, {"r", 2}};
    int i = 0;
    for (auto& a : axioms) p.formulas.push_back({"ax" + std::to_string(i++), Annotated::Role::Axiom, std::move(a), {}});
    p.formulas.push_back({"cj", Annotated::Role::Conjecture, std::move(conjecture), {}});
    return p;
}

}  // namespace

TEST_CASE("sanitize keeps safe identifiers and escapes the rest") {
    CHECK(sanitize("abcXYZ09") == "abcXYZ09");
    CHECK(sanitize("de-AT") == "de_2dAT");
    CHECK(sanitize("a_b") == "a__b");
    CHECK(sanitize("https://x/") == "https_3a_2f_2fx_2f");
}

TEST_CASE("property: sanitize is injective") {
    Rng rng(0x5a1);
    const std::string alphabet = "ab_-:2f";
    std::map<std::string, std::string> seen;
    for (int i = 0; i < 20000; ++i) {
        std::string s;
        const std::size_t n = pick(rng, 6);
        for (std::size_t k = 0; k < n; ++k) s += alphabet[pick(rng, alphabet.size())];
        const auto out = sanitize(s);
        CHECK(out.find_first_not_of("abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789_") == std::string::npos);
        auto [it, fresh] = seen.emplace(out, s);
        if (!fresh) CHECK(it->second == s);
    }
}

TEST_CASE("property: nnf preserves propositional meaning") {
    Rng rng(0x22f);
    for (int i = 0; i < 2000; ++i) {
        const auto f = random_prop(rng, 4);
        const auto g = nnf(f);
        CHECK(nnf_shape(g));
        for (int m = 0; m < 8; ++m) {
            const std::map<std::string, bool> v{{"p", m & 1}, {"q", (m >> 1) & 1}, {"r", (m >> 2) & 1}};
            CHECK(eval(f, v) == eval(g, v));
        }
    }
}

TEST_CASE("epr guard") {
    const auto X = var("X"), Y = var("Y");
    auto bad_prefix = small_problem(top(), {forall({"X"}, exists({"Y"}, atom("r", {X, Y})))});
    auto r = epr_check(bad_prefix);
    CHECK_FALSE(r.ok);
    REQUIRE(r.offending.size() == 1);
    CHECK(r.offending[0].rfind("ax0", 0) == 0);

    auto fn = small_problem(top(), {forall({"X"}, atom("p", {app("f", {X})}))});
    CHECK_FALSE(epr_check(fn).ok);
    CHECK_FALSE(epr_violation(atom("p", {app("f", {constant("a")})})).empty());

    // exists*forall* is fine, and a forall conjecture negates into one
    CHECK(epr_check(small_problem(forall({"X"}, atom("p", {X})), {exists({"X"}, forall({"Y"}, atom("r", {X, Y})))})).ok);
    // exists-forall conjecture negates into forall-exists
    CHECK_FALSE(epr_check(small_problem(exists({"X"}, forall({"Y"}, atom("r", {X, Y}))))).ok);
}

TEST_CASE("printers") {
    const auto X = var("X");
    auto p = small_problem(exists({"X"}, atom("p", {X})), {atom("p", {constant("a")})});
    const auto tptp = to_tptp(p);
    CHECK(tptp.find("fof(ax0, axiom,\n    p(a)).") != std::string::npos);
    CHECK(tptp.find("fof(cj, conjecture,\n    ? [X] : (p(X))).") != std::string::npos);
    const auto smt = to_smtlib(p);
    CHECK(smt.find("(declare-sort") != std::string::npos);
    CHECK(smt.rfind("(check-sat)") != std::string::npos);
    CHECK(smt.find("(assert (! (not (exists ((X Concept)) (p X))) :named cj))") != std::string::npos);
    CHECK(to_tptp(p) == tptp);
}

TEST_CASE("ground decision on small problems") {
    const auto X = var("X"), a = constant("a"), b = constant("b");
    const auto closure = forall({"X"}, disj({equal(X, a), equal(X, b)}));
    CHECK(ground_decide(small_problem(exists({"X"}, atom("p", {X})), {atom("p", {a}), closure})) == GroundStatus::Theorem);
    CHECK(ground_decide(small_problem(atom("p", {b}), {atom("p", {a}), closure})) == GroundStatus::CounterSatisfiable);
    CHECK(ground_decide(small_problem(atom("p", {b}), {atom("p", {a}), equal(a, b), closure})) == GroundStatus::Theorem);
    CHECK(ground_decide(small_problem(forall({"X"}, atom("p", {X})), {atom("p", {a}), atom("p", {b}), closure})) ==
          GroundStatus::Theorem);
    CHECK_THROWS_AS(ground_decide(small_problem(atom("p", {app("f", {a})}))), std::invalid_argument);
    CHECK_THROWS_AS(ground_decide(small_problem(atom("p", {X}))), std::invalid_argument);
}

TEST_CASE("sat solver basics") {
    sat::Solver s;
    const int a = s.new_var(), b = s.new_var();
    CHECK(s.add_clause({a, b}));
    CHECK(s.add_clause({-a}));
    REQUIRE(s.solve());
    CHECK_FALSE(s.value(a));
    CHECK(s.value(b));
    s.add_clause({-b});
    CHECK_FALSE(s.solve());
}

TEST_CASE("sat solver on pigeonhole 5 into 4") {
    sat::Solver s;
    int v[5][4];
    for (auto& row : v)
        for (auto& x : row) x = s.new_var();
    for (auto& row : v) s.add_clause({row[0], row[1], row[2], row[3]});
    for (int h = 0; h < 4; ++h)
        for (int i = 0; i < 5; ++i)
            for (int j = i + 1; j < 5; ++j) s.add_clause({-v[i][h], -v[j][h]});
    CHECK_FALSE(s.solve());
}

TEST_CASE("property: sat solver agrees with truth tables") {
    Rng rng(0x5a7);
    for (int iter = 0; iter < 3000; ++iter) {
        const int vars = 1 + static_cast<int>(pick(rng, 8));
        const std::size_t n = pick(rng, 5 * vars);
        std::vector<std::vector<int>> clauses;
        for (std::size_t c = 0; c < n; ++c) {
            std::vector<int> cl;
            const std::size_t len = 1 + pick(rng, 3);
            for (std::size_t k = 0; k < len; ++k) {
                const int x = 1 + static_cast<int>(pick(rng, vars));
                cl.push_back(coin(rng, 0.5) ? x : -x);
            }
            clauses.push_back(cl);
        }
        sat::Solver s;
        for (int i = 0; i < vars; ++i) s.new_var();
        for (const auto& cl : clauses) s.add_clause(cl);
        const bool expected = brute_sat(vars, clauses);
        const bool got = s.solve();
        CHECK(got == expected);
        if (got) {
            for (const auto& cl : clauses) {
                bool any = false;
                for (int l : cl) any = any || (s.value(std::abs(l)) == (l > 0));
                CHECK(any);
            }
        }
    }
}
