#include "doctest.h"
#include "support.hpp"

#include "odrl/bench.hpp"
#include "odrl/encoder.hpp"
#include "odrl/error.hpp"

using namespace odrl;
using namespace odrl::testing;

namespace {

KnowledgeBase fixture(const std::string& id) {
    static const auto specs = bench::builtin_kbs();
    return KnowledgeBase::build(specs.at(id));
}

bool has_formula(const fol::Problem& p, const std::string& name) {
    return std::any_of(p.formulas.begin(), p.formulas.end(), [&](const auto& f) { return f.name == name; });
}

}  // namespace

TEST_CASE("three result rows") {
    const auto lng = fixture("LNG000");
    const Constraint fr{"language", Operator::Eq, "fr"}, de{"language", Operator::IsA, "de"};
    auto e = emit_problem(lng, fr, de, Polarity::ConflictQuery, "lng");
    CHECK(e.expected == ExpectedStatus::TheoremUnsat);
    CHECK(e.engine_verdict == Verdict::Conflict);
    CHECK(fol::ground_decide(e.problem) == fol::GroundStatus::Theorem);
    e = emit_problem(lng, fr, de, Polarity::CompatQuery, "lng");
    CHECK(e.expected == ExpectedStatus::CounterSatSat);
    CHECK(fol::ground_decide(e.problem) == fol::GroundStatus::CounterSatisfiable);

    const auto geo = fixture("GEO000");
    const Constraint france{"spatial", Operator::Eq, "France"}, eu{"spatial", Operator::IsPartOf, "Europe"};
    e = emit_problem(geo, france, eu, Polarity::CompatQuery, "geo");
    CHECK(e.expected == ExpectedStatus::TheoremUnsat);
    CHECK(fol::ground_decide(e.problem) == fol::GroundStatus::Theorem);

    const auto dpv = fixture("DPV000");
    const Constraint sr{"purpose", Operator::Eq, "ScientificResearch"}, nc{"purpose", Operator::IsA, "NonCommercialPurpose"};
    for (Polarity p : {Polarity::CompatQuery, Polarity::ConflictQuery}) {
        e = emit_problem(dpv, sr, nc, p, "dpv");
        CHECK(e.expected == ExpectedStatus::CounterSatSat);
        CHECK(fol::ground_decide(e.problem) == fol::GroundStatus::CounterSatisfiable);
    }
    CHECK(ground_oracle(dpv, std::vector{sr}, std::vector{nc}).verdict == Verdict::Unknown);
    CHECK(ground_oracle(lng, std::vector{fr}, std::vector{de}).verdict == Verdict::Conflict);
    CHECK(ground_oracle(geo, std::vector{france}, std::vector{eu}).verdict == Verdict::Compatible);
}

TEST_CASE("result interpretation") {
    CHECK(interpret_result("Theorem", Polarity::ConflictQuery) == Verdict::Conflict);
    CHECK(interpret_result("unsat", Polarity::ConflictQuery) == Verdict::Conflict);
    CHECK(interpret_result("unsat", Polarity::CompatQuery) == Verdict::Compatible);
    CHECK(interpret_result("Theorem", Polarity::CompatQuery) == Verdict::Compatible);
    CHECK(interpret_result("sat", Polarity::CompatQuery) == Verdict::Unknown);
    CHECK(interpret_result("CounterSatisfiable", Polarity::ConflictQuery) == Verdict::Unknown);
    for (const char* bad : {"Timeout", "", "theorem", "unknown"}) {
        try {
            (void)interpret_result(bad, Polarity::CompatQuery);
            FAIL("accepted " << bad);
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::UnrecognizedToken);
        }
    }
    CHECK(extract_status_token("% SZS status Theorem for x\n") == "Theorem");
    CHECK(extract_status_token("sat\n(model)\n") == "sat");
    CHECK_FALSE(extract_status_token("nothing here"));
}

TEST_CASE("emission shape and naming") {
    const auto geo = fixture("GEO000");
    const Constraint france{"spatial", Operator::Eq, "France"}, eu{"spatial", Operator::IsPartOf, "Europe"};
    const auto e = emit_problem(geo, france, eu, Polarity::CompatQuery, "geo-1");
    CHECK(has_formula(e.problem, "ax_leq_france_europe"));
    CHECK(has_formula(e.problem, "ax_domain"));
    CHECK(e.problem.formulas.back().role == fol::Annotated::Role::Conjecture);
    CHECK(e.problem.formulas.back().name == "cj_geo_2d1");
    CHECK(e.tptp_text.find("fof(cj_geo_2d1, conjecture,") != std::string::npos);
    CHECK(e.smtlib_text.substr(e.smtlib_text.size() - 12) == "(check-sat)\n");
    CHECK(fol::epr_check(e.problem).ok);

    const auto again = emit_problem(geo, france, eu, Polarity::CompatQuery, "geo-1");
    CHECK(again.tptp_text == e.tptp_text);
    CHECK(again.smtlib_text == e.smtlib_text);

    const Constraint ghost{"spatial", Operator::Eq, "Atlantis"};
    try {
        (void)emit_problem(geo, ghost, eu, Polarity::CompatQuery);
        FAIL("ungrounded accepted");
    } catch (const Error& err) {
        CHECK(err.kind() == ErrorKind::UngroundedConstraint);
    }
    const auto top = emit_problem(geo, ghost, eu, Polarity::CompatQuery, "t", {.allow_indeterminate = true});
    CHECK(fol::epr_check(top.problem).ok);
    CHECK(fol::ground_decide(top.problem) == fol::GroundStatus::CounterSatisfiable);
    CHECK_THROWS_AS(emit_problem(geo, france, {"language", Operator::Eq, "fr"}, Polarity::CompatQuery), Error);
}

TEST_CASE("una inequalities follow the flag") {
    KbSpec s{"U", Domain::Taxonomic, true, {"a", "b"}, {}, {}, {}, {{"a", "a"}, {"b", "b"}}};
    const Constraint c1{"x", Operator::Eq, "a"}, c2{"x", Operator::Eq, "b"};
    auto e = emit_problem(KnowledgeBase::build(s), c1, c2, Polarity::ConflictQuery);
    CHECK(has_formula(e.problem, "ax_una_a_b"));
    CHECK(fol::ground_decide(e.problem) == fol::GroundStatus::Theorem);
    s.una = false;
    e = emit_problem(KnowledgeBase::build(s), c1, c2, Polarity::ConflictQuery);
    CHECK_FALSE(has_formula(e.problem, "ax_una_a_b"));
    CHECK(fol::ground_decide(e.problem) == fol::GroundStatus::CounterSatisfiable);
}

TEST_CASE("property: ground oracle agrees with the engine and the completion oracle") {
    Rng rng(0xe9c);
    std::size_t definite = 0;
    for (int iter = 0; iter < 150; ++iter) {
        const auto spec = random_spec(rng, {.max_concepts = 4, .gamma_p = 1.0});
        const auto kb = build(spec);
        const auto models = completions(kb);
        for (int k = 0; k < 6; ++k) {
            const Constraint c1 = random_constraint(rng, spec, 0.0), c2 = random_constraint(rng, spec, 0.0);
            INFO(c1.to_string() << " / " << c2.to_string() << " in iteration " << iter);
            const auto oracle = ground_oracle(kb, std::vector{c1}, std::vector{c2}).verdict;
            CHECK(oracle == open_oracle(kb, models, {c1, c2}));
            CHECK(oracle == check_pair(kb, c1, c2, Mode::Open).verdict);
            definite += oracle != Verdict::Unknown;
            for (Polarity p : {Polarity::CompatQuery, Polarity::ConflictQuery})
                CHECK(fol::epr_check(emit_problem(kb, c1, c2, p).problem).ok);
        }
    }
    CHECK(definite > 300);
}

TEST_CASE("property: group emission matches grouped engine verdicts") {
    Rng rng(0x9e0);
    for (int iter = 0; iter < 100; ++iter) {
        const auto spec = random_spec(rng, {.max_concepts = 5, .gamma_p = 1.0});
        const auto kb = build(spec);
        for (int k = 0; k < 4; ++k) {
            std::vector<Constraint> lhs{random_constraint(rng, spec, 0.0)}, rhs{random_constraint(rng, spec, 0.0)};
            if (coin(rng, 0.5)) lhs.push_back(random_constraint(rng, spec, 0.0));
            if (coin(rng, 0.5)) rhs.push_back(random_constraint(rng, spec, 0.0));
            CHECK(ground_oracle(kb, lhs, rhs).verdict == check_group(kb, lhs, rhs, Mode::Open).verdict);
            const auto e = emit_group(kb, lhs, rhs, Polarity::ConflictQuery);
            CHECK(fol::epr_check(e.problem).ok);
        }
    }
}
