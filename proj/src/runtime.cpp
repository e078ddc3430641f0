#include "odrl/runtime.hpp"

#include "odrl/error.hpp"

namespace odrl {

bool satisfies_concept(const KnowledgeBase& kb, ConceptIndex x, const Constraint& c, Mode mode) {
    auto g = ground_constraint(kb, c);
    if (!g) return true;
    if (mode == Mode::Closed) return denote(kb, *g).set().contains(x);
    return member3(kb, x, *g) == Truth::True;
}

bool satisfies(const KnowledgeBase& kb, const ExecutionContext& ctx, const Constraint& c, Mode mode) {
    auto assigned = ctx.find(c.left_operand);
    if (assigned == ctx.end()) return false;
    auto x = kb.ground(assigned->second);
    if (!x) return false;
    return satisfies_concept(kb, *x, c, mode);
}

bool satisfies(const KbRegistry& kbs, const ExecutionContext& ctx, const Constraint& c, Mode mode) {
    return satisfies(kbs.at(c.left_operand), ctx, c, mode);
}

namespace {

std::string synthetic_value(const KnowledgeBase& kb, ConceptIndex x) { return "urn:odrl-context:" + kb.name(x); }

// Same relations as kb, with every concept reachable from some value.
KnowledgeBase with_total_gamma(const KnowledgeBase& kb, std::vector<std::string>& values) {
    auto gamma = kb.gamma();
    values.assign(kb.size(), std::string{});
    for (const auto& [v, g] : gamma) {
        if (values[g].empty() || v < values[g]) values[g] = v;
    }
    for (ConceptIndex x = 0; x < kb.size(); ++x) {
        if (!values[x].empty()) continue;
        values[x] = synthetic_value(kb, x);
        gamma.emplace(values[x], x);
    }
    return KnowledgeBase::from_relations(kb.id(), kb.domain(), kb.una(), kb.concepts(), kb.leq_relation(),
                                         kb.disjoint_relation(), kb.not_leq_relation(), std::move(gamma));
}

}  // namespace

SoundnessReport exhaustive_soundness_check(const KnowledgeBase& kb, const Constraint& c1, const Constraint& c2,
                                           Mode mode) {
    SoundnessReport report;
    report.verdict = check_pair(kb, c1, c2, mode);
    std::vector<std::string> values;
    const KnowledgeBase total = with_total_gamma(kb, values);
    for (ConceptIndex x = 0; x < kb.size(); ++x) {
        ExecutionContext ctx{{c1.left_operand, values[x]}};
        ++report.contexts_checked;
        const bool both = satisfies(total, ctx, c1, mode) && satisfies(total, ctx, c2, mode);
        if (!both) continue;
        report.satisfying.push_back(ctx);
        if (report.verdict.verdict == Verdict::Conflict) report.violating.push_back(ctx);
    }
    if (report.verdict.verdict == Verdict::Compatible && report.verdict.witness) {
        const auto w = kb.require(*report.verdict.witness);
        report.witness_satisfies = satisfies_concept(kb, w, c1, mode) && satisfies_concept(kb, w, c2, mode);
    }
    return report;
}

}  // namespace odrl
