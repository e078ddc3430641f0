#include "odrl/alignment.hpp"

#include "odrl/error.hpp"

#include <algorithm>
#include <set>

namespace odrl {

std::optional<std::string> Alignment::image(std::string_view source_concept) const {
    for (const auto& [s, t] : mapping) {
        if (s == source_concept) return t;
    }
    return std::nullopt;
}

std::string_view to_string(AlignmentViolationKind kind) {
    switch (kind) {
        case AlignmentViolationKind::KbIdMismatch: return "KbIdMismatch";
        case AlignmentViolationKind::UnknownSourceConcept: return "UnknownSourceConcept";
        case AlignmentViolationKind::UnknownTargetConcept: return "UnknownTargetConcept";
        case AlignmentViolationKind::FunctionalityViolation: return "FunctionalityViolation";
        case AlignmentViolationKind::InjectivityViolation: return "InjectivityViolation";
        case AlignmentViolationKind::OrderViolation: return "OrderViolation";
        case AlignmentViolationKind::DisjointnessViolation: return "DisjointnessViolation";
        case AlignmentViolationKind::WitnessIncomplete: return "WitnessIncomplete";
    }
    return "AlignmentViolation";
}

std::string AlignmentViolation::to_string() const {
    std::string out(odrl::to_string(kind));
    out += "(" + x;
    if (!y.empty()) out += kind == AlignmentViolationKind::WitnessIncomplete ? ", missing " + y : ", " + y;
    return out + ")";
}

namespace {

using Kind = AlignmentViolationKind;

struct Resolved {
    std::vector<std::pair<ConceptIndex, ConceptIndex>> pairs;
    std::map<ConceptIndex, ConceptIndex> alpha;
};

Resolved resolve(const Alignment& a, const KnowledgeBase& kb_a, const KnowledgeBase& kb_b,
                 std::vector<AlignmentViolation>& out) {
    Resolved r;
    std::set<ConceptPair> seen;
    std::map<ConceptIndex, ConceptIndex> preimage;
    for (const auto& [s, t] : a.mapping) {
        if (!seen.insert({s, t}).second) continue;
        auto si = kb_a.index_of(s);
        auto ti = kb_b.index_of(t);
        if (!si) out.push_back({Kind::UnknownSourceConcept, s, ""});
        if (!ti) out.push_back({Kind::UnknownTargetConcept, t, ""});
        if (!si || !ti) continue;
        if (r.alpha.contains(*si)) {
            out.push_back({Kind::FunctionalityViolation, s, t});
            continue;
        }
        if (auto p = preimage.find(*ti); p != preimage.end()) {
            out.push_back({Kind::InjectivityViolation, kb_a.name(p->second), s});
            continue;
        }
        r.alpha.emplace(*si, *ti);
        preimage.emplace(*ti, *si);
        r.pairs.emplace_back(*si, *ti);
    }
    return r;
}

}  // namespace

std::vector<AlignmentViolation> validate_alignment(const Alignment& a, const KnowledgeBase& kb_a,
                                                   const KnowledgeBase& kb_b) {
    std::vector<AlignmentViolation> out;
    if (a.source_kb_id != kb_a.id()) out.push_back({Kind::KbIdMismatch, a.source_kb_id, kb_a.id()});
    if (a.target_kb_id != kb_b.id()) out.push_back({Kind::KbIdMismatch, a.target_kb_id, kb_b.id()});
    const Resolved r = resolve(a, kb_a, kb_b, out);

    for (const auto& [x, ax] : r.pairs) {
        for (const auto& [y, ay] : r.pairs) {
            if (kb_a.leq(x, y) != kb_b.leq(ax, ay)) out.push_back({Kind::OrderViolation, kb_a.name(x), kb_a.name(y)});
            if (kb_a.name(x) < kb_a.name(y) && kb_a.disjoint(x, y) && !kb_b.disjoint(ax, ay)) {
                out.push_back({Kind::DisjointnessViolation, kb_a.name(x), kb_a.name(y)});
            }
        }
    }

    std::set<ConceptIndex> grounded;
    for (const auto& [value, g] : kb_a.gamma()) {
        if (r.alpha.contains(g)) grounded.insert(g);
    }
    std::vector<ConceptIndex> targets(grounded.begin(), grounded.end());
    std::sort(targets.begin(), targets.end(), [&](auto p, auto q) { return kb_a.name(p) < kb_a.name(q); });
    for (auto g : targets) {
        std::vector<std::string> missing;
        for (auto x : kb_a.below(g).members()) {
            if (!r.alpha.contains(x)) missing.push_back(kb_a.name(x));
        }
        std::sort(missing.begin(), missing.end());
        for (auto& m : missing) out.push_back({Kind::WitnessIncomplete, kb_a.name(g), std::move(m)});
    }
    return out;
}

std::optional<Constraint> align_constraint(const Alignment& a, const KnowledgeBase& kb_a, const Constraint& c) {
    auto g = ground_constraint(kb_a, c);
    if (!g) return std::nullopt;
    // Upward and complement operators reach concepts outside dom(a) that the
    // target KB cannot see; they only survive when nothing is lost.
    if (c.op == Operator::HasPart || c.op == Operator::Neq || c.op == Operator::IsNoneOf) {
        const Denotation d = denote(kb_a, *g);
        for (auto x : d.set().members()) {
            if (!a.maps(kb_a.name(x))) return std::nullopt;
        }
    }
    Constraint out{c.left_operand, c.op, std::vector<std::string>{}};
    for (auto t : g->targets) {
        auto image = a.image(kb_a.name(t));
        if (!image) return std::nullopt;
        out.values.push_back(*image);
    }
    return out;
}

KnowledgeBase restrict_kb(const Alignment& a, const KnowledgeBase& kb_a, const KnowledgeBase& kb_b) {
    auto violations = validate_alignment(a, kb_a, kb_b);
    if (!violations.empty()) {
        throw Error(ErrorKind::AlignmentInvalid, "alignment " + a.source_kb_id + " -> " + a.target_kb_id + " fails " +
                                                     violations.front().to_string() + " (" +
                                                     std::to_string(violations.size()) + " violation(s))");
    }
    std::vector<std::pair<ConceptIndex, ConceptIndex>> pairs;
    for (const auto& [s, t] : a.mapping) pairs.emplace_back(kb_a.require(s), kb_b.require(t));
    std::sort(pairs.begin(), pairs.end(), [&](const auto& p, const auto& q) { return kb_b.name(p.second) < kb_b.name(q.second); });
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());

    const auto n = pairs.size();
    std::vector<std::string> concepts;
    std::map<ConceptIndex, ConceptIndex> local;  // source index -> restricted index
    for (std::size_t i = 0; i < n; ++i) {
        concepts.push_back(kb_b.name(pairs[i].second));
        local.emplace(pairs[i].first, static_cast<ConceptIndex>(i));
    }
    Relation leq(n), disjoint(n), not_leq(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const auto bi = pairs[i].second;
            const auto bj = pairs[j].second;
            const auto ii = static_cast<ConceptIndex>(i);
            const auto jj = static_cast<ConceptIndex>(j);
            if (kb_b.leq(bi, bj)) leq.set(ii, jj);
            if (kb_b.disjoint(bi, bj)) disjoint.set(ii, jj);
            if (kb_b.not_leq(bi, bj)) not_leq.set(ii, jj);
        }
    }
    std::map<std::string, ConceptIndex> gamma;
    for (const auto& [value, g] : kb_a.gamma()) {
        if (auto it = local.find(g); it != local.end()) gamma.emplace(value, it->second);
    }
    for (std::size_t i = 0; i < n; ++i) gamma.emplace(concepts[i], static_cast<ConceptIndex>(i));
    return KnowledgeBase::from_relations(kb_b.id() + "|" + kb_a.id(), kb_b.domain(), kb_b.una(), std::move(concepts),
                                         std::move(leq), std::move(disjoint), std::move(not_leq), std::move(gamma));
}

namespace {

Grounding aligned_grounding(const Alignment& a, const KnowledgeBase& kb_a, const KnowledgeBase& restricted,
                            const Constraint& c) {
    auto aligned = align_constraint(a, kb_a, c);
    if (!aligned) return std::nullopt;
    GroundedConstraint g{aligned->op, {}};
    for (const auto& v : aligned->values) g.targets.push_back(restricted.require(v));
    std::sort(g.targets.begin(), g.targets.end());
    g.targets.erase(std::unique(g.targets.begin(), g.targets.end()), g.targets.end());
    return g;
}

void require_same_operand(const Constraint& c1, const Constraint& c2) {
    if (c1.left_operand != c2.left_operand) {
        throw Error(ErrorKind::OperandMismatch,
                    "constraints over '" + c1.left_operand + "' and '" + c2.left_operand + "' cannot be compared");
    }
}

}  // namespace

AlignedVerdict aligned_verdict(const Alignment& a, const KnowledgeBase& kb_a, const KnowledgeBase& kb_b,
                               const Constraint& c1, const Constraint& c2, Mode mode) {
    require_same_operand(c1, c2);
    const KnowledgeBase restricted = restrict_kb(a, kb_a, kb_b);
    AlignedVerdict out;
    out.source = check_pair(kb_a, c1, c2, mode);
    const Grounding g1 = aligned_grounding(a, kb_a, restricted, c1);
    const Grounding g2 = aligned_grounding(a, kb_a, restricted, c2);
    out.aligned = decide(restricted, std::span(&g1, 1), std::span(&g2, 1), mode);
    return out;
}

Subsumption aligned_subsumes(const Alignment& a, const KnowledgeBase& kb_a, const KnowledgeBase& kb_b,
                             const Constraint& c1, const Constraint& c2, Mode mode) {
    require_same_operand(c1, c2);
    const KnowledgeBase restricted = restrict_kb(a, kb_a, kb_b);
    return subsumes(restricted, aligned_grounding(a, kb_a, restricted, c1), aligned_grounding(a, kb_a, restricted, c2),
                    mode);
}

}  // namespace odrl
