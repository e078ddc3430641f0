#pragma once

#include "odrl/denotation.hpp"
#include "odrl/kb.hpp"
#include "odrl/verdict.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace odrl {

// Partial concept map from a source KB into a target KB.
struct Alignment {
    std::string source_kb_id;
    std::string target_kb_id;
    std::vector<ConceptPair> mapping;  // (source concept, target concept)

    std::optional<std::string> image(std::string_view source_concept) const;
    bool maps(std::string_view source_concept) const { return image(source_concept).has_value(); }

    friend bool operator==(const Alignment&, const Alignment&) = default;
};

enum class AlignmentViolationKind {
    KbIdMismatch,
    UnknownSourceConcept,
    UnknownTargetConcept,
    FunctionalityViolation,
    InjectivityViolation,
    OrderViolation,
    DisjointnessViolation,
    WitnessIncomplete,
};

std::string_view to_string(AlignmentViolationKind kind);

struct AlignmentViolation {
    AlignmentViolationKind kind;
    std::string x;
    std::string y;

    std::string to_string() const;
    friend bool operator==(const AlignmentViolation&, const AlignmentViolation&) = default;
};

std::vector<AlignmentViolation> validate_alignment(const Alignment& a, const KnowledgeBase& kb_a,
                                                   const KnowledgeBase& kb_b);

// The constraint re-grounded at the images of its values, or nullopt (the
// indeterminate marker) when a value does not ground in kb_a or is unmapped.
// hasPart, neq and isNoneOf also need their source denotation inside dom(a).
std::optional<Constraint> align_constraint(const Alignment& a, const KnowledgeBase& kb_a, const Constraint& c);

// kb_b restricted to the image of dom(a). Values ground through a composed
// with kb_a's gamma; target concept identifiers ground to themselves.
// Throws Error{AlignmentInvalid}.
KnowledgeBase restrict_kb(const Alignment& a, const KnowledgeBase& kb_a, const KnowledgeBase& kb_b);

struct AlignedVerdict {
    PairVerdict source;
    PairVerdict aligned;
};

// Throws Error{AlignmentInvalid} or Error{OperandMismatch}.
AlignedVerdict aligned_verdict(const Alignment& a, const KnowledgeBase& kb_a, const KnowledgeBase& kb_b,
                               const Constraint& c1, const Constraint& c2, Mode mode = Mode::Open);

Subsumption aligned_subsumes(const Alignment& a, const KnowledgeBase& kb_a, const KnowledgeBase& kb_b,
                             const Constraint& c1, const Constraint& c2, Mode mode = Mode::Open);

}  // namespace odrl
