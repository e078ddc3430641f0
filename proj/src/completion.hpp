#pragma once

// Exact open-world reasoning over the consistent extensions ("completions")
// of a knowledge base. A completion keeps C fixed and may add order pairs and
// identifications (the latter only without UNA) as long as the explicit
// negative facts and the disjointness axioms stay satisfiable. Membership of a
// concept in a grounded constraint is a boolean combination of atoms
// x <= y and x == y, written here in disjunctive normal form.

#include "odrl/denotation.hpp"
#include "odrl/kb.hpp"

#include <optional>
#include <span>
#include <vector>

namespace odrl::detail {

struct Literal {
    enum class Atom : unsigned char { Leq, Same };
    Atom atom;
    ConceptIndex a;
    ConceptIndex b;
    bool positive;
};

using Term = std::vector<Literal>;
using Dnf = std::vector<Term>;  // no terms: false; an empty term: true

struct SignedConstraint {
    const GroundedConstraint* constraint;
    bool negated;
};

// Literals decided by the base KB are folded away, so a returned term only
// mentions atoms that some completion could still flip.
Dnf membership(const KnowledgeBase& kb, const GroundedConstraint& c, ConceptIndex x, bool negated);
Dnf conjoin(const Dnf& lhs, const Dnf& rhs);

// Is there a completion in which every literal holds?
bool consistent(const KnowledgeBase& kb, std::span<const Literal> literals);

enum class Coverage { Never, Sometimes, Always };

struct IntersectionResult {
    // Never: no completion has a common member (conflict).
    // Always: every completion has one (compatible).
    Coverage coverage = Coverage::Sometimes;
    // A concept that is a common member in every completion, when one exists.
    std::optional<ConceptIndex> witness;
};

// Decides whether some x satisfies every signed constraint, quantifying over
// all completions. The Kleene evaluation of member3 is tried first; the
// completion search only runs on the points it leaves undecided.
IntersectionResult decide_intersection(const KnowledgeBase& kb, std::span<const SignedConstraint> items);

// Concept indices ordered by identifier, for deterministic witness choice.
std::vector<ConceptIndex> by_name(const KnowledgeBase& kb);

}  // namespace odrl::detail
