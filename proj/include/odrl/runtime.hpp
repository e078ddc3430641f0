#pragma once

#include "odrl/denotation.hpp"
#include "odrl/kb.hpp"
#include "odrl/verdict.hpp"

#include <map>
#include <string>
#include <vector>

namespace odrl {

// Operand -> value assignment of a concrete request.
using ExecutionContext = std::map<std::string, std::string>;

// Default-deny: an unassigned operand or an ungrounded value never satisfies.
// Open mode additionally denies when membership is undetermined.
bool satisfies(const KbRegistry& kbs, const ExecutionContext& ctx, const Constraint& c, Mode mode = Mode::Open);
bool satisfies(const KnowledgeBase& kb, const ExecutionContext& ctx, const Constraint& c, Mode mode = Mode::Open);

// Membership test for a context already resolved to concept x.
bool satisfies_concept(const KnowledgeBase& kb, ConceptIndex x, const Constraint& c, Mode mode);

struct SoundnessReport {
    PairVerdict verdict;
    // Contexts (one per concept) that satisfy both constraints.
    std::vector<ExecutionContext> satisfying;
    // Satisfying contexts that contradict a CONFLICT verdict. Always empty for a
    // sound engine.
    std::vector<ExecutionContext> violating;
    // False when a COMPATIBLE witness does not satisfy both constraints.
    bool witness_satisfies = true;
    std::size_t contexts_checked = 0;
};

// Enumerates one context per concept of kb, using the least gamma preimage of
// the concept or, when none exists, a synthetic value bound to it.
SoundnessReport exhaustive_soundness_check(const KnowledgeBase& kb, const Constraint& c1, const Constraint& c2,
                                           Mode mode = Mode::Open);

}  // namespace odrl
