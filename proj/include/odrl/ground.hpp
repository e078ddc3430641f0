#pragma once

#include "odrl/fol.hpp"

#include <cstddef>

namespace odrl::fol {

enum class GroundStatus { Theorem, CounterSatisfiable };

struct GroundStats {
    std::size_t elements = 0;
    std::size_t variables = 0;
    std::size_t clauses = 0;
};

// Decides a function-free problem by instantiating every quantifier over the
// problem's constants and running a SAT solver on axioms plus the negated
// conjecture. Exact when the axioms include domain closure over the
// constants; equality is handled by explicit equivalence and congruence
// clauses. Throws std::invalid_argument on function symbols or free variables.
GroundStatus ground_decide(const Problem& p, GroundStats* stats = nullptr);

}  // namespace odrl::fol
