#pragma once

#include <cstdint>
#include <vector>

namespace odrl::sat {

// Conflict-driven clause learning over DIMACS-style literals: variable v is
// the literal v, its negation -v. Variables are numbered from 1.
class Solver {
public:
    int new_var();
    int num_vars() const { return static_cast<int>(assign_.size()) - 1; }
    std::size_t num_clauses() const { return clauses_.size(); }

    // Returns false once the clause set is known to be unsatisfiable.
    bool add_clause(std::vector<int> lits);

    bool solve();
    // Model value after a successful solve().
    bool value(int var) const { return assign_[var] == kTrue; }

private:
    static constexpr std::int8_t kTrue = 1, kFalse = 0, kUnset = -1;

    static std::size_t code(int lit) { return lit > 0 ? 2 * static_cast<std::size_t>(lit) : 2 * static_cast<std::size_t>(-lit) + 1; }
    std::int8_t lit_value(int lit) const;
    void enqueue(int lit, int reason);
    int propagate();  // conflicting clause index or -1
    void analyze(int conflict, std::vector<int>& learnt, int& backjump);
    void backtrack(int level);
    int pick_branch();
    void bump(int var);
    int attach(std::vector<int> lits);

    std::vector<std::vector<int>> clauses_;
    std::vector<std::vector<int>> watches_;  // by literal code
    std::vector<std::int8_t> assign_{kUnset};
    std::vector<int> level_{0};
    std::vector<int> reason_{-1};
    std::vector<double> activity_{0.0};
    std::vector<char> seen_{0};
    std::vector<int> trail_;
    std::vector<std::size_t> trail_lim_;
    std::size_t head_ = 0;
    double bump_ = 1.0;
    bool unsat_ = false;
};

}  // namespace odrl::sat
