#include "odrl/sat.hpp"

#include <algorithm>
#include <cstdlib>

namespace odrl::sat {

int Solver::new_var() {
    assign_.push_back(kUnset);
    level_.push_back(0);
    reason_.push_back(-1);
    activity_.push_back(0.0);
    seen_.push_back(0);
    watches_.resize(2 * assign_.size() + 2);
    return num_vars();
}

std::int8_t Solver::lit_value(int lit) const {
    const auto v = assign_[std::abs(lit)];
    if (v == kUnset) return kUnset;
    return (lit > 0) == (v == kTrue) ? kTrue : kFalse;
}

void Solver::enqueue(int lit, int reason) {
    const int v = std::abs(lit);
    assign_[v] = lit > 0 ? kTrue : kFalse;
    level_[v] = static_cast<int>(trail_lim_.size());
    reason_[v] = reason;
    trail_.push_back(lit);
}

int Solver::attach(std::vector<int> lits) {
    const int index = static_cast<int>(clauses_.size());
    watches_[code(lits[0])].push_back(index);
    watches_[code(lits[1])].push_back(index);
    clauses_.push_back(std::move(lits));
    return index;
}

bool Solver::add_clause(std::vector<int> lits) {
    if (unsat_) return false;
    backtrack(0);
    std::sort(lits.begin(), lits.end());
    lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
    std::vector<int> kept;
    for (int l : lits) {
        if (std::binary_search(lits.begin(), lits.end(), -l)) return true;  // tautology
        const auto v = lit_value(l);
        if (v == kTrue) return true;
        if (v == kUnset) kept.push_back(l);
    }
    if (kept.empty()) return !(unsat_ = true);
    if (kept.size() == 1) {
        enqueue(kept[0], -1);
        if (propagate() >= 0) unsat_ = true;
        return !unsat_;
    }
    attach(std::move(kept));
    return true;
}

int Solver::propagate() {
    while (head_ < trail_.size()) {
        const int falsified = -trail_[head_++];
        auto& ws = watches_[code(falsified)];
        std::size_t keep = 0;
        for (std::size_t i = 0; i < ws.size(); ++i) {
            const int ci = ws[i];
            auto& c = clauses_[ci];
            if (c[0] == falsified) std::swap(c[0], c[1]);
            if (lit_value(c[0]) == kTrue) {
                ws[keep++] = ci;
                continue;
            }
            bool moved = false;
            for (std::size_t k = 2; k < c.size(); ++k) {
                if (lit_value(c[k]) != kFalse) {
                    std::swap(c[1], c[k]);
                    watches_[code(c[1])].push_back(ci);
                    moved = true;
                    break;
                }
            }
            if (moved) continue;
            ws[keep++] = ci;
            if (lit_value(c[0]) == kFalse) {
                for (std::size_t r = i + 1; r < ws.size(); ++r) ws[keep++] = ws[r];
                ws.resize(keep);
                head_ = trail_.size();
                return ci;
            }
            enqueue(c[0], ci);
        }
        ws.resize(keep);
    }
    return -1;
}

void Solver::bump(int var) {
    activity_[var] += bump_;
    if (activity_[var] > 1e100) {
        for (auto& a : activity_) a *= 1e-100;
        bump_ *= 1e-100;
    }
}

void Solver::analyze(int conflict, std::vector<int>& learnt, int& backjump) {
    learnt.assign(1, 0);
    const int current = static_cast<int>(trail_lim_.size());
    int pending = 0;
    int lit = 0;
    std::size_t index = trail_.size();
    int ci = conflict;
    do {
        const auto& c = clauses_[ci];
        for (std::size_t k = (lit == 0 ? 0 : 1); k < c.size(); ++k) {
            const int v = std::abs(c[k]);
            if (seen_[v] || level_[v] == 0) continue;
            seen_[v] = 1;
            bump(v);
            if (level_[v] == current) {
                ++pending;
            } else {
                learnt.push_back(c[k]);
            }
        }
        while (!seen_[std::abs(trail_[--index])]) {
        }
        lit = trail_[index];
        seen_[std::abs(lit)] = 0;
        ci = reason_[std::abs(lit)];
        --pending;
    } while (pending > 0);
    learnt[0] = -lit;
    backjump = 0;
    std::size_t max_i = 1;
    for (std::size_t k = 1; k < learnt.size(); ++k) {
        seen_[std::abs(learnt[k])] = 0;
        if (level_[std::abs(learnt[k])] > backjump) {
            backjump = level_[std::abs(learnt[k])];
            max_i = k;
        }
    }
    if (learnt.size() > 1) std::swap(learnt[1], learnt[max_i]);
    bump_ *= 1.05;
}

void Solver::backtrack(int level) {
    if (static_cast<int>(trail_lim_.size()) <= level) return;
    const auto stop = trail_lim_[level];
    for (auto i = trail_.size(); i > stop; --i) assign_[std::abs(trail_[i - 1])] = kUnset;
    trail_.resize(stop);
    trail_lim_.resize(level);
    head_ = std::min(head_, trail_.size());
}

int Solver::pick_branch() {
    int best = 0;
    for (int v = 1; v <= num_vars(); ++v) {
        if (assign_[v] == kUnset && (best == 0 || activity_[v] > activity_[best])) best = v;
    }
    return best;
}

bool Solver::solve() {
    if (unsat_) return false;
    backtrack(0);
    if (propagate() >= 0) return !(unsat_ = true);
    std::vector<int> learnt;
    for (;;) {
        const int conflict = propagate();
        if (conflict >= 0) {
            if (trail_lim_.empty()) return !(unsat_ = true);
            int backjump = 0;
            analyze(conflict, learnt, backjump);
            backtrack(backjump);
            if (learnt.size() == 1) {
                enqueue(learnt[0], -1);
            } else {
                const int ci = attach(learnt);
                enqueue(learnt[0], ci);
            }
            continue;
        }
        const int v = pick_branch();
        if (v == 0) return true;
        trail_lim_.push_back(trail_.size());
        enqueue(-v, -1);
    }
}

}  // namespace odrl::sat
