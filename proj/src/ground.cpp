#include "odrl/ground.hpp"

#include "odrl/sat.hpp"

#include <limits>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace odrl::fol {

namespace {

constexpr int kTrue = std::numeric_limits<int>::max();
constexpr int kFalse = -kTrue;

class Grounder {
public:
    explicit Grounder(const Problem& p) {
        elements_ = p.constants;
        if (elements_.empty()) elements_.push_back("$anon");
        for (std::size_t i = 0; i < p.constants.size(); ++i) index_.emplace(p.constants[i], static_cast<int>(i));
        const int n = static_cast<int>(elements_.size());
        eq_.assign(n, std::vector<int>(n, 0));
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) eq_[i][j] = eq_[j][i] = solver_.new_var();
        }
        for (const auto& pred : p.predicates) {
            declare(pred.name, pred.arity);
        }
    }

    void assert_formula(const Formula& f) { assert_true(f, true); }

    void add_equality_axioms() {
        const int n = static_cast<int>(elements_.size());
        for (int a = 0; a < n; ++a) {
            for (int b = 0; b < n; ++b) {
                for (int c = 0; c < n; ++c) {
                    if (a == b || b == c || a == c) continue;
                    clause({-eq_[a][b], -eq_[b][c], eq_[a][c]});
                }
            }
        }
        for (const auto& [key, v] : atoms_) {
            const auto& [pred, args] = key;
            for (std::size_t i = 0; i < args.size(); ++i) {
                for (int d = 0; d < n; ++d) {
                    if (d == args[i]) continue;
                    auto moved = args;
                    moved[i] = d;
                    clause({-v, -eq_[args[i]][d], atom_var(pred, moved)});
                }
            }
        }
    }

    GroundStatus solve(GroundStats* stats) {
        const bool sat = solver_.solve();
        if (stats) *stats = {elements_.size(), static_cast<std::size_t>(solver_.num_vars()), solver_.num_clauses()};
        return sat ? GroundStatus::CounterSatisfiable : GroundStatus::Theorem;
    }

private:
    using Env = std::vector<std::pair<std::string, int>>;

    void declare(const std::string& pred, std::size_t arity) {
        if (!declared_.insert(pred).second) return;
        std::vector<int> args(arity, 0);
        declare(pred, args, 0);
    }

    void declare(const std::string& pred, std::vector<int>& args, std::size_t pos) {
        if (pos == args.size()) {
            atom_var(pred, args);
            return;
        }
        for (int e = 0; e < static_cast<int>(elements_.size()); ++e) {
            args[pos] = e;
            declare(pred, args, pos + 1);
        }
    }

    int atom_var(const std::string& pred, const std::vector<int>& args) {
        auto [it, fresh] = atoms_.try_emplace({pred, args}, 0);
        if (fresh) it->second = solver_.new_var();
        return it->second;
    }

    int element(const Term& t) const {
        if (t.kind == Term::Kind::App) throw std::invalid_argument("function symbol '" + t.name + "' cannot be grounded");
        if (t.kind == Term::Kind::Var) {
            for (auto it = env_.rbegin(); it != env_.rend(); ++it) {
                if (it->first == t.name) return it->second;
            }
            throw std::invalid_argument("free variable '" + t.name + "'");
        }
        auto it = index_.find(t.name);
        if (it == index_.end()) throw std::invalid_argument("undeclared constant '" + t.name + "'");
        return it->second;
    }

    void clause(std::vector<int> lits) {
        std::vector<int> kept;
        for (int l : lits) {
            if (l == kTrue) return;
            if (l != kFalse) kept.push_back(l);
        }
        solver_.add_clause(std::move(kept));
    }

    int fresh() { return solver_.new_var(); }

    int all_of(std::vector<int> lits) {
        std::vector<int> kept;
        for (int l : lits) {
            if (l == kFalse) return kFalse;
            if (l != kTrue) kept.push_back(l);
        }
        if (kept.empty()) return kTrue;
        if (kept.size() == 1) return kept[0];
        const int t = fresh();
        std::vector<int> back{t};
        for (int l : kept) {
            clause({-t, l});
            back.push_back(-l);
        }
        clause(std::move(back));
        return t;
    }

    int any_of(std::vector<int> lits) {
        for (auto& l : lits) l = -l;
        return -all_of(std::move(lits));
    }

    template <class Body>
    void instantiate(const std::vector<std::string>& vars, std::size_t pos, Body body) {
        if (pos == vars.size()) {
            body();
            return;
        }
        for (int e = 0; e < static_cast<int>(elements_.size()); ++e) {
            env_.emplace_back(vars[pos], e);
            instantiate(vars, pos + 1, body);
            env_.pop_back();
        }
    }

    int encode(const Formula& f) {
        const auto& c = f->children;
        switch (f->kind) {
            case Kind::True: return kTrue;
            case Kind::False: return kFalse;
            case Kind::Atom: {
                declare(f->symbol, f->terms.size());
                std::vector<int> args;
                for (const auto& t : f->terms) args.push_back(element(t));
                return atom_var(f->symbol, args);
            }
            case Kind::Equal: {
                const int a = element(f->terms[0]);
                const int b = element(f->terms[1]);
                return a == b ? kTrue : eq_[a][b];
            }
            case Kind::Not: return -encode(c[0]);
            case Kind::And:
            case Kind::Or: {
                std::vector<int> lits;
                for (const auto& child : c) lits.push_back(encode(child));
                return f->kind == Kind::And ? all_of(std::move(lits)) : any_of(std::move(lits));
            }
            case Kind::Implies: return any_of({-encode(c[0]), encode(c[1])});
            case Kind::Iff: {
                const int a = encode(c[0]);
                const int b = encode(c[1]);
                if (a == kTrue) return b;
                if (a == kFalse) return -b;
                if (b == kTrue) return a;
                if (b == kFalse) return -a;
                const int t = fresh();
                clause({-t, -a, b});
                clause({-t, a, -b});
                clause({t, a, b});
                clause({t, -a, -b});
                return t;
            }
            case Kind::Forall:
            case Kind::Exists: {
                std::vector<int> lits;
                instantiate(f->vars, 0, [&] { lits.push_back(encode(c[0])); });
                return f->kind == Kind::Forall ? all_of(std::move(lits)) : any_of(std::move(lits));
            }
        }
        return kTrue;
    }

    // Flattens a disjunction (under the given polarity) into clause literals.
    void disjuncts(const Formula& f, bool positive, std::vector<int>& out) {
        const auto& c = f->children;
        if (f->kind == Kind::Not) return disjuncts(c[0], !positive, out);
        if ((f->kind == Kind::Or && positive) || (f->kind == Kind::And && !positive)) {
            for (const auto& child : c) disjuncts(child, positive, out);
            return;
        }
        if (f->kind == Kind::Implies && positive) {
            disjuncts(c[0], false, out);
            disjuncts(c[1], true, out);
            return;
        }
        const int l = encode(f);
        out.push_back(positive ? l : -l);
    }

    void assert_true(const Formula& f, bool positive) {
        const auto& c = f->children;
        const bool conjunctive = (f->kind == Kind::And && positive) || (f->kind == Kind::Or && !positive);
        if (f->kind == Kind::Not) return assert_true(c[0], !positive);
        if (conjunctive) {
            for (const auto& child : c) assert_true(child, positive);
            return;
        }
        if (f->kind == Kind::Implies && !positive) {
            assert_true(c[0], true);
            assert_true(c[1], false);
            return;
        }
        if ((f->kind == Kind::Forall && positive) || (f->kind == Kind::Exists && !positive)) {
            instantiate(f->vars, 0, [&] { assert_true(c[0], positive); });
            return;
        }
        std::vector<int> lits;
        disjuncts(f, positive, lits);
        clause(std::move(lits));
    }

    std::vector<std::string> elements_;
    std::unordered_map<std::string, int> index_;
    std::vector<std::vector<int>> eq_;
    std::map<std::pair<std::string, std::vector<int>>, int> atoms_;
    std::set<std::string> declared_;
    Env env_;
    sat::Solver solver_;
};

}  // namespace

GroundStatus ground_decide(const Problem& p, GroundStats* stats) {
    Grounder g(p);
    for (const auto& a : p.formulas) {
        g.assert_formula(a.role == Annotated::Role::Conjecture ? negate(a.formula) : a.formula);
    }
    g.add_equality_axioms();
    return g.solve(stats);
}

}  // namespace odrl::fol
