#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace odrl::fol {

// Variable, constant, or function application (the latter never produced by
// the encoder; it exists so the EPR guard has something to reject).
struct Term {
    enum class Kind : unsigned char { Var, Const, App };
    Kind kind = Kind::Const;
    std::string name;
    std::vector<Term> args;

    friend bool operator==(const Term&, const Term&) = default;
};

Term var(std::string name);
Term constant(std::string name);
Term app(std::string name, std::vector<Term> args);

enum class Kind : unsigned char { True, False, Atom, Equal, Not, And, Or, Implies, Iff, Forall, Exists };

struct Node;
using Formula = std::shared_ptr<const Node>;

struct Node {
    Kind kind = Kind::True;
    std::string symbol;              // predicate name for atoms
    std::vector<Term> terms;         // atom / equality arguments
    std::vector<Formula> children;   // connective operands, quantifier body
    std::vector<std::string> vars;   // bound variables
};

Formula top();
Formula bottom();
Formula atom(std::string predicate, std::vector<Term> args);
Formula equal(Term a, Term b);
Formula negate(Formula f);
Formula conj(std::vector<Formula> fs);  // empty: true
Formula disj(std::vector<Formula> fs);  // empty: false
Formula implies(Formula a, Formula b);
Formula iff(Formula a, Formula b);
Formula forall(std::vector<std::string> vars, Formula body);
Formula exists(std::vector<std::string> vars, Formula body);

// Negation normal form: only And/Or/quantifiers above literals.
Formula nnf(const Formula& f);

struct Predicate {
    std::string name;
    std::size_t arity = 0;
};

struct Annotated {
    enum class Role : unsigned char { Axiom, Conjecture };
    std::string name;
    Role role = Role::Axiom;
    Formula formula;
    std::string comment;
};

// A closed first-order problem over a single sort of concepts.
struct Problem {
    std::string id;
    std::vector<std::string> constants;
    std::vector<Predicate> predicates;
    std::vector<Annotated> formulas;  // at most one conjecture, emitted last
    std::vector<std::string> header;  // comment lines
};

// Maps an arbitrary identifier onto [A-Za-z0-9_] injectively.
std::string sanitize(std::string_view id);

std::string to_tptp(const Problem& p);
std::string to_smtlib(const Problem& p);
std::string to_tptp(const Formula& f);
std::string to_smtlib(const Formula& f);

struct EprReport {
    bool ok = true;
    std::vector<std::string> offending;  // formula names with the reason
};

// Every formula, with the conjecture negated, must prenex to an exists*forall*
// prefix and use no function symbols of positive arity.
EprReport epr_check(const Problem& p);
// Reason for rejecting a single formula, empty when it is in the fragment.
std::string epr_violation(const Formula& f);

}  // namespace odrl::fol
