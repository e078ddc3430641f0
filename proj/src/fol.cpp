#include "odrl/fol.hpp"

#include <cstdio>
#include <sstream>

namespace odrl::fol {

Term var(std::string name) { return {Term::Kind::Var, std::move(name), {}}; }
Term constant(std::string name) { return {Term::Kind::Const, std::move(name), {}}; }
Term app(std::string name, std::vector<Term> args) { return {Term::Kind::App, std::move(name), std::move(args)}; }

namespace {

Formula make(Node n) { return std::make_shared<const Node>(std::move(n)); }

Formula connective(Kind k, std::vector<Formula> fs) {
    Node n;
    n.kind = k;
    n.children = std::move(fs);
    return make(std::move(n));
}

Formula quantifier(Kind k, std::vector<std::string> vars, Formula body) {
    if (vars.empty()) return body;
    Node n;
    n.kind = k;
    n.vars = std::move(vars);
    n.children = {std::move(body)};
    return make(std::move(n));
}

}  // namespace

Formula top() { return make(Node{Kind::True, {}, {}, {}, {}}); }
Formula bottom() { return make(Node{Kind::False, {}, {}, {}, {}}); }

Formula atom(std::string predicate, std::vector<Term> args) {
    return make(Node{Kind::Atom, std::move(predicate), std::move(args), {}, {}});
}

Formula equal(Term a, Term b) { return make(Node{Kind::Equal, {}, {std::move(a), std::move(b)}, {}, {}}); }
Formula negate(Formula f) { return connective(Kind::Not, {std::move(f)}); }

Formula conj(std::vector<Formula> fs) {
    if (fs.empty()) return top();
    if (fs.size() == 1) return fs.front();
    return connective(Kind::And, std::move(fs));
}

Formula disj(std::vector<Formula> fs) {
    if (fs.empty()) return bottom();
    if (fs.size() == 1) return fs.front();
    return connective(Kind::Or, std::move(fs));
}

Formula implies(Formula a, Formula b) { return connective(Kind::Implies, {std::move(a), std::move(b)}); }
Formula iff(Formula a, Formula b) { return connective(Kind::Iff, {std::move(a), std::move(b)}); }
Formula forall(std::vector<std::string> vars, Formula body) { return quantifier(Kind::Forall, std::move(vars), std::move(body)); }
Formula exists(std::vector<std::string> vars, Formula body) { return quantifier(Kind::Exists, std::move(vars), std::move(body)); }

namespace {

Formula nnf(const Formula& f, bool positive) {
    const auto& c = f->children;
    switch (f->kind) {
        case Kind::True: return positive ? top() : bottom();
        case Kind::False: return positive ? bottom() : top();
        case Kind::Atom:
        case Kind::Equal: return positive ? f : negate(f);
        case Kind::Not: return nnf(c[0], !positive);
        case Kind::And:
        case Kind::Or: {
            std::vector<Formula> out;
            for (const auto& child : c) out.push_back(nnf(child, positive));
            return (f->kind == Kind::And) == positive ? connective(Kind::And, std::move(out))
                                                      : connective(Kind::Or, std::move(out));
        }
        case Kind::Implies:
            if (positive) return connective(Kind::Or, {nnf(c[0], false), nnf(c[1], true)});
            return connective(Kind::And, {nnf(c[0], true), nnf(c[1], false)});
        case Kind::Iff: {
            // (a => b) & (b => a), or its negation (a & ~b) | (b & ~a).
            if (positive) {
                return connective(Kind::And, {connective(Kind::Or, {nnf(c[0], false), nnf(c[1], true)}),
                                              connective(Kind::Or, {nnf(c[1], false), nnf(c[0], true)})});
            }
            return connective(Kind::Or, {connective(Kind::And, {nnf(c[0], true), nnf(c[1], false)}),
                                         connective(Kind::And, {nnf(c[1], true), nnf(c[0], false)})});
        }
        case Kind::Forall:
        case Kind::Exists: {
            const bool universal = (f->kind == Kind::Forall) == positive;
            return quantifier(universal ? Kind::Forall : Kind::Exists, f->vars, nnf(c[0], positive));
        }
    }
    return f;
}

}  // namespace

Formula nnf(const Formula& f) { return nnf(f, true); }

std::string sanitize(std::string_view id) {
    static constexpr char kHex[] = "0123456789abcdef";
    std::string out;
    for (unsigned char ch : id) {
        if ((ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z') || (ch >= '0' && ch <= '9')) {
            out += static_cast<char>(ch);
        } else if (ch == '_') {
            out += "__";
        } else {
            out += '_';
            out += kHex[ch >> 4];
            out += kHex[ch & 0xF];
        }
    }
    return out;
}

namespace {

void tptp_term(std::ostream& os, const Term& t) {
    os << t.name;
    if (t.kind != Term::Kind::App) return;
    os << '(';
    for (std::size_t i = 0; i < t.args.size(); ++i) {
        if (i) os << ',';
        tptp_term(os, t.args[i]);
    }
    os << ')';
}

void tptp(std::ostream& os, const Formula& f) {
    const auto& c = f->children;
    switch (f->kind) {
        case Kind::True: os << "$true"; return;
        case Kind::False: os << "$false"; return;
        case Kind::Atom:
            os << f->symbol;
            if (!f->terms.empty()) {
                os << '(';
                for (std::size_t i = 0; i < f->terms.size(); ++i) {
                    if (i) os << ',';
                    tptp_term(os, f->terms[i]);
                }
                os << ')';
            }
            return;
        case Kind::Equal:
            tptp_term(os, f->terms[0]);
            os << " = ";
            tptp_term(os, f->terms[1]);
            return;
        case Kind::Not:
            os << "~ (";
            tptp(os, c[0]);
            os << ')';
            return;
        case Kind::And:
        case Kind::Or:
        case Kind::Implies:
        case Kind::Iff: {
            const char* op = f->kind == Kind::And ? " & " : f->kind == Kind::Or ? " | " : f->kind == Kind::Implies ? " => " : " <=> ";
            os << '(';
            for (std::size_t i = 0; i < c.size(); ++i) {
                if (i) os << op;
                tptp(os, c[i]);
            }
            os << ')';
            return;
        }
        case Kind::Forall:
        case Kind::Exists:
            os << (f->kind == Kind::Forall ? "! [" : "? [");
            for (std::size_t i = 0; i < f->vars.size(); ++i) os << (i ? "," : "") << f->vars[i];
            os << "] : (";
            tptp(os, c[0]);
            os << ')';
            return;
    }
}

void smt_term(std::ostream& os, const Term& t) {
    if (t.kind != Term::Kind::App) {
        os << t.name;
        return;
    }
    os << '(' << t.name;
    for (const auto& a : t.args) {
        os << ' ';
        smt_term(os, a);
    }
    os << ')';
}

void smt(std::ostream& os, const Formula& f) {
    const auto& c = f->children;
    switch (f->kind) {
        case Kind::True: os << "true"; return;
        case Kind::False: os << "false"; return;
        case Kind::Atom:
            if (f->terms.empty()) {
                os << f->symbol;
                return;
            }
            os << '(' << f->symbol;
            for (const auto& t : f->terms) {
                os << ' ';
                smt_term(os, t);
            }
            os << ')';
            return;
        case Kind::Equal:
            os << "(= ";
            smt_term(os, f->terms[0]);
            os << ' ';
            smt_term(os, f->terms[1]);
            os << ')';
            return;
        case Kind::Not:
        case Kind::And:
        case Kind::Or:
        case Kind::Implies:
        case Kind::Iff: {
            const char* op = f->kind == Kind::Not ? "not" : f->kind == Kind::And ? "and" : f->kind == Kind::Or ? "or" : f->kind == Kind::Implies ? "=>" : "=";
            os << '(' << op;
            for (const auto& child : c) {
                os << ' ';
                smt(os, child);
            }
            os << ')';
            return;
        }
        case Kind::Forall:
        case Kind::Exists:
            os << (f->kind == Kind::Forall ? "(forall (" : "(exists (");
            for (std::size_t i = 0; i < f->vars.size(); ++i) os << (i ? " " : "") << '(' << f->vars[i] << " Concept)";
            os << ") ";
            smt(os, c[0]);
            os << ')';
            return;
    }
}

}  // namespace

std::string to_tptp(const Formula& f) {
    std::ostringstream os;
    tptp(os, f);
    return os.str();
}

std::string to_smtlib(const Formula& f) {
    std::ostringstream os;
    smt(os, f);
    return os.str();
}

std::string to_tptp(const Problem& p) {
    std::ostringstream os;
    for (const auto& line : p.header) os << "% " << line << '\n';
    if (!p.header.empty()) os << '\n';
    for (const auto& a : p.formulas) {
        if (!a.comment.empty()) os << "% " << a.comment << '\n';
        os << "fof(" << a.name << ", " << (a.role == Annotated::Role::Conjecture ? "conjecture" : "axiom") << ",\n    ";
        tptp(os, a.formula);
        os << ").\n";
    }
    return os.str();
}

std::string to_smtlib(const Problem& p) {
    std::ostringstream os;
    for (const auto& line : p.header) os << "; " << line << '\n';
    os << "(set-logic UF)\n(declare-sort Concept 0)\n";
    for (const auto& c : p.constants) os << "(declare-fun " << c << " () Concept)\n";
    for (const auto& pr : p.predicates) {
        os << "(declare-fun " << pr.name << " (";
        for (std::size_t i = 0; i < pr.arity; ++i) os << (i ? " " : "") << "Concept";
        os << ") Bool)\n";
    }
    for (const auto& a : p.formulas) {
        if (!a.comment.empty()) os << "; " << a.comment << '\n';
        os << "(assert (! ";
        if (a.role == Annotated::Role::Conjecture) {
            os << "(not ";
            smt(os, a.formula);
            os << ')';
        } else {
            smt(os, a.formula);
        }
        os << " :named " << a.name << "))\n";
    }
    os << "(check-sat)\n";
    return os.str();
}

namespace {

bool has_function(const Term& t) { return t.kind == Term::Kind::App; }

std::string violation(const Formula& f, bool under_forall) {
    for (const auto& t : f->terms) {
        if (has_function(t)) return "function symbol '" + t.name + "'";
    }
    if (f->kind == Kind::Exists && under_forall) return "existential quantifier under a universal one";
    const bool below = under_forall || f->kind == Kind::Forall;
    for (const auto& child : f->children) {
        if (auto v = violation(child, below); !v.empty()) return v;
    }
    return {};
}

}  // namespace

std::string epr_violation(const Formula& f) { return violation(nnf(f), false); }

EprReport epr_check(const Problem& p) {
    EprReport report;
    for (const auto& a : p.formulas) {
        const Formula checked = a.role == Annotated::Role::Conjecture ? negate(a.formula) : a.formula;
        if (auto v = epr_violation(checked); !v.empty()) {
            report.ok = false;
            report.offending.push_back(a.name + ": " + v);
        }
    }
    return report;
}

}  // namespace odrl::fol
