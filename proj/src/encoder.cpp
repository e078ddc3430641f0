#include "odrl/encoder.hpp"

#include "odrl/error.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <sys/wait.h>
#include <set>
#include <sstream>

namespace odrl {

std::string_view to_string(Polarity p) { return p == Polarity::CompatQuery ? "compat-query" : "conflict-query"; }

std::string_view to_string(ExpectedStatus s) {
    return s == ExpectedStatus::TheoremUnsat ? "Theorem/unsat" : "CounterSatisfiable/sat";
}

std::optional<Polarity> parse_polarity(std::string_view text) {
    if (text == "compat" || text == "compat-query") return Polarity::CompatQuery;
    if (text == "conflict" || text == "conflict-query") return Polarity::ConflictQuery;
    return std::nullopt;
}

namespace {

using namespace fol;

class TheoryBuilder {
public:
    TheoryBuilder(const KnowledgeBase& kb, std::string id) : kb_(kb) {
        p_.id = std::move(id);
        order_.resize(kb.size());
        for (ConceptIndex i = 0; i < kb.size(); ++i) order_[i] = i;
        std::sort(order_.begin(), order_.end(), [&](auto a, auto b) { return kb.name(a) < kb.name(b); });
        names_.resize(kb.size());
        for (auto i : order_) {
            names_[i] = "c_" + sanitize(kb.name(i));
            p_.constants.push_back(names_[i]);
        }
        p_.predicates = {{"leq", 2}, {"disj", 2}};
    }

    void kb_axioms() {
        for (auto x : order_) {
            for (auto y : order_) {
                if (x != y && kb_.leq(x, y)) add("ax_leq_" + pair(x, y), atom("leq", {c(x), c(y)}));
            }
        }
        for (auto x : order_) {
            for (auto y : order_) {
                if (kb_.name(x) < kb_.name(y) && kb_.disjoint(x, y)) add("ax_disj_" + pair(x, y), atom("disj", {c(x), c(y)}));
            }
        }
        for (auto x : order_) {
            for (auto y : order_) {
                if (kb_.not_leq(x, y)) add("ax_nleq_" + pair(x, y), negate(atom("leq", {c(x), c(y)})));
            }
        }
        if (kb_.una()) {
            for (auto x : order_) {
                for (auto y : order_) {
                    if (kb_.name(x) < kb_.name(y)) add("ax_una_" + pair(x, y), negate(equal(c(x), c(y))));
                }
            }
        }
        const Term X = var("X"), Y = var("Y"), Z = var("Z"), U = var("U"), V = var("V");
        add("ax_leq_refl", forall({"X"}, atom("leq", {X, X})));
        add("ax_leq_trans", forall({"X", "Y", "Z"}, implies(conj({atom("leq", {X, Y}), atom("leq", {Y, Z})}),
                                                              atom("leq", {X, Z}))));
        add("ax_disj_sym", forall({"X", "Y"}, implies(atom("disj", {X, Y}), atom("disj", {Y, X}))));
        add("ax_disj_irrefl", forall({"X"}, negate(atom("disj", {X, X}))));
        add("ax_disj_down", forall({"X", "Y", "U", "V"},
                                   implies(conj({atom("disj", {X, Y}), atom("leq", {U, X}), atom("leq", {V, Y})}),
                                           atom("disj", {U, V}))));
        if (!order_.empty()) {
            std::vector<Formula> options;
            for (auto x : order_) options.push_back(equal(X, c(x)));
            add("ax_domain", forall({"X"}, disj(std::move(options))), "every element is a named concept");
        }
    }

    std::string membership(std::size_t i, const std::string& label, const Grounding& g) {
        const std::string pred = "in" + std::to_string(i + 1);
        p_.predicates.push_back({pred, 1});
        if (!g) {
            p_.header.push_back(pred + ": " + label + "  [ungrounded, unconstrained]");
            return pred;
        }
        p_.header.push_back(pred + ": " + label);
        const Term X = var("X");
        const Formula phi = body(*g, X);
        add("ax_" + pred + "_if", forall({"X"}, implies(phi, atom(pred, {X}))));
        add("ax_" + pred + "_only_if", forall({"X"}, implies(atom(pred, {X}), phi)));
        return pred;
    }

    void conjecture(const std::vector<std::string>& preds, Polarity polarity) {
        std::vector<Formula> parts;
        for (const auto& pr : preds) parts.push_back(atom(pr, {var("X")}));
        Formula common = exists({"X"}, conj(std::move(parts)));
        Formula f = polarity == Polarity::CompatQuery ? common : negate(common);
        p_.formulas.push_back({unique("cj_" + sanitize(p_.id)), Annotated::Role::Conjecture, std::move(f),
                               std::string(to_string(polarity))});
    }

    Problem take() { return std::move(p_); }
    std::vector<std::string>& header() { return p_.header; }

private:
    Term c(ConceptIndex x) const { return constant(names_[x]); }
    std::string pair(ConceptIndex x, ConceptIndex y) const { return sanitize(kb_.name(x)) + "_" + sanitize(kb_.name(y)); }

    std::string unique(std::string name) {
        std::string out = name;
        for (int k = 2; !used_.insert(out).second; ++k) out = name + "_" + std::to_string(k);
        return out;
    }

    void add(std::string name, Formula f, std::string comment = {}) {
        p_.formulas.push_back({unique(std::move(name)), Annotated::Role::Axiom, std::move(f), std::move(comment)});
    }

    Formula below(const Term& x, ConceptIndex g) const { return atom("leq", {x, c(g)}); }

    Formula body(const GroundedConstraint& g, const Term& x) const {
        std::vector<Formula> parts;
        switch (g.op) {
            case Operator::Eq: return equal(x, c(g.targets.front()));
            case Operator::Neq: return negate(equal(x, c(g.targets.front())));
            case Operator::IsA:
            case Operator::IsPartOf: return below(x, g.targets.front());
            case Operator::HasPart: return atom("leq", {c(g.targets.front()), x});
            case Operator::IsAnyOf:
            case Operator::IsAllOf:
            case Operator::IsNoneOf:
                for (auto t : g.targets) parts.push_back(below(x, t));
                if (g.op == Operator::IsAllOf) return conj(std::move(parts));
                if (g.op == Operator::IsAnyOf) return disj(std::move(parts));
                return negate(disj(std::move(parts)));
        }
        return top();
    }

    const KnowledgeBase& kb_;
    Problem p_;
    std::vector<ConceptIndex> order_;
    std::vector<std::string> names_;
    std::set<std::string> used_;
};

void require_operand(std::span<const Constraint> lhs, std::span<const Constraint> rhs) {
    const Constraint* first = !lhs.empty() ? &lhs.front() : !rhs.empty() ? &rhs.front() : nullptr;
    if (!first) return;
    for (auto side : {lhs, rhs}) {
        for (const auto& c : side) {
            if (c.left_operand != first->left_operand) {
                throw Error(ErrorKind::OperandMismatch,
                            "constraints over '" + first->left_operand + "' and '" + c.left_operand + "' cannot be encoded together");
            }
        }
    }
}

Problem build_problem(const KnowledgeBase& kb, std::span<const Grounding> gs, std::span<const std::string> labels,
                      Polarity polarity, const std::string& id) {
    TheoryBuilder b(kb, id);
    b.header().push_back("problem " + id);
    b.header().push_back("kb " + kb.id() + " (" + std::string(to_string(kb.domain())) + (kb.una() ? ", una)" : ")"));
    b.kb_axioms();
    std::vector<std::string> preds;
    for (std::size_t i = 0; i < gs.size(); ++i) {
        preds.push_back(b.membership(i, i < labels.size() ? labels[i] : std::string("constraint"), gs[i]));
    }
    b.header().push_back("query " + std::string(to_string(polarity)));
    b.conjecture(preds, polarity);
    return b.take();
}

std::vector<std::string> labels_of(std::span<const Constraint> lhs, std::span<const Constraint> rhs) {
    std::vector<std::string> out;
    for (auto side : {lhs, rhs}) {
        for (const auto& c : side) out.push_back(c.to_string());
    }
    return out;
}

std::vector<Grounding> ground_sides(const KnowledgeBase& kb, std::span<const Constraint> lhs,
                                    std::span<const Constraint> rhs, bool allow_indeterminate) {
    std::vector<Grounding> gs;
    for (auto side : {lhs, rhs}) {
        for (const auto& c : side) {
            gs.push_back(ground_constraint(kb, c));
            if (!gs.back() && !allow_indeterminate) {
                throw Error(ErrorKind::UngroundedConstraint, "'" + c.to_string() + "' has a value with no concept in KB '" + kb.id() + "'");
            }
        }
    }
    return gs;
}

}  // namespace

EncodedProblem emit_grounded(const KnowledgeBase& kb, std::span<const Grounding> lhs, std::span<const Grounding> rhs,
                             std::span<const std::string> labels, Polarity polarity, const std::string& id) {
    EncodedProblem out;
    out.id = id;
    out.polarity = polarity;
    out.engine_verdict = decide(kb, lhs, rhs, Mode::Open).verdict;
    const bool proved = polarity == Polarity::ConflictQuery ? out.engine_verdict == Verdict::Conflict
                                                            : out.engine_verdict == Verdict::Compatible;
    out.expected = proved ? ExpectedStatus::TheoremUnsat : ExpectedStatus::CounterSatSat;
    std::vector<Grounding> all(lhs.begin(), lhs.end());
    all.insert(all.end(), rhs.begin(), rhs.end());
    out.problem = build_problem(kb, all, labels, polarity, id);
    out.problem.header.push_back("expected " + std::string(to_string(out.expected)));
    out.tptp_text = to_tptp(out.problem);
    out.smtlib_text = to_smtlib(out.problem);
    return out;
}

EncodedProblem emit_group(const KnowledgeBase& kb, std::span<const Constraint> lhs, std::span<const Constraint> rhs,
                          Polarity polarity, const std::string& id, EmitOptions options) {
    require_operand(lhs, rhs);
    const auto gs = ground_sides(kb, lhs, rhs, options.allow_indeterminate);
    const auto labels = labels_of(lhs, rhs);
    std::span<const Grounding> all(gs);
    return emit_grounded(kb, all.first(lhs.size()), all.subspan(lhs.size()), labels, polarity, id);
}

EncodedProblem emit_problem(const KnowledgeBase& kb, const Constraint& c1, const Constraint& c2, Polarity polarity,
                            const std::string& id, EmitOptions options) {
    return emit_group(kb, std::span(&c1, 1), std::span(&c2, 1), polarity, id, options);
}

Verdict interpret_result(fol::GroundStatus status, Polarity polarity) {
    if (status == fol::GroundStatus::CounterSatisfiable) return Verdict::Unknown;
    return polarity == Polarity::ConflictQuery ? Verdict::Conflict : Verdict::Compatible;
}

Verdict interpret_result(std::string_view token, Polarity polarity) {
    if (token == "Theorem" || token == "unsat") return interpret_result(fol::GroundStatus::Theorem, polarity);
    if (token == "CounterSatisfiable" || token == "sat") return interpret_result(fol::GroundStatus::CounterSatisfiable, polarity);
    throw Error(ErrorKind::UnrecognizedToken, "prover status '" + std::string(token) + "' has no verdict mapping");
}

OracleVerdict ground_oracle(const KnowledgeBase& kb, std::span<const Grounding> lhs, std::span<const Grounding> rhs) {
    std::vector<Grounding> all(lhs.begin(), lhs.end());
    all.insert(all.end(), rhs.begin(), rhs.end());
    OracleVerdict out;
    out.compat = fol::ground_decide(build_problem(kb, all, {}, Polarity::CompatQuery, "oracle"));
    out.conflict = fol::ground_decide(build_problem(kb, all, {}, Polarity::ConflictQuery, "oracle"));
    const Verdict a = interpret_result(out.compat, Polarity::CompatQuery);
    const Verdict b = interpret_result(out.conflict, Polarity::ConflictQuery);
    out.verdict = a != Verdict::Unknown ? a : b;
    return out;
}

OracleVerdict ground_oracle(const KnowledgeBase& kb, std::span<const Constraint> lhs, std::span<const Constraint> rhs) {
    require_operand(lhs, rhs);
    const auto gs = ground_sides(kb, lhs, rhs, true);
    std::span<const Grounding> all(gs);
    return ground_oracle(kb, all.first(lhs.size()), all.subspan(lhs.size()));
}

std::optional<std::string> extract_status_token(std::string_view output) {
    std::istringstream in{std::string(output)};
    std::string line;
    while (std::getline(in, line)) {
        if (auto at = line.find("SZS status "); at != std::string::npos) {
            std::istringstream rest(line.substr(at + 11));
            std::string token;
            if (rest >> token) return token;
        }
        const auto b = line.find_first_not_of(" \t\r");
        const auto e = line.find_last_not_of(" \t\r");
        if (b == std::string::npos) continue;
        const auto trimmed = line.substr(b, e - b + 1);
        if (trimmed == "sat" || trimmed == "unsat" || trimmed == "unknown") return trimmed;
    }
    return std::nullopt;
}

ProverRun run_prover(const std::string& command, const std::string& file) {
    std::string quoted = "'";
    for (char ch : file) quoted += ch == '\'' ? std::string("'\\''") : std::string(1, ch);
    quoted += "'";
    ProverRun run;
    FILE* pipe = ::popen((command + " " + quoted).c_str(), "r");
    if (!pipe) throw Error(ErrorKind::ConfigError, "cannot start prover command '" + command + "'");
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) run.output.append(buf.data(), n);
    const int status = ::pclose(pipe);
    run.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    run.token = extract_status_token(run.output);
    return run;
}

}  // namespace odrl
