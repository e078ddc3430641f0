#pragma once

// Random fixtures and brute-force oracles shared by the unit, property and
// acceptance tests. The oracles only read the closed relations and gamma of a
// KnowledgeBase; every verdict is recomputed from first principles.

#include "odrl/alignment.hpp"
#include "odrl/denotation.hpp"
#include "odrl/error.hpp"
#include "odrl/kb.hpp"
#include "odrl/verdict.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace odrl::testing {

using Rng = std::mt19937_64;

inline std::size_t pick(Rng& rng, std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }
inline bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

inline std::string cname(std::size_t i) { return "k" + std::to_string(i); }
inline std::string vname(std::size_t i) { return "v" + std::to_string(i); }
inline const std::string kGhost = "ghost";

struct KbGenOptions {
    std::size_t min_concepts = 1;
    std::size_t max_concepts = 6;
    double edge_p = 0.3;
    double disjoint_p = 0.3;
    double not_leq_p = 0.1;
    double gamma_p = 0.9;
    double una_false_p = 0.25;
    double nominal_p = 0.1;
    bool allow_cycles = true;
};

// Random spec that builds without error. Disjoint and not_leq pairs that would
// contradict the closure are dropped.
inline KbSpec random_spec(Rng& rng, const KbGenOptions& o = {}) {
    KbSpec s;
    s.id = "R";
    const std::size_t n = o.min_concepts + pick(rng, o.max_concepts - o.min_concepts + 1);
    for (std::size_t i = 0; i < n; ++i) s.concepts.push_back(cname(i));
    s.una = !coin(rng, o.una_false_p);
    if (coin(rng, o.nominal_p)) {
        s.domain = Domain::Nominal;
    } else {
        s.domain = coin(rng, 0.5) ? Domain::Taxonomic : Domain::Mereological;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (i == j) continue;
                if (!o.allow_cycles && i > j) continue;
                if (coin(rng, i < j ? o.edge_p : o.edge_p / 4)) s.leq.emplace_back(cname(i), cname(j));
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (coin(rng, o.gamma_p)) s.gamma[vname(i)] = cname(i);
    }
    auto try_add = [&](std::vector<ConceptPair>& rel, ConceptPair p) {
        rel.push_back(std::move(p));
        try {
            (void)KnowledgeBase::build(s);
        } catch (const Error&) {
            rel.pop_back();
        }
    };
    if (s.domain != Domain::Nominal) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                if (coin(rng, o.disjoint_p)) try_add(s.disjoint, {cname(i), cname(j)});
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j && coin(rng, o.not_leq_p)) try_add(s.not_leq, {cname(i), cname(j)});
        }
    }
    return s;
}

// Value strings a constraint may reference: every gamma key plus one that
// never grounds.
inline std::vector<std::string> value_pool(const KbSpec& s) {
    std::vector<std::string> out;
    for (const auto& [v, c] : s.gamma) out.push_back(v);
    return out;
}

inline Constraint random_constraint(Rng& rng, const KbSpec& s, double ghost_p = 0.05, const std::string& operand = "x") {
    auto pool = value_pool(s);
    auto value = [&] { return pool.empty() || coin(rng, ghost_p) ? kGhost : pool[pick(rng, pool.size())]; };
    const Operator op = kAllOperators[pick(rng, std::size(kAllOperators))];
    if (!is_set_operator(op)) return {operand, op, value()};
    std::vector<std::string> vs;
    const std::size_t k = 1 + pick(rng, 3);
    for (std::size_t i = 0; i < k; ++i) vs.push_back(value());
    return {operand, op, std::move(vs)};
}

// Index-level view of a completion: a preorder L containing the KB order and an
// equivalence E (identity under UNA) contained in L and its converse.
struct Completion {
    std::size_t n = 0;
    std::vector<char> leq;   // n*n
    std::vector<char> same;  // n*n
    bool L(std::size_t a, std::size_t b) const { return leq[a * n + b]; }
    bool E(std::size_t a, std::size_t b) const { return same[a * n + b]; }
};

namespace detail {

inline bool transitive(const std::vector<char>& r, std::size_t n) {
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (r[a * n + b])
                for (std::size_t c = 0; c < n; ++c)
                    if (r[b * n + c] && !r[a * n + c]) return false;
    return true;
}

// Set partitions as restricted growth strings.
inline void partitions(std::size_t n, std::vector<std::size_t>& cur, std::vector<std::vector<std::size_t>>& out) {
    if (cur.size() == n) {
        out.push_back(cur);
        return;
    }
    std::size_t top = 0;
    for (auto b : cur) top = std::max(top, b + 1);
    for (std::size_t b = 0; b <= top; ++b) {
        cur.push_back(b);
        partitions(n, cur, out);
        cur.pop_back();
    }
}

}  // namespace detail

// Every consistent completion of the KB's relations. Intended for |C| <= 4.
inline std::vector<Completion> completions(const KnowledgeBase& kb) {
    const std::size_t n = kb.size();
    std::vector<std::pair<std::size_t, std::size_t>> free;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (a != b && !kb.leq(static_cast<ConceptIndex>(a), static_cast<ConceptIndex>(b))) free.emplace_back(a, b);

    std::vector<std::vector<std::size_t>> parts;
    if (kb.una()) {
        std::vector<std::size_t> id(n);
        for (std::size_t i = 0; i < n; ++i) id[i] = i;
        parts.push_back(id);
    } else {
        std::vector<std::size_t> cur;
        detail::partitions(n, cur, parts);
    }

    std::vector<Completion> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free.size()); ++mask) {
        std::vector<char> r(n * n, 0);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                r[a * n + b] = kb.leq(static_cast<ConceptIndex>(a), static_cast<ConceptIndex>(b));
        for (std::size_t k = 0; k < free.size(); ++k)
            if (mask >> k & 1) r[free[k].first * n + free[k].second] = 1;
        if (!detail::transitive(r, n)) continue;
        bool ok = true;
        for (std::size_t a = 0; a < n && ok; ++a)
            for (std::size_t b = 0; b < n && ok; ++b)
                if (r[a * n + b] && kb.not_leq(static_cast<ConceptIndex>(a), static_cast<ConceptIndex>(b))) ok = false;
        // No concept may sit below both sides of a disjoint pair.
        for (std::size_t p = 0; p < n && ok; ++p)
            for (std::size_t q = 0; q < n && ok; ++q)
                if (kb.disjoint(static_cast<ConceptIndex>(p), static_cast<ConceptIndex>(q)))
                    for (std::size_t w = 0; w < n && ok; ++w)
                        if (r[w * n + p] && r[w * n + q]) ok = false;
        if (!ok) continue;
        for (const auto& part : parts) {
            Completion c{n, r, std::vector<char>(n * n, 0)};
            bool fits = true;
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b)
                    if (part[a] == part[b]) {
                        c.same[a * n + b] = 1;
                        if (!r[a * n + b]) fits = false;
                    }
            if (fits) out.push_back(std::move(c));
        }
    }
    return out;
}

// nullopt when a value is unmapped.
inline std::optional<std::vector<std::size_t>> targets(const KnowledgeBase& kb, const Constraint& c) {
    std::vector<std::size_t> out;
    for (const auto& v : c.values) {
        auto g = kb.ground(v);
        if (!g) return std::nullopt;
        out.push_back(*g);
    }
    return out;
}

inline bool member_in(const Completion& m, std::size_t x, Operator op, const std::vector<std::size_t>& ts) {
    auto below = [&](std::size_t t) { return m.L(x, t); };
    switch (op) {
        case Operator::Eq: return m.E(x, ts[0]);
        case Operator::Neq: return !m.E(x, ts[0]);
        case Operator::IsA:
        case Operator::IsPartOf: return m.L(x, ts[0]);
        case Operator::HasPart: return m.L(ts[0], x);
        case Operator::IsAnyOf: return std::any_of(ts.begin(), ts.end(), below);
        case Operator::IsAllOf: return std::all_of(ts.begin(), ts.end(), below);
        case Operator::IsNoneOf: return std::none_of(ts.begin(), ts.end(), below);
    }
    return false;
}

// Identity completion: the KB read as complete.
inline Completion as_is(const KnowledgeBase& kb) {
    const std::size_t n = kb.size();
    Completion c{n, std::vector<char>(n * n, 0), std::vector<char>(n * n, 0)};
    for (std::size_t a = 0; a < n; ++a) {
        c.same[a * n + a] = 1;
        for (std::size_t b = 0; b < n; ++b)
            c.leq[a * n + b] = kb.leq(static_cast<ConceptIndex>(a), static_cast<ConceptIndex>(b));
    }
    return c;
}

// Common-member test of a constraint group in one completion. Ungrounded
// constraints are ignored; has_top reports whether any was present.
inline bool common_member(const Completion& m, const std::vector<std::optional<std::vector<std::size_t>>>& ts,
                          const std::vector<Constraint>& cs) {
    for (std::size_t x = 0; x < m.n; ++x) {
        bool all = true;
        for (std::size_t i = 0; i < cs.size() && all; ++i)
            if (ts[i] && !member_in(m, x, cs[i].op, *ts[i])) all = false;
        if (all) return true;
    }
    return false;
}

inline Verdict fold_models(const KnowledgeBase& kb, const std::vector<Completion>& models, const std::vector<Constraint>& cs) {
    std::vector<std::optional<std::vector<std::size_t>>> ts;
    bool top = false;
    for (const auto& c : cs) {
        ts.push_back(targets(kb, c));
        top = top || !ts.back();
    }
    bool some = false, none = false;
    for (const auto& m : models) (common_member(m, ts, cs) ? some : none) = true;
    if (!some) return Verdict::Conflict;
    if (top || none) return Verdict::Unknown;
    return Verdict::Compatible;
}

// Closed mode: plain set intersection over the KB as given.
inline Verdict closed_oracle(const KnowledgeBase& kb, const std::vector<Constraint>& cs) {
    return fold_models(kb, {as_is(kb)}, cs);
}

// Open mode: the verdict every completion agrees on, UNKNOWN otherwise.
inline Verdict open_oracle(const KnowledgeBase& kb, const std::vector<Completion>& models, const std::vector<Constraint>& cs) {
    return fold_models(kb, models, cs);
}

// Valid alignment into a fresh target KB: the images of a downward-closed
// subset of the source, plus extra target concepts above images and extra
// disjointness where the target permits it.
struct RandomAlignment {
    KbSpec target;
    Alignment alignment;
};

inline RandomAlignment random_alignment(Rng& rng, const KnowledgeBase& kb_a, double keep_p = 0.7) {
    const std::size_t n = kb_a.size();
    std::vector<char> dom(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (!coin(rng, keep_p)) continue;
        for (std::size_t j = 0; j < n; ++j)
            if (kb_a.leq(static_cast<ConceptIndex>(j), static_cast<ConceptIndex>(i))) dom[j] = 1;
    }
    auto img = [&](std::size_t i) { return "T" + kb_a.name(static_cast<ConceptIndex>(i)); };
    RandomAlignment out;
    KbSpec& t = out.target;
    t.id = "T";
    t.domain = kb_a.domain();
    t.una = kb_a.una();
    out.alignment.source_kb_id = kb_a.id();
    out.alignment.target_kb_id = t.id;
    for (std::size_t i = 0; i < n; ++i) {
        if (!dom[i]) continue;
        t.concepts.push_back(img(i));
        out.alignment.mapping.emplace_back(kb_a.name(static_cast<ConceptIndex>(i)), img(i));
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j || !dom[i] || !dom[j]) continue;
            const auto a = static_cast<ConceptIndex>(i), b = static_cast<ConceptIndex>(j);
            if (kb_a.leq(a, b)) t.leq.emplace_back(img(i), img(j));
            if (i < j && kb_a.disjoint(a, b)) t.disjoint.emplace_back(img(i), img(j));
            if (kb_a.not_leq(a, b)) t.not_leq.emplace_back(img(i), img(j));
        }
    }
    const std::size_t images = t.concepts.size();
    if (t.domain != Domain::Nominal) {
        const std::size_t extra = pick(rng, 3);
        for (std::size_t e = 0; e < extra; ++e) {
            const std::string name = "X" + std::to_string(e);
            t.concepts.push_back(name);
            for (std::size_t i = 0; i < images; ++i)
                if (coin(rng, 0.3)) t.leq.emplace_back(t.concepts[i], name);
        }
        for (std::size_t i = 0; i < t.concepts.size(); ++i) {
            for (std::size_t j = i + 1; j < t.concepts.size(); ++j) {
                if (!coin(rng, 0.2)) continue;
                t.disjoint.emplace_back(t.concepts[i], t.concepts[j]);
                try {
                    (void)KnowledgeBase::build(t);
                } catch (const Error&) {
                    t.disjoint.pop_back();
                }
            }
        }
    }
    for (const auto& c : t.concepts) t.gamma[c] = c;
    return out;
}

inline KnowledgeBase build(const KbSpec& s) { return KnowledgeBase::build(s); }

}  // namespace odrl::testing
