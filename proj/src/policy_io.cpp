#include "odrl/policy_io.hpp"

#include "json_codec.hpp"
#include "odrl/error.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace odrl::io {

namespace detail {

namespace {

std::string escape_pointer_token(std::string_view key) {
    std::string out;
    for (char ch : key) {
        if (ch == '~') {
            out += "~0";
        } else if (ch == '/') {
            out += "~1";
        } else {
            out += ch;
        }
    }
    return out;
}

std::string type_name(const json& j) { return j.type_name(); }

}  // namespace

Where Where::at(std::string_view key) const { return {source, pointer + "/" + escape_pointer_token(key)}; }
Where Where::at(std::size_t index) const { return {source, pointer + "/" + std::to_string(index)}; }

void Where::fail(ErrorKind kind, const std::string& what) const {
    throw Error(kind, source + ": at " + (pointer.empty() ? std::string("/") : pointer) + ": " + what);
}

json parse_json(std::string_view text, const std::string& source) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        std::string what = e.what();
        if (auto p = what.find("parse error"); p != std::string::npos) what = what.substr(p);
        throw Error(ErrorKind::ParseError, source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + what);
    }
}

void only_fields(const json& j, const Where& w, std::initializer_list<std::string_view> allowed) {
    if (!j.is_object()) w.fail(ErrorKind::ParseError, "expected an object, found " + type_name(j));
    for (const auto& [key, value] : j.items()) {
        bool ok = false;
        for (auto a : allowed) ok = ok || key == a;
        if (!ok) w.at(key).fail(ErrorKind::ParseError, "unknown field '" + key + "'");
    }
}

const json& field(const json& j, const Where& w, std::string_view key) {
    auto it = j.find(std::string(key));
    if (it == j.end()) w.fail(ErrorKind::ParseError, "missing required field '" + std::string(key) + "'");
    return *it;
}

std::string as_string(const json& j, const Where& w) {
    if (!j.is_string()) w.fail(ErrorKind::ParseError, "expected a string, found " + type_name(j));
    return j.get<std::string>();
}

namespace {

bool as_bool(const json& j, const Where& w) {
    if (!j.is_boolean()) w.fail(ErrorKind::ParseError, "expected a boolean, found " + type_name(j));
    return j.get<bool>();
}

const json& as_array(const json& j, const Where& w) {
    if (!j.is_array()) w.fail(ErrorKind::ParseError, "expected an array, found " + type_name(j));
    return j;
}

std::vector<ConceptPair> pairs_from_json(const json& j, const Where& w, const std::set<std::string>& concepts) {
    std::vector<ConceptPair> out;
    as_array(j, w);
    for (std::size_t i = 0; i < j.size(); ++i) {
        const Where wi = w.at(i);
        const json& e = j[i];
        if (!e.is_array() || e.size() != 2) wi.fail(ErrorKind::ParseError, "expected a pair [x, y]");
        ConceptPair p{as_string(e[0], wi.at(std::size_t{0})), as_string(e[1], wi.at(std::size_t{1}))};
        if (!concepts.contains(p.first)) wi.at(std::size_t{0}).fail(ErrorKind::UnknownConcept, "'" + p.first + "' is not listed in /concepts");
        if (!concepts.contains(p.second)) wi.at(std::size_t{1}).fail(ErrorKind::UnknownConcept, "'" + p.second + "' is not listed in /concepts");
        out.push_back(std::move(p));
    }
    return out;
}

json pairs_to_json(const std::vector<ConceptPair>& ps) {
    json out = json::array();
    for (const auto& [x, y] : ps) out.push_back(json::array({x, y}));
    return out;
}

}  // namespace

KbSpec kb_spec_from_json(const json& j, const Where& w) {
    only_fields(j, w, {"id", "domain", "una", "concepts", "leq", "disjoint", "not_leq", "gamma"});
    KbSpec spec;
    spec.id = as_string(field(j, w, "id"), w.at("id"));
    if (j.contains("domain")) {
        auto d = parse_domain(as_string(j["domain"], w.at("domain")));
        if (!d) w.at("domain").fail(ErrorKind::ParseError, "domain must be taxonomic, mereological or nominal");
        spec.domain = *d;
    }
    if (j.contains("una")) spec.una = as_bool(j["una"], w.at("una"));
    const json& cs = as_array(field(j, w, "concepts"), w.at("concepts"));
    std::set<std::string> known;
    for (std::size_t i = 0; i < cs.size(); ++i) {
        auto c = as_string(cs[i], w.at("concepts").at(i));
        if (c.empty()) w.at("concepts").at(i).fail(ErrorKind::ValidationError, "concept identifiers must be non-empty");
        known.insert(c);
        spec.concepts.push_back(std::move(c));
    }
    if (j.contains("leq")) spec.leq = pairs_from_json(j["leq"], w.at("leq"), known);
    if (j.contains("disjoint")) spec.disjoint = pairs_from_json(j["disjoint"], w.at("disjoint"), known);
    if (j.contains("not_leq")) spec.not_leq = pairs_from_json(j["not_leq"], w.at("not_leq"), known);
    if (j.contains("gamma")) {
        const Where wg = w.at("gamma");
        if (!j["gamma"].is_object()) wg.fail(ErrorKind::ParseError, "expected an object mapping values to concepts");
        for (const auto& [value, target] : j["gamma"].items()) {
            auto c = as_string(target, wg.at(value));
            if (!known.contains(c)) wg.at(value).fail(ErrorKind::UnknownConcept, "'" + c + "' is not listed in /concepts");
            spec.gamma[value] = std::move(c);
        }
    }
    return spec;
}

json kb_spec_to_json(const KbSpec& spec) {
    json j;
    j["id"] = spec.id;
    j["domain"] = std::string(to_string(spec.domain));
    j["una"] = spec.una;
    j["concepts"] = spec.concepts;
    j["leq"] = pairs_to_json(spec.leq);
    j["disjoint"] = pairs_to_json(spec.disjoint);
    if (!spec.not_leq.empty()) j["not_leq"] = pairs_to_json(spec.not_leq);
    j["gamma"] = json::object();
    for (const auto& [v, c] : spec.gamma) j["gamma"][v] = c;
    return j;
}

Constraint constraint_from_json(const json& j, const Where& w) {
    only_fields(j, w, {"leftOperand", "operator", "rightOperand"});
    Constraint c;
    c.left_operand = as_string(field(j, w, "leftOperand"), w.at("leftOperand"));
    if (c.left_operand.empty()) w.at("leftOperand").fail(ErrorKind::ValidationError, "leftOperand must be non-empty");
    const auto op = as_string(field(j, w, "operator"), w.at("operator"));
    try {
        c.op = parse_operator(op);
    } catch (const Error&) {
        w.at("operator").fail(ErrorKind::ParseError, "unknown operator '" + op + "'");
    }
    const json& r = field(j, w, "rightOperand");
    if (r.is_array()) {
        for (std::size_t i = 0; i < r.size(); ++i) c.values.push_back(as_string(r[i], w.at("rightOperand").at(i)));
    } else {
        c.values.push_back(as_string(r, w.at("rightOperand")));
    }
    try {
        c.check_well_formed();
    } catch (const Error& e) {
        w.at("rightOperand").fail(ErrorKind::ValidationError, e.message());
    }
    return c;
}

json constraint_to_json(const Constraint& c) {
    json j;
    j["leftOperand"] = c.left_operand;
    j["operator"] = std::string(to_string(c.op));
    if (is_set_operator(c.op)) {
        j["rightOperand"] = c.values;
    } else {
        j["rightOperand"] = c.values.empty() ? std::string() : c.values.front();
    }
    return j;
}

CompositeConstraint composite_from_json(const json& j, const Where& w) {
    if (!j.is_object()) w.fail(ErrorKind::ParseError, "expected a constraint or an and/or/xone object, found " + type_name(j));
    for (const char* key : {"and", "or", "xone"}) {
        if (!j.contains(key)) continue;
        only_fields(j, w, {key});
        const Where wk = w.at(key);
        const json& children = as_array(j[key], wk);
        if (children.empty()) wk.fail(ErrorKind::ValidationError, std::string(key) + " needs at least one operand");
        std::vector<CompositeConstraint> out;
        for (std::size_t i = 0; i < children.size(); ++i) out.push_back(composite_from_json(children[i], wk.at(i)));
        return CompositeConstraint::node(*parse_composition(key), std::move(out));
    }
    return CompositeConstraint::leaf(constraint_from_json(j, w));
}

json composite_to_json(const CompositeConstraint& c) {
    if (c.is_leaf()) return constraint_to_json(c.constraint());
    json children = json::array();
    for (const auto& child : c.children()) children.push_back(composite_to_json(child));
    json j;
    j[std::string(to_string(c.mode()))] = std::move(children);
    return j;
}

Alignment alignment_from_json(const json& j, const Where& w) {
    only_fields(j, w, {"source", "target", "map"});
    Alignment a;
    a.source_kb_id = as_string(field(j, w, "source"), w.at("source"));
    a.target_kb_id = as_string(field(j, w, "target"), w.at("target"));
    const json& m = as_array(field(j, w, "map"), w.at("map"));
    for (std::size_t i = 0; i < m.size(); ++i) {
        const Where wi = w.at("map").at(i);
        if (!m[i].is_array() || m[i].size() != 2) wi.fail(ErrorKind::ParseError, "expected a pair [source-concept, target-concept]");
        a.mapping.emplace_back(as_string(m[i][0], wi.at(std::size_t{0})), as_string(m[i][1], wi.at(std::size_t{1})));
    }
    return a;
}

json alignment_to_json(const Alignment& a) {
    json j;
    j["source"] = a.source_kb_id;
    j["target"] = a.target_kb_id;
    j["map"] = pairs_to_json(a.mapping);
    return j;
}

ExecutionContext context_from_json(const json& j, const Where& w) {
    if (!j.is_object()) w.fail(ErrorKind::ParseError, "expected an object mapping operands to values");
    ExecutionContext ctx;
    for (const auto& [operand, value] : j.items()) ctx[operand] = as_string(value, w.at(operand));
    return ctx;
}

KnowledgeBase build_located(const KbSpec& spec, const std::string& source) {
    try {
        return KnowledgeBase::build(spec);
    } catch (const Error& e) {
        throw Error(e.kind(), source + ": " + e.message());
    }
}

}  // namespace detail

using namespace detail;

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::ParseError, path.string() + ": cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string read_inline_or_file(const std::string& arg) {
    const auto b = arg.find_first_not_of(" \t\r\n");
    if (b != std::string::npos && (arg[b] == '{' || arg[b] == '[')) return arg;
    return read_file(arg);
}

namespace {

std::string dump(const json& j, int indent = 2) { return j.dump(indent) + "\n"; }

template <class T, class F>
T parse_with(std::string_view text, const std::string& source, F from_json) {
    const json j = parse_json(text, source);
    return from_json(j, Where{source, ""});
}

}  // namespace

KbSpec parse_kb_spec(std::string_view text, const std::string& source) {
    return parse_with<KbSpec>(text, source, kb_spec_from_json);
}

KnowledgeBase parse_kb(std::string_view text, const std::string& source) {
    return build_located(parse_kb_spec(text, source), source);
}

KbSpec parse_kb_spec_file(const std::filesystem::path& path) { return parse_kb_spec(read_file(path), path.string()); }
KnowledgeBase parse_kb_file(const std::filesystem::path& path) { return parse_kb(read_file(path), path.string()); }
std::string serialize_kb(const KbSpec& spec) { return dump(kb_spec_to_json(spec)); }

Constraint parse_constraint(std::string_view text, const std::string& source) {
    return parse_with<Constraint>(text, source, constraint_from_json);
}
std::string serialize_constraint(const Constraint& c) { return dump(constraint_to_json(c)); }

CompositeConstraint parse_composite(std::string_view text, const std::string& source) {
    return parse_with<CompositeConstraint>(text, source, composite_from_json);
}
CompositeConstraint parse_policy_file(const std::filesystem::path& path) {
    return parse_composite(read_file(path), path.string());
}
std::string serialize_composite(const CompositeConstraint& c) { return dump(composite_to_json(c)); }

Alignment parse_alignment(std::string_view text, const std::string& source) {
    return parse_with<Alignment>(text, source, alignment_from_json);
}
Alignment parse_alignment_file(const std::filesystem::path& path) {
    return parse_alignment(read_file(path), path.string());
}
std::string serialize_alignment(const Alignment& a) { return dump(alignment_to_json(a)); }

ExecutionContext parse_context(std::string_view text, const std::string& source) {
    return parse_with<ExecutionContext>(text, source, context_from_json);
}
ExecutionContext parse_context_file(const std::filesystem::path& path) {
    return parse_context(read_file(path), path.string());
}
std::string serialize_context(const ExecutionContext& ctx) {
    json j = json::object();
    for (const auto& [k, v] : ctx) j[k] = v;
    return dump(j);
}

KbDirectory load_kb_dir(const std::filesystem::path& dir) {
    const auto manifest_path = dir / "manifest.json";
    const std::string source = manifest_path.string();
    const json m = parse_json(read_file(manifest_path), source);
    const Where w{source, ""};
    only_fields(m, w, {"operands"});
    const json& ops = field(m, w, "operands");
    if (!ops.is_object()) w.at("operands").fail(ErrorKind::ParseError, "expected an object mapping operands to KB files");
    KbDirectory out;
    std::map<std::filesystem::path, std::shared_ptr<const KnowledgeBase>> loaded;
    for (const auto& [operand, file] : ops.items()) {
        const auto path = dir / as_string(file, w.at("operands").at(operand));
        auto& kb = loaded[path];
        if (!kb) kb = std::make_shared<const KnowledgeBase>(parse_kb_file(path));
        out.registry.bind(operand, kb);
        out.files[operand] = path;
    }
    return out;
}

std::string result_json(const CompositeResult& r, Mode mode, int indent) {
    json j;
    j["verdict"] = std::string(to_string(r.verdict));
    j["mode"] = std::string(to_string(mode));
    j["shared_operands"] = r.shared_operands;
    j["per_operand"] = json::array();
    json witness = json::object();
    for (const auto& ov : r.per_operand) {
        json e;
        e["operand"] = ov.operand;
        e["verdict"] = std::string(to_string(ov.verdict));
        e["witness"] = ov.witness ? json(*ov.witness) : json(nullptr);
        e["left"] = ov.left;
        e["right"] = ov.right;
        j["per_operand"].push_back(std::move(e));
        if (ov.witness && !witness.contains(ov.operand)) witness[ov.operand] = *ov.witness;
    }
    j["witness"] = std::move(witness);
    j["blocking"] = r.blocking;
    return dump(j, indent);
}

std::string violations_json(const std::vector<Violation>& vs, int indent) {
    json j;
    j["valid"] = vs.empty();
    j["violations"] = json::array();
    for (const auto& v : vs) {
        json e;
        e["axiom"] = std::string(to_string(v.kind));
        e["x"] = v.x;
        if (!v.y.empty()) e["y"] = v.y;
        e["text"] = v.to_string();
        j["violations"].push_back(std::move(e));
    }
    return dump(j, indent);
}

std::string alignment_report_json(const std::vector<AlignmentViolation>& vs, int indent) {
    json j;
    j["valid"] = vs.empty();
    j["violations"] = json::array();
    for (const auto& v : vs) {
        json e;
        e["kind"] = std::string(to_string(v.kind));
        e["x"] = v.x;
        if (!v.y.empty()) e["y"] = v.y;
        e["text"] = v.to_string();
        j["violations"].push_back(std::move(e));
    }
    return dump(j, indent);
}

}  // namespace odrl::io
