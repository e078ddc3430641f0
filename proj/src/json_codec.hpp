#pragma once

// nlohmann-based conversions shared by policy_io and the benchmark loader.

#include "json.hpp"
#include "odrl/alignment.hpp"
#include "odrl/error.hpp"
#include "odrl/kb.hpp"
#include "odrl/runtime.hpp"
#include "odrl/verdict.hpp"

#include <initializer_list>
#include <string>

namespace odrl::io::detail {

using json = nlohmann::ordered_json;

// Location-carrying cursor over a parsed document.
struct Where {
    const std::string& source;
    std::string pointer;

    Where at(std::string_view key) const;
    Where at(std::size_t index) const;
    [[noreturn]] void fail(ErrorKind kind, const std::string& what) const;
};

json parse_json(std::string_view text, const std::string& source);

void only_fields(const json& j, const Where& w, std::initializer_list<std::string_view> allowed);
const json& field(const json& j, const Where& w, std::string_view key);
std::string as_string(const json& j, const Where& w);

KbSpec kb_spec_from_json(const json& j, const Where& w);
json kb_spec_to_json(const KbSpec& spec);
Constraint constraint_from_json(const json& j, const Where& w);
json constraint_to_json(const Constraint& c);
CompositeConstraint composite_from_json(const json& j, const Where& w);
json composite_to_json(const CompositeConstraint& c);
Alignment alignment_from_json(const json& j, const Where& w);
json alignment_to_json(const Alignment& a);
ExecutionContext context_from_json(const json& j, const Where& w);

// Builds a KB and prefixes construction errors with the source name.
KnowledgeBase build_located(const KbSpec& spec, const std::string& source);

}  // namespace odrl::io::detail
