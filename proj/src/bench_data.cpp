#include "odrl/bench.hpp"

#include <algorithm>
#include <stdexcept>

namespace odrl::bench {

namespace {

KbSpec spec(std::string id, Domain domain, std::vector<std::string> concepts, std::vector<ConceptPair> leq,
            std::vector<ConceptPair> disjoint, std::map<std::string, std::string> gamma) {
    KbSpec s;
    s.id = std::move(id);
    s.domain = domain;
    s.concepts = std::move(concepts);
    s.leq = std::move(leq);
    s.disjoint = std::move(disjoint);
    s.gamma = std::move(gamma);
    return s;
}

// Every concept also grounds from its own identifier.
void self_ground(KbSpec& s) {
    for (const auto& c : s.concepts) s.gamma.emplace(c, c);
}

KbSpec geo000() {
    const std::string gn = "https://sws.geonames.org/";
    KbSpec s = spec("GEO000", Domain::Mereological, {"europe", "germany", "france", "bavaria"},
                    {{"germany", "europe"}, {"france", "europe"}, {"bavaria", "germany"}}, {{"germany", "france"}},
                    {{gn + "6255148/", "europe"},
                     {gn + "2921044/", "germany"},
                     {gn + "3017382/", "france"},
                     {gn + "2951839/", "bavaria"},
                     {"Europe", "europe"},
                     {"Germany", "germany"},
                     {"France", "france"},
                     {"Bavaria", "bavaria"}});
    return s;
}

KbSpec geo001() {
    KbSpec s = spec("GEO001", Domain::Mereological, {"EU-region", "DE", "FR"}, {{"DE", "EU-region"}, {"FR", "EU-region"}},
                    {{"DE", "FR"}}, {{"EU", "EU-region"}, {"urn:iso:std:iso:3166:DE", "DE"}, {"urn:iso:std:iso:3166:FR", "FR"}});
    self_ground(s);
    return s;
}

KbSpec dpv000() {
    const std::string dpv = "https://w3id.org/dpv#";
    KbSpec s = spec("DPV000", Domain::Taxonomic,
                    {"purpose", "commercial", "nonCommercial", "research", "scientificResearch", "nonCommRes", "commRes",
                     "marketing", "personalisedAds", "serviceProvision"},
                    {{"commercial", "purpose"},
                     {"nonCommercial", "purpose"},
                     {"research", "purpose"},
                     {"serviceProvision", "purpose"},
                     {"scientificResearch", "research"},
                     {"nonCommRes", "research"},
                     {"nonCommRes", "nonCommercial"},
                     {"commRes", "research"},
                     {"commRes", "commercial"},
                     {"marketing", "commercial"},
                     {"personalisedAds", "marketing"}},
                    // Negative coverage is deliberately asymmetric: nonCommRes is
                    // excluded from commercial, commRes is not excluded from
                    // nonCommercial.
                    {{"nonCommRes", "commercial"}, {"marketing", "nonCommercial"}, {"serviceProvision", "research"}},
                    {});
    const std::pair<const char*, const char*> terms[] = {
        {"Purpose", "purpose"},
        {"CommercialPurpose", "commercial"},
        {"NonCommercialPurpose", "nonCommercial"},
        {"ResearchAndDevelopment", "research"},
        {"ScientificResearch", "scientificResearch"},
        {"NonCommercialResearch", "nonCommRes"},
        {"CommercialResearch", "commRes"},
        {"Marketing", "marketing"},
        {"PersonalisedAdvertising", "personalisedAds"},
        {"ServiceProvision", "serviceProvision"},
    };
    for (const auto& [term, concept_id] : terms) {
        s.gamma.emplace(dpv + term, concept_id);
        s.gamma.emplace(term, concept_id);
    }
    return s;
}

KbSpec dpv001() {
    KbSpec s = spec("DPV001", Domain::Taxonomic,
                    {"commercialUse", "nonCommercialUse", "researchUse", "scientificStudy", "nonCommercialResearch",
                     "commercialResearch"},
                    {{"scientificStudy", "researchUse"},
                     {"nonCommercialResearch", "researchUse"},
                     {"nonCommercialResearch", "nonCommercialUse"},
                     {"commercialResearch", "researchUse"},
                     {"commercialResearch", "commercialUse"}},
                    {{"nonCommercialResearch", "commercialUse"}}, {});
    self_ground(s);
    return s;
}

KbSpec lng000() {
    KbSpec s = spec("LNG000", Domain::Taxonomic, {"mul", "gem", "roa", "de", "de-AT", "de-CH", "en", "fr", "fr-CA", "it"},
                    {{"gem", "mul"},
                     {"roa", "mul"},
                     {"de", "gem"},
                     {"en", "gem"},
                     {"de-AT", "de"},
                     {"de-CH", "de"},
                     {"fr", "roa"},
                     {"it", "roa"},
                     {"fr-CA", "fr"}},
                    {{"gem", "roa"}, {"de", "en"}, {"fr", "it"}}, {});
    self_ground(s);
    for (const char* tag : {"de", "en", "fr", "it"}) {
        s.gamma.emplace(std::string("http://id.loc.gov/vocabulary/iso639-1/") + tag, tag);
    }
    return s;
}

KbSpec lng001() {
    KbSpec s = spec("LNG001", Domain::Taxonomic, {"germanic", "romance", "deu", "eng", "fra", "ita"},
                    {{"deu", "germanic"}, {"eng", "germanic"}, {"fra", "romance"}, {"ita", "romance"}},
                    {{"germanic", "romance"}, {"deu", "eng"}, {"fra", "ita"}}, {});
    self_ground(s);
    return s;
}

KbSpec nom000() {
    KbSpec s = spec("NOM000", Domain::Nominal, {"sftp", "https", "s3", "email"}, {}, {}, {});
    self_ground(s);
    return s;
}

KbSpec chn000() {
    KbSpec s = spec("CHN000", Domain::Taxonomic, {"n0", "n1", "n2", "n3", "n4"},
                    {{"n0", "n1"}, {"n1", "n2"}, {"n2", "n3"}, {"n3", "n4"}}, {}, {});
    self_ground(s);
    return s;
}

KbSpec dia000() {
    KbSpec s = spec("DIA000", Domain::Taxonomic, {"top", "left", "right", "bottom"},
                    {{"bottom", "left"}, {"bottom", "right"}, {"left", "top"}, {"right", "top"}}, {}, {});
    self_ground(s);
    return s;
}

KbSpec sng000() {
    KbSpec s = spec("SNG000", Domain::Taxonomic, {"only"}, {}, {}, {});
    self_ground(s);
    return s;
}

KbSpec nms000() {
    KbSpec s = spec("NMS000", Domain::Taxonomic, {"p", "q", "a", "shared", "b", "other"},
                    {{"a", "p"}, {"shared", "p"}, {"shared", "q"}, {"b", "q"}},
                    {{"a", "q"}, {"b", "p"}, {"other", "p"}, {"other", "q"}}, {});
    self_ground(s);
    return s;
}

KbSpec ex1a() {
    KbSpec s = spec("EX1A", Domain::Taxonomic, {"a", "b", "c"}, {{"a", "b"}, {"a", "c"}}, {}, {});
    self_ground(s);
    return s;
}

KbSpec ex1b() {
    KbSpec s = spec("EX1B", Domain::Taxonomic, {"A", "B", "C"}, {{"A", "B"}, {"A", "C"}}, {}, {});
    self_ground(s);
    return s;
}

Constraint leaf(const std::string& operand, Operator op, std::string value) { return {operand, op, std::move(value)}; }
Constraint leaf(const std::string& operand, Operator op, std::vector<std::string> values) {
    return {operand, op, std::move(values)};
}

CompositeConstraint L(Constraint c) { return CompositeConstraint::leaf(std::move(c)); }
CompositeConstraint And(std::vector<CompositeConstraint> cs) { return CompositeConstraint::node(Composition::And, std::move(cs)); }
CompositeConstraint Or(std::vector<CompositeConstraint> cs) { return CompositeConstraint::node(Composition::Or, std::move(cs)); }
CompositeConstraint Xone(std::vector<CompositeConstraint> cs) { return CompositeConstraint::node(Composition::Xone, std::move(cs)); }

using enum Operator;

class Builder {
public:
    std::vector<BenchmarkProblem> problems;

    BenchmarkProblem& pair(std::string id, Category cat, std::string kb, Constraint c1, Constraint c2, std::string description = {}) {
        BenchmarkProblem p;
        p.id = std::move(id);
        p.category = cat;
        p.kind = ProblemKind::Pair;
        p.kb = std::move(kb);
        p.c1 = std::move(c1);
        p.c2 = std::move(c2);
        p.description = std::move(description);
        return push(std::move(p));
    }

    BenchmarkProblem& composite(std::string id, CompositeConstraint left, CompositeConstraint right, std::string description = {}) {
        BenchmarkProblem p;
        p.id = std::move(id);
        p.category = Category::Composition;
        p.kind = ProblemKind::Composite;
        p.bindings = {{"spatial", "GEO000"}, {"purpose", "DPV000"}, {"language", "LNG000"}, {"channel", "NOM000"}};
        p.left = std::move(left);
        p.right = std::move(right);
        p.description = std::move(description);
        return push(std::move(p));
    }

    BenchmarkProblem& aligned(std::string id, std::string alignment, std::string source, std::string target, Constraint c1,
                              Constraint c2, std::string description = {}) {
        BenchmarkProblem p;
        p.id = std::move(id);
        p.category = Category::Alignment;
        p.kind = ProblemKind::Aligned;
        p.alignment = std::move(alignment);
        p.kb = std::move(source);
        p.target_kb = std::move(target);
        p.c1 = std::move(c1);
        p.c2 = std::move(c2);
        p.description = std::move(description);
        return push(std::move(p));
    }

    BenchmarkProblem& runtime(std::string id, std::string kb, Constraint c1, Constraint c2, std::string description = {}) {
        BenchmarkProblem& p = pair(std::move(id), Category::Runtime, std::move(kb), std::move(c1), std::move(c2), std::move(description));
        p.kind = ProblemKind::Runtime;
        return p;
    }

private:
    BenchmarkProblem& push(BenchmarkProblem p) {
        problems.push_back(std::move(p));
        return problems.back();
    }
};

struct Probe {
    std::string kb;
    std::string operand;
    std::string p, q, r;  // value strings
};

void operator_coverage(Builder& b) {
    const Probe probes[] = {
        {"GEO000", "spatial", "Europe", "France", "Germany"},
        {"GEO001", "spatial", "EU", "FR", "DE"},
        {"DPV000", "purpose", "NonCommercialPurpose", "ScientificResearch", "NonCommercialResearch"},
        {"DPV001", "purpose", "researchUse", "scientificStudy", "nonCommercialUse"},
        {"LNG000", "language", "gem", "fr", "de-AT"},
        {"LNG001", "language", "germanic", "fra", "deu"},
        {"NOM000", "channel", "sftp", "https", "email"},
    };
    for (const auto& pr : probes) {
        std::string kb_tag = pr.kb;
        std::transform(kb_tag.begin(), kb_tag.end(), kb_tag.begin(), [](unsigned char ch) { return std::tolower(ch); });
        for (Operator op : kAllOperators) {
            const std::string base = "op-" + kb_tag + "-" + std::string(to_string(op));
            const bool set = is_set_operator(op);
            Constraint a1 = set ? leaf(pr.operand, op, std::vector<std::string>{pr.p, pr.r}) : leaf(pr.operand, op, pr.p);
            Constraint b1 = set ? leaf(pr.operand, op, std::vector<std::string>{pr.q, pr.r}) : leaf(pr.operand, op, pr.r);
            b.pair(base + "-1", Category::OperatorCoverage, pr.kb, a1, leaf(pr.operand, Eq, pr.q));
            b.pair(base + "-2", Category::OperatorCoverage, pr.kb, b1, leaf(pr.operand, IsA, pr.p));
        }
    }
}

void cross_operator(Builder& b) {
    const std::string s = "spatial", pu = "purpose", la = "language";
    const auto C = Category::OperatorCoverage;
    b.pair("xop-01", C, "GEO000", leaf(s, HasPart, "Bavaria"), leaf(s, IsPartOf, "Europe"));
    b.pair("xop-02", C, "GEO000", leaf(s, Neq, "France"), leaf(s, IsPartOf, "France"));
    b.pair("xop-03", C, "GEO000", leaf(s, IsAnyOf, std::vector<std::string>{"Germany", "France"}), leaf(s, IsNoneOf, std::vector<std::string>{"Germany"}));
    b.pair("xop-04", C, "GEO000", leaf(s, IsAllOf, std::vector<std::string>{"Europe", "Germany"}), leaf(s, HasPart, "Germany"));
    b.pair("xop-05", C, "DPV000", leaf(pu, IsNoneOf, std::vector<std::string>{"CommercialPurpose"}), leaf(pu, IsA, "ResearchAndDevelopment"));
    b.pair("xop-06", C, "DPV000", leaf(pu, IsAllOf, std::vector<std::string>{"ResearchAndDevelopment", "NonCommercialPurpose"}), leaf(pu, Eq, "NonCommercialResearch"));
    b.pair("xop-07", C, "DPV000", leaf(pu, HasPart, "CommercialResearch"), leaf(pu, IsA, "NonCommercialPurpose"));
    b.pair("xop-08", C, "DPV000", leaf(pu, Neq, "Marketing"), leaf(pu, IsAnyOf, std::vector<std::string>{"Marketing", "PersonalisedAdvertising"}));
    b.pair("xop-09", C, "LNG000", leaf(la, IsAnyOf, std::vector<std::string>{"de", "en"}), leaf(la, IsA, "roa"));
    b.pair("xop-10", C, "LNG000", leaf(la, HasPart, "fr-CA"), leaf(la, IsNoneOf, std::vector<std::string>{"gem"}));
    b.pair("xop-11", C, "LNG000", leaf(la, IsAllOf, std::vector<std::string>{"gem", "roa"}), leaf(la, Eq, "de"));
    b.pair("xop-12", C, "LNG000", leaf(la, Neq, "de"), leaf(la, IsA, "de"));
}

void structural(Builder& b) {
    const auto S = Category::Structural;
    const std::string x = "x";
    b.pair("str-chn-1", S, "CHN000", leaf(x, IsA, "n4"), leaf(x, Eq, "n0"), "bottom of a depth-5 chain lies below its top").analog = "ODRL170";
    b.pair("str-chn-2", S, "CHN000", leaf(x, HasPart, "n0"), leaf(x, IsA, "n4"), "upward and downward closure span the whole chain").analog = "ODRL171";
    b.pair("str-chn-3", S, "CHN000", leaf(x, IsNoneOf, std::vector<std::string>{"n3"}), leaf(x, Eq, "n0"));
    b.pair("str-chn-4", S, "CHN000", leaf(x, IsAllOf, std::vector<std::string>{"n2", "n4"}), leaf(x, HasPart, "n1"));
    b.pair("str-dia-1", S, "DIA000", leaf(x, IsAllOf, std::vector<std::string>{"left", "right"}), leaf(x, Eq, "bottom"), "multiple inheritance").analog = "ODRL172";
    b.pair("str-dia-2", S, "DIA000", leaf(x, IsA, "left"), leaf(x, IsA, "right")).analog = "ODRL173";
    b.pair("str-dia-3", S, "DIA000", leaf(x, HasPart, "bottom"), leaf(x, IsNoneOf, std::vector<std::string>{"top"})).analog = "ODRL174";
    b.pair("str-dia-4", S, "DIA000", leaf(x, Eq, "left"), leaf(x, IsA, "right"));
    b.pair("str-sng-1", S, "SNG000", leaf(x, Neq, "only"), leaf(x, Eq, "only"), "complement collapses to the empty set").analog = "ODRL095";
    b.pair("str-sng-2", S, "SNG000", leaf(x, IsA, "only"), leaf(x, Eq, "only")).analog = "ODRL175";
    b.pair("str-sng-3", S, "SNG000", leaf(x, IsNoneOf, std::vector<std::string>{"only"}), leaf(x, HasPart, "only")).analog = "ODRL176";
    b.pair("str-nms-1", S, "NMS000", leaf(x, IsA, "p"), leaf(x, IsA, "q"), "denotations overlap on exactly one concept").analog = "ODRL177";
    b.pair("str-nms-2", S, "NMS000", leaf(x, IsA, "a"), leaf(x, IsA, "q"), "near miss: no overlap").analog = "ODRL178";
    b.pair("str-nms-3", S, "NMS000", leaf(x, IsAnyOf, std::vector<std::string>{"a", "b"}), leaf(x, IsA, "shared"));
    b.pair("str-nms-4", S, "NMS000", leaf(x, HasPart, "shared"), leaf(x, IsNoneOf, std::vector<std::string>{"p"}));
}

void composition(Builder& b) {
    const std::string s = "spatial", pu = "purpose", la = "language", ch = "channel";
    b.composite("cmp-bsb", And({L(leaf(s, Eq, "France")), L(leaf(pu, Eq, "ScientificResearch")), L(leaf(la, Eq, "fr"))}),
                And({L(leaf(s, IsPartOf, "Europe")), L(leaf(pu, IsA, "NonCommercialPurpose")), L(leaf(la, IsA, "de"))}),
                "archive request from France, in French, for scientific research against the library policy")
        .analog = "BSB";
    b.composite("cmp-and-1", And({L(leaf(s, Eq, "Germany")), L(leaf(pu, Eq, "NonCommercialResearch")), L(leaf(la, Eq, "de-AT"))}),
                And({L(leaf(s, IsPartOf, "Europe")), L(leaf(pu, IsA, "NonCommercialPurpose")), L(leaf(la, IsA, "de"))}),
                "three-operand compatibility")
        .analog = "ODRL200";
    b.composite("cmp-and-2", And({L(leaf(s, Eq, "Germany")), L(leaf(pu, Eq, "NonCommercialResearch")), L(leaf(la, Eq, "fr"))}),
                And({L(leaf(s, IsPartOf, "Europe")), L(leaf(pu, IsA, "NonCommercialPurpose")), L(leaf(la, IsA, "de"))}),
                "language conflict in the third operand")
        .analog = "ODRL201";
    b.composite("cmp-and-3", And({L(leaf(s, Eq, "France")), L(leaf(pu, Eq, "ScientificResearch"))}),
                And({L(leaf(s, IsPartOf, "Europe")), L(leaf(pu, IsA, "NonCommercialPurpose"))}));
    b.composite("cmp-and-4", And({L(leaf(s, Eq, "Germany")), L(leaf(la, Eq, "de"))}),
                And({L(leaf(s, IsPartOf, "France")), L(leaf(la, IsA, "gem"))}));
    b.composite("cmp-and-5",
                And({L(leaf(s, Eq, "France")), L(leaf(pu, Eq, "NonCommercialResearch")), L(leaf(la, Eq, "fr")), L(leaf(ch, Eq, "sftp"))}),
                And({L(leaf(s, IsPartOf, "Europe")), L(leaf(pu, IsA, "NonCommercialPurpose")), L(leaf(la, IsA, "roa")),
                     L(leaf(ch, IsAnyOf, std::vector<std::string>{"sftp", "https"}))}),
                "four operands including a nominal channel");
    b.composite("cmp-or-1", L(leaf(pu, Eq, "ScientificResearch")),
                Or({L(leaf(pu, IsA, "NonCommercialPurpose")), L(leaf(pu, IsA, "ResearchAndDevelopment"))}),
                "one compatible branch settles the disjunction")
        .analog = "ODRL202";
    b.composite("cmp-or-2", L(leaf(la, Eq, "fr")), Or({L(leaf(la, IsA, "de")), L(leaf(la, IsA, "en"))})).analog = "ODRL203";
    b.composite("cmp-or-3", Or({L(leaf(la, Eq, "fr")), L(leaf(la, Eq, "de"))}), L(leaf(la, IsA, "gem")));
    b.composite("cmp-or-4", L(leaf(pu, Eq, "ServiceProvision")),
                Or({L(leaf(pu, IsA, "CommercialPurpose")), L(leaf(pu, IsA, "ResearchAndDevelopment"))}));
    b.composite("cmp-nested-1", And({L(leaf(s, Eq, "France")), L(leaf(pu, Eq, "ScientificResearch"))}),
                And({L(leaf(s, IsPartOf, "Europe")), Or({L(leaf(pu, IsA, "ResearchAndDevelopment")), L(leaf(pu, IsA, "CommercialPurpose"))})}),
                "spatial and a nested purpose disjunction")
        .analog = "ODRL206";
    b.composite("cmp-nested-2", And({L(leaf(s, Eq, "Germany")), L(leaf(pu, Eq, "NonCommercialResearch"))}),
                And({L(leaf(s, IsPartOf, "Europe")), Xone({L(leaf(pu, IsA, "CommercialPurpose")), L(leaf(pu, IsA, "NonCommercialPurpose"))})}));
    const auto commercial_xone = [&] {
        return Xone({L(leaf(pu, IsA, "CommercialPurpose")), L(leaf(pu, IsA, "NonCommercialPurpose"))});
    };
    b.composite("cmp-xone-1", L(leaf(pu, Eq, "NonCommercialResearch")), commercial_xone(),
                "explicit disjointness excludes the other branch")
        .analog = "ODRL085";
    b.composite("cmp-xone-2", L(leaf(pu, Eq, "CommercialResearch")), commercial_xone(),
                "no axiom excludes the other branch")
        .analog = "ODRL086";
    b.composite("cmp-xone-3", L(leaf(pu, Eq, "Marketing")), commercial_xone()).analog = "ODRL087";
    b.composite("cmp-xone-4", L(leaf(pu, Eq, "ServiceProvision")), commercial_xone()).analog = "ODRL088";
    b.composite("cmp-xone-5", L(leaf(la, Eq, "fr-CA")), Xone({L(leaf(la, IsA, "fr")), L(leaf(la, IsA, "roa"))}),
                "two compatible branches");
    b.composite("cmp-xone-6", L(leaf(ch, IsAnyOf, std::vector<std::string>{"sftp", "https"})),
                Xone({L(leaf(ch, Eq, "sftp")), L(leaf(ch, Eq, "email"))}));
    b.composite("cmp-group-1", And({L(leaf(s, IsPartOf, "Europe")), L(leaf(s, Neq, "Germany"))}), L(leaf(s, Eq, "Bavaria")),
                "same-operand constraints conjoined before pairing");
    b.composite("cmp-group-2", And({L(leaf(s, IsPartOf, "Europe")), L(leaf(s, Neq, "Germany"))}), L(leaf(s, Eq, "Germany")));
    b.composite("cmp-onesided", And({L(leaf(s, Eq, "France")), L(leaf(ch, Eq, "https"))}), And({L(leaf(s, IsPartOf, "Europe"))}),
                "operand constrained on one side only");
    b.composite("cmp-onesided-or", L(leaf(la, Eq, "fr")), Or({L(leaf(la, IsA, "de")), L(leaf(ch, Eq, "sftp"))}),
                "unpaired branch keeps the disjunction satisfiable");
    b.composite("cmp-onesided-left", Or({L(leaf(la, Eq, "fr")), L(leaf(ch, Eq, "sftp"))}), L(leaf(la, IsA, "de")),
                "unpaired branch on the requesting side");
    b.composite("cmp-noshared", L(leaf(s, Eq, "France")), L(leaf(la, IsA, "de")), "no shared operand");
    b.composite("cmp-nominal", L(leaf(ch, Eq, "sftp")), Or({L(leaf(ch, Eq, "https")), L(leaf(ch, Eq, "email"))}));
}

void alignment(Builder& b) {
    const std::string s = "spatial", pu = "purpose", la = "language", x = "x";
    const std::string geo = "GEO000-GEO001", dpv = "DPV000-DPV001", lng = "LNG000-LNG001", ex1 = "EX1A-EX1B";
    b.aligned("aln-geo-1", geo, "GEO000", "GEO001", leaf(s, Eq, "France"), leaf(s, IsPartOf, "France"));
    b.aligned("aln-geo-2", geo, "GEO000", "GEO001", leaf(s, Eq, "France"), leaf(s, IsPartOf, "Europe"),
              "europe has no witness-complete counterpart");
    b.aligned("aln-geo-3", geo, "GEO000", "GEO001", leaf(s, Eq, "Bavaria"), leaf(s, IsPartOf, "France"),
              "bavaria is absent from ISO 3166");
    b.aligned("aln-geo-4", geo, "GEO000", "GEO001", leaf(s, Eq, "France"), leaf(s, Neq, "France"));
    b.aligned("aln-geo-5", geo, "GEO000", "GEO001", leaf(s, HasPart, "France"), leaf(s, Eq, "France"));
    b.aligned("aln-geo-6", geo, "GEO000", "GEO001", leaf(s, IsAnyOf, std::vector<std::string>{"France"}), leaf(s, Eq, "France"));
    b.aligned("aln-dpv-1", dpv, "DPV000", "DPV001", leaf(pu, Eq, "NonCommercialResearch"), leaf(pu, IsA, "NonCommercialPurpose"));
    b.aligned("aln-dpv-2", dpv, "DPV000", "DPV001", leaf(pu, Eq, "CommercialResearch"), leaf(pu, IsA, "NonCommercialPurpose"));
    b.aligned("aln-dpv-3", dpv, "DPV000", "DPV001", leaf(pu, Eq, "NonCommercialResearch"), leaf(pu, IsA, "CommercialPurpose"),
              "conflict whose witness side is unmapped");
    b.aligned("aln-dpv-4", dpv, "DPV000", "DPV001", leaf(pu, Eq, "ScientificResearch"), leaf(pu, IsA, "ResearchAndDevelopment"));
    b.aligned("aln-dpv-5", dpv, "DPV000", "DPV001", leaf(pu, IsA, "ResearchAndDevelopment"), leaf(pu, IsA, "NonCommercialPurpose"));
    b.aligned("aln-dpv-6", dpv, "DPV000", "DPV001", leaf(pu, Eq, "NonCommercialResearch"), leaf(pu, Eq, "CommercialResearch"));
    b.aligned("aln-dpv-7", dpv, "DPV000", "DPV001", leaf(pu, IsAnyOf, std::vector<std::string>{"ScientificResearch", "CommercialResearch"}),
              leaf(pu, IsNoneOf, std::vector<std::string>{"NonCommercialPurpose"}));
    b.aligned("aln-dpv-8", dpv, "DPV000", "DPV001", leaf(pu, HasPart, "NonCommercialResearch"), leaf(pu, IsA, "ResearchAndDevelopment"));
    b.aligned("aln-dpv-9", dpv, "DPV000", "DPV001", leaf(pu, Neq, "ScientificResearch"), leaf(pu, Eq, "ScientificResearch"));
    b.aligned("aln-dpv-10", dpv, "DPV000", "DPV001",
              leaf(pu, IsAllOf, std::vector<std::string>{"ResearchAndDevelopment", "NonCommercialPurpose"}), leaf(pu, Eq, "NonCommercialResearch"));
    b.aligned("aln-lng-1", lng, "LNG000", "LNG001", leaf(la, Eq, "en"), leaf(la, IsA, "it"));
    b.aligned("aln-lng-2", lng, "LNG000", "LNG001", leaf(la, Eq, "en"), leaf(la, IsA, "gem"));
    b.aligned("aln-lng-3", lng, "LNG000", "LNG001", leaf(la, Eq, "fr"), leaf(la, IsA, "de"));
    b.aligned("aln-lng-4", lng, "LNG000", "LNG001", leaf(la, IsAnyOf, std::vector<std::string>{"en", "it"}), leaf(la, Eq, "it"));
    b.aligned("aln-ex1-1", ex1, "EX1A", "EX1B", leaf(x, IsA, "b"), leaf(x, IsA, "c"),
              "witness a is mapped, so the shared lower bound survives alignment")
        .analog = "WitnessLoss";
    b.aligned("aln-ex1-2", ex1, "EX1A", "EX1B", leaf(x, Eq, "a"), leaf(x, IsA, "b"));
    b.aligned("aln-ex1-3", ex1, "EX1A", "EX1B", leaf(x, Eq, "b"), leaf(x, Eq, "c"));
}

void runtime(Builder& b) {
    b.runtime("rt-070", "GEO000", leaf("spatial", Eq, "https://sws.geonames.org/3017382/"), leaf("spatial", IsPartOf, "Europe"),
              "witness extraction")
        .analog = "ODRL070";
    b.runtime("rt-071", "DPV000", leaf("purpose", Eq, "NonCommercialResearch"), leaf("purpose", IsA, "NonCommercialPurpose"))
        .analog = "ODRL071";
    b.runtime("rt-072", "LNG000", leaf("language", Eq, "fr"), leaf("language", IsA, "de"), "pointwise rejection").analog = "ODRL072";
    b.runtime("rt-073", "LNG000", leaf("language", IsA, "roa"), leaf("language", IsA, "gem"),
              "no language concept satisfies both constraints")
        .analog = "ODRL073";
    b.runtime("rt-074", "NOM000", leaf("channel", Eq, "sftp"), leaf("channel", Neq, "sftp")).analog = "ODRL074";
    b.runtime("rt-075", "DIA000", leaf("x", IsA, "left"), leaf("x", IsA, "right")).analog = "ODRL075";
}

struct Frozen {
    const char* id;
    Verdict open;
    Verdict closed;
};

// Generated by tools/freeze_expectations from the ground-instantiation
// oracle (open) and a direct set-semantics oracle (closed).
constexpr Verdict CONFLICT = Verdict::Conflict;
constexpr Verdict COMPATIBLE = Verdict::Compatible;
constexpr Verdict UNKNOWN = Verdict::Unknown;
constexpr Frozen kExpected[] = {
#include "bench_expected.inc"
};

}  // namespace

std::map<std::string, KbSpec> builtin_kbs() {
    std::map<std::string, KbSpec> out;
    for (auto s : {geo000(), geo001(), dpv000(), dpv001(), lng000(), lng001(), nom000(), chn000(), dia000(), sng000(),
                   nms000(), ex1a(), ex1b()}) {
        out.emplace(s.id, std::move(s));
    }
    return out;
}

std::map<std::string, Alignment> builtin_alignments() {
    std::map<std::string, Alignment> out;
    out["GEO000-GEO001"] = {"GEO000", "GEO001", {{"france", "FR"}}};
    out["DPV000-DPV001"] = {"DPV000",
                            "DPV001",
                            {{"research", "researchUse"},
                             {"scientificResearch", "scientificStudy"},
                             {"nonCommRes", "nonCommercialResearch"},
                             {"commRes", "commercialResearch"},
                             {"nonCommercial", "nonCommercialUse"}}};
    out["LNG000-LNG001"] = {"LNG000", "LNG001", {{"en", "eng"}, {"it", "ita"}}};
    out["EX1A-EX1B"] = {"EX1A", "EX1B", {{"a", "A"}, {"b", "B"}, {"c", "C"}}};
    return out;
}

Suite builtin_definitions() {
    Builder b;
    operator_coverage(b);
    cross_operator(b);
    structural(b);
    composition(b);
    alignment(b);
    runtime(b);
    Suite suite;
    suite.kbs = builtin_kbs();
    suite.alignments = builtin_alignments();
    suite.problems = std::move(b.problems);
    std::sort(suite.problems.begin(), suite.problems.end(), [](const auto& x, const auto& y) { return x.id < y.id; });
    return suite;
}

Suite build_builtin_suite() {
    Suite suite = builtin_definitions();
    std::map<std::string, const Frozen*> table;
    for (const auto& f : kExpected) table.emplace(f.id, &f);
    for (auto& p : suite.problems) {
        auto it = table.find(p.id);
        if (it == table.end()) throw std::logic_error("no frozen expectation for benchmark problem '" + p.id + "'");
        p.expected_open = it->second->open;
        p.expected_closed = it->second->closed;
    }
    return suite;
}

}  // namespace odrl::bench
