#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "postergen/bundle.hpp"
#include "postergen/gateway.hpp"
#include "postergen/prompts.hpp"
#include "postergen/schemas.hpp"

namespace postergen {

struct TitleAuthors {
    std::string title;
    std::string authors; // comma-separated initials form
};

struct AbtNarrative {
    std::string and_part;
    std::string but_part;
    std::string therefore_part;
    std::string poster_hook;
    std::string key_impact;

    json to_json() const {
        return {{"and", and_part},
                {"but", but_part},
                {"therefore", therefore_part},
                {"poster_hook", poster_hook},
                {"key_impact", key_impact}};
    }
};

enum class SectionType { foundation, method, evaluation };
enum class Importance { high, medium, low };

struct StructuredSection {
    std::string section_name;
    SectionType section_type = SectionType::foundation;
    std::string content;
    std::vector<std::string> key_points;
    Importance importance = Importance::medium;
    std::vector<std::string> contains_figures;
    std::vector<std::string> contains_tables;
};

struct VisualClassification {
    std::optional<std::string> key_visual;
    std::vector<std::string> problem_illustration;
    std::vector<std::string> method_workflow;
    std::vector<std::string> main_results;
    std::vector<std::string> comparative_results;
    std::vector<std::string> supporting;

    json to_json() const {
        json j;
        j["key_visual"] = key_visual ? json(*key_visual) : json(nullptr);
        j["problem_illustration"] = problem_illustration;
        j["method_workflow"] = method_workflow;
        j["main_results"] = main_results;
        j["comparative_results"] = comparative_results;
        j["supporting"] = supporting;
        return j;
    }
};

/// Whitespace-delimited token count; punctuation is not split off.
inline int word_count(const std::string& text) {
    std::istringstream in(text);
    std::string token;
    int n = 0;
    while (in >> token) ++n;
    return n;
}

/// Counts sentences by terminal punctuation runs ('.', '!', '?').
inline int sentence_count(const std::string& text) {
    int n = 0;
    bool in_terminal = false;
    for (char c : text) {
        const bool terminal = c == '.' || c == '!' || c == '?';
        if (terminal && !in_terminal) ++n;
        in_terminal = terminal;
    }
    return n;
}

namespace detail {

inline bool is_initials_block(const std::string& part) {
    // "K." or "K.W." style
    if (part.size() < 2 || part.size() % 2 != 0) return false;
    for (std::size_t i = 0; i < part.size(); i += 2)
        if (!std::isupper(static_cast<unsigned char>(part[i])) || part[i + 1] != '.')
            return false;
    return true;
}

inline std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> parts;
    std::string p;
    while (in >> p) parts.push_back(p);
    return parts;
}

} // namespace detail

/// Normalizes one author name to initials-plus-surname form:
/// "Mary Smith Johnson" -> "M.S. Johnson". Already-initialed parts pass
/// through unchanged.
inline std::string normalize_author(const std::string& name) {
    const auto parts = detail::split_ws(name);
    if (parts.size() <= 1) return name;
    std::string initials;
    for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
        if (detail::is_initials_block(parts[i]))
            initials += parts[i];
        else
            initials += std::string(1, parts[i][0]) + ".";
    }
    return initials + " " + parts.back();
}

inline std::vector<std::string> split_authors(const std::string& authors) {
    std::vector<std::string> out;
    std::string current;
    std::istringstream in(authors);
    while (std::getline(in, current, ',')) {
        const auto b = current.find_first_not_of(" \t");
        if (b == std::string::npos) continue;
        const auto e = current.find_last_not_of(" \t");
        out.push_back(current.substr(b, e - b + 1));
    }
    return out;
}

/// Author-string shape checks: initials-then-surname tokens, no obvious
/// affiliation or email residue.
inline std::vector<std::string> validate_authors(const std::string& authors) {
    std::vector<std::string> problems;
    if (authors.find('@') != std::string::npos)
        problems.push_back("authors contain an email address");
    std::string lowered = authors;
    std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    for (const char* word : {"university", "institute", "department", "college",
                             "laboratory", ".edu"})
        if (lowered.find(word) != std::string::npos)
            problems.push_back(std::string("authors contain affiliation text: ") + word);
    for (const auto& token : split_authors(authors)) {
        const auto parts = detail::split_ws(token);
        if (parts.size() < 2 || !detail::is_initials_block(parts.front()))
            problems.push_back("author '" + token + "' is not in initials-surname form");
    }
    return problems;
}

/// Extracts title and authors via the gateway, normalizing the author list
/// to initials form and validating its shape.
inline TitleAuthors extract_title_authors(const PaperBundle& bundle, const LlmGateway& gw) {
    register_builtin_schemas();
    const auto req = ChatRequest::user("parser.title_authors",
                                       prompts::title_authors(bundle.markdown_text));
    const json j = gw.complete_json(req, "title_authors");

    TitleAuthors out;
    out.title = j.at("title").get<std::string>();
    std::string normalized;
    for (const auto& author : split_authors(j.at("authors").get<std::string>())) {
        if (!normalized.empty()) normalized += ", ";
        normalized += normalize_author(author);
    }
    out.authors = normalized;
    const auto problems = validate_authors(out.authors);
    if (!problems.empty())
        throw ValidationError("author format: " + problems.front());
    return out;
}

/// Extracts the five-field ABT narrative. Over-long and/but/therefore
/// parts (more than two sentences) are warnings, not failures.
inline AbtNarrative extract_narrative(const PaperBundle& bundle, const LlmGateway& gw,
                                      Diagnostics& diag) {
    register_builtin_schemas();
    const auto req =
        ChatRequest::user("parser.narrative", prompts::abt_narrative(bundle.markdown_text));
    const json j = gw.complete_json(req, "abt_narrative", [](const json& v) {
        for (const char* key : {"and", "but", "therefore", "poster_hook", "key_impact"})
            if (v.at(key).get<std::string>().empty())
                throw ValidationError(std::string("narrative field '") + key + "' is empty");
    });

    AbtNarrative out;
    out.and_part = j.at("and").get<std::string>();
    out.but_part = j.at("but").get<std::string>();
    out.therefore_part = j.at("therefore").get<std::string>();
    out.poster_hook = j.at("poster_hook").get<std::string>();
    out.key_impact = j.at("key_impact").get<std::string>();

    const std::pair<const char*, const std::string*> parts[] = {
        {"and", &out.and_part}, {"but", &out.but_part}, {"therefore", &out.therefore_part}};
    for (const auto& [name, text] : parts) {
        const int sentences = sentence_count(*text);
        if (sentences > 2)
            diag.warn("narrative '" + std::string(name) + "' has " +
                      std::to_string(sentences) + " sentences (guideline is 1-2)");
    }
    return out;
}

inline SectionType parse_section_type(const std::string& s) {
    if (s == "foundation") return SectionType::foundation;
    if (s == "method") return SectionType::method;
    return SectionType::evaluation;
}

inline Importance parse_importance(const std::string& s) {
    if (s == "high") return Importance::high;
    if (s == "medium") return Importance::medium;
    return Importance::low;
}

inline json sections_to_json(const std::vector<StructuredSection>& sections) {
    json arr = json::array();
    for (const auto& s : sections) {
        json j;
        j["section_name"] = s.section_name;
        j["section_type"] = s.section_type == SectionType::foundation ? "foundation"
                            : s.section_type == SectionType::method   ? "method"
                                                                      : "evaluation";
        j["content"] = s.content;
        j["key_points"] = s.key_points;
        j["importance"] = s.importance == Importance::high     ? "high"
                          : s.importance == Importance::medium ? "medium"
                                                                : "low";
        j["contains_figures"] = s.contains_figures;
        j["contains_tables"] = s.contains_tables;
        arr.push_back(j);
    }
    return arr;
}

/// Extracts structured sections and enforces the word limit and asset-id
/// references deterministically.
inline std::vector<StructuredSection> extract_sections(const PaperBundle& bundle,
                                                       const LlmGateway& gw,
                                                       int max_words = 1000) {
    register_builtin_schemas();
    const auto req = ChatRequest::user(
        "parser.sections", prompts::structured_sections(bundle.markdown_text, max_words));

    const auto domain_check = [&](const json& v) {
        int foundation = 0, method = 0, evaluation = 0;
        for (const auto& s : v.at("paper_sections")) {
            const auto name = s.at("section_name").get<std::string>();
            const int words = word_count(s.at("content").get<std::string>());
            if (words > max_words)
                throw ValidationError(name + ": " + std::to_string(words) +
                                      " words exceeds " + std::to_string(max_words));
            const auto type = s.at("section_type").get<std::string>();
            if (type == "foundation") ++foundation;
            else if (type == "method") ++method;
            else ++evaluation;
            for (const char* key : {"contains_figures", "contains_tables"})
                for (const auto& id : s.at(key))
                    if (!bundle.assets.count(id.get<std::string>()))
                        throw ValidationError(name + ": references unknown asset '" +
                                              id.get<std::string>() + "'");
        }
        const json& structure = v.at("paper_structure");
        const auto total = static_cast<int>(v.at("paper_sections").size());
        if (structure.at("total_sections").get<int>() != total ||
            structure.at("foundation_sections").get<int>() != foundation ||
            structure.at("method_sections").get<int>() != method ||
            structure.at("evaluation_sections").get<int>() != evaluation)
            throw ValidationError("paper_structure counts do not match the section list");
    };

    const json j = gw.complete_json(req, "structured_sections", domain_check);
    std::vector<StructuredSection> out;
    for (const auto& s : j.at("paper_sections")) {
        StructuredSection sec;
        sec.section_name = s.at("section_name").get<std::string>();
        sec.section_type = parse_section_type(s.at("section_type").get<std::string>());
        sec.content = s.at("content").get<std::string>();
        sec.key_points = s.at("key_points").get<std::vector<std::string>>();
        sec.importance = parse_importance(s.at("importance").get<std::string>());
        sec.contains_figures = s.at("contains_figures").get<std::vector<std::string>>();
        sec.contains_tables = s.at("contains_tables").get<std::vector<std::string>>();
        out.push_back(std::move(sec));
    }
    return out;
}

/// Every bundle asset id must land in exactly one category; at most one
/// key visual. Returns all breaches.
inline std::vector<std::string> check_classification_partition(
    const VisualClassification& c, const std::set<std::string>& asset_ids) {
    std::vector<std::string> problems;
    std::map<std::string, int> seen;
    if (c.key_visual) seen[*c.key_visual]++;
    for (const auto* list : {&c.problem_illustration, &c.method_workflow, &c.main_results,
                             &c.comparative_results, &c.supporting})
        for (const auto& id : *list) seen[id]++;
    for (const auto& [id, count] : seen) {
        if (!asset_ids.count(id))
            problems.push_back(id + " is not a bundle asset");
        if (count > 1)
            problems.push_back(id + " appears twice");
    }
    for (const auto& id : asset_ids)
        if (!seen.count(id)) problems.push_back(id + " missing from all categories");
    return problems;
}

/// Classifies the bundle's visual assets into the six narrative-role
/// categories; the partition invariant is enforced on the response.
inline VisualClassification classify_visuals(const PaperBundle& bundle, const LlmGateway& gw) {
    register_builtin_schemas();
    if (bundle.assets.empty())
        throw ValidationError("bundle has no visual assets to classify");

    json visuals = json::array();
    std::set<std::string> ids;
    for (const auto& [id, asset] : bundle.assets) {
        ids.insert(id);
        visuals.push_back({{"id", id},
                           {"kind", asset.kind == AssetKind::figure ? "figure" : "table"},
                           {"caption", asset.caption}});
    }
    const auto req =
        ChatRequest::user("parser.visuals", prompts::classify_visuals(visuals));

    const auto parse = [](const json& v) {
        VisualClassification c;
        if (v.at("key_visual").is_string())
            c.key_visual = v.at("key_visual").get<std::string>();
        c.problem_illustration = v.at("problem_illustration").get<std::vector<std::string>>();
        c.method_workflow = v.at("method_workflow").get<std::vector<std::string>>();
        c.main_results = v.at("main_results").get<std::vector<std::string>>();
        c.comparative_results = v.at("comparative_results").get<std::vector<std::string>>();
        c.supporting = v.at("supporting").get<std::vector<std::string>>();
        return c;
    };

    const json j = gw.complete_json(req, "visual_classification", [&](const json& v) {
        const auto problems = check_classification_partition(parse(v), ids);
        if (!problems.empty())
            throw ValidationError("classification partition: " + problems.front());
    });
    return parse(j);
}

} // namespace postergen
