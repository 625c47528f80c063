#pragma once

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "postergen/bundle.hpp"
#include "postergen/gateway.hpp"
#include "postergen/ingest.hpp"
#include "postergen/prompts.hpp"

namespace postergen {

enum class Column { left, middle, right };
enum class VerticalPriority { top, middle, bottom };
enum class ContentType { foundation, method, results };

inline const char* to_string(Column c) {
    switch (c) {
    case Column::left: return "left";
    case Column::middle: return "middle";
    case Column::right: return "right";
    }
    return "?";
}

/// Content limits from the run configuration.
struct ContentConstraints {
    int min_sections = 5;
    int max_sections = 8;
    int min_visuals = 4;
    int max_visuals = 6;
    int max_words_per_section = 1000;
};

struct StoryboardVisual {
    std::string visual_id;
    std::string purpose;
    std::string rationale;
};

struct StoryboardSection {
    std::string section_id;
    std::string section_title;
    Column column = Column::left;
    VerticalPriority vertical_priority = VerticalPriority::middle;
    int importance_level = 2; // 1 = most important
    ContentType content_type = ContentType::foundation;
    std::vector<std::string> text_content; // markup lines
    std::vector<StoryboardVisual> visual_assets;
};

struct ColumnPlan {
    std::string focus;
    std::vector<std::string> assigned_sections;
    std::string content_strategy;
};

/// The curated spatial plan: sections mapped onto three columns before any
/// coordinates exist.
struct Storyboard {
    std::string narrative_flow;
    std::string space_utilization_approach;
    std::string column_balance_rationale;
    std::vector<StoryboardSection> sections;
    std::map<Column, ColumnPlan> column_distribution;

    std::vector<const StoryboardSection*> sections_in(Column c) const {
        std::vector<const StoryboardSection*> out;
        for (const auto& s : sections)
            if (s.column == c) out.push_back(&s);
        return out;
    }
};

/// Precomputed rendered height of one visual at column content width.
struct VisualHeightInfo {
    std::string visual_id;
    double rendered_height_in = 0.0;
    double height_pct = 0.0; // fraction of available column height
};

/// Height each asset occupies when rendered at the column content width.
inline std::vector<VisualHeightInfo> compute_visual_heights(
    const std::map<std::string, VisualAsset>& assets, double content_width_in,
    double available_height_in) {
    std::vector<VisualHeightInfo> out;
    for (const auto& [id, asset] : assets) {
        VisualHeightInfo info;
        info.visual_id = id;
        info.rendered_height_in = content_width_in * asset.height_px / asset.width_px;
        info.height_pct = info.rendered_height_in / available_height_in;
        out.push_back(info);
    }
    return out;
}

/// Oversized-visual rule: a visual taller than half the column must be
/// excluded, except that a single oversized selection may proceed; with
/// several, only the one with the smallest height percentage is kept.
inline std::vector<VisualHeightInfo> exclude_oversized(
    const std::vector<VisualHeightInfo>& selected) {
    std::vector<const VisualHeightInfo*> oversized;
    for (const auto& info : selected)
        if (info.height_pct > 0.50) oversized.push_back(&info);
    if (oversized.size() <= 1) return selected;

    const VisualHeightInfo* keep = *std::min_element(
        oversized.begin(), oversized.end(),
        [](const VisualHeightInfo* a, const VisualHeightInfo* b) {
            return a->height_pct < b->height_pct;
        });
    std::vector<VisualHeightInfo> out;
    for (const auto& info : selected)
        if (info.height_pct <= 0.50 || &info == keep) out.push_back(info);
    return out;
}

namespace detail {

inline Column parse_column(const std::string& s) {
    if (s == "left") return Column::left;
    if (s == "middle") return Column::middle;
    return Column::right;
}

inline VerticalPriority parse_priority(const std::string& s) {
    if (s == "top") return VerticalPriority::top;
    if (s == "middle") return VerticalPriority::middle;
    return VerticalPriority::bottom;
}

inline ContentType parse_content_type(const std::string& s) {
    if (s == "foundation") return ContentType::foundation;
    if (s == "method") return ContentType::method;
    return ContentType::results;
}

inline std::vector<std::string> lowercase_words(const std::string& text) {
    std::vector<std::string> words;
    std::string word;
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            if (!word.empty()) words.push_back(word);
            word.clear();
        } else {
            word += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        }
    }
    if (!word.empty()) words.push_back(word);
    return words;
}

} // namespace detail

inline Storyboard storyboard_from_json(const json& j) {
    Storyboard sb;
    const json& plan = j.at("spatial_content_plan");
    const json& strategy = plan.at("poster_strategy");
    sb.narrative_flow = strategy.at("narrative_flow").get<std::string>();
    sb.space_utilization_approach = strategy.at("space_utilization_approach").get<std::string>();
    sb.column_balance_rationale = strategy.at("column_balance_rationale").get<std::string>();
    for (const auto& s : plan.at("sections")) {
        StoryboardSection sec;
        sec.section_id = s.at("section_id").get<std::string>();
        sec.section_title = s.at("section_title").get<std::string>();
        sec.column = detail::parse_column(s.at("column_assignment").get<std::string>());
        sec.vertical_priority =
            detail::parse_priority(s.at("vertical_priority").get<std::string>());
        sec.importance_level = s.at("importance_level").get<int>();
        sec.content_type = detail::parse_content_type(s.at("content_type").get<std::string>());
        sec.text_content = s.at("text_content").get<std::vector<std::string>>();
        for (const auto& v : s.at("visual_assets"))
            sec.visual_assets.push_back({v.at("visual_id").get<std::string>(),
                                         v.at("visual_purpose").get<std::string>(),
                                         v.at("placement_rationale").get<std::string>()});
        sb.sections.push_back(std::move(sec));
    }
    const json& dist = j.at("column_distribution");
    const std::pair<Column, const char*> cols[] = {{Column::left, "left_column"},
                                                   {Column::middle, "middle_column"},
                                                   {Column::right, "right_column"}};
    for (const auto& [col, key] : cols) {
        const json& c = dist.at(key);
        sb.column_distribution[col] = {
            c.at("focus").get<std::string>(),
            c.at("assigned_sections").get<std::vector<std::string>>(),
            c.at("content_strategy").get<std::string>()};
    }
    return sb;
}

inline json storyboard_to_json(const Storyboard& sb) {
    json sections = json::array();
    for (const auto& s : sb.sections) {
        json visuals = json::array();
        for (const auto& v : s.visual_assets)
            visuals.push_back({{"visual_id", v.visual_id},
                               {"visual_purpose", v.purpose},
                               {"placement_rationale", v.rationale}});
        sections.push_back(
            {{"section_id", s.section_id},
             {"section_title", s.section_title},
             {"column_assignment", to_string(s.column)},
             {"vertical_priority", s.vertical_priority == VerticalPriority::top      ? "top"
                                   : s.vertical_priority == VerticalPriority::middle ? "middle"
                                                                                     : "bottom"},
             {"importance_level", s.importance_level},
             {"content_type", s.content_type == ContentType::foundation ? "foundation"
                              : s.content_type == ContentType::method   ? "method"
                                                                        : "results"},
             {"text_content", s.text_content},
             {"visual_assets", visuals}});
    }
    json dist;
    const std::pair<Column, const char*> cols[] = {{Column::left, "left_column"},
                                                   {Column::middle, "middle_column"},
                                                   {Column::right, "right_column"}};
    for (const auto& [col, key] : cols) {
        ColumnPlan plan;
        auto it = sb.column_distribution.find(col);
        if (it != sb.column_distribution.end()) plan = it->second;
        dist[key] = {{"focus", plan.focus},
                     {"assigned_sections", plan.assigned_sections},
                     {"content_strategy", plan.content_strategy}};
    }
    return {{"spatial_content_plan",
             {{"poster_strategy",
               {{"narrative_flow", sb.narrative_flow},
                {"space_utilization_approach", sb.space_utilization_approach},
                {"column_balance_rationale", sb.column_balance_rationale}}},
              {"sections", sections}}},
            {"column_distribution", dist}};
}

/// Exhaustive mechanical checks of the storyboard constraints. Returns
/// every breach; an accepted storyboard yields an empty list.
inline std::vector<std::string> validate_storyboard(
    const Storyboard& sb, const VisualClassification& classification,
    const std::vector<VisualHeightInfo>& heights,
    const ContentConstraints& limits = ContentConstraints{}) {
    std::vector<std::string> violations;

    const int count = static_cast<int>(sb.sections.size());
    if (count < limits.min_sections)
        violations.push_back("section count " + std::to_string(count) + " < " +
                             std::to_string(limits.min_sections));
    if (count > limits.max_sections)
        violations.push_back("section count " + std::to_string(count) + " > " +
                             std::to_string(limits.max_sections));

    std::set<std::string> ids;
    for (const auto& s : sb.sections)
        if (!ids.insert(s.section_id).second)
            violations.push_back("duplicate section id '" + s.section_id + "'");

    static const std::set<std::string> banned = {"conclusion", "conclusions", "takeaway",
                                                 "takeaways", "future", "impact"};
    for (const auto& s : sb.sections) {
        const auto words = detail::lowercase_words(s.section_title);
        if (words.size() > 4)
            violations.push_back("section '" + s.section_id + "' title exceeds 4 words");
        for (const auto& w : words)
            if (banned.count(w))
                violations.push_back("section '" + s.section_id +
                                     "' title contains banned word '" + w + "'");
        for (const auto& line : s.text_content)
            if (line.find("...") != std::string::npos ||
                line.find("…") != std::string::npos) {
                violations.push_back("section '" + s.section_id + "' text contains an ellipsis");
                break;
            }
    }

    std::map<Column, int> sections_per_column;
    std::map<Column, int> visuals_per_column;
    std::map<std::string, int> visual_uses;
    std::optional<Column> key_visual_column;
    for (const auto& s : sb.sections) {
        sections_per_column[s.column]++;
        for (const auto& v : s.visual_assets) {
            visuals_per_column[s.column]++;
            visual_uses[v.visual_id]++;
            if (classification.key_visual && v.visual_id == *classification.key_visual)
                key_visual_column = s.column;
        }
    }

    for (Column c : {Column::left, Column::middle, Column::right})
        if (sections_per_column[c] == 0)
            violations.push_back(std::string(to_string(c)) + " column has no sections");

    if (classification.key_visual) {
        if (!key_visual_column)
            violations.push_back("key visual '" + *classification.key_visual +
                                 "' is not placed");
        else if (*key_visual_column != Column::middle)
            violations.push_back("key visual must be middle column");
    }

    if (visuals_per_column[Column::left] < 1)
        violations.push_back("left column has " +
                             std::to_string(visuals_per_column[Column::left]) +
                             " visuals < 1");
    const std::pair<Column, const char*> caps[] = {
        {Column::left, "left"}, {Column::middle, "middle"}, {Column::right, "right"}};
    for (const auto& [col, name] : caps)
        if (visuals_per_column[col] > 2)
            violations.push_back(std::string(name) + " column has " +
                                 std::to_string(visuals_per_column[col]) + " visuals > 2");

    int total_visuals = 0;
    for (const auto& [id, uses] : visual_uses) {
        total_visuals += uses;
        if (uses > 1) violations.push_back(id + " appears twice");
    }
    if (total_visuals < limits.min_visuals)
        violations.push_back("total visuals " + std::to_string(total_visuals) +
                             " below minimum " + std::to_string(limits.min_visuals));
    if (total_visuals > limits.max_visuals)
        violations.push_back("total visuals " + std::to_string(total_visuals) +
                             " above maximum " + std::to_string(limits.max_visuals));

    std::map<std::string, const VisualHeightInfo*> by_id;
    for (const auto& info : heights) by_id[info.visual_id] = &info;
    std::vector<VisualHeightInfo> placed;
    for (const auto& [id, uses] : visual_uses) {
        auto it = by_id.find(id);
        if (it == by_id.end()) {
            violations.push_back(id + " is not a known asset");
            continue;
        }
        placed.push_back(*it->second);
    }
    const auto retained = exclude_oversized(placed);
    if (retained.size() != placed.size()) {
        std::set<std::string> kept;
        for (const auto& info : retained) kept.insert(info.visual_id);
        for (const auto& info : placed)
            if (!kept.count(info.visual_id)) {
                char pct[16];
                std::snprintf(pct, sizeof(pct), "%.0f%%", info.height_pct * 100.0);
                violations.push_back("oversized visual '" + info.visual_id + "' (" + pct +
                                     " of column height) must be excluded");
            }
    }

    return violations;
}

/// Runs the curator agent: prompts for a storyboard, re-prompting on hard
/// violations up to the retry budget.
inline Storyboard build_storyboard(const std::vector<StructuredSection>& sections,
                                   const AbtNarrative& narrative,
                                   const VisualClassification& classification,
                                   const std::vector<VisualHeightInfo>& heights,
                                   const LlmGateway& gw, double available_height_in,
                                   const ContentConstraints& limits = ContentConstraints{}) {
    register_builtin_schemas();
    if (!classification.key_visual)
        throw CurationError("classification has no key visual");

    json heights_json = json::array();
    for (const auto& info : heights)
        heights_json.push_back({{"visual_id", info.visual_id},
                                {"rendered_height_in", info.rendered_height_in},
                                {"height_pct", info.height_pct}});

    prompts::CuratorInputs inputs;
    inputs.structured_sections = sections_to_json(sections);
    inputs.narrative = narrative.to_json();
    inputs.classification = classification.to_json();
    inputs.visual_heights = heights_json;
    inputs.available_height_in = available_height_in;
    inputs.min_sections = limits.min_sections;
    inputs.max_sections = limits.max_sections;
    inputs.min_visuals = limits.min_visuals;
    inputs.max_visuals = limits.max_visuals;

    const auto req = ChatRequest::user("curator", prompts::curator_storyboard(inputs));
    try {
        const json j = gw.complete_json(req, "storyboard", [&](const json& v) {
            const auto violations =
                validate_storyboard(storyboard_from_json(v), classification, heights, limits);
            if (!violations.empty()) {
                std::string joined;
                for (const auto& violation : violations) {
                    if (!joined.empty()) joined += "; ";
                    joined += violation;
                }
                throw ValidationError("storyboard violations: " + joined);
            }
        });
        return storyboard_from_json(j);
    } catch (const SchemaError& e) {
        throw CurationError(std::string("curator failed: ") + e.what());
    }
}

} // namespace postergen
