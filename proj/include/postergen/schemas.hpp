#pragma once

#include <string>

#include "postergen/gateway.hpp"

namespace postergen {

namespace schema_detail {

inline void need_object(const json& j, const std::string& what) {
    if (!j.is_object()) throw SchemaError(what + " must be a JSON object");
}

inline const json& need_key(const json& obj, const char* key, const std::string& ctx) {
    if (!obj.is_object() || !obj.contains(key))
        throw SchemaError("missing key '" + std::string(key) + "' in " + ctx);
    return obj.at(key);
}

inline std::string need_string(const json& obj, const char* key, const std::string& ctx) {
    const json& v = need_key(obj, key, ctx);
    if (!v.is_string())
        throw SchemaError("key '" + std::string(key) + "' in " + ctx + " must be a string");
    return v.get<std::string>();
}

inline int need_int(const json& obj, const char* key, const std::string& ctx) {
    const json& v = need_key(obj, key, ctx);
    if (!v.is_number_integer())
        throw SchemaError("key '" + std::string(key) + "' in " + ctx + " must be an integer");
    return v.get<int>();
}

inline const json& need_array(const json& obj, const char* key, const std::string& ctx) {
    const json& v = need_key(obj, key, ctx);
    if (!v.is_array())
        throw SchemaError("key '" + std::string(key) + "' in " + ctx + " must be an array");
    return v;
}

inline void need_string_array(const json& obj, const char* key, const std::string& ctx) {
    for (const auto& item : need_array(obj, key, ctx))
        if (!item.is_string())
            throw SchemaError("key '" + std::string(key) + "' in " + ctx +
                              " must contain only strings");
}

inline void need_enum(const json& obj, const char* key,
                      std::initializer_list<const char*> allowed, const std::string& ctx) {
    const std::string v = need_string(obj, key, ctx);
    for (const char* a : allowed)
        if (v == a) return;
    throw SchemaError("key '" + std::string(key) + "' in " + ctx + " has unknown value '" + v + "'");
}

} // namespace schema_detail

/// Registers the structural validators for every JSON response shape the
/// agents consume. Idempotent; call before using complete_json.
inline void register_builtin_schemas() {
    static const bool once = [] {
        using namespace schema_detail;
        auto& reg = SchemaRegistry::instance();

        reg.add("title_authors", [](const json& j) {
            need_object(j, "title/authors response");
            if (need_string(j, "title", "title/authors response").empty())
                throw SchemaError("key 'title' must be non-empty");
            need_string(j, "authors", "title/authors response");
        });

        reg.add("abt_narrative", [](const json& j) {
            need_object(j, "narrative response");
            for (const char* key : {"and", "but", "therefore", "poster_hook", "key_impact"})
                need_string(j, key, "narrative response");
        });

        reg.add("structured_sections", [](const json& j) {
            need_object(j, "sections response");
            const json& sections = need_array(j, "paper_sections", "sections response");
            if (sections.empty()) throw SchemaError("'paper_sections' must be non-empty");
            for (const auto& s : sections) {
                const std::string ctx =
                    "section '" + (s.is_object() && s.contains("section_name") &&
                                           s.at("section_name").is_string()
                                       ? s.at("section_name").get<std::string>()
                                       : std::string("?")) +
                    "'";
                need_string(s, "section_name", ctx);
                need_enum(s, "section_type", {"foundation", "method", "evaluation"}, ctx);
                need_string(s, "content", ctx);
                need_string_array(s, "key_points", ctx);
                need_enum(s, "importance", {"high", "medium", "low"}, ctx);
                need_string_array(s, "contains_figures", ctx);
                need_string_array(s, "contains_tables", ctx);
            }
            const json& structure = need_key(j, "paper_structure", "sections response");
            for (const char* key : {"total_sections", "foundation_sections", "method_sections",
                                    "evaluation_sections"})
                need_int(structure, key, "paper_structure");
        });

        reg.add("visual_classification", [](const json& j) {
            need_object(j, "classification response");
            const json& kv = need_key(j, "key_visual", "classification response");
            if (!kv.is_string() && !kv.is_null())
                throw SchemaError("key 'key_visual' must be a string or null");
            for (const char* key : {"problem_illustration", "method_workflow", "main_results",
                                    "comparative_results", "supporting"})
                need_string_array(j, key, "classification response");
        });

        reg.add("storyboard", [](const json& j) {
            need_object(j, "storyboard response");
            const json& plan = need_key(j, "spatial_content_plan", "storyboard response");
            const json& strategy = need_key(plan, "poster_strategy", "spatial_content_plan");
            for (const char* key :
                 {"narrative_flow", "space_utilization_approach", "column_balance_rationale"})
                need_string(strategy, key, "poster_strategy");
            const json& sections = need_array(plan, "sections", "spatial_content_plan");
            for (const auto& s : sections) {
                const std::string ctx =
                    "storyboard section '" + (s.is_object() && s.contains("section_id") &&
                                                      s.at("section_id").is_string()
                                                  ? s.at("section_id").get<std::string>()
                                                  : std::string("?")) +
                    "'";
                need_string(s, "section_id", ctx);
                need_string(s, "section_title", ctx);
                need_enum(s, "column_assignment", {"left", "middle", "right"}, ctx);
                need_enum(s, "vertical_priority", {"top", "middle", "bottom"}, ctx);
                const int level = need_int(s, "importance_level", ctx);
                if (level < 1 || level > 3)
                    throw SchemaError("importance_level in " + ctx + " must be 1, 2, or 3");
                need_enum(s, "content_type", {"foundation", "method", "results"}, ctx);
                need_string_array(s, "text_content", ctx);
                for (const auto& v : need_array(s, "visual_assets", ctx)) {
                    need_string(v, "visual_id", ctx);
                    need_string(v, "visual_purpose", ctx);
                    need_string(v, "placement_rationale", ctx);
                }
            }
            const json& dist = need_key(j, "column_distribution", "storyboard response");
            for (const char* col : {"left_column", "middle_column", "right_column"}) {
                const json& c = need_key(dist, col, "column_distribution");
                need_string(c, "focus", col);
                need_string_array(c, "assigned_sections", col);
                need_string(c, "content_strategy", col);
            }
        });

        reg.add("keyword_plan", [](const json& j) {
            need_object(j, "keyword response");
            const json& sections = need_key(j, "section_keywords", "keyword response");
            need_object(sections, "section_keywords");
            for (const auto& [id, entry] : sections.items()) {
                for (const char* key : {"bold_contrast", "bold", "italic"})
                    need_string_array(entry, key, "keywords for '" + id + "'");
            }
        });

        reg.add("theme_color", [](const json& j) {
            need_object(j, "theme color response");
            const std::string hex = need_string(j, "extracted_color", "theme color response");
            if (hex.size() != 7 || hex[0] != '#')
                throw SchemaError("'extracted_color' must look like #RRGGBB");
        });

        return true;
    }();
    (void)once;
}

} // namespace postergen
