#pragma once

#include <cstdio>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace postergen::prompts {

// Prompt text builders for every agent call. Inputs are serialized
// deterministically (nlohmann keeps object keys sorted), which keeps
// request digests stable across runs.

inline std::string title_authors(const std::string& markdown) {
    return
        "You are an academic paper parser. Extract the paper title and the author "
        "list from the text below.\n\n"
        "Formatting rules:\n"
        "- Title: proper title case (first letter of each word capitalized), except "
        "established acronyms and technical terms that are conventionally uppercase; "
        "keep those in their original case.\n"
        "- Authors: initials plus surname, preserving middle initials. Examples: "
        "\"Kevin W. Jones\" -> \"K.W. Jones\", \"Yann LeCun\" -> \"Y. LeCun\", "
        "\"Mary Smith Johnson\" -> \"M.S. Johnson\". Separate authors with \", \". "
        "Drop all affiliations, emails, institutions, departments, and addresses.\n\n"
        "Required JSON structure:\n"
        "{\n  \"title\": \"Title With Proper Case Formatting\",\n"
        "  \"authors\": \"F. Author, S. Author, T. Author\"\n}\n\n"
        "Input text:\n" + markdown;
}

inline std::string abt_narrative(const std::string& markdown) {
    return
        "Distill the paper below into an And-But-Therefore narrative for a poster.\n\n"
        "Guidelines:\n"
        "- Each of and/but/therefore should be 1-2 concise sentences.\n"
        "- Write for a poster audience: lead with impact, avoid jargon.\n\n"
        "Required JSON structure:\n"
        "{\n"
        "  \"and\": \"Current knowledge and established facts (background context)\",\n"
        "  \"but\": \"Specific problem, gap, or challenge identified\",\n"
        "  \"therefore\": \"Your solution, contribution, and key findings\",\n"
        "  \"poster_hook\": \"One compelling sentence that grabs attention\",\n"
        "  \"key_impact\": \"Why this research matters (practical implications)\"\n"
        "}\n\n"
        "Paper content:\n" + markdown;
}

inline std::string structured_sections(const std::string& markdown, int max_words) {
    return
        "Extract the major sections of the paper below and organize them for poster "
        "creation.\n\n"
        "Rules:\n"
        "- Cover every major section (introduction, method, experiments, ...).\n"
        "- Keep each section's content under " + std::to_string(max_words) + " words.\n"
        "- Preserve key technical details and findings; drop citation clutter.\n"
        "- section_type is one of: foundation (introduction, background, motivation), "
        "method (approach, algorithm, system design), evaluation (experiments, "
        "results, analysis).\n"
        "- List the ids of figures/tables that belong to each section.\n\n"
        "Required JSON structure:\n"
        "{\n"
        "  \"paper_sections\": [\n"
        "    {\n"
        "      \"section_name\": \"Introduction\",\n"
        "      \"section_type\": \"foundation\",\n"
        "      \"content\": \"Main content of the section\",\n"
        "      \"key_points\": [\"...\"],\n"
        "      \"importance\": \"high|medium|low\",\n"
        "      \"contains_figures\": [\"figure_1\"],\n"
        "      \"contains_tables\": [\"table_1\"]\n"
        "    }\n"
        "  ],\n"
        "  \"paper_structure\": {\n"
        "    \"total_sections\": 5,\n"
        "    \"foundation_sections\": 2,\n"
        "    \"method_sections\": 2,\n"
        "    \"evaluation_sections\": 1\n"
        "  }\n"
        "}\n\n"
        "Paper text:\n" + markdown;
}

inline std::string classify_visuals(const nlohmann::json& visuals_with_captions) {
    return
        "Classify each visual asset below into exactly one category for column-aware "
        "poster placement.\n\n"
        "Categories:\n"
        "1. key_visual: the single most important method visual representing the core "
        "research innovation (max 1, middle column)\n"
        "2. problem_illustration: research problem, challenge, or motivation (left column)\n"
        "3. method_workflow: architecture, system diagram, algorithmic workflow (middle column)\n"
        "4. main_results: primary experimental results and key findings (right column)\n"
        "5. comparative_results: baseline comparisons, ablations, validation charts (right column)\n"
        "6. supporting: background or supplementary material (flexible placement)\n\n"
        "Required JSON output:\n"
        "{\n"
        "  \"key_visual\": \"visual_id or null\",\n"
        "  \"problem_illustration\": [\"visual_id1\"],\n"
        "  \"method_workflow\": [],\n"
        "  \"main_results\": [],\n"
        "  \"comparative_results\": [],\n"
        "  \"supporting\": []\n"
        "}\n"
        "Every visual id must appear exactly once across all categories.\n\n"
        "Available visuals with captions:\n" + visuals_with_captions.dump(2);
}

struct CuratorInputs {
    nlohmann::json structured_sections;
    nlohmann::json narrative;
    nlohmann::json classification;
    nlohmann::json visual_heights; // per id: rendered height + height percentage
    double available_height_in = 0.0;
    int min_sections = 5;
    int max_sections = 8;
    int min_visuals = 4;
    int max_visuals = 6;
};

inline std::string curator_storyboard(const CuratorInputs& in) {
    nlohmann::json inputs;
    inputs["structured_sections"] = in.structured_sections;
    inputs["narrative"] = in.narrative;
    inputs["classified_visuals"] = in.classification;
    inputs["visual_heights"] = in.visual_heights;
    inputs["available_height_per_column_in"] = in.available_height_in;
    return
        "You are an academic poster designer. Turn the parsed paper content below "
        "into a spatially organized three-column storyboard.\n\n"
        "Column strategy: left = foundation and context, middle = core methodology, "
        "right = results and impact.\n\n"
        "Hard constraints:\n"
        "- Create " + std::to_string(in.min_sections) + "-" + std::to_string(in.max_sections) +
        " sections; every column gets at least one.\n"
        "- Place the key visual in the middle column, top priority section.\n"
        "- Left column: 1-2 visual assets. Middle column: at most 2. Right column: at most 2.\n"
        "- Use " + std::to_string(in.min_visuals) + "-" + std::to_string(in.max_visuals) +
        " visual assets in total; each selected visual appears in exactly one section.\n"
        "- Any visual whose height percentage exceeds 50% must be excluded; if only one "
        "such visual is selected it may proceed, and when several exceed 50% keep only "
        "the one with the smallest height percentage.\n"
        "- Section titles: at most 4 words.\n"
        "- Do not create conclusion, takeaway, future work, or impact sections.\n"
        "- Write complete bullet points; never an ellipsis.\n\n"
        "Text content lines use this markup:\n"
        "  \"* Primary concept or finding\"\n"
        "  \"   - Supporting detail or sub-point\"\n"
        "  inline **bold** and *italic* emphasis.\n\n"
        "Required JSON structure:\n"
        "{\n"
        "  \"spatial_content_plan\": {\n"
        "    \"poster_strategy\": {\n"
        "      \"narrative_flow\": \"...\",\n"
        "      \"space_utilization_approach\": \"...\",\n"
        "      \"column_balance_rationale\": \"...\"\n"
        "    },\n"
        "    \"sections\": [\n"
        "      {\n"
        "        \"section_id\": \"unique_identifier\",\n"
        "        \"section_title\": \"Max 4 Words\",\n"
        "        \"column_assignment\": \"left|middle|right\",\n"
        "        \"vertical_priority\": \"top|middle|bottom\",\n"
        "        \"importance_level\": 1,\n"
        "        \"content_type\": \"foundation|method|results\",\n"
        "        \"text_content\": [\"* ...\"],\n"
        "        \"visual_assets\": [\n"
        "          {\"visual_id\": \"figure_1\", \"visual_purpose\": \"...\", "
        "\"placement_rationale\": \"...\"}\n"
        "        ]\n"
        "      }\n"
        "    ]\n"
        "  },\n"
        "  \"column_distribution\": {\n"
        "    \"left_column\": {\"focus\": \"...\", \"assigned_sections\": [\"...\"], "
        "\"content_strategy\": \"...\"},\n"
        "    \"middle_column\": {\"focus\": \"...\", \"assigned_sections\": [\"...\"], "
        "\"content_strategy\": \"...\"},\n"
        "    \"right_column\": {\"focus\": \"...\", \"assigned_sections\": [\"...\"], "
        "\"content_strategy\": \"...\"}\n"
        "  }\n"
        "}\n\n"
        "Inputs:\n" + inputs.dump(2);
}

struct BalancerInputs {
    nlohmann::json storyboard;
    nlohmann::json structured_sections;
    double left_utilization = 0.0;
    double middle_utilization = 0.0;
    double right_utilization = 0.0;
    std::string left_status, middle_status, right_status;
    std::string left_strategy, middle_strategy, right_strategy; // "A", "B", or "none"
    double available_height_in = 0.0;
};

inline std::string balancer(const BalancerInputs& in) {
    auto pct = [](double v) {
        char buf[16];
        std::snprintf(buf, sizeof(buf), "%.1f%%", v * 100.0);
        return std::string(buf);
    };
    nlohmann::json inputs;
    inputs["current_storyboard"] = in.storyboard;
    inputs["structured_sections"] = in.structured_sections;
    return
        "You are a poster layout optimization specialist. Rebalance the three-column "
        "storyboard below through conservative within-column edits only.\n\n"
        "Current column status:\n"
        "- Column 1 (left): " + pct(in.left_utilization) + " utilization - " + in.left_status +
        " -> apply strategy " + in.left_strategy + "\n"
        "- Column 2 (middle): " + pct(in.middle_utilization) + " utilization - " + in.middle_status +
        " -> apply strategy " + in.middle_strategy + "\n"
        "- Column 3 (right): " + pct(in.right_utilization) + " utilization - " + in.right_status +
        " -> apply strategy " + in.right_strategy + "\n"
        "- Available height per column: " + std::to_string(in.available_height_in) + " inches\n\n"
        "Target utilization: 85-95% for each column. Prefer slight underutilization "
        "over any risk of overflow.\n\n"
        "Strategy A - text adjustment (for columns at 80-100%):\n"
        "- Expand slightly when under target, shorten aggressively when near overflow.\n"
        "- Never change section ids, titles, column assignments, or visual assets.\n\n"
        "Strategy B - section management (for columns under 80% or over 100%):\n"
        "- Add sections drawn from the structured sections that fit the column's purpose, or\n"
        "- remove sections with importance_level 3 first, then level 2.\n"
        "- NEVER remove importance_level 1 sections or the section holding the key visual.\n\n"
        "Strict constraints:\n"
        "1. No cross-column moves for existing sections.\n"
        "2. Preserve the left-to-middle-to-right reading flow.\n"
        "3. Only columns marked with a strategy above may change.\n\n"
        "Output the complete optimized storyboard JSON with the same structure and "
        "field names as the input; each text_content entry must be a complete string.\n\n"
        "Inputs:\n" + inputs.dump(2);
}

inline std::string theme_color_vlm() {
    return
        "Extract a poster theme color from the attached affiliation logo.\n\n"
        "Pick the most prominent, meaningful brand color; ignore pure white, black, "
        "and very light grays. If the color is very bright (lightness > 85% or "
        "saturation > 90%), reduce its brightness by 15-25%; if it is very dark "
        "(lightness < 25%), lighten it slightly. Preserve the hue.\n\n"
        "Return ONLY a JSON object:\n"
        "{\n"
        "  \"extracted_color\": \"#1E3A8A\",\n"
        "  \"color_name\": \"Professional Navy Blue\",\n"
        "  \"adjustment_made\": \"reduced_brightness | lightened | none\",\n"
        "  \"original_color\": \"#0000FF\",\n"
        "  \"suitability_score\": 8.5,\n"
        "  \"reasoning\": \"...\",\n"
        "  \"usage_notes\": \"...\"\n"
        "}";
}

inline std::string keyword_extraction(const nlohmann::json& narrative,
                                      const nlohmann::json& curated_content) {
    nlohmann::json inputs;
    inputs["narrative"] = narrative;
    inputs["curated_content"] = curated_content;
    return
        "Identify keywords in the poster content below for strategic visual "
        "highlighting, using three styles.\n\n"
        "1. bold_contrast: novel method names unique to this work (max 2 per section, "
        "prefer 1).\n"
        "2. bold: important quantitative results and core technical terms (max 3 per "
        "section).\n"
        "3. italic: terms being defined, single-word emphasis, foreign terminology "
        "(max 2 per section).\n\n"
        "Required JSON structure:\n"
        "{\n"
        "  \"section_keywords\": {\n"
        "    \"<section_id>\": {\n"
        "      \"bold_contrast\": [\"...\"],\n"
        "      \"bold\": [\"...\"],\n"
        "      \"italic\": [\"...\"]\n"
        "    }\n"
        "  },\n"
        "  \"formatting_summary\": {\n"
        "    \"total_bold_contrast\": 0,\n"
        "    \"total_bold\": 0,\n"
        "    \"total_italic\": 0\n"
        "  }\n"
        "}\n\n"
        "Inputs:\n" + inputs.dump(2);
}

} // namespace postergen::prompts
