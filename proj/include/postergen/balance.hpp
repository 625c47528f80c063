#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "postergen/layout.hpp"

namespace postergen {

struct BalanceOutcome {
    Storyboard storyboard;
    UtilizationReport report;
    int iterations = 0;
    bool invoked = false;
};

namespace detail {

inline std::string strategy_for(double fraction, double lo, double hi) {
    if (fraction >= lo && fraction <= hi) return "none";
    if (fraction >= 0.80 && fraction <= 1.00) return "A";
    return "B";
}

struct SectionFingerprint {
    std::string title;
    Column column;
    int importance_level;
    std::vector<std::string> visual_ids;
};

inline std::map<std::string, SectionFingerprint> fingerprints(const Storyboard& sb) {
    std::map<std::string, SectionFingerprint> out;
    for (const auto& s : sb.sections) {
        SectionFingerprint fp{s.section_title, s.column, s.importance_level, {}};
        for (const auto& v : s.visual_assets) fp.visual_ids.push_back(v.visual_id);
        out[s.section_id] = std::move(fp);
    }
    return out;
}

/// Mechanical checks of a balancer revision against the strategy rules.
inline std::vector<std::string> check_revision(const Storyboard& before,
                                               const Storyboard& after,
                                               const std::map<Column, std::string>& strategy) {
    std::vector<std::string> problems;
    const auto old_fp = fingerprints(before);
    const auto new_fp = fingerprints(after);

    for (const auto& [id, fp] : old_fp) {
        auto it = new_fp.find(id);
        const std::string strat = strategy.at(fp.column);
        if (it == new_fp.end()) {
            if (fp.importance_level == 1)
                problems.push_back("removed importance-level-1 section '" + id + "'");
            else if (strat != "B")
                problems.push_back("removed section '" + id + "' from a strategy-" + strat +
                                   " column");
            continue;
        }
        if (it->second.column != fp.column)
            problems.push_back("section '" + id + "' moved across columns");
        if (it->second.title != fp.title)
            problems.push_back("section '" + id + "' title changed");
        if (it->second.visual_ids != fp.visual_ids)
            problems.push_back("section '" + id + "' visual assets changed");
    }
    for (const auto& [id, fp] : new_fp) {
        if (old_fp.count(id)) continue;
        if (strategy.at(fp.column) != "B")
            problems.push_back("added section '" + id + "' to a strategy-" +
                               strategy.at(fp.column) + " column");
        if (fp.importance_level == 1)
            problems.push_back("added section '" + id + "' with importance level 1");
    }
    return problems;
}

} // namespace detail

/// Iterative column balancing. Columns inside the target band stay
/// untouched; columns in [0.80, 1.00] get conservative text edits
/// (strategy A), columns beyond get section management (strategy B).
/// Each revision is re-laid-out and re-measured; the loop keeps the best
/// overflow-free board and stops early once every column lands in
/// [0.80, 1.00].
inline BalanceOutcome balance_columns(const Storyboard& sb, const UtilizationReport& initial,
                                      const std::vector<StructuredSection>& structured,
                                      const VisualClassification& classification,
                                      const std::vector<VisualHeightInfo>& heights,
                                      const LlmGateway& gw, const LayoutContext& ctx,
                                      const ContentConstraints& limits = ContentConstraints{}) {
    register_builtin_schemas();
    const LayoutConfig& cfg = ctx.config;

    BalanceOutcome outcome{sb, initial, 0, false};
    if (initial.all_within(cfg.util_lo, cfg.util_hi)) return outcome;
    outcome.invoked = true;

    auto count_filled = [](const UtilizationReport& r) {
        int n = 0;
        for (const auto& c : r.columns)
            if (c.fraction >= 0.80 && c.fraction <= 1.00) ++n;
        return n;
    };

    std::optional<BalanceOutcome> best;
    if (!initial.any_overflow()) best = outcome;

    Storyboard current = sb;
    UtilizationReport report = initial;
    for (int iter = 0; iter < cfg.balancer_max_iterations; ++iter) {
        const std::map<Column, std::string> strategy = {
            {Column::left, detail::strategy_for(report.columns[0].fraction, cfg.util_lo, cfg.util_hi)},
            {Column::middle, detail::strategy_for(report.columns[1].fraction, cfg.util_lo, cfg.util_hi)},
            {Column::right, detail::strategy_for(report.columns[2].fraction, cfg.util_lo, cfg.util_hi)}};

        prompts::BalancerInputs inputs;
        inputs.storyboard = storyboard_to_json(current);
        inputs.structured_sections = sections_to_json(structured);
        inputs.left_utilization = report.columns[0].fraction;
        inputs.middle_utilization = report.columns[1].fraction;
        inputs.right_utilization = report.columns[2].fraction;
        inputs.left_status = to_string(report.columns[0].status);
        inputs.middle_status = to_string(report.columns[1].status);
        inputs.right_status = to_string(report.columns[2].status);
        inputs.left_strategy = strategy.at(Column::left);
        inputs.middle_strategy = strategy.at(Column::middle);
        inputs.right_strategy = strategy.at(Column::right);
        inputs.available_height_in = cfg.available_column_height();

        const auto req = ChatRequest::user("balancer", prompts::balancer(inputs));
        json revised_json;
        try {
            revised_json = gw.complete_json(req, "storyboard", [&](const json& v) {
                const Storyboard revised = storyboard_from_json(v);
                auto problems = detail::check_revision(current, revised, strategy);
                const auto board_violations =
                    validate_storyboard(revised, classification, heights, limits);
                problems.insert(problems.end(), board_violations.begin(),
                                board_violations.end());
                if (!problems.empty()) {
                    std::string joined;
                    for (const auto& p : problems) {
                        if (!joined.empty()) joined += "; ";
                        joined += p;
                    }
                    throw ValidationError("balancer revision rejected: " + joined);
                }
            });
        } catch (const SchemaError& e) {
            throw BalanceError(std::string("balancer failed: ") + e.what());
        }

        current = storyboard_from_json(revised_json);
        report = compute_utilization(layout_columns(current, ctx));
        outcome.iterations = iter + 1;

        if (!report.any_overflow()) {
            BalanceOutcome candidate{current, report, iter + 1, true};
            if (!best || count_filled(report) > count_filled(best->report))
                best = candidate;
            if (count_filled(report) == 3) {
                best = candidate;
                break;
            }
        }
    }

    if (!best)
        throw BalanceError("column balancing exhausted " +
                           std::to_string(cfg.balancer_max_iterations) +
                           " iterations with overflow remaining");
    best->invoked = true;
    best->iterations = outcome.iterations;
    return *best;
}

} // namespace postergen
