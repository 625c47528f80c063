#pragma once

#include <cmath>
#include <string>
#include <string_view>
#include <vector>

#include "postergen/fonts.hpp"

namespace postergen {

/// Result of laying text into a box of fixed width and trial height.
struct TextBoxSim {
    int line_count = 0;
    double natural_height_in = 0.0;
    bool overflowing = false;
};

namespace detail {

// Greedy word wrap against the advance tables. Words wider than the line
// are split at glyph granularity, at least one glyph per line. Runs of
// spaces collapse at line starts only; within a line each space advances.
inline int wrap_paragraph(std::string_view paragraph, double width_in,
                          const FontSpec& font, const FontMetrics& metrics) {
    constexpr double kFitTol = 1e-9;
    const double space_in = metrics.advance_in(U' ', font);

    int lines = 1;
    double cursor = 0.0;
    bool line_empty = true;

    std::size_t i = 0;
    while (i < paragraph.size()) {
        if (paragraph[i] == ' ') {
            std::size_t spaces = 0;
            while (i < paragraph.size() && paragraph[i] == ' ') {
                ++spaces;
                ++i;
            }
            if (!line_empty) cursor += space_in * static_cast<double>(spaces);
            continue;
        }

        double word_in = 0.0;
        std::vector<double> glyphs;
        while (i < paragraph.size() && paragraph[i] != ' ') {
            const double adv = metrics.advance_in(next_codepoint(paragraph, i), font);
            glyphs.push_back(adv);
            word_in += adv;
        }

        if (cursor + word_in <= width_in + kFitTol) {
            cursor += word_in;
            line_empty = false;
            continue;
        }
        if (word_in <= width_in + kFitTol) {
            // Fits on a fresh line.
            ++lines;
            cursor = word_in;
            line_empty = false;
            continue;
        }
        // Overlong word: break at glyph granularity.
        for (double adv : glyphs) {
            if (!line_empty && cursor + adv > width_in + kFitTol) {
                ++lines;
                cursor = 0.0;
                line_empty = true;
            }
            cursor += adv;
            line_empty = false;
        }
    }
    return lines;
}

} // namespace detail

/// Wraps `text` into a box `width_in` wide and reports whether the natural
/// height exceeds `height_in`. Explicit newlines force breaks; empty text
/// occupies zero lines.
inline TextBoxSim simulate_textbox(std::string_view text, double width_in,
                                   double height_in, const FontSpec& font,
                                   const FontMetrics& metrics = FontMetrics::bundled()) {
    TextBoxSim sim;
    if (!text.empty()) {
        std::size_t start = 0;
        while (true) {
            const std::size_t nl = text.find('\n', start);
            const std::string_view paragraph =
                text.substr(start, nl == std::string_view::npos ? nl : nl - start);
            if (paragraph.empty())
                sim.line_count += 1;
            else
                sim.line_count += detail::wrap_paragraph(paragraph, width_in, font, metrics);
            if (nl == std::string_view::npos) break;
            start = nl + 1;
        }
    }
    sim.natural_height_in = sim.line_count * font.line_height_in();
    sim.overflowing = sim.natural_height_in > height_in;
    return sim;
}

/// One text-height measurement problem.
struct TextMeasureRequest {
    std::string text;
    double width_in = 0.0;
    FontSpec font;
    double epsilon_in = 0.001;
    double search_max_in = 72.0;       // initial upper bound of the search
    double newline_offset_ratio = 1.0;
};

struct MeasuredHeight {
    double height_in = 0.0;         // search result plus the newline offset
    double newline_offset_in = 0.0;
    int iterations = 0;
};

inline int count_newlines(std::string_view text) {
    int n = 0;
    for (char c : text)
        if (c == '\n') ++n;
    return n;
}

/// Corrective offset proportional to the number of embedded newlines:
/// one line-height per newline, scaled by the configured ratio.
inline double newline_offset_in(std::string_view text, const FontSpec& font,
                                double ratio) {
    return count_newlines(text) * ratio * font.line_height_in();
}

/// Minimum non-overflowing box height located by bisection to within
/// epsilon, plus the newline offset. The search keeps the invariant that
/// the lower bound overflows (or is zero) and tightens until the bracket
/// width drops below epsilon.
inline MeasuredHeight measure_text_height(const TextMeasureRequest& req,
                                          const FontMetrics& metrics = FontMetrics::bundled()) {
    MeasuredHeight result;
    result.newline_offset_in = newline_offset_in(req.text, req.font, req.newline_offset_ratio);

    double h_min = 0.0;
    double h_max = req.search_max_in;
    while (h_max - h_min > req.epsilon_in) {
        const double h_test = (h_min + h_max) / 2.0;
        const TextBoxSim sim =
            simulate_textbox(req.text, req.width_in, h_test, req.font, metrics);
        if (sim.overflowing)
            h_min = h_test;
        else
            h_max = h_test;
        ++result.iterations;
    }
    result.height_in = h_max + result.newline_offset_in;
    return result;
}

} // namespace postergen
