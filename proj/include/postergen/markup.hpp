#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace postergen {

enum class BulletKind { none, primary, secondary };

/// One styled span of a markup line.
struct MarkupRun {
    std::string text;
    bool bold = false;
    bool italic = false;

    bool operator==(const MarkupRun&) const = default;
};

/// A parsed storyboard text line: optional bullet marker plus inline runs.
struct MarkupLine {
    BulletKind bullet = BulletKind::none;
    int indent_level = 0;
    std::vector<MarkupRun> runs;
};

/// Parses the storyboard line grammar. Leading "* " marks a level-0
/// bullet, leading whitespace then "- " a level-1 bullet. Inline **...**
/// is bold, *...* italic; unterminated markers stay literal text. Total:
/// never fails, any input yields a line.
inline MarkupLine parse_markup(std::string_view line) {
    MarkupLine out;

    std::string_view rest = line;
    if (rest.size() >= 2 && rest[0] == '*' && rest[1] == ' ') {
        out.bullet = BulletKind::primary;
        out.indent_level = 0;
        rest.remove_prefix(2);
    } else {
        std::size_t ws = 0;
        while (ws < rest.size() && (rest[ws] == ' ' || rest[ws] == '\t')) ++ws;
        if (ws + 1 < rest.size() && rest[ws] == '-' && rest[ws + 1] == ' ') {
            out.bullet = BulletKind::secondary;
            out.indent_level = 1;
            rest.remove_prefix(ws + 2);
        }
    }

    auto flush = [&](std::string& plain) {
        if (!plain.empty()) {
            out.runs.push_back({plain, false, false});
            plain.clear();
        }
    };

    std::string plain;
    std::size_t i = 0;
    while (i < rest.size()) {
        if (rest[i] == '*') {
            const bool dbl = i + 1 < rest.size() && rest[i + 1] == '*';
            const std::string_view marker = dbl ? "**" : "*";
            const std::size_t close = rest.find(marker, i + marker.size());
            if (close != std::string_view::npos) {
                const std::string_view inner =
                    rest.substr(i + marker.size(), close - i - marker.size());
                flush(plain);
                if (!inner.empty())
                    out.runs.push_back({std::string(inner), dbl, !dbl});
                i = close + marker.size();
                continue;
            }
        }
        plain += rest[i];
        ++i;
    }
    flush(plain);
    return out;
}

/// Concatenated run text of one line, markers stripped.
inline std::string markup_plain_text(const MarkupLine& line) {
    std::string s;
    for (const auto& run : line.runs) s += run.text;
    return s;
}

/// Literal bullet glyph prefix a renderer puts in front of a line.
inline std::string bullet_prefix(BulletKind kind) {
    switch (kind) {
    case BulletKind::primary: return "• ";        // "• "
    case BulletKind::secondary: return "   – ";   // "   – "
    case BulletKind::none: break;
    }
    return "";
}

/// The text a block of markup lines occupies when rendered: bullet glyph
/// prefixes plus run text, lines joined by newlines. This is the exact
/// string layout measures, so measured and rendered extents agree.
inline std::string render_text(const std::vector<std::string>& lines) {
    std::string s;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const MarkupLine parsed = parse_markup(lines[i]);
        if (i) s += '\n';
        s += bullet_prefix(parsed.bullet);
        s += markup_plain_text(parsed);
    }
    return s;
}

} // namespace postergen
