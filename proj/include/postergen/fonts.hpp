#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "postergen/errors.hpp"

namespace postergen {

enum class FontRole { title, authors, heading, body, caption };

enum class FontWeight { regular, bold };

/// Resolved font attributes for one text role.
struct FontSpec {
    FontRole role = FontRole::body;
    double size_pt = 24.0;
    FontWeight weight = FontWeight::regular;
    bool italic = false;
    double line_spacing = 1.2; // multiplier of size_pt

    double line_height_pt() const { return size_pt * line_spacing; }
    double line_height_in() const { return line_height_pt() / 72.0; }
};

/// Glyph advance widths in 1/1000 em for the printable ASCII range.
/// Codepoints outside the table fall back to the family average.
struct GlyphTable {
    std::array<std::uint16_t, 95> advances{}; // U+0020 .. U+007E
    std::uint16_t average = 0;

    static GlyphTable from_advances(const std::array<std::uint16_t, 95>& adv) {
        GlyphTable t;
        t.advances = adv;
        std::uint32_t sum = 0;
        for (auto a : adv) sum += a;
        t.average = static_cast<std::uint16_t>(sum / adv.size());
        return t;
    }

    static GlyphTable monospace(std::uint16_t advance) {
        std::array<std::uint16_t, 95> adv{};
        adv.fill(advance);
        return from_advances(adv);
    }
};

namespace detail {

// Adobe core metrics for Helvetica, 1000 units/em. Oblique shares the
// upright widths, so the italic flag does not change advances.
inline const GlyphTable& helvetica_regular() {
    static const GlyphTable table = GlyphTable::from_advances({
        278, 278, 355, 556, 556, 889, 667, 191, 333, 333, 389, 584, 278, 333,
        278, 278, 556, 556, 556, 556, 556, 556, 556, 556, 556, 556, 278, 278,
        584, 584, 584, 556, 1015, 667, 667, 722, 722, 667, 611, 778, 722, 278,
        500, 667, 556, 833, 722, 778, 667, 778, 722, 667, 611, 722, 667, 944,
        667, 667, 611, 278, 278, 278, 469, 556, 333, 556, 556, 500, 556, 556,
        278, 556, 556, 222, 222, 500, 222, 833, 556, 556, 556, 556, 333, 500,
        278, 556, 500, 722, 500, 500, 500, 334, 260, 334, 584});
    return table;
}

inline const GlyphTable& helvetica_bold() {
    static const GlyphTable table = GlyphTable::from_advances({
        278, 333, 474, 556, 556, 889, 722, 238, 333, 333, 389, 584, 278, 333,
        278, 278, 556, 556, 556, 556, 556, 556, 556, 556, 556, 556, 333, 333,
        584, 584, 584, 611, 975, 722, 722, 722, 722, 667, 611, 778, 722, 278,
        556, 722, 611, 833, 722, 778, 667, 778, 722, 667, 611, 722, 667, 944,
        667, 667, 611, 333, 278, 333, 584, 556, 333, 556, 611, 556, 611, 556,
        333, 611, 611, 278, 278, 556, 278, 889, 611, 611, 611, 611, 389, 556,
        333, 611, 556, 778, 556, 556, 500, 389, 280, 389, 584});
    return table;
}

/// Decodes one UTF-8 codepoint; malformed bytes advance by one and map to
/// U+FFFD so measurement stays total.
inline char32_t next_codepoint(std::string_view text, std::size_t& i) {
    const auto byte = [&](std::size_t k) { return static_cast<unsigned char>(text[k]); };
    const unsigned char b0 = byte(i);
    if (b0 < 0x80) {
        i += 1;
        return b0;
    }
    auto cont = [&](std::size_t k) {
        return k < text.size() && (byte(k) & 0xC0) == 0x80;
    };
    if ((b0 & 0xE0) == 0xC0 && cont(i + 1)) {
        const char32_t cp = ((b0 & 0x1Fu) << 6) | (byte(i + 1) & 0x3Fu);
        i += 2;
        return cp;
    }
    if ((b0 & 0xF0) == 0xE0 && cont(i + 1) && cont(i + 2)) {
        const char32_t cp =
            ((b0 & 0x0Fu) << 12) | ((byte(i + 1) & 0x3Fu) << 6) | (byte(i + 2) & 0x3Fu);
        i += 3;
        return cp;
    }
    if ((b0 & 0xF8) == 0xF0 && cont(i + 1) && cont(i + 2) && cont(i + 3)) {
        const char32_t cp = ((b0 & 0x07u) << 18) | ((byte(i + 1) & 0x3Fu) << 12) |
                            ((byte(i + 2) & 0x3Fu) << 6) | (byte(i + 3) & 0x3Fu);
        i += 4;
        return cp;
    }
    i += 1;
    return 0xFFFD;
}

} // namespace detail

/// Deterministic text metrics for one sans-serif family. Measurement never
/// touches a rendering engine; widths come from the bundled advance tables.
class FontMetrics {
public:
    FontMetrics(GlyphTable regular, GlyphTable bold, std::string family = "Helvetica")
        : regular_(regular), bold_(bold), family_(std::move(family)) {}

    /// The bundled default family.
    static const FontMetrics& bundled() {
        static const FontMetrics metrics(detail::helvetica_regular(),
                                         detail::helvetica_bold(), "Helvetica");
        return metrics;
    }

    /// Fixed-pitch metrics where every glyph advances `units_per_em_frac`
    /// of the em. Used as an independent oracle in tests.
    static FontMetrics monospace(double em_fraction = 0.5) {
        const auto adv = static_cast<std::uint16_t>(em_fraction * 1000.0);
        return FontMetrics(GlyphTable::monospace(adv), GlyphTable::monospace(adv),
                           "Monospace");
    }

    const std::string& family() const { return family_; }

    double advance_units(char32_t cp, FontWeight weight) const {
        const GlyphTable& t = weight == FontWeight::bold ? bold_ : regular_;
        if (cp >= 0x20 && cp <= 0x7E) return t.advances[cp - 0x20];
        return t.average;
    }

    double advance_in(char32_t cp, const FontSpec& font) const {
        return advance_units(cp, font.weight) / 1000.0 * font.size_pt / 72.0;
    }

    /// Width of a string in inches at the given font, no wrapping.
    double text_width_in(std::string_view text, const FontSpec& font) const {
        double units = 0.0;
        std::size_t i = 0;
        while (i < text.size()) units += advance_units(detail::next_codepoint(text, i), font.weight);
        return units / 1000.0 * font.size_pt / 72.0;
    }

private:
    GlyphTable regular_;
    GlyphTable bold_;
    std::string family_;
};

/// Font sizes per role form the poster's visual hierarchy:
/// title > heading > body >= caption.
struct TypographyScheme {
    std::map<FontRole, FontSpec> roles;

    static TypographyScheme defaults() {
        TypographyScheme t;
        t.roles[FontRole::title] = {FontRole::title, 60.0, FontWeight::bold, false, 1.1};
        t.roles[FontRole::authors] = {FontRole::authors, 32.0, FontWeight::regular, false, 1.2};
        t.roles[FontRole::heading] = {FontRole::heading, 36.0, FontWeight::bold, false, 1.2};
        t.roles[FontRole::body] = {FontRole::body, 24.0, FontWeight::regular, false, 1.2};
        t.roles[FontRole::caption] = {FontRole::caption, 18.0, FontWeight::regular, false, 1.2};
        return t;
    }

    const FontSpec& of(FontRole role) const {
        auto it = roles.find(role);
        if (it == roles.end()) throw ConfigError("typography scheme missing a role");
        return it->second;
    }

    std::vector<std::string> validate() const {
        std::vector<std::string> problems;
        for (auto role : {FontRole::title, FontRole::authors, FontRole::heading,
                          FontRole::body, FontRole::caption})
            if (!roles.count(role)) problems.push_back("missing font role");
        if (!problems.empty()) return problems;
        if (!(of(FontRole::title).size_pt > of(FontRole::heading).size_pt))
            problems.push_back("title size must exceed heading size");
        if (!(of(FontRole::heading).size_pt > of(FontRole::body).size_pt))
            problems.push_back("heading size must exceed body size");
        if (!(of(FontRole::body).size_pt >= of(FontRole::caption).size_pt))
            problems.push_back("body size must be at least caption size");
        for (const auto& [role, spec] : roles) {
            if (spec.size_pt <= 0.0) problems.push_back("font size must be positive");
            if (spec.line_spacing < 1.0) problems.push_back("line spacing must be >= 1.0");
        }
        return problems;
    }
};

} // namespace postergen
