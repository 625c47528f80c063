#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "postergen/fonts.hpp"
#include "postergen/geometry.hpp"
#include "postergen/markup.hpp"
#include "postergen/storyboard.hpp"
#include "postergen/text_measure.hpp"

namespace postergen {

/// CSS-like spacing around one element: margin outside, padding inside.
struct BoxModel {
    Insets margin;
    Insets padding;
};

enum class ElementKind { section_header, text_block, image, divider };

/// A coordinate-resolved poster element. The outer rect includes margins
/// and paddings; the content rect is the outer rect shrunk by both.
struct PositionedElement {
    ElementKind kind = ElementKind::text_block;
    Rect outer;
    Rect content;
    BoxModel box;
    std::string section_id;                // owning storyboard section, if any
    std::string asset_id;                  // for images
    std::vector<std::string> text_lines;   // markup lines, for text kinds
    FontRole font_role = FontRole::body;
    int importance_level = 0;

    /// Outer rect minus margins: the region a background fill covers.
    Rect padding_rect() const {
        return {outer.x + box.margin.left, outer.y + box.margin.top,
                outer.w - box.margin.horizontal(), outer.h - box.margin.vertical()};
    }
};

struct ColumnGeometry {
    int index = 0;
    double x = 0.0;
    double width = 0.0;
    double y_top = 0.0;
    double available_height = 0.0;
};

struct ColumnLayout {
    ColumnGeometry geom;
    std::vector<PositionedElement> elements;

    double used_height() const {
        double sum = 0.0;
        for (const auto& e : elements) sum += e.outer.h;
        return sum;
    }
};

struct HeaderLayout {
    Rect band;
    PositionedElement title;
    PositionedElement authors;
    std::vector<PositionedElement> logos;
};

struct PositionedPoster {
    double canvas_w = 0.0;
    double canvas_h = 0.0;
    HeaderLayout header;
    std::array<ColumnLayout, 3> columns;

    std::vector<const PositionedElement*> all_elements() const {
        std::vector<const PositionedElement*> out;
        out.push_back(&header.title);
        out.push_back(&header.authors);
        for (const auto& logo : header.logos) out.push_back(&logo);
        for (const auto& col : columns)
            for (const auto& e : col.elements) out.push_back(&e);
        return out;
    }
};

enum class UtilStatus { underutilized, in_band, overflow };

inline const char* to_string(UtilStatus s) {
    switch (s) {
    case UtilStatus::underutilized: return "underutilized";
    case UtilStatus::in_band: return "in_band";
    case UtilStatus::overflow: return "overflow";
    }
    return "?";
}

struct UtilizationReport {
    struct ColumnUse {
        double used = 0.0;
        double available = 0.0;
        double fraction = 0.0;
        UtilStatus status = UtilStatus::underutilized;
    };
    std::array<ColumnUse, 3> columns;

    bool all_within(double lo, double hi) const {
        return std::all_of(columns.begin(), columns.end(), [&](const ColumnUse& c) {
            return c.fraction >= lo && c.fraction <= hi;
        });
    }
    bool any_overflow() const {
        return std::any_of(columns.begin(), columns.end(),
                           [](const ColumnUse& c) { return c.fraction > 1.0; });
    }
};

/// Geometry and spacing configuration for the whole canvas.
struct LayoutConfig {
    double canvas_width = 48.0;
    double canvas_height = 36.0;
    double header_height = 4.0;
    double outer_margin = 0.75;
    double column_gap = 0.75;
    double epsilon = 0.001;              // text height search precision
    double newline_offset_ratio = 1.0;
    double util_lo = 0.85;               // balancer target band
    double util_hi = 0.95;
    int balancer_max_iterations = 3;
    double image_native_dpi = 96.0;      // upscale limit for low-res images

    BoxModel header_box{{0.30, 0.40, 0.05, 0.40}, {0.05, 0.10, 0.05, 0.10}};
    BoxModel divider_box{{0.00, 0.40, 0.12, 0.40}, {0.00, 0.10, 0.00, 0.10}};
    BoxModel text_box{{0.05, 0.40, 0.15, 0.40}, {0.05, 0.10, 0.05, 0.10}};
    BoxModel image_box{{0.10, 0.40, 0.20, 0.40}, {0.00, 0.10, 0.00, 0.10}};
    double divider_thickness = 0.04;

    double column_width() const {
        return (canvas_width - 2.0 * outer_margin - 2.0 * column_gap) / 3.0;
    }
    double column_x(int index) const {
        return outer_margin + index * (column_width() + column_gap);
    }
    double available_column_height() const {
        return canvas_height - header_height - outer_margin;
    }
    /// Horizontal room left for content once side margins and paddings go;
    /// identical for every element kind, and the single source the curator
    /// uses for height precomputation.
    double column_content_width() const {
        return column_width() - text_box.margin.horizontal() - text_box.padding.horizontal();
    }
    ColumnGeometry column_geometry(int index) const {
        return {index, column_x(index), column_width(), header_height,
                available_column_height()};
    }

    std::vector<std::string> validate() const {
        std::vector<std::string> problems;
        if (epsilon <= 0.0) problems.push_back("epsilon must be positive");
        if (!(util_lo < util_hi)) problems.push_back("utilization band is empty");
        if (column_width() <= 0.0) problems.push_back("three columns do not fit the canvas");
        if (column_content_width() <= 0.0) problems.push_back("column content width is empty");
        if (header_height + outer_margin >= canvas_height)
            problems.push_back("header leaves no column height");
        return problems;
    }
};

/// Places a content box of the given size at an outer origin, expanding by
/// padding and margin. Outer extent = content + padding + margin per axis.
inline PositionedElement apply_box_model(double content_w, double content_h,
                                         const BoxModel& box, double outer_x,
                                         double outer_y) {
    PositionedElement e;
    e.box = box;
    e.outer = {outer_x, outer_y,
               content_w + box.padding.horizontal() + box.margin.horizontal(),
               content_h + box.padding.vertical() + box.margin.vertical()};
    e.content = {outer_x + box.margin.left + box.padding.left,
                 outer_y + box.margin.top + box.padding.top, content_w, content_h};
    return e;
}

/// Pixel dimensions of an asset, the part of a VisualAsset layout needs.
struct AssetGeometry {
    int width_px = 0;
    int height_px = 0;
};

/// Everything the geometric passes need besides the storyboard itself.
struct LayoutContext {
    LayoutConfig config;
    TypographyScheme typography = TypographyScheme::defaults();
    const FontMetrics* metrics = &FontMetrics::bundled();
    std::map<std::string, AssetGeometry> assets;

    static LayoutContext with_assets(const std::map<std::string, VisualAsset>& bundle_assets,
                                     LayoutConfig cfg = LayoutConfig{}) {
        LayoutContext ctx;
        ctx.config = std::move(cfg);
        for (const auto& [id, asset] : bundle_assets)
            ctx.assets[id] = {asset.width_px, asset.height_px};
        return ctx;
    }
};

namespace detail {

inline double measure_block_height(const std::string& text, double width_in,
                                   const FontSpec& font, const LayoutConfig& cfg,
                                   const FontMetrics& metrics) {
    TextMeasureRequest req;
    req.text = text;
    req.width_in = width_in;
    req.font = font;
    req.epsilon_in = cfg.epsilon;
    req.search_max_in = cfg.available_column_height() * 2.0;
    req.newline_offset_ratio = cfg.newline_offset_ratio;
    return measure_text_height(req, metrics).height_in;
}

inline std::vector<const StoryboardSection*> ordered_sections(const Storyboard& sb,
                                                              Column column) {
    auto sections = sb.sections_in(column);
    std::stable_sort(sections.begin(), sections.end(),
                     [](const StoryboardSection* a, const StoryboardSection* b) {
                         return static_cast<int>(a->vertical_priority) <
                                static_cast<int>(b->vertical_priority);
                     });
    return sections;
}

} // namespace detail

/// Stacks one column's sections top-down: per section a header, a divider
/// rule, the text block, then its images. Element k+1 starts where k's
/// outer box ends; inter-element gaps live in the margins.
inline ColumnLayout layout_column(const std::vector<const StoryboardSection*>& sections,
                                  const ColumnGeometry& geom, const LayoutContext& ctx) {
    const LayoutConfig& cfg = ctx.config;
    const double content_w = cfg.column_content_width();
    ColumnLayout col;
    col.geom = geom;
    double y = geom.y_top;

    auto push = [&](PositionedElement e) {
        e.outer.x = geom.x;
        e.content.x = geom.x + e.box.margin.left + e.box.padding.left;
        y = e.outer.bottom();
        col.elements.push_back(std::move(e));
    };

    for (const auto* section : sections) {
        const FontSpec& heading = ctx.typography.of(FontRole::heading);
        const double heading_h = detail::measure_block_height(
            section->section_title, content_w, heading, cfg, *ctx.metrics);
        PositionedElement header =
            apply_box_model(content_w, heading_h, cfg.header_box, geom.x, y);
        header.kind = ElementKind::section_header;
        header.section_id = section->section_id;
        header.text_lines = {section->section_title};
        header.font_role = FontRole::heading;
        header.importance_level = section->importance_level;
        push(std::move(header));

        PositionedElement divider = apply_box_model(content_w, cfg.divider_thickness,
                                                    cfg.divider_box, geom.x, y);
        divider.kind = ElementKind::divider;
        divider.section_id = section->section_id;
        divider.importance_level = section->importance_level;
        push(std::move(divider));

        if (!section->text_content.empty()) {
            const FontSpec& body = ctx.typography.of(FontRole::body);
            const std::string text = render_text(section->text_content);
            const double text_h =
                detail::measure_block_height(text, content_w, body, cfg, *ctx.metrics);
            PositionedElement block =
                apply_box_model(content_w, text_h, cfg.text_box, geom.x, y);
            block.kind = ElementKind::text_block;
            block.section_id = section->section_id;
            block.text_lines = section->text_content;
            block.font_role = FontRole::body;
            block.importance_level = section->importance_level;
            push(std::move(block));
        }

        for (const auto& visual : section->visual_assets) {
            auto it = ctx.assets.find(visual.visual_id);
            if (it == ctx.assets.end())
                throw AssemblyError("storyboard references unknown asset '" +
                                    visual.visual_id + "'");
            const auto& dims = it->second;
            const double native_w = dims.width_px / cfg.image_native_dpi;
            const double w = std::min(content_w, native_w);
            const double h = w * dims.height_px / dims.width_px;
            PositionedElement image = apply_box_model(content_w, h, cfg.image_box, geom.x, y);
            image.kind = ElementKind::image;
            image.section_id = section->section_id;
            image.asset_id = visual.visual_id;
            image.importance_level = section->importance_level;
            // Narrow images center within the content span.
            image.content.x += (content_w - w) / 2.0;
            image.content.w = w;
            push(std::move(image));
        }
    }
    return col;
}

inline UtilizationReport compute_utilization(const std::array<ColumnLayout, 3>& columns) {
    UtilizationReport report;
    for (int i = 0; i < 3; ++i) {
        auto& c = report.columns[i];
        c.used = columns[i].used_height();
        c.available = columns[i].geom.available_height;
        c.fraction = c.available > 0.0 ? c.used / c.available : 0.0;
        c.status = c.fraction < 0.80   ? UtilStatus::underutilized
                   : c.fraction <= 1.0 ? UtilStatus::in_band
                                       : UtilStatus::overflow;
    }
    return report;
}

/// Header band with the title and authors left-aligned; logo elements are
/// appended later by the renderer's logo placement.
inline HeaderLayout layout_header(const std::string& title, const std::string& authors,
                                  const LayoutContext& ctx) {
    const LayoutConfig& cfg = ctx.config;
    HeaderLayout header;
    header.band = {0.0, 0.0, cfg.canvas_width, cfg.header_height};

    // Right 35% of the band stays clear for logos.
    const double text_w = cfg.canvas_width * 0.65 - cfg.outer_margin;
    const FontSpec& title_font = ctx.typography.of(FontRole::title);
    const FontSpec& authors_font = ctx.typography.of(FontRole::authors);

    const double title_h =
        detail::measure_block_height(title, text_w, title_font, cfg, *ctx.metrics);
    const double authors_h =
        detail::measure_block_height(authors, text_w, authors_font, cfg, *ctx.metrics);

    const double gap = 0.15;
    const double total = title_h + gap + authors_h;
    const double top = std::max(0.2, (cfg.header_height - total) / 2.0);

    PositionedElement title_el = apply_box_model(text_w, title_h, BoxModel{}, cfg.outer_margin, top);
    title_el.kind = ElementKind::text_block;
    title_el.text_lines = {title};
    title_el.font_role = FontRole::title;
    header.title = std::move(title_el);

    PositionedElement authors_el =
        apply_box_model(text_w, authors_h, BoxModel{}, cfg.outer_margin, top + title_h + gap);
    authors_el.kind = ElementKind::text_block;
    authors_el.text_lines = {authors};
    authors_el.font_role = FontRole::authors;
    header.authors = std::move(authors_el);
    return header;
}

/// Structural soundness of an assembled poster: disjoint content rects,
/// everything inside the canvas, column elements inside their column span
/// and above the column bottom. Returns every breach.
inline std::vector<std::string> check_poster_invariants(const PositionedPoster& poster) {
    std::vector<std::string> problems;
    const Rect canvas{0.0, 0.0, poster.canvas_w, poster.canvas_h};

    const auto elements = poster.all_elements();
    for (std::size_t i = 0; i < elements.size(); ++i) {
        const auto& e = *elements[i];
        if (!canvas.contains(e.content))
            problems.push_back("element outside canvas at y=" + std::to_string(e.content.y));
        for (std::size_t k = i + 1; k < elements.size(); ++k)
            if (e.content.intersects(elements[k]->content))
                problems.push_back("overlapping content rects (" + e.section_id + "/" +
                                   elements[k]->section_id + ")");
    }

    for (const auto& col : poster.columns) {
        const double bottom = col.geom.y_top + col.geom.available_height;
        for (const auto& e : col.elements) {
            if (e.outer.x < col.geom.x - 1e-9 ||
                e.outer.right() > col.geom.x + col.geom.width + 1e-9)
                problems.push_back("element escapes column " +
                                   std::to_string(col.geom.index) + " x-span");
            if (e.outer.bottom() > bottom + 1e-9)
                problems.push_back("column " + std::to_string(col.geom.index) +
                                   " overflows by " +
                                   std::to_string(e.outer.bottom() - bottom) + " in");
        }
    }
    return problems;
}

/// Fraction of the canvas not covered by content rectangles. Content rects
/// are pairwise disjoint in an accepted poster, so plain summation is
/// exact.
inline double white_space_fraction(const PositionedPoster& poster) {
    double content_area = 0.0;
    for (const auto* e : poster.all_elements()) content_area += e->content.area();
    return 1.0 - content_area / (poster.canvas_w * poster.canvas_h);
}

/// Lays out all three columns of a storyboard (no header content).
inline std::array<ColumnLayout, 3> layout_columns(const Storyboard& sb,
                                                  const LayoutContext& ctx) {
    std::array<ColumnLayout, 3> columns;
    const Column order[] = {Column::left, Column::middle, Column::right};
    for (int i = 0; i < 3; ++i)
        columns[i] = layout_column(detail::ordered_sections(sb, order[i]),
                                   ctx.config.column_geometry(i), ctx);
    return columns;
}

/// Builds the coordinate-resolved poster and verifies its invariants.
/// Residual overflow is an assembly error; the balancer should have
/// resolved it.
inline PositionedPoster assemble(const Storyboard& sb, const TitleAuthors& title_authors,
                                 const LayoutContext& ctx) {
    PositionedPoster poster;
    poster.canvas_w = ctx.config.canvas_width;
    poster.canvas_h = ctx.config.canvas_height;
    poster.header = layout_header(title_authors.title, title_authors.authors, ctx);
    poster.columns = layout_columns(sb, ctx);

    const auto problems = check_poster_invariants(poster);
    if (!problems.empty())
        throw AssemblyError("assembled poster violates invariants: " + problems.front());
    return poster;
}

} // namespace postergen
