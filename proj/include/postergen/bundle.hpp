#pragma once

#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "postergen/errors.hpp"
#include "postergen/image.hpp"

namespace postergen {

enum class AssetKind { figure, table };

/// One figure or table extracted from the source paper, stored as PNG.
struct VisualAsset {
    std::string id;
    AssetKind kind = AssetKind::figure;
    Image pixels;
    int width_px = 0;
    int height_px = 0;
    std::string caption;
    std::vector<std::uint8_t> png_bytes; // original file bytes, embedded verbatim

    double aspect_ratio() const {
        return static_cast<double>(width_px) / static_cast<double>(height_px);
    }
};

struct LogoImage {
    Image pixels;
    std::vector<std::uint8_t> png_bytes;
};

/// Root input of the pipeline: converted Markdown plus visual assets.
struct PaperBundle {
    std::string markdown_text;
    std::map<std::string, VisualAsset> assets; // keyed by asset id
    std::optional<LogoImage> affiliation_logo;
    std::optional<LogoImage> conference_logo;
};

namespace detail {

inline std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open file: " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct ManifestEntry {
    std::string id;
    std::string kind;
    std::string file;
    std::string caption;
};

// Manifest lines are tab-separated: id, kind, file, caption. The caption
// takes the remainder of the line. '#' lines and blank lines are skipped.
inline std::vector<ManifestEntry> parse_manifest(const std::string& text) {
    std::vector<ManifestEntry> entries;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        ManifestEntry e;
        std::size_t a = line.find('\t');
        std::size_t b = a == std::string::npos ? a : line.find('\t', a + 1);
        std::size_t c = b == std::string::npos ? b : line.find('\t', b + 1);
        if (c == std::string::npos)
            throw InputError("manifest line " + std::to_string(lineno) +
                             ": expected id<TAB>kind<TAB>file<TAB>caption");
        e.id = line.substr(0, a);
        e.kind = line.substr(a + 1, b - a - 1);
        e.file = line.substr(b + 1, c - b - 1);
        e.caption = line.substr(c + 1);
        if (e.id.empty()) throw InputError("manifest line " + std::to_string(lineno) + ": empty asset id");
        entries.push_back(std::move(e));
    }
    return entries;
}

inline std::optional<LogoImage> load_optional_logo(const std::filesystem::path& path) {
    if (!std::filesystem::exists(path)) return std::nullopt;
    LogoImage logo;
    logo.png_bytes = read_binary_file(path);
    logo.pixels = decode_png(logo.png_bytes);
    return logo;
}

} // namespace detail

/// Loads a bundle directory:
///   paper.md                 converted paper text (required)
///   assets/manifest          id<TAB>kind<TAB>file<TAB>caption per asset
///   assets/<file>            PNG per manifest entry
///   logos/affiliation.png    optional
///   logos/conference.png     optional
inline PaperBundle load_bundle(const std::filesystem::path& dir) {
    if (!std::filesystem::exists(dir / "paper.md"))
        throw InputError("bundle missing paper.md: " + (dir / "paper.md").string());

    PaperBundle bundle;
    bundle.markdown_text = detail::read_text_file(dir / "paper.md");
    if (bundle.markdown_text.empty())
        throw InputError("bundle paper.md is empty");

    const auto manifest_path = dir / "assets" / "manifest";
    if (std::filesystem::exists(manifest_path)) {
        for (const auto& entry : detail::parse_manifest(detail::read_text_file(manifest_path))) {
            if (bundle.assets.count(entry.id))
                throw InputError("asset " + entry.id + ": duplicate id in manifest");
            VisualAsset asset;
            asset.id = entry.id;
            if (entry.kind == "figure")
                asset.kind = AssetKind::figure;
            else if (entry.kind == "table")
                asset.kind = AssetKind::table;
            else
                throw InputError("asset " + entry.id + ": unknown kind '" + entry.kind + "'");
            asset.caption = entry.caption;
            const auto file = dir / "assets" / entry.file;
            if (!std::filesystem::exists(file))
                throw InputError("asset " + entry.id + ": file not found");
            asset.png_bytes = read_binary_file(file);
            try {
                asset.pixels = decode_png(asset.png_bytes);
            } catch (const InputError& e) {
                throw InputError("asset " + entry.id + ": " + e.what());
            }
            asset.width_px = asset.pixels.width;
            asset.height_px = asset.pixels.height;
            if (asset.width_px <= 0 || asset.height_px <= 0)
                throw InputError("asset " + entry.id + ": degenerate dimensions");
            bundle.assets[asset.id] = std::move(asset);
        }
    }

    bundle.affiliation_logo = detail::load_optional_logo(dir / "logos" / "affiliation.png");
    bundle.conference_logo = detail::load_optional_logo(dir / "logos" / "conference.png");
    return bundle;
}

} // namespace postergen
