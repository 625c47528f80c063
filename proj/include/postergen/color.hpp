#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>

#include "postergen/errors.hpp"

namespace postergen {

/// sRGB color with 8-bit channels plus the HSL coordinates it was built
/// from. A color constructed from HSL keeps the given hue exactly even
/// where 8-bit quantization would blur it (near-grays), so monochromatic
/// palette derivation stays hue-stable.
class Color {
public:
    Color() = default;

    static Color from_rgb(std::uint8_t r, std::uint8_t g, std::uint8_t b) {
        Color c;
        c.r_ = r;
        c.g_ = g;
        c.b_ = b;
        rgb_to_hsl(r / 255.0, g / 255.0, b / 255.0, c.h_, c.s_, c.l_);
        return c;
    }

    /// h in degrees [0,360), s and l in [0,1].
    static Color from_hsl(double h, double s, double l) {
        h = std::fmod(h, 360.0);
        if (h < 0.0) h += 360.0;
        s = std::clamp(s, 0.0, 1.0);
        l = std::clamp(l, 0.0, 1.0);
        double r, g, b;
        hsl_to_rgb(h, s, l, r, g, b);
        Color c;
        c.r_ = quantize(r);
        c.g_ = quantize(g);
        c.b_ = quantize(b);
        c.h_ = h;
        c.s_ = s;
        c.l_ = l;
        return c;
    }

    /// Accepts "#RRGGBB" or "RRGGBB".
    static Color from_hex(const std::string& hex) {
        std::string digits = hex;
        if (!digits.empty() && digits.front() == '#') digits.erase(digits.begin());
        if (digits.size() != 6) throw ValidationError("bad hex color: " + hex);
        auto nibble = [&](char ch) -> int {
            if (ch >= '0' && ch <= '9') return ch - '0';
            if (ch >= 'a' && ch <= 'f') return ch - 'a' + 10;
            if (ch >= 'A' && ch <= 'F') return ch - 'A' + 10;
            throw ValidationError("bad hex color: " + hex);
        };
        auto byte = [&](int i) {
            return static_cast<std::uint8_t>(nibble(digits[i]) * 16 + nibble(digits[i + 1]));
        };
        return from_rgb(byte(0), byte(2), byte(4));
    }

    std::uint8_t r() const { return r_; }
    std::uint8_t g() const { return g_; }
    std::uint8_t b() const { return b_; }
    double hue() const { return h_; }
    double saturation() const { return s_; }
    double lightness() const { return l_; }

    std::string to_hex() const {
        char buf[8];
        std::snprintf(buf, sizeof(buf), "#%02X%02X%02X", r_, g_, b_);
        return buf;
    }

    /// WCAG 2.x relative luminance over linearized sRGB channels.
    double relative_luminance() const {
        auto linear = [](std::uint8_t ch) {
            const double c = ch / 255.0;
            return c <= 0.03928 ? c / 12.92 : std::pow((c + 0.055) / 1.055, 2.4);
        };
        return 0.2126 * linear(r_) + 0.7152 * linear(g_) + 0.0722 * linear(b_);
    }

    bool operator==(const Color& other) const {
        return r_ == other.r_ && g_ == other.g_ && b_ == other.b_;
    }
    bool operator!=(const Color& other) const { return !(*this == other); }

private:
    static std::uint8_t quantize(double v) {
        return static_cast<std::uint8_t>(std::lround(std::clamp(v, 0.0, 1.0) * 255.0));
    }

    static void rgb_to_hsl(double r, double g, double b, double& h, double& s, double& l) {
        const double mx = std::max({r, g, b});
        const double mn = std::min({r, g, b});
        const double c = mx - mn;
        l = (mx + mn) / 2.0;
        if (c == 0.0) {
            h = 0.0;
            s = 0.0;
            return;
        }
        s = c / (1.0 - std::abs(2.0 * l - 1.0));
        if (mx == r)
            h = 60.0 * std::fmod((g - b) / c, 6.0);
        else if (mx == g)
            h = 60.0 * ((b - r) / c + 2.0);
        else
            h = 60.0 * ((r - g) / c + 4.0);
        if (h < 0.0) h += 360.0;
    }

    static void hsl_to_rgb(double h, double s, double l, double& r, double& g, double& b) {
        const double c = (1.0 - std::abs(2.0 * l - 1.0)) * s;
        const double hp = h / 60.0;
        const double x = c * (1.0 - std::abs(std::fmod(hp, 2.0) - 1.0));
        double r1 = 0, g1 = 0, b1 = 0;
        if (hp < 1.0) {
            r1 = c; g1 = x;
        } else if (hp < 2.0) {
            r1 = x; g1 = c;
        } else if (hp < 3.0) {
            g1 = c; b1 = x;
        } else if (hp < 4.0) {
            g1 = x; b1 = c;
        } else if (hp < 5.0) {
            r1 = x; b1 = c;
        } else {
            r1 = c; b1 = x;
        }
        const double m = l - c / 2.0;
        r = r1 + m;
        g = g1 + m;
        b = b1 + m;
    }

    std::uint8_t r_ = 0;
    std::uint8_t g_ = 0;
    std::uint8_t b_ = 0;
    double h_ = 0.0;
    double s_ = 0.0;
    double l_ = 0.0;
};

/// WCAG contrast ratio, (L_lighter + 0.05) / (L_darker + 0.05). Symmetric,
/// ranges [1, 21]; black on white is exactly 21.
inline double contrast_ratio(const Color& a, const Color& b) {
    const double la = a.relative_luminance();
    const double lb = b.relative_luminance();
    const double lighter = std::max(la, lb);
    const double darker = std::min(la, lb);
    return (lighter + 0.05) / (darker + 0.05);
}

} // namespace postergen
