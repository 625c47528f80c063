#pragma once

#include <algorithm>

namespace postergen {

/// Axis-aligned rectangle in inches; origin at the canvas top-left.
struct Rect {
    double x = 0.0;
    double y = 0.0;
    double w = 0.0;
    double h = 0.0;

    double right() const { return x + w; }
    double bottom() const { return y + h; }
    double area() const { return w * h; }

    bool contains(const Rect& inner, double tol = 1e-9) const {
        return inner.x >= x - tol && inner.y >= y - tol &&
               inner.right() <= right() + tol && inner.bottom() <= bottom() + tol;
    }

    /// True when the interiors overlap (shared edges do not count).
    bool intersects(const Rect& other, double tol = 1e-9) const {
        const double ix = std::max(x, other.x);
        const double iy = std::max(y, other.y);
        const double ix2 = std::min(right(), other.right());
        const double iy2 = std::min(bottom(), other.bottom());
        return ix2 - ix > tol && iy2 - iy > tol;
    }

    /// Smallest rectangle covering both.
    Rect united(const Rect& other) const {
        if (w <= 0.0 && h <= 0.0) return other;
        const double nx = std::min(x, other.x);
        const double ny = std::min(y, other.y);
        const double nr = std::max(right(), other.right());
        const double nb = std::max(bottom(), other.bottom());
        return {nx, ny, nr - nx, nb - ny};
    }
};

/// Per-side spacing, clockwise from the top, in inches.
struct Insets {
    double top = 0.0;
    double right = 0.0;
    double bottom = 0.0;
    double left = 0.0;

    double horizontal() const { return left + right; }
    double vertical() const { return top + bottom; }
};

} // namespace postergen
