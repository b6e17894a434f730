#include "rectcover/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace rectcover {

namespace {

bool finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

// Uniform double in [0,1) from the top 53 bits of one engine draw.
double unit_draw(std::mt19937_64& engine) {
    return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

} // namespace

Rectangle make_rectangle(Point p, Point q) {
    if (!finite(p) || !finite(q)) {
        throw GeometryError(GeometryErrc::non_finite_coordinate,
                            "rectangle corner is not finite");
    }
    if (p.x == q.x || p.y == q.y) {
        throw GeometryError(GeometryErrc::degenerate_rectangle,
                            "rectangle has zero width or height");
    }
    return {{std::min(p.x, q.x), std::min(p.y, q.y)},
            {std::max(p.x, q.x), std::max(p.y, q.y)}};
}

void validate_region(Region const& region) {
    bool const ok = std::isfinite(region.x_min) && std::isfinite(region.x_max) &&
                    std::isfinite(region.y_min) && std::isfinite(region.y_max) &&
                    region.x_min < region.x_max && region.y_min < region.y_max;
    if (!ok) {
        throw GeometryError(GeometryErrc::invalid_region,
                            "region must satisfy x_min < x_max and y_min < y_max");
    }
}

Instance generate_instance(std::size_t n, Region const& region,
                           std::uint64_t seed) {
    validate_region(region);
    Instance inst;
    inst.seed = seed;
    inst.region = region;
    inst.n_requested = n;
    inst.rects.reserve(n);

    std::mt19937_64 engine(seed);
    double const w = region.x_max - region.x_min;
    double const h = region.y_max - region.y_min;
    auto draw_point = [&] {
        double const x = region.x_min + w * unit_draw(engine);
        double const y = region.y_min + h * unit_draw(engine);
        return Point{x, y};
    };

    while (inst.rects.size() < n) {
        Point const p = draw_point();
        Point const q = draw_point();
        if (p.x == q.x || p.y == q.y) {
            continue;
        }
        inst.rects.push_back(make_rectangle(p, q));
    }
    return inst;
}

DominationSplit filter_dominated(std::span<Rectangle const> rects) {
    std::size_t const n = rects.size();
    // Candidates for "inner" are scanned in lo.x order, starting at the
    // outer rectangle's lo.x and stopping once lo.x passes its hi.x.
    std::vector<std::size_t> by_lo_x(n);
    std::iota(by_lo_x.begin(), by_lo_x.end(), std::size_t{0});
    std::sort(by_lo_x.begin(), by_lo_x.end(), [&](std::size_t a, std::size_t b) {
        return rects[a].lo.x < rects[b].lo.x;
    });

    std::vector<char> dominated(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        Rectangle const& outer = rects[i];
        auto it = std::lower_bound(
            by_lo_x.begin(), by_lo_x.end(), outer.lo.x,
            [&](std::size_t idx, double x) { return rects[idx].lo.x < x; });
        for (; it != by_lo_x.end() && rects[*it].lo.x < outer.hi.x; ++it) {
            if (*it != i && contains(outer, rects[*it])) {
                dominated[i] = 1;
                break;
            }
        }
    }

    DominationSplit split;
    for (std::size_t i = 0; i < n; ++i) {
        (dominated[i] ? split.removed : split.kept).push_back(i);
    }
    return split;
}

std::optional<Rectangle> common_intersection(std::span<Rectangle const> rects) {
    if (rects.empty()) {
        return std::nullopt;
    }
    Rectangle box = rects.front();
    for (Rectangle const& r : rects.subspan(1)) {
        box.lo.x = std::max(box.lo.x, r.lo.x);
        box.lo.y = std::max(box.lo.y, r.lo.y);
        box.hi.x = std::min(box.hi.x, r.hi.x);
        box.hi.y = std::min(box.hi.y, r.hi.y);
    }
    if (!(box.lo.x < box.hi.x && box.lo.y < box.hi.y)) {
        return std::nullopt;
    }
    return box;
}

} // namespace rectcover
