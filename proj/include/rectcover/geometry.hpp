#ifndef RECTCOVER_GEOMETRY_HPP
#define RECTCOVER_GEOMETRY_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace rectcover {

struct Point {
    double x = 0.0;
    double y = 0.0;

    bool operator==(Point const&) const = default;
};

// Closed axis-parallel box with lo < hi on both axes. Intersection and
// point-membership tests use the open interior.
struct Rectangle {
    Point lo;
    Point hi;

    bool operator==(Rectangle const&) const = default;

    double width() const { return hi.x - lo.x; }
    double height() const { return hi.y - lo.y; }
    Point center() const { return {0.5 * (lo.x + hi.x), 0.5 * (lo.y + hi.y)}; }
};

struct Region {
    double x_min = 0.0;
    double x_max = 1.0;
    double y_min = 0.0;
    double y_max = 1.0;

    bool operator==(Region const&) const = default;
};

inline constexpr Region unit_square{};

// Rectangles in generation order; the position in `rects` is the canonical
// rectangle index used by every result type.
struct Instance {
    std::vector<Rectangle> rects;
    std::uint64_t seed = 0;
    Region region{};
    std::size_t n_requested = 0;
};

enum class GeometryErrc {
    degenerate_rectangle,
    invalid_region,
    non_finite_coordinate,
};

class GeometryError : public std::invalid_argument {
public:
    GeometryError(GeometryErrc code, char const* what)
        : std::invalid_argument(what), code_(code) {}

    GeometryErrc code() const noexcept { return code_; }

private:
    GeometryErrc code_;
};

// Normalizes two opposite corners into a rectangle. Throws GeometryError
// (degenerate_rectangle) when the corners share an x or a y coordinate.
Rectangle make_rectangle(Point p, Point q);

// Throws GeometryError(invalid_region) unless x_min < x_max and y_min < y_max
// with finite bounds.
void validate_region(Region const& region);

// Each rectangle is spanned by two points drawn coordinate-wise uniformly in
// `region`; degenerate pairs are redrawn. The generator is std::mt19937_64
// seeded with `seed`, mapped to [0,1) through the top 53 bits, so results
// are bit-identical across runs of the same build.
Instance generate_instance(std::size_t n, Region const& region,
                           std::uint64_t seed);

inline bool interiors_intersect(Rectangle const& a, Rectangle const& b) {
    return a.lo.x < b.hi.x && b.lo.x < a.hi.x &&
           a.lo.y < b.hi.y && b.lo.y < a.hi.y;
}

// Closed-box containment, excluding the identical rectangle.
inline bool contains(Rectangle const& outer, Rectangle const& inner) {
    return outer.lo.x <= inner.lo.x && inner.hi.x <= outer.hi.x &&
           outer.lo.y <= inner.lo.y && inner.hi.y <= outer.hi.y &&
           outer != inner;
}

inline bool strictly_inside(Point p, Rectangle const& r) {
    return r.lo.x < p.x && p.x < r.hi.x && r.lo.y < p.y && p.y < r.hi.y;
}

struct DominationSplit {
    std::vector<std::size_t> kept;
    std::vector<std::size_t> removed;
};

// A rectangle is dominated when it contains some other rectangle of the
// set. All removals are decided against the original set.
DominationSplit filter_dominated(std::span<Rectangle const> rects);

// Box common to all rectangles, or nullopt when it has no area. Empty input
// yields nullopt.
std::optional<Rectangle> common_intersection(std::span<Rectangle const> rects);

} // namespace rectcover

#endif
