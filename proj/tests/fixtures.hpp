#ifndef RECTCOVER_TESTS_FIXTURES_HPP
#define RECTCOVER_TESTS_FIXTURES_HPP

#include "rectcover/geometry.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace rectcover::fixtures {

inline Rectangle box(double x0, double y0, double x1, double y1) {
    return {{x0, y0}, {x1, y1}};
}

inline Instance instance_of(std::vector<Rectangle> rects) {
    Instance inst;
    inst.n_requested = rects.size();
    inst.rects = std::move(rects);
    return inst;
}

// Path graph 0 - 1 - 2.
inline std::vector<Rectangle> three_chain() {
    return {box(0, 0, 3, 1), box(2, 0, 5, 1), box(4, 0, 7, 1)};
}

// Pairwise overlapping; common box (1,2)x(1,2).
inline std::vector<Rectangle> triangle() {
    return {box(0, 0, 2, 2), box(1, 0, 3, 2), box(0, 1, 3, 3)};
}

// 4-cycle top - left - bottom - right - top, no simplicial vertex.
inline std::vector<Rectangle> picture_frame() {
    return {box(0, 2, 3, 3),          // top
            box(-0.5, -0.5, 0.5, 3.5), // left
            box(0, 0, 3, 1),          // bottom
            box(2.5, -0.5, 3.5, 3.5)}; // right
}

inline std::vector<Rectangle> disjoint(std::size_t k) {
    std::vector<Rectangle> out;
    for (std::size_t i = 0; i < k; ++i) {
        double const x = 2.0 * static_cast<double>(i);
        out.push_back(box(x, 0, x + 1, 1));
    }
    return out;
}

// Corners on a small integer grid, so shared edges, touching corners, and
// duplicate rectangles are common.
inline Instance grid_instance(std::size_t n, int grid, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coord(0, grid);
    Instance inst;
    inst.seed = seed;
    inst.n_requested = n;
    inst.region = {0, static_cast<double>(grid), 0, static_cast<double>(grid)};
    while (inst.rects.size() < n) {
        Point p{double(coord(rng)), double(coord(rng))};
        Point q{double(coord(rng)), double(coord(rng))};
        if (p.x != q.x && p.y != q.y) {
            inst.rects.push_back(make_rectangle(p, q));
        }
    }
    return inst;
}

// Mix of continuous and grid instances with n drawn from [lo, hi].
class InstanceStream {
public:
    InstanceStream(std::uint64_t seed, std::size_t lo, std::size_t hi)
        : rng_(seed), size_(lo, hi) {}

    Instance next() {
        std::size_t const n = size_(rng_);
        std::uint64_t const s = rng_();
        if (count_++ % 4 == 3) {
            return grid_instance(n, 6, s);
        }
        return generate_instance(n, unit_square, s);
    }

private:
    std::mt19937_64 rng_;
    std::uniform_int_distribution<std::size_t> size_;
    std::size_t count_ = 0;
};

} // namespace rectcover::fixtures

#endif
