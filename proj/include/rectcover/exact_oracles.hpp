#ifndef RECTCOVER_EXACT_ORACLES_HPP
#define RECTCOVER_EXACT_ORACLES_HPP

// Brute-force solvers for small instances. They share no code with the
// sweep or the simplicial search and serve as ground truth for both.

#include "rectcover/clique_engine.hpp"
#include "rectcover/geometry.hpp"
#include "rectcover/intersection_graph.hpp"

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace rectcover {

// Size caps keep each oracle call well under a second. Neither may exceed 64.
struct OracleLimits {
    std::size_t mis_cap = 25;
    std::size_t mcc_cap = 18;
};

class OracleCapExceeded : public std::length_error {
public:
    using std::length_error::length_error;
};

// Midpoints of the elementary cells of the grid spanned by all distinct
// rectangle edge coordinates. Membership in every rectangle is constant on
// the open cell, so these points see every achievable coverage set.
std::vector<Point> candidate_points(std::span<Rectangle const> rects);

// Deepest candidate point; the first one in (x, y) cell order on ties.
// Throws std::invalid_argument on empty input.
CliqueWitness max_clique_candidates(std::span<Rectangle const> rects);

struct ExactMis {
    std::size_t size = 0;
    VertexSet members;
};

// Branch and bound on the live vertices of g: branch on a vertex of maximum
// degree among the candidates (exclude it, or take it and drop its
// neighbours), pruning when current + remaining cannot beat the best.
ExactMis exact_mis(IntersectionGraph const& g, OracleLimits const& limits = {});

struct ExactMcc {
    std::size_t size = 0;
    std::vector<Point> points;
};

// Minimum piercing set. Candidates are cell midpoints deduplicated by
// coverage set, keeping only maximal sets; the minimum cover over them is
// found by iterative deepening below a greedy upper bound.
ExactMcc exact_mcc(std::span<Rectangle const> rects, OracleLimits const& limits = {});

// Live vertices whose closed neighbourhood is a clique.
VertexSet simplicial_scan(IntersectionGraph const& g);

// Every rectangle has some point in its open interior.
bool verify_cover(std::span<Rectangle const> rects, std::span<Point const> points);

// assignment[i] indexes a point inside rects[i], for every i.
bool verify_cover_assignment(std::span<Rectangle const> rects,
                             std::span<Point const> points,
                             std::span<std::size_t const> assignment);

// Members are pairwise interior-disjoint.
bool verify_independent(std::span<Rectangle const> rects,
                        std::span<std::size_t const> members);

} // namespace rectcover

#endif
