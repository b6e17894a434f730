#ifndef RECTCOVER_HEURISTICS_HPP
#define RECTCOVER_HEURISTICS_HPP

#include "rectcover/geometry.hpp"

#include <chrono>
#include <cstddef>
#include <string_view>
#include <vector>

namespace rectcover {

// Stabbing points for an instance. `assignment[i]` is the index into
// `points` of a point inside rectangle i, for every instance rectangle
// including dominated ones. Equality ignores `elapsed`.
struct CoverResult {
    std::vector<Point> points;
    std::vector<std::size_t> assignment;
    std::size_t theta_count = 0; // stabs of simplicial neighbourhoods
    std::size_t phi_count = 0;   // stabs of maximum cliques
    std::size_t iterations = 0;
    std::chrono::nanoseconds elapsed{0};

    bool operator==(CoverResult const& o) const {
        return points == o.points && assignment == o.assignment &&
               theta_count == o.theta_count && phi_count == o.phi_count &&
               iterations == o.iterations;
    }
};

// Instance indices of pairwise interior-disjoint rectangles, ascending.
struct IndependentSetResult {
    std::vector<std::size_t> members;
    std::chrono::nanoseconds elapsed{0};

    bool operator==(IndependentSetResult const& o) const {
        return members == o.members;
    }
};

// Greedy clique cover: repeatedly stab and delete a maximum clique of the
// non-dominated residual set.
CoverResult gcc(Instance const& instance);

// Greedy clique cover preferring simplicial neighbourhoods; falls back to a
// maximum clique when no simplicial vertex remains.
CoverResult gcc_i(Instance const& instance);

// Greedy independent set: take a simplicial vertex and drop its
// neighbourhood, otherwise drop one vertex of maximum residual degree
// (lowest id on ties).
IndependentSetResult mis_greedy(Instance const& instance);

// As mis_greedy, but the fallback drops every member of a maximum clique.
IndependentSetResult mis_i(Instance const& instance);

enum class Algorithm { gcc, gcc_i, mis, mis_i };

inline constexpr Algorithm all_algorithms[] = {Algorithm::gcc, Algorithm::gcc_i,
                                               Algorithm::mis, Algorithm::mis_i};

std::string_view algorithm_name(Algorithm a);
// Accepts "gcc", "gcc-i", "mis", "mis-i" (underscores also accepted).
bool parse_algorithm(std::string_view name, Algorithm& out);
inline bool is_cover_algorithm(Algorithm a) {
    return a == Algorithm::gcc || a == Algorithm::gcc_i;
}

} // namespace rectcover

#endif
