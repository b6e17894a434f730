#ifndef RECTCOVER_CLIQUE_ENGINE_HPP
#define RECTCOVER_CLIQUE_ENGINE_HPP

#include "rectcover/geometry.hpp"
#include "rectcover/intersection_graph.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace rectcover {

// `members` index into the rectangle list passed to the producing call;
// `stab` lies in the open interior of each of them.
struct CliqueWitness {
    std::vector<std::size_t> members;
    Point stab;
};

struct SimplicialWitness {
    Vertex vertex = 0;
    VertexSet neighborhood;
    Point stab;
};

// Maximum-depth point of a rectangle arrangement by a top-to-bottom sweep.
//
// x is split into elementary intervals between consecutive distinct
// x-coordinates. Events are processed by decreasing y; a top edge adds +1
// and a bottom edge adds -1 over the rectangle's open x-span in a
// range-add/range-max tree. After all events at one y the tree describes the
// open gap down to the next event y, and the deepest (gap, interval) cell
// seen so far wins; ties keep the earliest cell in sweep order (higher y,
// then lower x). The stab is that cell's midpoint and the members are all
// rectangles whose open box holds it.
//
// Throws std::invalid_argument on empty input.
CliqueWitness max_clique_sweep(std::span<Rectangle const> rects);

// True when every pair of `s` is adjacent. Empty and singleton sets are
// cliques.
bool is_clique(IntersectionGraph const& g, std::span<Vertex const> s);

// Diagnostics of one find_simplicial call.
struct SimplicialSearchStats {
    std::uint64_t matrix_reads = 0;
    VertexSet marked; // vertices ruled out, ascending
};

// Searches the live vertices of `g` for a simplicial vertex (closed
// neighbourhood is a clique). Candidates are taken in increasing residual
// degree, ties by lower id. When a candidate v fails, every member of N(v)
// is marked, since none of them can be simplicial, and for each
// non-adjacent pair a, b in N(v) every common neighbour of a and b is
// marked too. Such a pair is never seen twice in one call (any later
// candidate containing both would be one of those common neighbours), which
// keeps the matrix reads of a call near O(n^2). The search ends at the
// first simplicial vertex or once all vertices are marked.
//
// `rects` is indexed by vertex id and supplies the stab point, the centre
// of the neighbourhood's common box.
std::optional<SimplicialWitness> find_simplicial(
    IntersectionGraph const& g, std::span<Rectangle const> rects,
    SimplicialSearchStats* stats = nullptr);

} // namespace rectcover

#endif
