#ifndef RECTCOVER_INTERSECTION_GRAPH_HPP
#define RECTCOVER_INTERSECTION_GRAPH_HPP

#include "rectcover/geometry.hpp"

#include <bit>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace rectcover {

using Vertex = std::size_t;
// Sorted ascending, no duplicates.
using VertexSet = std::vector<Vertex>;

// Row-major square bit matrix, one 64-bit word per 64 columns.
class BitMatrix {
public:
    BitMatrix() = default;
    explicit BitMatrix(std::size_t n)
        : n_(n), words_per_row_((n + 63) / 64), bits_(n * words_per_row_, 0) {}

    std::size_t size() const { return n_; }
    std::size_t words_per_row() const { return words_per_row_; }

    bool test(std::size_t r, std::size_t c) const {
        return (bits_[r * words_per_row_ + c / 64] >> (c % 64)) & 1u;
    }
    void set(std::size_t r, std::size_t c) {
        bits_[r * words_per_row_ + c / 64] |= std::uint64_t{1} << (c % 64);
    }
    std::span<std::uint64_t const> row(std::size_t r) const {
        return {bits_.data() + r * words_per_row_, words_per_row_};
    }

private:
    std::size_t n_ = 0;
    std::size_t words_per_row_ = 0;
    std::vector<std::uint64_t> bits_;
};

// Intersection graph over a fixed rectangle list, viewed through a mask of
// live vertices. Vertex ids are the positions in the list the graph was
// built from and never change; removing vertices yields a new view that
// shares the adjacency data and carries residual degrees.
class IntersectionGraph {
public:
    IntersectionGraph() = default;

    // Total number of vertex ids, live or removed.
    std::size_t id_count() const { return core_ ? core_->matrix.size() : 0; }
    // Number of live vertices.
    std::size_t vertex_count() const { return live_count_; }
    bool empty() const { return live_count_ == 0; }

    bool live(Vertex v) const { return (live_[v / 64] >> (v % 64)) & 1u; }
    // Adjacency of the underlying graph; callers restrict to live vertices.
    bool adjacent(Vertex u, Vertex v) const { return core_->matrix.test(u, v); }
    // Number of live neighbours, 0 for removed vertices.
    std::size_t degree(Vertex v) const { return degree_[v]; }
    std::size_t rect_index(Vertex v) const { return core_->rect_index[v]; }

    std::span<std::uint64_t const> adjacency_row(Vertex v) const {
        return core_->matrix.row(v);
    }
    std::span<std::uint64_t const> live_mask() const { return live_; }
    // Neighbours in the full graph, ascending.
    std::span<Vertex const> neighbors_all(Vertex v) const {
        return core_->lists[v];
    }

    VertexSet vertices() const;
    VertexSet closed_neighborhood(Vertex v) const;
    std::size_t edge_count() const;

    // Induced subgraph on the live vertices outside `removed`.
    IntersectionGraph remove_vertices(std::span<Vertex const> removed) const;

    friend bool operator==(IntersectionGraph const& a,
                           IntersectionGraph const& b);

    friend IntersectionGraph build_graph(std::span<Rectangle const>,
                                         std::span<std::size_t const>);
    friend IntersectionGraph build_graph_pairwise(std::span<Rectangle const>,
                                                  std::span<std::size_t const>);

private:
    struct Core {
        BitMatrix matrix;
        std::vector<std::vector<Vertex>> lists;
        std::vector<std::size_t> rect_index;
    };

    static IntersectionGraph from_core(std::shared_ptr<Core> core);

    std::shared_ptr<Core const> core_;
    std::vector<std::uint64_t> live_;
    std::vector<std::size_t> degree_;
    std::size_t live_count_ = 0;
};

// Plane sweep over x: rectangles are visited by increasing lo.x against the
// set of rectangles whose open x-span is still active, so the cost is
// O(n log n + active-set probes). `rect_index` maps vertex ids back to
// instance indices; when empty, vertex v maps to v.
IntersectionGraph build_graph(std::span<Rectangle const> rects,
                              std::span<std::size_t const> rect_index = {});

// O(n^2) reference construction.
IntersectionGraph build_graph_pairwise(std::span<Rectangle const> rects,
                                       std::span<std::size_t const> rect_index = {});

template <typename Fn>
void for_each_bit(std::span<std::uint64_t const> words, Fn&& fn) {
    for (std::size_t w = 0; w < words.size(); ++w) {
        std::uint64_t bits = words[w];
        while (bits != 0) {
            fn(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
            bits &= bits - 1;
        }
    }
}

} // namespace rectcover

#endif
