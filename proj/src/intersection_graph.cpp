#include "rectcover/intersection_graph.hpp"

#include <algorithm>
#include <numeric>

namespace rectcover {

namespace {

std::vector<std::size_t> identity_or(std::span<std::size_t const> rect_index,
                                     std::size_t n) {
    if (rect_index.empty()) {
        std::vector<std::size_t> ids(n);
        std::iota(ids.begin(), ids.end(), std::size_t{0});
        return ids;
    }
    return {rect_index.begin(), rect_index.end()};
}

void add_edge(BitMatrix& m, std::vector<std::vector<Vertex>>& lists,
              Vertex u, Vertex v) {
    m.set(u, v);
    m.set(v, u);
    lists[u].push_back(v);
    lists[v].push_back(u);
}

} // namespace

IntersectionGraph IntersectionGraph::from_core(std::shared_ptr<Core> core) {
    std::size_t const n = core->matrix.size();
    for (auto& list : core->lists) {
        std::sort(list.begin(), list.end());
    }
    IntersectionGraph g;
    g.live_.assign((n + 63) / 64, 0);
    for (std::size_t v = 0; v < n; ++v) {
        g.live_[v / 64] |= std::uint64_t{1} << (v % 64);
    }
    g.degree_.resize(n);
    for (std::size_t v = 0; v < n; ++v) {
        g.degree_[v] = core->lists[v].size();
    }
    g.live_count_ = n;
    g.core_ = std::move(core);
    return g;
}

IntersectionGraph build_graph(std::span<Rectangle const> rects,
                              std::span<std::size_t const> rect_index) {
    std::size_t const n = rects.size();
    auto core = std::make_shared<IntersectionGraph::Core>();
    core->matrix = BitMatrix(n);
    core->lists.resize(n);
    core->rect_index = identity_or(rect_index, n);

    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), Vertex{0});
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
        return rects[a].lo.x < rects[b].lo.x;
    });

    // Every active rectangle starts at or before the current lo.x, so x-spans
    // overlap exactly when the active one ends strictly after it.
    std::vector<Vertex> active;
    for (Vertex v : order) {
        Rectangle const& r = rects[v];
        std::erase_if(active, [&](Vertex a) { return rects[a].hi.x <= r.lo.x; });
        for (Vertex a : active) {
            if (rects[a].lo.y < r.hi.y && r.lo.y < rects[a].hi.y) {
                add_edge(core->matrix, core->lists, a, v);
            }
        }
        active.push_back(v);
    }
    return IntersectionGraph::from_core(std::move(core));
}

IntersectionGraph build_graph_pairwise(std::span<Rectangle const> rects,
                                       std::span<std::size_t const> rect_index) {
    std::size_t const n = rects.size();
    auto core = std::make_shared<IntersectionGraph::Core>();
    core->matrix = BitMatrix(n);
    core->lists.resize(n);
    core->rect_index = identity_or(rect_index, n);
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (interiors_intersect(rects[u], rects[v])) {
                add_edge(core->matrix, core->lists, u, v);
            }
        }
    }
    return IntersectionGraph::from_core(std::move(core));
}

VertexSet IntersectionGraph::vertices() const {
    VertexSet out;
    out.reserve(live_count_);
    for_each_bit(live_, [&](Vertex v) { out.push_back(v); });
    return out;
}

VertexSet IntersectionGraph::closed_neighborhood(Vertex v) const {
    VertexSet out;
    out.reserve(degree_[v] + 1);
    bool self_added = false;
    for (Vertex u : core_->lists[v]) {
        if (!self_added && u > v) {
            out.push_back(v);
            self_added = true;
        }
        if (live(u)) {
            out.push_back(u);
        }
    }
    if (!self_added) {
        out.push_back(v);
    }
    return out;
}

std::size_t IntersectionGraph::edge_count() const {
    std::size_t twice = 0;
    for (std::size_t d : degree_) {
        twice += d;
    }
    return twice / 2;
}

IntersectionGraph IntersectionGraph::remove_vertices(
    std::span<Vertex const> removed) const {
    IntersectionGraph g = *this;
    std::vector<std::uint64_t> gone(live_.size(), 0);
    for (Vertex v : removed) {
        if (g.live(v)) {
            gone[v / 64] |= std::uint64_t{1} << (v % 64);
            g.live_[v / 64] &= ~(std::uint64_t{1} << (v % 64));
            --g.live_count_;
        }
    }
    for_each_bit(gone, [&](Vertex v) {
        for (Vertex u : core_->lists[v]) {
            if (g.live(u)) {
                --g.degree_[u];
            }
        }
        g.degree_[v] = 0;
    });
    return g;
}

bool operator==(IntersectionGraph const& a, IntersectionGraph const& b) {
    if (a.id_count() != b.id_count() || a.live_ != b.live_ ||
        a.degree_ != b.degree_) {
        return false;
    }
    if (a.core_ == b.core_) {
        return true;
    }
    for (Vertex v = 0; v < a.id_count(); ++v) {
        if (a.rect_index(v) != b.rect_index(v) ||
            a.core_->lists[v] != b.core_->lists[v]) {
            return false;
        }
        auto ra = a.adjacency_row(v);
        auto rb = b.adjacency_row(v);
        if (!std::equal(ra.begin(), ra.end(), rb.begin(), rb.end())) {
            return false;
        }
    }
    return true;
}

} // namespace rectcover
