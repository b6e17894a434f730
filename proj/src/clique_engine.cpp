#include "rectcover/clique_engine.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace rectcover {

namespace {

// Range add, range max with the leftmost maximising leaf.
class MaxAddTree {
public:
    explicit MaxAddTree(std::size_t leaves)
        : n_(leaves), max_(4 * leaves, 0), add_(4 * leaves, 0),
          arg_(4 * leaves, 0) {
        build(1, 0, n_ - 1);
    }

    void add(std::size_t lo, std::size_t hi, int delta) {
        if (lo <= hi) {
            add(1, 0, n_ - 1, lo, hi, delta);
        }
    }
    int max() const { return max_[1]; }
    std::size_t argmax() const { return arg_[1]; }

private:
    void build(std::size_t node, std::size_t l, std::size_t r) {
        arg_[node] = l;
        if (l == r) {
            return;
        }
        std::size_t const m = (l + r) / 2;
        build(2 * node, l, m);
        build(2 * node + 1, m + 1, r);
    }

    void pull(std::size_t node) {
        std::size_t const a = 2 * node;
        std::size_t const b = 2 * node + 1;
        if (max_[a] >= max_[b]) {
            max_[node] = max_[a] + add_[node];
            arg_[node] = arg_[a];
        } else {
            max_[node] = max_[b] + add_[node];
            arg_[node] = arg_[b];
        }
    }

    void add(std::size_t node, std::size_t l, std::size_t r, std::size_t lo,
             std::size_t hi, int delta) {
        if (hi < l || r < lo) {
            return;
        }
        if (lo <= l && r <= hi) {
            max_[node] += delta;
            add_[node] += delta;
            return;
        }
        std::size_t const m = (l + r) / 2;
        add(2 * node, l, m, lo, hi, delta);
        add(2 * node + 1, m + 1, r, lo, hi, delta);
        pull(node);
    }

    std::size_t n_;
    std::vector<int> max_;
    std::vector<int> add_;
    std::vector<std::size_t> arg_;
};

struct Event {
    double y;
    std::size_t rect;
    int delta;
};

std::size_t index_of(std::vector<double> const& sorted, double v) {
    return static_cast<std::size_t>(
        std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin());
}

} // namespace

CliqueWitness max_clique_sweep(std::span<Rectangle const> rects) {
    if (rects.empty()) {
        throw std::invalid_argument("max_clique_sweep: no rectangles");
    }

    std::vector<double> xs;
    xs.reserve(2 * rects.size());
    for (Rectangle const& r : rects) {
        xs.push_back(r.lo.x);
        xs.push_back(r.hi.x);
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

    std::vector<Event> events;
    events.reserve(2 * rects.size());
    for (std::size_t i = 0; i < rects.size(); ++i) {
        events.push_back({rects[i].hi.y, i, +1});
        events.push_back({rects[i].lo.y, i, -1});
    }
    std::sort(events.begin(), events.end(),
              [](Event const& a, Event const& b) { return a.y > b.y; });

    // Interval k is the open span (xs[k], xs[k+1]).
    MaxAddTree tree(xs.size() - 1);
    int best = 0;
    Point stab{};
    for (std::size_t e = 0; e < events.size();) {
        double const y = events[e].y;
        for (; e < events.size() && events[e].y == y; ++e) {
            Rectangle const& r = rects[events[e].rect];
            tree.add(index_of(xs, r.lo.x), index_of(xs, r.hi.x) - 1,
                     events[e].delta);
        }
        if (e == events.size()) {
            break;
        }
        if (tree.max() > best) {
            best = tree.max();
            std::size_t const k = tree.argmax();
            stab = {0.5 * (xs[k] + xs[k + 1]), 0.5 * (y + events[e].y)};
        }
    }

    CliqueWitness out;
    out.stab = stab;
    for (std::size_t i = 0; i < rects.size(); ++i) {
        if (strictly_inside(stab, rects[i])) {
            out.members.push_back(i);
        }
    }
    assert(out.members.size() == static_cast<std::size_t>(best));
    return out;
}

bool is_clique(IntersectionGraph const& g, std::span<Vertex const> s) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            if (!g.adjacent(s[i], s[j])) {
                return false;
            }
        }
    }
    return true;
}

std::optional<SimplicialWitness> find_simplicial(
    IntersectionGraph const& g, std::span<Rectangle const> rects,
    SimplicialSearchStats* stats) {
    VertexSet order = g.vertices();
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
        return g.degree(a) < g.degree(b);
    });

    std::size_t const words = g.live_mask().size();
    std::vector<std::uint64_t> marked(words, 0);
    auto is_marked = [&](Vertex v) { return (marked[v / 64] >> (v % 64)) & 1u; };
    auto mark = [&](Vertex v) { marked[v / 64] |= std::uint64_t{1} << (v % 64); };
    std::uint64_t probes = 0;

    std::optional<SimplicialWitness> found;
    for (Vertex v : order) {
        if (is_marked(v)) {
            continue;
        }
        VertexSet nbhd = g.closed_neighborhood(v);

        std::vector<std::pair<Vertex, Vertex>> missing;
        for (std::size_t i = 0; i < nbhd.size(); ++i) {
            for (std::size_t j = i + 1; j < nbhd.size(); ++j) {
                ++probes;
                if (!g.adjacent(nbhd[i], nbhd[j])) {
                    missing.emplace_back(nbhd[i], nbhd[j]);
                }
            }
        }

        if (missing.empty()) {
            std::vector<Rectangle> boxes;
            boxes.reserve(nbhd.size());
            for (Vertex u : nbhd) {
                boxes.push_back(rects[u]);
            }
            auto common = common_intersection(boxes);
            assert(common.has_value());
            found = SimplicialWitness{v, std::move(nbhd), common->center()};
            break;
        }

        for (Vertex u : nbhd) {
            mark(u);
        }
        for (auto [a, b] : missing) {
            // Common neighbours of a and b: walk the shorter list, probe the
            // other row.
            if (g.degree(b) < g.degree(a)) {
                std::swap(a, b);
            }
            for (Vertex u : g.neighbors_all(a)) {
                if (!g.live(u) || is_marked(u)) {
                    continue;
                }
                ++probes;
                if (g.adjacent(b, u)) {
                    mark(u);
                }
            }
        }
    }

    if (stats != nullptr) {
        stats->matrix_reads = probes;
        stats->marked.clear();
        for (Vertex v : order) {
            if (is_marked(v)) {
                stats->marked.push_back(v);
            }
        }
        std::sort(stats->marked.begin(), stats->marked.end());
    }
    return found;
}

} // namespace rectcover
