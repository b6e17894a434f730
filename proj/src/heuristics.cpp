#include "rectcover/heuristics.hpp"

#include "rectcover/clique_engine.hpp"
#include "rectcover/intersection_graph.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace rectcover {

namespace {

using steady = std::chrono::steady_clock;

constexpr std::size_t unassigned = std::numeric_limits<std::size_t>::max();

// Non-dominated rectangles; vertex v of any graph built here is kept[v].
struct Reduced {
    std::vector<std::size_t> kept;
    std::vector<std::size_t> removed;
    std::vector<Rectangle> rects;
};

Reduced reduce(Instance const& instance) {
    auto split = filter_dominated(instance.rects);
    Reduced out{std::move(split.kept), std::move(split.removed), {}};
    out.rects.reserve(out.kept.size());
    for (std::size_t i : out.kept) {
        out.rects.push_back(instance.rects[i]);
    }
    return out;
}

// Max clique among the live vertices of g, as vertex ids.
VertexSet max_clique_of(IntersectionGraph const& g, Reduced const& red,
                        Point& stab) {
    VertexSet live = g.vertices();
    std::vector<Rectangle> boxes;
    boxes.reserve(live.size());
    for (Vertex v : live) {
        boxes.push_back(red.rects[v]);
    }
    CliqueWitness w = max_clique_sweep(boxes);
    stab = w.stab;
    VertexSet members;
    members.reserve(w.members.size());
    for (std::size_t i : w.members) {
        members.push_back(live[i]);
    }
    return members;
}

// A dominated rectangle contains some kept rectangle, whose point lies in
// its interior as well.
void assign_dominated(Instance const& instance, Reduced const& red,
                      CoverResult& cover) {
    for (std::size_t i : red.removed) {
        Rectangle const& outer = instance.rects[i];
        for (std::size_t j : red.kept) {
            if (contains(outer, instance.rects[j])) {
                cover.assignment[i] = cover.assignment[j];
                break;
            }
        }
    }
}

void record_stab(CoverResult& cover, Reduced const& red, VertexSet const& stabbed,
                 Point p) {
    std::size_t const idx = cover.points.size();
    cover.points.push_back(p);
    for (Vertex v : stabbed) {
        cover.assignment[red.kept[v]] = idx;
    }
    ++cover.iterations;
}

} // namespace

CoverResult gcc(Instance const& instance) {
    auto const start = steady::now();
    Reduced const red = reduce(instance);
    CoverResult cover;
    cover.assignment.assign(instance.rects.size(), unassigned);

    // No adjacency is needed here; the residual is a plain list of vertices.
    VertexSet residual(red.kept.size());
    for (Vertex v = 0; v < residual.size(); ++v) {
        residual[v] = v;
    }
    std::vector<Rectangle> boxes;
    while (!residual.empty()) {
        boxes.clear();
        for (Vertex v : residual) {
            boxes.push_back(red.rects[v]);
        }
        CliqueWitness const w = max_clique_sweep(boxes);
        VertexSet members;
        for (std::size_t i : w.members) {
            members.push_back(residual[i]);
        }
        record_stab(cover, red, members, w.stab);
        ++cover.phi_count;

        VertexSet next;
        next.reserve(residual.size() - members.size());
        std::set_difference(residual.begin(), residual.end(), members.begin(),
                            members.end(), std::back_inserter(next));
        residual = std::move(next);
    }
    assign_dominated(instance, red, cover);
    cover.elapsed = steady::now() - start;
    return cover;
}

CoverResult gcc_i(Instance const& instance) {
    auto const start = steady::now();
    Reduced const red = reduce(instance);
    CoverResult cover;
    cover.assignment.assign(instance.rects.size(), unassigned);

    IntersectionGraph g = build_graph(red.rects, red.kept);
    while (!g.empty()) {
        if (auto w = find_simplicial(g, red.rects)) {
            record_stab(cover, red, w->neighborhood, w->stab);
            ++cover.theta_count;
            g = g.remove_vertices(w->neighborhood);
        } else {
            Point stab;
            VertexSet members = max_clique_of(g, red, stab);
            record_stab(cover, red, members, stab);
            ++cover.phi_count;
            g = g.remove_vertices(members);
        }
    }
    assign_dominated(instance, red, cover);
    cover.elapsed = steady::now() - start;
    return cover;
}

namespace {

enum class Fallback { max_degree_vertex, max_clique };

IndependentSetResult simplicial_mis(Instance const& instance, Fallback fallback) {
    auto const start = steady::now();
    Reduced const red = reduce(instance);
    IndependentSetResult result;

    IntersectionGraph g = build_graph(red.rects, red.kept);
    while (!g.empty()) {
        if (auto w = find_simplicial(g, red.rects)) {
            result.members.push_back(red.kept[w->vertex]);
            g = g.remove_vertices(w->neighborhood);
        } else if (fallback == Fallback::max_degree_vertex) {
            Vertex best = 0;
            std::size_t best_degree = 0;
            bool any = false;
            for (Vertex v : g.vertices()) {
                if (!any || g.degree(v) > best_degree) {
                    best = v;
                    best_degree = g.degree(v);
                    any = true;
                }
            }
            Vertex const drop[] = {best};
            g = g.remove_vertices(drop);
        } else {
            Point stab;
            g = g.remove_vertices(max_clique_of(g, red, stab));
        }
    }
    std::sort(result.members.begin(), result.members.end());
    result.elapsed = steady::now() - start;
    return result;
}

} // namespace

IndependentSetResult mis_greedy(Instance const& instance) {
    return simplicial_mis(instance, Fallback::max_degree_vertex);
}

IndependentSetResult mis_i(Instance const& instance) {
    return simplicial_mis(instance, Fallback::max_clique);
}

std::string_view algorithm_name(Algorithm a) {
    switch (a) {
    case Algorithm::gcc: return "gcc";
    case Algorithm::gcc_i: return "gcc-i";
    case Algorithm::mis: return "mis";
    case Algorithm::mis_i: return "mis-i";
    }
    return "?";
}

bool parse_algorithm(std::string_view name, Algorithm& out) {
    for (Algorithm a : all_algorithms) {
        std::string canonical(algorithm_name(a));
        std::string alt = canonical;
        std::replace(alt.begin(), alt.end(), '-', '_');
        if (name == canonical || name == alt) {
            out = a;
            return true;
        }
    }
    return false;
}

} // namespace rectcover
