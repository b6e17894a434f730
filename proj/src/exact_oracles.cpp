#include "rectcover/exact_oracles.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

namespace rectcover {

namespace {

using Mask = std::uint64_t;
constexpr std::size_t max_cap = 64;

std::vector<double> sorted_unique(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

void check_cap(std::size_t n, std::size_t cap, char const* what) {
    if (cap > max_cap) {
        throw std::invalid_argument(std::string(what) + ": cap above 64");
    }
    if (n > cap) {
        throw OracleCapExceeded(std::string(what) + ": " + std::to_string(n) +
                                " exceeds cap " + std::to_string(cap));
    }
}

Mask bit(std::size_t i) { return Mask{1} << i; }

class MisSearch {
public:
    explicit MisSearch(std::vector<Mask> nbrs) : nbrs_(std::move(nbrs)) {}

    Mask run() {
        Mask all = nbrs_.empty() ? 0 : (~Mask{0} >> (64 - nbrs_.size()));
        expand(all, 0, 0);
        return best_set_;
    }

private:
    void expand(Mask cand, Mask chosen, int chosen_size) {
        if (cand == 0) {
            if (chosen_size > best_) {
                best_ = chosen_size;
                best_set_ = chosen;
            }
            return;
        }
        if (chosen_size + std::popcount(cand) <= best_) {
            return;
        }
        std::size_t pick = 0;
        int pick_degree = -1;
        for (Mask c = cand; c != 0; c &= c - 1) {
            auto const v = static_cast<std::size_t>(std::countr_zero(c));
            int const d = std::popcount(nbrs_[v] & cand);
            if (d > pick_degree) {
                pick = v;
                pick_degree = d;
            }
        }
        if (pick_degree == 0) {
            // Remaining candidates are pairwise independent.
            expand(0, chosen | cand, chosen_size + std::popcount(cand));
            return;
        }
        expand(cand & ~nbrs_[pick] & ~bit(pick), chosen | bit(pick), chosen_size + 1);
        expand(cand & ~bit(pick), chosen, chosen_size);
    }

    std::vector<Mask> nbrs_;
    int best_ = -1;
    Mask best_set_ = 0;
};

class CoverSearch {
public:
    CoverSearch(std::vector<Mask> sets, Mask universe)
        : sets_(std::move(sets)), universe_(universe) {
        for (Mask s : sets_) {
            widest_ = std::max(widest_, std::popcount(s));
        }
    }

    std::vector<std::size_t> greedy() const {
        std::vector<std::size_t> picks;
        Mask left = universe_;
        while (left != 0) {
            std::size_t best = 0;
            int gain = -1;
            for (std::size_t i = 0; i < sets_.size(); ++i) {
                int const g = std::popcount(sets_[i] & left);
                if (g > gain) {
                    gain = g;
                    best = i;
                }
            }
            picks.push_back(best);
            left &= ~sets_[best];
        }
        return picks;
    }

    std::vector<std::size_t> minimum() {
        std::vector<std::size_t> best = greedy();
        for (std::size_t depth = 0; depth < best.size(); ++depth) {
            stack_.clear();
            if (search(universe_, depth)) {
                return stack_;
            }
        }
        return best;
    }

private:
    bool search(Mask left, std::size_t budget) {
        if (left == 0) {
            return true;
        }
        if (budget == 0 ||
            static_cast<std::size_t>(widest_) * budget <
                static_cast<std::size_t>(std::popcount(left))) {
            return false;
        }
        Mask const must = left & -left;
        for (std::size_t i = 0; i < sets_.size(); ++i) {
            if ((sets_[i] & must) == 0) {
                continue;
            }
            stack_.push_back(i);
            if (search(left & ~sets_[i], budget - 1)) {
                return true;
            }
            stack_.pop_back();
        }
        return false;
    }

    std::vector<Mask> sets_;
    Mask universe_;
    int widest_ = 0;
    std::vector<std::size_t> stack_;
};

} // namespace

std::vector<Point> candidate_points(std::span<Rectangle const> rects) {
    std::vector<double> xs;
    std::vector<double> ys;
    for (Rectangle const& r : rects) {
        xs.push_back(r.lo.x);
        xs.push_back(r.hi.x);
        ys.push_back(r.lo.y);
        ys.push_back(r.hi.y);
    }
    xs = sorted_unique(std::move(xs));
    ys = sorted_unique(std::move(ys));

    std::vector<Point> pts;
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
        for (std::size_t j = 0; j + 1 < ys.size(); ++j) {
            pts.push_back({0.5 * (xs[i] + xs[i + 1]), 0.5 * (ys[j] + ys[j + 1])});
        }
    }
    return pts;
}

CliqueWitness max_clique_candidates(std::span<Rectangle const> rects) {
    if (rects.empty()) {
        throw std::invalid_argument("max_clique_candidates: no rectangles");
    }
    CliqueWitness best;
    for (Point p : candidate_points(rects)) {
        std::vector<std::size_t> inside;
        for (std::size_t i = 0; i < rects.size(); ++i) {
            if (strictly_inside(p, rects[i])) {
                inside.push_back(i);
            }
        }
        if (inside.size() > best.members.size()) {
            best.members = std::move(inside);
            best.stab = p;
        }
    }
    return best;
}

ExactMis exact_mis(IntersectionGraph const& g, OracleLimits const& limits) {
    check_cap(g.vertex_count(), limits.mis_cap, "exact_mis");
    VertexSet const verts = g.vertices();
    std::vector<Mask> nbrs(verts.size(), 0);
    for (std::size_t i = 0; i < verts.size(); ++i) {
        for (std::size_t j = 0; j < verts.size(); ++j) {
            if (i != j && g.adjacent(verts[i], verts[j])) {
                nbrs[i] |= bit(j);
            }
        }
    }
    Mask const chosen = MisSearch(std::move(nbrs)).run();
    ExactMis out;
    for (std::size_t i = 0; i < verts.size(); ++i) {
        if (chosen & bit(i)) {
            out.members.push_back(verts[i]);
        }
    }
    out.size = out.members.size();
    return out;
}

ExactMcc exact_mcc(std::span<Rectangle const> rects, OracleLimits const& limits) {
    check_cap(rects.size(), limits.mcc_cap, "exact_mcc");
    ExactMcc out;
    if (rects.empty()) {
        return out;
    }

    std::vector<std::pair<Mask, Point>> cands;
    for (Point p : candidate_points(rects)) {
        Mask cov = 0;
        for (std::size_t i = 0; i < rects.size(); ++i) {
            if (strictly_inside(p, rects[i])) {
                cov |= bit(i);
            }
        }
        if (cov != 0) {
            cands.emplace_back(cov, p);
        }
    }
    std::stable_sort(cands.begin(), cands.end(),
                     [](auto const& a, auto const& b) { return a.first < b.first; });
    cands.erase(std::unique(cands.begin(), cands.end(),
                            [](auto const& a, auto const& b) { return a.first == b.first; }),
                cands.end());

    std::vector<Mask> sets;
    std::vector<Point> points;
    for (std::size_t i = 0; i < cands.size(); ++i) {
        Mask const s = cands[i].first;
        bool const dominated = std::any_of(cands.begin(), cands.end(), [&](auto const& o) {
            return o.first != s && (s & o.first) == s;
        });
        if (!dominated) {
            sets.push_back(s);
            points.push_back(cands[i].second);
        }
    }

    Mask const universe = ~Mask{0} >> (64 - rects.size());
    for (std::size_t i : CoverSearch(sets, universe).minimum()) {
        out.points.push_back(points[i]);
    }
    out.size = out.points.size();
    return out;
}

VertexSet simplicial_scan(IntersectionGraph const& g) {
    VertexSet out;
    for (Vertex v : g.vertices()) {
        VertexSet const nbhd = g.closed_neighborhood(v);
        bool clique = true;
        for (std::size_t i = 0; clique && i < nbhd.size(); ++i) {
            for (std::size_t j = i + 1; j < nbhd.size(); ++j) {
                if (!g.adjacent(nbhd[i], nbhd[j])) {
                    clique = false;
                    break;
                }
            }
        }
        if (clique) {
            out.push_back(v);
        }
    }
    return out;
}

bool verify_cover(std::span<Rectangle const> rects, std::span<Point const> points) {
    return std::all_of(rects.begin(), rects.end(), [&](Rectangle const& r) {
        return std::any_of(points.begin(), points.end(),
                           [&](Point p) { return strictly_inside(p, r); });
    });
}

bool verify_cover_assignment(std::span<Rectangle const> rects,
                             std::span<Point const> points,
                             std::span<std::size_t const> assignment) {
    if (assignment.size() != rects.size()) {
        return false;
    }
    for (std::size_t i = 0; i < rects.size(); ++i) {
        if (assignment[i] >= points.size() ||
            !strictly_inside(points[assignment[i]], rects[i])) {
            return false;
        }
    }
    return true;
}

bool verify_independent(std::span<Rectangle const> rects,
                        std::span<std::size_t const> members) {
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            if (members[i] == members[j] ||
                interiors_intersect(rects[members[i]], rects[members[j]])) {
                return false;
            }
        }
    }
    return true;
}

} // namespace rectcover
