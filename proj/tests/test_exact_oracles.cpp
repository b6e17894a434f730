#include "fixtures.hpp"

#include "rectcover/exact_oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <bit>
#include <cstdint>

using namespace rectcover;
using fixtures::box;

namespace {

// Largest pairwise interior-disjoint subset by trying every subset.
std::size_t brute_mis(std::span<Rectangle const> r) {
    std::size_t const n = r.size();
    std::size_t best = 0;
    for (std::uint32_t m = 0; m < (1u << n); ++m) {
        bool ok = true;
        for (std::size_t i = 0; ok && i < n; ++i) {
            for (std::size_t j = i + 1; ok && j < n; ++j) {
                ok = !((m >> i & 1u) && (m >> j & 1u) && interiors_intersect(r[i], r[j]));
            }
        }
        if (ok) {
            best = std::max<std::size_t>(best, std::popcount(m));
        }
    }
    return best;
}

// Smallest number of candidate points stabbing everything, trying every
// subset of distinct coverage masks in order of size.
std::size_t brute_mcc(std::span<Rectangle const> r) {
    if (r.empty()) {
        return 0;
    }
    std::vector<std::uint32_t> masks;
    for (Point p : candidate_points(r)) {
        std::uint32_t m = 0;
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (strictly_inside(p, r[i])) {
                m |= 1u << i;
            }
        }
        if (m != 0 && std::find(masks.begin(), masks.end(), m) == masks.end()) {
            masks.push_back(m);
        }
    }
    std::uint32_t const all = (1u << r.size()) - 1;
    // Any size-s combination of masks covering everything?
    auto covers = [&](auto&& self, std::size_t from, std::size_t left,
                      std::uint32_t cov) -> bool {
        if (left == 0) {
            return cov == all;
        }
        for (std::size_t i = from; i < masks.size(); ++i) {
            if (self(self, i + 1, left - 1, cov | masks[i])) {
                return true;
            }
        }
        return false;
    };
    for (std::size_t s = 1;; ++s) {
        if (covers(covers, 0, s, 0)) {
            return s;
        }
    }
}

} // namespace

TEST_CASE("candidate points sit at cell midpoints") {
    std::vector<Rectangle> one{box(0, 0, 2, 4)};
    auto pts = candidate_points(one);
    REQUIRE(pts.size() == 1);
    CHECK(pts[0] == Point{1, 2});
}

TEST_CASE("max_clique_candidates") {
    std::vector<Rectangle> one{box(0, 0, 1, 1)};
    CHECK(max_clique_candidates(one).members.size() == 1);
    CHECK(max_clique_candidates(fixtures::three_chain()).members.size() == 2);
    CHECK(max_clique_candidates(fixtures::triangle()).members.size() == 3);
    CHECK_THROWS_AS(max_clique_candidates({}), std::invalid_argument);
}

TEST_CASE("exact_mis") {
    CHECK(exact_mis(build_graph(fixtures::disjoint(5))).size == 5);
    std::vector<Rectangle> nested{box(0, 0, 10, 10), box(1, 1, 9, 9), box(2, 2, 8, 8),
                                  box(3, 3, 7, 7)};
    CHECK(exact_mis(build_graph(nested)).size == 1);
    auto chain = exact_mis(build_graph(fixtures::three_chain()));
    CHECK(chain.size == 2);
    CHECK(chain.members == VertexSet{0, 2});
    CHECK(exact_mis(build_graph(std::vector<Rectangle>{})).size == 0);
    CHECK(exact_mis(build_graph(fixtures::picture_frame())).size == 2);
}

TEST_CASE("exact_mis on live vertices only") {
    auto g = build_graph(fixtures::three_chain());
    VertexSet drop{0};
    auto r = exact_mis(g.remove_vertices(drop));
    CHECK(r.size == 1);
}

TEST_CASE("exact_mcc") {
    CHECK(exact_mcc(fixtures::disjoint(4)).size == 4);
    std::vector<Rectangle> overlap{box(0, 0, 4, 4), box(1, 1, 5, 5), box(2, 0, 3, 6)};
    CHECK(exact_mcc(overlap).size == 1);
    auto frame = fixtures::picture_frame();
    auto c4 = exact_mcc(frame);
    CHECK(c4.size == 2);
    CHECK(verify_cover(frame, c4.points));
    CHECK(exact_mcc(std::vector<Rectangle>{}).size == 0);
    CHECK(exact_mcc(fixtures::three_chain()).size == 2);
}

TEST_CASE("caps are enforced") {
    auto big = generate_instance(30, unit_square, 1);
    CHECK_THROWS_AS(exact_mis(build_graph(big.rects)), OracleCapExceeded);
    CHECK_THROWS_AS(exact_mcc(big.rects), OracleCapExceeded);
    OracleLimits wide{40, 40};
    CHECK_NOTHROW(exact_mis(build_graph(big.rects), wide));
    OracleLimits silly{100, 100};
    CHECK_THROWS_AS(exact_mcc(big.rects, silly), std::invalid_argument);
}

TEST_CASE("simplicial_scan") {
    CHECK(simplicial_scan(build_graph(fixtures::triangle())) == VertexSet{0, 1, 2});
    CHECK(simplicial_scan(build_graph(fixtures::picture_frame())).empty());
    CHECK(simplicial_scan(build_graph(fixtures::three_chain())) == VertexSet{0, 2});
}

TEST_CASE("verify_cover") {
    CHECK(verify_cover({}, {}));
    std::vector<Rectangle> one{box(0, 0, 2, 2)};
    std::vector<Point> centre{{1, 1}};
    std::vector<Point> corner{{0, 0}};
    std::vector<Point> on_edge{{1, 2}};
    CHECK(verify_cover(one, centre));
    CHECK_FALSE(verify_cover(one, corner));
    CHECK_FALSE(verify_cover(one, on_edge));
    CHECK_FALSE(verify_cover(one, {}));
}

TEST_CASE("verify_independent") {
    std::vector<Rectangle> r{box(0, 0, 4, 4), box(1, 1, 2, 2), box(4, 0, 5, 4)};
    CHECK(verify_independent(r, {}));
    std::vector<std::size_t> nested{0, 1};
    std::vector<std::size_t> touching{0, 2};
    std::vector<std::size_t> repeated{2, 2};
    CHECK_FALSE(verify_independent(r, nested));
    CHECK(verify_independent(r, touching));
    CHECK_FALSE(verify_independent(r, repeated));
}

TEST_CASE("oracles agree with subset enumeration") {
    fixtures::InstanceStream stream(8, 1, 9);
    for (int k = 0; k < 150; ++k) {
        Instance const inst = stream.next();
        auto const g = build_graph(inst.rects);
        auto const mis = exact_mis(g);
        auto const mcc = exact_mcc(inst.rects);
        CHECK(mis.size == brute_mis(inst.rects));
        CHECK(mcc.size == brute_mcc(inst.rects));
    }
}

TEST_CASE("oracle witnesses, weak duality, and domination invariance") {
    fixtures::InstanceStream stream(15, 2, 15);
    for (int k = 0; k < 120; ++k) {
        Instance const inst = stream.next();
        auto const g = build_graph(inst.rects);
        auto const mis = exact_mis(g);
        auto const mcc = exact_mcc(inst.rects);
        CHECK(mis.size <= mcc.size);
        CHECK(verify_cover(inst.rects, mcc.points));
        CHECK(mcc.points.size() == mcc.size);
        CHECK(verify_independent(inst.rects, mis.members));

        auto const split = filter_dominated(inst.rects);
        std::vector<Rectangle> kept;
        for (std::size_t i : split.kept) {
            kept.push_back(inst.rects[i]);
        }
        CHECK(exact_mis(build_graph(kept)).size == mis.size);
        CHECK(exact_mcc(kept).size == mcc.size);
    }
}
