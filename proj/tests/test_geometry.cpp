#include "fixtures.hpp"

#include "rectcover/geometry.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace rectcover;
using fixtures::box;

TEST_CASE("make_rectangle normalizes corners") {
    CHECK(make_rectangle({0, 0}, {2, 3}) == box(0, 0, 2, 3));
    CHECK(make_rectangle({2, 0}, {0, 3}) == box(0, 0, 2, 3));
    CHECK(make_rectangle({2, 3}, {0, 0}) == box(0, 0, 2, 3));
}

TEST_CASE("make_rectangle rejects degenerate corners") {
    auto code_of = [](Point p, Point q) {
        try {
            make_rectangle(p, q);
        } catch (GeometryError const& e) {
            return e.code();
        }
        FAIL("no error");
        return GeometryErrc::invalid_region;
    };
    CHECK(code_of({1, 1}, {1, 5}) == GeometryErrc::degenerate_rectangle);
    CHECK(code_of({0, 2}, {4, 2}) == GeometryErrc::degenerate_rectangle);
    CHECK(code_of({0, 0}, {std::numeric_limits<double>::quiet_NaN(), 1}) ==
          GeometryErrc::non_finite_coordinate);
}

TEST_CASE("make_rectangle is symmetric in its arguments") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-5, 5);
    for (int i = 0; i < 1000; ++i) {
        Point p{u(rng), u(rng)};
        Point q{u(rng), u(rng)};
        CHECK(make_rectangle(p, q) == make_rectangle(q, p));
    }
}

TEST_CASE("generate_instance") {
    SUBCASE("empty") {
        CHECK(generate_instance(0, unit_square, 3).rects.empty());
    }
    SUBCASE("deterministic per seed") {
        auto a = generate_instance(100, unit_square, 7);
        auto b = generate_instance(100, unit_square, 7);
        CHECK(a.rects == b.rects);
        CHECK(a.rects != generate_instance(100, unit_square, 8).rects);
    }
    SUBCASE("rectangles are valid and inside the region") {
        auto inst = generate_instance(1000, unit_square, 1);
        REQUIRE(inst.rects.size() == 1000);
        CHECK(inst.n_requested == 1000);
        for (Rectangle const& r : inst.rects) {
            CHECK(r.lo.x < r.hi.x);
            CHECK(r.lo.y < r.hi.y);
            CHECK(r.lo.x >= 0.0);
            CHECK(r.hi.x <= 1.0);
            CHECK(r.lo.y >= 0.0);
            CHECK(r.hi.y <= 1.0);
        }
    }
    SUBCASE("custom region") {
        Region reg{-10, -2, 100, 101};
        for (Rectangle const& r : generate_instance(200, reg, 5).rects) {
            CHECK(r.lo.x >= -10);
            CHECK(r.hi.x <= -2);
            CHECK(r.lo.y >= 100);
            CHECK(r.hi.y <= 101);
        }
    }
    SUBCASE("invalid region") {
        CHECK_THROWS_AS(generate_instance(3, Region{1, 0, 0, 1}, 1), GeometryError);
    }
}

TEST_CASE("interiors_intersect uses open boxes") {
    CHECK(interiors_intersect(box(0, 0, 2, 2), box(1, 1, 3, 3)));
    CHECK_FALSE(interiors_intersect(box(0, 0, 1, 1), box(1, 0, 2, 1)));
    CHECK_FALSE(interiors_intersect(box(0, 0, 1, 1), box(1, 1, 2, 2)));
    CHECK(interiors_intersect(box(0, 0, 4, 4), box(1, 1, 2, 2)));
    CHECK(interiors_intersect(box(0, 0, 4, 4), box(0, 0, 4, 4)));
}

TEST_CASE("interiors_intersect is symmetric and reflexive") {
    auto inst = fixtures::grid_instance(60, 5, 3);
    for (auto const& a : inst.rects) {
        CHECK(interiors_intersect(a, a));
        for (auto const& b : inst.rects) {
            CHECK(interiors_intersect(a, b) == interiors_intersect(b, a));
        }
    }
}

TEST_CASE("contains") {
    CHECK(contains(box(0, 0, 4, 4), box(1, 1, 2, 2)));
    CHECK(contains(box(0, 0, 4, 4), box(0, 0, 2, 4)));
    CHECK_FALSE(contains(box(0, 0, 4, 4), box(0, 0, 4, 4)));
    CHECK_FALSE(contains(box(0, 0, 2, 2), box(1, 1, 3, 3)));
    CHECK_FALSE(contains(box(1, 1, 2, 2), box(0, 0, 4, 4)));
}

TEST_CASE("filter_dominated") {
    SUBCASE("container is removed") {
        std::vector<Rectangle> r{box(0, 0, 4, 4), box(1, 1, 2, 2), box(3, 0, 5, 2)};
        auto s = filter_dominated(r);
        CHECK(s.kept == std::vector<std::size_t>{1, 2});
        CHECK(s.removed == std::vector<std::size_t>{0});
    }
    SUBCASE("nothing nested") {
        auto s = filter_dominated(fixtures::three_chain());
        CHECK(s.removed.empty());
        CHECK(s.kept.size() == 3);
    }
    SUBCASE("chain keeps the innermost") {
        std::vector<Rectangle> r{box(0, 0, 10, 10), box(1, 1, 9, 9), box(2, 2, 8, 8)};
        auto s = filter_dominated(r);
        CHECK(s.kept == std::vector<std::size_t>{2});
        CHECK(s.removed == std::vector<std::size_t>{0, 1});
    }
    SUBCASE("duplicates dominate neither") {
        std::vector<Rectangle> r{box(0, 0, 1, 1), box(0, 0, 1, 1)};
        CHECK(filter_dominated(r).removed.empty());
    }
}

TEST_CASE("filter_dominated matches brute force and is idempotent") {
    fixtures::InstanceStream stream(21, 0, 120);
    for (int k = 0; k < 60; ++k) {
        Instance const inst = stream.next();
        auto const s = filter_dominated(inst.rects);

        std::vector<std::size_t> expect_removed;
        for (std::size_t i = 0; i < inst.rects.size(); ++i) {
            for (std::size_t j = 0; j < inst.rects.size(); ++j) {
                if (i != j && contains(inst.rects[i], inst.rects[j])) {
                    expect_removed.push_back(i);
                    break;
                }
            }
        }
        CHECK(s.removed == expect_removed);
        CHECK(s.kept.size() + s.removed.size() == inst.rects.size());
        CHECK(std::is_sorted(s.kept.begin(), s.kept.end()));

        std::vector<Rectangle> kept;
        for (std::size_t i : s.kept) {
            kept.push_back(inst.rects[i]);
        }
        CHECK(filter_dominated(kept).removed.empty());
    }
}

TEST_CASE("common_intersection") {
    std::vector<Rectangle> one{box(0, 0, 2, 2)};
    CHECK(common_intersection(one) == box(0, 0, 2, 2));
    std::vector<Rectangle> two{box(0, 0, 2, 2), box(1, 1, 3, 3)};
    CHECK(common_intersection(two) == box(1, 1, 2, 2));
    std::vector<Rectangle> apart{box(0, 0, 1, 1), box(2, 2, 3, 3)};
    CHECK_FALSE(common_intersection(apart).has_value());
    std::vector<Rectangle> touching{box(0, 0, 1, 1), box(1, 0, 2, 1)};
    CHECK_FALSE(common_intersection(touching).has_value());
    CHECK_FALSE(common_intersection({}).has_value());
}

TEST_CASE("pairwise-overlapping subsets share a common box") {
    fixtures::InstanceStream stream(5, 2, 10);
    for (int k = 0; k < 100; ++k) {
        Instance const inst = stream.next();
        std::size_t const n = inst.rects.size();
        for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
            std::vector<Rectangle> subset;
            for (std::size_t i = 0; i < n; ++i) {
                if (mask & (1u << i)) {
                    subset.push_back(inst.rects[i]);
                }
            }
            bool pairwise = true;
            for (std::size_t a = 0; pairwise && a < subset.size(); ++a) {
                for (std::size_t b = a + 1; b < subset.size(); ++b) {
                    pairwise = pairwise && interiors_intersect(subset[a], subset[b]);
                }
            }
            if (pairwise) {
                auto common = common_intersection(subset);
                REQUIRE(common.has_value());
                for (auto const& r : subset) {
                    CHECK(strictly_inside(common->center(), r));
                }
            }
        }
    }
}
