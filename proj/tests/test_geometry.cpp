#include <cmath>
#include <random>

#include "doctest.h"
#include "support.hpp"
#include "sweeprec/error.hpp"

using namespace sweeprec;
using fixtures::vec;

TEST_SUITE("geometry") {

TEST_CASE("parse_scalar accepts integers, decimals and fractions") {
    CHECK(parse_scalar("-3") == Scalar(-3));
    CHECK(parse_scalar("1.5") == Scalar(3, 2));
    CHECK(parse_scalar("-3/7") == Scalar(-3, 7));
    CHECK(parse_scalar("6/4") == Scalar(3, 2));
    CHECK(parse_scalar(".25") == Scalar(1, 4));
    CHECK(parse_scalar("2e-3") == Scalar(1, 500));
    CHECK(format_scalar(parse_scalar("6/4")) == "3/2");
    for (const char* bad : {"", "1/0", "abc", "1.2.3", "--1", "1e", "/2", "1/-2"}) {
        CHECK_THROWS_AS(parse_scalar(bad), Error);
    }
}

TEST_CASE("affine_dim") {
    std::vector<Vector> one{vec({0, 0})};
    std::vector<Vector> line{vec({0, 0}), vec({1, 0}), vec({2, 0})};
    std::vector<Vector> tri{vec({0, 0}), vec({2, 0}), vec({1, 1})};
    CHECK(affine_dim(one) == 0);
    CHECK(affine_dim(line) == 1);
    CHECK(affine_dim(tri) == 2);
    CHECK_THROWS_AS(affine_dim(std::vector<Vector>{}), Error);
}

TEST_CASE("complement_basis") {
    std::vector<Vector> edge{vec({0, 0}), vec({1, 1})};
    auto b = complement_basis(edge);
    REQUIRE(b.size() == 1);
    CHECK(primitive(b[0]) == vec({1, -1}));

    std::vector<Vector> vertex{vec({0, 0, 0})};
    auto full = complement_basis(vertex);
    REQUIRE(full.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = i + 1; j < 3; ++j) CHECK(dot(full[i], full[j]) == 0);
    }
    CHECK(reference::rank_of(full) == 3);

    std::vector<Vector> plane{vec({0, 0, 0}), vec({1, 0, 0}), vec({0, 3, 0})};
    auto kept = complement_basis(plane, vec({0, 0, 1}));
    REQUIRE(kept.size() == 1);
    CHECK(kept[0] == vec({0, 0, 1}));

    std::vector<Vector> spanning{vec({0, 0}), vec({1, 0}), vec({0, 1})};
    CHECK_THROWS_WITH_AS(complement_basis(spanning), doctest::Contains("NoPerpendicular"), Error);
    CHECK_THROWS_AS(complement_basis(edge, vec({1, 0})), Error);
}

TEST_CASE("complement_basis is orthogonal to the simplex and internally") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> dist(-5, 5);
    for (int trial = 0; trial < 100; ++trial) {
        const int d = 2 + trial % 3;
        const int m = 1 + trial % d;
        std::vector<Vector> pts;
        for (int i = 0; i < m; ++i) {
            Vector p(static_cast<std::size_t>(d));
            for (auto& x : p) x = dist(rng);
            pts.push_back(p);
        }
        if (affine_dim(pts) == d) continue;
        auto basis = complement_basis(pts);
        CHECK(static_cast<int>(basis.size()) == d - reference::hull_dim(pts));
        for (std::size_t i = 0; i < basis.size(); ++i) {
            CHECK(is_perpendicular(basis[i], pts));
            for (std::size_t j = i + 1; j < basis.size(); ++j) CHECK(dot(basis[i], basis[j]) == 0);
        }
    }
}

TEST_CASE("halfspace_side") {
    CHECK(halfspace_side(vec({0, 1}), 0, vec({3, -1})) == Side::Below);
    CHECK(halfspace_side(vec({0, 1}), 0, vec({3, 0})) == Side::On);
    CHECK(halfspace_side(vec({0, 1}), 0, vec({3, 2})) == Side::Above);
    for (long y : {-2L, 0L, 5L}) {
        CHECK(halfspace_side(vec({0, 2}), 0, vec({1, y})) == halfspace_side(vec({0, 1}), 0, vec({1, y})));
    }
}

TEST_CASE("AngleKey order agrees with atan2 and is a strict total order") {
    CHECK(AngleKey::zero() < AngleKey(1, 1));
    CHECK(AngleKey(1, 1) < AngleKey(0, 1));
    CHECK(AngleKey(0, 1) < AngleKey::pi());
    CHECK(AngleKey::pi() < AngleKey(0, -1));
    CHECK(AngleKey(0, -1) < AngleKey(1, -1));
    CHECK(AngleKey(2, 2) == AngleKey(1, 1));
    CHECK(AngleKey(1, 0).at_most_pi());
    CHECK(AngleKey(-1, 0).at_most_pi());
    CHECK_FALSE(AngleKey(1, -1).at_most_pi());
    CHECK_THROWS_AS(AngleKey(0, 0), Error);

    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> dist(-50, 50);
    std::vector<AngleKey> keys;
    std::vector<double> angles;
    while (keys.size() < 300) {
        int c = dist(rng), s = dist(rng);
        if (c == 0 && s == 0) continue;
        keys.emplace_back(c, s);
        double a = std::atan2(static_cast<double>(s), static_cast<double>(c));
        angles.push_back(a < 0 ? a + 2 * M_PI : a);
    }
    for (std::size_t i = 0; i < keys.size(); ++i) {
        for (std::size_t j = 0; j < keys.size(); ++j) {
            if (std::abs(angles[i] - angles[j]) < 1e-12) {
                CHECK(keys[i] == keys[j]);
            } else {
                CHECK((keys[i] < keys[j]) == (angles[i] < angles[j]));
            }
        }
    }
    std::sort(keys.begin(), keys.end());
    for (std::size_t i = 0; i + 2 < keys.size(); ++i) {
        CHECK(keys[i] <= keys[i + 1]);
        CHECK(keys[i] <= keys[i + 2]);
    }
}

TEST_CASE("AngleKey order ignores the lengths of u and w") {
    // The same two directions expressed on circles with rescaled axes.
    DirectionCircle unit{vec({0, 0, 0}), vec({1, 0, 0}), vec({0, 1, 0}), CircleMode::Perpendicular};
    DirectionCircle stretched{vec({0, 0, 0}), vec({3, 0, 0}), vec({0, 7, 0}), CircleMode::Perpendicular};
    std::vector<Vector> pts{vec({1, 2, 0}), vec({-3, 1, 4}), vec({2, -5, 1}), vec({-1, -1, 0}), vec({4, 1, -2})};
    for (const auto& p : pts) {
        for (const auto& q : pts) {
            auto a = gamma_normal(unit, p).key <=> gamma_normal(unit, q).key;
            auto b = gamma_normal(stretched, p).key <=> gamma_normal(stretched, q).key;
            CHECK((a == b));
        }
    }
}

TEST_CASE("gamma_normal examples") {
    DirectionCircle circle{vec({0, 0, 0}), vec({1, 0, 0}), vec({0, 1, 0}), CircleMode::Perpendicular};
    auto g = gamma_normal(circle, vec({0, 2, 5}));
    CHECK(g.key == AngleKey::pi());
    CHECK(g.direction == vec({-1, 0, 0}));
    CHECK(dot(g.direction, vec({0, 2, 5})) == 0);

    auto centre = gamma_normal(circle, vec({0, 0, 7}));
    CHECK(centre.key == AngleKey::zero());
    CHECK(centre.direction == vec({1, 0, 0}));

    DirectionCircle codim{vec({0, 0}), vec({1, -1}), vec({1, 1}), CircleMode::Codim1};
    auto c = gamma_normal(codim, vec({2, 0}));
    CHECK(c.key == AngleKey::zero());
    CHECK(c.direction == vec({1, -1}));
    auto below = gamma_normal(codim, vec({0, 2}));
    CHECK(below.key == AngleKey::pi());
    CHECK(below.direction == vec({-1, 1}));
}

TEST_CASE("gamma_normal puts p on the boundary and below a quarter turn later") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> dist(-9, 9);
    for (int trial = 0; trial < 300; ++trial) {
        Vector u(3), w0(3), p(3), c(3);
        for (auto* v : {&u, &w0, &p, &c})
            for (auto& x : *v) x = dist(rng);
        if (is_zero(u)) continue;
        std::vector<Vector> span{u};
        Vector w = orthogonalize(w0, span);
        if (is_zero(w)) continue;
        DirectionCircle circle{c, u, w, CircleMode::Perpendicular};
        auto g = gamma_normal(circle, p);
        Vector rel = sub(p, c);
        CHECK(dot(g.direction, rel) == 0);
        CHECK(primitive(circle.direction_at(g.key)) == g.direction);
        Scalar a = dot(rel, u), b = dot(rel, w);
        if (a == 0 && b == 0) continue;
        Vector later = add(scaled(u, -a / dot(u, u)), scaled(w, -b / dot(w, w)));
        CHECK(halfspace_side(later, dot(later, c), p) == Side::Below);
        Vector earlier = negated(later);
        CHECK(halfspace_side(earlier, dot(earlier, c), p) == Side::Above);
    }
}

TEST_CASE("maximal_circle") {
    std::vector<Vector> vertex{vec({3, 4})};
    auto c = maximal_circle(vertex, vec({0, 1}));
    CHECK(c.mode == CircleMode::Perpendicular);
    CHECK(c.u == vec({0, 1}));
    CHECK(c.w == vec({1, 0}));
    CHECK(c.base == vec({3, 4}));

    std::vector<Vector> edge{vec({0, 0}), vec({1, 1})};
    auto e = maximal_circle(edge, vec({1, -1}));
    CHECK(e.mode == CircleMode::Codim1);
    CHECK(dot(e.u, e.w) == 0);

    std::vector<Vector> edge3{vec({0, 0, 0}), vec({0, 0, 2})};
    auto e3 = maximal_circle(edge3, vec({1, 1, 0}));
    CHECK(e3.mode == CircleMode::Perpendicular);
    CHECK(is_perpendicular(e3.w, edge3));
    CHECK(dot(e3.u, e3.w) == 0);
    CHECK_THROWS_AS(maximal_circle(edge, vec({1, 0})), Error);
}

TEST_CASE("injective_pair_test examples") {
    std::vector<Vector> table{vec({0, 0}), vec({4, 0}), vec({0, 4}), vec({1, 1}), vec({5, 1}), vec({1, 5}),
                              vec({2, -3})};
    std::vector<VertexId> t{0, 1, 2}, tp{3, 4, 5}, opposite{0, 1, 6}, edge{0, 1}, v0{0};
    CHECK(injective_pair_test(table, t, opposite));
    CHECK_FALSE(injective_pair_test(table, t, tp));
    CHECK(injective_pair_test(table, edge, v0));
    CHECK(injective_pair_test(table, v0, edge));
    std::vector<VertexId> far{4}, inside{3};
    CHECK(injective_pair_test(table, t, far));
    CHECK_FALSE(injective_pair_test(table, t, inside));
}

TEST_CASE("injective_pair_test agrees with face enumeration") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> coord(0, 4);
    int disagreements = 0, negatives = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const std::size_t d = trial % 2 ? 3 : 2;
        std::vector<Vector> table;
        while (table.size() < 7) {
            Vector p(d);
            for (auto& x : p) x = coord(rng);
            if (std::find(table.begin(), table.end(), p) == table.end()) table.push_back(p);
        }
        std::vector<VertexId> ids{0, 1, 2, 3, 4, 5, 6};
        std::shuffle(ids.begin(), ids.end(), rng);
        const std::size_t na = 1 + trial % (d + 1);
        const std::size_t nb = 1 + (trial / 3) % (d + 1);
        const std::size_t shared = std::min<std::size_t>({static_cast<std::size_t>(trial % 3), na, nb});
        std::vector<VertexId> a(ids.begin(), ids.begin() + static_cast<long>(na));
        std::vector<VertexId> b(ids.begin() + static_cast<long>(na - shared),
                                ids.begin() + static_cast<long>(na - shared + nb));
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        auto pa = std::vector<Vector>{}, pb = std::vector<Vector>{};
        for (VertexId v : a) pa.push_back(table[v]);
        for (VertexId v : b) pb.push_back(table[v]);
        if (reference::hull_dim(pa) + 1 != static_cast<int>(a.size())) continue;
        if (reference::hull_dim(pb) + 1 != static_cast<int>(b.size())) continue;
        bool expected = reference::injective(table, a, b) && reference::injective(table, b, a);
        if (!expected) ++negatives;
        if (injective_pair_test(table, a, b) != expected) ++disagreements;
    }
    CHECK(disagreements == 0);
    CHECK(negatives > 10);
}

}  // TEST_SUITE
