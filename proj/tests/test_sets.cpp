#include <doctest.h>

#include "oracles.hpp"
#include "setcalc/errors.hpp"
#include "setcalc/sets.hpp"

#include <limits>

using namespace setcalc;
using oracle::v2;

namespace {

const ToleranceContext kCtx;

VPolygon sample_polygon() {
    return VPolygon({v2(-3, 0.6), v2(-2, -2), v2(0, -2), v2(1, -1), v2(2, 1), v2(0, 2), v2(-0.8, 1.8)});
}

}  // namespace

TEST_CASE("constructors validate their parameters") {
    CHECK_THROWS_AS(HalfSpace(make_vector({0, 0}), 1.0), InvalidArgument);
    CHECK_THROWS_AS(Hyperplane(make_vector({0}), 1.0), InvalidArgument);
    CHECK_THROWS_AS(Hyperrectangle(make_vector({0, 0}), make_vector({1, -1})), InvalidArgument);
    CHECK_THROWS_AS(Hyperrectangle(make_vector({0, 0}), make_vector({1})), DimensionMismatch);
    CHECK_THROWS_AS(BallInf(make_vector({0}), -0.5), InvalidArgument);
    CHECK_THROWS_AS(Interval(1.0, 0.0), InvalidArgument);
    CHECK_THROWS_AS(Zonotope(make_vector({0, 0}), Matrix::Zero(3, 1)), DimensionMismatch);
    CHECK_THROWS_AS(HPolytope({HalfSpace(make_vector({1, 0}), 1.0)}), UnboundedError);
    CHECK_NOTHROW(Zonotope(make_vector({0, 0}), Matrix::Zero(2, 0)));
}

TEST_CASE("dim") {
    CHECK(dim(BallInf(Vector::Zero(1000), 1.0)) == 1000);
    CHECK(dim(Interval(0, 1)) == 1);
    CHECK(dim(Zonotope(Vector::Zero(3), Matrix::Ones(3, 5))) == 3);
}

TEST_CASE("support function examples") {
    CHECK(support_function(make_vector({-1, 1}), sample_polygon(), kCtx) == doctest::Approx(3.6).epsilon(1e-12));
    CHECK(support_function(make_vector({1, 1}), BallInf(Vector::Zero(2), 1.0), kCtx) == 2.0);
    Matrix g(2, 3);
    g << 1, 0, 1, 0, 1, 1;
    CHECK(support_function(make_vector({1, 1}), Zonotope(Vector::Zero(2), g), kCtx) ==
          doctest::Approx(oracle::max_dot(make_vector({1, 1}), oracle::zonotope_corners(Vector::Zero(2), g))));
    CHECK(support_function(make_vector({1, 1}), Zonotope(Vector::Zero(2), g), kCtx) == 4.0);
}

TEST_CASE("support function of unbounded sets is +infinity") {
    const double inf = std::numeric_limits<double>::infinity();
    CHECK(support_function(make_vector({0, 1}), HalfSpace(make_vector({1, 0}), 1.0), kCtx) == inf);
    CHECK(support_function(make_vector({2, 0}), HalfSpace(make_vector({1, 0}), 1.0), kCtx) == doctest::Approx(2.0));
    const HPolyhedron strip({HalfSpace(make_vector({1, 0}), 1.0), HalfSpace(make_vector({-1, 0}), 1.0)});
    CHECK(support_function(make_vector({0, 1}), strip, kCtx) == inf);
    CHECK(support_function(make_vector({1, 0}), strip, kCtx) == doctest::Approx(1.0));
    CHECK_THROWS_AS(support_function(make_vector({1}), strip, kCtx), DimensionMismatch);
}

TEST_CASE("support vector examples and sign convention") {
    CHECK(approx_eq(support_vector(make_vector({-1, 1}), sample_polygon(), kCtx), make_vector({-3.0, 0.6}), kCtx));
    CHECK(support_vector(make_vector({1, 0}), BallInf(Vector::Zero(2), 1.0), kCtx) == make_vector({1, 1}));
    CHECK(support_vector(make_vector({0, 1}), Hyperrectangle(make_vector({1, 4}), make_vector({1, 1})), kCtx) ==
          make_vector({2, 5}));
    CHECK_THROWS_AS(support_vector(make_vector({0, 1}), HalfSpace(make_vector({1, 0}), 1.0), kCtx), UnboundedError);
}

TEST_CASE("support vectors are members and attain the support value") {
    std::mt19937_64 rng(5);
    std::vector<ConcreteSet> sets;
    sets.emplace_back(BallInf(make_vector({1, -2}), 0.5));
    sets.emplace_back(Hyperrectangle(make_vector({0, 1}), make_vector({2, 0.25})));
    Matrix g(2, 4);
    g << 1, 0.5, -0.3, 0, 0.2, 1, 0.7, 0.4;
    sets.emplace_back(Zonotope(make_vector({0.5, 0.5}), g));
    sets.emplace_back(sample_polygon());
    sets.emplace_back(VPolytope({make_vector({0, 0, 0}), make_vector({1, 0, 0}), make_vector({0, 1, 0}),
                                 make_vector({0, 0, 1})}));
    sets.emplace_back(HPolytope(constraints_list(sample_polygon(), kCtx), 2));
    sets.emplace_back(Interval(-1, 3));
    for (const auto& s : sets) {
        for (int k = 0; k < 100; ++k) {
            const Vector d = oracle::random_direction(rng, dim(s));
            const Vector x = support_vector(d, s, kCtx);
            CHECK(membership(x, s, kCtx));
            CHECK(std::abs(d.dot(x) - support_function(d, s, kCtx)) <= kCtx.atol());
        }
    }
}

TEST_CASE("analytic support formulas agree with LP support over the constraints") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 30; ++trial) {
        const Hyperrectangle box(oracle::random_vector(rng, 2, -3, 3), oracle::random_vector(rng, 2, 0.1, 2));
        const HPolyhedron hbox(constraints_list(box, kCtx), 2);
        Matrix g = Matrix::Zero(2, 3);
        for (int j = 0; j < 3; ++j) {
            g.col(j) = oracle::random_vector(rng, 2);
        }
        const Zonotope z(oracle::random_vector(rng, 2), g);
        const HPolyhedron hz(constraints_list(z, kCtx), 2);
        for (int k = 0; k < 10; ++k) {
            const Vector d = oracle::random_direction(rng, 2);
            CHECK(std::abs(support_function(d, box, kCtx) - support_function(d, hbox, kCtx)) <= 1e-8);
            CHECK(std::abs(support_function(d, z, kCtx) - support_function(d, hz, kCtx)) <= 1e-8);
        }
    }
}

TEST_CASE("membership") {
    CHECK(membership(Vector::Ones(1000), BallInf(Vector::Zero(1000), 1.0), kCtx));
    CHECK_FALSE(membership(make_vector({2, 0}), BallInf(Vector::Zero(2), 1.0), kCtx));
    CHECK(membership(make_vector({1, 1}), Zonotope(Vector::Zero(2), Matrix::Identity(2, 2)), kCtx));
    CHECK_FALSE(membership(make_vector({1.1, 1}), Zonotope(Vector::Zero(2), Matrix::Identity(2, 2)), kCtx));
    CHECK(membership(make_vector({0, 5}), HalfSpace(make_vector({1, 0}), 0.0), kCtx));
    CHECK(membership(make_vector({1, 5}), Hyperplane(make_vector({1, 0}), 1.0), kCtx));
    CHECK_FALSE(membership(make_vector({0.9, 5}), Hyperplane(make_vector({1, 0}), 1.0), kCtx));
    const VPolytope simplex({make_vector({0, 0, 0}), make_vector({1, 0, 0}), make_vector({0, 1, 0}),
                             make_vector({0, 0, 1})});
    CHECK(membership(make_vector({0.2, 0.2, 0.2}), simplex, kCtx));
    CHECK_FALSE(membership(make_vector({0.5, 0.5, 0.5}), simplex, kCtx));
    CHECK_THROWS_AS(membership(make_vector({0}), simplex, kCtx), DimensionMismatch);
}

TEST_CASE("vertices_list") {
    const auto v = vertices_list(BallInf(make_vector({1, 4}), 1.0), kCtx);
    REQUIRE(v.size() == 4);
    CHECK(v[0] == make_vector({2, 5}));
    CHECK(v[1] == make_vector({0, 5}));
    CHECK(v[2] == make_vector({2, 3}));
    CHECK(v[3] == make_vector({0, 3}));

    const auto iv = vertices_list(Interval(0, 1), kCtx);
    REQUIRE(iv.size() == 2);

    const auto zv = vertices_list(Zonotope(Vector::Zero(2), Matrix::Identity(2, 2)), kCtx);
    CHECK(oracle::same_polygon(VPolygon(zv).vertices(),
                               oracle::gift_wrap(oracle::box_corners(make_vector({-1, -1}), make_vector({1, 1}))),
                               1e-12));

    CHECK_THROWS_AS(vertices_list(HalfSpace(make_vector({1, 0}), 1.0), kCtx), UnboundedError);
    const HPolytope cube(constraints_list(BallInf(Vector::Zero(3), 1.0), kCtx), 3);
    CHECK_THROWS_AS(vertices_list(cube, kCtx), UnsupportedOperation);
    CHECK(vertices_list(HPolytope(constraints_list(sample_polygon(), kCtx), 2), kCtx).size() == 7);
}

TEST_CASE("zonotope vertices equal the hull of all sign combinations") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        const int m = 1 + trial % 8;
        Matrix g(2, m);
        for (int j = 0; j < m; ++j) {
            g.col(j) = oracle::random_vector(rng, 2);
        }
        const Vector c = oracle::random_vector(rng, 2, -2, 2);
        const Zonotope z(c, g);
        const auto expected = oracle::gift_wrap(oracle::zonotope_corners(c, g));
        const auto got = VPolygon(vertices_list(z, kCtx)).vertices();
        CHECK(oracle::same_polygon(got, expected, 1e-9));
    }
    Matrix too_many = Matrix::Ones(2, kMaxEnumeratedGenerators + 1);
    CHECK_THROWS_AS(vertices_list(Zonotope(Vector::Zero(2), too_many), kCtx), UnsupportedOperation);
}

TEST_CASE("constraints_list") {
    CHECK(constraints_list(BallInf(Vector::Zero(2), 1.0), kCtx).size() == 4);
    const auto hs = constraints_list(HalfSpace(make_vector({1, 2}), 3.0), kCtx);
    REQUIRE(hs.size() == 1);
    CHECK(hs[0].normal() == make_vector({1, 2}));
    CHECK(hs[0].offset() == 3.0);
    CHECK(constraints_list(sample_polygon(), kCtx).size() == 7);
    const VPolytope simplex({make_vector({0, 0, 0}), make_vector({1, 0, 0}), make_vector({0, 1, 0}),
                             make_vector({0, 0, 1})});
    CHECK_THROWS_AS(constraints_list(simplex, kCtx), UnsupportedOperation);
}

TEST_CASE("VPolygon normal form and H/V consistency") {
    const VPolygon p({v2(1, 1), v2(0, 0), v2(1, 0), v2(0.5, 0), v2(0, 1), v2(0.5, 0.5), v2(1, 1)});
    REQUIRE(p.vertices().size() == 4);
    CHECK(p.vertices()[0] == v2(0, 0));
    CHECK(p.vertices()[1] == v2(1, 0));
    CHECK(p.vertices()[2] == v2(1, 1));
    CHECK(p.vertices()[3] == v2(0, 1));

    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        const auto pts = oracle::random_cloud(rng, 12);
        const VPolygon poly(pts);
        CHECK(oracle::same_polygon(poly.vertices(), oracle::gift_wrap(pts), 1e-12));
        const HPolyhedron h(constraints_list(poly, kCtx), 2);
        for (const auto& q : pts) {
            CHECK(membership(q, h, kCtx));
        }
    }
}

TEST_CASE("volume") {
    CHECK(volume(BallInf(Vector::Zero(3), 1.0)) == 8.0);
    CHECK(volume(Hyperrectangle(Vector::Zero(2), make_vector({1, 2}))) == 8.0);
    CHECK(volume(Interval(0, 1)) == 1.0);
    CHECK_THROWS_AS(volume(sample_polygon()), UnsupportedOperation);
}

TEST_CASE("sample") {
    const auto box_points = sample(BallInf(Vector::Zero(2), 1.0), 10, 42, kCtx);
    CHECK(box_points.size() == 10);
    for (const auto& p : box_points) {
        CHECK(p.cwiseAbs().maxCoeff() <= 1.0);
    }
    const auto poly_points = sample(sample_polygon(), 100, 7, kCtx);
    CHECK(poly_points.size() == 100);
    for (const auto& p : poly_points) {
        CHECK(membership(p, sample_polygon(), kCtx));
    }
    CHECK(sample(sample_polygon(), 5, 7, kCtx) == std::vector<Vector>(poly_points.begin(), poly_points.begin() + 5));
    const HPolyhedron empty({HalfSpace(make_vector({1.0}), 0.0), HalfSpace(make_vector({-1.0}), -1.0)});
    CHECK_THROWS_AS(sample(empty, 1, 1, kCtx), SetError);
}

TEST_CASE("is_bounded and an_element") {
    CHECK_FALSE(is_bounded(HalfSpace(make_vector({1, 0}), 1.0), kCtx));
    CHECK(is_bounded(BallInf(Vector::Zero(5), 1.0), kCtx));
    CHECK(is_bounded(HPolyhedron({HalfSpace(make_vector({1.0}), 1.0), HalfSpace(make_vector({-1.0}), 0.0)}), kCtx));

    CHECK(an_element(BallInf(make_vector({3, 1}), 1.0), kCtx) == make_vector({3, 1}));
    CHECK(an_element(VPolygon({v2(0, 0), v2(1, 0), v2(0, 1)}), kCtx) == v2(0, 0));
    const HPolyhedron empty({HalfSpace(make_vector({1.0}), 0.0), HalfSpace(make_vector({-1.0}), -1.0)});
    CHECK_THROWS_AS(an_element(empty, kCtx), EmptySetError);
}

TEST_CASE("BallInf behaves like the equivalent Hyperrectangle") {
    std::mt19937_64 rng(3);
    const BallInf ball(make_vector({0.5, -1}), 0.75);
    const Hyperrectangle box(make_vector({0.5, -1}), Vector::Constant(2, 0.75));
    for (int k = 0; k < 50; ++k) {
        const Vector d = oracle::random_direction(rng, 2);
        const Vector x = oracle::random_vector(rng, 2, -2, 2);
        CHECK(std::abs(support_function(d, ball, kCtx) - support_function(d, box, kCtx)) <= 1e-15);
        CHECK(support_vector(d, ball, kCtx) == support_vector(d, box, kCtx));
        CHECK(membership(x, ball, kCtx) == membership(x, box, kCtx));
    }
    CHECK(vertices_list(ball, kCtx) == vertices_list(box, kCtx));
    CHECK(volume(ball) == volume(box));
}
