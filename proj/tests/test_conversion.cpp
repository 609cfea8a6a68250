#include <doctest.h>

#include "oracles.hpp"
#include "setcalc/approximation.hpp"
#include "setcalc/concrete_ops.hpp"
#include "setcalc/conversion.hpp"
#include "setcalc/errors.hpp"

using namespace setcalc;
using oracle::v2;

namespace {

const ToleranceContext kCtx;

VPolygon sample_polygon() {
    return VPolygon({v2(-3, 0.6), v2(-2, -2), v2(0, -2), v2(1, -1), v2(2, 1), v2(0, 2), v2(-0.8, 1.8)});
}

}  // namespace

TEST_CASE("target names") {
    for (TargetKind k : {TargetKind::Hyperrectangle, TargetKind::Zonotope, TargetKind::HPolytope, TargetKind::VPolygon}) {
        CHECK(target_from_name(target_name(k)) == k);
    }
    CHECK_FALSE(target_from_name("Ellipsoid").has_value());
}

TEST_CASE("interval conversions") {
    const ConcreteSet h = convert_to(TargetKind::Hyperrectangle, Interval(0, 1), kCtx);
    REQUIRE(std::holds_alternative<Hyperrectangle>(h));
    CHECK(std::get<Hyperrectangle>(h).center() == make_vector({0.5}));
    CHECK(std::get<Hyperrectangle>(h).radius() == make_vector({0.5}));

    const ConcreteSet z = convert_to(TargetKind::Zonotope, Interval(0, 1), kCtx);
    REQUIRE(std::holds_alternative<Zonotope>(z));
    CHECK(std::get<Zonotope>(z).center() == make_vector({0.5}));
    CHECK(std::get<Zonotope>(z).generators() == make_matrix({{0.5}}));

    const ConcreteSet p = convert_to(TargetKind::HPolytope, Interval(0, 1), kCtx);
    REQUIRE(std::holds_alternative<HPolytope>(p));
    CHECK(is_equivalent(p, Interval(0, 1), kCtx));
}

TEST_CASE("product of interval and box converts to a 3-D zonotope") {
    const Hyperrectangle b(v2(2, 3), v2(0.5, 1.5));
    const ConcreteSet z = convert_to(TargetKind::Zonotope, lazy::cartesian_product(Interval(0, 1), b), kCtx);
    REQUIRE(std::holds_alternative<Zonotope>(z));
    const auto& zz = std::get<Zonotope>(z);
    CHECK(zz.dim() == 3);
    CHECK(zz.center() == make_vector({0.5, 2, 3}));
    const Matrix g = zz.generators();
    CHECK(g.cols() == 3);
    CHECK(Matrix(g.cwiseAbs()).isApprox(Matrix(Vector(make_vector({0.5, 0.5, 1.5})).asDiagonal())));
}

TEST_CASE("box conversions") {
    const Hyperrectangle b(v2(1, -1), v2(2, 0.5));
    const ConcreteSet z = convert_to(TargetKind::Zonotope, b, kCtx);
    REQUIRE(std::holds_alternative<Zonotope>(z));
    CHECK(std::get<Zonotope>(z).num_generators() == 2);
    const Matrix g = std::get<Zonotope>(z).generators();
    for (Eigen::Index j = 0; j < g.cols(); ++j) {
        CHECK((g.col(j).array() != 0.0).count() == 1);
    }
    // Zero-width dimensions contribute no generator.
    const ConcreteSet flat = convert_to(TargetKind::Zonotope, Hyperrectangle(v2(0, 0), v2(1, 0)), kCtx);
    CHECK(std::get<Zonotope>(flat).num_generators() == 1);

    for (TargetKind k : {TargetKind::Zonotope, TargetKind::HPolytope, TargetKind::VPolygon, TargetKind::Hyperrectangle}) {
        CHECK(is_equivalent(convert_to(k, b, kCtx), b, kCtx));
    }
    const BallInf ball(v2(3, 3), 0.25);
    CHECK(is_equivalent(convert_to(TargetKind::Hyperrectangle, ball, kCtx), ball, kCtx));
    CHECK(is_equivalent(convert_to(TargetKind::Zonotope, ball, kCtx), ball, kCtx));
}

TEST_CASE("polygon conversions") {
    const VPolygon p = sample_polygon();
    const ConcreteSet h = convert_to(TargetKind::HPolytope, p, kCtx);
    CHECK(std::get<HPolytope>(h).constraints().size() == 7);
    CHECK(is_equivalent(h, p, kCtx));
    CHECK(is_equivalent(convert_to(TargetKind::VPolygon, h, kCtx), p, kCtx));

    Matrix g(2, 3);
    g << 1, 0, 1, 0, 1, 1;
    const Zonotope z(v2(0, 0), g);
    const ConcreteSet zp = convert_to(TargetKind::VPolygon, z, kCtx);
    CHECK(std::get<VPolygon>(zp).vertices().size() == 6);
    CHECK(is_equivalent(zp, z, kCtx));
}

TEST_CASE("lossy or unknown conversions are rejected") {
    CHECK_THROWS_AS(convert_to(TargetKind::Hyperrectangle, sample_polygon(), kCtx), UnsupportedOperation);
    CHECK_THROWS_AS(convert_to(TargetKind::Zonotope, sample_polygon(), kCtx), UnsupportedOperation);
    CHECK_THROWS_AS(convert_to(TargetKind::VPolygon, BallInf(Vector::Zero(3), 1.0), kCtx), UnsupportedOperation);
    CHECK_THROWS_AS(convert_to(TargetKind::HPolytope, HalfSpace(v2(1, 0), 0), kCtx), UnsupportedOperation);
    CHECK_THROWS_AS(convert_to(TargetKind::Zonotope, lazy::convex_hull(BallInf(v2(0, 0), 1), BallInf(v2(1, 0), 1)), kCtx),
                    UnsupportedOperation);
}

TEST_CASE("tohrep") {
    const VPolygon unit({v2(0, 0), v2(1, 0), v2(1, 1), v2(0, 1)});
    CHECK(tohrep(unit, kCtx).constraints().size() == 4);
    const VPolygon p = sample_polygon();
    const HPolytope h = tohrep(p, kCtx);
    CHECK(h.constraints().size() == 7);
    // Every edge constraint is tight at exactly two vertices.
    for (const auto& c : h.constraints()) {
        int tight = 0;
        for (const auto& v : p.vertices()) {
            tight += std::abs(c.normal().dot(v) - c.offset()) <= 1e-9 ? 1 : 0;
        }
        CHECK(tight == 2);
    }
    CHECK(is_equivalent(h, sample_polygon(), kCtx));
    try {
        tohrep(VPolygon({v2(0, 0), v2(1, 1), v2(2, 2)}), kCtx);
        FAIL("collinear input accepted");
    } catch (const InvalidArgument& e) {
        CHECK(std::string(e.what()).find("degenerate polygon") != std::string::npos);
    }
}

TEST_CASE("tovrep") {
    const VPolygon box = tovrep(HPolytope(constraints_list(BallInf(v2(0, 0), 1), kCtx), 2), kCtx);
    CHECK(box.vertices().size() == 4);
    const ConcreteSet oct = overapproximate_template(sample_polygon(), DirectionTemplate::oct(2), kCtx);
    CHECK(tovrep(oct, kCtx).vertices().size() == 8);
    CHECK_THROWS_AS(tovrep(HPolyhedron({HalfSpace(v2(1, 0), 0), HalfSpace(v2(-1, 0), -1), HalfSpace(v2(0, 1), 1),
                                        HalfSpace(v2(0, -1), 1)}),
                           kCtx),
                    EmptySetError);
    CHECK_THROWS_AS(tovrep(HPolyhedron({HalfSpace(v2(1, 0), 0)}), kCtx), UnboundedError);

    // Redundant constraints do not change the polygon.
    auto cs = constraints_list(sample_polygon(), kCtx);
    const VPolygon plain = tovrep(HPolytope(cs, 2), kCtx);
    cs.emplace_back(v2(1, 1), 100.0);
    cs.emplace_back(v2(-1, 0), 3.0);
    cs.push_back(cs.front());
    const VPolygon padded = tovrep(HPolytope(cs, 2), kCtx);
    CHECK(oracle::same_polygon(plain.vertices(), padded.vertices(), 1e-12));
}

TEST_CASE("H/V round trips on random polygons") {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 30; ++trial) {
        const VPolygon p(oracle::random_cloud(rng, 10));
        const HPolytope h = tohrep(p, kCtx);
        const VPolygon back = tovrep(h, kCtx);
        CHECK(oracle::same_polygon(back.vertices(), p.vertices(), 1e-9));
        CHECK(is_equivalent(tohrep(back, kCtx), h, kCtx));
    }
}
