#include "setcalc/planar.hpp"

#include <algorithm>
#include <cmath>

namespace setcalc::planar {

namespace {

bool lex_less(const Vector& a, const Vector& b) { return a[0] < b[0] || (a[0] == b[0] && a[1] < b[1]); }

Vector point(double x, double y) {
    Vector p(2);
    p << x, y;
    return p;
}

double segment_distance(const Vector& a, const Vector& b, const Vector& p) {
    const Vector ab = b - a;
    const double len2 = ab.squaredNorm();
    if (len2 == 0.0) {
        return (p - a).norm();
    }
    const double t = std::clamp((p - a).dot(ab) / len2, 0.0, 1.0);
    return (p - (a + t * ab)).norm();
}

}  // namespace

std::vector<Vector> convex_hull(std::vector<Vector> points, const ToleranceContext& ctx) {
    std::sort(points.begin(), points.end(), lex_less);
    std::vector<Vector> unique;
    unique.reserve(points.size());
    for (auto& p : points) {
        if (unique.empty() || (p - unique.back()).cwiseAbs().maxCoeff() > ctx.atol()) {
            unique.push_back(std::move(p));
        }
    }
    if (unique.size() <= 2) {
        return unique;
    }

    // Pop the middle point when it lies right of, or within atol of, the
    // line through its neighbours.
    auto non_left_turn = [&](const Vector& o, const Vector& a, const Vector& b) {
        return cross(o, a, b) <= ctx.atol() * (b - o).norm();
    };

    std::vector<Vector> hull(2 * unique.size());
    std::size_t k = 0;
    for (const auto& p : unique) {
        while (k >= 2 && non_left_turn(hull[k - 2], hull[k - 1], p)) {
            --k;
        }
        hull[k++] = p;
    }
    const std::size_t lower = k + 1;
    for (auto it = unique.rbegin() + 1; it != unique.rend(); ++it) {
        while (k >= lower && non_left_turn(hull[k - 2], hull[k - 1], *it)) {
            --k;
        }
        hull[k++] = *it;
    }
    hull.resize(k - 1);
    if (hull.size() == 2 && (hull[0] - hull[1]).cwiseAbs().maxCoeff() <= ctx.atol()) {
        hull.pop_back();
    }
    return hull;
}

double area(const std::vector<Vector>& ccw) {
    double twice = 0.0;
    for (std::size_t i = 0; i < ccw.size(); ++i) {
        const Vector& a = ccw[i];
        const Vector& b = ccw[(i + 1) % ccw.size()];
        twice += a[0] * b[1] - a[1] * b[0];
    }
    return 0.5 * twice;
}

std::vector<LinearConstraint> edge_constraints(const std::vector<Vector>& ccw) {
    std::vector<LinearConstraint> out;
    if (ccw.empty()) {
        out.push_back({point(1.0, 0.0), 0.0});
        out.push_back({point(-1.0, 0.0), -1.0});
        return out;
    }
    if (ccw.size() == 1) {
        const Vector& p = ccw.front();
        out.push_back({point(1.0, 0.0), p[0]});
        out.push_back({point(0.0, 1.0), p[1]});
        out.push_back({point(-1.0, 0.0), -p[0]});
        out.push_back({point(0.0, -1.0), -p[1]});
        return out;
    }
    if (ccw.size() == 2) {
        const Vector& p = ccw[0];
        const Vector& q = ccw[1];
        const Vector u = q - p;
        const Vector n = point(u[1], -u[0]);
        out.push_back({n, n.dot(p)});
        out.push_back({-n, -n.dot(p)});
        out.push_back({u, u.dot(q)});
        out.push_back({-u, -u.dot(p)});
        return out;
    }
    out.reserve(ccw.size());
    for (std::size_t i = 0; i < ccw.size(); ++i) {
        const Vector& a = ccw[i];
        const Vector& b = ccw[(i + 1) % ccw.size()];
        const Vector normal = point(b[1] - a[1], a[0] - b[0]);
        out.push_back({normal, normal.dot(a)});
    }
    return out;
}

std::vector<Vector> halfplane_vertices(const std::vector<LinearConstraint>& constraints, const ToleranceContext& ctx) {
    std::vector<Vector> candidates;
    for (std::size_t i = 0; i < constraints.size(); ++i) {
        for (std::size_t j = i + 1; j < constraints.size(); ++j) {
            const Vector& a = constraints[i].normal;
            const Vector& b = constraints[j].normal;
            const double det = a[0] * b[1] - a[1] * b[0];
            if (std::abs(det) <= 1e-12 * a.norm() * b.norm()) {
                continue;
            }
            const double bi = constraints[i].offset;
            const double bj = constraints[j].offset;
            Vector p = point((bi * b[1] - bj * a[1]) / det, (a[0] * bj - b[0] * bi) / det);
            const bool feasible = std::all_of(constraints.begin(), constraints.end(), [&](const LinearConstraint& c) {
                return c.normal.dot(p) <= c.offset + ctx.atol() * std::max(1.0, c.normal.norm());
            });
            if (feasible) {
                candidates.push_back(std::move(p));
            }
        }
    }
    return convex_hull(std::move(candidates), ctx);
}

bool contains(const std::vector<Vector>& ccw, const Vector& p, const ToleranceContext& ctx) {
    switch (ccw.size()) {
    case 0:
        return false;
    case 1:
        return (p - ccw[0]).norm() <= ctx.atol();
    case 2:
        return segment_distance(ccw[0], ccw[1], p) <= ctx.atol();
    default:
        break;
    }
    for (std::size_t i = 0; i < ccw.size(); ++i) {
        const Vector& a = ccw[i];
        const Vector& b = ccw[(i + 1) % ccw.size()];
        if (cross(a, b, p) < -ctx.atol() * (b - a).norm()) {
            return false;
        }
    }
    return true;
}

std::vector<Vector> minkowski_sum(const std::vector<Vector>& p, const std::vector<Vector>& q,
                                  const ToleranceContext& ctx) {
    if (p.empty() || q.empty()) {
        return {};
    }
    if (p.size() < 3 || q.size() < 3) {
        std::vector<Vector> sums;
        sums.reserve(p.size() * q.size());
        for (const auto& a : p) {
            for (const auto& b : q) {
                sums.push_back(a + b);
            }
        }
        return convex_hull(std::move(sums), ctx);
    }

    // Start both polygons at their bottom-most (then left-most) vertex so the
    // edge angles of both sequences increase monotonically from 0 to 2pi.
    auto bottom = [](const std::vector<Vector>& poly) {
        std::size_t best = 0;
        for (std::size_t i = 1; i < poly.size(); ++i) {
            if (poly[i][1] < poly[best][1] || (poly[i][1] == poly[best][1] && poly[i][0] < poly[best][0])) {
                best = i;
            }
        }
        return best;
    };
    const std::size_t n = p.size();
    const std::size_t m = q.size();
    const std::size_t p0 = bottom(p);
    const std::size_t q0 = bottom(q);
    auto pv = [&](std::size_t i) -> const Vector& { return p[(p0 + i) % n]; };
    auto qv = [&](std::size_t j) -> const Vector& { return q[(q0 + j) % m]; };

    std::vector<Vector> out;
    out.reserve(n + m);
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < n || j < m) {
        out.push_back(pv(i) + qv(j));
        if (i == n) {
            ++j;
            continue;
        }
        if (j == m) {
            ++i;
            continue;
        }
        const Vector ep = pv(i + 1) - pv(i);
        const Vector eq = qv(j + 1) - qv(j);
        const double turn = ep[0] * eq[1] - ep[1] * eq[0];
        if (turn > 0.0) {
            ++i;
        } else if (turn < 0.0) {
            ++j;
        } else {
            ++i;
            ++j;
        }
    }
    return convex_hull(std::move(out), ctx);
}

}  // namespace setcalc::planar
