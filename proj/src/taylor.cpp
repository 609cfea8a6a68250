#include "setcalc/taylor.hpp"

#include "setcalc/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace setcalc::taylor {

namespace {

Range add(Range a, Range b) { return {a.lo + b.lo, a.hi + b.hi}; }

Range mul(Range a, Range b) {
    const double p[] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
    return {*std::min_element(std::begin(p), std::end(p)), *std::max_element(std::begin(p), std::end(p))};
}

void require_range(Range r, const char* what) {
    if (!std::isfinite(r.lo) || !std::isfinite(r.hi) || r.lo > r.hi) {
        throw InvalidArgument(std::string(what) + " must be a nonempty finite interval");
    }
}

// Rounding slack: four units in the last place of the largest magnitude
// involved, zero when everything is zero.
double slack(double magnitude) {
    if (magnitude == 0.0) {
        return 0.0;
    }
    const double ulp = std::nextafter(magnitude, std::numeric_limits<double>::infinity()) - magnitude;
    return 4.0 * ulp;
}

// Coefficients of xi -> p(m + r xi).
std::vector<double> recenter(const std::vector<double>& p, double m, double r) {
    // Taylor shift by repeated synthetic division.
    std::vector<double> c = p;
    const std::size_t n = c.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
        for (std::size_t k = n - 1; k > i; --k) {
            c[k - 1] += m * c[k];
        }
    }
    double scale = 1.0;
    for (auto& coefficient : c) {
        coefficient *= scale;
        scale *= r;
    }
    return c;
}

struct Piece {
    double center;
    double shared;
    double axis;
};

Piece enclose(const TaylorModel1& model, Range sub) {
    const double x0 = model.expansion_point();
    const Range shifted{sub.lo - x0, sub.hi - x0};
    const std::vector<double> q = recenter(model.coefficients(), shifted.mid(), shifted.rad());

    // Higher-order terms over xi in [-1, 1]: even powers land in [0, 1],
    // odd powers in [-1, 1].
    Range nonlinear{0.0, 0.0};
    double magnitude = std::max(std::abs(model.remainder().lo), std::abs(model.remainder().hi));
    for (std::size_t k = 1; k < q.size(); ++k) {
        magnitude = std::max(magnitude, std::abs(q[k]));
        if (k < 2) {
            continue;
        }
        const Range power = (k % 2 == 0) ? Range{0.0, 1.0} : Range{-1.0, 1.0};
        nonlinear = add(nonlinear, mul(Range{q[k], q[k]}, power));
    }
    const double linear = q.size() > 1 ? q[1] : 0.0;
    const Range rem = model.remainder();
    return {q[0] + nonlinear.mid() + rem.mid(), linear, rem.rad() + nonlinear.rad() + slack(magnitude)};
}

std::vector<Range> split_domain(Range d, int splits) {
    if (splits < 1) {
        throw InvalidArgument("split count must be at least 1");
    }
    std::vector<Range> pieces;
    const double width = (d.hi - d.lo) / splits;
    for (int i = 0; i < splits; ++i) {
        const double lo = d.lo + width * i;
        const double hi = i + 1 == splits ? d.hi : d.lo + width * (i + 1);
        pieces.push_back({lo, hi});
    }
    return pieces;
}

Zonotope zonotope_over(const TaylorModelVector& v, Range sub) {
    const Eigen::Index n = v.dim();
    Vector center(n);
    Vector shared(n);
    Vector axis(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const Piece piece = enclose(v.components()[static_cast<std::size_t>(i)], sub);
        center[i] = piece.center;
        shared[i] = piece.shared;
        axis[i] = piece.axis;
    }
    std::vector<Vector> columns;
    if (!shared.isZero(0.0)) {
        columns.push_back(shared);
    }
    for (Eigen::Index i = 0; i < n; ++i) {
        if (axis[i] != 0.0) {
            Vector e = Vector::Zero(n);
            e[i] = axis[i];
            columns.push_back(std::move(e));
        }
    }
    Matrix g(n, static_cast<Eigen::Index>(columns.size()));
    for (std::size_t j = 0; j < columns.size(); ++j) {
        g.col(static_cast<Eigen::Index>(j)) = columns[j];
    }
    return {center, g};
}

Hyperrectangle box_over(const TaylorModelVector& v, Range sub) {
    const Eigen::Index n = v.dim();
    Vector lo(n);
    Vector hi(n);
    const double x0 = v.expansion_point();
    for (Eigen::Index i = 0; i < n; ++i) {
        const TaylorModel1& model = v.components()[static_cast<std::size_t>(i)];
        const Range r = add(interval_eval(model.coefficients(), {sub.lo - x0, sub.hi - x0}), model.remainder());
        // A constant model with a zero remainder involves no rounding.
        const bool exact = r.lo == r.hi && std::all_of(model.coefficients().begin() + 1, model.coefficients().end(),
                                                        [](double c) { return c == 0.0; });
        const double s = exact ? 0.0 : slack(std::max(std::abs(r.lo), std::abs(r.hi)));
        lo[i] = r.lo - s;
        hi[i] = r.hi + s;
    }
    return Hyperrectangle::from_bounds(lo, hi);
}

}  // namespace

Range interval_eval(const std::vector<double>& coefficients, Range j) {
    if (coefficients.empty()) {
        return {0.0, 0.0};
    }
    Range acc{coefficients.back(), coefficients.back()};
    for (auto it = coefficients.rbegin() + 1; it != coefficients.rend(); ++it) {
        acc = add(mul(acc, j), Range{*it, *it});
    }
    return acc;
}

TaylorModel1::TaylorModel1(std::vector<double> coefficients, Range remainder, double expansion_point, Range domain)
    : coefficients_(std::move(coefficients)), remainder_(remainder), x0_(expansion_point), domain_(domain) {
    if (coefficients_.empty()) {
        throw InvalidArgument("a Taylor model needs at least one coefficient");
    }
    for (double c : coefficients_) {
        if (!std::isfinite(c)) {
            throw InvalidArgument("Taylor model coefficients must be finite");
        }
    }
    require_range(remainder_, "remainder");
    require_range(domain_, "domain");
    if (!std::isfinite(x0_) || x0_ < domain_.lo || x0_ > domain_.hi) {
        throw InvalidArgument("expansion point must lie in the domain");
    }
}

double TaylorModel1::evaluate(double t) const {
    const double s = t - x0_;
    double acc = 0.0;
    for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
        acc = acc * s + *it;
    }
    return acc;
}

TaylorModelVector::TaylorModelVector(std::vector<TaylorModel1> components) : components_(std::move(components)) {
    if (components_.empty()) {
        throw InvalidArgument("a Taylor model vector needs at least one component");
    }
    const TaylorModel1& first = components_.front();
    for (const auto& c : components_) {
        if (c.expansion_point() != first.expansion_point() || c.domain().lo != first.domain().lo ||
            c.domain().hi != first.domain().hi) {
            throw InvalidArgument("Taylor model components must share the expansion point and domain");
        }
    }
}

Zonotope tm_to_zonotope(const TaylorModelVector& v) { return zonotope_over(v, v.domain()); }

std::vector<Zonotope> tm_to_zonotopes(const TaylorModelVector& v, int splits) {
    std::vector<Zonotope> out;
    for (const Range piece : split_domain(v.domain(), splits)) {
        out.push_back(zonotope_over(v, piece));
    }
    return out;
}

Hyperrectangle tm_to_box(const TaylorModelVector& v) { return box_over(v, v.domain()); }

std::vector<Hyperrectangle> tm_to_boxes(const TaylorModelVector& v, int splits) {
    std::vector<Hyperrectangle> out;
    for (const Range piece : split_domain(v.domain(), splits)) {
        out.push_back(box_over(v, piece));
    }
    return out;
}

}  // namespace setcalc::taylor
