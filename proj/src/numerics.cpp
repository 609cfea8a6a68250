#include "setcalc/numerics.hpp"

#include "setcalc/errors.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <mutex>

namespace setcalc {

ToleranceContext::ToleranceContext(double atol, double rtol, double ztol)
    : atol_(atol), rtol_(rtol), ztol_(ztol) {
    for (double t : {atol, rtol, ztol}) {
        if (!std::isfinite(t) || t < 0.0) {
            throw InvalidArgument("tolerances must be finite and nonnegative");
        }
    }
}

namespace {

ToleranceContext g_default_tolerance;
std::atomic<bool> g_default_frozen{false};
std::mutex g_install_mutex;

}  // namespace

const ToleranceContext& default_tolerance() {
    g_default_frozen.store(true, std::memory_order_release);
    return g_default_tolerance;
}

void install_default_tolerance(const ToleranceContext& ctx) {
    std::lock_guard lock(g_install_mutex);
    if (g_default_frozen.load(std::memory_order_acquire)) {
        throw InvalidArgument("default tolerance is already in use and cannot be replaced");
    }
    g_default_tolerance = ctx;
}

bool approx_eq(double a, double b, const ToleranceContext& ctx) {
    if (a == b) {
        return true;
    }
    if (a == 0.0 || b == 0.0) {
        return std::abs(a - b) <= ctx.ztol();
    }
    return std::abs(a - b) <= ctx.atol() + ctx.rtol() * std::max(std::abs(a), std::abs(b));
}

bool approx_zero(double a, const ToleranceContext& ctx) { return std::abs(a) <= ctx.ztol(); }

bool approx_eq(const Vector& a, const Vector& b, const ToleranceContext& ctx) {
    if (a.size() != b.size()) {
        return false;
    }
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        if (!approx_eq(a[i], b[i], ctx)) {
            return false;
        }
    }
    return true;
}

bool approx_le(double x, double y, const ToleranceContext& ctx) {
    return x <= y || approx_eq(x, y, ctx);
}

bool is_zero_vector(const Vector& v, const ToleranceContext& ctx) {
    return v.size() == 0 || v.cwiseAbs().maxCoeff() <= ctx.ztol();
}

Vector make_vector(std::initializer_list<double> values) {
    Vector v(static_cast<Eigen::Index>(values.size()));
    Eigen::Index i = 0;
    for (double x : values) {
        v[i++] = x;
    }
    return v;
}

Vector make_vector(std::span<const double> values) {
    Vector v(static_cast<Eigen::Index>(values.size()));
    for (std::size_t i = 0; i < values.size(); ++i) {
        v[static_cast<Eigen::Index>(i)] = values[i];
    }
    return v;
}

Matrix make_matrix(std::initializer_list<std::initializer_list<double>> rows) {
    const auto nrows = static_cast<Eigen::Index>(rows.size());
    const auto ncols = nrows == 0 ? 0 : static_cast<Eigen::Index>(rows.begin()->size());
    Matrix m(nrows, ncols);
    Eigen::Index i = 0;
    for (const auto& row : rows) {
        if (static_cast<Eigen::Index>(row.size()) != ncols) {
            throw InvalidArgument("matrix rows have different lengths");
        }
        Eigen::Index j = 0;
        for (double x : row) {
            m(i, j++) = x;
        }
        ++i;
    }
    return m;
}

Vector concat(const Vector& a, const Vector& b) {
    Vector out(a.size() + b.size());
    out << a, b;
    return out;
}

std::string format_number(double value) {
    std::array<char, 64> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    if (ec != std::errc{}) {
        return "nan";
    }
    return std::string(buf.data(), end);
}

std::string format_precise(double value) {
    std::array<char, 64> buf{};
    std::snprintf(buf.data(), buf.size(), "%.17g", value);
    return buf.data();
}

}  // namespace setcalc
