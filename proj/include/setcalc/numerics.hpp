#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace setcalc {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Floating-point comparison policy. Immutable once constructed.
class ToleranceContext {
public:
    ToleranceContext() = default;
    ToleranceContext(double atol, double rtol, double ztol);

    double atol() const { return atol_; }
    double rtol() const { return rtol_; }
    double ztol() const { return ztol_; }

private:
    double atol_ = 1e-8;
    double rtol_ = 0.0;
    double ztol_ = 1e-8;
};

/// Process-wide default tolerance. Reading it freezes it.
const ToleranceContext& default_tolerance();

/// Replace the process-wide default. Only allowed before the first call to
/// default_tolerance(); throws InvalidArgument afterwards.
void install_default_tolerance(const ToleranceContext& ctx);

/// |a-b| <= atol + rtol*max(|a|,|b|); when b == 0 (or a == 0) the ztol
/// threshold is used instead.
bool approx_eq(double a, double b, const ToleranceContext& ctx = default_tolerance());

bool approx_zero(double a, const ToleranceContext& ctx = default_tolerance());

bool approx_eq(const Vector& a, const Vector& b, const ToleranceContext& ctx = default_tolerance());

/// x <= y up to tolerance.
bool approx_le(double x, double y, const ToleranceContext& ctx = default_tolerance());

bool is_zero_vector(const Vector& v, const ToleranceContext& ctx = default_tolerance());

Vector make_vector(std::initializer_list<double> values);
Vector make_vector(std::span<const double> values);

/// Row-major construction helper.
Matrix make_matrix(std::initializer_list<std::initializer_list<double>> rows);

/// Concatenate two vectors.
Vector concat(const Vector& a, const Vector& b);

/// Shortest round-trip decimal representation.
std::string format_number(double value);

/// 17 significant digits.
std::string format_precise(double value);

}  // namespace setcalc
