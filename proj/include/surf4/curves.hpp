#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "surf4/geometry.hpp"
#include "surf4/surfaces.hpp"

namespace surf4 {

struct LineField {
    enum class Kind { Asymptotic, Principal };
    enum class Branch { First, Second };

    Kind kind = Kind::Asymptotic;
    /// Index into the canonical, descending-sorted direction list at the seed.
    Branch branch = Branch::First;
};

std::string_view to_string(LineField::Kind kind);

/// Direction of `field` at (u, v).
///
/// Without `prev` the branch picks from the canonical sorted list; a double
/// root serves both branches. With `prev` the candidate closest to `prev` in
/// the I-angle is taken and its sign chosen so that I(result, prev) > 0.
///
/// Throws DegenerateError at flat points and "all"-direction points, and
/// NoRealDirection for the asymptotic field at an elliptic point.
TangentDirection direction_at(const SurfaceDefinition& def, const LineField& field, double u, double v,
                              const std::optional<TangentDirection>& prev = std::nullopt,
                              const Tolerances& tol = {});

struct TracePoint {
    double t = 0.0;
    double u = 0.0;
    double v = 0.0;
};

struct CurveTrace {
    enum class Status { Completed, HitBoundary, DegenerateField, StepFailure };

    std::vector<TracePoint> params;
    std::vector<Vec4> points;
    Status status = Status::Completed;
    std::string stop_reason;
};

std::string_view to_string(CurveTrace::Status status);

/// Classical RK4 on the unit-speed field X / sqrt(I(X, X)), every stage
/// sign-aligned with the previous one. Stops before leaving the domain.
/// Throws DegenerateError or NoRealDirection when the seed has no direction,
/// InputError for a seed outside the domain or a non-positive step.
CurveTrace integrate_line(const SurfaceDefinition& def, const LineField& field, double u0, double v0,
                          double arc_step, int max_steps, const Tolerances& tol = {});

struct FrenetSample {
    std::size_t index = 0;  ///< position in the input point list
    double t = 0.0;         ///< index * step
    double speed = 0.0;     ///< |c'|
    double kappa1 = 0.0;
    std::optional<double> kappa2;
    std::optional<double> kappa3;
};

struct CurvatureStats {
    std::size_t count = 0;
    double mean = 0.0;
    double max_deviation = 0.0;
};

struct FrenetSamples {
    std::vector<FrenetSample> samples;
    CurvatureStats kappa1;
    CurvatureStats kappa2;  ///< over samples that carry kappa2
    CurvatureStats kappa3;
};

struct FrenetOptions {
    /// |v_{j+1}| <= rel |c^{(j+1)}| + abs |c'|^{j+1} marks the Gram-Schmidt residual as zero.
    double degenerate_rel = 1e-6;
    double degenerate_abs = 1e-7;
};

/// Frenet curvatures of a curve sampled at uniform parameter spacing `step`.
/// Derivatives up to order four come from Richardson-extrapolated central
/// differences on a nine-point stencil, so samples start at index 4.
///
/// kappa1 is always present. kappa2 is present once c'' has a component
/// normal to c'; it is set to 0 (and kappa3 omitted) when c''' lies in
/// span{c', c''}, and kappa3 is 0 when c'''' lies in span{c', c'', c'''}.
/// kappa1, kappa3 >= 0; kappa2 carries the sign of det[c', c'', c''', c'''']
/// when that frame is non-degenerate and is positive otherwise.
FrenetSamples frenet_curvatures(const std::vector<Vec4>& points, double step, const FrenetOptions& opts = {});

/// Per-curvature max |kappa_i - mean_i| < tol (1 + |mean_i|). Curvatures
/// present on only some samples make the answer false.
/// Throws InsufficientSamples below five samples.
bool is_constant_curvature(const FrenetSamples& samples, double tol);

}  // namespace surf4
