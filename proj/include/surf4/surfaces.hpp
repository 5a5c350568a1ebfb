#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include <Eigen/Core>

#include "surf4/expr/expression.hpp"
#include "surf4/geometry.hpp"

namespace surf4 {

/// Closed parameter rectangle [u_min, u_max] x [v_min, v_max].
struct Domain {
    double u_min = 0.0;
    double u_max = 1.0;
    double v_min = 0.0;
    double v_max = 1.0;

    [[nodiscard]] bool contains(double u, double v) const {
        return u >= u_min && u <= u_max && v >= v_min && v <= v_max;
    }
};

/// z(u, v) = (x, y, z, w) given by four expressions over a parameter rectangle.
class SurfaceDefinition {
public:
    /// Throws InputError if the domain is degenerate or a component references
    /// an unbound constant.
    SurfaceDefinition(std::string name, std::array<expr::Expression, 4> components,
                      expr::ConstantBindings constants, Domain domain);

    /// Parses the four component texts against `constants`.
    static SurfaceDefinition from_text(std::string name, const std::array<std::string, 4>& components,
                                       expr::ConstantBindings constants, Domain domain);

    [[nodiscard]] const std::string& name() const { return name_; }
    [[nodiscard]] const std::array<expr::Expression, 4>& components() const { return components_; }
    [[nodiscard]] const expr::ConstantBindings& constants() const { return constants_; }
    [[nodiscard]] const Domain& domain() const { return domain_; }

    [[nodiscard]] SurfaceDefinition with_domain(Domain domain) const;

private:
    std::string name_;
    std::array<expr::Expression, 4> components_;
    expr::ConstantBindings constants_;
    Domain domain_;
};

/// Componentwise second-order jet. Throws InputError outside the domain and
/// DomainError when an expression leaves its real domain.
SurfaceJet surface_jet(const SurfaceDefinition& def, double u, double v);

/// Same, without the domain check (used by stencils that straddle the boundary).
SurfaceJet surface_jet_unchecked(const SurfaceDefinition& def, double u, double v);

Vec4 surface_point(const SurfaceDefinition& def, double u, double v);

// --- general rotational surfaces -------------------------------------------

/// Meridian functions f(u), g(u) and rotation rates alpha, beta of
/// z = (f cos(alpha v), f sin(alpha v), g cos(beta v), g sin(beta v)).
struct RotationalParams {
    expr::Expression f;
    expr::Expression g;
    double alpha = 1.0;
    double beta = 1.0;
    expr::ConstantBindings constants;  ///< constants used by f and g
    double u_min = 0.5;
    double u_max = 2.0;

    /// Parses f and g and checks alpha, beta > 0 together with
    /// alpha^2 f^2 + beta^2 g^2 > 0 and f'^2 + g'^2 > 0 on a 65-point sample of [u_min, u_max].
    static RotationalParams create(std::string_view f_text, std::string_view g_text, double alpha,
                                   double beta, expr::ConstantBindings constants, double u_min,
                                   double u_max);
};

/// Builds the surface over [u_min, u_max] x [v_min, v_max].
SurfaceDefinition make_rotational(const RotationalParams& params, double v_min = 0.0,
                                  double v_max = 6.283185307179586, std::string name = "rotational");

/// Named families with vanishing k:
///  1: f = u, g = a u            (a != 0)
///  2: f = u, g = a u + b        (a, b != 0)
///  3: f = u, g = c u^(beta^2/alpha^2)  (c != 0, u > 0)
/// Recognised keys: a, b, c, alpha, beta, umin, umax. Unspecified values
/// default to a = 2, b = 1, c = 1, alpha = 1, beta = 1 (case 3: beta = 2),
/// u in [0.5, 2].
RotationalParams rotational_case(int case_number, const std::map<std::string, double>& values = {});

struct ClosedFormReport {
    double E = 0.0;
    double F = 0.0;
    double G = 0.0;
    double L = 0.0;
    double M = 0.0;
    double N = 0.0;
    double k = 0.0;
    double kappa = 0.0;
    double K = 0.0;
};

/// The explicit rotational-surface formulas for E ... K, from jets of f and g at u.
ClosedFormReport rotational_closed_form(const RotationalParams& params, double u);

struct FrenetTriple {
    double kappa1 = 0.0;
    double kappa2 = 0.0;
    double kappa3 = 0.0;
};

/// Frenet curvatures of c(v) = (a cos(alpha v), a sin(alpha v), b cos(beta v), b sin(beta v))
/// in the closed form stated for the parametric curves u = const. These are
/// rotation rates of the Frenet frame per unit of the parameter v, i.e. the
/// arc-length curvatures multiplied by the constant speed sqrt(a^2 alpha^2 + b^2 beta^2).
FrenetTriple helix_frenet_closed_form(double a, double b, double alpha, double beta);

/// The same curvatures per unit arc length.
FrenetTriple helix_frenet_arc_length(double a, double b, double alpha, double beta);

// --- built-ins and spec files ------------------------------------------------

SurfaceDefinition builtin_plane();
SurfaceDefinition builtin_clifford();
/// (u, v, u^2 - v^2, u v) on [-0.5, 0.5]^2; every point is elliptic.
SurfaceDefinition builtin_elliptic();

/// A resolved surface reference. `rotational` is set for builtin:rotational URIs.
struct SurfaceSource {
    SurfaceDefinition surface;
    std::optional<RotationalParams> rotational;
};

/// Resolves "builtin:plane", "builtin:clifford", "builtin:elliptic",
/// "builtin:rotational?case=3&alpha=1&beta=2&c=1" (or "...?f=u&g=u^2&alpha=1&beta=1"),
/// otherwise reads a JSON spec file from disk.
SurfaceSource load_surface(std::string_view ref);

/// Parses the JSON surface spec format:
/// {"name": s, "components": [s, s, s, s], "constants": {name: x}, "domain": {"u": [a, b], "v": [c, d]}}
SurfaceDefinition parse_surface_json(std::string_view text);
std::string surface_to_json(const SurfaceDefinition& def);

/// x -> R x + t applied to every point.
SurfaceDefinition rigid_transform(const SurfaceDefinition& def, const Eigen::Matrix4d& rotation,
                                  const Vec4& translation);

/// New parameters (s, t) with (u, v) = A (s, t) + b; `domain` is in (s, t).
SurfaceDefinition affine_reparametrize(const SurfaceDefinition& def, const Eigen::Matrix2d& A,
                                       const Vec2& b, Domain domain);

}  // namespace surf4
