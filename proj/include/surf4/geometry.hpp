#pragma once

#include <array>
#include <string_view>
#include <vector>

#include <Eigen/Core>

namespace surf4 {

using Vec4 = Eigen::Vector4d;
using Vec2 = Eigen::Vector2d;

/// Numerical thresholds standing in for the exact zero tests of the theory.
/// Every field is overridable from the CLI (`--tol NAME=VALUE`) and from
/// SURF4_TOL_<NAME> environment variables.
struct Tolerances {
    double reg = 1e-12;       ///< EG - F^2 must exceed reg^2
    double flat = 1e-9;       ///< max(|L|,|M|,|N|) below this -> flat point
    double cls = 1e-9;        ///< |k| below this -> parabolic
    double disc = 1e-10;      ///< normalised discriminant band treated as a double root
    double umbilic = 1e-10;   ///< relative size below which the principal equation vanishes
    double nu_clamp = 1e-10;  ///< negative kappa^2 - k above -nu_clamp is clamped to 0

    /// Sets a field by name ("reg", "flat", ...). Throws InputError for an
    /// unknown name or a non-positive value.
    void set(std::string_view name, double value);
    static const std::vector<std::string_view>& names();
};

/// Point and derivatives through second order of z(u, v) in R^4.
struct SurfaceJet {
    Vec4 z = Vec4::Zero();
    Vec4 zu = Vec4::Zero();
    Vec4 zv = Vec4::Zero();
    Vec4 zuu = Vec4::Zero();
    Vec4 zuv = Vec4::Zero();
    Vec4 zvv = Vec4::Zero();
};

/// A tangent g: X = lambda z_u + mu z_v, up to nonzero scaling.
class TangentDirection {
public:
    /// Throws InputError when (lambda, mu) == (0, 0) or non-finite.
    TangentDirection(double lambda, double mu);

    [[nodiscard]] double lambda() const { return lambda_; }
    [[nodiscard]] double mu() const { return mu_; }

    /// Scaled so that max(|lambda|, |mu|) = 1 with the first non-negligible
    /// component positive.
    [[nodiscard]] TangentDirection canonical() const;
    [[nodiscard]] TangentDirection flipped() const { return {-lambda_, -mu_}; }

    /// True when the two pairs are proportional within `tol` (sine of the
    /// angle between them in the (lambda, mu) plane).
    [[nodiscard]] bool same_direction(const TangentDirection& other, double tol = 1e-9) const;

private:
    double lambda_;
    double mu_;
};

struct FirstForm {
    double E = 0.0;
    double F = 0.0;
    double G = 0.0;
    double W = 0.0;  ///< sqrt(EG - F^2)

    /// I(d1, d2) = E l1 l2 + F (l1 m2 + l2 m1) + G m1 m2.
    [[nodiscard]] double inner(const TangentDirection& a, const TangentDirection& b) const;
    [[nodiscard]] double quadratic(const TangentDirection& d) const { return inner(d, d); }
};

/// Orthonormal frame of the normal plane with {z_u, z_v, e1, e2} positively oriented.
struct NormalFrame {
    Vec4 e1 = Vec4::Zero();
    Vec4 e2 = Vec4::Zero();
};

/// Coefficients c_ij^k of the second fundamental tensor in a normal frame,
/// the oriented areas Delta_1..3 and the derived L, M, N.
struct SecondFormCoeffs {
    /// c[i][j] is the normal vector sigma(z_i, z_j) in frame coordinates (c_ij^1, c_ij^2);
    /// index 0 stands for u and 1 for v. c[0][1] == c[1][0].
    std::array<std::array<Vec2, 2>, 2> c{};
    double delta1 = 0.0;
    double delta2 = 0.0;
    double delta3 = 0.0;
    double L = 0.0;
    double M = 0.0;
    double N = 0.0;

    [[nodiscard]] double coeff(int i, int j, int k) const { return c[i][j][k]; }
};

/// Components of the Weingarten-type endomorphism gamma of the tangent plane:
/// gamma(z_u) = g11 z_u + g12 z_v, gamma(z_v) = g21 z_u + g22 z_v.
struct WeingartenMap {
    double g11 = 0.0;
    double g12 = 0.0;
    double g21 = 0.0;
    double g22 = 0.0;

    [[nodiscard]] double determinant() const { return g11 * g22 - g12 * g21; }
    [[nodiscard]] double trace() const { return g11 + g22; }
    /// Coordinates of gamma(X) in the basis {z_u, z_v}.
    [[nodiscard]] Vec2 apply(const TangentDirection& d) const;
};

/// Solutions of a homogeneous direction equation: either a finite list or
/// every tangent ("all").
struct DirectionSet {
    bool all = false;
    std::vector<TangentDirection> directions;

    [[nodiscard]] std::size_t size() const { return directions.size(); }
    [[nodiscard]] bool empty() const { return !all && directions.empty(); }
};

enum class PointClass { Flat, Elliptic, Parabolic, Hyperbolic };
std::string_view to_string(PointClass c);

struct PointInvariants {
    double k = 0.0;
    double kappa = 0.0;
    double K_gauss = 0.0;
    PointClass point_class = PointClass::Flat;
    double nu1 = 0.0;  ///< larger principal normal curvature
    double nu2 = 0.0;
    DirectionSet principal;
    DirectionSet asymptotic;
};

// --- first order ------------------------------------------------------------

/// E, F, G, W. Throws DegenerateError when EG - F^2 <= reg^2.
FirstForm first_form(const SurfaceJet& jet, const Tolerances& tol = {});

/// Pivoted Gram-Schmidt of the standard basis against span{z_u, z_v}, with e2
/// flipped as needed so that det[z_u, z_v, e1, e2] > 0.
NormalFrame normal_frame(const SurfaceJet& jet, const Tolerances& tol = {});

// --- second order -----------------------------------------------------------

SecondFormCoeffs second_form_coeffs(const SurfaceJet& jet, const NormalFrame& frame, const FirstForm& ff);

WeingartenMap weingarten(const FirstForm& ff, const SecondFormCoeffs& sfc);

struct KAndKappa {
    double k;
    double kappa;
};

/// k = (LN - M^2)/(EG - F^2), kappa = (EN + GL - 2FM)/(2(EG - F^2)).
KAndKappa invariants(const FirstForm& ff, const SecondFormCoeffs& sfc);

/// Gaussian curvature from the Gauss equation, with the normal parts of the
/// second derivatives obtained by metric projection (no normal frame involved).
double gauss_curvature(const SurfaceJet& jet, const FirstForm& ff);

// --- tangent directions -----------------------------------------------------

/// II(d1; d2) = L l1 l2 + M (l1 m2 + l2 m1) + N m1 m2.
double second_form_bilinear(const SecondFormCoeffs& sfc, const TangentDirection& d1,
                            const TangentDirection& d2);

/// zeta_{g1,g2} = II(d1; d2) / (sqrt(I(d1)) sqrt(I(d2))). Scale invariant in each argument.
double zeta(const FirstForm& ff, const SecondFormCoeffs& sfc, const TangentDirection& d1,
            const TangentDirection& d2);

/// nu_g = II(d)/I(d).
double normal_curvature(const FirstForm& ff, const SecondFormCoeffs& sfc, const TangentDirection& d);

/// alpha_g, equal to zeta(d, orthogonal_tangent(d)).
double geodesic_torsion(const FirstForm& ff, const SecondFormCoeffs& sfc, const TangentDirection& d);

/// (-(F l + G m)/W, (E l + F m)/W): the tangent I-orthogonal to d, same I-length.
TangentDirection orthogonal_tangent(const FirstForm& ff, const TangentDirection& d);

/// The direction conjugate to d, proportional to (-(M l + N m), L l + M m).
/// Throws DegenerateError when d is conjugate to every direction.
TangentDirection conjugate_direction(const SecondFormCoeffs& sfc, const TangentDirection& d,
                                     const Tolerances& tol = {});

/// Real roots of L l^2 + 2M l m + N m^2 = 0, "all" at flat points.
DirectionSet asymptotic_directions(const SecondFormCoeffs& sfc, const Tolerances& tol = {});

/// Real roots of |E F; L M| l^2 + |E G; L N| l m + |F G; M N| m^2 = 0,
/// "all" when the equation vanishes identically.
DirectionSet principal_directions(const FirstForm& ff, const SecondFormCoeffs& sfc,
                                  const Tolerances& tol = {});

/// Roots of a l^2 + b l m + c m^2 = 0 in homogeneous form, ordered by
/// descending canonical (lambda, mu). A root of multiplicity two is reported once.
DirectionSet solve_homogeneous_quadratic(double a, double b, double c, double disc_tol);

PointInvariants classify_point(const FirstForm& ff, const SecondFormCoeffs& sfc, const Tolerances& tol = {});

/// Everything computed at one surface point.
struct FormBundle {
    SurfaceJet jet;
    FirstForm first;
    NormalFrame frame;
    SecondFormCoeffs second;
    WeingartenMap gamma;
    PointInvariants inv;
};

FormBundle analyze_point(const SurfaceJet& jet, const Tolerances& tol = {});

}  // namespace surf4
