#include <algorithm>
#include <cmath>
#include <string>

#include "surf4/error.hpp"
#include "surf4/geometry.hpp"

namespace surf4 {

void Tolerances::set(std::string_view name, double value) {
    if (!(value > 0.0) || !std::isfinite(value)) {
        throw InputError("tolerance '" + std::string(name) + "' must be positive");
    }
    if (name == "reg") reg = value;
    else if (name == "flat") flat = value;
    else if (name == "cls") cls = value;
    else if (name == "disc") disc = value;
    else if (name == "umbilic") umbilic = value;
    else if (name == "nu_clamp") nu_clamp = value;
    else throw InputError("unknown tolerance '" + std::string(name) + "'");
}

const std::vector<std::string_view>& Tolerances::names() {
    static const std::vector<std::string_view> kNames{"reg", "flat", "cls", "disc", "umbilic", "nu_clamp"};
    return kNames;
}

TangentDirection::TangentDirection(double lambda, double mu) : lambda_(lambda), mu_(mu) {
    if (!std::isfinite(lambda) || !std::isfinite(mu) || (lambda == 0.0 && mu == 0.0)) {
        throw InputError("tangent direction must be a finite nonzero pair");
    }
}

TangentDirection TangentDirection::canonical() const {
    const double scale = std::max(std::abs(lambda_), std::abs(mu_));
    double l = lambda_ / scale;
    double m = mu_ / scale;
    // Sign from the first component that is not round-off noise.
    const double lead = std::abs(l) > 1e-12 ? l : m;
    if (lead < 0) {
        l = -l;
        m = -m;
    }
    // + 0.0 turns -0 into 0 so printed forms stay clean.
    return {l + 0.0, m + 0.0};
}

bool TangentDirection::same_direction(const TangentDirection& other, double tol) const {
    const double cross = lambda_ * other.mu_ - mu_ * other.lambda_;
    return std::abs(cross) <= tol * std::hypot(lambda_, mu_) * std::hypot(other.lambda_, other.mu_);
}

double FirstForm::inner(const TangentDirection& a, const TangentDirection& b) const {
    return E * a.lambda() * b.lambda() + F * (a.lambda() * b.mu() + a.mu() * b.lambda()) +
           G * a.mu() * b.mu();
}

Vec2 WeingartenMap::apply(const TangentDirection& d) const {
    return {d.lambda() * g11 + d.mu() * g21, d.lambda() * g12 + d.mu() * g22};
}

std::string_view to_string(PointClass c) {
    switch (c) {
        case PointClass::Flat: return "Flat";
        case PointClass::Elliptic: return "Elliptic";
        case PointClass::Parabolic: return "Parabolic";
        case PointClass::Hyperbolic: return "Hyperbolic";
    }
    return "?";
}

double second_form_bilinear(const SecondFormCoeffs& sfc, const TangentDirection& d1,
                            const TangentDirection& d2) {
    return sfc.L * d1.lambda() * d2.lambda() +
           sfc.M * (d1.lambda() * d2.mu() + d2.lambda() * d1.mu()) + sfc.N * d1.mu() * d2.mu();
}

double zeta(const FirstForm& ff, const SecondFormCoeffs& sfc, const TangentDirection& d1,
            const TangentDirection& d2) {
    return second_form_bilinear(sfc, d1, d2) / (std::sqrt(ff.quadratic(d1)) * std::sqrt(ff.quadratic(d2)));
}

double normal_curvature(const FirstForm& ff, const SecondFormCoeffs& sfc, const TangentDirection& d) {
    return second_form_bilinear(sfc, d, d) / ff.quadratic(d);
}

double geodesic_torsion(const FirstForm& ff, const SecondFormCoeffs& sfc, const TangentDirection& d) {
    const double l = d.lambda(), m = d.mu();
    const auto& [E, F, G, W] = ff;
    const double num = l * l * (E * sfc.M - F * sfc.L) + l * m * (E * sfc.N - G * sfc.L) +
                       m * m * (F * sfc.N - G * sfc.M);
    return num / (W * ff.quadratic(d));
}

TangentDirection orthogonal_tangent(const FirstForm& ff, const TangentDirection& d) {
    const double l = d.lambda(), m = d.mu();
    return {-(ff.F * l + ff.G * m) / ff.W, (ff.E * l + ff.F * m) / ff.W};
}

TangentDirection conjugate_direction(const SecondFormCoeffs& sfc, const TangentDirection& d,
                                     const Tolerances& tol) {
    const double l = d.lambda(), m = d.mu();
    const double p = sfc.L * l + sfc.M * m;
    const double q = sfc.M * l + sfc.N * m;
    const double scale = std::hypot(l, m);
    if (std::hypot(p, q) <= tol.flat * scale) {
        throw DegenerateError("conjugate direction undefined: direction is conjugate to every tangent");
    }
    return {-q, p};
}

DirectionSet solve_homogeneous_quadratic(double a, double b, double c, double disc_tol) {
    DirectionSet out;
    const double s = std::max({std::abs(a), std::abs(b), std::abs(c)});
    if (s == 0.0) {
        out.all = true;
        return out;
    }
    a /= s;
    b /= s;
    c /= s;
    const double disc = b * b - 4.0 * a * c;
    if (disc < -disc_tol) return out;

    if (disc <= disc_tol) {
        // Double root t = -b/(2a) = -2c/b; take whichever representation is better scaled.
        const Vec2 r1(-b, 2.0 * a);
        const Vec2 r2(2.0 * c, -b);
        const Vec2& r = r1.norm() >= r2.norm() ? r1 : r2;
        out.directions.push_back(TangentDirection(r.x(), r.y()).canonical());
        return out;
    }

    const double sq = std::sqrt(disc);
    const double q = -0.5 * (b + (b >= 0.0 ? sq : -sq));
    out.directions.push_back(TangentDirection(q, a).canonical());
    out.directions.push_back(TangentDirection(c, q).canonical());
    std::sort(out.directions.begin(), out.directions.end(),
              [](const TangentDirection& x, const TangentDirection& y) {
                  return x.lambda() != y.lambda() ? x.lambda() > y.lambda() : x.mu() > y.mu();
              });
    return out;
}

DirectionSet asymptotic_directions(const SecondFormCoeffs& sfc, const Tolerances& tol) {
    if (std::max({std::abs(sfc.L), std::abs(sfc.M), std::abs(sfc.N)}) < tol.flat) {
        return DirectionSet{true, {}};
    }
    return solve_homogeneous_quadratic(sfc.L, 2.0 * sfc.M, sfc.N, tol.disc);
}

DirectionSet principal_directions(const FirstForm& ff, const SecondFormCoeffs& sfc, const Tolerances& tol) {
    const double second_scale = std::max({std::abs(sfc.L), std::abs(sfc.M), std::abs(sfc.N)});
    if (second_scale < tol.flat) return DirectionSet{true, {}};

    const double a = ff.E * sfc.M - ff.F * sfc.L;
    const double b = ff.E * sfc.N - ff.G * sfc.L;
    const double c = ff.F * sfc.N - ff.G * sfc.M;
    const double first_scale = std::max({std::abs(ff.E), std::abs(ff.F), std::abs(ff.G)});
    if (std::max({std::abs(a), std::abs(b), std::abs(c)}) <= tol.umbilic * first_scale * second_scale) {
        return DirectionSet{true, {}};
    }
    // The discriminant is a sum of squares in exact arithmetic; round-off only
    // produces tiny negatives, which the double-root band absorbs.
    return solve_homogeneous_quadratic(a, b, c, tol.disc);
}

}  // namespace surf4
