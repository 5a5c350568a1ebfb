#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Dense>

#include "surf4/error.hpp"
#include "surf4/geometry.hpp"

namespace surf4 {

FirstForm first_form(const SurfaceJet& jet, const Tolerances& tol) {
    FirstForm ff;
    ff.E = jet.zu.dot(jet.zu);
    ff.F = jet.zu.dot(jet.zv);
    ff.G = jet.zv.dot(jet.zv);
    const double det = ff.E * ff.G - ff.F * ff.F;
    if (!(det > tol.reg * tol.reg)) {
        throw DegenerateError("degenerate parametrization: EG - F^2 = " + std::to_string(det));
    }
    ff.W = std::sqrt(det);
    return ff;
}

NormalFrame normal_frame(const SurfaceJet& jet, const Tolerances& tol) {
    // Validates regularity before normalising anything.
    (void)first_form(jet, tol);

    const Vec4 t1 = jet.zu.normalized();
    const Vec4 t2 = (jet.zv - jet.zv.dot(t1) * t1).normalized();

    std::array<Vec4, 4> residual;
    for (int i = 0; i < 4; ++i) {
        const Vec4 e = Vec4::Unit(i);
        residual[i] = e - e.dot(t1) * t1 - e.dot(t2) * t2;
    }
    auto pick = [&](int skip) {
        int best = -1;
        for (int i = 0; i < 4; ++i) {
            if (i == skip) continue;
            if (best < 0 || residual[i].norm() > residual[best].norm()) best = i;
        }
        return best;
    };

    const int first = pick(-1);
    NormalFrame frame;
    frame.e1 = residual[first].normalized();
    for (auto& r : residual) r -= r.dot(frame.e1) * frame.e1;
    frame.e2 = residual[pick(first)].normalized();

    Eigen::Matrix4d basis;
    basis << jet.zu, jet.zv, frame.e1, frame.e2;
    if (basis.determinant() < 0.0) frame.e2 = -frame.e2;
    return frame;
}

SecondFormCoeffs second_form_coeffs(const SurfaceJet& jet, const NormalFrame& frame, const FirstForm& ff) {
    SecondFormCoeffs s;
    auto project = [&frame](const Vec4& x) { return Vec2(x.dot(frame.e1), x.dot(frame.e2)); };
    s.c[0][0] = project(jet.zuu);
    s.c[0][1] = s.c[1][0] = project(jet.zuv);
    s.c[1][1] = project(jet.zvv);

    auto area = [](const Vec2& a, const Vec2& b) { return a[0] * b[1] - b[0] * a[1]; };
    s.delta1 = area(s.c[0][0], s.c[0][1]);
    s.delta2 = area(s.c[0][0], s.c[1][1]);
    s.delta3 = area(s.c[0][1], s.c[1][1]);

    // The factor 2 sits on Delta_1 and Delta_3 only: zeta(g1, g2) expands to
    // 2 Delta_1 l1 l2 + Delta_2 (l1 m2 + l2 m1) + 2 Delta_3 m1 m2, over W.
    s.L = 2.0 * s.delta1 / ff.W;
    s.M = s.delta2 / ff.W;
    s.N = 2.0 * s.delta3 / ff.W;
    return s;
}

WeingartenMap weingarten(const FirstForm& ff, const SecondFormCoeffs& sfc) {
    const double det = ff.E * ff.G - ff.F * ff.F;
    return {(ff.F * sfc.M - ff.G * sfc.L) / det, (ff.F * sfc.L - ff.E * sfc.M) / det,
            (ff.F * sfc.N - ff.G * sfc.M) / det, (ff.F * sfc.M - ff.E * sfc.N) / det};
}

KAndKappa invariants(const FirstForm& ff, const SecondFormCoeffs& sfc) {
    const double det = ff.E * ff.G - ff.F * ff.F;
    return {(sfc.L * sfc.N - sfc.M * sfc.M) / det,
            (ff.E * sfc.N + ff.G * sfc.L - 2.0 * ff.F * sfc.M) / (2.0 * det)};
}

double gauss_curvature(const SurfaceJet& jet, const FirstForm& ff) {
    const double det = ff.E * ff.G - ff.F * ff.F;
    auto normal_part = [&](const Vec4& x) -> Vec4 {
        const double a = x.dot(jet.zu), b = x.dot(jet.zv);
        const double cu = (ff.G * a - ff.F * b) / det;
        const double cv = (ff.E * b - ff.F * a) / det;
        return x - cu * jet.zu - cv * jet.zv;
    };
    const Vec4 s11 = normal_part(jet.zuu);
    const Vec4 s12 = normal_part(jet.zuv);
    const Vec4 s22 = normal_part(jet.zvv);
    return (s11.dot(s22) - s12.dot(s12)) / det;
}

PointInvariants classify_point(const FirstForm& ff, const SecondFormCoeffs& sfc, const Tolerances& tol) {
    PointInvariants inv;
    const auto [k, kappa] = invariants(ff, sfc);
    inv.k = k;
    inv.kappa = kappa;
    const double det = ff.E * ff.G - ff.F * ff.F;
    inv.K_gauss = (sfc.c[0][0].dot(sfc.c[1][1]) - sfc.c[0][1].squaredNorm()) / det;

    if (std::max({std::abs(sfc.L), std::abs(sfc.M), std::abs(sfc.N)}) < tol.flat) {
        inv.point_class = PointClass::Flat;
    } else if (k > tol.cls) {
        inv.point_class = PointClass::Elliptic;
    } else if (k < -tol.cls) {
        inv.point_class = PointClass::Hyperbolic;
    } else {
        inv.point_class = PointClass::Parabolic;
    }

    // nu' >= nu'' are the roots of x^2 - 2 kappa x + k.
    double disc = kappa * kappa - k;
    if (disc < 0.0) {
        if (disc < -tol.nu_clamp) {
            throw NumericInconsistency("principal normal curvatures complex: kappa^2 - k = " +
                                       std::to_string(disc));
        }
        disc = 0.0;
    }
    const double root = std::sqrt(disc);
    const double big = kappa >= 0.0 ? kappa + root : kappa - root;
    // k / big avoids cancellation in the smaller root.
    const double small = big != 0.0 ? k / big : 0.0;
    inv.nu1 = std::max(big, small);
    inv.nu2 = std::min(big, small);

    inv.principal = principal_directions(ff, sfc, tol);
    inv.asymptotic = asymptotic_directions(sfc, tol);
    return inv;
}

FormBundle analyze_point(const SurfaceJet& jet, const Tolerances& tol) {
    FormBundle b;
    b.jet = jet;
    b.first = first_form(jet, tol);
    b.frame = normal_frame(jet, tol);
    b.second = second_form_coeffs(jet, b.frame, b.first);
    b.gamma = weingarten(b.first, b.second);
    b.inv = classify_point(b.first, b.second, tol);
    return b;
}

}  // namespace surf4
