#include <catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <optional>

#include <Eigen/Dense>

#include "random_expr.hpp"
#include "surf4/curves.hpp"
#include "surf4/error.hpp"
#include "surf4/geometry.hpp"
#include "surf4/sampling.hpp"
#include "surf4/surfaces.hpp"

using namespace surf4;
using surf4::testing::rel_error;
using surf4::testing::Rng;
using surf4::testing::uniform;

namespace {

// Largest error seen plus the sample that produced it.
struct MaxError {
    double value = 0.0;
    std::string where;
    void observe(double e, const std::string& w) {
        if (!(e <= value)) {
            value = e;
            where = w;
        }
    }
};

std::string at(double u, double v) {
    return "(" + std::to_string(u) + ", " + std::to_string(v) + ")";
}

// g(gamma X, X) with X = lambda z_u + mu z_v.
double gamma_form(const FirstForm& ff, const WeingartenMap& g, const TangentDirection& d) {
    const Vec2 a = g.apply(d);
    return ff.E * a.x() * d.lambda() + ff.F * (a.x() * d.mu() + a.y() * d.lambda()) + ff.G * a.y() * d.mu();
}

double cos_angle(const FirstForm& ff, const TangentDirection& a, const TangentDirection& b) {
    return ff.inner(a, b) / std::sqrt(ff.quadratic(a) * ff.quadratic(b));
}

// E, F, G at (u, v) from the surface jet.
std::array<double, 3> metric(const SurfaceDefinition& def, double u, double v) {
    const auto j = surface_jet_unchecked(def, u, v);
    return {j.zu.squaredNorm(), j.zu.dot(j.zv), j.zv.squaredNorm()};
}

// Intrinsic Gaussian curvature from E, F, G alone (Brioschi), with all
// derivatives of the metric taken by central differences.
double brioschi(const SurfaceDefinition& def, double u, double v, double h) {
    const auto m = metric(def, u, v);
    const auto pu = metric(def, u + h, v), mu = metric(def, u - h, v);
    const auto pv = metric(def, u, v + h), mv = metric(def, u, v - h);
    const auto pp = metric(def, u + h, v + h), pm = metric(def, u + h, v - h);
    const auto mp = metric(def, u - h, v + h), mm = metric(def, u - h, v - h);
    const double E = m[0], F = m[1], G = m[2];
    const double Eu = (pu[0] - mu[0]) / (2 * h), Ev = (pv[0] - mv[0]) / (2 * h);
    const double Fu = (pu[1] - mu[1]) / (2 * h), Fv = (pv[1] - mv[1]) / (2 * h);
    const double Gu = (pu[2] - mu[2]) / (2 * h), Gv = (pv[2] - mv[2]) / (2 * h);
    const double Evv = (pv[0] - 2 * E + mv[0]) / (h * h);
    const double Guu = (pu[2] - 2 * G + mu[2]) / (h * h);
    const double Fuv = (pp[1] - pm[1] - mp[1] + mm[1]) / (4 * h * h);
    Eigen::Matrix3d a, b;
    a << -Evv / 2 + Fuv - Guu / 2, Eu / 2, Fu - Ev / 2, Fv - Gu / 2, E, F, Gv / 2, F, G;
    b << 0, Ev / 2, Gu / 2, Ev / 2, E, F, Gu / 2, F, G;
    const double W2 = E * G - F * F;
    return (a.determinant() - b.determinant()) / (W2 * W2);
}

std::array<double, 9> fields(const FormBundle& b) {
    return {b.first.E, b.first.F, b.first.G, b.second.L, b.second.M, b.second.N, b.inv.k, b.inv.kappa, b.inv.K_gauss};
}

// Fourth-order central difference tangent of a traced point list.
TangentDirection stencil_tangent(const CurveTrace& tr, std::size_t i) {
    const auto& p = tr.params;
    const double du = (-p[i + 2].u + 8 * p[i + 1].u - 8 * p[i - 1].u + p[i - 2].u) / 12;
    const double dv = (-p[i + 2].v + 8 * p[i + 1].v - 8 * p[i - 1].v + p[i - 2].v) / 12;
    return {du, dv};
}

std::vector<Vec4> helix_points(double a, double b, double alpha, double beta, double step, int n) {
    std::vector<Vec4> pts;
    for (int i = 0; i < n; ++i) {
        const double t = step * i;
        pts.emplace_back(a * std::cos(alpha * t), a * std::sin(alpha * t), b * std::cos(beta * t),
                         b * std::sin(beta * t));
    }
    return pts;
}

}  // namespace

// --- expressions --------------------------------------------------------------

TEST_CASE("jets agree with finite differences", "[property][expr]") {
    Rng rng(1001);
    MaxError err;
    int evaluated = 0;
    for (int i = 0; i < 1000; ++i) {
        const auto e = surf4::testing::random_expression(rng, 6);
        const expr::ConstantBindings c{{"c", uniform(rng, -1, 1)}};
        const double u = uniform(rng, -1, 1), v = uniform(rng, -1, 1);
        expr::Jet2 j;
        try {
            j = expr::evaluate_jet(e, u, v, c);
        } catch (const DomainError&) {
            continue;
        }
        ++evaluated;
        const auto fd = surf4::testing::finite_differences(e, u, v, c);
        const std::string w = e.to_string() + " at " + at(u, v);
        err.observe(rel_error(j.du, fd.du), w);
        err.observe(rel_error(j.dv, fd.dv), w);
        err.observe(rel_error(j.duu, fd.duu), w);
        err.observe(rel_error(j.duv, fd.duv), w);
        err.observe(rel_error(j.dvv, fd.dvv), w);
    }
    INFO("worst: " << err.where);
    CHECK(evaluated >= 990);
    CHECK(err.value < 1e-5);
}

TEST_CASE("printing then parsing preserves the function", "[property][expr]") {
    Rng rng(1002);
    for (int i = 0; i < 300; ++i) {
        const auto e = surf4::testing::random_expression(rng, 6);
        const auto text = e.to_string();
        // Negative literals print as unary minus, so trees may differ; values may not.
        const auto back = expr::parse_expression(text, std::vector<std::string>{"c"});
        INFO(text);
        const expr::ConstantBindings c{{"c", uniform(rng, -1, 1)}};
        for (int k = 0; k < 10; ++k) {
            const double u = uniform(rng, -1, 1), v = uniform(rng, -1, 1);
            double a = 0, b = 0;
            try {
                a = expr::evaluate_scalar(e, u, v, c);
            } catch (const DomainError&) {
                CHECK_THROWS_AS(expr::evaluate_scalar(back, u, v, c), DomainError);
                continue;
            }
            b = expr::evaluate_scalar(back, u, v, c);
            CHECK(rel_error(a, b, 1e-300) <= 1e-12);
        }
    }
}

TEST_CASE("integer polynomials have exact jets", "[property][expr]") {
    Rng rng(1003);
    for (int i = 0; i < 200; ++i) {
        const int a = static_cast<int>(uniform(rng, -5, 5)), b = static_cast<int>(uniform(rng, -5, 5));
        const int u = static_cast<int>(uniform(rng, -6, 6)), v = static_cast<int>(uniform(rng, -6, 6));
        // p = a u^3 v + b v^2 + u v
        const auto p = expr::parse_expression(std::to_string(a) + "*u^3*v + " + std::to_string(b) + "*v^2 + u*v");
        const auto j = expr::evaluate_jet(p, u, v, {});
        CHECK(j.val == double(a) * u * u * u * v + double(b) * v * v + u * v);
        CHECK(j.du == 3.0 * a * u * u * v + v);
        CHECK(j.dv == double(a) * u * u * u + 2.0 * b * v + u);
        CHECK(j.duu == 6.0 * a * u * v);
        CHECK(j.duv == 3.0 * a * u * u + 1);
        CHECK(j.dvv == 2.0 * b);
    }
}

// --- geometry -----------------------------------------------------------------

TEST_CASE("normal frames are orthonormal and positively oriented", "[property][geometry]") {
    Rng rng(2001);
    MaxError err;
    for (int i = 0; i < 300; ++i) {
        const auto def = sampling::random_analytic_surface(rng);
        const double u = uniform(rng, -1, 1), v = uniform(rng, -1, 1);
        const auto j = surface_jet(def, u, v);
        const auto f = normal_frame(j);
        const std::string w = at(u, v);
        err.observe(std::abs(f.e1.norm() - 1), w);
        err.observe(std::abs(f.e2.norm() - 1), w);
        err.observe(std::abs(f.e1.dot(f.e2)), w);
        for (const Vec4* t : {&j.zu, &j.zv}) {
            err.observe(std::abs(f.e1.dot(*t)), w);
            err.observe(std::abs(f.e2.dot(*t)), w);
        }
        Eigen::Matrix4d m;
        m << j.zu, j.zv, f.e1, f.e2;
        CHECK(m.determinant() > 0);
    }
    INFO(err.where);
    CHECK(err.value < 1e-10);
}

TEST_CASE("Weingarten map reproduces k, kappa and II", "[property][geometry]") {
    Rng rng(2002);
    MaxError inv_err, form_err, nu_err;
    for (int i = 0; i < 1000; ++i) {
        const auto def = sampling::random_analytic_surface(rng);
        const double u = uniform(rng, -1, 1), v = uniform(rng, -1, 1);
        const auto b = analyze_point(surface_jet(def, u, v));
        const std::string w = at(u, v);
        inv_err.observe(std::abs(b.gamma.determinant() - b.inv.k), w);
        inv_err.observe(std::abs(-b.gamma.trace() / 2 - b.inv.kappa), w);
        nu_err.observe(std::abs(b.inv.nu1 * b.inv.nu2 - b.inv.k), w);
        nu_err.observe(std::abs((b.inv.nu1 + b.inv.nu2) / 2 - b.inv.kappa), w);
        if (i % 10 == 0) {
            for (int x = 0; x < 100; ++x) {
                const TangentDirection d(uniform(rng, -1, 1), uniform(rng, -1, 1));
                const double ii = second_form_bilinear(b.second, d, d);
                form_err.observe(rel_error(-gamma_form(b.first, b.gamma, d), ii, 1e-300), w);
            }
        }
    }
    INFO(inv_err.where << " / " << form_err.where << " / " << nu_err.where);
    CHECK(inv_err.value < 1e-9);
    CHECK(nu_err.value < 1e-9);
    CHECK(form_err.value < 1e-9);
}

TEST_CASE("asymptotic and principal direction laws", "[property][geometry]") {
    Rng rng(2003);
    const Tolerances tol;
    MaxError asym_nu, prin_alpha, prin_orth, prin_nu;
    int counts[3] = {0, 0, 0};
    for (int i = 0; i < 1000; ++i) {
        const auto def = sampling::random_analytic_surface(rng);
        const double u = uniform(rng, -1, 1), v = uniform(rng, -1, 1);
        const auto b = analyze_point(surface_jet(def, u, v));
        const std::string w = at(u, v);
        const auto& inv = b.inv;
        if (inv.point_class == PointClass::Flat) continue;
        const std::size_t want = inv.k > tol.cls ? 0 : inv.k < -tol.cls ? 2 : 1;
        REQUIRE_FALSE(inv.asymptotic.all);
        CHECK(inv.asymptotic.size() == want);
        ++counts[want];
        for (const auto& d : inv.asymptotic.directions) asym_nu.observe(std::abs(normal_curvature(b.first, b.second, d)), w);
        if (inv.principal.all) continue;
        for (const auto& d : inv.principal.directions) {
            prin_alpha.observe(std::abs(geodesic_torsion(b.first, b.second, d)), w);
            const double nu = normal_curvature(b.first, b.second, d);
            prin_nu.observe(std::min(std::abs(nu - inv.nu1), std::abs(nu - inv.nu2)), w);
        }
        if (inv.principal.size() == 2) {
            prin_orth.observe(std::abs(cos_angle(b.first, inv.principal.directions[0], inv.principal.directions[1])), w);
        }
    }
    INFO(asym_nu.where << " / " << prin_alpha.where << " / " << prin_orth.where << " / " << prin_nu.where);
    CHECK(counts[0] > 50);
    CHECK(counts[2] > 50);
    CHECK(asym_nu.value < 1e-8);
    CHECK(prin_alpha.value < 1e-8);
    CHECK(prin_orth.value < 1e-8);
    CHECK(prin_nu.value < 1e-8);
}

TEST_CASE("second form transforms by the parameter change with the frame fixed", "[property][geometry]") {
    // With the normal frame held fixed, II in the new parameters is
    // sign(J) A^T II A, so k is invariant and kappa picks up sign(J).
    Rng rng(2004);
    MaxError err;
    for (int i = 0; i < 100; ++i) {
        const auto def = sampling::random_analytic_surface(rng);
        const Eigen::Matrix2d A = sampling::random_affine2(rng);
        const double eps = A.determinant() > 0 ? 1.0 : -1.0;
        const Vec2 p(uniform(rng, -0.8, 0.8), uniform(rng, -0.8, 0.8));
        const Vec2 q(uniform(rng, -1, 1), uniform(rng, -1, 1));
        const auto re = affine_reparametrize(def, A, p - A * q, {q.x() - 1, q.x() + 1, q.y() - 1, q.y() + 1});
        const auto orig = analyze_point(surface_jet(def, p.x(), p.y()));
        const auto jet = surface_jet(re, q.x(), q.y());
        const auto ff = first_form(jet);
        const auto s = second_form_coeffs(jet, orig.frame, ff);

        Eigen::Matrix2d II;
        II << orig.second.L, orig.second.M, orig.second.M, orig.second.N;
        const Eigen::Matrix2d want = eps * A.transpose() * II * A;
        const std::string w = at(p.x(), p.y());
        err.observe(rel_error(s.L, want(0, 0), 1e-2), w);
        err.observe(rel_error(s.M, want(0, 1), 1e-2), w);
        err.observe(rel_error(s.N, want(1, 1), 1e-2), w);
        const auto inv = invariants(ff, s);
        err.observe(rel_error(inv.k, orig.inv.k, 1e-2), w);
        err.observe(rel_error(inv.kappa, eps * orig.inv.kappa, 1e-2), w);
        const TangentDirection d1(uniform(rng, -1, 1), uniform(rng, -1, 1));
        const TangentDirection d2(uniform(rng, -1, 1), uniform(rng, -1, 1));
        const Vec2 a1 = A * Vec2(d1.lambda(), d1.mu()), a2 = A * Vec2(d2.lambda(), d2.mu());
        err.observe(rel_error(zeta(ff, s, d1, d2), eps * zeta(orig.first, orig.second, {a1.x(), a1.y()}, {a2.x(), a2.y()}),
                              1e-2),
                    w);
    }
    INFO(err.where);
    CHECK(err.value < 1e-8);
}

TEST_CASE("normal frame rotation and reflection", "[property][geometry]") {
    Rng rng(2005);
    MaxError rot, flip;
    for (int i = 0; i < 100; ++i) {
        const auto def = sampling::random_analytic_surface(rng);
        const double u = uniform(rng, -1, 1), v = uniform(rng, -1, 1);
        const double th = uniform(rng, 0, 2 * M_PI);
        const auto j = surface_jet(def, u, v);
        const auto ff = first_form(j);
        const auto f = normal_frame(j);
        const auto s0 = second_form_coeffs(j, f, ff);
        const auto s1 = second_form_coeffs(
            j, {std::cos(th) * f.e1 + std::sin(th) * f.e2, -std::sin(th) * f.e1 + std::cos(th) * f.e2}, ff);
        const auto s2 = second_form_coeffs(j, {f.e1, -f.e2}, ff);
        const std::string w = at(u, v);
        rot.observe(std::max({std::abs(s0.L - s1.L), std::abs(s0.M - s1.M), std::abs(s0.N - s1.N)}), w);
        flip.observe(std::max({std::abs(s0.L + s2.L), std::abs(s0.M + s2.M), std::abs(s0.N + s2.N)}), w);
    }
    INFO(rot.where);
    CHECK(rot.value < 1e-10);
    CHECK(flip.value < 1e-10);
}

TEST_CASE("rigid motions leave every invariant unchanged", "[property][geometry]") {
    Rng rng(2006);
    MaxError err;
    for (int i = 0; i < 20; ++i) {
        const auto def = sampling::random_analytic_surface(rng);
        const Eigen::Matrix4d R = sampling::random_rotation4(rng);
        REQUIRE((R.transpose() * R - Eigen::Matrix4d::Identity()).norm() < 1e-12);
        REQUIRE(R.determinant() > 0);
        const Vec4 t(uniform(rng, -3, 3), uniform(rng, -3, 3), uniform(rng, -3, 3), uniform(rng, -3, 3));
        const auto moved = rigid_transform(def, R, t);
        const double u = uniform(rng, -1, 1), v = uniform(rng, -1, 1);
        const auto a = fields(analyze_point(surface_jet(def, u, v)));
        const auto b = fields(analyze_point(surface_jet(moved, u, v)));
        for (int k = 0; k < 9; ++k) err.observe(rel_error(b[k], a[k], 1e-2), at(u, v));
    }
    INFO(err.where);
    CHECK(err.value < 1e-8);
}

TEST_CASE("rotational pipeline matches the closed forms", "[property][geometry]") {
    Rng rng(2007);
    MaxError err, fm;
    for (int i = 0; i < 200; ++i) {
        const auto params = sampling::random_rotational(rng);
        const auto def = make_rotational(params);
        const double u = uniform(rng, params.u_min, params.u_max), v = uniform(rng, 0, 2 * M_PI);
        const auto b = analyze_point(surface_jet(def, u, v));
        const auto c = rotational_closed_form(params, u);
        const std::array<double, 9> want{c.E, c.F, c.G, c.L, c.M, c.N, c.k, c.kappa, c.K};
        const auto got = fields(b);
        for (int k = 0; k < 9; ++k) err.observe(rel_error(got[k], want[k], 1e-2), at(u, v));
        fm.observe(std::max(std::abs(b.first.F), std::abs(b.second.M)), at(u, v));
    }
    INFO(err.where);
    CHECK(err.value < 1e-7);
    CHECK(fm.value < 1e-9);
}

TEST_CASE("Gauss curvature agrees with the intrinsic Brioschi formula", "[property][geometry]") {
    Rng rng(2008);
    MaxError err;
    for (int i = 0; i < 100; ++i) {
        const auto def = sampling::random_analytic_surface(rng);
        const double u = uniform(rng, -0.9, 0.9), v = uniform(rng, -0.9, 0.9);
        const auto j = surface_jet(def, u, v);
        const double K = gauss_curvature(j, first_form(j));
        err.observe(rel_error(brioschi(def, u, v, 1e-3), K, 1e-2), at(u, v));
    }
    INFO(err.where);
    CHECK(err.value < 1e-4);
}

// --- curves ------------------------------------------------------------------

TEST_CASE("RK4 converges at fourth order on a warped torus", "[property][curves]") {
    // The Clifford torus in the chart u -> u + 0.3 u^2. Principal lines satisfy
    // phi(u) - v = const with phi(u) = u + 0.3 u^2.
    const auto def = SurfaceDefinition::from_text(
        "warped", {"cos(u + 0.3*u^2)", "sin(u + 0.3*u^2)", "cos(v)", "sin(v)"}, {}, {0, 3, 0, 2 * M_PI});
    const LineField field{LineField::Kind::Principal, LineField::Branch::First};
    auto phi = [](double u) { return u + 0.3 * u * u; };
    auto endpoint_error = [&](double h) {
        const int n = static_cast<int>(std::lround(2.0 / h));
        const auto tr = integrate_line(def, field, 0.5, 0.5, h, n);
        REQUIRE(tr.status == CurveTrace::Status::Completed);
        const auto& e = tr.params.back();
        return std::abs((phi(e.u) - phi(0.5)) - (e.v - 0.5));
    };
    const double e1 = endpoint_error(0.2), e2 = endpoint_error(0.1), e3 = endpoint_error(0.05);
    INFO(e1 << " " << e2 << " " << e3);
    CHECK(e1 / e2 >= 8);
    CHECK(e2 / e3 >= 8);

    // The unwarped torus has a constant field, which RK4 integrates exactly.
    const auto flat = integrate_line(builtin_clifford(), field, 0.5, 0.5, 0.2, 10);
    CHECK(std::abs((flat.params.back().u - 0.5) - (flat.params.back().v - 0.5)) < 1e-13);
}

TEST_CASE("every accepted step follows its field", "[property][curves]") {
    Rng rng(3001);
    const Tolerances tol;
    MaxError asym, prin;
    int points = 0;
    for (int i = 0; i < 40; ++i) {
        const auto def = sampling::random_analytic_surface(rng);
        const double u = uniform(rng, -0.5, 0.5), v = uniform(rng, -0.5, 0.5);
        if (analyze_point(surface_jet(def, u, v)).inv.k > -1e-3) continue;
        for (const auto kind : {LineField::Kind::Asymptotic, LineField::Kind::Principal}) {
            const LineField field{kind, LineField::Branch::First};
            const auto tr = integrate_line(def, field, u, v, 1e-2, 40, tol);
            std::optional<TangentDirection> prev;
            for (const auto& p : tr.params) {
                const auto d = direction_at(def, field, p.u, p.v, prev, tol);
                prev = d;
                const auto b = analyze_point(surface_jet(def, p.u, p.v));
                ++points;
                if (kind == LineField::Kind::Asymptotic) {
                    asym.observe(std::abs(normal_curvature(b.first, b.second, d)), at(p.u, p.v));
                } else {
                    prin.observe(std::abs(geodesic_torsion(b.first, b.second, d)), at(p.u, p.v));
                }
            }
        }
    }
    INFO(asym.where << " / " << prin.where);
    CHECK(points > 500);
    CHECK(asym.value < 1e-6);
    CHECK(prin.value < 1e-6);
}

TEST_CASE("traced curves are tangent to their field where it is well conditioned", "[property][curves]") {
    // Near parabolic points (asymptotic) and umbilics (principal) the field
    // turns without bound, so the discrete curve is only checked where
    // -k or nu1 - nu2 is at least 0.3.
    Rng rng(3001);
    const Tolerances tol;
    MaxError asym, prin;
    int checked = 0;
    for (int i = 0; i < 40; ++i) {
        const auto def = sampling::random_analytic_surface(rng);
        const double u = uniform(rng, -0.5, 0.5), v = uniform(rng, -0.5, 0.5);
        if (analyze_point(surface_jet(def, u, v)).inv.k > -1e-3) continue;
        for (const auto kind : {LineField::Kind::Asymptotic, LineField::Kind::Principal}) {
            const auto tr = integrate_line(def, {kind, LineField::Branch::First}, u, v, 2e-3, 200, tol);
            for (std::size_t k = 2; k + 2 < tr.params.size(); ++k) {
                const auto& p = tr.params[k];
                const auto b = analyze_point(surface_jet(def, p.u, p.v));
                const auto d = stencil_tangent(tr, k);
                if (kind == LineField::Kind::Asymptotic) {
                    if (-b.inv.k < 0.3) continue;
                    asym.observe(std::abs(normal_curvature(b.first, b.second, d)), at(p.u, p.v));
                } else {
                    if (b.inv.nu1 - b.inv.nu2 < 0.3) continue;
                    prin.observe(std::abs(geodesic_torsion(b.first, b.second, d)), at(p.u, p.v));
                }
                ++checked;
            }
        }
    }
    INFO(asym.where << " / " << prin.where);
    CHECK(checked > 1000);
    CHECK(asym.value < 1e-6);
    CHECK(prin.value < 1e-6);
}

TEST_CASE("Frenet curvatures of random helices", "[property][curves]") {
    Rng rng(3002);
    MaxError err;
    for (int i = 0; i < 20; ++i) {
        const double a = uniform(rng, 0.5, 2), b = uniform(rng, 0.5, 2);
        const double alpha = uniform(rng, 0.5, 3);
        double beta = uniform(rng, 0.5, 3);
        if (std::abs(alpha - beta) < 0.3) beta = alpha + 0.3;
        const auto fs = frenet_curvatures(helix_points(a, b, alpha, beta, 1e-2, 60), 1e-2);
        const auto want = helix_frenet_arc_length(a, b, alpha, beta);
        for (const auto& s : fs.samples) {
            REQUIRE(s.kappa2);
            REQUIRE(s.kappa3);
            const std::string w = std::to_string(i);
            err.observe(rel_error(s.kappa1, want.kappa1, 1e-2), w);
            err.observe(rel_error(std::abs(*s.kappa2), std::abs(want.kappa2), 1e-2), w);
            err.observe(rel_error(*s.kappa3, want.kappa3, 1e-2), w);
        }
    }
    INFO(err.where);
    CHECK(err.value < 1e-3);
}

TEST_CASE("Frenet curvatures are invariant under rigid motion", "[property][curves]") {
    Rng rng(3003);
    sampling::Rng srng(3004);
    MaxError err;
    for (int i = 0; i < 20; ++i) {
        const double a = uniform(rng, 0.5, 2), b = uniform(rng, 0.5, 2);
        const double alpha = uniform(rng, 0.5, 3), beta = alpha + uniform(rng, 0.3, 1.5);
        const auto pts = helix_points(a, b, alpha, beta, 0.05, 30);
        const Eigen::Matrix4d R = sampling::random_rotation4(srng);
        const Vec4 t(uniform(rng, -3, 3), uniform(rng, -3, 3), uniform(rng, -3, 3), uniform(rng, -3, 3));
        std::vector<Vec4> moved;
        for (const auto& p : pts) moved.push_back(R * p + t);
        const auto f0 = frenet_curvatures(pts, 0.05);
        const auto f1 = frenet_curvatures(moved, 0.05);
        REQUIRE(f0.samples.size() == f1.samples.size());
        for (std::size_t k = 0; k < f0.samples.size(); ++k) {
            const auto& s0 = f0.samples[k];
            const auto& s1 = f1.samples[k];
            const std::string w = std::to_string(i);
            err.observe(std::abs(s0.kappa1 - s1.kappa1), w);
            err.observe(std::abs(s0.kappa2.value_or(0) - s1.kappa2.value_or(0)), w);
            err.observe(std::abs(s0.kappa3.value_or(0) - s1.kappa3.value_or(0)), w);
        }
    }
    INFO(err.where);
    CHECK(err.value < 1e-8);
}
