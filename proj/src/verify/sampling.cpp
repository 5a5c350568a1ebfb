#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Dense>

#include "surf4/error.hpp"
#include "surf4/sampling.hpp"

namespace surf4::sampling {

namespace {

std::string num(double x) {
    std::ostringstream os;
    os.precision(17);
    os << x;
    return "(" + os.str() + ")";
}

}  // namespace

double uniform(Rng& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

std::string random_polynomial(Rng& rng, int degree) {
    std::string out = num(uniform(rng, -1.0, 1.0));
    for (int i = 1; i <= degree; ++i) out += " + " + num(uniform(rng, -1.0, 1.0)) + "*u^" + std::to_string(i);
    return out;
}

RotationalParams random_rotational(Rng& rng) {
    std::uniform_int_distribution<int> degree(1, 4);
    for (;;) {
        const auto f = random_polynomial(rng, degree(rng));
        const auto g = random_polynomial(rng, degree(rng));
        const double alpha = uniform(rng, 0.5, 3.0);
        const double beta = uniform(rng, 0.5, 3.0);
        try {
            auto p = RotationalParams::create(f, g, alpha, beta, {}, 0.5, 2.0);
            bool ok = true;
            for (int i = 0; i <= 64 && ok; ++i) {
                const double u = 0.5 + 1.5 * i / 64.0;
                const auto fj = expr::evaluate_jet(p.f, u, 0.0, p.constants);
                const auto gj = expr::evaluate_jet(p.g, u, 0.0, p.constants);
                ok = fj.du * fj.du + gj.du * gj.du > 1e-2 &&
                     alpha * alpha * fj.val * fj.val + beta * beta * gj.val * gj.val > 1e-2;
            }
            if (ok) return p;
        } catch (const Error&) {
        }
    }
}

SurfaceDefinition random_analytic_surface(Rng& rng) {
    auto c = [&rng](double r) { return num(uniform(rng, -r, r)); };
    const std::string h1 = "0.1*sin(" + c(1.5) + "*u + " + c(1.5) + "*v)";
    const std::string h2 = "0.1*cos(" + c(1.5) + "*u + " + c(1.5) + "*v)";
    auto scalar = [&]() {
        return c(1.0) + "*u^2 + " + c(1.0) + "*u*v + " + c(1.0) + "*v^2 + " + c(0.5) + "*u^3 + " + c(0.5) +
               "*v^3 + " + c(0.5) + "*sin(" + c(2.0) + "*u + " + c(2.0) + "*v) + " + c(0.3) + "*exp(" + c(1.0) +
               "*u*v)";
    };
    return SurfaceDefinition::from_text("random", {"u + " + h1, "v + " + h2, scalar(), scalar()}, {},
                                        {-1.0, 1.0, -1.0, 1.0});
}

Eigen::Matrix4d random_rotation4(Rng& rng) {
    std::normal_distribution<double> gauss;
    Eigen::Matrix4d a;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) a(i, j) = gauss(rng);
    Eigen::HouseholderQR<Eigen::Matrix4d> qr(a);
    Eigen::Matrix4d q = qr.householderQ();
    if (q.determinant() < 0.0) q.col(0) = -q.col(0);
    return q;
}

Eigen::Matrix2d random_affine2(Rng& rng) {
    for (;;) {
        Eigen::Matrix2d a;
        a << uniform(rng, -2.0, 2.0), uniform(rng, -2.0, 2.0), uniform(rng, -2.0, 2.0), uniform(rng, -2.0, 2.0);
        if (std::abs(a.determinant()) >= 0.2) return a;
    }
}

}  // namespace surf4::sampling
