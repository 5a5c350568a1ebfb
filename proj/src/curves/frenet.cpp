#include <algorithm>
#include <array>
#include <cmath>

#include <Eigen/Dense>

#include "surf4/curves.hpp"
#include "surf4/error.hpp"

namespace surf4 {

namespace {

// Central differences with spacing s = k * step, using points i +- k, i +- 2k.
std::array<Vec4, 4> central(const std::vector<Vec4>& c, std::size_t i, std::size_t k, double s) {
    const Vec4& m2 = c[i - 2 * k];
    const Vec4& m1 = c[i - k];
    const Vec4& p0 = c[i];
    const Vec4& p1 = c[i + k];
    const Vec4& p2 = c[i + 2 * k];
    return {(p1 - m1) / (2.0 * s), (p1 - 2.0 * p0 + m1) / (s * s),
            (p2 - 2.0 * p1 + 2.0 * m1 - m2) / (2.0 * s * s * s),
            (p2 - 4.0 * p1 + 6.0 * p0 - 4.0 * m1 + m2) / (s * s * s * s)};
}

// All four stencils are second order, so (4 D_h - D_2h) / 3 is fourth order.
std::array<Vec4, 4> derivatives(const std::vector<Vec4>& c, std::size_t i, double step) {
    const auto fine = central(c, i, 1, step);
    const auto coarse = central(c, i, 2, 2.0 * step);
    std::array<Vec4, 4> d;
    for (int j = 0; j < 4; ++j) d[j] = (4.0 * fine[j] - coarse[j]) / 3.0;
    return d;
}

CurvatureStats stats(const std::vector<double>& xs) {
    CurvatureStats s;
    s.count = xs.size();
    if (xs.empty()) return s;
    double sum = 0.0;
    for (double x : xs) sum += x;
    s.mean = sum / static_cast<double>(xs.size());
    for (double x : xs) s.max_deviation = std::max(s.max_deviation, std::abs(x - s.mean));
    return s;
}

}  // namespace

FrenetSamples frenet_curvatures(const std::vector<Vec4>& points, double step, const FrenetOptions& opts) {
    if (points.size() < 9) throw InputError("Frenet curvatures need at least 9 points");
    if (!(step > 0.0) || !std::isfinite(step)) throw InputError("Frenet sample step must be positive");

    FrenetSamples out;
    std::vector<double> k1s, k2s, k3s;
    for (std::size_t i = 4; i + 4 < points.size(); ++i) {
        const auto d = derivatives(points, i, step);
        const double speed = d[0].norm();
        if (!(speed > opts.degenerate_abs)) {
            throw DegenerateError("degenerate frame: c' vanishes at sample " + std::to_string(i));
        }

        // Gram-Schmidt residuals v1..v4 of c', c'', c''', c''''.
        std::array<Vec4, 4> v;
        std::array<Vec4, 4> unit;
        v[0] = d[0];
        unit[0] = d[0] / speed;
        int rank = 1;
        for (int j = 1; j < 4; ++j) {
            Vec4 r = d[j];
            for (int m = 0; m < j; ++m) r -= r.dot(unit[m]) * unit[m];
            v[j] = r;
            const double threshold = opts.degenerate_rel * d[j].norm() + opts.degenerate_abs * std::pow(speed, j + 1);
            if (r.norm() <= threshold) break;
            unit[j] = r / r.norm();
            rank = j + 1;
        }

        FrenetSample s;
        s.index = i;
        s.t = step * static_cast<double>(i);
        s.speed = speed;
        s.kappa1 = rank >= 2 ? v[1].norm() / (speed * speed) : 0.0;
        if (rank == 2) s.kappa2 = 0.0;
        if (rank >= 3) {
            double k2 = v[2].norm() / (speed * v[1].norm());
            if (rank == 4) {
                // Orientation is only meaningful when the frame spans R^4.
                Eigen::Matrix4d m;
                m << d[0], d[1], d[2], d[3];
                if (m.determinant() < 0.0) k2 = -k2;
            }
            s.kappa2 = k2;
            s.kappa3 = rank == 4 ? v[3].norm() / (speed * v[2].norm()) : 0.0;
        }
        k1s.push_back(s.kappa1);
        if (s.kappa2) k2s.push_back(*s.kappa2);
        if (s.kappa3) k3s.push_back(*s.kappa3);
        out.samples.push_back(s);
    }
    out.kappa1 = stats(k1s);
    out.kappa2 = stats(k2s);
    out.kappa3 = stats(k3s);
    return out;
}

bool is_constant_curvature(const FrenetSamples& samples, double tol) {
    const std::size_t n = samples.samples.size();
    if (n < 5) throw InsufficientSamples("constant-curvature test needs at least 5 samples, got " + std::to_string(n));
    for (const auto* st : {&samples.kappa1, &samples.kappa2, &samples.kappa3}) {
        if (st->count == 0) continue;
        if (st->count != n) return false;
        if (!(st->max_deviation < tol * (1.0 + std::abs(st->mean)))) return false;
    }
    return true;
}

}  // namespace surf4
