#pragma once

#include <cstdint>
#include <random>

#include <Eigen/Core>

#include "surf4/surfaces.hpp"

namespace surf4::sampling {

using Rng = std::mt19937_64;

double uniform(Rng& rng, double lo, double hi);

/// Text of sum_{i<=degree} c_i u^i with c_i uniform in [-1, 1].
std::string random_polynomial(Rng& rng, int degree);

/// Random f, g (degree <= 4 polynomials), alpha, beta in [0.5, 3] on u in [0.5, 2],
/// redrawn until E = f'^2 + g'^2 and G = alpha^2 f^2 + beta^2 g^2 stay above
/// 1e-2 on the sampled range.
RotationalParams random_rotational(Rng& rng);

/// A graph-like analytic surface (u + e h1, v + e h2, p, q) on [-1, 1]^2 with
/// random polynomial and trigonometric terms. Regular everywhere for e <= 0.1.
SurfaceDefinition random_analytic_surface(Rng& rng);

/// Haar-ish random element of SO(n) from the QR factorisation of a Gaussian matrix.
Eigen::Matrix4d random_rotation4(Rng& rng);

/// Invertible 2x2 matrix with |det| >= 0.2 and entries in [-2, 2]; either sign of det.
Eigen::Matrix2d random_affine2(Rng& rng);

}  // namespace surf4::sampling
