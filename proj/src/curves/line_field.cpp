#include <algorithm>
#include <cmath>
#include <sstream>

#include "surf4/curves.hpp"
#include "surf4/error.hpp"

namespace surf4 {

std::string_view to_string(LineField::Kind kind) {
    return kind == LineField::Kind::Asymptotic ? "asymptotic" : "principal";
}

std::string_view to_string(CurveTrace::Status status) {
    switch (status) {
        case CurveTrace::Status::Completed: return "Completed";
        case CurveTrace::Status::HitBoundary: return "HitBoundary";
        case CurveTrace::Status::DegenerateField: return "DegenerateField";
        case CurveTrace::Status::StepFailure: return "StepFailure";
    }
    return "?";
}

namespace {

std::string where(double u, double v) {
    std::ostringstream os;
    os << " at (" << u << ", " << v << ")";
    return os.str();
}

// Field direction together with the metric needed to normalise it.
struct FieldSample {
    TangentDirection dir;
    FirstForm first;
};

FieldSample sample_field(const SurfaceDefinition& def, const LineField& field, double u, double v,
                         const std::optional<TangentDirection>& prev, const Tolerances& tol) {
    const auto jet = surface_jet(def, u, v);
    const auto ff = first_form(jet, tol);
    const auto frame = normal_frame(jet, tol);
    const auto sfc = second_form_coeffs(jet, frame, ff);

    if (std::max({std::abs(sfc.L), std::abs(sfc.M), std::abs(sfc.N)}) < tol.flat) {
        throw DegenerateError("degenerate field: flat point" + where(u, v));
    }

    DirectionSet set;
    if (field.kind == LineField::Kind::Asymptotic) {
        const auto [k, kappa] = invariants(ff, sfc);
        if (k > tol.cls) throw NoRealDirection("no real asymptotic direction: elliptic point" + where(u, v));
        set = asymptotic_directions(sfc, tol);
        if (!set.all && set.directions.empty()) {
            throw NoRealDirection("no real asymptotic direction" + where(u, v));
        }
    } else {
        set = principal_directions(ff, sfc, tol);
    }
    if (set.all) throw DegenerateError("degenerate field: every tangent qualifies" + where(u, v));

    const auto& dirs = set.directions;
    if (!prev) {
        const std::size_t idx = field.branch == LineField::Branch::Second && dirs.size() > 1 ? 1 : 0;
        return {dirs[idx], ff};
    }

    const double prev_len = std::sqrt(ff.quadratic(*prev));
    std::optional<TangentDirection> best;
    double best_cos = -1.0;
    for (const auto& d : dirs) {
        const double c = std::abs(ff.inner(d, *prev)) / (std::sqrt(ff.quadratic(d)) * prev_len);
        if (c > best_cos) {
            best_cos = c;
            best = d;
        }
    }
    TangentDirection out = *best;
    if (ff.inner(out, *prev) < 0.0) out = out.flipped();
    return {out, ff};
}

}  // namespace

TangentDirection direction_at(const SurfaceDefinition& def, const LineField& field, double u, double v,
                              const std::optional<TangentDirection>& prev, const Tolerances& tol) {
    return sample_field(def, field, u, v, prev, tol).dir;
}

CurveTrace integrate_line(const SurfaceDefinition& def, const LineField& field, double u0, double v0,
                          double arc_step, int max_steps, const Tolerances& tol) {
    if (!(arc_step > 0.0) || !std::isfinite(arc_step)) throw InputError("trace step must be positive");
    if (max_steps < 0) throw InputError("trace step count must be non-negative");
    if (!def.domain().contains(u0, v0)) throw InputError("trace seed" + where(u0, v0) + " is outside the domain");

    // Unit-speed velocity in (u, v) coordinates, aligned with `prev`.
    auto velocity = [&](const Vec2& p, const std::optional<TangentDirection>& prev) {
        const auto s = sample_field(def, field, p.x(), p.y(), prev, tol);
        const double len = std::sqrt(s.first.quadratic(s.dir));
        return std::pair{Vec2(s.dir.lambda() / len, s.dir.mu() / len), s.dir};
    };

    CurveTrace trace;
    Vec2 p(u0, v0);
    // Seed failures propagate: the caller asked for a line through a point that has none.
    TangentDirection prev = velocity(p, std::nullopt).second;
    trace.params.push_back({0.0, u0, v0});
    trace.points.push_back(surface_point(def, u0, v0));

    const double h = arc_step;
    for (int step = 0; step < max_steps; ++step) {
        const auto& dom = def.domain();
        auto inside = [&dom](const Vec2& q) { return dom.contains(q.x(), q.y()); };
        try {
            const auto [k1, d1] = velocity(p, prev);
            const Vec2 p2 = p + 0.5 * h * k1;
            if (!inside(p2)) {
                trace.status = CurveTrace::Status::HitBoundary;
                break;
            }
            const auto [k2, d2] = velocity(p2, d1);
            const Vec2 p3 = p + 0.5 * h * k2;
            if (!inside(p3)) {
                trace.status = CurveTrace::Status::HitBoundary;
                break;
            }
            const auto [k3, d3] = velocity(p3, d2);
            const Vec2 p4 = p + h * k3;
            if (!inside(p4)) {
                trace.status = CurveTrace::Status::HitBoundary;
                break;
            }
            const auto [k4, d4] = velocity(p4, d3);
            const Vec2 next = p + h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
            if (!inside(next)) {
                trace.status = CurveTrace::Status::HitBoundary;
                break;
            }
            p = next;
            prev = d4;
        } catch (const DegenerateError& e) {
            trace.status = CurveTrace::Status::DegenerateField;
            trace.stop_reason = e.what();
            break;
        } catch (const NoRealDirection& e) {
            trace.status = CurveTrace::Status::DegenerateField;
            trace.stop_reason = e.what();
            break;
        } catch (const Error& e) {
            trace.status = CurveTrace::Status::StepFailure;
            trace.stop_reason = e.what();
            break;
        }
        trace.params.push_back({h * static_cast<double>(step + 1), p.x(), p.y()});
        trace.points.push_back(surface_point(def, p.x(), p.y()));
    }
    if (trace.status == CurveTrace::Status::HitBoundary) {
        trace.stop_reason = "next step leaves the domain" + where(p.x(), p.y());
    }
    return trace;
}

}  // namespace surf4
