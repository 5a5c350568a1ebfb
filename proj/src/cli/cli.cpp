#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "surf4/cli.hpp"
#include "surf4/curves.hpp"
#include "surf4/error.hpp"
#include "surf4/surfaces.hpp"
#include "surf4/verify.hpp"

extern char** environ;

namespace surf4::cli {

using nlohmann::ordered_json;

std::string format_double(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    if (x == 0.0) return "0";  // also folds -0
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return {buf, res.ptr};
}

void apply_env_tolerances(Tolerances& tol, const std::map<std::string, std::string>& env) {
    constexpr std::string_view kPrefix = "SURF4_TOL_";
    for (const auto& [key, s] : env) {
        if (key.rfind(kPrefix, 0) != 0) continue;
        std::string name;
        for (char c : key.substr(kPrefix.size())) name += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        double value = 0.0;
        const auto res = std::from_chars(s.data(), s.data() + s.size(), value);
        if (s.empty() || res.ec != std::errc() || res.ptr != s.data() + s.size()) {
            throw InputError(key + " is not a number: '" + s + "'");
        }
        tol.set(name, value);
    }
}

namespace {

double parse_double(const std::string& s, const std::string& what) {
    double value = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || res.ec != std::errc() || res.ptr != s.data() + s.size() || !std::isfinite(value)) {
        throw InputError(what + " is not a number: '" + s + "'");
    }
    return value;
}

std::pair<double, double> parse_pair(const std::string& s, const std::string& what) {
    const auto comma = s.find(',');
    if (comma == std::string::npos) throw InputError(what + " must look like U,V");
    return {parse_double(s.substr(0, comma), what), parse_double(s.substr(comma + 1), what)};
}

std::pair<int, int> parse_grid(const std::string& s) {
    const auto x = s.find('x');
    if (x == std::string::npos) throw InputError("--grid must look like NUxNV");
    auto count = [](const std::string& t) {
        int n = 0;
        const auto res = std::from_chars(t.data(), t.data() + t.size(), n);
        if (t.empty() || res.ec != std::errc() || res.ptr != t.data() + t.size() || n < 2) {
            throw InputError("--grid counts must be integers >= 2");
        }
        return n;
    };
    return {count(s.substr(0, x)), count(s.substr(x + 1))};
}

void apply_tol_flags(Tolerances& tol, const std::vector<std::string>& flags) {
    for (const auto& f : flags) {
        const auto eq = f.find('=');
        if (eq == std::string::npos) throw InputError("--tol expects NAME=VALUE, got '" + f + "'");
        tol.set(f.substr(0, eq), parse_double(f.substr(eq + 1), "--tol " + f.substr(0, eq)));
    }
}

std::string where(double u, double v) {
    return "(u=" + format_double(u) + ", v=" + format_double(v) + ")";
}

ordered_json direction_json(const FormBundle& b, const TangentDirection& d) {
    return ordered_json{{"lambda", d.lambda()},
                        {"mu", d.mu()},
                        {"nu", normal_curvature(b.first, b.second, d)},
                        {"alpha", geodesic_torsion(b.first, b.second, d)}};
}

ordered_json direction_set_json(const FormBundle& b, const DirectionSet& set) {
    if (set.all) return "all";
    ordered_json arr = ordered_json::array();
    for (const auto& d : set.directions) arr.push_back(direction_json(b, d));
    return arr;
}

// --- subcommands -------------------------------------------------------------

struct Common {
    std::string surface;
    std::string out_path;
    std::string format = "csv";
    std::vector<std::string> tol_flags;
};

int cmd_analyze(const Common& c, const std::string& grid_text, const Tolerances& tol, std::ostream& out,
                std::ostream& err) {
    const auto [nu, nv] = parse_grid(grid_text);
    const auto src = load_surface(c.surface);
    const auto& dom = src.surface.domain();

    std::ostringstream csv;
    ordered_json rows = ordered_json::array();
    if (c.format == "csv") csv << "u,v,E,F,G,L,M,N,k,kappa,K,class,nu1,nu2\n";
    for (int i = 0; i < nu; ++i) {
        const double u = i == nu - 1 ? dom.u_max : dom.u_min + (dom.u_max - dom.u_min) * i / (nu - 1);
        for (int j = 0; j < nv; ++j) {
            const double v = j == nv - 1 ? dom.v_max : dom.v_min + (dom.v_max - dom.v_min) * j / (nv - 1);
            FormBundle b;
            try {
                b = analyze_point(surface_jet(src.surface, u, v), tol);
            } catch (const Error& e) {
                err << "error: grid point [" << i << "," << j << "] " << where(u, v) << ": " << e.what() << "\n";
                return e.kind() == ErrorKind::Input ? kInputError : kNumericError;
            }
            const std::array<double, 9> vals{b.first.E,  b.first.F,  b.first.G, b.second.L, b.second.M,
                                             b.second.N, b.inv.k,    b.inv.kappa, b.inv.K_gauss};
            if (c.format == "csv") {
                csv << format_double(u) << ',' << format_double(v);
                for (double x : vals) csv << ',' << format_double(x);
                csv << ',' << to_string(b.inv.point_class) << ',' << format_double(b.inv.nu1) << ','
                    << format_double(b.inv.nu2) << '\n';
            } else {
                rows.push_back(ordered_json{{"u", u},          {"v", v},
                                            {"E", vals[0]},    {"F", vals[1]},
                                            {"G", vals[2]},    {"L", vals[3]},
                                            {"M", vals[4]},    {"N", vals[5]},
                                            {"k", vals[6]},    {"kappa", vals[7]},
                                            {"K", vals[8]},    {"class", std::string(to_string(b.inv.point_class))},
                                            {"nu1", b.inv.nu1}, {"nu2", b.inv.nu2}});
            }
        }
    }
    if (c.format == "csv") {
        out << csv.str();
    } else {
        ordered_json doc{{"surface", src.surface.name()}, {"grid", {nu, nv}}, {"rows", rows}};
        out << doc.dump(2) << '\n';
    }
    return kOk;
}

int cmd_directions(const Common& c, const std::string& at, const Tolerances& tol, std::ostream& out,
                   std::ostream& err) {
    const auto [u, v] = parse_pair(at, "--at");
    const auto src = load_surface(c.surface);
    const auto b = analyze_point(surface_jet(src.surface, u, v), tol);
    if (b.inv.point_class == PointClass::Flat) {
        err << "error: flat point: all tangents at " << where(u, v) << "\n";
        return kNumericError;
    }
    ordered_json doc{{"surface", src.surface.name()},
                     {"u", u},
                     {"v", v},
                     {"class", std::string(to_string(b.inv.point_class))},
                     {"k", b.inv.k},
                     {"kappa", b.inv.kappa},
                     {"asymptotic", direction_set_json(b, b.inv.asymptotic)},
                     {"principal", direction_set_json(b, b.inv.principal)}};
    out << doc.dump(2) << '\n';
    return kOk;
}

struct TraceArgs {
    std::string at;
    std::string field = "asymptotic";
    int branch = 1;
    double step = 1e-2;
    int steps = 500;
    bool frenet = false;
};

int cmd_trace(const Common& c, const TraceArgs& a, const Tolerances& tol, std::ostream& out) {
    const auto [u0, v0] = parse_pair(a.at, "--at");
    LineField field;
    if (a.field == "asymptotic") field.kind = LineField::Kind::Asymptotic;
    else if (a.field == "principal") field.kind = LineField::Kind::Principal;
    else throw InputError("--field must be asymptotic or principal");
    if (a.branch != 1 && a.branch != 2) throw InputError("--branch must be 1 or 2");
    field.branch = a.branch == 1 ? LineField::Branch::First : LineField::Branch::Second;
    if (a.frenet && c.format == "csv") throw InputError("--frenet output needs --format json");

    const auto src = load_surface(c.surface);
    const auto trace = integrate_line(src.surface, field, u0, v0, a.step, a.steps, tol);

    if (c.format == "csv") {
        out << "t,u,v,x,y,z,w\n";
        for (std::size_t i = 0; i < trace.points.size(); ++i) {
            const auto& p = trace.params[i];
            const auto& x = trace.points[i];
            out << format_double(p.t) << ',' << format_double(p.u) << ',' << format_double(p.v);
            for (int k = 0; k < 4; ++k) out << ',' << format_double(x[k]);
            out << '\n';
        }
        return kOk;
    }

    ordered_json pts = ordered_json::array();
    for (std::size_t i = 0; i < trace.points.size(); ++i) {
        const auto& p = trace.params[i];
        const auto& x = trace.points[i];
        pts.push_back(ordered_json{{"t", p.t}, {"u", p.u}, {"v", p.v}, {"point", {x[0], x[1], x[2], x[3]}}});
    }
    ordered_json doc{{"surface", src.surface.name()},
                     {"field", std::string(to_string(field.kind))},
                     {"branch", a.branch},
                     {"step", a.step},
                     {"status", std::string(to_string(trace.status))},
                     {"stop_reason", trace.stop_reason},
                     {"points", pts}};
    if (a.frenet) {
        const auto fs = frenet_curvatures(trace.points, a.step);
        ordered_json samples = ordered_json::array();
        for (const auto& s : fs.samples) {
            samples.push_back(ordered_json{{"t", s.t},
                                           {"kappa1", s.kappa1},
                                           {"kappa2", s.kappa2 ? ordered_json(*s.kappa2) : ordered_json()},
                                           {"kappa3", s.kappa3 ? ordered_json(*s.kappa3) : ordered_json()}});
        }
        auto stats = [](const CurvatureStats& st) {
            return ordered_json{{"count", st.count}, {"mean", st.mean}, {"max_deviation", st.max_deviation}};
        };
        ordered_json constant;
        try {
            constant = is_constant_curvature(fs, 1e-3);
        } catch (const InsufficientSamples&) {
            constant = nullptr;
        }
        doc["frenet"] = ordered_json{{"samples", samples},
                                     {"kappa1", stats(fs.kappa1)},
                                     {"kappa2", stats(fs.kappa2)},
                                     {"kappa3", stats(fs.kappa3)},
                                     {"constant_tol", 1e-3},
                                     {"constant", constant}};
    }
    out << doc.dump(2) << '\n';
    return kOk;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, const Tolerances& tol, std::ostream& out) {
    const auto report = verify::run_suite(suite, seed, tol);
    ordered_json checks = ordered_json::array();
    for (const auto& c : report.checks) {
        checks.push_back(ordered_json{{"name", c.name},
                                      {"tolerance", c.tolerance},
                                      {"observed_error", c.max_error},
                                      {"passed", c.passed},
                                      {"detail", c.detail}});
    }
    ordered_json doc{{"suite", report.suite}, {"seed", report.seed}, {"passed", report.passed()}, {"checks", checks}};
    out << doc.dump(2) << '\n';
    return report.passed() ? kOk : kVerifyFailed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
        const std::map<std::string, std::string>& env) {
    CLI::App app{"Invariants of parametric surfaces in R^4", "surf4"};
    app.require_subcommand(1);

    Common common;
    std::string grid = "20x20";
    std::string at;
    TraceArgs trace_args;
    std::string suite;
    std::uint64_t seed = 42;

    auto add_common = [&common](CLI::App* sub, bool needs_surface) {
        auto* s = sub->add_option("--surface", common.surface, "Surface spec file or builtin:NAME[?k=v&...]");
        if (needs_surface) s->required();
        sub->add_option("--out", common.out_path, "Write output to PATH instead of stdout");
        sub->add_option("--tol", common.tol_flags, "Tolerance override NAME=VALUE (repeatable)");
    };

    auto* analyze = app.add_subcommand("analyze", "Tabulate invariants on a uniform grid");
    add_common(analyze, true);
    analyze->add_option("--grid", grid, "Grid size NUxNV (inclusive endpoints)");
    analyze->add_option("--format", common.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

    auto* directions = app.add_subcommand("directions", "Asymptotic and principal tangents at a point");
    add_common(directions, true);
    directions->add_option("--at", at, "Point U,V")->required();

    auto* trace = app.add_subcommand("trace", "Integrate an asymptotic or principal line");
    add_common(trace, true);
    trace->add_option("--at", trace_args.at, "Seed point U,V")->required();
    trace->add_option("--field", trace_args.field, "asymptotic or principal");
    trace->add_option("--branch", trace_args.branch, "1 or 2");
    trace->add_option("--step", trace_args.step, "Arc-length step");
    trace->add_option("--steps", trace_args.steps, "Maximum number of steps");
    trace->add_flag("--frenet", trace_args.frenet, "Append Frenet curvatures of the traced points");
    trace->add_option("--format", common.format, "json or csv")->check(CLI::IsMember({"csv", "json"}));

    auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
    verify_cmd->add_option("suite", suite, "oracle, reparam, motion, helix or all")->required();
    verify_cmd->add_option("--seed", seed, "Random seed");
    verify_cmd->add_option("--out", common.out_path, "Write output to PATH instead of stdout");
    verify_cmd->add_option("--tol", common.tol_flags, "Tolerance override NAME=VALUE (repeatable)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }

    // Only analyze defaults to CSV.
    if (trace->parsed() && trace->count("--format") == 0) common.format = "json";

    std::ostringstream buffer;
    int code = kOk;
    try {
        Tolerances tol;
        apply_env_tolerances(tol, env);
        apply_tol_flags(tol, common.tol_flags);

        if (analyze->parsed()) code = cmd_analyze(common, grid, tol, buffer, err);
        else if (directions->parsed()) code = cmd_directions(common, at, tol, buffer, err);
        else if (trace->parsed()) code = cmd_trace(common, trace_args, tol, buffer);
        else code = cmd_verify(suite, seed, tol, buffer);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return e.kind() == ErrorKind::Input ? kInputError : kNumericError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kNumericError;
    }
    if (code != kOk && code != kVerifyFailed) return code;

    if (common.out_path.empty()) {
        out << buffer.str();
    } else {
        std::ofstream file(common.out_path, std::ios::binary);
        if (!(file << buffer.str())) {
            err << "error: cannot write " << common.out_path << "\n";
            return kInputError;
        }
    }
    return code;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::map<std::string, std::string> env;
    for (char** e = environ; e != nullptr && *e != nullptr; ++e) {
        const std::string_view kv(*e);
        if (kv.rfind("SURF4_TOL_", 0) != 0) continue;
        const auto eq = kv.find('=');
        if (eq == std::string_view::npos) continue;
        env.emplace(std::string(kv.substr(0, eq)), std::string(kv.substr(eq + 1)));
    }
    return run(argc, argv, out, err, env);
}

}  // namespace surf4::cli
