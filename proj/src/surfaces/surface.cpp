#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "surf4/error.hpp"
#include "surf4/surfaces.hpp"

namespace surf4 {

using expr::ConstantBindings;
using expr::Expression;

SurfaceDefinition::SurfaceDefinition(std::string name, std::array<Expression, 4> components,
                                     ConstantBindings constants, Domain domain)
    : name_(std::move(name)),
      components_(std::move(components)),
      constants_(std::move(constants)),
      domain_(domain) {
    if (!(domain_.u_min < domain_.u_max) || !(domain_.v_min < domain_.v_max)) {
        throw InputError("surface '" + name_ + "': domain must satisfy min < max on both axes");
    }
    for (const auto& c : components_) {
        for (const auto& n : c.constant_names()) {
            if (!constants_.contains(n)) {
                throw InputError("surface '" + name_ + "': constant '" + n + "' is not bound");
            }
        }
    }
}

SurfaceDefinition SurfaceDefinition::from_text(std::string name, const std::array<std::string, 4>& components,
                                               ConstantBindings constants, Domain domain) {
    std::array<Expression, 4> parsed{
        expr::parse_expression(components[0], constants), expr::parse_expression(components[1], constants),
        expr::parse_expression(components[2], constants), expr::parse_expression(components[3], constants)};
    return {std::move(name), std::move(parsed), std::move(constants), domain};
}

SurfaceDefinition SurfaceDefinition::with_domain(Domain domain) const {
    return {name_, components_, constants_, domain};
}

SurfaceJet surface_jet_unchecked(const SurfaceDefinition& def, double u, double v) {
    SurfaceJet jet;
    for (int i = 0; i < 4; ++i) {
        const auto j = expr::evaluate_jet(def.components()[i], u, v, def.constants());
        jet.z[i] = j.val;
        jet.zu[i] = j.du;
        jet.zv[i] = j.dv;
        jet.zuu[i] = j.duu;
        jet.zuv[i] = j.duv;
        jet.zvv[i] = j.dvv;
    }
    return jet;
}

SurfaceJet surface_jet(const SurfaceDefinition& def, double u, double v) {
    if (!def.domain().contains(u, v)) {
        std::ostringstream os;
        os << "point (" << u << ", " << v << ") is outside the domain of '" << def.name() << "'";
        throw InputError(os.str());
    }
    return surface_jet_unchecked(def, u, v);
}

Vec4 surface_point(const SurfaceDefinition& def, double u, double v) {
    Vec4 p;
    for (int i = 0; i < 4; ++i) p[i] = expr::evaluate_scalar(def.components()[i], u, v, def.constants());
    return p;
}

// ---------------------------------------------------------------------------

SurfaceDefinition builtin_plane() {
    return SurfaceDefinition::from_text("plane", {"u", "v", "0", "0"}, {}, {-1.0, 1.0, -1.0, 1.0});
}

SurfaceDefinition builtin_clifford() {
    const double two_pi = 2.0 * M_PI;
    return SurfaceDefinition::from_text("clifford", {"cos(u)", "sin(u)", "cos(v)", "sin(v)"}, {},
                                        {0.0, two_pi, 0.0, two_pi});
}

SurfaceDefinition builtin_elliptic() {
    return SurfaceDefinition::from_text("elliptic", {"u", "v", "u^2 - v^2", "u*v"}, {}, {-0.5, 0.5, -0.5, 0.5});
}

// ---------------------------------------------------------------------------

namespace {

std::string url_decode(std::string_view s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '%' && i + 2 < s.size()) {
            const auto hex = std::string(s.substr(i + 1, 2));
            char* end = nullptr;
            const long value = std::strtol(hex.c_str(), &end, 16);
            if (end != hex.c_str() + 2) throw InputError("bad percent escape in surface URI");
            out += static_cast<char>(value);
            i += 2;
        } else {
            out += s[i];
        }
    }
    return out;
}

double parse_number(const std::string& key, const std::string& text) {
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != text.size() || text.empty() || !std::isfinite(value)) {
        throw InputError("parameter '" + key + "' is not a number: '" + text + "'");
    }
    return value;
}

SurfaceSource load_rotational(std::string_view query) {
    std::map<std::string, std::string> raw;
    while (!query.empty()) {
        const auto amp = query.find('&');
        const auto item = query.substr(0, amp);
        const auto eq = item.find('=');
        if (eq == std::string_view::npos) throw InputError("malformed URI parameter '" + std::string(item) + "'");
        const std::string key(item.substr(0, eq));
        if (!raw.emplace(key, url_decode(item.substr(eq + 1))).second) {
            throw InputError("URI parameter '" + key + "' given twice");
        }
        if (amp == std::string_view::npos) break;
        query.remove_prefix(amp + 1);
    }

    auto take_number = [&raw](const std::string& key) -> std::optional<double> {
        const auto it = raw.find(key);
        if (it == raw.end()) return std::nullopt;
        const double v = parse_number(key, it->second);
        raw.erase(it);
        return v;
    };
    auto take_text = [&raw](const std::string& key) -> std::optional<std::string> {
        const auto it = raw.find(key);
        if (it == raw.end()) return std::nullopt;
        std::string v = it->second;
        raw.erase(it);
        return v;
    };

    const auto case_text = take_text("case");
    const auto f_text = take_text("f");
    const auto g_text = take_text("g");
    const auto vmin = take_number("vmin");
    const auto vmax = take_number("vmax");

    std::optional<RotationalParams> params;
    if (case_text) {
        if (f_text || g_text) throw InputError("rotational URI: give either case= or f=/g=, not both");
        const int case_number = static_cast<int>(parse_number("case", *case_text));
        std::map<std::string, double> values;
        for (const char* key : {"a", "b", "c", "alpha", "beta", "umin", "umax"}) {
            if (auto v = take_number(key)) values[key] = *v;
        }
        params = rotational_case(case_number, values);
    } else {
        if (!f_text || !g_text) throw InputError("rotational URI needs case= or both f= and g=");
        const double alpha = take_number("alpha").value_or(1.0);
        const double beta = take_number("beta").value_or(1.0);
        const double umin = take_number("umin").value_or(0.5);
        const double umax = take_number("umax").value_or(2.0);
        ConstantBindings consts;
        std::vector<std::string> rest;
        for (const auto& [key, text] : raw) rest.push_back(key);
        for (const auto& key : rest) consts.bind(key, parse_number(key, raw.at(key)));
        raw.clear();
        params = RotationalParams::create(*f_text, *g_text, alpha, beta, std::move(consts), umin, umax);
    }
    if (!raw.empty()) throw InputError("unknown rotational URI parameter '" + raw.begin()->first + "'");

    auto surface = make_rotational(*params, vmin.value_or(0.0), vmax.value_or(2.0 * M_PI));
    return {std::move(surface), std::move(params)};
}

}  // namespace

SurfaceSource load_surface(std::string_view ref) {
    constexpr std::string_view kBuiltin = "builtin:";
    if (ref.substr(0, kBuiltin.size()) == kBuiltin) {
        const auto rest = ref.substr(kBuiltin.size());
        const auto q = rest.find('?');
        const auto name = rest.substr(0, q);
        const auto query = q == std::string_view::npos ? std::string_view{} : rest.substr(q + 1);
        if (name == "rotational") return load_rotational(query);
        if (!query.empty()) throw InputError("builtin '" + std::string(name) + "' takes no parameters");
        if (name == "plane") return {builtin_plane(), std::nullopt};
        if (name == "clifford") return {builtin_clifford(), std::nullopt};
        if (name == "elliptic") return {builtin_elliptic(), std::nullopt};
        throw InputError("unknown builtin surface '" + std::string(name) + "'");
    }

    std::ifstream in{std::string(ref)};
    if (!in) throw InputError("cannot open surface spec '" + std::string(ref) + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return {parse_surface_json(buffer.str()), std::nullopt};
}

SurfaceDefinition parse_surface_json(std::string_view text) {
    using nlohmann::json;
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("surface spec is not valid JSON: ") + e.what());
    }
    try {
        if (!doc.is_object()) throw InputError("surface spec must be a JSON object");
        const std::string name = doc.value("name", std::string("surface"));

        const auto& comps = doc.at("components");
        if (!comps.is_array() || comps.size() != 4) {
            throw InputError("'components' must be an array of four strings");
        }
        ConstantBindings consts;
        if (doc.contains("constants")) {
            for (const auto& [key, value] : doc.at("constants").items()) {
                if (!value.is_number()) throw InputError("constant '" + key + "' must be a number");
                consts.bind(key, value.get<double>());
            }
        }
        const auto& dom = doc.at("domain");
        auto range = [&dom](const char* axis) {
            const auto& r = dom.at(axis);
            if (!r.is_array() || r.size() != 2 || !r[0].is_number() || !r[1].is_number()) {
                throw InputError(std::string("domain.") + axis + " must be [min, max]");
            }
            return std::pair{r[0].get<double>(), r[1].get<double>()};
        };
        const auto [u0, u1] = range("u");
        const auto [v0, v1] = range("v");

        std::array<std::string, 4> texts;
        for (int i = 0; i < 4; ++i) {
            if (!comps[i].is_string()) throw InputError("component " + std::to_string(i) + " must be a string");
            texts[i] = comps[i].get<std::string>();
        }
        return SurfaceDefinition::from_text(name, texts, std::move(consts), {u0, u1, v0, v1});
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed surface spec: ") + e.what());
    }
}

std::string surface_to_json(const SurfaceDefinition& def) {
    nlohmann::ordered_json doc;
    doc["name"] = def.name();
    doc["components"] = nlohmann::json::array();
    for (const auto& c : def.components()) doc["components"].push_back(c.to_string());
    doc["constants"] = nlohmann::json::object();
    for (const auto& [name, value] : def.constants().values()) doc["constants"][name] = value;
    doc["domain"]["u"] = {def.domain().u_min, def.domain().u_max};
    doc["domain"]["v"] = {def.domain().v_min, def.domain().v_max};
    return doc.dump(2);
}

SurfaceDefinition rigid_transform(const SurfaceDefinition& def, const Eigen::Matrix4d& rotation,
                                  const Vec4& translation) {
    std::array<Expression, 4> out{expr::number(translation[0]), expr::number(translation[1]),
                                  expr::number(translation[2]), expr::number(translation[3])};
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            out[i] = out[i] + expr::number(rotation(i, j)) * def.components()[j];
        }
    }
    return {def.name() + "+motion", std::move(out), def.constants(), def.domain()};
}

SurfaceDefinition affine_reparametrize(const SurfaceDefinition& def, const Eigen::Matrix2d& A, const Vec2& b,
                                       Domain domain) {
    using expr::number;
    const auto s = expr::variable(expr::Variable::U);
    const auto t = expr::variable(expr::Variable::V);
    const auto u_of = number(A(0, 0)) * s + number(A(0, 1)) * t + number(b[0]);
    const auto v_of = number(A(1, 0)) * s + number(A(1, 1)) * t + number(b[1]);
    std::array<Expression, 4> out{expr::substitute(def.components()[0], u_of, v_of),
                                  expr::substitute(def.components()[1], u_of, v_of),
                                  expr::substitute(def.components()[2], u_of, v_of),
                                  expr::substitute(def.components()[3], u_of, v_of)};
    return {def.name() + "+reparam", std::move(out), def.constants(), domain};
}

}  // namespace surf4
