#include "nld/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include <fmt/format.h>

#include "nld/errors.hpp"

namespace nld {

namespace {

struct Entry {
    std::string value;
    int line;
};

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_number(const Entry& e, std::string_view key) {
    const std::string_view v = trim(e.value);
    double out = 0.0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || ptr != v.data() + v.size() || v.empty())
        throw ParseError(e.line, fmt::format("'{}' is not a number for key '{}'", v, key));
    if (!std::isfinite(out))
        throw ParseError(e.line, fmt::format("value for key '{}' must be finite", key));
    return out;
}

std::size_t parse_count(const Entry& e, std::string_view key) {
    const std::string_view v = trim(e.value);
    std::size_t out = 0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || ptr != v.data() + v.size() || v.empty())
        throw ParseError(e.line, fmt::format("'{}' is not a non-negative integer for key '{}'", v, key));
    return out;
}

bool parse_bool(const Entry& e, std::string_view key) {
    const std::string_view v = trim(e.value);
    if (v == "true" || v == "yes" || v == "1") return true;
    if (v == "false" || v == "no" || v == "0") return false;
    throw ParseError(e.line, fmt::format("'{}' is not a boolean for key '{}'", v, key));
}

std::vector<double> parse_list(const Entry& e, std::string_view key) {
    std::vector<double> out;
    std::string_view rest = e.value;
    while (true) {
        const auto comma = rest.find(',');
        const std::string_view item = trim(rest.substr(0, comma));
        out.push_back(parse_number({std::string(item), e.line}, key));
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
    }
    return out;
}

// Alpha keys each mode accepts.
std::vector<std::string_view> mode_keys(Mode mode) {
    switch (mode) {
        case Mode::SpinSymmetric:
        case Mode::PseudoSpinSymmetric: return {"alpha"};
        case Mode::Thirring: return {"alpha_v"};
        case Mode::GrossNeveu: return {"alpha_s"};
        case Mode::PseudoScalar: return {"alpha_w"};
        case Mode::GeneralQuartic: return {"alpha_s", "alpha_v", "alpha_w", "alpha_sw"};
    }
    return {};
}

}  // namespace

const std::vector<std::string_view>& config_keys() {
    static const std::vector<std::string_view> keys{
        "mode",    "alpha",      "alpha_s",        "alpha_v",   "alpha_w",
        "alpha_sw", "m",         "x_min",          "x_max",     "n_points",
        "a_plus",  "a_minus",    "mu",             "scheme",    "dt",
        "t_final", "snapshot_times", "diagnostics_every", "output_dir", "deterministic",
        "omega",   "tolerance",
    };
    return keys;
}

RunConfig parse_config(std::string_view text) {
    std::map<std::string, Entry, std::less<>> entries;
    std::istringstream lines{std::string(text)};
    std::string raw;
    int line_no = 0;
    while (std::getline(lines, raw)) {
        ++line_no;
        std::string_view line = raw;
        if (const auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ParseError(line_no, fmt::format("expected 'key = value', got '{}'", line));
        const std::string key(trim(line.substr(0, eq)));
        const std::string value(trim(line.substr(eq + 1)));
        if (key.empty()) throw ParseError(line_no, "missing key before '='");
        if (value.empty()) throw ParseError(line_no, fmt::format("missing value for key '{}'", key));
        const auto& known = config_keys();
        if (std::find(known.begin(), known.end(), key) == known.end())
            throw ParseError(line_no, fmt::format("unknown key '{}'", key));
        if (entries.contains(key))
            throw ParseError(line_no, fmt::format("duplicate key '{}'", key));
        entries.emplace(key, Entry{value, line_no});
    }

    RunConfig cfg;
    auto get = [&](std::string_view key) -> const Entry* {
        const auto it = entries.find(key);
        return it == entries.end() ? nullptr : &it->second;
    };

    if (const auto* e = get("mode")) {
        try {
            cfg.mode = parse_mode(e->value);
        } catch (const InvalidParameter& err) {
            throw ParseError(e->line, err.what());
        }
    }
    const auto allowed = mode_keys(cfg.mode);
    for (std::string_view key : {"alpha", "alpha_s", "alpha_v", "alpha_w", "alpha_sw"}) {
        const auto* e = get(key);
        if (!e) continue;
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
            throw ParseError(e->line, fmt::format("key '{}' does not apply to mode '{}'", key,
                                                  mode_name(cfg.mode)));
        const double v = parse_number(*e, key);
        if (cfg.mode == Mode::GeneralQuartic) {
            if (key == "alpha_s") cfg.general.alpha_s = v;
            if (key == "alpha_v") cfg.general.alpha_v = v;
            if (key == "alpha_w") cfg.general.alpha_w = v;
            if (key == "alpha_sw") cfg.general.alpha_sw = v;
        } else {
            cfg.alpha = v;
        }
    }

    auto number = [&](std::string_view key, double& slot) {
        if (const auto* e = get(key)) slot = parse_number(*e, key);
    };
    number("m", cfg.m);
    number("x_min", cfg.x_min);
    number("x_max", cfg.x_max);
    number("a_plus", cfg.a_plus);
    number("a_minus", cfg.a_minus);
    number("mu", cfg.mu);
    number("dt", cfg.dt);
    number("t_final", cfg.t_final);
    number("omega", cfg.omega);
    number("tolerance", cfg.tolerance);
    if (const auto* e = get("n_points")) cfg.n_points = parse_count(*e, "n_points");
    if (const auto* e = get("diagnostics_every"))
        cfg.diagnostics_every = parse_count(*e, "diagnostics_every");
    if (const auto* e = get("deterministic")) cfg.deterministic = parse_bool(*e, "deterministic");
    if (const auto* e = get("output_dir")) cfg.output_dir = e->value;
    if (const auto* e = get("scheme")) {
        try {
            cfg.scheme = parse_scheme(e->value);
        } catch (const InvalidParameter& err) {
            throw ParseError(e->line, err.what());
        }
    }

    if (const auto* e = get("snapshot_times")) {
        cfg.snapshot_times = parse_list(*e, "snapshot_times");
    } else if (get("t_final")) {
        std::erase_if(cfg.snapshot_times, [&](double t) { return t > cfg.t_final; });
        if (cfg.snapshot_times.empty() || cfg.snapshot_times.back() < cfg.t_final)
            cfg.snapshot_times.push_back(cfg.t_final);
    }
    cfg.general.m = cfg.m;
    return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InvalidParameter(fmt::format("cannot open config file '{}'", path.string()));
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

ModePreset RunConfig::preset() const {
    switch (mode) {
        case Mode::GeneralQuartic: {
            CouplingConfig c = general;
            c.m = m;
            return ModePreset::general(c);
        }
        case Mode::Thirring: return ModePreset::thirring(alpha, m);
        case Mode::GrossNeveu: return ModePreset::gross_neveu(alpha, m);
        case Mode::SpinSymmetric: return ModePreset::spin_symmetric(alpha, m);
        case Mode::PseudoSpinSymmetric: return ModePreset::pseudo_spin_symmetric(alpha, m);
        case Mode::PseudoScalar: return ModePreset::pseudo_scalar(alpha, m);
    }
    throw InvalidParameter("unhandled mode");
}

CouplingConfig RunConfig::coupling() const { return preset_to_coupling(preset()); }

Grid RunConfig::grid() const { return Grid(x_min, x_max, n_points); }

EvolveSpec RunConfig::evolve_spec() const {
    EvolveSpec spec;
    spec.dt = dt;
    spec.t_final = t_final;
    spec.snapshot_times = snapshot_times;
    spec.scheme = scheme;
    spec.diagnostics_every = diagnostics_every;
    return spec;
}

}  // namespace nld
