#include "nld/snapshot_io.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include <fmt/format.h>

#include "nld/errors.hpp"
#include "nld/version.hpp"

namespace nld {

namespace {

std::string num(double v, int precision) { return fmt::format("{:.{}g}", v, precision); }

double to_double(std::string_view s, const std::string& where) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
        throw FormatError(fmt::format("{}: cannot parse '{}' as a number", where, s));
    return v;
}

std::map<std::string, std::string> read_metadata(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw FormatError(fmt::format("missing metadata file '{}'", path.string()));
    std::map<std::string, std::string> kv;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        const auto eq = line.find(" = ");
        if (eq == std::string::npos)
            throw FormatError(fmt::format("{}: malformed metadata line '{}'", path.string(), line));
        kv[line.substr(0, eq)] = line.substr(eq + 3);
    }
    return kv;
}

}  // namespace

int output_precision() {
    if (const char* env = std::getenv("NLD_OUTPUT_PRECISION")) {
        int p = 0;
        const std::string_view s(env);
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), p);
        if (ec == std::errc() && ptr == s.data() + s.size() && p >= 1 && p <= 17) return p;
    }
    return 17;
}

std::filesystem::path metadata_path(const std::filesystem::path& snapshot) {
    auto p = snapshot;
    p += ".meta";
    return p;
}

void write_snapshot(const SpinorField& field, double t, const std::filesystem::path& path,
                    const SnapshotInfo& info) {
    const int prec = output_precision();
    const Grid& g = field.grid();
    {
        std::ofstream out(path);
        if (!out) throw FormatError(fmt::format("cannot write '{}'", path.string()));
        out << snapshot_header << '\n';
        for (std::size_t j = 0; j < field.size(); ++j) {
            const cplx p = field.plus()[j];
            const cplx q = field.minus()[j];
            const auto b = bilinear_at(p, q);
            out << num(g.x(j), prec) << ',' << num(p.real(), prec) << ',' << num(p.imag(), prec)
                << ',' << num(q.real(), prec) << ',' << num(q.imag(), prec) << ','
                << num(b.S, prec) << ',' << num(b.V, prec) << ',' << num(b.W, prec) << '\n';
        }
    }

    std::ofstream meta(metadata_path(path));
    if (!meta) throw FormatError(fmt::format("cannot write metadata for '{}'", path.string()));
    meta << "# nldirac snapshot metadata\n";
    meta << "toolkit_version = " << toolkit_version << '\n';
    meta << "t = " << num(t, 17) << '\n';
    meta << "x_min = " << num(g.x_min(), 17) << '\n';
    meta << "x_max = " << num(g.x_max(), 17) << '\n';
    meta << "n_points = " << g.size() << '\n';
    if (!info.mode.empty()) meta << "mode = " << info.mode << '\n';
    if (info.coupling) {
        meta << "m = " << num(info.coupling->m, 17) << '\n';
        meta << "alpha_s = " << num(info.coupling->alpha_s, 17) << '\n';
        meta << "alpha_v = " << num(info.coupling->alpha_v, 17) << '\n';
        meta << "alpha_w = " << num(info.coupling->alpha_w, 17) << '\n';
        meta << "alpha_sw = " << num(info.coupling->alpha_sw, 17) << '\n';
    }
    if (info.scheme) meta << "scheme = " << scheme_name(*info.scheme) << '\n';
    if (info.dt) meta << "dt = " << num(*info.dt, 17) << '\n';
    meta << "units_psi = sqrt(m)\n";
    meta << "units_x = 1/m\n";
    meta << "units_t = 1/m\n";
}

SnapshotData read_snapshot(const std::filesystem::path& path) {
    const auto meta_file = metadata_path(path);
    const auto kv = read_metadata(meta_file);
    auto need = [&](const std::string& key) -> const std::string& {
        const auto it = kv.find(key);
        if (it == kv.end())
            throw FormatError(fmt::format("{}: missing key '{}'", meta_file.string(), key));
        return it->second;
    };
    const std::string where = meta_file.string();
    const double t = to_double(need("t"), where);
    const double x_min = to_double(need("x_min"), where);
    const double x_max = to_double(need("x_max"), where);
    const double n_raw = to_double(need("n_points"), where);
    if (n_raw < 1 || n_raw != static_cast<double>(static_cast<std::size_t>(n_raw)))
        throw FormatError(fmt::format("{}: invalid n_points", where));
    const auto n = static_cast<std::size_t>(n_raw);

    SnapshotInfo info;
    if (const auto it = kv.find("mode"); it != kv.end()) info.mode = it->second;
    if (kv.contains("alpha_s")) {
        info.coupling = CouplingConfig{to_double(need("m"), where), to_double(need("alpha_s"), where),
                                       to_double(need("alpha_v"), where),
                                       to_double(need("alpha_w"), where),
                                       to_double(need("alpha_sw"), where)};
    }
    if (const auto it = kv.find("scheme"); it != kv.end()) info.scheme = parse_scheme(it->second);
    if (const auto it = kv.find("dt"); it != kv.end()) info.dt = to_double(it->second, where);

    std::ifstream in(path);
    if (!in) throw FormatError(fmt::format("cannot open '{}'", path.string()));
    std::string line;
    if (!std::getline(in, line)) throw FormatError(fmt::format("{}: empty file", path.string()));
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != snapshot_header)
        throw FormatError(fmt::format("{}: header '{}' does not match '{}'", path.string(), line,
                                      snapshot_header));

    std::vector<cplx> plus;
    std::vector<cplx> minus;
    plus.reserve(n);
    minus.reserve(n);
    std::size_t row = 0;
    while (std::getline(in, line)) {
        if (line.empty() || line == "\r") continue;
        ++row;
        const std::string at = fmt::format("{}:{}", path.string(), row + 1);
        std::vector<std::string_view> cols;
        std::string_view rest = line;
        while (true) {
            const auto comma = rest.find(',');
            cols.push_back(rest.substr(0, comma));
            if (comma == std::string_view::npos) break;
            rest.remove_prefix(comma + 1);
        }
        if (cols.size() != 8)
            throw FormatError(fmt::format("{}: expected 8 columns, found {}", at, cols.size()));
        plus.emplace_back(to_double(cols[1], at), to_double(cols[2], at));
        minus.emplace_back(to_double(cols[3], at), to_double(cols[4], at));
    }
    if (row != n)
        throw FormatError(fmt::format("{}: {} data rows but metadata says n_points = {}",
                                      path.string(), row, n));

    Grid grid = [&] {
        try {
            return Grid(x_min, x_max, n);
        } catch (const InvalidParameter& e) {
            throw FormatError(fmt::format("{}: {}", where, e.what()));
        }
    }();
    return {SpinorField(std::move(grid), std::move(plus), std::move(minus)), t, info};
}

void write_diagnostics(std::span<const DiagnosticsRecord> records, const std::filesystem::path& path) {
    const int prec = output_precision();
    std::ofstream out(path);
    if (!out) throw FormatError(fmt::format("cannot write '{}'", path.string()));
    out << diagnostics_header << '\n';
    for (const auto& r : records)
        out << num(r.t, prec) << ',' << num(r.charge, prec) << ',' << num(r.energy, prec) << ','
            << num(r.momentum, prec) << ',' << num(r.max_amp, prec) << '\n';
}

}  // namespace nld
