#include "qtorus/io.hpp"

#include "qtorus/rng.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace qtorus {

const char* const version = "0.1.0";

namespace {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

std::string grid_to_csv(const WignerGrid& w) {
    std::string out = "q,p,w\n";
    const int g = w.grid();
    for (int q = 0; q < g; q++)
        for (int p = 0; p < g; p++) {
            out += std::to_string(q);
            out += ',';
            out += std::to_string(p);
            out += ',';
            out += fmt17(w.at(q, p));
            out += '\n';
        }
    return out;
}

void write_grid_csv(const WignerGrid& w, const std::string& path) {
    write_file(path, grid_to_csv(w));
}

WignerGrid read_grid_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open " + path);
    std::string line;
    if (!std::getline(in, line) || line != "q,p,w")
        throw error(path + ": expected header q,p,w");

    struct Row {
        int q, p;
        double w;
    };
    std::vector<Row> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        Row r;
        char trail;
        if (std::sscanf(line.c_str(), "%d,%d,%lf%c", &r.q, &r.p, &r.w, &trail) != 3)
            throw error(path + ": bad row '" + line + "'");
        rows.push_back(r);
    }
    auto side_sq = rows.size();
    int side = static_cast<int>(std::lround(std::sqrt(double(side_sq))));
    if (side < 4 || static_cast<size_t>(side) * side != side_sq || side % 2 != 0)
        throw error(path + ": row count " + std::to_string(side_sq) + " is not a full grid");
    WignerGrid w(Dimension(side / 2));
    std::vector<char> seen(side_sq, 0);
    for (const Row& r : rows) {
        if (r.q < 0 || r.q >= side || r.p < 0 || r.p >= side)
            throw error(path + ": point out of range");
        if (seen[r.q * side + r.p]) throw error(path + ": duplicate point");
        seen[r.q * side + r.p] = 1;
        w.at(r.q, r.p) = r.w;
    }
    return w;
}

std::string render_pgm(const WignerGrid& w, const RenderSpec& spec) {
    const int g = w.grid();
    std::string out = "P5\n" + std::to_string(g) + " " + std::to_string(g) + "\n255\n";
    out.reserve(out.size() + static_cast<size_t>(g) * g);

    auto clamp_byte = [](long v) { return static_cast<char>(v < 0 ? 0 : (v > 255 ? 255 : v)); };

    if (spec.map == RenderSpec::Map::sign) {
        double vmax = spec.fixed_max > 0 ? spec.fixed_max : w.values().cwiseAbs().maxCoeff();
        for (int y = 0; y < g; y++) {
            int p = g - 1 - y;
            for (int x = 0; x < g; x++) {
                long byte = vmax > 0 ? 128 - std::lround(127.0 * w.at(x, p) / vmax) : 128;
                out += clamp_byte(byte);
            }
        }
    } else {
        double vmin = w.values().minCoeff(), vmax = w.values().maxCoeff();
        double range = vmax - vmin;
        for (int y = 0; y < g; y++) {
            int p = g - 1 - y;
            for (int x = 0; x < g; x++) {
                long byte =
                    range > 0 ? std::lround(255.0 * (vmax - w.at(x, p)) / range) : 128;
                out += clamp_byte(byte);
            }
        }
    }
    return out;
}

std::string meta_json(const std::string& command, std::uint64_t seed, long long shots) {
    nlohmann::json j;
    j["command"] = command;
    j["generator"] = SplitMix64::id;
    j["seed"] = seed;
    j["shots"] = shots;
    j["version"] = version;
    return j.dump(2) + "\n";
}

void write_file(const std::string& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw error("cannot write " + path);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw error("short write to " + path);
}

}  // namespace qtorus
