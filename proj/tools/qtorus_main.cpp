#include <CLI11.hpp>

#include "qtorus/core_ops.hpp"
#include "qtorus/evolution.hpp"
#include "qtorus/grover.hpp"
#include "qtorus/io.hpp"
#include "qtorus/parallel.hpp"
#include "qtorus/selfcheck.hpp"
#include "qtorus/states.hpp"
#include "qtorus/tomography.hpp"
#include "qtorus/wigner.hpp"

#include <clocale>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using namespace qtorus;

namespace {

struct UsageError {
    std::string what;
};

std::vector<long long> parse_ints(const std::string& text, size_t count, const char* what) {
    std::vector<long long> out;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t comma = text.find(',', pos);
        std::string tok = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
        try {
            size_t used = 0;
            out.push_back(std::stoll(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw UsageError{std::string(what) + ": bad integer '" + tok + "'"};
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (out.size() != count)
        throw UsageError{std::string(what) + ": expected " + std::to_string(count) + " integers"};
    return out;
}

/// Shared --n / --qubits handling.  Exactly one must be given.
struct DimArgs {
    int n = 0;
    int qubits = 0;

    void attach(CLI::App* cmd) {
        cmd->add_option("--n", n, "Hilbert space dimension (even)");
        cmd->add_option("--qubits", qubits, "dimension as 2^qubits");
    }

    Dimension resolve() const {
        if ((n > 0) == (qubits > 0))
            throw UsageError{"give exactly one of --n or --qubits"};
        try {
            return Dimension(n > 0 ? n : 1 << qubits);
        } catch (const error& e) {
            throw UsageError{e.what()};
        }
    }
};

StateSpec parse_state(const std::string& text) {
    try {
        return StateSpec::parse(text);
    } catch (const error& e) {
        throw UsageError{e.what()};
    }
}

struct MapArg {
    enum class Kind { trans, refl, ft, cat, perm, halfft, shift };
    Kind kind = Kind::ft;
    long long a = 0, b = 0;
    std::vector<int> f;
};

std::vector<int> read_permutation_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError{"cannot open permutation file " + path};
    std::vector<int> f;
    long long v;
    while (in >> v) f.push_back(static_cast<int>(v));
    if (f.empty()) throw UsageError{"permutation file " + path + " is empty"};
    return f;
}

MapArg parse_map(const std::string& text) {
    size_t colon = text.find(':');
    std::string head = text.substr(0, colon);
    std::string rest = colon == std::string::npos ? "" : text.substr(colon + 1);
    MapArg m;
    if (head == "trans" || head == "refl") {
        m.kind = head == "trans" ? MapArg::Kind::trans : MapArg::Kind::refl;
        auto v = parse_ints(rest, 2, "map");
        m.a = v[0];
        m.b = v[1];
    } else if (head == "ft" && rest.empty()) {
        m.kind = MapArg::Kind::ft;
    } else if (head == "cat") {
        m.kind = MapArg::Kind::cat;
        auto v = parse_ints(rest, 2, "map");
        m.a = v[0];
        m.b = v[1];
    } else if (head == "perm") {
        m.kind = MapArg::Kind::perm;
        if (rest.size() < 2 || rest[0] != '@') throw UsageError{"perm needs @file"};
        m.f = read_permutation_file(rest.substr(1));
    } else if (head == "halfft" && rest.empty()) {
        m.kind = MapArg::Kind::halfft;
    } else if (head == "shift") {
        m.kind = MapArg::Kind::shift;
        m.a = parse_ints(rest, 1, "map")[0];
    } else {
        throw UsageError{"unknown map '" + text +
                         "' (want trans:q,p refl:q,p ft cat:a,b perm:@file halfft shift:a)"};
    }
    return m;
}

CMat map_unitary(Dimension n, const MapArg& m) {
    switch (m.kind) {
        case MapArg::Kind::trans:
            return translation(n, static_cast<int>(mod_ll(m.a, n.grid())),
                               static_cast<int>(mod_ll(m.b, n.grid())));
        case MapArg::Kind::refl:
            return double(n.grid()) *
                   phase_point_op(n, PhasePoint(static_cast<int>(mod_ll(m.a, n.grid())),
                                                static_cast<int>(mod_ll(m.b, n.grid()))));
        case MapArg::Kind::ft:
            return fourier(n);
        case MapArg::Kind::cat:
            return cat_unitary(n, {static_cast<int>(m.a), static_cast<int>(m.b)});
        case MapArg::Kind::perm:
            return boolean_gate(n, m.f);
        case MapArg::Kind::halfft:
            return half_fourier(n);
        case MapArg::Kind::shift: {
            std::vector<int> f(n.n());
            for (int k = 0; k < n.n(); k++) f[k] = mod(k + static_cast<int>(m.a), n.n());
            return boolean_gate(n, f);
        }
    }
    throw UsageError{"unknown map"};
}

ClassicalMap map_classical(Dimension n, const MapArg& m) {
    switch (m.kind) {
        case MapArg::Kind::trans:
            return ClassicalMap::translation(
                PhasePoint(static_cast<int>(m.a), static_cast<int>(m.b)).reduced(n.grid()));
        case MapArg::Kind::refl:
            return ClassicalMap::reflection(
                PhasePoint(static_cast<int>(m.a), static_cast<int>(m.b)).reduced(n.grid()));
        case MapArg::Kind::ft:
            return ClassicalMap::rotation90();
        case MapArg::Kind::cat:
            return ClassicalMap::linear(
                cat_matrix({static_cast<int>(m.a), static_cast<int>(m.b)}));
        case MapArg::Kind::perm:
            return ClassicalMap::strip_permutation(m.f);
        case MapArg::Kind::halfft:
            throw UsageError{"halfft has no classical grid action"};
        case MapArg::Kind::shift: {
            std::vector<int> f(n.n());
            for (int k = 0; k < n.n(); k++) f[k] = mod(k + static_cast<int>(m.a), n.n());
            return ClassicalMap::strip_permutation(f);
        }
    }
    throw UsageError{"unknown map"};
}

std::string step_name(int t) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "step_%03d.csv", t);
    return buf;
}

}  // namespace

int main(int argc, char** argv) {
    std::setlocale(LC_ALL, "C");

    CLI::App app{"Discrete phase-space toolkit for even-dimensional quantum systems"};
    app.require_subcommand(1);
    int threads = 0;
    app.add_option("--threads", threads, "worker threads (0 = all cores)")
        ->envname("WIGNER_THREADS");
    auto apply_threads = [&]() { set_max_threads(threads); };

    // wigner: state -> grid CSV
    auto* cmd_wigner = app.add_subcommand("wigner", "compute a state's phase-space grid");
    DimArgs wigner_dim;
    wigner_dim.attach(cmd_wigner);
    std::string wigner_state, wigner_out;
    cmd_wigner->add_option("--state", wigner_state, "state spec")->required();
    cmd_wigner->add_option("--out", wigner_out, "output CSV path")->required();
    cmd_wigner->fallthrough();
    cmd_wigner->callback([&]() {
        apply_threads();
        Dimension n = wigner_dim.resolve();
        DensityMatrix rho = make_state(n, parse_state(wigner_state));
        write_grid_csv(wigner_of(rho), wigner_out);
    });

    // evolve: repeated map application, unitary or classical
    auto* cmd_evolve = app.add_subcommand("evolve", "evolve a state and write the final grid");
    DimArgs evolve_dim;
    evolve_dim.attach(cmd_evolve);
    std::string evolve_state_s, evolve_map_s, evolve_out, evolve_traj;
    int evolve_steps = 1;
    bool evolve_classical = false;
    cmd_evolve->add_option("--state", evolve_state_s, "state spec")->required();
    cmd_evolve->add_option("--map", evolve_map_s, "map spec")->required();
    cmd_evolve->add_option("--steps", evolve_steps, "iterations (default 1)");
    cmd_evolve->add_option("--out", evolve_out, "final grid CSV")->required();
    cmd_evolve->add_flag("--classical", evolve_classical, "move grid points instead of conjugating");
    cmd_evolve->add_option("--traj-dir", evolve_traj, "also write step_NNN.csv per step");
    cmd_evolve->fallthrough();
    cmd_evolve->callback([&]() {
        apply_threads();
        Dimension n = evolve_dim.resolve();
        if (evolve_steps < 0) throw UsageError{"--steps must be >= 0"};
        MapArg m = parse_map(evolve_map_s);
        DensityMatrix rho = make_state(n, parse_state(evolve_state_s));
        WignerGrid w = wigner_of(rho);
        bool traj = !evolve_traj.empty();
        if (traj) fs::create_directories(evolve_traj);
        if (traj) write_grid_csv(w, (fs::path(evolve_traj) / step_name(0)).string());
        if (evolve_classical) {
            ClassicalMap map = map_classical(n, m);
            for (int t = 1; t <= evolve_steps; t++) {
                w = apply_classical_map(w, map);
                if (traj) write_grid_csv(w, (fs::path(evolve_traj) / step_name(t)).string());
            }
        } else {
            CMat u = map_unitary(n, m);
            for (int t = 1; t <= evolve_steps; t++) {
                rho = evolve_state(rho, u);
                w = wigner_of(rho);
                if (traj) write_grid_csv(w, (fs::path(evolve_traj) / step_name(t)).string());
            }
        }
        write_grid_csv(w, evolve_out);
    });

    // lines: geometry and sums
    auto* cmd_lines = app.add_subcommand("lines", "inspect a grid line");
    DimArgs lines_dim;
    lines_dim.attach(cmd_lines);
    std::string lines_spec, lines_state;
    bool lines_points = false;
    cmd_lines->add_option("--line", lines_spec, "n1,n2,n3 with n1*p - n2*q = n3 (mod 2N)")
        ->required();
    cmd_lines->add_option("--state", lines_state, "state spec (adds the line sum)");
    cmd_lines->add_flag("--points", lines_points, "list the line's points");
    cmd_lines->fallthrough();
    cmd_lines->callback([&]() {
        apply_threads();
        Dimension n = lines_dim.resolve();
        auto v = parse_ints(lines_spec, 3, "--line");
        LineSpec line{static_cast<int>(mod_ll(v[0], n.grid())),
                      static_cast<int>(mod_ll(v[1], n.grid())),
                      static_cast<int>(mod_ll(v[2], n.grid()))};
        auto pts = line_points(n, line);
        LineProjector proj = line_projector(n, line);
        std::printf("points %zu\n", pts.size());
        std::printf("dimension %d\n", proj.dimension);
        if (lines_points)
            for (const auto& a : pts) std::printf("%d,%d\n", a.q, a.p);
        if (!lines_state.empty()) {
            DensityMatrix rho = make_state(n, parse_state(lines_state));
            std::printf("sum %.17g\n", line_sum(wigner_of(rho), line));
        }
    });

    // grover: trajectory + success curve
    auto* cmd_grover = app.add_subcommand("grover", "run the search iteration");
    DimArgs grover_dim;
    grover_dim.attach(cmd_grover);
    int grover_marked = 0, grover_momentum = 0, grover_steps = -1;
    std::string grover_dir;
    cmd_grover->add_option("--marked", grover_marked, "marked position")->required();
    cmd_grover->add_option("--momentum", grover_momentum, "initial momentum state (default 0)");
    cmd_grover->add_option("--steps", grover_steps, "iterations (default round(pi sqrt(N)/4))");
    cmd_grover->add_option("--out-dir", grover_dir, "output directory")->required();
    cmd_grover->fallthrough();
    cmd_grover->callback([&]() {
        apply_threads();
        Dimension n = grover_dim.resolve();
        int dflt = grover_default_steps(n);
        int floor_steps = static_cast<int>(pi * std::sqrt(double(n.n())) / 4.0);
        int steps = grover_steps >= 0 ? grover_steps : dflt;
        std::printf("suggested steps: floor=%d round=%d (running %d)\n", floor_steps, dflt,
                    steps);
        GroverConfig cfg(n, grover_marked, grover_momentum);
        auto traj = run_grover(cfg, steps);
        fs::create_directories(grover_dir);
        std::string summary = "step,success_probability\n";
        for (size_t t = 0; t < traj.size(); t++) {
            write_grid_csv(traj[t].grid,
                           (fs::path(grover_dir) / step_name(static_cast<int>(t))).string());
            char buf[64];
            std::snprintf(buf, sizeof buf, "%zu,%.17g\n", t, traj[t].success);
            summary += buf;
        }
        write_file((fs::path(grover_dir) / "summary.csv").string(), summary);
    });

    // tomo: one grid point through the scattering circuit
    auto* cmd_tomo = app.add_subcommand("tomo", "estimate one grid value from sampled shots");
    DimArgs tomo_dim;
    tomo_dim.attach(cmd_tomo);
    std::string tomo_state, tomo_point;
    long long tomo_shots = 0;
    std::uint64_t tomo_seed = 1;
    cmd_tomo->add_option("--state", tomo_state, "state spec")->required();
    cmd_tomo->add_option("--point", tomo_point, "grid point q,p")->required();
    cmd_tomo->add_option("--shots", tomo_shots, "samples (0 = exact)");
    cmd_tomo->add_option("--seed", tomo_seed, "sampling seed");
    cmd_tomo->fallthrough();
    cmd_tomo->callback([&]() {
        apply_threads();
        Dimension n = tomo_dim.resolve();
        auto v = parse_ints(tomo_point, 2, "--point");
        PhasePoint a =
            PhasePoint(static_cast<int>(mod_ll(v[0], n.grid())),
                       static_cast<int>(mod_ll(v[1], n.grid())));
        DensityMatrix rho = make_state(n, parse_state(tomo_state));
        PointEstimate est = measure_wigner_point(rho, a, tomo_shots, tomo_seed);
        PointEstimate exact = measure_wigner_point(rho, a, 0, tomo_seed);
        std::printf("%.17g, %.17g, %.17g\n", est.estimate, est.stderror, exact.estimate);
    });

    // tomo-full: whole grid + run metadata
    auto* cmd_tf = app.add_subcommand("tomo-full", "estimate the whole grid from sampled shots");
    DimArgs tf_dim;
    tf_dim.attach(cmd_tf);
    std::string tf_state, tf_out, tf_meta;
    long long tf_shots = 0;
    std::uint64_t tf_seed = 1;
    cmd_tf->add_option("--state", tf_state, "state spec")->required();
    cmd_tf->add_option("--shots", tf_shots, "samples per point (0 = exact)");
    cmd_tf->add_option("--seed", tf_seed, "sampling seed");
    cmd_tf->add_option("--out", tf_out, "output grid CSV")->required();
    cmd_tf->add_option("--meta", tf_meta, "metadata path (default: meta.json next to --out)");
    cmd_tf->fallthrough();
    cmd_tf->callback([&]() {
        apply_threads();
        Dimension n = tf_dim.resolve();
        DensityMatrix rho = make_state(n, parse_state(tf_state));
        WignerGrid w = wigner_tomography(rho, tf_shots, tf_seed);
        write_grid_csv(w, tf_out);
        std::string meta = tf_meta.empty()
                               ? (fs::path(tf_out).parent_path() / "meta.json").string()
                               : tf_meta;
        std::string command = "tomo-full --n " + std::to_string(n.n()) + " --state " + tf_state +
                              " --shots " + std::to_string(tf_shots) + " --seed " +
                              std::to_string(tf_seed);
        write_file(meta, meta_json(command, tf_seed, tf_shots));
    });

    // render: CSV -> PGM
    auto* cmd_render = app.add_subcommand("render", "render a grid CSV as a PGM image");
    std::string render_in, render_out, render_map = "sign";
    double render_max = 0;
    cmd_render->add_option("--in", render_in, "grid CSV")->required();
    cmd_render->add_option("--out", render_out, "output PGM")->required();
    cmd_render->add_option("--map", render_map, "sign | linear");
    cmd_render->add_option("--max", render_max, "fixed scale for the sign map (0 = auto)");
    cmd_render->fallthrough();
    cmd_render->callback([&]() {
        apply_threads();
        RenderSpec spec;
        if (render_map == "sign")
            spec.map = RenderSpec::Map::sign;
        else if (render_map == "linear")
            spec.map = RenderSpec::Map::linear;
        else
            throw UsageError{"--map must be sign or linear"};
        spec.fixed_max = render_max;
        write_file(render_out, render_pgm(read_grid_csv(render_in), spec));
    });

    // zmatrix: dense one-step propagator
    auto* cmd_z = app.add_subcommand("zmatrix", "write the dense grid propagator of a map");
    DimArgs z_dim;
    z_dim.attach(cmd_z);
    std::string z_map, z_out;
    cmd_z->add_option("--map", z_map, "map spec")->required();
    cmd_z->add_option("--out", z_out, "output CSV (dense rows)")->required();
    cmd_z->fallthrough();
    cmd_z->callback([&]() {
        apply_threads();
        Dimension n = z_dim.resolve();
        ZMatrix z = z_matrix(n, map_unitary(n, parse_map(z_map)));
        const auto& e = z.entries();
        std::string out;
        char buf[32];
        for (int r = 0; r < e.rows(); r++) {
            for (int c = 0; c < e.cols(); c++) {
                std::snprintf(buf, sizeof buf, "%.17g", e(r, c));
                out += buf;
                out += c + 1 < e.cols() ? ',' : '\n';
            }
        }
        write_file(z_out, out);
    });

    // check: invariant suite
    auto* cmd_check = app.add_subcommand("check", "run the invariant suite");
    DimArgs check_dim;
    check_dim.attach(cmd_check);
    bool check_failed = false;
    cmd_check->fallthrough();
    cmd_check->callback([&]() {
        apply_threads();
        Dimension n = check_dim.n == 0 && check_dim.qubits == 0 ? Dimension(8)
                                                                : check_dim.resolve();
        check_failed = !run_self_check(n, std::cout);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return check_failed ? 1 : 0;
}
