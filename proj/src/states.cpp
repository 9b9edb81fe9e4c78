#include "qtorus/states.hpp"

#include "qtorus/core_ops.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace qtorus {

StateSpec StateSpec::position(int q0) {
    StateSpec s;
    s.kind = Kind::position;
    s.q0 = q0;
    return s;
}

StateSpec StateSpec::momentum(int k0) {
    StateSpec s;
    s.kind = Kind::momentum;
    s.k0 = k0;
    return s;
}

StateSpec StateSpec::superposition(int q0, int q1, double phi) {
    StateSpec s;
    s.kind = Kind::superposition;
    s.q0 = q0;
    s.q1 = q1;
    s.phi = phi;
    return s;
}

StateSpec StateSpec::mixed() {
    StateSpec s;
    s.kind = Kind::mixed;
    return s;
}

StateSpec StateSpec::gaussian(int q0, int p0, double s_) {
    StateSpec s;
    s.kind = Kind::gaussian;
    s.q0 = q0;
    s.p0 = p0;
    s.s = s_;
    return s;
}

StateSpec StateSpec::raw(CVec amplitudes) {
    StateSpec s;
    s.kind = Kind::raw;
    s.amplitudes = std::move(amplitudes);
    return s;
}

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
}

int parse_int(const std::string& s) {
    try {
        size_t used = 0;
        int v = std::stoi(s, &used);
        if (used == s.size()) return v;
    } catch (const std::exception&) {
    }
    throw error("bad integer in state spec: '" + s + "'");
}

double parse_double(const std::string& s) {
    try {
        size_t used = 0;
        double v = std::stod(s, &used);
        if (used == s.size()) return v;
    } catch (const std::exception&) {
    }
    throw error("bad number in state spec: '" + s + "'");
}

CVec read_amplitude_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open amplitude file: " + path);
    std::vector<cxd> amps;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto parts = split(line, ',');
        if (parts.size() != 2) throw error("amplitude file line must be 're,im': '" + line + "'");
        amps.emplace_back(parse_double(parts[0]), parse_double(parts[1]));
    }
    CVec v(static_cast<int>(amps.size()));
    for (size_t i = 0; i < amps.size(); i++) v(static_cast<int>(i)) = amps[i];
    return v;
}

}  // namespace

StateSpec StateSpec::parse(const std::string& text) {
    auto colon = text.find(':');
    std::string head = text.substr(0, colon);
    std::string args = colon == std::string::npos ? "" : text.substr(colon + 1);

    if (head == "mixed" && colon == std::string::npos) return mixed();
    if (head == "pos") return position(parse_int(args));
    if (head == "mom") return momentum(parse_int(args));
    if (head == "super") {
        auto parts = split(args, ',');
        if (parts.size() != 3) throw error("super spec needs q0,q1,phi");
        return superposition(parse_int(parts[0]), parse_int(parts[1]), parse_double(parts[2]));
    }
    if (head == "gauss") {
        auto parts = split(args, ',');
        if (parts.size() != 3) throw error("gauss spec needs q0,p0,s");
        return gaussian(parse_int(parts[0]), parse_int(parts[1]), parse_double(parts[2]));
    }
    if (head == "raw") {
        if (args.empty() || args[0] != '@') throw error("raw spec needs @file");
        return raw(read_amplitude_file(args.substr(1)));
    }
    throw error("unknown state spec: '" + text + "'");
}

std::string StateSpec::describe() const {
    std::ostringstream out;
    switch (kind) {
        case Kind::position: out << "pos:" << q0; break;
        case Kind::momentum: out << "mom:" << k0; break;
        case Kind::superposition: out << "super:" << q0 << "," << q1 << "," << phi; break;
        case Kind::mixed: out << "mixed"; break;
        case Kind::gaussian: out << "gauss:" << q0 << "," << p0 << "," << s; break;
        case Kind::raw: out << "raw[" << amplitudes.size() << "]"; break;
    }
    return out.str();
}

namespace {

DensityMatrix pure(Dimension n, const CVec& psi) {
    return DensityMatrix(n, psi * psi.adjoint());
}

}  // namespace

DensityMatrix make_state(Dimension n, const StateSpec& spec) {
    const int d = n.n();
    switch (spec.kind) {
        case StateSpec::Kind::position: {
            CVec psi = CVec::Zero(d);
            psi(mod(spec.q0, d)) = 1.0;
            return pure(n, psi);
        }
        case StateSpec::Kind::momentum: {
            CVec psi = fourier(n).col(mod(spec.k0, d));
            return pure(n, psi);
        }
        case StateSpec::Kind::superposition: {
            int q0 = mod(spec.q0, d), q1 = mod(spec.q1, d);
            if (q0 == q1) throw error("superposition needs two distinct basis states");
            CVec psi = CVec::Zero(d);
            psi(q0) = 1.0 / std::sqrt(2.0);
            psi(q1) = std::polar(1.0 / std::sqrt(2.0), -spec.phi);
            return pure(n, psi);
        }
        case StateSpec::Kind::mixed:
            return DensityMatrix(n, CMat::Identity(d, d) / static_cast<double>(d));
        case StateSpec::Kind::gaussian:
            return gaussian_wavepacket(n, spec.q0, spec.p0, spec.s);
        case StateSpec::Kind::raw: {
            if (spec.amplitudes.size() != d)
                throw error("raw state has " + std::to_string(spec.amplitudes.size()) +
                            " amplitudes, expected " + std::to_string(d));
            double norm = spec.amplitudes.norm();
            if (norm < 1e-12) throw error("raw state has zero norm");
            CVec psi = spec.amplitudes / norm;
            return pure(n, psi);
        }
    }
    throw error("unreachable state kind");
}

DensityMatrix gaussian_wavepacket(Dimension n, int q0, int p0, double s) {
    if (!(s > 0)) throw error("gaussian width must be positive");
    const int d = n.n();
    CVec psi(d);
    for (int k = 0; k < d; k++) {
        cxd acc = 0;
        for (int m = -3; m <= 3; m++) {
            double x = k - q0 + m * d;
            // boost acts on the unwrapped coordinate k + mN; for integer p0
            // the mirror copies pick up full turns only
            acc += std::exp(-x * x / (4.0 * s * s)) *
                   std::polar(1.0, 2.0 * pi * p0 * (k + m * d) / static_cast<double>(d));
        }
        psi(k) = acc;
    }
    double norm = psi.norm();
    if (norm < 1e-300) throw error("gaussian wavepacket underflowed to zero");
    psi /= norm;
    return DensityMatrix(n, psi * psi.adjoint());
}

}  // namespace qtorus
