#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>

namespace qtorus {

using cxd = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;
using RMat = Eigen::MatrixXd;
using RVec = Eigen::VectorXd;

inline constexpr double pi = 3.14159265358979323846;

/// Base class for all library errors.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when a strip permutation is asked to move interference terms
/// that have no classical image.
class undefined_interference : public error {
public:
    explicit undefined_interference(const std::string& what) : error(what) {}
};

/// Floor-mod: result always in [0, m).
inline int mod(int a, int m) {
    int r = a % m;
    return r < 0 ? r + m : r;
}

inline long long mod_ll(long long a, long long m) {
    long long r = a % m;
    return r < 0 ? r + m : r;
}

/// Hilbert-space dimension N.  Only even N is supported: the trace and
/// projector identities the library is built on hold in that case, and the
/// phase-space grid has side 2N.  Dense storage caps N at 256.
class Dimension {
public:
    explicit Dimension(int n) : n_(n) {
        if (n < 2 || n % 2 != 0)
            throw error("dimension must be even and >= 2, got " + std::to_string(n));
        if (n > 256)
            throw error("dimension capped at 256 for dense storage, got " + std::to_string(n));
    }
    int n() const { return n_; }
    int grid() const { return 2 * n_; }  // side of the full torus grid

    friend bool operator==(Dimension a, Dimension b) { return a.n_ == b.n_; }
    friend bool operator!=(Dimension a, Dimension b) { return a.n_ != b.n_; }

private:
    int n_;
};

/// A point alpha = (q, p) on the 2N x 2N torus grid.
struct PhasePoint {
    int q = 0;
    int p = 0;

    PhasePoint() = default;
    PhasePoint(int q_, int p_) : q(q_), p(p_) {}

    PhasePoint reduced(int grid) const { return {mod(q, grid), mod(p, grid)}; }
    /// True iff both coordinates are even (after reduction).
    bool even() const { return mod(q, 2) == 0 && mod(p, 2) == 0; }

    friend PhasePoint operator+(PhasePoint a, PhasePoint b) { return {a.q + b.q, a.p + b.p}; }
    friend PhasePoint operator-(PhasePoint a, PhasePoint b) { return {a.q - b.q, a.p - b.p}; }
    friend bool operator==(PhasePoint a, PhasePoint b) { return a.q == b.q && a.p == b.p; }
};

/// Validation level for DensityMatrix construction.  `full` enforces the
/// whole physical contract; `basic` only Hermiticity and a sane trace, which
/// is what statistically reconstructed states can promise.
enum class Checks { full, basic };

/// N x N density matrix.  Construction validates Hermiticity, unit trace,
/// positive spectrum and purity bounds (under Checks::full).
class DensityMatrix {
public:
    DensityMatrix(Dimension n, CMat m, Checks checks = Checks::full);

    const CMat& matrix() const { return m_; }
    Dimension n() const { return n_; }
    int dim() const { return n_.n(); }

    double purity() const { return (m_ * m_).trace().real(); }

private:
    Dimension n_;
    CMat m_;
};

/// Real Wigner values on the full 2N x 2N grid, indexed (q, p).
class WignerGrid {
public:
    explicit WignerGrid(Dimension n) : n_(n), v_(RMat::Zero(n.grid(), n.grid())) {}

    Dimension n() const { return n_; }
    int grid() const { return n_.grid(); }

    double& at(int q, int p) { return v_(mod(q, grid()), mod(p, grid())); }
    double at(int q, int p) const { return v_(mod(q, grid()), mod(p, grid())); }

    const RMat& values() const { return v_; }
    RMat& values() { return v_; }

    double sum() const { return v_.sum(); }

    /// Sign relating the value at subgrid point (q,p) in G_N to its mirror at
    /// (q + sq*N, p + sp*N):  (-1)^(sp*q + sq*p + sq*sp*N).
    static int relation_sign(int q, int p, int sq, int sp, int n) {
        return (sp * q + sq * p + sq * sp * n) % 2 == 0 ? 1 : -1;
    }

    /// Fill the three mirror quadrants from the G_N block.
    void extend_from_subgrid();

    /// Max violation of the mirror redundancy over the grid.
    double relations_error() const;
    bool satisfies_relations(double tol = 1e-12) const { return relations_error() < tol; }

private:
    Dimension n_;
    RMat v_;
};

}  // namespace qtorus
