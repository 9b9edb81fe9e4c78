#include "qtorus/types.hpp"

#include <Eigen/Eigenvalues>

namespace qtorus {

DensityMatrix::DensityMatrix(Dimension n, CMat m, Checks checks) : n_(n), m_(std::move(m)) {
    const int d = n_.n();
    if (m_.rows() != d || m_.cols() != d)
        throw error("density matrix must be " + std::to_string(d) + "x" + std::to_string(d));

    double herm = (m_ - m_.adjoint()).cwiseAbs().maxCoeff();
    double herm_tol = checks == Checks::full ? 1e-12 : 1e-10;
    if (herm >= herm_tol)
        throw error("density matrix is not Hermitian (deviation " + std::to_string(herm) + ")");

    double tr_err = std::abs(m_.trace() - cxd(1.0, 0.0));
    // basic: shot-noise reconstructions carry trace error ~ 1/sqrt(shots)
    if (tr_err >= (checks == Checks::full ? 1e-12 : 5e-2))
        throw error("density matrix trace differs from 1 by " + std::to_string(tr_err));

    if (checks == Checks::full) {
        Eigen::SelfAdjointEigenSolver<CMat> es((m_ + m_.adjoint()) / 2.0);
        if (es.eigenvalues().minCoeff() < -1e-10)
            throw error("density matrix has a negative eigenvalue: " +
                        std::to_string(es.eigenvalues().minCoeff()));
        double pur = purity();
        if (pur < 1.0 / d - 1e-10 || pur > 1.0 + 1e-10)
            throw error("density matrix purity out of range: " + std::to_string(pur));
    }
}

void WignerGrid::extend_from_subgrid() {
    const int n = n_.n();
    for (int q = 0; q < n; q++)
        for (int p = 0; p < n; p++) {
            double base = v_(q, p);
            v_(q + n, p) = base * relation_sign(q, p, 1, 0, n);
            v_(q, p + n) = base * relation_sign(q, p, 0, 1, n);
            v_(q + n, p + n) = base * relation_sign(q, p, 1, 1, n);
        }
}

double WignerGrid::relations_error() const {
    const int n = n_.n();
    double worst = 0;
    for (int q = 0; q < n; q++)
        for (int p = 0; p < n; p++) {
            double base = v_(q, p);
            worst = std::max(worst, std::abs(v_(q + n, p) - base * relation_sign(q, p, 1, 0, n)));
            worst = std::max(worst, std::abs(v_(q, p + n) - base * relation_sign(q, p, 0, 1, n)));
            worst = std::max(worst,
                             std::abs(v_(q + n, p + n) - base * relation_sign(q, p, 1, 1, n)));
        }
    return worst;
}

}  // namespace qtorus
