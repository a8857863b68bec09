// Finite q-oscillator wavefunctions: the non-uniform position grid
// x_s = [2s]_q / 2, the dual q-Kravchuk mode functions Phi_n(x_s), their
// classical (Kravchuk) limit, and the polynomial-expansion oracle for the
// position eigenvectors.
#pragma once

#include <Eigen/Dense>

#include "qosc/algebra.hpp"
#include "qosc/qnum.hpp"
#include "qosc/report.hpp"

namespace qosc {

/// Position grid x[i] = sinh(s kappa) / (2 sinh(kappa/2)) at twos = 2i - twoj.
/// Strictly increasing and odd; equally spaced integers/half-integers at q = 1.
struct PositionGrid {
    Irrep irrep;
    Eigen::VectorXd x;
};

PositionGrid position_spectrum(Irrep ir, const QParam& qp);

/// Energy spectrum E_n = n + 1/2, n = 0..twoj.
Eigen::VectorXd energy_spectrum(Irrep ir);

/// Dual q-Kravchuk polynomial value at node s (twos doubled index), mode n.
double dual_q_kravchuk(int n, int twos, Irrep ir, const QParam& qp);

/// Mode-n wavefunction sampled at position node twos.
double wavefunction(int n, int twos, Irrep ir, const QParam& qp);

/// q = 1 wavefunction 2^-j sqrt(C(2j,j+s) C(2j,n)) K_n(j-s; 1/2, 2j).
/// Values at twos < 0 are produced by the exact parity reflection.
double classical_kravchuk_wavefunction(int n, int twos, int twoj);

/// Full mode/position overlap table, phi(n, i) = Phi_n(x at index i).
/// Real orthogonal: rows and columns are orthonormal.
struct WaveTable {
    Irrep irrep;
    QParam qp;
    Eigen::MatrixXd phi;
};

WaveTable wave_table(Irrep ir, const QParam& qp);

/// Ground-state samples gamma_s = Phi_0(x_s) > 0, unit norm.
Eigen::VectorXd gamma_vector(Irrep ir, const QParam& qp);

/// Expands the degree-2j product form of the position eigenfunction at node s
/// into standard-basis coefficients (exact polynomial convolution; twoj <= 20).
/// Independent oracle for the WaveTable column at s.
Eigen::VectorXd position_eigvec_product_form(int twos, Irrep ir, const QParam& qp);

/// Orthogonality/completeness/parity/eigen-equation residuals for the table;
/// the product-form cross-check runs when twoj <= 20.
Report verify_wavetable(Irrep ir, const QParam& qp, double tol = 1e-10);

}  // namespace qosc
