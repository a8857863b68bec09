// Fractional Fourier-q-Kravchuk transform: the unitary kernel on the sensor
// grid, built spectrally from the wavefunction table (primary path) and from
// the very-well-poised 8W7 closed form (validation path), plus the momentum
// eigenbasis and the Wigner little-d functions targeted by the q -> 1 limit.
#pragma once

#include <Eigen/Dense>

#include "qosc/oscillator.hpp"
#include "qosc/qnum.hpp"
#include "qosc/report.hpp"

namespace qosc {

enum class KernelBuild {
    Spectral,          // Phi^T diag(e^{-i pi n a/2}) Phi
    ClosedForm,        // gamma gamma' beta 8W7 per element
    IdentityDegenerate,  // a = 0 mod 4: t = 1, returned exactly
    ParityDegenerate,    // a = 2 mod 4: t = -1, exact antidiagonal
    ClassicalLittleD,    // q = 1 closed form via little-d
};

/// Unitary kernel K_{s,s'} of fractional power a, rows/columns indexed by
/// ascending twos. K(0) = I, K(a1)K(a2) = K(a1+a2), K(4) = I.
struct Kernel {
    Irrep irrep;
    QParam qp;
    double a = 0.0;
    Eigen::MatrixXcd mat;
    KernelBuild build = KernelBuild::Spectral;
};

/// Spectral construction; always-correct primary path. a is reduced mod 4.
Kernel kernel_spectral(Irrep ir, const QParam& qp, double a);

/// Closed-form construction. Degenerate phases (t = +-1) return the exact
/// identity/parity matrices; q = 1 uses the little-d classical kernel.
Kernel kernel_closed_form(Irrep ir, const QParam& qp, double a);

/// Finite signal sampled on the sensor grid.
struct Signal {
    Irrep irrep;
    Eigen::VectorXcd values;
};

/// Matrix-vector application; norm preserving.
Signal apply(const Kernel& k, const Signal& s);

/// Momentum eigenvectors as standard-basis coefficient columns,
/// column r = diag((-i)^n) Phi[:, r]; satisfies P v_r = -Y_r v_r with
/// Y_r = [2r]_q / 2.
Eigen::MatrixXcd momentum_eigvecs(Irrep ir, const QParam& qp);

/// Wigner little-d rotation matrix element d^j_{s,s'}(beta) (ascending-m
/// ordering, d = matrix element of e^{-i beta J2}).
double wigner_little_d(int twoj, int twos_row, int twos_col, double beta);

/// Closed-form ingredients exposed for cross-checks.
std::complex<double> kernel_beta_finite(Irrep ir, const QParam& qp, int twos, int twosp,
                                        std::complex<double> t);
std::complex<double> kernel_beta_infinite(Irrep ir, const QParam& qp, int twos, int twosp,
                                          std::complex<double> t);
std::complex<double> kernel_w87(Irrep ir, const QParam& qp, int twos, int twosp,
                                std::complex<double> t);
/// Same 8W7 value through its 4phi3 reduction (regularized prefactor).
std::complex<double> kernel_w87_via_phi43(Irrep ir, const QParam& qp, int twos, int twosp,
                                          std::complex<double> t);

/// Unitarity, group law, K^4 = 1, periodicity, parity conservation, the
/// closed-form/spectral agreement (twoj <= 8), the metaplectic sign of the
/// bare evolution operator, and the momentum/mode eigenrelations.
Report verify_transform(Irrep ir, const QParam& qp, double tol = 1e-10);

}  // namespace qosc
