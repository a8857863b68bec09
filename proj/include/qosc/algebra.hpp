// Dense matrix representations of su_q(2): standard generators, Casimir,
// the twisted position/momentum pair with algebraic spectrum, the Hamiltonian,
// and a verification suite for every commutation relation the model rests on.
#pragma once

#include <Eigen/Dense>

#include "qosc/qnum.hpp"
#include "qosc/report.hpp"

namespace qosc {

/// Representation label stored as 2j. Basis index n = 0..twoj is the mode
/// number; the J3 eigenvalue is m = n - j (stored doubled as twom = 2n - twoj).
struct Irrep {
    int twoj = 0;
    explicit Irrep(int twoj_) : twoj(twoj_) {
        if (twoj_ < 0) throw std::domain_error("Irrep: twoj must be >= 0");
    }
    int dim() const { return twoj + 1; }
    /// m as a double for basis index n.
    double m_of(int n) const { return 0.5 * (2 * n - twoj); }
    /// twos value of position index i (ascending): -twoj, -twoj+2, ..., twoj.
    int twos_of(int i) const { return 2 * i - twoj; }
    /// position index of a twos value.
    int index_of_twos(int twos) const { return (twos + twoj) / 2; }
};

/// Matrix in the standard (mode) basis, rows/columns ordered by increasing m.
struct OperatorMatrix {
    Irrep irrep;
    Eigen::MatrixXcd mat;
};

struct StandardGenerators {
    OperatorMatrix j3, jplus, jminus, j1, j2;
};

/// J3, J+/-, J1, J2 on the standard basis:
/// J3 f_m = m f_m, J+- f_m = sqrt([j+-m+1]_q [j-+m]_q) f_{m+-1}.
StandardGenerators standard_generators(Irrep ir, const QParam& qp);

struct Casimir {
    OperatorMatrix matrix;
    double eigenvalue;  // [j+1/2]_q^2 - 1/4
};

/// C_q = J+ J- + [J3 - 1/2]_q^2 - 1/4, a scalar on the irrep.
Casimir casimir(Irrep ir, const QParam& qp);

struct PositionMomentumHamiltonian {
    OperatorMatrix q_op;  // Q = q^{J3/4} J1 q^{J3/4}, real symmetric
    OperatorMatrix p_op;  // P = -q^{J3/4} J2 q^{J3/4}, Hermitian
    OperatorMatrix h_op;  // H = J3 + j + 1/2, diagonal n + 1/2
};

PositionMomentumHamiltonian position_momentum_hamiltonian(Irrep ir, const QParam& qp);

/// Diagonal of F_q with [Q,P] = i F_q: entry at m is
///   (e^{-2m kappa} cosh(kappa/2) - e^{-m kappa} cosh((j+1/2) kappa)) / (2 sinh(kappa/2)),
/// with the q = 1 limit -m. The sign convention relative to [Q,P] is resolved
/// empirically by verify_algebra against the explicit matrix commutator.
Eigen::VectorXd fq_diagonal(Irrep ir, const QParam& qp);

/// AB - BA; throws on irrep mismatch.
OperatorMatrix commutator(const OperatorMatrix& a, const OperatorMatrix& b);

/// Diagonal of Q^2 + P^2 (the circular phase-space section at fixed m):
///   ([j+1/2]_q^2 cosh(k/2) - q^{-1/2} [m-1/2]_q^2 + q^m coth(k/2)/2 - csch(k/2)/2) q^m.
/// As printed in the source material the q^{-1/2} weight is missing; the form
/// here is the one the explicit matrices satisfy (see verify_algebra, which
/// reports the residual of the unweighted variant as info).
double phase_space_section(double m, Irrep ir, const QParam& qp);

/// Max-abs-entry norm.
double max_abs(const Eigen::MatrixXcd& m);

/// Residual report over the full relation set: su_q(2) commutators, Hamilton
/// equations, [Q,P] against i*F_q (sign recorded in info["fq_sign"]), Casimir
/// scalarity and its Q,P form, the phase-space section, the Jacobi identity,
/// and the Q/P spectra against {[2s]_q / 2}.
/// tol rescales every threshold proportionally (tol = 1e-10 is the reference).
Report verify_algebra(Irrep ir, const QParam& qp, double tol = 1e-10);

}  // namespace qosc
