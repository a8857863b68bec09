// Equivalent potentials recovered from the nodeless ground state through
// second differences on the (generally non-uniform) sensor grid, with the
// closed forms for the Kravchuk (q = 1) and general-q cases.
#pragma once

#include <Eigen/Dense>

#include "qosc/algebra.hpp"
#include "qosc/qnum.hpp"
#include "qosc/report.hpp"

namespace qosc {

/// Ground-state samples plus the grid spacings the second difference needs.
/// neighbor_spacings has dim+1 entries: x_s - x_{s-1} for s = -j .. j+1,
/// including the ghost points at +-(j+1) where psi is taken as zero.
struct GroundStateProfile {
    Irrep irrep;
    Eigen::VectorXd psi;               // > 0 everywhere
    Eigen::VectorXd half_spacings;     // x_{s+1/2} - x_{s-1/2} = cosh(s kappa)
    Eigen::VectorXd neighbor_spacings; // length dim+1
};

/// Profile of the finite q-oscillator ground state gamma_s.
GroundStateProfile ground_state_profile(Irrep ir, const QParam& qp);

/// V(x_s) - E0 from the symmetric second difference
///   (1 / (2 psi(s) [x_{s+1/2}-x_{s-1/2}])) (nabla_R - nabla_L) psi(s),
/// with psi(+-(j+1)) = 0 at the endpoints. Output length = dim.
Eigen::VectorXd equivalent_potential_from_ground_state(const GroundStateProfile& p);

/// Kravchuk-system potential, V - E0 =
///   (sqrt((j+s)(j+s+1)) + sqrt((j-s)(j-s+1))) / (2 sqrt((j+1)^2 - s^2)) - 1.
double kravchuk_potential(int twos, int twoj);

/// General-q closed form of V(x_s) - E0 (dispatches to kravchuk_potential at q=1).
double q_potential_closed_form(int twos, Irrep ir, const QParam& qp);

/// psi(s+1)/psi(s) =
///   q^{-s-1/2} sqrt((cosh((s+1)k)/cosh(s k)) (sinh((j-s)k)/sinh((j+s+1)k))),
/// equal to gamma_{s+1}/gamma_s; extends to 0 at s = j.
double ground_state_ratio(int twos, Irrep ir, const QParam& qp);

/// Rises then falls (ties allowed); no sign rise after the first fall.
bool unimodal(const Eigen::VectorXd& v);

/// True when the oscillator ground state has no raised wings.
bool ground_state_unimodal(Irrep ir, const QParam& qp);

/// Grid-difference vs closed-form consistency, ratio/gamma identities.
Report verify_potential(Irrep ir, const QParam& qp, double tol = 1e-10);

}  // namespace qosc
