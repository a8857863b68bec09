#include "qosc/potential.hpp"

#include <cmath>

#include "qosc/oscillator.hpp"

namespace qosc {

namespace {

void check_node(int twos, int twoj) {
    if (twos < -twoj || twos > twoj || (twos + twoj) % 2 != 0) {
        throw std::domain_error("position index twos out of range");
    }
}

}  // namespace

GroundStateProfile ground_state_profile(Irrep ir, const QParam& qp) {
    const int d = ir.dim();
    GroundStateProfile p{ir, gamma_vector(ir, qp), Eigen::VectorXd(d), Eigen::VectorXd(d + 1)};
    for (int i = 0; i < d; ++i) {
        const double s = 0.5 * ir.twos_of(i);
        p.half_spacings(i) = std::cosh(s * qp.kappa);
    }
    for (int i = 0; i <= d; ++i) {
        // x_s - x_{s-1} = cosh((s - 1/2) kappa) at s = -j + i
        const double s = 0.5 * (2 * i - ir.twoj);
        p.neighbor_spacings(i) = std::cosh((s - 0.5) * qp.kappa);
    }
    return p;
}

Eigen::VectorXd equivalent_potential_from_ground_state(const GroundStateProfile& p) {
    const int d = p.irrep.dim();
    if (p.psi.size() != d || p.half_spacings.size() != d || p.neighbor_spacings.size() != d + 1) {
        throw std::domain_error("equivalent_potential: profile sizes are inconsistent");
    }
    Eigen::VectorXd v(d);
    for (int i = 0; i < d; ++i) {
        if (!(p.psi(i) > 0.0)) {
            throw std::domain_error("equivalent_potential: ground state must be positive");
        }
        const double psi_r = (i + 1 < d) ? p.psi(i + 1) : 0.0;
        const double psi_l = (i > 0) ? p.psi(i - 1) : 0.0;
        const double right = (psi_r - p.psi(i)) / p.neighbor_spacings(i + 1);
        const double left = (p.psi(i) - psi_l) / p.neighbor_spacings(i);
        v(i) = (right - left) / (2.0 * p.half_spacings(i) * p.psi(i));
    }
    return v;
}

double kravchuk_potential(int twos, int twoj) {
    check_node(twos, twoj);
    const double jps = 0.5 * (twoj + twos);
    const double jms = 0.5 * (twoj - twos);
    const double s = 0.5 * twos;
    const double j = 0.5 * twoj;
    return (std::sqrt(jps * (jps + 1.0)) + std::sqrt(jms * (jms + 1.0))) /
               (2.0 * std::sqrt((j + 1.0) * (j + 1.0) - s * s)) -
           1.0;
}

double q_potential_closed_form(int twos, Irrep ir, const QParam& qp) {
    check_node(twos, ir.twoj);
    if (qp.classical()) return kravchuk_potential(twos, ir.twoj);
    const double k = qp.kappa;
    const double s = 0.5 * twos;
    const double j = 0.5 * ir.twoj;
    const double ch_s = std::cosh(s * k);
    const double ch_p = std::cosh((s + 0.5) * k);
    const double ch_m = std::cosh((s - 0.5) * k);
    const double t1 = qp.pow(s) * (ch_p / ch_s) *
                      std::sqrt((std::cosh((s - 1.0) * k) / ch_s) *
                                (std::sinh((j + s) * k) / std::sinh((j - s + 1.0) * k)));
    const double t2 = qp.pow(-s) * (ch_m / ch_s) *
                      std::sqrt((std::cosh((s + 1.0) * k) / ch_s) *
                                (std::sinh((j - s) * k) / std::sinh((j + s + 1.0) * k)));
    const double t3 = -2.0 * qp.pow(0.5) * std::cosh(0.5 * k);
    return (t1 + t2 + t3) / (2.0 * qp.pow(0.5) * ch_p * ch_m);
}

double ground_state_ratio(int twos, Irrep ir, const QParam& qp) {
    check_node(twos, ir.twoj);
    if (twos == ir.twoj) return 0.0;  // sinh((j-s) kappa) vanishes
    const double s = 0.5 * twos;
    const double j = 0.5 * ir.twoj;
    if (qp.classical()) return std::sqrt((j - s) / (j + s + 1.0));
    const double k = qp.kappa;
    return qp.pow(-s - 0.5) *
           std::sqrt((std::cosh((s + 1.0) * k) / std::cosh(s * k)) *
                     (std::sinh((j - s) * k) / std::sinh((j + s + 1.0) * k)));
}

bool unimodal(const Eigen::VectorXd& v) {
    bool rising = true;
    for (int i = 0; i + 1 < v.size(); ++i) {
        const double d = v(i + 1) - v(i);
        if (rising) {
            if (d < 0.0) rising = false;
        } else if (d > 0.0) {
            return false;
        }
    }
    return true;
}

bool ground_state_unimodal(Irrep ir, const QParam& qp) {
    return unimodal(gamma_vector(ir, qp));
}

Report verify_potential(Irrep ir, const QParam& qp, double tol) {
    const double fac = tol / 1e-10;
    Report rep;
    rep.title = "potential";
    const int d = ir.dim();

    const GroundStateProfile prof = ground_state_profile(ir, qp);
    const Eigen::VectorXd v_grid = equivalent_potential_from_ground_state(prof);
    double res = 0.0;
    for (int i = 0; i < d; ++i) {
        res = std::max(res, std::abs(v_grid(i) - q_potential_closed_form(ir.twos_of(i), ir, qp)));
    }
    rep.add("potential.closed_vs_grid", res, 1e-9 * (tol / 1e-10));

    const Eigen::VectorXd g = gamma_vector(ir, qp);
    double ratio_res = 0.0;
    double ratio_scale = 1.0;
    double telescope = 1.0;
    for (int i = 0; i + 1 < d; ++i) {
        const double r = ground_state_ratio(ir.twos_of(i), ir, qp);
        telescope *= r;
        ratio_scale = std::max(ratio_scale, r);
        ratio_res = std::max(ratio_res, std::abs(r - g(i + 1) / g(i)));
    }
    rep.add("potential.ratio_vs_gamma", ratio_res, 1e-11 * fac * ratio_scale);
    if (d > 1) {
        rep.add("potential.ratio_telescopes",
                std::abs(telescope - g(d - 1) / g(0)) / std::max(1e-300, g(d - 1) / g(0)),
                1e-9 * fac);
    }
    rep.info["ground_state_unimodal"] = unimodal(g) ? 1.0 : 0.0;
    return rep;
}

}  // namespace qosc
