#include "qosc/algebra.hpp"

#include <algorithm>
#include <cmath>

namespace qosc {

namespace {
constexpr std::complex<double> kI{0.0, 1.0};
}

StandardGenerators standard_generators(Irrep ir, const QParam& qp) {
    const int d = ir.dim();
    Eigen::MatrixXcd j3 = Eigen::MatrixXcd::Zero(d, d);
    Eigen::MatrixXcd jp = Eigen::MatrixXcd::Zero(d, d);
    Eigen::MatrixXcd jm = Eigen::MatrixXcd::Zero(d, d);
    for (int n = 0; n < d; ++n) j3(n, n) = ir.m_of(n);
    for (int n = 0; n + 1 < d; ++n) {
        // J+ f_m = sqrt([j+m+1]_q [j-m]_q) f_{m+1}; in mode index,
        // <n+1|J+|n> = sqrt([n+1]_q [2j-n]_q)
        const double amp = std::sqrt(q_number(n + 1, qp) * q_number(ir.twoj - n, qp));
        jp(n + 1, n) = amp;
        jm(n, n + 1) = amp;
    }
    Eigen::MatrixXcd j1 = 0.5 * (jp + jm);
    Eigen::MatrixXcd j2 = (jp - jm) / (2.0 * kI);
    return {{ir, j3}, {ir, jp}, {ir, jm}, {ir, j1}, {ir, j2}};
}

Casimir casimir(Irrep ir, const QParam& qp) {
    auto g = standard_generators(ir, qp);
    const int d = ir.dim();
    Eigen::MatrixXcd c = g.jplus.mat * g.jminus.mat;
    for (int n = 0; n < d; ++n) {
        const double mq = q_number(ir.m_of(n) - 0.5, qp);
        c(n, n) += mq * mq - 0.25;
    }
    const double jq = q_number(0.5 * ir.twoj + 0.5, qp);
    return {{ir, c}, jq * jq - 0.25};
}

PositionMomentumHamiltonian position_momentum_hamiltonian(Irrep ir, const QParam& qp) {
    auto g = standard_generators(ir, qp);
    const int d = ir.dim();
    // q^{J3/4} applied as entrywise scaling of rows and columns
    Eigen::VectorXd scale(d);
    for (int n = 0; n < d; ++n) scale(n) = qp.pow(0.25 * ir.m_of(n));
    Eigen::MatrixXcd q_mat = Eigen::MatrixXcd::Zero(d, d);
    Eigen::MatrixXcd p_mat = Eigen::MatrixXcd::Zero(d, d);
    for (int r = 0; r < d; ++r) {
        for (int c = 0; c < d; ++c) {
            q_mat(r, c) = scale(r) * g.j1.mat(r, c) * scale(c);
            p_mat(r, c) = -scale(r) * g.j2.mat(r, c) * scale(c);
        }
    }
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(d, d);
    for (int n = 0; n < d; ++n) h(n, n) = n + 0.5;
    return {{ir, q_mat}, {ir, p_mat}, {ir, h}};
}

Eigen::VectorXd fq_diagonal(Irrep ir, const QParam& qp) {
    const int d = ir.dim();
    Eigen::VectorXd f(d);
    for (int n = 0; n < d; ++n) {
        const double m = ir.m_of(n);
        if (qp.classical()) {
            f(n) = -m;
        } else {
            const double kap = qp.kappa;
            f(n) = (std::exp(-2.0 * m * kap) * std::cosh(0.5 * kap) -
                    std::exp(-m * kap) * std::cosh((0.5 * ir.twoj + 0.5) * kap)) /
                   (2.0 * std::sinh(0.5 * kap));
        }
    }
    return f;
}

OperatorMatrix commutator(const OperatorMatrix& a, const OperatorMatrix& b) {
    if (a.irrep.twoj != b.irrep.twoj) {
        throw std::domain_error("commutator: operators live in different irreps");
    }
    return {a.irrep, a.mat * b.mat - b.mat * a.mat};
}

double phase_space_section(double m, Irrep ir, const QParam& qp) {
    const double j = 0.5 * ir.twoj;
    if (qp.classical()) {
        return (j + 0.5) * (j + 0.5) - (m - 0.5) * (m - 0.5) - m;
    }
    const double kap = qp.kappa;
    const double jq = q_number(j + 0.5, qp);
    const double mq = q_number(m - 0.5, qp);
    const double qm = std::exp(-kap * m);  // q^m
    const double paren = jq * jq * std::cosh(0.5 * kap) - qp.pow(-0.5) * mq * mq +
                         0.5 * qm * std::cosh(0.5 * kap) / std::sinh(0.5 * kap) -
                         0.5 / std::sinh(0.5 * kap);
    return paren * qm;
}

double max_abs(const Eigen::MatrixXcd& m) {
    return m.cwiseAbs().maxCoeff();
}

namespace {

// Printed variant of the section (no q^{-1/2} weight); kept for diagnostics.
double section_unweighted(double m, Irrep ir, const QParam& qp) {
    const double j = 0.5 * ir.twoj;
    if (qp.classical()) {
        return (j + 0.5) * (j + 0.5) - (m - 0.5) * (m - 0.5) - m;
    }
    const double kap = qp.kappa;
    const double jq = q_number(j + 0.5, qp);
    const double mq = q_number(m - 0.5, qp);
    const double qm = std::exp(-kap * m);
    const double paren = jq * jq * std::cosh(0.5 * kap) - mq * mq +
                         0.5 * qm * std::cosh(0.5 * kap) / std::sinh(0.5 * kap) -
                         0.5 / std::sinh(0.5 * kap);
    return paren * qm;
}

// D_q(m) completing the Casimir in Q,P form:
// C = sech(k/2) (Q^2+P^2) e^{kappa J3} + D_q(J3).
double casimir_qp_offset(double m, Irrep ir, const QParam& qp) {
    if (qp.classical()) {
        // classical: C = Q^2 + P^2 + (m-1/2)^2 + m - 1/4 at J3 = m
        return (m - 0.5) * (m - 0.5) + m - 0.25;
    }
    const double kap = qp.kappa;
    const double sech = 1.0 / std::cosh(0.5 * kap);
    const double mq = q_number(m - 0.5, qp);
    const double qm = std::exp(-kap * m);
    return sech * (qp.pow(-0.5) * mq * mq -
                   0.5 * qm * std::cosh(0.5 * kap) / std::sinh(0.5 * kap) +
                   0.5 / std::sinh(0.5 * kap)) -
           0.25;
}

}  // namespace

Report verify_algebra(Irrep ir, const QParam& qp, double tol) {
    const double fac = tol / 1e-10;
    Report rep;
    rep.title = "algebra";
    const int d = ir.dim();

    auto g = standard_generators(ir, qp);
    auto ops = position_momentum_hamiltonian(ir, qp);
    const Eigen::MatrixXcd& Q = ops.q_op.mat;
    const Eigen::MatrixXcd& P = ops.p_op.mat;
    const Eigen::MatrixXcd& H = ops.h_op.mat;

    const double norm_jp = std::max(1.0, max_abs(g.jplus.mat));
    const double norm_q = std::max(1.0, max_abs(Q));

    // su_q(2) relations
    rep.add("su_q2.[J3,J+]-J+",
            max_abs(commutator(g.j3, g.jplus).mat - g.jplus.mat), 1e-11 * fac);
    rep.add("su_q2.[J3,J-]+J-",
            max_abs(commutator(g.j3, g.jminus).mat + g.jminus.mat), 1e-11 * fac);
    {
        Eigen::MatrixXcd expect = Eigen::MatrixXcd::Zero(d, d);
        for (int n = 0; n < d; ++n) expect(n, n) = q_number(2.0 * ir.m_of(n), qp);
        rep.add("su_q2.[J+,J-]-[2J3]_q",
                max_abs(commutator(g.jplus, g.jminus).mat - expect),
                1e-10 * fac * norm_jp * norm_jp);
    }

    // Hamilton equations
    rep.add("hamilton.[H,Q]+iP", max_abs(commutator(ops.h_op, ops.q_op).mat + kI * P),
            1e-10 * fac * norm_q);
    rep.add("hamilton.[H,P]-iQ", max_abs(commutator(ops.h_op, ops.p_op).mat - kI * Q),
            1e-10 * fac * norm_q);

    // [Q,P]: diagonal, and equal to +-i F_q with one global sign
    {
        Eigen::MatrixXcd qp_comm = commutator(ops.q_op, ops.p_op).mat;
        Eigen::MatrixXcd offdiag = qp_comm;
        offdiag.diagonal().setZero();
        rep.add("qp.commutator_diagonal", max_abs(offdiag), 1e-10 * fac * norm_q * norm_q);

        const Eigen::VectorXd fq = fq_diagonal(ir, qp);
        const double fq_scale = std::max(1.0, fq.cwiseAbs().maxCoeff());
        double res_plus = 0.0, res_minus = 0.0;
        for (int n = 0; n < d; ++n) {
            res_plus = std::max(res_plus, std::abs(qp_comm(n, n) - kI * fq(n)));
            res_minus = std::max(res_minus, std::abs(qp_comm(n, n) + kI * fq(n)));
        }
        const int sign = res_plus <= res_minus ? +1 : -1;
        rep.info["fq_sign"] = sign;
        rep.add("qp.commutator_vs_fq", std::min(res_plus, res_minus),
                1e-10 * fac * fq_scale);
    }

    // Casimir: scalar, and its Q,P form
    {
        auto cas = casimir(ir, qp);
        const double scale = std::max(1.0, max_abs(cas.matrix.mat));
        Eigen::MatrixXcd dev = cas.matrix.mat;
        dev.diagonal().array() -= cas.eigenvalue;
        rep.add("casimir.scalar", max_abs(dev), 1e-12 * fac * scale);

        const double sech = qp.classical() ? 1.0 : 1.0 / std::cosh(0.5 * qp.kappa);
        Eigen::MatrixXcd qp_form = Q * Q + P * P;
        for (int col = 0; col < d; ++col) {
            qp_form.col(col) *= sech * qp.pow(-ir.m_of(col));  // right-multiply e^{kappa J3}
        }
        for (int n = 0; n < d; ++n) qp_form(n, n) += casimir_qp_offset(ir.m_of(n), ir, qp);
        rep.add("casimir.qp_form", max_abs(cas.matrix.mat - qp_form), 1e-9 * fac * scale);
    }

    // Phase-space section: [J3, Q^2+P^2] = 0 and the diagonal closed form
    {
        Eigen::MatrixXcd qq_pp = Q * Q + P * P;
        rep.add("section.[J3,Q2+P2]",
                max_abs(g.j3.mat * qq_pp - qq_pp * g.j3.mat), 1e-12 * fac * norm_q * norm_q);
        double res = 0.0, res_unweighted = 0.0, scale = 1.0;
        for (int n = 0; n < d; ++n) {
            const double sec = phase_space_section(ir.m_of(n), ir, qp);
            scale = std::max(scale, std::abs(sec));
            res = std::max(res, std::abs(qq_pp(n, n).real() - sec));
            res_unweighted = std::max(
                res_unweighted, std::abs(qq_pp(n, n).real() - section_unweighted(ir.m_of(n), ir, qp)));
        }
        rep.add("section.diagonal", res, 1e-9 * fac * scale);
        rep.info["section_unweighted_residual"] = res_unweighted;
    }

    // Jacobi identity
    {
        Eigen::MatrixXcd jac = commutator(ops.p_op, commutator(ops.h_op, ops.q_op)).mat +
                               commutator(ops.q_op, commutator(ops.p_op, ops.h_op)).mat +
                               commutator(ops.h_op, commutator(ops.q_op, ops.p_op)).mat;
        rep.add("jacobi", max_abs(jac), 1e-12 * fac * norm_q * norm_q * std::max(1.0, max_abs(H)));
    }

    // Spectra: eig(Q) = {[2s]_q / 2}, eig(P) = eig(Q); H diagonal n + 1/2
    {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(Q.real());
        Eigen::VectorXd x(d);
        for (int i = 0; i < d; ++i) x(i) = 0.5 * q_number(ir.twos_of(i), qp);
        const double xmax = std::max(1e-30, x.cwiseAbs().maxCoeff());
        rep.add("spectrum.Q", (es.eigenvalues() - x).cwiseAbs().maxCoeff(), 1e-10 * fac * xmax);

        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> esp(P);
        rep.add("spectrum.P_equals_Q",
                (esp.eigenvalues() - es.eigenvalues()).cwiseAbs().maxCoeff(), 1e-10 * fac * xmax);

        double hres = 0.0;
        for (int n = 0; n < d; ++n) hres = std::max(hres, std::abs(H(n, n) - (n + 0.5)));
        rep.add("spectrum.H", hres, 1e-12 * fac);
    }

    return rep;
}

}  // namespace qosc
