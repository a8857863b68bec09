#include "qosc/oscillator.hpp"

#include <cmath>
#include <vector>

#include "qosc/qseries.hpp"

namespace qosc {

namespace {

void check_mode(int n, Irrep ir) {
    if (n < 0 || n > ir.twoj) throw std::domain_error("mode index n out of range");
}

void check_node(int twos, Irrep ir) {
    if (twos < -ir.twoj || twos > ir.twoj || (twos + ir.twoj) % 2 != 0) {
        throw std::domain_error("position index twos out of range (parity of twoj required)");
    }
}

// log of the square-root weight in front of the dual q-Kravchuk polynomial:
//   q^{(j+s)/2 + n(n-1)/4} sqrt([2j, j+s]_{q^2} [2j, n]_q (1+q^{-2s}) / (2 (-q;q)_{2j}))
double log_prefactor(int n, int twos, Irrep ir, const QParam& qp) {
    const int jps = (ir.twoj + twos) / 2;  // j + s
    const QParam q2 = qp.squared();
    double lp = -qp.kappa * (0.5 * jps + 0.25 * n * (n - 1.0));
    lp += 0.5 * (q_binomial(ir.twoj, jps, q2).log_abs +
                 q_binomial(ir.twoj, n, qp).log_abs +
                 log1p_exp(qp.kappa * twos) -  // log(1 + q^{-2s})
                 std::log(2.0) - log_poch_neg_q(ir.twoj, qp));
    return lp;
}

}  // namespace

PositionGrid position_spectrum(Irrep ir, const QParam& qp) {
    const int d = ir.dim();
    Eigen::VectorXd x(d);
    for (int i = 0; i < d; ++i) {
        const int twos = ir.twos_of(i);
        if (qp.classical()) {
            x(i) = 0.5 * twos;
        } else {
            x(i) = std::sinh(0.5 * twos * qp.kappa) / (2.0 * std::sinh(0.5 * qp.kappa));
        }
    }
    return {ir, x};
}

Eigen::VectorXd energy_spectrum(Irrep ir) {
    Eigen::VectorXd e(ir.dim());
    for (int n = 0; n < ir.dim(); ++n) e(n) = n + 0.5;
    return e;
}

double dual_q_kravchuk(int n, int twos, Irrep ir, const QParam& qp) {
    check_mode(n, ir);
    check_node(twos, ir);
    return dual_q_kravchuk_sum(n, (ir.twoj - twos) / 2, ir.twoj, qp);
}

double classical_kravchuk_wavefunction(int n, int twos, int twoj) {
    Irrep ir(twoj);
    check_mode(n, ir);
    check_node(twos, ir);
    if (twos < 0) {
        // definite parity, kept exact by reflection
        const double v = classical_kravchuk_wavefunction(n, -twos, twoj);
        return (n % 2 == 0) ? v : -v;
    }
    const int jps = (twoj + twos) / 2;
    const int xi = (twoj - twos) / 2;
    const double lp = -0.5 * twoj * std::log(2.0) +
                      0.5 * (log_binomial(twoj, jps) + log_binomial(twoj, n));
    return std::exp(lp) * dual_q_kravchuk_sum(n, xi, twoj, QParam(1.0));
}

double wavefunction(int n, int twos, Irrep ir, const QParam& qp) {
    check_mode(n, ir);
    check_node(twos, ir);
    if (qp.classical()) return classical_kravchuk_wavefunction(n, twos, ir.twoj);
    if (twos < 0) {
        // parity reflection; also the numerically better half (the raw sum
        // cancels hardest for j - s > j)
        const double v = wavefunction(n, -twos, ir, qp);
        return (n % 2 == 0) ? v : -v;
    }
    const double ksum = dual_q_kravchuk_sum(n, (ir.twoj - twos) / 2, ir.twoj, qp);
    return std::exp(log_prefactor(n, twos, ir, qp)) * ksum;
}

WaveTable wave_table(Irrep ir, const QParam& qp) {
    // Columns are the eigenvectors of the position operator (the defining
    // eigenproblem of the position basis), sign-fixed by the positive ground
    // row and parity-symmetrized. The direct termwise sum of the dual
    // q-Kravchuk series (wavefunction()) loses all binary64 digits through
    // alternating-term cancellation beyond twoj ~ 14 at small q, so it serves
    // as a cross-check on its healthy range rather than as the builder.
    const int d = ir.dim();
    auto ops = position_momentum_hamiltonian(ir, qp);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(ops.q_op.mat.real());
    Eigen::MatrixXd phi = es.eigenvectors();
    for (int i = 0; i < d; ++i) {
        if (phi(0, i) < 0.0) phi.col(i) *= -1.0;
    }
    // exact parity: the column at -s is the column at s with odd modes negated
    for (int i = 0; 2 * i < d - 1; ++i) {
        for (int n = 0; n < d; ++n) {
            phi(n, i) = (n % 2 == 0) ? phi(n, d - 1 - i) : -phi(n, d - 1 - i);
        }
    }
    if (d % 2 == 1) {
        for (int n = 1; n < d; n += 2) phi(n, (d - 1) / 2) = 0.0;
    }
    return {ir, qp, phi};
}

Eigen::VectorXd gamma_vector(Irrep ir, const QParam& qp) {
    const int d = ir.dim();
    Eigen::VectorXd g(d);
    for (int i = 0; i < d; ++i) {
        const int twos = ir.twos_of(i);
        if (qp.classical()) {
            g(i) = std::exp(-0.5 * ir.twoj * std::log(2.0) +
                            0.5 * log_binomial(ir.twoj, (ir.twoj + twos) / 2));
        } else {
            g(i) = std::exp(log_prefactor(0, twos, ir, qp));
        }
    }
    return g;
}

Eigen::VectorXd position_eigvec_product_form(int twos, Irrep ir, const QParam& qp) {
    check_node(twos, ir);
    if (ir.twoj > 20) {
        throw std::domain_error(
            "position_eigvec_product_form: exact linear-scale convolution is "
            "limited to twoj <= 20");
    }
    const int d = ir.dim();
    const int jms = (ir.twoj - twos) / 2;  // j - s
    const int jps = (ir.twoj + twos) / 2;  // j + s

    // g_s(x) = gamma_s (q^{(1-2j)/4} x; q)_{j-s} (-q^{(1-2j)/4} x; q)_{j+s}
    const double alpha = qp.pow(0.25 * (1.0 - ir.twoj));
    std::vector<std::complex<double>> coef(d, 0.0);
    coef[0] = 1.0;
    auto mul_linear = [&](std::complex<double> c, int filled) {
        // poly *= (1 + c x)
        for (int p = filled; p >= 1; --p) coef[p] += c * coef[p - 1];
    };
    int deg = 0;
    for (int i = 0; i < jms; ++i) mul_linear(-alpha * qp.pow(i), ++deg);
    for (int i = 0; i < jps; ++i) mul_linear(alpha * qp.pow(i), ++deg);

    const double gs = gamma_vector(ir, qp)(ir.index_of_twos(twos));

    Eigen::VectorXd v(d);
    double imag_residue = 0.0;
    for (int p = 0; p < d; ++p) {
        // standard-basis constant at mode p: q^{(m^2-j^2)/4} [2j, p]_q^{1/2},
        // m^2 - j^2 = p (p - 2j)
        const double log_c = -qp.kappa * 0.25 * p * (p - ir.twoj) +
                             0.5 * q_binomial(ir.twoj, p, qp).log_abs;
        const std::complex<double> val = gs * coef[p] * std::exp(-log_c);
        v(p) = val.real();
        imag_residue = std::max(imag_residue, std::abs(val.imag()));
    }
    if (imag_residue > 1e-13 * std::max(1.0, v.cwiseAbs().maxCoeff())) {
        throw std::logic_error("position_eigvec_product_form: expansion is not real");
    }
    return v;
}

Report verify_wavetable(Irrep ir, const QParam& qp, double tol) {
    const double fac = tol / 1e-10;
    Report rep;
    rep.title = "oscillator";
    const int d = ir.dim();
    WaveTable wt = wave_table(ir, qp);
    const Eigen::MatrixXd& phi = wt.phi;
    const Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(d, d);

    rep.add("wavetable.orthonormality", (phi * phi.transpose() - eye).cwiseAbs().maxCoeff(),
            1e-10 * fac);
    rep.add("wavetable.completeness", (phi.transpose() * phi - eye).cwiseAbs().maxCoeff(),
            1e-10 * fac);

    double parity = 0.0;
    for (int n = 0; n < d; ++n) {
        for (int i = 0; i < d; ++i) {
            const double sign = (n % 2 == 0) ? 1.0 : -1.0;
            parity = std::max(parity, std::abs(phi(n, d - 1 - i) - sign * phi(n, i)));
        }
    }
    rep.add("wavetable.parity", parity, 1e-11 * fac);

    const Eigen::VectorXd g = gamma_vector(ir, qp);
    rep.add("wavetable.ground_state_is_gamma", (phi.row(0).transpose() - g).cwiseAbs().maxCoeff(),
            1e-12 * fac);
    rep.add("wavetable.ground_state_positive", g.minCoeff() > 0.0 ? 0.0 : 1.0, 0.5);
    rep.add("wavetable.gamma_norm", std::abs(g.squaredNorm() - 1.0), 1e-11 * fac);

    // Q phi_col(s) = x_s phi_col(s): ties the table to the operator matrices
    {
        auto ops = position_momentum_hamiltonian(ir, qp);
        PositionGrid grid = position_spectrum(ir, qp);
        const double xmax = std::max(1.0, grid.x.cwiseAbs().maxCoeff());
        double res = 0.0;
        for (int i = 0; i < d; ++i) {
            Eigen::VectorXcd col = phi.col(i).cast<std::complex<double>>();
            res = std::max(res, (ops.q_op.mat * col - grid.x(i) * col).cwiseAbs().maxCoeff());
        }
        rep.add("wavetable.eigen_equation", res, 1e-10 * fac * xmax);
    }

    if (ir.twoj <= 20) {
        double res = 0.0;
        for (int i = 0; i < d; ++i) {
            Eigen::VectorXd v = position_eigvec_product_form(ir.twos_of(i), ir, qp);
            res = std::max(res, (v - phi.col(i)).cwiseAbs().maxCoeff());
        }
        rep.add("wavetable.product_form_oracle", res, 1e-10 * fac);
    }

    if (ir.twoj <= 8) {
        // the termwise dual q-Kravchuk sum on its numerically healthy range
        double res = 0.0;
        for (int n = 0; n < d; ++n) {
            for (int i = 0; i < d; ++i) {
                res = std::max(res, std::abs(wavefunction(n, ir.twos_of(i), ir, qp) - phi(n, i)));
            }
        }
        rep.add("wavetable.dual_q_kravchuk_formula", res, 1e-10 * fac);
    }

    return rep;
}

}  // namespace qosc
