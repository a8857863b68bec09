#include "qosc/transform.hpp"

#include <cmath>
#include <numbers>

#include "qosc/qseries.hpp"

namespace qosc {

namespace {

constexpr std::complex<double> kI{0.0, 1.0};
constexpr double kPi = std::numbers::pi;

double reduce_mod4(double a) {
    double r = std::fmod(a, 4.0);
    if (r < 0.0) r += 4.0;
    return r;
}

// (-i)^k for any integer k, exact.
std::complex<double> minus_i_pow(long long k) {
    switch (((k % 4) + 4) % 4) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, -1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, 1.0};
    }
}

Eigen::MatrixXcd parity_matrix(int d) {
    Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(d, d);
    for (int i = 0; i < d; ++i) p(i, d - 1 - i) = 1.0;
    return p;
}

// Exact classical kernel e^{-i pi j a/2} (-i)^{s-s'} d^j_{s,s'}(pi a / 2).
Eigen::MatrixXcd little_d_kernel(Irrep ir, double a) {
    const int d = ir.dim();
    const double beta = 0.5 * kPi * a;
    const std::complex<double> phase = std::exp(-kI * (0.25 * kPi * a * ir.twoj));
    Eigen::MatrixXcd k(d, d);
    for (int i = 0; i < d; ++i) {
        for (int ip = 0; ip < d; ++ip) {
            const int diff = (ir.twos_of(i) - ir.twos_of(ip)) / 2;
            k(i, ip) = phase * minus_i_pow(diff) *
                       wigner_little_d(ir.twoj, ir.twos_of(i), ir.twos_of(ip), beta);
        }
    }
    return k;
}

}  // namespace

Kernel kernel_spectral(Irrep ir, const QParam& qp, double a) {
    const int d = ir.dim();
    const double am = reduce_mod4(a);
    if (am == 0.0) {
        return {ir, qp, a, Eigen::MatrixXcd::Identity(d, d), KernelBuild::IdentityDegenerate};
    }
    WaveTable wt = wave_table(ir, qp);
    Eigen::VectorXcd phases(d);
    for (int n = 0; n < d; ++n) phases(n) = std::exp(-kI * (0.5 * kPi * n * am));
    Eigen::MatrixXcd k = wt.phi.transpose().cast<std::complex<double>>() *
                         phases.asDiagonal() * wt.phi.cast<std::complex<double>>();
    return {ir, qp, a, std::move(k), KernelBuild::Spectral};
}

std::complex<double> kernel_beta_finite(Irrep ir, const QParam& qp, int twos, int twosp,
                                        std::complex<double> t) {
    const int jms = (ir.twoj - twos) / 2;    // j - s
    const int jmsp = (ir.twoj - twosp) / 2;  // j - s'
    // j + 2s + s' may be negative; q_pochhammer_int handles that convention
    const int len_mixed = (ir.twoj + 2 * twos + twosp) / 2;
    const std::complex<double> num =
        q_pochhammer_int(qp.pow(0.5 * (twos - ir.twoj)) * t, qp, jmsp) *
        q_pochhammer_int(qp.pow(0.5 * (twosp - ir.twoj)) * t, qp, jms) *
        q_pochhammer_int(-qp.pow(-0.5 * (ir.twoj + twosp)) * t, qp, jms) *
        q_pochhammer_int(-qp.pow(-0.5 * (ir.twoj + twos)) * t, qp, len_mixed);
    const std::complex<double> den =
        q_pochhammer_int(-qp.pow(-static_cast<double>(ir.twoj)) * t, qp, ir.twoj);
    return num / den;
}

std::complex<double> kernel_beta_infinite(Irrep ir, const QParam& qp, int twos, int twosp,
                                          std::complex<double> t) {
    const double j2 = ir.twoj;
    auto qs = [&](double e) { return qp.pow(e); };
    const double s = 0.5 * twos, sp = 0.5 * twosp, j = 0.5 * j2;
    const std::complex<double> num = q_pochhammer_inf(qs(s - j) * t, qp) *
                                     q_pochhammer_inf(-qs(-j - s) * t, qp) *
                                     q_pochhammer_inf(qs(sp - j) * t, qp) *
                                     q_pochhammer_inf(-qs(-j - sp) * t, qp) *
                                     q_pochhammer_inf(-t, qp);
    const std::complex<double> den = q_pochhammer_inf(qs(s - sp) * t, qp) *
                                     q_pochhammer_inf(-qs(s + sp) * t, qp) *
                                     q_pochhammer_inf(qs(sp - s) * t, qp) *
                                     q_pochhammer_inf(-qs(-s - sp) * t, qp) *
                                     q_pochhammer_inf(-qs(-2.0 * j) * t, qp);
    return num / den;
}

std::complex<double> kernel_w87(Irrep ir, const QParam& qp, int twos, int twosp,
                                std::complex<double> t) {
    // 8W7(-q^{-2j-1} t; q^{s-j}, -q^{-j-s}, q^{s'-j}, -q^{-j-s'}, -t; q, -t)
    const double j = 0.5 * ir.twoj, s = 0.5 * twos, sp = 0.5 * twosp;
    return w8_7(-qp.pow(-(ir.twoj + 1.0)) * t, qp.pow(s - j), -qp.pow(-(j + s)),
                qp.pow(sp - j), -qp.pow(-(j + sp)), -t, qp, -t);
}

std::complex<double> kernel_w87_via_phi43(Irrep ir, const QParam& qp, int twos, int twosp,
                                          std::complex<double> t) {
    // Watson transformation of the terminating very-well-poised 8W7:
    //   8W7 = (-q^{-2j}t, t, q^{-j-s'}, -q^{s'-j};q)_inf /
    //         (-q^{-j-s'}t, q^{-j+s'}t, q^{-2j}, -1;q)_inf
    //         * 4phi3(q^{s'-j}, -q^{-j-s'}, t, -t; -q^{-j-s}t, q^{-j+s}t, -q; q, q).
    // The (1;q)_inf zero shared by (q^{-j-s'};q)_inf and (q^{-2j};q)_inf is
    // regularized into finite products of lengths j+s' and 2j.
    const double j = 0.5 * ir.twoj, s = 0.5 * twos, sp = 0.5 * twosp;
    const int jpsp = (ir.twoj + twosp) / 2;
    const std::complex<double> pref =
        q_pochhammer_inf(-qp.pow(-static_cast<double>(ir.twoj)) * t, qp) *
        q_pochhammer_inf(t, qp) *
        q_pochhammer(qp.pow(-(j + sp)), qp, jpsp) *
        q_pochhammer_inf(-qp.pow(sp - j), qp) /
        (q_pochhammer_inf(-qp.pow(-(j + sp)) * t, qp) *
         q_pochhammer_inf(qp.pow(sp - j) * t, qp) *
         q_pochhammer(qp.pow(-static_cast<double>(ir.twoj)), qp, ir.twoj) *
         q_pochhammer_inf(std::complex<double>(-1.0, 0.0), qp));
    const std::complex<double> series =
        basic_phi({qp.pow(sp - j), -qp.pow(-(j + sp)), t, -t},
                  {-qp.pow(-(j + s)) * t, qp.pow(s - j) * t, -qp.q}, qp, qp.q);
    return pref * series;
}

Kernel kernel_closed_form(Irrep ir, const QParam& qp, double a) {
    const int d = ir.dim();
    const double am = reduce_mod4(a);
    if (am == 0.0) {
        return {ir, qp, a, Eigen::MatrixXcd::Identity(d, d), KernelBuild::IdentityDegenerate};
    }
    if (am == 2.0) {
        // t = -1 makes the t-dependent products degenerate; the kernel is the
        // exact parity matrix there (phases e^{-i pi n} = (-1)^n).
        return {ir, qp, a, parity_matrix(d), KernelBuild::ParityDegenerate};
    }
    if (qp.classical()) {
        return {ir, qp, a, little_d_kernel(ir, am), KernelBuild::ClassicalLittleD};
    }
    const std::complex<double> t = std::exp(-kI * (0.5 * kPi * am));
    const Eigen::VectorXd g = gamma_vector(ir, qp);
    Eigen::MatrixXcd k(d, d);
    for (int i = 0; i < d; ++i) {
        for (int ip = 0; ip < d; ++ip) {
            const int twos = ir.twos_of(i), twosp = ir.twos_of(ip);
            k(i, ip) = g(i) * g(ip) * kernel_beta_finite(ir, qp, twos, twosp, t) *
                       kernel_w87(ir, qp, twos, twosp, t);
        }
    }
    return {ir, qp, a, std::move(k), KernelBuild::ClosedForm};
}

Signal apply(const Kernel& k, const Signal& s) {
    if (k.irrep.twoj != s.irrep.twoj) {
        throw std::domain_error("apply: kernel and signal dimensions differ");
    }
    return {s.irrep, k.mat * s.values};
}

Eigen::MatrixXcd momentum_eigvecs(Irrep ir, const QParam& qp) {
    const int d = ir.dim();
    WaveTable wt = wave_table(ir, qp);
    Eigen::MatrixXcd m(d, d);
    for (int n = 0; n < d; ++n) {
        for (int r = 0; r < d; ++r) m(n, r) = minus_i_pow(n) * wt.phi(n, r);
    }
    return m;
}

double wigner_little_d(int twoj, int twos_row, int twos_col, double beta) {
    Irrep ir(twoj);
    if (std::abs(twos_row) > twoj || std::abs(twos_col) > twoj ||
        (twos_row + twoj) % 2 != 0 || (twos_col + twoj) % 2 != 0) {
        throw std::domain_error("wigner_little_d: index out of range");
    }
    // d^j_{m',m}(beta) with m' = s_row, m = s_col:
    //   sum_k (-1)^{m'-m+k} sqrt((j+m)!(j-m)!(j+m')!(j-m')!) /
    //         ((j+m-k)! k! (j-m'-k)! (m'-m+k)!) c^{2j-2k+m-m'} s^{m'-m+2k}
    const int jpm = (twoj + twos_col) / 2;    // j + m
    const int jmm = (twoj - twos_col) / 2;    // j - m
    const int jpmp = (twoj + twos_row) / 2;   // j + m'
    const int jmmp = (twoj - twos_row) / 2;   // j - m'
    const int mpmm = (twos_row - twos_col) / 2;  // m' - m
    const double c = std::cos(0.5 * beta);
    const double s = std::sin(0.5 * beta);
    const double logw = 0.5 * (log_factorial(jpm) + log_factorial(jmm) +
                               log_factorial(jpmp) + log_factorial(jmmp));
    const int kmin = std::max(0, -mpmm);
    const int kmax = std::min(jpm, jmmp);
    double sum = 0.0;
    for (int k = kmin; k <= kmax; ++k) {
        const double lterm = logw - log_factorial(jpm - k) - log_factorial(k) -
                             log_factorial(jmmp - k) - log_factorial(mpmm + k);
        const double sign = ((mpmm + k) % 2 == 0) ? 1.0 : -1.0;
        sum += sign * std::exp(lterm) * std::pow(c, twoj - 2 * k - mpmm) *
               std::pow(s, mpmm + 2 * k);
    }
    return sum;
}

Report verify_transform(Irrep ir, const QParam& qp, double tol) {
    const double fac = tol / 1e-10;
    Report rep;
    rep.title = "transform";
    const int d = ir.dim();
    const Eigen::MatrixXcd eye = Eigen::MatrixXcd::Identity(d, d);
    const std::vector<double> grid{0.1, 0.5, 1.0, 1.9, 3.3};

    double unit = 0.0;
    for (double a : grid) {
        const Kernel k = kernel_spectral(ir, qp, a);
        unit = std::max(unit, max_abs(k.mat * k.mat.adjoint() - eye));
    }
    rep.add("kernel.unitarity", unit, 1e-10 * fac);

    double grp = 0.0;
    for (double a1 : grid) {
        for (double a2 : grid) {
            grp = std::max(grp, max_abs(kernel_spectral(ir, qp, a1).mat *
                                            kernel_spectral(ir, qp, a2).mat -
                                        kernel_spectral(ir, qp, a1 + a2).mat));
        }
    }
    rep.add("kernel.group_law", grp, 1e-10 * fac);

    {
        const Eigen::MatrixXcd k1 = kernel_spectral(ir, qp, 1.0).mat;
        rep.add("kernel.fourth_power", max_abs(k1 * k1 * k1 * k1 - eye), 1e-10 * fac);
        rep.add("kernel.periodicity",
                max_abs(kernel_spectral(ir, qp, 1.3 + 4.0).mat -
                        kernel_spectral(ir, qp, 1.3).mat),
                1e-12 * fac);
        const Eigen::MatrixXcd par = parity_matrix(d);
        rep.add("kernel.parity_conserved",
                max_abs(kernel_spectral(ir, qp, 0.7).mat * par -
                        par * kernel_spectral(ir, qp, 0.7).mat),
                1e-10 * fac);
        rep.add("kernel.a2_is_parity", max_abs(kernel_spectral(ir, qp, 2.0).mat - par),
                1e-10 * fac);
    }

    if (ir.twoj <= 8) {
        double dev = 0.0;
        for (double a : {0.3, 1.0, 2.7}) {
            dev = std::max(dev, max_abs(kernel_closed_form(ir, qp, a).mat -
                                        kernel_spectral(ir, qp, a).mat));
        }
        rep.add("kernel.closed_vs_spectral", dev, 1e-8 * (tol / 1e-10));
    }

    // bare evolution operator after a full rotation: exp(-i 2 pi H) = -1
    {
        double res = 0.0;
        for (int n = 0; n < d; ++n) {
            res = std::max(res, std::abs(std::exp(-kI * (2.0 * kPi * (n + 0.5))) + 1.0));
        }
        rep.add("evolution.full_rotation_sign", res, 1e-10 * fac);
    }

    // momentum eigenbasis: P v_r = -Y_r v_r, unitary eigenvector matrix
    {
        auto ops = position_momentum_hamiltonian(ir, qp);
        const Eigen::MatrixXcd m = momentum_eigvecs(ir, qp);
        const PositionGrid grid_x = position_spectrum(ir, qp);
        const double xmax = std::max(1.0, grid_x.x.cwiseAbs().maxCoeff());
        double res = 0.0;
        for (int r = 0; r < d; ++r) {
            res = std::max(res, (ops.p_op.mat * m.col(r) + grid_x.x(r) * m.col(r))
                                    .cwiseAbs()
                                    .maxCoeff());
        }
        rep.add("momentum.eigen_equation", res, 1e-10 * fac * xmax);
        rep.add("momentum.unitary", max_abs(m.adjoint() * m - eye), 1e-10 * fac);
    }

    // modes are eigenfunctions of the a = 1 transform with eigenvalue (-i)^n
    {
        const Kernel k1 = kernel_spectral(ir, qp, 1.0);
        const WaveTable wt = wave_table(ir, qp);
        double res = 0.0;
        for (int n = 0; n < d; ++n) {
            Eigen::VectorXcd row = wt.phi.row(n).transpose().cast<std::complex<double>>();
            res = std::max(res,
                           (k1.mat * row - minus_i_pow(n) * row).cwiseAbs().maxCoeff());
        }
        rep.add("mode.eigen_relation", res, 1e-10 * fac);
    }

    return rep;
}

}  // namespace qosc
