#include "qosc/contraction.hpp"

#include <cmath>
#include <limits>

#include "qosc/oscillator.hpp"

namespace qosc {

double scale_factor(Irrep ir, const QParam& qp) {
    if (ir.twoj < 1) throw std::domain_error("scale_factor: twoj must be >= 1 (x_j = 0 at twoj = 0)");
    if (qp.classical()) return std::sqrt(2.0 / ir.twoj);  // 1/sqrt(j)
    const double xj = 0.5 * q_number(ir.twoj, qp);
    return qp.pow(0.25 * (ir.twoj + 1.0)) / std::sqrt(xj);
}

ScaledOps scaled_ops(Irrep ir, const QParam& qp) {
    const double w = scale_factor(ir, qp);
    auto ops = position_momentum_hamiltonian(ir, qp);
    return {{ir, w * ops.q_op.mat}, {ir, w * ops.p_op.mat}};
}

ContractionReport contraction_report(const std::vector<int>& twoj_list, const QParam& qp,
                                     int n_max) {
    if (n_max < 0) throw std::domain_error("contraction_report: n_max must be >= 0");
    ContractionReport rep;
    rep.q = qp.q;
    rep.n_max = n_max;
    rep.wx_limit = qp.classical() ? std::numeric_limits<double>::infinity()
                                  : 1.0 / std::sqrt(2.0 * (1.0 / qp.q - 1.0));
    const std::complex<double> I{0.0, 1.0};
    for (int twoj : twoj_list) {
        if (twoj < 2 * n_max + 2) {
            throw std::domain_error("contraction_report: need twoj >= 2*n_max + 2");
        }
        Irrep ir(twoj);
        ScaledOps sc = scaled_ops(ir, qp);
        ContractionRow row;
        row.twoj = twoj;

        const Eigen::MatrixXcd comm = commutator(sc.q_op, sc.p_op).mat;
        for (int np = 0; np <= n_max; ++np) {
            for (int n = 0; n <= n_max; ++n) {
                const std::complex<double> target =
                    (np == n) ? I * qp.pow(n) : std::complex<double>(0.0, 0.0);
                row.dev_target = std::max(row.dev_target, std::abs(comm(np, n) - target));
                const double asym = qp.pow(2.0 * n + 1.0) + qp.pow(2.0 * n) - qp.pow(n);
                const std::complex<double> target2 =
                    (np == n) ? I * asym : std::complex<double>(0.0, 0.0);
                row.dev_asymptote = std::max(row.dev_asymptote, std::abs(comm(np, n) - target2));
            }
        }

        const Eigen::MatrixXcd a_plus = sc.q_op.mat - I * sc.p_op.mat;
        const Eigen::MatrixXcd a_minus = sc.q_op.mat + I * sc.p_op.mat;
        const Eigen::MatrixXcd ladder = a_minus * a_plus - qp.q * a_plus * a_minus;
        for (int np = 0; np <= n_max; ++np) {
            for (int n = 0; n <= n_max; ++n) {
                const std::complex<double> target =
                    (np == n) ? std::complex<double>(1.0, 0.0) : std::complex<double>(0.0, 0.0);
                row.ladder_dev = std::max(row.ladder_dev, std::abs(ladder(np, n) - target));
            }
        }
        for (int n = 0; n <= n_max; ++n) {
            row.aplus_dev = std::max(
                row.aplus_dev,
                std::abs(a_plus(n + 1, n) - std::sqrt(q_brace_number(n + 1, qp))));
        }

        row.wx = scale_factor(ir, qp) * 0.5 * q_number(twoj, qp);
        rep.rows.push_back(row);
    }
    return rep;
}

}  // namespace qosc
