// Large-j diagnostics for the scaled operators w_j Q, w_j P: low-mode
// commutator tables, ladder-operator relations, and the finite position bound.
#pragma once

#include <vector>

#include <Eigen/Dense>

#include "qosc/algebra.hpp"
#include "qosc/qnum.hpp"

namespace qosc {

/// w_j = q^{(j+1/2)/2} / sqrt(x_j); 1/sqrt(j) at q = 1. Rejects twoj = 0.
double scale_factor(Irrep ir, const QParam& qp);

struct ScaledOps {
    OperatorMatrix q_op;  // w_j Q
    OperatorMatrix p_op;  // w_j P
};

ScaledOps scaled_ops(Irrep ir, const QParam& qp);

struct ContractionRow {
    int twoj = 0;
    /// max_{n,n' <= n_max} |<n'|[Qj,Pj]|n> - i q^n delta_{nn'}|
    double dev_target = 0.0;
    /// same, measured against the exact j->infinity value of the scaled
    /// commutator diagonal, q^{2n+1} + q^{2n} - q^n (equals q^n only at q=1)
    double dev_asymptote = 0.0;
    /// max over the low-mode block of |A- A+ - q A+ A- - 1|
    double ladder_dev = 0.0;
    /// max_{n <= n_max} |<n+1|A+|n> - sqrt({n+1}_q)|
    double aplus_dev = 0.0;
    /// w_j x_j (position bound)
    double wx = 0.0;
};

struct ContractionReport {
    double q = 1.0;
    int n_max = 0;
    std::vector<ContractionRow> rows;
    /// limit of w_j x_j: 1/sqrt(2 (1/q - 1)); infinity at q = 1
    double wx_limit = 0.0;
};

/// Requires every twoj >= 2*n_max + 2 so the low-mode block is clear of the
/// opposite edge of the representation.
ContractionReport contraction_report(const std::vector<int>& twoj_list, const QParam& qp,
                                     int n_max);

}  // namespace qosc
