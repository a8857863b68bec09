#include "qosc/qnum.hpp"

namespace qosc {

double q_number(double r, const QParam& qp) {
    if (qp.classical()) return r;
    return std::sinh(0.5 * r * qp.kappa) / std::sinh(0.5 * qp.kappa);
}

double q_brace_number(int n, const QParam& qp) {
    if (n < 0) throw std::domain_error("q_brace_number: n must be >= 0");
    if (qp.classical()) return static_cast<double>(n);
    // (q^n - 1)/(q - 1), both differences via expm1 for stability near q = 1
    return std::expm1(-qp.kappa * n) / std::expm1(-qp.kappa);
}

std::complex<double> q_pochhammer(std::complex<double> z, const QParam& qp, int n) {
    if (n < 0) throw std::domain_error("q_pochhammer: n must be >= 0");
    std::complex<double> acc = 1.0;
    std::complex<double> zq = z;
    for (int k = 0; k < n; ++k) {
        acc *= (1.0 - zq);
        zq *= qp.q;
    }
    return acc;
}

LogSigned q_pochhammer_ls(double z, const QParam& qp, int n) {
    if (n < 0) throw std::domain_error("q_pochhammer: n must be >= 0");
    LogSigned acc = LogSigned::one();
    double zq = z;
    for (int k = 0; k < n; ++k) {
        const double f = 1.0 - zq;
        if (f == 0.0) return LogSigned();
        acc *= LogSigned::from_value(f);
        zq *= qp.q;
    }
    return acc;
}

LogSigned q_binomial(int m, int n, const QParam& qp) {
    if (n < 0 || n > m) throw std::domain_error("q_binomial: need 0 <= n <= m");
    if (qp.classical()) return LogSigned(1, log_binomial(m, n));
    // (q;q)_m / ((q;q)_n (q;q)_{m-n}); all factors 1 - q^{k+1} are positive
    double la = 0.0;
    for (int k = n; k < m; ++k) la += std::log(qp.one_minus_pow(k + 1));
    for (int k = 0; k < m - n; ++k) la -= std::log(qp.one_minus_pow(k + 1));
    return LogSigned(1, la);
}

double chebyshev_u(int n, double x) {
    if (n < 0) throw std::domain_error("chebyshev_u: n must be >= 0");
    double a = 1.0;        // U_0
    if (n == 0) return a;
    double b = 2.0 * x;    // U_1
    for (int k = 2; k <= n; ++k) {
        const double c = 2.0 * x * b - a;
        a = b;
        b = c;
    }
    return b;
}

double log1p_exp(double x) {
    return x > 0.0 ? x + std::log1p(std::exp(-x)) : std::log1p(std::exp(x));
}

double log_poch_neg_q(int n, const QParam& qp) {
    double acc = 0.0;
    for (int k = 1; k <= n; ++k) acc += std::log1p(qp.pow(k));
    return acc;
}

double log_factorial(int n) { return std::lgamma(n + 1.0); }

double log_binomial(int m, int n) {
    return log_factorial(m) - log_factorial(n) - log_factorial(m - n);
}

}  // namespace qosc
