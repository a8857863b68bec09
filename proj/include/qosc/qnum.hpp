// q-arithmetic primitives: deformation parameter, q-numbers, q-Pochhammer
// symbols and q-binomial coefficients, with log-domain evaluation for the
// products that overflow binary64.
#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>

namespace qosc {

/// Deformation parameter q in (0, 1], with kappa = -ln q.
///
/// q = 1 is the classical (undeformed) flag: operations dispatch to exact
/// classical formulas instead of evaluating 0/0 limits at runtime.
struct QParam {
    double q = 1.0;
    double kappa = 0.0;

    QParam() = default;
    explicit QParam(double q_value) : q(q_value) {
        if (!(q_value > 0.0) || q_value > 1.0) {
            throw std::domain_error(
                "q must lie in (0, 1]; for q > 1 use the q <-> 1/q symmetry "
                "(it maps the model onto itself with J3 -> -J3)");
        }
        kappa = (q_value == 1.0) ? 0.0 : -std::log(q_value);
    }

    bool classical() const { return q == 1.0; }

    /// QParam for q^2 (same range), used by the q^2-binomial weights.
    QParam squared() const {
        QParam r;
        r.q = q * q;
        r.kappa = 2.0 * kappa;
        return r;
    }

    /// q^y = exp(-kappa*y) for real y.
    double pow(double y) const { return classical() ? 1.0 : std::exp(-kappa * y); }

    /// 1 - q^y evaluated without cancellation (exact near q = 1).
    double one_minus_pow(double y) const {
        return classical() ? 0.0 : -std::expm1(-kappa * y);
    }
};

/// Sign/log-magnitude representation of a real value. Products and quotients
/// are exact in the sign and additive in log_abs, so q-Pochhammer chains that
/// overflow binary64 stay representable.
struct LogSigned {
    int sign = 0;  // -1, 0, +1
    double log_abs = -std::numeric_limits<double>::infinity();

    LogSigned() = default;
    LogSigned(int s, double la) : sign(s), log_abs(la) {}

    static LogSigned from_value(double x) {
        if (x == 0.0) return LogSigned();
        return LogSigned(x > 0.0 ? 1 : -1, std::log(std::abs(x)));
    }
    static LogSigned one() { return LogSigned(1, 0.0); }

    double value() const { return sign == 0 ? 0.0 : sign * std::exp(log_abs); }

    LogSigned operator*(const LogSigned& o) const {
        if (sign == 0 || o.sign == 0) return LogSigned();
        return LogSigned(sign * o.sign, log_abs + o.log_abs);
    }
    LogSigned operator/(const LogSigned& o) const {
        if (o.sign == 0) throw std::domain_error("LogSigned division by zero");
        if (sign == 0) return LogSigned();
        return LogSigned(sign * o.sign, log_abs - o.log_abs);
    }
    LogSigned& operator*=(const LogSigned& o) { return *this = *this * o; }
    LogSigned& operator/=(const LogSigned& o) { return *this = *this / o; }

    /// Square root; requires a nonnegative value.
    LogSigned sqrt() const {
        if (sign < 0) throw std::domain_error("LogSigned sqrt of negative value");
        if (sign == 0) return LogSigned();
        return LogSigned(1, 0.5 * log_abs);
    }
};

/// [r]_q = sinh(r*kappa/2) / sinh(kappa/2); equals r at q = 1.
double q_number(double r, const QParam& qp);

/// {n}_q = (q^n - 1)/(q - 1); equals n at q = 1.
double q_brace_number(int n, const QParam& qp);

/// (z;q)_n = prod_{k=0}^{n-1} (1 - z q^k); (z;q)_0 = 1.
std::complex<double> q_pochhammer(std::complex<double> z, const QParam& qp, int n);

/// Log-domain (z;q)_n for real z.
LogSigned q_pochhammer_ls(double z, const QParam& qp, int n);

/// Gaussian binomial coefficient [m choose n]_q, 0 <= n <= m (positive).
LogSigned q_binomial(int m, int n, const QParam& qp);

/// Chebyshev polynomial of the second kind U_n(x) by the three-term recurrence.
double chebyshev_u(int n, double x);

/// log(1 + e^x) without overflow.
double log1p_exp(double x);

/// log of (-q;q)_n = prod_{k=1}^{n} (1 + q^k).
double log_poch_neg_q(int n, const QParam& qp);

/// log of n! via lgamma.
double log_factorial(int n);

/// log of binomial(m, n).
double log_binomial(int m, int n);

}  // namespace qosc
