#include "qosc/qseries.hpp"

#include <array>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace qosc {

namespace {

// Kahan-compensated accumulator for real sums whose terms span many orders.
struct CompensatedSum {
    double sum = 0.0;
    double comp = 0.0;
    void add(double x) {
        const double y = x - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
};

}  // namespace

double dual_q_kravchuk_sum(int n, int xi, int twoj, const QParam& qp) {
    if (twoj < 0) throw std::domain_error("dual_q_kravchuk_sum: twoj must be >= 0");
    if (n < 0 || n > twoj) throw std::domain_error("dual_q_kravchuk_sum: need 0 <= n <= twoj");
    if (xi < 0 || xi > twoj) throw std::domain_error("dual_q_kravchuk_sum: need 0 <= xi <= twoj");

    const int kmax = std::min(n, xi);
    if (qp.classical()) {
        // 2F1(-n, -xi; -2j; 2), terminating
        double term = 1.0;
        CompensatedSum s;
        s.add(1.0);
        for (int k = 1; k <= kmax; ++k) {
            term *= -2.0 * (n - k + 1) * (xi - k + 1) / (static_cast<double>(k) * (twoj - k + 1));
            s.add(term);
        }
        return s.sum;
    }

    const double kap = qp.kappa;
    double term = 1.0;
    CompensatedSum s;
    s.add(1.0);
    for (int k = 1; k <= kmax; ++k) {
        // term ratio:
        //  (1 - q^{k-1-n}) (1 - q^{k-1-xi}) (1 + q^{xi-2j+k-1}) q
        //  ---------------------------------------------------------
        //            (1 - q^{k-1-2j}) (1 - q^k)
        double num = -std::expm1(-kap * (k - 1 - n));
        num *= -std::expm1(-kap * (k - 1 - xi));
        num *= 1.0 + std::exp(-kap * (xi - twoj + k - 1));
        num *= qp.q;
        double den = -std::expm1(-kap * (k - 1 - twoj));
        den *= -std::expm1(-kap * k);
        term *= num / den;
        s.add(term);
    }
    return s.sum;
}

std::optional<int> terminating_index(std::complex<double> param, const QParam& qp,
                                     double rel_tol) {
    const double mag = std::abs(param);
    if (mag == 0.0) return std::nullopt;
    if (std::abs(param.imag()) > rel_tol * mag) return std::nullopt;
    const double p = param.real();
    if (p < 1.0 - rel_tol) return std::nullopt;
    if (qp.classical()) {
        if (std::abs(p - 1.0) <= rel_tol) return 0;
        return std::nullopt;
    }
    const long long nll = std::llround(std::log(p) / qp.kappa);
    if (nll < 0 || nll > 100000) return std::nullopt;
    const int n = static_cast<int>(nll);
    const double target = std::exp(qp.kappa * n);
    if (std::abs(p - target) <= rel_tol * target) return n;
    return std::nullopt;
}

namespace {

// Shared series driver. ratio(k) returns T_k / T_{k-1}. When kmax is set the
// series is summed exactly to kmax; otherwise it must converge.
std::complex<double> sum_series(const std::optional<int>& kmax, int max_terms,
                                const std::function<std::complex<double>(int)>& ratio) {
    std::complex<double> term = 1.0;
    std::complex<double> sum = 1.0;
    if (kmax) {
        for (int k = 1; k <= *kmax; ++k) {
            term *= ratio(k);
            sum += term;
        }
        return sum;
    }
    int quiet = 0;
    for (int k = 1; k <= max_terms; ++k) {
        term *= ratio(k);
        sum += term;
        if (std::abs(term) <= 1e-17 * (std::abs(sum) + 1e-300)) {
            if (++quiet >= 2) return sum;
        } else {
            quiet = 0;
        }
    }
    throw std::runtime_error(
        "basic hypergeometric series: no terminating parameter found and the "
        "partial sums did not converge within max_terms");
}

std::complex<double> checked_div(std::complex<double> num, std::complex<double> den) {
    if (std::abs(den) < 1e-300) {
        throw std::runtime_error("basic hypergeometric series: vanishing denominator factor");
    }
    return num / den;
}

}  // namespace

std::complex<double> w8_7(std::complex<double> a, std::complex<double> b,
                          std::complex<double> c, std::complex<double> d,
                          std::complex<double> e, std::complex<double> f,
                          const QParam& qp, std::complex<double> z, int max_terms) {
    const std::array<std::complex<double>, 6> upper{a, b, c, d, e, f};
    std::optional<int> kmax;
    for (const auto& p : upper) {
        if (auto idx = terminating_index(p, qp)) {
            if (!kmax || *idx < *kmax) kmax = idx;
        }
    }
    const std::array<std::complex<double>, 5> lower{a * qp.q / b, a * qp.q / c,
                                                    a * qp.q / d, a * qp.q / e,
                                                    a * qp.q / f};
    auto ratio = [&](int k) {
        const double qk1 = qp.pow(k - 1.0);
        std::complex<double> r = checked_div(1.0 - a * qp.pow(2.0 * k),
                                             1.0 - a * qp.pow(2.0 * k - 2.0));
        for (const auto& u : upper) r *= (1.0 - u * qk1);
        r *= z;
        r = checked_div(r, qp.one_minus_pow(k));
        for (const auto& v : lower) r = checked_div(r, 1.0 - v * qk1);
        return r;
    };
    return sum_series(kmax, max_terms, ratio);
}

std::complex<double> basic_phi(const std::vector<std::complex<double>>& num,
                               const std::vector<std::complex<double>>& den,
                               const QParam& qp, std::complex<double> z, int max_terms) {
    if (num.size() != den.size() + 1) {
        throw std::domain_error("basic_phi: expects r = s + 1 parameters");
    }
    std::optional<int> kmax;
    for (const auto& p : num) {
        if (auto idx = terminating_index(p, qp)) {
            if (!kmax || *idx < *kmax) kmax = idx;
        }
    }
    auto ratio = [&](int k) {
        const double qk1 = qp.pow(k - 1.0);
        std::complex<double> r = z;
        for (const auto& u : num) r *= (1.0 - u * qk1);
        r = checked_div(r, qp.one_minus_pow(k));
        for (const auto& v : den) r = checked_div(r, 1.0 - v * qk1);
        return r;
    };
    return sum_series(kmax, max_terms, ratio);
}

std::complex<double> q_pochhammer_int(std::complex<double> a, const QParam& qp, int n) {
    if (n >= 0) return q_pochhammer(a, qp, n);
    // (a;q)_{-m} = 1 / prod_{k=1}^{m} (1 - a q^{-k})
    std::complex<double> acc = 1.0;
    for (int k = 1; k <= -n; ++k) {
        acc *= (1.0 - a * qp.pow(-static_cast<double>(k)));
    }
    if (std::abs(acc) < 1e-300) {
        throw std::runtime_error("q_pochhammer_int: negative-length product is singular");
    }
    return 1.0 / acc;
}

std::complex<double> q_pochhammer_inf(std::complex<double> a, const QParam& qp) {
    if (qp.classical()) {
        throw std::domain_error("q_pochhammer_inf requires q < 1");
    }
    std::complex<double> acc = 1.0;
    std::complex<double> aq = a;
    int k = 0;
    while (std::abs(aq) >= 1e-16) {
        acc *= (1.0 - aq);
        aq *= qp.q;
        if (++k > 200000) {
            throw std::runtime_error("q_pochhammer_inf: truncation did not converge");
        }
    }
    // multiplicative tail: prod_{i>=k} (1 - a q^i) ~ 1 - a q^k / (1 - q)
    acc *= (1.0 - aq / (1.0 - qp.q));
    return acc;
}

}  // namespace qosc
