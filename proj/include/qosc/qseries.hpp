// Terminating and convergent basic hypergeometric series: the dual q-Kravchuk
// sum behind the oscillator wavefunctions, the very-well-poised 8W7 series
// behind the closed-form transform kernel, and q-Pochhammer products of
// arbitrary (also negative and infinite) length used to cross-check them.
#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "qosc/qnum.hpp"

namespace qosc {

/// Dual q-Kravchuk polynomial K_n at grid node xi = j - s, as the terminating
/// sum over k <= min(n, xi) of
///   (q^{-n};q)_k (q^{-xi};q)_k (-q^{xi-2j};q)_k / (q^{-2j};q)_k * q^k/(q;q)_k.
/// At q = 1 this is the symmetric Kravchuk value 2F1(-n, -xi; -2j; 2).
double dual_q_kravchuk_sum(int n, int xi, int twoj, const QParam& qp);

/// If param == q^{-N} for a nonnegative integer N (within rel_tol), return N.
std::optional<int> terminating_index(std::complex<double> param, const QParam& qp,
                                     double rel_tol = 1e-12);

/// Very-well-poised series
///   8W7(a; b,c,d,e,f; q, z) =
///     sum_k (1-a q^{2k})/(1-a) * (a,b,c,d,e,f;q)_k z^k / (q,qa/b,...,qa/f;q)_k.
/// Terminates when some upper parameter equals q^{-N}; otherwise the partial
/// sums must converge within max_terms or a runtime_error is thrown.
std::complex<double> w8_7(std::complex<double> a, std::complex<double> b,
                          std::complex<double> c, std::complex<double> d,
                          std::complex<double> e, std::complex<double> f,
                          const QParam& qp, std::complex<double> z,
                          int max_terms = 256);

/// Basic hypergeometric r_phi_s with r = s+1 (no extra (-1)^k q^(k choose 2)
/// factor): sum_k prod(num;q)_k z^k / ((q;q)_k prod(den;q)_k).
std::complex<double> basic_phi(const std::vector<std::complex<double>>& num,
                               const std::vector<std::complex<double>>& den,
                               const QParam& qp, std::complex<double> z,
                               int max_terms = 256);

/// (a;q)_n for any integer n; n < 0 uses (a;q)_n = 1 / ((a q^n;q)_{-n}).
std::complex<double> q_pochhammer_int(std::complex<double> a, const QParam& qp, int n);

/// (a;q)_infinity, truncated once |a| q^k < 1e-16 with a multiplicative tail
/// estimate. Requires q < 1. Cross-check paths only.
std::complex<double> q_pochhammer_inf(std::complex<double> a, const QParam& qp);

}  // namespace qosc
