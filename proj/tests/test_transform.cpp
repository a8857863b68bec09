#include <cmath>
#include <complex>
#include <random>

#include "doctest.h"
#include "qosc/transform.hpp"

using namespace qosc;
using cd = std::complex<double>;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_SUITE_BEGIN("transform");

TEST_CASE("kernel at a = 0 is the exact identity") {
    Kernel k = kernel_spectral(Irrep(1), QParam(1.0), 0.0);
    CHECK(k.build == KernelBuild::IdentityDegenerate);
    CHECK(max_abs(k.mat - Eigen::MatrixXcd::Identity(2, 2)) == 0.0);
    Kernel kc = kernel_closed_form(Irrep(4), QParam(0.5), 4.0);
    CHECK(kc.build == KernelBuild::IdentityDegenerate);
}

TEST_CASE("fourth power of the a = 1 kernel is the identity") {
    Kernel k = kernel_spectral(Irrep(3), QParam(0.6), 1.0);
    const Eigen::MatrixXcd k4 = k.mat * k.mat * k.mat * k.mat;
    CHECK(max_abs(k4 - Eigen::MatrixXcd::Identity(4, 4)) <= 1e-10);
}

TEST_CASE("kernel unitarity and group law on a representative grid") {
    for (double q : {0.5, 1.0}) {
        QParam qp(q);
        Irrep ir(5);
        const Eigen::MatrixXcd eye = Eigen::MatrixXcd::Identity(6, 6);
        for (double a : {0.1, 1.9, 3.3}) {
            Kernel k = kernel_spectral(ir, qp, a);
            CHECK(max_abs(k.mat * k.mat.adjoint() - eye) <= 1e-10);
        }
        CHECK(max_abs(kernel_spectral(ir, qp, 0.7).mat * kernel_spectral(ir, qp, 1.8).mat -
                      kernel_spectral(ir, qp, 2.5).mat) <= 1e-10);
        // periodicity in a with period 4
        CHECK(max_abs(kernel_spectral(ir, qp, 1.3 + 4.0).mat - kernel_spectral(ir, qp, 1.3).mat) <=
              1e-12);
    }
}

TEST_CASE("a = 2 kernel is the parity (anti-diagonal) matrix") {
    QParam qp(0.5);
    Irrep ir(4);
    Kernel ks = kernel_spectral(ir, qp, 2.0);
    Kernel kc = kernel_closed_form(ir, qp, 2.0);
    CHECK(kc.build == KernelBuild::ParityDegenerate);
    for (int r = 0; r < 5; ++r) {
        for (int c = 0; c < 5; ++c) {
            const cd expect = (c == 4 - r) ? cd(1.0, 0.0) : cd(0.0, 0.0);
            CHECK(std::abs(ks.mat(r, c) - expect) <= 1e-12);
            CHECK(kc.mat(r, c) == expect);
        }
    }
}

TEST_CASE("closed form matches the spectral kernel (twoj <= 8, q in {0.5, 0.9})") {
    for (double q : {0.5, 0.9}) {
        QParam qp(q);
        for (int twoj = 1; twoj <= 8; ++twoj) {
            for (double a : {0.3, 1.0, 2.7}) {
                Kernel ks = kernel_spectral(Irrep(twoj), qp, a);
                Kernel kc = kernel_closed_form(Irrep(twoj), qp, a);
                INFO("twoj=" << twoj << " q=" << q << " a=" << a);
                CHECK(max_abs(ks.mat - kc.mat) <= 1e-8);
            }
        }
    }
}

TEST_CASE("corner kernel element equals the three-term spectral sum (twoj=2, q=0.5, a=1)") {
    QParam qp(0.5);
    Irrep ir(2);
    cd direct(0.0, 0.0);
    const cd mi(0.0, -1.0);
    for (int n = 0; n <= 2; ++n) {
        const double phi = wavefunction(n, 2, ir, qp);
        direct += phi * std::pow(mi, n) * phi;
    }
    Kernel kc = kernel_closed_form(ir, qp, 1.0);
    CHECK(std::abs(kc.mat(2, 2) - direct) <= 1e-12);
}

TEST_CASE("beta prefactor: finite-product and infinite-product forms agree") {
    for (double q : {0.5, 0.9}) {
        QParam qp(q);
        for (int twoj : {2, 5, 8}) {
            Irrep ir(twoj);
            for (double a : {0.3, 1.0, 2.7}) {
                const cd t = std::exp(cd(0.0, -0.5 * kPi * a));
                for (int i = 0; i <= twoj; ++i) {
                    for (int k = 0; k <= twoj; ++k) {
                        const cd fin = kernel_beta_finite(ir, qp, ir.twos_of(i), ir.twos_of(k), t);
                        const cd inf = kernel_beta_infinite(ir, qp, ir.twos_of(i), ir.twos_of(k), t);
                        CHECK(std::abs(fin - inf) <= 1e-8 * std::abs(fin));
                    }
                }
            }
        }
    }
}

TEST_CASE("8W7 agrees with its 4phi3 reduction on kernel parameter instances") {
    for (double q : {0.5, 0.9}) {
        QParam qp(q);
        for (int twoj : {1, 4, 8}) {
            Irrep ir(twoj);
            for (double a : {0.3, 1.0, 2.7}) {
                const cd t = std::exp(cd(0.0, -0.5 * kPi * a));
                for (int i = 0; i <= twoj; ++i) {
                    for (int k = 0; k <= twoj; ++k) {
                        const cd w = kernel_w87(ir, qp, ir.twos_of(i), ir.twos_of(k), t);
                        const cd w43 = kernel_w87_via_phi43(ir, qp, ir.twos_of(i), ir.twos_of(k), t);
                        CHECK(std::abs(w - w43) <= 1e-8 * std::abs(w));
                    }
                }
            }
        }
    }
}

TEST_CASE("apply: delta signals pick out kernel columns; norms are preserved") {
    QParam qp(0.8);
    Irrep ir(4);
    Kernel k = kernel_spectral(ir, qp, 0.6);
    for (int s0 : {0, 3}) {
        Signal delta{ir, Eigen::VectorXcd::Zero(5)};
        delta.values(s0) = 1.0;
        Signal out = apply(k, delta);
        CHECK((out.values - k.mat.col(s0)).cwiseAbs().maxCoeff() == 0.0);
    }
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Signal sig{ir, Eigen::VectorXcd(5)};
    for (int i = 0; i < 5; ++i) sig.values(i) = cd(u(rng), u(rng));
    Signal out = apply(k, sig);
    CHECK(out.values.norm() == doctest::Approx(sig.values.norm()).epsilon(1e-12));
    Signal wrong{Irrep(3), Eigen::VectorXcd::Zero(4)};
    CHECK_THROWS_AS(apply(k, wrong), std::domain_error);
}

TEST_CASE("modes are eigenfunctions of the a = 1 transform with eigenvalue (-i)^n") {
    QParam qp(0.7);
    Irrep ir(5);
    Kernel k1 = kernel_spectral(ir, qp, 1.0);
    WaveTable wt = wave_table(ir, qp);
    const cd mi(0.0, -1.0);
    for (int n = 0; n <= 5; ++n) {
        Eigen::VectorXcd row = wt.phi.row(n).transpose().cast<cd>();
        CHECK((k1.mat * row - std::pow(mi, n) * row).cwiseAbs().maxCoeff() <= 1e-12);
    }
}

TEST_CASE("group law acting on a random signal") {
    QParam qp(0.55);
    Irrep ir(5);
    std::mt19937 rng(777);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Signal sig{ir, Eigen::VectorXcd(6)};
    for (int i = 0; i < 6; ++i) sig.values(i) = cd(u(rng), u(rng));
    Signal lhs = apply(kernel_spectral(ir, qp, 0.9), apply(kernel_spectral(ir, qp, 1.7), sig));
    Signal rhs = apply(kernel_spectral(ir, qp, 2.6), sig);
    CHECK((lhs.values - rhs.values).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("momentum eigenbasis") {
    for (double q : {0.5, 1.0}) {
        QParam qp(q);
        Irrep ir(4);
        auto ops = position_momentum_hamiltonian(ir, qp);
        PositionGrid grid = position_spectrum(ir, qp);
        Eigen::MatrixXcd m = momentum_eigvecs(ir, qp);
        // unitary, and P v_r = -Y_r v_r with Y the position values
        CHECK(max_abs(m.adjoint() * m - Eigen::MatrixXcd::Identity(5, 5)) <= 1e-12);
        for (int r = 0; r < 5; ++r) {
            CHECK((ops.p_op.mat * m.col(r) + grid.x(r) * m.col(r)).cwiseAbs().maxCoeff() <=
                  1e-10 * std::max(1.0, grid.x.cwiseAbs().maxCoeff()));
        }
    }
    // q = 1, twoj = 1: columns are eigenvectors of -J2 with eigenvalues +-1/2
    {
        QParam qp(1.0);
        Irrep ir(1);
        auto g = standard_generators(ir, qp);
        Eigen::MatrixXcd m = momentum_eigvecs(ir, qp);
        const Eigen::MatrixXcd p = -g.j2.mat;
        CHECK((p * m.col(0) - 0.5 * m.col(0)).cwiseAbs().maxCoeff() <= 1e-14);
        CHECK((p * m.col(1) + 0.5 * m.col(1)).cwiseAbs().maxCoeff() <= 1e-14);
    }
}

TEST_CASE("Wigner little-d: identity at beta = 0, 2x2 closed form, orthogonality") {
    CHECK(wigner_little_d(4, 2, 2, 0.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(wigner_little_d(4, 2, -2, 0.0) == doctest::Approx(0.0).epsilon(1e-14).scale(1.0));
    // d^{1/2}(beta) = [[cos(b/2), sin(b/2)], [-sin(b/2), cos(b/2)]] in ascending m
    for (double beta : {0.3, 1.2, 2.9}) {
        CHECK(wigner_little_d(1, 1, 1, beta) == doctest::Approx(std::cos(0.5 * beta)).epsilon(1e-13));
        CHECK(wigner_little_d(1, -1, 1, beta) ==
              doctest::Approx(std::sin(0.5 * beta)).epsilon(1e-13));
        CHECK(wigner_little_d(1, 1, -1, beta) ==
              doctest::Approx(-std::sin(0.5 * beta)).epsilon(1e-13));
    }
    // rows orthonormal at twoj = 4
    const double beta = 0.77;
    for (int r = -4; r <= 4; r += 2) {
        for (int rp = -4; rp <= 4; rp += 2) {
            double acc = 0.0;
            for (int c = -4; c <= 4; c += 2) {
                acc += wigner_little_d(4, r, c, beta) * wigner_little_d(4, rp, c, beta);
            }
            CHECK(acc == doctest::Approx(r == rp ? 1.0 : 0.0).epsilon(1e-12).scale(1.0));
        }
    }
    CHECK_THROWS_AS(wigner_little_d(2, 3, 0, 0.5), std::domain_error);
    CHECK_THROWS_AS(wigner_little_d(2, 1, 0, 0.5), std::domain_error);
}

TEST_CASE("near-classical kernel matches the little-d closed form") {
    // twoj = 1, q = 1 - 1e-8, a = 1
    {
        Irrep ir(1);
        Kernel ks = kernel_spectral(ir, QParam(1.0 - 1e-8), 1.0);
        Kernel kd = kernel_closed_form(ir, QParam(1.0), 1.0);
        CHECK(kd.build == KernelBuild::ClassicalLittleD);
        CHECK(max_abs(ks.mat - kd.mat) <= 1e-4);
    }
    // twoj <= 8, q = 1 - 1e-6, a = 1, tolerance 5e-4
    for (int twoj : {2, 5, 8}) {
        Irrep ir(twoj);
        Kernel ks = kernel_spectral(ir, QParam(1.0 - 1e-6), 1.0);
        Kernel kd = kernel_closed_form(ir, QParam(1.0), 1.0);
        CHECK(max_abs(ks.mat - kd.mat) <= 5e-4);
    }
    // at q = 1 exactly, the little-d kernel and the spectral kernel coincide
    for (int twoj : {1, 4, 7}) {
        Irrep ir(twoj);
        for (double a : {0.3, 1.0, 2.7}) {
            CHECK(max_abs(kernel_spectral(ir, QParam(1.0), a).mat -
                          kernel_closed_form(ir, QParam(1.0), a).mat) <= 1e-12);
        }
    }
}

TEST_CASE("verify_transform passes on the grid") {
    for (double q : {0.5, 0.9, 1.0}) {
        for (int twoj : {0, 1, 2, 3, 6, 8}) {
            Report rep = verify_transform(Irrep(twoj), QParam(q));
            for (const auto& c : rep.checks) {
                INFO("twoj=" << twoj << " q=" << q << " " << c.name << " residual=" << c.residual);
                CHECK(c.pass);
            }
        }
    }
}

TEST_SUITE_END();
