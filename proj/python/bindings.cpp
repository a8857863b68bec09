// python/bindings.cpp — pybind11 bindings for the qosc core.

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qosc/contraction.hpp"
#include "qosc/oscillator.hpp"
#include "qosc/potential.hpp"
#include "qosc/transform.hpp"

namespace py = pybind11;
using namespace qosc;

namespace {

py::dict report_dict(const Report& rep) {
    py::dict d;
    d["title"] = rep.title;
    py::list checks;
    for (const auto& c : rep.checks) {
        py::dict jc;
        jc["name"] = c.name;
        jc["residual"] = c.residual;
        jc["tol"] = c.tol;
        jc["pass"] = c.pass;
        checks.append(jc);
    }
    d["checks"] = checks;
    py::dict info;
    for (const auto& [k, v] : rep.info) info[py::str(k)] = v;
    d["info"] = info;
    d["all_pass"] = rep.all_pass();
    return d;
}

py::dict contraction_dict(const ContractionReport& rep) {
    py::dict d;
    d["q"] = rep.q;
    d["n_max"] = rep.n_max;
    d["wx_limit"] = rep.wx_limit;
    py::list rows;
    for (const auto& r : rep.rows) {
        py::dict jr;
        jr["twoj"] = r.twoj;
        jr["dev_target"] = r.dev_target;
        jr["dev_asymptote"] = r.dev_asymptote;
        jr["ladder_dev"] = r.ladder_dev;
        jr["aplus_dev"] = r.aplus_dev;
        jr["wx"] = r.wx;
        rows.append(jr);
    }
    d["rows"] = rows;
    return d;
}

Kernel make_kernel(int twoj, double q, double a, const std::string& method) {
    Irrep ir(twoj);
    QParam qp(q);
    if (method == "closed") return kernel_closed_form(ir, qp, a);
    if (method == "spectral") return kernel_spectral(ir, qp, a);
    throw std::invalid_argument("method must be 'spectral' or 'closed'");
}

}  // namespace

PYBIND11_MODULE(_qosc, m) {
    m.doc() = "finite q-oscillator toolkit: su_q(2) operators, dual q-Kravchuk "
              "wavefunctions, fractional Fourier-q-Kravchuk transform, equivalent "
              "potentials, contraction diagnostics";

    m.def("q_number", [](double r, double q) { return q_number(r, QParam(q)); },
          py::arg("r"), py::arg("q"), "[r]_q = sinh(r k/2)/sinh(k/2), k = -ln q");
    m.def("q_brace_number", [](int n, double q) { return q_brace_number(n, QParam(q)); },
          py::arg("n"), py::arg("q"), "{n}_q = (q^n - 1)/(q - 1)");
    m.def("q_pochhammer",
          [](std::complex<double> z, double q, int n) { return q_pochhammer(z, QParam(q), n); },
          py::arg("z"), py::arg("q"), py::arg("n"));
    m.def("q_binomial", [](int m_, int n, double q) { return q_binomial(m_, n, QParam(q)).value(); },
          py::arg("m"), py::arg("n"), py::arg("q"));
    m.def("chebyshev_u", &chebyshev_u, py::arg("n"), py::arg("x"));
    m.def("dual_q_kravchuk",
          [](int n, int twos, int twoj, double q) {
              return dual_q_kravchuk(n, twos, Irrep(twoj), QParam(q));
          },
          py::arg("n"), py::arg("twos"), py::arg("twoj"), py::arg("q"));

    m.def("position_spectrum",
          [](int twoj, double q) { return position_spectrum(Irrep(twoj), QParam(q)).x; },
          py::arg("twoj"), py::arg("q"), "sensor points x_s, ascending twos");
    m.def("energy_spectrum", [](int twoj) { return energy_spectrum(Irrep(twoj)); },
          py::arg("twoj"));
    m.def("wavefunction",
          [](int n, int twos, int twoj, double q) {
              return wavefunction(n, twos, Irrep(twoj), QParam(q));
          },
          py::arg("n"), py::arg("twos"), py::arg("twoj"), py::arg("q"));
    m.def("classical_kravchuk_wavefunction", &classical_kravchuk_wavefunction, py::arg("n"),
          py::arg("twos"), py::arg("twoj"));
    m.def("wave_table",
          [](int twoj, double q) { return wave_table(Irrep(twoj), QParam(q)).phi; },
          py::arg("twoj"), py::arg("q"),
          "orthogonal table phi[n, i], rows modes, columns ascending twos");
    m.def("gamma_vector",
          [](int twoj, double q) { return gamma_vector(Irrep(twoj), QParam(q)); },
          py::arg("twoj"), py::arg("q"));
    m.def("position_eigvec_product_form",
          [](int twos, int twoj, double q) {
              return position_eigvec_product_form(twos, Irrep(twoj), QParam(q));
          },
          py::arg("twos"), py::arg("twoj"), py::arg("q"));

    m.def("operators",
          [](int twoj, double q) {
              Irrep ir(twoj);
              QParam qp(q);
              auto g = standard_generators(ir, qp);
              auto ops = position_momentum_hamiltonian(ir, qp);
              py::dict d;
              d["J3"] = g.j3.mat;
              d["J+"] = g.jplus.mat;
              d["J-"] = g.jminus.mat;
              d["J1"] = g.j1.mat;
              d["J2"] = g.j2.mat;
              d["Q"] = ops.q_op.mat;
              d["P"] = ops.p_op.mat;
              d["H"] = ops.h_op.mat;
              return d;
          },
          py::arg("twoj"), py::arg("q"), "generator and observable matrices in the mode basis");
    m.def("casimir_eigenvalue",
          [](int twoj, double q) { return casimir(Irrep(twoj), QParam(q)).eigenvalue; },
          py::arg("twoj"), py::arg("q"));
    m.def("fq_diagonal", [](int twoj, double q) { return fq_diagonal(Irrep(twoj), QParam(q)); },
          py::arg("twoj"), py::arg("q"));

    m.def("kernel",
          [](int twoj, double q, double a, const std::string& method) {
              return make_kernel(twoj, q, a, method).mat;
          },
          py::arg("twoj"), py::arg("q"), py::arg("a"), py::arg("method") = "spectral",
          "fractional transform kernel K[s, s'], ascending twos");
    m.def("transform",
          [](const Eigen::VectorXcd& values, double a, int twoj, double q) {
              Irrep ir(twoj);
              if (values.size() != ir.dim()) {
                  throw std::invalid_argument("signal length must equal twoj + 1");
              }
              return apply(kernel_spectral(ir, QParam(q), a), Signal{ir, values}).values;
          },
          py::arg("values"), py::arg("a"), py::arg("twoj"), py::arg("q"));
    m.def("momentum_eigvecs",
          [](int twoj, double q) { return momentum_eigvecs(Irrep(twoj), QParam(q)); },
          py::arg("twoj"), py::arg("q"));
    m.def("wigner_little_d", &wigner_little_d, py::arg("twoj"), py::arg("twos_row"),
          py::arg("twos_col"), py::arg("beta"));

    m.def("equivalent_potential",
          [](int twoj, double q) {
              return equivalent_potential_from_ground_state(
                  ground_state_profile(Irrep(twoj), QParam(q)));
          },
          py::arg("twoj"), py::arg("q"), "V - E0 over the grid, psi(+-(j+1)) = 0 endpoints");
    m.def("kravchuk_potential", &kravchuk_potential, py::arg("twos"), py::arg("twoj"));
    m.def("q_potential_closed_form",
          [](int twos, int twoj, double q) {
              return q_potential_closed_form(twos, Irrep(twoj), QParam(q));
          },
          py::arg("twos"), py::arg("twoj"), py::arg("q"));
    m.def("ground_state_ratio",
          [](int twos, int twoj, double q) {
              return ground_state_ratio(twos, Irrep(twoj), QParam(q));
          },
          py::arg("twos"), py::arg("twoj"), py::arg("q"));
    m.def("ground_state_unimodal",
          [](int twoj, double q) { return ground_state_unimodal(Irrep(twoj), QParam(q)); },
          py::arg("twoj"), py::arg("q"));

    m.def("scale_factor", [](int twoj, double q) { return scale_factor(Irrep(twoj), QParam(q)); },
          py::arg("twoj"), py::arg("q"));
    m.def("contraction_report",
          [](const std::vector<int>& twoj_list, double q, int n_max) {
              return contraction_dict(contraction_report(twoj_list, QParam(q), n_max));
          },
          py::arg("twoj_list"), py::arg("q"), py::arg("n_max") = 2);

    m.def("verify_algebra",
          [](int twoj, double q, double tol) {
              return report_dict(verify_algebra(Irrep(twoj), QParam(q), tol));
          },
          py::arg("twoj"), py::arg("q"), py::arg("tol") = 1e-10);
    m.def("verify_wavetable",
          [](int twoj, double q, double tol) {
              return report_dict(verify_wavetable(Irrep(twoj), QParam(q), tol));
          },
          py::arg("twoj"), py::arg("q"), py::arg("tol") = 1e-10);
    m.def("verify_transform",
          [](int twoj, double q, double tol) {
              return report_dict(verify_transform(Irrep(twoj), QParam(q), tol));
          },
          py::arg("twoj"), py::arg("q"), py::arg("tol") = 1e-10);
    m.def("verify_potential",
          [](int twoj, double q, double tol) {
              return report_dict(verify_potential(Irrep(twoj), QParam(q), tol));
          },
          py::arg("twoj"), py::arg("q"), py::arg("tol") = 1e-10);
}
