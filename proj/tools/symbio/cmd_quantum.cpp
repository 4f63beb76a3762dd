#include <cmath>
#include <cstdio>
#include <random>

#include "report.hpp"
#include "symbio/quantum.hpp"

namespace symbio::cli {

namespace {

using namespace symbio::quantum;

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

std::string complex_text(Complex c) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9f%+.9fi", c.real(), c.imag());
  return buf;
}

Json complex_json(Complex c) { return Json::array({c.real(), c.imag()}); }

}  // namespace

void register_quantum(CLI::App& app, Options& opts, RunReport& report) {
  auto* q = app.add_subcommand("quantum", "Bra/ket identities and no-cloning");
  q->require_subcommand(1);

  auto* demo = q->add_subcommand("demo", "Projector law, completeness and amplitude expansion on random data");
  static int demo_dim = 4;
  demo->add_option("--dim", demo_dim, "Hilbert space dimension")->check(CLI::Range(1, kMaxDimension));
  demo->callback([&] {
    report.command = "quantum demo";
    const std::uint64_t seed = require_seed(opts, "quantum demo");
    report.input = {{"dim", demo_dim}, {"seed", seed}};
    std::mt19937_64 rng(seed);
    const Operator u = random_unitary(demo_dim, rng);
    const Ket a = random_ket(demo_dim, rng), b = random_ket(demo_dim, rng);
    const auto basis = columns(u);

    const Operator p = outer(a, b);
    const Complex ba = inner(b, a);
    const double projector_dev = max_deviation(p * p, p * ba);
    const double completeness_dev = max_deviation(completeness(basis), Operator::identity(demo_dim));
    const AmplitudeExpansion ex = amplitude_expansion(b, a, basis);
    const bool projector_ok = approx_equal(p * p, p * ba);
    const bool complete_ok = completeness_dev <= Tolerance{}.eps;
    const bool expansion_ok = approx_equal(ex.direct, ex.expanded);
    report.ok = projector_ok && complete_ok && expansion_ok;
    report.trace = {"P = |A><B|", "P P = |A><B|A><B| = <B|A> P", "Sum_k |C_k><C_k| = 1"};
    for (const auto& l : ex.trace) report.trace.push_back(l);
    report.result = {{"projector_law", projector_ok},
                     {"projector_deviation", projector_dev},
                     {"completeness", complete_ok},
                     {"completeness_deviation", completeness_dev},
                     {"amplitude_direct", complex_json(ex.direct)},
                     {"amplitude_expanded", complex_json(ex.expanded)},
                     {"amplitude_agree", expansion_ok}};
    std::string text;
    text += std::string("P^2 = <B|A> P: ") + (projector_ok ? "holds" : "fails") + " (max deviation " + sci(projector_dev) + ")\n";
    text += std::string("Sum_k |C_k><C_k| = 1: ") + (complete_ok ? "holds" : "fails") + " (max deviation " + sci(completeness_dev) + ")\n";
    text += "<B|A> = " + complex_text(ex.direct) + "\nSum_k <B|C_k><C_k|A> = " + complex_text(ex.expanded) + "\n";
    report.text = text;
  });

  auto* nc = q->add_subcommand("noclone", "Linear cloning versus true copy of a|0> + b|1>");
  static double nc_alpha = 1.0 / std::sqrt(2.0), nc_beta = 1.0 / std::sqrt(2.0);
  nc->add_option("--alpha", nc_alpha, "Amplitude of |0> (real)");
  nc->add_option("--beta", nc_beta, "Amplitude of |1> (real)");
  nc->callback([&] {
    report.command = "quantum noclone";
    report.input = {{"alpha", nc_alpha}, {"beta", nc_beta}};
    const CloningDiscrepancy d = cloning_discrepancy(nc_alpha, nc_beta);
    Json comps = Json::array();
    std::string text = "linear extension: a|00> + b|11>\ntrue copy:        (a|0> + b|1>)(a|0> + b|1>)\ndifference:\n";
    const char* labels[] = {"|00>", "|01>", "|10>", "|11>"};
    for (int i = 0; i < 4; ++i) {
      comps.push_back(complex_json(d.delta.vec()(i)));
      char buf[96];
      std::snprintf(buf, sizeof buf, "  %s %+.9f\n", labels[i], d.delta.vec()(i).real());
      text += buf;
    }
    text += "norm " + std::to_string(d.norm) + (d.norm > Tolerance{}.eps ? " (cloning fails)" : " (basis state: copies)");
    report.result = {{"components", comps}, {"norm", d.norm}, {"clones", d.norm <= Tolerance{}.eps}};
    report.text = text;
  });
}

}  // namespace symbio::cli
