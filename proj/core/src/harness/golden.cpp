#include "sot/harness/golden.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "sot/harness/records.hpp"
#include "sot/intertwining.hpp"
#include "sot/lemma_oracle.hpp"
#include "sot/solvers.hpp"
#include "sot/translates.hpp"

namespace sot::harness {

namespace {

GoldenCheck near(std::string name, double expected, ExtReal actual, double tol) {
  const bool pass = actual.is_finite() && std::fabs(actual.value() - expected) <= tol;
  return {std::move(name), format_double(expected), format_double(actual.raw()), tol, pass};
}

GoldenCheck neg_inf(std::string name, ExtReal actual) {
  return {std::move(name), "-inf", format_double(actual.raw()), 0.0, actual.is_neg_inf()};
}

GoldenCheck same(std::string name, const std::string& expected, const std::string& actual) {
  return {std::move(name), expected, actual, 0.0, expected == actual};
}

void one_node_majorization(std::vector<GoldenCheck>& out) {
  const FieldFunction field({0.0, 2.0 / 3.0, 1.0}, {NegInfPiece{}, ConstantPiece{0.0}},
                            {ExtReal::neg_inf(), ExtReal::finite(0.0), ExtReal::finite(0.0)});
  const ProblemInstance inst({1.0}, Kernel::log(), field);
  const NodeSystem x{1.0 / 3.0}, y{2.0 / 3.0};
  const MaximaVector mx = interval_maxima(inst, x);
  const MaximaVector my = interval_maxima(inst, y);
  out.push_back(neg_inf("gap_field.m0(x)", mx.m[0]));
  out.push_back(neg_inf("gap_field.m0(y)", my.m[0]));
  out.push_back(near("gap_field.m1(x)", std::log(2.0 / 3.0), mx.m[1], 1e-9));
  out.push_back(near("gap_field.m1(y)", std::log(1.0 / 3.0), my.m[1], 1e-9));
  out.push_back(same("gap_field.relation", "x_majorizes_y", std::string(to_string(compare_vectors(mx, my, 1e-9).relation))));
}

void chebyshev(std::vector<GoldenCheck>& out) {
  for (int n = 1; n <= 3; ++n) {
    const ProblemInstance inst = ProblemInstance::unit(n, Kernel::log());
    const std::string tag = "chebyshev.n" + std::to_string(n);
    const SolveResult mm = minimize_max(inst);
    out.push_back(near(tag + ".value", (1.0 - 2.0 * n) * std::numbers::ln2, mm.value, 1e-6));

    const SolveResult eq = find_equioscillation(inst);
    std::vector<double> expect;
    for (int k = 1; k <= n; ++k) expect.push_back((1.0 + std::cos((2.0 * k - 1.0) * std::numbers::pi / (2.0 * n))) / 2.0);
    std::sort(expect.begin(), expect.end());
    for (int k = 0; k < n; ++k) {
      out.push_back(near(tag + ".node" + std::to_string(k + 1), expect[static_cast<std::size_t>(k)],
                         ExtReal::finite(eq.nodes[static_cast<std::size_t>(k)]), 1e-6));
    }
  }
}

void widening(std::vector<GoldenCheck>& out) {
  const WideningParams p{1.0, 1.0, 0.1, 0.2, 0.6, 0.7};
  out.push_back(near("widening.kappa", 1.0, ExtReal::finite(kappa(p)), 1e-12));
  const WideningSides s = widening_sides(Kernel::log(), p, 0.05);
  out.push_back(near("widening.lhs(0.05)", std::log(0.0325), s.lhs, 1e-12));
  out.push_back(near("widening.rhs(0.05)", std::log(0.0825), s.rhs, 1e-12));
  const ViolationReport rep = check_widening_part(Kernel::log(), p, WideningPart::c, 1000);
  out.push_back({"widening.part_c.violations", "0", std::to_string(rep.violations + rep.strict_failures), 0.0, rep.ok()});
}

}  // namespace

std::vector<GoldenCheck> run_golden_checks() {
  std::vector<GoldenCheck> out;
  one_node_majorization(out);
  chebyshev(out);
  widening(out);
  return out;
}

nlohmann::json golden_payload(const std::vector<GoldenCheck>& checks) {
  nlohmann::json arr = nlohmann::json::array();
  bool all = true;
  for (const auto& c : checks) {
    arr.push_back({{"name", c.name},
                   {"expected", c.expected},
                   {"actual", c.actual},
                   {"tolerance", c.tolerance},
                   {"pass", c.pass}});
    all = all && c.pass;
  }
  return {{"kind", "golden"}, {"checks", std::move(arr)}, {"pass", all}};
}

}  // namespace sot::harness
