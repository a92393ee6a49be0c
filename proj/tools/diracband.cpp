// Command-line front end: parameter sweeps, spectral-flow reports, mapping
// degrees, verification suites, and shooting-oracle cross-checks.

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "diracband/angular.hpp"
#include "diracband/boundary.hpp"
#include "diracband/branches.hpp"
#include "diracband/dispersion.hpp"
#include "diracband/oracle.hpp"
#include "diracband/radial.hpp"
#include "diracband/semiq.hpp"
#include "diracband/specfun.hpp"
#include "diracband/symmetry.hpp"

namespace {

using json = nlohmann::json;
using namespace diracband;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitSolver = 3;
constexpr int kExitAmbiguous = 4;

// shortest round-trip decimal, locale-independent
std::string fmt(double v) {
  char buf[40];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

int default_threads() {
  if (const char* env = std::getenv("DIRACBAND_THREADS")) {
    int t = std::atoi(env);
    if (t > 0) return t;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

std::optional<int> parse_two_j(double j) {
  double two_j = 2.0 * j;
  int t = static_cast<int>(std::llround(two_j));
  if (std::abs(two_j - t) > 1e-9 || t < 1 || t % 2 == 0) return std::nullopt;
  return t;
}

std::optional<BoundaryKind> parse_bc(const std::string& s) {
  if (s == "aps" || s == "aps-minus") return BoundaryKind::ApsMinus;
  if (s == "aps-plus") return BoundaryKind::ApsPlus;
  if (s == "chiral") return BoundaryKind::ChiralBag;
  return std::nullopt;
}

const char* class_name(branches::StateClass c) {
  switch (c) {
    case branches::StateClass::Edge: return "edge";
    case branches::StateClass::Bulk: return "bulk";
    case branches::StateClass::ZeroMode: return "zero_mode";
    case branches::StateClass::Critical: return "critical";
  }
  return "?";
}

struct SweepArgs {
  std::string bc = "aps";
  double j = 3.5;
  double R = 1.0;
  double lambda = 0.0;
  double mu_min = -4.0, mu_max = 4.0;
  int mu_steps = 201;
  std::string branch_kinds = "edge";
  int n_bulk = 4;
  std::string out;
  bool emit_plot = false;
  int threads = 0;
};

int run_sweep(const SweepArgs& a) {
  auto bc = parse_bc(a.bc);
  auto two_j = parse_two_j(a.j);
  if (!bc || !two_j || !(a.R > 0.0) || a.mu_steps < 2 || !(a.mu_max > a.mu_min)) {
    std::cerr << "sweep: invalid configuration\n";
    return kExitConfig;
  }
  branches::SweepConfig cfg;
  cfg.bc = *bc;
  cfg.l = (*two_j - 1) / 2;
  cfg.R = a.R;
  cfg.lambda = a.lambda;
  cfg.threads = a.threads > 0 ? a.threads : default_threads();
  cfg.edge = a.branch_kinds.find("edge") != std::string::npos;
  cfg.n_bulk = a.branch_kinds.find("bulk") != std::string::npos ? a.n_bulk : 0;
  if (!cfg.edge && cfg.n_bulk == 0) {
    std::cerr << "sweep: --branches must name edge and/or bulk\n";
    return kExitConfig;
  }
  cfg.mu_grid.resize(a.mu_steps);
  for (int i = 0; i < a.mu_steps; ++i)
    cfg.mu_grid[i] = a.mu_min + (a.mu_max - a.mu_min) * i / (a.mu_steps - 1);

  std::vector<branches::Branch> brs;
  try {
    brs = branches::sweep(cfg);
  } catch (const std::exception& e) {
    std::cerr << "sweep: solver failure: " << e.what() << "\n";
    return kExitSolver;
  }

  std::ostringstream csv;
  csv << "mu,E,j,p_sign,state_class,branch_id,residual\n";
  for (const auto& br : brs) {
    if (br.jump_warning)
      std::cerr << "sweep: branch-jump warning on " << br.id << "\n";
    for (const auto& p : br.points) {
      csv << fmt(p.mu) << ',' << fmt(p.E) << ',' << fmt(a.j) << ',' << p.p_sign << ','
          << class_name(p.state_class) << ',' << p.branch_id << ',' << fmt(p.residual)
          << '\n';
    }
  }
  if (a.out.empty()) {
    std::cout << csv.str();
  } else {
    std::ofstream f(a.out, std::ios::binary);
    if (!f) {
      std::cerr << "sweep: cannot open " << a.out << "\n";
      return kExitConfig;
    }
    f << csv.str();
    if (a.emit_plot) {
      std::ofstream gp(a.out + ".gp", std::ios::binary);
      gp << "set datafile separator ','\n"
         << "set xlabel 'mu'\nset ylabel 'E'\nset key off\n"
         << "plot '" << a.out << "' every ::1 using 1:2 with dots\n";
    }
  }
  return kExitOk;
}

struct CsvRow {
  double mu, E, residual;
  int p_sign;
  std::string state_class, branch_id;
};

std::optional<std::vector<CsvRow>> read_csv(const std::string& path) {
  std::ifstream f(path);
  if (!f) return std::nullopt;
  std::string line;
  if (!std::getline(f, line)) return std::nullopt;
  std::vector<CsvRow> rows;
  while (std::getline(f, line)) {
    if (line.empty()) continue;
    std::vector<std::string> parts;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) parts.push_back(cell);
    if (parts.size() != 7) return std::nullopt;
    CsvRow r;
    auto num = [](const std::string& s, double& out) {
      auto res = std::from_chars(s.data(), s.data() + s.size(), out);
      return res.ec == std::errc();
    };
    if (!num(parts[0], r.mu) || !num(parts[1], r.E) || !num(parts[6], r.residual))
      return std::nullopt;
    r.p_sign = std::atoi(parts[3].c_str());
    r.state_class = parts[4];
    r.branch_id = parts[5];
    rows.push_back(std::move(r));
  }
  return rows;
}

json flow_to_json(const branches::FlowReport& rep) {
  json out;
  out["mode"] = rep.mode == branches::FlowMode::Ordinary ? "ordinary" : "extended";
  out["spectral_flow"] = rep.flow;
  out["contributions"] = json::array();
  for (const auto& c : rep.contributions) {
    out["contributions"].push_back({{"branch_id", c.branch_id},
                                    {"p_sign", c.p_sign},
                                    {"crossing_mu", c.crossing_mu},
                                    {"delta", c.delta},
                                    {"line", c.line}});
  }
  return out;
}

int run_flow(const std::string& input, const std::string& mode, const std::string& out) {
  auto rows = read_csv(input);
  if (!rows) {
    std::cerr << "flow: cannot read " << input << "\n";
    return kExitConfig;
  }
  std::map<std::string, branches::Branch> grouped;
  bool any_bulk = false;
  for (const auto& r : *rows) {
    auto& br = grouped[r.branch_id];
    br.id = r.branch_id;
    br.p_sign = r.p_sign;
    branches::StateClass cls = branches::StateClass::Edge;
    if (r.state_class == "bulk") cls = branches::StateClass::Bulk;
    if (r.state_class == "zero_mode") cls = branches::StateClass::ZeroMode;
    if (r.state_class == "critical") cls = branches::StateClass::Critical;
    any_bulk |= cls == branches::StateClass::Bulk || cls == branches::StateClass::Critical;
    br.points.push_back({r.mu, r.E, cls, r.p_sign, r.residual, r.branch_id});
  }
  std::vector<branches::Branch> brs;
  for (auto& [id, br] : grouped) brs.push_back(std::move(br));

  branches::FlowMode fm;
  if (mode == "ordinary")
    fm = branches::FlowMode::Ordinary;
  else if (mode == "extended")
    fm = branches::FlowMode::Extended;
  else
    fm = any_bulk ? branches::FlowMode::Extended : branches::FlowMode::Ordinary;

  json j;
  try {
    j = flow_to_json(branches::spectral_flow(brs, fm));
  } catch (const branches::AmbiguousCrossingError& e) {
    std::cerr << "flow: " << e.what() << "\n";
    return kExitAmbiguous;
  }
  if (out.empty())
    std::cout << j.dump(2) << "\n";
  else
    std::ofstream(out, std::ios::binary) << j.dump(2) << "\n";
  return kExitOk;
}

json report_to_json(const semiq::DegreeReport& r) {
  const char* m = r.method == semiq::DegreeMethod::Analytic
                      ? "analytic"
                      : (r.method == semiq::DegreeMethod::Quadrature ? "quadrature"
                                                                     : "trace_form");
  return {{"method", m},
          {"value", r.value},
          {"error_estimate", r.error_estimate},
          {"raw_integral", r.raw_integral},
          {"mu", r.mu}};
}

int run_degree(double mu, bool jump, double k_max, int n_radial, double grid_step,
               double box, bool with_trace, const std::string& out) {
  json j;
  j["mu"] = mu;
  if (mu == 0.0) {
    j["undefined"] = true;
    j["reason"] = "the S3 maps are not defined at k = 0 when mu = 0";
  } else {
    semiq::QuadratureParams qp;
    qp.k_max = k_max;
    qp.n_radial = n_radial;
    for (int sign : {+1, -1}) {
      const char* key = sign > 0 ? "q_plus" : "q_minus";
      j[key]["analytic"] = report_to_json(semiq::degree_analytic(sign, mu));
      j[key]["quadrature"] = report_to_json(semiq::degree_quadrature(sign, mu, qp));
    }
    if (with_trace) {
      semiq::TraceFormParams tp;
      tp.grid_step = grid_step;
      tp.box_halfwidth = box;
      j["h_plus_trace_form"] = report_to_json(semiq::degree_trace_form(mu, tp));
    }
    if (jump) {
      const double amu = std::abs(mu);
      double jp = semiq::degree_analytic(+1, amu).value -
                  semiq::degree_analytic(+1, -amu).value;
      double jm = semiq::degree_analytic(-1, amu).value -
                  semiq::degree_analytic(-1, -amu).value;
      j["jump"] = {{"q_plus", jp}, {"q_minus", jm}, {"net", jp + jm}};
    }
  }
  if (out.empty())
    std::cout << j.dump(2) << "\n";
  else
    std::ofstream(out, std::ios::binary) << j.dump(2) << "\n";
  return kExitOk;
}

struct Check {
  std::string name;
  double residual;
  double tol;
};

json run_suite(const std::string& name, const std::vector<Check>& checks, bool& all_ok) {
  json out;
  out["name"] = name;
  out["checks"] = json::array();
  bool ok = true;
  for (const auto& c : checks) {
    bool pass = c.residual <= c.tol;
    ok &= pass;
    out["checks"].push_back({{"name", c.name},
                             {"residual", c.residual},
                             {"tolerance", c.tol},
                             {"passed", pass}});
  }
  out["passed"] = ok;
  all_ok &= ok;
  return out;
}

std::vector<Check> suite_symmetry(int samples, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  double worst_k = 0.0, worst_b = 0.0;
  for (int i = 0; i < samples; ++i) {
    for (const auto& c : symmetry::check_k_symmetries(
             semiq::Vec3(u(rng), u(rng), u(rng)), u(rng)))
      worst_k = std::max(worst_k, c.residual);
    int l = i % 5;
    for (const auto& c : symmetry::check_boundary_symmetries(
             AngularSector(2 * l + 1, 1, SpinorType::Phi), u(rng), 0.5 + std::abs(u(rng))))
      worst_b = std::max(worst_b, c.residual);
  }
  std::vector<symmetry::SpectrumPair> pairs;
  for (double mu : {-2.0, 0.5}) {
    symmetry::SpectrumPair p;
    p.mu = mu;
    p.phi = symmetry::all_roots(
        ProblemSpec(BoundaryKind::ApsMinus, AngularSector(7, 1, SpinorType::Phi), 1.0), mu, 3);
    p.psi = symmetry::all_roots(
        ProblemSpec(BoundaryKind::ApsMinus, AngularSector(7, 1, SpinorType::Psi), 1.0), mu, 3);
    pairs.push_back(std::move(p));
  }
  auto mirror = symmetry::check_spectrum_mirror_aps(pairs);
  auto refl = symmetry::check_chiral_lambda_reflection(3, 1.0, 0.1, {0.8, -0.6}, 2);
  double asym = symmetry::chiral_self_asymmetry(3, 1.0, 0.1, 0.8, 2);
  return {{"k_matrix_identities", worst_k, 1e-13},
          {"boundary_identities", worst_b, 1e-13},
          {"aps_spectrum_mirror", mirror.residual, 1e-9},
          {"chiral_lambda_reflection", refl.residual, 1e-9},
          {"chiral_asymmetry_present", asym > 1e-3 ? 0.0 : 1.0, 0.5}};
}

std::vector<Check> suite_current() {
  double worst_aps = 0.0, worst_chiral = 0.0;
  for (int two_j : {1, 7}) {
    for (double mu : {-2.0, 0.5, 2.0}) {
      for (auto type : {SpinorType::Phi, SpinorType::Psi}) {
        AngularSector s(two_j, 1, type);
        auto e = boundary::aps_boundary_eigen(s, mu, 1.0);
        worst_aps = std::max(worst_aps,
                             std::abs(boundary::boundary_current_mix(
                                 s, {e.coeff_minus[0], 0.0}, {e.coeff_minus[1], 0.0})));
        worst_aps = std::max(worst_aps,
                             std::abs(boundary::boundary_current_mix(
                                 s, {e.coeff_plus[0], 0.0}, {e.coeff_plus[1], 0.0})));
        worst_chiral = std::max(
            worst_chiral, std::abs(boundary::boundary_current_mix(
                              s, {std::exp(-0.1) * 0.8, 0.0}, {0.8, 0.0})));
      }
    }
  }
  // a deliberately phase-mixed state must carry current
  AngularSector s(7, 3, SpinorType::Phi);
  auto e = boundary::aps_boundary_eigen(s, 1.0, 1.0);
  double mixed = std::abs(boundary::boundary_current_mix(
      s, {e.coeff_plus[0], e.coeff_minus[0]}, {e.coeff_plus[1], e.coeff_minus[1]}));
  return {{"aps_eigenstate_current", worst_aps, 1e-12},
          {"chiral_state_current", worst_chiral, 1e-12},
          {"mixed_state_current_nonzero", mixed > 1e-3 ? 0.0 : 1.0, 0.5}};
}

std::vector<Check> suite_angular() {
  using angular::HarmonicBranch;
  double worst_sl = 0.0, worst_sr = 0.0, worst_norm = 0.0, worst_density = 0.0;
  for (int two_j : {1, 7, 13}) {
    double jv = 0.5 * two_j;
    for (double th : {0.7, 1.9}) {
      AngularSector s(two_j, 1, SpinorType::Phi);
      auto rp = angular::apply_sigma_dot_L(s, HarmonicBranch::Plus, th, 1.1) -
                angular::spinor_harmonic(s, HarmonicBranch::Plus, th, 1.1) *
                    angular::Complex(jv - 0.5, 0.0);
      auto rm = angular::apply_sigma_dot_L(s, HarmonicBranch::Minus, th, 1.1) -
                angular::spinor_harmonic(s, HarmonicBranch::Minus, th, 1.1) *
                    angular::Complex(-(jv + 1.5), 0.0);
      worst_sl = std::max({worst_sl, std::sqrt(rp.norm2()), std::sqrt(rm.norm2())});
      auto plus = angular::spinor_harmonic(s, HarmonicBranch::Plus, th, 2.3);
      auto minus = angular::spinor_harmonic(s, HarmonicBranch::Minus, th, 2.3);
      worst_sr = std::max(worst_sr,
                          std::sqrt((angular::apply_sigma_r(plus, th, 2.3) - minus).norm2()));
      worst_density = std::max(worst_density, std::abs(plus.norm2() - minus.norm2()));
    }
    auto field = [two_j](double t, double p) {
      return angular::spinor_harmonic(AngularSector(two_j, 1, SpinorType::Phi),
                                      HarmonicBranch::Minus, t, p);
    };
    worst_norm = std::max(worst_norm, std::abs(angular::sphere_inner(field, field) - 1.0));
  }
  return {{"sigma_L_eigenrelation", worst_sl, 1e-8},
          {"sigma_r_exchange", worst_sr, 1e-12},
          {"density_identity", worst_density, 1e-12},
          {"sphere_normalization", worst_norm, 1e-10}};
}

std::vector<Check> suite_projector(int samples, unsigned seed) {
  std::mt19937 rng(seed + 1);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  double worst_alg = 0.0, worst_eq = 0.0, worst_deg = 0.0;
  for (int i = 0; i < samples; ++i) {
    auto s = semiq::k_hamiltonian(semiq::Vec3(u(rng), u(rng), u(rng)), u(rng));
    const auto& P = s.projector_plus;
    worst_alg = std::max(worst_alg, (P * P - P).cwiseAbs().maxCoeff());
    worst_alg = std::max(worst_alg, std::abs(P.trace().real() - 2.0));
    semiq::Mat4 spectral =
        s.lambda_plus * s.projector_plus + s.lambda_minus * s.projector_minus;
    worst_alg = std::max(worst_alg, (spectral - s.matrix).cwiseAbs().maxCoeff());
    Eigen::SelfAdjointEigenSolver<semiq::Mat4> es(s.matrix);
    worst_deg = std::max(worst_deg, std::abs(es.eigenvalues()[0] - es.eigenvalues()[1]));
    worst_deg = std::max(worst_deg, std::abs(es.eigenvalues()[2] - es.eigenvalues()[3]));
  }
  auto crossing = semiq::eigenspace_crossing_check({-1.0, -1e-8, 1e-8, 1.0});
  // equivariance at a few fixed SU(2) elements
  for (double t : {0.3, 1.2, 2.5}) {
    semiq::Mat2 g;
    g << std::cos(t), std::sin(t), -std::sin(t), std::cos(t);
    semiq::Mat4 D = semiq::Mat4::Zero();
    D.block<2, 2>(0, 0) = g;
    D.block<2, 2>(2, 2) = g;
    Eigen::Matrix3d G;
    const semiq::Mat2 sig[3] = {semiq::pauli_dot({1, 0, 0}), semiq::pauli_dot({0, 1, 0}),
                                semiq::pauli_dot({0, 0, 1})};
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        G(a, b) = 0.5 * (sig[a] * g * sig[b] * g.adjoint()).trace().real();
    semiq::Vec3 k(0.7, -0.4, 1.3);
    semiq::Mat4 lhs = D * semiq::k_hamiltonian(k, 0.8).matrix * D.adjoint();
    semiq::Mat4 rhs = semiq::k_hamiltonian(G * k, 0.8).matrix;
    worst_eq = std::max(worst_eq, (lhs - rhs).cwiseAbs().maxCoeff());
  }
  return {{"projector_algebra", worst_alg, 1e-13},
          {"double_degeneracy", worst_deg, 1e-12},
          {"su2_equivariance", worst_eq, 1e-13},
          {"eigenspace_crossing", crossing.projector_limit_residual, 1e-6}};
}

std::vector<Check> suite_limits() {
  const int l = 3;
  auto grid = radial::check_grid(1.0);
  AngularSector phi_s(2 * l + 1, 1, SpinorType::Phi);
  AngularSector psi_s(2 * l + 1, 1, SpinorType::Psi);

  // APS zero-mode transients at mu = +-1e-4
  double worst_zero = 0.0;
  const double gam = specfun::gamma_half(2 * l + 3);
  for (double mu : {1e-4, -1e-4}) {
    auto red = radial::reduced_edge_state(phi_s, 0.0, mu);
    for (double r : grid) {
      auto [f, g] = red(r);
      worst_zero = std::max(worst_zero, std::abs(f - std::pow(r, l) / gam));
      worst_zero = std::max(worst_zero, std::abs(g));
    }
  }

  // chiral-bag transient limits onto the critical profile
  auto [em, ep] = dispersion::critical_eigenvalues_chiral(l, 1.0, 0.1);
  const double mu_c = -em;
  auto crit = radial::critical_profile(phi_s, radial::CriticalCase::EEqualMinusMu, mu_c);
  double worst_crit = std::max(
      radial::profile_distance(crit, radial::reduced_edge_state(phi_s, -mu_c + 1e-6, mu_c),
                               grid),
      radial::profile_distance(crit, radial::reduced_bulk_state(phi_s, -mu_c - 1e-6, mu_c),
                               grid));
  auto critp = radial::critical_profile(psi_s, radial::CriticalCase::EEqualPlusMu, ep);
  worst_crit = std::max(
      worst_crit,
      radial::profile_distance(critp, radial::reduced_edge_state(psi_s, ep - 1e-6, ep), grid));

  // boundary eigenvalue continuity towards mu = 0
  auto near = boundary::aps_boundary_eigen(phi_s, 1e-9, 1.0);
  auto limit = boundary::aps_boundary_eigen(phi_s, 0.0, 1.0);
  double worst_cont = std::max(std::abs(near.lambda_plus - limit.lambda_plus),
                               std::abs(near.lambda_minus - limit.lambda_minus));

  return {{"aps_zero_mode_limit", worst_zero, 1e-6},
          {"chiral_critical_limit", worst_crit, 1e-5},
          {"boundary_eigenvalue_continuity", worst_cont, 1e-12}};
}

int run_verify(const std::string& suites, int samples, unsigned seed,
               const std::string& out) {
  json j;
  j["suites"] = json::array();
  bool all_ok = true;
  auto want = [&](const char* name) {
    return suites == "all" || suites.find(name) != std::string::npos;
  };
  if (want("symmetry")) j["suites"].push_back(run_suite("symmetry", suite_symmetry(samples, seed), all_ok));
  if (want("current")) j["suites"].push_back(run_suite("current", suite_current(), all_ok));
  if (want("angular")) j["suites"].push_back(run_suite("angular", suite_angular(), all_ok));
  if (want("projector"))
    j["suites"].push_back(run_suite("projector", suite_projector(samples, seed), all_ok));
  if (want("limits")) j["suites"].push_back(run_suite("limits", suite_limits(), all_ok));
  j["passed"] = all_ok;
  if (out.empty())
    std::cout << j.dump(2) << "\n";
  else
    std::ofstream(out, std::ios::binary) << j.dump(2) << "\n";
  return all_ok ? kExitOk : 1;
}

int run_oracle(const std::string& bc_name, double jval, double R, double lambda, double mu,
               int n_bulk, const std::string& out) {
  auto bc = parse_bc(bc_name);
  auto two_j = parse_two_j(jval);
  if (!bc || !two_j || !(R > 0.0)) {
    std::cerr << "oracle: invalid configuration\n";
    return kExitConfig;
  }
  json j;
  j["bc"] = bc_name;
  j["j"] = jval;
  j["R"] = R;
  j["mu"] = mu;
  bool ok = true;
  for (auto type : {SpinorType::Phi, SpinorType::Psi}) {
    ProblemSpec spec(*bc, AngularSector(*two_j, 1, type), R, lambda);
    oracle::ShootingProblem prob{spec, mu};
    json side;

    auto edge_d = dispersion::edge_roots(spec, mu);
    std::vector<double> edge_o;
    if (mu != 0.0)
      edge_o = oracle::oracle_eigenvalues(prob, 0, -std::abs(mu) + 1e-9,
                                          std::abs(mu) - 1e-9);
    double worst_edge = symmetry::root_set_distance(edge_d, edge_o);
    side["edge_dispersion"] = edge_d;
    side["edge_oracle"] = edge_o;
    side["edge_max_diff"] = std::isfinite(worst_edge) ? worst_edge : -1.0;
    ok &= std::isfinite(worst_edge) && worst_edge <= 1e-6;

    std::vector<double> bulk_d, bulk_o;
    for (int esign : {-1, +1}) {
      auto d = dispersion::bulk_roots(spec, mu, n_bulk, esign);
      bulk_d.insert(bulk_d.end(), d.begin(), d.end());
      if (!d.empty()) {
        double lo = esign > 0 ? std::abs(mu) + 1e-9 : d.back() - 0.5;
        double hi = esign > 0 ? d.back() + 0.5 : -std::abs(mu) - 1e-9;
        auto o = oracle::oracle_eigenvalues(prob, n_bulk, lo, hi);
        bulk_o.insert(bulk_o.end(), o.begin(), o.end());
      }
    }
    double worst_bulk = symmetry::root_set_distance(bulk_d, bulk_o);
    side["bulk_dispersion"] = bulk_d;
    side["bulk_oracle"] = bulk_o;
    side["bulk_max_diff"] = std::isfinite(worst_bulk) ? worst_bulk : -1.0;
    double scale = 1.0;
    for (double e : bulk_d) scale = std::max(scale, std::abs(e));
    ok &= std::isfinite(worst_bulk) && worst_bulk <= 1e-6 * scale;

    j[type == SpinorType::Phi ? "phi" : "psi"] = side;
  }
  j["passed"] = ok;
  if (out.empty())
    std::cout << j.dump(2) << "\n";
  else
    std::ofstream(out, std::ios::binary) << j.dump(2) << "\n";
  return ok ? kExitOk : kExitSolver;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dirac ball spectra, spectral flows, and mapping degrees"};
  app.require_subcommand(1);

  SweepArgs sa;
  auto* sweep = app.add_subcommand("sweep", "trace eigenvalue branches against mu");
  sweep->add_option("--bc", sa.bc, "aps | aps-plus | chiral");
  sweep->add_option("--j", sa.j, "total angular momentum (half-integer)");
  sweep->add_option("--R", sa.R, "ball radius");
  sweep->add_option("--chiral-lambda", sa.lambda, "chiral-bag parameter");
  sweep->add_option("--mu-min", sa.mu_min);
  sweep->add_option("--mu-max", sa.mu_max);
  sweep->add_option("--mu-steps", sa.mu_steps);
  sweep->add_option("--branches", sa.branch_kinds, "edge | bulk | edge,bulk");
  sweep->add_option("--n-bulk", sa.n_bulk, "bulk roots per energy sign");
  sweep->add_option("--out", sa.out, "CSV path (default stdout)");
  sweep->add_flag("--emit-plot", sa.emit_plot, "write a gnuplot sidecar next to --out");
  sweep->add_option("--threads", sa.threads, "worker threads");

  std::string flow_input, flow_mode = "auto", flow_out;
  auto* flow = app.add_subcommand("flow", "spectral flow from a sweep CSV");
  flow->add_option("--input", flow_input)->required();
  flow->add_option("--mode", flow_mode, "ordinary | extended | auto");
  flow->add_option("--out", flow_out);

  double deg_mu = 1.0, deg_kmax = 200.0, deg_h = 0.0, deg_box = 0.0;
  int deg_nrad = 200;
  bool deg_jump = false, deg_no_trace = false;
  std::string deg_out;
  auto* degree = app.add_subcommand("degree", "mapping degrees of the S3 maps");
  degree->add_option("--mu", deg_mu);
  degree->add_flag("--jump", deg_jump, "report the degree jumps across mu = 0");
  degree->add_option("--k-max", deg_kmax);
  degree->add_option("--n-radial", deg_nrad);
  degree->add_option("--grid-step", deg_h, "trace-form grid step (0: auto)");
  degree->add_option("--box", deg_box, "trace-form box halfwidth (0: auto)");
  degree->add_flag("--no-trace", deg_no_trace, "skip the trace-form route");
  degree->add_option("--out", deg_out);

  std::string ver_suites = "all", ver_out;
  int ver_samples = 200;
  unsigned ver_seed = 12345;
  auto* verify = app.add_subcommand("verify", "run the verification suites");
  verify->add_option("--suites", ver_suites, "symmetry,current,angular,projector,limits");
  verify->add_option("--samples", ver_samples);
  verify->add_option("--seed", ver_seed);
  verify->add_option("--out", ver_out);

  std::string ora_bc = "aps", ora_out;
  double ora_j = 3.5, ora_R = 1.0, ora_lambda = 0.0, ora_mu = 0.5;
  int ora_nbulk = 5;
  auto* oraclecmd = app.add_subcommand("oracle", "cross-check roots by shooting");
  oraclecmd->add_option("--bc", ora_bc);
  oraclecmd->add_option("--j", ora_j);
  oraclecmd->add_option("--R", ora_R);
  oraclecmd->add_option("--chiral-lambda", ora_lambda);
  oraclecmd->add_option("--mu", ora_mu);
  oraclecmd->add_option("--n-bulk", ora_nbulk);
  oraclecmd->add_option("--out", ora_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (sweep->parsed()) return run_sweep(sa);
    if (flow->parsed()) return run_flow(flow_input, flow_mode, flow_out);
    if (degree->parsed())
      return run_degree(deg_mu, deg_jump, deg_kmax, deg_nrad, deg_h, deg_box,
                        !deg_no_trace, deg_out);
    if (verify->parsed()) return run_verify(ver_suites, ver_samples, ver_seed, ver_out);
    if (oraclecmd->parsed())
      return run_oracle(ora_bc, ora_j, ora_R, ora_lambda, ora_mu, ora_nbulk, ora_out);
  } catch (const branches::AmbiguousCrossingError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitAmbiguous;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSolver;
  }
  return kExitOk;
}
