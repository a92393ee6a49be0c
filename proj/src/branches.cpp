#include "diracband/branches.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

namespace diracband::branches {

namespace {

constexpr double kLineTol = 1e-9;   // |E| vs |mu| classification margin
constexpr double kOnLineTol = 1e-10;  // crossing-detection dead zone

StateClass classify(double E, double mu) {
  if (mu == 0.0 && std::abs(E) < 1e-12) return StateClass::ZeroMode;
  const double d = std::abs(E) - std::abs(mu);
  if (std::abs(d) <= kLineTol * std::max(1.0, std::abs(mu))) return StateClass::Critical;
  return d < 0.0 ? StateClass::Edge : StateClass::Bulk;
}

ProblemSpec spec_for(const SweepConfig& cfg, SpinorType type) {
  return ProblemSpec(cfg.bc, AngularSector(2 * cfg.l + 1, 1, type), cfg.R, cfg.lambda);
}

}  // namespace

BranchPoint solve_root(const dispersion::DispersionEquation& eq, double e_lo, double e_hi) {
  auto value = [&](double E) {
    auto v = eq.residual(E);
    if (!v.has_value())
      throw NoSignChangeError("solve_root: bracket enters a no-solution quadrant");
    return *v;
  };
  double lo = e_lo, hi = e_hi;
  double flo = value(lo), fhi = value(hi);
  if (flo == 0.0) hi = lo;
  if (fhi == 0.0) lo = hi;
  if (lo < hi && flo * fhi > 0.0)
    throw NoSignChangeError("solve_root: residual does not change sign on the bracket");
  while (hi - lo > 1e-6 * std::max(1.0, std::abs(lo))) {
    double mid = 0.5 * (lo + hi);
    double fm = value(mid);
    if (fm == 0.0) {
      lo = hi = mid;
      break;
    }
    if (flo * fm < 0.0)
      hi = mid;
    else {
      lo = mid;
      flo = fm;
    }
  }
  double x = 0.5 * (lo + hi);
  const double width = std::max(hi - lo, 1e-12);
  const double h = 1e-7 * std::max(1.0, std::abs(x));
  double fx = value(x);
  for (int it = 0; it < 64 && std::abs(fx) > 1e-12; ++it) {
    double d = (value(x + h) - value(x - h)) / (2.0 * h);
    if (d == 0.0) break;
    double xn = x - fx / d;
    if (xn < lo - 4.0 * width || xn > hi + 4.0 * width) break;
    x = xn;
    fx = value(x);
  }
  if (std::abs(fx) > 1e-12) {
    // fall back to bisection at machine width
    double blo = e_lo, bhi = e_hi, fblo = value(blo);
    for (int it = 0; it < 200 && bhi - blo > 4e-16 * std::max(1.0, std::abs(blo)); ++it) {
      double mid = 0.5 * (blo + bhi);
      double fm = value(mid);
      if (fm == 0.0) {
        blo = bhi = mid;
        break;
      }
      if (fblo * fm < 0.0)
        bhi = mid;
      else {
        blo = mid;
        fblo = fm;
      }
    }
    x = 0.5 * (blo + bhi);
    fx = value(x);
    if (std::abs(fx) > 1e-12)
      throw SolverIterationError("solve_root: could not reach the residual tolerance");
  }
  BranchPoint out;
  out.mu = eq.mu;
  out.E = x;
  out.residual = fx;
  out.p_sign = eq.spec.sector.p_sign();
  out.state_class = classify(x, eq.mu);
  return out;
}

namespace {

struct Candidate {
  double E = 0.0;
  double residual = 0.0;
  StateClass cls = StateClass::Edge;
};

std::vector<Candidate> candidates_at(const SweepConfig& cfg, SpinorType type, double mu) {
  std::vector<Candidate> out;
  const ProblemSpec spec = spec_for(cfg, type);
  if (cfg.edge) {
    if (mu == 0.0) {
      if (cfg.bc != BoundaryKind::ChiralBag)
        out.push_back({0.0, 0.0, StateClass::ZeroMode});
    } else {
      for (double e : dispersion::edge_roots(spec, mu)) {
        auto r = dispersion::edge_residual(spec, e, mu);
        out.push_back({e, r.value_or(0.0), classify(e, mu)});
      }
    }
  }
  if (cfg.n_bulk > 0) {
    for (int esign : {-1, +1}) {
      for (double e : dispersion::bulk_roots(spec, mu, cfg.n_bulk, esign)) {
        auto r = dispersion::bulk_residual(spec, e, mu);
        out.push_back({e, r.value_or(0.0), classify(e, mu)});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const Candidate& a, const Candidate& b) {
    return a.E < b.E;
  });
  // drop near-duplicates (an edge and a bulk scan can both see a root on the line)
  std::vector<Candidate> dedup;
  for (const auto& c : out) {
    if (!dedup.empty() && std::abs(c.E - dedup.back().E) < 1e-8) continue;
    dedup.push_back(c);
  }
  return dedup;
}

std::vector<Branch> sweep_one_type(const SweepConfig& cfg, SpinorType type) {
  const int p = (type == SpinorType::Phi) ? +1 : -1;
  const std::string prefix = (type == SpinorType::Phi) ? "phi" : "psi";
  std::vector<Branch> done;
  struct Alive {
    Branch br;
    bool matched = false;
  };
  std::vector<Alive> alive;
  int seq = 0;

  for (double mu : cfg.mu_grid) {
    auto cand = candidates_at(cfg, type, mu);
    std::vector<bool> taken(cand.size(), false);

    // all (branch, candidate) pairs by predicted distance, greedy assignment
    struct Pair {
      double dist;
      size_t bi, ci;
      double step;
    };
    std::vector<Pair> pairs;
    for (size_t bi = 0; bi < alive.size(); ++bi) {
      const auto& pts = alive[bi].br.points;
      double predicted = pts.back().E;
      double step = 0.0;
      if (pts.size() >= 2) {
        const auto& p1 = pts[pts.size() - 2];
        const auto& p2 = pts.back();
        if (p2.mu != p1.mu) {
          double slope = (p2.E - p1.E) / (p2.mu - p1.mu);
          predicted = p2.E + slope * (mu - p2.mu);
          step = std::abs(predicted - p2.E);
        }
      }
      for (size_t ci = 0; ci < cand.size(); ++ci)
        pairs.push_back({std::abs(cand[ci].E - predicted), bi, ci, step});
    }
    std::sort(pairs.begin(), pairs.end(),
              [](const Pair& a, const Pair& b) { return a.dist < b.dist; });
    for (auto& alv : alive) alv.matched = false;
    for (const auto& pr : pairs) {
      if (alive[pr.bi].matched || taken[pr.ci]) continue;
      alive[pr.bi].matched = true;
      taken[pr.ci] = true;
      const auto& c = cand[pr.ci];
      BranchPoint bp{mu, c.E, c.cls, p, c.residual, alive[pr.bi].br.id};
      const double grid_step =
          cfg.mu_grid.size() > 1 ? std::abs(cfg.mu_grid[1] - cfg.mu_grid[0]) : 1.0;
      if (pr.dist > 5.0 * std::max(pr.step, grid_step)) alive[pr.bi].br.jump_warning = true;
      alive[pr.bi].br.points.push_back(bp);
    }

    // retire unmatched branches, open branches for unmatched candidates
    std::vector<Alive> still;
    for (auto& alv : alive) {
      if (alv.matched)
        still.push_back(std::move(alv));
      else
        done.push_back(std::move(alv.br));
    }
    alive = std::move(still);
    for (size_t ci = 0; ci < cand.size(); ++ci) {
      if (taken[ci]) continue;
      Branch nb;
      const bool edge_like =
          cand[ci].cls == StateClass::Edge || cand[ci].cls == StateClass::ZeroMode;
      nb.id = prefix + (edge_like ? "_edge_" : "_bulk_") + std::to_string(seq++);
      nb.p_sign = p;
      nb.points.push_back({mu, cand[ci].E, cand[ci].cls, p, cand[ci].residual, nb.id});
      alive.push_back({std::move(nb), true});
    }
  }
  for (auto& alv : alive) done.push_back(std::move(alv.br));
  std::sort(done.begin(), done.end(),
            [](const Branch& a, const Branch& b) { return a.id < b.id; });
  return done;
}

}  // namespace

std::vector<Branch> sweep(const SweepConfig& cfg) {
  if (cfg.mu_grid.size() < 2) throw std::invalid_argument("sweep: mu grid too small");
  std::vector<Branch> phi, psi;
  if (cfg.threads > 1) {
    std::thread t([&] { phi = sweep_one_type(cfg, SpinorType::Phi); });
    psi = sweep_one_type(cfg, SpinorType::Psi);
    t.join();
  } else {
    phi = sweep_one_type(cfg, SpinorType::Phi);
    psi = sweep_one_type(cfg, SpinorType::Psi);
  }
  phi.insert(phi.end(), std::make_move_iterator(psi.begin()),
             std::make_move_iterator(psi.end()));
  return phi;
}

namespace {

struct LineCrossing {
  double mu = 0.0;
  int direction = 0;  // sign of the change of the signed distance
  size_t seg_lo = 0, seg_hi = 0;
};

// Sign-change scan of a sampled signed distance d(mu) with an on-line dead
// zone; a touch that does not cross raises AmbiguousCrossingError.
std::vector<LineCrossing> scan_crossings(const std::vector<BranchPoint>& pts,
                                         const std::vector<double>& d) {
  std::vector<LineCrossing> out;
  const size_t n = d.size();
  std::vector<int> sign(n, 0);
  for (size_t i = 0; i < n; ++i)
    sign[i] = d[i] > kOnLineTol ? 1 : (d[i] < -kOnLineTol ? -1 : 0);
  size_t last_nz = n;  // index of last nonzero sign
  for (size_t i = 0; i < n; ++i) {
    if (sign[i] == 0) continue;
    if (last_nz == n) {
      last_nz = i;
      continue;
    }
    if (sign[i] != sign[last_nz]) {
      // locate: interpolate within the bracketing nonzero samples
      double mu_a = pts[last_nz].mu, mu_b = pts[i].mu;
      double da = d[last_nz], db = d[i];
      double mu_c = (i == last_nz + 1) ? mu_a + (mu_b - mu_a) * (-da) / (db - da)
                                       : pts[(last_nz + i) / 2].mu;
      out.push_back({mu_c, sign[i], last_nz, i});
    } else if (i > last_nz + 1) {
      throw AmbiguousCrossingError(
          "spectral_flow: branch touches a crossing line without crossing it");
    }
    last_nz = i;
  }
  return out;
}

}  // namespace

FlowReport spectral_flow(const std::vector<Branch>& branches, FlowMode mode) {
  FlowReport rep;
  rep.mode = mode;
  for (const auto& br : branches) {
    const auto& pts = br.points;
    if (pts.size() < 2) continue;
    if (mode == FlowMode::Ordinary) {
      std::vector<double> d(pts.size());
      for (size_t i = 0; i < pts.size(); ++i) d[i] = pts[i].E;
      for (const auto& c : scan_crossings(pts, d)) {
        // +1 for an eigenvalue passing through zero upward
        rep.contributions.push_back({br.id, br.p_sign, c.mu, c.direction, "E=0"});
      }
    } else {
      std::vector<double> dp(pts.size()), dm(pts.size());
      for (size_t i = 0; i < pts.size(); ++i) {
        dp[i] = pts[i].E - pts[i].mu;
        dm[i] = pts[i].E + pts[i].mu;
      }
      for (const auto& c : scan_crossings(pts, dp))
        rep.contributions.push_back({br.id, br.p_sign, c.mu, -c.direction, "E=+mu"});
      for (const auto& c : scan_crossings(pts, dm))
        rep.contributions.push_back({br.id, br.p_sign, c.mu, -c.direction, "E=-mu"});
    }
  }
  std::sort(rep.contributions.begin(), rep.contributions.end(),
            [](const FlowContribution& a, const FlowContribution& b) {
              return a.branch_id < b.branch_id;
            });
  rep.flow = 0;
  for (const auto& c : rep.contributions) rep.flow += c.delta;
  return rep;
}

FlowReport extended_flow_refined(const SweepConfig& cfg,
                                 const std::vector<Branch>& branches) {
  FlowReport rep = spectral_flow(branches, FlowMode::Extended);
  for (auto& c : rep.contributions) {
    const SpinorType type = c.p_sign > 0 ? SpinorType::Phi : SpinorType::Psi;
    const ProblemSpec spec = spec_for(cfg, type);
    const double sgn = (c.line == "E=+mu") ? +1.0 : -1.0;
    auto on_line = [&](double mu) { return *dispersion::bulk_residual(spec, sgn * mu, mu); };
    // bracket around the sampled crossing
    const double step = std::abs(cfg.mu_grid[1] - cfg.mu_grid[0]);
    double lo = c.crossing_mu - step, hi = c.crossing_mu + step;
    double flo = on_line(lo), fhi = on_line(hi);
    if (flo * fhi > 0.0) continue;  // leave the interpolated estimate
    for (int it = 0; it < 80 && hi - lo > 1e-12; ++it) {
      double mid = 0.5 * (lo + hi);
      double fm = on_line(mid);
      if (fm == 0.0) {
        lo = hi = mid;
        break;
      }
      if (flo * fm < 0.0) {
        hi = mid;
        fhi = fm;
      } else {
        lo = mid;
        flo = fm;
      }
    }
    c.crossing_mu = 0.5 * (lo + hi);
  }
  return rep;
}

}  // namespace diracband::branches
