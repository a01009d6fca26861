#include "bkappa/rootfinder.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>

namespace bkappa {

Polynomial::Polynomial(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() < 2) {
    throw std::invalid_argument("Polynomial: degree must be >= 1");
  }
  if (coeffs_.back() == Complex{0.0, 0.0}) {
    throw std::invalid_argument("Polynomial: leading coefficient must be nonzero");
  }
}

Complex Polynomial::eval(Complex z) const {
  Complex r{0.0, 0.0};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * z + *it;
  return r;
}

Complex Polynomial::eval_deriv(Complex z) const {
  Complex r{0.0, 0.0};
  const int n = degree();
  for (int k = n; k >= 1; --k) r = r * z + coeffs_[static_cast<std::size_t>(k)] * static_cast<double>(k);
  return r;
}

Polynomial Polynomial::derivative() const {
  std::vector<Complex> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    d[k - 1] = coeffs_[k] * static_cast<double>(k);
  }
  return Polynomial(std::move(d));
}

double Polynomial::scale_at(Complex z) const {
  const double base = std::max(1.0, std::abs(z));
  double scale = 0.0, power = 1.0;
  for (const Complex& a : coeffs_) {
    scale += std::abs(a) * power;
    power *= base;
  }
  return scale;
}

SplitParts::SplitParts(const Polynomial& p)
    : coeffs_(p.coeffs()), degree_(p.degree()) {}

Complex SplitParts::p0(Complex z) const {
  const int n = degree_;
  Complex zn{1.0, 0.0};
  for (int i = 0; i < n; ++i) zn *= z;
  return coeffs_[static_cast<std::size_t>(n)] * zn + coeffs_[0];
}

Complex SplitParts::p1(Complex z) const {
  const int n = degree_;
  Complex r{0.0, 0.0};
  for (int k = n - 1; k >= 1; --k) r = (r + coeffs_[static_cast<std::size_t>(k)]) * z;
  return r;  // Horner of a_1 z + ... + a_{N-1} z^{N-1}
}

Complex SplitParts::dp0(Complex z) const {
  const int n = degree_;
  Complex zn{1.0, 0.0};
  for (int i = 0; i < n - 1; ++i) zn *= z;
  return coeffs_[static_cast<std::size_t>(n)] * static_cast<double>(n) * zn;
}

Complex SplitParts::dp1(Complex z) const {
  const int n = degree_;
  Complex r{0.0, 0.0};
  for (int k = n - 1; k >= 1; --k) {
    r = r * z + coeffs_[static_cast<std::size_t>(k)] * static_cast<double>(k);
  }
  return r;
}

double SplitParts::scale_at(Complex z) const {
  const double base = std::max(1.0, std::abs(z));
  double scale = 0.0, power = 1.0;
  for (const Complex& a : coeffs_) {
    scale += std::abs(a) * power;
    power *= base;
  }
  return scale;
}

std::vector<Complex> SplitParts::embedded_coeffs(Kappa kappa) const {
  const int n = degree_;
  double w0 = 1.0, w1 = 0.0;
  if (!kappa.is_zero()) {
    const double pref = kappa.is_infinite() ? 1.0 : 1.0 + 2.0 * kappa.value();
    if (kappa.is_infinite()) {
      w0 = w1 = 1.0;  // limit of (1+2k)B_k is 1 for both labels
    } else {
      w0 = pref * b_kappa(0.0, 0.5, kappa);
      w1 = pref * b_kappa(1.0, 0.5, kappa);
    }
  }
  std::vector<Complex> out(coeffs_.size());
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const bool end = k == 0 || static_cast<int>(k) == n;
    out[k] = coeffs_[k] * (end ? w0 : w1);
  }
  return out;
}

NormalizedPolynomial normalize(const std::vector<Complex>& coeffs) {
  std::size_t top = coeffs.size();
  while (top > 0 && coeffs[top - 1] == Complex{0.0, 0.0}) --top;
  if (top == 0) throw std::invalid_argument("normalize: all coefficients are zero");
  std::size_t bottom = 0;
  while (bottom < top && coeffs[bottom] == Complex{0.0, 0.0}) ++bottom;
  if (top - bottom < 2) {
    throw std::invalid_argument("normalize: degree after trimming must be >= 1");
  }
  std::vector<Complex> reduced(coeffs.begin() + static_cast<std::ptrdiff_t>(bottom),
                               coeffs.begin() + static_cast<std::ptrdiff_t>(top));
  return {Polynomial(std::move(reduced)), static_cast<int>(bottom)};
}

std::vector<Complex> initial_roots(const Polynomial& p) {
  const int n = p.degree();
  const Complex a0 = p.coeffs().front();
  const Complex an = p.coeffs().back();
  if (a0 == Complex{0.0, 0.0}) {
    throw std::invalid_argument("initial_roots: a_0 must be nonzero");
  }
  const double radius = std::pow(std::abs(a0 / an), 1.0 / n);
  const double arg = std::arg(-a0 / an);
  std::vector<Complex> roots(static_cast<std::size_t>(n));
  for (int m = 0; m < n; ++m) {
    const double phi = (arg + 2.0 * M_PI * m) / n;
    roots[static_cast<std::size_t>(m)] = radius * Complex{std::cos(phi), std::sin(phi)};
  }
  return roots;
}

Complex flow_velocity(const SplitParts& parts, Complex z, Kappa kappa, double theta,
                      bool perturb) {
  const Complex e = perturb ? std::exp(Complex{0.0, 2.0 * M_PI * theta})
                            : Complex{0.0, 0.0};
  const Complex q0 = parts.p0(z) + e;
  const Complex q1 = parts.p1(z) - e;

  Complex num, den;
  if (kappa.is_zero()) {
    num = 2.0 * q0;
    den = parts.dp0(z);
  } else {
    const double pref = 1.0 + 2.0 * kappa.value();
    const double b0 = b_kappa(0.0, 0.5, kappa);
    const double b1 = b_kappa(1.0, 0.5, kappa);
    const double g0 = db_kappa_dkappa(0, kappa);
    const double g1 = db_kappa_dkappa(1, kappa);
    num = pref * (q0 * (2.0 * b0 / pref + g0) + q1 * (2.0 * b1 / pref + g1));
    den = pref * (parts.dp0(z) * b0 + parts.dp1(z) * b1);
  }

  if (std::abs(den) < 1e-30 * parts.scale_at(z)) throw SingularJacobianError();
  return -num / den;
}

double theta_at(std::uint64_t seed, std::uint64_t step, std::uint64_t retry) {
  // splitmix64 finalizer over the packed counter
  std::uint64_t x = seed;
  for (std::uint64_t word : {step, retry}) {
    x += 0x9E3779B97F4A7C15ULL + word;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    x = x ^ (x >> 31);
  }
  return static_cast<double>(x >> 11) * 0x1.0p-53;
}

namespace {

struct StepOutcome {
  Complex z;
  bool failed = false;
};

// One Euler step of branch state z at kappa = step * dkappa, with the
// singular-Jacobian retry ladder (fresh theta per retry, up to 8).
StepOutcome advance_one_step(const SplitParts& parts, Complex z, int step,
                             const FlowConfig& cfg) {
  const Kappa kappa{step * cfg.dkappa};
  for (std::uint64_t retry = 0; retry <= 8; ++retry) {
    const double theta = theta_at(cfg.seed, static_cast<std::uint64_t>(step), retry);
    try {
      Complex v = flow_velocity(parts, z, kappa, theta, cfg.perturb);
      Complex dz = cfg.dkappa * v;
      if (cfg.step_halving && std::abs(dz) > 0.5 * (1.0 + std::abs(z))) {
        const Complex zh = z + 0.5 * dz;
        const Kappa kh{(step + 0.5) * cfg.dkappa};
        dz = 0.5 * dz + 0.5 * cfg.dkappa * flow_velocity(parts, zh, kh, theta, cfg.perturb);
      }
      const Complex zn = z + dz;
      if (!std::isfinite(zn.real()) || !std::isfinite(zn.imag())) return {z, true};
      return {zn, false};
    } catch (const SingularJacobianError&) {
      continue;
    }
  }
  return {z, true};
}

}  // namespace

std::vector<RootPath> track(const Polynomial& p, const FlowConfig& cfg) {
  if (!(cfg.dkappa > 0.0) || !(cfg.kappa_max > cfg.dkappa)) {
    throw std::invalid_argument("track: need dkappa > 0 and kappa_max > dkappa");
  }
  const SplitParts parts(p);
  const std::vector<Complex> start = initial_roots(p);
  const int nsteps = static_cast<int>(std::ceil(cfg.kappa_max / cfg.dkappa));
  const int stride = std::max(1, cfg.trace_stride);

  std::vector<RootPath> paths(start.size());
  for (std::size_t m = 0; m < start.size(); ++m) {
    RootPath& path = paths[m];
    path.branch = static_cast<int>(m);
    Complex z = start[m];
    path.samples.push_back({0, 0.0, z});
    for (int s = 0; s < nsteps; ++s) {
      const StepOutcome out = advance_one_step(parts, z, s, cfg);
      if (out.failed) {
        path.failed = true;
        break;
      }
      z = out.z;
      if ((s + 1) % stride == 0 || s + 1 == nsteps) {
        path.samples.push_back({s + 1, (s + 1) * cfg.dkappa, z});
      }
    }
    path.terminal = z;
    path.terminal_residual = std::abs(p.eval(z));
  }
  return paths;
}

PolishResult polish(const Polynomial& p, Complex z0, const FlowConfig& cfg) {
  PolishResult out;
  Complex z = z0;
  Complex best = z0;
  double best_res = std::abs(p.eval(z0));
  bool converged = false;
  int it = 0;
  for (; it < cfg.polish_max_iters; ++it) {
    const Complex f = p.eval(z);
    const double res = std::abs(f);
    if (res < best_res) {
      best = z;
      best_res = res;
    }
    if (res <= cfg.polish_tol * p.scale_at(z)) {
      converged = true;
      break;
    }
    const Complex df = p.eval_deriv(z);
    if (df == Complex{0.0, 0.0}) break;
    const Complex dz = f / df;
    z = z - dz;
    if (std::abs(dz) <= 1e-14 * (1.0 + std::abs(z))) {
      const double res2 = std::abs(p.eval(z));
      if (res2 < best_res) {
        best = z;
        best_res = res2;
      }
      converged = true;
      break;
    }
  }
  out.root = best;
  out.residual = best_res;
  out.iters = it;
  out.converged = converged || best_res <= cfg.polish_tol * p.scale_at(best);
  const Complex df = p.eval_deriv(best);
  out.newton_correction =
      df == Complex{0.0, 0.0} ? std::numeric_limits<double>::infinity()
                              : std::abs(p.eval(best) / df);
  return out;
}

namespace {

// union-find over point indices with a pairwise link predicate
template <class Link>
std::vector<std::vector<int>> link_clusters(int n, const Link& linked) {
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](int i) {
    while (parent[static_cast<std::size_t>(i)] != i) {
      parent[static_cast<std::size_t>(i)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(i)])];
      i = parent[static_cast<std::size_t>(i)];
    }
    return i;
  };
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (linked(i, j)) parent[static_cast<std::size_t>(find(i))] = find(j);
    }
  }
  std::vector<std::vector<int>> groups;
  std::vector<int> group_of(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    const int r = find(i);
    if (group_of[static_cast<std::size_t>(r)] < 0) {
      group_of[static_cast<std::size_t>(r)] = static_cast<int>(groups.size());
      groups.emplace_back();
    }
    groups[static_cast<std::size_t>(group_of[static_cast<std::size_t>(r)])].push_back(i);
  }
  return groups;
}

}  // namespace

std::vector<std::pair<Complex, int>> cluster(const std::vector<Complex>& roots,
                                             double radius) {
  const int n = static_cast<int>(roots.size());
  auto groups = link_clusters(n, [&](int i, int j) {
    return std::abs(roots[static_cast<std::size_t>(i)] -
                    roots[static_cast<std::size_t>(j)]) <= radius;
  });
  std::vector<std::pair<Complex, int>> out;
  out.reserve(groups.size());
  for (const auto& g : groups) {
    Complex centroid{0.0, 0.0};
    for (int i : g) centroid += roots[static_cast<std::size_t>(i)];
    centroid /= static_cast<double>(g.size());
    out.emplace_back(centroid, static_cast<int>(g.size()));
  }
  return out;
}

namespace {

// Newton iteration on an explicit coefficient vector.
Complex newton_on(const std::vector<Complex>& coeffs, Complex z, int max_iters) {
  const auto eval = [&coeffs](Complex w) {
    Complex r{0.0, 0.0};
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) r = r * w + *it;
    return r;
  };
  const auto deriv = [&coeffs](Complex w) {
    Complex r{0.0, 0.0};
    for (int k = static_cast<int>(coeffs.size()) - 1; k >= 1; --k) {
      r = r * w + coeffs[static_cast<std::size_t>(k)] * static_cast<double>(k);
    }
    return r;
  };
  for (int it = 0; it < max_iters; ++it) {
    const Complex f = eval(z);
    const Complex df = deriv(z);
    if (df == Complex{0.0, 0.0}) break;
    const Complex dz = f / df;
    z = z - dz;
    if (std::abs(dz) <= 1e-14 * (1.0 + std::abs(z))) break;
  }
  return z;
}

// Continuation endgame: the kappa-net point tracked to kappa_max still sits
// O(1/kappa^2) away from its root, which can be outside the plain Newton
// basin. Follow the net at geometrically growing kappa, predicting with the
// 1/kappa^2 offset model (z' = z + v (kappa/2)(1 - (kappa/kappa')^2)) and
// correcting with Newton on the embedded polynomial, until the embedding is
// indistinguishable from P.
Complex continuation_endgame(const SplitParts& parts, Complex z, double kappa_start,
                             double ratio) {
  double kappa = std::max(kappa_start, 1e-3);
  const double kappa_switch = 1e8;
  while (kappa < kappa_switch) {
    double next = kappa * ratio;
    Complex v{0.0, 0.0};
    try {
      v = flow_velocity(parts, z, Kappa{kappa}, 0.0, false);
    } catch (const SingularJacobianError&) {
      v = Complex{0.0, 0.0};
    }
    Complex predicted = z + v * (kappa / 2.0) * (1.0 - (kappa / next) * (kappa / next));
    Complex corrected = newton_on(parts.embedded_coeffs(Kappa{next}), predicted, 20);
    if (std::abs(corrected - predicted) > 0.2 * (1.0 + std::abs(predicted))) {
      // halve the geometric step once if the corrector ran away
      next = kappa * std::sqrt(ratio);
      predicted = z + v * (kappa / 2.0) * (1.0 - (kappa / next) * (kappa / next));
      corrected = newton_on(parts.embedded_coeffs(Kappa{next}), predicted, 20);
    }
    if (std::isfinite(corrected.real()) && std::isfinite(corrected.imag())) {
      z = corrected;
    }
    kappa = next;
  }
  return z;
}

// Endgame over all branches with collision repair: two branches that were
// distinct at kappa_max but land on the same point have usually been folded
// into one Newton basin by a too-coarse first jump (roots closer than the
// net offset |P1/P'|/kappa_max^2). Rerunning both with a fine geometric
// ratio keeps every jump below the branch separation; a pair that still
// collides is a genuine multiple root.
std::vector<Complex> endgame_all(const SplitParts& parts,
                                 const std::vector<Complex>& terminals,
                                 double kappa_start) {
  std::vector<Complex> out(terminals.size());
  for (std::size_t i = 0; i < terminals.size(); ++i) {
    out[i] = continuation_endgame(parts, terminals[i], kappa_start, 2.0);
  }
  const double fine = std::pow(2.0, 0.125);
  std::vector<bool> refined(terminals.size(), false);
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (std::size_t j = i + 1; j < out.size(); ++j) {
      if (std::abs(out[i] - out[j]) <= 1e-6 &&
          std::abs(terminals[i] - terminals[j]) >= 1e-4) {
        refined[i] = refined[j] = true;
      }
    }
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (refined[i]) {
      out[i] = continuation_endgame(parts, terminals[i], kappa_start, fine);
    }
  }
  return out;
}

std::vector<Complex> derivative_coeffs(std::vector<Complex> c, int order) {
  for (int o = 0; o < order; ++o) {
    for (std::size_t k = 1; k < c.size(); ++k) c[k - 1] = c[k] * static_cast<double>(k);
    c.pop_back();
  }
  return c;
}

double reconstruction_error(const std::vector<Complex>& coeffs,
                            const std::vector<ClusteredRoot>& roots) {
  std::vector<Complex> rebuilt{coeffs.back()};
  for (const ClusteredRoot& r : roots) {
    for (int i = 0; i < r.multiplicity; ++i) {
      std::vector<Complex> next(rebuilt.size() + 1, Complex{0.0, 0.0});
      for (std::size_t k = 0; k < rebuilt.size(); ++k) {
        next[k + 1] += rebuilt[k];
        next[k] -= rebuilt[k] * r.value;
      }
      rebuilt = std::move(next);
    }
  }
  double max_coeff = 0.0;
  for (const Complex& a : coeffs) max_coeff = std::max(max_coeff, std::abs(a));
  if (rebuilt.size() != coeffs.size()) return std::numeric_limits<double>::infinity();
  double err = 0.0;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    err = std::max(err, std::abs(rebuilt[k] - coeffs[k]));
  }
  return err / std::max(max_coeff, 1e-300);
}

}  // namespace

namespace {

RootReport solve_once(const std::vector<Complex>& coeffs, const FlowConfig& cfg) {
  RootReport report;
  report.seed = cfg.seed;

  const NormalizedPolynomial np = normalize(coeffs);
  const Polynomial& p = np.poly;
  report.origin_multiplicity = np.origin_multiplicity;

  report.paths = track(p, cfg);
  report.steps = static_cast<int>(std::ceil(cfg.kappa_max / cfg.dkappa));

  const SplitParts parts(p);
  std::vector<Complex> terminals;
  std::vector<RootPath*> live;
  for (RootPath& path : report.paths) {
    if (path.failed) {
      report.partial = true;
      continue;
    }
    terminals.push_back(path.terminal);
    live.push_back(&path);
  }
  const std::vector<Complex> lifted = endgame_all(parts, terminals, cfg.kappa_max);

  std::vector<Complex> points;
  std::vector<double> corrections;
  for (std::size_t i = 0; i < lifted.size(); ++i) {
    const PolishResult pol = polish(p, lifted[i], cfg);
    live[i]->terminal = pol.root;
    live[i]->terminal_residual = pol.residual;
    points.push_back(pol.root);
    corrections.push_back(std::isfinite(pol.newton_correction) ? pol.newton_correction
                                                               : 0.0);
  }

  // Single linkage; the per-point Newton correction widens the link radius so
  // that the stagnation ball of a multiple root clusters as one.
  const int n = static_cast<int>(points.size());
  auto groups = link_clusters(n, [&](int i, int j) {
    const double link = std::max(
        cfg.cluster_radius, 8.0 * (corrections[static_cast<std::size_t>(i)] +
                                   corrections[static_cast<std::size_t>(j)]));
    return std::abs(points[static_cast<std::size_t>(i)] -
                    points[static_cast<std::size_t>(j)]) <= link;
  });

  for (const auto& g : groups) {
    ClusteredRoot root;
    Complex centroid{0.0, 0.0};
    double spread = 0.0;
    for (int i : g) centroid += points[static_cast<std::size_t>(i)];
    centroid /= static_cast<double>(g.size());
    for (int i : g) {
      spread = std::max(spread, std::abs(points[static_cast<std::size_t>(i)] - centroid));
    }
    root.multiplicity = static_cast<int>(g.size());
    root.value = centroid;
    if (root.multiplicity >= 2) {
      // re-polish at the centroid: an m-fold root of P is a simple,
      // well-conditioned root of P^(m-1)
      const std::vector<Complex> dm = derivative_coeffs(p.coeffs(), root.multiplicity - 1);
      if (dm.size() >= 2) {
        const Complex refined = newton_on(dm, centroid, 60);
        if (std::abs(refined - centroid) <= 100.0 * (spread + cfg.cluster_radius)) {
          root.value = refined;
        }
      }
    } else {
      const PolishResult repol = polish(p, root.value, cfg);
      if (repol.residual <= std::abs(p.eval(root.value))) root.value = repol.root;
    }
    root.residual = std::abs(p.eval(root.value));
    // a stalled Newton at a multiple root is resolved by the cluster; only a
    // reported value whose residual stays large marks the solve partial
    if (root.residual > cfg.polish_tol * p.scale_at(root.value)) report.partial = true;
    report.roots.push_back(root);
  }

  // validation against the reduced polynomial; origin roots are exact
  int cluster_mult = 0;
  for (const ClusteredRoot& r : report.roots) cluster_mult += r.multiplicity;
  report.reconstruction_error = reconstruction_error(p.coeffs(), report.roots);
  if (report.reconstruction_error > 1e-6) report.partial = true;
  if (cluster_mult != p.degree()) report.partial = true;

  if (report.origin_multiplicity > 0) {
    report.roots.push_back(
        ClusteredRoot{Complex{0.0, 0.0}, report.origin_multiplicity, 0.0});
  }
  std::sort(report.roots.begin(), report.roots.end(),
            [](const ClusteredRoot& a, const ClusteredRoot& b) {
              if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
              return a.value.imag() < b.value.imag();
            });

  return report;
}

}  // namespace

RootReport solve(const std::vector<Complex>& coeffs, const FlowConfig& cfg) {
  // Branches can occasionally be conflated where the kappa-net nearly
  // self-intersects; the validation detects that, and a fresh perturbation
  // stream resolves it. Deterministic: the retry seeds derive from cfg.seed.
  RootReport report;
  for (std::uint64_t attempt = 0; attempt < 3; ++attempt) {
    FlowConfig run = cfg;
    run.seed = cfg.seed + attempt * 0x9E3779B97F4A7C15ULL;
    report = solve_once(coeffs, run);
    report.seed = cfg.seed;
    if (!report.partial || !cfg.perturb) break;
  }
  return report;
}

std::string report_to_json(const RootReport& report) {
  std::ostringstream out;
  char buf[64];
  const auto num = [&buf](double v) {
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return std::string(buf);
  };
  out << "{\n  \"roots\": [";
  for (std::size_t i = 0; i < report.roots.size(); ++i) {
    const ClusteredRoot& r = report.roots[i];
    out << (i ? ",\n    " : "\n    ");
    out << "{\"re\": " << num(r.value.real()) << ", \"im\": " << num(r.value.imag())
        << ", \"multiplicity\": " << r.multiplicity
        << ", \"residual\": " << num(r.residual) << "}";
  }
  out << "\n  ],\n";
  out << "  \"origin_multiplicity\": " << report.origin_multiplicity << ",\n";
  out << "  \"partial\": " << (report.partial ? "true" : "false") << ",\n";
  out << "  \"seed\": " << report.seed << ",\n";
  out << "  \"steps\": " << report.steps << ",\n";
  out << "  \"reconstruction_error\": " << num(report.reconstruction_error) << "\n";
  out << "}\n";
  return out.str();
}

void write_trace_csv(const std::vector<RootPath>& paths, std::ostream& out) {
  out << "step,kappa,m,re,im\n";
  char buf[160];
  for (const RootPath& path : paths) {
    for (const PathSample& s : path.samples) {
      std::snprintf(buf, sizeof buf, "%d,%.17g,%d,%.17g,%.17g\n", s.step, s.kappa,
                    path.branch, s.z.real(), s.z.imag());
      out << buf;
    }
  }
}

}  // namespace bkappa
