#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "bkappa/core.hpp"

namespace bkappa {

using Complex = std::complex<double>;

/// Dense univariate polynomial a_0 + a_1 z + ... + a_N z^N with a_N != 0.
class Polynomial {
 public:
  explicit Polynomial(std::vector<Complex> coeffs);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Complex>& coeffs() const { return coeffs_; }

  Complex eval(Complex z) const;        // Horner
  Complex eval_deriv(Complex z) const;
  Polynomial derivative() const;

  /// Rounding scale sum_k |a_k| max(1,|z|)^k.
  double scale_at(Complex z) const;

 private:
  std::vector<Complex> coeffs_;
};

/// The two parts at zero of the polynomial embedding:
/// P0 = a_N z^N + a_0 (label 0) and P1 = a_1 z + ... + a_{N-1} z^{N-1} (label 1).
class SplitParts {
 public:
  explicit SplitParts(const Polynomial& p);

  Complex p0(Complex z) const;
  Complex p1(Complex z) const;
  Complex dp0(Complex z) const;
  Complex dp1(Complex z) const;
  int degree() const { return degree_; }
  double scale_at(Complex z) const;

  /// Coefficients of the embedded polynomial R(0,kappa) in z: the end
  /// coefficients a_0, a_N weighted by (1+2k)B_k(0,1/2), the middle ones by
  /// (1+2k)B_k(1,1/2).
  std::vector<Complex> embedded_coeffs(Kappa kappa) const;

 private:
  std::vector<Complex> coeffs_;
  int degree_;
};

struct FlowConfig {
  double dkappa = 0.003;
  double kappa_max = 8.0;
  bool perturb = true;
  std::uint64_t seed = 1;
  double polish_tol = 1e-12;
  int polish_max_iters = 100;
  int trace_stride = 1;
  double cluster_radius = 1e-6;
  /// Retry a step with a half-size substep when it moves a path by more than
  /// 0.5(1+|r|). Off by default.
  bool step_halving = false;
};

struct PathSample {
  int step;
  double kappa;
  Complex z;
};

/// One branch of the zero kappa-net.
struct RootPath {
  int branch = 0;
  std::vector<PathSample> samples;  // strictly increasing kappa, first at 0
  Complex terminal{0.0, 0.0};
  double terminal_residual = 0.0;
  bool failed = false;
};

struct ClusteredRoot {
  Complex value{0.0, 0.0};
  int multiplicity = 0;
  double residual = 0.0;
};

struct RootReport {
  std::vector<ClusteredRoot> roots;
  std::vector<RootPath> paths;
  int origin_multiplicity = 0;
  bool partial = false;
  std::uint64_t seed = 0;
  int steps = 0;
  double reconstruction_error = 0.0;  // relative, scaled by max |a_k|
};

struct PolishResult {
  Complex root{0.0, 0.0};
  double residual = 0.0;
  int iters = 0;
  bool converged = false;
  /// |P/P'| at the returned point; error estimate used by the clustering.
  double newton_correction = 0.0;
};

/// Raised by flow_velocity when |dR/dz| falls below 1e-30 * scale.
class SingularJacobianError : public std::runtime_error {
 public:
  SingularJacobianError() : std::runtime_error("flow velocity: singular Jacobian") {}
};

/// Strips trailing zero coefficients; if a_0 = ... = a_{k-1} = 0 factors z^k
/// exactly. Throws std::invalid_argument on all-zero or constant input.
struct NormalizedPolynomial {
  Polynomial poly;
  int origin_multiplicity = 0;
};
NormalizedPolynomial normalize(const std::vector<Complex>& coeffs);

/// Vertices of the regular N-gon: the exact roots of P0(z) = a_N z^N + a_0.
std::vector<Complex> initial_roots(const Polynomial& p);

/// dr/dkappa = -(dR~/dkappa)(dR/dz)^{-1} at (z, kappa). theta in [0,1) drives
/// the class-preserving perturbation (+e^{i 2 pi theta} on P0, -it on P1),
/// applied to the kappa-derivative only.
Complex flow_velocity(const SplitParts& parts, Complex z, Kappa kappa, double theta,
                      bool perturb);

/// theta for (seed, step, retry): uniform in [0,1), counter-based, identical
/// across branches.
double theta_at(std::uint64_t seed, std::uint64_t step, std::uint64_t retry = 0);

/// Euler-tracks all N branches of the zero kappa-net from kappa = 0 to
/// cfg.kappa_max. Branches are decoupled; the per-step theta is shared.
std::vector<RootPath> track(const Polynomial& p, const FlowConfig& cfg);

/// Newton polishing z <- z - P(z)/P'(z) with the stopping rules
/// |P| <= polish_tol * scale, |dz| <= 1e-14 (1+|z|), or max iterations.
/// Returns the best iterate seen, flagged when not converged.
PolishResult polish(const Polynomial& p, Complex z0, const FlowConfig& cfg);

/// Single-linkage clustering of points within `radius`; cluster value is the
/// centroid.
std::vector<std::pair<Complex, int>> cluster(const std::vector<Complex>& roots,
                                             double radius);

/// Full pipeline: normalize, N-gon start, Euler tracking, continuation
/// endgame, Newton polish, multiplicity clustering, validation.
RootReport solve(const std::vector<Complex>& coeffs, const FlowConfig& cfg);

/// Report JSON per the external interface; deterministic field order.
std::string report_to_json(const RootReport& report);

/// Trace CSV with header step,kappa,m,re,im; rows grouped by branch.
void write_trace_csv(const std::vector<RootPath>& paths, std::ostream& out);

}  // namespace bkappa
