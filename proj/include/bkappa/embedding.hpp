#pragma once

#include <algorithm>
#include <complex>
#include <concepts>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bkappa/core.hpp"

namespace bkappa {

/// Element types usable as embedding parts: closed under addition and
/// scaling by a real.
template <class E>
concept Embeddable = requires(E a, E b, double s) {
  { a + b } -> std::convertible_to<E>;
  { a * s } -> std::convertible_to<E>;
};

/// A real-valued function sampled on a uniform grid x0, x0+dx, ...
/// Addition and scaling are pointwise; grids must agree.
struct SampledFunction {
  double x0 = 0.0;
  double dx = 1.0;
  std::vector<double> values;

  SampledFunction() = default;
  SampledFunction(double x0_, double dx_, std::vector<double> v)
      : x0(x0_), dx(dx_), values(std::move(v)) {}

  static SampledFunction sample(double x0, double dx, std::size_t n,
                                const std::function<double(double)>& f) {
    SampledFunction g{x0, dx, std::vector<double>(n)};
    for (std::size_t i = 0; i < n; ++i) g.values[i] = f(x0 + dx * static_cast<double>(i));
    return g;
  }

  double x_at(std::size_t i) const { return x0 + dx * static_cast<double>(i); }

  friend SampledFunction operator+(const SampledFunction& a, const SampledFunction& b) {
    if (a.values.empty()) return b;
    if (b.values.empty()) return a;
    if (a.values.size() != b.values.size() || a.x0 != b.x0 || a.dx != b.dx) {
      throw std::invalid_argument("SampledFunction: grid mismatch");
    }
    SampledFunction r = a;
    for (std::size_t i = 0; i < r.values.size(); ++i) r.values[i] += b.values[i];
    return r;
  }

  friend SampledFunction operator*(const SampledFunction& a, double s) {
    SampledFunction r = a;
    for (double& v : r.values) v *= s;
    return r;
  }
};

namespace detail {

template <Embeddable E>
E zero_like(const E& e) {
  return e * 0.0;
}

}  // namespace detail

/// Finite family of parts indexed by integer labels; unlisted labels are
/// implicitly zero. Immutable once built (operations return new families).
template <Embeddable E>
class IndexedParts {
 public:
  IndexedParts() = default;

  IndexedParts(std::initializer_list<std::pair<const int, E>> init) : parts_(init) {}

  explicit IndexedParts(std::map<int, E> parts) : parts_(std::move(parts)) {}

  void insert(int label, E part) {
    if (!parts_.emplace(label, std::move(part)).second) {
      throw std::invalid_argument("IndexedParts: duplicate label");
    }
  }

  bool contains(int label) const { return parts_.count(label) != 0; }
  const E& part(int label) const { return parts_.at(label); }
  std::size_t size() const { return parts_.size(); }
  const std::map<int, E>& parts() const { return parts_; }

  /// Sum of all parts, accumulated in ascending label order.
  E part_at_infinity() const {
    if (parts_.empty()) return E{};
    auto it = parts_.begin();
    E sum = it->second;
    for (++it; it != parts_.end(); ++it) sum = sum + it->second;
    return sum;
  }

 private:
  std::map<int, E> parts_;
};

/// R_f(n, kappa) = (1+2k) sum_j f_j B_kappa(n-j, 1/2).
/// kappa = 0 returns parts[n] exactly; kappa = inf returns the sum of parts.
template <Embeddable E>
E evaluate(const IndexedParts<E>& parts, int n, Kappa kappa) {
  if (parts.size() == 0) return E{};
  if (kappa.is_zero()) {
    if (parts.contains(n)) return parts.part(n);
    return detail::zero_like(parts.parts().begin()->second);
  }
  if (kappa.is_infinite()) return parts.part_at_infinity();
  const double pref = 1.0 + 2.0 * kappa.value();
  E sum = detail::zero_like(parts.parts().begin()->second);
  for (const auto& [j, f] : parts.parts()) {
    sum = sum + f * (pref * b_kappa(static_cast<double>(n - j), 0.5, kappa));
  }
  return sum;
}

/// Relabels parts through an injective map; labels absent from `offsets`
/// are kept. The multiset of parts and the part at infinity are unchanged.
template <Embeddable E>
IndexedParts<E> shift_labels(const IndexedParts<E>& parts,
                             const std::map<int, int>& offsets) {
  std::map<int, E> out;
  for (const auto& [label, f] : parts.parts()) {
    auto it = offsets.find(label);
    const int target = it == offsets.end() ? label : it->second;
    if (!out.emplace(target, f).second) {
      throw std::invalid_argument("shift_labels: label collision");
    }
  }
  return IndexedParts<E>(std::move(out));
}

/// Single part connected to itself: the family {0: f0}.
template <Embeddable E>
IndexedParts<E> loop(E f0) {
  IndexedParts<E> parts;
  parts.insert(0, std::move(f0));
  return parts;
}

/// Family mapping each P_j individually to Q at infinity: labels
/// first_label .. first_label+N-1 carry the P_j, the next label carries
/// Q - sum_j P_j.
template <Embeddable E>
IndexedParts<E> homotopy(const std::vector<E>& p_list, const E& q, int first_label = 1) {
  IndexedParts<E> parts;
  int label = first_label;
  for (const E& p : p_list) parts.insert(label++, p);
  E rem = q;
  for (const E& p : p_list) rem = rem + p * (-1.0);
  parts.insert(label, std::move(rem));
  return parts;
}

/// One monotone schedule kappa_j(t) per label, each with kappa_j(0) = 0.
struct MultiScaleSchedule {
  std::vector<std::function<double(double)>> kappa_of_t;
};

/// Superposition of loops unfolding on per-label time scales:
///   sum_j P_j (1+2k_j(t)) B_{k_j(t)}(n-j, 1/2)
///   + (Q(t) - sum_j P_j) (1+2k_{N+1}(t)) B_{k_{N+1}(t)}(n-N-1, 1/2).
/// At t = 0 this is P_n; once every schedule saturates it approaches Q(t).
template <Embeddable E>
E evaluate_multiscale(const std::vector<E>& p_list,
                      const std::function<E(double)>& q_of_t,
                      const MultiScaleSchedule& sched, int n, double t) {
  const std::size_t nparts = p_list.size() + 1;
  if (sched.kappa_of_t.size() != nparts) {
    throw std::invalid_argument("evaluate_multiscale: need one schedule per label");
  }
  E q = q_of_t(t);
  E rem = q;
  for (const E& p : p_list) rem = rem + p * (-1.0);

  E sum = detail::zero_like(rem);
  for (std::size_t j = 1; j <= p_list.size(); ++j) {
    const Kappa kj{sched.kappa_of_t[j - 1](t)};
    if (kj.is_zero()) {
      if (static_cast<int>(j) == n) sum = sum + p_list[j - 1];
      continue;
    }
    const double w = (1.0 + 2.0 * kj.value()) *
                     b_kappa(static_cast<double>(n - static_cast<int>(j)), 0.5, kj);
    sum = sum + p_list[j - 1] * w;
  }
  const int last = static_cast<int>(p_list.size()) + 1;
  const Kappa kl{sched.kappa_of_t[nparts - 1](t)};
  if (kl.is_zero()) {
    if (last == n) sum = sum + rem;
  } else {
    const double w = (1.0 + 2.0 * kl.value()) *
                     b_kappa(static_cast<double>(n - last), 0.5, kl);
    sum = sum + rem * w;
  }
  return sum;
}

/// Prime factors of n >= 2 with multiplicity, nondecreasing.
std::vector<long long> prime_factors(long long n);

/// Multiplicative embedding exp(R_N(n,kappa)) over the prime factors of N:
/// branch n at kappa = 0 is the n-th prime factor (labels start at 1),
/// kappa = inf gives N itself.
double multiplicative_embed(long long n_value, int branch, Kappa kappa);

/// One smoothed disk of the Venn-diagram family.
struct DiskSpec {
  double x0 = 0.0;
  double y0 = 0.0;
  double radius = 1.0;
};

/// Embedding whose parts at zero are Disk_{kappa1}(x - x0j, y - y0j; Rj) with
/// labels 0, 1, ...; evaluated on branch n at deformation kappa0.
/// At kappa0 = inf this is the plain superposition of the smoothed disks; at
/// kappa0 = kappa1 = 0 it counts disks containing the point (+1/2 per boundary).
double venn_sum(const std::vector<DiskSpec>& disks, double x, double y,
                Kappa kappa0, Kappa kappa1, int n);

}  // namespace bkappa
