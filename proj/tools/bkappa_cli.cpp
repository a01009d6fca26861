#include <CLI11.hpp>

#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "bkappa/core.hpp"
#include "bkappa/embedding.hpp"
#include "bkappa/fractal.hpp"
#include "bkappa/partitions.hpp"
#include "bkappa/rootfinder.hpp"

namespace {

using bkappa::Complex;

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

/// Parses complex literals of the a+bi form: "3", "-4i", "3-3i", "0.05i", "i".
Complex parse_complex(std::string s) {
  s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == ' '; }), s.end());
  if (s.empty()) throw std::invalid_argument("empty complex literal");
  int split = -1;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
      split = static_cast<int>(i);
    }
  }
  const auto parse_imag_body = [](const std::string& body) -> double {
    if (body.empty() || body == "+") return 1.0;
    if (body == "-") return -1.0;
    return std::stod(body);
  };
  if (s.back() == 'i') {
    const std::string inner = s.substr(0, s.size() - 1);
    if (split < 0) return {0.0, parse_imag_body(inner)};
    return {std::stod(s.substr(0, static_cast<std::size_t>(split))),
            parse_imag_body(inner.substr(static_cast<std::size_t>(split)))};
  }
  if (split >= 0) throw std::invalid_argument("malformed complex literal: " + s);
  return {std::stod(s), 0.0};
}

std::vector<Complex> parse_complex_list(const std::string& s) {
  std::vector<Complex> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_complex(item));
  if (out.empty()) throw std::invalid_argument("empty list");
  return out;
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
  return out;
}

struct RangeSpec {
  double lo = 0, hi = 0;
  std::size_t count = 0;
};

// "a:b:n"
RangeSpec parse_range(const std::string& s) {
  RangeSpec r;
  std::stringstream ss(s);
  std::string a, b, n;
  if (!std::getline(ss, a, ':') || !std::getline(ss, b, ':') || !std::getline(ss, n)) {
    throw std::invalid_argument("range must be lo:hi:count");
  }
  r.lo = std::stod(a);
  r.hi = std::stod(b);
  r.count = static_cast<std::size_t>(std::stoul(n));
  if (r.count < 1) throw std::invalid_argument("range count must be >= 1");
  return r;
}

std::uint64_t seed_from_env_or(std::uint64_t fallback) {
  if (const char* env = std::getenv("BKAPPA_SEED")) {
    return std::strtoull(env, nullptr, 10);
  }
  return fallback;
}

std::ofstream open_out(const std::string& path, bool binary) {
  std::ofstream f(path, binary ? std::ios::binary : std::ios::out);
  if (!f) throw std::runtime_error("cannot open output file: " + path);
  return f;
}

int cmd_roots(const std::string& coeffs_arg, const std::string& input_arg,
              const std::string& out_path, const std::string& trace_path,
              bkappa::FlowConfig cfg) {
  std::vector<Complex> coeffs;
  if (!coeffs_arg.empty()) {
    coeffs = parse_complex_list(coeffs_arg);
  } else if (!input_arg.empty()) {
    std::ifstream f(input_arg);
    if (!f) {
      std::cerr << "error: cannot open " << input_arg << "\n";
      return 1;
    }
    nlohmann::json j;
    f >> j;
    for (const auto& pair : j.at("coeffs")) {
      coeffs.push_back({pair.at(0).get<double>(), pair.at(1).get<double>()});
    }
  } else {
    std::cerr << "error: need --coeffs or --input\n";
    return 1;
  }

  bkappa::RootReport report;
  try {
    report = bkappa::solve(coeffs, cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  const std::string json = bkappa::report_to_json(report);
  if (out_path.empty()) {
    std::cout << json;
  } else {
    open_out(out_path, false) << json;
  }
  if (!trace_path.empty()) {
    auto f = open_out(trace_path, false);
    bkappa::write_trace_csv(report.paths, f);
  }
  return report.partial ? 2 : 0;
}

int cmd_partition(int n, int from_m, bool hrr, int hrr_terms, bool multiplicative) {
  if (multiplicative) {
    if (from_m > 0) {
      std::cout << fmt(bkappa::entropy_change_multiplicative(from_m, n)) << "\n";
    } else {
      std::cout << bkappa::multiplicative_partitions(n) << "\n";
    }
    return 0;
  }
  if (from_m >= 0) {
    std::cout << fmt(bkappa::entropy_change_additive(from_m, n)) << "\n";
    return 0;
  }
  std::cout << bkappa::partition_exact(n).get_str() << "\n";
  if (hrr) {
    const int k = hrr_terms > 0
                      ? hrr_terms
                      : static_cast<int>(std::ceil(2.0 * std::sqrt(static_cast<double>(n))));
    std::cout << fmt(bkappa::partition_hrr(n, k)) << "\n";
  }
  return 0;
}

bkappa::MotherFunction parse_mother(const std::string& s) {
  if (s == "log1p") return bkappa::MotherFunction::log1p();
  if (s == "sin") return bkappa::MotherFunction::sin();
  if (s == "tan") return bkappa::MotherFunction::tan();
  if (s.rfind("poly:", 0) == 0) {
    std::vector<double> c;
    std::stringstream ss(s.substr(5));
    std::string item;
    while (std::getline(ss, item, ',')) c.push_back(std::stod(item));
    if (c.empty()) throw std::invalid_argument("poly: needs coefficients");
    return bkappa::MotherFunction::polynomial(std::move(c));
  }
  throw std::invalid_argument("unknown mother function: " + s);
}

int cmd_fractal(const std::string& mother_arg, int p, int lambda, int n_branch, bool all,
                int depth, const std::string& x_range, const std::string& square_range,
                double kappa, int m_branch, bool check, bool allow_nan,
                const std::string& out_path, const std::string& format) {
  const bkappa::MotherFunction mother = parse_mother(mother_arg);
  const bkappa::Radix radix(p);
  const int d = depth > 0 ? depth : bkappa::FractalSpec::default_depth(radix);

  double x0, y0, x1, y1;
  std::size_t width, height;
  bool complex_mode = false;
  if (!square_range.empty()) {
    std::stringstream ss(square_range);
    std::string a, b, nn;
    if (!std::getline(ss, a, ':') || !std::getline(ss, b, ':') || !std::getline(ss, nn)) {
      throw std::invalid_argument("--square must be z0:z1:count");
    }
    const Complex z0 = parse_complex(a), z1 = parse_complex(b);
    x0 = z0.real();
    y0 = z0.imag();
    x1 = z1.real();
    y1 = z1.imag();
    width = height = static_cast<std::size_t>(std::stoul(nn));
    complex_mode = true;
  } else if (!x_range.empty()) {
    const RangeSpec r = parse_range(x_range);
    x0 = r.lo;
    x1 = r.hi;
    y0 = y1 = 0.0;
    width = r.count;
    height = 1;
  } else {
    std::cerr << "error: need --x or --square\n";
    return 1;
  }

  const auto spec_for = [&](int n) {
    return bkappa::FractalSpec(radix, lambda, n, d, mother);
  };

  std::function<Complex(Complex)> f;
  double max_residual = 0.0;
  bool bound_exceeded = false;
  if (check) {
    if (!all) {
      std::cerr << "error: --check requires --all\n";
      return 1;
    }
    // reconstruction residual: |sum_n F_n - f| against the per-point
    // truncation bound p^(floor(log_p|f|) - D + 1) p/(p-1)
    f = [&](Complex z) -> Complex {
      Complex sum{0.0, 0.0};
      for (int n = 0; n < lambda; ++n) {
        sum += complex_mode ? bkappa::fractal_complex(spec_for(n), z)
                            : Complex{bkappa::fractal_real(spec_for(n), z.real()), 0.0};
      }
      const Complex fv = complex_mode
                             ? mother.eval_complex(z)
                             : Complex{mother.eval_real(z.real()), 0.0};
      const double resid = std::abs(sum - fv);
      // truncation bound plus machine-rounding slack for the summation
      const double slack = 1e-12 * (1.0 + std::abs(fv));
      if (fv != Complex{0.0, 0.0}) {
        const double pk = std::floor(std::log(std::abs(fv)) /
                                         std::log(static_cast<double>(p)) +
                                     1e-12);
        double bound = std::pow(static_cast<double>(p), pk - d + 1) *
                       static_cast<double>(p) / (p - 1.0);
        if (complex_mode) bound *= 2.0;
        if (resid > bound + slack) bound_exceeded = true;
      } else if (resid > slack) {
        bound_exceeded = true;
      }
      max_residual = std::max(max_residual, resid);
      return sum;
    };
  } else if (kappa >= 0.0) {
    const bkappa::FractalSpec spec = spec_for(0);
    const bkappa::Kappa k{kappa};
    f = [spec, m_branch, k, complex_mode](Complex z) -> Complex {
      return complex_mode
                 ? bkappa::fractal_embedding(spec, m_branch, k, z)
                 : Complex{bkappa::fractal_embedding(spec, m_branch, k, z.real()), 0.0};
    };
  } else if (all) {
    f = [&](Complex z) -> Complex {
      Complex sum{0.0, 0.0};
      for (int n = 0; n < lambda; ++n) {
        sum += complex_mode ? bkappa::fractal_complex(spec_for(n), z)
                            : Complex{bkappa::fractal_real(spec_for(n), z.real()), 0.0};
      }
      return sum;
    };
  } else {
    const bkappa::FractalSpec spec = spec_for(n_branch);
    f = [spec, complex_mode](Complex z) -> Complex {
      return complex_mode ? bkappa::fractal_complex(spec, z)
                          : Complex{bkappa::fractal_real(spec, z.real()), 0.0};
    };
  }

  const bkappa::GridTable grid = bkappa::sample_grid(f, x0, y0, x1, y1, width, height);

  bool has_nan = false;
  for (const Complex& v : grid.values) {
    if (std::isnan(v.real()) || std::isnan(v.imag())) has_nan = true;
  }
  if (has_nan && !allow_nan) {
    std::cerr << "error: grid touches singularities (rerun with --allow-nan)\n";
    return 1;
  }

  if (check) {
    std::cout << "max_residual=" << fmt(max_residual) << "\n";
    if (bound_exceeded) {
      std::cerr << "error: reconstruction residual exceeds the truncation bound\n";
      return 1;
    }
    if (out_path.empty()) return 0;
  }

  if (format == "bin") {
    if (out_path.empty()) {
      std::cerr << "error: binary format requires --out\n";
      return 1;
    }
    auto fo = open_out(out_path, true);
    bkappa::write_grid_binary(grid, fo);
  } else if (out_path.empty()) {
    bkappa::write_grid_csv(grid, std::cout);
  } else {
    auto fo = open_out(out_path, false);
    bkappa::write_grid_csv(grid, fo);
  }
  return 0;
}

std::vector<double> log_spaced(double lo, double hi, int count) {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(count));
  const double l0 = std::log10(lo), l1 = std::log10(hi);
  for (int i = 0; i < count; ++i) {
    const double t = count == 1 ? 0.0 : static_cast<double>(i) / (count - 1);
    out.push_back(std::pow(10.0, l0 + (l1 - l0) * t));
  }
  return out;
}

int cmd_embed(const std::string& parts_arg, const std::string& branches_arg,
              const std::string& demo, double kappa_min, double kappa_max,
              int kappa_count, std::size_t res, const std::string& out_path) {
  std::ostream* out = &std::cout;
  std::ofstream file;
  if (!out_path.empty()) {
    file = open_out(out_path, false);
    out = &file;
  }
  const std::vector<double> kappas = log_spaced(kappa_min, kappa_max, kappa_count);

  if (demo == "rke2") {
    // f1 = 5 sin x, f2 = 17 cos x + 68 - x^2/25 on a symmetric grid
    const auto grid = bkappa::SampledFunction::sample(-20.0, 0.1, 401, [](double x) {
      return 5.0 * std::sin(x);
    });
    const auto grid2 = bkappa::SampledFunction::sample(-20.0, 0.1, 401, [](double x) {
      return 17.0 * std::cos(x) + 68.0 - x * x / 25.0;
    });
    bkappa::IndexedParts<bkappa::SampledFunction> parts;
    parts.insert(1, grid);
    parts.insert(2, grid2);
    *out << "kappa,n,x,value\n";
    for (double k : kappas) {
      for (int n : {1, 2}) {
        const auto curve = bkappa::evaluate(parts, n, bkappa::Kappa{k});
        for (std::size_t i = 0; i < curve.values.size(); ++i) {
          *out << fmt(k) << "," << n << "," << fmt(curve.x_at(i)) << ","
               << fmt(curve.values[i]) << "\n";
        }
      }
    }
    return 0;
  }
  if (demo == "disks") {
    const std::vector<bkappa::DiskSpec> disks = {
        {3.0, 0.0, 1.0}, {0.75, 0.0, 1.5}, {1.75, 1.0, 1.0}};
    *out << "kappa0,kappa1,x,y,value\n";
    const std::size_t nx = res, ny = res * 3 / 4;
    for (double k0 : {0.0, 0.5, 5.0}) {
      for (double k1 : {0.0, 0.2, 1.0}) {
        for (std::size_t iy = 0; iy < ny; ++iy) {
          const double y = -3.0 + 6.0 * static_cast<double>(iy) / static_cast<double>(ny - 1);
          for (std::size_t ix = 0; ix < nx; ++ix) {
            const double x =
                -3.0 + 8.0 * static_cast<double>(ix) / static_cast<double>(nx - 1);
            const double v = bkappa::venn_sum(disks, x, y, bkappa::Kappa{k0},
                                              bkappa::Kappa{k1}, 1);
            *out << fmt(k0) << "," << fmt(k1) << "," << fmt(x) << "," << fmt(y) << ","
                 << fmt(v) << "\n";
          }
        }
      }
    }
    return 0;
  }
  if (!demo.empty()) {
    std::cerr << "error: unknown demo " << demo << "\n";
    return 1;
  }
  if (parts_arg.empty()) {
    std::cerr << "error: need --parts or --demo\n";
    return 1;
  }

  const std::vector<Complex> values = parse_complex_list(parts_arg);
  bkappa::IndexedParts<Complex> parts;
  for (std::size_t i = 0; i < values.size(); ++i) {
    parts.insert(static_cast<int>(i) + 1, values[i]);
  }
  std::vector<int> branches;
  if (!branches_arg.empty()) {
    branches = parse_int_list(branches_arg);
  } else {
    for (std::size_t i = 0; i < values.size(); ++i) branches.push_back(static_cast<int>(i) + 1);
  }
  *out << "kappa,n,re,im\n";
  for (double k : kappas) {
    for (int n : branches) {
      const Complex v = bkappa::evaluate(parts, n, bkappa::Kappa{k});
      *out << fmt(k) << "," << n << "," << fmt(v.real()) << "," << fmt(v.imag()) << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"B_kappa embeddings: root finding, partitions, fractal decompositions"};
  app.require_subcommand(1);

  // roots
  auto* roots = app.add_subcommand("roots", "simultaneous polynomial root finder");
  std::string coeffs_arg, input_arg, out_path, trace_path;
  bkappa::FlowConfig cfg;
  cfg.seed = seed_from_env_or(1);
  bool no_perturb = false;
  roots->add_option("--coeffs", coeffs_arg, "ascending coefficients, e.g. \"2,-3,1\"");
  roots->add_option("--input", input_arg, "JSON file {\"coeffs\": [[re,im],...]}");
  roots->add_option("--out", out_path, "write report JSON here (default stdout)");
  roots->add_option("--trace", trace_path, "write kappa-net trace CSV here");
  roots->add_option("--dkappa", cfg.dkappa, "Euler step (default 0.003)");
  roots->add_option("--kappa-max", cfg.kappa_max, "tracking horizon (default 8)");
  roots->add_option("--seed", cfg.seed, "theta stream seed (env BKAPPA_SEED)");
  roots->add_flag("--no-perturb", no_perturb, "disable the class-preserving perturbation");
  roots->add_option("--polish-tol", cfg.polish_tol, "Newton residual tolerance");
  roots->add_option("--trace-stride", cfg.trace_stride, "record every k-th step");
  roots->add_option("--cluster-radius", cfg.cluster_radius, "multiplicity cluster radius");

  // partition
  auto* partition = app.add_subcommand("partition", "integer partition quantities");
  int part_n = 0, from_m = -1, hrr_terms = 0;
  bool hrr = false, multiplicative = false;
  partition->add_option("N", part_n, "argument of p(N)")->required();
  partition->add_option("--from", from_m, "entropy change from M to N");
  partition->add_flag("--hrr", hrr, "also print the truncated series value");
  partition->add_option("--hrr-terms", hrr_terms, "series terms (default ceil(2 sqrt N))");
  partition->add_flag("--multiplicative", multiplicative, "multiplicative partitions m(N)");

  // fractal
  auto* fractal = app.add_subcommand("fractal", "pln fractal decomposition sampling");
  std::string mother_arg = "log1p", x_range, square_range, format = "csv", fout_path;
  int fp = 3, flambda = 3, fn = 0, fdepth = 0, fm = 0;
  double fkappa = -1.0;
  bool fall = false, fcheck = false, allow_nan = false;
  fractal->add_option("--mother", mother_arg, "log1p|sin|tan|poly:c0,c1,...");
  fractal->add_option("--p", fp, "radix (default 3)");
  fractal->add_option("--lambda", flambda, "number of fractal objects (default 3)");
  fractal->add_option("--n", fn, "object index in [0,lambda-1]");
  fractal->add_flag("--all", fall, "use all lambda objects (reconstruction)");
  fractal->add_option("--depth", fdepth, "digits kept (default: 1e-12 relative)");
  fractal->add_option("--x", x_range, "real grid lo:hi:count");
  fractal->add_option("--square", square_range, "complex grid z0:z1:count");
  fractal->add_option("--kappa", fkappa, "embedding deformation (with --m)");
  fractal->add_option("--m", fm, "embedding branch");
  fractal->add_flag("--check", fcheck, "assert the reconstruction identity (with --all)");
  fractal->add_flag("--allow-nan", allow_nan, "mark singular cells as NaN instead of failing");
  fractal->add_option("--out", fout_path, "output path (default stdout)");
  fractal->add_option("--format", format, "csv|bin (default csv)");

  // embed
  auto* embed = app.add_subcommand("embed", "embedding sweeps over a log kappa grid");
  std::string parts_arg, branches_arg, demo, eout_path;
  double kmin = 1e-3, kmax = 1e3;
  int kcount = 61;
  std::size_t res = 81;
  embed->add_option("--parts", parts_arg, "comma list of parts, e.g. \"3,5\"");
  embed->add_option("--branches", branches_arg, "branch labels (default: all)");
  embed->add_option("--demo", demo, "rke2|disks");
  embed->add_option("--kappa-min", kmin, "grid start (default 1e-3)");
  embed->add_option("--kappa-max", kmax, "grid end (default 1e3)");
  embed->add_option("--kappa-count", kcount, "grid size (default 61)");
  embed->add_option("--res", res, "demo grid resolution");
  embed->add_option("--out", eout_path, "output path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (roots->parsed()) {
      cfg.perturb = !no_perturb;
      return cmd_roots(coeffs_arg, input_arg, out_path, trace_path, cfg);
    }
    if (partition->parsed()) {
      return cmd_partition(part_n, from_m, hrr, hrr_terms, multiplicative);
    }
    if (fractal->parsed()) {
      return cmd_fractal(mother_arg, fp, flambda, fn, fall, fdepth, x_range, square_range,
                         fkappa, fm, fcheck, allow_nan, fout_path, format);
    }
    if (embed->parsed()) {
      return cmd_embed(parts_arg, branches_arg, demo, kmin, kmax, kcount, res, eout_path);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
