#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

std::string scratch_path(const std::string& name) {
  return std::string("cli_scratch_") + name;
}

RunResult run(const std::string& args) {
  const std::string out_file = scratch_path("stdout.txt");
  const std::string cmd = std::string(BKAPPA_CLI_PATH) + " " + args + " > " + out_file +
                          " 2> " + scratch_path("stderr.txt");
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WEXITSTATUS(status);
  std::ifstream f(out_file);
  std::stringstream ss;
  ss << f.rdbuf();
  r.out = ss.str();
  return r;
}

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

// parsed (re, im) pairs from a report's roots array
std::vector<std::pair<double, double>> report_roots(const std::string& json) {
  std::vector<std::pair<double, double>> out;
  std::size_t pos = 0;
  while ((pos = json.find("{\"re\": ", pos)) != std::string::npos) {
    const std::size_t im_pos = json.find("\"im\": ", pos);
    out.emplace_back(std::stod(json.substr(pos + 7)), std::stod(json.substr(im_pos + 6)));
    pos = im_pos;
  }
  return out;
}

bool has_root_near(const std::string& json, double re, double im, double tol = 1e-9) {
  for (const auto& [r, i] : report_roots(json)) {
    if (std::abs(r - re) <= tol && std::abs(i - im) <= tol) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("roots finds the quadratic pair and reports exit 0") {
  const auto r = run("roots --coeffs \"2,-3,1\" --seed 7");
  CHECK(r.exit_code == 0);
  CHECK(has_root_near(r.out, 1.0, 0.0));
  CHECK(has_root_near(r.out, 2.0, 0.0));
  CHECK(r.out.find("\"partial\": false") != std::string::npos);
}

TEST_CASE("roots without perturbation reproduces the failure mode with exit 2") {
  const auto r = run("roots --coeffs \"2,-3,1\" --no-perturb");
  CHECK(r.exit_code == 2);
  CHECK(r.out.find("\"partial\": true") != std::string::npos);
  CHECK(r.out.find("\"multiplicity\": 2") != std::string::npos);
}

TEST_CASE("roots reads JSON input files and complex literals") {
  {
    std::ofstream f(scratch_path("poly.json"));
    f << "{\"coeffs\": [[2,0],[-3,0],[1,0]]}";
  }
  const auto r = run("roots --input " + scratch_path("poly.json"));
  CHECK(r.exit_code == 0);
  CHECK(has_root_near(r.out, 2.0, 0.0));

  // i is a root of z^2 + 1 = (z-i)(z+i)
  const auto c = run("roots --coeffs \"1,0,1\"");
  CHECK(c.exit_code == 0);
  CHECK(has_root_near(c.out, 0.0, 1.0));
  CHECK(has_root_near(c.out, 0.0, -1.0));

  // complex coefficient literals: (z - i)(z - 2) = 2i + (-2-i) z + z^2
  const auto lit = run("roots --coeffs \"2i,-2-i,1\"");
  CHECK(lit.exit_code == 0);
  CHECK(has_root_near(lit.out, 0.0, 1.0));
  CHECK(has_root_near(lit.out, 2.0, 0.0));
}

TEST_CASE("malformed input exits 1 with a diagnostic") {
  CHECK(run("roots --coeffs \"0,0,0\"").exit_code == 1);
  CHECK(run("roots --coeffs \"abc\"").exit_code == 1);
  CHECK(run("roots").exit_code == 1);
  CHECK(run("partition -- -3").exit_code == 1);
}

TEST_CASE("identical seeds give byte-identical outputs") {
  const std::string trace1 = scratch_path("t1.csv");
  const std::string trace2 = scratch_path("t2.csv");
  const auto r1 = run("roots --coeffs \"0.3-0.4i,-1+0.2i,0.1+0.8i,0.9\" --seed 123 --trace " + trace1);
  const auto r2 = run("roots --coeffs \"0.3-0.4i,-1+0.2i,0.1+0.8i,0.9\" --seed 123 --trace " + trace2);
  CHECK(r1.exit_code == 0);
  CHECK(r1.out == r2.out);
  CHECK(!r1.out.empty());
  const std::string t1 = slurp(trace1), t2 = slurp(trace2);
  CHECK(t1 == t2);
  CHECK(t1.substr(0, 18) == "step,kappa,m,re,im");

  // the seed matters for the path geometry but not the roots
  const auto r3 = run("roots --coeffs \"0.3-0.4i,-1+0.2i,0.1+0.8i,0.9\" --seed 124");
  CHECK(r3.exit_code == 0);
}

TEST_CASE("BKAPPA_SEED env variable is the seed fallback") {
  const std::string out_file = scratch_path("env_out.txt");
  const std::string cmd = std::string("BKAPPA_SEED=55 ") + BKAPPA_CLI_PATH +
                          " roots --coeffs \"2,-3,1\" > " + out_file + " 2>/dev/null";
  REQUIRE(std::system(cmd.c_str()) == 0);
  const std::string out = slurp(out_file);
  CHECK(out.find("\"seed\": 55") != std::string::npos);
}

TEST_CASE("partition subcommand prints the documented quantities") {
  CHECK(run("partition 100").out == "190569292\n");
  CHECK(run("partition 200").out == "3972999029388\n");
  CHECK(run("partition 12 --multiplicative").out == "4\n");

  const auto ds = run("partition 8 --from 3");
  CHECK(ds.exit_code == 0);
  CHECK(std::abs(std::stod(ds.out) - 1.99243) < 1e-5);

  const auto hrr = run("partition 10 --hrr");
  CHECK(hrr.exit_code == 0);
  std::istringstream lines(hrr.out);
  std::string exact, series;
  std::getline(lines, exact);
  std::getline(lines, series);
  CHECK(exact == "42");
  CHECK(std::llround(std::stod(series)) == 42);

  CHECK(run("partition 5000").exit_code == 1);  // beyond the table
}

TEST_CASE("fractal reconstruction check and grid export") {
  const auto chk =
      run("fractal --mother log1p --p 3 --lambda 3 --all --check --x 0.01:10:500 --depth 40");
  CHECK(chk.exit_code == 0);
  REQUIRE(chk.out.rfind("max_residual=", 0) == 0);
  CHECK(std::stod(chk.out.substr(13)) <= 1e-10);

  const std::string grid_file = scratch_path("grid.csv");
  const auto gr = run("fractal --mother tan --p 3 --lambda 3 --n 1 --square -2-2i:2+2i:16 --out " +
                      grid_file);
  CHECK(gr.exit_code == 0);
  std::ifstream f(grid_file);
  std::string header;
  std::getline(f, header);
  CHECK(header == "x,y,re,im");
  int rows = 0;
  for (std::string line; std::getline(f, line);) {
    ++rows;
    // four comma-separated finite fields per row
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream ls(line);
    double x, y, re, im;
    REQUIRE((ls >> x >> y >> re >> im));
  }
  CHECK(rows == 16 * 16);

  // binary export carries the header + payload
  const std::string bin_file = scratch_path("grid.bin");
  const auto bn = run("fractal --mother sin --p 3 --lambda 3 --n 0 --x 0.1:3:10 --format bin --out " +
                      bin_file);
  CHECK(bn.exit_code == 0);
  std::ifstream bf(bin_file, std::ios::binary | std::ios::ate);
  CHECK(bf.tellg() == static_cast<std::streamoff>(8 * (6 + 2 * 10)));
}

TEST_CASE("fractal grids touching singularities need --allow-nan") {
  const auto bad = run("fractal --mother log1p --p 3 --lambda 3 --n 0 --x -2:2:9");
  CHECK(bad.exit_code == 1);
  const auto ok = run("fractal --mother log1p --p 3 --lambda 3 --n 0 --x -2:2:9 --allow-nan");
  CHECK(ok.exit_code == 0);
  CHECK(ok.out.find("nan") != std::string::npos);
}

TEST_CASE("19 roots recovered from a JSON input file with a trace") {
  // roots 1.5, 2, 3-3i, 5+4i, 5, -1, -1-2i, -3i, -4i, 0.05i, -2+6i, -3,
  // -1+4i, 2+5i, 4+6i, -2-3i and a triple root at i
  const std::vector<std::pair<double, double>> roots = {
      {1.5, 0},  {2, 0},   {3, -3}, {5, 4},  {5, 0},  {-1, 0}, {-1, -2},
      {0, -3},   {0, -4},  {0, 0.05}, {-2, 6}, {-3, 0}, {-1, 4}, {2, 5},
      {4, 6},    {-2, -3}, {0, 1},  {0, 1},  {0, 1}};
  std::vector<std::pair<double, double>> coeffs = {{1.0, 0.0}};
  for (const auto& [rr, ri] : roots) {
    std::vector<std::pair<double, double>> next(coeffs.size() + 1, {0.0, 0.0});
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      next[k + 1].first += coeffs[k].first;
      next[k + 1].second += coeffs[k].second;
      next[k].first -= coeffs[k].first * rr - coeffs[k].second * ri;
      next[k].second -= coeffs[k].first * ri + coeffs[k].second * rr;
    }
    coeffs = std::move(next);
  }
  {
    std::ofstream f(scratch_path("p19.json"));
    f << "{\"coeffs\": [";
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      if (k) f << ",";
      char buf[80];
      std::snprintf(buf, sizeof buf, "[%.17g,%.17g]", coeffs[k].first, coeffs[k].second);
      f << buf;
    }
    f << "]}";
  }
  const std::string trace = scratch_path("p19_trace.csv");
  const auto r = run("roots --input " + scratch_path("p19.json") + " --seed 1 --trace " +
                     trace + " --trace-stride 100");
  CHECK(r.exit_code == 0);
  int total_mult = 0;
  std::size_t pos = 0;
  while ((pos = r.out.find("\"multiplicity\": ", pos)) != std::string::npos) {
    total_mult += std::stoi(r.out.substr(pos + 16));
    ++pos;
  }
  CHECK(total_mult == 19);
  CHECK(has_root_near(r.out, 0.0, 1.0, 1e-8));
  CHECK(has_root_near(r.out, 4.0, 6.0, 1e-8));
  CHECK(has_root_near(r.out, 0.0, 0.05, 1e-8));

  // the trace has 19 branches, each starting at kappa = 0
  std::ifstream tf(trace);
  std::string line;
  std::getline(tf, line);
  CHECK(line == "step,kappa,m,re,im");
  int zero_rows = 0, rows = 0;
  while (std::getline(tf, line)) {
    ++rows;
    if (line.rfind("0,0,", 0) == 0) ++zero_rows;
  }
  CHECK(zero_rows == 19);
  CHECK(rows == 19 * 28);  // 2667 steps at stride 100, plus first and last
}

TEST_CASE("fractal embedding sweep via --kappa and --m") {
  const auto r = run("fractal --mother log1p --p 3 --lambda 3 --kappa 5 --m 0 --x 0.5:8:50");
  CHECK(r.exit_code == 0);
  std::istringstream lines(r.out);
  std::string header;
  std::getline(lines, header);
  REQUIRE(header == "x,y,re,im");
  // kappa = 5 embedding stays within 10% of ln(1+x) on the grid
  for (std::string line; std::getline(lines, line);) {
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream ls(line);
    double x, y, re, im;
    ls >> x >> y >> re >> im;
    const double f = std::log1p(x);
    CHECK(std::abs(re - f) <= 0.1 * std::abs(f));
  }
}

TEST_CASE("embed sweeps carry the branch endpoints") {
  const auto r = run("embed --parts \"3,5\" --branches 1,2 --kappa-min 1e-8 --kappa-max 1e8 "
                     "--kappa-count 3");
  CHECK(r.exit_code == 0);
  std::istringstream lines(r.out);
  std::string header;
  std::getline(lines, header);
  CHECK(header == "kappa,n,re,im");
  double re_min_branch1 = 0.0, re_max_branch1 = 0.0;
  for (std::string line; std::getline(lines, line);) {
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream ls(line);
    double kappa, re, im;
    int n;
    ls >> kappa >> n >> re >> im;
    if (n == 1 && kappa < 1e-7) re_min_branch1 = re;
    if (n == 1 && kappa > 1e7) re_max_branch1 = re;
  }
  CHECK(std::abs(re_min_branch1 - 3.0) < 1e-6);
  CHECK(std::abs(re_max_branch1 - 8.0) < 1e-6);

  CHECK(run("embed --parts \"7\" --kappa-count 2").exit_code == 0);
  CHECK(run("embed --parts \"x\"").exit_code == 1);
  CHECK(run("embed --demo rke2 --kappa-count 2").exit_code == 0);
}
