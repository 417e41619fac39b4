// Copyright 2026 The typeb Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "typeb/fock.hpp"
#include "typeb/moments.hpp"
#include "typeb/orthopoly.hpp"
#include "typeb/partitions.hpp"
#include "typeb/problem_io.hpp"
#include "typeb/spectral.hpp"

using namespace typeb;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitMismatch = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Timer {
 public:
  explicit Timer(std::string label) : label_(std::move(label)), start_(std::chrono::steady_clock::now()) {}
  ~Timer() {
    const auto ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    std::cerr << label_ << ": " << std::fixed << std::setprecision(1) << ms << " ms\n";
  }

 private:
  std::string label_;
  std::chrono::steady_clock::time_point start_;
};

std::vector<double> parse_doubles(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.find_first_of(".eE") == std::string::npos) {
      out.push_back(to_double(parse_rational(item)));
      continue;
    }
    std::size_t used = 0;
    out.push_back(std::stod(item, &used));
    if (used != item.size()) throw UsageError("malformed number '" + item + "'");
  }
  if (out.empty()) throw UsageError("empty vector '" + text + "'");
  return out;
}

std::string fmt12(double v) {
  std::ostringstream os;
  os << std::setprecision(12) << v;
  return os.str();
}

void print_evaluation(const BivariatePoly& p, const std::string& alpha, const std::string& q) {
  if (alpha.empty() && q.empty()) return;
  if (alpha.empty() || q.empty()) throw UsageError("--alpha and --q go together");
  std::cout << "value at (" << alpha << ", " << q << "): "
            << to_string(p.eval(parse_rational(alpha), parse_rational(q))) << "\n";
}

int run_partitions(int n, const std::string& cls, bool with_stats) {
  Timer timer("partitions");
  if (n < 1) throw UsageError("--n must be at least 1");
  const PartitionClass c = parse_partition_class(cls);
  const auto parts = enumerate(n, c);
  std::cout << (with_stats ? "partition\tna\trc\tcs\n" : "partition\n");
  for (const auto& p : parts) {
    std::cout << to_string(p);
    if (with_stats) {
      const StatRecord s = statistics(p);
      std::cout << "\t" << s.na << "\t" << s.rc << "\t" << s.cs;
    }
    std::cout << "\n";
  }
  std::cout << "# count " << parts.size() << "\n";
  return kExitOk;
}

int run_stats(const std::string& partition, const std::string& extended) {
  if (partition.empty() == extended.empty()) throw UsageError("give exactly one of --partition, --extended");
  if (!partition.empty()) {
    const TypeBPartition p = parse_partition(partition);
    const StatRecord s = statistics(p);
    std::cout << "partition: " << to_string(p) << "\nna: " << s.na << "\nrc: " << s.rc << "\ncs: " << s.cs << "\n";
  } else {
    const ExtendedTypeBPartition p = parse_extended_partition(extended);
    const StatRecord s = statistics(p);
    std::cout << "partition: " << to_string(p) << "\nna: " << s.na << "\nrc: " << s.rc << "\ncs: " << s.cs
              << "\nminmax: " << s.minmax << "\n";
  }
  return kExitOk;
}

int run_moment(const std::string& path, const std::string& method, const std::string& corollary,
               const std::string& subtract, const std::string& alpha, const std::string& q) {
  if (method != "combinatorial" && method != "oracle" && method != "both")
    throw UsageError("--method is combinatorial, oracle or both");
  const MomentProblem problem = load_problem(path);
  int code = kExitOk;
  BivariatePoly main;
  if (method != "oracle") {
    Timer timer("combinatorial");
    main = moment(problem);
    std::cout << "combinatorial: " << to_string(main) << "\n";
  }
  if (method != "combinatorial") {
    BivariatePoly oracle;
    {
      Timer timer("oracle");
      oracle = vacuum_expectation_oracle(problem.factors);
    }
    std::cout << "oracle: " << to_string(oracle) << "\n";
    if (method == "both") {
      const BivariatePoly diff = main - oracle;
      if (diff.is_zero()) {
        std::cout << "verdict: equal\n";
      } else {
        std::cout << "verdict: mismatch " << to_string(diff) << "\n";
        code = kExitMismatch;
      }
    } else {
      main = oracle;
    }
  }
  if (!corollary.empty()) {
    const Specialization mode = parse_specialization(corollary);
    const BivariatePoly special = specialized_moment(problem, mode);
    BivariatePoly general = method == "oracle" ? main : moment(problem);
    if (mode == Specialization::kTypeA) general = general.substitute_alpha(0);
    if (mode == Specialization::kMeixnerQ0) general = general.substitute_q(0);
    std::cout << "corollary " << corollary << ": " << to_string(special) << "\n";
    const bool equal = special == general;
    std::cout << "corollary verdict: " << (equal ? "equal" : "mismatch") << "\n";
    if (!equal) code = kExitMismatch;
  }
  if (!subtract.empty()) {
    const BivariatePoly other = moment(load_problem(subtract));
    main = main - other;
    std::cout << "subtracted: " << to_string(other) << "\ndifference: " << to_string(main) << "\n";
  }
  print_evaluation(main, alpha, q);
  return code;
}

int run_wick(const std::string& path, const std::string& letters) {
  Timer timer("wick");
  const MomentProblem problem = load_problem(path);
  const std::vector<Letter> eps = parse_letters(letters);
  if (static_cast<int>(eps.size()) != problem.n())
    throw UsageError("letter word length differs from the number of factors");
  FockVector total(problem.dimension);
  std::cout << "partition\tcoefficient\n";
  for (const WickTerm& t : wick_terms(eps, problem)) {
    std::cout << to_string(t.partition) << "\t" << to_string(t.coefficient) << "\n";
    FockVector s = t.state;
    s *= t.coefficient;
    total += s;
  }
  std::cout << "vector: " << to_string(total) << "\n";
  const bool equal = total == apply_letters(eps, problem);
  std::cout << "verdict: " << (equal ? "equal" : "mismatch") << "\n";
  return equal ? kExitOk : kExitMismatch;
}

bool check_decomposition(int n, int d) {
  std::vector<Word> words{{}};
  for (int k = 0; k < 2 * n; ++k) {
    std::vector<Word> next;
    for (const Word& w : words) {
      for (int i = 0; i < d; ++i) {
        Word e = w;
        e.push_back(i);
        next.push_back(e);
      }
    }
    words = std::move(next);
  }
  MatrixQ t = zero_matrix(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) t[i][j] = i + 2 * j + 1;
  bool ok = true;
  for (const Word& w : words) {
    const FockVector v = FockVector::basis(d, w);
    ok = ok && apply_symmetrizer(v) == apply_symmetrizer_recursive(v);
    for (int i = 0; i < d && ok; ++i) {
      VectorQ x(d, 0), y(d, 0);
      x[i] = 1;
      y[d - 1 - i] = 1;
      ok = annihilation(x, y, v) == annihilation_closed(x, y, v) &&
           gauge(t, identity_matrix(d), v) == gauge_closed(t, identity_matrix(d), v);
    }
  }
  return ok;
}

int run_symmetrizer(int n, int d, double alpha, double q, bool decomposition) {
  Timer timer("symmetrizer");
  if (n < 1 || d < 1) throw UsageError("--n and --d must be positive");
  const SpectrumResult s = symmetrizer_spectrum(n, d, alpha, q);
  std::cout << "min_eigenvalue: " << fmt12(s.min_eigenvalue) << "\nmax_eigenvalue: " << fmt12(s.max_eigenvalue)
            << "\ndeterminant: " << fmt12(s.determinant) << "\ndet_zero: " << (s.det_zero ? "true" : "false")
            << "\n";
  if (!decomposition) return kExitOk;
  const bool ok = check_decomposition(n, d);
  std::cout << "decomposition: " << (ok ? "equal" : "mismatch") << "\n";
  return ok ? kExitOk : kExitMismatch;
}

int run_measure(double alpha, double q, int grid, double eps, int depth, double xmin, double xmax,
                const std::string& out_path) {
  Timer timer("measure");
  if (alpha <= -1) throw UsageError("--alpha must exceed -1");
  if (q <= -1 || q >= 1) throw UsageError("--q must lie in (-1, 1)");
  if (grid < 1 || depth < 1 || eps <= 0 || xmin >= xmax) throw UsageError("bad grid parameters");
  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) throw UsageError("cannot write " + out_path);
  }
  std::ostream& out = out_path.empty() ? std::cout : file;
  const bool closed = q == 0;
  std::optional<MeixnerMeasure> measure;
  if (closed) measure.emplace(alpha);
  out << "kind,x,density_closed_form,density_inversion\n";
  for (int i = 0; i < grid; ++i) {
    const double x = xmin + (xmax - xmin) * (i + 0.5) / grid;
    out << "density," << fmt12(x) << "," << (closed ? fmt12(measure->density(x)) : "") << ","
        << fmt12(stieltjes_density(alpha, q, x, eps, depth)) << "\n";
  }
  if (closed && measure->atom()) {
    const Atom a = *measure->atom();
    out << "atom," << fmt12(a.location) << "," << fmt12(a.mass) << ","
        << fmt12(atom_mass_estimate(alpha, q, a.location, eps, depth)) << "\n";
  }
  return kExitOk;
}

int run_norms(double alpha, double q, const std::string& xs, const std::string& ys, int level, int r_max) {
  Timer timer("norms");
  const std::vector<double> x = parse_doubles(xs), y = parse_doubles(ys);
  const CreationNormBounds b = creation_norm_bounds(x, y, alpha, q);
  std::cout << "region: " << to_string(b.region) << "\ncreation_norm: " << fmt12(creation_norm(x, y, alpha, q, level))
            << "\nlower_bound: " << fmt12(b.lower) << "\nupper_bound: " << fmt12(b.upper) << "\n";
  for (int n = 1; n <= r_max; ++n) {
    const double bound = (1 + std::abs(alpha) * std::pow(std::abs(q), n - 1)) *
                         to_double(q_number(n, Rational(q)));
    std::cout << "r_norm " << n << ": " << fmt12(r_norm(n, alpha, q)) << " bound " << fmt12(bound) << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Double Fock space of type B: partitions, moments and measures"};
  app.require_subcommand(1);

  int n = 0, d = 2, grid = 400, depth = kDefaultDepth, level = 6, r_max = 0;
  std::string cls = "B", partition, subtract, extended, problem, method = "both", corollary, alpha_s, q_s, letters,
              out_path, xs = "1,0", ys = "1,0";
  bool with_stats = false, decomposition = false;
  double alpha = 0, q = 0, eps = kDefaultEpsilon, xmin = -1, xmax = 3;

  auto* partitions = app.add_subcommand("partitions", "Enumerate partitions of {+-1..+-n}");
  partitions->add_option("--n", n)->required();
  partitions->add_option("--class", cls, "B, A, pairB, noSingletonB, ncB or ncA");
  partitions->add_flag("--stats", with_stats);

  auto* stats = app.add_subcommand("stats", "Statistics of one partition");
  stats->add_option("--partition", partition);
  stats->add_option("--extended", extended);

  auto* moment_cmd = app.add_subcommand("moment", "Vacuum moment of a problem file");
  moment_cmd->add_option("--problem", problem)->required();
  moment_cmd->add_option("--method", method, "combinatorial, oracle or both");
  moment_cmd->add_option("--corollary", corollary, "typeA, gaussian or meixnerQ0");
  moment_cmd->add_option("--subtract", subtract, "second problem file whose moment is subtracted");
  moment_cmd->add_option("--alpha", alpha_s);
  moment_cmd->add_option("--q", q_s);

  auto* wick = app.add_subcommand("wick", "Wick expansion of a creation/annihilation/gauge word");
  wick->add_option("--problem", problem)->required();
  wick->add_option("--letters", letters, "letters from *, 1, E")->required();

  auto* sym = app.add_subcommand("symmetrizer", "Spectrum of the symmetrizer Gram matrix");
  sym->add_option("--n", n)->required();
  sym->add_option("--d", d);
  sym->add_option("--alpha", alpha)->required();
  sym->add_option("--q", q)->required();
  sym->add_flag("--check-decomposition", decomposition);

  auto* measure = app.add_subcommand("measure", "Density grid of the orthogonality measure as CSV");
  measure->add_option("--alpha", alpha)->required();
  measure->add_option("--q", q);
  measure->add_option("--grid", grid);
  measure->add_option("--eps", eps);
  measure->add_option("--depth", depth);
  measure->add_option("--xmin", xmin);
  measure->add_option("--xmax", xmax);
  measure->add_option("--out", out_path);

  auto* norms = app.add_subcommand("norms", "Truncated creation norm and R^(n) norms");
  norms->add_option("--alpha", alpha)->required();
  norms->add_option("--q", q)->required();
  norms->add_option("--x", xs);
  norms->add_option("--y", ys);
  norms->add_option("--level", level);
  norms->add_option("--r-max", r_max);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*partitions) return run_partitions(n, cls, with_stats);
    if (*stats) return run_stats(partition, extended);
    if (*moment_cmd) return run_moment(problem, method, corollary, subtract, alpha_s, q_s);
    if (*wick) return run_wick(problem, letters);
    if (*sym) return run_symmetrizer(n, d, alpha, q, decomposition);
    if (*measure) return run_measure(alpha, q, grid, eps, depth, xmin, xmax, out_path);
    if (*norms) return run_norms(alpha, q, xs, ys, level, r_max);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
