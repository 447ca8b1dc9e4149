// seqnorm: evaluate symmetric sequence-space norms, dual and multiplier
// norms, K-functionals, summing estimates and spectral checks from the
// command line. Exit codes: 0 success, 1 assertion failure, 2 config error.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "seqnorm/interpolation.hpp"
#include "seqnorm/report.hpp"
#include "seqnorm/rng.hpp"
#include "seqnorm/snumbers.hpp"
#include "seqnorm/summing.hpp"

using namespace seqnorm;

namespace {

const char* tag(Certification c) {
  return c == Certification::Exact ? "exact" : "numerical";
}

Vector parse_vec(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    if (cell.empty()) continue;
    out.push_back(std::stod(cell));
  }
  if (out.empty()) throw InvalidDescriptorError("--vec needs at least one entry");
  return Vector(std::move(out));
}

// Splits "E0,E1" at the top-level comma (commas inside parentheses belong to
// the descriptor arguments).
std::pair<SpacePtr, SpacePtr> parse_couple(const std::string& text) {
  int depth = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    if (text[i] == ')') --depth;
    if (text[i] == ',' && depth == 0)
      return {parse_space(text.substr(0, i)), parse_space(text.substr(i + 1))};
  }
  throw InvalidDescriptorError("--couple expects two descriptors, e.g. \"lp(1),lp(inf)\"");
}

// Dense matrix from CSV with a `rows,cols` header line, then row-major values.
Matrix read_matrix_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidDescriptorError("cannot open matrix file: " + path);
  std::string line;
  if (!std::getline(in, line)) throw InvalidDescriptorError("empty matrix file");
  std::size_t rows = 0, cols = 0;
  if (std::sscanf(line.c_str(), "%zu,%zu", &rows, &cols) != 2 || rows == 0 || cols == 0)
    throw InvalidDescriptorError("matrix file must start with a rows,cols header");
  Matrix A(rows, std::vector<double>(cols));
  std::size_t count = 0;
  while (std::getline(in, line)) {
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      if (cell.empty()) continue;
      if (count >= rows * cols) throw InvalidDescriptorError("too many matrix entries");
      A[count / cols][count % cols] = std::stod(cell);
      ++count;
    }
  }
  if (count != rows * cols)
    throw InvalidDescriptorError("matrix entry count does not match the header");
  return A;
}

// Line-oriented `key = value` config; recognized keys feed the solver config
// and the seed. Flags given on the command line override the file.
void load_config(const std::string& path, SolverConfig& cfg, std::uint64_t& seed) {
  std::ifstream in(path);
  if (!in) throw InvalidDescriptorError("cannot open config file: " + path);
  std::string line;
  while (std::getline(in, line)) {
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::size_t eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      s.erase(0, s.find_first_not_of(" \t"));
      s.erase(s.find_last_not_of(" \t") + 1);
      return s;
    };
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key == "tolerance") cfg.tolerance = std::stod(value);
    else if (key == "max_iters") cfg.max_iterations = std::stoi(value);
    else if (key == "restarts") cfg.restarts = std::stoi(value);
    else if (key == "seed") seed = std::stoull(value);
    else if (key.empty() || key[0] == '[') continue;  // section headers
    else throw InvalidDescriptorError("unknown config key: " + key);
  }
}

void emit(const std::string& path, const CsvWriter& csv) {
  if (path.empty())
    std::fputs(csv.str().c_str(), stdout);
  else
    csv.write(path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"symmetric sequence-space norms, duality and s-number checks"};
  app.require_subcommand(1);

  std::uint64_t seed = 0;
  if (const char* env = std::getenv("SEQNORM_SEED")) seed = std::stoull(env);
  SolverConfig cfg;
  std::string config_path, space_expr, couple_expr, from_expr, to_expr;
  std::string vec_text, k_policy = "all", out_path, matrix_path;
  std::size_t n = 8;
  double t = 1.0;
  int trials = 200;
  bool quick = false;

  app.add_option("--config", config_path, "key = value config file");
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seed", seed, "random seed (default from SEQNORM_SEED)");
    sub->add_option("--tol", cfg.tolerance, "solver tolerance");
    sub->add_option("--out", out_path, "output file (stdout when omitted)");
  };

  CLI::App* c_norm = app.add_subcommand("norm", "||x||_E for a descriptor");
  c_norm->add_option("--space", space_expr)->required();
  c_norm->add_option("--vec", vec_text)->required();
  add_common(c_norm);

  CLI::App* c_dual = app.add_subcommand("dual-norm", "||x||_{E^x} (Koethe dual)");
  c_dual->add_option("--space", space_expr)->required();
  c_dual->add_option("--vec", vec_text)->required();
  add_common(c_dual);

  CLI::App* c_mult = app.add_subcommand("mult-norm", "||m||_{M(E,F)} bounds");
  c_mult->add_option("--from", from_expr)->required();
  c_mult->add_option("--to", to_expr)->required();
  c_mult->add_option("--vec", vec_text)->required();
  add_common(c_mult);

  CLI::App* c_fund = app.add_subcommand("fundamental", "lambda_E(n)");
  c_fund->add_option("--space", space_expr)->required();
  c_fund->add_option("--n", n)->required();
  add_common(c_fund);

  CLI::App* c_ak = app.add_subcommand("ak-table",
                                      "approximation numbers of id : l_2^n -> E_n");
  c_ak->add_option("--space", space_expr)->required();
  c_ak->add_option("--n", n)->required();
  c_ak->add_option("--k", k_policy, "all, or a single index");
  add_common(c_ak);

  CLI::App* c_sum = app.add_subcommand("summing-estimate",
                                       "lower bound for pi_{E,p}(T)");
  c_sum->add_option("--matrix", matrix_path, "CSV file, rows,cols header")->required();
  c_sum->add_option("--from", from_expr, "domain descriptor")->required();
  c_sum->add_option("--to", to_expr, "codomain descriptor")->required();
  c_sum->add_option("--space", space_expr, "summing space E")->required();
  c_sum->add_option("--t", t, "exponent p of the summing norm");
  c_sum->add_option("--trials", trials, "random witness families");
  add_common(c_sum);

  CLI::App* c_kfun = app.add_subcommand("kfun", "Peetre K-functional of a couple");
  c_kfun->add_option("--couple", couple_expr, "\"E0,E1\"")->required();
  c_kfun->add_option("--vec", vec_text)->required();
  c_kfun->add_option("--t", t)->required();
  add_common(c_kfun);

  CLI::App* c_conc = app.add_subcommand("concavity", "2-concavity constant bounds");
  c_conc->add_option("--space", space_expr)->required();
  c_conc->add_option("--n", n)->required();
  c_conc->add_option("--trials", trials);
  add_common(c_conc);

  CLI::App* c_spec = app.add_subcommand("spectra-check",
                                        "Weyl inequality on a seeded Gaussian ensemble");
  c_spec->add_option("--space", space_expr, "norm-form space F")->required();
  c_spec->add_option("--n", n, "matrix dimension");
  c_spec->add_option("--trials", trials);
  add_common(c_spec);

  CLI::App* c_rep = app.add_subcommand("report-all", "full verification suite");
  c_rep->add_flag("--quick", quick, "trimmed sweeps");
  add_common(c_rep);

  // the config file supplies defaults, so read it before parsing: any flag
  // given on the command line then overwrites the file's value
  try {
    for (int i = 1; i + 1 < argc; ++i)
      if (std::string(argv[i]) == "--config") load_config(argv[i + 1], cfg, seed);
  } catch (const Error& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    cfg.seed = seed;

    if (*c_norm || *c_dual) {
      SpacePtr E = parse_space(space_expr);
      Vector x = parse_vec(vec_text);
      NormResult r = *c_norm ? norm(E, x) : kothe_dual_norm(E, x, cfg);
      CsvWriter csv({"space", "value", "certification"});
      csv.add_row({print_space(E), CsvWriter::num(r.value), tag(r.certification)});
      emit(out_path, csv);
    } else if (*c_mult) {
      SpacePtr E = parse_space(from_expr), F = parse_space(to_expr);
      BoundPair b = multiplier_norm(E, F, parse_vec(vec_text), cfg);
      CsvWriter csv({"from", "to", "lower", "upper", "certification"});
      csv.add_row({print_space(E), print_space(F), CsvWriter::num(b.lower),
                   CsvWriter::num(b.upper),
                   b.gap() <= 1e-9 ? "exact" : "numerical"});
      emit(out_path, csv);
    } else if (*c_fund) {
      SpacePtr E = parse_space(space_expr);
      NormResult r = fundamental(E, n);
      CsvWriter csv({"space", "n", "value", "certification"});
      csv.add_row({print_space(E), std::to_string(n), CsvWriter::num(r.value),
                   tag(r.certification)});
      emit(out_path, csv);
    } else if (*c_ak) {
      SpacePtr E = parse_space(space_expr);
      std::size_t k_lo = 1, k_hi = n;
      if (k_policy != "all") k_lo = k_hi = std::stoull(k_policy);
      CsvWriter csv({"n", "k", "lower_ref", "upper", "exact_if_known", "ratio"});
      for (std::size_t k = k_lo; k <= k_hi; ++k) {
        BoundPair b = approx_bounds(E, n, k, cfg);
        const auto* lp = simplify(E)->as<Lp>();
        std::string exact = (lp && lp->p <= 2.0)
                                ? CsvWriter::num(approx_exact_lp(n, k, lp->p, 2.0))
                                : "";
        csv.add_row({std::to_string(n), std::to_string(k), CsvWriter::num(b.lower),
                     CsvWriter::num(b.upper), exact,
                     CsvWriter::num(b.upper / b.lower)});
      }
      emit(out_path, csv);
    } else if (*c_sum) {
      FiniteOperator T{read_matrix_csv(matrix_path), parse_space(from_expr),
                       parse_space(to_expr)};
      if (T.cols() == 0 || T.rows() == 0)
        throw InvalidDescriptorError("matrix must be non-empty");
      SpacePtr E = parse_space(space_expr);
      double p = c_sum->count("--t") ? t : 2.0;
      BoundPair b =
          summing_lower(T, E, p, standard_families(T.cols(), trials, seed), cfg);
      CsvWriter csv({"space", "p", "lower", "upper", "certification"});
      csv.add_row({print_space(E), CsvWriter::num(p), CsvWriter::num(b.lower),
                   std::isfinite(b.upper) ? CsvWriter::num(b.upper) : "inf",
                   "numerical"});
      emit(out_path, csv);
    } else if (*c_kfun) {
      auto [E0, E1] = parse_couple(couple_expr);
      Vector x = parse_vec(vec_text);
      KFunctionalResult r = k_functional(E0, E1, t, x, KMethod::Auto, cfg);
      std::size_t mixed = 0;
      for (std::size_t i = 0; i < x.dim(); ++i)
        if (r.split.x0[i] != 0.0 && r.split.x1[i] != 0.0) ++mixed;
      CsvWriter csv({"t", "value", "split_sparsity", "certification"});
      csv.add_row({CsvWriter::num(t), CsvWriter::num(r.value.value),
                   std::to_string(mixed), tag(r.value.certification)});
      emit(out_path, csv);
    } else if (*c_conc) {
      SpacePtr E = parse_space(space_expr);
      BoundPair b = concavity_estimate(E, n, trials, seed);
      CsvWriter csv({"space", "n", "lower", "upper", "certification"});
      csv.add_row({print_space(E), std::to_string(n), CsvWriter::num(b.lower),
                   std::isfinite(b.upper) ? CsvWriter::num(b.upper) : "inf",
                   "numerical"});
      emit(out_path, csv);
    } else if (*c_spec) {
      SpacePtr F = parse_space(space_expr);
      CounterRng rng(seed, 0x73706563);
      CsvWriter csv({"trial", "worst_product_ratio", "norm_form_ratio", "ok"});
      int failures = 0;
      for (int trial = 0; trial < trials; ++trial) {
        Matrix A(n, std::vector<double>(n));
        for (auto& row : A)
          for (double& v : row) v = rng.gauss();
        WeylReport rep = weyl_check(A, F);
        bool ok = rep.multiplicative_ok && rep.norm_form_ok;
        if (!ok) ++failures;
        csv.add_row({std::to_string(trial), CsvWriter::num(rep.worst_product_ratio),
                     CsvWriter::num(rep.norm_form_ratio), ok ? "1" : "0"});
      }
      emit(out_path, csv);
      if (failures > 0) {
        std::fprintf(stderr, "spectra-check: %d of %d trials failed\n", failures,
                     trials);
        return 1;
      }
    } else if (*c_rep) {
      ReportOptions opt;
      opt.seed = seed == 0 ? 42 : seed;
      opt.quick = quick;
      if (!out_path.empty()) opt.out_dir = out_path;
      int failures = 0;
      for (const auto& r : report_all(opt)) {
        std::printf("%s  %s: %s\n", r.passed ? "PASS" : "FAIL", r.name.c_str(),
                    r.detail.c_str());
        if (!r.passed) ++failures;
      }
      if (failures > 0) return 1;
    }
  } catch (const InvalidDescriptorError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  } catch (const DimensionMismatchError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  }
  return 0;
}
