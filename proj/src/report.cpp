#include "seqnorm/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "seqnorm/interpolation.hpp"
#include "seqnorm/rng.hpp"
#include "seqnorm/snumbers.hpp"
#include "seqnorm/summing.hpp"

namespace seqnorm {

CsvWriter::CsvWriter(std::vector<std::string> header) : columns_(header.size()) {
  if (header.empty()) throw Error("csv: header row is mandatory");
  add_row(header);
}

void CsvWriter::add_row(const std::vector<std::string>& cells) {
  if (columns_ == 0) columns_ = cells.size();
  if (cells.size() != columns_) throw Error("csv: ragged row");
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) body_ += ',';
    body_ += cells[i];
  }
  body_ += '\n';
}

std::string CsvWriter::str() const { return body_; }

void CsvWriter::write(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("csv: cannot open " + path);
  out << body_;
}

std::string CsvWriter::num(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

namespace fs = std::filesystem;

SpacePtr sp(const std::string& text) { return parse_space(text); }

std::string fmt(double v) { return CsvWriter::num(v); }

struct Ctx {
  ReportOptions opt;
  std::vector<CheckResult> results;

  void save(const CsvWriter& csv, const std::string& name) const {
    csv.write((fs::path(opt.out_dir) / name).string());
  }
  void add(const std::string& name, bool passed, const std::string& detail) {
    results.push_back({name, passed, detail});
  }
};

// --- 1. exact approximation-number oracle on l_p -----------------------------

void run_pietsch(Ctx& ctx) {
  std::vector<double> ps = {1.0, 4.0 / 3.0, 1.5};
  std::vector<std::size_t> ns = {4, 8, 16, 32, 64};
  if (ctx.opt.quick) ns = {4, 8, 16};
  CsvWriter csv({"p", "n", "k", "lower_ref", "upper", "exact", "rel_err", "cert"});
  double worst = 0.0;
  for (double p : ps) {
    SpacePtr E = SpaceDescriptor::lp(p);
    for (std::size_t n : ns) {
      for (std::size_t k = 1; k <= n; ++k) {
        BoundPair b = approx_bounds(E, n, k);
        double exact = approx_exact_lp(n, k, p, 2.0);
        double rel = std::abs(b.upper - exact) / exact;
        worst = std::max(worst, rel);
        csv.add_row({fmt(p), std::to_string(n), std::to_string(k), fmt(b.lower),
                     fmt(b.upper), fmt(exact), fmt(rel), "exact"});
      }
    }
  }
  ctx.save(csv, "ak_lp_oracle.csv");
  ctx.add("approximation-number l_p oracle", worst <= 1e-9,
          "worst relative error " + fmt(worst));
}

// --- 2. identity-norm sandwich for the Euclidean ball ------------------------

void run_sandwich(Ctx& ctx) {
  std::vector<std::string> spaces = {"lp(1)", "lp(4/3)", "lorentz(4/3,2)",
                                     "dwp(pow(0.5),1.5)", "orlicz(power(1.5))"};
  std::size_t m_max = ctx.opt.quick ? 32 : 256;
  CsvWriter csv({"space", "m", "lower", "upper", "reference", "ratio_lo",
                 "ratio_hi", "cert"});
  bool ok = true;
  double worst_hi = 0.0, worst_lo = kInf;
  for (const std::string& name : spaces) {
    SpacePtr E = sp(name);
    for (std::size_t m = 4; m <= m_max; m *= 2) {
      BoundPair b = identity_norm(SpaceDescriptor::lp(2.0), E, m);
      double ref = fundamental(E, m).value / std::sqrt(static_cast<double>(m));
      double rlo = b.lower / ref, rhi = b.upper / ref;
      worst_lo = std::min(worst_lo, rlo);
      worst_hi = std::max(worst_hi, rhi);
      if (rlo < 1.0 - 1e-9 || rhi > 2.0) ok = false;
      csv.add_row({name, std::to_string(m), fmt(b.lower), fmt(b.upper), fmt(ref),
                   fmt(rlo), fmt(rhi), "exact"});
    }
  }
  ctx.save(csv, "euclidean_sandwich.csv");
  ctx.add("Euclidean-ball identity sandwich", ok,
          "ratio range [" + fmt(worst_lo) + ", " + fmt(worst_hi) + "]");
}

// --- 3. no-logarithm Lorentz ratio -------------------------------------------

void run_lorentz_ratio(Ctx& ctx) {
  std::vector<std::pair<double, double>> pqs = {
      {4.0 / 3.0, 1.0}, {4.0 / 3.0, 2.0}, {1.5, 2.0}};
  std::vector<std::size_t> ns = {16, 64, 256, 1024};
  if (ctx.opt.quick) ns = {16, 64};
  CsvWriter csv({"p", "q", "n", "k", "upper", "reference", "ratio", "cert"});
  bool ok = true;
  double worst_spread = 0.0;
  for (auto [p, q] : pqs) {
    SpacePtr E = SpaceDescriptor::lorentz_pq(p, q);
    double rmin = kInf, rmax = 0.0;
    for (std::size_t n : ns) {
      std::size_t k = n / 2;
      BoundPair b = approx_bounds(E, n, k);
      double ref = std::pow(static_cast<double>(n - k + 1), 1.0 / p - 0.5);
      double r = b.upper / ref;
      rmin = std::min(rmin, r);
      rmax = std::max(rmax, r);
      csv.add_row({fmt(p), fmt(q), std::to_string(n), std::to_string(k),
                   fmt(b.upper), fmt(ref), fmt(r), "exact"});
    }
    worst_spread = std::max(worst_spread, rmax / rmin);
    if (rmax / rmin > 2.0) ok = false;
  }
  ctx.save(csv, "lorentz_no_log.csv");
  ctx.add("Lorentz no-logarithm ratio", ok, "worst spread " + fmt(worst_spread));
}

// --- 4. Orlicz fundamental-function formula ----------------------------------

void run_orlicz_formula(Ctx& ctx) {
  SpacePtr E = sp("orlicz(power(1.5))");
  SpacePtr Ref = SpaceDescriptor::lp(1.5);
  std::vector<std::size_t> ns = {16, 64, 256, 1024};
  if (ctx.opt.quick) ns = {16, 64};
  CsvWriter csv({"n", "k", "upper", "formula", "ratio", "lp_cross", "cross_err",
                 "cert"});
  bool ok = true;
  double worst_ratio = 0.0, worst_cross = 0.0;
  for (std::size_t n : ns) {
    std::size_t k = n / 2;
    std::size_t m = n - k + 1;
    BoundPair b = approx_bounds(E, n, k);
    double md = static_cast<double>(m);
    double formula = std::pow(md, 2.0 / 3.0) * std::pow(md, -0.5);
    double ratio = b.upper / formula;
    double cross = approx_bounds(Ref, n, k).upper;
    double cerr = std::abs(b.upper - cross) / cross;
    worst_ratio = std::max(worst_ratio, ratio);
    worst_cross = std::max(worst_cross, cerr);
    if (ratio < 1.0 - 1e-12 || ratio > 2.0 || cerr > 1e-9) ok = false;
    csv.add_row({std::to_string(n), std::to_string(k), fmt(b.upper), fmt(formula),
                 fmt(ratio), fmt(cross), fmt(cerr), "exact"});
  }
  ctx.save(csv, "orlicz_formula.csv");
  ctx.add("Orlicz fundamental-function formula", ok,
          "worst ratio " + fmt(worst_ratio) + ", l_3/2 deviation " +
              fmt(worst_cross));
}

// --- 5. main-theorem summing sandwich ----------------------------------------

std::vector<VectorFamily> criterion_families(std::size_t n, int random_families,
                                             std::uint64_t seed) {
  std::vector<VectorFamily> out;
  VectorFamily coords;
  for (std::size_t j = 0; j < n; ++j) coords.push_back(Vector::unit(n, j));
  out.push_back(coords);
  CounterRng rng(seed, 0x63726974ULL);
  for (int f = 0; f < random_families; ++f) {
    VectorFamily fam;
    for (std::size_t i = 0; i < n; ++i) {
      Vector x = Vector::zeros(n);
      double s = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        x[j] = rng.gauss();
        s += x[j] * x[j];
      }
      s = std::sqrt(s);
      if (s > 0.0)
        for (std::size_t j = 0; j < n; ++j) x[j] /= s;
      fam.push_back(x);
    }
    out.push_back(fam);
  }
  return out;
}

CsvWriter run_summing_csv(const ReportOptions& opt, bool& ok,
                          std::string& detail) {
  std::vector<std::string> spaces = {"lp(1)", "lp(4/3)"};
  std::vector<std::size_t> ns = opt.quick ? std::vector<std::size_t>{4, 8}
                                          : std::vector<std::size_t>{4, 8, 16, 32};
  const int fams = opt.quick ? 16 : 256;
  CsvWriter csv({"space", "n", "lower", "upper_bound", "pi2_exact_gap", "cert"});
  ok = true;
  double worst = 0.0;
  for (const std::string& name : spaces) {
    SpacePtr E = sp(name);
    SpacePtr M = SpaceDescriptor::multiplier(SpaceDescriptor::lp(2.0), E);
    double upper = summing_upper_main(E);
    for (std::size_t n : ns) {
      FiniteOperator id =
          FiniteOperator::identity(n, E, SpaceDescriptor::lp(2.0));
      SolverConfig cfg;
      cfg.seed = opt.seed;
      cfg.restarts = 16;
      BoundPair b = summing_lower(id, M, 2.0, criterion_families(n, fams, opt.seed),
                                  cfg);
      double gap = name == "lp(1)" ? std::abs(b.lower - 1.0) : 0.0;
      if (b.lower < 1.0 - 1e-9 || b.lower > upper * (1.0 + 1e-6)) ok = false;
      if (gap > 1e-9) ok = false;
      worst = std::max(worst, b.lower / upper);
      csv.add_row({name, std::to_string(n), fmt(b.lower), fmt(upper), fmt(gap),
                   "numerical"});
    }
  }
  detail = "worst lower/upper " + fmt(worst);
  return csv;
}

void run_summing(Ctx& ctx) {
  bool ok = false;
  std::string detail;
  CsvWriter csv = run_summing_csv(ctx.opt, ok, detail);
  ctx.save(csv, "summing_sandwich.csv");
  ctx.add("main-theorem summing sandwich", ok, detail);
}

// --- 6. multiplier identity --------------------------------------------------

void run_multiplier_identity(Ctx& ctx) {
  std::vector<std::string> spaces = {"lp(1)", "lp(4/3)", "dwp(pow(0.5),1.5)"};
  const int cases = ctx.opt.quick ? 10 : 50;
  CsvWriter csv({"space", "case", "n", "m2e", "ascent_lower", "rel_gap", "cert"});
  bool ok = true;
  double worst = 0.0;
  CounterRng rng(ctx.opt.seed, 0x6571316dULL);
  for (const std::string& name : spaces) {
    SpacePtr F = sp(name);
    for (int c = 0; c < cases; ++c) {
      std::size_t n = 4 + rng.below(29);
      Vector x = Vector::zeros(n);
      for (std::size_t j = 0; j < n; ++j) x[j] = rng.gauss();
      SolverConfig cfg;
      cfg.seed = ctx.opt.seed + static_cast<std::uint64_t>(c);
      cfg.restarts = 24;
      double v1 = m2e_norm(F, x, cfg).value;
      double v2 = multiplier_norm(SpaceDescriptor::lp(2.0), F, x, cfg).lower;
      double rel = std::abs(v1 - v2) / v1;
      worst = std::max(worst, rel);
      if (rel > 1e-4) ok = false;
      csv.add_row({name, std::to_string(c), std::to_string(n), fmt(v1), fmt(v2),
                   fmt(rel), "numerical"});
    }
  }
  ctx.save(csv, "multiplier_identity.csv");
  ctx.add("multiplier-space identity", ok, "worst relative gap " + fmt(worst));
}

// --- 7. K-functional oracle and power equivalence ----------------------------

void run_kfunctional(Ctx& ctx) {
  const int cases = ctx.opt.quick ? 30 : 200;
  CsvWriter csv({"case", "n", "t", "closed", "clip", "rel_err", "cert"});
  bool ok = true;
  double worst = 0.0;
  CounterRng rng(ctx.opt.seed, 0x6b66756eULL);
  SpacePtr l1 = SpaceDescriptor::lp(1.0);
  SpacePtr l2 = SpaceDescriptor::lp(2.0);
  SpacePtr li = SpaceDescriptor::lp(kInf);
  for (int c = 0; c < cases; ++c) {
    std::size_t n = 2 + rng.below(99);
    Vector x = Vector::zeros(n);
    for (std::size_t j = 0; j < n; ++j) x[j] = rng.gauss();
    double t = 0.05 + rng.uniform() * (static_cast<double>(n) + 1.0);
    double closed = k_functional(l1, li, t, x, KMethod::ClosedForm).value.value;
    double clip = k_functional(l1, li, t, x, KMethod::ClipSearch).value.value;
    double rel = std::abs(closed - clip) / closed;
    worst = std::max(worst, rel);
    if (rel > 1e-6) ok = false;
    csv.add_row({std::to_string(c), std::to_string(n), fmt(t), fmt(closed),
                 fmt(clip), fmt(rel), "numerical"});
  }
  ctx.save(csv, "kfunctional_oracle.csv");

  CsvWriter pcsv({"couple", "case", "n", "t", "ratio", "cert"});
  double rmin = kInf, rmax = 0.0;
  const int pcases = ctx.opt.quick ? 10 : 50;
  const std::vector<std::pair<std::string, SpacePtr>> couples = {
      {"l1,linf", l1}, {"l2,linf", l2}};
  for (const auto& [name, E0] : couples) {
    for (int c = 0; c < pcases; ++c) {
      std::size_t n = 2 + rng.below(49);
      Vector x = Vector::zeros(n);
      for (std::size_t j = 0; j < n; ++j) x[j] = rng.gauss();
      double t = 0.05 + rng.uniform() * (static_cast<double>(n) + 1.0);
      double r = power_equivalence_ratio(E0, li, 0.5, t, x);
      rmin = std::min(rmin, r);
      rmax = std::max(rmax, r);
      if (r < 0.25 || r > 4.0) ok = false;
      pcsv.add_row({name, std::to_string(c), std::to_string(n), fmt(t), fmt(r),
                    "numerical"});
    }
  }
  ctx.save(pcsv, "k_power_equivalence.csv");
  ctx.add("K-functional oracle and power equivalence", ok,
          "worst oracle error " + fmt(worst) + ", power ratio range [" +
              fmt(rmin) + ", " + fmt(rmax) + "]");
}

// --- 8. Weyl inequality suite ------------------------------------------------

void run_weyl(Ctx& ctx) {
  std::vector<std::pair<std::size_t, int>> ensembles = {{8, 200}, {16, 50}};
  if (ctx.opt.quick) ensembles = {{8, 20}, {16, 5}};
  std::vector<std::string> spaces = {"lp(1)", "lorentz(4/3,2)"};
  CsvWriter csv({"n", "case", "space", "product_ratio", "norm_ratio",
                 "mult_ok", "norm_ok", "cert"});
  bool ok = true;
  double worst_prod = 0.0, worst_norm = 0.0;
  CounterRng rng(ctx.opt.seed, 0x7765796cULL);
  for (auto [n, count] : ensembles) {
    for (int c = 0; c < count; ++c) {
      Matrix A(n, std::vector<double>(n));
      for (auto& row : A)
        for (double& v : row) v = rng.gauss();
      for (const std::string& name : spaces) {
        WeylReport rep = weyl_check(A, sp(name));
        worst_prod = std::max(worst_prod, rep.worst_product_ratio);
        worst_norm = std::max(worst_norm, rep.norm_form_ratio);
        if (!rep.multiplicative_ok || !rep.norm_form_ok) ok = false;
        csv.add_row({std::to_string(n), std::to_string(c), name,
                     fmt(rep.worst_product_ratio), fmt(rep.norm_form_ratio),
                     rep.multiplicative_ok ? "1" : "0",
                     rep.norm_form_ok ? "1" : "0", "exact"});
      }
    }
  }
  ctx.save(csv, "weyl_suite.csv");
  ctx.add("generalized Weyl inequality suite", ok,
          "worst product ratio " + fmt(worst_prod) + ", worst norm ratio " +
              fmt(worst_norm));
}

// --- 9. eigenvalue-multiplier shadow ------------------------------------------

void run_eigenvalue_multiplier(Ctx& ctx) {
  std::vector<std::string> spaces = {"lp(1)", "lp(4/3)"};
  const int cases = ctx.opt.quick ? 10 : 100;
  CsvWriter csv({"space", "case", "n", "s_norm", "bound", "eig_norm",
                 "singular_ok", "eigen_ok", "cert"});
  bool ok = true;
  double worst = 0.0;
  CounterRng rng(ctx.opt.seed, 0x6569676dULL);
  for (int c = 0; c < cases; ++c) {
    std::size_t n = 4 + rng.below(29);
    Vector sigma = Vector::zeros(n);
    for (std::size_t j = 0; j < n; ++j) sigma[j] = std::abs(rng.gauss());
    Matrix R(n, std::vector<double>(n));
    for (auto& row : R)
      for (double& v : row) v = rng.gauss();
    for (const std::string& name : spaces) {
      EigenvalueMultiplierReport rep =
          eigenvalue_multiplier_check(sigma, R, sp(name));
      worst = std::max(worst, rep.s_norm / rep.bound);
      if (!rep.singular_ok || !rep.eigen_ok) ok = false;
      csv.add_row({name, std::to_string(c), std::to_string(n), fmt(rep.s_norm),
                   fmt(rep.bound), fmt(rep.eig_norm),
                   rep.singular_ok ? "1" : "0", rep.eigen_ok ? "1" : "0",
                   "exact"});
    }
  }
  ctx.save(csv, "eigenvalue_multiplier.csv");
  ctx.add("eigenvalue-multiplier shadow", ok, "worst s_norm/bound " + fmt(worst));
}

// --- 10. determinism ----------------------------------------------------------

void run_determinism(Ctx& ctx) {
  ReportOptions quick = ctx.opt;
  quick.quick = true;
  bool ok1 = false, ok2 = false;
  std::string d1, d2;
  std::string a = run_summing_csv(quick, ok1, d1).str();
  std::string b = run_summing_csv(quick, ok2, d2).str();
  bool ok = (a == b) && ok1 == ok2;
  ctx.add("deterministic artifacts", ok,
          ok ? "repeated sweep byte-identical" : "repeated sweep differed");
}

}  // namespace

std::vector<CheckResult> report_all(const ReportOptions& options) {
  fs::create_directories(options.out_dir);
  Ctx ctx{options, {}};
  run_pietsch(ctx);
  run_sandwich(ctx);
  run_lorentz_ratio(ctx);
  run_orlicz_formula(ctx);
  run_summing(ctx);
  run_multiplier_identity(ctx);
  run_kfunctional(ctx);
  run_weyl(ctx);
  run_eigenvalue_multiplier(ctx);
  run_determinism(ctx);

  std::string summary;
  for (const CheckResult& r : ctx.results)
    summary += (r.passed ? "PASS " : "FAIL ") + r.name + ": " + r.detail + "\n";
  std::ofstream out(fs::path(options.out_dir) / "summary.txt",
                    std::ios::binary);
  out << summary;
  return ctx.results;
}

}  // namespace seqnorm
