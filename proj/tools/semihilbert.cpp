// Command-line front end: compute single quantities, run the certification
// suite, hill-climb for extremal witnesses, and compare bounds against named
// baselines. Exit codes: 0 clean, 1 violations found, 2 invalid input.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <semihilbert/semihilbert.hpp>

namespace sh = semihilbert;

namespace {

std::vector<int> parse_int_list(const std::string& s, const char* what) {
  auto to_int = [&](const std::string& tok) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      return v;
    } catch (const std::exception&) {
      throw sh::InvalidConfig(std::string(what) + ": cannot parse '" + tok + "'");
    }
  };
  std::vector<int> out;
  const auto dots = s.find("..");
  if (dots != std::string::npos) {
    const int a = to_int(s.substr(0, dots));
    const int b = to_int(s.substr(dots + 2));
    if (a < 1 || b < a) throw sh::InvalidConfig(std::string(what) + ": bad range " + s);
    for (int v = a; v <= b; ++v) out.push_back(v);
    return out;
  }
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const auto comma = s.find(',', pos);
    const std::string tok = s.substr(pos, comma == std::string::npos ? comma : comma - pos);
    if (tok.empty()) throw sh::InvalidConfig(std::string(what) + ": empty entry in " + s);
    const int v = to_int(tok);
    if (v < 1) throw sh::InvalidConfig(std::string(what) + ": values must be >= 1");
    out.push_back(v);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::vector<sh::CaseId> parse_cases(const std::string& s) {
  if (s == "all") return sh::all_cases();
  std::vector<sh::CaseId> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const auto comma = s.find(',', pos);
    const std::string tok = s.substr(pos, comma == std::string::npos ? comma : comma - pos);
    out.push_back(sh::case_from_string(tok));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (out.empty()) throw sh::InvalidConfig("cases: empty list");
  return out;
}

// --seed wins; otherwise SEMIHILBERT_SEED; otherwise the library default.
std::uint64_t resolve_seed(bool seed_given, std::uint64_t seed_value) {
  if (seed_given) return seed_value;
  if (const char* env = std::getenv("SEMIHILBERT_SEED")) {
    const std::string s(env);
    if (s.empty()) throw sh::InvalidConfig("SEMIHILBERT_SEED is empty");
    char* end = nullptr;
    errno = 0;
    const unsigned long long v = std::strtoull(s.c_str(), &end, 10);
    if (errno != 0 || end == s.c_str() || *end != '\0' || s[0] == '-')
      throw sh::InvalidConfig("SEMIHILBERT_SEED: cannot parse '" + s + "'");
    return static_cast<std::uint64_t>(v);
  }
  return sh::kDefaultSeed;
}

void print_value(double v) { std::printf("%.17g\n", v); }

int run_compute(const std::string& weight_path, const std::string& op_path,
                const std::string& what, const std::string& algo, double tol) {
  sh::WeightPtr<double> w = sh::make_weight_ptr(sh::matrix_from_json(sh::read_json_file(weight_path)), tol);
  sh::Matrix<double> m = sh::matrix_from_json(sh::read_json_file(op_path));
  sh::require_square(m, "compute");
  if (m.rows() != w->dim()) throw sh::DimensionMismatch("compute: weight and operator sizes differ");
  const sh::SemiOperator<double> op = sh::make_operator(w, m);

  if (what == "seminorm") {
    if (!algo.empty()) throw sh::InvalidConfig("compute: seminorm takes no --algo");
    print_value(sh::op_seminorm(op));
  } else if (what == "wA") {
    sh::RadiusMethod method = sh::RadiusMethod::Compression;
    if (!algo.empty()) method = sh::radius_method_from_string(algo);
    if (method != sh::RadiusMethod::Compression && method != sh::RadiusMethod::ThetaSweep)
      throw sh::InvalidConfig("compute: wA supports --algo compression|theta_sweep");
    print_value(sh::a_numerical_radius(op, method).value);
  } else if (what == "rA") {
    sh::RadiusMethod method = sh::RadiusMethod::Eigenvalues;
    if (!algo.empty()) method = sh::radius_method_from_string(algo);
    if (method != sh::RadiusMethod::Eigenvalues && method != sh::RadiusMethod::LimitFormula)
      throw sh::InvalidConfig("compute: rA supports --algo eigen|limit");
    print_value(sh::a_spectral_radius(op, method).value);
  } else if (what == "sharp") {
    if (!op.in_ba) throw sh::NotInBA("compute: operator admits no A-adjoint");
    std::cout << sh::matrix_to_json(op.sharp).dump(2) << '\n';
  } else if (what == "tilde") {
    if (!op.in_ba_half) throw sh::NotABounded("compute: operator is not A-bounded");
    std::cout << sh::matrix_to_json(op.tilde).dump(2) << '\n';
  } else {
    throw sh::InvalidConfig("compute: unknown --what '" + what + "'");
  }
  return 0;
}

int run_check(const sh::SuiteConfig& cfg, const std::string& out_path,
              const std::string& format) {
  const sh::SuiteReport<double> rep = sh::run_suite<double>(cfg);
  if (format == "json")
    sh::write_text_file(out_path, sh::report_to_json(rep).dump(2) + "\n");
  else if (format == "csv")
    sh::write_text_file(out_path, sh::report_to_csv(rep));
  else
    throw sh::InvalidConfig("check: --format must be json or csv");
  std::printf("cases=%zu trials=%ld skipped=%ld violations=%ld wall=%.1fs -> %s\n",
              rep.cases.size(), rep.total_trials, rep.total_skipped, rep.total_violations,
              rep.wall_seconds, out_path.c_str());
  return rep.total_violations > 0 ? 1 : 0;
}

int run_search(const std::string& case_name, int dim, int rank, int iters,
               std::uint64_t seed, const std::string& out_path, const std::string& link) {
  sh::EnsembleSpec spec;
  spec.dim = dim;
  spec.rank = rank;
  spec.seed = seed;
  const sh::SearchResult<double> res =
      sh::search_extremal<double>(sh::case_from_string(case_name), spec, iters, link);
  sh::write_text_file(out_path, sh::search_result_to_json(res).dump(2) + "\n");
  std::printf("case=%s link=%s best_ratio=%.12g iterations=%ld restarts=%ld -> %s\n",
              case_name.c_str(), res.link.c_str(), static_cast<double>(res.best_ratio),
              res.iterations, res.restarts, out_path.c_str());
  return res.best_ratio > 1.0 + 1e-7 ? 1 : 0;
}

int run_compare(const std::string& case_name, const std::string& baseline,
                const std::vector<int>& dims, const std::vector<int>& ranks, int trials,
                std::uint64_t seed) {
  const sh::CaseId id = sh::case_from_string(case_name);
  const sh::CaseInfo& info = sh::case_info(id);
  if (trials < 1) throw sh::InvalidConfig("compare: trials must be >= 1");
  sh::SplitRng base(seed);
  std::vector<double> ratios;
  long skipped = 0, over = 0;
  double worst = 0;
  for (int dim : dims) {
    const std::vector<int> rank_list = ranks.empty()
        ? [&] { std::vector<int> v; for (int r = 1; r <= dim; ++r) v.push_back(r); return v; }()
        : ranks;
    for (int rank : rank_list) {
      if (rank > dim) continue;
      for (int trial = 0; trial < trials; ++trial) {
        sh::SplitRng rng = base.split(static_cast<std::uint64_t>(dim) * 64 + rank)
                               .split(static_cast<std::uint64_t>(trial));
        try {
          auto w = std::make_shared<const sh::Weight<double>>(sh::gen_weight<double>(dim, rank, rng));
          const sh::Operands<double> ops = sh::draw_operands<double>(info, w, rng, trial);
          const double ratio = sh::tightness<double>(id, baseline, ops);
          ratios.push_back(ratio);
          worst = std::max(worst, ratio);
          if (ratio > 1.0 + 1e-9) ++over;
        } catch (const sh::SkippedHypothesis&) {
          ++skipped;
        }
      }
    }
  }
  if (ratios.empty()) throw sh::InvalidConfig("compare: every trial was skipped");
  std::sort(ratios.begin(), ratios.end());
  double mean = 0;
  for (double r : ratios) mean += r;
  mean /= static_cast<double>(ratios.size());
  const double median = ratios[ratios.size() / 2];
  std::printf("case=%s baseline=%s trials=%zu skipped=%ld\n", case_name.c_str(),
              baseline.c_str(), ratios.size(), skipped);
  std::printf("ratio min=%.12g median=%.12g mean=%.12g max=%.12g over_one=%ld\n",
              ratios.front(), median, mean, ratios.back(), over);
  return over > 0 ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"semi-Hilbertian operator toolkit"};
  app.require_subcommand(1);

  // compute
  auto* compute = app.add_subcommand("compute", "compute one quantity for (A, T)");
  std::string weight_path, op_path, what, algo;
  double tol = sh::default_tol<double>();
  compute->add_option("--weight", weight_path, "weight matrix JSON file")->required();
  compute->add_option("--op", op_path, "operator matrix JSON file")->required();
  compute->add_option("--what", what, "seminorm|wA|rA|sharp|tilde")->required();
  compute->add_option("--algo", algo, "compression|theta_sweep|eigen|limit");
  compute->add_option("--tol", tol, "weight/membership tolerance");

  // check
  auto* check = app.add_subcommand("check", "run the certification suite");
  std::string dims_s = "2..6", ranks_s = "all", cases_s = "all";
  std::string out_path = "report.json", format = "json";
  int trials = 200, grid = 128;
  std::uint64_t seed_value = sh::kDefaultSeed;
  auto* check_seed = check->add_option("--seed", seed_value, "RNG seed");
  check->add_option("--dims", dims_s, "dims, e.g. 2..6 or 2,4");
  check->add_option("--ranks", ranks_s, "ranks, e.g. all or 1,2");
  check->add_option("--trials", trials, "trials per (dim, rank) per case");
  check->add_option("--cases", cases_s, "all or comma list, e.g. C01,C06");
  check->add_option("--out", out_path, "report output path");
  check->add_option("--format", format, "json|csv");
  check->add_option("--grid", grid, "theta sweep grid size");

  // search
  auto* search = app.add_subcommand("search", "hill-climb for extremal operands");
  std::string case_name, link;
  int dim = 2, rank = 2, iters = 5000;
  std::string witness_path = "witness.json";
  auto* search_seed = search->add_option("--seed", seed_value, "RNG seed");
  search->add_option("--case", case_name, "case id, e.g. C06")->required();
  search->add_option("--dim", dim, "ambient dimension");
  search->add_option("--rank", rank, "weight rank");
  search->add_option("--iters", iters, "hill-climb iterations");
  search->add_option("--out", witness_path, "witness output path");
  search->add_option("--link", link, "link label (default: the case's first link)");

  // compare
  auto* compare = app.add_subcommand("compare", "bound-vs-baseline tightness ratios");
  std::string baseline;
  auto* compare_seed = compare->add_option("--seed", seed_value, "RNG seed");
  compare->add_option("--case", case_name, "case id, e.g. C04")->required();
  compare->add_option("--baseline", baseline, "baseline name, e.g. classic2")->required();
  compare->add_option("--dims", dims_s, "dims, e.g. 2..6");
  compare->add_option("--ranks", ranks_s, "ranks, e.g. all or 1,2");
  compare->add_option("--trials", trials, "trials per (dim, rank)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (compute->parsed()) return run_compute(weight_path, op_path, what, algo, tol);

    if (check->parsed()) {
      sh::SuiteConfig cfg;
      cfg.dims = parse_int_list(dims_s, "dims");
      cfg.ranks = ranks_s == "all" ? std::vector<int>{} : parse_int_list(ranks_s, "ranks");
      cfg.trials = trials;
      cfg.cases = parse_cases(cases_s);
      cfg.seed = resolve_seed(check_seed->count() > 0, seed_value);
      cfg.grid = grid;
      return run_check(cfg, out_path, format);
    }

    if (search->parsed())
      return run_search(case_name, dim, rank, iters,
                        resolve_seed(search_seed->count() > 0, seed_value), witness_path, link);

    if (compare->parsed()) {
      const std::vector<int> cdims = parse_int_list(dims_s, "dims");
      const std::vector<int> cranks =
          ranks_s == "all" ? std::vector<int>{} : parse_int_list(ranks_s, "ranks");
      return run_compare(case_name, baseline, cdims, cranks, trials,
                         resolve_seed(compare_seed->count() > 0, seed_value));
    }
  } catch (const sh::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
