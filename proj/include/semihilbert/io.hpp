#pragma once
// File formats: matrices as {"rows", "cols", "data": [[re, im], ...]}
// (row-major), operand bundles keyed by the case's operand names, JSON and
// CSV suite reports. All serialization goes through ordered_json so reports
// are byte-reproducible.

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "semihilbert/catalog.hpp"
#include "semihilbert/search.hpp"
#include "semihilbert/suite.hpp"
#include "semihilbert/types.hpp"

namespace semihilbert {

using ordered_json = nlohmann::ordered_json;

template <typename Real>
ordered_json matrix_to_json(const Matrix<Real>& m) {
  ordered_json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  ordered_json data = ordered_json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index k = 0; k < m.cols(); ++k)
      data.push_back({static_cast<double>(m(i, k).real()),
                      static_cast<double>(m(i, k).imag())});
  j["data"] = std::move(data);
  return j;
}

template <typename Real>
ordered_json vector_to_json(const Vector<Real>& v) {
  Matrix<Real> m = v;
  return matrix_to_json(m);
}

inline Matrix<double> matrix_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("data"))
    throw ParseError("matrix json needs rows, cols, data");
  if (!j["rows"].is_number_integer() || !j["cols"].is_number_integer())
    throw ParseError("matrix rows/cols must be integers");
  const auto rows = j["rows"].get<Eigen::Index>();
  const auto cols = j["cols"].get<Eigen::Index>();
  if (rows < 1 || cols < 1) throw ParseError("matrix rows/cols must be positive");
  const auto& data = j["data"];
  if (!data.is_array() || static_cast<Eigen::Index>(data.size()) != rows * cols)
    throw ParseError("matrix data must hold rows*cols complex entries");
  Matrix<double> m(rows, cols);
  Eigen::Index idx = 0;
  for (const auto& e : data) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
      throw ParseError("matrix entries must be [re, im] number pairs");
    const double re = e[0].get<double>();
    const double im = e[1].get<double>();
    if (!std::isfinite(re) || !std::isfinite(im))
      throw NotFinite("matrix entries must be finite");
    m(idx / cols, idx % cols) = Complex<double>(re, im);
    ++idx;
  }
  return m;
}

inline std::vector<std::string> operator_names(const CaseInfo& info, std::size_t k) {
  if (info.variable_operands) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < k; ++i) names.push_back("S" + std::to_string(i + 1));
    return names;
  }
  switch (info.num_operators) {
    case 1: return {"T"};
    case 2: return {"T", "S"};
    case 4:
      return info.id == CaseId::C27 ? std::vector<std::string>{"T", "S", "X", "Y"}
                                    : std::vector<std::string>{"T1", "S1", "T2", "S2"};
    default: return {};
  }
}

inline std::vector<std::string> vector_names(const CaseInfo& info) {
  if (info.num_vectors == 0) return {};
  return info.unit_vector ? std::vector<std::string>{"x", "y", "e"}
                          : std::vector<std::string>{"x", "y", "z"};
}

template <typename Real>
ordered_json operands_to_json(const CaseInfo& info, const Operands<Real>& ops) {
  ordered_json j;
  j["A"] = matrix_to_json(ops.weight->a);
  ordered_json jops = ordered_json::object();
  const auto onames = operator_names(info, ops.operators.size());
  for (std::size_t i = 0; i < ops.operators.size(); ++i)
    jops[onames[i]] = matrix_to_json(ops.operators[i]);
  j["operators"] = std::move(jops);
  ordered_json jvecs = ordered_json::object();
  const auto vnames = vector_names(info);
  for (std::size_t i = 0; i < ops.vectors.size(); ++i)
    jvecs[vnames[i]] = vector_to_json(ops.vectors[i]);
  j["vectors"] = std::move(jvecs);
  if (info.uses_power) j["params"] = {{"k", ops.operators.size()}, {"n", ops.power}};
  return j;
}

inline Operands<double> operands_from_json(const CaseInfo& info, const nlohmann::json& j,
                                           double tol = default_tol<double>()) {
  if (!j.is_object() || !j.contains("A")) throw ParseError("operand bundle needs A");
  Operands<double> ops;
  ops.weight = make_weight_ptr(matrix_from_json(j["A"]), tol);
  std::size_t k = static_cast<std::size_t>(info.num_operators);
  if (info.variable_operands) {
    if (!j.contains("operators") || !j["operators"].is_object())
      throw ParseError("operand bundle needs operators object");
    k = j["operators"].size();
    if (k < 1 || k > 3) throw ParseError("operator count must be 1..3");
  }
  const auto onames = operator_names(info, k);
  for (const auto& name : onames) {
    if (!j.contains("operators") || !j["operators"].contains(name))
      throw ParseError("operand bundle missing operator " + name);
    Matrix<double> m = matrix_from_json(j["operators"][name]);
    require_square(m, "operands_from_json");
    ops.operators.push_back(std::move(m));
  }
  const auto vnames = vector_names(info);
  for (const auto& name : vnames) {
    if (!j.contains("vectors") || !j["vectors"].contains(name))
      throw ParseError("operand bundle missing vector " + name);
    Matrix<double> m = matrix_from_json(j["vectors"][name]);
    if (m.cols() != 1) throw ParseError("vector " + name + " must be a single column");
    ops.vectors.push_back(Vector<double>(m.col(0)));
  }
  if (info.uses_power) {
    if (j.contains("params") && j["params"].contains("n"))
      ops.power = j["params"]["n"].get<int>();
    if (ops.power < 1 || ops.power > 2) throw ParseError("power n must be 1 or 2");
  }
  return ops;
}

template <typename Real>
ordered_json report_to_json(const SuiteReport<Real>& rep) {
  ordered_json j;
  ordered_json cfg;
  cfg["dims"] = rep.config.dims;
  cfg["ranks"] = rep.config.ranks.empty() ? ordered_json("all") : ordered_json(rep.config.ranks);
  cfg["trials"] = rep.config.trials;
  cfg["seed"] = rep.config.seed;
  std::vector<std::string> case_names;
  for (CaseId id : rep.config.cases) case_names.push_back(to_string(id));
  cfg["cases"] = case_names;
  cfg["eq_tol"] = rep.config.eq_tol;
  cfg["grid"] = rep.config.grid;
  cfg["refine_tol"] = rep.config.refine_tol;
  j["config"] = std::move(cfg);

  j["totals"] = {{"trials", rep.total_trials},
                 {"skipped", rep.total_skipped},
                 {"violations", rep.total_violations}};

  ordered_json cases = ordered_json::array();
  for (const auto& a : rep.cases) {
    ordered_json c;
    c["case"] = to_string(a.id);
    c["name"] = a.name;
    c["trials"] = a.trials;
    c["skipped"] = a.skipped;
    c["violations"] = a.violations;
    c["value_violations"] = a.value_violations;
    c["near_tight"] = a.near_tight;
    c["min_rel_slack"] = std::isfinite(a.min_rel_slack) ? a.min_rel_slack : 0.0;
    c["median_rel_slack"] = a.median_rel_slack;
    c["max_eq_residual"] = a.max_eq_residual;
    ordered_json links = ordered_json::array();
    for (const auto& l : a.links) {
      links.push_back({{"label", l.label},
                       {"trials", l.trials},
                       {"violations", l.violations},
                       {"min_margin", std::isfinite(l.min_margin) ? l.min_margin : 0.0},
                       {"max_eq_residual", l.max_eq_residual}});
    }
    c["links"] = std::move(links);
    cases.push_back(std::move(c));
  }
  j["cases"] = std::move(cases);

  ordered_json viol;
  viol["total"] = rep.violations_total;
  viol["truncated"] = rep.violations_truncated;
  ordered_json recs = ordered_json::array();
  for (const auto& v : rep.violations) {
    ordered_json r;
    r["case"] = to_string(v.id);
    r["link"] = v.link;
    r["lhs"] = v.lhs;
    r["rhs"] = v.rhs;
    r["lhs_err"] = v.lhs_err;
    r["rhs_err"] = v.rhs_err;
    r["dim"] = v.dim;
    r["rank"] = v.rank;
    r["trial"] = v.trial;
    r["digest"] = v.digest;
    r["operands"] = operands_to_json(case_info(v.id), v.operands);
    recs.push_back(std::move(r));
  }
  viol["records"] = std::move(recs);
  j["violations"] = std::move(viol);

  const auto& st = rep.structure;
  j["structure"] = {
      {"generator_soundness",
       {{"total", st.soundness_total}, {"pass", st.soundness_pass}}},
      {"raw_membership",
       {{"total", st.raw_membership_total}, {"accepted", st.raw_membership_accepted}}},
      {"double_sharp_max_residual", st.double_sharp_max_residual},
      {"triple_sharp",
       {{"vs_sharp_max_defect", st.triple_sharp_vs_sharp_max},
        {"vs_operator_min_defect", st.triple_sharp_vs_op_min},
        {"outcome", st.triple_sharp_outcome}}}};

  j["wall_time_seconds"] = rep.wall_seconds;
  return j;
}

template <typename Real>
std::string report_to_csv(const SuiteReport<Real>& rep) {
  std::ostringstream out;
  out << "case,name,trials,skipped,violations,value_violations,near_tight,"
         "min_rel_slack,median_rel_slack,max_eq_residual\n";
  char buf[64];
  auto num = [&buf](double v) {
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return std::string(buf);
  };
  for (const auto& a : rep.cases) {
    out << to_string(a.id) << ',' << a.name << ',' << a.trials << ',' << a.skipped << ','
        << a.violations << ',' << a.value_violations << ',' << a.near_tight << ','
        << num(std::isfinite(a.min_rel_slack) ? a.min_rel_slack : 0.0) << ','
        << num(a.median_rel_slack) << ',' << num(a.max_eq_residual) << '\n';
  }
  return out.str();
}

template <typename Real>
ordered_json search_result_to_json(const SearchResult<Real>& res) {
  ordered_json j;
  j["case"] = to_string(res.id);
  j["link"] = res.link;
  j["best_ratio"] = static_cast<double>(res.best_ratio);
  j["iterations"] = res.iterations;
  j["restarts"] = res.restarts;
  j["operands"] = operands_to_json(case_info(res.id), res.witness);
  return j;
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline nlohmann::json read_json_file(const std::string& path) {
  try {
    return nlohmann::json::parse(read_text_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("invalid json in " + path + ": " + e.what());
  }
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot open file for writing: " + path);
  out << text;
  if (!out) throw ParseError("failed writing file: " + path);
}

}  // namespace semihilbert
