#include "birqi/config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <regex>

namespace birqi::config {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& msg) {
  throw ConfigError("config: " + msg);
}

Complex entry_from_json(const json& e, const std::string& where) {
  if (e.is_number()) return Complex(e.get<double>(), 0.0);
  if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number())
    return Complex(e[0].get<double>(), e[1].get<double>());
  fail(where + ": entries must be numbers or [re, im] pairs");
}

Eigen::Index index_from_json(const json& j, const std::string& key) {
  if (!j.is_number_integer() || j.get<long long>() <= 0)
    fail(key + ": expected a positive integer");
  return static_cast<Eigen::Index>(j.get<long long>());
}

const json& require_key(const json& doc, const std::string& key) {
  auto it = doc.find(key);
  if (it == doc.end()) fail("missing key '" + key + "'");
  return *it;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(path + ": cannot open file");
  return std::string(std::istreambuf_iterator<char>(in),
                     std::istreambuf_iterator<char>());
}

json parse_json_file(const std::string& path) {
  try {
    return json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    fail(path + ": " + e.what());
  }
}

}  // namespace

std::vector<std::string> preset_names() {
  return {"emission", "chain1", "chain2", "chain3"};
}

BipartiteModel preset_model(const std::string& name) {
  if (name == "emission") return emission_model();
  if (name.rfind("chain", 0) == 0) {
    const std::string digits = name.substr(5);
    if (!digits.empty() &&
        std::all_of(digits.begin(), digits.end(),
                    [](unsigned char c) { return std::isdigit(c); })) {
      const long n = std::strtol(digits.c_str(), nullptr, 10);
      if (n >= 1) return thermal_chain_model(static_cast<int>(n));
    }
  }
  fail("unknown preset '" + name +
       "' (available: emission, chain1, chain2, chain3, ... chainN)");
}

Matrix matrix_from_json(const nlohmann::json& j, const std::string& field) {
  if (!j.is_array() || j.empty())
    fail(field + ": expected a non-empty array of rows");
  const size_t cols = j[0].is_array() ? j[0].size() : 0;
  if (cols == 0) fail(field + ": rows must be non-empty arrays");
  Matrix m(static_cast<Eigen::Index>(j.size()), static_cast<Eigen::Index>(cols));
  for (size_t r = 0; r < j.size(); ++r) {
    const json& row = j[r];
    const std::string where = field + ": row " + std::to_string(r);
    if (!row.is_array()) fail(where + ": expected an array");
    if (row.size() != cols)
      fail(where + " has " + std::to_string(row.size()) +
           " entries, expected " + std::to_string(cols));
    for (size_t c = 0; c < cols; ++c)
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          entry_from_json(row[c], where);
  }
  return m;
}

nlohmann::json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

BipartiteModel model_from_json(const nlohmann::json& j) {
  if (!j.is_object()) fail("top level must be an object");
  json doc = j;
  if (doc.contains("preset")) {
    const json& p = doc["preset"];
    if (!p.is_string()) fail("preset: expected a string");
    json merged = model_to_json(preset_model(p.get<std::string>()));
    doc.erase("preset");
    merged.update(doc);
    doc = std::move(merged);
  }

  static const std::vector<std::string> known = {
      "dim_A", "dim_B", "ancilla_dim", "H_A", "H_B", "lambda", "V", "W"};
  for (const auto& item : doc.items())
    if (std::find(known.begin(), known.end(), item.key()) == known.end())
      fail("unknown key '" + item.key() + "'");

  BipartiteModel m;
  m.dim_A = index_from_json(require_key(doc, "dim_A"), "dim_A");
  m.dim_B = index_from_json(require_key(doc, "dim_B"), "dim_B");
  m.ancilla_dim = index_from_json(require_key(doc, "ancilla_dim"), "ancilla_dim");

  const json& lam = require_key(doc, "lambda");
  if (!lam.is_array() ||
      lam.size() != static_cast<size_t>(m.ancilla_dim) ||
      !std::all_of(lam.begin(), lam.end(),
                   [](const json& e) { return e.is_number(); }))
    fail("lambda: expected an array of " + std::to_string(m.ancilla_dim) +
         " numbers");
  m.lambda.resize(m.ancilla_dim);
  for (Eigen::Index k = 0; k < m.ancilla_dim; ++k)
    m.lambda(k) = lam[static_cast<size_t>(k)].get<double>();

  m.H_A = matrix_from_json(require_key(doc, "H_A"), "H_A");
  m.H_B = matrix_from_json(require_key(doc, "H_B"), "H_B");

  for (const char* key : {"V", "W"}) {
    const json& list = require_key(doc, key);
    const size_t want = static_cast<size_t>(m.ancilla_dim - 1);
    if (!list.is_array() || list.size() != want)
      fail(std::string(key) + ": expected an array of " +
           std::to_string(want) + " matrices (one per ancilla level >= 1)");
    auto& target = (key[0] == 'V') ? m.V : m.W;
    for (size_t k = 0; k < want; ++k)
      target.push_back(matrix_from_json(
          list[k], std::string(key) + "[" + std::to_string(k) + "]"));
  }

  try {
    m.validate();
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  }
  return m;
}

nlohmann::json model_to_json(const BipartiteModel& m) {
  json doc;
  doc["dim_A"] = m.dim_A;
  doc["dim_B"] = m.dim_B;
  doc["ancilla_dim"] = m.ancilla_dim;
  doc["H_A"] = matrix_to_json(m.H_A);
  doc["H_B"] = matrix_to_json(m.H_B);
  json lam = json::array();
  for (Eigen::Index k = 0; k < m.lambda.size(); ++k) lam.push_back(m.lambda(k));
  doc["lambda"] = std::move(lam);
  json v = json::array(), w = json::array();
  for (const Matrix& op : m.V) v.push_back(matrix_to_json(op));
  for (const Matrix& op : m.W) w.push_back(matrix_to_json(op));
  doc["V"] = std::move(v);
  doc["W"] = std::move(w);
  return doc;
}

BipartiteModel load_model_config(const std::string& spec) {
  if (std::filesystem::exists(spec)) return model_from_json(parse_json_file(spec));
  for (const std::string& name : preset_names())
    if (spec == name) return preset_model(spec);
  if (spec.rfind("chain", 0) == 0) return preset_model(spec);
  fail("no such file or preset '" + spec +
       "' (presets: emission, chain1, chain2, chain3, ... chainN)");
}

Matrix parse_initial_state(const std::string& spec, const BipartiteModel& m,
                           double tol) {
  const Eigen::Index d = m.dim_sys();
  static const std::regex basis_name("^e([0-9]+)e([0-9]+)$");
  std::smatch match;
  if (std::regex_match(spec, match, basis_name)) {
    const long i = std::strtol(match[1].str().c_str(), nullptr, 10);
    const long j = std::strtol(match[2].str().c_str(), nullptr, 10);
    if (i >= m.dim_A || j >= m.dim_B)
      fail("initial state '" + spec + "': index out of range for a " +
           std::to_string(m.dim_A) + " x " + std::to_string(m.dim_B) +
           " system");
    Matrix rho = Matrix::Zero(d, d);
    const Eigen::Index idx = static_cast<Eigen::Index>(i) * m.dim_B +
                             static_cast<Eigen::Index>(j);
    rho(idx, idx) = 1.0;
    return rho;
  }

  if (!std::filesystem::exists(spec))
    fail("initial state '" + spec +
         "': not a basis-state name (e<i>e<j>) and no such file");
  json doc = parse_json_file(spec);
  if (doc.is_object()) {
    if (!doc.contains("rho"))
      fail(spec + ": state object must have a 'rho' key");
    doc = doc["rho"];
  }
  Matrix rho = matrix_from_json(doc, "initial state");
  if (rho.rows() != d || rho.cols() != d)
    fail(spec + ": state is " + std::to_string(rho.rows()) + " x " +
         std::to_string(rho.cols()) + ", expected " + std::to_string(d) +
         " x " + std::to_string(d));
  const double defect = num::density_defect(rho);
  if (defect > tol)
    fail(spec + ": not a density matrix within tolerance (defect " +
         std::to_string(defect) + ")");
  return rho;
}

Matrix default_initial_state(const BipartiteModel& m) {
  const Eigen::Index d = m.dim_sys();
  Matrix rho = Matrix::Zero(d, d);
  rho(d - 1, d - 1) = 1.0;
  return rho;
}

double validation_tolerance() {
  const char* env = std::getenv("BIRQI_TOL");
  if (env == nullptr || *env == '\0') return 1e-9;
  char* end = nullptr;
  const double v = std::strtod(env, &end);
  if (end == env || *end != '\0' || !std::isfinite(v) || v <= 0.0)
    throw ConfigError("BIRQI_TOL: expected a positive number, got '" +
                      std::string(env) + "'");
  return v;
}

}  // namespace birqi::config
