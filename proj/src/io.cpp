#include "staircase/io.hpp"

#include <fstream>
#include <sstream>

namespace staircase::io {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& msg) { throw ParseError(path + ": " + msg); }

const json& field(const json& j, const std::string& path, const char* key) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path, std::string("missing field \"") + key + "\"");
  return *it;
}

std::int64_t nonneg_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  const auto v = j.get<std::int64_t>();
  if (v < 0) fail(path, "negative value " + std::to_string(v));
  return v;
}

const json& array(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  return j;
}

}  // namespace

json load_file(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw ParseError(file.string() + ": cannot open file");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(file.string() + ": malformed JSON: " + e.what());
  }
}

ExponentVector vector_from_json(const json& j, const std::string& path, std::size_t expected_len) {
  array(j, path);
  if (j.size() != expected_len) {
    fail(path, "expected " + std::to_string(expected_len) + " entries, got " + std::to_string(j.size()));
  }
  std::vector<std::int64_t> e;
  for (std::size_t i = 0; i < j.size(); ++i) e.push_back(nonneg_int(j[i], path + "[" + std::to_string(i) + "]"));
  return ExponentVector(std::move(e));
}

json to_json(const ExponentVector& u) { return json(std::vector<std::int64_t>(u.begin(), u.end())); }

MonomialIdeal ideal_from_json(const json& j, const std::string& path) {
  const auto n = static_cast<std::size_t>(nonneg_int(field(j, path, "vars"), path + ".vars"));
  const auto& gens = array(field(j, path, "gens"), path + ".gens");
  std::vector<ExponentVector> vs;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    vs.push_back(vector_from_json(gens[k], path + ".gens[" + std::to_string(k) + "]", n));
  }
  return MonomialIdeal(n, vs);
}

json to_json(const MonomialIdeal& ideal) {
  json gens = json::array();
  for (const auto& g : ideal.gens()) gens.push_back(to_json(g));
  return {{"vars", ideal.nvars()}, {"gens", gens}};
}

std::vector<MonomialIdeal> ideals_from_json(const json& j, const std::string& path) {
  array(j, path);
  std::vector<MonomialIdeal> out;
  for (std::size_t k = 0; k < j.size(); ++k) {
    const std::string p = path + "[" + std::to_string(k) + "]";
    out.push_back(ideal_from_json(j[k], p));
    if (out.back().nvars() != out.front().nvars()) fail(p + ".vars", "ideals must share one ambient ring");
  }
  return out;
}

FiberMatrix matrix_from_json(const json& j, const std::string& path) {
  const auto rows = static_cast<std::size_t>(nonneg_int(field(j, path, "rows"), path + ".rows"));
  const auto cols = static_cast<std::size_t>(nonneg_int(field(j, path, "cols"), path + ".cols"));
  const auto& entries = array(field(j, path, "entries"), path + ".entries");
  if (entries.size() != rows) fail(path + ".entries", "expected " + std::to_string(rows) + " rows");
  std::vector<std::int64_t> data;
  for (std::size_t r = 0; r < rows; ++r) {
    auto row = vector_from_json(entries[r], path + ".entries[" + std::to_string(r) + "]", cols);
    data.insert(data.end(), row.begin(), row.end());
  }
  try {
    return FiberMatrix(rows, cols, std::move(data));
  } catch (const std::exception& e) {
    fail(path, e.what());
  }
}

json to_json(const FiberMatrix& a) {
  json entries = json::array();
  for (std::size_t r = 0; r < a.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < a.cols(); ++c) row.push_back(a(r, c));
    entries.push_back(row);
  }
  return {{"rows", a.rows()}, {"cols", a.cols()}, {"entries", entries}};
}

FiniteOrderIdeal order_ideal_from_json(const json& j, const std::string& path) {
  const auto n = static_cast<std::size_t>(nonneg_int(field(j, path, "vars"), path + ".vars"));
  const auto& pts = array(field(j, path, "points"), path + ".points");
  std::vector<ExponentVector> vs;
  for (std::size_t k = 0; k < pts.size(); ++k) {
    vs.push_back(vector_from_json(pts[k], path + ".points[" + std::to_string(k) + "]", n));
  }
  try {
    return FiniteOrderIdeal(n, std::move(vs));
  } catch (const DomainError& e) {
    fail(path + ".points", e.what());
  }
}

json to_json(const FiniteOrderIdeal& o) {
  json pts = json::array();
  for (const auto& u : o.points()) pts.push_back(to_json(u));
  return {{"vars", o.nvars()}, {"points", pts}};
}

json to_json(const std::vector<PrimaryComponent>& comps) {
  json out = json::array();
  for (const auto& c : comps) {
    out.push_back({{"tau", c.prime.tau()}, {"prime", c.prime.variables()}, {"gens", to_json(c.component)["gens"]}});
  }
  return out;
}

json to_json(const HilbertNumerator& num) {
  json out = json::array();
  for (const auto& [t, c] : num.terms()) out.push_back(json::array({to_json(t), c}));
  return out;
}

ExponentVector parse_vector(const std::string& text, const std::string& what) {
  std::vector<std::int64_t> e;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      throw ParseError(what + ": not an integer: \"" + item + "\"");
    }
    if (used != item.size()) throw ParseError(what + ": not an integer: \"" + item + "\"");
    if (v < 0) throw ParseError(what + ": negative entry " + item);
    e.push_back(v);
  }
  if (e.empty()) throw ParseError(what + ": empty vector");
  return ExponentVector(std::move(e));
}

}  // namespace staircase::io
