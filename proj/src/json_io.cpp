#include <hexaspinor/json_io.hpp>

#include <cstdio>

#include <nlohmann/json.hpp>

#include <hexaspinor/report.hpp>

namespace hexaspinor {

using nlohmann::json;

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

json tensor_to_json(const CTensor& t) {
  json j;
  j["shape"] = t.shape();
  json entries = json::array();
  for (const cd& v : t.data()) entries.push_back(json::array({v.real(), v.imag()}));
  j["entries"] = entries;
  return j;
}

CTensor tensor_from_json(const json& j) {
  if (!j.contains("shape") || !j.contains("entries"))
    throw input_error("tensor JSON must have \"shape\" and \"entries\"");
  std::vector<int> shape = j.at("shape").get<std::vector<int>>();
  std::vector<cd> entries;
  for (const auto& e : j.at("entries")) {
    if (!e.is_array() || e.size() != 2)
      throw input_error("tensor entries must be [re, im] pairs");
    entries.emplace_back(e[0].get<double>(), e[1].get<double>());
  }
  return CTensor(std::move(shape), std::move(entries));
}

json matrix_to_json(const MatX& m) {
  CTensor t({static_cast<int>(m.rows()), static_cast<int>(m.cols())});
  for (int i = 0; i < m.rows(); ++i)
    for (int j2 = 0; j2 < m.cols(); ++j2) t({i, j2}) = m(i, j2);
  return tensor_to_json(t);
}

MatX matrix_from_json(const json& j, int rows, int cols) {
  const CTensor t = tensor_from_json(j);
  if (t.shape() != std::vector<int>{rows, cols})
    throw input_error("expected a " + std::to_string(rows) + "x" + std::to_string(cols) +
                      " tensor");
  MatX m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j2 = 0; j2 < cols; ++j2) m(i, j2) = t({i, j2});
  return m;
}

json vector_to_json(const VecX& v) {
  CTensor t({static_cast<int>(v.size())});
  for (int i = 0; i < v.size(); ++i) t({i}) = v(i);
  return tensor_to_json(t);
}

VecX vector_from_json(const json& j, int size) {
  const CTensor t = tensor_from_json(j);
  if (t.shape() != std::vector<int>{size})
    throw input_error("expected a vector of size " + std::to_string(size));
  VecX v(size);
  for (int i = 0; i < size; ++i) v(i) = t({i});
  return v;
}

std::string to_json_lines(const Report& r) {
  std::string out;
  for (const Check& c : r.checks) {
    json line;
    line["suite"] = r.suite;
    line["check"] = c.name;
    line["residual"] = format_double(c.residual);
    line["threshold"] = format_double(c.threshold);
    line["pass"] = c.pass;
    out += line.dump();
    out += "\n";
  }
  json summary;
  summary["suite"] = r.suite;
  summary["pass"] = r.pass();
  summary["checks"] = r.checks.size();
  summary["duration_ms"] = format_double(r.duration_ms);
  out += summary.dump();
  out += "\n";
  return out;
}

}  // namespace hexaspinor
