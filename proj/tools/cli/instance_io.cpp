#include "proxima_cli/instance_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace proxima::cli {

using json = nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& what) {
  throw ParseError("field '" + field + "': " + what);
}

const json& require(const json& obj, const std::string& key, const std::string& where) {
  if (!obj.is_object()) fail(where.empty() ? "/" : where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(where + "/" + key, "missing");
  return *it;
}

double as_real(const json& v, const std::string& field) {
  if (!v.is_number()) fail(field, "expected a number");
  return v.get<double>();
}

std::size_t as_index(const json& v, const std::string& field) {
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    fail(field, "expected a nonnegative integer");
  }
  return v.get<std::size_t>();
}

std::vector<Point> parse_points(const json& list, const std::string& field, MetricKind kind) {
  if (!list.is_array()) fail(field, "expected an array of points");
  std::vector<Point> pts;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string f = field + "/" + std::to_string(i);
    const json& item = list[i];
    if (kind == MetricKind::explicit_matrix) {
      pts.emplace_back(as_index(item, f));
      continue;
    }
    if (!item.is_array()) fail(f, "expected a coordinate array");
    Coords c;
    for (std::size_t k = 0; k < item.size(); ++k) {
      c.push_back(as_real(item[k], f + "/" + std::to_string(k)));
    }
    pts.emplace_back(std::move(c));
  }
  return pts;
}

std::string locate(const std::string& text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

json point_json(const Point& p) {
  if (p.is_index()) return p.index();
  return p.coords();
}

}  // namespace

Instance parse_instance(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("syntax error at " + locate(text, e.byte == 0 ? 0 : e.byte - 1) + ": " +
                     e.what());
  }
  if (!doc.is_object()) fail("/", "expected a JSON object");

  const json& mj = require(doc, "metric", "");
  const json& kind_j = require(mj, "kind", "/metric");
  if (!kind_j.is_string()) fail("/metric/kind", "expected a string");
  const std::string kind = kind_j.get<std::string>();

  const json& aj = require(doc, "A", "");
  const json& bj = require(doc, "B", "");

  std::optional<Metric> metric;
  MetricKind mk;
  if (kind == "euclidean") {
    mk = MetricKind::euclidean;
    std::size_t dim = 0;
    if (auto it = mj.find("dimension"); it != mj.end()) {
      dim = as_index(*it, "/metric/dimension");
    } else if (aj.is_array() && !aj.empty() && aj[0].is_array()) {
      dim = aj[0].size();
    }
    if (dim == 0) fail("/metric/dimension", "cannot determine a positive dimension");
    metric = Metric::euclidean(dim);
  } else if (kind == "explicit-matrix") {
    mk = MetricKind::explicit_matrix;
    const json& rows = require(mj, "matrix", "/metric");
    if (!rows.is_array()) fail("/metric/matrix", "expected an array of rows");
    DistanceTable table;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const std::string f = "/metric/matrix/" + std::to_string(i);
      if (!rows[i].is_array()) fail(f, "expected a row array");
      std::vector<double> row;
      for (std::size_t j = 0; j < rows[i].size(); ++j) {
        row.push_back(as_real(rows[i][j], f + "/" + std::to_string(j)));
      }
      table.push_back(std::move(row));
    }
    try {
      metric = Metric::explicit_matrix(std::move(table));
    } catch (const Error& e) {
      fail("/metric/matrix", e.what());
    }
  } else {
    fail("/metric/kind", "unknown kind '" + kind + "' (expected euclidean or explicit-matrix)");
  }

  std::vector<Point> a = parse_points(aj, "/A", mk);
  std::vector<Point> b = parse_points(bj, "/B", mk);
  // Per-point checks first so the diagnostic names the offending entry.
  for (const auto& [pts, name] : {std::pair{&a, "/A"}, std::pair{&b, "/B"}}) {
    for (std::size_t i = 0; i < pts->size(); ++i) {
      try {
        metric->check_point((*pts)[i]);
      } catch (const Error& e) {
        fail(std::string(name) + "/" + std::to_string(i), e.what());
      }
    }
  }
  std::optional<SetPair> pair;
  try {
    pair.emplace(*metric, std::move(a), std::move(b));
  } catch (const Error& e) {
    fail("/A, /B", e.what());
  }

  const json& tj = require(doc, "T", "");
  if (!tj.is_array()) fail("/T", "expected an array of indices into B");
  std::vector<std::size_t> image;
  for (std::size_t i = 0; i < tj.size(); ++i) image.push_back(as_index(tj[i], "/T/" + std::to_string(i)));
  std::optional<ProximityMap> map;
  try {
    map.emplace(std::move(image), pair->a().size(), pair->b().size());
  } catch (const Error& e) {
    fail("/T", e.what());
  }

  Tolerances tol{default_eps_prox(*metric), 1e-9};
  if (auto it = doc.find("tolerances"); it != doc.end()) {
    if (!it->is_object()) fail("/tolerances", "expected an object");
    if (auto e = it->find("eps_prox"); e != it->end()) {
      tol.eps_prox = as_real(*e, "/tolerances/eps_prox");
      if (!(tol.eps_prox >= 0.0)) fail("/tolerances/eps_prox", "must be nonnegative");
    }
    if (auto t = it->find("tol"); t != it->end()) {
      tol.tol = as_real(*t, "/tolerances/tol");
      if (!(tol.tol > 0.0)) fail("/tolerances/tol", "must be positive");
    }
  }
  std::optional<double> alpha;
  if (auto it = doc.find("alpha"); it != doc.end() && !it->is_null()) {
    alpha = as_real(*it, "/alpha");
  }
  return Instance{std::move(*pair), std::move(*map), tol, alpha};
}

Instance load_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open instance file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

std::string to_canonical(const Instance& instance) {
  const auto& sp = instance.pair;
  json doc;
  json metric;
  metric["kind"] = to_string(sp.metric().kind());
  if (sp.metric().kind() == MetricKind::euclidean) {
    metric["dimension"] = sp.metric().dimension();
  } else {
    metric["matrix"] = sp.metric().table();
  }
  doc["metric"] = std::move(metric);
  doc["A"] = json::array();
  for (const auto& p : sp.a()) doc["A"].push_back(point_json(p));
  doc["B"] = json::array();
  for (const auto& p : sp.b()) doc["B"].push_back(point_json(p));
  doc["T"] = json::array();
  for (std::size_t j : instance.map.table()) doc["T"].push_back(j);
  doc["tolerances"] = {{"eps_prox", instance.tolerances.eps_prox},
                       {"tol", instance.tolerances.tol}};
  if (instance.declared_alpha) doc["alpha"] = *instance.declared_alpha;
  return doc.dump(2) + "\n";
}

void save_instance(const Instance& instance, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write instance file " + path.string());
  out << to_canonical(instance);
  if (!out) throw Error("failed writing instance file " + path.string());
}

}  // namespace proxima::cli
