#include "metricgeo/io.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "metricgeo/cantor.hpp"
#include "metricgeo/errors.hpp"
#include "metricgeo/heisenberg.hpp"

namespace metricgeo::io {

namespace {

using nlohmann::json;

const json& member(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) throw InputError(path + ": expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw InputError(path + "/" + key + ": missing required field");
  return *it;
}

long long integer(const json& j, const std::string& path) {
  if (!j.is_number_integer()) throw InputError(path + ": expected an integer");
  return j.get<long long>();
}

double number(const json& j, const std::string& path) {
  if (!j.is_number()) throw InputError(path + ": expected a number");
  return j.get<double>();
}

std::string string_field(const json& j, const std::string& path) {
  if (!j.is_string()) throw InputError(path + ": expected a string");
  return j.get<std::string>();
}

FiniteMetricSpace parse_matrix(const json& doc) {
  const auto& rows = member(doc, "matrix", "");
  if (!rows.is_array()) throw InputError("/matrix: expected an array of rows");
  const auto n = static_cast<Index>(rows.size());
  DistanceTable t(n, n);
  for (Index i = 0; i < n; ++i) {
    const std::string rp = "/matrix/" + std::to_string(i);
    const auto& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Index>(row.size()) != n)
      throw InputError(rp + ": expected a row of " + std::to_string(n) + " entries");
    for (Index j = 0; j < n; ++j) {
      const auto& e = row[static_cast<std::size_t>(j)];
      t(i, j) = e.is_null() ? std::numeric_limits<double>::infinity()
                            : number(e, rp + "/" + std::to_string(j));
    }
  }
  std::vector<std::string> labels;
  if (auto it = doc.find("labels"); it != doc.end()) {
    if (!it->is_array() || static_cast<Index>(it->size()) != n)
      throw InputError("/labels: expected " + std::to_string(n) + " labels");
    for (std::size_t i = 0; i < it->size(); ++i)
      labels.push_back(string_field((*it)[i], "/labels/" + std::to_string(i)));
  } else {
    for (Index i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  }
  std::optional<Index> infinity;
  if (auto it = doc.find("infinity"); it != doc.end() && !it->is_null()) {
    const auto label = string_field(*it, "/infinity");
    auto pos = std::find(labels.begin(), labels.end(), label);
    if (pos == labels.end()) throw InputError("/infinity: unknown label '" + label + "'");
    infinity = static_cast<Index>(pos - labels.begin());
  }
  json meta = doc.value("metadata", json::object());
  return FiniteMetricSpace(std::move(labels), std::move(t), infinity, std::move(meta));
}

FiniteMetricSpace parse_heisenberg(const json& doc) {
  const auto field = heisenberg::parse_field(string_field(member(doc, "field", ""), "/field"));
  const int n = doc.contains("n") ? static_cast<int>(integer(doc["n"], "/n")) : 1;
  const auto& s = member(doc, "sample", "");
  const auto count = integer(member(s, "count", "/sample"), "/sample/count");
  const auto seed = integer(member(s, "seed", "/sample"), "/sample/seed");
  const double box = s.contains("box") ? number(s["box"], "/sample/box") : 1.0;
  if (count < 1) throw InputError("/sample/count: must be positive");
  if (seed < 0) throw InputError("/sample/seed: must be nonnegative");
  if (!(box > 0)) throw InputError("/sample/box: must be positive");
  const bool with_identity = doc.value("include_identity", false);

  const auto alg = heisenberg::Algebra<double>::build(field, n);
  auto pts = heisenberg::sample(alg, static_cast<std::size_t>(count),
                                static_cast<std::uint64_t>(seed), box);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < pts.size(); ++i) labels.push_back("h" + std::to_string(i));
  if (with_identity) {
    pts.push_back(alg.identity());
    labels.push_back("e");
  }
  auto t = tabulate(static_cast<Index>(pts.size()), [&](Index i, Index j) {
    return heisenberg::koranyi_distance(alg, pts[static_cast<std::size_t>(i)],
                                        pts[static_cast<std::size_t>(j)]);
  });
  json coords = json::array();
  for (const auto& p : pts)
    coords.push_back({{"v", std::vector<double>(p.v.data(), p.v.data() + p.v.size())},
                      {"z", std::vector<double>(p.z.data(), p.z.data() + p.z.size())}});
  json gen = doc;
  gen.erase("metadata");
  json meta{{"generator", gen}, {"coordinates", coords}};
  return FiniteMetricSpace(std::move(labels), std::move(t), std::nullopt, std::move(meta));
}

FiniteMetricSpace parse_cantor(const json& doc) {
  const int N = static_cast<int>(integer(member(doc, "N", ""), "/N"));
  const int M = doc.contains("M") ? static_cast<int>(integer(doc["M"], "/M")) : N;
  const double s = number(member(doc, "s", ""), "/s");
  const int depth = static_cast<int>(integer(member(doc, "depth", ""), "/depth"));
  const cantor::CantorSpace space(N, M, s, depth);
  auto out = cantor::to_metric_space(space, cantor::enumerate(space));
  json gen = doc;
  gen.erase("metadata");
  out.metadata()["generator"] = gen;
  return out;
}

}  // namespace

FiniteMetricSpace parse_space(const json& doc) {
  const auto kind = string_field(member(doc, "kind", ""), "/kind");
  if (kind == "matrix") return parse_matrix(doc);
  if (kind == "heisenberg") return parse_heisenberg(doc);
  if (kind == "cantor") return parse_cantor(doc);
  throw InputError("/kind: unknown kind '" + kind + "' (expected matrix, heisenberg or cantor)");
}

json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

FiniteMetricSpace load_space(const std::filesystem::path& path) {
  return parse_space(read_json(path));
}

json space_to_json(const FiniteMetricSpace& space) {
  json rows = json::array();
  for (Index i = 0; i < space.size(); ++i) {
    json row = json::array();
    for (Index j = 0; j < space.size(); ++j) {
      const double d = space(i, j);
      row.push_back(std::isinf(d) ? json(nullptr) : json(d));
    }
    rows.push_back(std::move(row));
  }
  json doc{{"kind", "matrix"}, {"labels", space.labels()}, {"matrix", std::move(rows)}};
  if (space.infinity()) doc["infinity"] = space.label(*space.infinity());
  if (!space.metadata().empty()) doc["metadata"] = space.metadata();
  return doc;
}

PointCorrespondence load_correspondence(const std::filesystem::path& path) {
  const auto doc = read_json(path);
  const auto dir = path.parent_path();
  auto source = load_space(dir / string_field(member(doc, "source_file", ""), "/source_file"));
  auto target = load_space(dir / string_field(member(doc, "target_file", ""), "/target_file"));
  const auto& pairs = member(doc, "pairs", "");
  if (!pairs.is_array()) throw InputError("/pairs: expected an array");
  std::vector<PointCorrespondence::Pair> out;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const std::string p = "/pairs/" + std::to_string(k);
    if (!pairs[k].is_array() || pairs[k].size() != 2) throw InputError(p + ": expected [i, j]");
    out.emplace_back(integer(pairs[k][0], p + "/0"), integer(pairs[k][1], p + "/1"));
  }
  return PointCorrespondence(std::move(source), std::move(target), std::move(out));
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError("cannot write '" + tmp.string() + "'");
    out << text;
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace metricgeo::io
