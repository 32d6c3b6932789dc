#include "moddev/io.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "moddev/errors.hpp"

namespace moddev {

namespace {

[[noreturn]] void fail(const std::string& name, std::size_t line, std::size_t column,
                       const std::string& message) {
  std::ostringstream os;
  os << name << ':' << line;
  if (column > 0) os << ':' << column;
  os << ": " << message;
  throw InputError(os.str());
}

std::uint64_t as_vertex(const nlohmann::json& v, const std::string& where) {
  if (!v.is_number_integer() || v.get<std::int64_t>() < 1)
    throw InputError(where + ": vertex ids must be positive integers");
  return v.get<std::uint64_t>();
}

WeightedHypergraph load_text(std::istream& in, const std::string& name) {
  std::optional<std::size_t> n;
  std::optional<int> k;
  std::vector<EdgeInput> edges;
  std::uint64_t max_id = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) {
      std::istringstream header(line.substr(hash + 1));
      std::string key_n, key_k;
      long long vn = 0, vk = 0;
      if (header >> key_n >> vn >> key_k >> vk && key_n == "n" && key_k == "k") {
        if (vn < 0 || vk < 1) fail(name, line_no, 0, "invalid header sizes");
        n = static_cast<std::size_t>(vn);
        k = static_cast<int>(vk);
      }
      line.resize(hash);
    }
    std::vector<std::pair<std::string, std::size_t>> tokens;  // text, 1-based column
    for (std::size_t pos = 0; pos < line.size();) {
      while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
      if (pos >= line.size()) break;
      const std::size_t start = pos;
      while (pos < line.size() && !std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
      tokens.emplace_back(line.substr(start, pos - start), start + 1);
    }
    if (tokens.empty()) continue;
    if (!k) k = static_cast<int>(tokens.size());
    const std::size_t kk = static_cast<std::size_t>(*k);
    if (tokens.size() != kk && tokens.size() != kk + 1)
      fail(name, line_no, tokens.front().second,
           "expected " + std::to_string(kk) + " vertex ids and an optional weight, got " +
               std::to_string(tokens.size()) + " fields");
    EdgeInput e;
    for (std::size_t j = 0; j < kk; ++j) {
      const auto& [text, col] = tokens[j];
      std::size_t used = 0;
      unsigned long long id = 0;
      try {
        if (text[0] == '-' || text[0] == '+') throw std::invalid_argument(text);
        id = std::stoull(text, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != text.size() || id == 0)
        fail(name, line_no, col, "invalid vertex id '" + text + "'");
      if (n && id > *n) fail(name, line_no, col, "vertex " + text + " exceeds n = " + std::to_string(*n));
      if (id > 0xffffffffULL) fail(name, line_no, col, "vertex id too large");
      max_id = std::max<std::uint64_t>(max_id, id);
      e.vertices.push_back(static_cast<Vertex>(id));
    }
    if (tokens.size() == kk + 1) {
      const auto& [text, col] = tokens[kk];
      std::size_t used = 0;
      double w = 0.0;
      try {
        w = std::stod(text, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != text.size() || !(w > 0.0) || !std::isfinite(w))
        fail(name, line_no, col, "invalid weight '" + text + "'");
      e.weight = w;
    }
    for (std::size_t a = 0; a < kk; ++a)
      for (std::size_t b = a + 1; b < kk; ++b)
        if (e.vertices[a] == e.vertices[b])
          fail(name, line_no, tokens[b].second, "repeated vertex in edge");
    edges.push_back(std::move(e));
  }
  if (!k) throw InputError(name + ": no edges and no '# n <N> k <K>' header");
  return WeightedHypergraph(n.value_or(max_id), *k, std::move(edges));
}

}  // namespace

FileFormat format_for_path(const std::string& path) {
  const auto dot = path.rfind('.');
  if (dot != std::string::npos && path.substr(dot) == ".json") return FileFormat::kJson;
  return FileFormat::kText;
}

WeightedHypergraph from_json(const nlohmann::json& doc, const std::string& name) {
  if (!doc.is_object()) throw InputError(name + ": expected a JSON object");
  for (const char* key : {"n", "k", "edges"})
    if (!doc.contains(key)) throw InputError(name + ": missing field \"" + key + "\"");
  if (!doc["n"].is_number_integer() || doc["n"].get<std::int64_t>() < 0)
    throw InputError(name + ": \"n\" must be a nonnegative integer");
  if (!doc["k"].is_number_integer() || doc["k"].get<std::int64_t>() < 1)
    throw InputError(name + ": \"k\" must be a positive integer");
  if (!doc["edges"].is_array()) throw InputError(name + ": \"edges\" must be an array");
  const auto n = doc["n"].get<std::size_t>();
  const auto k = doc["k"].get<int>();
  std::vector<EdgeInput> edges;
  edges.reserve(doc["edges"].size());
  std::size_t index = 0;
  for (const auto& item : doc["edges"]) {
    const std::string where = name + ": edges[" + std::to_string(index++) + "]";
    EdgeInput e;
    const nlohmann::json* ids = nullptr;
    if (item.is_array()) {
      ids = &item;
    } else if (item.is_object() && item.contains("v") && item["v"].is_array()) {
      ids = &item["v"];
      if (item.contains("w")) {
        if (!item["w"].is_number()) throw InputError(where + ": \"w\" must be a number");
        e.weight = item["w"].get<double>();
      }
    } else {
      throw InputError(where + ": expected {\"v\": [...], \"w\": ...}");
    }
    if (ids->size() != static_cast<std::size_t>(k))
      throw InputError(where + ": expected " + std::to_string(k) + " vertices, got " +
                       std::to_string(ids->size()));
    for (const auto& v : *ids) {
      const auto id = as_vertex(v, where);
      if (id > n) throw InputError(where + ": vertex " + std::to_string(id) + " exceeds n");
      e.vertices.push_back(static_cast<Vertex>(id));
    }
    edges.push_back(std::move(e));
  }
  try {
    return WeightedHypergraph(n, k, std::move(edges));
  } catch (const InputError& err) {
    throw InputError(name + ": " + err.what());
  }
}

WeightedHypergraph load(std::istream& in, FileFormat format, const std::string& name) {
  if (format == FileFormat::kText) return load_text(in, name);
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& err) {
    // translate the byte offset into line and column
    std::size_t line = 1, column = 1;
    for (std::size_t j = 0; j + 1 < err.byte && j < text.size(); ++j) {
      if (text[j] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    fail(name, line, column, "JSON syntax error");
  }
  return from_json(doc, name);
}

WeightedHypergraph load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return load(in, format_for_path(path), path);
}

nlohmann::json to_json(const WeightedHypergraph& h) {
  nlohmann::json edges = nlohmann::json::array();
  for (std::size_t e = 0; e < h.edge_count(); ++e) {
    const auto v = h.edge(e);
    edges.push_back({{"v", std::vector<Vertex>(v.begin(), v.end())}, {"w", h.weight(e)}});
  }
  return {{"n", h.n()}, {"k", h.k()}, {"edges", std::move(edges)}};
}

void save(const WeightedHypergraph& h, std::ostream& out, FileFormat format) {
  if (format == FileFormat::kJson) {
    out << to_json(h).dump() << '\n';
    return;
  }
  out << "# n " << h.n() << " k " << h.k() << '\n' << std::setprecision(17);
  for (std::size_t e = 0; e < h.edge_count(); ++e) {
    for (Vertex v : h.edge(e)) out << v << ' ';
    out << h.weight(e) << '\n';
  }
}

void save(const WeightedHypergraph& h, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  save(h, out, format_for_path(path));
  if (!out) throw InputError("write failed for " + path);
}

}  // namespace moddev
