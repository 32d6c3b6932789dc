#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "json.hpp"

#include "moddev/hypergraph.hpp"

namespace moddev {

enum class FileFormat { kJson, kText };

/// JSON: {"n": int, "k": int, "edges": [{"v": [ids], "w": weight}, ...]}, "w"
/// optional. Text: one edge per line, k ids then an optional weight; '#'
/// starts a comment, and a "# n <N> k <K>" line fixes the sizes. Without that
/// line k is the token count of the first edge and n the largest id.
WeightedHypergraph load(const std::string& path);
WeightedHypergraph load(std::istream& in, FileFormat format, const std::string& name = "<input>");

void save(const WeightedHypergraph& h, const std::string& path);
void save(const WeightedHypergraph& h, std::ostream& out, FileFormat format);

nlohmann::json to_json(const WeightedHypergraph& h);
WeightedHypergraph from_json(const nlohmann::json& doc, const std::string& name = "<input>");

/// JSON for .json paths, text otherwise.
FileFormat format_for_path(const std::string& path);

}  // namespace moddev
