#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "metricgeo/correspondence.hpp"
#include "metricgeo/finite_space.hpp"

namespace metricgeo::io {

/// Parses a space document of kind "matrix", "heisenberg" or "cantor".
/// Generated kinds are materialized deterministically from their
/// parameters; the returned metadata records the generator so the table can
/// be replayed. Schema violations throw InputError with a JSON-pointer path.
FiniteMetricSpace parse_space(const nlohmann::json& doc);

FiniteMetricSpace load_space(const std::filesystem::path& path);

/// A "matrix" document. Infinite entries (an ideal ∞ row) are written as null.
nlohmann::json space_to_json(const FiniteMetricSpace& space);

/// {"source_file": ..., "target_file": ..., "pairs": [[i, j], ...]} with
/// file paths relative to the correspondence file.
PointCorrespondence load_correspondence(const std::filesystem::path& path);

nlohmann::json read_json(const std::filesystem::path& path);

/// Writes through a temporary file and rename.
void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace metricgeo::io
