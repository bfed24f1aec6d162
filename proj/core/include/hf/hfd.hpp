#pragma once

#include "hf/diagram.hpp"

#include <filesystem>
#include <string>

namespace hf {

/// Parses an HFD document (UTF-8 JSON). Throws InvalidDiagram on malformed
/// JSON, missing or unknown fields, or wrongly typed values. Does not run
/// validate(); structural checks are reported separately.
HeegaardDiagram parse_hfd(const std::string& text);
HeegaardDiagram read_hfd(const std::filesystem::path& path);

/// Canonical serialization: fields in the order genus, alpha, beta, regions,
/// basepoint_region; two-space indentation; trailing newline.
std::string to_hfd(const HeegaardDiagram& d);
void write_hfd(const HeegaardDiagram& d, const std::filesystem::path& path);

}  // namespace hf
