#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "hx/family.hpp"

namespace hx {

enum class FamilyFormat { text, json };

// Text format:
//   n=<n> k=<k>
//   <v1> <v2> ... <vk>      (one edge per line, vertices ascending)
// Edges are emitted in colex order; both formats round-trip bit-exactly.
std::string to_text(const Family& f);
Family family_from_text(std::string_view text);

nlohmann::json to_json(const Family& f);
Family family_from_json(const nlohmann::json& j);

void save_family(const Family& f, const std::filesystem::path& path, FamilyFormat fmt);

// Sniffs the format: leading '{' means JSON, anything else text.
Family load_family(const std::filesystem::path& path);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

} // namespace hx
