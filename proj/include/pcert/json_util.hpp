#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "json.hpp"
#include "pcert/error.hpp"

namespace pcert {

// All JSON in the artifact uses ordered_json so that serialization is
// byte-stable and follows construction order.
using json = nlohmann::ordered_json;

json load_json_file(const std::string& path, const std::string& stage);
json parse_json_text(const std::string& text, const std::string& stage);

// Rejects unknown fields: every key of `j` must appear in `required` or
// `optional`, and every `required` key must be present.
void check_fields(const json& j, const std::string& stage,
                  std::initializer_list<const char*> required,
                  std::initializer_list<const char*> optional = {});

long long get_int(const json& j, const std::string& key, const std::string& stage);
std::string get_string(const json& j, const std::string& key, const std::string& stage);
const json& get_array(const json& j, const std::string& key, const std::string& stage);
const json& get_object(const json& j, const std::string& key, const std::string& stage);

// FNV-1a 64-bit digest of a byte string, rendered as 16 hex digits.
std::string fnv1a_hex(const std::string& bytes);

}  // namespace pcert
