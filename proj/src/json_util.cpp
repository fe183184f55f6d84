#include "pcert/json_util.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace pcert {

json load_json_file(const std::string& path, const std::string& stage) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(stage, "cannot open file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json_text(buf.str(), stage);
}

json parse_json_text(const std::string& text, const std::string& stage) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw InputError(stage, "malformed JSON");
  return j;
}

void check_fields(const json& j, const std::string& stage,
                  std::initializer_list<const char*> required,
                  std::initializer_list<const char*> optional) {
  if (!j.is_object()) throw InputError(stage, "expected a JSON object");
  for (const char* key : required) {
    if (!j.contains(key)) throw InputError(stage, std::string("missing field '") + key + "'");
  }
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& key = it.key();
    auto match = [&key](const char* k) { return key == k; };
    if (!std::any_of(required.begin(), required.end(), match) &&
        !std::any_of(optional.begin(), optional.end(), match)) {
      throw InputError(stage, "unknown field '" + key + "'");
    }
  }
}

long long get_int(const json& j, const std::string& key, const std::string& stage) {
  if (!j.contains(key) || !j[key].is_number_integer())
    throw InputError(stage, "field '" + key + "' must be an integer");
  return j[key].get<long long>();
}

std::string get_string(const json& j, const std::string& key, const std::string& stage) {
  if (!j.contains(key) || !j[key].is_string())
    throw InputError(stage, "field '" + key + "' must be a string");
  return j[key].get<std::string>();
}

const json& get_array(const json& j, const std::string& key, const std::string& stage) {
  if (!j.contains(key) || !j[key].is_array())
    throw InputError(stage, "field '" + key + "' must be an array");
  return j[key];
}

const json& get_object(const json& j, const std::string& key, const std::string& stage) {
  if (!j.contains(key) || !j[key].is_object())
    throw InputError(stage, "field '" + key + "' must be an object");
  return j[key];
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[h & 0xf];
    h >>= 4;
  }
  return out;
}

}  // namespace pcert
