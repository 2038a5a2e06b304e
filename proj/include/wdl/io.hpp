#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "wdl/error.hpp"
#include "wdl/lattice.hpp"
#include "wdl/wdl.hpp"

namespace wdl {

/// Contents of a .lat.json file. Δ and ∇ are optional in the format.
struct LatFile {
  std::string name;
  BoundedLattice lattice;
  std::optional<std::vector<Element>> delta, nabla;

  bool has_dicomplementation() const { return delta.has_value() && nabla.has_value(); }

  Wdl to_wdl() const {
    if (!has_dicomplementation())
      throw Error(Errc::invalid_argument,
                  "'" + name + "' has no delta/nabla tables, so it is not a WDL");
    return Wdl(lattice, *delta, *nabla, name);
  }
};

namespace detail {

inline std::vector<Element> index_array(const nlohmann::json& j, const char* key, std::size_t n) {
  if (!j.is_array()) throw Error(Errc::parse_error, std::string("'") + key + "' must be an array");
  if (j.size() != n)
    throw Error(Errc::parse_error, std::string("'") + key + "' must have " + std::to_string(n) +
                                       " entries");
  std::vector<Element> out;
  for (const auto& v : j) {
    if (!v.is_number_integer() || v.get<long long>() < 0 ||
        v.get<long long>() >= static_cast<long long>(n))
      throw Error(Errc::parse_error,
                  std::string("'") + key + "' holds a dangling index " + v.dump());
    out.push_back(v.get<Element>());
  }
  return out;
}

}  // namespace detail

inline LatFile parse_lat_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(Errc::parse_error, e.what());
  }
  if (!j.is_object()) throw Error(Errc::parse_error, "top level must be an object");
  for (const char* key : {"name", "size", "covers"})
    if (!j.contains(key)) throw Error(Errc::parse_error, std::string("missing field '") + key + "'");
  if (!j["name"].is_string()) throw Error(Errc::parse_error, "'name' must be a string");
  if (!j["size"].is_number_integer() || j["size"].get<long long>() < 1)
    throw Error(Errc::parse_error, "'size' must be a positive integer");
  if (j["size"].get<long long>() > static_cast<long long>(kMaxCarrier))
    throw Error(Errc::cap_exceeded, "'size' exceeds " + std::to_string(kMaxCarrier));
  const auto n = j["size"].get<std::size_t>();

  LatFile f;
  f.name = j["name"].get<std::string>();
  std::vector<ElementPair> cov;
  if (!j["covers"].is_array()) throw Error(Errc::parse_error, "'covers' must be an array");
  for (const auto& pair : j["covers"]) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
        !pair[1].is_number_integer())
      throw Error(Errc::parse_error, "cover " + pair.dump() + " is not an integer pair");
    auto a = pair[0].get<long long>(), b = pair[1].get<long long>();
    if (a < 0 || b < 0 || a >= static_cast<long long>(n) || b >= static_cast<long long>(n))
      throw Error(Errc::parse_error, "cover " + pair.dump() + " has a dangling index");
    cov.emplace_back(static_cast<Element>(a), static_cast<Element>(b));
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    if (!j["labels"].is_array() || j["labels"].size() != n)
      throw Error(Errc::parse_error, "'labels' must be an array of " + std::to_string(n) + " strings");
    for (const auto& l : j["labels"]) {
      if (!l.is_string()) throw Error(Errc::parse_error, "labels must be strings");
      labels.push_back(l.get<std::string>());
    }
  }
  try {
    f.lattice = BoundedLattice::from_covers(n, cov, std::move(labels));
  } catch (const Error& e) {
    if (e.code() == Errc::not_a_partial_order)
      throw Error(Errc::parse_error, std::string("covers contain a cycle: ") + e.what(), e.witness());
    throw;
  }
  if (j.contains("delta")) f.delta = detail::index_array(j["delta"], "delta", n);
  if (j.contains("nabla")) f.nabla = detail::index_array(j["nabla"], "nabla", n);
  if (f.delta.has_value() != f.nabla.has_value())
    throw Error(Errc::parse_error, "'delta' and 'nabla' must be given together");
  return f;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::parse_error, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline LatFile load_lat_json(const std::string& path) { return parse_lat_json(read_file(path)); }

namespace detail {

template <class Range, class F>
std::string inline_array(const Range& r, F item) {
  std::string out = "[";
  bool first = true;
  for (const auto& v : r) {
    out += (first ? "" : ", ") + item(v);
    first = false;
  }
  return out + "]";
}

inline std::string quoted(const std::string& s) { return nlohmann::json(s).dump(); }

}  // namespace detail

/// Emits one field per line with arrays kept on a single line. Field order:
/// name, size, labels, covers, then delta and nabla when present.
inline std::string emit_lat_json(const std::string& name, const BoundedLattice& l,
                                 const std::vector<Element>* delta = nullptr,
                                 const std::vector<Element>* nabla = nullptr) {
  auto num = [](Element e) { return std::to_string(e); };
  std::string out = "{\n";
  out += "  \"name\": " + detail::quoted(name) + ",\n";
  out += "  \"size\": " + std::to_string(l.size()) + ",\n";
  out += "  \"labels\": " + detail::inline_array(l.labels(), detail::quoted) + ",\n";
  out += "  \"covers\": " + detail::inline_array(covers(l), [](const ElementPair& p) {
           return "[" + std::to_string(p.first) + ", " + std::to_string(p.second) + "]";
         });
  if (delta && nabla) {
    out += ",\n  \"delta\": " + detail::inline_array(*delta, num);
    out += ",\n  \"nabla\": " + detail::inline_array(*nabla, num);
  }
  return out + "\n}\n";
}

inline std::string emit_lat_json(const Wdl& w) {
  return emit_lat_json(w.name(), w.lattice(), &w.delta_table(), &w.nabla_table());
}

}  // namespace wdl
