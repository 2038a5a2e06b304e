#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "wdl/all.hpp"

namespace support {

inline wdl::Element el(const wdl::BoundedLattice& l, const std::string& label) {
  auto e = l.find_label(label);
  if (!e) throw wdl::Error(wdl::Errc::unknown_name, "test label '" + label + "'");
  return *e;
}
inline wdl::Element el(const wdl::Wdl& w, const std::string& label) { return el(w.lattice(), label); }

inline wdl::ElementSet set(const wdl::BoundedLattice& l, std::initializer_list<const char*> labels) {
  wdl::ElementSet s(l.size());
  for (const char* x : labels) s.insert(el(l, x));
  return s;
}
inline wdl::ElementSet set(const wdl::Wdl& w, std::initializer_list<const char*> labels) {
  return set(w.lattice(), labels);
}

inline std::string data_path(const std::string& rel) { return std::string(WDL_SOURCE_DIR) + "/" + rel; }

/// 0 < a, b < 1 with a, b incomparable.
inline wdl::BoundedLattice diamond() {
  return wdl::BoundedLattice::from_covers(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}, {"0", "a", "b", "1"});
}

}  // namespace support
