#pragma once

#include <string>
#include <vector>

#include "equidim/system_io.hpp"

namespace testutil {

inline equidim::Polynomial P(const equidim::RingPtr& ring, const std::string& s) {
  return equidim::parse_polynomial(s, ring);
}

inline std::vector<equidim::Polynomial> Ps(const equidim::RingPtr& ring, std::initializer_list<const char*> srcs) {
  std::vector<equidim::Polynomial> out;
  for (const char* s : srcs) out.push_back(P(ring, s));
  return out;
}

inline std::vector<std::string> strs(const std::vector<equidim::Polynomial>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(equidim::to_string(p));
  return out;
}

}  // namespace testutil
