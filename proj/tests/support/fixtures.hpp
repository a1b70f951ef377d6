#pragma once

#include <algorithm>
#include <filesystem>
#include <vector>

#include "hg/disk.hpp"
#include "hg/io.hpp"

namespace fixtures {

inline std::filesystem::path data(const char *name) { return std::filesystem::path(HG_TEST_DATA) / name; }

/// z -> zeta_p (z + p) - p over Q(zeta_p).
inline hg::DiskAction affine(int p) {
  using namespace hg;
  CycloLocalField k(p, 1);
  auto z = Cyclotomic::root_of_unity(p, 1);
  Cyclotomic c(p);
  return DiskAction::from_mobius(k, builders::cyclic(p), {{"g", Mobius{z, z * c - c, 0, 1}}});
}

/// Every disk action file under tests/data.
inline std::vector<std::filesystem::path> bundled_actions() {
  std::vector<std::filesystem::path> out;
  for (const auto &f : std::filesystem::directory_iterator(HG_TEST_DATA)) {
    try {
      auto j = hg::io::read_json_file(f.path());
      if (j.is_object() && j.contains("field") && j["field"].contains("m"))
        out.push_back(f.path());
    } catch (const std::exception &) {
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace fixtures
