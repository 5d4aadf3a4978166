// Shared helpers for the test binaries: corpus access and seeded RNGs.
#pragma once

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "arrangements/io.hpp"

namespace arr::test {

inline std::filesystem::path corpus_dir() { return ARR_CORPUS_DIR; }

inline Arrangement corpus(const std::string& name) { return load_arrangement_file(corpus_dir() / (name + ".json")); }

/// File stems of every corpus arrangement, sorted.
inline std::vector<std::string> corpus_names() {
  std::vector<std::string> names;
  for (const auto& entry : std::filesystem::directory_iterator(corpus_dir()))
    if (entry.path().extension() == ".json") names.push_back(entry.path().stem().string());
  std::sort(names.begin(), names.end());
  return names;
}

inline std::mt19937_64 seeded_rng(std::uint64_t stream = 0) { return std::mt19937_64(20240601u + 7919u * stream); }

}  // namespace arr::test
