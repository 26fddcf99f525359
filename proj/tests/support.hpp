#pragma once

#include <complex>
#include <cmath>
#include <filesystem>
#include <random>
#include <string>

namespace testing_support {

inline double rel_err(std::complex<double> got, std::complex<double> want) {
  return std::abs(got - want) / std::max(1e-300, std::abs(want));
}

inline double rel_err(double got, double want) { return std::abs(got - want) / std::max(1e-300, std::abs(want)); }

/// Fresh empty directory under the system temp dir.
inline std::filesystem::path scratch_dir(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / ("maglab_test_" + name);
  std::filesystem::remove_all(p);
  std::filesystem::create_directories(p);
  return p;
}

inline std::string sample_path(const std::string& rel) { return std::string(MAGLAB_SAMPLES_DIR) + "/" + rel; }

}  // namespace testing_support
