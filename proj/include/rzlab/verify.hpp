#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "rzlab/store.hpp"

namespace rzlab::verify {

struct Check {
  std::string id;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

enum class Suite { specfun, theta, rzeta, zeros, phase, all };
Suite suite_from_string(std::string_view text);
std::string to_string(Suite s);
bool needs_store(Suite s);

// Heights the zeros and phase checks rely on: u(400) needs the upper store to
// reach 400 + 50 log 400, d and B use the lower store down to -400.
constexpr double store_top = 700.0;
constexpr double store_bottom = -400.0;

/// Loads `path` (empty path: start empty), scans whatever part of
/// (0, store_top] and [store_bottom, 0] is not covered yet, and saves the
/// result back when a path was given.
zerolab::ZeroStore prepare_store(const std::filesystem::path& path);

/// Checks of one suite. `store` is only read by the zeros and phase suites.
std::vector<Check> run_suite(Suite suite, const zerolab::ZeroStore& store);

/// The fifteen acceptance criteria, in order.
std::vector<Check> acceptance(const zerolab::ZeroStore& store);

/// Not asserted: the scenario ratios of phase::scenario at a few heights.
std::string scenario_table(const zerolab::ZeroStore& store);

std::string format(const Check& c);

}  // namespace rzlab::verify
