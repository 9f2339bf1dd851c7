#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nilmod/moduli.hpp"
#include "nilmod/report.hpp"
#include "nilmod/syzygy.hpp"

namespace nilmod {

inline constexpr const char* kToolVersion = "0.3.0";

/// Betti window overrides; unset fields default to (|W|, |W|+2).
struct WindowOptions {
  std::optional<int> max_n;
  std::optional<int> max_j;
};

/// Koszul variables used for the homogeneous spaces: every variable for
/// A, every variable except alpha for B0.
std::vector<std::string> default_koszul_variables(Space space, int r);

KoszulWindow resolve_window(const WindowOptions& options, std::size_t w_size);

/// Runs the whole pipeline for one space and collects one line per checked
/// statement.
VerificationReport verify_space(const ModuliSpec& spec, const WindowOptions& windows = {});

struct FiberSummary {
  std::optional<std::size_t> dim;
  int components = 0;
  bool equidimensional = false;
  bool reduced_certified = false;
  bool intersection_equal = false;
};

struct FlatnessReport {
  Space space = Space::C;
  int r = 0;
  std::uint64_t p = 0;
  FiberSummary generic_fiber;
  FiberSummary special_fiber;
  bool criterion_satisfied = false;
  std::vector<std::string> conclusions;
  VerificationReport report;
};

/// Checks the fiberwise flatness hypotheses for C_r over Q and F_p, both
/// built from the same integer generators. Throws InvalidInput for a space
/// other than C, p = 2, or composite p.
FlatnessReport verify_flatness(Space space, int r, std::uint64_t p);

}  // namespace nilmod
