#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nilmod/betti.hpp"
#include "nilmod/invariants.hpp"

namespace nilmod {

enum class Verdict { Pass, Fail, Inconclusive, CitedInference };

std::string to_string(Verdict v);

/// Fixed citation table. Every anchor names one statement being checked.
struct Anchor {
  std::string_view id;
  std::string_view statement;
};

const std::vector<Anchor>& anchor_table();
/// Throws std::invalid_argument for ids outside the table.
const Anchor& find_anchor(std::string_view id);

struct ReportLine {
  std::string claim;
  std::string anchor;
  std::string computed;
  Verdict verdict;
};

struct Timing {
  std::string stage;
  double seconds;
};

struct ReportVerdicts {
  std::optional<bool> cm;
  std::optional<bool> gorenstein;
  std::optional<long long> type;
  std::optional<int> components;
  std::optional<bool> intersection_equal;
  std::optional<bool> flat_criterion;
};

struct VerificationReport {
  std::string tool_version;
  std::string space;
  int r = 0;
  std::uint64_t characteristic = 0;

  std::optional<std::size_t> dimension;
  std::optional<long long> multiplicity;
  std::optional<HilbertSeries> hilbert;
  std::optional<BettiTable> betti;
  ReportVerdicts verdicts;

  std::vector<ReportLine> lines;
  std::vector<Timing> timings;

  /// Adds a line; the anchor must be in anchor_table().
  void add(std::string claim, std::string_view anchor, std::string computed, Verdict verdict);
  /// Pass/Fail by a boolean check.
  void check(std::string claim, std::string_view anchor, std::string computed, bool ok);

  /// Fail if some line fails; Pass if every non-inference line passes;
  /// Inconclusive otherwise.
  Verdict overall() const;

  /// Aligned human-readable table.
  std::string to_text() const;
};

std::string tpoly_to_string(const TPoly& p);

}  // namespace nilmod
