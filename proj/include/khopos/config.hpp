#pragma once

#include <optional>
#include <string>

#include "khopos/kh_table.hpp"
#include "khopos/khovanov.hpp"
#include "khopos/linalg.hpp"

namespace khopos {

enum class OutputFormat { Json, Table, Csv };

struct JobConfig {
  Ring ring = Ring::integers();
  std::optional<std::pair<int, int>> window;  // homological range; full when empty
  KhOptions options;
  OutputFormat format = OutputFormat::Json;

  /// Throws PreconditionError on non-positive budgets or a reversed window.
  void validate() const;
};

OutputFormat parse_format(const std::string& text);
/// Worker count from KHOPOS_WORKERS, or `fallback` when unset.
int workers_from_env(int fallback = 1);

}  // namespace khopos
