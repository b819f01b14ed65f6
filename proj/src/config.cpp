#include "khopos/config.hpp"

#include <cstdlib>

namespace khopos {

void JobConfig::validate() const {
  if (options.maxStatesPerLevel <= 0 || options.maxNonzeros <= 0) throw PreconditionError("budgets must be positive");
  if (options.workers < 1) throw PreconditionError("worker count must be positive");
  if (window && window->first > window->second) throw PreconditionError("window lower bound exceeds upper bound");
}

OutputFormat parse_format(const std::string& text) {
  if (text == "json") return OutputFormat::Json;
  if (text == "table") return OutputFormat::Table;
  if (text == "csv") return OutputFormat::Csv;
  throw PreconditionError("unknown output format '" + text + "' (json, table, csv)");
}

int workers_from_env(int fallback) {
  const char* v = std::getenv("KHOPOS_WORKERS");
  if (!v || !*v) return fallback;
  char* end = nullptr;
  const long n = std::strtol(v, &end, 10);
  if (*end != '\0' || n < 1 || n > 1024) throw PreconditionError(std::string("KHOPOS_WORKERS must be a positive integer, got '") + v + "'");
  return static_cast<int>(n);
}

}  // namespace khopos
