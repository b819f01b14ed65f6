#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include <json.hpp>

#include "khopos/linalg.hpp"

namespace khopos {

/// Homological gradings certified complete. A missing bound means the table
/// is complete on that side.
struct Window {
  std::optional<int> lo;
  std::optional<int> hi;

  static Window full() { return {}; }
  static Window range(int lo, int hi) { return {lo, hi}; }
  bool is_full() const { return !lo && !hi; }
  bool contains(int i) const { return (!lo || i >= *lo) && (!hi || i <= *hi); }
  friend bool operator==(const Window&, const Window&) = default;
};

class KhTable {
 public:
  KhTable() = default;
  KhTable(Ring ring, Window window) : ring_(ring), window_(window) {}

  const Ring& ring() const { return ring_; }
  const Window& window() const { return window_; }
  /// Nonzero groups keyed by (i, j).
  const std::map<std::pair<int, int>, AbelianGroup>& groups() const { return groups_; }

  /// Stores g at (i, j); zero groups are dropped. Throws when i is outside the window.
  void set(int i, int j, AbelianGroup g);
  /// Group at (i, j); std::nullopt when i lies outside the window.
  std::optional<AbelianGroup> at(int i, int j) const;
  /// Zero group for gradings inside the window with nothing stored.
  AbelianGroup known(int i, int j) const;

  /// Restriction to the homological range [lo, hi] (must lie inside the window).
  KhTable restrict(int lo, int hi) const;
  /// Shifts every grading: (i, j) -> (i + di, j + dj).
  KhTable shifted(int di, int dj) const;

  std::int64_t total_rank() const;
  /// Sum over stored groups of (-1)^i q^j rank, as a map j -> coefficient.
  std::map<int, std::int64_t> graded_euler() const;

  nlohmann::json to_json() const;
  static KhTable from_json(const nlohmann::json& j);
  /// Grid with rows j descending and columns i ascending.
  std::string to_grid() const;
  /// "i,j,rank,torsion" lines, torsion as space-separated factors.
  std::string to_csv() const;

  friend bool operator==(const KhTable& a, const KhTable& b) {
    return a.ring_ == b.ring_ && a.window_ == b.window_ && a.groups_ == b.groups_;
  }

 private:
  Ring ring_;
  Window window_;
  std::map<std::pair<int, int>, AbelianGroup> groups_;
};

}  // namespace khopos
