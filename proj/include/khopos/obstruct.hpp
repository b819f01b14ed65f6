#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "khopos/diagram.hpp"
#include "khopos/kh_table.hpp"
#include "khopos/khovanov.hpp"

namespace khopos {

enum class Verdict { Obstructed, Consistent, Inconclusive };
std::string to_string(Verdict v);

struct Violation {
  std::string pattern;
  int i = 0;
  int j = 0;
  AbelianGroup found;
};

struct ObstructionReport {
  Verdict verdict = Verdict::Inconclusive;
  /// Set when the table is over a field, so freeness could not be tested.
  bool fieldStrength = false;
  std::optional<int> feasibleChi;
  std::optional<int> feasibleP1;
  std::vector<Violation> violations;
  std::vector<std::string> notes;
  std::string summary;

  nlohmann::json to_json() const;
};

/// Tests the shape of Khovanov homology forced on positive links.
ObstructionReport positive_pattern_check(const KhTable& t);

struct DualReport {
  ObstructionReport positive;
  ObstructionReport negative;  // pattern check of the mirror
  /// Obstructed when both sides are, consistent when either side is.
  Verdict verdict = Verdict::Inconclusive;
  nlohmann::json to_json() const;
};
DualReport positivity_or_negativity_check(const KhTable& t, const KhTable& mirrorTable);

/// Fiberedness, p1 and chi of a positive diagram against its first homology.
struct CrosscheckReport {
  bool fibered = false;
  int p1 = 0;
  int chi = 0;
  KhTable kh1;
  Verdict verdict = Verdict::Inconclusive;
  std::vector<std::string> failures;
  nlohmann::json to_json() const;
};
CrosscheckReport theorem12_crosscheck(const LinkDiagram& d, const Ring& ring, const KhOptions& opt = {});

struct LesWindow {
  int lo = 0;
  int hi = 0;
};

struct LesReport {
  int crossing = 0;
  int writhe = 0;
  int writhe0 = 0;
  int shiftI = 0;  // (w0 - w + 1) / 2
  int shiftJ = 0;  // (3 (w0 - w) + 1) / 2
  LesWindow window;
  KhTable kh;
  KhTable kh1;
  KhTable kh0;
  std::int64_t checks = 0;
  std::vector<std::string> failures;
  /// Gradings (i, j) with dim Kh^{i,j}(D) == dim Kh^{i,j+1}(D1).
  std::set<std::pair<int, int>> equalities;
  bool ok() const { return failures.empty(); }
  nlohmann::json to_json() const;
};

/// Checks rank constraints of the exact triangle
///   Kh^{i,j+1}(D1) -> Kh^{i,j}(D) -> Kh^{i+s,j+t}(D0) -> Kh^{i+1,j+1}(D1)
/// for a negative crossing v on i in [lo, hi]. D1 is the 1-smoothing, D0 the
/// 0-smoothing oriented to keep the uninvolved components.
LesReport skein_les_verify(const LinkDiagram& d, int v, const Ring& field, LesWindow window,
                           const KhOptions& opt = {});

/// The four gradings (u, 3u+2 +- 1), (u+1, 3u+2 +- 1) with u = (w - w0 - 1) / 2.
std::set<std::pair<int, int>> exceptional_gradings(int w, int w0);

}  // namespace khopos
