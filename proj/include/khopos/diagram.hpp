#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace khopos {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a smoothing or edit cannot keep a consistent orientation.
class OrientationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an operation receives an input that violates its contract.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// One crossing in PD convention: arcs[0] is the incoming under-strand, the
/// remaining slots follow counterclockwise. The under-strand runs 0 -> 2; the
/// over-strand runs 3 -> 1 when sign = +1 and 1 -> 3 when sign = -1.
struct Crossing {
  std::array<int, 4> arcs{};
  int sign = 0;

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

/// Oriented link diagram. Crossing order is fixed at construction and is the
/// order used by the cube of resolutions.
///
/// Components that pass through no crossing are kept as a count of free loops.
/// The empty link (no crossings, no loops) is a distinct value from the
/// zero-crossing unknot.
class LinkDiagram {
 public:
  LinkDiagram() = default;

  /// Validating constructor from PD tuples; orientation and signs are inferred
  /// from the increasing-label convention. Throws ParseError.
  static LinkDiagram from_pd(const std::vector<std::array<int, 4>>& tuples, int freeLoops = 0);

  /// Builds a diagram from crossings whose orientation is known explicitly.
  /// `heads[c][s]` is true when the arc in slot s of crossing c ends at c.
  /// Slot pairs (0,2) form the under-strand, (1,3) the over-strand. Tuples are
  /// rotated into PD order and arcs are relabeled canonically.
  static LinkDiagram from_oriented(const std::vector<std::array<int, 4>>& slots,
                                   const std::vector<std::array<bool, 4>>& heads,
                                   int freeLoops);

  /// Builds a diagram from crossings with known signs, keeping labels as they
  /// are. Used by edits that must not move base points (crossing switches).
  static LinkDiagram from_crossings(std::vector<Crossing> crossings, int freeLoops);

  static LinkDiagram unknot() { return from_oriented({}, {}, 1); }

  const std::vector<Crossing>& crossings() const { return crossings_; }
  int crossing_count() const { return static_cast<int>(crossings_.size()); }
  int free_loops() const { return freeLoops_; }
  int component_count() const { return static_cast<int>(components_.size()) + freeLoops_; }
  bool empty() const { return crossings_.empty() && freeLoops_ == 0; }

  int writhe() const { return nPlus_ - nMinus_; }
  int n_plus() const { return nPlus_; }
  int n_minus() const { return nMinus_; }
  bool is_positive() const { return nMinus_ == 0; }

  /// Arc count (2 per crossing). Arc indices are dense 0..arc_count()-1 and
  /// ordered like the labels.
  int arc_count() const { return static_cast<int>(labels_.size()); }
  int label_of(int arcIndex) const { return labels_[static_cast<std::size_t>(arcIndex)]; }
  /// Dense arc index of slot s at crossing c.
  int arc_at(int c, int s) const { return slotArc_[static_cast<std::size_t>(4 * c + s)]; }
  /// True when the arc in slot s of crossing c enters the crossing there.
  bool is_head(int c, int s) const;

  /// Crossing-carrying components as dense arc indices in orientation order.
  const std::vector<std::vector<int>>& components() const { return components_; }
  /// Component index (into components()) of a dense arc.
  int component_of_arc(int arcIndex) const {
    return arcComponent_[static_cast<std::size_t>(arcIndex)];
  }

  friend bool operator==(const LinkDiagram& a, const LinkDiagram& b) {
    return a.crossings_ == b.crossings_ && a.freeLoops_ == b.freeLoops_;
  }

 private:
  void finalize();  // derives dense indices, components and counts

  std::vector<Crossing> crossings_;
  int freeLoops_ = 0;
  int nPlus_ = 0;
  int nMinus_ = 0;
  std::vector<int> labels_;
  std::vector<int> slotArc_;
  std::vector<std::vector<int>> components_;
  std::vector<int> arcComponent_;
};

/// Braid word on `strands` strands; letter i is sigma_i, -i its inverse.
struct BraidWord {
  int strands = 1;
  std::vector<int> letters;

  void validate() const;
  int exponent_sum() const;
  int negative_letters() const;
  /// Cycle count of the underlying permutation, i.e. components of the closure.
  int closure_components() const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

enum class Reorient { PreserveAll, PreserveUninvolved };

LinkDiagram parse_pd(std::string_view text);
LinkDiagram parse_braid(const BraidWord& b);
/// Parses "braid <strands>: a1 a2 ..." (the "braid" keyword is optional).
BraidWord parse_braid_text(std::string_view text);

std::string to_pd_text(const LinkDiagram& d);
std::string to_braid_text(const BraidWord& b);

LinkDiagram mirror(const LinkDiagram& d);
LinkDiagram disjoint_union(const LinkDiagram& d1, const LinkDiagram& d2);
LinkDiagram smooth(const LinkDiagram& d, int crossing, int marker, Reorient policy);
LinkDiagram switch_crossing(const LinkDiagram& d, int crossing);
/// Reverses the orientation of one crossing-carrying component.
LinkDiagram reverse_component(const LinkDiagram& d, int component);
BraidWord insert_twists(const BraidWord& b, int index, int count);

}  // namespace khopos
