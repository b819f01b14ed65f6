#pragma once

#include <string>
#include <utility>
#include <vector>

#include "khopos/diagram.hpp"

namespace khopos {

/// Marker per crossing, in crossing order.
struct State {
  std::vector<int> markers;
  int weight() const;
};

struct Chord {
  int a = 0;
  int b = 0;
  int marker = 0;
};

struct Resolution {
  int circleCount = 0;
  /// Circle of each dense arc; free loops take the last ids.
  std::vector<int> circleOfArc;
  std::vector<Chord> chords;  // one per crossing
};

/// Undirected multigraph; loops allowed.
struct MultiGraph {
  int vertexCount = 0;
  std::vector<std::pair<int, int>> edges;  // each stored with first <= second

  int component_count() const;
  bool has_loop() const;
  bool is_forest() const;
  bool is_bipartite() const;
  /// Edges sorted lexicographically.
  std::vector<std::pair<int, int>> sorted_edges() const;
  /// "v <count>" then one "e <a> <b> [multiplicity]" line per distinct edge.
  std::string to_text() const;
};

Resolution resolve(const LinkDiagram& d, const State& s);
MultiGraph state_graph(const LinkDiagram& d, const State& s);
/// The marker at each crossing that follows the orientation.
State seifert_state(const LinkDiagram& d);
MultiGraph seifert_graph(const LinkDiagram& d);
MultiGraph reduce(const MultiGraph& g);
int cyclomatic(const MultiGraph& g);
int p1(const LinkDiagram& d);
bool fibered_test(const LinkDiagram& d);
/// Seifert circles minus crossings. Equals chi(L) for positive diagrams.
int euler_char(const LinkDiagram& d);
bool genus_crossing_bound(int genus, int crossings);
bool diagram_connected(const LinkDiagram& d);

}  // namespace khopos
