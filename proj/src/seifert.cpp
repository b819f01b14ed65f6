#include "khopos/seifert.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace khopos {

namespace {

struct Dsu {
  explicit Dsu(int n) : p(static_cast<std::size_t>(n)) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) {
    while (p[static_cast<std::size_t>(x)] != x) x = p[static_cast<std::size_t>(x)] = p[static_cast<std::size_t>(p[static_cast<std::size_t>(x)])];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    p[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    return true;
  }
  std::vector<int> p;
};

}  // namespace

int State::weight() const { return static_cast<int>(std::count(markers.begin(), markers.end(), 1)); }

int MultiGraph::component_count() const {
  Dsu u(vertexCount);
  int k = vertexCount;
  for (auto [a, b] : edges) k -= u.unite(a, b) ? 1 : 0;
  return k;
}

bool MultiGraph::has_loop() const {
  return std::any_of(edges.begin(), edges.end(), [](auto e) { return e.first == e.second; });
}

bool MultiGraph::is_forest() const {
  Dsu u(vertexCount);
  for (auto [a, b] : edges)
    if (!u.unite(a, b)) return false;
  return true;
}

bool MultiGraph::is_bipartite() const {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(vertexCount));
  for (auto [a, b] : edges) {
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  }
  std::vector<int> color(static_cast<std::size_t>(vertexCount), -1);
  for (int s = 0; s < vertexCount; ++s) {
    if (color[static_cast<std::size_t>(s)] >= 0) continue;
    color[static_cast<std::size_t>(s)] = 0;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : adj[static_cast<std::size_t>(v)]) {
        auto& cw = color[static_cast<std::size_t>(w)];
        if (cw < 0) {
          cw = 1 - color[static_cast<std::size_t>(v)];
          stack.push_back(w);
        } else if (cw == color[static_cast<std::size_t>(v)]) {
          return false;
        }
      }
    }
  }
  return true;
}

std::vector<std::pair<int, int>> MultiGraph::sorted_edges() const {
  auto e = edges;
  std::sort(e.begin(), e.end());
  return e;
}

std::string MultiGraph::to_text() const {
  std::ostringstream os;
  os << "v " << vertexCount << '\n';
  const auto e = sorted_edges();
  for (std::size_t i = 0; i < e.size();) {
    std::size_t j = i;
    while (j < e.size() && e[j] == e[i]) ++j;
    os << "e " << e[i].first << ' ' << e[i].second;
    if (j - i > 1) os << ' ' << (j - i);
    os << '\n';
    i = j;
  }
  return os.str();
}

Resolution resolve(const LinkDiagram& d, const State& s) {
  const int n = d.crossing_count();
  if (static_cast<int>(s.markers.size()) != n)
    throw PreconditionError("state has " + std::to_string(s.markers.size()) + " markers, diagram has " +
                            std::to_string(n) + " crossings");
  Dsu u(d.arc_count());
  for (int c = 0; c < n; ++c) {
    const int m = s.markers[static_cast<std::size_t>(c)];
    if (m != 0 && m != 1) throw PreconditionError("marker must be 0 or 1");
    if (m == 0) {
      u.unite(d.arc_at(c, 0), d.arc_at(c, 1));
      u.unite(d.arc_at(c, 2), d.arc_at(c, 3));
    } else {
      u.unite(d.arc_at(c, 0), d.arc_at(c, 3));
      u.unite(d.arc_at(c, 1), d.arc_at(c, 2));
    }
  }
  // Roots are the smallest arc of their class, so numbering roots in order
  // numbers circles by smallest label.
  Resolution r;
  r.circleOfArc.assign(static_cast<std::size_t>(d.arc_count()), -1);
  std::vector<int> idOfRoot(static_cast<std::size_t>(d.arc_count()), -1);
  for (int a = 0; a < d.arc_count(); ++a) {
    const int root = u.find(a);
    auto& id = idOfRoot[static_cast<std::size_t>(root)];
    if (id < 0) id = r.circleCount++;
    r.circleOfArc[static_cast<std::size_t>(a)] = id;
  }
  r.circleCount += d.free_loops();
  r.chords.reserve(static_cast<std::size_t>(n));
  for (int c = 0; c < n; ++c) {
    const int m = s.markers[static_cast<std::size_t>(c)];
    int a = r.circleOfArc[static_cast<std::size_t>(d.arc_at(c, 0))];
    int b = r.circleOfArc[static_cast<std::size_t>(d.arc_at(c, m == 0 ? 2 : 1))];
    r.chords.push_back({std::min(a, b), std::max(a, b), m});
  }
  return r;
}

MultiGraph state_graph(const LinkDiagram& d, const State& s) {
  const Resolution r = resolve(d, s);
  MultiGraph g;
  g.vertexCount = r.circleCount;
  for (const auto& ch : r.chords) g.edges.emplace_back(ch.a, ch.b);
  return g;
}

State seifert_state(const LinkDiagram& d) {
  State s;
  for (const auto& x : d.crossings()) s.markers.push_back(x.sign > 0 ? 0 : 1);
  return s;
}

MultiGraph seifert_graph(const LinkDiagram& d) { return state_graph(d, seifert_state(d)); }

MultiGraph reduce(const MultiGraph& g) {
  std::set<std::pair<int, int>> uniq(g.edges.begin(), g.edges.end());
  MultiGraph out;
  out.vertexCount = g.vertexCount;
  out.edges.assign(uniq.begin(), uniq.end());
  return out;
}

int cyclomatic(const MultiGraph& g) {
  return static_cast<int>(g.edges.size()) - g.vertexCount + g.component_count();
}

namespace {

MultiGraph checked_reduced_seifert(const LinkDiagram& d) {
  if (!d.is_positive()) throw PreconditionError("diagram is not positive");
  const MultiGraph g = seifert_graph(d);
  if (g.has_loop()) throw std::logic_error("Seifert graph has a loop; orientation is inconsistent");
  return reduce(g);
}

}  // namespace

int p1(const LinkDiagram& d) { return cyclomatic(checked_reduced_seifert(d)); }

bool fibered_test(const LinkDiagram& d) { return checked_reduced_seifert(d).is_forest(); }

bool diagram_connected(const LinkDiagram& d) {
  if (d.crossing_count() == 0) return d.free_loops() <= 1;
  if (d.free_loops() > 0) return false;
  return seifert_graph(d).component_count() == 1;
}

int euler_char(const LinkDiagram& d) {
  if (!diagram_connected(d)) throw PreconditionError("diagram is split");
  return resolve(d, seifert_state(d)).circleCount - d.crossing_count();
}

bool genus_crossing_bound(int genus, int crossings) { return 4 * genus >= crossings; }

}  // namespace khopos
