#include "khopos/diagram.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <regex>
#include <sstream>

namespace khopos {

namespace {

struct UnionFind {
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      auto& p = parent[static_cast<std::size_t>(x)];
      p = parent[static_cast<std::size_t>(p)];
      x = p;
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }
  std::vector<int> parent;
};

std::string crossing_name(std::size_t c, const std::array<int, 4>& t) {
  std::ostringstream os;
  os << "crossing " << c << " X(" << t[0] << ',' << t[1] << ',' << t[2] << ',' << t[3] << ')';
  return os.str();
}

std::array<bool, 4> heads_from_sign(int sign) {
  return sign > 0 ? std::array<bool, 4>{true, false, false, true}
                  : std::array<bool, 4>{true, true, false, false};
}

// Counts faces of the 4-valent diagram graph and its connected pieces; a
// planar diagram has F = n + 2 * pieces.
bool is_planar(const std::vector<std::array<int, 4>>& slots, const std::vector<int>& dense,
               int arcCount) {
  const int n = static_cast<int>(slots.size());
  if (n == 0) return true;
  std::vector<std::array<int, 2>> ends(static_cast<std::size_t>(arcCount), {-1, -1});
  for (int d = 0; d < 4 * n; ++d) {
    auto& e = ends[static_cast<std::size_t>(dense[static_cast<std::size_t>(d)])];
    (e[0] < 0 ? e[0] : e[1]) = d;
  }
  auto other = [&](int d) {
    const auto& e = ends[static_cast<std::size_t>(dense[static_cast<std::size_t>(d)])];
    return e[0] == d ? e[1] : e[0];
  };
  std::vector<char> seen(static_cast<std::size_t>(4 * n), 0);
  int faces = 0;
  for (int d0 = 0; d0 < 4 * n; ++d0) {
    if (seen[static_cast<std::size_t>(d0)]) continue;
    ++faces;
    int d = d0;
    while (!seen[static_cast<std::size_t>(d)]) {
      seen[static_cast<std::size_t>(d)] = 1;
      const int e = other(d);
      d = (e / 4) * 4 + (e % 4 + 1) % 4;
    }
  }
  UnionFind uf(n);
  for (int d = 0; d < 4 * n; ++d) uf.unite(d / 4, other(d) / 4);
  int pieces = 0;
  for (int c = 0; c < n; ++c) pieces += uf.find(c) == c ? 1 : 0;
  return faces == n + 2 * pieces;
}

}  // namespace

bool LinkDiagram::is_head(int c, int s) const {
  return heads_from_sign(crossings_[static_cast<std::size_t>(c)].sign)[static_cast<std::size_t>(s)];
}

void LinkDiagram::finalize() {
  labels_.clear();
  for (const auto& x : crossings_) labels_.insert(labels_.end(), x.arcs.begin(), x.arcs.end());
  std::sort(labels_.begin(), labels_.end());
  labels_.erase(std::unique(labels_.begin(), labels_.end()), labels_.end());

  const std::size_t n = crossings_.size();
  slotArc_.assign(4 * n, 0);
  nPlus_ = nMinus_ = 0;
  std::vector<int> headDart(labels_.size(), -1);
  for (std::size_t c = 0; c < n; ++c) {
    const auto& x = crossings_[c];
    (x.sign > 0 ? nPlus_ : nMinus_)++;
    const auto h = heads_from_sign(x.sign);
    for (std::size_t s = 0; s < 4; ++s) {
      const int a = static_cast<int>(std::lower_bound(labels_.begin(), labels_.end(), x.arcs[s]) -
                                     labels_.begin());
      slotArc_[4 * c + s] = a;
      if (h[s]) headDart[static_cast<std::size_t>(a)] = static_cast<int>(4 * c + s);
    }
  }

  components_.clear();
  arcComponent_.assign(labels_.size(), -1);
  for (std::size_t a0 = 0; a0 < labels_.size(); ++a0) {
    if (arcComponent_[a0] >= 0) continue;
    const int comp = static_cast<int>(components_.size());
    components_.emplace_back();
    int a = static_cast<int>(a0);
    while (arcComponent_[static_cast<std::size_t>(a)] < 0) {
      arcComponent_[static_cast<std::size_t>(a)] = comp;
      components_.back().push_back(a);
      const int d = headDart[static_cast<std::size_t>(a)];
      const int partner = (d / 4) * 4 + (d % 4 + 2) % 4;
      a = slotArc_[static_cast<std::size_t>(partner)];
    }
  }
}

LinkDiagram LinkDiagram::from_crossings(std::vector<Crossing> crossings, int freeLoops) {
  LinkDiagram d;
  d.crossings_ = std::move(crossings);
  d.freeLoops_ = freeLoops;
  d.finalize();
  return d;
}

LinkDiagram LinkDiagram::from_pd(const std::vector<std::array<int, 4>>& tuples, int freeLoops) {
  if (freeLoops < 0) throw ParseError("negative free loop count");
  const std::size_t n = tuples.size();
  std::map<int, std::vector<int>> occurrences;  // label -> darts
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t s = 0; s < 4; ++s) {
      if (tuples[c][s] <= 0)
        throw ParseError(crossing_name(c, tuples[c]) + ": arc labels must be positive");
      occurrences[tuples[c][s]].push_back(static_cast<int>(4 * c + s));
    }
  }
  for (const auto& [label, darts] : occurrences) {
    if (darts.size() != 2) {
      throw ParseError(crossing_name(static_cast<std::size_t>(darts.front() / 4),
                                     tuples[static_cast<std::size_t>(darts.front() / 4)]) +
                       ": arc " + std::to_string(label) + " used " +
                       std::to_string(darts.size()) + " times");
    }
  }

  // Components from strand pairings; each must carry a contiguous label range.
  std::vector<int> labels;
  for (const auto& kv : occurrences) labels.push_back(kv.first);
  auto index = [&](int label) {
    return static_cast<int>(std::lower_bound(labels.begin(), labels.end(), label) - labels.begin());
  };
  UnionFind uf(static_cast<int>(labels.size()));
  for (const auto& t : tuples) {
    uf.unite(index(t[0]), index(t[2]));
    uf.unite(index(t[1]), index(t[3]));
  }
  std::map<int, std::pair<int, int>> range;  // root -> (lo, hi)
  std::map<int, int> sizes;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const int r = uf.find(static_cast<int>(i));
    auto it = range.find(r);
    if (it == range.end()) {
      range[r] = {labels[i], labels[i]};
    } else {
      it->second.first = std::min(it->second.first, labels[i]);
      it->second.second = std::max(it->second.second, labels[i]);
    }
    ++sizes[r];
  }
  for (const auto& [r, lohi] : range) {
    if (lohi.second - lohi.first + 1 != sizes[r])
      throw ParseError("arc labels " + std::to_string(lohi.first) + ".." +
                       std::to_string(lohi.second) + " of one component are not contiguous");
  }
  auto comp_range = [&](int label) { return range[uf.find(index(label))]; };
  auto succ = [&](int label) {
    const auto [lo, hi] = comp_range(label);
    return label == hi ? lo : label + 1;
  };

  std::vector<int> sign(n, 0);
  std::vector<std::size_t> ambiguous;
  for (std::size_t c = 0; c < n; ++c) {
    const auto& t = tuples[c];
    const auto [lo, hi] = comp_range(t[0]);
    if (lo == hi) throw ParseError(crossing_name(c, t) + ": single-arc component");
    if (t[2] != succ(t[0]))
      throw ParseError(crossing_name(c, t) + ": inconsistent orientation of the under-strand");
    const auto [olo, ohi] = comp_range(t[1]);
    if (olo == ohi) throw ParseError(crossing_name(c, t) + ": single-arc component");
    const bool bd = t[3] == succ(t[1]);
    const bool db = t[1] == succ(t[3]);
    if (bd && db) {
      ambiguous.push_back(c);  // two-arc component, direction not readable from labels
    } else if (bd) {
      sign[c] = -1;
    } else if (db) {
      sign[c] = +1;
    } else {
      throw ParseError(crossing_name(c, t) + ": inconsistent orientation of the over-strand");
    }
  }

  // Two-arc components: take the direction consistent with the rest of the
  // component; a component passing only over-strands gets its smallest label
  // entering the earlier crossing.
  if (!ambiguous.empty()) {
    std::map<int, int> headAt;  // label -> dart where it enters
    auto record_known = [&](std::size_t c) {
      const auto h = heads_from_sign(sign[c]);
      for (std::size_t s = 0; s < 4; ++s)
        if (h[s]) headAt[tuples[c][s]] = static_cast<int>(4 * c + s);
    };
    for (std::size_t c = 0; c < n; ++c) {
      if (sign[c] != 0) {
        record_known(c);
      } else {
        headAt[tuples[c][0]] = static_cast<int>(4 * c);
      }
    }
    bool progress = true;
    while (progress) {
      progress = false;
      for (std::size_t c : ambiguous) {
        if (sign[c] != 0) continue;
        const int b = tuples[c][1], d = tuples[c][3];
        auto enters_elsewhere = [&](int label) {
          auto it = headAt.find(label);
          return it != headAt.end() && it->second / 4 != static_cast<int>(c);
        };
        if (enters_elsewhere(b)) {
          sign[c] = +1;  // b leaves here, so the over-strand runs d -> b
        } else if (enters_elsewhere(d)) {
          sign[c] = -1;
        } else {
          continue;
        }
        record_known(c);
        progress = true;
      }
      if (!progress) {
        for (std::size_t c : ambiguous) {
          if (sign[c] != 0) continue;
          const int lo = std::min(tuples[c][1], tuples[c][3]);
          // lo enters at the lower-indexed of its two crossings
          const auto& darts = occurrences[lo];
          const int first = std::min(darts[0], darts[1]) / 4;
          const bool loEntersHere = first == static_cast<int>(c);
          sign[c] = (lo == tuples[c][1]) == loEntersHere ? -1 : +1;
          record_known(c);
          progress = true;
          break;
        }
      }
    }
  }

  // Every arc must enter exactly one crossing slot and leave exactly one.
  std::map<int, int> headCount;
  for (std::size_t c = 0; c < n; ++c) {
    const auto h = heads_from_sign(sign[c]);
    for (std::size_t s = 0; s < 4; ++s)
      if (h[s]) ++headCount[tuples[c][s]];
  }
  for (std::size_t c = 0; c < n; ++c) {
    for (int label : tuples[c]) {
      if (headCount[label] != 1)
        throw ParseError(crossing_name(c, tuples[c]) + ": inconsistent orientation of arc " +
                         std::to_string(label));
    }
  }

  std::vector<int> dense;
  dense.reserve(4 * n);
  for (const auto& t : tuples)
    for (int l : t) dense.push_back(index(l));
  if (!is_planar(tuples, dense, static_cast<int>(labels.size())))
    throw ParseError("PD code does not describe a planar diagram");

  std::vector<Crossing> crossings(n);
  for (std::size_t c = 0; c < n; ++c) crossings[c] = Crossing{tuples[c], sign[c]};
  return from_crossings(std::move(crossings), freeLoops);
}

LinkDiagram LinkDiagram::from_oriented(const std::vector<std::array<int, 4>>& slots,
                                       const std::vector<std::array<bool, 4>>& heads,
                                       int freeLoops) {
  const std::size_t n = slots.size();
  std::vector<std::array<int, 4>> t(slots);
  std::vector<std::array<bool, 4>> h(heads);
  std::vector<int> sign(n);
  for (std::size_t c = 0; c < n; ++c) {
    if (h[c][2]) {
      std::rotate(t[c].begin(), t[c].begin() + 2, t[c].end());
      std::rotate(h[c].begin(), h[c].begin() + 2, h[c].end());
    }
    if (!h[c][0] || h[c][2] || h[c][1] == h[c][3])
      throw OrientationError("crossing " + std::to_string(c) + ": strands are not oriented through");
    sign[c] = h[c][3] ? +1 : -1;
  }

  // Dense ids, head and tail darts per arc.
  std::vector<int> ids;
  for (const auto& x : t) ids.insert(ids.end(), x.begin(), x.end());
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  auto idx = [&](int id) {
    return static_cast<std::size_t>(std::lower_bound(ids.begin(), ids.end(), id) - ids.begin());
  };
  std::vector<int> headDart(ids.size(), -1), tailDart(ids.size(), -1);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t s = 0; s < 4; ++s) {
      auto& slot = h[c][s] ? headDart[idx(t[c][s])] : tailDart[idx(t[c][s])];
      if (slot >= 0) throw OrientationError("arc " + std::to_string(t[c][s]) + " is not oriented through");
      slot = static_cast<int>(4 * c + s);
    }
  }
  for (std::size_t a = 0; a < ids.size(); ++a)
    if (headDart[a] < 0 || tailDart[a] < 0) throw OrientationError("dangling arc");

  // Components, ordered by the first crossing they meet (under-strand first).
  auto next_arc = [&](std::size_t a) {
    const int d = headDart[a];
    return idx(t[static_cast<std::size_t>(d / 4)][static_cast<std::size_t>((d % 4 + 2) % 4)]);
  };
  std::vector<int> comp(ids.size(), -1);
  struct Info {
    int key;
    std::size_t start;
  };
  std::vector<Info> infos;
  for (std::size_t a0 = 0; a0 < ids.size(); ++a0) {
    if (comp[a0] >= 0) continue;
    const int cid = static_cast<int>(infos.size());
    int key = 1 << 30;
    int bestUnder = 1 << 30, bestHead = 1 << 30;
    std::size_t underStart = a0, headStart = a0;
    std::size_t a = a0;
    while (comp[a] < 0) {
      comp[a] = cid;
      const int hd = headDart[a], tl = tailDart[a];
      // key: crossing index, under passages before over passages
      key = std::min(key, 2 * (hd / 4) + (hd % 4 == 0 ? 0 : 1));
      key = std::min(key, 2 * (tl / 4) + (tl % 4 == 2 ? 0 : 1));
      if (tl % 4 == 2 && tl / 4 < bestUnder) {
        bestUnder = tl / 4;
        underStart = a;
      }
      if (hd < bestHead) {
        bestHead = hd;
        headStart = a;
      }
      a = next_arc(a);
    }
    infos.push_back({key, bestUnder < (1 << 30) ? underStart : headStart});
  }
  std::vector<std::size_t> order(infos.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return infos[x].key < infos[y].key; });
  std::vector<int> newLabel(ids.size(), 0);
  int next = 1;
  for (std::size_t k : order) {
    std::size_t a = infos[k].start;
    do {
      newLabel[a] = next++;
      a = next_arc(a);
    } while (a != infos[k].start);
  }

  std::vector<Crossing> crossings(n);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t s = 0; s < 4; ++s) crossings[c].arcs[s] = newLabel[idx(t[c][s])];
    crossings[c].sign = sign[c];
  }
  return from_crossings(std::move(crossings), freeLoops);
}

// ---------------------------------------------------------------------------
// Braids

void BraidWord::validate() const {
  if (strands < 1) throw PreconditionError("braid needs at least one strand");
  for (int l : letters) {
    if (l == 0 || std::abs(l) > strands - 1)
      throw PreconditionError("braid letter " + std::to_string(l) + " out of range for " +
                              std::to_string(strands) + " strands");
  }
}

int BraidWord::exponent_sum() const {
  int s = 0;
  for (int l : letters) s += l > 0 ? 1 : -1;
  return s;
}

int BraidWord::negative_letters() const {
  return static_cast<int>(std::count_if(letters.begin(), letters.end(), [](int l) { return l < 0; }));
}

int BraidWord::closure_components() const {
  std::vector<int> perm(static_cast<std::size_t>(strands));
  std::iota(perm.begin(), perm.end(), 0);  // perm[position] = strand
  for (int l : letters) {
    const auto i = static_cast<std::size_t>(std::abs(l) - 1);
    std::swap(perm[i], perm[i + 1]);
  }
  std::vector<char> seen(perm.size(), 0);
  int cycles = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) seen[j] = 1;
  }
  return cycles;
}

LinkDiagram parse_braid(const BraidWord& b) {
  b.validate();
  const auto p = static_cast<std::size_t>(b.strands);
  std::vector<int> current(p);
  std::iota(current.begin(), current.end(), 0);
  int nextId = b.strands;
  std::vector<std::array<int, 4>> slots;
  std::vector<std::array<bool, 4>> heads;
  std::vector<char> touched(p, 0);
  for (int l : b.letters) {
    const auto i = static_cast<std::size_t>(std::abs(l) - 1);
    const int x = current[i], y = current[i + 1];
    const int xOut = nextId++, yOut = nextId++;  // xOut leaves at position i+1
    if (l > 0) {
      slots.push_back({y, xOut, yOut, x});
      heads.push_back({true, false, false, true});
    } else {
      slots.push_back({x, y, xOut, yOut});
      heads.push_back({true, true, false, false});
    }
    current[i] = yOut;
    current[i + 1] = xOut;
    touched[i] = touched[i + 1] = 1;
  }
  // Closing the braid identifies the top arc at each position with the bottom one.
  std::map<int, int> closeTo;
  for (std::size_t i = 0; i < p; ++i) closeTo[current[i]] = static_cast<int>(i);
  for (auto& s : slots)
    for (int& a : s)
      if (auto it = closeTo.find(a); it != closeTo.end()) a = it->second;
  const int freeLoops = static_cast<int>(std::count(touched.begin(), touched.end(), 0));
  return LinkDiagram::from_oriented(slots, heads, freeLoops);
}

BraidWord parse_braid_text(std::string_view text) {
  std::string s(text);
  const auto colon = s.find(':');
  if (colon == std::string::npos) throw ParseError("braid text needs '<strands>: letters'");
  std::istringstream head(s.substr(0, colon));
  std::string word;
  BraidWord b;
  head >> word;
  if (word == "braid") head >> word;
  try {
    std::size_t used = 0;
    b.strands = std::stoi(word, &used);
    if (used != word.size()) throw ParseError("bad strand count '" + word + "'");
  } catch (const std::logic_error&) {
    throw ParseError("bad strand count '" + word + "'");
  }
  if (head >> word) throw ParseError("unexpected token '" + word + "' before ':'");
  std::istringstream rest(s.substr(colon + 1));
  while (rest >> word) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(word, &used);
    } catch (const std::logic_error&) {
      throw ParseError("bad braid letter '" + word + "'");
    }
    if (used != word.size()) throw ParseError("bad braid letter '" + word + "'");
    b.letters.push_back(v);
  }
  try {
    b.validate();
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
  return b;
}

std::string to_braid_text(const BraidWord& b) {
  std::ostringstream os;
  os << "braid " << b.strands << ":";
  for (int l : b.letters) os << ' ' << l;
  return os.str();
}

BraidWord insert_twists(const BraidWord& b, int index, int count) {
  if (index < 1 || index > b.strands - 1)
    throw PreconditionError("twist index " + std::to_string(index) + " out of range");
  BraidWord out = b;
  for (int k = 0; k < std::abs(count); ++k) out.letters.push_back(count > 0 ? index : -index);
  return out;
}

// ---------------------------------------------------------------------------
// PD text

LinkDiagram parse_pd(std::string_view text) {
  std::string s(text);
  int declared = -1;
  static const std::regex header(R"(^\s*components\s*:\s*(\d+)\s*$)");
  static const std::regex tuple(
      R"(X\s*[\(\[]\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*[\)\]])");
  std::istringstream lines(s);
  std::string line, body;
  while (std::getline(lines, line)) {
    std::smatch m;
    if (std::regex_match(line, m, header)) {
      if (declared >= 0) throw ParseError("duplicate components header");
      declared = std::stoi(m[1]);
    } else {
      body += line + "\n";
    }
  }
  std::vector<std::array<int, 4>> tuples;
  auto begin = std::sregex_iterator(body.begin(), body.end(), tuple);
  std::size_t consumed = 0;
  std::string leftover;
  for (auto it = begin; it != std::sregex_iterator(); ++it) {
    leftover += body.substr(consumed, static_cast<std::size_t>(it->position()) - consumed);
    consumed = static_cast<std::size_t>(it->position() + it->length());
    std::array<int, 4> t{};
    for (std::size_t k = 0; k < 4; ++k) t[k] = std::stoi((*it)[static_cast<int>(k) + 1]);
    tuples.push_back(t);
  }
  leftover += body.substr(consumed);
  for (char ch : leftover) {
    if (!std::isspace(static_cast<unsigned char>(ch)) && ch != ',')
      throw ParseError("malformed PD text near '" + leftover.substr(0, 20) + "'");
  }
  LinkDiagram d = LinkDiagram::from_pd(tuples, 0);
  if (declared >= 0) {
    const int extra = declared - d.component_count();
    if (extra < 0)
      throw ParseError("header declares " + std::to_string(declared) + " components, diagram has " +
                       std::to_string(d.component_count()));
    d = LinkDiagram::from_crossings(d.crossings(), extra);
  }
  return d;
}

std::string to_pd_text(const LinkDiagram& d) {
  std::ostringstream os;
  if (d.free_loops() > 0) os << "components: " << d.component_count() << '\n';
  bool first = true;
  for (const auto& x : d.crossings()) {
    if (!first) os << ' ';
    first = false;
    os << "X(" << x.arcs[0] << ',' << x.arcs[1] << ',' << x.arcs[2] << ',' << x.arcs[3] << ')';
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Edits

namespace {

std::vector<std::array<bool, 4>> all_heads(const LinkDiagram& d) {
  std::vector<std::array<bool, 4>> h(static_cast<std::size_t>(d.crossing_count()));
  for (int c = 0; c < d.crossing_count(); ++c) h[static_cast<std::size_t>(c)] = heads_from_sign(d.crossings()[static_cast<std::size_t>(c)].sign);
  return h;
}

std::vector<std::array<int, 4>> all_slots(const LinkDiagram& d) {
  std::vector<std::array<int, 4>> t;
  for (const auto& x : d.crossings()) t.push_back(x.arcs);
  return t;
}

void check_crossing(const LinkDiagram& d, int c) {
  if (c < 0 || c >= d.crossing_count())
    throw PreconditionError("crossing " + std::to_string(c) + " does not exist");
}

}  // namespace

LinkDiagram mirror(const LinkDiagram& d) {
  auto t = all_slots(d);
  auto h = all_heads(d);
  for (std::size_t c = 0; c < t.size(); ++c) {
    std::rotate(t[c].begin(), t[c].begin() + 1, t[c].end());
    std::rotate(h[c].begin(), h[c].begin() + 1, h[c].end());
  }
  return LinkDiagram::from_oriented(t, h, d.free_loops());
}

LinkDiagram switch_crossing(const LinkDiagram& d, int c) {
  check_crossing(d, c);
  auto xs = d.crossings();
  auto& x = xs[static_cast<std::size_t>(c)];
  const auto a = x.arcs;
  if (x.sign > 0) {
    x.arcs = {a[3], a[0], a[1], a[2]};
  } else {
    x.arcs = {a[1], a[2], a[3], a[0]};
  }
  x.sign = -x.sign;
  return LinkDiagram::from_crossings(std::move(xs), d.free_loops());
}

LinkDiagram disjoint_union(const LinkDiagram& d1, const LinkDiagram& d2) {
  int offset = 0;
  for (const auto& x : d1.crossings())
    for (int a : x.arcs) offset = std::max(offset, a);
  auto xs = d1.crossings();
  for (auto x : d2.crossings()) {
    for (int& a : x.arcs) a += offset;
    xs.push_back(x);
  }
  return LinkDiagram::from_crossings(std::move(xs), d1.free_loops() + d2.free_loops());
}

LinkDiagram reverse_component(const LinkDiagram& d, int component) {
  if (component < 0 || component >= static_cast<int>(d.components().size()))
    throw PreconditionError("component " + std::to_string(component) + " does not exist");
  auto t = all_slots(d);
  auto h = all_heads(d);
  for (int c = 0; c < d.crossing_count(); ++c)
    for (int s = 0; s < 4; ++s)
      if (d.component_of_arc(d.arc_at(c, s)) == component)
        h[static_cast<std::size_t>(c)][static_cast<std::size_t>(s)] =
            !h[static_cast<std::size_t>(c)][static_cast<std::size_t>(s)];
  return LinkDiagram::from_oriented(t, h, d.free_loops());
}

LinkDiagram smooth(const LinkDiagram& d, int k, int marker, Reorient policy) {
  check_crossing(d, k);
  if (marker != 0 && marker != 1) throw PreconditionError("marker must be 0 or 1");
  const int n = d.crossing_count();
  const std::array<std::array<int, 2>, 2> pairs =
      marker == 0 ? std::array<std::array<int, 2>, 2>{{{0, 1}, {2, 3}}}
                  : std::array<std::array<int, 2>, 2>{{{0, 3}, {1, 2}}};
  const bool consistent = d.is_head(k, pairs[0][0]) != d.is_head(k, pairs[0][1]);
  if (!consistent && policy == Reorient::PreserveAll)
    throw OrientationError("smoothing crossing " + std::to_string(k) + " with marker " +
                           std::to_string(marker) + " breaks the orientation");

  UnionFind uf(d.arc_count());
  for (const auto& pr : pairs) uf.unite(d.arc_at(k, pr[0]), d.arc_at(k, pr[1]));

  std::vector<std::array<int, 4>> slots;
  std::vector<std::array<bool, 4>> heads;
  std::vector<char> present(static_cast<std::size_t>(d.arc_count()), 0);
  for (int c = 0; c < n; ++c) {
    if (c == k) continue;
    std::array<int, 4> s{};
    std::array<bool, 4> h{};
    for (int q = 0; q < 4; ++q) {
      s[static_cast<std::size_t>(q)] = uf.find(d.arc_at(c, q));
      h[static_cast<std::size_t>(q)] = d.is_head(c, q);
      present[static_cast<std::size_t>(s[static_cast<std::size_t>(q)])] = 1;
    }
    slots.push_back(s);
    heads.push_back(h);
  }
  int newLoops = 0;
  {
    std::vector<int> roots;
    for (int q = 0; q < 4; ++q) roots.push_back(uf.find(d.arc_at(k, q)));
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    for (int r : roots) newLoops += present[static_cast<std::size_t>(r)] ? 0 : 1;
  }

  if (!consistent) {
    // Walk the component(s) through k; darts at other crossings get new roles.
    // Arc ends: dart index 4*c+s in the original numbering.
    std::vector<std::array<int, 2>> ends(static_cast<std::size_t>(d.arc_count()), {-1, -1});
    for (int c = 0; c < n; ++c)
      for (int q = 0; q < 4; ++q) {
        auto& e = ends[static_cast<std::size_t>(d.arc_at(c, q))];
        (d.is_head(c, q) ? e[1] : e[0]) = 4 * c + q;  // e[0] tail, e[1] head
      }
    auto pair_of = [&](int slot) {
      for (const auto& pr : pairs) {
        if (pr[0] == slot) return pr[1];
        if (pr[1] == slot) return pr[0];
      }
      return -1;
    };
    auto row = [&](int c) { return static_cast<std::size_t>(c < k ? c : c - 1); };
    std::vector<char> visitedK(4, 0);
    auto walk = [&](int startSlot) {
      int arc = d.arc_at(k, startSlot);
      bool forward = d.is_head(k, startSlot);
      // Begin on the arc at k's startSlot travelling into k.
      const int arc0 = arc;
      const bool forward0 = forward;
      do {
        const int arrive = ends[static_cast<std::size_t>(arc)][forward ? 1 : 0];
        const int c = arrive / 4, s = arrive % 4;
        int leave;
        if (c == k) {
          visitedK[static_cast<std::size_t>(s)] = 1;
          leave = 4 * k + pair_of(s);
          visitedK[static_cast<std::size_t>(pair_of(s))] = 1;
        } else {
          heads[row(c)][static_cast<std::size_t>(s)] = true;
          leave = 4 * c + (s + 2) % 4;
          heads[row(c)][static_cast<std::size_t>((s + 2) % 4)] = false;
        }
        arc = d.arc_at(leave / 4, leave % 4);
        const auto& e = ends[static_cast<std::size_t>(arc)];
        forward = e[0] == leave;
        if (e[0] == e[1]) forward = true;  // never for a well-formed diagram
      } while (!(arc == arc0 && forward == forward0));
    };
    // The incoming under-strand arc keeps its direction.
    walk(0);
    for (int q = 0; q < 4; ++q)
      if (!visitedK[static_cast<std::size_t>(q)]) walk(q);
  }
  return LinkDiagram::from_oriented(slots, heads, d.free_loops() + newLoops);
}

}  // namespace khopos
