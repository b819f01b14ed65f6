#include "khopos/khovanov.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>

namespace khopos {

namespace {

using Mask = std::uint64_t;

struct Binomial {
  Binomial() {
    for (int n = 0; n < 64; ++n) {
      c[n][0] = 1;
      for (int k = 1; k <= n; ++k) c[n][k] = c[n - 1][k - 1] + (k < n ? c[n - 1][k] : 0);
    }
  }
  std::int64_t operator()(int n, int k) const {
    if (k < 0 || n < 0 || k > n) return 0;
    return c[n][k];
  }
  std::int64_t c[64][64]{};
};

const Binomial& binom() {
  static const Binomial b;
  return b;
}

/// Position of a mask among masks of equal popcount in increasing order.
std::int64_t colex_rank(Mask m) {
  std::int64_t r = 0;
  int t = 0;
  while (m) {
    const int p = std::countr_zero(m);
    r += binom()(p, ++t);
    m &= m - 1;
  }
  return r;
}

/// Next larger mask with the same popcount.
Mask next_combination(Mask v) {
  const Mask t = v | (v - 1);
  return (t + 1) | (((~t & -~t) - 1) >> (std::countr_zero(v) + 1));
}

/// All resolutions of one cube height.
struct Level {
  int r = 0;
  int arcs = 0;
  std::vector<Mask> states;            // increasing
  std::vector<std::uint16_t> circles;  // per state, including free loops
  std::vector<std::uint16_t> circleOf; // states.size() * arcs
  const std::uint16_t* circle_of(std::size_t s) const { return circleOf.data() + s * static_cast<std::size_t>(arcs); }
};

class Cube {
 public:
  Cube(const LinkDiagram& d, const KhOptions& opt) : d_(d), opt_(opt), n_(d.crossing_count()) {
    if (n_ > 62) throw ResourceError("more than 62 crossings");
  }

  int crossings() const { return n_; }

  const Level& level(int r) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = levels_.find(r);
    if (it != levels_.end()) return it->second;
    return levels_.emplace(r, build_level(r)).first->second;
  }

  /// Popcount of v- labels for a state with c circles at height r, degree q.
  static int minus_count(int c, int r, int q) {
    const int twice = c + r - q;
    if (twice < 0 || twice % 2 != 0 || twice / 2 > c) return -1;
    return twice / 2;
  }

  static std::vector<std::int64_t> offsets(const Level& L, int q) {
    std::vector<std::int64_t> off(L.states.size() + 1, 0);
    for (std::size_t s = 0; s < L.states.size(); ++s) {
      const int k = minus_count(L.circles[s], L.r, q);
      off[s + 1] = off[s] + (k < 0 ? 0 : binom()(L.circles[s], k));
    }
    return off;
  }

  std::vector<int> degrees() {
    std::set<int> qs;
    for (int r = 0; r <= n_; ++r) {
      const Level& L = level(r);
      for (auto c : L.circles)
        for (int k = 0; k <= c; ++k) qs.insert(c - 2 * k + r);
    }
    return {qs.begin(), qs.end()};
  }

  std::vector<int> degrees(int rLo, int rHi) {
    std::set<int> qs;
    for (int r = std::max(0, rLo); r <= std::min(n_, rHi); ++r) {
      const Level& L = level(r);
      std::set<int> cs(L.circles.begin(), L.circles.end());
      for (int c : cs)
        for (int k = 0; k <= c; ++k) qs.insert(c - 2 * k + r);
    }
    return {qs.begin(), qs.end()};
  }

  std::int64_t dimension(int r, int q) {
    if (r < 0 || r > n_) return 0;
    return offsets(level(r), q).back();
  }

  SparseExactMatrix differential(int r, int q) {
    if (r < 0 || r >= n_) return SparseExactMatrix(dimension(r + 1, q), dimension(r, q));
    const Level& src = level(r);
    const Level& dst = level(r + 1);
    const auto srcOff = offsets(src, q);
    const auto dstOff = offsets(dst, q);
    const std::int64_t cols = srcOff.back(), rows = dstOff.back();
    if (cols * (n_ - r) * 2 > opt_.maxNonzeros)
      throw ResourceError("differential at height " + std::to_string(r) + " exceeds the nonzero budget");
    const int loops = d_.free_loops();
    std::vector<Triplet> t;
    t.reserve(static_cast<std::size_t>(cols) * static_cast<std::size_t>(n_ - r));
    std::vector<int> map(64);
    for (std::size_t si = 0; si < src.states.size(); ++si) {
      const Mask s = src.states[si];
      const int c = src.circles[si];
      const int k = minus_count(c, r, q);
      if (k < 0) continue;
      const auto* circ = src.circle_of(si);
      const int arcCircles = c - loops;
      // representative arc per circle: circles are numbered by smallest arc
      std::vector<int> rep(static_cast<std::size_t>(arcCircles), -1);
      for (int a = 0; a < src.arcs; ++a)
        if (rep[circ[a]] < 0) rep[circ[a]] = a;
      for (int x = 0; x < n_; ++x) {
        const Mask bit = Mask{1} << (n_ - 1 - x);
        if (s & bit) continue;
        const Mask s2 = s | bit;
        const std::size_t ti = static_cast<std::size_t>(colex_rank(s2));
        const int c2 = dst.circles[ti];
        const int k2 = minus_count(c2, r + 1, q);
        if (k2 < 0) continue;
        const auto* circ2 = dst.circle_of(ti);
        const bool negative = std::popcount(s >> (n_ - x)) % 2 != 0;
        const std::int64_t sign = negative ? -1 : 1;
        const int A = circ[d_.arc_at(x, 0)];
        const int B = circ[d_.arc_at(x, 2)];
        const bool merge = A != B;
        for (int i = 0; i < arcCircles; ++i) map[static_cast<std::size_t>(i)] = circ2[rep[static_cast<std::size_t>(i)]];
        for (int i = 0; i < loops; ++i) map[static_cast<std::size_t>(arcCircles + i)] = c2 - loops + i;
        const int X = circ2[d_.arc_at(x, 0)];
        const int Y = circ2[d_.arc_at(x, 1)];
        Mask m = k == 0 ? 0 : (Mask{1} << k) - 1;
        const Mask end = Mask{1} << c;
        for (std::int64_t g = 0; m < end || (c == 0 && g == 0); ++g) {
          auto bit_of = [&](int circle) { return (m >> (c - 1 - circle)) & 1; };
          auto put = [&](Mask& out, int circle2, Mask v) {
            if (v) out |= Mask{1} << (c2 - 1 - circle2);
          };
          Mask base = 0;
          for (int i = 0; i < c; ++i)
            if (i != A && i != B) put(base, map[static_cast<std::size_t>(i)], bit_of(i));
          const std::int64_t col = srcOff[si] + g;
          auto emit = [&](Mask out) {
            t.push_back({dstOff[ti] + colex_rank(out), col, sign});
          };
          if (merge) {
            const Mask la = bit_of(A), lb = bit_of(B);
            if (!(la && lb)) {
              Mask out = base;
              put(out, map[static_cast<std::size_t>(A)], la | lb);
              emit(out);
            }
          } else if (bit_of(A)) {
            Mask out = base;
            put(out, X, 1);
            put(out, Y, 1);
            emit(out);
          } else {
            Mask o1 = base, o2 = base;
            put(o1, Y, 1);
            put(o2, X, 1);
            emit(o1);
            emit(o2);
          }
          if (c == 0 || k == 0) break;
          m = next_combination(m);
        }
      }
    }
    return SparseExactMatrix::from_triplets(rows, cols, std::move(t));
  }

 private:
  Level build_level(int r) const {
    const auto count = binom()(n_, r);
    if (count > opt_.maxStatesPerLevel)
      throw ResourceError("cube height " + std::to_string(r) + " has " + std::to_string(count) +
                          " states, over the budget of " + std::to_string(opt_.maxStatesPerLevel));
    Level L;
    L.r = r;
    L.arcs = d_.arc_count();
    L.states.reserve(static_cast<std::size_t>(count));
    if (r == 0) {
      L.states.push_back(0);
    } else {
      Mask m = (Mask{1} << r) - 1;
      for (std::int64_t i = 0; i < count; ++i) {
        L.states.push_back(m);
        if (i + 1 < count) m = next_combination(m);
      }
    }
    L.circles.resize(L.states.size());
    L.circleOf.resize(L.states.size() * static_cast<std::size_t>(L.arcs));
    std::vector<int> parent(static_cast<std::size_t>(L.arcs));
    auto find = [&](int x) {
      while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      return x;
    };
    auto unite = [&](int a, int b) {
      a = find(a);
      b = find(b);
      if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    };
    for (std::size_t si = 0; si < L.states.size(); ++si) {
      std::iota(parent.begin(), parent.end(), 0);
      const Mask s = L.states[si];
      for (int x = 0; x < n_; ++x) {
        if ((s >> (n_ - 1 - x)) & 1) {
          unite(d_.arc_at(x, 0), d_.arc_at(x, 3));
          unite(d_.arc_at(x, 1), d_.arc_at(x, 2));
        } else {
          unite(d_.arc_at(x, 0), d_.arc_at(x, 1));
          unite(d_.arc_at(x, 2), d_.arc_at(x, 3));
        }
      }
      std::vector<int> id(static_cast<std::size_t>(L.arcs), -1);
      int next = 0;
      auto* out = L.circleOf.data() + si * static_cast<std::size_t>(L.arcs);
      for (int a = 0; a < L.arcs; ++a) {
        const int root = find(a);
        if (id[static_cast<std::size_t>(root)] < 0) id[static_cast<std::size_t>(root)] = next++;
        out[a] = static_cast<std::uint16_t>(id[static_cast<std::size_t>(root)]);
      }
      const int total = next + d_.free_loops();
      if (total > 62) throw ResourceError("more than 62 circles in a resolution");
      L.circles[si] = static_cast<std::uint16_t>(total);
    }
    return L;
  }

  const LinkDiagram& d_;
  KhOptions opt_;
  int n_;
  std::mutex mu_;
  std::map<int, Level> levels_;
};

void run_parallel(std::size_t tasks, int workers, const std::function<void(std::size_t)>& fn) {
  workers = std::max(1, std::min<int>(workers, static_cast<int>(tasks)));
  if (workers == 1) {
    for (std::size_t i = 0; i < tasks; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex errMu;
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < tasks; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(errMu);
          if (!error) error = std::current_exception();
          next = tasks;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

KhTable compute(const LinkDiagram& d, int iLo, int iHi, const Ring& ring, const KhOptions& opt) {
  if (d.empty()) throw PreconditionError("empty diagram");
  if (iLo > iHi) throw PreconditionError("window lower bound exceeds upper bound");
  const int n = d.crossing_count(), np = d.n_plus(), nm = d.n_minus();
  Window w;
  if (iLo > -nm) w.lo = iLo;
  if (iHi < np) w.hi = iHi;
  KhTable table(ring, w);
  const int hLo = std::max(0, iLo + nm), hHi = std::min(n, iHi + nm);
  if (hLo > hHi) return table;

  Cube cube(d, opt);
  for (int r = std::max(0, hLo - 1); r <= std::min(n, hHi + 1); ++r) cube.level(r);
  const auto qs = cube.degrees(hLo - 1, hHi + 1);

  // Tasks: reductions of d^r for r in [hLo-1, hHi] at every degree.
  struct Task {
    int q;
    int r;
  };
  std::vector<Task> tasks;
  for (int q : qs)
    for (int r = hLo - 1; r <= hHi; ++r)
      if (r >= 0 && r < n) tasks.push_back({q, r});
  std::vector<Reduction> results(tasks.size());
  run_parallel(tasks.size(), opt.workers, [&](std::size_t i) {
    const auto m = cube.differential(tasks[i].r, tasks[i].q);
    results[i] = reduce_matrix(m, ring);
  });
  std::map<std::pair<int, int>, const Reduction*> byKey;
  for (std::size_t i = 0; i < tasks.size(); ++i) byKey[{tasks[i].q, tasks[i].r}] = &results[i];

  if (opt.verifySquareZero) {
    for (int q : qs)
      for (int r = std::max(0, hLo - 1); r + 1 < n && r <= hHi; ++r)
        if (!cube.differential(r + 1, q).multiply(cube.differential(r, q)).is_zero())
          throw std::logic_error("d^2 != 0 at height " + std::to_string(r) + ", degree " + std::to_string(q));
  }

  for (int q : qs) {
    for (int r = hLo; r <= hHi; ++r) {
      const std::int64_t dim = cube.dimension(r, q);
      if (dim == 0) continue;
      AbelianGroup g;
      const auto out = byKey.find({q, r});
      const auto in = byKey.find({q, r - 1});
      g.freeRank = dim - (out == byKey.end() ? 0 : out->second->rank) - (in == byKey.end() ? 0 : in->second->rank);
      if (in != byKey.end() && ring.kind == RingKind::Z) g.torsion = in->second->torsion;
      const auto [i, j] = to_ij(r, q, np, nm);
      table.set(i, j, std::move(g));
    }
  }
  return table;
}

}  // namespace

std::pair<int, int> to_ij(int r, int q, int nPlus, int nMinus) { return {r - nMinus, q + nPlus - 2 * nMinus}; }

std::pair<int, int> to_rq(int i, int j, int nPlus, int nMinus) { return {i + nMinus, j - nPlus + 2 * nMinus}; }

GradedSlice build_slice(const LinkDiagram& d, int r, int q) {
  if (r < 0 || r > d.crossing_count()) throw PreconditionError("height out of range");
  KhOptions opt;
  Cube cube(d, opt);
  const Level& L = cube.level(r);
  GradedSlice slice{r, q, {}};
  const int n = d.crossing_count();
  for (std::size_t si = 0; si < L.states.size(); ++si) {
    const int c = L.circles[si];
    const int k = Cube::minus_count(c, r, q);
    if (k < 0) continue;
    std::vector<int> markers(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) markers[static_cast<std::size_t>(x)] = static_cast<int>((L.states[si] >> (n - 1 - x)) & 1);
    Mask m = k == 0 ? 0 : (Mask{1} << k) - 1;
    while (m < (Mask{1} << c) || c == 0) {
      Generator g{markers, {}};
      for (int i = 0; i < c; ++i) g.labels.push_back(((m >> (c - 1 - i)) & 1) ? -1 : 1);
      slice.basis.push_back(std::move(g));
      if (c == 0 || k == 0) break;
      m = next_combination(m);
    }
  }
  return slice;
}

SparseExactMatrix differential(const LinkDiagram& d, int r, int q, const KhOptions& opt) {
  Cube cube(d, opt);
  return cube.differential(r, q);
}

KhTable khovanov_full(const LinkDiagram& d, const Ring& ring, const KhOptions& opt) {
  return compute(d, -d.n_minus(), d.n_plus(), ring, opt);
}

KhTable khovanov_window(const LinkDiagram& d, int iLo, int iHi, const Ring& ring, const KhOptions& opt) {
  return compute(d, iLo, iHi, ring, opt);
}

}  // namespace khopos
