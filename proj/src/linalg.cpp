#include "khopos/linalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "khopos/diagram.hpp"

namespace khopos {

// ---------------------------------------------------------------------------
// Ring, AbelianGroup

namespace {

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

Ring Ring::mod(std::int64_t p) {
  if (!is_prime(p) || p >= (std::int64_t{1} << 31))
    throw PreconditionError("Z/p needs a prime p below 2^31, got " + std::to_string(p));
  return {RingKind::Zp, p};
}

Ring Ring::parse(const std::string& text) {
  if (text == "Z") return integers();
  if (text == "Q") return rationals();
  std::string digits;
  if (text.rfind("Z/", 0) == 0) digits = text.substr(2);
  else if (text.rfind("Z", 0) == 0) digits = text.substr(1);
  else if (text.rfind("F", 0) == 0) digits = text.substr(1);
  if (!digits.empty() && std::all_of(digits.begin(), digits.end(), ::isdigit) && digits.size() < 12)
    return mod(std::stoll(digits));
  throw PreconditionError("unknown coefficient ring '" + text + "'");
}

std::string Ring::name() const {
  switch (kind) {
    case RingKind::Z: return "Z";
    case RingKind::Q: return "Q";
    case RingKind::Zp: return "Z/" + std::to_string(p);
  }
  return "?";
}

std::string AbelianGroup::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  if (freeRank > 0) {
    os << "Z";
    if (freeRank > 1) os << '^' << freeRank;
    first = false;
  }
  for (std::size_t i = 0; i < torsion.size();) {
    std::size_t j = i;
    while (j < torsion.size() && torsion[j] == torsion[i]) ++j;
    if (!first) os << '+';
    first = false;
    os << "Z/" << torsion[i].get_str();
    if (j - i > 1) os << '^' << (j - i);
    i = j;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// SparseExactMatrix

SparseExactMatrix SparseExactMatrix::from_triplets(std::int64_t rows, std::int64_t cols,
                                                   std::vector<Triplet> t) {
  for (const auto& e : t)
    if (e.row < 0 || e.row >= rows || e.col < 0 || e.col >= cols)
      throw PreconditionError("matrix entry out of bounds");
  std::sort(t.begin(), t.end(), [](const Triplet& a, const Triplet& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  SparseExactMatrix m(rows, cols);
  for (std::size_t i = 0; i < t.size();) {
    std::size_t j = i;
    std::int64_t sum = 0;
    while (j < t.size() && t[j].row == t[i].row && t[j].col == t[i].col) {
      if (__builtin_add_overflow(sum, t[j].value, &sum)) throw std::overflow_error("matrix entry overflow");
      ++j;
    }
    if (sum != 0) {
      m.colIdx_.push_back(t[i].col);
      m.vals_.push_back(sum);
      ++m.rowPtr_[static_cast<std::size_t>(t[i].row) + 1];
    }
    i = j;
  }
  for (std::size_t r = 0; r < static_cast<std::size_t>(rows); ++r) m.rowPtr_[r + 1] += m.rowPtr_[r];
  return m;
}

SparseExactMatrix SparseExactMatrix::from_dense(const std::vector<std::vector<std::int64_t>>& a) {
  const auto rows = static_cast<std::int64_t>(a.size());
  const auto cols = rows == 0 ? std::int64_t{0} : static_cast<std::int64_t>(a[0].size());
  std::vector<Triplet> t;
  for (std::int64_t r = 0; r < rows; ++r) {
    if (static_cast<std::int64_t>(a[static_cast<std::size_t>(r)].size()) != cols)
      throw PreconditionError("ragged dense matrix");
    for (std::int64_t c = 0; c < cols; ++c)
      if (const auto v = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]; v != 0) t.push_back({r, c, v});
  }
  return from_triplets(rows, cols, std::move(t));
}

SparseExactMatrix SparseExactMatrix::identity(std::int64_t n) {
  std::vector<Triplet> t;
  for (std::int64_t i = 0; i < n; ++i) t.push_back({i, i, 1});
  return from_triplets(n, n, std::move(t));
}

std::int64_t SparseExactMatrix::at(std::int64_t r, std::int64_t c) const {
  const auto b = colIdx_.begin() + rowPtr_[static_cast<std::size_t>(r)];
  const auto e = colIdx_.begin() + rowPtr_[static_cast<std::size_t>(r) + 1];
  const auto it = std::lower_bound(b, e, c);
  return it != e && *it == c ? vals_[static_cast<std::size_t>(it - colIdx_.begin())] : 0;
}

SparseExactMatrix SparseExactMatrix::transpose() const {
  std::vector<Triplet> t;
  t.reserve(vals_.size());
  for (std::int64_t r = 0; r < rows_; ++r)
    for (auto k = rowPtr_[static_cast<std::size_t>(r)]; k < rowPtr_[static_cast<std::size_t>(r) + 1]; ++k)
      t.push_back({colIdx_[static_cast<std::size_t>(k)], r, vals_[static_cast<std::size_t>(k)]});
  return from_triplets(cols_, rows_, std::move(t));
}

SparseExactMatrix SparseExactMatrix::multiply(const SparseExactMatrix& o) const {
  if (cols_ != o.rows_) throw PreconditionError("matrix dimensions do not compose");
  std::vector<Triplet> t;
  std::vector<std::int64_t> acc(static_cast<std::size_t>(o.cols_), 0);
  std::vector<std::int64_t> touched;
  for (std::int64_t r = 0; r < rows_; ++r) {
    touched.clear();
    for (auto k = rowPtr_[static_cast<std::size_t>(r)]; k < rowPtr_[static_cast<std::size_t>(r) + 1]; ++k) {
      const auto mid = colIdx_[static_cast<std::size_t>(k)];
      const auto a = vals_[static_cast<std::size_t>(k)];
      for (auto l = o.rowPtr_[static_cast<std::size_t>(mid)]; l < o.rowPtr_[static_cast<std::size_t>(mid) + 1]; ++l) {
        const auto c = static_cast<std::size_t>(o.colIdx_[static_cast<std::size_t>(l)]);
        std::int64_t prod = 0;
        if (__builtin_mul_overflow(a, o.vals_[static_cast<std::size_t>(l)], &prod) ||
            __builtin_add_overflow(acc[c], prod, &acc[c]))
          throw std::overflow_error("matrix product overflow");
        touched.push_back(static_cast<std::int64_t>(c));
      }
    }
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    for (auto c : touched) {
      if (acc[static_cast<std::size_t>(c)] != 0) t.push_back({r, c, acc[static_cast<std::size_t>(c)]});
      acc[static_cast<std::size_t>(c)] = 0;
    }
  }
  return from_triplets(rows_, o.cols_, std::move(t));
}

std::vector<std::vector<std::int64_t>> SparseExactMatrix::to_dense() const {
  std::vector<std::vector<std::int64_t>> a(static_cast<std::size_t>(rows_),
                                           std::vector<std::int64_t>(static_cast<std::size_t>(cols_), 0));
  for (std::int64_t r = 0; r < rows_; ++r)
    for (auto k = rowPtr_[static_cast<std::size_t>(r)]; k < rowPtr_[static_cast<std::size_t>(r) + 1]; ++k)
      a[static_cast<std::size_t>(r)][static_cast<std::size_t>(colIdx_[static_cast<std::size_t>(k)])] =
          vals_[static_cast<std::size_t>(k)];
  return a;
}

std::string SparseExactMatrix::dump() const {
  std::ostringstream os;
  os << rows_ << ' ' << cols_ << '\n';
  for (std::int64_t r = 0; r < rows_; ++r)
    for (auto k = rowPtr_[static_cast<std::size_t>(r)]; k < rowPtr_[static_cast<std::size_t>(r) + 1]; ++k)
      os << r << ' ' << colIdx_[static_cast<std::size_t>(k)] << ' ' << vals_[static_cast<std::size_t>(k)] << '\n';
  return os.str();
}

// ---------------------------------------------------------------------------
// Elimination

namespace {

struct Overflow {};

template <class T>
struct Entry {
  int col;
  T val;
};

template <class T>
using Row = std::vector<Entry<T>>;

bool is_unit(std::int64_t v) { return v == 1 || v == -1; }
bool is_unit(const mpz_class& v) { return v == 1 || v == -1; }
bool is_zero(std::int64_t v) { return v == 0; }
bool is_zero(const mpz_class& v) { return sgn(v) == 0; }

// Row update policies: rowJ <- combination of rowJ and pivot row that clears
// the pivot column. `a` is rowJ's entry in the pivot column.

/// Integer elimination with a unit pivot: rowJ -= a * piv * rowP.
template <class T>
struct UnitPolicy {
  static bool accept(const T& v) { return is_unit(v); }
  static T factor(const T& a, const T& piv) { return piv == 1 ? a : T(-a); }
  static T scale_j(const T&) { return T(1); }
  static T combine(const T& vj, const T& vp, const T& f) {
    if constexpr (std::is_same_v<T, std::int64_t>) {
      std::int64_t prod = 0, out = 0;
      if (__builtin_mul_overflow(f, vp, &prod) || __builtin_sub_overflow(vj, prod, &out)) throw Overflow{};
      return out;
    } else {
      return vj - f * vp;
    }
  }
  static T only_p(const T& vp, const T& f) { return combine(T(0), vp, f); }
  static void normalize(Row<T>&) {}
};

struct ModPolicy {
  static inline thread_local std::int64_t p = 2;
  static std::int64_t inv(std::int64_t a) {
    std::int64_t r = 1, b = a % p, e = p - 2;
    while (e > 0) {
      if (e & 1) r = static_cast<std::int64_t>(static_cast<__int128>(r) * b % p);
      b = static_cast<std::int64_t>(static_cast<__int128>(b) * b % p);
      e >>= 1;
    }
    return r;
  }
  static bool accept(std::int64_t v) { return v != 0; }
  static std::int64_t factor(std::int64_t a, std::int64_t piv) {
    return static_cast<std::int64_t>(static_cast<__int128>(a) * inv(piv) % p);
  }
  static std::int64_t combine(std::int64_t vj, std::int64_t vp, std::int64_t f) {
    auto r = static_cast<std::int64_t>((static_cast<__int128>(vj) - static_cast<__int128>(f) * vp) % p);
    return r < 0 ? r + p : r;
  }
  static std::int64_t only_p(std::int64_t vp, std::int64_t f) { return combine(0, vp, f); }
  static void normalize(Row<std::int64_t>&) {}
};

/// Fraction-free elimination over Z for rank over Q:
/// rowJ <- piv * rowJ - a * rowP, then divided by its content.
struct FracFreePolicy {
  static inline thread_local mpz_class pivot;
  static bool accept(const mpz_class& v) { return sgn(v) != 0; }
  static mpz_class factor(const mpz_class& a, const mpz_class& piv) {
    pivot = piv;
    return a;
  }
  static mpz_class combine(const mpz_class& vj, const mpz_class& vp, const mpz_class& f) {
    return pivot * vj - f * vp;
  }
  static mpz_class only_p(const mpz_class& vp, const mpz_class& f) { return -f * vp; }
  static void normalize(Row<mpz_class>& row) {
    mpz_class g = 0;
    for (const auto& e : row) {
      g = gcd(g, e.val);
      if (g == 1) return;
    }
    if (g > 1)
      for (auto& e : row) e.val /= g;
  }
};

/// Sparse elimination restricted to pivots accepted by the policy. Pivot
/// columns are taken in order of fewest entries, and within a column the
/// shortest row with an acceptable entry.
template <class T, class Policy>
class Eliminator {
 public:
  Eliminator(std::vector<Row<T>> rows, int cols)
      : rows_(std::move(rows)), colRows_(static_cast<std::size_t>(cols)), colCount_(static_cast<std::size_t>(cols), 0),
        colActive_(static_cast<std::size_t>(cols), 1), touched_(static_cast<std::size_t>(cols), 0) {
    for (std::size_t r = 0; r < rows_.size(); ++r)
      for (const auto& e : rows_[r]) {
        colRows_[static_cast<std::size_t>(e.col)].push_back(static_cast<int>(r));
        ++colCount_[static_cast<std::size_t>(e.col)];
      }
    rowActive_.assign(rows_.size(), 1);
    for (int c = 0; c < cols; ++c) enqueue(c);
  }

  std::int64_t run() {
    std::int64_t rank = 0;
    while (lowest_ < buckets_.size()) {
      auto& bucket = buckets_[lowest_];
      if (bucket.empty()) {
        ++lowest_;
        continue;
      }
      const int c = bucket.back();
      bucket.pop_back();
      const auto cc = static_cast<std::size_t>(c);
      if (!colActive_[cc] || colCount_[cc] != static_cast<std::int64_t>(lowest_)) continue;
      const int p = choose_row(c);
      if (p < 0) continue;  // stuck until an acceptable value appears
      eliminate(p, c);
      ++rank;
    }
    return rank;
  }

  /// Remaining nonzero rows.
  std::vector<Row<T>> residual() {
    std::vector<Row<T>> out;
    for (std::size_t r = 0; r < rows_.size(); ++r)
      if (rowActive_[r] && !rows_[r].empty()) out.push_back(std::move(rows_[r]));
    return out;
  }

 private:
  static const Entry<T>* find(const Row<T>& row, int c) {
    auto it = std::lower_bound(row.begin(), row.end(), c, [](const Entry<T>& e, int col) { return e.col < col; });
    return it != row.end() && it->col == c ? &*it : nullptr;
  }

  int choose_row(int c) {
    auto& list = colRows_[static_cast<std::size_t>(c)];
    std::vector<int> live;
    int best = -1;
    std::size_t bestLen = 0;
    for (int r : list) {
      if (!rowActive_[static_cast<std::size_t>(r)]) continue;
      const auto* e = find(rows_[static_cast<std::size_t>(r)], c);
      if (!e) continue;
      if (!live.empty() && live.back() == r) continue;
      live.push_back(r);
      if (Policy::accept(e->val)) {
        const auto len = rows_[static_cast<std::size_t>(r)].size();
        if (best < 0 || len < bestLen) {
          best = r;
          bestLen = len;
        }
      }
    }
    std::sort(live.begin(), live.end());
    live.erase(std::unique(live.begin(), live.end()), live.end());
    list = std::move(live);
    return best;
  }

  void enqueue(int c) {
    const auto count = colCount_[static_cast<std::size_t>(c)];
    if (count <= 0 || !colActive_[static_cast<std::size_t>(c)]) return;
    const auto k = static_cast<std::size_t>(count);
    if (k >= buckets_.size()) buckets_.resize(k + 1);
    buckets_[k].push_back(c);
    lowest_ = std::min(lowest_, k);
  }

  void touch(int c) {
    auto& t = touched_[static_cast<std::size_t>(c)];
    if (t) return;
    t = 1;
    touchList_.push_back(c);
  }

  void flush_touches() {
    for (int c : touchList_) {
      touched_[static_cast<std::size_t>(c)] = 0;
      enqueue(c);
    }
    touchList_.clear();
  }

  void eliminate(int p, int c) {
    const Row<T>& prow = rows_[static_cast<std::size_t>(p)];
    const T piv = find(prow, c)->val;
    const std::vector<int> targets = colRows_[static_cast<std::size_t>(c)];
    for (int j : targets) {
      if (j == p) continue;
      Row<T>& jrow = rows_[static_cast<std::size_t>(j)];
      const auto* e = find(jrow, c);
      if (!e) continue;
      const T f = Policy::factor(e->val, piv);
      Row<T>& out = scratch_;
      out.clear();
      out.reserve(jrow.size() + prow.size());
      std::size_t a = 0, b = 0;
      while (a < jrow.size() || b < prow.size()) {
        if (b == prow.size() || (a < jrow.size() && jrow[a].col < prow[b].col)) {
          T v = Policy::combine(jrow[a].val, T(0), f);
          if (!is_zero(v)) {
            out.push_back({jrow[a].col, std::move(v)});
          } else {
            --colCount_[static_cast<std::size_t>(jrow[a].col)];
            touch(jrow[a].col);
          }
          ++a;
        } else if (a == jrow.size() || prow[b].col < jrow[a].col) {
          const int col = prow[b].col;
          out.push_back({col, Policy::only_p(prow[b].val, f)});
          colRows_[static_cast<std::size_t>(col)].push_back(j);
          ++colCount_[static_cast<std::size_t>(col)];
          touch(col);
          ++b;
        } else {
          const int col = jrow[a].col;
          T v = Policy::combine(jrow[a].val, prow[b].val, f);
          if (is_zero(v)) {
            --colCount_[static_cast<std::size_t>(col)];
            if (col != c) touch(col);
          } else {
            if (Policy::accept(v) && !Policy::accept(jrow[a].val)) touch(col);
            out.push_back({col, std::move(v)});
          }
          ++a;
          ++b;
        }
      }
      Policy::normalize(out);
      jrow.swap(out);
    }
    for (const auto& e : prow) {
      --colCount_[static_cast<std::size_t>(e.col)];
      if (e.col != c) touch(e.col);
    }
    rowActive_[static_cast<std::size_t>(p)] = 0;
    colActive_[static_cast<std::size_t>(c)] = 0;
    std::vector<int>().swap(colRows_[static_cast<std::size_t>(c)]);
    Row<T>().swap(rows_[static_cast<std::size_t>(p)]);
    flush_touches();
  }

  std::vector<Row<T>> rows_;
  std::vector<std::vector<int>> colRows_;
  std::vector<std::int64_t> colCount_;
  std::vector<char> colActive_;
  std::vector<char> rowActive_;
  std::vector<char> touched_;
  std::vector<int> touchList_;
  std::vector<std::vector<int>> buckets_;
  std::size_t lowest_ = 0;
  Row<T> scratch_;
};

template <class T>
std::vector<Row<T>> rows_of(const SparseExactMatrix& a) {
  std::vector<Row<T>> rows(static_cast<std::size_t>(a.rows()));
  for (std::int64_t r = 0; r < a.rows(); ++r)
    for (auto k = a.row_ptr()[static_cast<std::size_t>(r)]; k < a.row_ptr()[static_cast<std::size_t>(r) + 1]; ++k)
      rows[static_cast<std::size_t>(r)].push_back(
          {static_cast<int>(a.col_idx()[static_cast<std::size_t>(k)]), T(a.values()[static_cast<std::size_t>(k)])});
  return rows;
}

std::vector<Row<mpz_class>> promote(std::vector<Row<std::int64_t>> rows) {
  std::vector<Row<mpz_class>> out(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (const auto& e : rows[r]) out[r].push_back({e.col, mpz_class(static_cast<long>(e.val))});
  return out;
}

/// Unit-pivot phase: returns its rank and leaves the residual rows (mpz).
std::int64_t unit_phase(const SparseExactMatrix& a, std::vector<Row<mpz_class>>& residual) {
  const int cols = static_cast<int>(a.cols());
  try {
    Eliminator<std::int64_t, UnitPolicy<std::int64_t>> e(rows_of<std::int64_t>(a), cols);
    const auto rank = e.run();
    residual = promote(e.residual());
    return rank;
  } catch (const Overflow&) {
    Eliminator<mpz_class, UnitPolicy<mpz_class>> e(rows_of<mpz_class>(a), cols);
    const auto rank = e.run();
    residual = e.residual();
    return rank;
  }
}

int max_col(const std::vector<Row<mpz_class>>& rows) {
  int m = -1;
  for (const auto& r : rows)
    if (!r.empty()) m = std::max(m, r.back().col);
  return m + 1;
}

/// Smith form diagonal of a small residual by repeated division with
/// remainder around the smallest entry.
std::vector<mpz_class> residual_snf(std::vector<Row<mpz_class>> rows) {
  std::vector<mpz_class> diag;
  auto entry = [](Row<mpz_class>& row, int c) -> Entry<mpz_class>* {
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const Entry<mpz_class>& e, int col) { return e.col < col; });
    return it != row.end() && it->col == c ? &*it : nullptr;
  };
  auto axpy = [](Row<mpz_class>& dst, const Row<mpz_class>& src, const mpz_class& q) {
    Row<mpz_class> out;
    std::size_t a = 0, b = 0;
    while (a < dst.size() || b < src.size()) {
      if (b == src.size() || (a < dst.size() && dst[a].col < src[b].col)) {
        out.push_back(std::move(dst[a++]));
      } else if (a == dst.size() || src[b].col < dst[a].col) {
        out.push_back({src[b].col, -q * src[b].val});
        ++b;
      } else {
        mpz_class v = dst[a].val - q * src[b].val;
        if (sgn(v) != 0) out.push_back({dst[a].col, std::move(v)});
        ++a;
        ++b;
      }
    }
    dst = std::move(out);
  };
  while (true) {
    int pr = -1, pc = -1;
    mpz_class best;
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (const auto& e : rows[r])
        if (pr < 0 || mpz_cmpabs(e.val.get_mpz_t(), best.get_mpz_t()) < 0 ||
            (mpz_cmpabs(e.val.get_mpz_t(), best.get_mpz_t()) == 0 && rows[r].size() < rows[static_cast<std::size_t>(pr)].size())) {
          pr = static_cast<int>(r);
          pc = e.col;
          best = e.val;
        }
    if (pr < 0) break;
    bool done = false;
    while (!done) {
      done = true;
      const mpz_class piv = entry(rows[static_cast<std::size_t>(pr)], pc)->val;
      // Clear the pivot column with row operations.
      for (std::size_t j = 0; j < rows.size() && done; ++j) {
        if (static_cast<int>(j) == pr) continue;
        auto* e = entry(rows[j], pc);
        if (!e) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), e->val.get_mpz_t(), piv.get_mpz_t());
        axpy(rows[j], rows[static_cast<std::size_t>(pr)], q);
        if (entry(rows[j], pc)) {
          pr = static_cast<int>(j);
          done = false;
        }
      }
      if (!done) continue;
      // Column clear; column operations now only touch the pivot row.
      auto& prow = rows[static_cast<std::size_t>(pr)];
      Row<mpz_class> kept;
      int newPc = -1;
      for (auto& e : prow) {
        if (e.col == pc) {
          kept.push_back(std::move(e));
          continue;
        }
        mpz_class rem;
        mpz_fdiv_r(rem.get_mpz_t(), e.val.get_mpz_t(), piv.get_mpz_t());
        if (sgn(rem) != 0) {
          kept.push_back({e.col, rem});
          if (newPc < 0) newPc = e.col;
        }
      }
      prow = std::move(kept);
      if (newPc >= 0) {
        pc = newPc;
        done = false;
      }
    }
    auto& prow = rows[static_cast<std::size_t>(pr)];
    diag.push_back(abs(prow.front().val));
    prow.clear();
  }
  return diag;
}

}  // namespace

std::vector<mpz_class> invariant_factors(std::vector<mpz_class> d) {
  for (auto& x : d) x = abs(x);
  d.erase(std::remove_if(d.begin(), d.end(), [](const mpz_class& x) { return sgn(x) == 0; }), d.end());
  // Units contribute nothing to the reordering; skip them for speed.
  const auto units = std::count(d.begin(), d.end(), mpz_class(1));
  d.erase(std::remove(d.begin(), d.end(), mpz_class(1)), d.end());
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      mpz_class g = gcd(d[i], d[j]);
      mpz_class l = lcm(d[i], d[j]);
      d[i] = g;
      d[j] = l;
    }
  std::vector<mpz_class> out(static_cast<std::size_t>(units), mpz_class(1));
  out.insert(out.end(), d.begin(), d.end());
  return out;
}

Reduction reduce_matrix(const SparseExactMatrix& a, const Ring& ring) {
  Reduction red;
  if (ring.kind == RingKind::Zp) {
    ModPolicy::p = ring.p;
    auto rows = rows_of<std::int64_t>(a);
    for (auto& row : rows) {
      Row<std::int64_t> kept;
      for (auto& e : row) {
        const auto v = ((e.val % ring.p) + ring.p) % ring.p;
        if (v != 0) kept.push_back({e.col, v});
      }
      row = std::move(kept);
    }
    Eliminator<std::int64_t, ModPolicy> e(std::move(rows), static_cast<int>(a.cols()));
    red.rank = e.run();
    return red;
  }
  std::vector<Row<mpz_class>> residual;
  red.rank = unit_phase(a, residual);
  if (residual.empty()) return red;
  if (ring.kind == RingKind::Q) {
    const int cols = max_col(residual);
    Eliminator<mpz_class, FracFreePolicy> e(std::move(residual), cols);
    red.rank += e.run();
    return red;
  }
  const auto diag = residual_snf(std::move(residual));
  red.rank += static_cast<std::int64_t>(diag.size());
  for (auto& f : invariant_factors(diag))
    if (f > 1) red.torsion.push_back(f);
  return red;
}

std::vector<mpz_class> smith_normal_form(const SparseExactMatrix& a) {
  const Reduction r = reduce_matrix(a, Ring::integers());
  std::vector<mpz_class> out(static_cast<std::size_t>(r.rank) - r.torsion.size(), mpz_class(1));
  out.insert(out.end(), r.torsion.begin(), r.torsion.end());
  return out;
}

std::int64_t rank_over_field(const SparseExactMatrix& a, const Ring& field) {
  return reduce_matrix(a, field.kind == RingKind::Z ? Ring::rationals() : field).rank;
}

AbelianGroup homology_of_pair(const SparseExactMatrix& dIn, const SparseExactMatrix& dOut, const Ring& ring) {
  if (dIn.rows() != dOut.cols()) throw PreconditionError("differentials do not compose");
  if (!dOut.multiply(dIn).is_zero()) throw PreconditionError("dOut * dIn is not zero");
  const Reduction in = reduce_matrix(dIn, ring);
  const Reduction out = reduce_matrix(dOut, ring);
  AbelianGroup g;
  g.freeRank = dIn.rows() - out.rank - in.rank;
  if (ring.kind == RingKind::Z) g.torsion = in.torsion;
  return g;
}

}  // namespace khopos
