#include "khopos/homfly.hpp"

#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "khopos/khovanov.hpp"

namespace khopos {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("polynomial coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("polynomial coefficient overflow");
  return r;
}

}  // namespace

BivariatePolynomial BivariatePolynomial::monomial(std::int64_t c, int ex, int ey, std::string x, std::string y) {
  BivariatePolynomial p(std::move(x), std::move(y));
  p.add_term(c, ex, ey);
  return p;
}

std::int64_t BivariatePolynomial::coeff(int ex, int ey) const {
  auto it = terms_.find({ex, ey});
  return it == terms_.end() ? 0 : it->second;
}

void BivariatePolynomial::add_term(std::int64_t c, int ex, int ey) {
  if (c == 0) return;
  auto& slot = terms_[{ex, ey}];
  slot = checked_add(slot, c);
  if (slot == 0) terms_.erase({ex, ey});
}

void BivariatePolynomial::check_vars(const BivariatePolynomial& o) const {
  if (x_ != o.x_ || y_ != o.y_) throw PreconditionError("polynomial variables differ");
}

BivariatePolynomial BivariatePolynomial::operator+(const BivariatePolynomial& o) const {
  check_vars(o);
  BivariatePolynomial r = *this;
  for (const auto& [k, c] : o.terms_) r.add_term(c, k.first, k.second);
  return r;
}

BivariatePolynomial BivariatePolynomial::operator-(const BivariatePolynomial& o) const {
  check_vars(o);
  BivariatePolynomial r = *this;
  for (const auto& [k, c] : o.terms_) r.add_term(-c, k.first, k.second);
  return r;
}

BivariatePolynomial BivariatePolynomial::operator*(const BivariatePolynomial& o) const {
  check_vars(o);
  BivariatePolynomial r(x_, y_);
  for (const auto& [a, ca] : terms_)
    for (const auto& [b, cb] : o.terms_) r.add_term(checked_mul(ca, cb), a.first + b.first, a.second + b.second);
  return r;
}

BivariatePolynomial BivariatePolynomial::scaled(std::int64_t c, int ex, int ey) const {
  BivariatePolynomial r(x_, y_);
  for (const auto& [k, v] : terms_) r.add_term(checked_mul(v, c), k.first + ex, k.second + ey);
  return r;
}

BivariatePolynomial BivariatePolynomial::mirrored() const {
  BivariatePolynomial r(x_, y_);
  for (const auto& [k, v] : terms_) r.add_term(k.second % 2 == 0 ? v : -v, -k.first, k.second);
  return r;
}

std::map<int, std::int64_t> BivariatePolynomial::slice(int ey) const {
  std::map<int, std::int64_t> out;
  for (const auto& [k, v] : terms_)
    if (k.second == ey) out[k.first] = v;
  return out;
}

std::string BivariatePolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::map<std::pair<int, int>, std::int64_t> ordered;  // (ey, ex)
  for (const auto& [k, v] : terms_) ordered[{k.second, k.first}] = v;
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : ordered) {
    const auto [ey, ex] = k;
    std::int64_t mag = v < 0 ? -v : v;
    if (first) {
      if (v < 0) os << '-';
    } else {
      os << (v < 0 ? " - " : " + ");
    }
    first = false;
    std::string mono;
    auto var = [&](const std::string& name, int e) {
      if (e == 0) return;
      if (!mono.empty()) mono += '*';
      mono += name;
      if (e != 1) mono += '^' + std::to_string(e);
    };
    var(x_, ex);
    var(y_, ey);
    if (mono.empty()) {
      os << mag;
    } else {
      if (mag != 1) os << mag << '*';
      os << mono;
    }
  }
  return os.str();
}

namespace {

std::string key_of(const LinkDiagram& d) {
  std::string k;
  k.reserve(static_cast<std::size_t>(d.crossing_count()) * 20 + 8);
  for (const auto& x : d.crossings()) {
    for (int a : x.arcs) {
      k += std::to_string(a);
      k += ',';
    }
    k += x.sign > 0 ? '+' : '-';
  }
  k += '|';
  k += std::to_string(d.free_loops());
  return k;
}

class SkeinTree {
 public:
  explicit SkeinTree(std::int64_t maxNodes) : maxNodes_(maxNodes) {
    delta_ = BivariatePolynomial::monomial(1, -1, -1) - BivariatePolynomial::monomial(1, 1, -1);
  }

  BivariatePolynomial eval(const LinkDiagram& d) {
    const std::string key = key_of(d);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    if (++nodes_ > maxNodes_) throw ResourceError("HOMFLYPT resolving tree exceeds its node budget");
    BivariatePolynomial result;
    const int c = first_ascending(d);
    if (c < 0) {
      result = BivariatePolynomial::monomial(1, 0, 0);
      for (int k = 1; k < d.component_count(); ++k) result = result * delta_;
    } else {
      const int sign = d.crossings()[static_cast<std::size_t>(c)].sign;
      const BivariatePolynomial switched = eval(switch_crossing(d, c));
      const BivariatePolynomial smoothed = eval(smooth(d, c, sign > 0 ? 0 : 1, Reorient::PreserveAll));
      if (sign > 0) {
        result = switched.scaled(1, 2, 0) + smoothed.scaled(1, 1, 1);
      } else {
        result = switched.scaled(1, -2, 0) - smoothed.scaled(1, -1, 1);
      }
    }
    memo_.emplace(key, result);
    return result;
  }

 private:
  /// First crossing met from below when walking the components in order from
  /// their smallest arcs; -1 when the diagram is descending.
  static int first_ascending(const LinkDiagram& d) {
    std::vector<char> seen(static_cast<std::size_t>(d.crossing_count()), 0);
    std::vector<int> headCrossing(static_cast<std::size_t>(d.arc_count()), -1), headSlot(static_cast<std::size_t>(d.arc_count()), -1);
    for (int c = 0; c < d.crossing_count(); ++c)
      for (int s = 0; s < 4; ++s)
        if (d.is_head(c, s)) {
          headCrossing[static_cast<std::size_t>(d.arc_at(c, s))] = c;
          headSlot[static_cast<std::size_t>(d.arc_at(c, s))] = s;
        }
    for (const auto& comp : d.components()) {
      for (int a : comp) {
        const int c = headCrossing[static_cast<std::size_t>(a)];
        if (seen[static_cast<std::size_t>(c)]) continue;
        seen[static_cast<std::size_t>(c)] = 1;
        if (headSlot[static_cast<std::size_t>(a)] == 0) return c;
      }
    }
    return -1;
  }

  std::int64_t maxNodes_;
  std::int64_t nodes_ = 0;
  BivariatePolynomial delta_;
  std::unordered_map<std::string, BivariatePolynomial> memo_;
};

}  // namespace

BivariatePolynomial homfly(const LinkDiagram& d, std::int64_t maxNodes) {
  if (d.empty()) throw PreconditionError("empty diagram");
  SkeinTree tree(maxNodes);
  return tree.eval(d);
}

BivariatePolynomial ito_normalize(const BivariatePolynomial& p, int chi, int components) {
  if (components < 1) throw PreconditionError("component count must be positive");
  BivariatePolynomial h("a", "z");
  const int base = 1 - chi;
  for (const auto& [k, c] : p.terms()) {
    const int shift = k.first - base;
    if (shift < 0 || shift % 2 != 0)
      throw PreconditionError("v-exponent " + std::to_string(k.first) + " is incompatible with chi = " + std::to_string(chi));
    const int e = shift / 2;
    h.add_term(e % 2 == 0 ? c : -c, e, k.second + components - 1);
  }
  return h;
}

BivariatePolynomial ito_recursion(const BivariatePolynomial& hm2, const BivariatePolynomial& hm1, bool nOdd) {
  return nOdd ? hm2 + hm1.scaled(1, 0, 2) : hm2 + hm1;
}

HomflyVerdict braid_positivity_obstruction(const BivariatePolynomial& h) {
  for (const auto& kv : h.terms())
    if (kv.second < 0) return HomflyVerdict::Obstructed;
  return HomflyVerdict::Inconclusive;
}

}  // namespace khopos
