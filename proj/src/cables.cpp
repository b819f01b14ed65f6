#include "khopos/cables.hpp"

#include <string>

namespace khopos {

BraidWord torus_braid(int p, int q) {
  if (p < 2) throw PreconditionError("torus braid needs p >= 2");
  if (q < 0) throw PreconditionError("torus braid needs q >= 0");
  BraidWord b{p, {}};
  for (int k = 0; k < q; ++k)
    for (int i = 1; i < p; ++i) b.letters.push_back(i);
  return b;
}

namespace {

void check(const BraidWord& companion, const CableParams& c) {
  companion.validate();
  if (c.p < 2) throw PreconditionError("cable needs p >= 2");
  if (c.m < 0 || c.m > c.p - 1) throw PreconditionError("cable needs 0 <= m <= p-1");
  if (companion.closure_components() != 1) throw PreconditionError("companion closure is not a knot");
}

}  // namespace

int cable_twist_count(const BraidWord& companion, const CableParams& c) {
  return c.p * companion.exponent_sum() - c.q;
}

BraidWord cable_braid(const BraidWord& companion, const CableParams& c) {
  check(companion, c);
  const int p = c.p;
  BraidWord out{companion.strands * p, {}};
  // Bundle crossing: row a moves strand o+p+a+1 across the first bundle.
  for (int letter : companion.letters) {
    const int sign = letter > 0 ? 1 : -1;
    const int o = (std::abs(letter) - 1) * p;
    for (int a = 0; a < p; ++a)
      for (int g = o + p + a; g >= o + a + 1; --g) out.letters.push_back(sign * g);
  }
  const int n = cable_twist_count(companion, c);
  for (int k = 0; k < std::abs(n); ++k) {
    if (n > 0) {
      for (int g = 1; g <= p - 1; ++g) out.letters.push_back(-g);
    } else {
      for (int g = p - 1; g >= 1; --g) out.letters.push_back(g);
    }
  }
  for (int g = 1; g <= c.m; ++g) out.letters.push_back(-g);

  const int w = companion.exponent_sum();
  const int expected = p * p * w - n * (p - 1) - c.m;
  if (out.exponent_sum() != expected)
    throw std::logic_error("cable writhe " + std::to_string(out.exponent_sum()) + " != " + std::to_string(expected));
  return out;
}

int schubert_chi(int chiK, int p, int q) { return p * chiK - q * (p - 1); }

int predicted_kh1_grading(int chiK, const CableParams& c) { return 2 - c.p * chiK + c.q * (c.p - 1) - c.m; }

CableFlags cable_condition_report(int genus, int writhe, int p, int q) {
  return {q >= p * (2 * genus - 1), q >= p * writhe, q >= p && p >= 2};
}

BraidWord beta_n(int n) {
  if (n < 1) throw PreconditionError("beta_n needs n >= 1");
  BraidWord b{4, {}};
  for (int k = 0; k < 2 * n + 1; ++k) b.letters.insert(b.letters.end(), {2, 1, 3, 2});
  b.letters.insert(b.letters.end(), {-1, 2, 1, 1, 2});
  return b;
}

}  // namespace khopos
