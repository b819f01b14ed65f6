#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "khopos/diagram.hpp"
#include "khopos/kh_table.hpp"
#include "khopos/linalg.hpp"

namespace khopos {

class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct KhOptions {
  int workers = 1;
  std::int64_t maxStatesPerLevel = 2'000'000;
  std::int64_t maxNonzeros = 400'000'000;
  /// Multiplies consecutive differentials and checks the product vanishes.
  bool verifySquareZero = false;
};

/// Generator of the chain group: a state and a label per circle.
struct Generator {
  std::vector<int> markers;
  std::vector<int> labels;  // +1 for v+, -1 for v-
};

struct GradedSlice {
  int r = 0;
  int q = 0;
  std::vector<Generator> basis;
};

/// Generators of height r and internal degree q in canonical order.
GradedSlice build_slice(const LinkDiagram& d, int r, int q);

/// Matrix of d^r restricted to degree q: rows index the (r+1, q) slice,
/// columns the (r, q) slice.
SparseExactMatrix differential(const LinkDiagram& d, int r, int q, const KhOptions& opt = {});

std::pair<int, int> to_ij(int r, int q, int nPlus, int nMinus);
std::pair<int, int> to_rq(int i, int j, int nPlus, int nMinus);

KhTable khovanov_full(const LinkDiagram& d, const Ring& ring, const KhOptions& opt = {});
/// Exact groups for i in [iLo, iHi]. The window is left open on a side that
/// reaches the end of the complex.
KhTable khovanov_window(const LinkDiagram& d, int iLo, int iHi, const Ring& ring, const KhOptions& opt = {});

}  // namespace khopos
