#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace khopos {

enum class RingKind { Z, Q, Zp };

struct Ring {
  RingKind kind = RingKind::Z;
  std::int64_t p = 0;  // prime when kind == Zp

  static Ring integers() { return {RingKind::Z, 0}; }
  static Ring rationals() { return {RingKind::Q, 0}; }
  /// Throws PreconditionError unless p is prime.
  static Ring mod(std::int64_t p);
  /// "Z", "Q" or "Z/p".
  static Ring parse(const std::string& text);
  std::string name() const;
  bool is_field() const { return kind != RingKind::Z; }

  friend bool operator==(const Ring&, const Ring&) = default;
};

/// Free rank plus invariant factors d1 | d2 | ... (all > 1).
struct AbelianGroup {
  std::int64_t freeRank = 0;
  std::vector<mpz_class> torsion;

  bool is_zero() const { return freeRank == 0 && torsion.empty(); }
  /// e.g. "Z^2+Z/2", "0".
  std::string to_string() const;
  friend bool operator==(const AbelianGroup& a, const AbelianGroup& b) {
    return a.freeRank == b.freeRank && a.torsion == b.torsion;
  }
};

struct Triplet {
  std::int64_t row = 0;
  std::int64_t col = 0;
  std::int64_t value = 0;
};

/// Integer matrix in compressed-row form. Entries are stored in 64 bits;
/// every reduction promotes to unbounded integers when a value would overflow.
class SparseExactMatrix {
 public:
  SparseExactMatrix() = default;
  SparseExactMatrix(std::int64_t rows, std::int64_t cols) : rows_(rows), cols_(cols), rowPtr_(static_cast<std::size_t>(rows) + 1, 0) {}
  /// Duplicates are summed, zeros dropped.
  static SparseExactMatrix from_triplets(std::int64_t rows, std::int64_t cols, std::vector<Triplet> t);
  static SparseExactMatrix from_dense(const std::vector<std::vector<std::int64_t>>& a);
  static SparseExactMatrix identity(std::int64_t n);

  std::int64_t rows() const { return rows_; }
  std::int64_t cols() const { return cols_; }
  std::int64_t nnz() const { return static_cast<std::int64_t>(vals_.size()); }
  bool is_zero() const { return vals_.empty(); }
  std::int64_t at(std::int64_t r, std::int64_t c) const;

  const std::vector<std::int64_t>& row_ptr() const { return rowPtr_; }
  const std::vector<std::int64_t>& col_idx() const { return colIdx_; }
  const std::vector<std::int64_t>& values() const { return vals_; }

  SparseExactMatrix transpose() const;
  /// this * other; throws std::overflow_error on 64-bit overflow.
  SparseExactMatrix multiply(const SparseExactMatrix& other) const;
  std::vector<std::vector<std::int64_t>> to_dense() const;
  /// Sorted "row col value" lines after a "rows cols" header.
  std::string dump() const;

 private:
  std::int64_t rows_ = 0;
  std::int64_t cols_ = 0;
  std::vector<std::int64_t> rowPtr_{0};
  std::vector<std::int64_t> colIdx_;
  std::vector<std::int64_t> vals_;
};

/// Invariant factors of an integer matrix (nonzero, ascending divisibility
/// chain, positive). Their count is the rank.
std::vector<mpz_class> smith_normal_form(const SparseExactMatrix& a);

/// Rank over Q or Z/p. For Z the rank over Q is returned.
std::int64_t rank_over_field(const SparseExactMatrix& a, const Ring& field);

/// Rank plus, over Z, the invariant factors greater than 1.
struct Reduction {
  std::int64_t rank = 0;
  std::vector<mpz_class> torsion;
};
Reduction reduce_matrix(const SparseExactMatrix& a, const Ring& ring);

/// Homology at the middle of  C_in --dIn--> C --dOut--> C_out.
/// dIn is dim C x dim C_in, dOut is dim C_out x dim C. Throws PreconditionError
/// when the dimensions do not compose or dOut * dIn != 0.
AbelianGroup homology_of_pair(const SparseExactMatrix& dIn, const SparseExactMatrix& dOut, const Ring& ring);

/// Normalizes arbitrary nonzero diagonal entries into invariant factors.
std::vector<mpz_class> invariant_factors(std::vector<mpz_class> diagonal);

}  // namespace khopos
