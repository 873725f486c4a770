#pragma once

#include <cstddef>
#include <vector>

#include "complab/bitset.hpp"

namespace complab {

/// Square matrix over the Boolean semiring ({0,1}, OR, AND), stored as
/// packed rows.
class BooleanMatrix {
 public:
  BooleanMatrix() = default;
  explicit BooleanMatrix(std::size_t n) : n_(n), rows_(n, Bitset(n)) {}

  static BooleanMatrix identity(std::size_t n);

  std::size_t dimension() const { return n_; }

  bool get(std::size_t i, std::size_t j) const { return rows_[i].test(j); }
  void set(std::size_t i, std::size_t j, bool value = true) { rows_[i].set(j, value); }

  const Bitset& row(std::size_t i) const { return rows_[i]; }
  Bitset& row(std::size_t i) { return rows_[i]; }

  /// Number of nonzero entries.
  std::size_t count() const;

  bool is_zero() const;

  BooleanMatrix transpose() const;

  /// (AB)_ij = OR_k (A_ik AND B_kj). Throws Error{InvalidArgument} on a
  /// dimension mismatch.
  BooleanMatrix operator*(const BooleanMatrix& other) const;

  bool operator==(const BooleanMatrix& other) const = default;

  std::size_t hash() const;

 private:
  std::size_t n_ = 0;
  std::vector<Bitset> rows_;
};

/// m-th Boolean power by repeated squaring; m must be at least 1.
BooleanMatrix matrix_power(const BooleanMatrix& a, std::size_t m);

}  // namespace complab
