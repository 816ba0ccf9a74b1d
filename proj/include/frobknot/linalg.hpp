#pragma once

#include "frobknot/ring.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace frobknot {

/// Dense row-major matrix over a RingSpec. Entries are kept reduced.
class ExactMatrix {
 public:
  ExactMatrix(RingSpec ring, std::size_t rows, std::size_t cols);
  /// Entries are mapped into the ring; throws if one is not representable.
  ExactMatrix(RingSpec ring, std::size_t rows, std::size_t cols, std::vector<Scalar> entries);
  static ExactMatrix identity(RingSpec ring, std::size_t n);
  static ExactMatrix from_ints(RingSpec ring, std::size_t rows, std::size_t cols,
                               std::initializer_list<long> values);

  const RingSpec& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Scalar& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, const Scalar& v);
  /// entry += v, in the ring.
  void accumulate(std::size_t i, std::size_t j, const Scalar& v);
  std::span<const Scalar> entries() const { return entries_; }

  bool is_zero() const;
  ExactMatrix transpose() const;
  ExactMatrix negated() const;
  /// Same entries read in another ring (via RingSpec::from_rational).
  ExactMatrix change_ring(const RingSpec& target) const;

  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b);
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);

 private:
  RingSpec ring_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> entries_;
};

/// Kronecker product, with the factor `a` varying slowest.
ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b);
/// Column vector as a rows x 1 matrix.
ExactMatrix column(const RingSpec& ring, std::span<const Scalar> values);

struct SNFResult {
  std::vector<Integer> diagonal;  ///< min(rows, cols) entries, d1 | d2 | ..., zeros last
  ExactMatrix left;               ///< rows x rows, unimodular
  ExactMatrix right;              ///< cols x cols, unimodular
};

/// Smith normal form of an integer matrix, left * M * right = diag.
/// Pivot: smallest nonzero absolute value, first in row-major order.
SNFResult smith_normal_form(const ExactMatrix& m);
/// Invariant factors only (the diagonal of smith_normal_form), no transforms.
std::vector<Integer> smith_invariants(const ExactMatrix& m);

/// Rank over the fraction field of the ring.
std::size_t rank(const ExactMatrix& m);
inline std::size_t nullity(const ExactMatrix& m) { return m.cols() - rank(m); }

/// One solution of m * x = b inside the ring (integral over Z), or nullopt.
std::optional<std::vector<Scalar>> solve_linear(const ExactMatrix& m, std::span<const Scalar> b);

/// Determinant of a square matrix (fraction-free elimination).
Scalar determinant(const ExactMatrix& m);

struct HomologySummands {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;  ///< entries > 1, each dividing the next
  friend bool operator==(const HomologySummands&, const HomologySummands&) = default;
};

/// ker(d_out) / im(d_in) for C_prev --d_in--> C --d_out--> C_next.
/// d_in is dim(C) x dim(C_prev), d_out is dim(C_next) x dim(C).
HomologySummands homology_summands(const ExactMatrix& d_in, const ExactMatrix& d_out);

}  // namespace frobknot
