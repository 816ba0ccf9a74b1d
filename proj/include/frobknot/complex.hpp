#pragma once

#include "frobknot/diagram.hpp"
#include "frobknot/frobenius.hpp"

#include <map>
#include <optional>

namespace frobknot {

/// C^i is the sum over states with |s| = i of A^(x)#circles, states in ascending mask order.
/// Degrees are stored from 0; `shift` is added to give the reported homological degree.
struct ChainComplex {
  RingSpec ring = RingSpec::integers();
  std::size_t algebra_rank = 0;
  bool normalized = false;
  int shift = 0;
  int n_plus = 0, n_minus = 0;
  std::vector<std::size_t> ranks;     ///< dim C^i, i = 0..n
  std::vector<ExactMatrix> d;         ///< d[i] : C^i -> C^(i+1)
  std::map<std::uint64_t, std::size_t> offset;  ///< start of a state's block inside its degree
  /// Quantum degree of every basis vector, per degree. Present only for the a5(0,0) algebra.
  std::optional<std::vector<std::vector<long>>> quantum;

  int degree(std::size_t index) const { return static_cast<int>(index) + shift; }
};

/// Complex of the cube under `f`. Without a diagram there is no orientation, hence no shifts.
ChainComplex build_complex(const ResolutionCube& cube, const FrobeniusData& f);
/// With normalize set: homological shift -n_minus, quantum shift n_plus - 2 n_minus.
/// Throws for an unoriented diagram with normalize set.
ChainComplex build_complex(const LinkDiagram& d, const FrobeniusData& f, bool normalize);

/// Every d[i+1] * d[i] is zero.
bool verify_d_squared(const ChainComplex& c);

struct HomologyRow {
  int i = 0;
  std::optional<long> q;
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;
  friend bool operator==(const HomologyRow&, const HomologyRow&) = default;
};
using HomologyTable = std::vector<HomologyRow>;

/// One row per degree, including zero groups. Throws "d^2 != 0" when the complex is broken.
HomologyTable homology(const ChainComplex& c);
/// One row per (i, q) with a nonzero group, sorted by (i, q). Needs the quantum grading.
HomologyTable bigraded_homology(const ChainComplex& c);

/// Sum of (-1)^i dim C^i over reported degrees.
long euler_characteristic(const ChainComplex& c);
/// Sum of (-1)^i q^j over basis vectors. Needs a normalized complex of a5(0,0).
LaurentPolynomial graded_euler_characteristic(const ChainComplex& c);

long total_rank(const HomologyTable& t);

}  // namespace frobknot
