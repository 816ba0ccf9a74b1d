#pragma once

#include "frobknot/linalg.hpp"
#include "frobknot/rank2.hpp"

#include <optional>
#include <variant>
#include <vector>

namespace frobknot {

/// Structure constants of a rank-r algebra with comultiplication.
/// m(e_i, e_j) = sum_k c(i,j,k) e_k and Delta(e_k) = sum_{i,j} d(k,i,j) e_i (x) e_j.
struct FrobeniusData {
  RingSpec ring;
  std::size_t rank = 0;
  std::vector<Scalar> mult;    ///< c(i,j,k) at (i*r + j)*r + k
  std::vector<Scalar> comult;  ///< d(k,i,j) at (k*r + i)*r + j
  std::optional<std::vector<Scalar>> unit;
  std::optional<std::vector<Scalar>> counit;

  /// Zero tensors of the right size.
  FrobeniusData(RingSpec ring, std::size_t rank);

  const Scalar& c(std::size_t i, std::size_t j, std::size_t k) const { return mult[(i * rank + j) * rank + k]; }
  const Scalar& d(std::size_t k, std::size_t i, std::size_t j) const { return comult[(k * rank + i) * rank + j]; }
  void set_c(std::size_t i, std::size_t j, std::size_t k, const Scalar& v);
  void set_d(std::size_t k, std::size_t i, std::size_t j, const Scalar& v);

  /// r x r^2, column i*r + j holds m(e_i (x) e_j).
  ExactMatrix mult_matrix() const;
  /// r^2 x r, column k holds Delta(e_k).
  ExactMatrix comult_matrix() const;

  /// Product of two coefficient vectors.
  std::vector<Scalar> multiply(const std::vector<Scalar>& u, const std::vector<Scalar>& v) const;

  /// Shape checks, entries in the ring, and the unit/counit axioms when those are present.
  void validate() const;

  friend bool operator==(const FrobeniusData&, const FrobeniusData&) = default;
};

/// A rank-2 table with the given comultiplication (zero when omitted). The unit is left empty.
FrobeniusData lift(const MultTable& t, const std::vector<Scalar>& comult = {});

struct AxiomReport {
  bool associative = false;
  bool commutative = false;
  bool coassociative = false;
  bool cocommutative = false;
  bool frobenius_relation = false;
  bool unit_ok = false;    ///< a unit exists (the stored one, or one found by a linear solve)
  bool counit_ok = false;  ///< same for the counit
  bool mult_surjective = false;
  bool comult_injective = false;        ///< rank r over the fraction field
  bool comult_split_injective = false;  ///< over Z: every invariant factor is 1
  bool all() const;
  friend bool operator==(const AxiomReport&, const AxiomReport&) = default;
};

/// Every flag by direct index contraction on the structure constants.
AxiomReport check_axioms(const FrobeniusData& f);

/// A unit for the multiplication, solved from u e_j = e_j = e_j u.
std::optional<std::vector<Scalar>> solve_unit(const FrobeniusData& f);
/// A counit, solved from (eps (x) id) Delta = id = (id (x) eps) Delta.
std::optional<std::vector<Scalar>> solve_counit(const FrobeniusData& f);

/// Z[h,t][x]/(x^2 - hx - t) on basis (1, x) specialised at integers, read in `ring`.
FrobeniusData a5(long h, long t, const RingSpec& ring = RingSpec::integers());

struct A4Point {
  long a, c, e, f, h, t;
};
/// The algebra at a point of the parameter scheme. Throws "not a point of Spec R4" off the relations.
FrobeniusData a4_evaluate(const A4Point& pt, const RingSpec& ring = RingSpec::integers());

/// z with y z = 1, or nullopt. Throws when the algebra has no unit.
std::optional<std::vector<Scalar>> invert_element(const FrobeniusData& f, const std::vector<Scalar>& y);

/// Same multiplication and unit; counit eps(y .) and comultiplication Delta(y^{-1} .).
FrobeniusData twist(const FrobeniusData& f, const std::vector<Scalar>& y);

/// Transpose roles of m and Delta; unit and counit trade places.
FrobeniusData dualize(const FrobeniusData& f);

struct Merge {
  std::size_t i, j, k;  ///< factors i and j (i != j) multiply into output position k
};
struct Split {
  std::size_t k, i, j;  ///< factor k splits into output positions i and j
};
struct Perm {
  std::vector<std::size_t> sigma;  ///< input factor p goes to output position sigma[p]
};
using GeneratorSpec = std::variant<Merge, Split, Perm>;

/// Matrix of A^(x)n_in -> A^(x)n_out, factor 0 varying slowest. Positions are 0-based.
ExactMatrix generator_map(const FrobeniusData& f, std::size_t n_in, std::size_t n_out, const GeneratorSpec& spec);

struct RelationReport {
  bool associative = false;
  bool commutative = false;
  bool coassociative = false;
  bool cocommutative = false;
  bool frobenius = false;
  bool all() const { return associative && commutative && coassociative && cocommutative && frobenius; }
};

/// Each relation as an equality of composed generator matrices.
RelationReport verify_n2cob_relations(const FrobeniusData& f);

/// With a unit present: Delta(e_j) = (e_j (x) 1) Delta(1) for every j.
bool comult_determined_by_unit(const FrobeniusData& f);

}  // namespace frobknot
