#pragma once

#include "frobknot/linalg.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace frobknot {

/// Coefficients (x, y) of x e1 + y e2.
using Vec2 = std::array<Scalar, 2>;

/// Structure constants of a rank-2 algebra on basis e1, e2.
/// For commutative tables e2e1 mirrors e1e2.
class MultTable {
 public:
  static MultTable commutative_table(const RingSpec& ring, const Vec2& e1e1, const Vec2& e1e2,
                                     const Vec2& e2e2);
  static MultTable general_table(const RingSpec& ring, const Vec2& e1e1, const Vec2& e1e2,
                                 const Vec2& e2e1, const Vec2& e2e2);

  const RingSpec& ring() const { return ring_; }
  bool commutative() const { return commutative_; }
  /// e_i e_j for i, j in {0, 1}.
  const Vec2& product(int i, int j) const { return products_[2 * i + j]; }
  /// True when e1e2 == e2e1 as stored, whatever the flag says.
  bool is_commutative_as_table() const { return products_[1] == products_[2]; }

  friend bool operator==(const MultTable& a, const MultTable& b) {
    return a.ring_ == b.ring_ && a.products_ == b.products_;
  }

 private:
  MultTable(RingSpec ring, bool commutative, std::array<Vec2, 4> products);
  RingSpec ring_;
  bool commutative_;
  std::array<Vec2, 4> products_;
};

Vec2 multiply(const MultTable& t, const Vec2& u, const Vec2& v);

/// Commutative tables: the two equalities (e1e1)e2 = e1(e1e2), (e2e2)e1 = e2(e2e1).
/// Otherwise all eight triples.
bool is_associative(const MultTable& t);
/// All eight triples regardless of the commutative flag.
bool is_associative_full(const MultTable& t);

std::optional<Vec2> find_unit(const MultTable& t);

struct IdempotentSearch {
  /// 0 means exhaustive over a prime field; otherwise the box [-bound, bound]^2.
  int bound = 0;
  static IdempotentSearch exhaustive() { return {}; }
  static IdempotentSearch bounded(int b) { return {b}; }
};

/// Nonzero v with v*v = v inside the search space, in lexicographic order of (x, y).
/// Over Z an empty answer only covers the box.
std::vector<Vec2> idempotents(const MultTable& t, IdempotentSearch search);

/// The 2 x N matrix of basis products (N = 3 commutative, 4 otherwise).
ExactMatrix product_matrix(const MultTable& t);
bool is_multiplication_surjective(const MultTable& t);

/// Rewrite t in the basis f_j = sum_i g(i, j) e_i. g must be invertible over the ring.
MultTable transport(const MultTable& t, const ExactMatrix& g);

/// Every invertible 2 x 2 matrix over F_p, in lexicographic order of (g00, g01, g10, g11).
std::vector<ExactMatrix> general_linear_2(const RingSpec& field);

/// A base change g with transport(a, g) == b, or nullopt. Prime fields only.
std::optional<ExactMatrix> isomorphic(const MultTable& a, const MultTable& b);

struct FamilyParam {
  std::string name;  ///< "alpha2", "beta2", "alpha4", "beta4" or "lambda2"
  Scalar value;
  friend bool operator==(const FamilyParam&, const FamilyParam&) = default;
};

struct RepresentativeFamily {
  std::string label;
  std::vector<FamilyParam> params;
  std::string to_string() const;
  friend bool operator==(const RepresentativeFamily&, const RepresentativeFamily&) = default;
};

/// Labels in classification order.
const std::vector<std::string>& family_labels();
/// Parameter names a family takes, in order.
const std::vector<std::string>& family_param_names(const std::string& label);
/// Families defined in characteristic 2 (m2_*, m2R).
bool is_char2_family(const std::string& label);

/// Whether the family's side condition holds for these parameters over the ring's field.
/// Families without a side condition always pass.
bool side_condition_holds(const RingSpec& field, const RepresentativeFamily& family);

/// Build the table. Throws on unknown label, wrong arity, or a failed side condition.
MultTable instantiate(const RingSpec& ring, const RepresentativeFamily& family);

/// Every admissible parameter choice of a family over F_p.
std::vector<RepresentativeFamily> family_instances(const RingSpec& field, const std::string& label);

/// Classify an associative commutative table over F_p. Throws "classification gap" when no
/// admissible associative representative is isomorphic to t.
RepresentativeFamily classify(const MultTable& t);

/// -1 + y(5a + b^2) + y^2(-8a^2 - 2ab^2) + y^3(4a^3 + a^2 b^2) with a = alpha2, b = beta2.
Scalar evaluate_PR(const RingSpec& ring, const Scalar& alpha2, const Scalar& beta2, const Scalar& y);
/// -1 + y(4a2 + b4) + y^2(2a4 b2 - 4a2^2 - 4a2 b4) + y^3(a4^2 - 4a2 a4 b2 + 4a2^2 b4).
Scalar evaluate_PA(const RingSpec& ring, const Scalar& alpha2, const Scalar& beta2, const Scalar& alpha4,
                   const Scalar& beta4, const Scalar& y);

/// Squares of nonzero elements of F_p.
bool is_nonzero_square(const RingSpec& field, const Scalar& x);

}  // namespace frobknot
