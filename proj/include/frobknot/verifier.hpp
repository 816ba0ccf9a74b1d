#pragma once

#include "frobknot/frobenius.hpp"
#include "frobknot/rank2.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace frobknot {

/// Coefficients to enumerate: all of F_p, or the integers in [-bound, bound].
struct SearchSpace {
  RingSpec ring;
  int bound = 0;

  static SearchSpace prime_field(std::uint64_t p) { return {RingSpec::prime_field(p), 0}; }
  /// Throws unless bound >= 1.
  static SearchSpace bounded_z(int bound);

  std::vector<Scalar> values() const;
  /// "F2", "Z[-2..2]".
  std::string name() const;
};

struct Counterexample {
  std::string property;  ///< the conclusion that failed
  std::vector<MultTable> tables;
  std::vector<Scalar> comult;  ///< 8 constants d(k,i,j) at (k*2 + i)*2 + j, when a comultiplication is involved
  std::string detail;
  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

struct VerificationReport {
  std::string check;  ///< "thm1.2", "thm1.1", "prop3.4", "char2", "noncomm"
  std::string space;
  std::uint64_t candidates = 0;  ///< size of the enumerated space
  std::vector<std::pair<std::string, std::uint64_t>> stages;  ///< filter and how many passed it
  std::vector<std::pair<std::string, std::string>> facts;     ///< census numbers and recorded facts
  std::vector<Counterexample> counterexamples;
  bool ok() const { return counterexamples.empty(); }
  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// Workers for enumeration: FROBKNOT_THREADS when set, else the hardware concurrency.
unsigned worker_count();

/// Commutative tables with associative, surjective multiplication must have a unit.
VerificationReport verify_theorem_1_2(const SearchSpace& space);

/// (m, Delta) over F_p with m commutative, associative, surjective and Delta coassociative,
/// cocommutative, injective, satisfying the Frobenius relation. p in {2, 3}.
std::vector<FrobeniusData> frobenius_pairs(std::uint64_t p);
/// Every pair above must have a unit and a counit.
VerificationReport verify_theorem_1_1(std::uint64_t p);

/// Associativity and unitality of every admissible family instance against the stated conditions.
/// p in {3, 5}.
VerificationReport verify_prop_3_4(std::uint64_t p);

/// Every associative commutative table over F2 classifies, with the stated unitality pattern.
VerificationReport verify_char2_classification();

/// Associative, surjective, noncommutative tables over F_p are isomorphic to nc_left or nc_right.
/// p in {2, 3}.
VerificationReport verify_noncommutative(std::uint64_t p);

/// All comultiplications over F_p that are coassociative, cocommutative and satisfy the Frobenius
/// relation with `m`, as 8-constant vectors in enumeration order. Needs p in {2, 3}.
std::vector<std::vector<Scalar>> search_nearly_frobenius(const MultTable& m);

}  // namespace frobknot
