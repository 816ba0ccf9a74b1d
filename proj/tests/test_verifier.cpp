#include "doctest.h"
#include "frobknot/verifier.hpp"

#include <cstdlib>

using namespace frobknot;

namespace {

const RingSpec F2 = RingSpec::prime_field(2);

std::vector<Scalar> comult_from_code(std::uint64_t code, long p) {
  std::vector<Scalar> d(8);
  for (int n = 7; n >= 0; --n) {
    d[n] = static_cast<long>(code % p);
    code /= p;
  }
  return d;
}

MultTable table_of(const FrobeniusData& f) {
  return MultTable::commutative_table(f.ring, {f.c(0, 0, 0), f.c(0, 0, 1)}, {f.c(0, 1, 0), f.c(0, 1, 1)},
                                      {f.c(1, 1, 0), f.c(1, 1, 1)});
}

class ThreadsEnv {
 public:
  explicit ThreadsEnv(const char* v) {
    if (const char* old = std::getenv("FROBKNOT_THREADS")) saved_ = old;
    setenv("FROBKNOT_THREADS", v, 1);
  }
  ~ThreadsEnv() {
    if (saved_.empty())
      unsetenv("FROBKNOT_THREADS");
    else
      setenv("FROBKNOT_THREADS", saved_.c_str(), 1);
  }

 private:
  std::string saved_;
};

}  // namespace

TEST_CASE("search spaces") {
  CHECK(SearchSpace::prime_field(3).values().size() == 3);
  CHECK(SearchSpace::bounded_z(2).values().size() == 5);
  CHECK(SearchSpace::bounded_z(2).name() == "Z[-2..2]");
  CHECK(SearchSpace::prime_field(5).name() == "F5");
  CHECK_THROWS_AS(SearchSpace::bounded_z(0), Error);
}

TEST_CASE("worker count follows FROBKNOT_THREADS") {
  {
    ThreadsEnv env("3");
    CHECK(worker_count() == 3);
  }
  {
    ThreadsEnv env("zero");
    CHECK(worker_count() >= 1);
  }
}

TEST_CASE("surjective associative commutative tables are unital") {
  const std::vector<std::pair<SearchSpace, std::uint64_t>> spaces{{SearchSpace::prime_field(2), 64},
                                                                   {SearchSpace::prime_field(3), 729},
                                                                   {SearchSpace::prime_field(5), 15625},
                                                                   {SearchSpace::bounded_z(2), 15625}};
  for (const auto& [space, size] : spaces) {
    const auto rep = verify_theorem_1_2(space);
    CHECK(rep.candidates == size);
    CHECK(rep.ok());
    REQUIRE(rep.stages.size() == 3);
    CHECK(rep.stages[1].second > 0);
    CHECK(rep.stages[2].second == rep.stages[1].second);
  }
  CHECK_THROWS_AS(verify_theorem_1_2({RingSpec::rationals(), 1}), Error);
}

TEST_CASE("reports do not depend on the worker count") {
  VerificationReport one, many;
  {
    ThreadsEnv env("1");
    one = verify_theorem_1_2(SearchSpace::prime_field(3));
  }
  {
    ThreadsEnv env("4");
    many = verify_theorem_1_2(SearchSpace::prime_field(3));
  }
  CHECK(one == many);
  std::vector<FrobeniusData> a, b;
  {
    ThreadsEnv env("1");
    a = frobenius_pairs(2);
  }
  {
    ThreadsEnv env("5");
    b = frobenius_pairs(2);
  }
  CHECK(a == b);
}

TEST_CASE("Frobenius pairs over F2 agree with a check_axioms enumeration") {
  // Library path: filter multiplications and comultiplications with check_axioms, then the relation.
  std::vector<MultTable> mults;
  for (std::uint64_t code = 0; code < 64; ++code) {
    const auto v = comult_from_code(code, 2);  // the low six digits give the table
    auto t = MultTable::commutative_table(F2, {v[2], v[3]}, {v[4], v[5]}, {v[6], v[7]});
    if (is_associative(t) && is_multiplication_surjective(t)) mults.push_back(t);
  }
  std::vector<std::vector<Scalar>> comults;
  const MultTable zero = MultTable::commutative_table(F2, {0, 0}, {0, 0}, {0, 0});
  for (std::uint64_t code = 0; code < 256; ++code) {
    auto d = comult_from_code(code, 2);
    const auto rep = check_axioms(lift(zero, d));
    if (rep.coassociative && rep.cocommutative && rep.comult_injective) comults.push_back(d);
  }
  std::size_t count = 0;
  const auto fast = frobenius_pairs(2);
  for (const auto& t : mults)
    for (const auto& d : comults) {
      const FrobeniusData f = lift(t, d);
      if (!check_axioms(f).frobenius_relation) continue;
      ++count;
      bool found = false;
      for (const auto& g : fast) found = found || (g.mult == f.mult && g.comult == f.comult);
      CHECK(found);
    }
  CHECK(count == fast.size());
}

TEST_CASE("surjective m and injective Delta give a Frobenius algebra") {
  const auto rep = verify_theorem_1_1(2);
  CHECK(rep.candidates == 16384);
  CHECK(rep.ok());
  REQUIRE(rep.facts.size() == 1);
  CHECK(rep.facts[0].second == "yes");
  for (const auto& f : frobenius_pairs(2)) {
    CHECK(find_unit(table_of(f)));
    CHECK(solve_counit(f));
  }
  CHECK_THROWS_AS(verify_theorem_1_1(5), Error);
}

TEST_CASE("family sweeps against the stated conditions") {
  for (std::uint64_t p : {3, 5}) {
    const auto rep = verify_prop_3_4(p);
    // The printed m13 table is not associative although it is listed as associative.
    REQUIRE(rep.counterexamples.size() == 1);
    CHECK(rep.counterexamples[0].property == "associativity as stated");
    CHECK(rep.counterexamples[0].detail == "m13");
    for (const auto& [label, summary] : rep.facts) {
      if (label == "m6") CHECK(summary == std::to_string(p * p) + " instances, 3 associative, 3 unital");
      if (label == "m10") CHECK(summary == std::to_string(p) + " instances, 1 associative, 0 unital");
      if (label == "m9") CHECK(summary.find("2 associative, 1 unital") != std::string::npos);
    }
  }
  CHECK_THROWS_AS(verify_prop_3_4(2), Error);
  CHECK_THROWS_AS(verify_prop_3_4(7), Error);
}

TEST_CASE("characteristic 2 classification") {
  const auto rep = verify_char2_classification();
  CHECK(rep.ok());
  CHECK(rep.candidates == 64);
  CHECK(rep.stages[0].second == 22);
  CHECK(rep.stages[1].second == 22);

  const MultTable zero = MultTable::commutative_table(F2, {0, 0}, {0, 0}, {0, 0});
  CHECK(classify(zero).label == "m2_7");
  CHECK_FALSE(find_unit(zero));
  const MultTable e1 = MultTable::commutative_table(F2, {1, 0}, {0, 0}, {0, 0});
  CHECK(classify(e1).label == "m2_2");
  CHECK_FALSE(find_unit(e1));
}

TEST_CASE("noncommutative surjective associative tables") {
  for (std::uint64_t p : {2, 3}) {
    const auto rep = verify_noncommutative(p);
    CHECK(rep.ok());
    CHECK(rep.candidates == (p == 2 ? 256U : 6561U));
    CHECK(rep.stages[0].second > 0);
    bool recorded = false;
    for (const auto& [k, v] : rep.facts)
      if (k == "nc_left isomorphic to nc_right") recorded = v == "no";
    CHECK(recorded);
  }
  CHECK_FALSE(isomorphic(instantiate(F2, {"nc_left", {}}), instantiate(F2, {"nc_right", {}})));
  CHECK_THROWS_AS(verify_noncommutative(5), Error);
}

TEST_CASE("nearly Frobenius comultiplications") {
  const FrobeniusData a = a5(0, 0, F2);
  const MultTable m = table_of(a);
  const auto found = search_nearly_frobenius(m);
  CHECK(std::find(found.begin(), found.end(), std::vector<Scalar>(8, 0)) != found.end());
  CHECK(std::find(found.begin(), found.end(), a.comult) != found.end());

  // Zero multiplication: the relation is vacuous, so every cocommutative coassociative Delta counts.
  const MultTable zero = MultTable::commutative_table(F2, {0, 0}, {0, 0}, {0, 0});
  std::size_t expected = 0;
  for (std::uint64_t code = 0; code < 256; ++code) {
    const auto rep = check_axioms(lift(zero, comult_from_code(code, 2)));
    expected += rep.coassociative && rep.cocommutative;
  }
  CHECK(search_nearly_frobenius(zero).size() == expected);

  for (const auto& d : found) CHECK(check_axioms(lift(m, d)).frobenius_relation);
  CHECK_THROWS_AS(search_nearly_frobenius(MultTable::commutative_table(RingSpec::prime_field(5), {1, 0}, {0, 1}, {0, 0})),
                  Error);
  const MultTable nonassoc = MultTable::commutative_table(F2, {0, 1}, {1, 0}, {0, 0});
  if (!is_associative(nonassoc)) CHECK_THROWS_AS(search_nearly_frobenius(nonassoc), Error);
}
