#include "doctest.h"
#include "frobknot/complex.hpp"
#include "oracles.hpp"

#include <numeric>
#include <random>

using namespace frobknot;

namespace {

const RingSpec ZZ = RingSpec::integers();
const RingSpec QQ = RingSpec::rationals();
const RingSpec F3 = RingSpec::prime_field(3);

std::vector<std::size_t> free_ranks(const HomologyTable& t) {
  std::vector<std::size_t> out;
  for (const auto& row : t) out.push_back(row.free_rank);
  return out;
}

std::vector<LinkDiagram> all_builders() {
  std::vector<LinkDiagram> out;
  for (const auto& n : builder_names()) out.push_back(builder(n));
  return out;
}

LaurentPolynomial q(long e) { return LaurentPolynomial::monomial(1, e); }

}  // namespace

TEST_CASE("complex shapes") {
  auto f = build_complex(figure10_d1(), a5(0, 0), false);
  CHECK(f.ranks == std::vector<std::size_t>{2, 8, 2});
  REQUIRE(f.d.size() == 2);
  CHECK(f.d[0].rows() == 8);
  CHECK(f.d[0].cols() == 2);

  auto u = build_complex(figure10_d2(), a5(1, -1), false);
  CHECK(u.ranks == std::vector<std::size_t>{4});
  CHECK(u.d.empty());

  auto h = build_complex(hopf(1), a5(0, 0), false);
  CHECK(h.ranks == std::vector<std::size_t>{4, 4, 4});
  CHECK(h.offset.at(1) == 0);
  CHECK(h.offset.at(2) == 2);

  auto n = build_complex(hopf(-1), a5(0, 0), true);
  CHECK(n.shift == -2);
  CHECK(n.degree(0) == -2);
  CHECK_THROWS_AS(build_complex(parse_pd("X 1 2 2 1"), a5(0, 0), true), Error);
  CHECK_NOTHROW(build_complex(parse_pd("X 1 2 2 1"), a5(0, 0), false));
}

TEST_CASE("Hopf: the two squares of the cube cancel by the sign rule") {
  auto c = build_complex(hopf(1), a5(0, 0), false);
  CHECK(verify_d_squared(c));
  // Drop the sign on edge (10) -> (11): the square commutes instead of anticommuting.
  const std::size_t row0 = c.offset.at(3), col0 = c.offset.at(2);
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 2; ++b) c.d[1].set(row0 + a, col0 + b, c.ring.neg(c.d[1].at(row0 + a, col0 + b)));
  CHECK_FALSE(verify_d_squared(c));
  CHECK_THROWS_WITH_AS(homology(c), "d^2 != 0", Error);
}

TEST_CASE("d squared vanishes on builders for a5(h,t), h,t in -2..2") {
  for (const auto& d : all_builders())
    for (long h = -2; h <= 2; ++h)
      for (long t = -2; t <= 2; ++t) CHECK(verify_d_squared(build_complex(d, a5(h, t), false)));
  CHECK(verify_d_squared(build_complex(unknot_0(), a5(0, 0), false)));
}

TEST_CASE("homology examples") {
  auto u = homology(build_complex(unknot_0(), a5(0, 0), false));
  REQUIRE(u.size() == 1);
  CHECK(u[0].free_rank == 2);

  auto f = homology(build_complex(figure10_d1(), a5(0, 0), false));
  CHECK(free_ranks(f) == std::vector<std::size_t>{0, 4, 0});
  for (const auto& row : f) CHECK(row.torsion.empty());

  CHECK(free_ranks(homology(build_complex(hopf(1), a5(0, 0), false))) == std::vector<std::size_t>{2, 0, 2});

  auto t = homology(build_complex(trefoil("right"), a5(0, 0), true));
  REQUIRE(t.size() == 4);
  CHECK(t[3].i == 3);
  CHECK(t[3].torsion == std::vector<Integer>{2});
  auto tq = homology(build_complex(trefoil("right"), a5(0, 0, QQ), true));
  for (const auto& row : tq) CHECK(row.torsion.empty());
}

TEST_CASE("Hopf homology against hand-written matrices and a minor-rank oracle") {
  // a5(0,0) on basis (1, x): m = [[1,0,0,0],[0,1,1,0]], Delta(1) = 1x + x1, Delta(x) = xx.
  // d0 stacks m over m; d1 = [Delta, -Delta] since edge (10)->(11) carries one 1 before the flip.
  const oracle::IntMatrix d0{{1, 0, 0, 0}, {0, 1, 1, 0}, {1, 0, 0, 0}, {0, 1, 1, 0}};
  const oracle::IntMatrix d1{{0, 0, 0, 0}, {1, 0, -1, 0}, {1, 0, -1, 0}, {0, 1, 0, -1}};
  const std::size_t r0 = oracle::minor_rank(d0), r1 = oracle::minor_rank(d1);
  const std::vector<std::size_t> expect{4 - r0, 4 - r1 - r0, 4 - r1};
  CHECK(free_ranks(homology(build_complex(hopf(1), a5(0, 0), false))) == expect);
}

TEST_CASE("Euler characteristic") {
  CHECK(euler_characteristic(build_complex(figure10_d1(), a5(0, 0), false)) == -4);
  CHECK(euler_characteristic(build_complex(unknot_0(), a5(0, 0), false)) == 2);
  CHECK(euler_characteristic(build_complex(hopf(1), a5(0, 0), false)) == 4);
  for (const auto& d : all_builders())
    for (bool norm : {false, true}) {
      auto c = build_complex(d, a5(1, 1, QQ), norm);
      long alt = 0;
      for (const auto& row : homology(c)) alt += (row.i % 2 == 0 ? 1 : -1) * static_cast<long>(row.free_rank);
      CHECK(alt == euler_characteristic(c));
    }
}

TEST_CASE("graded Euler characteristic") {
  CHECK(graded_euler_characteristic(build_complex(unknot_0(), a5(0, 0), true)) == q(1) + q(-1));
  CHECK(graded_euler_characteristic(build_complex(hopf(1), a5(0, 0), true)) == q(6) + q(4) + q(2) + q(0));
  const LaurentPolynomial unknot = q(1) + q(-1);
  for (const auto& d : all_builders())
    CHECK(graded_euler_characteristic(build_complex(d, a5(0, 0), true)) ==
          unknot * bracket_to_q(normalized_bracket(d)));
  CHECK_THROWS_AS(graded_euler_characteristic(build_complex(hopf(1), a5(1, 0), true)), Error);
  CHECK_THROWS_AS(graded_euler_characteristic(build_complex(hopf(1), a5(0, 1), true)), Error);
  CHECK_THROWS_AS(graded_euler_characteristic(build_complex(hopf(1), a5(0, 0), false)), Error);
}

TEST_CASE("bigraded homology") {
  auto t = bigraded_homology(build_complex(trefoil("right"), a5(0, 0), true));
  HomologyTable expect{{0, 1, 1, {}}, {0, 3, 1, {}}, {2, 5, 1, {}}, {3, 7, 0, {2}}, {3, 9, 1, {}}};
  CHECK(t == expect);
  CHECK_THROWS_AS(bigraded_homology(build_complex(hopf(1), a5(0, 1), true)), Error);
  // Bigraded ranks add up to the ungraded ones.
  for (const auto& d : all_builders()) {
    auto c = build_complex(d, a5(0, 0), true);
    CHECK(total_rank(bigraded_homology(c)) == total_rank(homology(c)));
  }
}

TEST_CASE("crossing order leaves homology unchanged") {
  std::mt19937 rng(11);
  for (const auto& d : all_builders()) {
    auto base = homology(build_complex(d, a5(0, 0), true));
    std::vector<std::size_t> perm(d.crossing_count());
    std::iota(perm.begin(), perm.end(), 0);
    for (int trial = 0; trial < 4; ++trial) {
      std::shuffle(perm.begin(), perm.end(), rng);
      CHECK(homology(build_complex(permute_crossings(d, perm), a5(0, 0), true)) == base);
    }
  }
}

TEST_CASE("an extra circle doubles every group") {
  for (const auto& d : all_builders()) {
    auto base = homology(build_complex(d, a5(1, 2, QQ), false));
    auto more = homology(build_complex(disjoint_union(d, unknot_0()), a5(1, 2, QQ), false));
    REQUIRE(base.size() == more.size());
    for (std::size_t i = 0; i < base.size(); ++i) CHECK(more[i].free_rank == 2 * base[i].free_rank);
  }
}

TEST_CASE("figure10_d1: middle-degree homology for Frobenius algebras over a field") {
  std::vector<FrobeniusData> algebras;
  for (long h = 0; h < 3; ++h)
    for (long t = 0; t < 3; ++t) {
      auto f = a5(h, t, F3);
      algebras.push_back(f);
      for (const std::vector<Scalar>& y : {std::vector<Scalar>{1, 1}, std::vector<Scalar>{2, 0}})
        if (invert_element(f, y)) algebras.push_back(twist(f, y));
    }
  // Rank one: A = K with Delta(1) = 2 (1 (x) 1).
  FrobeniusData k(F3, 1);
  k.set_c(0, 0, 0, 1);
  k.set_d(0, 0, 0, 2);
  algebras.push_back(k);
  // Rank three: K x K x K on orthogonal idempotents, Delta(e_i) = e_i (x) e_i.
  FrobeniusData k3(F3, 3);
  for (std::size_t i = 0; i < 3; ++i) {
    k3.set_c(i, i, i, 1);
    k3.set_d(i, i, i, 1);
  }
  algebras.push_back(k3);
  std::size_t used = 0;
  for (const auto& f : algebras) {
    const auto rep = check_axioms(f);
    if (!(rep.all() && rep.mult_surjective && rep.comult_injective)) continue;
    ++used;
    // d0 has rank r and d1 has rank r, leaving 2r^2 - 2r in the middle: r^2 exactly when r = 2.
    const std::size_t r = f.rank;
    const auto ranks = free_ranks(homology(build_complex(figure10_d1(), f, false)));
    CHECK(ranks == std::vector<std::size_t>{0, 2 * r * r - 2 * r, 0});
    if (r == 2) CHECK(ranks[1] == r * r);
  }
  CHECK(used >= 12);
}
