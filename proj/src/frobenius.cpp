#include "frobknot/frobenius.hpp"

#include <algorithm>

namespace frobknot {

namespace {

std::size_t power(std::size_t r, std::size_t n) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < n; ++i) out *= r;
  return out;
}

std::vector<std::size_t> digits(std::size_t index, std::size_t r, std::size_t n) {
  std::vector<std::size_t> out(n);
  for (std::size_t p = n; p-- > 0;) {
    out[p] = index % r;
    index /= r;
  }
  return out;
}

std::size_t undigits(const std::vector<std::size_t>& ds, std::size_t r) {
  std::size_t out = 0;
  for (auto d : ds) out = out * r + d;
  return out;
}

bool all_unit_factors(const std::vector<Integer>& inv, std::size_t r) {
  if (inv.size() != r) return false;
  return std::all_of(inv.begin(), inv.end(), [](const Integer& d) { return d == 1; });
}

bool onto(const ExactMatrix& m, std::size_t r) {
  if (m.ring().kind() == RingKind::Integers) return all_unit_factors(smith_invariants(m), r);
  return rank(m) == r;
}

}  // namespace

FrobeniusData::FrobeniusData(RingSpec ring_, std::size_t rank_)
    : ring(ring_), rank(rank_), mult(rank_ * rank_ * rank_, 0), comult(rank_ * rank_ * rank_, 0) {
  if (rank_ == 0) throw Error("rank must be positive");
}

void FrobeniusData::set_c(std::size_t i, std::size_t j, std::size_t k, const Scalar& v) {
  mult[(i * rank + j) * rank + k] = ring.from_rational(v);
}

void FrobeniusData::set_d(std::size_t k, std::size_t i, std::size_t j, const Scalar& v) {
  comult[(k * rank + i) * rank + j] = ring.from_rational(v);
}

ExactMatrix FrobeniusData::mult_matrix() const {
  ExactMatrix m(ring, rank, rank * rank);
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = 0; j < rank; ++j)
      for (std::size_t k = 0; k < rank; ++k) m.set(k, i * rank + j, c(i, j, k));
  return m;
}

ExactMatrix FrobeniusData::comult_matrix() const {
  ExactMatrix m(ring, rank * rank, rank);
  for (std::size_t k = 0; k < rank; ++k)
    for (std::size_t i = 0; i < rank; ++i)
      for (std::size_t j = 0; j < rank; ++j) m.set(i * rank + j, k, d(k, i, j));
  return m;
}

std::vector<Scalar> FrobeniusData::multiply(const std::vector<Scalar>& u, const std::vector<Scalar>& v) const {
  if (u.size() != rank || v.size() != rank) throw Error("vector length does not match rank");
  std::vector<Scalar> out(rank, 0);
  for (std::size_t i = 0; i < rank; ++i) {
    if (u[i] == 0) continue;
    for (std::size_t j = 0; j < rank; ++j) {
      if (v[j] == 0) continue;
      const Scalar uv = ring.mul(u[i], v[j]);
      for (std::size_t k = 0; k < rank; ++k)
        if (c(i, j, k) != 0) out[k] = ring.add(out[k], ring.mul(uv, c(i, j, k)));
    }
  }
  return out;
}

void FrobeniusData::validate() const {
  const std::size_t n = rank * rank * rank;
  if (rank == 0) throw Error("rank must be positive");
  if (mult.size() != n || comult.size() != n) throw Error("structure tensors must have r^3 entries");
  for (const auto* v : {&mult, &comult})
    for (const auto& x : *v)
      if (!ring.contains(x)) throw Error("entry " + x.get_str() + " is not reduced in " + ring.name());
  if (unit) {
    if (unit->size() != rank) throw Error("unit has wrong length");
    for (std::size_t j = 0; j < rank; ++j) {
      std::vector<Scalar> e(rank, 0);
      e[j] = 1;
      if (multiply(*unit, e) != e || multiply(e, *unit) != e) throw Error("unit axiom fails");
    }
  }
  if (counit) {
    if (counit->size() != rank) throw Error("counit has wrong length");
    for (std::size_t k = 0; k < rank; ++k)
      for (std::size_t x = 0; x < rank; ++x) {
        Scalar left = 0, right = 0;
        for (std::size_t y = 0; y < rank; ++y) {
          left = ring.add(left, ring.mul((*counit)[y], d(k, y, x)));
          right = ring.add(right, ring.mul((*counit)[y], d(k, x, y)));
        }
        const Scalar want = (k == x) ? 1 : 0;
        if (left != want || right != want) throw Error("counit axiom fails");
      }
  }
}

FrobeniusData lift(const MultTable& t, const std::vector<Scalar>& comult) {
  FrobeniusData f(t.ring(), 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) f.set_c(i, j, k, t.product(i, j)[k]);
  if (!comult.empty()) {
    if (comult.size() != 8) throw Error("rank-2 comultiplication has 8 constants");
    for (std::size_t n = 0; n < 8; ++n) f.comult[n] = t.ring().from_rational(comult[n]);
  }
  return f;
}

bool AxiomReport::all() const {
  return associative && commutative && coassociative && cocommutative && frobenius_relation && unit_ok &&
         counit_ok && mult_surjective && comult_injective && comult_split_injective;
}

std::optional<std::vector<Scalar>> solve_unit(const FrobeniusData& f) {
  const std::size_t r = f.rank;
  // Unknown u_i. Rows (side, j, k): sum_i u_i c(i,j,k) = delta_jk and sum_i u_i c(j,i,k) = delta_jk.
  ExactMatrix m(f.ring, 2 * r * r, r);
  std::vector<Scalar> b(2 * r * r, 0);
  for (std::size_t side = 0; side < 2; ++side)
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < r; ++k) {
        const std::size_t row = (side * r + j) * r + k;
        for (std::size_t i = 0; i < r; ++i) m.set(row, i, side ? f.c(j, i, k) : f.c(i, j, k));
        b[row] = (j == k) ? 1 : 0;
      }
  return solve_linear(m, b);
}

std::optional<std::vector<Scalar>> solve_counit(const FrobeniusData& f) {
  const std::size_t r = f.rank;
  ExactMatrix m(f.ring, 2 * r * r, r);
  std::vector<Scalar> b(2 * r * r, 0);
  for (std::size_t side = 0; side < 2; ++side)
    for (std::size_t k = 0; k < r; ++k)
      for (std::size_t x = 0; x < r; ++x) {
        const std::size_t row = (side * r + k) * r + x;
        for (std::size_t y = 0; y < r; ++y) m.set(row, y, side ? f.d(k, x, y) : f.d(k, y, x));
        b[row] = (k == x) ? 1 : 0;
      }
  return solve_linear(m, b);
}

AxiomReport check_axioms(const FrobeniusData& f) {
  const RingSpec& R = f.ring;
  const std::size_t r = f.rank;
  AxiomReport rep;

  rep.associative = true;
  for (std::size_t i = 0; i < r && rep.associative; ++i)
    for (std::size_t j = 0; j < r && rep.associative; ++j)
      for (std::size_t k = 0; k < r && rep.associative; ++k)
        for (std::size_t m = 0; m < r && rep.associative; ++m) {
          Scalar lhs = 0, rhs = 0;
          for (std::size_t l = 0; l < r; ++l) {
            lhs = R.add(lhs, R.mul(f.c(i, j, l), f.c(l, k, m)));
            rhs = R.add(rhs, R.mul(f.c(j, k, l), f.c(i, l, m)));
          }
          rep.associative = lhs == rhs;
        }

  rep.commutative = true;
  rep.cocommutative = true;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < r; ++k) {
        rep.commutative = rep.commutative && f.c(i, j, k) == f.c(j, i, k);
        rep.cocommutative = rep.cocommutative && f.d(k, i, j) == f.d(k, j, i);
      }

  rep.coassociative = true;
  for (std::size_t k = 0; k < r && rep.coassociative; ++k)
    for (std::size_t a = 0; a < r && rep.coassociative; ++a)
      for (std::size_t b = 0; b < r && rep.coassociative; ++b)
        for (std::size_t c = 0; c < r && rep.coassociative; ++c) {
          Scalar lhs = 0, rhs = 0;
          for (std::size_t l = 0; l < r; ++l) {
            lhs = R.add(lhs, R.mul(f.d(k, l, c), f.d(l, a, b)));
            rhs = R.add(rhs, R.mul(f.d(k, a, l), f.d(l, b, c)));
          }
          rep.coassociative = lhs == rhs;
        }

  // Delta m = (m (x) id)(id (x) Delta) = (id (x) m)(Delta (x) id) on e_i (x) e_j, coefficient of e_a (x) e_b.
  rep.frobenius_relation = true;
  for (std::size_t i = 0; i < r && rep.frobenius_relation; ++i)
    for (std::size_t j = 0; j < r && rep.frobenius_relation; ++j)
      for (std::size_t a = 0; a < r && rep.frobenius_relation; ++a)
        for (std::size_t b = 0; b < r && rep.frobenius_relation; ++b) {
          Scalar mid = 0, left = 0, right = 0;
          for (std::size_t l = 0; l < r; ++l) {
            mid = R.add(mid, R.mul(f.c(i, j, l), f.d(l, a, b)));
            left = R.add(left, R.mul(f.d(j, l, b), f.c(i, l, a)));
            right = R.add(right, R.mul(f.d(i, a, l), f.c(l, j, b)));
          }
          rep.frobenius_relation = mid == left && mid == right;
        }

  auto unit_holds = [&](const std::vector<Scalar>& u) {
    FrobeniusData g = f;
    g.unit = u;
    g.counit.reset();
    try {
      g.validate();
      return true;
    } catch (const Error&) {
      return false;
    }
  };
  auto counit_holds = [&](const std::vector<Scalar>& e) {
    FrobeniusData g = f;
    g.counit = e;
    g.unit.reset();
    try {
      g.validate();
      return true;
    } catch (const Error&) {
      return false;
    }
  };
  rep.unit_ok = f.unit ? unit_holds(*f.unit) : solve_unit(f).has_value();
  rep.counit_ok = f.counit ? counit_holds(*f.counit) : solve_counit(f).has_value();

  rep.mult_surjective = onto(f.mult_matrix(), r);
  const ExactMatrix dm = f.comult_matrix();
  rep.comult_injective = rank(dm) == r;
  rep.comult_split_injective =
      R.kind() == RingKind::Integers ? all_unit_factors(smith_invariants(dm), r) : rep.comult_injective;
  return rep;
}

FrobeniusData a5(long h, long t, const RingSpec& ring) {
  FrobeniusData f(ring, 2);
  // basis (1, x), x^2 = t 1 + h x
  f.set_c(0, 0, 0, 1);
  f.set_c(0, 1, 1, 1);
  f.set_c(1, 0, 1, 1);
  f.set_c(1, 1, 0, t);
  f.set_c(1, 1, 1, h);
  f.set_d(0, 0, 0, -h);
  f.set_d(0, 0, 1, 1);
  f.set_d(0, 1, 0, 1);
  f.set_d(1, 0, 0, t);
  f.set_d(1, 1, 1, 1);
  f.unit = std::vector<Scalar>{1, 0};
  f.counit = std::vector<Scalar>{0, 1};
  return f;
}

FrobeniusData a4_evaluate(const A4Point& p, const RingSpec& ring) {
  const Integer a = p.a, c = p.c, e = p.e, f_ = p.f, h = p.h, t = p.t;
  if (a * e - c * f_ != 0 || a * f_ + c * h * f_ - c * e * t != 1) throw Error("not a point of Spec R4");
  FrobeniusData f = a5(p.h, p.t, ring);
  std::fill(f.comult.begin(), f.comult.end(), 0);
  // Delta(1) = (et - hf) 1(x)1 + e x(x)x + f (1(x)x + x(x)1)
  f.set_d(0, 0, 0, Scalar(e * t - h * f_));
  f.set_d(0, 1, 1, Scalar(e));
  f.set_d(0, 0, 1, Scalar(f_));
  f.set_d(0, 1, 0, Scalar(f_));
  // Delta(x) = ft 1(x)1 + et (1(x)x + x(x)1) + (f + eh) x(x)x
  f.set_d(1, 0, 0, Scalar(f_ * t));
  f.set_d(1, 0, 1, Scalar(e * t));
  f.set_d(1, 1, 0, Scalar(e * t));
  f.set_d(1, 1, 1, Scalar(f_ + e * h));
  f.counit = std::vector<Scalar>{ring.from_rational(Scalar(-c)), ring.from_rational(Scalar(a))};
  return f;
}

namespace {

// Column j = y e_j.
ExactMatrix left_multiplication(const FrobeniusData& f, const std::vector<Scalar>& y) {
  ExactMatrix m(f.ring, f.rank, f.rank);
  for (std::size_t j = 0; j < f.rank; ++j) {
    std::vector<Scalar> e(f.rank, 0);
    e[j] = 1;
    auto col = f.multiply(y, e);
    for (std::size_t k = 0; k < f.rank; ++k) m.set(k, j, col[k]);
  }
  return m;
}

std::vector<Scalar> unit_of(const FrobeniusData& f) {
  if (f.unit) return *f.unit;
  auto u = solve_unit(f);
  if (!u) throw Error("algebra has no unit");
  return *u;
}

}  // namespace

std::optional<std::vector<Scalar>> invert_element(const FrobeniusData& f, const std::vector<Scalar>& y) {
  const auto u = unit_of(f);
  if (y.size() != f.rank) throw Error("vector length does not match rank");
  std::vector<Scalar> yr;
  for (const auto& v : y) yr.push_back(f.ring.from_rational(v));
  auto z = solve_linear(left_multiplication(f, yr), u);
  if (!z) return std::nullopt;
  // In a commutative algebra a one-sided inverse is two-sided; check anyway.
  if (f.multiply(*z, yr) != u) return std::nullopt;
  return z;
}

FrobeniusData twist(const FrobeniusData& f, const std::vector<Scalar>& y) {
  auto z = invert_element(f, y);
  if (!z) throw Error("twisting element is not invertible");
  std::vector<Scalar> yr;
  for (const auto& v : y) yr.push_back(f.ring.from_rational(v));
  const ExactMatrix ly = left_multiplication(f, yr), lz = left_multiplication(f, *z);
  FrobeniusData g = f;
  const std::size_t r = f.rank;
  if (f.counit) {
    std::vector<Scalar> eps(r, 0);
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < r; ++k) eps[j] = f.ring.add(eps[j], f.ring.mul((*f.counit)[k], ly.at(k, j)));
    g.counit = eps;
  }
  // Delta'(e_j) = sum_k (z e_j)_k Delta(e_k)
  ExactMatrix dm = f.comult_matrix() * lz;
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t b = 0; b < r; ++b) g.set_d(j, a, b, dm.at(a * r + b, j));
  return g;
}

FrobeniusData dualize(const FrobeniusData& f) {
  FrobeniusData g(f.ring, f.rank);
  const std::size_t r = f.rank;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < r; ++k) {
        g.set_c(i, j, k, f.d(k, i, j));
        g.set_d(k, i, j, f.c(i, j, k));
      }
  g.unit = f.counit;
  g.counit = f.unit;
  return g;
}

ExactMatrix generator_map(const FrobeniusData& f, std::size_t n_in, std::size_t n_out, const GeneratorSpec& spec) {
  const std::size_t r = f.rank;
  ExactMatrix out(f.ring, power(r, n_out), power(r, n_in));
  auto others_of = [&](std::initializer_list<std::size_t> skip) {
    std::vector<std::size_t> o;
    for (std::size_t p = 0; p < n_in; ++p)
      if (std::find(skip.begin(), skip.end(), p) == skip.end()) o.push_back(p);
    return o;
  };

  if (const auto* m = std::get_if<Merge>(&spec)) {
    if (n_in < 2 || n_out + 1 != n_in || m->i >= n_in || m->j >= n_in || m->i == m->j || m->k >= n_out)
      throw Error("invalid merge positions");
    const auto rest = others_of({m->i, m->j});
    for (std::size_t col = 0; col < out.cols(); ++col) {
      const auto in = digits(col, r, n_in);
      std::vector<std::size_t> o;
      for (auto p : rest) o.push_back(in[p]);
      o.insert(o.begin() + static_cast<std::ptrdiff_t>(m->k), 0);
      for (std::size_t l = 0; l < r; ++l) {
        const Scalar& v = f.c(in[m->i], in[m->j], l);
        if (v == 0) continue;
        o[m->k] = l;
        out.accumulate(undigits(o, r), col, v);
      }
    }
    return out;
  }
  if (const auto* s = std::get_if<Split>(&spec)) {
    if (n_out != n_in + 1 || s->k >= n_in || s->i >= n_out || s->j >= n_out || s->i == s->j)
      throw Error("invalid split positions");
    const auto rest = others_of({s->k});
    for (std::size_t col = 0; col < out.cols(); ++col) {
      const auto in = digits(col, r, n_in);
      std::vector<std::size_t> o(n_out);
      std::size_t q = 0;
      for (std::size_t p = 0; p < n_out; ++p)
        if (p != s->i && p != s->j) o[p] = in[rest[q++]];
      for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = 0; b < r; ++b) {
          const Scalar& v = f.d(in[s->k], a, b);
          if (v == 0) continue;
          o[s->i] = a;
          o[s->j] = b;
          out.accumulate(undigits(o, r), col, v);
        }
    }
    return out;
  }
  const auto& sigma = std::get<Perm>(spec).sigma;
  if (n_in != n_out || sigma.size() != n_in) throw Error("invalid permutation");
  std::vector<bool> seen(n_in, false);
  for (auto p : sigma) {
    if (p >= n_in || seen[p]) throw Error("invalid permutation");
    seen[p] = true;
  }
  for (std::size_t col = 0; col < out.cols(); ++col) {
    const auto in = digits(col, r, n_in);
    std::vector<std::size_t> o(n_in);
    for (std::size_t p = 0; p < n_in; ++p) o[sigma[p]] = in[p];
    out.set(undigits(o, r), col, 1);
  }
  return out;
}

RelationReport verify_n2cob_relations(const FrobeniusData& f) {
  RelationReport rep;
  const ExactMatrix m = generator_map(f, 2, 1, Merge{0, 1, 0});
  const ExactMatrix d = generator_map(f, 1, 2, Split{0, 0, 1});
  const ExactMatrix swap = generator_map(f, 2, 2, Perm{{1, 0}});
  const ExactMatrix m_id = generator_map(f, 3, 2, Merge{0, 1, 0});
  const ExactMatrix id_m = generator_map(f, 3, 2, Merge{1, 2, 1});
  const ExactMatrix d_id = generator_map(f, 2, 3, Split{0, 0, 1});
  const ExactMatrix id_d = generator_map(f, 2, 3, Split{1, 1, 2});
  rep.associative = m * m_id == m * id_m;
  rep.commutative = m * swap == m;
  rep.coassociative = d_id * d == id_d * d;
  rep.cocommutative = swap * d == d;
  const ExactMatrix dm = d * m;
  rep.frobenius = dm == m_id * id_d && dm == id_m * d_id;
  return rep;
}

bool comult_determined_by_unit(const FrobeniusData& f) {
  const auto u = unit_of(f);
  const std::size_t r = f.rank;
  // Delta(1) as an r^2 vector.
  std::vector<Scalar> d1(r * r, 0);
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t n = 0; n < r * r; ++n) d1[n] = f.ring.add(d1[n], f.ring.mul(u[k], f.d(k, n / r, n % r)));
  for (std::size_t j = 0; j < r; ++j) {
    std::vector<Scalar> want(r * r, 0);
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t b = 0; b < r; ++b) {
        if (d1[a * r + b] == 0) continue;
        for (std::size_t l = 0; l < r; ++l)
          want[l * r + b] = f.ring.add(want[l * r + b], f.ring.mul(d1[a * r + b], f.c(j, a, l)));
      }
    for (std::size_t n = 0; n < r * r; ++n)
      if (want[n] != f.d(j, n / r, n % r)) return false;
  }
  return true;
}

}  // namespace frobknot
