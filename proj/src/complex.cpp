#include "frobknot/complex.hpp"

#include <bit>
#include <set>

namespace frobknot {

namespace {

bool is_a5_00(const FrobeniusData& f) {
  if (f.rank != 2) return false;
  const FrobeniusData ref = a5(0, 0, f.ring);
  return f.mult == ref.mult && f.comult == ref.comult;
}

ExactMatrix submatrix(const ExactMatrix& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
  ExactMatrix out(m.ring(), rows.size(), cols.size());
  for (std::size_t a = 0; a < rows.size(); ++a)
    for (std::size_t b = 0; b < cols.size(); ++b) {
      const Scalar& v = m.at(rows[a], cols[b]);
      if (v != 0) out.set(a, b, v);
    }
  return out;
}

}  // namespace

ChainComplex build_complex(const ResolutionCube& cube, const FrobeniusData& f) {
  if (f.rank == 0) throw Error("algebra rank must be at least 1");
  ChainComplex c;
  c.ring = f.ring;
  c.algebra_rank = f.rank;
  const std::size_t n = cube.n;
  const std::size_t r = f.rank;
  auto block_size = [&](std::uint64_t m) {
    std::size_t s = 1;
    for (std::size_t k = 0; k < cube.circles[m].size(); ++k) s *= r;
    return s;
  };

  c.ranks.assign(n + 1, 0);
  for (std::size_t i = 0; i <= n; ++i)
    for (auto m : cube.states_of_degree(i)) {
      c.offset[m] = c.ranks[i];
      c.ranks[i] += block_size(m);
    }
  for (std::size_t i = 0; i < n; ++i) c.d.emplace_back(f.ring, c.ranks[i + 1], c.ranks[i]);

  for (const auto& e : cube.edges) {
    const std::size_t i = std::popcount(e.from);
    const std::size_t n_in = cube.circles[e.from].size();
    const std::size_t n_out = cube.circles[e.to].size();
    const ExactMatrix block = e.kind == SaddleKind::Merge ? generator_map(f, n_in, n_out, Merge{e.i, e.j, e.k})
                                                          : generator_map(f, n_in, n_out, Split{e.k, e.i, e.j});
    const std::size_t row0 = c.offset[e.to], col0 = c.offset[e.from];
    const bool negate = e.sign_exponent % 2 != 0;
    for (std::size_t a = 0; a < block.rows(); ++a)
      for (std::size_t b = 0; b < block.cols(); ++b) {
        const Scalar& v = block.at(a, b);
        if (v != 0) c.d[i].set(row0 + a, col0 + b, negate ? f.ring.neg(v) : v);
      }
  }

  if (is_a5_00(f)) {
    std::vector<std::vector<long>> q(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
      q[i].resize(c.ranks[i]);
      for (auto m : cube.states_of_degree(i)) {
        const std::size_t circles = cube.circles[m].size();
        const std::size_t size = block_size(m);
        for (std::size_t idx = 0; idx < size; ++idx) {
          // basis digit 0 is 1 (degree +1), digit 1 is x (degree -1)
          const long xs = std::popcount(idx);
          q[i][c.offset[m] + idx] = static_cast<long>(circles) - 2 * xs + static_cast<long>(i);
        }
      }
    }
    c.quantum = std::move(q);
  }
  return c;
}

ChainComplex build_complex(const LinkDiagram& d, const FrobeniusData& f, bool normalize) {
  if (normalize && !d.oriented()) throw Error("normalization needs an oriented diagram");
  ChainComplex c = build_complex(build_cube(d), f);
  if (d.oriented()) {
    c.n_plus = d.n_plus();
    c.n_minus = d.n_minus();
  }
  if (normalize) {
    c.normalized = true;
    c.shift = -c.n_minus;
    if (c.quantum)
      for (auto& row : *c.quantum)
        for (long& j : row) j += c.n_plus - 2 * c.n_minus;
  }
  return c;
}

bool verify_d_squared(const ChainComplex& c) {
  for (std::size_t i = 0; i + 1 < c.d.size(); ++i)
    if (!(c.d[i + 1] * c.d[i]).is_zero()) return false;
  return true;
}

HomologyTable homology(const ChainComplex& c) {
  if (!verify_d_squared(c)) throw Error("d^2 != 0");
  HomologyTable t;
  const std::size_t n = c.ranks.size();
  for (std::size_t i = 0; i < n; ++i) {
    const ExactMatrix d_in = i > 0 ? c.d[i - 1] : ExactMatrix(c.ring, c.ranks[i], 0);
    const ExactMatrix d_out = i + 1 < n ? c.d[i] : ExactMatrix(c.ring, 0, c.ranks[i]);
    const auto h = homology_summands(d_in, d_out);
    t.push_back({c.degree(i), std::nullopt, h.free_rank, h.torsion});
  }
  return t;
}

HomologyTable bigraded_homology(const ChainComplex& c) {
  if (!c.quantum) throw Error("bigraded homology needs the quantum grading of a5(0,0)");
  if (!verify_d_squared(c)) throw Error("d^2 != 0");
  const auto& q = *c.quantum;
  const std::size_t n = c.ranks.size();
  std::set<long> js;
  for (const auto& row : q) js.insert(row.begin(), row.end());
  auto indices = [&](std::size_t i, long j) {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < q[i].size(); ++k)
      if (q[i][k] == j) out.push_back(k);
    return out;
  };
  HomologyTable t;
  for (std::size_t i = 0; i < n; ++i) {
    for (long j : js) {
      const auto mid = indices(i, j);
      if (mid.empty()) continue;
      const ExactMatrix d_in =
          i > 0 ? submatrix(c.d[i - 1], mid, indices(i - 1, j)) : ExactMatrix(c.ring, mid.size(), 0);
      const ExactMatrix d_out =
          i + 1 < n ? submatrix(c.d[i], indices(i + 1, j), mid) : ExactMatrix(c.ring, 0, mid.size());
      const auto h = homology_summands(d_in, d_out);
      if (h.free_rank == 0 && h.torsion.empty()) continue;
      t.push_back({c.degree(i), j, h.free_rank, h.torsion});
    }
  }
  return t;
}

long euler_characteristic(const ChainComplex& c) {
  long chi = 0;
  for (std::size_t i = 0; i < c.ranks.size(); ++i) {
    const long r = static_cast<long>(c.ranks[i]);
    chi += (c.degree(i) % 2 == 0) ? r : -r;
  }
  return chi;
}

LaurentPolynomial graded_euler_characteristic(const ChainComplex& c) {
  if (!c.quantum) throw Error("graded Euler characteristic is defined only for a5(0,0) (h = t = 0)");
  if (!c.normalized) throw Error("graded Euler characteristic needs a normalized complex");
  LaurentPolynomial chi;
  for (std::size_t i = 0; i < c.ranks.size(); ++i)
    for (long j : (*c.quantum)[i]) chi.add_term(j, (c.degree(i) % 2 == 0) ? 1 : -1);
  return chi;
}

long total_rank(const HomologyTable& t) {
  long s = 0;
  for (const auto& row : t) s += static_cast<long>(row.free_rank);
  return s;
}

}  // namespace frobknot
