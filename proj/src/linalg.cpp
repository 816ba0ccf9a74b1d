#include "frobknot/linalg.hpp"

#include <algorithm>
#include <cstdint>
#include <utility>

namespace frobknot {

ExactMatrix::ExactMatrix(RingSpec ring, std::size_t rows, std::size_t cols)
    : ring_(ring), rows_(rows), cols_(cols), entries_(rows * cols) {}

ExactMatrix::ExactMatrix(RingSpec ring, std::size_t rows, std::size_t cols,
                         std::vector<Scalar> entries)
    : ring_(ring), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols)
    throw Error("matrix entry count " + std::to_string(entries_.size()) + " != " +
                std::to_string(rows) + "x" + std::to_string(cols));
  for (auto& e : entries_) e = ring_.from_rational(e);
}

ExactMatrix ExactMatrix::identity(RingSpec ring, std::size_t n) {
  ExactMatrix m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m.entries_[i * n + i] = 1;
  return m;
}

ExactMatrix ExactMatrix::from_ints(RingSpec ring, std::size_t rows, std::size_t cols,
                                   std::initializer_list<long> values) {
  std::vector<Scalar> e;
  e.reserve(values.size());
  for (long v : values) e.emplace_back(v);
  return ExactMatrix(ring, rows, cols, std::move(e));
}

void ExactMatrix::set(std::size_t i, std::size_t j, const Scalar& v) {
  entries_[i * cols_ + j] = ring_.from_rational(v);
}

void ExactMatrix::accumulate(std::size_t i, std::size_t j, const Scalar& v) {
  auto& e = entries_[i * cols_ + j];
  e = ring_.add(e, ring_.from_rational(v));
}

bool ExactMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Scalar& x) { return x == 0; });
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(ring_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.entries_[j * rows_ + i] = at(i, j);
  return t;
}

ExactMatrix ExactMatrix::negated() const {
  ExactMatrix t = *this;
  for (auto& e : t.entries_) e = ring_.neg(e);
  return t;
}

ExactMatrix ExactMatrix::change_ring(const RingSpec& target) const {
  return ExactMatrix(target, rows_, cols_, entries_);
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (!(a.ring_ == b.ring_)) throw Error("matrix product over different rings");
  if (a.cols_ != b.rows_)
    throw Error("matrix product dimension mismatch: " + std::to_string(a.rows_) + "x" +
                std::to_string(a.cols_) + " * " + std::to_string(b.rows_) + "x" +
                std::to_string(b.cols_));
  const RingSpec& ring = a.ring_;
  ExactMatrix c(ring, a.rows_, b.cols_);
  // Differentials are sparse; skip zero entries of a.
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Scalar& bkj = b.at(k, j);
        if (bkj == 0) continue;
        Scalar& cij = c.entries_[i * c.cols_ + j];
        cij += aik * bkj;
      }
    }
  }
  if (ring.is_prime_field())
    for (auto& e : c.entries_) e = ring.from_rational(e);
  return c;
}

ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
  if (!(a.ring_ == b.ring_) || a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw Error("matrix sum shape or ring mismatch");
  ExactMatrix c = a;
  for (std::size_t i = 0; i < c.entries_.size(); ++i)
    c.entries_[i] = a.ring_.add(a.entries_[i], b.entries_[i]);
  return c;
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
  return a.ring_ == b.ring_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
         a.entries_ == b.entries_;
}

ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b) {
  if (!(a.ring() == b.ring())) throw Error("kron over different rings");
  const RingSpec& ring = a.ring();
  ExactMatrix k(ring, a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a.at(i, j) == 0) continue;
      for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c)
          if (b.at(r, c) != 0)
            k.set(i * b.rows() + r, j * b.cols() + c, ring.mul(a.at(i, j), b.at(r, c)));
    }
  return k;
}

ExactMatrix column(const RingSpec& ring, std::span<const Scalar> values) {
  return ExactMatrix(ring, values.size(), 1, std::vector<Scalar>(values.begin(), values.end()));
}

namespace {

// Integer working copy of a Z or Q matrix with each row scaled by the lcm of
// its denominators. Row scaling does not change rank.
std::vector<std::vector<Integer>> integral_rows(const ExactMatrix& m) {
  std::vector<std::vector<Integer>> rows(m.rows(), std::vector<Integer>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Scalar& q = m.at(i, j);
      rows[i][j] = q.get_num() * (l / q.get_den());
    }
  }
  return rows;
}

std::size_t rank_integral(std::vector<std::vector<Integer>> a, std::size_t cols) {
  std::size_t r = 0;
  const std::size_t n = a.size();
  for (std::size_t c = 0; c < cols && r < n; ++c) {
    std::size_t piv = n;
    for (std::size_t i = r; i < n; ++i)
      if (a[i][c] != 0 && (piv == n || abs(a[i][c]) < abs(a[piv][c]))) piv = i;
    if (piv == n) continue;
    std::swap(a[r], a[piv]);
    for (std::size_t i = r + 1; i < n; ++i) {
      if (a[i][c] == 0) continue;
      Integer g, f1, f2;
      mpz_gcd(g.get_mpz_t(), a[r][c].get_mpz_t(), a[i][c].get_mpz_t());
      f1 = a[r][c] / g;
      f2 = a[i][c] / g;
      Integer content = 0;
      for (std::size_t j = c; j < cols; ++j) {
        a[i][j] = f1 * a[i][j] - f2 * a[r][j];
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), a[i][j].get_mpz_t());
      }
      if (content > 1)
        for (std::size_t j = c; j < cols; ++j) mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), content.get_mpz_t());
    }
    ++r;
  }
  return r;
}

std::size_t rank_mod_p(const ExactMatrix& m) {
  const std::int64_t p = m.ring().modulus();
  std::vector<std::vector<std::int64_t>> a(m.rows(), std::vector<std::int64_t>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m.at(i, j).get_num().get_si();
  auto inv = [p](std::int64_t x) {
    std::int64_t r = 1, e = p - 2, b = x % p;
    while (e > 0) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  };
  std::size_t r = 0;
  const std::size_t n = a.size();
  for (std::size_t c = 0; c < m.cols() && r < n; ++c) {
    std::size_t piv = r;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) continue;
    std::swap(a[r], a[piv]);
    const std::int64_t iv = inv(a[r][c]);
    for (std::size_t j = c; j < m.cols(); ++j) a[r][j] = a[r][j] * iv % p;
    for (std::size_t i = r + 1; i < n; ++i) {
      const std::int64_t f = a[i][c];
      if (f == 0) continue;
      for (std::size_t j = c; j < m.cols(); ++j) a[i][j] = ((a[i][j] - f * a[r][j]) % p + p) % p;
    }
    ++r;
  }
  return r;
}

// Smith reduction on an integer working matrix. left/right are updated when
// non-null.
class SmithReducer {
 public:
  SmithReducer(const ExactMatrix& m, bool transforms)
      : rows_(m.rows()), cols_(m.cols()), a_(rows_ * cols_), transforms_(transforms) {
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] = m.entries()[i].get_num();
    if (transforms_) {
      left_.assign(rows_ * rows_, 0);
      right_.assign(cols_ * cols_, 0);
      for (std::size_t i = 0; i < rows_; ++i) left_[i * rows_ + i] = 1;
      for (std::size_t i = 0; i < cols_; ++i) right_[i * cols_ + i] = 1;
    }
  }

  std::vector<Integer> run() {
    const std::size_t k = std::min(rows_, cols_);
    std::vector<Integer> diag(k, 0);
    for (std::size_t t = 0; t < k; ++t) {
      if (!pivot_to(t)) break;
      for (;;) {
        if (!clear_cross(t)) {
          pivot_to(t);
          continue;
        }
        // Row t and column t are clear; enforce divisibility of the rest.
        std::size_t bi = rows_, bj = cols_;
        for (std::size_t i = t + 1; i < rows_ && bi == rows_; ++i)
          for (std::size_t j = t + 1; j < cols_; ++j)
            if (!mpz_divisible_p(at(i, j).get_mpz_t(), at(t, t).get_mpz_t())) {
              bi = i;
              bj = j;
              break;
            }
        if (bi == rows_) break;
        add_row(t, bi, 1);
        (void)bj;
      }
      if (at(t, t) < 0) negate_row(t);
      diag[t] = at(t, t);
    }
    return diag;
  }

  ExactMatrix left() const { return to_matrix(left_, rows_, rows_); }
  ExactMatrix right() const { return to_matrix(right_, cols_, cols_); }

 private:
  Integer& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }

  static ExactMatrix to_matrix(const std::vector<Integer>& v, std::size_t r, std::size_t c) {
    std::vector<Scalar> e(v.begin(), v.end());
    return ExactMatrix(RingSpec::integers(), r, c, std::move(e));
  }

  // Moves the smallest nonzero |entry| of the trailing submatrix to (t,t).
  bool pivot_to(std::size_t t) {
    std::size_t pi = rows_, pj = cols_;
    for (std::size_t i = t; i < rows_; ++i)
      for (std::size_t j = t; j < cols_; ++j) {
        const Integer& v = at(i, j);
        if (v != 0 && (pi == rows_ || cmpabs(v, at(pi, pj)) < 0)) {
          pi = i;
          pj = j;
        }
      }
    if (pi == rows_) return false;
    swap_rows(t, pi);
    swap_cols(t, pj);
    return true;
  }

  // Reduces row t and column t modulo the pivot. Returns true when both are
  // cleared; false when a nonzero remainder is left behind.
  bool clear_cross(std::size_t t) {
    bool clear = true;
    Integer q;
    for (std::size_t i = t + 1; i < rows_; ++i) {
      if (at(i, t) == 0) continue;
      mpz_tdiv_q(q.get_mpz_t(), at(i, t).get_mpz_t(), at(t, t).get_mpz_t());
      add_row(i, t, -q);
      if (at(i, t) != 0) clear = false;
    }
    for (std::size_t j = t + 1; j < cols_; ++j) {
      if (at(t, j) == 0) continue;
      mpz_tdiv_q(q.get_mpz_t(), at(t, j).get_mpz_t(), at(t, t).get_mpz_t());
      add_col(j, t, -q);
      if (at(t, j) != 0) clear = false;
    }
    return clear;
  }

  static int cmpabs(const Integer& a, const Integer& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap(a_[i * cols_ + c], a_[j * cols_ + c]);
    if (transforms_)
      for (std::size_t c = 0; c < rows_; ++c) std::swap(left_[i * rows_ + c], left_[j * rows_ + c]);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap(a_[r * cols_ + i], a_[r * cols_ + j]);
    if (transforms_)
      for (std::size_t r = 0; r < cols_; ++r) std::swap(right_[r * cols_ + i], right_[r * cols_ + j]);
  }
  // row dst += f * row src
  void add_row(std::size_t dst, std::size_t src, const Integer& f) {
    if (f == 0) return;
    for (std::size_t c = 0; c < cols_; ++c)
      if (a_[src * cols_ + c] != 0) a_[dst * cols_ + c] += f * a_[src * cols_ + c];
    if (transforms_)
      for (std::size_t c = 0; c < rows_; ++c)
        if (left_[src * rows_ + c] != 0) left_[dst * rows_ + c] += f * left_[src * rows_ + c];
  }
  // col dst += f * col src
  void add_col(std::size_t dst, std::size_t src, const Integer& f) {
    if (f == 0) return;
    for (std::size_t r = 0; r < rows_; ++r)
      if (a_[r * cols_ + src] != 0) a_[r * cols_ + dst] += f * a_[r * cols_ + src];
    if (transforms_)
      for (std::size_t r = 0; r < cols_; ++r)
        if (right_[r * cols_ + src] != 0) right_[r * cols_ + dst] += f * right_[r * cols_ + src];
  }
  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < cols_; ++c) a_[i * cols_ + c] = -a_[i * cols_ + c];
    if (transforms_)
      for (std::size_t c = 0; c < rows_; ++c) left_[i * rows_ + c] = -left_[i * rows_ + c];
  }

  std::size_t rows_, cols_;
  std::vector<Integer> a_, left_, right_;
  bool transforms_;
};

void require_integers(const ExactMatrix& m) {
  if (m.ring().kind() != RingKind::Integers) throw Error("SNF requires integer matrix");
}

}  // namespace

SNFResult smith_normal_form(const ExactMatrix& m) {
  require_integers(m);
  SmithReducer r(m, true);
  auto diag = r.run();
  return SNFResult{std::move(diag), r.left(), r.right()};
}

std::vector<Integer> smith_invariants(const ExactMatrix& m) {
  require_integers(m);
  SmithReducer r(m, false);
  return r.run();
}

std::size_t rank(const ExactMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  if (m.ring().is_prime_field()) return rank_mod_p(m);
  return rank_integral(integral_rows(m), m.cols());
}

Scalar determinant(const ExactMatrix& m) {
  if (m.rows() != m.cols()) throw Error("determinant of a non-square matrix");
  const RingSpec& ring = m.ring();
  const std::size_t n = m.rows();
  // Gaussian elimination in the fraction field (Q, or F_p itself).
  std::vector<Scalar> a(m.entries().begin(), m.entries().end());
  Scalar det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv * n + c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a[c * n + j], a[piv * n + j]);
      det = -det;
    }
    det *= a[c * n + c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a[i * n + c] == 0) continue;
      Scalar f = a[i * n + c] / a[c * n + c];
      for (std::size_t j = c; j < n; ++j) a[i * n + j] -= f * a[c * n + j];
    }
    if (ring.is_prime_field())
      for (auto& e : a) e = ring.from_rational(e);
  }
  return ring.is_prime_field() ? ring.from_rational(det) : det;
}

std::optional<std::vector<Scalar>> solve_linear(const ExactMatrix& m, std::span<const Scalar> b) {
  if (b.size() != m.rows())
    throw Error("solve_linear: right-hand side has " + std::to_string(b.size()) +
                " entries, matrix has " + std::to_string(m.rows()) + " rows");
  const RingSpec& ring = m.ring();
  const std::size_t rows = m.rows(), cols = m.cols();

  if (ring.kind() == RingKind::Integers) {
    // left * m * right = D; m x = b  <=>  D y = left b, x = right y.
    SNFResult snf = smith_normal_form(m);
    std::vector<Integer> lb(rows, 0);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t k = 0; k < rows; ++k) lb[i] += snf.left.at(i, k).get_num() * b[k].get_num();
    std::vector<Integer> y(cols, 0);
    for (std::size_t i = 0; i < rows; ++i) {
      const Integer d = i < snf.diagonal.size() ? snf.diagonal[i] : Integer(0);
      if (d == 0) {
        if (lb[i] != 0) return std::nullopt;
        continue;
      }
      if (!mpz_divisible_p(lb[i].get_mpz_t(), d.get_mpz_t())) return std::nullopt;
      y[i] = lb[i] / d;
    }
    std::vector<Scalar> x(cols, 0);
    for (std::size_t i = 0; i < cols; ++i) {
      Integer s = 0;
      for (std::size_t k = 0; k < cols; ++k) s += snf.right.at(i, k).get_num() * y[k];
      x[i] = Scalar(s);
    }
    return x;
  }

  // Field: Gauss-Jordan on the augmented matrix.
  std::vector<std::vector<Scalar>> a(rows, std::vector<Scalar>(cols + 1));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = m.at(i, j);
    a[i][cols] = ring.from_rational(b[i]);
  }
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[r], a[piv]);
    const Scalar inv = *ring.inverse(a[r][c]);
    for (auto& e : a[r]) e = ring.mul(e, inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Scalar f = a[i][c];
      for (std::size_t j = c; j <= cols; ++j) a[i][j] = ring.sub(a[i][j], ring.mul(f, a[r][j]));
    }
    pivot_cols.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (a[i][cols] != 0) return std::nullopt;
  std::vector<Scalar> x(cols, 0);
  for (std::size_t i = 0; i < r; ++i) x[pivot_cols[i]] = a[i][cols];
  return x;
}

HomologySummands homology_summands(const ExactMatrix& d_in, const ExactMatrix& d_out) {
  if (!(d_in.ring() == d_out.ring())) throw Error("homology_summands: maps over different rings");
  if (d_in.rows() != d_out.cols())
    throw Error("homology_summands: d_in has " + std::to_string(d_in.rows()) +
                " rows but d_out has " + std::to_string(d_out.cols()) + " columns");
  if (d_in.cols() > 0 && d_out.rows() > 0 && !(d_out * d_in).is_zero())
    throw Error("not a complex at this degree");

  HomologySummands h;
  const std::size_t middle = d_in.rows();
  const std::size_t rank_out = rank(d_out);
  if (d_in.ring().kind() != RingKind::Integers) {
    h.free_rank = middle - rank_out - rank(d_in);
    return h;
  }
  // ker(d_out) is saturated in Z^n, so the torsion of ker/im is the torsion
  // of coker(d_in): its invariant factors greater than one.
  std::size_t rank_in = 0;
  for (const Integer& d : smith_invariants(d_in)) {
    if (d == 0) continue;
    ++rank_in;
    if (d > 1) h.torsion.push_back(d);
  }
  h.free_rank = middle - rank_out - rank_in;
  return h;
}

}  // namespace frobknot
