#include "frobknot/rank2.hpp"

#include <map>

namespace frobknot {

namespace {

Vec2 reduce(const RingSpec& ring, const Vec2& v) {
  return {ring.from_rational(v[0]), ring.from_rational(v[1])};
}

Vec2 axpy(const RingSpec& r, const Scalar& a, const Vec2& x, const Vec2& y) {
  return {r.add(r.mul(a, x[0]), y[0]), r.add(r.mul(a, x[1]), y[1])};
}

bool triple_ok(const MultTable& t, int i, int j, int k) {
  Vec2 ei{0, 0}, ej{0, 0}, ek{0, 0};
  ei[i] = 1;
  ej[j] = 1;
  ek[k] = 1;
  return multiply(t, t.product(i, j), ek) == multiply(t, ei, t.product(j, k));
}

std::vector<Scalar> field_elements(const RingSpec& f) {
  if (!f.is_prime_field()) throw Error("prime field required, got " + f.name());
  std::vector<Scalar> out;
  for (std::uint32_t x = 0; x < f.modulus(); ++x) out.emplace_back(x);
  return out;
}

}  // namespace

MultTable::MultTable(RingSpec ring, bool commutative, std::array<Vec2, 4> products)
    : ring_(ring), commutative_(commutative), products_(std::move(products)) {
  for (auto& p : products_) p = reduce(ring_, p);
}

MultTable MultTable::commutative_table(const RingSpec& ring, const Vec2& e1e1, const Vec2& e1e2,
                                       const Vec2& e2e2) {
  return MultTable(ring, true, {e1e1, e1e2, e1e2, e2e2});
}

MultTable MultTable::general_table(const RingSpec& ring, const Vec2& e1e1, const Vec2& e1e2,
                                   const Vec2& e2e1, const Vec2& e2e2) {
  return MultTable(ring, false, {e1e1, e1e2, e2e1, e2e2});
}

Vec2 multiply(const MultTable& t, const Vec2& u, const Vec2& v) {
  const RingSpec& r = t.ring();
  Vec2 out{0, 0};
  for (int i = 0; i < 2; ++i) {
    if (u[i] == 0) continue;
    for (int j = 0; j < 2; ++j) {
      if (v[j] == 0) continue;
      out = axpy(r, r.mul(u[i], v[j]), t.product(i, j), out);
    }
  }
  return out;
}

bool is_associative(const MultTable& t) {
  if (!t.commutative()) return is_associative_full(t);
  return triple_ok(t, 0, 0, 1) && triple_ok(t, 1, 1, 0);
}

bool is_associative_full(const MultTable& t) {
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        if (!triple_ok(t, i, j, k)) return false;
  return true;
}

std::optional<Vec2> find_unit(const MultTable& t) {
  // Unknown u = x e1 + y e2. Rows: components of u e_j - e_j and e_j u - e_j.
  const RingSpec& r = t.ring();
  ExactMatrix m(r, 8, 2);
  std::vector<Scalar> b(8, 0);
  std::size_t row = 0;
  for (int left = 0; left < 2; ++left)
    for (int j = 0; j < 2; ++j)
      for (int comp = 0; comp < 2; ++comp, ++row) {
        for (int i = 0; i < 2; ++i) m.set(row, i, left ? t.product(i, j)[comp] : t.product(j, i)[comp]);
        b[row] = (comp == j) ? 1 : 0;
      }
  auto x = solve_linear(m, b);
  if (!x) return std::nullopt;
  return Vec2{(*x)[0], (*x)[1]};
}

std::vector<Vec2> idempotents(const MultTable& t, IdempotentSearch search) {
  const RingSpec& r = t.ring();
  std::vector<Scalar> values;
  if (search.bound == 0) {
    values = field_elements(r);
  } else {
    for (int v = -search.bound; v <= search.bound; ++v) values.push_back(r.from_int(v));
  }
  std::vector<Vec2> out;
  for (const auto& x : values)
    for (const auto& y : values) {
      Vec2 v{x, y};
      if (x == 0 && y == 0) continue;
      if (multiply(t, v, v) == v) out.push_back(v);
    }
  return out;
}

ExactMatrix product_matrix(const MultTable& t) {
  std::vector<std::pair<int, int>> cols{{0, 0}, {0, 1}};
  if (!t.commutative()) cols.emplace_back(1, 0);
  cols.emplace_back(1, 1);
  ExactMatrix m(t.ring(), 2, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (int k = 0; k < 2; ++k) m.set(k, c, t.product(cols[c].first, cols[c].second)[k]);
  return m;
}

bool is_multiplication_surjective(const MultTable& t) {
  ExactMatrix m = product_matrix(t);
  if (t.ring().kind() != RingKind::Integers) return rank(m) == 2;
  auto d = smith_invariants(m);
  return d.size() == 2 && d[0] == 1 && d[1] == 1;
}

MultTable transport(const MultTable& t, const ExactMatrix& g) {
  const RingSpec& r = t.ring();
  if (g.rows() != 2 || g.cols() != 2) throw Error("base change must be 2 x 2");
  const Scalar det = r.sub(r.mul(g.at(0, 0), g.at(1, 1)), r.mul(g.at(0, 1), g.at(1, 0)));
  auto inv_det = r.inverse(det);
  if (!inv_det) throw Error("base change is not invertible over " + r.name());
  // g^{-1} = inv_det * [[g11, -g01], [-g10, g00]]
  const Scalar gi[2][2] = {{r.mul(*inv_det, g.at(1, 1)), r.mul(*inv_det, r.neg(g.at(0, 1)))},
                           {r.mul(*inv_det, r.neg(g.at(1, 0))), r.mul(*inv_det, g.at(0, 0))}};
  std::array<Vec2, 4> prods;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      Vec2 fi{g.at(0, i), g.at(1, i)}, fj{g.at(0, j), g.at(1, j)};
      Vec2 old = multiply(t, fi, fj);
      prods[2 * i + j] = {r.add(r.mul(gi[0][0], old[0]), r.mul(gi[0][1], old[1])),
                          r.add(r.mul(gi[1][0], old[0]), r.mul(gi[1][1], old[1]))};
    }
  if (t.commutative()) return MultTable::commutative_table(r, prods[0], prods[1], prods[3]);
  return MultTable::general_table(r, prods[0], prods[1], prods[2], prods[3]);
}

std::vector<ExactMatrix> general_linear_2(const RingSpec& field) {
  const auto els = field_elements(field);
  std::vector<ExactMatrix> out;
  for (const auto& a : els)
    for (const auto& b : els)
      for (const auto& c : els)
        for (const auto& d : els) {
          if (field.sub(field.mul(a, d), field.mul(b, c)) == 0) continue;
          out.emplace_back(field, 2, 2, std::vector<Scalar>{a, b, c, d});
        }
  return out;
}

std::optional<ExactMatrix> isomorphic(const MultTable& a, const MultTable& b) {
  if (!a.ring().is_prime_field()) throw Error("isomorphism search needs a prime field");
  if (!(a.ring() == b.ring())) throw Error("tables live over different rings");
  // Cheap invariant first: rank of the product span.
  if (rank(product_matrix(a)) != rank(product_matrix(b))) return std::nullopt;
  const ExactMatrix id = ExactMatrix::identity(a.ring(), 2);
  if (transport(a, id) == b) return id;
  for (const auto& g : general_linear_2(a.ring())) {
    MultTable moved = transport(a, g);
    bool same = true;
    for (int i = 0; i < 2 && same; ++i)
      for (int j = 0; j < 2 && same; ++j) same = moved.product(i, j) == b.product(i, j);
    if (same) return g;
  }
  return std::nullopt;
}

std::string RepresentativeFamily::to_string() const {
  std::string s = label;
  if (params.empty()) return s;
  s += "(";
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) s += ", ";
    s += params[i].name + "=" + params[i].value.get_str();
  }
  return s + ")";
}

const std::vector<std::string>& family_labels() {
  static const std::vector<std::string> labels{
      "m6",     "m7",     "m8",     "m9",      "m10",     "m11",     "m12",    "m13",
      "m14",    "m15",    "m16",    "m17",     "m8_1R",   "m8_2R",   "m11R",   "m14_1R",
      "m14_2R", "m15_1R", "m2_1",   "m2_2",    "m2_3",    "m2_4",    "m2_5",   "m2_6",
      "m2_7",   "m2R",    "nc_left", "nc_right"};
  return labels;
}

const std::vector<std::string>& family_param_names(const std::string& label) {
  static const std::map<std::string, std::vector<std::string>> names{
      {"m6", {"alpha2", "beta2"}},   {"m9", {"beta2"}},
      {"m10", {"alpha4"}},           {"m8_1R", {"lambda2"}},
      {"m8_2R", {"beta2", "lambda2"}}, {"m11R", {"lambda2"}},
      {"m14_1R", {"alpha2"}},        {"m14_2R", {"alpha2"}},
      {"m15_1R", {"alpha2", "beta2", "alpha4", "beta4"}},
      {"m2_4", {"alpha4"}},          {"m2_5", {"alpha4"}},
      {"m2R", {"alpha2", "beta2"}}};
  static const std::vector<std::string> none;
  bool known = false;
  for (const auto& l : family_labels()) known = known || l == label;
  if (!known) throw Error("unknown family '" + label + "'");
  auto it = names.find(label);
  return it == names.end() ? none : it->second;
}

bool is_char2_family(const std::string& label) { return label.rfind("m2_", 0) == 0 || label == "m2R"; }

bool is_nonzero_square(const RingSpec& field, const Scalar& x) {
  if (x == 0) return false;
  for (const auto& y : field_elements(field))
    if (field.mul(y, y) == x) return true;
  return false;
}

namespace {

Scalar param(const RepresentativeFamily& f, const std::string& name) {
  for (const auto& p : f.params)
    if (p.name == name) return p.value;
  throw Error("family " + f.label + " is missing parameter " + name);
}

// x in K \ (K*)^2, zero included.
bool not_a_nonzero_square(const RingSpec& f, const Scalar& x) { return !is_nonzero_square(f, x); }

template <class Poly>
bool has_root(const RingSpec& f, Poly&& poly) {
  for (const auto& y : field_elements(f))
    if (poly(y) == 0) return true;
  return false;
}

}  // namespace

bool side_condition_holds(const RingSpec& field, const RepresentativeFamily& fam) {
  const RingSpec& r = field;
  const std::string& l = fam.label;
  if (l == "m9") return param(fam, "beta2") != r.from_rational(Scalar(1, 2));
  const bool needs_field =
      l == "m8_1R" || l == "m8_2R" || l == "m11R" || l == "m14_1R" || l == "m14_2R" || l == "m15_1R" ||
      l == "m2_5" || l == "m2R";
  if (!needs_field) return true;
  if (!r.is_prime_field()) throw Error("side condition of " + l + " is only decided over prime fields");
  if (l == "m8_1R" || l == "m11R") return not_a_nonzero_square(r, param(fam, "lambda2"));
  if (l == "m8_2R") {
    const Scalar one_minus = r.sub(1, r.mul(2, param(fam, "beta2")));
    return not_a_nonzero_square(r, param(fam, "lambda2")) && not_a_nonzero_square(r, one_minus);
  }
  if (l == "m14_1R" || l == "m14_2R") {
    // 2 alpha2 + 1 must avoid K^2, which contains 0.
    const Scalar v = r.add(r.mul(2, param(fam, "alpha2")), 1);
    return v != 0 && !is_nonzero_square(r, v);
  }
  if (l == "m15_1R") {
    const Scalar a2 = param(fam, "alpha2"), b2 = param(fam, "beta2"), a4 = param(fam, "alpha4"),
                 b4 = param(fam, "beta4");
    return !has_root(r, [&](const Scalar& y) { return evaluate_PA(r, a2, b2, a4, b4, y); });
  }
  if (l == "m2_5") {
    const Scalar a4 = param(fam, "alpha4");
    for (const auto& x : field_elements(r)) {
      if (x == 0 || x == 1) continue;
      if (r.add(r.add(r.mul(x, x), x), a4) == 0) return false;
    }
    return true;
  }
  // m2R: y^3 a2 b2 + y (a2 + b2^2) + 1 without roots.
  const Scalar a2 = param(fam, "alpha2"), b2 = param(fam, "beta2");
  return !has_root(r, [&](const Scalar& y) {
    const Scalar y3 = r.mul(y, r.mul(y, y));
    return r.add(r.add(r.mul(y3, r.mul(a2, b2)), r.mul(y, r.add(a2, r.mul(b2, b2)))), 1);
  });
}

MultTable instantiate(const RingSpec& ring, const RepresentativeFamily& fam) {
  const auto& names = family_param_names(fam.label);
  if (names.size() != fam.params.size())
    throw Error("family " + fam.label + " takes " + std::to_string(names.size()) + " parameters");
  for (std::size_t i = 0; i < names.size(); ++i)
    if (fam.params[i].name != names[i])
      throw Error("family " + fam.label + " expects parameter " + names[i] + " at position " +
                  std::to_string(i));
  const bool char2 = ring.is_prime_field() && ring.modulus() == 2;
  if (fam.label.rfind("nc_", 0) != 0 && is_char2_family(fam.label) != char2)
    throw Error("family " + fam.label + (char2 ? " needs characteristic other than 2"
                                                : " is defined in characteristic 2 only"));
  if (!side_condition_holds(ring, fam)) throw Error("side condition fails for " + fam.to_string());

  auto p = [&](const std::string& n) { return ring.from_rational(param(fam, n)); };
  const Scalar half(1, 2);
  const std::string& l = fam.label;
  auto C = [&](Vec2 a, Vec2 b, Vec2 c) { return MultTable::commutative_table(ring, a, b, c); };
  const Vec2 zero{0, 0}, e1{1, 0}, e2{0, 1};
  if (l == "m6") return C(e1, {p("alpha2"), p("beta2")}, e2);
  if (l == "m7") return C(e1, {1, half}, zero);
  if (l == "m8") return C(e1, {0, half}, e1);
  if (l == "m9") return C(e1, {0, p("beta2")}, zero);
  if (l == "m10") return C(e1, e1, {p("alpha4"), 0});
  if (l == "m11") return C(e1, zero, e1);
  if (l == "m12") return C(e1, zero, zero);
  if (l == "m13") return C(e2, e2, zero);
  if (l == "m14") return C(e2, zero, zero);
  if (l == "m15") return C(e2, {-2, 3}, {-8, 8});
  if (l == "m16") return C(zero, e1, zero);
  if (l == "m17") return C(zero, zero, zero);
  if (l == "m8_1R") return C(e1, {0, half}, {p("lambda2"), 0});
  if (l == "m8_2R") return C(e1, {0, p("beta2")}, {p("lambda2"), 0});
  if (l == "m11R") return C(e1, zero, {p("lambda2"), 0});
  if (l == "m14_1R") return C(e1, {p("alpha2"), 1}, zero);
  if (l == "m14_2R") return C(e1, {p("alpha2"), 0}, zero);
  if (l == "m15_1R") return C(e2, {p("alpha2"), p("beta2")}, {p("alpha4"), p("beta4")});
  if (l == "m2_1") return C(e1, e2, e2);
  if (l == "m2_2") return C(e1, zero, zero);
  if (l == "m2_3") return C(e1, zero, e2);
  if (l == "m2_4") return C(e1, e2, {p("alpha4"), 0});
  if (l == "m2_5") return C(e1, e2, {p("alpha4"), 1});
  if (l == "m2_6") return C(e2, zero, zero);
  if (l == "m2_7") return C(zero, zero, zero);
  if (l == "m2R") {
    const Scalar a2 = p("alpha2"), b2 = p("beta2");
    return C(e2, {a2, b2}, {ring.mul(a2, b2), ring.add(a2, ring.mul(b2, b2))});
  }
  if (l == "nc_left") return MultTable::general_table(ring, zero, zero, e1, e2);
  if (l == "nc_right") return MultTable::general_table(ring, zero, e1, zero, e2);
  throw Error("unknown family '" + l + "'");
}

std::vector<RepresentativeFamily> family_instances(const RingSpec& field, const std::string& label) {
  const auto& names = family_param_names(label);
  const auto els = field_elements(field);
  std::vector<RepresentativeFamily> out;
  std::vector<std::size_t> idx(names.size(), 0);
  while (true) {
    RepresentativeFamily f{label, {}};
    for (std::size_t i = 0; i < names.size(); ++i) f.params.push_back({names[i], els[idx[i]]});
    if (side_condition_holds(field, f)) out.push_back(std::move(f));
    std::size_t pos = names.size();
    while (pos > 0 && ++idx[pos - 1] == els.size()) idx[--pos] = 0;
    if (pos == 0) break;
  }
  return out;
}

RepresentativeFamily classify(const MultTable& t) {
  const RingSpec& f = t.ring();
  if (!f.is_prime_field()) throw Error("classify needs a prime field");
  if (!t.is_commutative_as_table() || !is_associative_full(t))
    throw Error("classify expects an associative commutative table");
  const bool char2 = f.modulus() == 2;
  for (const auto& label : family_labels()) {
    if (label.rfind("nc_", 0) == 0 || is_char2_family(label) != char2) continue;
    for (const auto& fam : family_instances(f, label)) {
      MultTable rep = instantiate(f, fam);
      if (!is_associative(rep)) continue;
      if (isomorphic(rep, t)) return fam;
    }
  }
  throw Error("classification gap");
}

Scalar evaluate_PR(const RingSpec& r, const Scalar& a, const Scalar& b, const Scalar& y0) {
  const Scalar y = r.from_rational(y0), a2 = r.from_rational(a), b2 = r.from_rational(b);
  const Scalar aa = r.mul(a2, a2), bb = r.mul(b2, b2), yy = r.mul(y, y);
  Scalar c1 = r.add(r.mul(5, a2), bb);
  Scalar c2 = r.sub(r.neg(r.mul(8, aa)), r.mul(2, r.mul(a2, bb)));
  Scalar c3 = r.add(r.mul(4, r.mul(aa, a2)), r.mul(aa, bb));
  return r.add(r.add(r.add(r.from_int(-1), r.mul(y, c1)), r.mul(yy, c2)), r.mul(r.mul(yy, y), c3));
}

Scalar evaluate_PA(const RingSpec& r, const Scalar& alpha2, const Scalar& beta2, const Scalar& alpha4,
                   const Scalar& beta4, const Scalar& y0) {
  const Scalar y = r.from_rational(y0), a2 = r.from_rational(alpha2), b2 = r.from_rational(beta2),
               a4 = r.from_rational(alpha4), b4 = r.from_rational(beta4);
  const Scalar yy = r.mul(y, y);
  Scalar c1 = r.add(r.mul(4, a2), b4);
  Scalar c2 = r.sub(r.sub(r.mul(2, r.mul(a4, b2)), r.mul(4, r.mul(a2, a2))), r.mul(4, r.mul(a2, b4)));
  Scalar c3 = r.add(r.sub(r.mul(a4, a4), r.mul(4, r.mul(a2, r.mul(a4, b2)))),
                    r.mul(4, r.mul(r.mul(a2, a2), b4)));
  return r.add(r.add(r.add(r.from_int(-1), r.mul(y, c1)), r.mul(yy, c2)), r.mul(r.mul(yy, y), c3));
}

}  // namespace frobknot
