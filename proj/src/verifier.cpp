#include "frobknot/verifier.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <thread>

namespace frobknot {

namespace {

// Residue arithmetic for the inner loops of the F_p searches.
using Tensor8 = std::array<int, 8>;

int mod(long v, int p) {
  const long r = v % p;
  return static_cast<int>(r < 0 ? r + p : r);
}

Tensor8 mult_tensor(const MultTable& t) {
  const int p = static_cast<int>(t.ring().modulus());
  Tensor8 c{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) c[(i * 2 + j) * 2 + k] = mod(t.product(i, j)[k].get_num().get_si(), p);
  return c;
}

Tensor8 digits8(std::uint64_t code, int p) {
  Tensor8 d{};
  for (int n = 7; n >= 0; --n) {
    d[n] = static_cast<int>(code % p);
    code /= p;
  }
  return d;
}

bool cocommutative(const Tensor8& d) { return d[1] == d[2] && d[5] == d[6]; }

bool coassociative(const Tensor8& d, int p) {
  // sum_u d(k,u,l) d(u,i,j) == sum_v d(k,i,v) d(v,j,l)
  for (int k = 0; k < 2; ++k)
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int l = 0; l < 2; ++l) {
          long lhs = 0, rhs = 0;
          for (int u = 0; u < 2; ++u) {
            lhs += d[(k * 2 + u) * 2 + l] * d[(u * 2 + i) * 2 + j];
            rhs += d[(k * 2 + i) * 2 + u] * d[(u * 2 + j) * 2 + l];
          }
          if (mod(lhs - rhs, p) != 0) return false;
        }
  return true;
}

// Rank 2 of the 4 x 2 matrix with column k = Delta(e_k).
bool injective(const Tensor8& d, int p) {
  for (int r1 = 0; r1 < 4; ++r1)
    for (int r2 = r1 + 1; r2 < 4; ++r2)
      if (mod(static_cast<long>(d[r1]) * d[4 + r2] - static_cast<long>(d[r2]) * d[4 + r1], p) != 0) return true;
  return false;
}

bool frobenius_relation(const Tensor8& c, const Tensor8& d, int p) {
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
          long dm = 0, left = 0, right = 0;
          for (int u = 0; u < 2; ++u) {
            dm += c[(a * 2 + b) * 2 + u] * d[(u * 2 + i) * 2 + j];
            left += d[(b * 2 + u) * 2 + j] * c[(a * 2 + u) * 2 + i];
            right += d[(a * 2 + i) * 2 + u] * c[(u * 2 + b) * 2 + j];
          }
          if (mod(dm - left, p) != 0 || mod(dm - right, p) != 0) return false;
        }
  return true;
}

std::vector<Scalar> to_scalars(const Tensor8& d) { return std::vector<Scalar>(d.begin(), d.end()); }

// Runs body(i, out) for i in [0, n) and concatenates the outputs in index order, so the result
// does not depend on how work is split between threads.
template <class T, class Body>
std::vector<T> parallel_collect(std::uint64_t n, Body body) {
  constexpr std::uint64_t kChunk = 64;
  const std::uint64_t chunks = (n + kChunk - 1) / kChunk;
  std::vector<std::vector<T>> parts(chunks);
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (std::uint64_t c = next++; c < chunks; c = next++) {
      try {
        for (std::uint64_t i = c * kChunk; i < std::min(n, (c + 1) * kChunk); ++i) body(i, parts[c]);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(worker_count(), std::max<std::uint64_t>(chunks, 1)));
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  std::vector<T> out;
  for (auto& part : parts)
    for (auto& x : part) out.push_back(std::move(x));
  return out;
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

// Commutative table number `code`, e1e1 coordinates slowest.
MultTable commutative_from_code(const RingSpec& ring, const std::vector<Scalar>& vals, std::uint64_t code) {
  const std::uint64_t q = vals.size();
  Scalar v[6];
  for (int n = 5; n >= 0; --n) {
    v[n] = vals[code % q];
    code /= q;
  }
  return MultTable::commutative_table(ring, {v[0], v[1]}, {v[2], v[3]}, {v[4], v[5]});
}

MultTable general_from_code(const RingSpec& ring, const std::vector<Scalar>& vals, std::uint64_t code) {
  const std::uint64_t q = vals.size();
  Scalar v[8];
  for (int n = 7; n >= 0; --n) {
    v[n] = vals[code % q];
    code /= q;
  }
  return MultTable::general_table(ring, {v[0], v[1]}, {v[2], v[3]}, {v[4], v[5]}, {v[6], v[7]});
}

void require_prime(std::uint64_t p, std::initializer_list<std::uint64_t> allowed, const std::string& what) {
  if (std::find(allowed.begin(), allowed.end(), p) == allowed.end()) {
    std::string list;
    for (auto a : allowed) list += (list.empty() ? "" : ", ") + std::to_string(a);
    throw Error(what + " runs only for p in {" + list + "}");
  }
}

std::string field_name(std::uint64_t p) { return "F" + std::to_string(p); }

}  // namespace

SearchSpace SearchSpace::bounded_z(int bound) {
  if (bound < 1) throw Error("coefficient bound must be at least 1");
  return {RingSpec::integers(), bound};
}

std::vector<Scalar> SearchSpace::values() const {
  std::vector<Scalar> out;
  if (ring.is_prime_field()) {
    for (std::uint32_t v = 0; v < ring.modulus(); ++v) out.emplace_back(v);
    return out;
  }
  if (bound < 1) throw Error("an integer search space needs a bound");
  for (int v = -bound; v <= bound; ++v) out.emplace_back(v);
  return out;
}

std::string SearchSpace::name() const {
  if (ring.is_prime_field()) return field_name(ring.modulus());
  return "Z[" + std::to_string(-bound) + ".." + std::to_string(bound) + "]";
}

unsigned worker_count() {
  if (const char* env = std::getenv("FROBKNOT_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) return static_cast<unsigned>(std::min<long>(v, 256));
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

VerificationReport verify_theorem_1_2(const SearchSpace& space) {
  if (space.ring.kind() == RingKind::Rationals) throw Error("thm1.2 enumerates F_p or bounded Z");
  const auto vals = space.values();
  const std::uint64_t n = ipow(vals.size(), 6);
  struct Hit {
    bool surjective;
    std::optional<Counterexample> cx;
  };
  auto hits = parallel_collect<Hit>(n, [&](std::uint64_t code, std::vector<Hit>& out) {
    const MultTable t = commutative_from_code(space.ring, vals, code);
    if (!is_associative(t)) return;
    Hit h{is_multiplication_surjective(t), std::nullopt};
    if (h.surjective && !find_unit(t)) h.cx = Counterexample{"unit exists", {t}, {}, "associative, surjective, no unit"};
    out.push_back(std::move(h));
  });
  VerificationReport rep;
  rep.check = "thm1.2";
  rep.space = space.name();
  rep.candidates = n;
  std::uint64_t surj = 0;
  for (auto& h : hits) {
    surj += h.surjective;
    if (h.cx) rep.counterexamples.push_back(std::move(*h.cx));
  }
  rep.stages = {{"associative", hits.size()},
                {"associative and surjective", surj},
                {"unit found", surj - rep.counterexamples.size()}};
  return rep;
}

namespace {

struct PairSearch {
  std::uint64_t mult_survivors = 0;
  std::uint64_t comult_survivors = 0;
  std::vector<FrobeniusData> pairs;
};

PairSearch search_pairs(std::uint64_t p) {
  require_prime(p, {2, 3}, "the (m, Delta) enumeration");
  const SearchSpace space = SearchSpace::prime_field(p);
  const auto vals = space.values();
  const int ip = static_cast<int>(p);

  auto mults = parallel_collect<std::pair<MultTable, Tensor8>>(
      ipow(p, 6), [&](std::uint64_t code, std::vector<std::pair<MultTable, Tensor8>>& out) {
        MultTable t = commutative_from_code(space.ring, vals, code);
        if (is_associative(t) && is_multiplication_surjective(t)) out.emplace_back(t, mult_tensor(t));
      });
  auto comults = parallel_collect<Tensor8>(ipow(p, 8), [&](std::uint64_t code, std::vector<Tensor8>& out) {
    const Tensor8 d = digits8(code, ip);
    if (cocommutative(d) && coassociative(d, ip) && injective(d, ip)) out.push_back(d);
  });

  PairSearch s{mults.size(), comults.size(), {}};
  s.pairs = parallel_collect<FrobeniusData>(mults.size(), [&](std::uint64_t mi, std::vector<FrobeniusData>& out) {
    const auto& [t, c] = mults[mi];
    for (const auto& d : comults)
      if (frobenius_relation(c, d, ip)) out.push_back(lift(t, to_scalars(d)));
  });
  return s;
}

}  // namespace

std::vector<FrobeniusData> frobenius_pairs(std::uint64_t p) { return search_pairs(p).pairs; }

VerificationReport verify_theorem_1_1(std::uint64_t p) {
  const PairSearch s = search_pairs(p);
  VerificationReport rep;
  rep.check = "thm1.1";
  rep.space = field_name(p);
  rep.candidates = ipow(p, 6) * ipow(p, 8);
  auto table_of = [](const FrobeniusData& f) {
    Vec2 e11{f.c(0, 0, 0), f.c(0, 0, 1)}, e12{f.c(0, 1, 0), f.c(0, 1, 1)}, e22{f.c(1, 1, 0), f.c(1, 1, 1)};
    return MultTable::commutative_table(f.ring, e11, e12, e22);
  };
  auto found = parallel_collect<std::pair<bool, std::optional<Counterexample>>>(
      s.pairs.size(), [&](std::uint64_t i, std::vector<std::pair<bool, std::optional<Counterexample>>>& out) {
        const FrobeniusData& f = s.pairs[i];
        const MultTable t = table_of(f);
        const AxiomReport ax = check_axioms(f);
        std::optional<Counterexample> cx;
        if (!(ax.associative && ax.commutative && ax.coassociative && ax.cocommutative && ax.frobenius_relation &&
              ax.mult_surjective && ax.comult_injective))
          cx = Counterexample{"search filters agree with check_axioms", {t}, f.comult, "filter mismatch"};
        const bool has_unit = find_unit(t).has_value();
        const bool has_counit = solve_counit(f).has_value();
        const bool dual_unit = solve_unit(dualize(f)).has_value();
        if (!cx && has_counit != dual_unit)
          cx = Counterexample{"counit exists iff the dual has a unit", {t}, f.comult, "dual mismatch"};
        if (!cx && !(has_unit && has_counit))
          cx = Counterexample{"unit and counit exist", {t}, f.comult,
                              std::string(has_unit ? "" : "no unit") + (has_unit || has_counit ? "" : ", ") +
                                  (has_counit ? "" : "no counit")};
        out.emplace_back(has_unit && has_counit, std::move(cx));
      });
  std::uint64_t both = 0;
  for (auto& [ok, cx] : found) {
    both += ok;
    if (cx) rep.counterexamples.push_back(std::move(*cx));
  }
  rep.stages = {{"m commutative, associative, surjective (of " + std::to_string(ipow(p, 6)) + ")", s.mult_survivors},
                {"Delta coassociative, cocommutative, injective (of " + std::to_string(ipow(p, 8)) + ")",
                 s.comult_survivors},
                {"pairs passing both factor filters", s.mult_survivors * s.comult_survivors},
                {"Frobenius relation", s.pairs.size()},
                {"unit and counit found", both}};

  const FrobeniusData ref = a5(0, 0, RingSpec::prime_field(p));
  const bool present = std::any_of(s.pairs.begin(), s.pairs.end(),
                                   [&](const FrobeniusData& f) { return f.mult == ref.mult && f.comult == ref.comult; });
  rep.facts.push_back({"a5(0,0) among the pairs", present ? "yes" : "no"});
  if (!present) rep.counterexamples.push_back({"a5(0,0) reduced mod p survives the filters", {}, ref.comult, "missing"});
  return rep;
}

namespace {

struct Expectation {
  bool associative;
  bool unital;
};

// The stated associativity and unitality of each family instance for characteristic other than 2.
Expectation stated(const RingSpec& f, const RepresentativeFamily& fam) {
  auto par = [&](const std::string& n) {
    for (const auto& p : fam.params)
      if (p.name == n) return f.from_rational(p.value);
    throw Error("missing parameter " + n);
  };
  const std::string& l = fam.label;
  if (l == "m6") {
    const Scalar a = par("alpha2"), b = par("beta2");
    const bool in = (a == 0 && b == 0) || (a == 0 && b == 1) || (a == 1 && b == 0);
    return {in, in};
  }
  if (l == "m9") {
    const Scalar b = par("beta2");
    return {b == 0 || b == 1, b == 1};
  }
  if (l == "m10") return {par("alpha4") == 1, false};
  if (l == "m12" || l == "m13" || l == "m14" || l == "m17") return {true, false};
  if (l == "m8_2R") {
    const bool one = par("beta2") == 1;
    return {one, one};
  }
  if (l == "m11R") return {par("lambda2") == 0, false};
  if (l == "m15_1R") {
    const Scalar a2 = par("alpha2"), b2 = par("beta2");
    const bool cond = par("alpha4") == f.mul(a2, b2) && par("beta4") == f.add(a2, f.mul(b2, b2));
    return {cond, false};
  }
  // m7, m8, m11, m15, m16, m8_1R, m14_1R, m14_2R
  return {false, false};
}

}  // namespace

VerificationReport verify_prop_3_4(std::uint64_t p) {
  require_prime(p, {3, 5}, "prop3.4");
  const RingSpec f = RingSpec::prime_field(p);
  VerificationReport rep;
  rep.check = "prop3.4";
  rep.space = field_name(p);
  std::uint64_t assoc = 0, unital = 0;
  for (const auto& label : family_labels()) {
    if (is_char2_family(label) || label.rfind("nc_", 0) == 0) continue;
    std::uint64_t n = 0, a = 0, u = 0;
    for (const auto& fam : family_instances(f, label)) {
      const MultTable t = instantiate(f, fam);
      const bool is_a = is_associative(t);
      const bool is_u = find_unit(t).has_value();
      const Expectation e = stated(f, fam);
      ++n;
      a += is_a;
      u += is_u;
      if (is_a != e.associative)
        rep.counterexamples.push_back({"associativity as stated", {t}, {}, fam.to_string()});
      if (is_u != e.unital) rep.counterexamples.push_back({"unitality as stated", {t}, {}, fam.to_string()});
    }
    rep.candidates += n;
    assoc += a;
    unital += u;
    rep.facts.push_back({label, std::to_string(n) + " instances, " + std::to_string(a) + " associative, " +
                                    std::to_string(u) + " unital"});
  }
  rep.stages = {{"associative", assoc}, {"unital", unital}};
  return rep;
}

VerificationReport verify_char2_classification() {
  const RingSpec f2 = RingSpec::prime_field(2);
  const auto vals = SearchSpace::prime_field(2).values();
  VerificationReport rep;
  rep.check = "char2";
  rep.space = "F2";
  rep.candidates = 64;
  const std::set<std::string> unital_families{"m2_1", "m2_3", "m2_4", "m2_5"};
  std::map<std::string, std::uint64_t> census;
  std::uint64_t assoc = 0, classified = 0;
  for (std::uint64_t code = 0; code < 64; ++code) {
    const MultTable t = commutative_from_code(f2, vals, code);
    if (!is_associative(t)) continue;
    ++assoc;
    RepresentativeFamily fam;
    try {
      fam = classify(t);
    } catch (const Error& e) {
      rep.counterexamples.push_back({"classifies into m2_1..m2_7, m2R", {t}, {}, e.what()});
      continue;
    }
    ++classified;
    ++census[fam.label];
    const bool unital = find_unit(t).has_value();
    if (unital != (unital_families.count(fam.label) > 0))
      rep.counterexamples.push_back({"unitality pattern", {t}, {}, fam.to_string() + (unital ? " unital" : " not unital")});
  }
  rep.stages = {{"associative", assoc}, {"classified", classified}};
  rep.facts.push_back({"associative commutative tables over F2", std::to_string(assoc)});
  for (const auto& [label, count] : census) rep.facts.push_back({label, std::to_string(count) + " tables"});
  return rep;
}

VerificationReport verify_noncommutative(std::uint64_t p) {
  require_prime(p, {2, 3}, "noncomm");
  const SearchSpace space = SearchSpace::prime_field(p);
  const auto vals = space.values();
  const MultTable left = instantiate(space.ring, {"nc_left", {}});
  const MultTable right = instantiate(space.ring, {"nc_right", {}});
  struct Hit {
    int match;  // 0 none, 1 left, 2 right
    MultTable t;
  };
  auto hits = parallel_collect<Hit>(ipow(p, 8), [&](std::uint64_t code, std::vector<Hit>& out) {
    MultTable t = general_from_code(space.ring, vals, code);
    if (t.is_commutative_as_table() || !is_associative(t) || !is_multiplication_surjective(t)) return;
    const int m = isomorphic(left, t) ? 1 : (isomorphic(right, t) ? 2 : 0);
    out.push_back({m, std::move(t)});
  });
  VerificationReport rep;
  rep.check = "noncomm";
  rep.space = space.name();
  rep.candidates = ipow(p, 8);
  std::uint64_t l = 0, r = 0;
  for (auto& h : hits) {
    l += h.match == 1;
    r += h.match == 2;
    if (h.match == 0) rep.counterexamples.push_back({"isomorphic to nc_left or nc_right", {h.t}, {}, ""});
  }
  rep.stages = {{"noncommutative, associative, surjective", hits.size()}, {"matched", l + r}};
  rep.facts.push_back({"isomorphic to nc_left", std::to_string(l)});
  rep.facts.push_back({"isomorphic to nc_right", std::to_string(r)});
  rep.facts.push_back({"nc_left isomorphic to nc_right", isomorphic(left, right) ? "yes" : "no"});
  return rep;
}

std::vector<std::vector<Scalar>> search_nearly_frobenius(const MultTable& m) {
  const std::uint64_t p = m.ring().is_prime_field() ? m.ring().modulus() : 0;
  require_prime(p, {2, 3}, "search_nearly_frobenius");
  if (!m.is_commutative_as_table() || !is_associative(m))
    throw Error("search_nearly_frobenius needs a commutative associative multiplication");
  const Tensor8 c = mult_tensor(m);
  const int ip = static_cast<int>(p);
  return parallel_collect<std::vector<Scalar>>(ipow(p, 8), [&](std::uint64_t code, std::vector<std::vector<Scalar>>& out) {
    const Tensor8 d = digits8(code, ip);
    if (cocommutative(d) && coassociative(d, ip) && frobenius_relation(c, d, ip)) out.push_back(to_scalars(d));
  });
}

}  // namespace frobknot
