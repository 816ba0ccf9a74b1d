#include "frobknot/diagram.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

namespace frobknot {

namespace {

struct Occurrence {
  int crossing;
  int slot;
  bool operator==(const Occurrence&) const = default;
};

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

LinkDiagram::LinkDiagram(std::vector<PDCrossing> crossings, std::vector<int> loops, bool oriented, const Hints& hints)
    : crossings_(std::move(crossings)), loops_(std::move(loops)), oriented_(oriented) {
  int max_label = 0;
  for (const auto& x : crossings_)
    for (int l : x) {
      if (l < 1) throw Error("arc labels must be positive");
      max_label = std::max(max_label, l);
    }
  for (int l : loops_) {
    if (l < 1) throw Error("arc labels must be positive");
    max_label = std::max(max_label, l);
  }
  if (max_label == 0) throw Error("diagram has no arcs");
  std::vector<int> count(max_label + 1, 0), loop_count(max_label + 1, 0);
  for (const auto& x : crossings_)
    for (int l : x) ++count[l];
  for (int l : loops_) ++loop_count[l];
  for (int l = 1; l <= max_label; ++l) {
    if (count[l] == 0 && loop_count[l] == 0)
      throw Error("arc labels must run 1.." + std::to_string(max_label) + " without gaps (missing " +
                  std::to_string(l) + ")");
    if (loop_count[l] > 0 && (loop_count[l] != 1 || count[l] != 0))
      throw Error("circle arc " + std::to_string(l) + " must not appear elsewhere");
    if (loop_count[l] == 0 && count[l] != 2)
      throw Error("arc " + std::to_string(l) + " appears " + std::to_string(count[l]) + " time(s), expected 2");
  }
  arc_count_ = max_label;
  trace(hints);
}

void LinkDiagram::trace(const Hints& hints) {
  const int n = arc_count_;
  std::vector<std::vector<Occurrence>> occ(n + 1);
  for (int x = 0; x < static_cast<int>(crossings_.size()); ++x)
    for (int s = 0; s < 4; ++s) occ[crossings_[x][s]].push_back({x, s});
  auto other = [&](int label, Occurrence o) { return occ[label][0] == o ? occ[label][1] : occ[label][0]; };

  tails_.assign(n + 1, ArcEnd{});
  heads_.assign(n + 1, ArcEnd{});
  signs_.assign(crossings_.size(), 0);
  components_.clear();
  std::vector<bool> assigned(n + 1, false);
  for (int l : loops_) assigned[l] = true;

  // Walk entering through `start`; returns (arc, head) pairs in order, first arc = start's arc.
  auto walk = [&](Occurrence start) {
    std::vector<std::pair<int, Occurrence>> steps;
    Occurrence cur = start;
    int arc = crossings_[start.crossing][start.slot];
    do {
      steps.push_back({arc, cur});
      const Occurrence exit{cur.crossing, (cur.slot + 2) % 4};
      arc = crossings_[exit.crossing][exit.slot];
      cur = other(arc, exit);
    } while (!(cur == start));
    return steps;
  };

  for (int label = 1; label <= n; ++label) {
    if (assigned[label]) continue;
    auto steps = walk(occ[label][0]);
    bool forward_under = false, backward_under = false;
    for (const auto& [arc, o] : steps) {
      if (o.slot == 0) forward_under = true;
      if (o.slot == 2) backward_under = true;
    }
    if (forward_under && backward_under)
      throw Error("under-strand directions along the component of arc " + std::to_string(label) + " disagree");
    bool reverse = backward_under;
    const bool forced = forward_under || backward_under;

    // Direction requested by hints, if any: +1 keep, -1 reverse.
    int wanted = 0;
    auto request = [&](int dir, const std::string& what) {
      if (wanted != 0 && wanted != dir) throw Error("orientation hints disagree on " + what);
      wanted = dir;
    };
    const std::size_t len = steps.size();
    for (const auto& [arc, head] : hints.heads) {
      for (std::size_t q = 0; q < len; ++q) {
        if (steps[q].first != arc) continue;
        const Occurrence h{head.crossing, head.slot};
        if (steps[q].second == h)
          request(1, "arc " + std::to_string(arc));
        else if (other(arc, steps[q].second) == h)
          request(-1, "arc " + std::to_string(arc));
        else
          throw Error("orientation hint for arc " + std::to_string(arc) + " names a slot it does not occupy");
      }
    }
    for (const auto& seq : hints.sequences) {
      for (std::size_t p = 0; p + 1 < seq.size(); ++p) {
        const int a = seq[p], b = seq[p + 1];
        bool fwd = false, bwd = false, touches = false;
        for (std::size_t q = 0; q < len; ++q) {
          if (steps[q].first == a || steps[q].first == b) touches = true;
          if (steps[q].first == a && steps[(q + 1) % len].first == b) fwd = true;
          if (steps[q].first == b && steps[(q + 1) % len].first == a) bwd = true;
        }
        if (!touches) continue;
        if (!fwd && !bwd)
          throw Error("ORIENT arcs " + std::to_string(a) + " and " + std::to_string(b) + " are not consecutive");
        if (fwd != bwd) request(fwd ? 1 : -1, "ORIENT line");
      }
    }
    if (wanted != 0) {
      const bool want_reverse = wanted < 0;
      if (forced && want_reverse != reverse)
        throw Error("orientation of arc " + std::to_string(label) + " contradicts its under-crossings");
      reverse = want_reverse;
    }

    if (reverse) steps = walk(other(label, occ[label][0]));
    std::vector<int> comp;
    for (const auto& [arc, head] : steps) {
      comp.push_back(arc);
      assigned[arc] = true;
      heads_[arc] = {head.crossing, head.slot};
      const Occurrence t = other(arc, head);
      tails_[arc] = {t.crossing, t.slot};
      if (head.slot == 1) signs_[head.crossing] = -1;
      if (head.slot == 3) signs_[head.crossing] = 1;
    }
    components_.push_back(std::move(comp));
  }
  for (int l : loops_) components_.push_back({l});
  std::sort(components_.begin(), components_.end(),
            [](const auto& a, const auto& b) { return *std::min_element(a.begin(), a.end()) < *std::min_element(b.begin(), b.end()); });
  for (auto& c : components_) std::rotate(c.begin(), std::min_element(c.begin(), c.end()), c.end());
}

int LinkDiagram::n_plus() const { return static_cast<int>(std::count(signs_.begin(), signs_.end(), 1)); }
int LinkDiagram::n_minus() const { return static_cast<int>(std::count(signs_.begin(), signs_.end(), -1)); }

LinkDiagram::Hints LinkDiagram::orientation_hints() const {
  Hints h;
  for (int l = 1; l <= arc_count_; ++l)
    if (heads_[l].crossing >= 0) h.heads.push_back({l, heads_[l]});
  return h;
}

std::string LinkDiagram::to_pd() const {
  std::ostringstream out;
  if (oriented_) {
    for (const auto& c : components_) {
      out << "ORIENT";
      for (int l : c) out << ' ' << l;
      out << '\n';
    }
  }
  for (const auto& x : crossings_) out << "X " << x[0] << ' ' << x[1] << ' ' << x[2] << ' ' << x[3] << '\n';
  for (int l : loops_) out << "O " << l << '\n';
  return out.str();
}

LinkDiagram parse_pd(std::string_view text) {
  std::vector<PDCrossing> crossings;
  std::vector<int> loops;
  LinkDiagram::Hints hints;
  bool oriented = false;
  std::string all(text);
  std::replace(all.begin(), all.end(), '/', '\n');
  std::istringstream lines(all);
  std::string line;
  int lineno = 0;
  while (std::getline(lines, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream tok(line);
    std::string head;
    if (!(tok >> head)) continue;
    auto fail = [&](const std::string& why) {
      throw Error("line " + std::to_string(lineno) + ": " + why);
    };
    std::vector<long> nums;
    std::string word;
    while (tok >> word) {
      std::size_t used = 0;
      long v = 0;
      try {
        v = std::stol(word, &used);
      } catch (const std::exception&) {
        fail("expected an integer, got '" + word + "'");
      }
      if (used != word.size()) fail("expected an integer, got '" + word + "'");
      if (v < 1 || v > (1L << 30)) fail("arc label out of range");
      nums.push_back(v);
    }
    if (head == "X") {
      if (nums.size() != 4) fail("a crossing needs 4 labels");
      crossings.push_back({static_cast<int>(nums[0]), static_cast<int>(nums[1]), static_cast<int>(nums[2]),
                           static_cast<int>(nums[3])});
    } else if (head == "O") {
      if (nums.size() != 1) fail("a circle needs 1 label");
      loops.push_back(static_cast<int>(nums[0]));
    } else if (head == "ORIENT") {
      oriented = true;
      if (!nums.empty()) hints.sequences.emplace_back(nums.begin(), nums.end());
    } else {
      fail("unknown entry '" + head + "'");
    }
  }
  return LinkDiagram(std::move(crossings), std::move(loops), oriented, hints);
}

std::vector<std::vector<int>> resolve(const LinkDiagram& d, const State& s) {
  if (s.size() != d.crossing_count()) throw Error("state length does not match crossing count");
  UnionFind uf(d.arc_count() + 1);
  for (std::size_t x = 0; x < s.size(); ++x) {
    const auto& c = d.crossings()[x];
    if (s[x] == 0) {
      uf.unite(c[0], c[1]);
      uf.unite(c[2], c[3]);
    } else {
      uf.unite(c[0], c[3]);
      uf.unite(c[1], c[2]);
    }
  }
  std::vector<std::vector<int>> by_root(d.arc_count() + 1);
  for (int l = 1; l <= d.arc_count(); ++l) by_root[uf.find(l)].push_back(l);
  std::vector<std::vector<int>> out;
  // Roots are minimal labels, so this is already ordered by smallest label.
  for (auto& c : by_root)
    if (!c.empty()) out.push_back(std::move(c));
  return out;
}

int sign_exponent(const State& s1, const State& s2) {
  if (s1.size() != s2.size()) throw Error("states are not adjacent");
  int flipped = -1;
  for (std::size_t p = 0; p < s1.size(); ++p) {
    if (s1[p] == s2[p]) continue;
    if (flipped >= 0 || s1[p] != 0 || s2[p] != 1) throw Error("states are not adjacent");
    flipped = static_cast<int>(p);
  }
  if (flipped < 0) throw Error("states are not adjacent");
  return static_cast<int>(std::count(s1.begin(), s1.begin() + flipped, 1));
}

State ResolutionCube::state(std::uint64_t m) const {
  State s(n);
  for (std::size_t p = 0; p < n; ++p) s[p] = (m >> (n - 1 - p)) & 1U;
  return s;
}

std::uint64_t ResolutionCube::mask(const State& s) const {
  std::uint64_t m = 0;
  for (auto b : s) m = (m << 1) | (b & 1U);
  return m;
}

std::vector<std::uint64_t> ResolutionCube::states_of_degree(std::size_t i) const {
  std::vector<std::uint64_t> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m)
    if (static_cast<std::size_t>(std::popcount(m)) == i) out.push_back(m);
  return out;
}

ResolutionCube build_cube(const LinkDiagram& d) {
  ResolutionCube cube;
  cube.n = d.crossing_count();
  if (cube.n > 24) throw Error("too many crossings for a full cube");
  const std::uint64_t total = std::uint64_t{1} << cube.n;
  cube.circles.resize(total);
  for (std::uint64_t m = 0; m < total; ++m) cube.circles[m] = resolve(d, cube.state(m));
  for (std::uint64_t m = 0; m < total; ++m) {
    for (std::size_t x = 0; x < cube.n; ++x) {
      const std::uint64_t bit = std::uint64_t{1} << (cube.n - 1 - x);
      if (m & bit) continue;
      const auto& src = cube.circles[m];
      const auto& dst = cube.circles[m | bit];
      std::vector<std::size_t> gone, fresh;
      for (std::size_t a = 0; a < src.size(); ++a)
        if (std::find(dst.begin(), dst.end(), src[a]) == dst.end()) gone.push_back(a);
      for (std::size_t b = 0; b < dst.size(); ++b)
        if (std::find(src.begin(), src.end(), dst[b]) == src.end()) fresh.push_back(b);
      CubeEdge e;
      e.from = m;
      e.to = m | bit;
      e.crossing = x;
      e.sign_exponent = std::popcount(m >> (cube.n - x));
      if (gone.size() == 2 && fresh.size() == 1) {
        e.kind = SaddleKind::Merge;
        e.i = gone[0];
        e.j = gone[1];
        e.k = fresh[0];
      } else if (gone.size() == 1 && fresh.size() == 2) {
        e.kind = SaddleKind::Split;
        e.k = gone[0];
        e.i = fresh[0];
        e.j = fresh[1];
      } else {
        throw Error("internal: cube edge changes circle count by other than one");
      }
      cube.edges.push_back(e);
    }
  }
  return cube;
}

LaurentPolynomial kauffman_bracket(const LinkDiagram& d) {
  const std::size_t n = d.crossing_count();
  if (n > 24) throw Error("too many crossings for a state sum");
  const LaurentPolynomial delta = LaurentPolynomial::monomial(-1, 2) + LaurentPolynomial::monomial(-1, -2);
  // Powers of delta by circle count.
  std::vector<LaurentPolynomial> delta_pow{LaurentPolynomial(1)};
  LaurentPolynomial sum;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    State s(n);
    for (std::size_t p = 0; p < n; ++p) s[p] = (m >> (n - 1 - p)) & 1U;
    const std::size_t circles = resolve(d, s).size();
    while (delta_pow.size() < circles) delta_pow.push_back(delta_pow.back() * delta);
    const long ones = std::popcount(m);
    const long zeros = static_cast<long>(n) - ones;
    sum += LaurentPolynomial::monomial(1, zeros - ones) * delta_pow[circles - 1];
  }
  return sum;
}

LaurentPolynomial normalized_bracket(const LinkDiagram& d) {
  if (!d.oriented()) throw Error("normalization needs an oriented diagram");
  const long w = d.writhe();
  // (-A^3)^(-w) = (-1)^w A^(-3w)
  return LaurentPolynomial::monomial((w % 2 == 0) ? 1 : -1, -3 * w) * kauffman_bracket(d);
}

LaurentPolynomial bracket_to_q(const LaurentPolynomial& in_a) {
  // A^k -> (-q)^(-k/2) = (-1)^(k/2) q^(-k/2)
  LaurentPolynomial out;
  for (const auto& [k, c] : in_a.terms()) {
    if (k % 2 != 0) throw Error("odd power of A has no image in q");
    const long e = -k / 2;
    out.add_term(e, (e % 2 == 0) ? c : Integer(-c));
  }
  return out;
}

LinkDiagram unknot_0() { return LinkDiagram({}, {1}, true); }

LinkDiagram unknot_1kink(int sign) {
  if (sign > 0) return LinkDiagram({{2, 2, 1, 1}}, {}, true);
  return LinkDiagram({{1, 2, 2, 1}}, {}, true);
}

LinkDiagram hopf(int sign) {
  LinkDiagram base({{4, 1, 3, 2}, {2, 3, 1, 4}}, {}, true);
  return (base.writhe() > 0) == (sign > 0) ? base : mirror(base);
}

LinkDiagram trefoil(const std::string& hand) {
  if (hand == "right") return LinkDiagram({{4, 2, 5, 1}, {6, 4, 1, 3}, {2, 6, 3, 5}}, {}, true);
  if (hand == "left") return LinkDiagram({{1, 4, 2, 5}, {3, 6, 4, 1}, {5, 2, 6, 3}}, {}, true);
  throw Error("trefoil hand must be 'right' or 'left'");
}

LinkDiagram figure10_d1() { return LinkDiagram({{4, 2, 3, 1}, {3, 2, 4, 1}}, {}, true); }

LinkDiagram figure10_d2() { return LinkDiagram({}, {1, 2}, true); }

LinkDiagram mirror(const LinkDiagram& d) {
  std::vector<PDCrossing> xs;
  // Old slot -> new slot per crossing.
  std::vector<int> shift(d.crossing_count());
  for (std::size_t x = 0; x < d.crossing_count(); ++x) {
    const auto& c = d.crossings()[x];
    // The old over-strand becomes the under-strand; start the list at its incoming arc.
    const bool over_b_to_d = d.signs()[x] < 0;
    if (over_b_to_d) {
      xs.push_back({c[1], c[2], c[3], c[0]});
      shift[x] = 3;  // old slot s lands at (s + 3) % 4
    } else {
      xs.push_back({c[3], c[0], c[1], c[2]});
      shift[x] = 1;
    }
  }
  LinkDiagram::Hints h;
  for (auto [arc, head] : d.orientation_hints().heads)
    h.heads.push_back({arc, ArcEnd{head.crossing, (head.slot + shift[head.crossing]) % 4}});
  return LinkDiagram(std::move(xs), d.loops(), d.oriented(), h);
}

LinkDiagram disjoint_union(const LinkDiagram& a, const LinkDiagram& b) {
  const int off = a.arc_count();
  const int xoff = static_cast<int>(a.crossing_count());
  std::vector<PDCrossing> xs = a.crossings();
  for (auto c : b.crossings()) {
    for (int& l : c) l += off;
    xs.push_back(c);
  }
  std::vector<int> loops = a.loops();
  for (int l : b.loops()) loops.push_back(l + off);
  LinkDiagram::Hints h = a.orientation_hints();
  for (auto [arc, head] : b.orientation_hints().heads) h.heads.push_back({arc + off, {head.crossing + xoff, head.slot}});
  return LinkDiagram(std::move(xs), std::move(loops), a.oriented() && b.oriented(), h);
}

LinkDiagram permute_crossings(const LinkDiagram& d, const std::vector<std::size_t>& perm) {
  const std::size_t n = d.crossing_count();
  if (perm.size() != n) throw Error("permutation has the wrong length");
  std::vector<int> where(n, -1);
  for (std::size_t p = 0; p < n; ++p) {
    if (perm[p] >= n || where[perm[p]] >= 0) throw Error("not a permutation");
    where[perm[p]] = static_cast<int>(p);
  }
  std::vector<PDCrossing> xs;
  for (auto old : perm) xs.push_back(d.crossings()[old]);
  LinkDiagram::Hints h;
  for (auto [arc, head] : d.orientation_hints().heads) h.heads.push_back({arc, {where[head.crossing], head.slot}});
  return LinkDiagram(std::move(xs), d.loops(), d.oriented(), h);
}

std::pair<LinkDiagram, LinkDiagram> rii_pair(const LinkDiagram& base, int arc, bool circle_under) {
  if (arc < 1 || arc > base.arc_count()) throw Error("arc " + std::to_string(arc) + " is not in the diagram");
  LinkDiagram separate = disjoint_union(base, unknot_0());

  const int n = base.arc_count();
  std::vector<PDCrossing> xs = base.crossings();
  std::vector<int> loops;
  LinkDiagram::Hints h;
  const bool is_loop = std::find(base.loops().begin(), base.loops().end(), arc) != base.loops().end();
  for (int l : base.loops())
    if (l != arc) loops.push_back(l);
  for (auto [a, head] : base.orientation_hints().heads)
    if (a != arc) h.heads.push_back({a, head});

  // The arc is cut into e_in -> (first crossing) -> m -> (second crossing) -> e_out.
  const int e_in = arc;
  const int m = n + 1;
  const int e_out = is_loop ? arc : n + 2;
  const int c3 = is_loop ? n + 2 : n + 3;
  const int c4 = c3 + 1;
  if (!is_loop) {
    const ArcEnd hd = base.head(arc);
    xs[hd.crossing][hd.slot] = e_out;
    h.heads.push_back({e_out, hd});
  }
  const int q = static_cast<int>(xs.size());
  const int p = q + 1;
  if (circle_under) {
    xs.push_back({c3, e_in, c4, m});  // q: arc passes over, circle c3 -> c4 underneath
    xs.push_back({c4, e_out, c3, m});  // p
    h.heads.push_back({e_in, {q, 1}});
    h.heads.push_back({m, {p, 3}});
    h.heads.push_back({c3, {q, 0}});
    h.heads.push_back({c4, {p, 0}});
  } else {
    xs.push_back({e_in, c4, m, c3});
    xs.push_back({m, c4, e_out, c3});
    h.heads.push_back({e_in, {q, 0}});
    h.heads.push_back({m, {p, 0}});
    h.heads.push_back({c3, {q, 3}});
    h.heads.push_back({c4, {p, 1}});
  }
  if (is_loop) {
    // e_in and e_out are one arc; its head is the first new crossing.
    std::erase_if(h.heads, [&](const auto& pr) { return pr.first == arc && pr.second.crossing != q; });
  }
  return {separate, LinkDiagram(std::move(xs), std::move(loops), base.oriented(), h)};
}

std::vector<std::string> builder_names() {
  return {"unknot_0", "unknot_1kink", "unknot_1kink_neg", "hopf",       "hopf_neg",
          "trefoil",  "trefoil_left", "figure10_d1",      "figure10_d2"};
}

LinkDiagram builder(const std::string& name) {
  if (name == "unknot_0") return unknot_0();
  if (name == "unknot_1kink") return unknot_1kink(1);
  if (name == "unknot_1kink_neg") return unknot_1kink(-1);
  if (name == "hopf") return hopf(1);
  if (name == "hopf_neg") return hopf(-1);
  if (name == "trefoil") return trefoil("right");
  if (name == "trefoil_left") return trefoil("left");
  if (name == "figure10_d1") return figure10_d1();
  if (name == "figure10_d2") return figure10_d2();
  std::string known;
  for (const auto& n : builder_names()) known += (known.empty() ? "" : ", ") + n;
  throw Error("unknown builder '" + name + "' (known: " + known + ")");
}

}  // namespace frobknot
