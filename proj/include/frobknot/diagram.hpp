#pragma once

#include "frobknot/polynomial.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace frobknot {

/// Arc labels of one crossing, counterclockwise from the incoming under-strand (a -> c).
using PDCrossing = std::array<int, 4>;

/// Where an oriented arc leaves and enters: crossing index and slot 0..3.
struct ArcEnd {
  int crossing = -1;
  int slot = -1;
};

/// A planar diagram code. Arcs are labelled 1..arc_count; each arc occurs in exactly two
/// crossing slots, or names a crossingless circle.
class LinkDiagram {
 public:
  /// Direction hints for components whose direction the under-strands do not force.
  struct Hints {
    std::vector<std::vector<int>> sequences;      ///< consecutive arcs along a component
    std::vector<std::pair<int, ArcEnd>> heads;    ///< arc and the slot it runs into
  };
  /// Validates labels and traces orientation; `oriented` marks the diagram as carrying one.
  LinkDiagram(std::vector<PDCrossing> crossings, std::vector<int> loops, bool oriented, const Hints& hints = {});

  const std::vector<PDCrossing>& crossings() const { return crossings_; }
  /// Labels of crossingless circles.
  const std::vector<int>& loops() const { return loops_; }
  std::size_t crossing_count() const { return crossings_.size(); }
  int arc_count() const { return arc_count_; }
  bool oriented() const { return oriented_; }

  /// +1 or -1 per crossing, from the traced orientation.
  const std::vector<int>& signs() const { return signs_; }
  int n_plus() const;
  int n_minus() const;
  int writhe() const { return n_plus() - n_minus(); }
  /// Components as arc sequences in traversal order, starting from the smallest label.
  const std::vector<std::vector<int>>& components() const { return components_; }
  /// Oriented arc `label` runs from tail to head. Loops have no ends.
  ArcEnd tail(int label) const { return tails_[label]; }
  ArcEnd head(int label) const { return heads_[label]; }

  /// The head of every crossing arc, enough to rebuild this orientation.
  Hints orientation_hints() const;

  /// Text form accepted by parse_pd.
  std::string to_pd() const;

 private:
  void trace(const Hints& hints);

  std::vector<PDCrossing> crossings_;
  std::vector<int> loops_;
  int arc_count_ = 0;
  bool oriented_ = false;
  std::vector<int> signs_;
  std::vector<std::vector<int>> components_;
  std::vector<ArcEnd> tails_, heads_;
};

/// Lines "X a b c d", "O a", "ORIENT [a b c ...]", "#" comments; "/" also separates entries.
LinkDiagram parse_pd(std::string_view text);

using State = std::vector<std::uint8_t>;

/// Circles of the resolution at `s`, each a sorted list of arc labels, ordered by smallest label.
/// Smoothing 0 joins a-b and c-d; smoothing 1 joins a-d and b-c.
std::vector<std::vector<int>> resolve(const LinkDiagram& d, const State& s);

/// Number of 1s in s1 before the single position where s1 (0) and s2 (1) differ.
int sign_exponent(const State& s1, const State& s2);

enum class SaddleKind { Merge, Split };

/// Edge of the cube flipping one crossing from 0 to 1. Merge: circles i < j of the source
/// become circle k of the target. Split: circle k of the source becomes i < j of the target.
/// Untouched circles keep their relative order.
struct CubeEdge {
  std::uint64_t from = 0, to = 0;
  std::size_t crossing = 0;
  SaddleKind kind = SaddleKind::Merge;
  std::size_t i = 0, j = 0, k = 0;
  int sign_exponent = 0;
};

/// States are bit masks with crossing 0 as the most significant of n bits, so numeric order
/// is lexicographic order of bit vectors.
struct ResolutionCube {
  std::size_t n = 0;
  std::vector<std::vector<std::vector<int>>> circles;  ///< indexed by state mask
  std::vector<CubeEdge> edges;                         ///< sorted by (from, crossing)

  State state(std::uint64_t mask) const;
  std::uint64_t mask(const State& s) const;
  /// Masks with |s| = i, ascending.
  std::vector<std::uint64_t> states_of_degree(std::size_t i) const;
};

ResolutionCube build_cube(const LinkDiagram& d);

/// State sum of A^(#0 - #1) delta^(circles - 1), delta = -A^2 - A^-2.
LaurentPolynomial kauffman_bracket(const LinkDiagram& d);
/// (-A^3)^(-w) times the bracket. Needs an oriented diagram.
LaurentPolynomial normalized_bracket(const LinkDiagram& d);
/// A^k -> (-q)^(-k/2).
LaurentPolynomial bracket_to_q(const LaurentPolynomial& in_a);

LinkDiagram unknot_0();
/// One-crossing unknot, sign +1 or -1.
LinkDiagram unknot_1kink(int sign);
LinkDiagram hopf(int sign);
/// hand: "right" or "left".
LinkDiagram trefoil(const std::string& hand);
LinkDiagram figure10_d1();
LinkDiagram figure10_d2();

/// Same planar picture with every crossing switched.
LinkDiagram mirror(const LinkDiagram& d);
/// Second diagram relabelled after the first.
LinkDiagram disjoint_union(const LinkDiagram& a, const LinkDiagram& b);
/// Relist crossings: new crossing p is old crossing perm[p].
LinkDiagram permute_crossings(const LinkDiagram& d, const std::vector<std::size_t>& perm);

/// (base with a separate small circle, base with that circle pushed across arc `arc` by a
/// second Reidemeister move). The circle passes under the arc when circle_under is set.
std::pair<LinkDiagram, LinkDiagram> rii_pair(const LinkDiagram& base, int arc, bool circle_under = true);

/// Builder by name: unknot_0, unknot_1kink, unknot_1kink_neg, hopf, hopf_neg, trefoil,
/// trefoil_left, figure10_d1, figure10_d2.
LinkDiagram builder(const std::string& name);
std::vector<std::string> builder_names();

}  // namespace frobknot
