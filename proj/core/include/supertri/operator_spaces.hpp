#pragma once

// Derivation-type operator spaces of a BiHom supertrialgebra, computed as
// exact nullspaces of linear systems in the matrix entries of the unknown
// operators, together with graded splits, supercommutators and a battery of
// subspace relations between the spaces.
//
// Throughout, T = γ^s ξ^r and ∘ ranges over the three products.
//
//   D   δ(x∘y) = δ(x)∘T(y) + T(x)∘δ(y)
//   QD  ∃δ': δ'(x∘y) = δ(x)∘T(y) + T(x)∘δ(y)
//   GD  ∃δ', δ'': δ''(x∘y) = δ(x)∘T(y) + T(x)∘δ'(y)
//   ZD  δ(x∘y) = 0 and δ(x)∘y = 0
//   C   δ(x∘y) = δ(x)∘T(y) = T(x)∘δ(y)
//   QC  δ(x)∘T(y) = T(x)∘δ(y)
//
// Every unknown operator (δ, δ', δ'') also commutes with γ and ξ.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "supertri/algebra.hpp"

namespace supertri {

enum class SpaceKind { D, QD, GD, ZD, C, QC };
inline constexpr std::array<SpaceKind, 6> kSpaceKinds{SpaceKind::D,  SpaceKind::QD,
                                                      SpaceKind::GD, SpaceKind::ZD,
                                                      SpaceKind::C,  SpaceKind::QC};
std::string_view to_string(SpaceKind kind);
/// Parses "D", "QD", "GD", "ZD", "C", "QC"; throws InputError otherwise.
SpaceKind parse_space_kind(std::string_view text);

struct TwistPower {
  unsigned s = 0;
  unsigned r = 0;

  friend auto operator<=>(const TwistPower&, const TwistPower&) = default;
};

inline TwistPower operator+(TwistPower a, TwistPower b) { return {a.s + b.s, a.r + b.r}; }

/// γ^s ξ^r of the given spec.
LinearMap twist_map(const TrialgebraSpec& spec, TwistPower t);

struct OperatorSpace {
  std::size_t ambient = 0;
  SpaceKind kind = SpaceKind::D;
  TwistPower twist;
  bool koszul = false;
  /// Canonical: nonzero rows of the RREF of the row-major vectorizations.
  std::vector<LinearMap> basis;
  std::vector<LinearMap> even_basis;
  std::vector<LinearMap> odd_basis;

  std::size_t dimension() const noexcept { return basis.size(); }
};

/// Row-major flattening of an n x n map and its inverse.
Vector vectorize(const LinearMap& m);
LinearMap unvectorize(const Vector& v, std::size_t n);
/// Canonical basis (see OperatorSpace::basis) of the span of `maps`.
std::vector<LinearMap> canonical_maps(const std::vector<LinearMap>& maps, std::size_t n);

/// With `koszul`, the odd part uses δ(x∘y) = δ(x)∘T(y) + (−1)^{|x|} T(x)∘δ(y).
OperatorSpace derivation_space(const TrialgebraSpec& spec, TwistPower t, bool koszul = false);
OperatorSpace quasiderivation_space(const TrialgebraSpec& spec, TwistPower t);
OperatorSpace generalized_derivation_space(const TrialgebraSpec& spec, TwistPower t);
OperatorSpace central_derivation_space(const TrialgebraSpec& spec, TwistPower t);
OperatorSpace centroid(const TrialgebraSpec& spec, TwistPower t);
OperatorSpace quasicentroid(const TrialgebraSpec& spec, TwistPower t);

/// Dispatches on `kind`; `koszul` only affects SpaceKind::D.
OperatorSpace compute_space(const TrialgebraSpec& spec, SpaceKind kind, TwistPower t,
                            bool koszul = false);

/// D ∩ C at one twist, solved as the joint nullspace of both systems.
std::vector<LinearMap> derivation_centroid_intersection(const TrialgebraSpec& spec, TwistPower t);

struct GradedSplit {
  std::vector<LinearMap> even;
  std::vector<LinearMap> odd;
};

/// Intersections of span(maps) with the even maps and with the odd maps.
GradedSplit graded_split(const std::vector<LinearMap>& maps, const SuperBasis& basis);
inline GradedSplit graded_split(const OperatorSpace& space, const SuperBasis& basis) {
  return graded_split(space.basis, basis);
}

struct GradedOperator {
  LinearMap map;
  Parity parity = Parity::Even;
};

/// Throws ParityError when `map` is not homogeneous of parity `parity`.
GradedOperator make_graded(LinearMap map, Parity parity, const SuperBasis& basis);

/// [f, g] = f∘g − (−1)^{|f||g|} g∘f.
LinearMap supercommutator(const GradedOperator& f, const GradedOperator& g);

struct Containment {
  bool contained = true;
  std::optional<LinearMap> witness;  // first inner basis map outside outer
};

Containment space_contains(const std::vector<LinearMap>& outer,
                           const std::vector<LinearMap>& inner);
inline Containment space_contains(const OperatorSpace& outer, const OperatorSpace& inner) {
  return space_contains(outer.basis, inner.basis);
}

/// Memoizes spaces by (kind, s, r) for one spec. Koszul sign is off.
class SpaceCache {
 public:
  explicit SpaceCache(const TrialgebraSpec& spec) : spec_(spec) {}
  const OperatorSpace& get(SpaceKind kind, TwistPower t);
  const TrialgebraSpec& spec() const noexcept { return spec_; }

 private:
  const TrialgebraSpec& spec_;
  std::map<std::tuple<int, unsigned, unsigned>, OperatorSpace> cache_;
};

struct BatteryLine {
  std::string claim_id;
  TwistPower first;
  std::optional<TwistPower> second;  // set for claims pairing two twists
  bool passed = true;
  /// On failure: the map that falls outside the target space.
  std::optional<LinearMap> witness;
  /// The operands the witness was computed from, for replay.
  std::vector<GradedOperator> operands;
};

struct BatteryReport {
  std::vector<BatteryLine> lines;
  bool passed() const;
  /// Lines with the given claim id.
  std::vector<const BatteryLine*> claim(std::string_view claim_id) const;
};

/// Claim identifiers produced by proposition_battery.
const std::vector<std::string>& battery_claim_ids();

/// Evaluates the subspace relations between the six spaces for all
/// 0 <= s, r <= max_power. Bracket and composition claims pair every two
/// twists and test membership at the summed twist.
BatteryReport proposition_battery(const TrialgebraSpec& spec, unsigned max_power);

}  // namespace supertri
