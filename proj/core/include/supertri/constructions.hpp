#pragma once

// Constructions producing new algebras from old ones. Every construction
// re-runs the relevant checker on its output and returns the report next to
// the result; nothing here assumes the output is a valid algebra.

#include <optional>

#include "supertri/algebra.hpp"

namespace supertri {

/// An algebra together with the checker verdict on it.
struct Construction {
  TrialgebraSpec spec;
  CheckReport report;
};

struct TwistResult {
  TrialgebraSpec twisted;
  LinearMap conjugated_gamma;
  std::optional<LinearMap> conjugated_xi;
  /// Coordinates of l(u_i) ∘' l(u_j) in the basis {l(u_k)} equal the
  /// original structure constants, for every product.
  bool constants_match = false;
  /// check_bihom on `twisted` (check_hom when the input has no xi).
  CheckReport report;
};

/// Products x ∘' y = l(l⁻¹x ∘ l⁻¹y), structure maps lγl⁻¹ and lξl⁻¹.
/// Throws ParityError if l is not even and SingularMap if it is not invertible.
TwistResult yau_twist(const TrialgebraSpec& spec, const LinearMap& l);

/// Checks that lφl⁻¹ is an automorphism of the l-twisted algebra.
/// Throws NotAutomorphism when φ is not a morphism of `spec` onto itself,
/// SingularMap when φ or l is singular.
CheckReport conjugate_automorphism(const TrialgebraSpec& spec, const LinearMap& l,
                                   const LinearMap& phi);

/// Block-diagonal sum; both inputs must validate (dimension >= 1).
Construction direct_sum(const TrialgebraSpec& a, const TrialgebraSpec& b);

struct GraphCheck {
  bool is_subalgebra = false;
  bool is_morphism = false;
  /// The morphism report, kept for its witnesses.
  CheckReport morphism_report;
};

/// Graph {(x, f(x))} of f : a -> b inside a ⊕ b, tested for closure under the
/// three products and both structure maps, alongside check_morphism(a, b, f).
GraphCheck graph_subalgebra_check(const TrialgebraSpec& a, const TrialgebraSpec& b,
                                  const LinearMap& f);

/// Rota-Baxter identity λ(d)∘λ(v) = λ(λ(d)∘v + d∘λ(v) + c·(d∘v)) for every
/// product. With `literal`, the crossed variant is checked instead: ⊢ on the
/// outside with ⊣ inside, ⊣ outside with ⊢ inside, ⊥ with ⊥.
/// Throws ParityError for odd/mixed λ and CommutationError when λ does not
/// commute with γ and ξ.
CheckReport rota_baxter_check(const TrialgebraSpec& spec, const LinearMap& lambda,
                              const Scalar& weight, bool literal = false);

/// The same identity for the single product of a superalgebra.
CheckReport rota_baxter_check(const SuperalgebraSpec& alg, const LinearMap& lambda,
                              const Scalar& weight);

/// d ⊣ v = d ∗ λ(v), d ⊢ v = λ(d) ∗ v, d ⊥ v = c·(d ∗ v), same γ and ξ.
/// Throws PreconditionError when `alg` is not BiHom-associative or λ is not a
/// Rota-Baxter operator of the given weight on it.
Construction rota_baxter_induce(const SuperalgebraSpec& alg, const LinearMap& lambda,
                                const Scalar& weight);

/// λ(λ(d)∘r) = λ(d)∘λ(r) = λ(d∘λ(r)) for every product, plus commutation
/// with γ and ξ. Throws ParityError for odd/mixed λ.
CheckReport averaging_check(const TrialgebraSpec& spec, const LinearMap& lambda);

struct SwapResult {
  bool hypothesis_holds = false;  // γ² = ξ² = γξ = ξγ = id
  TrialgebraSpec swapped;
  CheckReport report;
  bool swapped_passes() const noexcept { return report.passed(); }
};

SwapResult swap_construct(const TrialgebraSpec& spec);

/// (⊣, ⊢ + ⊥, ⊥): the sum occupies the ⊢ slot.
Construction sum_product_construct(const TrialgebraSpec& spec);

struct BracketPairSpec {
  SuperBasis basis;
  StructureTensor star;     // d ⊣ v − (−1)^{|d||v|} v ⊢ d
  StructureTensor bracket;  // d ⊥ v − (−1)^{|d||v|} v ⊥ d
  LinearMap gamma;
  LinearMap xi;
};

struct CommutatorResult {
  BracketPairSpec pair;
  /// [d,v] ∗ γξ(r) = [d ∗ r, ξ(v)] + [γ(d), v ∗ r] on basis triples.
  CheckReport leibniz;
};

CommutatorResult commutator_construct(const TrialgebraSpec& spec);

struct TotalProductResult {
  SuperalgebraSpec alg;
  CheckReport report;
};

/// ∗ = ⊣ + ⊢ + ⊥, checked with check_superalgebra.
TotalProductResult total_product_construct(const TrialgebraSpec& spec);

}  // namespace supertri
