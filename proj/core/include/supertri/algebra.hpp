#pragma once

// Graded data model for supertrialgebras given by structure constants, and
// the checkers for the Hom and BiHom axiom systems, multiplicativity,
// superalgebra associativity and morphisms.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "supertri/linalg.hpp"

namespace supertri {

enum class Parity : std::uint8_t { Even = 0, Odd = 1 };

constexpr Parity operator+(Parity a, Parity b) noexcept {
  return static_cast<Parity>(static_cast<std::uint8_t>(a) ^ static_cast<std::uint8_t>(b));
}
constexpr int to_int(Parity p) noexcept { return static_cast<int>(p); }
/// (-1)^(|a||b|)
constexpr int koszul_sign(Parity a, Parity b) noexcept {
  return (a == Parity::Odd && b == Parity::Odd) ? -1 : 1;
}

/// Homogeneous basis of a superspace; entry i is the parity of e_i.
struct SuperBasis {
  std::vector<Parity> parities;

  std::size_t dim() const noexcept { return parities.size(); }
  Parity parity(std::size_t i) const { return parities.at(i); }

  friend bool operator==(const SuperBasis&, const SuperBasis&) = default;
};

SuperBasis concat(const SuperBasis& a, const SuperBasis& b);

enum class ParityClass { Even, Odd, Mixed };
std::string_view to_string(ParityClass c);

/// Linear maps are matrices acting on coordinate columns: map(i, j) is the
/// e_i coordinate of map(e_j).
using LinearMap = Matrix;

/// A map counts as even when every entry between basis vectors of different
/// parity vanishes, odd when every entry between equal parities vanishes.
/// The zero map classifies as even.
ParityClass parity_class(const LinearMap& map, const SuperBasis& domain,
                         const SuperBasis& codomain);
inline ParityClass parity_class(const LinearMap& map, const SuperBasis& basis) {
  return parity_class(map, basis, basis);
}

/// Structure constants c^k_ij of a bilinear product e_i * e_j = sum_k c^k_ij e_k.
class StructureTensor {
 public:
  struct Entry {
    std::size_t i, j, k;
    Scalar value;
  };

  StructureTensor() = default;
  explicit StructureTensor(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }

  const Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return constants_[index(i, j, k)];
  }
  Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) {
    return constants_[index(i, j, k)];
  }

  /// Coordinates of e_i * e_j.
  Vector basis_product(std::size_t i, std::size_t j) const;
  /// Bilinear extension to arbitrary coordinate vectors.
  Vector multiply(const Vector& x, const Vector& y) const;

  bool is_zero() const;
  /// Nonzero constants sorted by (i, j, k).
  std::vector<Entry> nonzeros() const;

  friend bool operator==(const StructureTensor&, const StructureTensor&) = default;

 private:
  std::size_t index(std::size_t i, std::size_t j, std::size_t k) const;

  std::size_t dim_ = 0;
  std::vector<Scalar> constants_;
};

StructureTensor operator+(const StructureTensor& a, const StructureTensor& b);
StructureTensor operator-(const StructureTensor& a, const StructureTensor& b);
StructureTensor operator*(const Scalar& factor, const StructureTensor& t);

/// The tensor of x ∘' y = l(l⁻¹x ∘ l⁻¹y), given l and its inverse.
StructureTensor transport(const StructureTensor& t, const LinearMap& l, const LinearMap& l_inv);

/// First index position where the tensor breaks evenness, if any.
std::optional<std::array<std::size_t, 3>> first_parity_breach(const StructureTensor& t,
                                                              const SuperBasis& basis);

enum class Product { Left, Right, Perp };
inline constexpr std::array<Product, 3> kProducts{Product::Left, Product::Right, Product::Perp};
std::string_view to_string(Product p);

struct TrialgebraSpec {
  std::string name;
  SuperBasis basis;
  StructureTensor left;   // ⊣
  StructureTensor right;  // ⊢
  StructureTensor perp;   // ⊥
  LinearMap gamma;
  std::optional<LinearMap> xi;  // absent for a Hom (single structure map) candidate

  std::size_t dim() const noexcept { return basis.dim(); }
  const StructureTensor& tensor(Product p) const;
  StructureTensor& tensor(Product p);
  /// Throws ModeError when xi is absent.
  const LinearMap& require_xi() const;

  friend bool operator==(const TrialgebraSpec&, const TrialgebraSpec&) = default;
};

/// Superalgebra with a single product ∗ and two structure maps.
struct SuperalgebraSpec {
  SuperBasis basis;
  StructureTensor star;
  LinearMap gamma;
  LinearMap xi;

  std::size_t dim() const noexcept { return basis.dim(); }

  friend bool operator==(const SuperalgebraSpec&, const SuperalgebraSpec&) = default;
};

/// Throws ValidationError naming the offending field: dimension >= 1, tensor
/// and map shapes, evenness of the tensors and of gamma/xi.
void validate(const TrialgebraSpec& spec);
void validate(const SuperalgebraSpec& spec);

/// The trialgebra with all three products equal to alg.star.
TrialgebraSpec as_trialgebra(const SuperalgebraSpec& alg, std::string name);

struct Violation {
  std::string axiom_id;
  std::vector<std::size_t> indices;  // basis triple, pair, or single column
  Vector lhs;
  Vector rhs;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct CheckReport {
  std::vector<Violation> violations;

  bool passed() const noexcept { return violations.empty(); }
  /// Sorts violations by (axiom_id, indices).
  void finalize();
  void merge(CheckReport other);
  bool has_axiom(std::string_view axiom_id) const;
};

Vector product_eval(const TrialgebraSpec& spec, Product op, const Vector& x, const Vector& y);

/// Axiom identifiers checked by check_bihom, in evaluation order.
const std::vector<std::string>& bihom_axiom_ids();
/// Axiom identifiers checked by check_hom.
const std::vector<std::string>& hom_axiom_ids();

/// Both sides of a named triple identity on arbitrary elements d, q, y.
/// Covers the BiHom identities ("ii-a" ... "vii") and the Hom triple
/// identities ("hom-t01" ... "hom-t11").
std::pair<Vector, Vector> axiom_sides(const TrialgebraSpec& spec, std::string_view axiom_id,
                                      const Vector& d, const Vector& q, const Vector& y);

CheckReport check_bihom(const TrialgebraSpec& spec);
CheckReport check_hom(const TrialgebraSpec& spec);
CheckReport check_multiplicative(const TrialgebraSpec& spec);
CheckReport check_superalgebra(const SuperalgebraSpec& spec);
/// pi maps src coordinates to dst coordinates (dst.dim() x src.dim()).
CheckReport check_morphism(const TrialgebraSpec& src, const TrialgebraSpec& dst,
                           const LinearMap& pi);

/// Canonical nullspace basis of {u : γξ(u) ∘ e_j = e_j ∘ γξ(u) = 0}.
std::vector<Vector> center(const TrialgebraSpec& spec);
/// Canonical basis of {u ∈ span(subset) : γξ(u) ∘ a = a ∘ γξ(u) = 0, a ∈ subset}.
std::vector<Vector> centralizer(const TrialgebraSpec& spec, const std::vector<Vector>& subset);

}  // namespace supertri
