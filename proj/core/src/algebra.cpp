#include "supertri/algebra.hpp"

#include <algorithm>
#include <functional>
#include <tuple>

#include "supertri/errors.hpp"

namespace supertri {

SuperBasis concat(const SuperBasis& a, const SuperBasis& b) {
  SuperBasis out = a;
  out.parities.insert(out.parities.end(), b.parities.begin(), b.parities.end());
  return out;
}

std::string_view to_string(ParityClass c) {
  switch (c) {
    case ParityClass::Even: return "even";
    case ParityClass::Odd: return "odd";
    case ParityClass::Mixed: return "mixed";
  }
  return "mixed";
}

ParityClass parity_class(const LinearMap& map, const SuperBasis& domain,
                         const SuperBasis& codomain) {
  if (map.rows() != codomain.dim() || map.cols() != domain.dim()) {
    throw InputError("parity_class: map shape does not match the bases");
  }
  bool even = true;
  bool odd = true;
  for (std::size_t i = 0; i < map.rows(); ++i) {
    for (std::size_t j = 0; j < map.cols(); ++j) {
      if (sgn(map(i, j)) == 0) continue;
      if (codomain.parity(i) == domain.parity(j)) {
        odd = false;
      } else {
        even = false;
      }
    }
  }
  if (even) return ParityClass::Even;
  if (odd) return ParityClass::Odd;
  return ParityClass::Mixed;
}

// ---------------------------------------------------------------------------
// StructureTensor

StructureTensor::StructureTensor(std::size_t dim) : dim_(dim), constants_(dim * dim * dim) {}

std::size_t StructureTensor::index(std::size_t i, std::size_t j, std::size_t k) const {
  if (i >= dim_ || j >= dim_ || k >= dim_) {
    throw InputError("structure constant index (" + std::to_string(i) + "," + std::to_string(j) +
                     "," + std::to_string(k) + ") out of range for dimension " +
                     std::to_string(dim_));
  }
  return (i * dim_ + j) * dim_ + k;
}

Vector StructureTensor::basis_product(std::size_t i, std::size_t j) const {
  Vector out(dim_);
  for (std::size_t k = 0; k < dim_; ++k) out[k] = (*this)(i, j, k);
  return out;
}

Vector StructureTensor::multiply(const Vector& x, const Vector& y) const {
  if (x.size() != dim_ || y.size() != dim_) {
    throw InputError("product operand has dimension " + std::to_string(x.size()) + "/" +
                     std::to_string(y.size()) + ", expected " + std::to_string(dim_));
  }
  Vector out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (sgn(y[j]) == 0) continue;
      const Scalar w = x[i] * y[j];
      const std::size_t base = (i * dim_ + j) * dim_;
      for (std::size_t k = 0; k < dim_; ++k) {
        if (sgn(constants_[base + k]) != 0) out[k] += w * constants_[base + k];
      }
    }
  }
  return out;
}

bool StructureTensor::is_zero() const { return supertri::is_zero(constants_); }

std::vector<StructureTensor::Entry> StructureTensor::nonzeros() const {
  std::vector<Entry> out;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k)
        if (sgn((*this)(i, j, k)) != 0) out.push_back({i, j, k, (*this)(i, j, k)});
  return out;
}

namespace {

void require_same_dim(const StructureTensor& a, const StructureTensor& b) {
  if (a.dim() != b.dim()) throw InputError("structure tensor dimension mismatch");
}

}  // namespace

StructureTensor operator+(const StructureTensor& a, const StructureTensor& b) {
  require_same_dim(a, b);
  StructureTensor out(a.dim());
  for (const auto& e : a.nonzeros()) out(e.i, e.j, e.k) += e.value;
  for (const auto& e : b.nonzeros()) out(e.i, e.j, e.k) += e.value;
  return out;
}

StructureTensor operator-(const StructureTensor& a, const StructureTensor& b) {
  return a + Scalar(-1) * b;
}

StructureTensor operator*(const Scalar& factor, const StructureTensor& t) {
  StructureTensor out(t.dim());
  for (const auto& e : t.nonzeros()) out(e.i, e.j, e.k) = factor * e.value;
  return out;
}

StructureTensor transport(const StructureTensor& t, const LinearMap& l, const LinearMap& l_inv) {
  const std::size_t n = t.dim();
  StructureTensor out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vector xi = l_inv.column(i);
    for (std::size_t j = 0; j < n; ++j) {
      const Vector prod = l * t.multiply(xi, l_inv.column(j));
      for (std::size_t k = 0; k < n; ++k) out(i, j, k) = prod[k];
    }
  }
  return out;
}

std::optional<std::array<std::size_t, 3>> first_parity_breach(const StructureTensor& t,
                                                              const SuperBasis& basis) {
  for (const auto& e : t.nonzeros()) {
    if (basis.parity(e.k) != basis.parity(e.i) + basis.parity(e.j)) {
      return std::array<std::size_t, 3>{e.i, e.j, e.k};
    }
  }
  return std::nullopt;
}

std::string_view to_string(Product p) {
  switch (p) {
    case Product::Left: return "left";
    case Product::Right: return "right";
    case Product::Perp: return "perp";
  }
  return "left";
}

// ---------------------------------------------------------------------------
// Specs

const StructureTensor& TrialgebraSpec::tensor(Product p) const {
  switch (p) {
    case Product::Left: return left;
    case Product::Right: return right;
    case Product::Perp: return perp;
  }
  return left;
}

StructureTensor& TrialgebraSpec::tensor(Product p) {
  return const_cast<StructureTensor&>(std::as_const(*this).tensor(p));
}

const LinearMap& TrialgebraSpec::require_xi() const {
  if (!xi) throw ModeError("'" + name + "' has no xi; a BiHom structure is required");
  return *xi;
}

namespace {

void validate_tensor(const StructureTensor& t, const SuperBasis& basis, const std::string& field) {
  if (t.dim() != basis.dim()) {
    throw ValidationError(field, "tensor dimension " + std::to_string(t.dim()) +
                                     " does not match basis dimension " +
                                     std::to_string(basis.dim()));
  }
  if (auto breach = first_parity_breach(t, basis)) {
    const auto [i, j, k] = *breach;
    throw ValidationError(field, "constant at (" + std::to_string(i) + "," + std::to_string(j) +
                                     "," + std::to_string(k) +
                                     ") breaks evenness: parity(k) != parity(i) + parity(j)");
  }
}

void validate_structure_map(const LinearMap& m, const SuperBasis& basis,
                            const std::string& field) {
  if (m.rows() != basis.dim() || m.cols() != basis.dim()) {
    throw ValidationError(field, "expected a " + std::to_string(basis.dim()) + "x" +
                                     std::to_string(basis.dim()) + " matrix");
  }
  if (parity_class(m, basis) != ParityClass::Even) {
    throw ValidationError(field, "structure map must be even");
  }
}

void validate_basis(const SuperBasis& basis) {
  if (basis.dim() == 0) throw ValidationError("dim", "dimension must be at least 1");
}

}  // namespace

void validate(const TrialgebraSpec& spec) {
  validate_basis(spec.basis);
  validate_tensor(spec.left, spec.basis, "left");
  validate_tensor(spec.right, spec.basis, "right");
  validate_tensor(spec.perp, spec.basis, "perp");
  validate_structure_map(spec.gamma, spec.basis, "gamma");
  if (spec.xi) validate_structure_map(*spec.xi, spec.basis, "xi");
}

void validate(const SuperalgebraSpec& spec) {
  validate_basis(spec.basis);
  validate_tensor(spec.star, spec.basis, "star");
  validate_structure_map(spec.gamma, spec.basis, "gamma");
  validate_structure_map(spec.xi, spec.basis, "xi");
}

TrialgebraSpec as_trialgebra(const SuperalgebraSpec& alg, std::string name) {
  return {std::move(name), alg.basis, alg.star, alg.star, alg.star, alg.gamma, alg.xi};
}

// ---------------------------------------------------------------------------
// Reports

void CheckReport::finalize() {
  std::sort(violations.begin(), violations.end(), [](const Violation& a, const Violation& b) {
    return std::tie(a.axiom_id, a.indices) < std::tie(b.axiom_id, b.indices);
  });
}

void CheckReport::merge(CheckReport other) {
  violations.insert(violations.end(), std::make_move_iterator(other.violations.begin()),
                    std::make_move_iterator(other.violations.end()));
  finalize();
}

bool CheckReport::has_axiom(std::string_view axiom_id) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) { return v.axiom_id == axiom_id; });
}

Vector product_eval(const TrialgebraSpec& spec, Product op, const Vector& x, const Vector& y) {
  if (x.size() != spec.dim() || y.size() != spec.dim()) {
    throw InputError("product_eval: operands must have dimension " + std::to_string(spec.dim()));
  }
  return spec.tensor(op).multiply(x, y);
}

// ---------------------------------------------------------------------------
// Axiom tables

namespace {

using Sides = std::pair<Vector, Vector>;

struct Ops {
  const TrialgebraSpec& s;
  const LinearMap& g;
  const LinearMap& x;

  Vector L(const Vector& a, const Vector& b) const { return s.left.multiply(a, b); }
  Vector R(const Vector& a, const Vector& b) const { return s.right.multiply(a, b); }
  Vector P(const Vector& a, const Vector& b) const { return s.perp.multiply(a, b); }
  Vector G(const Vector& a) const { return g * a; }
  Vector X(const Vector& a) const { return x * a; }
};

using TripleIdentity = std::function<Sides(const Ops&, const Vector&, const Vector&, const Vector&)>;

struct NamedIdentity {
  std::string id;
  TripleIdentity sides;
};

// Chained equalities A = B = C are split into A = B ("-a") and B = C ("-b").
// Axiom (ii) is printed with "q ⊢ r"; y is the only free element there.
const std::vector<NamedIdentity>& bihom_table() {
  static const std::vector<NamedIdentity> table = {
      {"ii-a", [](const Ops& o, const Vector& d, const Vector& q, const Vector& y) -> Sides {
         return {o.L(o.L(d, q), o.X(y)), o.L(o.G(d), o.R(q, y))};
       }},
      {"ii-b", [](const Ops& o, const Vector& d, const Vector& q, const Vector& y) -> Sides {
         return {o.L(o.G(d), o.R(q, y)), o.L(o.G(d), o.P(q, y))};
       }},
      {"iii", [](const Ops& o, const Vector& d, const Vector& q, const Vector& y) -> Sides {
         return {o.L(o.L(d, q), o.X(y)), o.R(o.G(d), o.L(q, y))};
       }},
      {"iv-a", [](const Ops& o, const Vector& d, const Vector& q, const Vector& y) -> Sides {
         return {o.R(o.L(d, q), o.G(y)), o.R(o.X(d), o.R(q, y))};
       }},
      {"iv-b", [](const Ops& o, const Vector& d, const Vector& q, const Vector& y) -> Sides {
         return {o.R(o.X(d), o.R(q, y)), o.R(o.P(d, q), o.X(y))};
       }},
      {"v", [](const Ops& o, const Vector& d, const Vector& q, const Vector& y) -> Sides {
         return {o.L(o.P(d, q), o.X(y)), o.P(o.G(d), o.L(q, y))};
       }},
      {"vi", [](const Ops& o, const Vector& d, const Vector& q, const Vector& y) -> Sides {
         return {o.P(o.L(d, q), o.X(y)), o.P(o.G(d), o.R(q, y))};
       }},
      {"vii", [](const Ops& o, const Vector& d, const Vector& q, const Vector& y) -> Sides {
         return {o.P(o.R(d, q), o.X(y)), o.R(o.G(d), o.P(q, y))};
       }},
  };
  return table;
}

// The eleven triple identities of the Hom system, left column then right
// column of the defining display. Only γ appears, so Ops::x aliases γ.
const std::vector<NamedIdentity>& hom_table() {
  static const std::vector<NamedIdentity> table = {
      {"hom-t01", [](const Ops& o, const Vector& d, const Vector& q, const Vector& y) -> Sides {
         return {o.L(o.L(d, q), o.G(y)), o.L(o.G(d), o.R(q, y))};
       }},
      {"hom-t02", [](const Ops& o, const Vector& d, const Vector& q, const Vector& y) -> Sides {
         return {o.R(o.L(d, q), o.G(y)), o.R(o.G(d), o.R(q, y))};
       }},
      {"hom-t03", [](const Ops& o, const Vector& d, const Vector& q, const Vector& y) -> Sides {
         return {o.L(o.L(d, q), o.G(y)), o.L(o.G(d), o.P(q, y))};
       }},
      {"hom-t04", [](const Ops& o, const Vector& d, const Vector& q, const Vector& y) -> Sides {
         return {o.P(o.L(d, q), o.G(y)), o.P(o.G(d), o.R(q, y))};
       }},
      {"hom-t05", [](const Ops& o, const Vector& d, const Vector& q, const Vector& y) -> Sides {
         return {o.R(o.P(d, q), o.G(y)), o.R(o.G(d), o.R(q, y))};
       }},
      {"hom-t06", [](const Ops& o, const Vector& d, const Vector& q, const Vector& y) -> Sides {
         return {o.L(o.L(d, q), o.G(y)), o.L(o.G(d), o.L(q, y))};
       }},
      {"hom-t07", [](const Ops& o, const Vector& d, const Vector& q, const Vector& y) -> Sides {
         return {o.L(o.R(d, q), o.G(y)), o.R(o.G(d), o.L(q, y))};
       }},
      {"hom-t08", [](const Ops& o, const Vector& d, const Vector& q, const Vector& y) -> Sides {
         return {o.R(o.R(d, q), o.G(y)), o.R(o.G(d), o.R(q, y))};
       }},
      {"hom-t09", [](const Ops& o, const Vector& d, const Vector& q, const Vector& y) -> Sides {
         return {o.L(o.P(d, q), o.G(y)), o.P(o.G(d), o.L(q, y))};
       }},
      {"hom-t10", [](const Ops& o, const Vector& d, const Vector& q, const Vector& y) -> Sides {
         return {o.P(o.R(d, q), o.G(y)), o.R(o.G(d), o.P(q, y))};
       }},
      {"hom-t11", [](const Ops& o, const Vector& d, const Vector& q, const Vector& y) -> Sides {
         return {o.P(o.P(d, q), o.G(y)), o.P(o.G(d), o.P(q, y))};
       }},
  };
  return table;
}

void sweep_triples(const Ops& ops, const std::vector<NamedIdentity>& table, CheckReport& report) {
  const std::size_t n = ops.s.dim();
  for (std::size_t i = 0; i < n; ++i) {
    const Vector d = unit_vector(n, i);
    for (std::size_t j = 0; j < n; ++j) {
      const Vector q = unit_vector(n, j);
      for (std::size_t k = 0; k < n; ++k) {
        const Vector y = unit_vector(n, k);
        for (const auto& axiom : table) {
          auto [lhs, rhs] = axiom.sides(ops, d, q, y);
          if (lhs != rhs) {
            report.violations.push_back({axiom.id, {i, j, k}, std::move(lhs), std::move(rhs)});
          }
        }
      }
    }
  }
}

// a∘b on basis pairs compared against f(a∘b) == f(a)∘' f(b).
void sweep_endomorphism(const StructureTensor& src, const StructureTensor& dst, const LinearMap& f,
                        const std::string& id, CheckReport& report) {
  const std::size_t n = src.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Vector lhs = f * src.basis_product(i, j);
      Vector rhs = dst.multiply(f.column(i), f.column(j));
      if (lhs != rhs) report.violations.push_back({id, {i, j}, std::move(lhs), std::move(rhs)});
    }
  }
}

// Column-by-column comparison of a*b and c*d.
void sweep_map_identity(const LinearMap& ab, const LinearMap& cd, const std::string& id,
                        CheckReport& report) {
  for (std::size_t j = 0; j < ab.cols(); ++j) {
    Vector lhs = ab.column(j);
    Vector rhs = cd.column(j);
    if (lhs != rhs) report.violations.push_back({id, {j}, std::move(lhs), std::move(rhs)});
  }
}

}  // namespace

const std::vector<std::string>& bihom_axiom_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out{"i"};
    for (const auto& a : bihom_table()) out.push_back(a.id);
    return out;
  }();
  return ids;
}

const std::vector<std::string>& hom_axiom_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out{"hom-mult-left", "hom-mult-right", "hom-mult-perp"};
    for (const auto& a : hom_table()) out.push_back(a.id);
    return out;
  }();
  return ids;
}

std::pair<Vector, Vector> axiom_sides(const TrialgebraSpec& spec, std::string_view axiom_id,
                                      const Vector& d, const Vector& q, const Vector& y) {
  for (const auto& a : bihom_table()) {
    if (a.id == axiom_id) return a.sides(Ops{spec, spec.gamma, spec.require_xi()}, d, q, y);
  }
  for (const auto& a : hom_table()) {
    if (a.id == axiom_id) return a.sides(Ops{spec, spec.gamma, spec.gamma}, d, q, y);
  }
  throw InputError("unknown triple axiom '" + std::string(axiom_id) + "'");
}

CheckReport check_bihom(const TrialgebraSpec& spec) {
  const LinearMap& xi = spec.require_xi();
  CheckReport report;
  sweep_map_identity(spec.gamma * xi, xi * spec.gamma, "i", report);
  sweep_triples(Ops{spec, spec.gamma, xi}, bihom_table(), report);
  report.finalize();
  return report;
}

CheckReport check_hom(const TrialgebraSpec& spec) {
  if (spec.xi && *spec.xi != spec.gamma) {
    throw ModeError("check_hom: '" + spec.name + "' carries a xi different from gamma");
  }
  CheckReport report;
  for (Product p : kProducts) {
    sweep_endomorphism(spec.tensor(p), spec.tensor(p), spec.gamma,
                       "hom-mult-" + std::string(to_string(p)), report);
  }
  sweep_triples(Ops{spec, spec.gamma, spec.gamma}, hom_table(), report);
  report.finalize();
  return report;
}

CheckReport check_multiplicative(const TrialgebraSpec& spec) {
  const LinearMap& xi = spec.require_xi();
  CheckReport report;
  for (Product p : kProducts) {
    const std::string suffix(to_string(p));
    sweep_endomorphism(spec.tensor(p), spec.tensor(p), spec.gamma, "mult-gamma-" + suffix, report);
    sweep_endomorphism(spec.tensor(p), spec.tensor(p), xi, "mult-xi-" + suffix, report);
  }
  report.finalize();
  return report;
}

CheckReport check_superalgebra(const SuperalgebraSpec& spec) {
  const std::size_t n = spec.dim();
  CheckReport report;
  for (std::size_t i = 0; i < n; ++i) {
    const Vector d = unit_vector(n, i);
    const Vector gd = spec.gamma * d;
    for (std::size_t j = 0; j < n; ++j) {
      const Vector dv = spec.star.basis_product(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        Vector lhs = spec.star.multiply(dv, spec.xi.column(k));
        Vector rhs = spec.star.multiply(gd, spec.star.basis_product(j, k));
        if (lhs != rhs) {
          report.violations.push_back({"bihom-assoc", {i, j, k}, std::move(lhs), std::move(rhs)});
        }
      }
    }
  }
  report.finalize();
  return report;
}

CheckReport check_morphism(const TrialgebraSpec& src, const TrialgebraSpec& dst,
                           const LinearMap& pi) {
  if (pi.rows() != dst.dim() || pi.cols() != src.dim()) {
    throw InputError("morphism map must be " + std::to_string(dst.dim()) + "x" +
                     std::to_string(src.dim()) + ", got " + std::to_string(pi.rows()) + "x" +
                     std::to_string(pi.cols()));
  }
  if (src.xi.has_value() != dst.xi.has_value()) {
    throw ModeError("morphism between a Hom and a BiHom structure");
  }
  CheckReport report;
  sweep_map_identity(dst.gamma * pi, pi * src.gamma, "morphism-gamma", report);
  if (src.xi) sweep_map_identity(*dst.xi * pi, pi * *src.xi, "morphism-xi", report);
  for (Product p : kProducts) {
    sweep_endomorphism(src.tensor(p), dst.tensor(p), pi,
                       "morphism-" + std::string(to_string(p)), report);
  }
  report.finalize();
  return report;
}

// ---------------------------------------------------------------------------
// Center and centralizer

namespace {

// Rows expressing w ∘ e_j = 0 and e_j ∘ w = 0 for w = G u, in the unknowns u
// (columns of G). `targets` are the fixed elements a_j.
Matrix annihilator_system(const TrialgebraSpec& spec, const Matrix& G,
                          const std::vector<Vector>& targets) {
  const std::size_t n = spec.dim();
  const std::size_t unknowns = G.cols();
  std::vector<Vector> rows;
  for (Product p : kProducts) {
    const StructureTensor& t = spec.tensor(p);
    for (const auto& a : targets) {
      // Column c of the product map u ↦ (G u) ∘ a is (G e_c) ∘ a.
      std::vector<Vector> right_cols, left_cols;
      for (std::size_t c = 0; c < unknowns; ++c) {
        const Vector gc = G.column(c);
        right_cols.push_back(t.multiply(gc, a));
        left_cols.push_back(t.multiply(a, gc));
      }
      for (std::size_t k = 0; k < n; ++k) {
        Vector r1(unknowns), r2(unknowns);
        for (std::size_t c = 0; c < unknowns; ++c) {
          r1[c] = right_cols[c][k];
          r2[c] = left_cols[c][k];
        }
        if (!is_zero(r1)) rows.push_back(std::move(r1));
        if (!is_zero(r2)) rows.push_back(std::move(r2));
      }
    }
  }
  Matrix m(rows.size(), unknowns);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < unknowns; ++c) m(r, c) = rows[r][c];
  return m;
}

}  // namespace

std::vector<Vector> center(const TrialgebraSpec& spec) {
  const std::size_t n = spec.dim();
  const LinearMap gx = spec.gamma * spec.require_xi();
  std::vector<Vector> basis;
  for (std::size_t j = 0; j < n; ++j) basis.push_back(unit_vector(n, j));
  return nullspace_basis(annihilator_system(spec, gx, basis));
}

std::vector<Vector> centralizer(const TrialgebraSpec& spec, const std::vector<Vector>& subset) {
  const std::size_t n = spec.dim();
  for (const auto& a : subset) {
    if (a.size() != n) throw InputError("centralizer: subset vector has the wrong dimension");
  }
  if (subset.empty()) return {};
  // u = S t with S the subset as columns; solve for t, then map back.
  const Matrix S = Matrix::from_columns(subset, n);
  const LinearMap gxs = spec.gamma * spec.require_xi() * S;
  std::vector<Vector> members;
  for (const auto& t : nullspace_basis(annihilator_system(spec, gxs, subset))) {
    members.push_back(S * t);
  }
  return canonical_span_basis(members, n);
}

}  // namespace supertri
