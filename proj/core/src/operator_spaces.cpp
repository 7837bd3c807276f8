#include "supertri/operator_spaces.hpp"

#include <algorithm>

#include "supertri/errors.hpp"

namespace supertri {

std::string_view to_string(SpaceKind kind) {
  switch (kind) {
    case SpaceKind::D: return "D";
    case SpaceKind::QD: return "QD";
    case SpaceKind::GD: return "GD";
    case SpaceKind::ZD: return "ZD";
    case SpaceKind::C: return "C";
    case SpaceKind::QC: return "QC";
  }
  return "D";
}

SpaceKind parse_space_kind(std::string_view text) {
  for (SpaceKind k : kSpaceKinds) {
    if (to_string(k) == text) return k;
  }
  throw InputError("unknown space kind '" + std::string(text) + "'");
}

LinearMap twist_map(const TrialgebraSpec& spec, TwistPower t) {
  return power(spec.gamma, t.s) * power(spec.require_xi(), t.r);
}

Vector vectorize(const LinearMap& m) { return m.entries(); }

LinearMap unvectorize(const Vector& v, std::size_t n) { return LinearMap(n, n, v); }

std::vector<LinearMap> canonical_maps(const std::vector<LinearMap>& maps, std::size_t n) {
  std::vector<Vector> flat;
  flat.reserve(maps.size());
  for (const auto& m : maps) flat.push_back(vectorize(m));
  std::vector<LinearMap> out;
  for (auto& v : canonical_span_basis(flat, n * n)) out.push_back(unvectorize(v, n));
  return out;
}

namespace {

// Homogeneous linear system whose unknowns are the entries of `blocks`
// operators of size n x n, stored row-major one block after another.
class OperatorSystem {
 public:
  OperatorSystem(std::size_t n, std::size_t blocks) : n_(n), unknowns_(blocks * n * n) {}

  std::size_t var(std::size_t block, std::size_t i, std::size_t j) const {
    return block * n_ * n_ + i * n_ + j;
  }
  std::size_t unknowns() const noexcept { return unknowns_; }

  Vector blank() const { return Vector(unknowns_); }

  void push(Vector row) {
    if (!is_zero(row)) rows_.push_back(std::move(row));
  }

  // coeff · δ_block(e_a ∘ e_b)_m = coeff · Σ_k c^k_ab δ(m,k)
  void add_image_of_product(Vector& row, std::size_t block, const StructureTensor& c,
                            std::size_t a, std::size_t b, std::size_t m,
                            const Scalar& coeff) const {
    for (std::size_t k = 0; k < n_; ++k) {
      if (sgn(c(a, b, k)) != 0) row[var(block, m, k)] += coeff * c(a, b, k);
    }
  }

  // coeff · (δ_block(e_a) ∘ T(e_b))_m = coeff · Σ_{p,q} δ(p,a) T(q,b) c^m_pq
  void add_operator_left(Vector& row, std::size_t block, const StructureTensor& c,
                         const LinearMap& T, std::size_t a, std::size_t b, std::size_t m,
                         const Scalar& coeff) const {
    for (std::size_t q = 0; q < n_; ++q) {
      if (sgn(T(q, b)) == 0) continue;
      for (std::size_t p = 0; p < n_; ++p) {
        if (sgn(c(p, q, m)) != 0) row[var(block, p, a)] += coeff * T(q, b) * c(p, q, m);
      }
    }
  }

  // coeff · (T(e_a) ∘ δ_block(e_b))_m = coeff · Σ_{p,q} T(p,a) δ(q,b) c^m_pq
  void add_operator_right(Vector& row, std::size_t block, const StructureTensor& c,
                          const LinearMap& T, std::size_t a, std::size_t b, std::size_t m,
                          const Scalar& coeff) const {
    for (std::size_t p = 0; p < n_; ++p) {
      if (sgn(T(p, a)) == 0) continue;
      for (std::size_t q = 0; q < n_; ++q) {
        if (sgn(c(p, q, m)) != 0) row[var(block, q, b)] += coeff * T(p, a) * c(p, q, m);
      }
    }
  }

  // δ_block M − M δ_block = 0
  void add_commutation(std::size_t block, const LinearMap& M) {
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        Vector row = blank();
        for (std::size_t k = 0; k < n_; ++k) {
          row[var(block, i, k)] += M(k, j);
          row[var(block, k, j)] -= M(i, k);
        }
        push(std::move(row));
      }
    }
  }

  // Forces δ_block to be homogeneous of parity `keep`.
  void add_parity_restriction(std::size_t block, const SuperBasis& basis, Parity keep) {
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        if (basis.parity(i) + basis.parity(j) != keep) {
          Vector row = blank();
          row[var(block, i, j)] = 1;
          push(std::move(row));
        }
      }
    }
  }

  // Nullspace projected onto block 0, canonicalized.
  std::vector<LinearMap> solve_first_block() const {
    Matrix m(rows_.size(), unknowns_);
    for (std::size_t r = 0; r < rows_.size(); ++r)
      for (std::size_t c = 0; c < unknowns_; ++c) m(r, c) = rows_[r][c];
    std::vector<LinearMap> maps;
    for (const auto& sol : nullspace_basis(m)) {
      maps.push_back(unvectorize(Vector(sol.begin(), sol.begin() + static_cast<std::ptrdiff_t>(n_ * n_)), n_));
    }
    return canonical_maps(maps, n_);
  }

 private:
  std::size_t n_;
  std::size_t unknowns_;
  std::vector<Vector> rows_;
};

void add_commutations(OperatorSystem& sys, const TrialgebraSpec& spec, std::size_t blocks) {
  for (std::size_t b = 0; b < blocks; ++b) {
    sys.add_commutation(b, spec.gamma);
    sys.add_commutation(b, spec.require_xi());
  }
}

template <typename RowFn>
void for_each_product_row(const TrialgebraSpec& spec, OperatorSystem& sys, RowFn&& fn) {
  const std::size_t n = spec.dim();
  for (Product p : kProducts) {
    const StructureTensor& c = spec.tensor(p);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t m = 0; m < n; ++m) {
          Vector row = sys.blank();
          fn(row, c, a, b, m);
          sys.push(std::move(row));
        }
  }
}

const Scalar kOne(1);
const Scalar kMinusOne(-1);

// Leibniz rows for δ in block 0; `odd_sign` applies (−1)^{|e_a|} to the
// second term.
void add_derivation_rows(OperatorSystem& sys, const TrialgebraSpec& spec, const LinearMap& T,
                         bool odd_sign) {
  for_each_product_row(spec, sys, [&](Vector& row, const StructureTensor& c, std::size_t a,
                                      std::size_t b, std::size_t m) {
    sys.add_image_of_product(row, 0, c, a, b, m, kOne);
    sys.add_operator_left(row, 0, c, T, a, b, m, kMinusOne);
    const bool flip = odd_sign && spec.basis.parity(a) == Parity::Odd;
    sys.add_operator_right(row, 0, c, T, a, b, m, flip ? kOne : kMinusOne);
  });
}

void add_centroid_rows(OperatorSystem& sys, const TrialgebraSpec& spec, const LinearMap& T) {
  for_each_product_row(spec, sys, [&](Vector& row, const StructureTensor& c, std::size_t a,
                                      std::size_t b, std::size_t m) {
    sys.add_image_of_product(row, 0, c, a, b, m, kOne);
    sys.add_operator_left(row, 0, c, T, a, b, m, kMinusOne);
  });
  for_each_product_row(spec, sys, [&](Vector& row, const StructureTensor& c, std::size_t a,
                                      std::size_t b, std::size_t m) {
    sys.add_image_of_product(row, 0, c, a, b, m, kOne);
    sys.add_operator_right(row, 0, c, T, a, b, m, kMinusOne);
  });
}

OperatorSpace finish(const TrialgebraSpec& spec, SpaceKind kind, TwistPower t, bool koszul,
                     std::vector<LinearMap> basis) {
  OperatorSpace out;
  out.ambient = spec.dim();
  out.kind = kind;
  out.twist = t;
  out.koszul = koszul;
  out.basis = std::move(basis);
  auto split = graded_split(out.basis, spec.basis);
  out.even_basis = std::move(split.even);
  out.odd_basis = std::move(split.odd);
  return out;
}

}  // namespace

OperatorSpace derivation_space(const TrialgebraSpec& spec, TwistPower t, bool koszul) {
  const std::size_t n = spec.dim();
  const LinearMap T = twist_map(spec, t);
  if (!koszul) {
    OperatorSystem sys(n, 1);
    add_commutations(sys, spec, 1);
    add_derivation_rows(sys, spec, T, false);
    return finish(spec, SpaceKind::D, t, false, sys.solve_first_block());
  }
  OperatorSystem even(n, 1);
  add_commutations(even, spec, 1);
  add_derivation_rows(even, spec, T, false);
  even.add_parity_restriction(0, spec.basis, Parity::Even);

  OperatorSystem odd(n, 1);
  add_commutations(odd, spec, 1);
  add_derivation_rows(odd, spec, T, true);
  odd.add_parity_restriction(0, spec.basis, Parity::Odd);

  std::vector<LinearMap> maps = even.solve_first_block();
  for (auto& m : odd.solve_first_block()) maps.push_back(std::move(m));
  return finish(spec, SpaceKind::D, t, true, canonical_maps(maps, n));
}

OperatorSpace quasiderivation_space(const TrialgebraSpec& spec, TwistPower t) {
  const LinearMap T = twist_map(spec, t);
  OperatorSystem sys(spec.dim(), 2);
  add_commutations(sys, spec, 2);
  for_each_product_row(spec, sys, [&](Vector& row, const StructureTensor& c, std::size_t a,
                                      std::size_t b, std::size_t m) {
    sys.add_image_of_product(row, 1, c, a, b, m, kOne);
    sys.add_operator_left(row, 0, c, T, a, b, m, kMinusOne);
    sys.add_operator_right(row, 0, c, T, a, b, m, kMinusOne);
  });
  return finish(spec, SpaceKind::QD, t, false, sys.solve_first_block());
}

OperatorSpace generalized_derivation_space(const TrialgebraSpec& spec, TwistPower t) {
  const LinearMap T = twist_map(spec, t);
  OperatorSystem sys(spec.dim(), 3);
  add_commutations(sys, spec, 3);
  for_each_product_row(spec, sys, [&](Vector& row, const StructureTensor& c, std::size_t a,
                                      std::size_t b, std::size_t m) {
    sys.add_image_of_product(row, 2, c, a, b, m, kOne);
    sys.add_operator_left(row, 0, c, T, a, b, m, kMinusOne);
    sys.add_operator_right(row, 1, c, T, a, b, m, kMinusOne);
  });
  return finish(spec, SpaceKind::GD, t, false, sys.solve_first_block());
}

OperatorSpace central_derivation_space(const TrialgebraSpec& spec, TwistPower t) {
  const LinearMap id = LinearMap::identity(spec.dim());
  OperatorSystem sys(spec.dim(), 1);
  add_commutations(sys, spec, 1);
  for_each_product_row(spec, sys, [&](Vector& row, const StructureTensor& c, std::size_t a,
                                      std::size_t b, std::size_t m) {
    sys.add_image_of_product(row, 0, c, a, b, m, kOne);
  });
  for_each_product_row(spec, sys, [&](Vector& row, const StructureTensor& c, std::size_t a,
                                      std::size_t b, std::size_t m) {
    sys.add_operator_left(row, 0, c, id, a, b, m, kOne);
  });
  return finish(spec, SpaceKind::ZD, t, false, sys.solve_first_block());
}

OperatorSpace centroid(const TrialgebraSpec& spec, TwistPower t) {
  const LinearMap T = twist_map(spec, t);
  OperatorSystem sys(spec.dim(), 1);
  add_commutations(sys, spec, 1);
  add_centroid_rows(sys, spec, T);
  return finish(spec, SpaceKind::C, t, false, sys.solve_first_block());
}

OperatorSpace quasicentroid(const TrialgebraSpec& spec, TwistPower t) {
  const LinearMap T = twist_map(spec, t);
  OperatorSystem sys(spec.dim(), 1);
  add_commutations(sys, spec, 1);
  for_each_product_row(spec, sys, [&](Vector& row, const StructureTensor& c, std::size_t a,
                                      std::size_t b, std::size_t m) {
    sys.add_operator_left(row, 0, c, T, a, b, m, kOne);
    sys.add_operator_right(row, 0, c, T, a, b, m, kMinusOne);
  });
  return finish(spec, SpaceKind::QC, t, false, sys.solve_first_block());
}

OperatorSpace compute_space(const TrialgebraSpec& spec, SpaceKind kind, TwistPower t,
                            bool koszul) {
  switch (kind) {
    case SpaceKind::D: return derivation_space(spec, t, koszul);
    case SpaceKind::QD: return quasiderivation_space(spec, t);
    case SpaceKind::GD: return generalized_derivation_space(spec, t);
    case SpaceKind::ZD: return central_derivation_space(spec, t);
    case SpaceKind::C: return centroid(spec, t);
    case SpaceKind::QC: return quasicentroid(spec, t);
  }
  throw InputError("unknown space kind");
}

std::vector<LinearMap> derivation_centroid_intersection(const TrialgebraSpec& spec, TwistPower t) {
  const LinearMap T = twist_map(spec, t);
  OperatorSystem sys(spec.dim(), 1);
  add_commutations(sys, spec, 1);
  add_derivation_rows(sys, spec, T, false);
  add_centroid_rows(sys, spec, T);
  return sys.solve_first_block();
}

// ---------------------------------------------------------------------------

GradedSplit graded_split(const std::vector<LinearMap>& maps, const SuperBasis& basis) {
  const std::size_t n = basis.dim();
  auto piece = [&](Parity keep) {
    // Combinations Σ t_m maps_m whose entries of the other parity vanish.
    std::vector<std::pair<std::size_t, std::size_t>> killed;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (basis.parity(i) + basis.parity(j) != keep) killed.emplace_back(i, j);
    Matrix system(killed.size(), maps.size());
    for (std::size_t r = 0; r < killed.size(); ++r)
      for (std::size_t c = 0; c < maps.size(); ++c)
        system(r, c) = maps[c](killed[r].first, killed[r].second);
    std::vector<LinearMap> members;
    for (const auto& coeffs : nullspace_basis(system)) {
      LinearMap sum(n, n);
      for (std::size_t c = 0; c < maps.size(); ++c) {
        if (sgn(coeffs[c]) != 0) sum = sum + coeffs[c] * maps[c];
      }
      members.push_back(std::move(sum));
    }
    return canonical_maps(members, n);
  };
  return {piece(Parity::Even), piece(Parity::Odd)};
}

GradedOperator make_graded(LinearMap map, Parity parity, const SuperBasis& basis) {
  const ParityClass cls = parity_class(map, basis);
  const bool ok = parity == Parity::Even ? cls == ParityClass::Even
                                         : (cls == ParityClass::Odd || map.is_zero());
  if (!ok) {
    throw ParityError("map of class " + std::string(to_string(cls)) + " is not homogeneous of parity " +
                      std::to_string(to_int(parity)));
  }
  return {std::move(map), parity};
}

LinearMap supercommutator(const GradedOperator& f, const GradedOperator& g) {
  const int sign = koszul_sign(f.parity, g.parity);
  return f.map * g.map - Scalar(sign) * (g.map * f.map);
}

Containment space_contains(const std::vector<LinearMap>& outer,
                           const std::vector<LinearMap>& inner) {
  std::vector<Vector> span;
  span.reserve(outer.size());
  for (const auto& m : outer) span.push_back(vectorize(m));
  for (const auto& m : inner) {
    const Vector v = vectorize(m);
    if (span.empty() ? !is_zero(v) : !solve_in_span(span, v)) return {false, m};
  }
  return {};
}

// ---------------------------------------------------------------------------
// Battery

const OperatorSpace& SpaceCache::get(SpaceKind kind, TwistPower t) {
  const auto key = std::make_tuple(static_cast<int>(kind), t.s, t.r);
  auto it = cache_.find(key);
  if (it == cache_.end()) it = cache_.emplace(key, compute_space(spec_, kind, t)).first;
  return it->second;
}

bool BatteryReport::passed() const {
  return std::all_of(lines.begin(), lines.end(), [](const BatteryLine& l) { return l.passed; });
}

std::vector<const BatteryLine*> BatteryReport::claim(std::string_view claim_id) const {
  std::vector<const BatteryLine*> out;
  for (const auto& l : lines)
    if (l.claim_id == claim_id) out.push_back(&l);
  return out;
}

const std::vector<std::string>& battery_claim_ids() {
  static const std::vector<std::string> ids = {
      "bracket-d-c-in-c",    "bracket-d-d-in-d",   "bracket-d-zd-in-zd",
      "bracket-qc-qc-in-qd", "bracket-qd-qc-in-qc", "c-in-qd",
      "chain-d-in-qd",       "chain-qd-in-gd",     "compose-c-d-in-d",
      "qd-plus-qc-in-gd",    "trivial-center-d-cap-c", "zd-eq-d-cap-c",
  };
  return ids;
}

namespace {

std::vector<GradedOperator> graded_elements(const OperatorSpace& space, bool even_only) {
  std::vector<GradedOperator> out;
  for (const auto& m : space.even_basis) out.push_back({m, Parity::Even});
  if (!even_only) {
    for (const auto& m : space.odd_basis) out.push_back({m, Parity::Odd});
  }
  return out;
}

BatteryLine containment_line(std::string id, TwistPower t, const std::vector<LinearMap>& outer,
                             const std::vector<LinearMap>& inner) {
  BatteryLine line{std::move(id), t, std::nullopt, true, std::nullopt, {}};
  const Containment c = space_contains(outer, inner);
  if (!c.contained) {
    line.passed = false;
    line.witness = c.witness;
  }
  return line;
}

enum class Combine { Bracket, Compose };

// Every pair (f, g) of graded basis elements of `lhs` x `rhs` combined, then
// tested for membership in `target`.
BatteryLine pair_line(std::string id, TwistPower t1, TwistPower t2, const OperatorSpace& lhs,
                      const OperatorSpace& rhs, const OperatorSpace& target, Combine how,
                      bool even_only) {
  BatteryLine line{std::move(id), t1, t2, true, std::nullopt, {}};
  std::vector<Vector> span;
  for (const auto& m : target.basis) span.push_back(vectorize(m));
  for (const auto& f : graded_elements(lhs, even_only)) {
    for (const auto& g : graded_elements(rhs, even_only)) {
      const LinearMap h = how == Combine::Bracket ? supercommutator(f, g) : f.map * g.map;
      const Vector v = vectorize(h);
      const bool inside = span.empty() ? is_zero(v) : solve_in_span(span, v).has_value();
      if (!inside) {
        line.passed = false;
        line.witness = h;
        line.operands = {f, g};
        return line;
      }
    }
  }
  return line;
}

std::vector<LinearMap> sum_of(const std::vector<LinearMap>& a, const std::vector<LinearMap>& b) {
  std::vector<LinearMap> out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace

BatteryReport proposition_battery(const TrialgebraSpec& spec, unsigned max_power) {
  SpaceCache cache(spec);
  std::vector<TwistPower> grid;
  for (unsigned s = 0; s <= max_power; ++s)
    for (unsigned r = 0; r <= max_power; ++r) grid.push_back({s, r});

  const bool trivial_center = center(spec).empty();
  BatteryReport report;
  auto& lines = report.lines;

  for (TwistPower t : grid) {
    const auto& D = cache.get(SpaceKind::D, t);
    const auto& QD = cache.get(SpaceKind::QD, t);
    const auto& GD = cache.get(SpaceKind::GD, t);
    const auto& ZD = cache.get(SpaceKind::ZD, t);
    const auto& C = cache.get(SpaceKind::C, t);
    const auto& QC = cache.get(SpaceKind::QC, t);

    lines.push_back(containment_line("chain-d-in-qd", t, QD.basis, D.basis));
    lines.push_back(containment_line("chain-qd-in-gd", t, GD.basis, QD.basis));
    lines.push_back(containment_line("c-in-qd", t, QD.basis, C.basis));
    lines.push_back(containment_line("qd-plus-qc-in-gd", t, GD.basis, sum_of(QD.basis, QC.basis)));

    const std::vector<LinearMap> d_cap_c = derivation_centroid_intersection(spec, t);
    BatteryLine zd = containment_line("zd-eq-d-cap-c", t, d_cap_c, ZD.basis);
    if (zd.passed) zd = containment_line("zd-eq-d-cap-c", t, ZD.basis, d_cap_c);
    lines.push_back(std::move(zd));

    BatteryLine center_line{"trivial-center-d-cap-c", t, std::nullopt, true, std::nullopt, {}};
    if (trivial_center && !d_cap_c.empty()) {
      center_line.passed = false;
      center_line.witness = d_cap_c.front();
    }
    lines.push_back(std::move(center_line));
  }

  for (TwistPower t1 : grid) {
    for (TwistPower t2 : grid) {
      const TwistPower sum = t1 + t2;
      lines.push_back(pair_line("bracket-d-c-in-c", t1, t2, cache.get(SpaceKind::D, t1),
                                cache.get(SpaceKind::C, t2), cache.get(SpaceKind::C, sum),
                                Combine::Bracket, false));
      lines.push_back(pair_line("compose-c-d-in-d", t1, t2, cache.get(SpaceKind::C, t1),
                                cache.get(SpaceKind::D, t2), cache.get(SpaceKind::D, sum),
                                Combine::Compose, false));
      lines.push_back(pair_line("bracket-qd-qc-in-qc", t1, t2, cache.get(SpaceKind::QD, t1),
                                cache.get(SpaceKind::QC, t2), cache.get(SpaceKind::QC, sum),
                                Combine::Bracket, false));
      lines.push_back(pair_line("bracket-qc-qc-in-qd", t1, t2, cache.get(SpaceKind::QC, t1),
                                cache.get(SpaceKind::QC, t2), cache.get(SpaceKind::QD, sum),
                                Combine::Bracket, false));
      lines.push_back(pair_line("bracket-d-zd-in-zd", t1, t2, cache.get(SpaceKind::D, t1),
                                cache.get(SpaceKind::ZD, t2), cache.get(SpaceKind::ZD, sum),
                                Combine::Bracket, false));
      lines.push_back(pair_line("bracket-d-d-in-d", t1, t2, cache.get(SpaceKind::D, t1),
                                cache.get(SpaceKind::D, t2), cache.get(SpaceKind::D, sum),
                                Combine::Bracket, true));
    }
  }

  std::sort(lines.begin(), lines.end(), [](const BatteryLine& a, const BatteryLine& b) {
    const TwistPower none{0, 0};
    return std::make_tuple(a.claim_id, a.first, a.second.has_value(), a.second.value_or(none)) <
           std::make_tuple(b.claim_id, b.first, b.second.has_value(), b.second.value_or(none));
  });
  return report;
}

}  // namespace supertri
