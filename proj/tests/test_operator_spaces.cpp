#include <map>
#include <random>

#include "doctest.h"
#include "space_oracle.hpp"
#include "support.hpp"
#include "supertri/constructions.hpp"
#include "supertri/errors.hpp"
#include "supertri/operator_spaces.hpp"

using namespace supertri;
using test_support::corpus;
using test_support::mat;

namespace {

struct Dims {
  std::size_t total, even, odd;
};

// Regression constants at T = id, produced by the oracle in tests/oracle and
// cross-checked below against both the oracle and the solver.
const std::map<std::string, std::map<SpaceKind, Dims>>& expected_dims() {
  static const std::map<std::string, std::map<SpaceKind, Dims>> table = {
      {"zero2",
       {{SpaceKind::D, {4, 2, 2}}, {SpaceKind::QD, {4, 2, 2}}, {SpaceKind::GD, {4, 2, 2}},
        {SpaceKind::ZD, {4, 2, 2}}, {SpaceKind::C, {4, 2, 2}}, {SpaceKind::QC, {4, 2, 2}}}},
      {"idem1",
       {{SpaceKind::D, {0, 0, 0}}, {SpaceKind::QD, {1, 1, 0}}, {SpaceKind::GD, {1, 1, 0}},
        {SpaceKind::ZD, {0, 0, 0}}, {SpaceKind::C, {1, 1, 0}}, {SpaceKind::QC, {1, 1, 0}}}},
      {"dual2",
       {{SpaceKind::D, {1, 1, 0}}, {SpaceKind::QD, {3, 3, 0}}, {SpaceKind::GD, {3, 3, 0}},
        {SpaceKind::ZD, {0, 0, 0}}, {SpaceKind::C, {2, 2, 0}}, {SpaceKind::QC, {2, 2, 0}}}},
      {"dual2-twisted",
       {{SpaceKind::D, {1, 1, 0}}, {SpaceKind::QD, {2, 2, 0}}, {SpaceKind::GD, {2, 2, 0}},
        {SpaceKind::ZD, {0, 0, 0}}, {SpaceKind::C, {1, 1, 0}}, {SpaceKind::QC, {1, 1, 0}}}},
      {"grassmann2",
       {{SpaceKind::D, {1, 1, 0}}, {SpaceKind::QD, {3, 2, 1}}, {SpaceKind::GD, {3, 2, 1}},
        {SpaceKind::ZD, {0, 0, 0}}, {SpaceKind::C, {2, 1, 1}}, {SpaceKind::QC, {2, 1, 1}}}},
      {"dsum-zero2-idem1",
       {{SpaceKind::D, {4, 2, 2}}, {SpaceKind::QD, {7, 4, 3}}, {SpaceKind::GD, {7, 4, 3}},
        {SpaceKind::ZD, {4, 2, 2}}, {SpaceKind::C, {5, 3, 2}}, {SpaceKind::QC, {7, 4, 3}}}},
  };
  return table;
}

const std::vector<TwistPower> kGrid{{0, 0}, {0, 1}, {1, 0}, {1, 1}};

bool satisfies_leibniz(const TrialgebraSpec& s, const LinearMap& d, const LinearMap& T) {
  const std::size_t n = s.dim();
  for (Product p : kProducts)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        const Vector x = unit_vector(n, a), y = unit_vector(n, b);
        const Vector lhs = d * product_eval(s, p, x, y);
        const Vector rhs = add(product_eval(s, p, d * x, T * y), product_eval(s, p, T * x, d * y));
        if (lhs != rhs) return false;
      }
  return d * s.gamma == s.gamma * d && d * *s.xi == *s.xi * d;
}

std::vector<Vector> flat(const std::vector<LinearMap>& maps) {
  std::vector<Vector> out;
  for (const auto& m : maps) out.push_back(vectorize(m));
  return out;
}

}  // namespace

TEST_CASE("space dimensions at the identity twist") {
  for (const auto& [name, dims] : expected_dims()) {
    const auto spec = builtin(name);
    for (const auto& [kind, d] : dims) {
      CAPTURE(name);
      CAPTURE(to_string(kind));
      const auto space = compute_space(spec, kind, {0, 0});
      CHECK(oracle::space(spec, kind, {0, 0}).size() == d.total);
      CHECK(space.dimension() == d.total);
      CHECK(space.even_basis.size() == d.even);
      CHECK(space.odd_basis.size() == d.odd);
      CHECK(space.kind == kind);
      CHECK(space.ambient == spec.dim());
    }
  }
}

TEST_CASE("derivation space examples") {
  const auto dual = derivation_space(builtin("dual2"), {0, 0});
  REQUIRE(dual.dimension() == 1);
  CHECK(dual.basis[0] == mat({{0, 0}, {0, 1}}));

  const auto g = builtin("grassmann2");
  const auto plain = derivation_space(g, {0, 0}, false);
  const auto signed_ = derivation_space(g, {0, 0}, true);
  CHECK(plain.odd_basis.empty());
  REQUIRE(signed_.odd_basis.size() == 1);
  CHECK(signed_.even_basis.size() == 1);
  // δ(e2) = e1: e1∘e2 − e2∘e1 = 0 cancels only with the sign.
  CHECK(signed_.odd_basis[0] == mat({{0, 1}, {0, 0}}));
  CHECK(signed_.koszul);
  CHECK(oracle::space(g, SpaceKind::D, {0, 0}, true) == signed_.basis);
  CHECK(oracle::space(g, SpaceKind::D, {0, 0}, false) == plain.basis);
}

TEST_CASE("quasi and generalized derivations on a line") {
  const auto idem = builtin("idem1");
  CHECK(quasiderivation_space(idem, {0, 0}).basis == std::vector<LinearMap>{Matrix::identity(1)});
  CHECK(generalized_derivation_space(idem, {0, 0}).basis == std::vector<LinearMap>{Matrix::identity(1)});
  CHECK(centroid(builtin("dual2"), {0, 0}).basis ==
        std::vector<LinearMap>{mat({{1, 0}, {0, 1}}), mat({{0, 0}, {1, 0}})} );
}

TEST_CASE("oracle equivalence on every fixture, kind and twist") {
  for (const auto& spec : corpus()) {
    for (SpaceKind kind : kSpaceKinds) {
      for (TwistPower t : kGrid) {
        CAPTURE(spec.name);
        CAPTURE(to_string(kind));
        CAPTURE(t.s);
        CAPTURE(t.r);
        CHECK(compute_space(spec, kind, t).basis == oracle::space(spec, kind, t));
      }
    }
    CHECK(derivation_space(spec, {0, 0}, true).basis == oracle::space(spec, SpaceKind::D, {0, 0}, true));
  }
}

TEST_CASE("oracle equivalence after random twists") {
  std::mt19937 rng(23);
  for (const auto& base : corpus()) {
    if (base.dim() > 3) continue;
    for (int trial = 0; trial < 3; ++trial) {
      const auto spec = yau_twist(base, test_support::random_even_invertible(base.basis, rng)).twisted;
      for (SpaceKind kind : kSpaceKinds) {
        CHECK(compute_space(spec, kind, {1, 1}).basis == oracle::space(spec, kind, {1, 1}));
      }
    }
  }
  // Non-identity structure maps with a genuine twist.
  auto z = builtin("zero2");
  z.gamma = mat({{2, 0}, {0, 3}});
  z.xi = mat({{1, 0}, {0, -1}});
  for (SpaceKind kind : kSpaceKinds) CHECK(compute_space(z, kind, {1, 2}).basis == oracle::space(z, kind, {1, 2}));
}

TEST_CASE("replay: derivations satisfy the twisted Leibniz rule") {
  for (const auto& spec : corpus()) {
    for (TwistPower t : kGrid) {
      const LinearMap T = twist_map(spec, t);
      for (const auto& d : derivation_space(spec, t).basis) CHECK(satisfies_leibniz(spec, d, T));
    }
  }
}

TEST_CASE("subspace relations between the spaces") {
  for (const auto& spec : corpus()) {
    for (TwistPower t : kGrid) {
      CAPTURE(spec.name);
      const auto D = derivation_space(spec, t);
      const auto QD = quasiderivation_space(spec, t);
      const auto GD = generalized_derivation_space(spec, t);
      const auto ZD = central_derivation_space(spec, t);
      const auto C = centroid(spec, t);
      const auto QC = quasicentroid(spec, t);
      CHECK(space_contains(QD, D).contained);
      CHECK(space_contains(GD, QD).contained);
      CHECK(space_contains(QC, C).contained);
      CHECK(space_contains(QD, C).contained);
      const auto cap = intersect_spans(flat(D.basis), flat(C.basis), spec.dim() * spec.dim());
      CHECK(cap == flat(ZD.basis));
      CHECK(flat(derivation_centroid_intersection(spec, t)) == cap);
      for (const auto* s : {&D, &QD, &GD, &ZD, &C, &QC}) {
        CHECK(s->even_basis.size() + s->odd_basis.size() == s->dimension());
        for (const auto& m : s->even_basis) CHECK(parity_class(m, spec.basis) == ParityClass::Even);
        for (const auto& m : s->odd_basis) CHECK(parity_class(m, spec.basis) == ParityClass::Odd);
      }
    }
  }
}

TEST_CASE("spaces are deterministic") {
  for (const auto& spec : corpus()) {
    for (SpaceKind kind : kSpaceKinds) {
      CHECK(compute_space(spec, kind, {1, 0}).basis == compute_space(spec, kind, {1, 0}).basis);
    }
  }
}

TEST_CASE("graded split") {
  const auto z = builtin("zero2");
  const auto split = graded_split(derivation_space(z, {0, 0}), z.basis);
  CHECK(split.even.size() == 2);
  CHECK(split.odd.size() == 2);
  const auto d = builtin("dual2");
  for (SpaceKind kind : kSpaceKinds) CHECK(graded_split(compute_space(d, kind, {0, 0}), d.basis).odd.empty());
  const auto g = builtin("grassmann2");
  const auto gs = graded_split(derivation_space(g, {0, 0}, true), g.basis);
  CHECK(gs.even.size() == 1);
  CHECK(gs.odd.size() == 1);
  // A mixed span splits into less than its dimension.
  const auto mixed = graded_split(std::vector<LinearMap>{mat({{1, 1}, {0, 0}})}, z.basis);
  CHECK(mixed.even.empty());
  CHECK(mixed.odd.empty());
}

TEST_CASE("supercommutator examples") {
  const SuperBasis b{{Parity::Even, Parity::Odd}};
  const auto f = make_graded(mat({{1, 0}, {0, 2}}), Parity::Even, b);
  CHECK(supercommutator(f, f).is_zero());
  const auto id = make_graded(Matrix::identity(2), Parity::Even, b);
  const auto odd = make_graded(mat({{0, 1}, {1, 0}}), Parity::Odd, b);
  CHECK(supercommutator(id, odd).is_zero());
  CHECK(supercommutator(odd, odd) == Scalar(2) * Matrix::identity(2));
  CHECK_THROWS_AS(make_graded(mat({{1, 1}, {0, 0}}), Parity::Even, b), ParityError);
  CHECK_THROWS_AS(make_graded(mat({{0, 1}, {1, 0}}), Parity::Even, b), ParityError);
  CHECK_THROWS_AS(make_graded(Matrix::identity(2), Parity::Odd, b), ParityError);
  CHECK(make_graded(Matrix::zero(2, 2), Parity::Odd, b).parity == Parity::Odd);
}

TEST_CASE("space_contains examples") {
  const auto dual = builtin("dual2");
  const auto D = derivation_space(dual, {0, 0});
  CHECK(space_contains(D, D).contained);
  CHECK(space_contains(quasiderivation_space(dual, {0, 0}), D).contained);
  const auto idem = builtin("idem1");
  const auto c = space_contains(derivation_space(idem, {0, 0}).basis, {Matrix::identity(1)});
  CHECK_FALSE(c.contained);
  REQUIRE(c.witness.has_value());
  CHECK(*c.witness == Matrix::identity(1));
}

TEST_CASE("space kind names") {
  for (SpaceKind k : kSpaceKinds) CHECK(parse_space_kind(to_string(k)) == k);
  CHECK_THROWS_AS(parse_space_kind("X"), InputError);
}

TEST_CASE("battery passes on every fixture") {
  for (const auto& spec : corpus()) {
    CAPTURE(spec.name);
    const auto report = proposition_battery(spec, 1);
    CHECK(report.passed());
    // 6 single-twist claims on 4 twists, 6 paired claims on 16 twist pairs.
    CHECK(report.lines.size() == 6 * 4 + 6 * 16);
    for (const auto& id : battery_claim_ids()) CHECK_FALSE(report.claim(id).empty());
    for (std::size_t i = 1; i < report.lines.size(); ++i)
      CHECK(report.lines[i - 1].claim_id <= report.lines[i].claim_id);
  }
  const auto dual = proposition_battery(builtin("dual2"), 1);
  for (const auto* line : dual.claim("trivial-center-d-cap-c")) CHECK(line->passed);
  CHECK(derivation_centroid_intersection(builtin("dual2"), {0, 0}).empty());
}

TEST_CASE("battery failures carry replayable witnesses") {
  // Not a BiHom algebra, so the relations are free to fail.
  auto spec = builtin("dual2");
  spec.left(0, 1, 1) = 3;
  spec.gamma = mat({{1, 0}, {0, 2}});
  spec.xi = mat({{1, 0}, {0, 3}});
  const auto report = proposition_battery(spec, 1);
  std::size_t failures = 0;
  SpaceCache cache(spec);
  for (const auto& line : report.lines) {
    if (line.passed) continue;
    ++failures;
    REQUIRE(line.witness.has_value());
    if (line.operands.size() == 2) {
      const auto& f = line.operands[0];
      const auto& g = line.operands[1];
      const LinearMap expected = line.claim_id == "compose-c-d-in-d" ? f.map * g.map : supercommutator(f, g);
      CHECK(expected == *line.witness);
      REQUIRE(line.second.has_value());
      const TwistPower sum = line.first + *line.second;
      const SpaceKind target = line.claim_id == "bracket-d-c-in-c"      ? SpaceKind::C
                               : line.claim_id == "compose-c-d-in-d"    ? SpaceKind::D
                               : line.claim_id == "bracket-qd-qc-in-qc" ? SpaceKind::QC
                               : line.claim_id == "bracket-qc-qc-in-qd" ? SpaceKind::QD
                               : line.claim_id == "bracket-d-zd-in-zd"  ? SpaceKind::ZD
                                                                        : SpaceKind::D;
      CHECK_FALSE(space_contains(cache.get(target, sum).basis, {*line.witness}).contained);
    }
  }
  MESSAGE("failing lines on the perturbed algebra: " << failures);
}
