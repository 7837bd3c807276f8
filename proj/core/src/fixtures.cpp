#include "supertri/fixtures.hpp"

#include "supertri/constructions.hpp"
#include "supertri/errors.hpp"

namespace supertri {

namespace {

TrialgebraSpec with_all_products(std::string name, SuperBasis basis, const StructureTensor& t,
                                 const LinearMap& gamma, const LinearMap& xi) {
  return TrialgebraSpec{std::move(name), std::move(basis), t, t, t, gamma, xi};
}

StructureTensor dual_numbers_table() {
  StructureTensor t(2);
  t(0, 0, 0) = 1;
  t(0, 1, 1) = 1;
  t(1, 0, 1) = 1;
  return t;
}

TrialgebraSpec zero2() {
  const auto id = LinearMap::identity(2);
  return with_all_products("zero2", {{Parity::Even, Parity::Odd}}, StructureTensor(2), id, id);
}

TrialgebraSpec idem1() {
  StructureTensor t(1);
  t(0, 0, 0) = 1;
  const auto id = LinearMap::identity(1);
  return with_all_products("idem1", {{Parity::Even}}, t, id, id);
}

TrialgebraSpec dual2() {
  const auto id = LinearMap::identity(2);
  return with_all_products("dual2", {{Parity::Even, Parity::Even}}, dual_numbers_table(), id, id);
}

TrialgebraSpec dual2_twisted() {
  StructureTensor t(2);
  t(0, 0, 0) = 1;
  t(0, 1, 1) = 2;
  t(1, 0, 1) = 2;
  const auto d = LinearMap::diagonal({Scalar(1), Scalar(2)});
  return with_all_products("dual2-twisted", {{Parity::Even, Parity::Even}}, t, d, d);
}

TrialgebraSpec grassmann2() {
  const auto id = LinearMap::identity(2);
  return with_all_products("grassmann2", {{Parity::Even, Parity::Odd}}, dual_numbers_table(), id,
                           id);
}

}  // namespace

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names = {"zero2",      "idem1",         "dual2",
                                                 "dual2-twisted", "grassmann2", "dsum-zero2-idem1"};
  return names;
}

TrialgebraSpec builtin(std::string_view name) {
  if (name == "zero2") return zero2();
  if (name == "idem1") return idem1();
  if (name == "dual2") return dual2();
  if (name == "dual2-twisted") return dual2_twisted();
  if (name == "grassmann2") return grassmann2();
  if (name == "dsum-zero2-idem1") return direct_sum(zero2(), idem1()).spec;
  throw InputError("unknown builtin algebra '" + std::string(name) + "'");
}

TrialgebraSpec inject_violation(const TrialgebraSpec& spec, Product op, std::size_t i,
                                std::size_t j, std::size_t k, const Scalar& delta) {
  if (sgn(delta) == 0) throw InputError("injected delta must be nonzero");
  const std::size_t n = spec.dim();
  if (i >= n || j >= n || k >= n) throw InputError("injected index out of range");
  if (spec.basis.parity(i) + spec.basis.parity(j) != spec.basis.parity(k)) {
    throw InputError("slot (" + std::to_string(i) + "," + std::to_string(j) + "," +
                     std::to_string(k) + ") is not parity-admissible");
  }
  TrialgebraSpec out = spec;
  out.tensor(op)(i, j, k) += delta;
  return out;
}

}  // namespace supertri
