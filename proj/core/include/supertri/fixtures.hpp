#pragma once

// Small named algebras used by the tests, the CLI and the benchmarks.

#include <string>
#include <string_view>
#include <vector>

#include "supertri/algebra.hpp"

namespace supertri {

/// zero2, idem1, dual2, dual2-twisted, grassmann2, dsum-zero2-idem1.
const std::vector<std::string>& builtin_names();

/// Throws InputError for an unknown name.
TrialgebraSpec builtin(std::string_view name);

/// Adds `delta` to one structure constant of product `op`.
/// Throws InputError when delta is zero, the index is out of range, or the
/// slot (i, j, k) would break evenness of the tensor.
TrialgebraSpec inject_violation(const TrialgebraSpec& spec, Product op, std::size_t i,
                                std::size_t j, std::size_t k, const Scalar& delta);

}  // namespace supertri
