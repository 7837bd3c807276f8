#include "supertri/constructions.hpp"

#include "supertri/errors.hpp"

namespace supertri {

namespace {

CheckReport axiom_report(const TrialgebraSpec& spec) {
  return spec.xi ? check_bihom(spec) : check_hom(spec);
}

void require_even(const LinearMap& m, const SuperBasis& basis, const char* what) {
  if (m.rows() != basis.dim() || m.cols() != basis.dim()) {
    throw InputError(std::string(what) + " must be " + std::to_string(basis.dim()) + "x" +
                     std::to_string(basis.dim()));
  }
  if (parity_class(m, basis) != ParityClass::Even) {
    throw ParityError(std::string(what) + " must be an even map");
  }
}

void require_commutes(const LinearMap& lambda, const LinearMap& m, const char* what) {
  if (lambda * m != m * lambda) {
    throw CommutationError(std::string("operator does not commute with ") + what);
  }
}

}  // namespace

// ---------------------------------------------------------------------------

TwistResult yau_twist(const TrialgebraSpec& spec, const LinearMap& l) {
  require_even(l, spec.basis, "twist map");
  const LinearMap l_inv = invert(l);

  TwistResult out;
  out.twisted = spec;
  for (Product p : kProducts) out.twisted.tensor(p) = transport(spec.tensor(p), l, l_inv);
  out.conjugated_gamma = l * spec.gamma * l_inv;
  out.twisted.gamma = out.conjugated_gamma;
  if (spec.xi) {
    out.conjugated_xi = l * *spec.xi * l_inv;
    out.twisted.xi = out.conjugated_xi;
  }

  // Express l(u_i) ∘' l(u_j) in the basis {l(u_k)} and compare with c^k_ij.
  const std::size_t n = spec.dim();
  std::vector<Vector> image_basis;
  for (std::size_t k = 0; k < n; ++k) image_basis.push_back(l.column(k));
  out.constants_match = true;
  for (Product p : kProducts) {
    for (std::size_t i = 0; i < n && out.constants_match; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const Vector prod = out.twisted.tensor(p).multiply(image_basis[i], image_basis[j]);
        const auto coords = solve_in_span(image_basis, prod);
        if (!coords || *coords != spec.tensor(p).basis_product(i, j)) {
          out.constants_match = false;
          break;
        }
      }
    }
  }
  out.report = axiom_report(out.twisted);
  return out;
}

CheckReport conjugate_automorphism(const TrialgebraSpec& spec, const LinearMap& l,
                                   const LinearMap& phi) {
  if (!check_morphism(spec, spec, phi).passed()) {
    throw NotAutomorphism("phi is not a morphism of '" + spec.name + "' onto itself");
  }
  invert(phi);
  const TwistResult twist = yau_twist(spec, l);
  const LinearMap conj = l * phi * invert(l);
  CheckReport report = check_morphism(twist.twisted, twist.twisted, conj);
  invert(conj);
  return report;
}

Construction direct_sum(const TrialgebraSpec& a, const TrialgebraSpec& b) {
  validate(a);
  validate(b);
  if (a.xi.has_value() != b.xi.has_value()) {
    throw ModeError("direct_sum: both summands must carry xi or neither");
  }
  const std::size_t na = a.dim();
  TrialgebraSpec sum;
  sum.name = "dsum-" + a.name + "-" + b.name;
  sum.basis = concat(a.basis, b.basis);
  for (Product p : kProducts) {
    StructureTensor t(sum.dim());
    for (const auto& e : a.tensor(p).nonzeros()) t(e.i, e.j, e.k) = e.value;
    for (const auto& e : b.tensor(p).nonzeros()) t(na + e.i, na + e.j, na + e.k) = e.value;
    sum.tensor(p) = std::move(t);
  }
  sum.gamma = block_diagonal(a.gamma, b.gamma);
  if (a.xi) sum.xi = block_diagonal(*a.xi, *b.xi);
  CheckReport report = axiom_report(sum);
  return {std::move(sum), std::move(report)};
}

GraphCheck graph_subalgebra_check(const TrialgebraSpec& a, const TrialgebraSpec& b,
                                  const LinearMap& f) {
  if (f.rows() != b.dim() || f.cols() != a.dim()) {
    throw InputError("graph map must be " + std::to_string(b.dim()) + "x" +
                     std::to_string(a.dim()));
  }
  const TrialgebraSpec sum = direct_sum(a, b).spec;
  const std::size_t na = a.dim();
  const std::size_t n = sum.dim();

  std::vector<Vector> graph;
  for (std::size_t i = 0; i < na; ++i) {
    Vector g(n);
    g[i] = 1;
    const Vector image = f.column(i);
    for (std::size_t r = 0; r < b.dim(); ++r) g[na + r] = image[r];
    graph.push_back(std::move(g));
  }
  auto in_graph = [&](const Vector& v) { return solve_in_span(graph, v).has_value(); };

  GraphCheck out;
  out.is_subalgebra = true;
  for (std::size_t i = 0; i < na && out.is_subalgebra; ++i) {
    if (!in_graph(sum.gamma * graph[i])) out.is_subalgebra = false;
    if (sum.xi && !in_graph(*sum.xi * graph[i])) out.is_subalgebra = false;
    for (Product p : kProducts) {
      for (std::size_t j = 0; j < na && out.is_subalgebra; ++j) {
        if (!in_graph(sum.tensor(p).multiply(graph[i], graph[j]))) out.is_subalgebra = false;
      }
    }
  }
  out.morphism_report = check_morphism(a, b, f);
  out.is_morphism = out.morphism_report.passed();
  return out;
}

// ---------------------------------------------------------------------------
// Rota-Baxter and averaging operators

namespace {

void rota_baxter_sweep(const StructureTensor& outer, const StructureTensor& inner,
                       const LinearMap& lambda, const Scalar& weight, const std::string& id,
                       CheckReport& report) {
  const std::size_t n = outer.dim();
  for (std::size_t i = 0; i < n; ++i) {
    const Vector d = unit_vector(n, i);
    const Vector ld = lambda.column(i);
    for (std::size_t j = 0; j < n; ++j) {
      const Vector v = unit_vector(n, j);
      const Vector lv = lambda.column(j);
      Vector lhs = outer.multiply(ld, lv);
      Vector inside = add(add(inner.multiply(ld, v), inner.multiply(d, lv)),
                          scaled(weight, inner.basis_product(i, j)));
      Vector rhs = lambda * inside;
      if (lhs != rhs) report.violations.push_back({id, {i, j}, std::move(lhs), std::move(rhs)});
    }
  }
}

}  // namespace

CheckReport rota_baxter_check(const TrialgebraSpec& spec, const LinearMap& lambda,
                              const Scalar& weight, bool literal) {
  require_even(lambda, spec.basis, "Rota-Baxter operator");
  require_commutes(lambda, spec.gamma, "gamma");
  if (spec.xi) require_commutes(lambda, *spec.xi, "xi");

  CheckReport report;
  if (literal) {
    rota_baxter_sweep(spec.right, spec.left, lambda, weight, "rb-literal-1", report);
    rota_baxter_sweep(spec.left, spec.right, lambda, weight, "rb-literal-2", report);
    rota_baxter_sweep(spec.perp, spec.perp, lambda, weight, "rb-literal-3", report);
  } else {
    for (Product p : kProducts) {
      rota_baxter_sweep(spec.tensor(p), spec.tensor(p), lambda, weight,
                        "rb-" + std::string(to_string(p)), report);
    }
  }
  report.finalize();
  return report;
}

CheckReport rota_baxter_check(const SuperalgebraSpec& alg, const LinearMap& lambda,
                              const Scalar& weight) {
  require_even(lambda, alg.basis, "Rota-Baxter operator");
  require_commutes(lambda, alg.gamma, "gamma");
  require_commutes(lambda, alg.xi, "xi");
  CheckReport report;
  rota_baxter_sweep(alg.star, alg.star, lambda, weight, "rb-star", report);
  report.finalize();
  return report;
}

Construction rota_baxter_induce(const SuperalgebraSpec& alg, const LinearMap& lambda,
                                const Scalar& weight) {
  validate(alg);
  if (!check_superalgebra(alg).passed()) {
    throw PreconditionError("rota_baxter_induce: input is not a BiHom-associative superalgebra");
  }
  if (!rota_baxter_check(alg, lambda, weight).passed()) {
    throw PreconditionError("rota_baxter_induce: operator fails the Rota-Baxter identity");
  }
  const std::size_t n = alg.dim();
  TrialgebraSpec out;
  out.name = "rb-induced";
  out.basis = alg.basis;
  out.left = StructureTensor(n);
  out.right = StructureTensor(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Vector l = alg.star.multiply(unit_vector(n, i), lambda.column(j));
      const Vector r = alg.star.multiply(lambda.column(i), unit_vector(n, j));
      for (std::size_t k = 0; k < n; ++k) {
        out.left(i, j, k) = l[k];
        out.right(i, j, k) = r[k];
      }
    }
  }
  out.perp = weight * alg.star;
  out.gamma = alg.gamma;
  out.xi = alg.xi;
  CheckReport report = check_bihom(out);
  return {std::move(out), std::move(report)};
}

CheckReport averaging_check(const TrialgebraSpec& spec, const LinearMap& lambda) {
  require_even(lambda, spec.basis, "averaging operator");
  const std::size_t n = spec.dim();
  CheckReport report;
  auto commutation = [&](const LinearMap& m, const std::string& id) {
    const LinearMap a = m * lambda;
    const LinearMap b = lambda * m;
    for (std::size_t j = 0; j < n; ++j) {
      if (a.column(j) != b.column(j)) report.violations.push_back({id, {j}, a.column(j), b.column(j)});
    }
  };
  commutation(spec.gamma, "avg-gamma-comm");
  if (spec.xi) commutation(*spec.xi, "avg-xi-comm");

  for (Product p : kProducts) {
    const StructureTensor& t = spec.tensor(p);
    const std::string prefix = "avg-" + std::string(to_string(p));
    for (std::size_t i = 0; i < n; ++i) {
      const Vector ld = lambda.column(i);
      for (std::size_t j = 0; j < n; ++j) {
        const Vector r = unit_vector(n, j);
        const Vector lr = lambda.column(j);
        Vector first = lambda * t.multiply(ld, r);
        Vector middle = t.multiply(ld, lr);
        Vector last = lambda * t.multiply(unit_vector(n, i), lr);
        if (first != middle) report.violations.push_back({prefix + "-a", {i, j}, first, middle});
        if (middle != last) {
          report.violations.push_back({prefix + "-b", {i, j}, std::move(middle), std::move(last)});
        }
      }
    }
  }
  report.finalize();
  return report;
}

// ---------------------------------------------------------------------------
// Derived products

SwapResult swap_construct(const TrialgebraSpec& spec) {
  const LinearMap& xi = spec.require_xi();
  const LinearMap id = LinearMap::identity(spec.dim());
  SwapResult out;
  out.hypothesis_holds = spec.gamma * spec.gamma == id && xi * xi == id &&
                         spec.gamma * xi == id && xi * spec.gamma == id;
  out.swapped = spec;
  out.swapped.gamma = xi;
  out.swapped.xi = spec.gamma;
  out.report = check_bihom(out.swapped);
  return out;
}

Construction sum_product_construct(const TrialgebraSpec& spec) {
  TrialgebraSpec out = spec;
  out.name = spec.name + "-sumprod";
  out.right = spec.right + spec.perp;
  CheckReport report = axiom_report(out);
  return {std::move(out), std::move(report)};
}

CommutatorResult commutator_construct(const TrialgebraSpec& spec) {
  const LinearMap& xi = spec.require_xi();
  const std::size_t n = spec.dim();
  CommutatorResult out;
  out.pair.basis = spec.basis;
  out.pair.gamma = spec.gamma;
  out.pair.xi = xi;
  out.pair.star = StructureTensor(n);
  out.pair.bracket = StructureTensor(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const int sign = koszul_sign(spec.basis.parity(i), spec.basis.parity(j));
      for (std::size_t k = 0; k < n; ++k) {
        out.pair.star(i, j, k) = spec.left(i, j, k) - sign * spec.right(j, i, k);
        out.pair.bracket(i, j, k) = spec.perp(i, j, k) - sign * spec.perp(j, i, k);
      }
    }
  }

  const StructureTensor& star = out.pair.star;
  const StructureTensor& bracket = out.pair.bracket;
  const LinearMap gx = spec.gamma * xi;
  for (std::size_t i = 0; i < n; ++i) {
    const Vector d = unit_vector(n, i);
    const Vector gd = spec.gamma.column(i);
    for (std::size_t j = 0; j < n; ++j) {
      const Vector v = unit_vector(n, j);
      const Vector xv = xi.column(j);
      const Vector dv = bracket.basis_product(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        const Vector r = unit_vector(n, k);
        Vector lhs = star.multiply(dv, gx.column(k));
        Vector rhs = add(bracket.multiply(star.multiply(d, r), xv),
                         bracket.multiply(gd, star.multiply(v, r)));
        if (lhs != rhs) {
          out.leibniz.violations.push_back({"leibniz", {i, j, k}, std::move(lhs), std::move(rhs)});
        }
      }
    }
  }
  out.leibniz.finalize();
  return out;
}

TotalProductResult total_product_construct(const TrialgebraSpec& spec) {
  TotalProductResult out;
  out.alg.basis = spec.basis;
  out.alg.star = spec.left + spec.right + spec.perp;
  out.alg.gamma = spec.gamma;
  out.alg.xi = spec.require_xi();
  out.report = check_superalgebra(out.alg);
  return out;
}

}  // namespace supertri
