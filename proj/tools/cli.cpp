#include "cli.hpp"

#include <openssl/evp.h>

#include <array>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "supertri/constructions.hpp"
#include "supertri/document.hpp"
#include "supertri/errors.hpp"
#include "supertri/fixtures.hpp"
#include "supertri/operator_spaces.hpp"

namespace supertri::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::string_view kBuiltinPrefix = "builtin:";

std::string read_stream(std::istream& s) {
  return std::string(std::istreambuf_iterator<char>(s), std::istreambuf_iterator<char>());
}

// Loads every FILE argument once and remembers its digest for the report.
class Inputs {
 public:
  explicit Inputs(std::istream& in) : in_(in) {}

  std::string text(const std::string& argument, bool allow_builtin) {
    std::string data;
    if (argument == "-") {
      if (stdin_used_) throw InputError("standard input can only be read once");
      stdin_used_ = true;
      data = read_stream(in_);
    } else if (allow_builtin && argument.starts_with(kBuiltinPrefix)) {
      data = emit_algebra(builtin(std::string_view(argument).substr(kBuiltinPrefix.size())));
    } else {
      std::ifstream file(argument, std::ios::binary);
      if (!file) throw InputError("cannot open '" + argument + "'");
      data = read_stream(file);
    }
    digests_.push_back({{"argument", argument}, {"sha256", sha256_hex(data)}});
    return data;
  }

  TrialgebraSpec algebra(const std::string& argument) { return parse_algebra(text(argument, true)); }
  SuperalgebraSpec superalgebra(const std::string& argument) {
    return parse_superalgebra(text(argument, true));
  }
  LinearMap map(const std::string& argument) { return parse_map(text(argument, false)); }

  const Json& digests() const noexcept { return digests_; }

 private:
  std::istream& in_;
  bool stdin_used_ = false;
  Json digests_ = Json::array();
};

Json scalars(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

Json matrix_json(const LinearMap& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(scalars(m.row(r)));
  return out;
}

std::string vector_text(const Vector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v[i]);
  return s + ")";
}

std::string matrix_text(const LinearMap& m, const std::string& indent) {
  std::string s;
  for (std::size_t r = 0; r < m.rows(); ++r) s += indent + vector_text(m.row(r)) + "\n";
  return s;
}

std::string indices_text(const std::vector<std::size_t>& idx) {
  std::string s = "(";
  for (std::size_t i = 0; i < idx.size(); ++i) s += (i ? "," : "") + std::to_string(idx[i]);
  return s + ")";
}

struct Outcome {
  std::string command;
  CheckReport checks;
  std::optional<Json> spaces;
  std::optional<Json> battery;
  Json details = Json::object();
  std::string text;  // human-readable body printed before the violations
  bool battery_failed = false;

  bool passed() const { return checks.passed() && !battery_failed; }
};

Json report_json(const Outcome& o, const Inputs& inputs) {
  Json doc;
  doc["tool_version"] = SUPERTRI_VERSION;
  doc["command"] = o.command;
  doc["inputs"] = inputs.digests();
  doc["passed"] = o.passed();
  Json violations = Json::array();
  for (const auto& v : o.checks.violations) {
    violations.push_back({{"axiom_id", v.axiom_id},
                          {"indices", v.indices},
                          {"lhs", scalars(v.lhs)},
                          {"rhs", scalars(v.rhs)}});
  }
  doc["violations"] = std::move(violations);
  if (o.spaces) doc["spaces"] = *o.spaces;
  if (o.battery) doc["battery"] = *o.battery;
  if (!o.details.empty()) doc["details"] = o.details;
  return doc;
}

void print_text(const Outcome& o, std::ostream& out) {
  out << o.command << ": " << (o.passed() ? "PASS" : "FAIL") << "\n";
  out << o.text;
  for (const auto& v : o.checks.violations) {
    out << "  violation " << v.axiom_id << " at " << indices_text(v.indices) << ": lhs "
        << vector_text(v.lhs) << " rhs " << vector_text(v.rhs) << "\n";
  }
}

void write_output(const std::string& path, const std::string& content, std::ostream& out) {
  if (path.empty()) return;
  if (path == "-") {
    out << content;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot write '" + path + "'");
  file << content;
}

Json space_json(const OperatorSpace& space, const std::string& grade) {
  const auto& chosen = grade == "even" ? space.even_basis : grade == "odd" ? space.odd_basis : space.basis;
  Json basis = Json::array();
  for (const auto& m : chosen) basis.push_back(matrix_json(m));
  return Json{{"kind", std::string(to_string(space.kind))},
              {"s", space.twist.s},
              {"r", space.twist.r},
              {"koszul", space.koszul},
              {"grade", grade},
              {"dimension", space.dimension()},
              {"even_dimension", space.even_basis.size()},
              {"odd_dimension", space.odd_basis.size()},
              {"basis", std::move(basis)}};
}

std::string space_text(const OperatorSpace& space, const std::string& grade) {
  std::ostringstream s;
  s << "  " << to_string(space.kind) << " at s=" << space.twist.s << " r=" << space.twist.r
    << (space.koszul ? " (koszul)" : "") << ": dimension " << space.dimension() << " (even "
    << space.even_basis.size() << ", odd " << space.odd_basis.size() << ")\n";
  const auto& chosen = grade == "even" ? space.even_basis : grade == "odd" ? space.odd_basis : space.basis;
  for (std::size_t i = 0; i < chosen.size(); ++i) {
    s << "  basis " << i << " [" << grade << "]\n" << matrix_text(chosen[i], "    ");
  }
  return s.str();
}

Json battery_json(const BatteryReport& report) {
  Json lines = Json::array();
  for (const auto& l : report.lines) {
    Json operands = Json::array();
    for (const auto& op : l.operands) {
      operands.push_back({{"parity", to_int(op.parity)}, {"map", matrix_json(op.map)}});
    }
    lines.push_back({{"claim_id", l.claim_id},
                     {"s", l.first.s},
                     {"r", l.first.r},
                     {"s2", l.second ? Json(l.second->s) : Json(nullptr)},
                     {"r2", l.second ? Json(l.second->r) : Json(nullptr)},
                     {"passed", l.passed},
                     {"witness", l.witness ? matrix_json(*l.witness) : Json(nullptr)},
                     {"operands", std::move(operands)}});
  }
  return lines;
}

std::string battery_text(const BatteryReport& report) {
  std::ostringstream s;
  std::size_t failed = 0;
  for (const auto& l : report.lines) {
    if (l.passed) continue;
    ++failed;
    s << "  failed " << l.claim_id << " at s=" << l.first.s << " r=" << l.first.r;
    if (l.second) s << " with s2=" << l.second->s << " r2=" << l.second->r;
    s << "\n";
    if (l.witness) s << "    witness\n" << matrix_text(*l.witness, "      ");
  }
  s << "  " << report.lines.size() - failed << " of " << report.lines.size() << " battery lines passed\n";
  return s.str();
}

struct Common {
  bool json = false;
  std::string output;
};

CLI::App* add_command(CLI::App& app, const std::string& name, const std::string& description,
                      Common& common, const char* output_help = nullptr) {
  CLI::App* sub = app.add_subcommand(name, description);
  sub->add_flag("--json", common.json, "Print a JSON report on standard output");
  if (output_help) sub->add_option("-o,--output", common.output, output_help);
  return sub;
}

}  // namespace

std::string sha256_hex(const std::string& data) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int length = 0;
  if (EVP_Digest(data.data(), data.size(), digest.data(), &length, EVP_sha256(), nullptr) != 1) {
    throw Error("sha256 digest failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < length; ++i) {
    out += kHex[digest[i] >> 4];
    out += kHex[digest[i] & 0xF];
  }
  return out;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact checker and operator-space solver for BiHom supertrialgebras", "supertri"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(SUPERTRI_VERSION));

  Common common;
  std::string file, file2, map_file, weight = "0", space = "D", grade = "all", fixture;
  std::string export_dir;
  unsigned s_power = 0, r_power = 0, max_power = 1;
  bool hom = false, multiplicative = false, koszul = false, literal = false, induce = false;

  auto* check = add_command(app, "check", "Check the BiHom (or Hom) axioms", common);
  check->add_option("FILE", file, "Algebra document, '-' or builtin:NAME")->required();
  check->add_flag("--hom", hom, "Check the Hom axiom system instead");
  check->add_flag("--multiplicative", multiplicative, "Also check multiplicativity of the structure maps");

  auto* spaces = add_command(app, "spaces", "Compute one operator space", common);
  spaces->add_option("FILE", file, "Algebra document")->required();
  spaces->add_option("--space", space, "Space kind")
      ->required()
      ->check(CLI::IsMember({"D", "QD", "GD", "ZD", "C", "QC"}));
  spaces->add_option("--s", s_power, "Power of gamma in the twist");
  spaces->add_option("--r", r_power, "Power of xi in the twist");
  spaces->add_flag("--koszul", koszul, "Use the Koszul sign for odd derivations");
  spaces->add_option("--grade", grade, "Basis to print")->check(CLI::IsMember({"even", "odd", "all"}));

  auto* verify = add_command(app, "verify", "Run the subspace relation battery", common);
  verify->add_option("FILE", file, "Algebra document")->required();
  verify->add_option("--max-power", max_power, "Largest power of gamma and xi in the twists");

  auto* twist = add_command(app, "twist", "Twist an algebra by an invertible even map", common, "Write the twisted algebra to FILE");
  twist->add_option("FILE", file, "Algebra document")->required();
  twist->add_option("--map", map_file, "Map document")->required();

  auto* dsum = add_command(app, "dsum", "Direct sum of two algebras", common, "Write the direct sum to FILE");
  dsum->add_option("A", file, "First algebra")->required();
  dsum->add_option("B", file2, "Second algebra")->required();

  auto* graph = add_command(app, "graph", "Test the graph of a map as a subalgebra", common);
  graph->add_option("A", file, "Source algebra")->required();
  graph->add_option("B", file2, "Target algebra")->required();
  graph->add_option("--map", map_file, "Map document")->required();

  auto* morphism = add_command(app, "morphism", "Check a morphism of algebras", common);
  morphism->add_option("SRC", file, "Source algebra")->required();
  morphism->add_option("DST", file2, "Target algebra")->required();
  morphism->add_option("--map", map_file, "Map document")->required();

  auto* rb = add_command(app, "rb", "Rota-Baxter operator check or induced algebra", common, "Write the induced algebra to FILE (with --induce)");
  rb->add_option("FILE", file, "Algebra document (a superalgebra with --induce)")->required();
  rb->add_option("--map", map_file, "Map document")->required();
  rb->add_option("--weight", weight, "Weight as a rational literal")->required();
  rb->add_flag("--literal", literal, "Check the crossed variant of the identity");
  rb->add_flag("--induce", induce, "Build the induced trialgebra from a superalgebra");

  auto* avg = add_command(app, "avg", "Averaging operator check", common);
  avg->add_option("FILE", file, "Algebra document")->required();
  avg->add_option("--map", map_file, "Map document")->required();

  auto* sum_product = add_command(app, "sum-product", "Replace the right product by right + perp", common, "Write the constructed algebra to FILE");
  sum_product->add_option("FILE", file, "Algebra document")->required();

  auto* commutator = add_command(app, "commutator", "Build the supercommutator pair", common, "Write the bracket pair to FILE");
  commutator->add_option("FILE", file, "Algebra document")->required();

  auto* total = add_command(app, "total-product", "Sum of the three products", common, "Write the superalgebra to FILE");
  total->add_option("FILE", file, "Algebra document")->required();

  auto* swap = add_command(app, "swap", "Swap the left and right products", common, "Write the swapped algebra to FILE");
  swap->add_option("FILE", file, "Algebra document")->required();

  auto* fixtures = add_command(app, "fixtures", "List or export the built-in algebras", common, "Write the named fixture to FILE");
  fixtures->add_option("NAME", fixture, "Built-in name; lists the names when omitted");
  fixtures->add_option("--export-dir", export_dir, "Write every built-in as NAME.json into DIR");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    err << app.help();
    return kInputError;
  }

  Inputs inputs(in);
  Outcome o;
  try {
    if (check->parsed()) {
      o.command = "check";
      const TrialgebraSpec spec = inputs.algebra(file);
      o.checks = hom ? check_hom(spec) : check_bihom(spec);
      if (multiplicative) o.checks.merge(check_multiplicative(spec));
      o.details["mode"] = hom ? "hom" : "bihom";
      o.details["multiplicative"] = multiplicative;
    } else if (spaces->parsed()) {
      o.command = "spaces";
      const TrialgebraSpec spec = inputs.algebra(file);
      const OperatorSpace result = compute_space(spec, parse_space_kind(space), {s_power, r_power}, koszul);
      o.spaces = Json::array({space_json(result, grade)});
      o.text = space_text(result, grade);
    } else if (verify->parsed()) {
      o.command = "verify";
      const TrialgebraSpec spec = inputs.algebra(file);
      const BatteryReport report = proposition_battery(spec, max_power);
      o.battery = battery_json(report);
      o.battery_failed = !report.passed();
      o.details["max_power"] = max_power;
      o.text = battery_text(report);
    } else if (twist->parsed()) {
      o.command = "twist";
      const TrialgebraSpec spec = inputs.algebra(file);
      const TwistResult result = yau_twist(spec, inputs.map(map_file));
      o.checks = result.report;
      if (!result.constants_match) {
        o.checks.violations.push_back({"constants-match", {}, {}, {}});
      }
      o.details["constants_match"] = result.constants_match;
      o.details["conjugated_gamma"] = matrix_json(result.conjugated_gamma);
      if (result.conjugated_xi) o.details["conjugated_xi"] = matrix_json(*result.conjugated_xi);
      write_output(common.output, emit_algebra(result.twisted), out);
    } else if (dsum->parsed()) {
      o.command = "dsum";
      const TrialgebraSpec a = inputs.algebra(file);
      const TrialgebraSpec b = inputs.algebra(file2);
      const Construction c = direct_sum(a, b);
      o.checks = c.report;
      o.details["name"] = c.spec.name;
      o.details["dim"] = c.spec.dim();
      write_output(common.output, emit_algebra(c.spec), out);
    } else if (graph->parsed()) {
      o.command = "graph";
      const TrialgebraSpec a = inputs.algebra(file);
      const TrialgebraSpec b = inputs.algebra(file2);
      const GraphCheck g = graph_subalgebra_check(a, b, inputs.map(map_file));
      o.checks = g.morphism_report;
      o.details["is_subalgebra"] = g.is_subalgebra;
      o.details["is_morphism"] = g.is_morphism;
      o.text = std::string("  graph is ") + (g.is_subalgebra ? "" : "not ") + "a subalgebra; map is " +
               (g.is_morphism ? "" : "not ") + "a morphism\n";
    } else if (morphism->parsed()) {
      o.command = "morphism";
      const TrialgebraSpec a = inputs.algebra(file);
      const TrialgebraSpec b = inputs.algebra(file2);
      o.checks = check_morphism(a, b, inputs.map(map_file));
    } else if (rb->parsed()) {
      o.command = "rb";
      const Scalar c = parse_scalar(weight);
      o.details["weight"] = to_string(c);
      if (induce) {
        const SuperalgebraSpec alg = inputs.superalgebra(file);
        const Construction result = rota_baxter_induce(alg, inputs.map(map_file), c);
        o.checks = result.report;
        o.details["induced"] = true;
        write_output(common.output, emit_algebra(result.spec), out);
      } else {
        const TrialgebraSpec spec = inputs.algebra(file);
        o.checks = rota_baxter_check(spec, inputs.map(map_file), c, literal);
        o.details["literal"] = literal;
      }
    } else if (avg->parsed()) {
      o.command = "avg";
      const TrialgebraSpec spec = inputs.algebra(file);
      o.checks = averaging_check(spec, inputs.map(map_file));
    } else if (sum_product->parsed()) {
      o.command = "sum-product";
      const Construction c = sum_product_construct(inputs.algebra(file));
      o.checks = c.report;
      write_output(common.output, emit_algebra(c.spec), out);
    } else if (commutator->parsed()) {
      o.command = "commutator";
      const CommutatorResult c = commutator_construct(inputs.algebra(file));
      o.checks = c.leibniz;
      write_output(common.output, emit_bracket_pair(c.pair), out);
    } else if (total->parsed()) {
      o.command = "total-product";
      const TrialgebraSpec spec = inputs.algebra(file);
      const TotalProductResult t = total_product_construct(spec);
      o.checks = t.report;
      write_output(common.output, emit_superalgebra(t.alg, spec.name + "-total"), out);
    } else if (swap->parsed()) {
      o.command = "swap";
      const SwapResult r = swap_construct(inputs.algebra(file));
      o.checks = r.report;
      o.details["hypothesis_holds"] = r.hypothesis_holds;
      o.details["swapped_passes"] = r.swapped_passes();
      o.text = std::string("  involution hypothesis ") + (r.hypothesis_holds ? "holds" : "does not hold") + "\n";
      write_output(common.output, emit_algebra(r.swapped), out);
    } else if (fixtures->parsed()) {
      o.command = "fixtures";
      if (!export_dir.empty()) {
        for (const auto& name : builtin_names()) {
          write_output(export_dir + "/" + name + ".json", emit_algebra(builtin(name)), out);
        }
      }
      if (fixture.empty()) {
        o.details["names"] = builtin_names();
        for (const auto& name : builtin_names()) o.text += "  " + name + "\n";
      } else {
        const TrialgebraSpec spec = builtin(fixture);
        o.checks = check_bihom(spec);
        o.checks.merge(check_multiplicative(spec));
        o.details["name"] = spec.name;
        const std::string doc = emit_algebra(spec);
        if (!common.output.empty()) {
          write_output(common.output, doc, out);
        } else if (!common.json) {
          out << doc;
          return o.passed() ? kPassed : kViolations;
        }
      }
    }
  } catch (const supertri::Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  if (common.json) {
    out << report_json(o, inputs).dump(2) << "\n";
  } else {
    print_text(o, out);
  }
  return o.passed() ? kPassed : kViolations;
}

}  // namespace supertri::cli
