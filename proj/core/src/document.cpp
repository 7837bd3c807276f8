#include "supertri/document.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "json.hpp"
#include "supertri/errors.hpp"

namespace supertri {

namespace {

using Json = nlohmann::ordered_json;

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    const std::size_t upto = std::min<std::size_t>(e.byte, text.size());
    const std::size_t line =
        1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(upto), '\n'));
    std::string message = e.what();
    if (auto pos = message.find("parse error"); pos != std::string::npos) message = message.substr(pos);
    throw ParseError(line, message);
  }
}

const Json& field(const Json& obj, const std::string& key) {
  if (!obj.is_object()) throw ValidationError("document", "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw ValidationError(key, "missing field");
  return *it;
}

std::size_t read_count(const Json& j, const std::string& name) {
  if (!j.is_number_integer() || j.get<long long>() < 0) {
    throw ValidationError(name, "expected a non-negative integer");
  }
  return j.get<std::size_t>();
}

Scalar read_scalar(const Json& j, const std::string& name) {
  std::string text;
  if (j.is_string()) {
    text = j.get<std::string>();
  } else if (j.is_number_integer()) {
    text = j.dump();
  } else {
    throw ValidationError(name, "expected a rational literal string");
  }
  try {
    return parse_scalar(text);
  } catch (const InputError& e) {
    throw ValidationError(name, e.what());
  }
}

LinearMap read_square(const Json& j, std::size_t n, const std::string& name) {
  if (!j.is_array() || j.size() != n) {
    throw ValidationError(name, "expected " + std::to_string(n) + " rows");
  }
  LinearMap m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    const std::string row_name = name + "[" + std::to_string(r) + "]";
    if (!j[r].is_array() || j[r].size() != n) {
      throw ValidationError(row_name, "expected " + std::to_string(n) + " entries");
    }
    for (std::size_t c = 0; c < n; ++c) {
      m(r, c) = read_scalar(j[r][c], row_name + "[" + std::to_string(c) + "]");
    }
  }
  return m;
}

StructureTensor read_tensor(const Json& j, std::size_t n, const std::string& name) {
  if (!j.is_array()) throw ValidationError(name, "expected an array of triples");
  StructureTensor t(n);
  std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
  for (std::size_t e = 0; e < j.size(); ++e) {
    const std::string entry = name + "[" + std::to_string(e) + "]";
    const Json& item = j[e];
    if (!item.is_object()) throw ValidationError(entry, "expected an object");
    std::size_t idx[3];
    const char* keys[3] = {"i", "j", "k"};
    for (int a = 0; a < 3; ++a) {
      auto it = item.find(keys[a]);
      if (it == item.end()) throw ValidationError(entry, std::string("missing ") + keys[a]);
      idx[a] = read_count(*it, entry + "." + keys[a]);
      if (idx[a] >= n) {
        throw ValidationError(entry + "." + keys[a], "index " + std::to_string(idx[a]) + " out of range");
      }
    }
    auto v = item.find("v");
    if (v == item.end()) throw ValidationError(entry, "missing v");
    if (!seen.emplace(idx[0], idx[1], idx[2]).second) {
      throw ValidationError(entry, "duplicate triple (" + std::to_string(idx[0]) + "," +
                                       std::to_string(idx[1]) + "," + std::to_string(idx[2]) + ")");
    }
    t(idx[0], idx[1], idx[2]) = read_scalar(*v, entry + ".v");
  }
  return t;
}

Json write_tensor(const StructureTensor& t) {
  Json out = Json::array();
  for (const auto& e : t.nonzeros()) {
    out.push_back(Json{{"i", e.i}, {"j", e.j}, {"k", e.k}, {"v", to_string(e.value)}});
  }
  return out;
}

Json write_square(const LinearMap& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

TrialgebraSpec read_algebra(const Json& doc) {
  TrialgebraSpec spec;
  const Json& name = field(doc, "name");
  if (!name.is_string()) throw ValidationError("name", "expected a string");
  spec.name = name.get<std::string>();

  const std::size_t n = read_count(field(doc, "dim"), "dim");
  if (n == 0) throw ValidationError("dim", "dimension must be at least 1");

  const Json& parity = field(doc, "parity");
  if (!parity.is_array() || parity.size() != n) {
    throw ValidationError("parity", "expected " + std::to_string(n) + " entries");
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Json& p = parity[i];
    if (!p.is_number_integer() || (p.get<long long>() != 0 && p.get<long long>() != 1)) {
      throw ValidationError("parity[" + std::to_string(i) + "]", "expected 0 or 1");
    }
    spec.basis.parities.push_back(p.get<int>() == 0 ? Parity::Even : Parity::Odd);
  }

  spec.left = read_tensor(field(doc, "left"), n, "left");
  spec.right = read_tensor(field(doc, "right"), n, "right");
  spec.perp = read_tensor(field(doc, "perp"), n, "perp");
  spec.gamma = read_square(field(doc, "gamma"), n, "gamma");
  if (auto xi = doc.find("xi"); xi != doc.end() && !xi->is_null()) {
    spec.xi = read_square(*xi, n, "xi");
  }
  validate(spec);
  return spec;
}

Json write_algebra(const TrialgebraSpec& spec) {
  Json doc;
  doc["name"] = spec.name;
  doc["dim"] = spec.dim();
  Json parity = Json::array();
  for (Parity p : spec.basis.parities) parity.push_back(to_int(p));
  doc["parity"] = std::move(parity);
  doc["left"] = write_tensor(spec.left);
  doc["right"] = write_tensor(spec.right);
  doc["perp"] = write_tensor(spec.perp);
  doc["gamma"] = write_square(spec.gamma);
  if (spec.xi) doc["xi"] = write_square(*spec.xi);
  return doc;
}

}  // namespace

TrialgebraSpec parse_algebra(std::string_view text) { return read_algebra(parse_json(text)); }

std::string emit_algebra(const TrialgebraSpec& spec) { return write_algebra(spec).dump(2) + "\n"; }

SuperalgebraSpec parse_superalgebra(std::string_view text) {
  const TrialgebraSpec spec = parse_algebra(text);
  if (!(spec.left == spec.right && spec.left == spec.perp)) {
    throw ValidationError("right", "a superalgebra document needs left = right = perp");
  }
  if (!spec.xi) throw ValidationError("xi", "a superalgebra document needs xi");
  return SuperalgebraSpec{spec.basis, spec.left, spec.gamma, *spec.xi};
}

std::string emit_superalgebra(const SuperalgebraSpec& alg, std::string_view name) {
  return emit_algebra(as_trialgebra(alg, std::string(name)));
}

std::string emit_bracket_pair(const BracketPairSpec& pair) {
  Json doc;
  doc["dim"] = pair.basis.dim();
  Json parity = Json::array();
  for (Parity p : pair.basis.parities) parity.push_back(to_int(p));
  doc["parity"] = std::move(parity);
  doc["star"] = write_tensor(pair.star);
  doc["bracket"] = write_tensor(pair.bracket);
  doc["gamma"] = write_square(pair.gamma);
  doc["xi"] = write_square(pair.xi);
  return doc.dump(2) + "\n";
}

LinearMap parse_map(std::string_view text) {
  const Json doc = parse_json(text);
  const std::size_t rows = read_count(field(doc, "rows"), "rows");
  const std::size_t cols = read_count(field(doc, "cols"), "cols");
  const Json& entries = field(doc, "entries");
  if (!entries.is_array() || entries.size() != rows * cols) {
    throw ValidationError("entries", "expected rows x cols = " + std::to_string(rows * cols) + " entries");
  }
  std::vector<Scalar> values;
  values.reserve(entries.size());
  for (std::size_t e = 0; e < entries.size(); ++e) {
    values.push_back(read_scalar(entries[e], "entries[" + std::to_string(e) + "]"));
  }
  return LinearMap(rows, cols, std::move(values));
}

std::string emit_map(const LinearMap& map) {
  Json doc;
  doc["rows"] = map.rows();
  doc["cols"] = map.cols();
  Json entries = Json::array();
  for (const auto& v : map.entries()) entries.push_back(to_string(v));
  doc["entries"] = std::move(entries);
  return doc.dump(2) + "\n";
}

}  // namespace supertri
