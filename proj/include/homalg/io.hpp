#pragma once

// JSON workspace files and report emission. A workspace names a scalar field,
// then algebras, modules, bimodules, complexes, pseudo-dualizing candidates,
// algebra extensions, and a task list. Every referenced object is resolved and
// every structural invariant is re-verified on load, so a loaded workspace
// never holds an invalid value. Saving always emits the fully explicit
// canonical form -- sorted keys, rationals as "p/q" strings, prime-field
// residues as integers, matrices as row-major nested arrays, complexes as
// {degree: {module, differential}} maps -- so load -> save is idempotent
// byte-for-byte.

#include <fstream>
#include <sstream>
#include <type_traits>

#include <json.hpp>

#include "homalg/samples.hpp"
#include "homalg/validate.hpp"

namespace homalg {

using Json = nlohmann::json;

// A schema or reference error, carrying the offending field path in its
// message.
struct SchemaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace io_detail {

[[noreturn]] inline void fail(const std::string& where, const std::string& what) {
  throw SchemaError(where + ": " + what);
}

inline const Json& member(const Json& j, const std::string& where, const std::string& key) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where, "missing field '" + key + "'");
  return *it;
}

inline std::size_t size_at(const Json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 0)
    fail(where, "expected a nonnegative integer");
  return j.get<std::size_t>();
}

inline int int_at(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer");
  return j.get<int>();
}

inline std::string string_at(const Json& j, const std::string& where) {
  if (!j.is_string()) fail(where, "expected a string");
  return j.get<std::string>();
}

inline int degree_key(const std::string& k, const std::string& where) {
  std::size_t pos = 0;
  int d = 0;
  try {
    d = std::stoi(k, &pos);
  } catch (const std::exception&) {
    fail(where, "bad degree key '" + k + "'");
  }
  if (pos != k.size()) fail(where, "bad degree key '" + k + "'");
  return d;
}

inline Json scalar_to_json(const Rational& x) { return to_string(x); }
inline Json scalar_to_json(const Fp& x) { return x.value(); }

template <class K>
K scalar_from_json(const Json& j, const std::string& where);

template <>
inline Rational scalar_from_json<Rational>(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) {
    try {
      return rational_from_string(j.get<std::string>());
    } catch (const std::exception& e) {
      fail(where, e.what());
    }
  }
  fail(where, "expected a rational as a \"p/q\" string or an integer");
}

template <>
inline Fp scalar_from_json<Fp>(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer residue");
  return Fp(j.get<long long>());
}

template <class K>
std::vector<K> vector_from_json(const Json& j, std::size_t n, const std::string& where) {
  if (!j.is_array() || j.size() != n)
    fail(where, "expected an array of length " + std::to_string(n));
  std::vector<K> v;
  v.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    v.push_back(scalar_from_json<K>(j[i], where + "[" + std::to_string(i) + "]"));
  return v;
}

template <class K>
Json vector_to_json(const std::vector<K>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(scalar_to_json(x));
  return a;
}

template <class K>
Matrix<K> matrix_from_json(const Json& j, std::size_t rows, std::size_t cols,
                           const std::string& where) {
  if (!j.is_array() || j.size() != rows)
    fail(where, "expected a matrix with " + std::to_string(rows) + " rows");
  Matrix<K> m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const Json& row = j[r];
    std::string wr = where + "[" + std::to_string(r) + "]";
    if (!row.is_array() || row.size() != cols)
      fail(wr, "expected a row of length " + std::to_string(cols));
    for (std::size_t c = 0; c < cols; ++c)
      m.at(r, c) = scalar_from_json<K>(row[c], wr + "[" + std::to_string(c) + "]");
  }
  return m;
}

template <class K>
Json matrix_to_json(const Matrix<K>& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(scalar_to_json(m.at(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Side side_from_json(const Json& j, const std::string& where) {
  std::string s = string_at(j, where);
  if (s == "left") return Side::Left;
  if (s == "right") return Side::Right;
  fail(where, "side must be \"left\" or \"right\"");
}

inline const char* side_to_string(Side s) { return s == Side::Left ? "left" : "right"; }

}  // namespace io_detail

inline FieldSpec field_spec_from_json(const Json& j, const std::string& where) {
  std::string t = io_detail::string_at(io_detail::member(j, where, "type"), where + ".type");
  if (t == "rationals") return FieldSpec::rationals();
  if (t == "prime") {
    const Json& p = io_detail::member(j, where, "p");
    if (!p.is_number_integer()) io_detail::fail(where + ".p", "expected a prime integer");
    try {
      return FieldSpec::prime_field(p.get<long long>());
    } catch (const std::exception& e) {
      io_detail::fail(where + ".p", e.what());
    }
  }
  io_detail::fail(where + ".type", "unknown field type '" + t + "'");
}

inline Json field_spec_to_json(const FieldSpec& f) {
  Json j;
  if (f.kind == FieldSpec::Kind::Rationals) {
    j["type"] = "rationals";
  } else {
    j["type"] = "prime";
    j["p"] = f.characteristic;
  }
  return j;
}

// One entry of the workspace task list: an operation name plus its named
// arguments (kept as JSON).
struct Task {
  std::string op;
  Json args = Json::object();
};

template <class K>
struct Workspace {
  FieldSpec field = FieldSpec::rationals();
  std::map<std::string, AlgebraPtr<K>> algebras;
  std::map<std::string, ModuleRep<K>> modules;
  std::map<std::string, BimoduleRep<K>> bimodules;
  std::map<std::string, BoundedComplex<K>> complexes;
  std::map<std::string, PseudoDualizingCandidate<K>> candidates;

  struct Extension {
    RelativeExtension<K> rx;
    std::string candidate;  // the candidate the structural map starts from
    std::string target;     // the candidate giving the extended complex U
  };
  std::map<std::string, Extension> extensions;
  std::vector<Task> tasks;

  const AlgebraPtr<K>& algebra(const std::string& name) const {
    auto it = algebras.find(name);
    if (it == algebras.end()) throw SchemaError("unknown algebra '" + name + "'");
    return it->second;
  }
  const ModuleRep<K>& module(const std::string& name) const {
    auto it = modules.find(name);
    if (it == modules.end()) throw SchemaError("unknown module '" + name + "'");
    return it->second;
  }
  const BimoduleRep<K>& bimodule(const std::string& name) const {
    auto it = bimodules.find(name);
    if (it == bimodules.end()) throw SchemaError("unknown bimodule '" + name + "'");
    return it->second;
  }
  const BoundedComplex<K>& complex(const std::string& name) const {
    auto it = complexes.find(name);
    if (it == complexes.end()) throw SchemaError("unknown complex '" + name + "'");
    return it->second;
  }
  const PseudoDualizingCandidate<K>& candidate(const std::string& name) const {
    auto it = candidates.find(name);
    if (it == candidates.end()) throw SchemaError("unknown candidate '" + name + "'");
    return it->second;
  }
  const Extension& extension(const std::string& name) const {
    auto it = extensions.find(name);
    if (it == extensions.end()) throw SchemaError("unknown extension '" + name + "'");
    return it->second;
  }
};

namespace io_detail {

template <class K>
AlgebraPtr<K> stock_algebra(const std::string& which, const std::string& where) {
  if (which == "ground-field") return ground_field<K>();
  if (which == "kA2") return sample_kA2<K>();
  if (which == "dual-numbers") return sample_dual_numbers<K>();
  if (which == "upper-triangular") return sample_upper_triangular<K>();
  if (which == "c2-group") return sample_c2_group_algebra<K>();
  if (which == "mat2") return sample_mat2<K>();
  fail(where, "unknown stock algebra '" + which + "'");
}

template <class K>
AlgebraPtr<K> algebra_from_json(const Json& j, const std::string& where) {
  std::string type =
      j.is_object() && j.contains("type") ? string_at(j["type"], where + ".type") : "structure";
  if (type == "stock")
    return stock_algebra<K>(string_at(member(j, where, "name"), where + ".name"), where + ".name");
  if (type == "path") {
    Quiver q;
    q.vertices = size_at(member(j, where, "vertices"), where + ".vertices");
    const Json& arrows = member(j, where, "arrows");
    if (!arrows.is_array()) fail(where + ".arrows", "expected an array");
    for (std::size_t i = 0; i < arrows.size(); ++i) {
      std::string wa = where + ".arrows[" + std::to_string(i) + "]";
      q.arrows.push_back({size_at(member(arrows[i], wa, "src"), wa + ".src"),
                          size_at(member(arrows[i], wa, "tgt"), wa + ".tgt"),
                          string_at(member(arrows[i], wa, "label"), wa + ".label")});
    }
    std::vector<PathRelation<K>> rels;
    if (j.contains("relations")) {
      const Json& rj = j["relations"];
      if (!rj.is_array()) fail(where + ".relations", "expected an array");
      for (std::size_t i = 0; i < rj.size(); ++i) {
        std::string wr = where + ".relations[" + std::to_string(i) + "]";
        if (!rj[i].is_array()) fail(wr, "expected an array of terms");
        PathRelation<K> rel;
        for (std::size_t t = 0; t < rj[i].size(); ++t) {
          std::string wt = wr + "[" + std::to_string(t) + "]";
          K coef = scalar_from_json<K>(member(rj[i][t], wt, "coef"), wt + ".coef");
          const Json& pj = member(rj[i][t], wt, "path");
          if (!pj.is_array()) fail(wt + ".path", "expected an array of arrow labels");
          std::vector<std::string> path;
          for (const auto& lab : pj) path.push_back(string_at(lab, wt + ".path"));
          rel.terms.emplace_back(std::move(coef), std::move(path));
        }
        rels.push_back(std::move(rel));
      }
    }
    try {
      return path_algebra<K>(q, rels);
    } catch (const std::exception& e) {
      fail(where, e.what());
    }
  }
  if (type != "structure") fail(where + ".type", "unknown algebra type '" + type + "'");

  std::size_t dim = size_at(member(j, where, "dim"), where + ".dim");
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    const Json& lj = j["labels"];
    if (!lj.is_array() || lj.size() != dim) fail(where + ".labels", "expected one label per basis element");
    for (const auto& l : lj) labels.push_back(string_at(l, where + ".labels"));
  } else {
    for (std::size_t i = 0; i < dim; ++i) labels.push_back("e" + std::to_string(i));
  }
  const Json& cj = member(j, where, "constants");
  if (!cj.is_array() || cj.size() != dim)
    fail(where + ".constants", "expected " + std::to_string(dim) + " layers (one per left factor)");
  std::vector<K> c(dim * dim * dim, K(0));
  for (std::size_t i = 0; i < dim; ++i) {
    std::string wi = where + ".constants[" + std::to_string(i) + "]";
    Matrix<K> layer = matrix_from_json<K>(cj[i], dim, dim, wi);
    for (std::size_t jj = 0; jj < dim; ++jj)
      for (std::size_t k = 0; k < dim; ++k) c[(i * dim + jj) * dim + k] = layer.at(jj, k);
  }
  std::vector<K> unit = vector_from_json<K>(member(j, where, "unit"), dim, where + ".unit");
  try {
    return make_algebra<K>(dim, std::move(labels), std::move(c), std::move(unit));
  } catch (const std::exception& e) {
    fail(where, e.what());
  }
}

// Canonical form: always explicit structure constants.
template <class K>
Json algebra_to_json(const Algebra<K>& a) {
  std::size_t n = a.dim();
  Json constants = Json::array();
  for (std::size_t i = 0; i < n; ++i) {
    Json layer = Json::array();
    for (std::size_t j = 0; j < n; ++j) {
      Json row = Json::array();
      for (std::size_t k = 0; k < n; ++k) row.push_back(scalar_to_json(a.c(i, j, k)));
      layer.push_back(std::move(row));
    }
    constants.push_back(std::move(layer));
  }
  Json j;
  j["type"] = "structure";
  j["dim"] = n;
  j["labels"] = a.labels();
  j["constants"] = std::move(constants);
  j["unit"] = vector_to_json(a.unit());
  return j;
}

template <class K>
ModuleRep<K> module_from_json(const Json& j, const Workspace<K>& ws, const std::string& where) {
  AlgebraPtr<K> a = ws.algebra(string_at(member(j, where, "algebra"), where + ".algebra"));
  Side side = side_from_json(member(j, where, "side"), where + ".side");
  if (j.contains("construction")) {
    std::string c = string_at(j["construction"], where + ".construction");
    if (c == "regular") return regular_module(a, side);
    if (c == "zero") return zero_module(a, side);
    fail(where + ".construction", "unknown module construction '" + c + "'");
  }
  std::size_t dim = size_at(member(j, where, "dim"), where + ".dim");
  const Json& act = member(j, where, "action");
  if (!act.is_array() || act.size() != a->dim())
    fail(where + ".action", "expected one action matrix per algebra basis element");
  std::vector<Matrix<K>> action;
  for (std::size_t i = 0; i < act.size(); ++i)
    action.push_back(
        matrix_from_json<K>(act[i], dim, dim, where + ".action[" + std::to_string(i) + "]"));
  try {
    return make_module(a, side, dim, std::move(action));
  } catch (const std::exception& e) {
    fail(where, e.what());
  }
}

template <class K>
BimoduleRep<K> bimodule_from_json(const Json& j, const Workspace<K>& ws,
                                  const std::string& where) {
  AlgebraPtr<K> la =
      ws.algebra(string_at(member(j, where, "left-algebra"), where + ".left-algebra"));
  AlgebraPtr<K> ra =
      ws.algebra(string_at(member(j, where, "right-algebra"), where + ".right-algebra"));
  if (j.contains("construction")) {
    std::string c = string_at(j["construction"], where + ".construction");
    if (!(*la == *ra))
      fail(where, "bimodule construction '" + c + "' needs matching left and right algebras");
    if (c == "regular") return regular_bimodule(la);
    if (c == "dual-regular") return dual_bimodule(regular_bimodule(la));
    fail(where + ".construction", "unknown bimodule construction '" + c + "'");
  }
  std::size_t dim = size_at(member(j, where, "dim"), where + ".dim");
  auto read_actions = [&](const char* key, std::size_t n) {
    const Json& aj = member(j, where, key);
    std::string wk = where + "." + key;
    if (!aj.is_array() || aj.size() != n)
      fail(wk, "expected one action matrix per algebra basis element");
    std::vector<Matrix<K>> out;
    for (std::size_t i = 0; i < n; ++i)
      out.push_back(matrix_from_json<K>(aj[i], dim, dim, wk + "[" + std::to_string(i) + "]"));
    return out;
  };
  std::vector<Matrix<K>> lact = read_actions("left-action", la->dim());
  std::vector<Matrix<K>> ract = read_actions("right-action", ra->dim());
  try {
    return make_bimodule(la, ra, dim, lact, ract);
  } catch (const std::exception& e) {
    fail(where, e.what());
  }
}

template <class K>
BoundedComplex<K> complex_from_json(const Json& j, const Workspace<K>& ws,
                                    const std::string& where) {
  AlgebraPtr<K> a = ws.algebra(string_at(member(j, where, "algebra"), where + ".algebra"));
  Side side = side_from_json(member(j, where, "side"), where + ".side");
  std::map<int, ModuleRep<K>> terms;
  std::map<int, const Json*> entries;
  if (j.contains("terms")) {
    const Json& tj = j["terms"];
    if (!tj.is_object()) fail(where + ".terms", "expected a {degree: {module, differential}} map");
    for (const auto& [k, entry] : tj.items()) {
      int n = degree_key(k, where + ".terms");
      std::string wn = where + ".terms." + k;
      const ModuleRep<K>& m =
          ws.module(string_at(member(entry, wn, "module"), wn + ".module"));
      if (!(*m.algebra == *a) || m.side != side)
        fail(wn, "module algebra/side does not match the complex");
      terms.emplace(n, m);
      entries.emplace(n, &entry);
    }
  }
  std::map<int, Matrix<K>> diff;
  for (const auto& [n, entry] : entries) {
    if (!entry->contains("differential")) continue;
    std::size_t rows = terms.count(n + 1) ? terms.at(n + 1).dim : 0;
    diff.emplace(n, matrix_from_json<K>((*entry)["differential"], rows, terms.at(n).dim,
                                        where + ".terms." + std::to_string(n) + ".differential"));
  }
  try {
    return make_complex(a, side, std::move(terms), std::move(diff));
  } catch (const std::exception& e) {
    fail(where, e.what());
  }
}

template <class K>
PseudoDualizingCandidate<K> candidate_from_json(const Json& j, const Workspace<K>& ws,
                                                const std::string& where) {
  const Json& tj = member(j, where, "terms");
  if (!tj.is_object() || tj.empty())
    fail(where + ".terms", "expected a nonempty {degree: {bimodule, differential}} map");
  std::map<int, BimoduleRep<K>> terms;
  std::map<int, const Json*> entries;
  for (const auto& [k, entry] : tj.items()) {
    int n = degree_key(k, where + ".terms");
    std::string wn = where + ".terms." + k;
    terms.emplace(n, ws.bimodule(string_at(member(entry, wn, "bimodule"), wn + ".bimodule")));
    entries.emplace(n, &entry);
  }
  AlgebraPtr<K> la = terms.begin()->second.left_algebra;
  AlgebraPtr<K> ra = terms.begin()->second.right_algebra;
  std::map<int, Matrix<K>> diff;
  for (const auto& [n, entry] : entries) {
    if (!entry->contains("differential")) continue;
    std::size_t rows = terms.count(n + 1) ? terms.at(n + 1).dim() : 0;
    diff.emplace(n, matrix_from_json<K>((*entry)["differential"], rows, terms.at(n).dim(),
                                        where + ".terms." + std::to_string(n) + ".differential"));
  }
  try {
    return make_candidate(make_bimodule_complex(la, ra, std::move(terms), std::move(diff)));
  } catch (const std::exception& e) {
    fail(where, e.what());
  }
}

template <class K>
AlgebraHom<K> algebra_hom_from_json(const Json& j, const Workspace<K>& ws,
                                    const std::string& where) {
  AlgebraPtr<K> src = ws.algebra(string_at(member(j, where, "src"), where + ".src"));
  AlgebraPtr<K> tgt = ws.algebra(string_at(member(j, where, "tgt"), where + ".tgt"));
  Matrix<K> m = matrix_from_json<K>(member(j, where, "matrix"), tgt->dim(), src->dim(),
                                    where + ".matrix");
  try {
    return make_algebra_hom(src, tgt, std::move(m));
  } catch (const std::exception& e) {
    fail(where, e.what());
  }
}

template <class K>
typename Workspace<K>::Extension extension_from_json(const Json& j, const Workspace<K>& ws,
                                                     const std::string& where) {
  typename Workspace<K>::Extension ex;
  ex.candidate = string_at(member(j, where, "candidate"), where + ".candidate");
  ex.target = string_at(member(j, where, "target"), where + ".target");
  const BimoduleComplex<K>& l = ws.candidate(ex.candidate).l;
  ex.rx.u = ws.candidate(ex.target).l;
  ex.rx.phi_a = algebra_hom_from_json(member(j, where, "left-map"), ws, where + ".left-map");
  ex.rx.phi_b = algebra_hom_from_json(member(j, where, "right-map"), ws, where + ".right-map");
  if (!(*ex.rx.phi_a.src == *l.left_algebra) || !(*ex.rx.phi_a.tgt == *ex.rx.u.left_algebra))
    fail(where + ".left-map", "does not map the candidate's left algebra to the target's");
  if (!(*ex.rx.phi_b.src == *l.right_algebra) || !(*ex.rx.phi_b.tgt == *ex.rx.u.right_algebra))
    fail(where + ".right-map", "does not map the candidate's right algebra to the target's");
  if (j.contains("structural")) {
    const Json& sj = j["structural"];
    if (!sj.is_object()) fail(where + ".structural", "expected a {degree: matrix} map");
    for (const auto& [k, mj] : sj.items()) {
      int n = degree_key(k, where + ".structural");
      ex.rx.structural.emplace(
          n, matrix_from_json<K>(mj, ex.rx.u.dim_at(n), l.dim_at(n),
                                 where + ".structural." + k));
    }
  }
  return ex;
}

}  // namespace io_detail

inline Task task_from_json(const Json& j, const std::string& where) {
  if (!j.is_object()) io_detail::fail(where, "expected an object");
  Task t;
  t.op = io_detail::string_at(io_detail::member(j, where, "op"), where + ".op");
  t.args = j;
  t.args.erase("op");
  return t;
}

inline Json task_to_json(const Task& t) {
  Json j = t.args;
  j["op"] = t.op;
  return j;
}

template <class K>
Workspace<K> workspace_from_json(const Json& j) {
  if (!j.is_object()) throw SchemaError("workspace: expected a JSON object");
  static const std::vector<std::string> sections = {
      "field", "algebras", "modules", "bimodules", "complexes", "candidates", "extensions",
      "tasks"};
  for (const auto& [k, v] : j.items())
    if (std::find(sections.begin(), sections.end(), k) == sections.end())
      io_detail::fail("workspace", "unknown section '" + k + "'");

  Workspace<K> ws;
  if (j.contains("field")) {
    ws.field = field_spec_from_json(j["field"], "field");
    if constexpr (std::is_same_v<K, Fp>) {
      if (ws.field.kind != FieldSpec::Kind::PrimeField ||
          ws.field.characteristic != Fp::modulus())
        io_detail::fail("field", "workspace field does not match the active prime field F_" +
                                     std::to_string(Fp::modulus()));
    } else {
      if (ws.field.kind != FieldSpec::Kind::Rationals)
        io_detail::fail("field", "workspace field is not the rationals");
    }
  } else {
    ws.field = std::is_same_v<K, Fp> ? FieldSpec::prime_field(Fp::modulus())
                                     : FieldSpec::rationals();
  }

  auto section = [&](const char* name) -> const Json* {
    if (!j.contains(name)) return nullptr;
    if (!j[name].is_object()) io_detail::fail(name, "expected an object of named entries");
    return &j[name];
  };
  if (const Json* s = section("algebras"))
    for (const auto& [name, aj] : s->items())
      ws.algebras.emplace(name, io_detail::algebra_from_json<K>(aj, "algebras." + name));
  if (const Json* s = section("modules"))
    for (const auto& [name, mj] : s->items())
      ws.modules.emplace(name, io_detail::module_from_json<K>(mj, ws, "modules." + name));
  if (const Json* s = section("bimodules"))
    for (const auto& [name, bj] : s->items())
      ws.bimodules.emplace(name, io_detail::bimodule_from_json<K>(bj, ws, "bimodules." + name));
  if (const Json* s = section("complexes"))
    for (const auto& [name, cj] : s->items())
      ws.complexes.emplace(name, io_detail::complex_from_json<K>(cj, ws, "complexes." + name));
  if (const Json* s = section("candidates"))
    for (const auto& [name, cj] : s->items())
      ws.candidates.emplace(name, io_detail::candidate_from_json<K>(cj, ws, "candidates." + name));
  if (const Json* s = section("extensions"))
    for (const auto& [name, ej] : s->items())
      ws.extensions.emplace(name, io_detail::extension_from_json<K>(ej, ws, "extensions." + name));
  if (j.contains("tasks")) {
    if (!j["tasks"].is_array()) io_detail::fail("tasks", "expected an array");
    for (std::size_t i = 0; i < j["tasks"].size(); ++i)
      ws.tasks.push_back(task_from_json(j["tasks"][i], "tasks[" + std::to_string(i) + "]"));
  }
  return ws;
}

template <class K>
Json workspace_to_json(const Workspace<K>& ws) {
  Json j;
  j["field"] = field_spec_to_json(ws.field);

  auto algebra_name = [&](const AlgebraPtr<K>& a) -> const std::string& {
    for (const auto& [n, b] : ws.algebras)
      if (b.get() == a.get() || *b == *a) return n;
    throw std::logic_error("algebra is not named in the workspace");
  };
  auto module_name = [&](const ModuleRep<K>& m) -> const std::string& {
    for (const auto& [n, x] : ws.modules)
      if (x == m) return n;
    throw std::logic_error("module is not named in the workspace");
  };
  auto bimodule_name = [&](const BimoduleRep<K>& m) -> const std::string& {
    for (const auto& [n, x] : ws.bimodules)
      if (x.carrier == m.carrier) return n;
    throw std::logic_error("bimodule is not named in the workspace");
  };

  if (!ws.algebras.empty()) {
    Json s;
    for (const auto& [name, a] : ws.algebras) s[name] = io_detail::algebra_to_json(*a);
    j["algebras"] = std::move(s);
  }
  if (!ws.modules.empty()) {
    Json s;
    for (const auto& [name, m] : ws.modules) {
      Json e;
      e["algebra"] = algebra_name(m.algebra);
      e["side"] = io_detail::side_to_string(m.side);
      e["dim"] = m.dim;
      Json act = Json::array();
      for (const auto& a : m.action) act.push_back(io_detail::matrix_to_json(a));
      e["action"] = std::move(act);
      s[name] = std::move(e);
    }
    j["modules"] = std::move(s);
  }
  if (!ws.bimodules.empty()) {
    Json s;
    for (const auto& [name, b] : ws.bimodules) {
      Json e;
      e["left-algebra"] = algebra_name(b.left_algebra);
      e["right-algebra"] = algebra_name(b.right_algebra);
      e["dim"] = b.dim();
      Json la = Json::array(), ra = Json::array();
      for (std::size_t i = 0; i < b.left_algebra->dim(); ++i)
        la.push_back(io_detail::matrix_to_json(b.left_act_basis(i)));
      for (std::size_t i = 0; i < b.right_algebra->dim(); ++i)
        ra.push_back(io_detail::matrix_to_json(b.right_act_basis(i)));
      e["left-action"] = std::move(la);
      e["right-action"] = std::move(ra);
      s[name] = std::move(e);
    }
    j["bimodules"] = std::move(s);
  }
  if (!ws.complexes.empty()) {
    Json s;
    for (const auto& [name, c] : ws.complexes) {
      Json e;
      e["algebra"] = algebra_name(c.algebra);
      e["side"] = io_detail::side_to_string(c.side);
      Json terms;
      for (const auto& [n, t] : c.terms) {
        Json te;
        te["module"] = module_name(t);
        if (c.diff.count(n)) te["differential"] = io_detail::matrix_to_json(c.diff.at(n));
        terms[std::to_string(n)] = std::move(te);
      }
      e["terms"] = terms.is_null() ? Json::object() : std::move(terms);
      s[name] = std::move(e);
    }
    j["complexes"] = std::move(s);
  }
  if (!ws.candidates.empty()) {
    Json s;
    for (const auto& [name, c] : ws.candidates) {
      Json terms;
      for (const auto& [n, t] : c.l.terms) {
        Json te;
        te["bimodule"] = bimodule_name(t);
        if (c.l.diff.count(n)) te["differential"] = io_detail::matrix_to_json(c.l.diff.at(n));
        terms[std::to_string(n)] = std::move(te);
      }
      Json e;
      e["terms"] = std::move(terms);
      s[name] = std::move(e);
    }
    j["candidates"] = std::move(s);
  }
  if (!ws.extensions.empty()) {
    Json s;
    for (const auto& [name, ex] : ws.extensions) {
      Json e;
      e["candidate"] = ex.candidate;
      e["target"] = ex.target;
      auto hom = [&](const AlgebraHom<K>& h) {
        Json hj;
        hj["src"] = algebra_name(h.src);
        hj["tgt"] = algebra_name(h.tgt);
        hj["matrix"] = io_detail::matrix_to_json(h.map);
        return hj;
      };
      e["left-map"] = hom(ex.rx.phi_a);
      e["right-map"] = hom(ex.rx.phi_b);
      if (!ex.rx.structural.empty()) {
        Json st;
        for (const auto& [n, m] : ex.rx.structural)
          st[std::to_string(n)] = io_detail::matrix_to_json(m);
        e["structural"] = std::move(st);
      }
      s[name] = std::move(e);
    }
    j["extensions"] = std::move(s);
  }
  if (!ws.tasks.empty()) {
    Json arr = Json::array();
    for (const auto& t : ws.tasks) arr.push_back(task_to_json(t));
    j["tasks"] = std::move(arr);
  }
  return j;
}

inline Json parse_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw SchemaError(path + ": " + e.what());
  }
}

// Field declaration of a workspace file, without loading the rest. Lets the
// caller pick the scalar type (and set the prime modulus) before a full load.
inline std::optional<FieldSpec> peek_field(const std::string& path) {
  Json j = parse_json_file(path);
  if (j.is_object() && j.contains("field")) return field_spec_from_json(j["field"], "field");
  return std::nullopt;
}

template <class K>
Workspace<K> load_workspace(const std::string& path) {
  return workspace_from_json<K>(parse_json_file(path));
}

inline std::string dump_canonical(const Json& j) { return j.dump(2) + "\n"; }

template <class K>
void save_workspace(const Workspace<K>& ws, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw SchemaError("cannot write " + path);
  out << dump_canonical(workspace_to_json(ws));
}

inline void save_report(const Json& report, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw SchemaError("cannot write " + path);
  out << dump_canonical(report);
}

// ---------------------------------------------------------------------------
// Report records. Every record that carries a "verdict" also carries
// "certified", so emitted reports can be audited wholesale: a "pass-exact"
// without a certificate is a bug.

inline Json to_json(const AxiomCheck& c) {
  Json j;
  j["name"] = c.name;
  j["verdict"] = to_string(c.verdict);
  j["certified"] = c.certified;
  if (!c.detail.empty()) j["detail"] = c.detail;
  if (c.witness_degree) j["witness-degree"] = *c.witness_degree;
  return j;
}

inline Json to_json(const ValidationReport& r) {
  Json j;
  Json checks = Json::array();
  bool certified = true;
  for (const auto& c : r.checks) {
    certified = certified && c.certified;
    checks.push_back(to_json(c));
  }
  j["checks"] = std::move(checks);
  j["verdict"] = to_string(r.overall());
  j["certified"] = certified;
  return j;
}

inline Json to_json(const MembershipReport& r) {
  Json j;
  j["kind"] = "membership";
  j["class"] = r.coreflexive ? "bass" : "auslander";
  j["l1"] = r.l1;
  j["verdict"] = to_string(r.verdict);
  // a failure witness is exact evidence; a pass is certified only when both
  // halves carry termination/periodicity certificates
  j["certified"] = r.verdict == Verdict::Fail || (r.vanishing_certified && r.adjunction_exact);
  j["vanishing-ok"] = r.vanishing_ok;
  j["vanishing-certified"] = r.vanishing_certified;
  j["adjunction-ok"] = r.adjunction_ok;
  j["adjunction-exact"] = r.adjunction_exact;
  if (r.witness_degree) j["witness-degree"] = *r.witness_degree;
  return j;
}

template <class K>
Json to_json(const RoundtripResult<K>& r) {
  Json j;
  j["kind"] = "roundtrip";
  j["refused"] = r.refused;
  if (r.refused) {
    j["refusal"] = r.refusal;
    return j;
  }
  j["verdict"] = to_string(r.verdict);
  j["certified"] = r.verdict != Verdict::WindowLimited;
  if (r.witness_degree) j["witness-degree"] = *r.witness_degree;
  return j;
}

// True iff no "pass-exact" verdict in the report tree lacks a certificate.
inline bool audit_certificates(const Json& j) {
  if (j.is_object()) {
    if (j.contains("verdict") && j["verdict"] == "pass-exact" &&
        (!j.contains("certified") || j["certified"] != true))
      return false;
    for (const auto& [k, v] : j.items())
      if (!audit_certificates(v)) return false;
  } else if (j.is_array()) {
    for (const auto& v : j)
      if (!audit_certificates(v)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Task dispatch.

struct TaskOutcome {
  Json report;
  int exit = 0;  // 0 = pass, 1 = fail, 2 = window-limited / refused
};

inline int verdict_exit(Verdict v) {
  return v == Verdict::Fail ? 1 : v == Verdict::WindowLimited ? 2 : 0;
}

inline int combine_exit(int a, int b) { return (a == 1 || b == 1) ? 1 : std::max(a, b); }

template <class K>
TaskOutcome run_task(const Workspace<K>& ws, const Task& t, ResolutionWindow w,
                     std::uint64_t seed = 0) {
  const Json& a = t.args;
  const std::string where = "task '" + t.op + "'";
  auto arg = [&](const char* k) -> const Json& { return io_detail::member(a, where, k); };
  auto sarg = [&](const char* k) {
    return io_detail::string_at(arg(k), where + "." + std::string(k));
  };
  auto iarg = [&](const char* k) { return io_detail::int_at(arg(k), where + "." + std::string(k)); };
  auto iarg_or = [&](const char* k, int dflt) {
    return a.contains(k) ? io_detail::int_at(a[k], where + "." + std::string(k)) : dflt;
  };
  auto complex_arg = [&]() -> BoundedComplex<K> {
    if (a.contains("module")) return one_term_complex(ws.module(sarg("module")));
    return ws.complex(sarg("complex"));
  };
  auto module_list = [&](const char* k) {
    const Json& lj = arg(k);
    if (!lj.is_array()) io_detail::fail(where + "." + std::string(k), "expected an array of module names");
    std::vector<ModuleRep<K>> out;
    for (const auto& n : lj)
      out.push_back(ws.module(io_detail::string_at(n, where + "." + std::string(k))));
    return out;
  };

  TaskOutcome out;
  Json& rep = out.report;
  rep["op"] = t.op;

  if (t.op == "validate") {
    rep["algebras"] = ws.algebras.size();
    rep["modules"] = ws.modules.size();
    rep["bimodules"] = ws.bimodules.size();
    rep["complexes"] = ws.complexes.size();
    rep["candidates"] = ws.candidates.size();
    rep["extensions"] = ws.extensions.size();
    return out;
  }
  if (t.op == "resolve") {
    bool inj = a.contains("injective") && a["injective"].is_boolean() && a["injective"].get<bool>();
    BoundedComplex<K> c = complex_arg();
    bool terminated;
    int cutoff;
    const BoundedComplex<K>* resolved;
    ProjResolution<K> pr;
    InjCoresolution<K> co;
    if (inj) {
      co = injective_coresolution(c, w);
      terminated = co.terminated;
      cutoff = co.cutoff;
      resolved = &co.complex;
    } else {
      pr = projective_resolution(c, w);
      terminated = pr.terminated;
      cutoff = pr.cutoff;
      resolved = &pr.complex;
    }
    Json dims;
    for (const auto& [n, term] : resolved->terms) dims[std::to_string(n)] = term.dim;
    rep["kind"] = inj ? "injective-coresolution" : "projective-resolution";
    rep["terminated"] = terminated;
    if (!terminated) rep["cutoff"] = cutoff;
    rep["dims"] = dims.is_null() ? Json::object() : std::move(dims);
    out.exit = terminated ? 0 : 2;
    return out;
  }
  if (t.op == "ext" || t.op == "tor") {
    const PseudoDualizingCandidate<K>& cand = ws.candidate(sarg("candidate"));
    BoundedComplex<K> m = complex_arg();
    int deg = iarg("degree");
    std::optional<std::size_t> d =
        t.op == "ext" ? ext(cand.l, m, deg, w) : tor(cand.l, m, deg, w);
    rep["degree"] = deg;
    if (d) {
      rep["dimension"] = *d;
    } else {
      rep["refused"] = true;
      rep["refusal"] = "degree outside every trusted window";
      out.exit = 2;
    }
    return out;
  }
  if (t.op == "check-pdc" || t.op == "check-homothety" || t.op == "check-dedualizing" ||
      t.op == "check-dualizing") {
    const PseudoDualizingCandidate<K>& cand = ws.candidate(sarg("candidate"));
    ValidationReport r = t.op == "check-dedualizing" ? check_dedualizing(cand, w)
                         : t.op == "check-dualizing" ? check_dualizing(cand, w)
                                                     : check_homothety(cand, w);
    rep.update(to_json(r));
    out.exit = verdict_exit(r.overall());
    return out;
  }
  if (t.op == "membership" || t.op == "bass-membership" || t.op == "auslander-membership") {
    const PseudoDualizingCandidate<K>& cand = ws.candidate(sarg("candidate"));
    std::string cls = t.op == "membership"        ? sarg("class")
                      : t.op == "bass-membership" ? "bass"
                                                  : "auslander";
    if (cls != "bass" && cls != "auslander")
      io_detail::fail(where + ".class", "class must be \"bass\" or \"auslander\"");
    int l1 = iarg_or("l1", cand.d1);
    const ModuleRep<K>& m = ws.module(sarg("module"));
    MembershipReport mr = cls == "bass" ? bass_membership(m, cand, l1, w)
                                        : auslander_membership(m, cand, l1, w);
    rep.update(to_json(mr));
    out.exit = verdict_exit(mr.verdict);
    return out;
  }
  if (t.op == "class-axioms") {
    const PseudoDualizingCandidate<K>& cand = ws.candidate(sarg("candidate"));
    auto es = module_list("e");
    auto fs = module_list("f");
    int l1 = iarg_or("l1", cand.d1), l2 = iarg_or("l2", cand.d2);
    std::uint64_t sd = a.contains("seed") ? a["seed"].get<std::uint64_t>() : seed;
    try {
      ValidationReport r = check_class_axioms(es, fs, cand, l1, l2, w, sd);
      rep.update(to_json(r));
      out.exit = verdict_exit(r.overall());
    } catch (const SampleNotClosed& e) {
      rep["refused"] = true;
      rep["refusal"] = e.what();
      out.exit = 2;
    }
    return out;
  }
  if (t.op == "generator-step") {
    const PseudoDualizingCandidate<K>& cand = ws.candidate(sarg("candidate"));
    auto es = module_list("e");
    auto fs = module_list("f");
    int l2 = iarg_or("l2", cand.d2);
    GeneratorStep<K> g = minimal_class_generator_step(es, fs, cand, l2, w);
    Json ne = Json::array(), nf = Json::array();
    for (const auto& m : g.new_e) ne.push_back(m.dim);
    for (const auto& m : g.new_f) nf.push_back(m.dim);
    rep["new-e-dims"] = std::move(ne);
    rep["new-f-dims"] = std::move(nf);
    return out;
  }
  if (t.op == "relative-iv") {
    const typename Workspace<K>::Extension& ex = ws.extension(sarg("extension"));
    const PseudoDualizingCandidate<K>& cand = ws.candidate(ex.candidate);
    ValidationReport r = check_relative_condition_iv(cand, ex.rx, w);
    rep.update(to_json(r));
    out.exit = verdict_exit(r.overall());
    if (a.contains("module")) {
      const ModuleRep<K>& m = ws.module(sarg("module"));
      int l1 = iarg_or("l1", cand.d1);
      BaseChangeAgreement bc = membership_base_change_test(m, cand, ex.rx, l1, w);
      Json bj;
      bj["agree"] = bc.agree;
      bj["extended"] = to_json(bc.extended);
      bj["base"] = to_json(bc.base);
      rep["base-change"] = std::move(bj);
      out.exit = combine_exit(out.exit, bc.agree ? 0 : 1);
    }
    return out;
  }
  if (t.op == "roundtrip") {
    const PseudoDualizingCandidate<K>& cand = ws.candidate(sarg("candidate"));
    std::string cls = a.contains("class") ? sarg("class") : "bass";
    if (cls != "bass" && cls != "auslander")
      io_detail::fail(where + ".class", "class must be \"bass\" or \"auslander\"");
    int l1 = iarg_or("l1", cand.d1);
    BoundedComplex<K> x = complex_arg();
    RoundtripResult<K> r = cls == "bass" ? roundtrip_bass(x, cand, l1, w)
                                         : roundtrip_auslander(x, cand, l1, w);
    rep["class"] = cls;
    rep.update(to_json(r));
    // a term proven to be a non-member is a failure with a witness; a term
    // whose membership is only window-limited is a refusal
    out.exit = r.refused ? (r.refused_nonmember ? 1 : 2) : verdict_exit(r.verdict);
    return out;
  }
  io_detail::fail(where, "unknown task operation");
}

template <class K>
std::pair<Json, int> run_tasks(const Workspace<K>& ws, ResolutionWindow w,
                               std::uint64_t seed = 0) {
  Json arr = Json::array();
  int code = 0;
  for (const auto& t : ws.tasks) {
    TaskOutcome o = run_task(ws, t, w, seed);
    arr.push_back(std::move(o.report));
    code = combine_exit(code, o.exit);
  }
  return {std::move(arr), code};
}

}  // namespace homalg
