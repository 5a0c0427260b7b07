#ifndef SEMIINV_IO_HPP
#define SEMIINV_IO_HPP

#include <fstream>

#include "json.hpp"
#include "semiinv/diff_form.hpp"
#include "semiinv/group.hpp"

namespace semiinv {

using nlohmann::json;

// ---- CycNum: array of m rationals as strings ----

inline json to_json(const CycNum& v) {
  json a = json::array();
  for (const Rat& r : v.coeffs()) a.push_back(rat_str(r));
  return a;
}

inline CycNum cycnum_from_json(const json& j, int conductor) {
  if (!j.is_array() || static_cast<int>(j.size()) != conductor)
    throw input_error("cyclotomic number must be an array of `conductor` rationals");
  std::vector<Rat> coeffs;
  coeffs.reserve(j.size());
  for (const auto& e : j) coeffs.push_back(parse_rat(e.get<std::string>()));
  return CycNum(conductor, std::move(coeffs));
}

// ---- MPoly: list of {"exp": [...], "coeff": CycNum} ----

inline json to_json(const MPoly& p) {
  json a = json::array();
  for (const auto& [e, c] : p.terms()) {
    json t;
    t["exp"] = e;
    t["coeff"] = to_json(c);
    a.push_back(std::move(t));
  }
  return a;
}

inline MPoly mpoly_from_json(const json& j, int nvars, int conductor) {
  if (!j.is_array()) throw input_error("polynomial must be a list of terms");
  MPoly p(nvars, conductor);
  for (const auto& t : j) {
    Expo e = t.at("exp").get<Expo>();
    if (static_cast<int>(e.size()) != nvars) throw input_error("term exponent length mismatch");
    for (int x : e)
      if (x < 0) throw input_error("negative exponent in polynomial term");
    p.add_term(std::move(e), cycnum_from_json(t.at("coeff"), conductor));
  }
  return p;
}

// ---- DiffForm: list of {"exp", "coeff", "index"}; indices are 1-based ----

inline json to_json(const DiffForm& w) {
  json a = json::array();
  for (const auto& [I, f] : w.comps()) {
    json idx = json::array();
    for (int i : I) idx.push_back(i + 1);
    for (const auto& [e, c] : f.terms()) {
      json t;
      t["exp"] = e;
      t["coeff"] = to_json(c);
      t["index"] = idx;
      a.push_back(std::move(t));
    }
  }
  return a;
}

inline DiffForm form_from_json(const json& j, int nvars, int conductor, int degree) {
  if (!j.is_array()) throw input_error("form must be a list of terms");
  DiffForm w(nvars, conductor, degree);
  for (const auto& t : j) {
    MultiIndex I;
    for (const auto& i : t.at("index")) {
      int v = i.get<int>() - 1;
      I.push_back(v);
    }
    if (static_cast<int>(I.size()) != degree || !multiindex_valid(I, nvars))
      throw input_error("bad multiindex in form term");
    Expo e = t.at("exp").get<Expo>();
    if (static_cast<int>(e.size()) != nvars) throw input_error("term exponent length mismatch");
    MPoly piece(nvars, conductor);
    piece.add_term(std::move(e), cycnum_from_json(t.at("coeff"), conductor));
    w.add_comp(I, piece);
  }
  return w;
}

// ---- Group specification files ----

struct GroupSpec {
  int conductor = 1;
  int dim = 0;
  std::string name;
  std::vector<CMatrix> generators;
  long closure_cap = ReflectionGroup::kDefaultCap;
};

inline GroupSpec group_spec_from_json(const json& j) {
  GroupSpec s;
  s.conductor = j.at("conductor").get<int>();
  s.dim = j.at("dim").get<int>();
  if (j.contains("name")) s.name = j.at("name").get<std::string>();
  if (j.contains("closure_cap")) s.closure_cap = j.at("closure_cap").get<long>();
  if (s.conductor < 1 || s.dim < 1) throw input_error("bad conductor or dimension");
  for (const auto& gm : j.at("generators")) {
    if (static_cast<int>(gm.size()) != s.dim) throw input_error("generator row count mismatch");
    CMatrix g(s.dim, s.dim, s.conductor);
    for (int i = 0; i < s.dim; ++i) {
      if (static_cast<int>(gm[static_cast<std::size_t>(i)].size()) != s.dim)
        throw input_error("generator column count mismatch");
      for (int jj = 0; jj < s.dim; ++jj)
        g.at(i, jj) =
            cycnum_from_json(gm[static_cast<std::size_t>(i)][static_cast<std::size_t>(jj)], s.conductor);
    }
    s.generators.push_back(std::move(g));
  }
  if (s.generators.empty()) throw input_error("group needs at least one generator");
  return s;
}

inline json to_json(const GroupSpec& s) {
  json j;
  j["conductor"] = s.conductor;
  j["dim"] = s.dim;
  j["name"] = s.name;
  json gens = json::array();
  for (const CMatrix& g : s.generators) {
    json gm = json::array();
    for (int i = 0; i < s.dim; ++i) {
      json row = json::array();
      for (int jj = 0; jj < s.dim; ++jj) row.push_back(to_json(g.at(i, jj)));
      gm.push_back(std::move(row));
    }
    gens.push_back(std::move(gm));
  }
  j["generators"] = std::move(gens);
  return j;
}

inline json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw input_error("malformed JSON in " + path + ": " + e.what());
  }
  return j;
}

inline ReflectionGroup load_group(const std::string& path) {
  GroupSpec s = group_spec_from_json(load_json_file(path));
  return ReflectionGroup(std::move(s.generators), s.name, s.closure_cap);
}

// ---- Forms files: shared conductor/nvars plus a list of forms ----

struct FormsFile {
  int conductor = 1;
  int nvars = 0;
  std::vector<DiffForm> forms;
  std::string notes;
};

inline FormsFile forms_from_json(const json& j) {
  FormsFile f;
  f.conductor = j.at("conductor").get<int>();
  f.nvars = j.at("nvars").get<int>();
  if (j.contains("notes")) f.notes = j.at("notes").get<std::string>();
  for (const auto& fj : j.at("forms")) {
    int degree = fj.at("degree").get<int>();
    f.forms.push_back(form_from_json(fj.at("terms"), f.nvars, f.conductor, degree));
  }
  return f;
}

inline json to_json(const FormsFile& f) {
  json j;
  j["conductor"] = f.conductor;
  j["nvars"] = f.nvars;
  if (!f.notes.empty()) j["notes"] = f.notes;
  json arr = json::array();
  for (const DiffForm& w : f.forms) {
    json fj;
    fj["degree"] = w.form_degree();
    fj["terms"] = to_json(w);
    arr.push_back(std::move(fj));
  }
  j["forms"] = std::move(arr);
  return j;
}

}  // namespace semiinv

#endif
