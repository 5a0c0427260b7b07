#ifndef SEMIINV_CLI_HPP
#define SEMIINV_CLI_HPP

#include <iostream>
#include <random>

#include "semiinv/derivations.hpp"
#include "semiinv/g26_reference.hpp"
#include "semiinv/io.hpp"
#include "semiinv/logforms.hpp"

namespace semiinv {

// exit codes: 0 all checks pass, 2 a mathematical check failed, 3 bad input
enum ExitCode { kExitOk = 0, kExitMathFailure = 2, kExitInputError = 3 };

struct CommandConfig {
  std::string command;     // info | qchi | basis | saito | verify-g26 | hilbert | logcheck
  std::string group_file;
  std::string character = "det^0";
  std::string forms_file;
  std::string data_dir = SEMIINV_DATA_DIR;
  int degree_cap = 0;      // 0: derived from the group
  std::string output = "text";
  unsigned seed = 1;
};

namespace cli_detail {

struct CheckLine {
  std::string name;
  bool pass;
  std::string details;
};

struct Report {
  std::string group;
  std::string character;
  json payload = json::object();
  std::vector<CheckLine> checks;

  void check(const std::string& name, bool pass, const std::string& details = "") {
    checks.push_back({name, pass, details});
  }
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

inline Character parse_character(const ReflectionGroup& g, const std::string& spec) {
  if (spec == "trivial") return Character::trivial(g);
  if (spec.rfind("det", 0) == 0) {
    long k = 1;
    if (spec.size() > 3) {
      if (spec[3] != '^') throw input_error("character spec must be det^k or a table file");
      try {
        std::size_t used = 0;
        k = std::stol(spec.substr(4), &used);
        if (used != spec.size() - 4) throw input_error("bad det power: " + spec);
      } catch (const std::exception&) {
        throw input_error("bad det power in character spec: " + spec);
      }
    }
    return Character::det_power(g, k);
  }
  // otherwise: a JSON file with {"values": [CycNum ...]} per element index
  json j = load_json_file(spec);
  std::vector<CycNum> values;
  for (const auto& v : j.at("values")) values.push_back(cycnum_from_json(v, g.conductor()));
  return Character::from_table(g, std::move(values), spec);
}

inline void emit(const Report& rep, const CommandConfig& cfg, std::ostream& os) {
  if (cfg.output == "json") {
    json out;
    out["group"] = rep.group;
    out["character"] = rep.character;
    for (auto it = rep.payload.begin(); it != rep.payload.end(); ++it) out[it.key()] = it.value();
    json checks = json::array();
    for (const auto& c : rep.checks)
      checks.push_back({{"name", c.name}, {"pass", c.pass}, {"details", c.details}});
    out["checks"] = checks;
    os << out.dump(1) << "\n";
  } else {
    for (const auto& c : rep.checks) {
      os << (c.pass ? "[PASS] " : "[FAIL] ") << c.name;
      if (!c.details.empty()) os << ": " << c.details;
      os << "\n";
    }
  }
}

inline json certificate_payload(const SemiInvariantContext& ctx, const GeneratorCertificate& cert) {
  json j;
  j["q_chi"] = to_json(ctx.q_chi);
  j["q_chi_det"] = to_json(ctx.q_chi_det);
  json gens = json::array();
  for (const DiffForm& w : cert.forms) gens.push_back(to_json(w));
  j["generators"] = gens;
  j["generator_degrees"] = cert.degrees;
  j["witness_scalar"] = to_json(cert.witness_scalar);
  return j;
}

inline int run_info(const CommandConfig& cfg, std::ostream& os) {
  ReflectionGroup g = load_group(cfg.group_file);
  Report rep{g.name(), "", {}, {}};
  rep.check("group order", true, std::to_string(g.size()));
  rep.check("reflections", true, std::to_string(g.reflections().size()));
  std::vector<std::string> names;
  for (int i = 0; i < g.dim(); ++i) names.push_back("x" + std::to_string(i + 1));
  json hyper = json::array();
  for (const Hyperplane& h : g.arrangement()) {
    rep.check("hyperplane " + h.alpha.str(names), true,
              "o(s_H) = " + std::to_string(h.stab_order));
    hyper.push_back({{"alpha", to_json(h.alpha)}, {"order", h.stab_order}});
  }
  rep.payload["hyperplanes"] = hyper;
  SemiInvariantEngine eng(g);
  const BasicInvariants& b = eng.basic_invariants();
  std::string degs;
  for (int d : b.degrees) degs += (degs.empty() ? "" : ", ") + std::to_string(d);
  rep.check("basic invariant degrees", true, degs);
  rep.payload["basic_degrees"] = b.degrees;
  emit(rep, cfg, os);
  return kExitOk;
}

inline int run_qchi(const CommandConfig& cfg, std::ostream& os) {
  ReflectionGroup g = load_group(cfg.group_file);
  SemiInvariantEngine eng(g);
  Character chi = parse_character(g, cfg.character);
  SemiInvariantContext ctx = eng.context(chi);
  Report rep{g.name(), chi.label(), {}, {}};
  std::vector<std::string> names;
  for (int i = 0; i < g.dim(); ++i) names.push_back("x" + std::to_string(i + 1));
  rep.check("Q_chi", true, ctx.q_chi.str(names));
  rep.check("Q_chi_det", true, ctx.q_chi_det.str(names));
  rep.payload["q_chi"] = to_json(ctx.q_chi);
  rep.payload["q_chi_det"] = to_json(ctx.q_chi_det);
  const auto& hs = g.arrangement();
  bool all = true;
  for (std::size_t i = 0; i < hs.size(); ++i) {
    auto rc = ah_recurrence_check(g, hs[i], chi);
    all = all && rc.pass;
    rep.check("a_H(" + hs[i].alpha.str(names) + ")", rc.pass,
              "a = " + std::to_string(rc.a_chi) + ", a(chi det) = " +
                  std::to_string(rc.a_chi_det) + ", expected " + std::to_string(rc.expected));
  }
  rep.check("twist recurrence", all);
  emit(rep, cfg, os);
  return rep.all_pass() ? kExitOk : kExitMathFailure;
}

inline int run_basis(const CommandConfig& cfg, std::ostream& os) {
  ReflectionGroup g = load_group(cfg.group_file);
  SemiInvariantEngine eng(g);
  Character chi = parse_character(g, cfg.character);
  SemiInvariantContext ctx = eng.context(chi);
  int cap = cfg.degree_cap > 0 ? cfg.degree_cap
                               : std::max(ctx.q_chi_det.degree(), 0) +
                                     std::max(ctx.q_det.degree(), 0);
  Report rep{g.name(), chi.label(), {}, {}};
  GeneratorCertificate cert = find_generators(ctx, cap);
  std::string degs;
  for (int d : cert.degrees) degs += (degs.empty() ? "" : ", ") + std::to_string(d);
  rep.check("generators found", true, "coefficient degrees " + degs);
  rep.check("generation criterion", true, "witness " + cert.witness_scalar.str());
  rep.payload = certificate_payload(ctx, cert);
  emit(rep, cfg, os);
  return kExitOk;
}

inline int run_saito(const CommandConfig& cfg, std::ostream& os) {
  ReflectionGroup g = load_group(cfg.group_file);
  if (cfg.forms_file.empty()) throw input_error("saito needs --forms <file>");
  FormsFile ff = forms_from_json(load_json_file(cfg.forms_file));
  if (ff.conductor != g.conductor() || ff.nvars != g.dim())
    throw input_error("forms file does not match the group conductor/dimension");
  SemiInvariantEngine eng(g);
  Character chi = parse_character(g, cfg.character);
  SemiInvariantContext ctx = eng.context(chi);
  Report rep{g.name(), chi.label(), {}, {}};
  SaitoResult sr = saito_check(ff.forms, ctx);
  rep.check("generation criterion", sr.ok, sr.ok ? "witness " + sr.witness.str() : sr.reason);
  if (sr.ok) {
    rep.payload["witness_scalar"] = to_json(sr.witness);
    rep.payload["det_coeff_matrix"] = to_json(sr.det_coeff_matrix);
  }
  emit(rep, cfg, os);
  return rep.all_pass() ? kExitOk : kExitMathFailure;
}

inline int run_hilbert(const CommandConfig& cfg, std::ostream& os) {
  ReflectionGroup g = load_group(cfg.group_file);
  SemiInvariantEngine eng(g);
  Character chi = parse_character(g, cfg.character);
  SemiInvariantContext ctx = eng.context(chi);
  int cap = cfg.degree_cap > 0 ? cfg.degree_cap : 2 * std::max(ctx.q_det.degree(), 1);
  const BasicInvariants& b = eng.basic_invariants();
  auto dims = eng.molien().isotypic_series(chi, 0, cap);
  auto stanley = shifted_partition_series(b.degrees, std::max(ctx.q_chi.degree(), 0), cap);
  Report rep{g.name(), chi.label(), {}, {}};
  bool all = true;
  for (int d = 0; d <= cap; ++d) {
    bool same = dims[static_cast<std::size_t>(d)] == stanley[static_cast<std::size_t>(d)];
    all = all && same;
    if (!same)
      rep.check("degree " + std::to_string(d), false,
                "character count " + std::to_string(dims[static_cast<std::size_t>(d)]) +
                    " vs free-module count " + std::to_string(stanley[static_cast<std::size_t>(d)]));
  }
  rep.check("graded dimensions match the free-module prediction up to degree " +
                std::to_string(cap),
            all);
  rep.payload["dims"] = dims;
  rep.payload["prediction"] = stanley;
  emit(rep, cfg, os);
  return rep.all_pass() ? kExitOk : kExitMathFailure;
}

inline int run_logcheck(const CommandConfig& cfg, std::ostream& os) {
  ReflectionGroup g = load_group(cfg.group_file);
  SemiInvariantEngine eng(g);
  Character chi = parse_character(g, cfg.character);
  SemiInvariantContext ctx = eng.context(chi);
  int cap = cfg.degree_cap > 0 ? cfg.degree_cap
                               : std::max(ctx.q_chi_det.degree(), 0) +
                                     std::max(ctx.q_det.degree(), 0);
  GeneratorCertificate cert = find_generators(ctx, cap);
  Multiarrangement ma = Multiarrangement::of_character(g, chi);
  Report rep{g.name(), chi.label(), {}, {}};
  std::mt19937 eng_rng(cfg.seed);
  std::uniform_int_distribution<std::size_t> pick(0, cert.forms.size() - 1);
  bool member = true;
  for (const DiffForm& w : cert.forms) member = member && is_logarithmic(w, ma).pass;
  // invariant multiples of the generators stay members
  const BasicInvariants& b = eng.basic_invariants();
  for (int t = 0; t < 10; ++t) {
    DiffForm w = cert.forms[pick(eng_rng)] * b.fs[static_cast<std::size_t>(t) % b.fs.size()];
    member = member && is_logarithmic(w, ma).pass;
  }
  rep.check("semiinvariant forms are Q_chi times logarithmic forms", member);
  bool closed = true;
  int pairs = 0;
  for (std::size_t i = 0; i < cert.forms.size() && pairs < 10; ++i)
    for (std::size_t j = i + 1; j < cert.forms.size() && pairs < 10; ++j, ++pairs)
      closed = closed && closure_product_check(cert.forms[i], cert.forms[j], ma).pass;
  rep.check("logarithmic forms are closed under the exterior product", closed);
  emit(rep, cfg, os);
  return rep.all_pass() ? kExitOk : kExitMathFailure;
}

inline int run_verify_g26(const CommandConfig& cfg, std::ostream& os) {
  std::string group_file =
      cfg.group_file.empty() ? cfg.data_dir + "/g26.json" : cfg.group_file;
  std::string forms_file =
      cfg.forms_file.empty() ? cfg.data_dir + "/g26_det3_forms.json" : cfg.forms_file;
  ReflectionGroup g = load_group(group_file);
  Report rep{g.name(), "det^3", {}, {}};
  rep.check("group closure has 1296 elements", g.size() == 1296, std::to_string(g.size()));
  SemiInvariantEngine eng(g);
  SemiInvariantContext ctx = eng.context_det_power(3);
  auto w3 = eq_up_to_scalar(ctx.q_chi, g26::reference_q_det3());
  rep.check("Q_det3 = (x^3-y^3)(x^3-z^3)(y^3-z^3)", w3.has_value(),
            w3 ? "witness " + w3->str() : "mismatch");
  MPoly q4 = q_poly(g, Character::det_power(g, 4));
  rep.check("Q_det4 is homogeneous of degree 24",
            q4.is_homogeneous() && q4.degree() == 24);
  auto w4 = eq_up_to_scalar(q4, g26::reference_q_det4(true));
  rep.check("Q_det4 matches the reference expression (z^6 reading)", w4.has_value(),
            w4 ? "witness " + w4->str() : "mismatch");
  bool literal = g26::reference_q_det4(false).is_homogeneous();
  rep.check("the x z^6 transcription of Q_det4 is non-homogeneous (flagged)", !literal,
            "product formula decides the z^6 reading");
  FormsFile ff = forms_from_json(load_json_file(forms_file));
  if (ff.forms.size() != 3) throw input_error("expected three forms in " + forms_file);
  for (int i = 0; i < 3; ++i) {
    bool inv = eng.action().is_semiinvariant(ff.forms[static_cast<std::size_t>(i)], ctx.chi);
    rep.check("omega_" + std::to_string(i + 1) + " is det^3-invariant", inv);
  }
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      bool div = exact_divide(wedge(ff.forms[static_cast<std::size_t>(i)],
                                    ff.forms[static_cast<std::size_t>(j)]),
                              ctx.q_chi)
                     .has_value();
      rep.check("Q_det3 divides omega_" + std::to_string(i + 1) + " ^ omega_" +
                    std::to_string(j + 1),
                div);
    }
  SaitoResult sr = saito_check(ff.forms, ctx);
  rep.check("generation criterion passes", sr.ok, sr.ok ? "" : sr.reason);
  bool witness16 = sr.ok && sr.witness == g26::reference_witness();
  rep.check("det(coefficient matrix) = -16 Q_det4 Q_det3^2", witness16,
            sr.ok ? "witness " + sr.witness.str() : "");
  if (sr.ok) {
    rep.payload = certificate_payload(ctx, GeneratorCertificate{ff.forms, {}, sr.witness,
                                                                sr.det_coeff_matrix});
  }
  emit(rep, cfg, os);
  return rep.all_pass() ? kExitOk : kExitMathFailure;
}

}  // namespace cli_detail

// Dispatch a parsed command; returns the process exit code.
inline int run_command(const CommandConfig& cfg, std::ostream& os) {
  using namespace cli_detail;
  try {
    if (cfg.command == "info") return run_info(cfg, os);
    if (cfg.command == "qchi") return run_qchi(cfg, os);
    if (cfg.command == "basis") return run_basis(cfg, os);
    if (cfg.command == "saito") return run_saito(cfg, os);
    if (cfg.command == "hilbert") return run_hilbert(cfg, os);
    if (cfg.command == "logcheck") return run_logcheck(cfg, os);
    if (cfg.command == "verify-g26") return run_verify_g26(cfg, os);
    throw input_error("unknown command: " + cfg.command);
  } catch (const input_error& e) {
    os << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const math_error& e) {
    os << "mathematical check failed: " << e.what() << "\n";
    return kExitMathFailure;
  } catch (const json::exception& e) {
    os << "input error: " << e.what() << "\n";
    return kExitInputError;
  }
}

}  // namespace semiinv

#endif
