#include "nilmod/cli.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "nilmod/invariants.hpp"
#include "nilmod/p1geom.hpp"
#include "nilmod/syzygy.hpp"
#include "nilmod/verify.hpp"

namespace nilmod::cli {

namespace {

struct Options {
  std::string space;
  int r = 1;
  std::uint64_t characteristic = 0;
  std::optional<int> max_hom;
  std::optional<int> max_deg;
  std::string json_path;
  std::string out_path;
  bool timings = false;
  std::string ideal_path;
  std::string vars;
  std::string koszul;
  bool basis = false;
};

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text) {
    if (ch == ',' || std::isspace(static_cast<unsigned char>(ch))) {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InvalidInput("cannot write '" + path + "'");
  f << text;
}

template <typename T>
nlohmann::json optional_json(const std::optional<T>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

VerificationReport header(const Options& o) {
  VerificationReport rep;
  rep.tool_version = kToolVersion;
  rep.space = o.ideal_path.empty() ? o.space : "";
  rep.r = o.ideal_path.empty() ? o.r : 0;
  rep.characteristic = o.characteristic;
  return rep;
}

ModuliSpec spec_of(const Options& o) {
  if (o.space.empty()) throw InvalidInput("--space is required");
  return ModuliSpec(parse_space(o.space), o.r, CoefficientField(o.characteristic));
}

template <typename F>
Ideal<F> load_ideal(const Options& o, const F& k) {
  if (o.ideal_path.empty()) {
    auto spec = spec_of(o);
    return construct(spec.space, spec.r, k);
  }
  auto gens = read_generator_file(o.ideal_path);
  auto vars = o.vars.empty() ? infer_variables(gens) : split_list(o.vars);
  auto ring = PolyRing<F>::make(k, vars);
  std::vector<Polynomial<F>> polys;
  for (const auto& g : gens) polys.push_back(parse_polynomial(ring, g));
  return Ideal<F>(ring, std::move(polys));
}

std::string hilbert_text(const HilbertSeries& hs) {
  if (!hs.dimension) return "0 (unit ideal)";
  return "(" + tpoly_to_string(hs.simplified_numerator) + ") / (1-t)^" +
         std::to_string(*hs.dimension);
}

struct Outcome {
  int code = kExitPass;
  std::string text;
  nlohmann::json json;
};

int code_for(Verdict v) { return v == Verdict::Pass ? kExitPass : kExitFail; }

Outcome do_construct(const Options& o) {
  auto spec = spec_of(o);
  return visit_field(spec.field, [&](const auto& k) {
    auto ideal = construct(spec.space, spec.r, k);
    Outcome res;
    auto rep = header(o);
    std::ostringstream os;
    os << "space " << o.space << ", r = " << o.r << ", " << spec.field.name() << ": "
       << ideal.generators().size() << " generators in " << ideal.ring()->nvars()
       << " variables\n";
    std::string listing;
    auto gens = nlohmann::json::array();
    for (const auto& g : ideal.generators()) {
      listing += to_integer_text(g) + "\n";
      gens.push_back(to_integer_text(g));
    }
    os << listing;
    res.text = os.str();
    res.json = report_to_json(rep, false);
    res.json["generators"] = gens;
    res.json["variables"] = ideal.ring()->variables();
    if (!o.out_path.empty()) write_file(o.out_path, listing);
    return res;
  });
}

Outcome do_invariants(const Options& o) {
  CoefficientField field(o.characteristic);
  return visit_field(field, [&](const auto& k) {
    auto ideal = load_ideal(o, k);
    auto rep = header(o);
    std::ostringstream os;
    rep.dimension = krull_dimension(ideal);
    os << "variables: " << ideal.ring()->nvars() << ", generators: " << ideal.generators().size()
       << ", basis: " << ideal.basis().size() << "\n";
    os << "dimension: "
       << (rep.dimension ? std::to_string(*rep.dimension) : std::string("empty (unit ideal)"))
       << "\n";
    if (ideal.is_homogeneous()) {
      rep.hilbert = hilbert_series(ideal);
      if (rep.hilbert->dimension) rep.multiplicity = tpoly_eval_one(rep.hilbert->simplified_numerator);
      os << "Hilbert series: " << hilbert_text(*rep.hilbert) << "\n";
      os << "multiplicity: " << (rep.multiplicity ? std::to_string(*rep.multiplicity) : "-")
         << "\n";
    } else {
      os << "Hilbert series: not graded\n";
    }
    Outcome res;
    res.text = os.str();
    res.json = report_to_json(rep, false);
    return res;
  });
}

Outcome do_betti(const Options& o) {
  CoefficientField field(o.characteristic);
  return visit_field(field, [&](const auto& k) {
    auto ideal = load_ideal(o, k);
    std::vector<std::string> w;
    if (!o.koszul.empty()) w = split_list(o.koszul);
    else if (o.ideal_path.empty()) w = default_koszul_variables(parse_space(o.space), o.r);
    else w = ideal.ring()->variables();
    auto window = resolve_window({o.max_hom, o.max_deg}, w.size());
    auto table = koszul_betti(ideal, w, window);
    auto rep = header(o);
    rep.dimension = krull_dimension(ideal);
    rep.betti = table;
    std::ostringstream ws;
    ws << "window (" << window.max_n << "," << window.max_j << ")";
    rep.add("Betti window contains the whole table", "engine.euler", ws.str(),
            table.certified ? Verdict::Pass : Verdict::Inconclusive);
    auto v = homological_verdicts(table, rep.dimension.value_or(0), w.size());
    if (v.conclusive) {
      rep.verdicts.cm = v.cohen_macaulay;
      rep.verdicts.gorenstein = v.gorenstein;
      rep.verdicts.type = v.type;
    }
    std::ostringstream os;
    os << "Koszul variables:";
    for (const auto& x : w) os << ' ' << x;
    os << "\n" << table.to_text();
    os << (table.certified ? "certified: " : "not certified: ") << ws.str() << "\n";
    if (v.conclusive)
      os << "pd " << v.proj_dim << ", depth " << v.depth << ", Cohen-Macaulay "
         << (v.cohen_macaulay ? "yes" : "no") << ", type " << v.type << ", Gorenstein "
         << (v.gorenstein ? "yes" : "no") << "\n";
    Outcome res;
    res.text = os.str();
    res.json = report_to_json(rep, false);
    res.code = code_for(rep.overall());
    return res;
  });
}

Outcome do_predict(const Options& o) {
  auto spec = spec_of(o);
  SplitBundle xi, eta;
  std::optional<std::vector<int>> gens;
  if (spec.space == Space::A) {
    xi = xi_for_A(spec.r);
    eta = SplitBundle::repeated(2, static_cast<std::size_t>(spec.r));
  } else if (spec.space == Space::B0) {
    xi = xi_for_B0(spec.r);
    eta = SplitBundle::repeated(1, 2) + SplitBundle::repeated(2, static_cast<std::size_t>(spec.r));
    gens = std::vector<int>{0, 1};
  } else {
    throw InvalidInput("predictions exist for the spaces A and B0 only");
  }
  auto table = predict_betti(xi, gens);
  auto geo = check_geo1(eta);
  auto rep = header(o);
  rep.betti = table;
  rep.verdicts.cm = geo.cm_predicted;
  rep.verdicts.gorenstein = geo.gorenstein_at_origin_predicted;
  rep.verdicts.type = table.row_total(table.projective_dimension());

  std::ostringstream os;
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  os << "xi = " << xi.to_string() << ", eta = " << eta.to_string() << "\n" << table.to_text();
  os << "ample " << yn(geo.ample) << ", globally generated " << yn(geo.globally_generated)
     << ", H1(Sym) = 0 " << yn(geo.sym_vanishing) << ", H1(Sym x det x omega) = 0 "
     << yn(geo.sym_det_omega_vanishing) << "\n";
  os << "Cohen-Macaulay predicted " << yn(geo.cm_predicted) << ", Gorenstein at 0 predicted "
     << yn(geo.gorenstein_at_origin_predicted) << "\n";
  Outcome res;
  res.text = os.str();
  res.json = report_to_json(rep, false);
  res.json["xi"] = xi.twists();
  res.json["eta"] = eta.twists();
  return res;
}

std::string timings_text(const VerificationReport& rep) {
  std::ostringstream os;
  os << "timings:";
  for (const auto& t : rep.timings) os << " " << t.stage << "=" << t.seconds << "s";
  os << "\n";
  return os.str();
}

Outcome do_verify(const Options& o) {
  auto rep = verify_space(spec_of(o), {o.max_hom, o.max_deg});
  Outcome res;
  res.text = rep.to_text() + timings_text(rep);
  res.json = report_to_json(rep, o.timings);
  res.code = code_for(rep.overall());
  return res;
}

nlohmann::json fiber_json(const FiberSummary& f) {
  return {{"dim", optional_json(f.dim)},
          {"components", f.components},
          {"equidimensional", f.equidimensional},
          {"reduced_certified", f.reduced_certified}};
}

Outcome do_flatness(const Options& o) {
  if (o.space.empty()) throw InvalidInput("--space is required");
  auto fr = verify_flatness(parse_space(o.space), o.r, o.characteristic);
  Outcome res;
  std::ostringstream os;
  os << fr.report.to_text();
  os << "criterion satisfied: " << (fr.criterion_satisfied ? "yes" : "no") << "\n";
  os << timings_text(fr.report);
  res.text = os.str();
  res.json = report_to_json(fr.report, o.timings);
  res.json["generic_fiber"] = fiber_json(fr.generic_fiber);
  res.json["special_fiber"] = fiber_json(fr.special_fiber);
  res.json["conclusions"] = fr.conclusions;
  res.code = fr.criterion_satisfied && fr.report.overall() == Verdict::Pass ? kExitPass : kExitFail;
  return res;
}

Outcome do_export(const Options& o) {
  auto spec = spec_of(o);
  std::vector<std::string> gens;
  if (o.basis) {
    gens = visit_field(spec.field, [&](const auto& k) {
      std::vector<std::string> out;
      for (const auto& g : construct(spec.space, spec.r, k).basis()) out.push_back(to_integer_text(g));
      return out;
    });
  } else {
    gens = master_generators(spec.space, spec.r);
  }
  std::string listing;
  for (const auto& g : gens) listing += g + "\n";
  Outcome res;
  if (o.out_path.empty()) res.text = listing;
  else {
    write_file(o.out_path, listing);
    res.text = std::to_string(gens.size()) + " polynomials written to " + o.out_path + "\n";
  }
  res.json = report_to_json(header(o), false);
  res.json["generators"] = gens;
  res.json["variables"] = moduli_variables(matrix_count(spec.space, spec.r), has_phi(spec.space));
  return res;
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--space", o.space, "moduli space")->check(CLI::IsMember({"A", "B0", "B", "C"}));
  sub->add_option("--r", o.r, "number of matrices (r >= 1)");
  sub->add_option("--char", o.characteristic, "0 or an odd prime");
  sub->add_option("--json", o.json_path, "write a JSON report");
  sub->add_option("--out", o.out_path, "write the plain-text output");
}

void add_window(CLI::App* sub, Options& o) {
  sub->add_option("--max-hom", o.max_hom, "largest homological degree");
  sub->add_option("--max-deg", o.max_deg, "largest internal degree");
}

void add_import(CLI::App* sub, Options& o) {
  sub->add_option("--ideal", o.ideal_path, "generator file, one polynomial per line");
  sub->add_option("--vars", o.vars, "comma-separated variables for --ideal");
}

}  // namespace

nlohmann::json betti_to_json(const BettiTable& table) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [key, value] : table.entries)
    j[std::to_string(key.first)][std::to_string(key.second)] = value;
  return j;
}

nlohmann::json report_to_json(const VerificationReport& rep, bool with_timings) {
  nlohmann::json j;
  j["tool_version"] = rep.tool_version;
  j["space"] = rep.space.empty() ? nlohmann::json(nullptr) : nlohmann::json(rep.space);
  j["r"] = rep.r > 0 ? nlohmann::json(rep.r) : nlohmann::json(nullptr);
  j["characteristic"] = rep.characteristic;
  j["dimension"] = optional_json(rep.dimension);
  j["multiplicity"] = optional_json(rep.multiplicity);
  if (rep.hilbert) {
    j["hilbert_numerator"] = rep.hilbert->simplified_numerator;
    j["hilbert_denominator_exponent"] = optional_json(rep.hilbert->dimension);
  } else {
    j["hilbert_numerator"] = nullptr;
    j["hilbert_denominator_exponent"] = nullptr;
  }
  if (rep.betti) {
    j["betti"] = betti_to_json(*rep.betti);
    j["betti_certified"] = rep.betti->certified;
  } else {
    j["betti"] = nullptr;
    j["betti_certified"] = nullptr;
  }
  const auto& v = rep.verdicts;
  j["verdicts"] = {{"cm", optional_json(v.cm)},
                   {"gorenstein", optional_json(v.gorenstein)},
                   {"type", optional_json(v.type)},
                   {"components", optional_json(v.components)},
                   {"intersection_equal", optional_json(v.intersection_equal)},
                   {"flat_criterion", optional_json(v.flat_criterion)}};
  auto lines = nlohmann::json::array();
  for (const auto& l : rep.lines)
    lines.push_back({{"claim", l.claim},
                     {"anchor", l.anchor},
                     {"statement", std::string(find_anchor(l.anchor).statement)},
                     {"computed", l.computed},
                     {"verdict", to_string(l.verdict)}});
  j["lines"] = lines;
  j["overall"] = rep.lines.empty() ? nlohmann::json(nullptr) : nlohmann::json(to_string(rep.overall()));
  if (with_timings) {
    auto t = nlohmann::json::array();
    for (const auto& s : rep.timings) t.push_back({{"stage", s.stage}, {"seconds", s.seconds}});
    j["timings"] = t;
  }
  return j;
}

std::vector<std::string> read_generator_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InvalidInput("cannot read '" + path + "'");
  std::vector<std::string> out;
  std::string line;
  while (std::getline(f, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    auto last = line.find_last_not_of(" \t\r");
    out.push_back(line.substr(first, last - first + 1));
  }
  if (out.empty()) throw InvalidInput("no generators in '" + path + "'");
  return out;
}

std::vector<std::string> infer_variables(const std::vector<std::string>& generators) {
  std::vector<std::string> vars;
  for (const auto& g : generators) {
    for (std::size_t i = 0; i < g.size();) {
      const auto c = static_cast<unsigned char>(g[i]);
      if (std::isalpha(c) || c == '_') {
        std::size_t j = i;
        while (j < g.size() &&
               (std::isalnum(static_cast<unsigned char>(g[j])) || g[j] == '_'))
          ++j;
        auto name = g.substr(i, j - i);
        if (std::find(vars.begin(), vars.end(), name) == vars.end()) vars.push_back(name);
        i = j;
      } else if (std::isdigit(c)) {
        while (i < g.size() && std::isdigit(static_cast<unsigned char>(g[i]))) ++i;
      } else {
        ++i;
      }
    }
  }
  return vars;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Moduli of nilpotent 2x2 matrices: construction, invariants and verification"};
  app.require_subcommand(1);
  Options o;

  auto* construct_cmd = app.add_subcommand("construct", "print the generators of a space");
  add_common(construct_cmd, o);
  auto* invariants_cmd = app.add_subcommand("invariants", "dimension, Hilbert series, multiplicity");
  add_common(invariants_cmd, o);
  add_import(invariants_cmd, o);
  auto* betti_cmd = app.add_subcommand("betti", "graded Betti numbers by Koszul homology");
  add_common(betti_cmd, o);
  add_window(betti_cmd, o);
  add_import(betti_cmd, o);
  betti_cmd->add_option("--koszul", o.koszul, "comma-separated Koszul variables");
  auto* predict_cmd = app.add_subcommand("predict", "Betti table predicted from bundles on P1");
  add_common(predict_cmd, o);
  auto* verify_cmd = app.add_subcommand("verify", "check every statement about a space");
  add_common(verify_cmd, o);
  add_window(verify_cmd, o);
  verify_cmd->add_flag("--timings", o.timings, "include stage timings in the JSON report");
  auto* flatness_cmd = app.add_subcommand("flatness", "fiberwise flatness criterion for C");
  add_common(flatness_cmd, o);
  flatness_cmd->add_flag("--timings", o.timings, "include stage timings in the JSON report");
  auto* export_cmd = app.add_subcommand("export", "integer generators in plain text");
  add_common(export_cmd, o);
  export_cmd->add_flag("--basis", o.basis, "export the reduced Groebner basis instead");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInvalid;
  }

  try {
    Outcome res;
    if (construct_cmd->parsed()) res = do_construct(o);
    else if (invariants_cmd->parsed()) res = do_invariants(o);
    else if (betti_cmd->parsed()) res = do_betti(o);
    else if (predict_cmd->parsed()) res = do_predict(o);
    else if (verify_cmd->parsed()) res = do_verify(o);
    else if (flatness_cmd->parsed()) res = do_flatness(o);
    else res = do_export(o);

    out << res.text;
    if (!o.json_path.empty()) write_file(o.json_path, res.json.dump(2) + "\n");
    if (!o.out_path.empty() && !construct_cmd->parsed() && !export_cmd->parsed())
      write_file(o.out_path, res.text);
    return res.code;
  } catch (const InvalidInput& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFail;
  }
}

}  // namespace nilmod::cli
