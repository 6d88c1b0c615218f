// Copyright 2026 The drep Authors
// SPDX-License-Identifier: Apache-2.0

#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "drep/cohomology.hpp"
#include "drep/expand.hpp"
#include "drep/io.hpp"
#include "drep/tangent.hpp"
#include "json.hpp"

namespace drep::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr int kDefaultMaxDegree = 6;

struct Source {
  std::string label;  // what error messages call the file
  std::string name;   // stem, used as the default algebra name
  std::string text;
};

const BundledFile* find_bundled(const std::string& name) {
  for (const auto& f : bundled_files())
    if (name == f.name) return &f;
  return nullptr;
}

// A path on disk wins; otherwise the file name is looked up among the
// bundled examples, so `examples/kxy.alg` works from any directory.
Source read_source(const std::string& ref, const char* extension) {
  namespace fs = std::filesystem;
  fs::path path(ref);
  std::error_code ec;
  if (fs::is_regular_file(path, ec)) {
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    return {ref, path.stem().string(), buf.str()};
  }
  std::string file = path.filename().string();
  if (path.extension().empty()) file += extension;
  if (const auto* b = find_bundled(file)) return {ref, fs::path(file).stem().string(), b->text};
  throw Error("cannot open " + ref + " (not a file and not a bundled example)");
}

nc::Resolution load_algebra(const std::string& ref, bool require_valid = true) {
  auto src = read_source(ref, ".alg");
  nc::Resolution res = [&] {
    try {
      return io::parse_algebra(src.text, src.name);
    } catch (const io::ParseError& e) {
      throw Error(src.label + ":" + e.what());
    }
  }();
  if (require_valid) {
    auto report = nc::validate_resolution(res);
    if (!report.ok()) throw Error(src.label + ": invalid resolution: " + report.violations.front().message);
  }
  return res;
}

int max_degree_default() {
  const char* env = std::getenv("DREP_MAX_DEGREE");
  if (!env || !*env) return kDefaultMaxDegree;
  try {
    std::size_t used = 0;
    int v = std::stoi(env, &used);
    if (used != std::string(env).size() || v < 0) throw std::invalid_argument("bad");
    return v;
  } catch (const std::exception&) {
    throw Error(std::string("DREP_MAX_DEGREE must be a non-negative integer, got '") + env + "'");
  }
}

std::string weights_text(const nc::Resolution& res, const coh::Grading& g) {
  std::string out;
  const auto& alphabet = *res.alphabet();
  for (std::uint32_t i = 0; i < alphabet.size(); ++i) {
    if (!out.empty()) out += ' ';
    out += alphabet[i].name + "=" + std::to_string(g.weights[i]);
  }
  return out;
}

json weights_json(const nc::Resolution& res, const coh::Grading& g) {
  json w = json::object();
  const auto& alphabet = *res.alphabet();
  for (std::uint32_t i = 0; i < alphabet.size(); ++i) w[alphabet[i].name] = g.weights[i];
  return w;
}

json cpoly_terms(const gc::CPoly& p) {
  json terms = json::array();
  const auto& vars = *p.variables();
  for (const auto& [m, c] : p.terms())
    terms.push_back({{"coefficient", to_string(c)}, {"monomial", gc::to_string(vars, m)}});
  return terms;
}

// Relation in S^k written as a combination of the generators g1..gk.
std::string relation_text(const gb::Element& rel, const gb::PolyRing& ring, std::size_t k) {
  std::string out;
  for (std::uint32_t c = 0; c < k; ++c) {
    auto poly = rel.component(c);
    if (poly.is_zero()) continue;
    std::string p = gb::to_string(poly, ring, false);
    std::string g = "g" + std::to_string(c + 1);
    bool negative = p.front() == '-';
    std::string term;
    if (poly.size() == 1) {
      std::string body = negative ? p.substr(1) : p;
      term = body == "1" ? g : body + "*" + g;
      if (!out.empty())
        out += negative ? " - " : " + ";
      else if (negative)
        out += "-";
      out += term;
    } else {
      if (!out.empty()) out += " + ";
      out += "(" + p + ")*" + g;
    }
  }
  return out.empty() ? "0" : out;
}

int cohomological(int degree) { return degree < 0 ? -degree : degree; }

// ---------------------------------------------------------------------------

int cmd_validate(const std::string& file, bool as_json, std::ostream& out) {
  auto src = read_source(file, ".alg");
  io::AlgebraFile parsed = [&] {
    try {
      return io::parse_algebra_file(src.text, src.name);
    } catch (const io::ParseError& e) {
      throw Error(src.label + ":" + e.what());
    }
  }();
  const auto& res = parsed.resolution;
  auto report = nc::validate_resolution(res);
  const auto& alphabet = *res.alphabet();
  auto where = [&](std::uint32_t g) {
    io::Position p = parsed.diff_at[g] ? *parsed.diff_at[g] : parsed.declared_at[g];
    return src.label + ":" + std::to_string(p.line) + ":" + std::to_string(p.column);
  };
  if (as_json) {
    json j;
    j["algebra"] = res.name();
    j["valid"] = report.ok();
    json gens = json::array();
    for (const auto& g : alphabet.generators()) gens.push_back({{"name", g.name}, {"degree", g.degree}});
    j["generators"] = gens;
    json v = json::array();
    for (const auto& viol : report.violations) {
      json e = {{"location", where(viol.generator)},
                {"generator", alphabet[viol.generator].name},
                {"kind", nc::to_string(viol.kind)},
                {"message", viol.message}};
      if (viol.residue) e["residue"] = nc::to_string(*viol.residue);
      v.push_back(e);
    }
    j["violations"] = v;
    if (report.ok()) {
      auto g = coh::detect_grading(res);
      j["internal_grading"] = {{"homogeneous", g.homogeneous}, {"weights", weights_json(res, g)}};
      if (!g.homogeneous) j["internal_grading"]["reason"] = g.reason;
    }
    out << j.dump(2) << "\n";
    return report.ok() ? 0 : 1;
  }
  out << "algebra " << res.name() << ": " << (report.ok() ? "valid" : "invalid") << "\n";
  std::map<int, std::size_t> by_degree;
  for (const auto& g : alphabet.generators()) ++by_degree[g.degree];
  out << "generators: " << alphabet.size();
  std::string sep = " (";
  for (auto it = by_degree.rbegin(); it != by_degree.rend(); ++it) {
    out << sep << "degree " << it->first << ": " << it->second;
    sep = ", ";
  }
  out << (by_degree.empty() ? "" : ")") << "\n";
  for (const auto& viol : report.violations) {
    out << where(viol.generator) << ": " << alphabet[viol.generator].name << ": " << viol.message;
    if (viol.residue) out << " (residue " << nc::to_string(*viol.residue) << ")";
    out << "\n";
  }
  if (report.ok()) {
    auto g = coh::detect_grading(res);
    out << "internal weights: " << weights_text(res, g);
    if (!g.homogeneous) out << " (inconsistent: " << g.reason << ")";
    out << "\n";
  }
  return report.ok() ? 0 : 1;
}

int cmd_expand(const std::string& file, std::size_t n, bool as_json, std::ostream& out) {
  auto ea = expand::expand(load_algebra(file), n);
  const auto& pres = ea.presentation();
  const auto& vars = *pres.variables();
  if (as_json) {
    json j;
    j["algebra"] = ea.source().name();
    j["n"] = n;
    json v = json::array();
    for (const auto& var : vars.variables()) v.push_back({{"name", var.name}, {"degree", var.degree}});
    j["variables"] = v;
    json d = json::array();
    for (std::uint32_t i = 0; i < vars.size(); ++i) {
      const auto& p = pres.diff(i);
      if (p.is_zero()) continue;
      d.push_back({{"variable", vars[i].name}, {"value", gc::to_string(p)}, {"terms", cpoly_terms(p)}});
    }
    j["differentials"] = d;
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "algebra " << ea.source().name() << ", n = " << n << "\n";
  out << "variables: " << vars.size() << "\n";
  for (const auto& var : vars.variables()) out << "  " << var.name << " : " << var.degree << "\n";
  out << "differentials:\n";
  for (std::uint32_t i = 0; i < vars.size(); ++i) {
    const auto& p = pres.diff(i);
    if (!p.is_zero()) out << "  d " << vars[i].name << " = " << gc::to_string(p) << "\n";
  }
  return 0;
}

gb::GroebnerOptions field_options(bool prime) {
  gb::GroebnerOptions o;
  if (prime) o.field = gb::Field::Prime;
  return o;
}

int cmd_h(const std::string& file, std::size_t n, int degree, std::optional<int> max_degree, bool prime,
          bool as_json, std::ostream& out) {
  const int m = cohomological(degree);
  const int bound = max_degree ? *max_degree : max_degree_default();
  auto ea = expand::expand(load_algebra(file), n);
  coh::CochainComplex cx(ea, field_options(prime));
  auto h = cx.h_presentation(m, bound);
  const auto& res = ea.source();
  const std::size_t k = h.cocycles.size();

  if (as_json) {
    json j;
    j["algebra"] = res.name();
    j["n"] = n;
    j["degree"] = -m;
    j["field"] = prime ? "prime" : "rational";
    j["internal_grading"] = {{"homogeneous", h.homogeneous}, {"weights", weights_json(res, cx.grading())}};
    if (!h.homogeneous) j["internal_grading"]["reason"] = cx.grading().reason;
    j["degree_bound"] = h.homogeneous ? json(bound) : json(nullptr);
    j["truncated"] = !h.complete;
    json counts = json::object();
    for (auto [d, c] : h.generator_counts()) counts[std::to_string(d)] = c;
    j["generator_counts"] = counts;
    j["minimal"] = h.homogeneous;
    json gens = json::array();
    for (std::size_t i = 0; i < k; ++i)
      gens.push_back({{"name", "g" + std::to_string(i + 1)},
                      {"internal_degree", h.module.generator_degrees[i]},
                      {"representative", cx.format(h.cocycles[i], m)}});
    j["generators"] = gens;
    json rels = json::array();
    for (const auto& r : h.module.relations) rels.push_back(relation_text(r, cx.ring(), k));
    j["relations"] = rels;
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "H^" << -m << " of " << res.name() << " at n = " << n << "\n";
  out << "internal weights: " << weights_text(res, cx.grading()) << "\n";
  if (!h.homogeneous) {
    out << "internal grading inconsistent (" << cx.grading().reason << "); presentation not minimized\n";
  } else {
    out << "internal degree bound: " << bound << (h.complete ? "" : " (truncated)") << "\n";
  }
  out << (h.homogeneous ? "minimal generators: " : "generators: ") << k << "\n";
  if (h.homogeneous)
    for (auto [d, c] : h.generator_counts()) out << "  internal degree " << d << ": " << c << "\n";
  for (std::size_t i = 0; i < k; ++i) {
    out << "  g" << i + 1;
    if (h.homogeneous) out << " [" << h.module.generator_degrees[i] << "]";
    out << " = " << cx.format(h.cocycles[i], m) << "\n";
  }
  out << "relations: " << h.module.relations.size() << "\n";
  for (const auto& r : h.module.relations) out << "  " << relation_text(r, cx.ring(), k) << "\n";
  return 0;
}

int cmd_hilbert(const std::string& file, std::size_t n, int degree, int up_to, bool prime, bool as_json,
                std::ostream& out) {
  const int m = cohomological(degree);
  if (up_to < 0) throw Error("--up-to must be non-negative");
  auto ea = expand::expand(load_algebra(file), n);
  coh::CochainComplex cx(ea, field_options(prime));
  auto hf = cx.hilbert_function(m, up_to);
  if (as_json) {
    json j;
    j["algebra"] = ea.source().name();
    j["n"] = n;
    j["degree"] = -m;
    j["field"] = prime ? "prime" : "rational";
    json v = json::array();
    for (const auto& x : hf) v.push_back(x.get_str());
    j["hilbert_function"] = v;
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "Hilbert function of H^" << -m << " (" << ea.source().name() << ", n = " << n << ")\n";
  for (std::size_t d = 0; d < hf.size(); ++d) out << "  " << d << "  " << hf[d] << "\n";
  return 0;
}

int cmd_vanish(const std::string& file, std::size_t n, int degree, bool prime, bool as_json, std::ostream& out) {
  const int m = cohomological(degree);
  auto ea = expand::expand(load_algebra(file), n);
  coh::CochainComplex cx(ea, field_options(prime));
  bool v = cx.vanishing(m);
  if (as_json) {
    json j;
    j["algebra"] = ea.source().name();
    j["n"] = n;
    j["degree"] = -m;
    j["field"] = prime ? "prime" : "rational";
    j["vanishes"] = v;
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "H^" << -m << " of " << ea.source().name() << " at n = " << n << (v ? " vanishes" : " does not vanish")
      << "\n";
  return 0;
}

int cmd_tangent(const std::string& file, std::size_t n, const std::string& rep_file, std::optional<std::size_t> koszul,
                bool as_json, std::ostream& out) {
  auto res = load_algebra(file);
  auto src = read_source(rep_file, ".rep");
  tangent::Representation rho = [&] {
    try {
      return io::parse_rep(src.text);
    } catch (const io::ParseError& e) {
      throw Error(src.label + ":" + e.what());
    }
  }();
  if (rho.n != n)
    throw Error(src.label + ": representation has n = " + std::to_string(rho.n) + " but --n is " + std::to_string(n));
  auto report = tangent::validate_rep(res, rho);
  if (!report.ok()) {
    std::string msg = src.label + ": invalid representation: " + report.violations.front().message;
    const auto& r = report.violations.front().residue;
    if (r) {
      msg += " (residue [";
      for (std::size_t i = 0; i < r->rows(); ++i) {
        msg += i ? ", [" : "[";
        for (std::size_t j = 0; j < r->cols(); ++j) msg += (j ? ", " : "") + to_string((*r)(i, j));
        msg += "]";
      }
      msg += "])";
    }
    throw Error(msg);
  }
  auto t = tangent::tangent_cohomology(res, rho);
  std::optional<tangent::P2Report> p2;
  if (koszul) p2 = tangent::check_p2(res, rho, *koszul);

  if (as_json) {
    json j;
    j["algebra"] = res.name();
    j["n"] = n;
    json dims = json::object();
    for (std::size_t i = 0; i < t.dims.size(); ++i) dims["T^" + std::to_string(i)] = t.dims[i];
    j["tangent"] = dims;
    if (p2) {
      json rows = json::array();
      for (const auto& r : p2->rows)
        rows.push_back({{"tangent", r.tangent_label}, {"tangent_dim", r.tangent}, {"oracle", r.oracle_label},
                        {"oracle_dim", r.oracle}, {"agree", r.agree()}});
      j["koszul"] = {{"variables", *koszul}, {"rows", rows}, {"agree", p2->ok()}};
    }
    out << j.dump(2) << "\n";
  } else {
    out << "tangent cohomology of " << res.name() << " at n = " << n << "\n";
    for (std::size_t i = 0; i < t.dims.size(); ++i) out << "  T^" << i << " = " << t.dims[i] << "\n";
    if (p2) {
      out << "Koszul oracle (" << *koszul << " variables):\n";
      for (const auto& r : p2->rows)
        out << "  " << r.tangent_label << " = " << r.tangent << "  " << r.oracle_label << " = " << r.oracle << "  "
            << (r.agree() ? "agree" : "DISAGREE") << "\n";
      out << "oracle: " << (p2->ok() ? "agree" : "disagree") << "\n";
    }
  }
  return p2 && !p2->ok() ? 3 : 0;
}

int cmd_examples(const std::string& action, const std::string& name, bool as_json, std::ostream& out) {
  if (action == "list") {
    if (as_json) {
      json j = json::array();
      for (const auto& f : bundled_files()) j.push_back(f.name);
      out << j.dump(2) << "\n";
      return 0;
    }
    for (const auto& f : bundled_files()) {
      std::string text = f.text;
      std::string summary;
      if (text.rfind("# ", 0) == 0) summary = text.substr(2, text.find('\n') - 2);
      out << f.name;
      if (!summary.empty()) out << "  " << summary;
      out << "\n";
    }
    return 0;
  }
  if (action == "show") {
    if (name.empty()) throw Error("examples show needs a NAME");
    const BundledFile* f = find_bundled(name);
    if (!f) f = find_bundled(name + ".alg");
    if (!f) throw Error("no bundled example named " + name);
    out << f->text;
    return 0;
  }
  throw Error("examples: unknown action '" + action + "' (use list or show)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Derived representation schemes: matrix expansion, cohomology and tangent spaces"};
  app.name("drep");
  app.require_subcommand(1);

  std::string format = "text";
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };

  std::string file, rep_file, action, example_name;
  std::size_t n = 1;
  int degree = 0, up_to = 0;
  std::optional<int> max_degree;
  std::optional<std::size_t> koszul;
  bool prime = false;

  auto* validate = app.add_subcommand("validate", "Parse and validate an algebra file");
  validate->add_option("FILE", file)->required();
  add_format(validate);

  auto* expand_cmd = app.add_subcommand("expand", "Print the expanded commutative DG algebra");
  expand_cmd->add_option("FILE", file)->required();
  expand_cmd->add_option("--n", n, "Matrix size")->required()->check(CLI::PositiveNumber);
  add_format(expand_cmd);

  auto* h = app.add_subcommand("h", "Presentation of a cohomology module");
  h->add_option("FILE", file)->required();
  h->add_option("--n", n, "Matrix size")->required()->check(CLI::PositiveNumber);
  h->add_option("--degree", degree, "Cohomological degree (M or -M)")->required();
  h->add_option("--max-internal-degree", max_degree, "Internal degree bound (default: DREP_MAX_DEGREE or 6)")
      ->check(CLI::NonNegativeNumber);
  h->add_flag("--prime", prime, "Compute modulo 2147483647 instead of over Q");
  add_format(h);

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert function of a cohomology module");
  hilbert->add_option("FILE", file)->required();
  hilbert->add_option("--n", n, "Matrix size")->required()->check(CLI::PositiveNumber);
  hilbert->add_option("--degree", degree, "Cohomological degree (M or -M)")->required();
  hilbert->add_option("--up-to", up_to, "Largest internal degree")->required()->check(CLI::NonNegativeNumber);
  hilbert->add_flag("--prime", prime, "Compute modulo 2147483647 instead of over Q");
  add_format(hilbert);

  auto* vanish = app.add_subcommand("vanish", "Decide whether a cohomology module is zero");
  vanish->add_option("FILE", file)->required();
  vanish->add_option("--n", n, "Matrix size")->required()->check(CLI::PositiveNumber);
  vanish->add_option("--degree", degree, "Cohomological degree (M or -M)")->required();
  vanish->add_flag("--prime", prime, "Compute modulo 2147483647 instead of over Q");
  add_format(vanish);

  auto* tangent_cmd = app.add_subcommand("tangent", "Derived tangent space at a representation");
  tangent_cmd->add_option("FILE", file)->required();
  tangent_cmd->add_option("--n", n, "Matrix size")->required()->check(CLI::PositiveNumber);
  tangent_cmd->add_option("--rep", rep_file, "Representation file")->required();
  tangent_cmd->add_option("--koszul", koszul,
                          "Compare with Hochschild cohomology of the polynomial algebra on d variables");
  add_format(tangent_cmd);

  auto* examples = app.add_subcommand("examples", "List or show bundled example files");
  examples->add_option("ACTION", action, "list or show")->required()->check(CLI::IsMember({"list", "show"}));
  examples->add_option("NAME", example_name);
  add_format(examples);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  const bool as_json = format == "json";
  try {
    if (*validate) return cmd_validate(file, as_json, out);
    if (*expand_cmd) return cmd_expand(file, n, as_json, out);
    if (*h) return cmd_h(file, n, degree, max_degree, prime, as_json, out);
    if (*hilbert) return cmd_hilbert(file, n, degree, up_to, prime, as_json, out);
    if (*vanish) return cmd_vanish(file, n, degree, prime, as_json, out);
    if (*tangent_cmd) return cmd_tangent(file, n, rep_file, koszul, as_json, out);
    if (*examples) return cmd_examples(action, example_name, as_json, out);
  } catch (const std::exception& e) {
    err << "drep: error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace drep::cli
