#include "gstruct/report.hpp"

#include <CLI11.hpp>

#include <cctype>
#include <fstream>
#include <sstream>

namespace gstruct {

namespace {

constexpr int kSchemaVersion = 1;

std::string qvec_str(const QVec& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ' ';
    s += rat_str(v[i]);
  }
  return s;
}

std::string key_str(const std::vector<int>& idx) {
  std::string s;
  for (size_t i = 0; i < idx.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(idx[i]);
  }
  return s;
}

Json mv_terms(const Multivector& t) {
  Json arr = Json::array();
  for (const auto& [idx, c] : t.terms)
    arr.push_back({{"term", key_str(idx)}, {"coeff", rat_str(c)}});
  return arr;
}

std::string mv_str(const Multivector& t) {
  std::string s;
  for (const auto& [idx, c] : t.terms) {
    if (!s.empty()) s += "; ";
    s += key_str(idx) + ": " + rat_str(c);
  }
  return s.empty() ? "0" : s;
}

std::string skew_str(const SkewEndo& w) { return mv_str(to_two_form(w)); }

Json skew_list(const std::vector<SkewEndo>& ws) {
  Json arr = Json::array();
  for (const SkewEndo& w : ws) arr.push_back(skew_str(w));
  return arr;
}

Json gamma_terms(const MValuedForm& g) {
  Json arr = Json::array();
  for (int d = 1; d <= g.n; ++d)
    for (const auto& [idx, c] : g.comp[d - 1].terms)
      arr.push_back({{"dir", d}, {"i", idx[0]}, {"j", idx[1]}, {"coeff", rat_str(c)}});
  return arr;
}

Json summands_json(const RealDecomposition& d) {
  Json arr = Json::array();
  for (const RealSummand& s : d.summands) {
    Json hw = Json::array();
    for (const QVec& w : s.hws) hw.push_back(qvec_str(w));
    arr.push_back({{"dim", s.real_dim}, {"mult", s.mult}, {"hw", hw}});
  }
  return arr;
}

std::vector<long> dims_of(const RealDecomposition& d) {
  std::vector<long> out;
  for (const RealSummand& s : d.summands) out.push_back(s.real_dim);
  return out;
}

Json flags_json(const TorsionReport& tr) {
  Json f;
  f["admissible"] = dims_of(tr.admissible);
  f["theta1_injective"] = tr.theta1_injective;
  f["conformal_closed"] = tr.conformal_closed;
  f["defining_in_types"] = tr.defining_in_types;
  f["unique_connection"] = tr.unique_connection;
  return f;
}

Json diag_json(const Mat& m) {
  require(m.rows == m.cols, "diag_json: not square");
  Json arr = Json::array();
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j)
      if (i != j) require(m.at(i, j) == 0, "diag_json: off-diagonal entry");
    arr.push_back(rat_str(m.at(i, i)));
  }
  return arr;
}

std::string verdict_str(InvolutionVerdict v) {
  switch (v) {
    case InvolutionVerdict::HoldsNoSquare: return "holds-no-square";
    case InvolutionVerdict::HoldsByScan: return "holds-by-scan";
    case InvolutionVerdict::HoldsByMinimalDimension: return "holds-by-minimal-dimension";
  }
  throw ConsistencyError("unknown verdict");
}

Json roots_json(const InvolutionRoots& r) {
  Json j;
  j["raw"] = r.raw;
  j["candidates"] = r.candidates;
  j["central"] = r.central;
  return j;
}

long case_dim_m(const CaseStudy& cs) {
  return static_cast<long>(cs.n) * (cs.n - 1) / 2 - cs.dim_g;
}

Json case_header(const std::string& command, const CaseStudy& cs) {
  Json rep;
  rep["schema_version"] = kSchemaVersion;
  rep["command"] = command;
  rep["case"] = case_label(cs.name);
  rep["n"] = cs.n;
  rep["dim_g"] = cs.dim_g;
  rep["dim_m"] = case_dim_m(cs);
  return rep;
}

Multivector three_form_checked(int n, const std::string& text) {
  try {
    return mv_from_text(n, 3, text);
  } catch (const ConsistencyError& e) {
    throw InputError(std::string("bad torsion file: ") + e.what());
  }
}

bool pairwise_commuting(const std::vector<SkewEndo>& ws) {
  for (size_t i = 0; i < ws.size(); ++i)
    for (size_t j = i + 1; j < ws.size(); ++j)
      if (!commutator(ws[i], ws[j]).is_zero()) return false;
  return true;
}

}  // namespace

Json cases_report() {
  Json rep;
  rep["schema_version"] = kSchemaVersion;
  rep["command"] = "cases";
  Json cases = Json::array();
  for (CaseName c : all_cases()) {
    CaseStudy cs = build_case(c);
    cases.push_back(
        {{"label", case_label(c)}, {"n", cs.n}, {"dim_g", cs.dim_g}, {"dim_m", case_dim_m(cs)}});
  }
  rep["cases"] = cases;
  Json models = Json::array();
  for (ModelName m : all_models()) {
    StabilizerModel sm = build_model(m);
    std::string kind =
        sm.tensor.cubic ? "cubic" : std::to_string(sm.tensor.form->k) + "-form";
    models.push_back({{"label", model_label(m)},
                      {"n", sm.n},
                      {"dim_g", static_cast<long>(sm.g_basis.size())},
                      {"dim_m", static_cast<long>(sm.m_basis.size())},
                      {"tensor", kind}});
  }
  rep["models"] = models;
  return rep;
}

Json decompose_report(CaseName name) {
  CaseStudy cs = build_case(name);
  TorsionReport tr = torsion_report(cs);
  Json rep = case_header("decompose " + case_label(name), cs);
  long total = 0;
  for (const RealSummand& s : tr.types.summands) total += s.real_dim;
  rep["total_dim"] = total;
  rep["components"] = summands_json(tr.types);
  rep["flags"] = flags_json(tr);
  return rep;
}

Json torsion_case_report(CaseName name) {
  CaseStudy cs = build_case(name);
  TorsionReport tr = torsion_report(cs);
  Json rep = case_header("torsion " + case_label(name), cs);
  rep["types"] = summands_json(tr.types);
  rep["lambda3"] = summands_json(tr.lambda3);
  rep["admissible"] = summands_json(tr.admissible);
  rep["flags"] = flags_json(tr);
  return rep;
}

Json check_characters_report(CaseName name) {
  CaseStudy cs = build_case(name);
  WeightMS tensor_ms = ms_tensor(cs.defining, complement_ms(cs));
  WeightMS wedge_ms = wedge3(cs.defining);
  Json rep = case_header("check-characters " + case_label(name), cs);
  rep["tensor_count"] = ms_total(tensor_ms);
  rep["wedge_count"] = ms_total(wedge_ms);
  rep["characters_equal"] = char_equal(tensor_ms, wedge_ms);
  return rep;
}

Json theta_rank_report(ModelName m) {
  StabilizerModel sm = build_model(m);
  ThetaMaps th = theta_maps(sm);
  Json rep;
  rep["schema_version"] = kSchemaVersion;
  rep["command"] = "theta-rank " + model_label(m);
  rep["model"] = model_label(m);
  rep["n"] = sm.n;
  rep["dim_g"] = static_cast<long>(sm.g_basis.size());
  rep["dim_m"] = static_cast<long>(sm.m_basis.size());
  rep["domain_dim"] = th.theta1.cols;
  rep["codomain_dim"] = th.theta1.rows;
  rep["rank"] = th.rank1;
  rep["injective"] = th.rank1 == th.theta1.cols;
  rep["surjective"] = th.rank1 == th.theta1.rows;
  rep["bijective"] = th.rank1 == th.theta1.cols && th.rank1 == th.theta1.rows;
  std::optional<MValuedForm> un = unreachable_form(sm);
  rep["unreachable_gamma"] = un ? gamma_terms(*un) : Json::array();
  return rep;
}

Json solve_torsion_report(ModelName m, const std::string& gamma_text, const std::string& origin) {
  StabilizerModel sm = build_model(m);
  MValuedForm gamma = gamma_from_text(sm.n, gamma_text);
  TorsionSolution sol = solve_torsion(sm, gamma);
  Json rep;
  rep["schema_version"] = kSchemaVersion;
  rep["command"] = "solve-torsion " + model_label(m) + " --gamma " + origin;
  rep["model"] = model_label(m);
  rep["n"] = sm.n;
  rep["gamma"] = gamma_terms(gamma);
  switch (sol.kind) {
    case TorsionSolution::Kind::NoSolution: rep["solution"] = "none"; break;
    case TorsionSolution::Kind::Unique: rep["solution"] = "unique"; break;
    case TorsionSolution::Kind::Family: rep["solution"] = "family"; break;
  }
  rep["torsion"] = mv_terms(sol.t0);
  rep["kernel_dim"] = static_cast<long>(sol.kernel.size());
  Json kernel = Json::array();
  for (const Multivector& k : sol.kernel) kernel.push_back(mv_str(k));
  rep["kernel"] = kernel;
  return rep;
}

Json isotropy_example_report(const std::string& which) {
  Json rep;
  rep["schema_version"] = kSchemaVersion;
  rep["command"] = "isotropy --example " + which;
  if (which == "heisenberg") {
    HeisenbergReport hr = heisenberg_report();
    rep["example"] = "heisenberg";
    rep["n"] = hr.torsion.n;
    rep["torsion"] = mv_terms(hr.torsion);
    rep["square_diagonal"] = diag_json(hr.square);
    rep["ricci_diagonal"] = diag_json(hr.ricci);
    rep["family_dim"] = hr.family_dim;
    rep["family"] = skew_list(hr.family);
    rep["family_relations_hold"] = hr.relations_hold;
    Json lie = Json::array();
    for (const Multivector& t : hr.family_lie) lie.push_back(mv_str(t));
    rep["family_lie"] = lie;
    rep["dim_gT"] = hr.isotropy_dim;
    rep["isotropy"] = skew_list(hr.isotropy);
    rep["isotropy_relation_holds"] = hr.isotropy_relation_holds;
    rep["unconstrained_dim_gT"] = hr.full_isotropy_dim;
    rep["automorphism_bound"] = hr.automorphism_bound;
    return rep;
  }
  if (which == "solvable") {
    SolvableReport sr = solvable_report();
    rep["example"] = "solvable";
    rep["n"] = sr.torsion.n;
    rep["torsion"] = mv_terms(sr.torsion);
    rep["dim_gT"] = sr.isotropy_dim;
    rep["abelian"] = sr.abelian;
    rep["contains_distinguished_basis"] = sr.generators_stabilize && sr.generators_span;
    rep["generators_stabilize"] = sr.generators_stabilize;
    rep["generators_span"] = sr.generators_span;
    rep["distinguished_generators"] = Json::array({skew_str(sr.gen_a), skew_str(sr.gen_b)});
    rep["isotropy"] = skew_list(sr.isotropy);
    rep["automorphism_bound"] = sr.automorphism_bound;
    return rep;
  }
  throw InputError("unknown example '" + which + "'; known: heisenberg, solvable");
}

Json isotropy_model_report(ModelName m, const std::string& torsion_text, const std::string& origin) {
  StabilizerModel sm = build_model(m);
  Multivector t = three_form_checked(sm.n, torsion_text);
  std::vector<SkewEndo> iso = isotropy_algebra(sm, t);
  Json rep;
  rep["schema_version"] = kSchemaVersion;
  rep["command"] = "isotropy --model " + model_label(m) + " --torsion " + origin;
  rep["model"] = model_label(m);
  rep["n"] = sm.n;
  rep["torsion"] = mv_terms(t);
  rep["dim_gT"] = static_cast<long>(iso.size());
  rep["isotropy"] = skew_list(iso);
  rep["abelian"] = pairwise_commuting(iso);
  rep["automorphism_bound"] = sm.n + static_cast<long>(iso.size());
  return rep;
}

Json classify_json_report(int max_m) {
  ClassifyReport cr = classify_report(max_m);
  Json rep;
  rep["schema_version"] = kSchemaVersion;
  rep["command"] = "classify";
  rep["survivors"] = Json::array({Json{{"t", cr.survivor.t},
                                       {"k", cr.survivor.k},
                                       {"n", cr.survivor.n},
                                       {"dim_g", cr.survivor.g}}});
  Json cases = Json::array();
  for (const CaseTrace& c : cr.traces) {
    Json detail = Json::array();
    for (const std::string& d : c.detail) detail.push_back(d);
    cases.push_back({{"t", c.t},
                     {"k", c.k},
                     {"dim_g", c.g},
                     {"n", c.n},
                     {"verdict", c.survivor ? "survivor" : "eliminated"},
                     {"rule", c.rule},
                     {"detail", detail}});
  }
  rep["cases"] = cases;
  Json inv = Json::array();
  for (const InvolutionReport& ir : cr.involution) {
    Json trace = Json::array();
    for (const std::string& t : ir.trace) trace.push_back(t);
    inv.push_back({{"group", family_label(ir.family, ir.m)},
                   {"verdict", verdict_str(ir.verdict)},
                   {"trace", trace}});
  }
  rep["involution"] = inv;
  rep["su3_example"] = roots_json(cr.su3_example);
  Json scan = Json::array();
  for (const auto& [z, roots] : cr.spin7_scan)
    scan.push_back({{"centralizer_dim", z},
                    {"raw", roots.raw},
                    {"candidates", roots.candidates},
                    {"central", roots.central}});
  rep["survivor_scan"] = scan;
  rep["flags"] = cr.flags;
  return rep;
}

MValuedForm gamma_from_text(int n, const std::string& text) {
  MValuedForm g;
  g.n = n;
  g.comp.assign(n, Multivector(n, 2));
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    bool blank = true;
    for (char ch : line)
      if (!isspace(static_cast<unsigned char>(ch))) { blank = false; break; }
    if (blank) continue;
    std::istringstream ls(line);
    int d = 0, i = 0, j = 0;
    std::string cs;
    if (!(ls >> d >> i >> j >> cs)) throw InputError("bad gamma line: " + line);
    std::string extra;
    if (ls >> extra) throw InputError("trailing tokens: " + line);
    if (d < 1 || d > n || i < 1 || i > n || j < 1 || j > n)
      throw InputError("index out of range: " + line);
    if (i == j) throw InputError("repeated index: " + line);
    g.comp[d - 1].add_term({i, j}, rat_parse(cs));
  }
  return g;
}

namespace {

bool is_scalar(const Json& v) { return !v.is_object() && !v.is_array(); }

std::string scalar_str(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

bool is_scalar_array(const Json& v) {
  if (!v.is_array()) return false;
  for (const Json& e : v)
    if (!is_scalar(e)) return false;
  return true;
}

std::string inline_array(const Json& v) {
  std::string s = "[";
  bool first = true;
  for (const Json& e : v) {
    if (!first) s += ", ";
    s += scalar_str(e);
    first = false;
  }
  return s + "]";
}

std::string cell_str(const Json& v) {
  if (is_scalar(v)) return scalar_str(v);
  if (is_scalar_array(v)) return inline_array(v);
  throw ConsistencyError("markdown cell: unsupported nesting");
}

// arrays of objects sharing one flat key list become tables
bool is_table(const Json& v) {
  if (!v.is_array() || v.empty() || !v.front().is_object()) return false;
  std::vector<std::string> keys;
  for (auto it = v.front().begin(); it != v.front().end(); ++it) keys.push_back(it.key());
  for (const Json& e : v) {
    if (!e.is_object()) return false;
    std::vector<std::string> ks;
    for (auto it = e.begin(); it != e.end(); ++it) {
      ks.push_back(it.key());
      if (!is_scalar(it.value()) && !is_scalar_array(it.value())) return false;
    }
    if (ks != keys) return false;
  }
  return true;
}

void render_table(const Json& arr, std::ostringstream& os) {
  os << '|';
  for (auto it = arr.front().begin(); it != arr.front().end(); ++it) os << ' ' << it.key() << " |";
  os << "\n|";
  for (auto it = arr.front().begin(); it != arr.front().end(); ++it) {
    (void)it;
    os << " --- |";
  }
  os << '\n';
  for (const Json& e : arr) {
    os << '|';
    for (auto it = e.begin(); it != e.end(); ++it) os << ' ' << cell_str(it.value()) << " |";
    os << '\n';
  }
}

// true when the rendition is a bullet line, false for a heading block
bool render_value(const std::string& key, const Json& v, int level, bool after_block,
                  std::ostringstream& os) {
  if (is_scalar(v)) {
    if (after_block) os << '\n';
    os << "- " << key << ": " << scalar_str(v) << '\n';
    return true;
  }
  if (is_scalar_array(v)) {
    if (after_block) os << '\n';
    std::string flat = inline_array(v);
    if (flat.size() <= 60) {
      os << "- " << key << ": " << flat << '\n';
    } else {
      os << "- " << key << ":\n";
      for (const Json& e : v) os << "  - " << scalar_str(e) << '\n';
    }
    return true;
  }
  if (is_table(v)) {
    os << '\n' << std::string(level, '#') << ' ' << key << "\n\n";
    render_table(v, os);
    return false;
  }
  if (v.is_object()) {
    os << '\n' << std::string(level, '#') << ' ' << key << "\n\n";
    bool block = false;
    for (auto it = v.begin(); it != v.end(); ++it)
      block = !render_value(it.key(), it.value(), level + 1, block, os);
    return false;
  }
  throw ConsistencyError("markdown: unsupported report shape under " + key);
}

}  // namespace

std::string render_markdown(const Json& report) {
  require(report.is_object() && report.contains("command"), "render_markdown: not a report");
  std::ostringstream os;
  os << "# " << report.at("command").get<std::string>() << "\n\n";
  bool block = false;
  for (auto it = report.begin(); it != report.end(); ++it) {
    if (it.key() == "command") continue;
    block = !render_value(it.key(), it.value(), 2, block, os);
  }
  return os.str();
}

namespace {

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InputError("cannot read file: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

CaseName need_case(const std::string& s) {
  if (std::optional<CaseName> c = parse_case(s)) return *c;
  std::string known;
  for (CaseName c : all_cases()) {
    if (!known.empty()) known += ", ";
    known += case_label(c);
  }
  throw InputError("unknown case '" + s + "'; known: " + known);
}

ModelName need_model(const std::string& s) {
  if (std::optional<ModelName> m = parse_model(s)) return *m;
  std::string known;
  for (ModelName m : all_models()) {
    if (!known.empty()) known += ", ";
    known += model_label(m);
  }
  throw InputError("unknown model '" + s + "'; known: " + known);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact reports for orthogonal frame reductions: torsion types, admissibility, "
               "isotropy, and the dimension-8 classification"};
  app.require_subcommand(1);

  std::string format = "markdown";
  auto add_format = [&format](CLI::App* sub) {
    sub->add_option("--format", format, "json or markdown")
        ->check(CLI::IsMember({"json", "markdown"}));
  };
  add_format(&app);

  std::string case_arg, model_arg, gamma_path, torsion_path, example;

  CLI::App* c_cases = app.add_subcommand("cases", "list the case studies and matrix models");
  add_format(c_cases);

  CLI::App* c_dec =
      app.add_subcommand("decompose", "irreducible types of R^n (x) m for a case study");
  c_dec->add_option("case", case_arg, "case label, see `cases`")->required();
  add_format(c_dec);

  CLI::App* c_tor =
      app.add_subcommand("torsion", "type tables and admissibility flags for a case study");
  c_tor->add_option("case", case_arg, "case label, see `cases`")->required();
  add_format(c_tor);

  CLI::App* c_chk = app.add_subcommand(
      "check-characters", "compare the characters of the wedge cube and R^n (x) m");
  c_chk->add_option("case", case_arg, "case label, see `cases`")->required();
  add_format(c_chk);

  CLI::App* c_rank =
      app.add_subcommand("theta-rank", "exact rank of the torsion contraction on a matrix model");
  c_rank->add_option("model", model_arg, "model label, see `cases`")->required();
  add_format(c_rank);

  CLI::App* c_solve =
      app.add_subcommand("solve-torsion", "solve the skew-torsion equation on a matrix model");
  c_solve->add_option("model", model_arg, "model label, see `cases`")->required();
  c_solve->add_option("--gamma", gamma_path, "file of `dir i j p/q` lines")->required();
  add_format(c_solve);

  CLI::App* c_iso = app.add_subcommand("isotropy", "isotropy algebra of a torsion form");
  CLI::Option* o_ex = c_iso->add_option("--example", example, "heisenberg or solvable")
                          ->check(CLI::IsMember({"heisenberg", "solvable"}));
  CLI::Option* o_mod = c_iso->add_option("--model", model_arg, "model label, see `cases`");
  CLI::Option* o_tf = c_iso->add_option("--torsion", torsion_path, "file of `i j k p/q` lines");
  o_ex->excludes(o_mod);
  o_ex->excludes(o_tf);
  o_mod->needs(o_tf);
  o_tf->needs(o_mod);
  add_format(c_iso);

  CLI::App* c_cls =
      app.add_subcommand("classify", "rank/dimension classification with involution scans");
  add_format(c_cls);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return 2;
  }

  try {
    Json rep;
    if (c_cases->parsed()) {
      rep = cases_report();
    } else if (c_dec->parsed()) {
      rep = decompose_report(need_case(case_arg));
    } else if (c_tor->parsed()) {
      rep = torsion_case_report(need_case(case_arg));
    } else if (c_chk->parsed()) {
      rep = check_characters_report(need_case(case_arg));
    } else if (c_rank->parsed()) {
      rep = theta_rank_report(need_model(model_arg));
    } else if (c_solve->parsed()) {
      rep = solve_torsion_report(need_model(model_arg), read_file(gamma_path), gamma_path);
    } else if (c_iso->parsed()) {
      if (!example.empty())
        rep = isotropy_example_report(example);
      else if (!model_arg.empty())
        rep = isotropy_model_report(need_model(model_arg), read_file(torsion_path), torsion_path);
      else
        throw InputError("isotropy: pass --example, or --model together with --torsion");
    } else if (c_cls->parsed()) {
      rep = classify_json_report();
    } else {
      throw InputError("no subcommand");
    }
    if (format == "json")
      out << rep.dump(2) << '\n';
    else
      out << render_markdown(rep);
    return 0;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const ConsistencyError& e) {
    err << "internal error: " << e.what() << '\n';
    return 3;
  }
}

}  // namespace gstruct
