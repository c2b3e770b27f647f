// Command-line front end: analyze, classify, conic, mcm-region, nccr verify, generate, z1.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hibi/hibi.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace hibi;

/// Bad invocation or unreadable input; exits with status 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Input {
  std::string path;
  std::optional<PosetHat> poset;
  std::optional<SigmaMatrix> cone;
};

Input load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  Input input{path, {}, {}};
  try {
    bool is_cone = false;
    std::istringstream lines(text);
    for (std::string line; std::getline(lines, line);) {
      auto body = detail::trim(line.substr(0, line.find('#')));
      if (body.empty()) continue;
      is_cone = body.rfind("dim", 0) == 0;
      break;
    }
    if (is_cone)
      input.cone = parse_cone(text);
    else
      input.poset = parse_poset(text);
  } catch (const Error& e) {
    throw UsageError(path + ": " + e.what());
  }
  return input;
}

std::vector<int> parse_edges(const std::string& spec, const PosetHat& p) {
  std::vector<int> out;
  std::stringstream ss(spec);
  for (std::string tok; std::getline(ss, tok, ',');) {
    tok = detail::trim(tok);
    if (tok.size() < 2 || tok[0] != 'e') throw UsageError("edge '" + tok + "' should look like e3");
    int e = 0;
    try {
      e = std::stoi(tok.substr(1)) - 1;
    } catch (const std::exception&) {
      throw UsageError("edge '" + tok + "' should look like e3");
    }
    if (e < 0 || e >= p.edge_count()) throw UsageError("no edge " + tok);
    out.push_back(e);
  }
  return out;
}

Box parse_box(const std::string& spec, int rank) {
  std::vector<Int> v;
  std::stringstream ss(spec);
  for (std::string tok; std::getline(ss, tok, ',');) {
    try {
      v.push_back(std::stoll(tok));
    } catch (const std::exception&) {
      throw UsageError("--box expects integers, got '" + tok + "'");
    }
  }
  if (v.size() != static_cast<std::size_t>(2 * rank))
    throw UsageError("--box needs " + std::to_string(2 * rank) + " integers lo1,hi1,... for rank " +
                     std::to_string(rank));
  Box b;
  for (int k = 0; k < rank; ++k) {
    if (v[2 * k] > v[2 * k + 1]) throw UsageError("--box bounds are reversed");
    b.push_back({v[2 * k], v[2 * k + 1]});
  }
  return b;
}

json to_json(const Weight& w) { return json(w.coords); }
json to_json(const Direction& d) { return json(d.coords); }
json to_json(const std::vector<Weight>& ws) {
  json a = json::array();
  for (const auto& w : ws) a.push_back(to_json(w));
  return a;
}

std::string cell(const Weight& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "\t" : "") + std::to_string(w[i]);
  return s;
}

json labels(const std::vector<int>& edges) {
  json a = json::array();
  for (int e : edges) a.push_back(edge_label(e));
  return a;
}

/// D_e written in the cotree basis, e.g. "-D_e1 - D_e8".
std::string in_basis(const Weight& w, const std::vector<int>& basis) {
  std::string s;
  for (std::size_t k = 0; k < w.size(); ++k) {
    Int c = w[k];
    if (c == 0) continue;
    std::string term = "D_" + edge_label(basis[k]);
    Int mag = c < 0 ? -c : c;
    if (mag != 1) term = std::to_string(mag) + term;
    if (s.empty())
      s = (c < 0 ? "-" : "") + term;
    else
      s += (c < 0 ? " - " : " + ") + term;
  }
  return s.empty() ? "0" : s;
}

struct PosetAnalysis {
  TreeSelection tree;
  ClassGroupData classes;
  std::vector<Circuit> circuits;
  ConicPolytope polytope;
  std::vector<Weight> conic;
};

PosetAnalysis analyze_poset(const PosetHat& p, const std::optional<std::string>& tree_spec) {
  PosetAnalysis a;
  try {
    a.tree = tree_spec ? spanning_tree(p, parse_edges(*tree_spec, p)) : spanning_tree(p);
  } catch (const Error& e) {
    throw UsageError(std::string("--tree: ") + e.what());
  }
  a.classes = class_group(p, a.tree);
  a.circuits = chordless_circuits(p);
  a.polytope = conic_polytope(a.circuits, a.tree, a.classes);
  a.conic = enumerate_conic(a.polytope);
  return a;
}

json inequality_json(const Inequality& q) { return json{{"coeffs", q.coeffs}, {"lo", q.lo}, {"hi", q.hi}}; }

std::string inequality_text(const Inequality& q, const std::vector<int>& basis) {
  return std::to_string(q.lo) + " <= " + in_basis(Weight(q.coeffs), basis) + " <= " + std::to_string(q.hi);
}

int cmd_analyze(const Input& in, const std::optional<std::string>& tree_spec, const std::string& format) {
  json out;
  out["input"] = in.path;
  if (in.cone) {
    auto cg = class_group(*in.cone);
    out["kind"] = "cone";
    out["dimension"] = in.cone->dimension();
    out["rays"] = in.cone->rows;
    out["class_group"] = {{"rank", cg.rank}, {"torsion", cg.torsion}, {"basis", "hermite normal form of the relations"}};
    out["weights"] = to_json(cg.weight_of_divisor);
    out["gorenstein"] = cg.total().is_zero();
    if (cg.rank <= 2) out["conic"] = to_json(zonotope_conic(cg));
    if (format == "tsv") {
      std::cout << "rank\t" << cg.rank << "\n";
      for (std::size_t i = 0; i < cg.weight_of_divisor.size(); ++i)
        std::cout << "D" << i + 1 << "\t" << cell(cg.weight_of_divisor[i]) << "\n";
    } else {
      std::cout << out.dump(2) << "\n";
    }
    return 0;
  }

  const auto& p = *in.poset;
  auto purity = is_pure(p);
  auto ext = polynomial_extension_edge(p);
  auto a = analyze_poset(p, tree_spec);
  out["kind"] = "poset";
  out["vertices"] = p.vertex_count();
  json edges = json::array();
  for (int e = 0; e < p.edge_count(); ++e)
    edges.push_back({{"id", edge_label(e)}, {"lower", p.name(p.edge(e).lower)}, {"upper", p.name(p.edge(e).upper)}});
  out["edges"] = edges;
  out["pure"] = purity.pure;
  out["chain_length"] = purity.chain_length ? json(*purity.chain_length) : json(nullptr);
  out["polynomial_extension_edge"] = ext ? json(edge_label(*ext)) : json(nullptr);
  out["tree"] = labels(a.tree.tree_edges);
  out["cotree"] = labels(a.tree.cotree_edges);
  out["class_group"] = {{"rank", a.classes.rank}, {"torsion", a.classes.torsion}};
  json weights, relations = json::array();
  for (int e = 0; e < p.edge_count(); ++e) {
    weights[edge_label(e)] = to_json(a.classes.weight_of_divisor[e]);
    if (!std::binary_search(a.tree.cotree_edges.begin(), a.tree.cotree_edges.end(), e))
      relations.push_back("D_" + edge_label(e) + " = " + in_basis(a.classes.weight_of_divisor[e], a.tree.cotree_edges));
  }
  out["weights"] = weights;
  out["relations"] = relations;
  out["gorenstein"] = a.classes.total().is_zero();
  json circuits = json::array();
  for (const auto& c : a.circuits) {
    json verts = json::array();
    for (int v : c.vertex_cycle) verts.push_back(p.name(v));
    circuits.push_back({{"vertices", verts}, {"up", labels(c.x_plus)}, {"down", labels(c.x_minus)}});
  }
  out["circuits"] = circuits;
  json ineqs = json::array();
  for (const auto& q : a.polytope.ineqs) ineqs.push_back(inequality_json(q));
  out["conic_polytope"] = ineqs;
  out["conic_count"] = a.conic.size();

  if (format == "tsv") {
    std::cout << "vertices\t" << p.vertex_count() << "\nedges\t" << p.edge_count() << "\n";
    std::cout << "pure\t" << (purity.pure ? "yes" : "no") << "\n";
    std::cout << "rank\t" << a.classes.rank << "\n";
    for (int e = 0; e < p.edge_count(); ++e)
      std::cout << edge_label(e) << "\t" << cell(a.classes.weight_of_divisor[e]) << "\n";
    for (const auto& q : a.polytope.ineqs) std::cout << "ineq\t" << inequality_text(q, a.tree.cotree_edges) << "\n";
    std::cout << "conic\t" << a.conic.size() << "\n";
  } else {
    std::cout << out.dump(2) << "\n";
  }
  return 0;
}

int cmd_classify(const Input& in, const std::string& format) {
  if (!in.poset) throw UsageError("classify expects a poset file");
  auto c = classify(*in.poset);
  json out;
  out["input"] = in.path;
  if (c.type) {
    out["family"] = family_name(c.type->family);
    out["params"] = c.type->params;
    out["orientation"] = c.type->orientation == Orientation::as_given ? "as-given" : "flipped";
    out["description"] = describe(*c.type);
    json table = json::array();
    for (const auto& [w, n] : expected_weight_table(*c.type)) table.push_back({{"weight", to_json(w)}, {"count", n}});
    out["weight_table"] = table;
  } else {
    out["rejected"] = c.reason;
    if (c.extension_edge) out["edge"] = edge_label(*c.extension_edge);
  }
  if (format == "tsv")
    std::cout << (c.type ? describe(*c.type) : "rejected\t" + c.reason) << "\n";
  else
    std::cout << out.dump(2) << "\n";
  return c.type ? 0 : 1;
}

int cmd_conic(const Input& in, const std::optional<std::string>& tree_spec, const std::string& format) {
  std::vector<Weight> pts;
  if (in.poset)
    pts = analyze_poset(*in.poset, tree_spec).conic;
  else
    pts = zonotope_conic(class_group(*in.cone));
  if (format == "json")
    std::cout << to_json(pts).dump() << "\n";
  else
    for (const auto& z : pts) std::cout << cell(z) << "\n";
  return 0;
}

int cmd_mcm_region(const Input& in, const std::optional<std::string>& box_spec, const std::string& format) {
  ClassGroupData cg = in.poset ? class_group(*in.poset) : class_group(*in.cone);
  if (cg.rank < 1 || cg.rank > 2) throw UsageError("mcm-region needs class group rank 1 or 2");
  if (!cg.total().is_zero()) {
    std::cerr << "not Gorenstein: the MCM criterion is not applied\n";
    return 1;
  }
  Box box;
  if (box_spec) {
    box = parse_box(*box_spec, cg.rank);
  } else {
    Int reach = 0;
    for (const auto& b : cg.weight_of_divisor)
      for (Int x : b.coords) reach += x < 0 ? -x : x;
    box.assign(cg.rank, {-reach, reach});
  }
  std::optional<McmCriterion> crit;
  try {
    crit.emplace(cg);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  std::set<Weight> conic;
  if (in.poset) {
    auto a = analyze_poset(*in.poset, std::nullopt);
    conic.insert(a.conic.begin(), a.conic.end());
  } else {
    auto z = zonotope_conic(cg);
    conic.insert(z.begin(), z.end());
  }
  auto label = [&](const Weight& z) -> std::string {
    if (!crit->is_mcm(z)) return "none";
    return conic.count(z) ? "mcm+conic" : "mcm";
  };
  if (format == "json") {
    json cells = json::array();
    for (const auto& z : lattice_points(box)) cells.push_back({{"class", to_json(z)}, {"cell", label(z)}});
    std::cout << json{{"input", in.path}, {"box", box}, {"cells", cells}}.dump() << "\n";
    return 0;
  }
  if (cg.rank == 1) {
    for (Int a = box[0].first; a <= box[0].second; ++a) std::cout << a << "\t" << label(Weight{a}) << "\n";
    return 0;
  }
  std::cout << "c2\\c1";
  for (Int x = box[0].first; x <= box[0].second; ++x) std::cout << "\t" << x;
  std::cout << "\n";
  for (Int y = box[1].second; y >= box[1].first; --y) {
    std::cout << y;
    for (Int x = box[0].first; x <= box[0].second; ++x) std::cout << "\t" << label(Weight{x, y});
    std::cout << "\n";
  }
  return 0;
}

json certificate_line(const CertificateStep& s) {
  return json{{"chi", to_json(s.chi)}, {"lambda", to_json(s.lambda)}, {"deps", to_json(s.deps)}};
}

int cmd_nccr_verify(const Input& in, const std::optional<std::string>& cert_path, const std::string& format) {
  if (!in.poset) throw UsageError("nccr verify expects a poset file");
  auto r = verify_nccr(*in.poset);
  json out;
  out["input"] = in.path;
  out["verdict"] = verdict_name(r.verdict);
  out["message"] = r.message;
  if (r.extension_edge) out["edge"] = edge_label(*r.extension_edge);
  if (r.rank) out["rank"] = r.rank;
  if (r.type) out["type"] = describe(*r.type);
  if (r.basis_change) out["basis_change"] = *r.basis_change;
  if (!r.weights.empty()) out["weights"] = to_json(r.weights);
  if (!r.L.chars.empty()) {
    out["L"] = to_json(r.L.chars);
    out["L_size"] = r.L.chars.size();
    out["conic_count"] = r.conic.size();
    out["end_checks"] = r.end.checks;
  }
  if (r.gldim) {
    out["certificate_steps"] = r.gldim->certificate.steps.size();
    if (!r.gldim->covered) out["uncovered"] = r.gldim->reasons;
    out["scope"] = "finite projective dimension certified on the conic classes";
  }
  if (cert_path && r.gldim) {
    std::ofstream f(*cert_path);
    if (!f) throw UsageError("cannot write '" + *cert_path + "'");
    for (const auto& s : r.gldim->certificate.steps) f << certificate_line(s).dump() << "\n";
  }
  if (format == "tsv") {
    std::cout << "verdict\t" << verdict_name(r.verdict) << "\n";
    if (r.type) std::cout << "type\t" << describe(*r.type) << "\n";
    if (!r.L.chars.empty()) std::cout << "L\t" << r.L.chars.size() << "\n";
    if (r.gldim) {
      std::cout << "steps\t" << r.gldim->certificate.steps.size() << "\n";
      for (const auto& s : r.gldim->certificate.steps) std::cout << certificate_line(s).dump() << "\n";
    }
  } else {
    if (r.gldim) {
      json steps = json::array();
      for (const auto& s : r.gldim->certificate.steps) steps.push_back(certificate_line(s));
      out["certificate"] = steps;
    }
    std::cout << out.dump(2) << "\n";
  }
  return r.verdict == Verdict::verified ? 0 : 1;
}

Rank1Weights rank1_weights(const Input& in) {
  ClassGroupData cg = in.poset ? class_group(*in.poset) : class_group(*in.cone);
  try {
    return Rank1Weights::from(cg);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

int cmd_z1_analyze(const Input& in) {
  auto w = rank1_weights(in);
  auto b = beta_invariant(w);
  auto win = base_window(w);
  ClassGroupData cg{1, {}, {}, {}};
  for (Int x : w.weights()) cg.weight_of_divisor.push_back(Weight{x});
  json out;
  out["input"] = in.path;
  out["weights"] = w.weights();
  out["beta"] = b.beta;
  out["mcm_interval"] = {b.lo, b.hi};
  out["base_window"] = win.classes();
  out["windows"] = "every {c, ..., c+" + std::to_string(b.beta - 1) + "} gives a splitting NCCR, and only these";
  bool agree = true;
  for (Int a = -2 * b.beta; a <= 2 * b.beta; ++a)
    agree = agree && (strongly_critical_conic(Weight{a}, cg) == (b.lo <= a && a <= b.hi));
  out["conic_equals_mcm"] = agree;
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_z1_graph(const Input& in, bool generators_only, Int radius) {
  auto w = rank1_weights(in);
  try {
    std::cout << to_dot(exchange_graph(w, generators_only, radius));
    return 0;
  } catch (const Error& e) {
    std::cout << to_dot(ExchangeGraph{exchange_vertices(w, generators_only, radius), {}});
    std::cerr << "no edges: " << e.what() << "\n";
    return 1;
  }
}

int cmd_z1_mutate(const Input& in, Int lo, const std::string& end) {
  auto w = rank1_weights(in);
  Window win{lo, beta_invariant(w).beta};
  Mutation m;
  try {
    m = mutate_window(win, end == "low" ? WindowEnd::low : WindowEnd::high, w);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  json out{{"window", win.classes()},  {"end", end},           {"removed", m.removed},
           {"result", m.result.classes()}, {"kernel", m.kernel}, {"middle", m.middle}};
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_generate(const std::string& family, std::optional<int> l, std::optional<int> m, std::optional<int> n,
                 std::optional<int> segre) {
  if (segre) {
    std::cout << "# Segre product of two chains, " << *segre + 1 << " covers each\n" << segre_two_chains(*segre);
    return 0;
  }
  TypeParams t;
  try {
    t.family = parse_family(family);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  auto need = [](std::optional<int> v, const char* name) {
    if (!v) throw UsageError(std::string("--") + name + " is required for this family");
    return *v;
  };
  switch (t.family) {
    case Family::I:
    case Family::IV:
      t.params = {need(m, "m"), need(n, "n")};
      break;
    case Family::II:
    case Family::III:
      t.params = {need(l, "l"), need(m, "m"), need(n, "n")};
      break;
    case Family::V:
      t.params = {need(n, "n")};
      break;
  }
  GeneratedPoset g;
  try {
    g = generate(t);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  std::cout << "# family " << describe(t) << "; basis edges " << g.edge_a.first << "<" << g.edge_a.second << " and "
            << g.edge_b.first << "<" << g.edge_b.second << "\n"
            << g.text;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Class groups, conic and MCM classes, and splitting NCCRs of Hibi rings"};
  app.require_subcommand(1);
  std::string format;
  std::string file;
  std::optional<std::string> tree, box, cert;

  auto add_format = [&](CLI::App* c, const std::string& def) {
    c->add_option("--format", format, "Output format, default " + def)->check(CLI::IsMember({"json", "tsv"}));
  };

  auto* analyze = app.add_subcommand("analyze", "Class group, relations, circuits and conic polytope");
  analyze->add_option("file", file, "Poset or cone file")->required();
  analyze->add_option("--tree", tree, "Spanning tree hint, e.g. e2,e3,e4");
  add_format(analyze, "json");

  auto* cls = app.add_subcommand("classify", "Match a rank-two poset to families I-V");
  cls->add_option("file", file)->required();
  add_format(cls, "json");

  auto* conic = app.add_subcommand("conic", "List conic classes");
  conic->add_option("file", file)->required();
  conic->add_option("--tree", tree, "Spanning tree hint, e.g. e2,e3,e4");
  add_format(conic, "tsv");

  auto* region = app.add_subcommand("mcm-region", "MCM classes over a box");
  region->add_option("file", file)->required();
  region->add_option("--box", box, "lo1,hi1[,lo2,hi2]");
  add_format(region, "tsv");

  auto* nccr = app.add_subcommand("nccr", "Splitting NCCR verification");
  nccr->require_subcommand(1);
  auto* verify = nccr->add_subcommand("verify", "Run the full pipeline on a poset");
  verify->add_option("file", file)->required();
  verify->add_option("--certificate", cert, "Write the certificate as JSON lines");
  add_format(verify, "json");

  std::string family;
  std::optional<int> gl, gm, gn, segre;
  auto* gen = app.add_subcommand("generate", "Emit a poset file for a family member");
  gen->add_option("--type", family, "I, II, III, IV or V");
  gen->add_option("--l", gl);
  gen->add_option("--m", gm);
  gen->add_option("--n", gn);
  gen->add_option("--segre", segre, "Two chains of m+1 covers each instead of a family");

  auto* z1 = app.add_subcommand("z1", "Class group Z: windows and mutations");
  z1->require_subcommand(1);
  auto* z1a = z1->add_subcommand("analyze", "beta, MCM interval, base window");
  z1a->add_option("file", file)->required();
  bool generators_only = false;
  Int radius = 2;
  auto* z1g = z1->add_subcommand("exchange-graph", "Exchange graph in DOT");
  z1g->add_option("file", file)->required();
  z1g->add_flag("--generators-only", generators_only);
  z1g->add_option("--radius", radius)->default_val(2);
  Int window_lo = 0;
  std::string end = "low";
  auto* z1m = z1->add_subcommand("mutate", "Mutate a window at one end");
  z1m->add_option("file", file)->required();
  z1m->add_option("--window-lo", window_lo)->required();
  z1m->add_option("--end", end)->check(CLI::IsMember({"low", "high"}))->default_val("low");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*gen) {
      if (!segre && family.empty()) throw UsageError("generate needs --type or --segre");
      return cmd_generate(family, gl, gm, gn, segre);
    }
    if (format.empty()) format = (*conic || *region) ? "tsv" : "json";
    auto in = load(file);
    if (*analyze) return cmd_analyze(in, tree, format);
    if (*cls) return cmd_classify(in, format);
    if (*conic) return cmd_conic(in, tree, format);
    if (*region) return cmd_mcm_region(in, box, format);
    if (*verify) return cmd_nccr_verify(in, cert, format);
    if (*z1a) return cmd_z1_analyze(in);
    if (*z1g) return cmd_z1_graph(in, generators_only, radius);
    if (*z1m) return cmd_z1_mutate(in, window_lo, end);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
