#include "rigidkit/report.hpp"

#include <algorithm>
#include <sstream>

#include "document_json.hpp"
#include "rigidkit/enumeration.hpp"
#include "rigidkit/error.hpp"
#include "rigidkit/numeric.hpp"

namespace rigidkit {
namespace {

using detail::ordered_json;

struct CheckRecord {
  explicit CheckRecord(std::string n) : name(std::move(n)) {}

  std::string name;
  bool pass = false;
  std::string detail;
  ordered_json values = ordered_json::object();
};

std::string point_str(const Point& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ", ";
    s += p[i].str();
  }
  return s + ")";
}

// (x, y, 0, ..., 0) in R^d.
Point planar(int d, Rational x, Rational y) {
  Point p(d);
  p[0] = std::move(x);
  p[1] = std::move(y);
  return p;
}

// Expected values are kept as the literal fractions they are usually quoted
// in (e.g. 2005/400) and compared after parsing.
ordered_json exact_value(const Rational& actual, std::string_view expected) {
  return ordered_json{{"value", actual.str()}, {"expected", std::string(expected)},
                      {"equal", actual == Rational::parse(expected)}};
}

std::string render(const std::string& header, const std::vector<CheckRecord>& checks,
                   const std::vector<std::string>& footer, bool all_pass) {
  std::ostringstream os;
  os << header << "\n";
  for (const CheckRecord& c : checks) os << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << ": " << c.detail << "\n";
  for (const std::string& line : footer) os << line << "\n";
  os << "status: " << (all_pass ? "PASS" : "FAIL") << "\n";
  return os.str();
}

ordered_json checks_json(const std::vector<CheckRecord>& checks) {
  ordered_json arr = ordered_json::array();
  for (const CheckRecord& c : checks) {
    arr.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}, {"values", c.values}});
  }
  return arr;
}

ordered_json hyperplane_json(const Hyperplane& h) {
  return {{"normal", detail::point_to_json(h.normal())}, {"offset", h.offset().str()}};
}

std::string hyperplane_str(const Hyperplane& h) {
  return "<" + point_str(h.normal()) + ", x> = " + h.offset().str();
}

}  // namespace

CommandOutput paper_verify(int dim, OutputFormat format, int max_dim) {
  CommandOutput out;
  if (dim < 2 || dim > max_dim) {
    out.exit_code = kExitUsage;
    out.text = "error: --dim must be in [2, " + std::to_string(max_dim) + "], got " + std::to_string(dim) +
               " (raise the cap with RIGIDKIT_MAX_DIM)\n";
    return out;
  }
  const int d = dim;
  const FamilyInstance fi = family_instance(d);
  const Configuration p = paper_configuration(d, PaperConfig::P);
  const Configuration q = paper_configuration(d, PaperConfig::Q);
  const AffineMap a = paper_affine_map(d);
  const Configuration ap = apply_affine(a, p);
  const Configuration r = paper_configuration(d, PaperConfig::R);
  const Configuration s = paper_configuration(d, PaperConfig::S);
  const Configuration t = paper_configuration(d, PaperConfig::T);
  std::vector<CheckRecord> checks;

  {
    CheckRecord c{"family-structure"};
    const std::size_t expected_n = (std::size_t{1} << (d - 1)) + 3;
    const Edge filter(2, 3);
    const bool sizes = fi.full.vertex_count() == expected_n && fi.reduced.vertices() == fi.full.vertices();
    const bool split = !fi.reduced.edges().count(filter) &&
                       fi.full.without_edges({filter}).edges() == fi.reduced.edges() && fi.full.has_edge(2, 3);
    const bool base = fi.full.is_clique(fi.base);
    bool pendants = true;
    for (VertexId v : fi.pendants) {
      std::vector<VertexId> expected = pendant_attachments(d, v);
      std::sort(expected.begin(), expected.end());
      pendants = pendants && fi.reduced.neighbors(v) == expected;
    }
    c.pass = sizes && split && base && pendants;
    c.detail = "|V| = " + std::to_string(fi.full.vertex_count()) + " = 2^(d-1)+3, |E(G_d)| = " +
               std::to_string(fi.full.edge_count()) + " = |E(reduced)| + 1, base of " +
               std::to_string(fi.base.size()) + " complete";
    c.values = {{"vertices", fi.full.vertex_count()},
                {"edges_full", fi.full.edge_count()},
                {"edges_reduced", fi.reduced.edge_count()},
                {"base_size", fi.base.size()}};
    checks.push_back(std::move(c));
  }

  {
    CheckRecord c{"mirror-q"};
    const auto [h2, h3] = symmetry_hyperplanes(d);
    bool on_plane = true;
    for (VertexId v : pendant_attachments(d, 2)) on_plane = on_plane && h2.contains(p.at(v));
    for (VertexId v : pendant_attachments(d, 3)) on_plane = on_plane && h3.contains(p.at(v));
    c.pass = on_plane && reflect(p.at(2), h2) == q.at(2) && reflect(p.at(3), h3) == q.at(3);
    c.detail = "q2 = mirror of p2 in " + hyperplane_str(h2) + ", q3 = mirror of p3 in " + hyperplane_str(h3);
    c.values = {{"hyperplane_2", hyperplane_json(h2)}, {"hyperplane_3", hyperplane_json(h3)}};
    checks.push_back(std::move(c));
  }

  const Framework gp(fi.full, p);
  const Framework gq(fi.full, q);
  {
    CheckRecord c{"p-q-equivalent"};
    c.pass = is_equivalent(gp, gq);
    const Rational len23 = squared_distance(p.at(2), p.at(3));
    c.detail = "every bar of G_d(p) and G_d(q) has the same squared length, e.g. |p2-p3|^2 = |q2-q3|^2 = " +
               len23.str();
    c.values = {{"p2p3", len23.str()}, {"q2q3", squared_distance(q.at(2), q.at(3)).str()}};
    checks.push_back(std::move(c));
  }

  {
    CheckRecord c{"p-q-not-congruent"};
    const Rational pp = squared_distance(p.at(2), p.at(5));
    const Rational qq = squared_distance(q.at(2), q.at(5));
    const std::string shift = d == 2 ? "" : " + " + std::to_string(d - 2);
    const Rational exp_p = Rational::parse("29/16") + (d - 2);
    const Rational exp_q = Rational::parse("2005/400") + (d - 2);
    c.pass = !is_congruent(gp, gq) && pp == exp_p && qq == exp_q && pp != qq;
    c.detail = "|p2-p5|^2 = " + pp.str() + " (expected 29/16" + shift + "), |q2-q5|^2 = " + qq.str() +
               " (expected 2005/400" + shift + ")";
    c.values = {{"p2p5", {{"value", pp.str()}, {"expected", "29/16" + shift}, {"equal", pp == exp_p}}},
                {"q2q5", {{"value", qq.str()}, {"expected", "2005/400" + shift}, {"equal", qq == exp_q}}}};
    checks.push_back(std::move(c));
  }

  {
    CheckRecord c{"mirror-r3-s2"};
    const Point x3 = planar(d, Rational(11, 20), Rational(-1, 20));
    const Point x2 = planar(d, Rational(-3, 4), Rational(3, 4));
    c.pass = r.at(3) == x3 && s.at(2) == x2 && s.at(3) == x3 && t.at(2) == x2 && t.at(3) == ap.at(3);
    c.detail = "by reflection r3 = s3 = " + point_str(r.at(3)) + ", s2 = t2 = " + point_str(s.at(2));
    c.values = {{"r3", detail::point_to_json(r.at(3))}, {"s2", detail::point_to_json(s.at(2))}};
    checks.push_back(std::move(c));
  }

  {
    CheckRecord c{"pendant-distances"};
    const std::vector<std::pair<std::string, const Configuration*>> configs{
        {"Ap", &ap}, {"r", &r}, {"s", &s}, {"t", &t}};
    const std::vector<std::string> expected{"173/100", "73/100", "233/100", "333/100"};
    std::vector<Rational> values;
    bool match = true;
    for (std::size_t i = 0; i < configs.size(); ++i) {
      const Rational v = squared_distance(configs[i].second->at(2), configs[i].second->at(3));
      c.values[configs[i].first] = exact_value(v, expected[i]);
      match = match && v == Rational::parse(expected[i]);
      c.detail += (i ? ", " : "") + std::string("|") + configs[i].first + "2-" + configs[i].first + "3|^2 = " +
                  v.str();
      values.push_back(v);
    }
    std::vector<Rational> sorted = values;
    std::sort(sorted.begin(), sorted.end());
    const bool distinct = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    c.pass = match && distinct;
    c.detail += distinct ? "; pairwise distinct" : "; NOT pairwise distinct";
    checks.push_back(std::move(c));
  }

  {
    CheckRecord c{"enumeration-Ap"};
    const PendantStructure ps = detect_pendant_structure(Framework(fi.reduced, ap), fi.base);
    const auto classes = enumerate_realizations(ps);
    const std::vector<std::pair<std::string, const Configuration*>> known{
        {"Ap", &ap}, {"r", &r}, {"s", &s}, {"t", &t}};
    std::vector<std::string> matched;
    for (const RealizationClass& rc : classes) {
      const auto it = std::find_if(known.begin(), known.end(), [&](const auto& k) { return *k.second == rc.config; });
      matched.push_back(it == known.end() ? "?" : it->first);
    }
    std::vector<std::string> sorted = matched;
    std::sort(sorted.begin(), sorted.end());
    c.pass = classes.size() == 4 && sorted == std::vector<std::string>{"Ap", "r", "s", "t"};
    c.detail = std::to_string(classes.size()) + " realizations of the reduced framework on A p, equal to";
    for (const std::string& m : matched) c.detail += " " + m;
    c.values = {{"count", classes.size()}, {"classes", matched}};
    checks.push_back(std::move(c));
  }

  const std::vector<VertexId> base = fi.base;
  RigidityVerdict vp = decide_global_rigidity(detect_pendant_structure(gp, base));
  {
    CheckRecord c{"verdict-p"};
    const bool witness_is_q = vp.witness && is_congruent(*vp.witness, q);
    const bool witness_valid = vp.witness && is_equivalent(gp, Framework(fi.full, *vp.witness)) &&
                               !is_congruent(p, *vp.witness);
    c.pass = vp.status == RigidityStatus::NotGloballyRigid && witness_is_q && witness_valid && vp.survivors.size() == 2;
    c.detail = std::string("G_d(p) is ") + status_name(vp.status) + " (" + std::to_string(vp.realizations) +
               " realizations, " + std::to_string(vp.survivors.size()) + " survivors" +
               (witness_is_q ? ", witness congruent to q)" : ")");
    c.values = {{"status", status_name(vp.status)},
                {"realizations", vp.realizations},
                {"survivors", vp.survivors.size()},
                {"witness_congruent_to_q", witness_is_q}};
    checks.push_back(std::move(c));
  }

  RigidityVerdict va = decide_global_rigidity(detect_pendant_structure(Framework(fi.full, ap), base));
  {
    CheckRecord c{"verdict-Ap"};
    c.pass = va.status == RigidityStatus::GloballyRigid && !va.witness && va.survivors.size() == 1;
    c.detail = std::string("G_d(Ap) is ") + status_name(va.status) + " (" + std::to_string(va.realizations) +
               " realizations, " + std::to_string(va.survivors.size()) + " survivor)";
    c.values = {{"status", status_name(va.status)},
                {"realizations", va.realizations},
                {"survivors", va.survivors.size()}};
    checks.push_back(std::move(c));
  }

  const bool all_pass = std::all_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.pass; });
  out.exit_code = all_pass ? kExitOk : kExitFailed;
  if (vp.witness) out.witness = FrameworkDocument{Framework(fi.full, *vp.witness), base};

  if (format == OutputFormat::Json) {
    ordered_json j;
    j["command"] = "paper-verify";
    j["dim"] = d;
    j["vertices"] = fi.full.vertex_count();
    j["edges"] = fi.full.edge_count();
    j["checks"] = checks_json(checks);
    j["verdicts"] = {{"G_d(p)", status_name(vp.status)}, {"G_d(Ap)", status_name(va.status)}};
    j["status"] = all_pass ? "pass" : "fail";
    out.text = j.dump(2) + "\n";
  } else {
    const std::string header = "paper-verify d=" + std::to_string(d) + ": " +
                               std::to_string(fi.full.vertex_count()) + " vertices, " +
                               std::to_string(fi.full.edge_count()) + " edges";
    out.text = render(header, checks,
                      {std::string("verdict G_d(p):  ") + status_name(vp.status),
                       std::string("verdict G_d(Ap): ") + status_name(va.status)},
                      all_pass);
  }
  return out;
}

FrameworkDocument generate_document(int dim, PaperConfig label, bool contract) {
  const bool contracted = label == PaperConfig::R || label == PaperConfig::S || label == PaperConfig::T;
  if (contract && contracted) {
    throw Error(ErrorCode::InvalidArgument,
                std::string("configuration ") + config_name(label) + " is already in the contracted frame");
  }
  const FamilyInstance fi = family_instance(dim);
  Configuration c = paper_configuration(dim, label);
  if (contract) c = apply_affine(paper_affine_map(dim), c);
  return FrameworkDocument{Framework(fi.full, std::move(c)), fi.base};
}

const char* check_name(Check c) {
  switch (c) {
    case Check::EquivalenceVs: return "equivalence-vs";
    case Check::CongruenceVs: return "congruence-vs";
    case Check::Infinitesimal: return "infinitesimal";
    case Check::GenericGlobal: return "generic-global";
    case Check::Enumerate: return "enumerate";
    case Check::Decide: return "decide";
  }
  return "?";
}

std::vector<Check> parse_checks(std::string_view list) {
  static constexpr Check kAll[] = {Check::EquivalenceVs, Check::CongruenceVs, Check::Infinitesimal,
                                   Check::GenericGlobal, Check::Enumerate, Check::Decide};
  std::vector<Check> out;
  std::size_t start = 0;
  while (start <= list.size()) {
    const std::size_t comma = std::min(list.find(',', start), list.size());
    const std::string_view item = list.substr(start, comma - start);
    if (!item.empty()) {
      const auto it = std::find_if(std::begin(kAll), std::end(kAll), [&](Check c) { return item == check_name(c); });
      if (it == std::end(kAll)) throw Error(ErrorCode::InvalidArgument, "unknown check '" + std::string(item) + "'");
      if (std::find(out.begin(), out.end(), *it) == out.end()) out.push_back(*it);
    }
    start = comma + 1;
  }
  if (out.empty()) throw Error(ErrorCode::InvalidArgument, "no checks requested");
  return out;
}

namespace {

ordered_json run_check(Check check, const FrameworkDocument& doc, const AnalyzeOptions& opt, std::string& summary,
                       std::optional<FrameworkDocument>& witness) {
  const Framework& f = doc.framework;
  auto need_versus = [&]() -> const Framework& {
    if (!opt.versus) throw Error(ErrorCode::InvalidArgument, "this check needs a --versus framework");
    return *opt.versus;
  };
  auto need_base = [&]() -> std::vector<VertexId> {
    if (opt.base) return *opt.base;
    if (doc.base) return *doc.base;
    throw Error(ErrorCode::InvalidArgument, "this check needs a base (--base or the document's \"base\")");
  };

  switch (check) {
    case Check::EquivalenceVs: {
      const Framework& g = need_versus();
      const bool eq = is_equivalent(f, g);
      ordered_json mismatches = ordered_json::array();
      for (const Edge& e : f.graph().edges()) {
        const Rational a = squared_distance(f.config().at(e.u), f.config().at(e.v));
        const Rational b = squared_distance(g.config().at(e.u), g.config().at(e.v));
        if (a != b) mismatches.push_back({{"edge", {e.u, e.v}}, {"self", a.str()}, {"versus", b.str()}});
      }
      summary = eq ? "equivalent" : "not equivalent (" + std::to_string(mismatches.size()) + " bars differ)";
      return {{"equivalent", eq}, {"mismatched_edges", mismatches}};
    }
    case Check::CongruenceVs: {
      const Framework& g = need_versus();
      const bool cong = is_congruent(f, g);
      ordered_json result{{"congruent", cong}};
      if (!cong) {
        const auto ids = f.graph().vertices();
        for (std::size_t i = 0; i < ids.size() && result.size() == 1; ++i) {
          for (std::size_t j = i + 1; j < ids.size(); ++j) {
            const Rational a = squared_distance(f.config().at(ids[i]), f.config().at(ids[j]));
            const Rational b = squared_distance(g.config().at(ids[i]), g.config().at(ids[j]));
            if (a != b) {
              result["first_differing_pair"] = {{"pair", {ids[i], ids[j]}}, {"self", a.str()}, {"versus", b.str()}};
              summary = "not congruent: |" + std::to_string(ids[i]) + "-" + std::to_string(ids[j]) + "|^2 = " +
                        a.str() + " vs " + b.str();
              break;
            }
          }
        }
      } else {
        summary = "congruent";
      }
      return result;
    }
    case Check::Infinitesimal: {
      const numeric::RealConfiguration rc = numeric::to_real(f.config());
      const bool rigid = numeric::is_infinitesimally_rigid(f.graph(), rc);
      const auto rank = numeric::numeric_rank(numeric::rigidity_matrix(f.graph(), rc));
      const long n = static_cast<long>(rc.ids.size());
      const long d = rc.dim;
      summary = std::string(rigid ? "infinitesimally rigid" : "not infinitesimally rigid") + " (rank " +
                std::to_string(rank) + " of " + std::to_string(d * n - d * (d + 1) / 2) + ")";
      return {{"infinitesimally_rigid", rigid},
              {"rank", rank},
              {"expected_rank", d * n - d * (d + 1) / 2},
              {"rows", f.graph().edge_count()},
              {"cols", d * n}};
    }
    case Check::GenericGlobal: {
      const auto r = numeric::generic_global_rigidity(f.graph(), f.dim(), opt.trials, opt.seed);
      summary = std::string(r.certified ? "generically globally rigid" : "not certified") + " (" + r.caveat +
                ", seed " + std::to_string(r.seed) + ")";
      return {{"generically_globally_rigid", r.certified},
              {"caveat", r.caveat},
              {"trials", opt.trials},
              {"trials_run", r.trials_run},
              {"seed", r.seed}};
    }
    case Check::Enumerate: {
      const PendantStructure ps = detect_pendant_structure(f, need_base());
      const auto classes = enumerate_realizations(ps);
      ordered_json list = ordered_json::array();
      for (const RealizationClass& rc : classes) {
        ordered_json pendants = ordered_json::object();
        for (VertexId v : ps.pendants) pendants[std::to_string(v)] = detail::point_to_json(rc.config.at(v));
        ordered_json filters = ordered_json::object();
        for (const Edge& e : ps.filter_edges) {
          filters[e.str()] = squared_distance(rc.config.at(e.u), rc.config.at(e.v)).str();
        }
        list.push_back({{"mask", rc.reflection_mask}, {"pendants", pendants}, {"filter_lengths", filters}});
      }
      summary = std::to_string(classes.size()) + " realization classes of the reduced framework";
      return {{"pendants", ps.pendants}, {"base", ps.base}, {"realizations", list}};
    }
    case Check::Decide: {
      const PendantStructure ps = detect_pendant_structure(f, need_base());
      const RigidityVerdict v = decide_global_rigidity(ps);
      summary = std::string(status_name(v.status)) + " (" + std::to_string(v.realizations) + " realizations, " +
                std::to_string(v.survivors.size()) + " survivors)";
      ordered_json result{{"status", status_name(v.status)},
                          {"realizations", v.realizations},
                          {"survivors", v.survivors.size()}};
      if (v.witness) {
        witness = FrameworkDocument{Framework(f.graph(), *v.witness), ps.base};
        result["witness"] = detail::document_to_json(*witness);
        summary += "; witness found";
      }
      return result;
    }
  }
  throw Error(ErrorCode::InvalidArgument, "unknown check");
}

}  // namespace

CommandOutput analyze(const FrameworkDocument& doc, const AnalyzeOptions& options) {
  CommandOutput out;
  ordered_json results = ordered_json::array();
  std::ostringstream text;
  const Framework& f = doc.framework;
  text << "analyze: dim " << f.dim() << ", " << f.graph().vertex_count() << " vertices, "
       << f.graph().edge_count() << " edges\n";
  bool any_error = false;
  for (Check check : options.checks) {
    std::string summary;
    ordered_json entry{{"check", check_name(check)}};
    try {
      entry["result"] = run_check(check, doc, options, summary, out.witness);
      entry["ok"] = true;
      text << "[ok] " << check_name(check) << ": " << summary << "\n";
    } catch (const Error& e) {
      any_error = true;
      entry["ok"] = false;
      entry["error"] = {{"code", error_code_name(e.code())}, {"message", e.what()}};
      text << "[error] " << check_name(check) << ": " << error_code_name(e.code()) << ": " << e.what() << "\n";
    }
    results.push_back(std::move(entry));
  }
  out.exit_code = any_error ? kExitFailed : kExitOk;
  text << "status: " << (any_error ? "errors" : "complete") << "\n";

  if (options.format == OutputFormat::Json) {
    ordered_json j;
    j["command"] = "analyze";
    j["input"] = {{"dim", f.dim()},
                  {"vertices", f.graph().vertex_count()},
                  {"edges", f.graph().edge_count()}};
    if (options.base) {
      j["input"]["base"] = *options.base;
    } else if (doc.base) {
      j["input"]["base"] = *doc.base;
    }
    j["checks"] = std::move(results);
    j["status"] = any_error ? "errors" : "complete";
    out.text = j.dump(2) + "\n";
  } else {
    out.text = text.str();
  }
  return out;
}

}  // namespace rigidkit
