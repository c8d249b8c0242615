#include "vkt/cli/commands.hpp"

#include <algorithm>

#include "vkt/error.hpp"
#include "vkt/fusion.hpp"
#include "vkt/mvlaurent.hpp"

namespace vkt::cli {

namespace {

using nlohmann::json;

json big(const BigInt& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

json rational(Rational q) {
  q.canonicalize();
  return q.get_str();
}

json matrix(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(big(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

json weight(const Weight& w) { return w.coords(); }

json point(const TorusPoint& x) {
  json out = json::array();
  for (const auto& c : x.coords) out.push_back(rational(c));
  return out;
}

Weight parse_weight(const std::string& s, std::size_t rank) {
  std::string t;
  for (char c : s)
    if (c != '[' && c != ']' && c != '(' && c != ')' && c != ' ') t += c;
  std::vector<std::int64_t> v;
  std::size_t start = 0;
  while (start <= t.size() && !t.empty()) {
    const std::size_t end = std::min(t.find(',', start), t.size());
    const std::string tok = t.substr(start, end - start);
    std::size_t used = 0;
    try {
      v.push_back(std::stoll(tok, &used));
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != tok.size())
      throw Error(ErrorKind::InvalidArgument, "malformed weight '" + s + "'");
    start = end + 1;
  }
  if (v.size() != rank)
    throw Error(ErrorKind::InvalidArgument,
                "weight '" + s + "' needs " + std::to_string(rank) + " coordinates");
  return Weight(v);
}

std::int64_t parse_int(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw Error(ErrorKind::InvalidArgument, "malformed " + what + " '" + s + "'");
  return v;
}

void need_args(const JobSpec& spec, std::size_t n, const std::string& usage) {
  if (spec.args.size() != n) throw Error(ErrorKind::InvalidArgument, "usage: " + usage);
}

json group_info(const RootDatum& rd) {
  json factors = json::array();
  for (const auto& c : rd.components()) factors.push_back({{"name", c.name}, {"dual_coxeter", c.dual_coxeter}});
  return {{"description", rd.description()},
          {"rank", rd.rank()},
          {"semisimple_rank", rd.semisimple_rank()},
          {"weyl_order", rd.weyl_group().size()},
          {"simple_factors", factors}};
}

json twist_info(const Twisting& tw) {
  return {{"b", matrix(tw.b())},
          {"epsilon", tw.epsilon()},
          {"levels", tw.levels()},
          {"primitive", tw.primitive()},
          {"F_order", tw.order()},
          {"F_structure", AbelianGroup::from(tw.F()).to_string()}};
}

json conventions(const FusionRing& ring, const OrbitCensus& census) {
  const auto& rd = ring.root_datum();
  const auto& tw = ring.twisting();
  json le = json::array();
  for (const auto& q : tw.lambda_epsilon()) le.push_back(rational(q));
  json lambda0 = nullptr;
  if (ring.unit())
    lambda0 = {{"weight", weight(Weight(rd.rank()))}, {"orbit_representative", weight(ring.basis()[*ring.unit()])}};
  return {{"rho_tilde", weight(rd.rho_tilde())},
          {"rho_tilde_rule", rd.rho_tilde_rule()},
          {"lambda_0", lambda0},
          {"labels", "V_lambda is the class of the orbit of lambda + rho_tilde"},
          {"epsilon_convention", "coordinatewise-half"},
          {"lambda_epsilon", le},
          {"open_questions",
           {{"epsilon_trivial_on_coroots", tw.epsilon_trivial_on_coroots()},
            {"sign_trivial_nonfree", census.sign_trivial_nonfree.size()}}}};
}

json cmd_info(const FusionRing& ring) {
  const auto& rd = ring.root_datum();
  const auto& tw = ring.twisting();
  json hv = json::array();
  for (const auto& c : rd.components()) hv.push_back(c.dual_coxeter);
  return {{"rank", rd.rank()},
          {"weyl_order", rd.weyl_group().size()},
          {"dual_coxeter", hv},
          {"F_order", tw.order()},
          {"F_structure", AbelianGroup::from(tw.F()).to_string()},
          {"degree_parity", degree_parity(rd) ? "odd" : "even"},
          {"basis_size", ring.size()}};
}

json cmd_basis(const FusionRing& ring, const OrbitCensus& census) {
  json items = json::array();
  for (std::size_t a = 0; a < ring.size(); ++a)
    items.push_back({{"index", a},
                     {"lambda", weight(ring.transversal()[a])},
                     {"orbit_representative", weight(ring.basis()[a])},
                     {"sign", ring.basis_signs()[a]},
                     {"dimension", big(weyl_dimension(ring.root_datum(), ring.transversal()[a]))}});
  json nonfree = json::array();
  for (const auto& w : census.sign_trivial_nonfree) nonfree.push_back(weight(w));
  return {{"size", ring.size()},
          {"basis", items},
          {"unit", ring.unit() ? json(*ring.unit()) : json(nullptr)},
          {"orbits", census.orbits},
          {"free_orbits", census.free_orbits},
          {"sign_trivial_nonfree", nonfree}};
}

json cmd_classes(const FusionRing& ring, bool shadow) {
  json items = json::array();
  for (const auto& c : ring.classes()) {
    json item = {{"point", point(c.point)}, {"orbit_size", c.orbit_size}};
    if (shadow) {
      json coords = json::array();
      for (const auto& q : c.point.coords) coords.push_back(q.get_d());
      json chars = json::array();
      for (const auto& l : ring.transversal()) {
        const auto z = eval_character_at_point(ring.root_datum(), l, c.point, ring.class_order()).to_complex();
        chars.push_back({z.real(), z.imag()});
      }
      item["numeric_shadow"] = {{"point", coords}, {"characters", chars}};
    }
    items.push_back(item);
  }
  return {{"count", ring.classes().size()}, {"root_of_unity_order", ring.class_order()}, {"classes", items}};
}

json cmd_fuse(const FusionRing& ring, const JobSpec& spec) {
  need_args(spec, 2, "fuse WEIGHT WEIGHT");
  const std::size_t r = ring.root_datum().rank();
  const Weight l = parse_weight(spec.args[0], r), m = parse_weight(spec.args[1], r);
  if (!ring.twisting().primitive())
    throw Error(ErrorKind::NotPrimitive, "the fusion product needs a primitive twisting");
  const auto& N = ring.structure_constants();
  const auto cl = ring.coordinates(ring.class_from_weight(l));
  const auto cm = ring.coordinates(ring.class_from_weight(m));
  std::vector<std::int64_t> out(ring.size(), 0);
  for (std::size_t a = 0; a < ring.size(); ++a)
    for (std::size_t b = 0; b < ring.size(); ++b)
      if (cl[a] && cm[b])
        for (std::size_t c = 0; c < ring.size(); ++c) out[c] += cl[a] * cm[b] * N[a][b][c];
  json coeffs = json::object(), terms = json::array();
  for (std::size_t c = 0; c < ring.size(); ++c) {
    if (!out[c]) continue;
    coeffs[std::to_string(c)] = out[c];
    terms.push_back({{"index", c}, {"lambda", weight(ring.transversal()[c])}, {"coefficient", out[c]}});
  }
  return {{"lambda", weight(l)}, {"mu", weight(m)}, {"coefficients", coeffs}, {"terms", terms}};
}

json cmd_table(const FusionRing& ring) {
  const auto& N = ring.structure_constants();
  json entries = json::array(), labels = json::array();
  for (const auto& l : ring.transversal()) labels.push_back(weight(l));
  for (std::size_t a = 0; a < ring.size(); ++a)
    for (std::size_t b = 0; b < ring.size(); ++b)
      for (std::size_t c = 0; c < ring.size(); ++c)
        if (N[a][b][c]) entries.push_back({a, b, c, N[a][b][c]});
  return {{"size", ring.size()}, {"labels", labels}, {"entries", entries}};
}

json cmd_verify(const FusionRing& ring, const VerifyOptions& opt, bool& all_pass) {
  json suites = json::array();
  all_pass = true;
  for (const auto& s : run_verification(ring, opt)) {
    if (s.status == SuiteStatus::Fail) all_pass = false;
    suites.push_back({{"name", s.name},
                      {"status", to_string(s.status)},
                      {"checked", s.checked},
                      {"counterexamples", s.counterexamples},
                      {"note", s.note}});
  }
  return {{"all_pass", all_pass}, {"seed", opt.seed}, {"height", opt.height}, {"suites", suites}};
}

json laurent_matrix(const LaurentPoly (&m)[2][2]) {
  return json::array({json::array({m[0][0].to_string(), m[0][1].to_string()}),
                      json::array({m[1][0].to_string(), m[1][1].to_string()})});
}

std::string rho_string(const SymmetricPoly& p) {
  const auto c = p.rho_coordinates();
  if (c.empty()) return "0";
  std::string s;
  for (std::size_t k = c.size(); k-- > 0;) {
    if (!c[k]) continue;
    if (!s.empty()) s += c[k] > 0 ? " + " : " - ";
    else if (c[k] < 0) s += "-";
    const std::int64_t a = c[k] < 0 ? -c[k] : c[k];
    if (a != 1) s += std::to_string(a) + "*";
    s += "rho_" + std::to_string(k);
  }
  return s;
}

json cmd_example(const JobSpec& spec) {
  if (spec.args.size() != 2) throw Error(ErrorKind::InvalidArgument, "usage: example s3|u1|su2 N");
  const std::string which = spec.args[0];
  const std::int64_t n = parse_int(spec.args[1], "twist");
  if (which == "s3") {
    const auto r = mv_s3(n);
    return {{"example", "s3"},
            {"n", n},
            {"middle", matrix(r.middle)},
            {"K0", r.k0.to_string()},
            {"K1", r.k1.to_string()}};
  }
  if (which == "u1") {
    const int eps = spec.twist.epsilon.empty() ? 0 : static_cast<int>(spec.twist.epsilon[0] & 1);
    const auto r = mv_u1(n, eps);
    const auto u1 = root_datum_from_name("U(1)");
    const FusionRing ring(u1, twisting_from_level(u1, {n}, std::nullopt, {eps}));
    return {{"example", "u1"},
            {"n", n},
            {"epsilon", eps},
            {"middle", laurent_matrix(r.middle)},
            {"determinant", r.determinant.to_string()},
            {"relation", r.relation.to_string()},
            {"quotient", "Z[L, L^-1]/(" + r.relation.to_string() + ")"},
            {"kernel_zero", r.kernel_zero},
            {"rank", r.rank},
            {"orbit_basis_size", ring.size()}};
  }
  if (which == "su2") {
    const auto r = mv_su2(n);
    const auto su2 = root_datum_from_name("SU(2)");
    const FusionRing ring(su2, twisting_from_level(su2, {n}));
    json middle = json::array();
    for (const auto& row : r.middle) middle.push_back({rho_string(row[0]), rho_string(row[1])});
    return {{"example", "su2"},
            {"n", n},
            {"top", {r.top[0].to_string(), r.top[1].to_string()}},
            {"middle", middle},
            {"relation", rho_string(r.relation)},
            {"quotient", "R(SU(2))/(" + rho_string(r.relation) + ")"},
            {"kernel_zero", r.kernel_zero},
            {"rank", r.rank},
            {"orbit_basis_size", ring.size()}};
  }
  throw Error(ErrorKind::InvalidArgument, "unknown example '" + which + "' (s3, u1, su2)");
}

void flatten(const json& j, const std::string& path, std::string& out) {
  if (j.is_object() || j.is_array()) {
    if (j.empty()) {
      out += path + "\t" + j.dump() + "\n";
      return;
    }
    if (j.is_object()) {
      for (const auto& [k, v] : j.items()) flatten(v, path.empty() ? k : path + "." + k, out);
    } else {
      for (std::size_t i = 0; i < j.size(); ++i)
        flatten(j[i], path.empty() ? std::to_string(i) : path + "." + std::to_string(i), out);
    }
    return;
  }
  out += path + "\t" + (j.is_string() ? j.get<std::string>() : j.dump()) + "\n";
}

}  // namespace

Outcome run_job(const JobSpec& spec, const RunOptions& opt) {
  Outcome o;
  json& rep = o.report;
  rep["tool"] = kToolName;
  rep["version"] = kVersion;
  rep["command"] = spec.command;
  rep["spec"] = emit_jobspec(spec);
  if (spec.command == "example") {
    rep["result"] = cmd_example(spec);
    return o;
  }
  static const std::vector<std::string> known = {"info", "basis", "classes", "fuse", "table", "verify"};
  if (std::find(known.begin(), known.end(), spec.command) == known.end())
    throw Error(ErrorKind::InvalidArgument, "unknown command '" + spec.command + "'");
  if (spec.group.name.empty() && !spec.group.cartan && !spec.group.simple_roots && spec.group.torus_rank == 0)
    throw Error(ErrorKind::InvalidArgument, "no group given");

  const RootDatum rd = root_datum_from_spec(spec.group);
  const Twisting tw = twisting_from_spec(rd, spec.twist);
  const FusionRing ring(rd, tw);
  const OrbitCensus census = orbit_census(rd, tw);
  rep["group"] = group_info(rd);
  rep["twist"] = twist_info(tw);
  rep["conventions"] = conventions(ring, census);

  if (spec.command == "info") {
    rep["result"] = cmd_info(ring);
  } else if (spec.command == "basis") {
    rep["result"] = cmd_basis(ring, census);
  } else if (spec.command == "classes") {
    rep["result"] = cmd_classes(ring, opt.numeric_shadow);
  } else if (spec.command == "fuse") {
    rep["result"] = cmd_fuse(ring, spec);
  } else if (spec.command == "table") {
    rep["result"] = cmd_table(ring);
  } else {
    bool pass = true;
    rep["result"] = cmd_verify(ring, opt.verify, pass);
    o.exit_code = pass ? 0 : 1;
  }
  return o;
}

json error_report(const std::exception& e) {
  json err = {{"kind", "Internal"}, {"message", e.what()}};
  if (const auto* p = dynamic_cast<const ParseError*>(&e)) {
    err["kind"] = std::string(to_string(p->kind()));
    err["line"] = p->line();
    err["column"] = p->column();
  } else if (const auto* v = dynamic_cast<const Error*>(&e)) {
    err["kind"] = std::string(to_string(v->kind()));
  } else if (dynamic_cast<const std::overflow_error*>(&e)) {
    err["kind"] = "Overflow";
  }
  return {{"tool", kToolName}, {"version", kVersion}, {"error", err}};
}

std::string to_tsv(const json& j) {
  std::string out;
  flatten(j, "", out);
  return out;
}

}  // namespace vkt::cli
