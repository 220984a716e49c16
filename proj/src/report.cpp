#include "liereps/report.hpp"

#include "liereps/acceptance.hpp"
#include "liereps/catalog.hpp"
#include "liereps/covering.hpp"
#include "liereps/error.hpp"
#include "liereps/params.hpp"
#include "liereps/rootdata.hpp"
#include "liereps/torus.hpp"

#include "json.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace liereps {

using Json = nlohmann::ordered_json;

namespace {

const char* const kSchema = R"({"name"?: string, "A": [[int]], "Acheck": [[int]], "F0": [[int]], "q"?: int})";

Integer json_integer(const Json& v, const std::string& where) {
  if (v.is_number_integer()) {
    if (v.is_number_unsigned()) return Integer(std::to_string(v.get<std::uint64_t>()));
    return Integer(std::to_string(v.get<std::int64_t>()));
  }
  throw UsageError(where + ": expected an integer");
}

IntMatrix json_matrix(const Json& v, const std::string& key, std::optional<std::size_t> cols) {
  if (!v.is_array()) throw UsageError("\"" + key + "\": expected an array of rows");
  std::vector<IntVector> rows;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Json& row = v[i];
    std::string where = "\"" + key + "\" row " + std::to_string(i + 1);
    if (!row.is_array()) throw UsageError(where + ": expected an array of integers");
    IntVector r;
    for (std::size_t j = 0; j < row.size(); ++j)
      r.push_back(json_integer(row[j], where + " entry " + std::to_string(j + 1)));
    if (!rows.empty() && r.size() != rows.front().size())
      throw UsageError("\"" + key + "\" is not rectangular: row " + std::to_string(i + 1) +
                       " has " + std::to_string(r.size()) + " entries, row 1 has " +
                       std::to_string(rows.front().size()));
    rows.push_back(std::move(r));
  }
  if (rows.empty()) return IntMatrix(0, cols.value_or(0));
  return IntMatrix::from_rows(rows, rows.front().size());
}

Json integer_json(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

Json matrix_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(integer_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json group_json(const FiniteAbelianGroup& g) {
  Json factors = Json::array(), gens = Json::array();
  for (const auto& d : g.invariant_factors()) factors.push_back(d.get_str());
  for (const auto& t : g.generators()) {
    Json coords = Json::array();
    for (const auto& c : t.coords()) coords.push_back(c.get_str());
    gens.push_back(std::move(coords));
  }
  return Json{{"structure", g.structure()},
              {"order", g.order().get_str()},
              {"invariant_factors", factors},
              {"generators", gens}};
}

std::string format_matrix(const IntMatrix& m, const std::string& indent = "  ") {
  if (m.rows() == 0) return indent + "(empty)\n";
  std::size_t width = 1;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) width = std::max(width, m(i, j).get_str().size());
  std::ostringstream out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << indent << '[';
    for (std::size_t j = 0; j < m.cols(); ++j)
      out << (j ? " " : "") << std::setw(static_cast<int>(width)) << m(i, j).get_str();
    out << "]\n";
  }
  return out.str();
}

std::string group_line(const FiniteAbelianGroup& g) {
  std::string s = g.structure() + ", order " + g.order().get_str();
  if (!g.is_trivial()) {
    s += ", generated by";
    for (const auto& t : g.generators()) s += " " + t.str();
  }
  return s;
}

std::string prime_label(const std::optional<Integer>& p) { return p ? p->get_str() : "any"; }

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

struct Context {
  RootDatum datum;
  FrobeniusDatum frobenius;
};

Context validate(const InputSpec& in, const std::optional<Integer>& q) {
  RootDatum d = validate_root_datum(in.A, in.Acheck);
  return {d, validate_frobenius(d, in.F0, q)};
}

void describe_datum(const InputSpec& in, const Context& ctx, std::ostringstream& out, Json& j) {
  const RootDatum& d = ctx.datum;
  TwistedComponents tc = twisted_components(d, ctx.frobenius);
  std::string type = d.classification().str();
  if (type.empty()) type = "torus";
  std::string comps;
  for (const auto& c : tc.labels) comps += (comps.empty() ? "" : ", ") + c;

  if (in.name) out << "name: " << *in.name << "\n";
  out << "rank " << d.rank() << ", semisimple rank " << d.ss_rank() << "\n";
  out << "type: " << type << "\n";
  out << "Cartan matrix:\n" << format_matrix(d.cartan());
  out << "sigma: " << cycle_string(ctx.frobenius.sigma) << ", F0 of order "
      << ctx.frobenius.order << "\n";
  out << "components: " << (comps.empty() ? "none" : comps) << "; central torus of rank "
      << tc.torus_rank << "\n";

  if (in.name) j["name"] = *in.name;
  j["rank"] = d.rank();
  j["semisimple_rank"] = d.ss_rank();
  j["classification"] = type;
  j["cartan"] = matrix_json(d.cartan());
  j["sigma"] = cycle_string(ctx.frobenius.sigma);
  j["frobenius_order"] = ctx.frobenius.order;
  j["components"] = tc.labels;
  j["torus_rank"] = tc.torus_rank;
}

void describe_covering(const CoveringData& cov, std::ostringstream& out, Json& j) {
  FiniteAbelianGroup k = kernel_of_covering(cov);
  out << "M^tr:\n" << format_matrix(cov.Mtr());
  out << "tilde F0:\n" << format_matrix(cov.tilde_F0);
  out << "modulus m = " << cov.modulus_m.get_str() << "\n";
  out << "K = " << group_line(k) << "\n";
  j["covering"] = Json{{"Mtr", matrix_json(cov.Mtr())},
                       {"tilde_F0", matrix_json(cov.tilde_F0)},
                       {"modulus", cov.modulus_m.get_str()},
                       {"kernel", group_json(k)}};
}

std::string constraint_lines(const WeightConstraintSystem& sys) {
  if (sys.W.rows() == 0) return "  no constraint\n";
  std::ostringstream out;
  for (std::size_t i = 0; i < sys.W.rows(); ++i) {
    out << "  " << to_string(sys.W.row(i)) << " . lambda = 0 mod " << sys.modulus.get_str()
        << "\n";
  }
  return out.str();
}

Json summary_json(const ParamSummary& ps, const Integer& q, const std::optional<Integer>& p) {
  Integer residue = q % ps.covering.modulus_m;
  return Json{{"q", q.get_str()},
              {"p", p ? p->get_str() : std::string()},
              {"residue", residue.get_str()},
              {"kernel_p", group_json(kernel_of_covering(ps.covering, p))},
              {"setA",
               {{"constraints", matrix_json(ps.setA.W)},
                {"modulus", ps.setA.modulus.get_str()},
                {"count", ps.countA.get_str()}}},
              {"setB", group_json(ps.setB)},
              {"setC", group_json(ps.setC)},
              {"total", ps.total.get_str()}};
}

void describe_summary(const ParamSummary& ps, const Integer& q, const std::optional<Integer>& p,
                      std::ostringstream& out) {
  out << "q = " << q.get_str() << " (p = " << prime_label(p) << ", q = "
      << Integer(q % ps.covering.modulus_m).get_str() << " mod " << ps.covering.modulus_m.get_str()
      << ")\n";
  out << "K restricted to p'-elements = " << group_line(kernel_of_covering(ps.covering, p))
      << "\n";
  out << "set (A): lambda in [0, q)^" << ps.setA.l << " with\n" << constraint_lines(ps.setA);
  out << "  count " << ps.countA.get_str() << "\n";
  out << "set (B): " << group_line(ps.setB) << "\n";
  out << "set (C): " << group_line(ps.setC) << "\n";
  out << "total " << ps.total.get_str() << "\n";
}

}  // namespace

Integer parse_integer(const std::string& s, const char* what) {
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (s.size() == start || !std::all_of(s.begin() + static_cast<std::ptrdiff_t>(start), s.end(),
                                        [](unsigned char c) { return std::isdigit(c); }))
    throw UsageError(std::string(what) + ": not an integer: '" + s + "'");
  return Integer(s[0] == '+' ? s.substr(1) : s);
}

InputSpec parse_input(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::string msg = e.what();
    auto cut = msg.find("parse error");
    if (cut != std::string::npos) msg = msg.substr(cut);
    throw UsageError("malformed JSON, " + msg + " (byte " + std::to_string(e.byte) + ")");
  }
  if (!doc.is_object()) throw UsageError(std::string("input must be an object ") + kSchema);
  for (const auto& [key, value] : doc.items()) {
    if (key != "name" && key != "A" && key != "Acheck" && key != "F0" && key != "q")
      throw UsageError("unknown key \"" + key + "\"; expected " + kSchema);
  }
  for (const char* key : {"A", "Acheck", "F0"})
    if (!doc.contains(key)) throw UsageError(std::string("missing key \"") + key + "\"");

  InputSpec in;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw UsageError("\"name\": expected a string");
    in.name = doc["name"].get<std::string>();
  }
  in.F0 = json_matrix(doc["F0"], "F0", std::nullopt);
  in.A = json_matrix(doc["A"], "A", in.F0.rows());
  in.Acheck = json_matrix(doc["Acheck"], "Acheck", in.A.cols());
  if (doc.contains("q")) in.q = json_integer(doc["q"], "\"q\"");
  return in;
}

InputSpec load_input(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << file.rdbuf();
  return parse_input(buf.str());
}

Report analyze(const InputSpec& in, const std::optional<Integer>& q_arg,
               const std::vector<Integer>& sample_q) {
  std::optional<Integer> q = q_arg ? q_arg : in.q;
  Context ctx = validate(in, q);
  std::ostringstream out;
  Json j;
  describe_datum(in, ctx, out, j);
  CoveringData cov = build_covering(ctx.datum, ctx.frobenius);
  describe_covering(cov, out, j);

  Report r;
  if (q) {
    ParamSummary ps = parameterize(ctx.datum, ctx.frobenius);
    describe_summary(ps, *q, ctx.frobenius.p, out);
    j["parameters"] = summary_json(ps, *q, ctx.frobenius.p);
    j["total"] = ps.total.get_str();
    r.total = ps.total.get_str();
  } else {
    out << "residue classes of q mod " << cov.modulus_m.get_str() << ":\n";
    Json rows = Json::array();
    for (const auto& s : residue_analysis(cov)) {
      Json row{{"c", s.c.get_str()}, {"skipped", s.skipped}};
      out << "  c = " << s.c.get_str() << ": ";
      if (s.skipped) {
        out << "skipped (" << s.skip_reason << ")\n";
        row["reason"] = s.skip_reason;
        rows.push_back(std::move(row));
        continue;
      }
      WeightConstraintSystem sys = weight_constraints(s.derived_fixed, ctx.datum.ss_rank(), s.c);
      out << "p = " << prime_label(s.p) << "; K = " << s.kernel.structure()
          << "; K^F = " << s.fixed.structure() << "; K^F cap G' = " << s.derived_fixed.structure()
          << "\n"
          << constraint_lines(sys);
      row["p"] = s.p ? s.p->get_str() : "any";
      row["kernel"] = group_json(s.kernel);
      row["fixed"] = group_json(s.fixed);
      row["derived_fixed"] = group_json(s.derived_fixed);
      row["constraints"] = matrix_json(sys.W);
      row["modulus"] = sys.modulus.get_str();
      rows.push_back(std::move(row));
    }
    j["residue_classes"] = rows;

    Json samples = Json::array();
    for (const Integer& sq : sample_q) {
      FrobeniusDatum f = validate_frobenius(ctx.datum, in.F0, sq);
      ParamSummary ps = parameterize(ctx.datum, f);
      out << "sample ";
      describe_summary(ps, sq, f.p, out);
      samples.push_back(summary_json(ps, sq, f.p));
    }
    j["samples"] = samples;
  }
  r.text = out.str();
  r.json = dump(j);
  return r;
}

Report catalog(char type, std::size_t l, const std::string& isogeny, int epsilon,
               const Integer& q) {
  SimpleSpec s = make_spec(type, l, isogeny, epsilon, q);
  check_legal(s);
  SimpleParameterization sp = simple_parameterization(s);
  Integer table = closed_form_count(s);
  SimpleDatum sd = build_simple_datum(s);
  ParamSummary ps = parameterize(sd.datum, validate_frobenius(sd.datum, sd.F0, s.q));

  std::string kf = "1";
  Json factors = Json::array();
  for (std::size_t i = 0; i < sp.kf_factors.size(); ++i) {
    kf = (i ? kf + " x Z/" : "Z/") + sp.kf_factors[i].get_str();
    factors.push_back(sp.kf_factors[i].get_str());
  }
  bool agree = table == ps.total;

  std::ostringstream out;
  out << "group: " << s.str() << "\n";
  out << "K^F: " << kf << "\n";
  out << "constraint: " << sp.equation << "\n";
  out << "table count: " << table.get_str() << "\n";
  out << "pipeline count: " << ps.total.get_str() << "\n";
  out << "agreement: " << (agree ? "yes" : "NO") << "\n";

  Json j{{"group", s.str()},
         {"kf", {{"structure", kf}, {"invariant_factors", factors}}},
         {"constraints", matrix_json(sp.constraints)},
         {"modulus", sp.modulus.get_str()},
         {"equation", sp.equation},
         {"table_count", table.get_str()},
         {"pipeline_count", ps.total.get_str()},
         {"agreement", agree},
         {"total", table.get_str()}};

  Report r;
  r.text = out.str();
  r.json = dump(j);
  r.ok = agree;
  r.total = table.get_str();
  return r;
}

Report enumerate(const InputSpec& in, const std::optional<Integer>& q_arg, std::size_t limit) {
  std::optional<Integer> q = q_arg ? q_arg : in.q;
  if (!q) throw UsageError("enumerate needs --q or a \"q\" entry in the input");
  Context ctx = validate(in, q);
  ParamSummary ps = parameterize(ctx.datum, ctx.frobenius);

  const Integer nb = ps.setB.order(), nc = ps.setC.order();
  std::ostringstream out;
  out << "# count " << ps.total.get_str() << "\n";
  out << "# b indexes set (B) = " << ps.setB.structure() << ", c indexes set (C) = "
      << ps.setC.structure() << "\n";
  Json triples = Json::array();
  std::size_t emitted = 0;
  WeightEnumerator weights(ps.setA);
  while (emitted < limit) {
    auto lambda = weights.next();
    if (!lambda) break;
    std::string ltext = "(";
    for (std::size_t i = 0; i < lambda->size(); ++i)
      ltext += (i ? "," : "") + std::to_string((*lambda)[i]);
    ltext += ")";
    for (Integer b = 0; b < nb && emitted < limit; ++b)
      for (Integer c = 0; c < nc && emitted < limit; ++c) {
        out << ltext << " " << b.get_str() << " " << c.get_str() << "\n";
        triples.push_back(Json{{"lambda", *lambda}, {"b", b.get_str()}, {"c", c.get_str()}});
        ++emitted;
      }
  }
  bool truncated = Integer(static_cast<unsigned long>(emitted)) < ps.total;
  if (truncated) out << "# stopped after " << emitted << " of " << ps.total.get_str() << "\n";

  Json j{{"q", q->get_str()},
         {"count", ps.total.get_str()},
         {"setB", ps.setB.structure()},
         {"setC", ps.setC.structure()},
         {"emitted", emitted},
         {"truncated", truncated},
         {"triples", triples}};
  Report r;
  r.text = out.str();
  r.json = dump(j);
  r.total = ps.total.get_str();
  return r;
}

Report selftest(bool corrupt_catalog) {
  AcceptanceOptions opts;
  opts.corrupt_catalog = corrupt_catalog;
  std::vector<CriterionResult> results = run_acceptance(opts);
  std::ostringstream out;
  Json rows = Json::array();
  Report r;
  for (const auto& c : results) {
    out << "criterion " << c.id << " " << c.name << ": " << (c.passed ? "PASS" : "FAIL") << " ("
        << std::fixed << std::setprecision(3) << c.seconds << " s of " << c.budget << " s) "
        << c.detail << "\n";
    rows.push_back(Json{{"id", c.id},
                        {"name", c.name},
                        {"passed", c.passed},
                        {"seconds", c.seconds},
                        {"budget", c.budget},
                        {"detail", c.detail}});
    r.ok = r.ok && c.passed;
  }
  out << (r.ok ? "all criteria passed" : "some criteria FAILED") << "\n";
  r.text = out.str();
  r.json = dump(Json{{"passed", r.ok}, {"criteria", rows}});
  return r;
}

}  // namespace liereps
