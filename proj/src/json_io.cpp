#include "json_io.hpp"

#include <cstdio>
#include <map>

#include "vlines/grammar.hpp"

namespace vlines::io {

ojson field_json(Field f) {
  if (f.is_rational()) return "Q";
  return ojson{{"Fp", f.characteristic()}};
}

Field field_from_json(const ojson& j) {
  if (j.is_string() && j.get<std::string>() == "Q") return Field::rationals();
  if (j.is_object() && j.size() == 1 && j.contains("Fp") && j["Fp"].is_number_unsigned())
    return Field::prime(j["Fp"].get<std::uint32_t>());
  throw Error(ErrorCode::InvalidArgument, "field must be \"Q\" or {\"Fp\": p}, got " + j.dump());
}

ojson scalar_json(const Scalar& s) {
  if (s.field().is_prime()) return s.residue();
  const mpq_class& q = s.rational();
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
  return q.get_str();
}

Scalar scalar_from_json(const ojson& j, Field f) {
  if (j.is_number_integer()) return f.from_int(j.get<std::int64_t>());
  if (j.is_string()) {
    mpq_class q;
    if (q.set_str(j.get<std::string>(), 10) != 0 || q.get_den() == 0)
      throw Error(ErrorCode::Parse, "not a rational number: " + j.dump());
    q.canonicalize();
    return f.from_rational(q);
  }
  throw Error(ErrorCode::Parse, "expected an integer or a \"a/b\" string, got " + j.dump());
}

ojson vector_json(const Vector& v) {
  ojson out = ojson::array();
  for (const auto& s : v) out.push_back(scalar_json(s));
  return out;
}

Vector vector_from_json(const ojson& j, Field f) {
  if (!j.is_array()) throw Error(ErrorCode::Parse, "expected an array of scalars");
  Vector v;
  for (const auto& x : j) v.push_back(scalar_from_json(x, f));
  return v;
}

ojson matrix_json(const Matrix& m) {
  ojson out = ojson::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(vector_json(m.row(i)));
  return out;
}

Matrix matrix_from_json(const ojson& j, Field f) {
  if (!j.is_array() || j.empty()) throw Error(ErrorCode::Parse, "expected a nonempty array of rows");
  std::vector<Vector> rows;
  for (const auto& r : j) rows.push_back(vector_from_json(r, f));
  return Matrix::from_rows(f, rows, rows.front().size());
}

ojson family_json(const LineFamily& f) {
  ojson out;
  out["label"] = f.label();
  out["field"] = field_json(f.field());
  out["n"] = f.n();
  out["N"] = f.N();
  ojson entries = ojson::array();
  for (const auto& [i, j] : f.upper_indices()) {
    const HomForm& e = f.entry(i, j);
    if (e.is_zero()) continue;
    entries.push_back({{"i", i}, {"j", j}, {"poly", format_poly(e)}});
  }
  out["entries"] = std::move(entries);
  return out;
}

namespace {

template <class T>
T require(const ojson& j, const char* key) {
  if (!j.contains(key)) throw Error(ErrorCode::Parse, std::string("family is missing \"") + key + "\"");
  try {
    return j[key].get<T>();
  } catch (const nlohmann::json::exception&) {
    throw Error(ErrorCode::Parse, std::string("family field \"") + key + "\" has the wrong type");
  }
}

std::string pair_text(int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

}  // namespace

LineFamily family_from_json(const ojson& j) {
  if (!j.is_object()) throw Error(ErrorCode::Parse, "family must be a JSON object");
  const Field field = field_from_json(j.contains("field") ? j["field"] : ojson("Q"));
  const int n = require<int>(j, "n");
  const int N = require<int>(j, "N");
  LineFamily f(field, n, N, j.contains("label") ? require<std::string>(j, "label") : std::string{});
  if (!j.contains("entries") || !j["entries"].is_array()) throw Error(ErrorCode::Parse, "family needs an \"entries\" array");

  PolyParseOptions opts;
  opts.nvars = n + 1;
  opts.degree = 2;
  std::map<std::pair<int, int>, HomForm> seen;  // keyed by (min, max), value oriented as i < j
  for (std::size_t k = 0; k < j["entries"].size(); ++k) {
    const ojson& e = j["entries"][k];
    const int a = require<int>(e, "i");
    const int b = require<int>(e, "j");
    if (a < 0 || b < 0 || a > N || b > N)
      throw Error(ErrorCode::InvalidArgument, "entry " + pair_text(a, b) + " outside 0.." + std::to_string(N));
    HomForm poly(field, n + 1, 2);
    try {
      poly = parse_poly(require<std::string>(e, "poly"), field, opts);
    } catch (const ParseError& err) {
      throw Error(ErrorCode::Parse, "entry " + pair_text(a, b) + ": " + err.what(), {a, b});
    }
    if (a == b) {
      if (!poly.is_zero()) throw Error(ErrorCode::Antisymmetry, "diagonal entry " + pair_text(a, b) + " is not zero", {a, b});
      continue;
    }
    const auto key = std::minmax(a, b);
    if (a > b) poly = -poly;
    const auto [it, fresh] = seen.emplace(std::pair{key.first, key.second}, poly);
    if (!fresh && it->second != poly)
      throw Error(ErrorCode::Antisymmetry,
                  "entries " + pair_text(key.first, key.second) + " and " + pair_text(key.second, key.first) + " are not antisymmetric",
                  {key.first, key.second});
  }
  for (const auto& [key, poly] : seen) f.set_entry(key.first, key.second, poly);
  return f;
}

LineFamily family_from_text(const std::string& text) {
  ojson j;
  try {
    j = ojson::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::Parse, std::string("invalid JSON: ") + e.what());
  }
  return family_from_json(j);
}

std::string family_hash(const LineFamily& f) { return text_hash(family_json(f).dump()); }

std::string text_hash(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string dump(const ojson& j) { return j.dump(2) + "\n"; }

ojson header(const LineFamily& f, std::uint32_t prime, std::uint64_t seed) {
  return header(f.field(), prime, seed, family_hash(f));
}

ojson header(Field field, std::uint32_t prime, std::uint64_t seed, const std::string& input_hash) {
  ojson h;
  h["version"] = VLINES_VERSION;
  h["field"] = field_json(field);
  h["prime"] = prime;
  h["seed"] = seed;
  h["input_hash"] = input_hash;
  return h;
}

namespace {

ojson optional_vector(const std::optional<Vector>& v) { return v ? vector_json(*v) : ojson(nullptr); }

ojson forms_json(const std::vector<HomForm>& forms, char letter) {
  ojson out = ojson::array();
  for (const auto& q : forms) out.push_back(format_poly(q, letter));
  return out;
}

ojson type_json(SplittingType t) { return ojson::array({t.a1, t.a2}); }

}  // namespace

ojson to_json(const ValidationReport& r) {
  ojson out;
  out["valid"] = r.valid();
  ojson pf;
  pf["ok"] = r.pfaffian.ok;
  if (!r.pfaffian.ok) {
    pf["witness"] = r.pfaffian.witness;
    pf["monomial"] = r.pfaffian.witness_monomial;
  }
  out["pfaffians"] = std::move(pf);
  const BasepointScan& b = r.basepoints;
  ojson bp;
  bp["ok"] = b.ok;
  bp["method"] = b.method;
  bp["prime"] = b.prime;
  if (b.method == "eliminant") {
    bp["closure"] = b.closure;
    bp["over_extension"] = b.over_extension;
    bp["positive_dimensional"] = b.positive_dimensional;
  } else {
    bp["points_checked"] = b.points_checked;
  }
  bp["witness"] = optional_vector(b.witness);
  out["basepoints"] = std::move(bp);
  const EmbeddingReport& e = r.embedding;
  ojson em;
  em["ok"] = e.ok();
  em["exhaustive"] = e.exhaustive;
  em["trials"] = e.trials;
  em["points_hashed"] = e.points_hashed;
  em["contractions"] = e.contractions;
  em["injectivity_failures"] = e.injectivity_failures;
  em["immersion_failures"] = e.immersion_failures;
  em["collision"] = e.collision ? ojson::array({vector_json(e.collision->first), vector_json(e.collision->second)}) : ojson(nullptr);
  em["immersion_witness"] = optional_vector(e.immersion_witness);
  out["embedding"] = std::move(em);
  return out;
}

ojson to_json(const GenericSplitting& g) {
  return {{"type", type_json(g.type)}, {"trials", g.trials}, {"unbalanced", g.unbalanced}};
}

ojson to_json(const SplittingResult& r) {
  ojson out;
  out["type"] = type_json(r.type);
  if (r.cone) {
    out["vertex"] = vector_json(r.cone->vertex);
    out["kernel_dim"] = r.cone->kernel_dim;
  } else {
    out["vertex"] = nullptr;
  }
  return out;
}

ojson to_json(const JumpingReport& r) {
  ojson out;
  out["mode"] = r.mode;
  out["prime"] = r.prime;
  out["reduced"] = r.reduced;
  out["n"] = r.n;
  out["coordinates"] = r.coordinates;
  out["generic"] = type_json(r.generic);
  out["total"] = r.total;
  out["jumping"] = r.jumping;
  out["threshold"] = r.threshold;
  out["codim"] = r.codim;
  if (r.fit) {
    const char letter = r.coordinates == "dual" ? 'u' : 'p';
    out["fit"] = {{"degree", r.fit->degree},       {"monomials", r.fit->monomials}, {"rank", r.fit->rank},
                  {"nullity", r.fit->nullity},     {"forms", forms_json(r.fit->forms, letter)}};
  } else {
    out["fit"] = nullptr;
  }
  ojson lines = ojson::array();
  for (std::size_t k = 0; k < r.lines.size(); ++k)
    lines.push_back({{"line", vector_json(r.lines[k])}, {"vertex", k < r.vertices.size() ? vector_json(r.vertices[k]) : ojson(nullptr)}});
  out["lines"] = std::move(lines);
  return out;
}

ojson to_json(const FundamentalCurve& c) {
  ojson out;
  out["verdict"] = curve_verdict_name(c.verdict);
  out["vertices"] = c.vertices.size();
  out["span_rank"] = c.span_rank;
  out["quadrics"] = c.quadrics;
  out["fitted"] = forms_json(c.fitted, 'y');
  out["common_zeros"] = c.common_zeros;
  return out;
}

namespace {

ojson schubert_json(const SchubertCount& s) {
  ojson out;
  out["modal"] = s.modal;
  out["unanimous"] = s.unanimous;
  out["warning"] = s.warning;
  ojson flags = ojson::array();
  for (const auto& c : s.flags)
    flags.push_back({{"closure", c.closure}, {"over_extension", c.over_extension}, {"stabilized", c.stabilized()}});
  out["flags"] = std::move(flags);
  return out;
}

}  // namespace

ojson to_json(const BidegreeReport& r) {
  ojson out;
  out["bidegree"] = ojson::array({r.value.order, r.value.klass});
  out["order"] = schubert_json(r.order);
  out["class"] = schubert_json(r.klass);
  return out;
}

ojson to_json(const SweptReport& r) {
  ojson out;
  out["dimension"] = r.dimension;
  out["fitted"] = r.fitted;
  if (r.fitted) {
    out["samples"] = r.samples;
    out["monomials"] = r.monomials;
    out["quadrics"] = forms_json(r.quadrics, 'x');
    out["ranks"] = r.ranks;
    out["fresh_points"] = r.fresh_points;
    out["verified"] = r.verified;
  }
  return out;
}

ojson to_json(const Classification& c) {
  ojson out;
  out["verdict"] = verdict_name(c.verdict);
  out["contradiction"] = c.contradiction;
  out["reason"] = c.reason;
  out["reduced"] = c.reduced;
  out["generic"] = to_json(c.generic);
  out["span_dim"] = c.span_dim;
  out["full_span"] = c.full_span;
  out["vertex"] = optional_vector(c.vertex);
  if (c.jumping) {
    ojson jr = to_json(*c.jumping);
    jr.erase("lines");  // the jumping subcommand lists them
    out["jumping"] = std::move(jr);
  } else {
    out["jumping"] = nullptr;
  }
  out["curve"] = c.curve ? to_json(*c.curve) : ojson(nullptr);
  out["bidegree"] = c.bidegree ? to_json(*c.bidegree) : ojson(nullptr);
  out["swept"] = c.swept ? to_json(*c.swept) : ojson(nullptr);
  return out;
}

ojson to_json(const ProjectionResult& r) {
  ojson out;
  out["isomorphic"] = r.isomorphic();
  ValidationReport v;
  v.basepoints = r.contraction;
  v.embedding = r.injectivity;
  const ojson checks = to_json(v);
  out["contraction"] = checks["basepoints"];
  out["injectivity"] = checks["embedding"];
  out["span_dim"] = plucker_span_dim(r.family);
  out["family"] = family_json(r.family);
  return out;
}

ojson coord_json(const CoordMatrix& m) {
  return {{"field", field_json(m.field())}, {"n", m.n()}, {"a", matrix_json(m.coefficients())}};
}

CoordMatrix coord_from_json(const ojson& j) {
  if (!j.is_object() || !j.contains("a")) throw Error(ErrorCode::Parse, "coordinate matrix needs an \"a\" array");
  const Field field = field_from_json(j.contains("field") ? j["field"] : ojson("Q"));
  CoordMatrix m(matrix_from_json(j["a"], field));
  if (j.contains("n") && j["n"] != m.n()) throw Error(ErrorCode::InvalidArgument, "\"n\" does not match the size of \"a\"");
  return m;
}

ojson to_json(const NormalForm& r) {
  ojson out;
  out["form"] = coord_json(r.form);
  out["source"] = matrix_json(r.source);
  out["ambient"] = matrix_json(r.ambient);
  out["span_dim"] = r.span_dim;
  out["verified"] = r.verified;
  return out;
}

}  // namespace vlines::io
