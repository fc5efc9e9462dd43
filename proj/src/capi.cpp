#include "vlines/vlines.h"

#include <cstdlib>
#include <cstring>
#include <new>

#include "json_io.hpp"

struct vl_family {
  vlines::LineFamily family;
};

namespace {

using namespace vlines;
using io::ojson;

thread_local std::string last_error;
thread_local std::string last_error_json = "{}";

void set_error(vl_status status, const std::string& message, const std::vector<int>& witness = {}) {
  last_error = message;
  ojson j;
  j["code"] = vl_status_name(status);
  j["message"] = message;
  j["witness"] = witness;
  last_error_json = j.dump();
}

vl_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return VL_ERR_INVALID_ARGUMENT;
    case ErrorCode::FieldMismatch: return VL_ERR_FIELD_MISMATCH;
    case ErrorCode::Parse: return VL_ERR_PARSE;
    case ErrorCode::DegenerateLine: return VL_ERR_DEGENERATE_LINE;
    case ErrorCode::DegenerateSpan: return VL_ERR_DEGENERATE_SPAN;
    case ErrorCode::NotALine: return VL_ERR_NOT_A_LINE;
    case ErrorCode::BasePoint: return VL_ERR_BASE_POINT;
    case ErrorCode::ContractedLine: return VL_ERR_CONTRACTED_LINE;
    case ErrorCode::ProjectionNotIsomorphic: return VL_ERR_PROJECTION_NOT_ISOMORPHIC;
    case ErrorCode::NotAnIsomorphism: return VL_ERR_NOT_AN_ISOMORPHISM;
    case ErrorCode::EmptyJumpingSet: return VL_ERR_EMPTY_JUMPING_SET;
    case ErrorCode::WrongDimension: return VL_ERR_WRONG_DIMENSION;
    case ErrorCode::Antisymmetry: return VL_ERR_ANTISYMMETRY;
    case ErrorCode::Internal: return VL_ERR_INTERNAL;
  }
  return VL_ERR_INTERNAL;
}

char* copy_out(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

// Runs `body`, translating exceptions into a status and the thread's error.
template <class F>
vl_status guarded(F&& body) {
  last_error.clear();
  last_error_json = "{}";
  try {
    body();
    return VL_OK;
  } catch (const Error& e) {
    const vl_status s = status_of(e.code());
    set_error(s, e.what(), e.witness());
    return s;
  } catch (const std::bad_alloc&) {
    set_error(VL_ERR_INTERNAL, "out of memory");
    return VL_ERR_INTERNAL;
  } catch (const std::exception& e) {
    set_error(VL_ERR_INTERNAL, e.what());
    return VL_ERR_INTERNAL;
  }
}

vl_options resolve(const vl_options* opts) {
  vl_options o;
  vl_options_init(&o);
  if (opts) o = *opts;
  return o;
}

void require(const void* p, const char* what) {
  if (!p) throw Error(ErrorCode::InvalidArgument, std::string(what) + " is NULL");
}

ojson parse_text(const char* text, const char* what) {
  require(text, what);
  try {
    return ojson::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::Parse, std::string(what) + " is not valid JSON: " + e.what());
  }
}

std::string report(const char* command, ojson header, ojson result) {
  ojson out;
  out["command"] = command;
  out["header"] = std::move(header);
  out["result"] = std::move(result);
  return io::dump(out);
}

// Analyses over a prime field run on the family itself; over Q on its reduction.
LineFamily prime_model(const LineFamily& f, const vl_options& o) { return over_prime_field(f, o.prime); }

}  // namespace

extern "C" {

void vl_options_init(vl_options* opts) {
  if (!opts) return;
  opts->seed = 1;
  opts->trials = 0;
  opts->prime = 101;
  opts->exhaustive = -1;
  opts->target = 0;
}

const char* vl_version(void) { return VLINES_VERSION; }

const char* vl_status_name(vl_status status) {
  switch (status) {
    case VL_OK: return "ok";
    case VL_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case VL_ERR_FIELD_MISMATCH: return "field_mismatch";
    case VL_ERR_PARSE: return "parse";
    case VL_ERR_DEGENERATE_LINE: return "degenerate_line";
    case VL_ERR_DEGENERATE_SPAN: return "degenerate_span";
    case VL_ERR_NOT_A_LINE: return "not_a_line";
    case VL_ERR_BASE_POINT: return "base_point";
    case VL_ERR_CONTRACTED_LINE: return "contracted_line";
    case VL_ERR_PROJECTION_NOT_ISOMORPHIC: return "projection_not_isomorphic";
    case VL_ERR_NOT_AN_ISOMORPHISM: return "not_an_isomorphism";
    case VL_ERR_EMPTY_JUMPING_SET: return "empty_jumping_set";
    case VL_ERR_WRONG_DIMENSION: return "wrong_dimension";
    case VL_ERR_ANTISYMMETRY: return "antisymmetry";
    case VL_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* vl_last_error(void) { return last_error.c_str(); }
const char* vl_last_error_json(void) { return last_error_json.c_str(); }

void vl_string_free(char* s) { std::free(s); }

vl_status vl_family_from_json(const char* json, vl_family** out) {
  return guarded([&] {
    require(out, "output handle");
    *out = nullptr;
    const ojson j = parse_text(json, "family");
    *out = new vl_family{io::family_from_json(j)};
  });
}

vl_status vl_family_to_json(const vl_family* f, char** out) {
  return guarded([&] {
    require(f, "family");
    require(out, "output string");
    *out = copy_out(io::dump(io::family_json(f->family)));
  });
}

void vl_family_free(vl_family* f) { delete f; }

vl_status vl_atlas(const char* example, int n, uint32_t prime, uint64_t seed, vl_family** out) {
  return guarded([&] {
    require(example, "example");
    require(out, "output handle");
    *out = nullptr;
    const auto e = parse_example(example);
    if (!e) throw Error(ErrorCode::InvalidArgument, std::string("unknown example '") + example + "'");
    const Field field = prime == 0 ? Field::rationals() : Field::prime(prime);
    Rng rng(seed);
    LineFamily f = atlas(*e, n == 0 ? default_source_dim(*e) : n, field, rng);
    f.set_label(example_name(*e));
    *out = new vl_family{std::move(f)};
  });
}

vl_status vl_validate(const vl_family* f, const vl_options* opts, char** out) {
  return guarded([&] {
    require(f, "family");
    require(out, "output string");
    const vl_options o = resolve(opts);
    Rng rng(o.seed);
    const ValidationReport r = validate(f->family, rng, o.trials > 0 ? o.trials : 100, o.prime);
    *out = copy_out(report("validate", io::header(f->family, r.basepoints.prime, o.seed), io::to_json(r)));
  });
}

vl_status vl_classify(const vl_family* f, const vl_options* opts, char** out) {
  return guarded([&] {
    require(f, "family");
    require(out, "output string");
    const vl_options o = resolve(opts);
    Rng rng(o.seed);
    const Classification c = classify(f->family, rng, o.prime);
    *out = copy_out(report("classify", io::header(f->family, c.prime, o.seed), io::to_json(c)));
  });
}

vl_status vl_splitting(const vl_family* f, const char* line_json, const vl_options* opts, char** out) {
  return guarded([&] {
    require(f, "family");
    require(out, "output string");
    const vl_options o = resolve(opts);
    Rng rng(o.seed);
    const LineFamily fp = prime_model(f->family, o);
    ojson result;
    result["generic"] = io::to_json(generic_splitting_type(fp, rng, o.trials > 0 ? o.trials : 50));
    if (line_json) {
      const ojson j = parse_text(line_json, "line");
      if (!j.is_object() || !j.contains("p") || !j.contains("q")) throw Error(ErrorCode::Parse, "line needs \"p\" and \"q\"");
      const Field k = f->family.field();
      const Vector p = io::vector_from_json(j["p"], k);
      const Vector q = io::vector_from_json(j["q"], k);
      result["line"] = io::to_json(splitting_type(f->family, p, q));
    } else {
      result["line"] = nullptr;
    }
    *out = copy_out(report("splitting", io::header(f->family, fp.field().characteristic(), o.seed), std::move(result)));
  });
}

vl_status vl_jumping(const vl_family* f, const vl_options* opts, char** out) {
  return guarded([&] {
    require(f, "family");
    require(out, "output string");
    const vl_options o = resolve(opts);
    Rng rng(o.seed);
    JumpingOptions jo;
    jo.prime = o.prime;
    if (o.exhaustive >= 0) jo.exhaustive = o.exhaustive != 0;
    if (o.trials > 0) jo.trials = static_cast<std::uint64_t>(o.trials);
    const JumpingReport r = enumerate_jumping(f->family, rng, jo);
    ojson result = io::to_json(r);
    if (r.n == 2 && r.mode == "exhaustive" && r.jumping > 0)
      result["curve"] = io::to_json(fundamental_curve(prime_model(f->family, o), r));
    *out = copy_out(report("jumping", io::header(f->family, r.prime, o.seed), std::move(result)));
  });
}

vl_status vl_bidegree(const vl_family* f, const vl_options* opts, char** out) {
  return guarded([&] {
    require(f, "family");
    require(out, "output string");
    const vl_options o = resolve(opts);
    Rng rng(o.seed);
    const LineFamily fp = prime_model(f->family, o);
    const BidegreeReport r = bidegree(fp, rng, o.trials > 0 ? o.trials : 5);
    *out = copy_out(report("bidegree", io::header(f->family, fp.field().characteristic(), o.seed), io::to_json(r)));
  });
}

vl_status vl_swept(const vl_family* f, const vl_options* opts, char** out) {
  return guarded([&] {
    require(f, "family");
    require(out, "output string");
    const vl_options o = resolve(opts);
    Rng rng(o.seed);
    const LineFamily fp = prime_model(f->family, o);
    const SweptReport r = swept_variety(fp, rng, o.trials >= 20 ? o.trials : 40);
    *out = copy_out(report("swept", io::header(f->family, fp.field().characteristic(), o.seed), io::to_json(r)));
  });
}

vl_status vl_project(const vl_family* f, const char* matrix_json, const vl_options* opts, char** out) {
  return guarded([&] {
    require(f, "family");
    require(out, "output string");
    const vl_options o = resolve(opts);
    Rng rng(o.seed);
    const LineFamily& fam = f->family;
    const int trials = o.trials > 0 ? o.trials : 100;
    ojson result;
    if (matrix_json) {
      const Matrix pi = io::matrix_from_json(parse_text(matrix_json, "projection"), fam.field());
      result = io::to_json(try_project(fam, pi, rng, trials));
      result["attempts"] = 1;
    } else {
      if (o.target < 3 || o.target >= fam.N())
        throw Error(ErrorCode::InvalidArgument, "random projection needs 3 <= target < N = " + std::to_string(fam.N()));
      // a general center: redraw while the projection fails, at most 20 times
      int attempts = 0;
      std::optional<ProjectionResult> r;
      while (attempts < 20) {
        ++attempts;
        const Matrix pi = rng.full_rank_matrix(fam.field(), static_cast<std::size_t>(o.target + 1), static_cast<std::size_t>(fam.N() + 1));
        r = try_project(fam, pi, rng, trials);
        if (r->isomorphic()) break;
      }
      result = io::to_json(*r);
      result["attempts"] = attempts;
    }
    result["source_span_dim"] = plucker_span_dim(fam);
    *out = copy_out(report("project", io::header(fam, fam.field().characteristic(), o.seed), std::move(result)));
  });
}

vl_status vl_normal_form(const char* coord_json, char** out) {
  return guarded([&] {
    require(out, "output string");
    const ojson j = parse_text(coord_json, "coordinate matrix");
    const CoordMatrix m = io::coord_from_json(j);
    const NormalForm r = normal_form(m);
    ojson result = io::to_json(r);
    result["input"] = io::coord_json(m);
    *out = copy_out(report("normal-form", io::header(m.field(), m.field().characteristic(), 0, io::text_hash(io::coord_json(m).dump())),
                           std::move(result)));
  });
}

vl_status vl_random_coord(int n, uint32_t prime, uint64_t seed, char** out) {
  return guarded([&] {
    require(out, "output string");
    if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be at least 1");
    const Field k = prime == 0 ? Field::rationals() : Field::prime(prime);
    Rng rng(seed);
    const auto size = static_cast<std::size_t>(n + 1);
    Matrix a(k, size, size);
    for (std::size_t i = 0; i < size; ++i)
      for (std::size_t j = i; j < size; ++j) a(i, j) = i == j ? rng.nonzero_scalar(k) : rng.scalar(k);
    *out = copy_out(io::dump(io::coord_json(CoordMatrix(a))));
  });
}

}  // extern "C"
