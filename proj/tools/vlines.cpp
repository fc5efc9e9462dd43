// vlines command-line front end. Talks to the library only through vlines.h.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "vlines/vlines.h"

namespace {

using ojson = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kInvalid = 2;

struct Common {
  std::string output;
  std::uint64_t seed = 1;
  int trials = 0;
  std::uint32_t prime = 101;
  bool table = false;
};

struct FamilyDeleter {
  void operator()(vl_family* f) const { vl_family_free(f); }
};
using Family = std::unique_ptr<vl_family, FamilyDeleter>;

// Statuses that say the input family itself is not a valid embedding.
bool is_validation_failure(vl_status s) {
  return s == VL_ERR_ANTISYMMETRY || s == VL_ERR_BASE_POINT || s == VL_ERR_CONTRACTED_LINE || s == VL_ERR_NOT_AN_ISOMORPHISM;
}

int fail(vl_status s) {
  std::cerr << "error: " << vl_last_error() << "\n";
  const ojson detail = ojson::parse(vl_last_error_json());
  if (!detail["witness"].empty()) std::cerr << "witness: " << detail["witness"].dump() << "\n";
  return is_validation_failure(s) ? kInvalid : kUsage;
}

bool read_text(const std::string& path, std::string& out) {
  if (path == "-") {
    out.assign(std::istreambuf_iterator<char>(std::cin), {});
    return true;
  }
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot read " << path << "\n";
    return false;
  }
  out.assign(std::istreambuf_iterator<char>(in), {});
  return true;
}

bool write_text(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return true;
  }
  std::ofstream out(path);
  if (!out) {
    std::cerr << "error: cannot write " << path << "\n";
    return false;
  }
  out << text;
  return static_cast<bool>(out);
}

std::string take(char* s) {
  std::string out(s ? s : "");
  vl_string_free(s);
  return out;
}

// key/value rows for --table; long arrays are summarized.
void flatten(const ojson& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& rows) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), rows);
    return;
  }
  if (j.is_array() && (j.size() > 6 || std::any_of(j.begin(), j.end(), [](const ojson& x) { return x.is_structured(); }))) {
    rows.emplace_back(prefix, "[" + std::to_string(j.size()) + " items]");
    return;
  }
  rows.emplace_back(prefix, j.is_string() ? j.get<std::string>() : j.dump());
}

void print_table(const std::string& report) {
  const ojson j = ojson::parse(report);
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(j.contains("result") ? j["result"] : j, "", rows);
  std::size_t width = 0;
  for (const auto& r : rows) width = std::max(width, r.first.size());
  for (const auto& [k, v] : rows) std::cout << k << std::string(width - k.size() + 2, ' ') << v << "\n";
}

// The JSON report goes to -o, else to stdout unless a table takes its place.
int emit(const Common& c, const std::string& report) {
  if ((!c.output.empty() || !c.table) && !write_text(c.output, report)) return kUsage;
  if (c.table) print_table(report);
  return kOk;
}

vl_options options_of(const Common& c) {
  vl_options o;
  vl_options_init(&o);
  o.seed = c.seed;
  o.trials = c.trials;
  o.prime = c.prime;
  return o;
}

int load(const std::string& path, Family& out) {
  std::string text;
  if (!read_text(path, text)) return kUsage;
  vl_family* f = nullptr;
  const vl_status s = vl_family_from_json(text.c_str(), &f);
  if (s != VL_OK) return fail(s);
  out.reset(f);
  return kOk;
}

// Analyses expect a valid family: check it first.
int check_valid(const Family& f, const Common& c) {
  char* out = nullptr;
  vl_options o = options_of(c);
  o.trials = 0;
  const vl_status s = vl_validate(f.get(), &o, &out);
  if (s != VL_OK) return fail(s);
  const ojson report = ojson::parse(take(out));
  if (report["result"]["valid"].get<bool>()) return kOk;
  std::cerr << "error: input family is not a valid embedding\n" << report["result"].dump(2) << "\n";
  return kInvalid;
}

using Analysis = std::function<vl_status(const vl_family*, const vl_options*, char**)>;

int run_analysis(const std::string& path, const Common& c, const Analysis& analysis, const vl_options& o) {
  Family f;
  if (const int rc = load(path, f)) return rc;
  if (const int rc = check_valid(f, c)) return rc;
  char* out = nullptr;
  const vl_status s = analysis(f.get(), &o, &out);
  if (s != VL_OK) return fail(s);
  return emit(c, take(out));
}

void add_common(CLI::App* app, Common& c) {
  app->add_option("-o,--output", c.output, "Write the report here instead of stdout");
  app->add_option("--seed", c.seed, "Seed for every random choice")->capture_default_str();
  app->add_option("--trials", c.trials, "Samples or repetitions (0: the analysis default)");
  app->add_option("--prime", c.prime, "Prime for reducing families over Q")->envname("VLINES_PRIME")->capture_default_str();
  app->add_flag("--table", c.table, "Also print an aligned text table");
}

std::uint32_t field_prime(const std::string& field, std::uint32_t prime) { return field == "Q" ? 0 : prime; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Double Veronese families of lines: validation, invariants, classification"};
  app.set_version_flag("--version", std::string(vl_version()));
  app.require_subcommand(1);

  Common c;
  std::string input;
  std::string field = "Fp";

  auto* validate = app.add_subcommand("validate", "Check decomposability, basepoints and injectivity");
  validate->add_option("family", input, "Family JSON ('-' for stdin)")->required();
  add_common(validate, c);

  auto* classify = app.add_subcommand("classify", "Name the family among the five models");
  classify->add_option("family", input, "Family JSON")->required();
  add_common(classify, c);

  std::string line;
  auto* splitting = app.add_subcommand("splitting", "Generic splitting type, or the type on one line");
  splitting->add_option("family", input, "Family JSON")->required();
  splitting->add_option("--line", line, "Source line as \"p0,p1,..:q0,q1,..\" (or with ;)");
  add_common(splitting, c);

  bool exhaustive = false;
  bool sampled = false;
  auto* jumping = app.add_subcommand("jumping", "Enumerate jumping lines over F_p");
  jumping->add_option("family", input, "Family JSON")->required();
  auto* ex_flag = jumping->add_flag("--exhaustive", exhaustive, "Classify every source line");
  jumping->add_flag("--sampled", sampled, "Classify random source lines")->excludes(ex_flag);
  add_common(jumping, c);

  auto* bideg = app.add_subcommand("bidegree", "Schubert bidegree of a surface family");
  bideg->add_option("family", input, "Family JSON")->required();
  add_common(bideg, c);

  auto* swept = app.add_subcommand("swept", "Dimension of the union of the lines and quadrics through it");
  swept->add_option("family", input, "Family JSON")->required();
  add_common(swept, c);

  std::string example;
  int n = 0;
  auto* atlas = app.add_subcommand("atlas", "Write one of the model families");
  atlas->add_option("--example", example, "split, cone, chordal, quadric, quadric-line or 2.1 .. 2.5")->required();
  atlas->add_option("--n", n, "Source dimension (split and cone only)");
  atlas->add_option("--field", field, "Q or Fp")->check(CLI::IsMember({"Q", "Fp"}))->capture_default_str();
  add_common(atlas, c);

  int target = 0;
  std::string matrix;
  auto* project = app.add_subcommand("project", "Project a family to a smaller Grassmannian");
  project->add_option("family", input, "Family JSON")->required();
  auto* target_opt = project->add_option("--target", target, "m of the target G(1,m), random center");
  project->add_option("--matrix", matrix, "JSON file with the rows of the projection")->excludes(target_opt);
  add_common(project, c);

  int random_n = 0;
  auto* nf = app.add_subcommand("normal-form", "Bring a coordinate matrix to the shifted form");
  auto* nf_in = nf->add_option("coord", input, "Coordinate matrix JSON");
  nf->add_option("--random", random_n, "Use random triangular coefficients for this n")->excludes(nf_in);
  nf->add_option("--field", field, "Q or Fp (with --random)")->check(CLI::IsMember({"Q", "Fp"}))->capture_default_str();
  add_common(nf, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  vl_options o = options_of(c);

  if (*validate) {
    Family f;
    if (const int rc = load(input, f)) {
      if (rc == kInvalid && !c.output.empty()) {
        ojson r;
        r["command"] = "validate";
        r["header"] = {{"version", vl_version()}};
        r["result"] = {{"valid", false}, {"error", ojson::parse(vl_last_error_json())}};
        write_text(c.output, r.dump(2) + "\n");
      }
      return rc;
    }
    char* out = nullptr;
    const vl_status s = vl_validate(f.get(), &o, &out);
    if (s != VL_OK) return fail(s);
    const std::string report = take(out);
    if (const int rc = emit(c, report)) return rc;
    return ojson::parse(report)["result"]["valid"].get<bool>() ? kOk : kInvalid;
  }
  if (*classify) return run_analysis(input, c, vl_classify, o);
  if (*jumping) {
    if (exhaustive) o.exhaustive = 1;
    if (sampled) o.exhaustive = 0;
    return run_analysis(input, c, vl_jumping, o);
  }
  if (*bideg) return run_analysis(input, c, vl_bidegree, o);
  if (*swept) return run_analysis(input, c, vl_swept, o);
  if (*splitting) {
    std::string line_json;
    if (!line.empty()) {
      const auto semi = line.find_first_of(";:");
      if (semi == std::string::npos) {
        std::cerr << "error: --line needs two points separated by ';' or ':'\n";
        return kUsage;
      }
      const auto as_array = [](const std::string& s) {
        ojson a = ojson::array();
        std::stringstream ss(s);
        std::string item;
        while (std::getline(ss, item, ',')) a.push_back(item);
        return a;
      };
      line_json = ojson{{"p", as_array(line.substr(0, semi))}, {"q", as_array(line.substr(semi + 1))}}.dump();
    }
    return run_analysis(input, c, [&](const vl_family* f, const vl_options* opt, char** out) {
      return vl_splitting(f, line_json.empty() ? nullptr : line_json.c_str(), opt, out);
    }, o);
  }
  if (*project) {
    std::string matrix_json;
    if (!matrix.empty() && !read_text(matrix, matrix_json)) return kUsage;
    o.target = target;
    bool isomorphic = true;
    const int rc = run_analysis(input, c, [&](const vl_family* f, const vl_options* opt, char** out) {
      const vl_status s = vl_project(f, matrix_json.empty() ? nullptr : matrix_json.c_str(), opt, out);
      if (s == VL_OK) isomorphic = ojson::parse(*out)["result"]["isomorphic"].get<bool>();
      return s;
    }, o);
    // the report is written either way; a failed projection is an invalid family
    if (rc == kOk && !isomorphic) {
      std::cerr << "error: projection is not an isomorphism (see report)\n";
      return kInvalid;
    }
    return rc;
  }
  if (*atlas) {
    vl_family* f = nullptr;
    const vl_status s = vl_atlas(example.c_str(), n, field_prime(field, c.prime), c.seed, &f);
    if (s != VL_OK) return fail(s);
    Family owned(f);
    char* out = nullptr;
    if (const vl_status t = vl_family_to_json(owned.get(), &out); t != VL_OK) return fail(t);
    return emit(c, take(out));
  }
  if (*nf) {
    std::string coord;
    if (random_n > 0) {
      char* out = nullptr;
      const vl_status s = vl_random_coord(random_n, field_prime(field, c.prime), c.seed, &out);
      if (s != VL_OK) return fail(s);
      coord = take(out);
    } else if (input.empty()) {
      std::cerr << "error: normal-form needs a coordinate file or --random n\n";
      return kUsage;
    } else if (!read_text(input, coord)) {
      return kUsage;
    }
    char* out = nullptr;
    const vl_status s = vl_normal_form(coord.c_str(), &out);
    if (s != VL_OK) return fail(s);
    return emit(c, take(out));
  }
  return kUsage;
}
