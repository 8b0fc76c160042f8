// randotop: property verification, sampling and demos for randomized simplices.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "randotop/cylinders.hpp"
#include "randotop/homotopies.hpp"
#include "randotop/json_io.hpp"
#include "randotop/random_simplex.hpp"
#include "randotop/sampling.hpp"
#include "randotop/simplicial_sets.hpp"
#include "randotop/verify.hpp"

namespace {

using namespace randotop;

constexpr int kExitPass = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

bool write_json(const std::string& path, const Json& j) {
  if (path.empty()) return true;
  if (path == "-") {
    std::cout << j.dump(2) << "\n";
    return true;
  }
  std::ofstream out(path);
  if (!out) {
    std::cerr << "error: cannot write " << path << "\n";
    return false;
  }
  out << j.dump(2) << "\n";
  return true;
}

struct VerifyArgs {
  std::vector<std::string> suites;
  VerifyOptions opt;
  std::string json;
  bool quiet = false;
  bool timing = false;
};

int run_verify(const VerifyArgs& a) {
  std::vector<std::string> names;
  try {
    names = resolve_suites(a.suites.empty() ? std::vector<std::string>{"all"} : a.suites);
  } catch (const arity_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  std::vector<VerificationReport> reports;
  bool ok = true;
  for (const auto& name : names) {
    reports.push_back(run_suite(name, a.opt));
    const auto& r = reports.back();
    ok = ok && r.passed();
    if (a.quiet) continue;
    std::cout << summary_line(r, a.timing) << "\n";
    for (const auto& [k, v] : r.notes) std::cout << "  " << k << ": " << v << "\n";
    for (const auto& f : r.failures) {
      std::cout << "  failure seed=" << f.seed << " check=\"" << f.check << "\" inputs: " << f.inputs
                << "\n    expected: " << f.expected << "\n    got:      " << f.got << "\n";
    }
  }
  if (!write_json(a.json, reports_to_json(reports, a.opt, a.timing))) return kExitUsage;
  return ok ? kExitPass : kExitFailure;
}

struct SampleArgs {
  std::string kind;
  std::size_t n = 2;
  std::uint64_t seed = 1;
  std::size_t count = 1;
  long max_den = 64;
  std::string json;
};

int run_sample(const SampleArgs& a) {
  Json out = Json::array();
  for (std::size_t t = 0; t < a.count; ++t) {
    Sampler s(sub_seed(a.seed, "sample/" + a.kind, t), a.max_den);
    if (a.kind == "intervalset") {
      IntervalSet x = s.interval_set();
      std::cout << to_string(x) << "\n";
      out.push_back(to_json(x));
    } else if (a.kind == "simplex") {
      RandomSimplex f = s.random_simplex(a.n);
      std::cout << to_string(f) << "\n";
      out.push_back(to_json(f));
    } else {
      CylinderPoint f = s.cylinder(a.n);
      std::cout << to_string(f) << "\n";
      out.push_back(to_json(f));
    }
  }
  if (!write_json(a.json, {{"schema", kSchema}, {"kind", a.kind}, {"values", out}})) return kExitUsage;
  return kExitPass;
}

int demo_product(Json& log) {
  std::cout << "(U,V) = (A10 ∪ A11, A01 ∪ A11) for a point of F×F with A01 or A10 empty,\n"
               "so (U,V) is in the image exactly when U ⊆ V or V ⊆ U.\n";
  IntervalSet u = parse_interval_set("[0,1/2)");
  IntervalSet v0 = parse_interval_set("[0,3/4)");
  IntervalSet v = parse_interval_set("[1/4,3/4)");
  ProductPoint pre(complement(v0), difference(v0, u), IntervalSet{}, u);
  std::cout << "nested:       U=" << to_string(u) << " V=" << to_string(v0) << " accepted, preimage A00="
            << to_string(pre.a00) << " A01=" << to_string(pre.a01) << " A10=" << to_string(pre.a10)
            << " A11=" << to_string(pre.a11) << "\n";
  const bool rejected = !has_preimage(u, v) && !has_preimage_brute(u, v);
  std::cout << "incomparable: U=" << to_string(u) << " V=" << to_string(v) << (rejected ? " rejected" : " ACCEPTED")
            << " (U∖V=" << to_string(difference(u, v)) << ", V∖U=" << to_string(difference(v, u)) << ")\n";
  log = {{"accepted", {to_json(u), to_json(v0)}}, {"rejected", {to_json(u), to_json(v)}}, {"ok", rejected}};
  return rejected ? kExitPass : kExitFailure;
}

int demo_trace(const std::string& point, long steps, Json& log) {
  RandomSimplex f = point.empty() ? suites::degeneracy_witness_point() : parse_random_simplex(point);
  std::cout << "f = " << to_string(f) << "\nsection(law(f)) = " << to_string(section(law(f))) << "\n";
  Json rows = Json::array();
  bool ok = true;
  for (long k = 0; k <= steps; ++k) {
    Rational u = rat(k, steps);
    RandomSimplex h = homotopy_H(u, f);
    std::cout << "u=" << to_string(u) << "  H(u,f) = " << to_string(h) << "\n";
    rows.push_back({{"u", to_string(u)}, {"H", to_json(h)}});
    ok = ok && law(h) == law(f);
  }
  ok = ok && homotopy_H(0, f) == f && homotopy_H(1, f) == section(law(f));
  std::cout << (ok ? "endpoints and law preserved\n" : "ENDPOINT OR LAW MISMATCH\n");
  log = {{"f", to_json(f)}, {"trace", rows}, {"ok", ok}};
  return ok ? kExitPass : kExitFailure;
}

int demo_horn(std::size_t n, std::size_t k, std::uint64_t seed, Json& log) {
  if (n < 1 || k > n) {
    std::cerr << "error: horn-fill needs n >= 1 and k <= n\n";
    return kExitUsage;
  }
  // z_i = Z∘dᵢ for Z = H(1/3,·): a compatible family by construction
  std::map<std::size_t, HornFiller<RandomSimplex>::FaceMap> z;
  for (std::size_t i = 0; i <= n; ++i) {
    if (i != k) z[i] = [i](const RandomSimplex& g) { return homotopy_H(rat(1, 3), face(i, g)); };
  }
  HornFiller<RandomSimplex> fill(n, k, z);
  Sampler s(seed);
  RandomSimplex g = s.random_simplex(n - 1);
  std::cout << "horn Λ" << n << "^" << k << ", z_i = H(1/3, face(i,·)), g = " << to_string(g) << "\n";
  bool ok = true;
  Json faces = Json::array();
  for (std::size_t i = 0; i <= n; ++i) {
    if (i == k) continue;
    RandomSimplex lhs = fill(face(i, g));
    RandomSimplex rhs = z.at(i)(g);
    const bool match = lhs == rhs;
    ok = ok && match;
    std::cout << "  face " << i << ": filler(face(i,g)) = " << to_string(lhs) << (match ? "  matches z_i(g)\n" : "  MISMATCH\n");
    faces.push_back({{"i", i}, {"filler", to_json(lhs)}, {"z_i", to_json(rhs)}, {"match", match}});
  }
  RandomSimplex f = s.random_simplex(n, true);
  RandomSimplex r = horn_retract(f, k);
  std::cout << "  interior f = " << to_string(f) << "\n  retract    = " << to_string(r)
            << "\n  filler(f)  = " << to_string(fill(f)) << "\n";
  log = {{"n", n}, {"k", k}, {"g", to_json(g)}, {"faces", faces}, {"f", to_json(f)}, {"filler_f", to_json(fill(f))}, {"ok", ok}};
  return ok ? kExitPass : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"randotop: exact-arithmetic randomized simplices"};
  app.require_subcommand(1);

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "run seeded property suites");
  verify->add_option("--suite", va.suites, "suite name or 'all' (repeatable, comma-separated)")->delimiter(',');
  verify->add_option("--trials", va.opt.trials, "samples per property (0: suite default)");
  verify->add_option("--seed", va.opt.seed, "base seed");
  verify->add_option("--max-n", va.opt.max_n, "largest simplex dimension")->check(CLI::Range(1, 6));
  verify->add_option("--max-denominator", va.opt.max_denominator, "bound on sampled denominators")
      ->check(CLI::Range(1L, 1000000L));
  verify->add_option("--json", va.json, "write a JSON report ('-' for stdout)");
  verify->add_flag("--quiet", va.quiet, "print nothing; rely on the exit code");
  verify->add_flag("--timing", va.timing, "include runtimes (reports are then not reproducible)");

  SampleArgs sa;
  auto* sample = app.add_subcommand("sample", "print seeded random values");
  sample->add_option("kind", sa.kind, "intervalset | simplex | cylinder")
      ->required()
      ->check(CLI::IsMember({"intervalset", "simplex", "cylinder"}));
  sample->add_option("n", sa.n, "dimension");
  sample->add_option("--seed", sa.seed, "seed");
  sample->add_option("--count", sa.count, "number of values");
  sample->add_option("--max-denominator", sa.max_den, "bound on denominators")->check(CLI::Range(1L, 1000000L));
  sample->add_option("--json", sa.json, "write values as JSON ('-' for stdout)");

  std::string demo_name;
  std::string demo_json;
  std::string trace_point;
  long trace_steps = 10;
  std::size_t horn_n = 2;
  std::size_t horn_k = 1;
  std::uint64_t demo_seed = 1;
  auto* demo = app.add_subcommand("demo", "worked examples");
  demo->add_option("name", demo_name, "product-counterexample | homotopy-trace | horn-fill")
      ->required()
      ->check(CLI::IsMember({"product-counterexample", "homotopy-trace", "horn-fill"}));
  demo->add_option("--point", trace_point, "homotopy-trace: starting point in text form");
  demo->add_option("--steps", trace_steps, "homotopy-trace: number of u steps")->check(CLI::Range(1L, 1000L));
  demo->add_option("--n", horn_n, "horn-fill: dimension");
  demo->add_option("--k", horn_k, "horn-fill: missing face");
  demo->add_option("--seed", demo_seed, "horn-fill: seed");
  demo->add_option("--json", demo_json, "write the narrative as JSON ('-' for stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*verify) return run_verify(va);
    if (*sample) return run_sample(sa);
    Json log;
    int code = kExitUsage;
    if (demo_name == "product-counterexample") code = demo_product(log);
    if (demo_name == "homotopy-trace") code = demo_trace(trace_point, trace_steps, log);
    if (demo_name == "horn-fill") code = demo_horn(horn_n, horn_k, demo_seed, log);
    if (code != kExitUsage) {
      log["schema"] = kSchema;
      log["demo"] = demo_name;
      if (!write_json(demo_json, log)) return kExitUsage;
    }
    return code;
  } catch (const std::exception& e) {
    // malformed --point text and out-of-range arguments end up here
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
