// crystal-pop: generate type A crystals, run pop-stack dynamics, decide
// lattice-ness and run the verification suites.
//
// Exit codes: 0 success, 1 a property check failed, 2 invalid input.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "crystal_pop/classifier.hpp"
#include "crystal_pop/crystal.hpp"
#include "crystal_pop/error.hpp"
#include "crystal_pop/key.hpp"
#include "crystal_pop/perm.hpp"
#include "crystal_pop/pop.hpp"
#include "crystal_pop/poset.hpp"
#include "crystal_pop/serialize.hpp"

namespace {

using namespace crystal_pop;

constexpr int kExitOk = 0;
constexpr int kExitPropertyFailed = 1;
constexpr int kExitInvalidInput = 2;

struct RunConfig {
  std::string shape;
  int n = 0;
  std::string format;
  std::string element;
  std::string permutation;
  int sweep_m = 0;
  int verify_m = 0;
  int max_n = 4;
  int max_cells = 8;
  std::size_t cap = kDefaultVertexCap;
  unsigned jobs = 1;
  std::string out;
};

std::size_t default_cap() {
  if (const char* env = std::getenv("CRYSTAL_POP_CAP")) {
    try {
      return static_cast<std::size_t>(std::stoull(env));
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidArgument, std::string("CRYSTAL_POP_CAP is not a number: ") + env);
    }
  }
  return kDefaultVertexCap;
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(cfg.out);
  if (!file) throw Error(ErrorCode::InvalidArgument, "cannot open " + cfg.out + " for writing");
  file << text;
}

Partition shape_of(const RunConfig& cfg, bool nonzero) {
  Partition lambda = Partition::parse(cfg.shape, cfg.n);
  if (nonzero && lambda.empty()) {
    throw Error(ErrorCode::InvalidPartition, "this command needs a nonzero partition");
  }
  return lambda;
}

void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed) {
    if (format == f) return;
  }
  throw Error(ErrorCode::InvalidArgument, "unsupported format '" + format + "'");
}

int cmd_gen(const RunConfig& cfg) {
  require_format(cfg.format, {"text", "json", "dot"});
  const CrystalGraph b = generate_crystal(shape_of(cfg, false), cfg.cap);
  if (cfg.format == "json") {
    emit(cfg, crystal_to_json(b));
  } else if (cfg.format == "dot") {
    emit(cfg, crystal_to_dot(b));
  } else {
    std::ostringstream out;
    out << "vertices: " << b.size() << "\nedges: " << b.num_edges() << "\n";
    for (const ColoredEdge& e : b.edges()) {
      out << b.vertex(e.src).to_string() << " -F" << e.color << "-> " << b.vertex(e.dst).to_string()
          << "\n";
    }
    emit(cfg, out.str());
  }
  return kExitOk;
}

int cmd_pop(const RunConfig& cfg) {
  require_format(cfg.format, {"text", "json", "csv"});
  const CrystalGraph b = generate_crystal(shape_of(cfg, true), cfg.cap);
  if (!cfg.element.empty()) {
    const OrbitReport report = pop_orbit(b, b.find_text(cfg.element));
    std::ostringstream out;
    out << "orbit length: " << report.length() << "\n";
    for (VertexId v : report.trajectory) out << b.vertex(v).to_string() << "\n";
    emit(cfg, out.str());
    return kExitOk;
  }
  const MaxOrbit max = max_orbit_size(b);
  if (cfg.format == "csv") {
    emit(cfg, orbit_table_csv(b, orbit_lengths(b)));
  } else if (cfg.format == "json") {
    emit(cfg, orbit_record_json(b, max));
  } else {
    std::ostringstream out;
    out << "max orbit: " << max.size << "\ncoxeter number: " << b.rank() + 1
        << "\nwitness: " << b.vertex(max.witness).to_string() << "\n";
    emit(cfg, out.str());
  }
  return max.size == static_cast<std::size_t>(b.rank()) + 1 ? kExitOk : kExitPropertyFailed;
}

int cmd_perm_pop(const RunConfig& cfg) {
  std::ostringstream out;
  int status = kExitOk;
  if (!cfg.permutation.empty()) {
    const auto orbit = permutation_orbit(Permutation::parse(cfg.permutation));
    out << "orbit length: " << orbit.size() << "\n";
    for (const Permutation& w : orbit) out << w.to_string() << "\n";
  }
  if (cfg.sweep_m > 0) {
    if (cfg.sweep_m > 10) throw Error(ErrorCode::InvalidArgument, "--sweep is limited to m <= 10");
    const PermutationOrbitMax max = max_permutation_orbit(cfg.sweep_m);
    std::size_t mismatches = 0;
    for (const Permutation& w : all_permutations(cfg.sweep_m)) {
      if (pop_permutation(w) != coxeter_pop(w)) ++mismatches;
    }
    out << "S_" << cfg.sweep_m << " max orbit: " << max.size << " (witness "
        << max.witness.to_string() << ")\nrun reversal vs w*w0(D_R(w)) mismatches: " << mismatches
        << "\n";
    if (max.size != static_cast<std::size_t>(cfg.sweep_m) || mismatches != 0) {
      status = kExitPropertyFailed;
    }
  }
  if (cfg.permutation.empty() && cfg.sweep_m == 0) {
    throw Error(ErrorCode::InvalidArgument, "give a permutation or --sweep M");
  }
  emit(cfg, out.str());
  return status;
}

int cmd_lattice(const RunConfig& cfg) {
  require_format(cfg.format, {"text", "json"});
  const Partition lambda = shape_of(cfg, false);
  const CrystalGraph b = generate_crystal(lambda, cfg.cap);
  const ReachabilityIndex index(b);
  const bool lattice = is_lattice(b, index).is_lattice;
  const Classification predicted = predict_lattice(lambda);
  const auto certificate = lattice ? std::nullopt : certificate_for(b, index);

  if (cfg.format == "json") {
    emit(cfg, certificate ? certificate_to_json(*certificate) : std::string("{\"kind\":\"lattice\"}\n"));
  } else {
    std::ostringstream out;
    out << "lattice: " << (lattice ? "yes" : "no") << "\npredicted: "
        << (predicted.is_lattice_predicted ? "yes" : "no") << " (" << to_string(predicted.matched_clause)
        << ")\n";
    if (lattice) {
      if (b.size() <= 400) {
        out << "distributive: " << (*is_distributive(b, index) ? "yes" : "no") << "\n";
      } else {
        out << "distributive: not checked (more than 400 vertices)\n";
      }
    }
    if (certificate) {
      out << (certificate->kind == CertificateKind::Bowtie ? "bowtie" : "no-join pair") << " ("
          << certificate->construction << "):\n";
      for (const Tableau& t : certificate->tableaux) out << "  " << t.to_string() << "\n";
    }
    emit(cfg, out.str());
  }
  const bool consistent = lattice == predicted.is_lattice_predicted &&
                          (lattice || (certificate && verify_certificate(b, index, *certificate)));
  return consistent ? kExitOk : kExitPropertyFailed;
}

int cmd_classify(const RunConfig& cfg) {
  require_format(cfg.format, {"text", "csv"});
  const SweepReport report = classification_sweep(cfg.max_n, cfg.max_cells, cfg.cap, cfg.jobs);
  if (cfg.format == "csv") {
    emit(cfg, sweep_to_csv(report));
  } else {
    std::ostringstream out;
    out << "cases: " << report.rows.size() << "\ndisagreements: " << report.disagreements
        << "\ncertificate failures: " << report.certificate_failures
        << "\nskipped: " << report.skipped << "\n";
    for (const SweepRow& row : report.rows) {
      if (row.skipped) {
        out << "skipped " << row.lambda.to_string() << " n=" << row.lambda.rank()
            << " (over vertex cap)\n";
      } else if (row.predicted != row.brute_force) {
        out << "disagreement " << row.lambda.to_string() << " n=" << row.lambda.rank() << "\n";
      }
    }
    emit(cfg, out.str());
  }
  return report.disagreements == 0 && report.certificate_failures == 0 ? kExitOk
                                                                         : kExitPropertyFailed;
}

int cmd_verify(const RunConfig& cfg) {
  std::ostringstream out;
  bool all_ok = true;
  auto line = [&](const std::string& name, bool ok, const std::string& detail = "") {
    out << (ok ? "PASS " : "FAIL ") << name << (detail.empty() ? "" : ": " + detail) << "\n";
    all_ok = all_ok && ok;
  };
  if (cfg.verify_m > 0) {
    if (cfg.verify_m > 8) throw Error(ErrorCode::InvalidArgument, "--m is limited to 8");
    const LemmaReport lemmas = verify_coxeter_pop_lemmas(cfg.verify_m);
    line("coxeter pop lemmas on S_" + std::to_string(cfg.verify_m), lemmas.ok(),
         std::to_string(lemmas.checks) + " checks" +
             (lemmas.ok() ? "" : ", first violation " + lemmas.violations.front()));
    const PermutationOrbitMax max = max_permutation_orbit(cfg.verify_m);
    line("max Pop orbit equals m", max.size == static_cast<std::size_t>(cfg.verify_m),
         std::to_string(max.size));
  }
  if (!cfg.shape.empty() || cfg.verify_m == 0) {
    const CrystalGraph b = generate_crystal(shape_of(cfg, true), cfg.cap);
    line("poppable", is_poppable(b));
    line("Pop agrees with Coxeter pop on the quotient", pop_agreement_on_quotient(b));
    const MaxOrbit max = max_orbit_size(b);
    line("max orbit equals n+1", max.size == static_cast<std::size_t>(b.rank()) + 1,
         std::to_string(max.size));
    const DemazureFamily family = build_demazure_family(b);
    const KeyReport key = verify_key_properties(b, family);
    line("key map properties", key.ok(),
         std::to_string(key.checks) + " checks" + (key.ok() ? "" : ", " + key.violations.front()));
    const KeyReport inequality = verify_pop_key_inequality(b, family);
    line("key of Pop below Pop of key", inequality.ok(),
         std::to_string(inequality.checks) + " checks" +
             (inequality.ok() ? "" : ", " + inequality.violations.front()));
  }
  emit(cfg, out.str());
  return all_ok ? kExitOk : kExitPropertyFailed;
}

int cmd_key(const RunConfig& cfg) {
  const CrystalGraph b = generate_crystal(shape_of(cfg, false), cfg.cap);
  emit(cfg, key_map_to_json(b, key_map_all(build_demazure_family(b))));
  return kExitOk;
}

void add_crystal_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--shape", cfg.shape, "partition, e.g. 2,1")->required();
  sub->add_option("--n", cfg.n, "rank n (entries at most n+1)")->required()->check(CLI::Range(1, 30));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Type A crystal posets, pop-stack sorting and lattice tests"};
  app.require_subcommand(1);
  RunConfig cfg;
  try {
    cfg.cap = default_cap();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }
  app.add_option("--cap", cfg.cap, "vertex cap for crystal generation (env CRYSTAL_POP_CAP)");
  app.add_option("--out", cfg.out, "write output to a file instead of stdout");

  auto* gen = app.add_subcommand("gen", "generate a crystal");
  add_crystal_options(gen, cfg);
  gen->add_option("--format", cfg.format, "text | json | dot")->default_val("text");

  auto* pop = app.add_subcommand("pop", "Pop orbit statistics or a single orbit");
  add_crystal_options(pop, cfg);
  pop->add_option("--element", cfg.element, "tableau such as 1,2/3");
  pop->add_option("--format", cfg.format, "text | json | csv")->default_val("text");

  auto* perm_pop = app.add_subcommand("perm-pop", "pop-stack sorting on permutations");
  perm_pop->add_option("w", cfg.permutation, "permutation in one-line notation");
  perm_pop->add_option("--sweep", cfg.sweep_m, "sweep all of S_M")->check(CLI::Range(1, 10));

  auto* lattice = app.add_subcommand("lattice", "decide lattice-ness with a certificate");
  add_crystal_options(lattice, cfg);
  lattice->add_option("--format", cfg.format, "text | json")->default_val("text");

  auto* classify = app.add_subcommand("classify", "compare the closed form with brute force");
  classify->add_option("--max-n", cfg.max_n)->check(CLI::Range(1, 30))->default_val(4);
  classify->add_option("--max-cells", cfg.max_cells)->check(CLI::Range(1, 64))->default_val(8);
  classify->add_option("--jobs", cfg.jobs, "worker threads")->default_val(1);
  classify->add_option("--format", cfg.format, "text | csv")->default_val("text");

  auto* verify = app.add_subcommand("verify", "run the property suites");
  verify->add_option("--shape", cfg.shape, "partition for the crystal suite");
  verify->add_option("--n", cfg.n, "rank n")->check(CLI::Range(1, 30));
  verify->add_option("--m", cfg.verify_m, "symmetric group size for the lemma suite")
      ->check(CLI::Range(1, 8));

  auto* key = app.add_subcommand("key", "key map of every vertex as JSON");
  add_crystal_options(key, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalidInput;
  }

  try {
    if (*gen) return cmd_gen(cfg);
    if (*pop) return cmd_pop(cfg);
    if (*perm_pop) return cmd_perm_pop(cfg);
    if (*lattice) return cmd_lattice(cfg);
    if (*classify) return cmd_classify(cfg);
    if (*verify) {
      if (cfg.verify_m == 0 && (cfg.shape.empty() || cfg.n == 0)) {
        throw Error(ErrorCode::InvalidArgument, "verify needs --shape and --n, or --m");
      }
      return cmd_verify(cfg);
    }
    if (*key) return cmd_key(cfg);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.is_input_error() ? kExitInvalidInput : kExitPropertyFailed;
  }
  return kExitInvalidInput;
}
