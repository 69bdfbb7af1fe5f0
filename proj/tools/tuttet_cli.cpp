#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "tuttet/embed.hpp"
#include "tuttet/experiment.hpp"
#include "tuttet/generators.hpp"
#include "tuttet/io.hpp"
#include "tuttet/mesh.hpp"
#include "tuttet/minors.hpp"
#include "tuttet/validate.hpp"
#include "tuttet/verify.hpp"

namespace {

constexpr int kExitUsage = 64;
constexpr int kExitData = 65;
constexpr int kExitInternal = 70;

std::uint64_t default_seed() {
  if (const char* env = std::getenv("TUTTET_SEED")) return std::strtoull(env, nullptr, 10);
  return 1;
}

tuttet::TetMesh load_any(const std::string& path) {
  return tuttet::load_mesh(path, tuttet::guess_format(path));
}

int data_exit_code(const tuttet::Error& e) {
  switch (e.code()) {
    case tuttet::ErrorCode::SingularSystem:
      return kExitInternal;
    default:
      return kExitData;
  }
}

int run_validate(const std::string& path, long budget) {
  const tuttet::Complex complex = tuttet::build_complex(load_any(path));
  const tuttet::LinklessExclusion minors =
      tuttet::linkless_exclusion_check(tuttet::mesh_graph(complex), budget);
  const tuttet::ValidationReport report = tuttet::validate_all(complex, minors);
  std::cout << tuttet::to_json(report).dump(2) << "\n";
  switch (report.overall) {
    case tuttet::CheckStatus::Pass: return 0;
    case tuttet::CheckStatus::Partial: return 2;
    default: return 1;
  }
}

int run_minors(const std::string& path, long budget, bool full_petersen) {
  const tuttet::Complex complex = tuttet::build_complex(load_any(path));
  const tuttet::Graph graph = tuttet::mesh_graph(complex);
  const tuttet::LinklessExclusion result = tuttet::linkless_exclusion_check(graph, budget);

  tuttet::Json doc = tuttet::to_json(result);
  doc["four_clique"] = tuttet::to_json(tuttet::four_clique_bound_check(graph));
  bool any_yes = result.k6.answer == tuttet::MinorAnswer::Yes ||
                 result.k331.answer == tuttet::MinorAnswer::Yes;
  bool any_unknown = result.unknown();
  if (full_petersen) {
    tuttet::Json family = tuttet::Json::array();
    int index = 0;
    for (const tuttet::Graph& pattern : tuttet::petersen_family()) {
      const tuttet::MinorQueryResult r = tuttet::has_minor(graph, pattern, budget);
      tuttet::Json entry = tuttet::to_json(r);
      entry["pattern_vertices"] = pattern.n;
      entry["pattern_index"] = index++;
      any_yes |= r.answer == tuttet::MinorAnswer::Yes;
      any_unknown |= r.answer == tuttet::MinorAnswer::Unknown;
      family.push_back(std::move(entry));
    }
    doc["petersen_family"] = std::move(family);
  }
  std::cout << doc.dump(2) << "\n";
  return any_yes ? 1 : (any_unknown ? 2 : 0);
}

int run_embed(const std::string& path, const std::string& weights, double alpha, std::uint64_t seed,
              const std::string& boundary, const std::string& out_path) {
  const tuttet::TetMesh mesh = load_any(path);
  if (!mesh.coords)
    throw tuttet::Error(tuttet::ErrorCode::InvalidMesh, "embedding needs input coordinates");
  const tuttet::Complex complex = tuttet::build_complex(mesh);

  const tuttet::BoundaryStrategy strategy = boundary == "sphere"
                                                ? tuttet::BoundaryStrategy::SphereNormalize
                                                : tuttet::BoundaryStrategy::AsGiven;
  const tuttet::BoundaryPlacement placement =
      tuttet::place_boundary(complex, strategy, *mesh.coords);
  const tuttet::WeightScheme scheme = weights == "dirichlet"
                                          ? tuttet::WeightScheme::dirichlet(alpha, seed)
                                          : tuttet::WeightScheme::uniform();
  const tuttet::WeightMatrix matrix = tuttet::assemble_weights(complex, scheme);
  const tuttet::RealizedMesh realized = tuttet::solve_positions(complex, matrix, placement);

  tuttet::TetMesh out = mesh;
  out.coords = realized.coords;
  tuttet::save_mesh(out, out_path, tuttet::MeshFormat::Json);

  tuttet::Json summary;
  summary["output"] = out_path;
  summary["interior_vertices"] = complex.interior_vertices().size();
  summary["residual"] = realized.residual;
  summary["vacuous"] = realized.vacuous;
  std::cout << summary.dump(2) << "\n";
  return 0;
}

int run_verify(const std::string& path, int samples, std::uint64_t seed) {
  const tuttet::Complex complex = tuttet::build_complex(load_any(path));
  const tuttet::RealizedMesh realized = tuttet::realize_as_given(complex);
  tuttet::CertifyOptions options;
  options.containment.n_samples = samples;
  options.containment.seed = seed;
  const tuttet::EmbeddingCertificate cert = tuttet::certify(realized, options);
  std::cout << tuttet::to_json(cert).dump(2) << "\n";
  return cert.verdict == tuttet::Verdict::Embedded ? 0 : 1;
}

int run_experiment(const std::string& path, long trials, double alpha, std::uint64_t seed) {
  const tuttet::TetMesh mesh = load_any(path);
  if (!mesh.coords)
    throw tuttet::Error(tuttet::ErrorCode::InvalidMesh, "experiment needs input coordinates");
  const tuttet::Complex complex = tuttet::build_complex(mesh);
  const tuttet::BoundaryPlacement placement =
      tuttet::place_boundary(complex, tuttet::BoundaryStrategy::AsGiven, *mesh.coords);
  const tuttet::ExperimentResult result =
      tuttet::run_random_weight_experiment(complex, placement, trials, alpha, seed, path);
  std::cout << tuttet::to_json(result).dump(2) << "\n";
  return 0;
}

int run_gen(const std::string& name, const std::string& out_path) {
  tuttet::save_mesh(tuttet::generate_named(name), out_path, tuttet::MeshFormat::Json);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Convex-combination embeddings of tetrahedral meshes: validation, minor exclusion, "
               "solving and embedding certification"};
  app.require_subcommand(1);

  std::string mesh_path, out_path = "out.json";
  std::string weights = "uniform", boundary = "as-given", gen_name;
  double alpha = 1.0;
  std::uint64_t seed = default_seed();
  long budget = tuttet::kDefaultMinorBudget;
  long trials = 100;
  int samples = 1000;
  bool full_petersen = false;

  CLI::App* validate = app.add_subcommand("validate", "check the embedding-theorem hypotheses");
  validate->add_option("mesh", mesh_path, "mesh file (.json or tetgen .node/.ele)")->required();
  validate->add_option("--budget", budget, "minor search node budget");

  CLI::App* minors = app.add_subcommand("minors", "K6 / K_{3,3,1} minor exclusion and clique bound");
  minors->add_option("mesh", mesh_path)->required();
  minors->add_option("--budget", budget, "minor search node budget");
  minors->add_flag("--full-petersen", full_petersen, "also test all seven Petersen-family graphs");

  CLI::App* embed = app.add_subcommand("embed", "solve convex-combination positions");
  embed->add_option("mesh", mesh_path)->required();
  embed->add_option("--weights", weights)->check(CLI::IsMember({"uniform", "dirichlet"}));
  embed->add_option("--alpha", alpha, "Dirichlet concentration");
  embed->add_option("--seed", seed, "weight sampling seed");
  embed->add_option("--boundary", boundary)->check(CLI::IsMember({"as-given", "sphere"}));
  embed->add_option("-o,--output", out_path, "realized mesh output path");

  CLI::App* verify = app.add_subcommand("verify", "certify a realized mesh");
  verify->add_option("mesh", mesh_path, "mesh file with coordinates")->required();
  verify->add_option("--samples", samples, "interior containment samples");
  verify->add_option("--seed", seed, "sampling seed");

  CLI::App* experiment = app.add_subcommand("experiment", "random-weight trial statistics");
  experiment->add_option("mesh", mesh_path)->required();
  experiment->add_option("--trials", trials);
  experiment->add_option("--alpha", alpha, "Dirichlet concentration");
  experiment->add_option("--seed", seed, "base seed; trial t uses seed^t");

  CLI::App* gen = app.add_subcommand("gen", "write a reference mesh");
  gen->add_option("name", gen_name, "one of: " + [] {
        std::string all;
        for (const auto& n : tuttet::generator_names()) all += (all.empty() ? "" : ", ") + n;
        return all;
      }())
      ->required();
  gen->add_option("-o,--output", out_path, "output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (validate->parsed()) return run_validate(mesh_path, budget);
    if (minors->parsed()) return run_minors(mesh_path, budget, full_petersen);
    if (embed->parsed()) return run_embed(mesh_path, weights, alpha, seed, boundary, out_path);
    if (verify->parsed()) return run_verify(mesh_path, samples, seed);
    if (experiment->parsed()) return run_experiment(mesh_path, trials, alpha, seed);
    if (gen->parsed()) return run_gen(gen_name, out_path);
  } catch (const tuttet::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return data_exit_code(e);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}
