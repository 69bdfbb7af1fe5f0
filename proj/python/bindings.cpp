#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tuttet/embed.hpp"
#include "tuttet/experiment.hpp"
#include "tuttet/generators.hpp"
#include "tuttet/io.hpp"
#include "tuttet/minors.hpp"
#include "tuttet/validate.hpp"
#include "tuttet/verify.hpp"

namespace py = pybind11;

namespace {

py::object json_to_py(const tuttet::Json& j) {
  switch (j.type()) {
    case nlohmann::json::value_t::null: return py::none();
    case nlohmann::json::value_t::boolean: return py::bool_(j.get<bool>());
    case nlohmann::json::value_t::number_integer: return py::int_(j.get<long long>());
    case nlohmann::json::value_t::number_unsigned: return py::int_(j.get<unsigned long long>());
    case nlohmann::json::value_t::number_float: return py::float_(j.get<double>());
    case nlohmann::json::value_t::string: return py::str(j.get<std::string>());
    case nlohmann::json::value_t::array: {
      py::list out;
      for (const auto& item : j) out.append(json_to_py(item));
      return out;
    }
    case nlohmann::json::value_t::object: {
      py::dict out;
      for (auto it = j.begin(); it != j.end(); ++it) out[py::str(it.key())] = json_to_py(it.value());
      return out;
    }
    default: return py::none();
  }
}

tuttet::TetMesh make_mesh(int n_vertices, const std::vector<std::array<int, 4>>& tets,
                          const std::optional<std::vector<std::array<double, 3>>>& coords) {
  tuttet::TetMesh mesh;
  mesh.n_vertices = n_vertices;
  for (const auto& t : tets) mesh.tets.push_back({t[0], t[1], t[2], t[3]});
  if (coords) {
    std::vector<tuttet::Vec3> c;
    for (const auto& p : *coords) c.emplace_back(p[0], p[1], p[2]);
    mesh.coords = std::move(c);
  }
  return mesh;
}

tuttet::WeightScheme scheme_from(const std::string& weights, double alpha, std::uint64_t seed) {
  if (weights == "uniform") return tuttet::WeightScheme::uniform();
  if (weights == "dirichlet") return tuttet::WeightScheme::dirichlet(alpha, seed);
  throw std::invalid_argument("weights must be 'uniform' or 'dirichlet'");
}

tuttet::RealizedMesh solve_for(const tuttet::TetMesh& mesh, const std::string& weights, double alpha,
                               std::uint64_t seed, const std::string& boundary) {
  if (!mesh.coords) throw std::invalid_argument("mesh has no coordinates");
  const tuttet::Complex complex = tuttet::build_complex(mesh);
  const tuttet::BoundaryStrategy strategy = boundary == "sphere"
                                                ? tuttet::BoundaryStrategy::SphereNormalize
                                                : tuttet::BoundaryStrategy::AsGiven;
  const tuttet::BoundaryPlacement placement =
      tuttet::place_boundary(complex, strategy, *mesh.coords);
  const tuttet::WeightMatrix matrix =
      tuttet::assemble_weights(complex, scheme_from(weights, alpha, seed));
  return tuttet::solve_positions(complex, matrix, placement);
}

}  // namespace

PYBIND11_MODULE(_tuttet, m) {
  m.doc() = "Convex-combination embeddings of tetrahedral meshes";

  py::register_exception<tuttet::Error>(m, "TuttetError");

  py::class_<tuttet::TetMesh>(m, "TetMesh")
      .def(py::init(&make_mesh), py::arg("n_vertices"), py::arg("tets"),
           py::arg("coords") = py::none())
      .def_readonly("n_vertices", &tuttet::TetMesh::n_vertices)
      .def_property_readonly("tets",
                             [](const tuttet::TetMesh& mesh) {
                               std::vector<std::array<int, 4>> out;
                               for (const auto& t : mesh.tets) out.push_back({t[0], t[1], t[2], t[3]});
                               return out;
                             })
      .def_property_readonly("coords",
                             [](const tuttet::TetMesh& mesh) -> py::object {
                               if (!mesh.coords) return py::none();
                               std::vector<std::array<double, 3>> out;
                               for (const auto& p : *mesh.coords)
                                 out.push_back({p.x(), p.y(), p.z()});
                               return py::cast(out);
                             })
      .def("__repr__", [](const tuttet::TetMesh& mesh) {
        return "TetMesh(n_vertices=" + std::to_string(mesh.n_vertices) +
               ", n_tets=" + std::to_string(mesh.tets.size()) + ")";
      });

  m.def("generate", &tuttet::generate_named, py::arg("name"),
        "Build a named reference mesh (see generator_names()).");
  m.def("generator_names", &tuttet::generator_names);
  m.def(
      "load_mesh",
      [](const std::string& path) { return tuttet::load_mesh(path, tuttet::guess_format(path)); },
      py::arg("path"));
  m.def(
      "save_mesh",
      [](const tuttet::TetMesh& mesh, const std::string& path) {
        tuttet::save_mesh(mesh, path, tuttet::guess_format(path));
      },
      py::arg("mesh"), py::arg("path"));

  m.def(
      "euler_check",
      [](const tuttet::TetMesh& mesh) {
        const tuttet::EulerCheck e = tuttet::euler_check(tuttet::build_complex(mesh));
        return py::make_tuple(e.chi_complex, e.chi_boundary, e.is_ball_candidate);
      },
      py::arg("mesh"), "Returns (chi, boundary_chi, is_ball_candidate).");

  m.def(
      "validate",
      [](const tuttet::TetMesh& mesh, long budget) {
        const tuttet::Complex complex = tuttet::build_complex(mesh);
        const auto minors = tuttet::linkless_exclusion_check(tuttet::mesh_graph(complex), budget);
        return json_to_py(tuttet::to_json(tuttet::validate_all(complex, minors)));
      },
      py::arg("mesh"), py::arg("budget") = tuttet::kDefaultMinorBudget,
      "Full hypothesis report including minor exclusion.");

  m.def(
      "minor_exclusion",
      [](const tuttet::TetMesh& mesh, long budget) {
        const tuttet::Complex complex = tuttet::build_complex(mesh);
        const tuttet::Graph graph = tuttet::mesh_graph(complex);
        tuttet::Json doc = tuttet::to_json(tuttet::linkless_exclusion_check(graph, budget));
        doc["four_clique"] = tuttet::to_json(tuttet::four_clique_bound_check(graph));
        return json_to_py(doc);
      },
      py::arg("mesh"), py::arg("budget") = tuttet::kDefaultMinorBudget);

  m.def(
      "embed",
      [](const tuttet::TetMesh& mesh, const std::string& weights, double alpha, std::uint64_t seed,
         const std::string& boundary) {
        const tuttet::RealizedMesh realized = solve_for(mesh, weights, alpha, seed, boundary);
        tuttet::TetMesh out = mesh;
        out.coords = realized.coords;
        return py::make_tuple(out, realized.residual);
      },
      py::arg("mesh"), py::arg("weights") = "uniform", py::arg("alpha") = 1.0, py::arg("seed") = 1,
      py::arg("boundary") = "as-given",
      "Solve interior positions; returns (realized mesh, residual).");

  m.def(
      "certify",
      [](const tuttet::TetMesh& mesh, int samples, std::uint64_t seed) {
        const tuttet::Complex complex = tuttet::build_complex(mesh);
        tuttet::CertifyOptions options;
        options.containment.n_samples = samples;
        options.containment.seed = seed;
        return json_to_py(
            tuttet::to_json(tuttet::certify(tuttet::realize_as_given(complex), options)));
      },
      py::arg("mesh"), py::arg("samples") = 1000, py::arg("seed") = 1,
      "Embedding certificate for a mesh with coordinates.");

  m.def(
      "experiment",
      [](const tuttet::TetMesh& mesh, long trials, double alpha, std::uint64_t seed) {
        if (!mesh.coords) throw std::invalid_argument("mesh has no coordinates");
        const tuttet::Complex complex = tuttet::build_complex(mesh);
        const tuttet::BoundaryPlacement placement =
            tuttet::place_boundary(complex, tuttet::BoundaryStrategy::AsGiven, *mesh.coords);
        return json_to_py(tuttet::to_json(
            tuttet::run_random_weight_experiment(complex, placement, trials, alpha, seed)));
      },
      py::arg("mesh"), py::arg("trials") = 100, py::arg("alpha") = 1.0, py::arg("seed") = 1);
}
