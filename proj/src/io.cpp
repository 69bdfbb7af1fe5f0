#include "tuttet/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace tuttet {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidMesh: return "InvalidMesh";
    case ErrorCode::FaceOverShared: return "FaceOverShared";
    case ErrorCode::NonManifoldEdge: return "NonManifoldEdge";
    case ErrorCode::NonOrientable: return "NonOrientable";
    case ErrorCode::DisconnectedDual: return "DisconnectedDual";
    case ErrorCode::DegenerateFace: return "DegenerateFace";
    case ErrorCode::NotConvex: return "NotConvex";
    case ErrorCode::ProjectionCollision: return "ProjectionCollision";
    case ErrorCode::NotConvexAfterProjection: return "NotConvexAfterProjection";
    case ErrorCode::BadUserWeights: return "BadUserWeights";
    case ErrorCode::SingularSystem: return "SingularSystem";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::InconsistentCounts: return "InconsistentCounts";
    case ErrorCode::IoError: return "IoError";
  }
  return "Error";
}

Json to_json(const TetMesh& mesh) {
  Json doc;
  doc["version"] = 1;
  if (mesh.coords) {
    Json verts = Json::array();
    for (const Vec3& p : *mesh.coords) verts.push_back({p.x(), p.y(), p.z()});
    doc["vertices"] = std::move(verts);
  }
  Json tets = Json::array();
  for (const Tet& t : mesh.tets) tets.push_back({t[0], t[1], t[2], t[3]});
  doc["tets"] = std::move(tets);
  return doc;
}

TetMesh mesh_from_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("version") || doc["version"] != 1)
    throw Error(ErrorCode::ParseError, "expected a mesh document with version 1");
  if (!doc.contains("tets") || !doc["tets"].is_array())
    throw Error(ErrorCode::ParseError, "missing tets array");

  TetMesh mesh;
  int max_id = -1;
  for (const auto& item : doc["tets"]) {
    if (!item.is_array() || item.size() != 4)
      throw Error(ErrorCode::ParseError, "each tet needs four vertex indices");
    Tet t{};
    for (int i = 0; i < 4; ++i) {
      if (!item[i].is_number_integer()) throw Error(ErrorCode::ParseError, "tet index is not an integer");
      t[i] = item[i].get<int>();
      if (t[i] < 0) throw Error(ErrorCode::IndexOutOfRange, "negative vertex index");
      max_id = std::max(max_id, t[i]);
    }
    if (t[0] == t[1] || t[0] == t[2] || t[0] == t[3] || t[1] == t[2] || t[1] == t[3] || t[2] == t[3])
      throw Error(ErrorCode::InvalidMesh, "tet with repeated vertex");
    mesh.tets.push_back(t);
  }

  if (doc.contains("vertices")) {
    if (!doc["vertices"].is_array()) throw Error(ErrorCode::ParseError, "vertices must be an array");
    std::vector<Vec3> coords;
    for (const auto& item : doc["vertices"]) {
      if (!item.is_array() || item.size() != 3 || !item[0].is_number() || !item[1].is_number() ||
          !item[2].is_number())
        throw Error(ErrorCode::ParseError, "each vertex needs three coordinates");
      coords.emplace_back(item[0].get<double>(), item[1].get<double>(), item[2].get<double>());
    }
    mesh.coords = std::move(coords);
    mesh.n_vertices = static_cast<int>(mesh.coords->size());
    if (max_id >= mesh.n_vertices)
      throw Error(ErrorCode::IndexOutOfRange,
                  "tet index " + std::to_string(max_id) + " exceeds vertex count");
  } else {
    mesh.n_vertices = max_id + 1;
  }
  return mesh;
}

namespace {

TetMesh load_mesh_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError, std::string(e.what()));
  }
  return mesh_from_json(doc);
}

// Strips tetgen comments and splits into whitespace tokens, tracking line
// numbers for errors.
std::vector<std::pair<std::string, int>> tetgen_tokens(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
  std::vector<std::pair<std::string, int>> tokens;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) tokens.emplace_back(tok, line_no);
  }
  return tokens;
}

long tetgen_long(const std::vector<std::pair<std::string, int>>& tokens, size_t i,
                 const std::string& path) {
  if (i >= tokens.size()) throw Error(ErrorCode::ParseError, path + ": unexpected end of file");
  try {
    size_t pos = 0;
    long v = std::stol(tokens[i].first, &pos);
    if (pos != tokens[i].first.size()) throw std::invalid_argument("");
    return v;
  } catch (...) {
    throw Error(ErrorCode::ParseError, path + ":" + std::to_string(tokens[i].second) +
                                           ": expected integer, got '" + tokens[i].first + "'");
  }
}

double tetgen_double(const std::vector<std::pair<std::string, int>>& tokens, size_t i,
                     const std::string& path) {
  if (i >= tokens.size()) throw Error(ErrorCode::ParseError, path + ": unexpected end of file");
  try {
    size_t pos = 0;
    double v = std::stod(tokens[i].first, &pos);
    if (pos != tokens[i].first.size()) throw std::invalid_argument("");
    return v;
  } catch (...) {
    throw Error(ErrorCode::ParseError, path + ":" + std::to_string(tokens[i].second) +
                                           ": expected number, got '" + tokens[i].first + "'");
  }
}

std::string strip_suffix(const std::string& path) {
  for (const char* suffix : {".node", ".ele"}) {
    const std::string s(suffix);
    if (path.size() > s.size() && path.substr(path.size() - s.size()) == s)
      return path.substr(0, path.size() - s.size());
  }
  return path;
}

TetMesh load_mesh_tetgen(const std::string& path) {
  const std::string stem = strip_suffix(path);
  const std::string node_path = stem + ".node";
  const std::string ele_path = stem + ".ele";

  const auto node_tokens = tetgen_tokens(node_path);
  size_t i = 0;
  const long n_points = tetgen_long(node_tokens, i++, node_path);
  const long dim = tetgen_long(node_tokens, i++, node_path);
  const long n_attrs = tetgen_long(node_tokens, i++, node_path);
  const long n_markers = tetgen_long(node_tokens, i++, node_path);
  if (dim != 3) throw Error(ErrorCode::ParseError, node_path + ": expected dimension 3");
  if (n_points <= 0) throw Error(ErrorCode::InconsistentCounts, node_path + ": no points");

  std::vector<Vec3> coords(n_points);
  long index_base = -1;
  for (long p = 0; p < n_points; ++p) {
    const long idx = tetgen_long(node_tokens, i++, node_path);
    if (p == 0) {
      index_base = idx;
      if (index_base != 0 && index_base != 1)
        throw Error(ErrorCode::ParseError, node_path + ": first point index must be 0 or 1");
    }
    const long local = idx - index_base;
    if (local < 0 || local >= n_points)
      throw Error(ErrorCode::IndexOutOfRange, node_path + ": point index " + std::to_string(idx));
    for (int k = 0; k < 3; ++k) coords[local][k] = tetgen_double(node_tokens, i++, node_path);
    i += n_attrs + n_markers;
  }
  if (i != node_tokens.size())
    throw Error(ErrorCode::InconsistentCounts, node_path + ": trailing tokens");

  const auto ele_tokens = tetgen_tokens(ele_path);
  i = 0;
  const long n_tets = tetgen_long(ele_tokens, i++, ele_path);
  const long nodes_per_tet = tetgen_long(ele_tokens, i++, ele_path);
  const long n_tet_attrs = tetgen_long(ele_tokens, i++, ele_path);
  if (nodes_per_tet != 4) throw Error(ErrorCode::ParseError, ele_path + ": expected 4 nodes per tet");

  TetMesh mesh;
  mesh.n_vertices = static_cast<int>(n_points);
  mesh.coords = std::move(coords);
  for (long t = 0; t < n_tets; ++t) {
    i += 1;  // element index
    Tet tet{};
    for (int k = 0; k < 4; ++k) {
      const long idx = tetgen_long(ele_tokens, i++, ele_path) - index_base;
      if (idx < 0 || idx >= n_points)
        throw Error(ErrorCode::IndexOutOfRange, ele_path + ": node index " + std::to_string(idx));
      tet[k] = static_cast<int>(idx);
    }
    mesh.tets.push_back(tet);
    i += n_tet_attrs;
  }
  if (i != ele_tokens.size()) throw Error(ErrorCode::InconsistentCounts, ele_path + ": trailing tokens");
  return mesh;
}

void save_mesh_json(const TetMesh& mesh, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path);
  out << to_json(mesh).dump(2) << "\n";
}

void save_mesh_tetgen(const TetMesh& mesh, const std::string& path) {
  if (!mesh.coords) throw Error(ErrorCode::InvalidMesh, "tetgen export needs coordinates");
  const std::string stem = strip_suffix(path);
  std::ofstream node(stem + ".node");
  std::ofstream ele(stem + ".ele");
  if (!node || !ele) throw Error(ErrorCode::IoError, "cannot write " + stem + ".node/.ele");
  node.precision(17);
  node << mesh.n_vertices << " 3 0 0\n";
  for (int v = 0; v < mesh.n_vertices; ++v) {
    const Vec3& p = (*mesh.coords)[v];
    node << (v + 1) << " " << p.x() << " " << p.y() << " " << p.z() << "\n";
  }
  ele << mesh.tets.size() << " 4 0\n";
  for (size_t t = 0; t < mesh.tets.size(); ++t) {
    ele << (t + 1);
    for (int v : mesh.tets[t]) ele << " " << (v + 1);
    ele << "\n";
  }
}

}  // namespace

MeshFormat guess_format(const std::string& path) {
  const std::string stem = strip_suffix(path);
  return stem == path ? MeshFormat::Json : MeshFormat::Tetgen;
}

TetMesh load_mesh(const std::string& path, MeshFormat format) {
  return format == MeshFormat::Json ? load_mesh_json(path) : load_mesh_tetgen(path);
}

void save_mesh(const TetMesh& mesh, const std::string& path, MeshFormat format) {
  if (format == MeshFormat::Json)
    save_mesh_json(mesh, path);
  else
    save_mesh_tetgen(mesh, path);
}

Json to_json(const CheckResult& check) {
  Json j;
  j["name"] = check.name;
  j["status"] = check_status_name(check.status);
  j["witness"] = check.witness;
  j["detail"] = check.detail;
  return j;
}

Json to_json(const ValidationReport& report) {
  Json j;
  j["overall"] = check_status_name(report.overall);
  Json checks = Json::array();
  for (const CheckResult& c : report.checks) checks.push_back(to_json(c));
  j["checks"] = std::move(checks);
  return j;
}

Json to_json(const MinorQueryResult& result) {
  Json j;
  j["answer"] = minor_answer_name(result.answer);
  j["nodes_explored"] = result.nodes_explored;
  if (result.model) j["model"] = result.model->branch_sets;
  return j;
}

Json to_json(const LinklessExclusion& result) {
  Json j;
  j["k6"] = to_json(result.k6);
  j["k331"] = to_json(result.k331);
  j["pass"] = result.pass();
  return j;
}

Json to_json(const CliqueBound& bound) {
  Json j;
  j["clique_count"] = bound.clique_count;
  j["bound"] = bound.bound;
  j["implies_k6"] = bound.implies_k6;
  return j;
}

Json to_json(const EmbeddingCertificate& cert) {
  Json j;
  j["all_positive"] = cert.all_positive;
  j["min_signed_volume"] = cert.min_signed_volume;
  j["face_condition_ok"] = cert.face_condition_ok;
  j["star_rank_ok"] = cert.star_rank_ok;
  j["min_edge_length"] = cert.min_edge_length;
  j["containment_ok"] = cert.containment_ok;
  j["samples_checked"] = cert.samples_checked;
  if (cert.volume_identity_gap && std::isfinite(*cert.volume_identity_gap))
    j["volume_identity_gap"] = *cert.volume_identity_gap;
  else
    j["volume_identity_gap"] = nullptr;
  j["verdict"] = verdict_name(cert.verdict);
  return j;
}

Json to_json(const ExperimentResult& result) {
  Json j;
  j["mesh"] = result.mesh_id;
  j["trials"] = result.trials;
  j["scheme"] = Json{{"weights", "dirichlet"}, {"alpha", result.alpha}, {"seed", result.seed}};
  j["failures"] = result.failures;
  j["errors"] = result.errors;
  j["failure_modes"] = result.failure_modes;
  j["min_volume"] = Json{{"min", result.min_volume.min},       {"q25", result.min_volume.q25},
                         {"median", result.min_volume.median}, {"q75", result.min_volume.q75},
                         {"max", result.min_volume.max},       {"mean", result.min_volume.mean}};
  return j;
}

}  // namespace tuttet
