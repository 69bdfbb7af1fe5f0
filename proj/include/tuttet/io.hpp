#pragma once

#include <string>

#include <json.hpp>

#include "tuttet/embed.hpp"
#include "tuttet/experiment.hpp"
#include "tuttet/mesh.hpp"
#include "tuttet/minors.hpp"
#include "tuttet/validate.hpp"
#include "tuttet/verify.hpp"

namespace tuttet {

using Json = nlohmann::ordered_json;

enum class MeshFormat { Json, Tetgen };

// JSON mesh document: {"version": 1, "vertices": [[x,y,z],...], "tets":
// [[i,j,k,l],...]}; vertices may be omitted. Tetgen meshes are .node/.ele
// pairs with auto-detected 0- or 1-based indexing; pass either file of the
// pair or the common stem.
TetMesh load_mesh(const std::string& path, MeshFormat format);
void save_mesh(const TetMesh& mesh, const std::string& path, MeshFormat format);

// Guesses the format from the file name (.node/.ele -> tetgen).
MeshFormat guess_format(const std::string& path);

Json to_json(const TetMesh& mesh);
TetMesh mesh_from_json(const Json& doc);

Json to_json(const CheckResult& check);
Json to_json(const ValidationReport& report);
Json to_json(const MinorQueryResult& result);
Json to_json(const LinklessExclusion& result);
Json to_json(const CliqueBound& bound);
Json to_json(const EmbeddingCertificate& cert);
Json to_json(const ExperimentResult& result);

}  // namespace tuttet
