#pragma once

#include <string>

#include "demoplan/geom/mesh.hpp"

namespace demoplan::geom {

/// Loads the v/f subset of Wavefront OBJ. Faces with more than three vertices
/// are fan-triangulated; v/vt/vn index forms are accepted; other statements
/// are ignored. Degenerate triangles are removed after load.
/// Throws std::runtime_error on malformed input or unreadable files.
TriMesh load_obj(const std::string& path);

void save_obj(const TriMesh& mesh, const std::string& path);

}  // namespace demoplan::geom
