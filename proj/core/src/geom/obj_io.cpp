#include "demoplan/geom/obj_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace demoplan::geom {

namespace {

// "12", "12/3", "12//7", "12/3/7" -> vertex index. OBJ indices are 1-based;
// negative indices count back from the current vertex list.
int parse_face_index(const std::string& token, int vertex_count) {
  const auto slash = token.find('/');
  const std::string head = slash == std::string::npos ? token : token.substr(0, slash);
  int idx = 0;
  try {
    idx = std::stoi(head);
  } catch (const std::exception&) {
    throw std::runtime_error("bad OBJ face index: '" + token + "'");
  }
  if (idx < 0) {
    idx = vertex_count + idx;
  } else {
    idx -= 1;
  }
  if (idx < 0 || idx >= vertex_count) {
    throw std::runtime_error("OBJ face index out of range: '" + token + "'");
  }
  return idx;
}

}  // namespace

TriMesh load_obj(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open OBJ file: " + path);
  }

  TriMesh mesh;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag[0] == '#') {
      continue;
    }
    if (tag == "v") {
      double x, y, z;
      if (!(ls >> x >> y >> z)) {
        throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                 ": malformed vertex line");
      }
      mesh.vertices.emplace_back(x, y, z);
    } else if (tag == "f") {
      std::vector<int> poly;
      std::string token;
      while (ls >> token) {
        poly.push_back(parse_face_index(token, static_cast<int>(mesh.vertices.size())));
      }
      if (poly.size() < 3) {
        throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                 ": face with fewer than 3 vertices");
      }
      for (size_t i = 1; i + 1 < poly.size(); ++i) {
        mesh.triangles.push_back({poly[0], poly[i], poly[i + 1]});
      }
    }
    // vn / vt / o / g / s / usemtl / mtllib are ignored.
  }

  validate_mesh(mesh);
  remove_degenerate_triangles(mesh);
  return mesh;
}

void save_obj(const TriMesh& mesh, const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot write OBJ file: " + path);
  }
  char buf[128];
  for (const auto& v : mesh.vertices) {
    std::snprintf(buf, sizeof(buf), "v %.9g %.9g %.9g\n", v.x(), v.y(), v.z());
    out << buf;
  }
  for (const auto& t : mesh.triangles) {
    out << "f " << t[0] + 1 << ' ' << t[1] + 1 << ' ' << t[2] + 1 << '\n';
  }
  if (!out.good()) {
    throw std::runtime_error("short write to OBJ file: " + path);
  }
}

}  // namespace demoplan::geom
