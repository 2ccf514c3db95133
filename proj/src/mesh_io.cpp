#include "surfflow/mesh_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace surfflow {

std::string format_double(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

namespace {

[[noreturn]] void bad_line(int lineno, const std::string& msg) {
  throw MeshFormatError("line " + std::to_string(lineno) + ": " + msg);
}

double parse_double(const std::string& tok, int lineno) {
  double v = 0.0;
  const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (res.ec != std::errc() || res.ptr != tok.data() + tok.size()) {
    bad_line(lineno, "cannot parse coordinate '" + tok + "'");
  }
  return v;
}

long parse_int(const std::string& tok, int lineno) {
  long v = 0;
  const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (res.ec != std::errc() || res.ptr != tok.data() + tok.size()) {
    bad_line(lineno, "cannot parse integer '" + tok + "'");
  }
  return v;
}

}  // namespace

SimplicialSurface read_mesh(std::istream& in) {
  std::vector<Point3> vertices;
  std::vector<Triangle> triangles;
  long header_v = -1, header_f = -1;
  bool seen_content = false;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag[0] == '#') continue;
    std::vector<std::string> toks;
    for (std::string tok; ls >> tok;) toks.push_back(tok);

    if (tag == "v") {
      if (!triangles.empty()) bad_line(lineno, "vertex after triangles");
      if (toks.size() != 3) bad_line(lineno, "vertex needs 3 coordinates");
      vertices.emplace_back(parse_double(toks[0], lineno), parse_double(toks[1], lineno),
                            parse_double(toks[2], lineno));
    } else if (tag == "t") {
      if (toks.size() != 3) bad_line(lineno, "triangle needs 3 vertex ids");
      Triangle tri{};
      for (int k = 0; k < 3; ++k) tri[k] = static_cast<int>(parse_int(toks[k], lineno));
      triangles.push_back(tri);
    } else if (!seen_content && toks.size() == 2) {
      header_v = parse_int(tag, lineno);
      parse_int(toks[0], lineno);
      header_f = parse_int(toks[1], lineno);
    } else {
      bad_line(lineno, "unrecognized record '" + tag + "'");
    }
    seen_content = true;
  }
  if (header_v >= 0 && header_v != static_cast<long>(vertices.size())) {
    throw MeshFormatError("header declares " + std::to_string(header_v) + " vertices, found " +
                          std::to_string(vertices.size()));
  }
  if (header_f >= 0 && header_f != static_cast<long>(triangles.size())) {
    throw MeshFormatError("header declares " + std::to_string(header_f) + " triangles, found " +
                          std::to_string(triangles.size()));
  }
  return build_complex(std::move(vertices), std::move(triangles));
}

SimplicialSurface read_mesh_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MeshFormatError("cannot open mesh file '" + path + "'");
  return read_mesh(in);
}

void write_mesh(std::ostream& out, const SimplicialSurface& sc) {
  out << sc.num_vertices() << ' ' << sc.num_edges() << ' ' << sc.num_triangles() << '\n';
  for (const Point3& p : sc.vertices()) {
    out << "v " << format_double(p.x()) << ' ' << format_double(p.y()) << ' '
        << format_double(p.z()) << '\n';
  }
  for (const Triangle& t : sc.triangles()) {
    out << "t " << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
  }
}

void write_mesh_file(const std::string& path, const SimplicialSurface& sc) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw MeshFormatError("cannot write mesh file '" + path + "'");
  write_mesh(out, sc);
}

}  // namespace surfflow
