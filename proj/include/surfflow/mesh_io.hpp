#pragma once

#include <iosfwd>
#include <string>

#include "surfflow/complex.hpp"

namespace surfflow {

// Plain-text triangle mesh.
//
//   V E F          optional header; E is ignored on read
//   v x y z        one line per vertex, in id order
//   t i j k        one line per triangle, 0-based vertex ids
//
// Blank lines and lines starting with '#' are skipped. Coordinates are
// written in shortest round-trip decimal form, so write(read(write(m)))
// reproduces the same bytes.
SimplicialSurface read_mesh(std::istream& in);
SimplicialSurface read_mesh_file(const std::string& path);
void write_mesh(std::ostream& out, const SimplicialSurface& sc);
void write_mesh_file(const std::string& path, const SimplicialSurface& sc);

// Shortest decimal string that parses back to exactly `value`.
std::string format_double(double value);

}  // namespace surfflow
