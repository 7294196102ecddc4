#pragma once

#include <iosfwd>
#include <string>

#include "ffgeom/lattice.hpp"

namespace ffgeom {

/// Line-oriented lattice file:
///
///   # comment
///   q <p>
///   d <dim>
///   row <entry> ... <entry>     (d lines, entries in the ratfunc grammar)
///
/// '#' starts a comment; blank lines are ignored. Writing then reading is
/// bit-exact.
LatticeBasis read_lattice(std::istream& in);
LatticeBasis read_lattice_file(const std::string& path);

void write_lattice(std::ostream& out, const LatticeBasis& L);
void write_lattice_file(const std::string& path, const LatticeBasis& L);

}  // namespace ffgeom
