#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "hgkit/hypergraph.hpp"

namespace hgkit {

// Text format (".hg"):
//
//   # comment lines start with '#'
//   n r
//   v1 v2 ... vr      (one edge per line, 0-based vertex ids)
//
// Blank lines are skipped. Every error carries the 1-based line number.

Hypergraph read_hg(std::istream& in);
Hypergraph read_hg_file(const std::filesystem::path& path);
Hypergraph parse_hg(const std::string& text);

void write_hg(std::ostream& out, const Hypergraph& h);
void write_hg_file(const std::filesystem::path& path, const Hypergraph& h);
std::string format_hg(const Hypergraph& h);

}  // namespace hgkit
