#pragma once

// Text formats.
//
//   .scx     first non-comment line `dim <k>`, then one facet per line as
//            space-separated integer labels.  `#` starts a comment.
//   coloring one `vertex color` pair per line, same comment rules.

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "rigidlab/coloring.hpp"
#include "rigidlab/complex.hpp"
#include "rigidlab/errors.hpp"

namespace rigidlab {

namespace detail {

inline std::string strip_comment(std::string line) {
  if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
  return line;
}

inline bool blank(const std::string& s) {
  return s.find_first_not_of(" \t\r") == std::string::npos;
}

}  // namespace detail

inline Complex read_scx(std::istream& in) {
  std::string line;
  int declared = -2;
  std::vector<Face> facets;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = detail::strip_comment(line);
    if (detail::blank(line)) continue;
    std::istringstream ls(line);
    if (declared == -2) {
      std::string kw;
      if (!(ls >> kw >> declared) || kw != "dim")
        throw ParseError("scx: expected `dim <k>` on line " + std::to_string(lineno));
      continue;
    }
    std::vector<Vertex> f;
    long long x;
    while (ls >> x) f.push_back(static_cast<Vertex>(x));
    if (!ls.eof()) throw ParseError("scx: bad vertex label on line " + std::to_string(lineno));
    facets.push_back(make_face(std::move(f)));
  }
  if (declared == -2) throw ParseError("scx: missing `dim` header");
  Complex c;
  try {
    c = Complex::from_facets(facets);
  } catch (const ConstructionError& e) {
    throw ParseError(std::string("scx: ") + e.what());
  }
  if (c.dim() != declared)
    throw ParseError("scx: header says dim " + std::to_string(declared) + " but facets give " +
                     std::to_string(c.dim()));
  return c;
}

inline void write_scx(std::ostream& out, const Complex& c) {
  out << "dim " << c.dim() << '\n';
  for (const auto& f : c.facets()) {
    for (std::size_t i = 0; i < f.size(); ++i) out << (i ? " " : "") << f[i];
    out << '\n';
  }
}

inline Complex load_scx(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return read_scx(in);
}

inline void save_scx(const std::string& path, const Complex& c) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  write_scx(out, c);
}

inline ColorMap read_coloring(std::istream& in) {
  ColorMap k;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = detail::strip_comment(line);
    if (detail::blank(line)) continue;
    std::istringstream ls(line);
    long long v, col;
    std::string extra;
    if (!(ls >> v >> col) || (ls >> extra) || col < 1)
      throw ParseError("coloring: expected `vertex color` on line " + std::to_string(lineno));
    if (!k.color.emplace(static_cast<Vertex>(v), static_cast<int>(col)).second)
      throw ParseError("coloring: vertex listed twice on line " + std::to_string(lineno));
    k.palette = std::max(k.palette, static_cast<int>(col));
  }
  return k;
}

inline void write_coloring(std::ostream& out, const ColorMap& k) {
  for (const auto& [v, col] : k.color) out << v << ' ' << col << '\n';
}

inline ColorMap load_coloring(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return read_coloring(in);
}

inline void save_coloring(const std::string& path, const ColorMap& k) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  write_coloring(out, k);
}

}  // namespace rigidlab
