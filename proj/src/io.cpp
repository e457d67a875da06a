#include "sparseyao/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace sparseyao {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << text;
  if (!out) throw std::runtime_error("write to " + path + " failed");
}

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

bool skippable(const std::string& line) {
  size_t i = line.find_first_not_of(" \t\r");
  return i == std::string::npos || line[i] == '#';
}

}  // namespace

std::string format_points(const PointSet& s,
                          const std::vector<std::string>& comments) {
  std::ostringstream out;
  for (const std::string& c : comments) out << "# " << c << '\n';
  for (int i = 0; i < s.size(); ++i)
    out << fmt17(s[i].x) << ' ' << fmt17(s[i].y) << '\n';
  return out.str();
}

void write_points(const std::string& path, const PointSet& s,
                  const std::vector<std::string>& comments) {
  write_file(path, format_points(s, comments));
}

PointSet read_points(const std::string& path) {
  std::istringstream in(read_file(path));
  std::vector<Point> pts;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (skippable(line)) continue;
    std::istringstream row(line);
    Point p;
    std::string extra;
    if (!(row >> p.x >> p.y) || (row >> extra))
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": expected 'x y'");
    pts.push_back(p);
  }
  return PointSet(pts);
}

std::string format_graph(int n,
                         const std::vector<std::pair<int, int>>& edges) {
  std::ostringstream out;
  out << n << ' ' << edges.size() << '\n';
  for (auto [u, v] : edges) out << u << ' ' << v << '\n';
  return out.str();
}

void write_graph(const std::string& path, int n,
                 const std::vector<std::pair<int, int>>& edges) {
  write_file(path, format_graph(n, edges));
}

GraphFile read_graph(const std::string& path) {
  std::istringstream in(read_file(path));
  GraphFile gf;
  size_t m = 0;
  if (!(in >> gf.n >> m))
    throw std::runtime_error(path + ": expected 'n m' header");
  for (size_t i = 0; i < m; ++i) {
    int u, v;
    if (!(in >> u >> v))
      throw std::runtime_error(path + ": expected " + std::to_string(m) +
                               " edge lines");
    gf.edges.emplace_back(u, v);
  }
  std::string extra;
  if (in >> extra) throw std::runtime_error(path + ": trailing data");
  return gf;
}

}  // namespace sparseyao
