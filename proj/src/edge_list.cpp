#include "cqc/edge_list.hpp"

#include <fstream>
#include <sstream>

namespace cqc {

EdgeList read_edge_list(std::istream& in, const std::string& source) {
  EdgeList edges;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream tokens(line);
    std::string a;
    if (!(tokens >> a) || a.front() == '#') continue;
    std::string b;
    if (!(tokens >> b)) throw ParseError(source, line_no, "expected two labels, found one");
    std::string extra;
    if (tokens >> extra) throw ParseError(source, line_no, "expected two labels, found more");
    edges.emplace_back(std::move(a), std::move(b));
  }
  if (in.bad()) throw std::runtime_error(source + ": read error");
  return edges;
}

EdgeList read_edge_list_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return read_edge_list(in, path.string());
}

void write_edge_list(std::ostream& out, const EdgeList& edges) {
  for (const auto& [a, b] : edges) out << a << ' ' << b << '\n';
}

}  // namespace cqc
