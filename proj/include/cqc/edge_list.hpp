#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cqc {

using LabelEdge = std::pair<std::string, std::string>;
using EdgeList = std::vector<LabelEdge>;

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& source, std::size_t line, const std::string& what)
      : std::runtime_error(source + ":" + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// One edge per line as two whitespace-separated labels. '#' lines and blank
// lines are skipped. Any other shape is a ParseError carrying the line number.
EdgeList read_edge_list(std::istream& in, const std::string& source = "<stream>");
EdgeList read_edge_list_file(const std::filesystem::path& path);

void write_edge_list(std::ostream& out, const EdgeList& edges);

}  // namespace cqc
