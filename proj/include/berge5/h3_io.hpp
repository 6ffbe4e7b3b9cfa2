#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "berge5/hypergraph.hpp"

namespace berge5 {

// Reader/writer for the `.h3` text format:
//
//   # optional comment lines
//   n m
//   a b c        (m lines, whitespace separated vertex labels)
//
// Labels are arbitrary tokens. When every label is an integer in [0, n)
// the identity mapping is used; otherwise labels are numbered in order of
// first appearance. `labels[i]` is the original label of vertex i.

class H3ParseError : public std::runtime_error {
 public:
  H3ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct H3File {
  Hypergraph3 hypergraph;
  std::vector<std::string> labels;
  // Comment lines appearing before the header, without the leading '#'.
  std::vector<std::string> header_comments;
};

H3File parse_h3(std::istream& in);
H3File parse_h3_string(const std::string& text);
H3File read_h3_file(const std::string& path);

// Canonical form: header comments, then `n m`, then the sorted triples.
void write_h3(std::ostream& out, const Hypergraph3& h,
              const std::vector<std::string>& header_comments = {});
std::string to_h3_string(const Hypergraph3& h,
                         const std::vector<std::string>& header_comments = {});
void write_h3_file(const std::string& path, const Hypergraph3& h,
                   const std::vector<std::string>& header_comments = {});

}  // namespace berge5
