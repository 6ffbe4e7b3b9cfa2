#include "berge5/h3_io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

namespace berge5 {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

std::optional<std::size_t> parse_count(const std::string& tok) {
  std::size_t value = 0;
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) return std::nullopt;
  return value;
}

bool is_blank(const std::string& line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

}  // namespace

H3File parse_h3(std::istream& in) {
  H3File out;
  std::string line;
  std::size_t line_no = 0;
  std::optional<std::size_t> n, m;
  std::vector<std::array<std::string, 3>> rows;
  std::vector<std::size_t> row_lines;

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first != std::string::npos && line[first] == '#') {
      if (!n) out.header_comments.push_back(line.substr(first + 1));
      continue;
    }
    if (is_blank(line)) continue;
    const auto tokens = split_ws(line);
    if (!n) {
      if (tokens.size() != 2) throw H3ParseError(line_no, "expected header 'n m'");
      n = parse_count(tokens[0]);
      m = parse_count(tokens[1]);
      if (!n || !m) throw H3ParseError(line_no, "header counts must be non-negative integers");
      continue;
    }
    if (tokens.size() != 3) {
      throw H3ParseError(line_no, "expected 3 vertex labels, got " + std::to_string(tokens.size()));
    }
    if (rows.size() == *m) throw H3ParseError(line_no, "more hyperedge lines than declared");
    rows.push_back({tokens[0], tokens[1], tokens[2]});
    row_lines.push_back(line_no);
  }
  if (!n) throw H3ParseError(line_no, "missing header 'n m'");
  if (rows.size() != *m) {
    throw H3ParseError(line_no, "declared " + std::to_string(*m) + " hyperedges, found " +
                                    std::to_string(rows.size()));
  }

  bool numeric = true;
  for (const auto& row : rows) {
    for (const auto& tok : row) {
      auto v = parse_count(tok);
      if (!v || *v >= *n) numeric = false;
    }
  }

  std::map<std::string, Vertex> ids;
  if (numeric) {
    out.labels.resize(*n);
    for (std::size_t i = 0; i < *n; ++i) out.labels[i] = std::to_string(i);
  }
  std::vector<Triple> triples;
  triples.reserve(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    Triple t{};
    for (int k = 0; k < 3; ++k) {
      const std::string& tok = rows[r][k];
      if (numeric) {
        t[k] = static_cast<Vertex>(*parse_count(tok));
        continue;
      }
      auto it = ids.find(tok);
      if (it == ids.end()) {
        if (ids.size() == *n) {
          throw H3ParseError(row_lines[r], "more than n = " + std::to_string(*n) +
                                               " distinct labels (label '" + tok + "')");
        }
        it = ids.emplace(tok, static_cast<Vertex>(ids.size())).first;
        out.labels.push_back(tok);
      }
      t[k] = it->second;
    }
    if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) {
      throw H3ParseError(row_lines[r], "hyperedge repeats a vertex");
    }
    triples.push_back(t);
  }
  if (!numeric) {
    for (std::size_t i = out.labels.size(); i < *n; ++i) out.labels.push_back("_" + std::to_string(i));
  }
  out.hypergraph = Hypergraph3::build(*n, triples);
  return out;
}

H3File parse_h3_string(const std::string& text) {
  std::istringstream in(text);
  return parse_h3(in);
}

H3File read_h3_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw H3ParseError(0, "cannot open '" + path + "'");
  return parse_h3(in);
}

void write_h3(std::ostream& out, const Hypergraph3& h,
              const std::vector<std::string>& header_comments) {
  for (const auto& c : header_comments) out << '#' << c << '\n';
  out << h.vertex_count() << ' ' << h.edge_count() << '\n';
  for (const auto& [a, b, c] : h.edges()) out << a << ' ' << b << ' ' << c << '\n';
}

std::string to_h3_string(const Hypergraph3& h, const std::vector<std::string>& header_comments) {
  std::ostringstream out;
  write_h3(out, h, header_comments);
  return out.str();
}

void write_h3_file(const std::string& path, const Hypergraph3& h,
                   const std::vector<std::string>& header_comments) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  write_h3(out, h, header_comments);
}

}  // namespace berge5
