#include "hives/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace hives {

namespace {

std::vector<std::vector<int>> read_int_lines(std::istream& in) {
  std::vector<std::vector<int>> lines;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<int> vals;
    int v;
    while (ls >> v) vals.push_back(v);
    if (!ls.eof() && ls.fail()) {
      ls.clear();
      std::string bad;
      ls >> bad;
      if (!bad.empty())
        throw std::invalid_argument("parse: unexpected token '" + bad + "'");
    }
    if (!vals.empty()) lines.push_back(vals);
  }
  return lines;
}

std::ifstream open_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot open file: " + path);
  return f;
}

}  // namespace

TriangleArray parse_triangle(std::istream& in) {
  auto lines = read_int_lines(in);
  if (lines.empty()) throw std::invalid_argument("parse_triangle: empty input");
  if (lines[0].size() != 1)
    throw std::invalid_argument("parse_triangle: first line must be n");
  int n = lines[0][0];
  if (static_cast<int>(lines.size()) != n + 2)
    throw std::invalid_argument("parse_triangle: expected " +
                                std::to_string(n + 1) + " rows after n");
  std::vector<std::vector<int>> rows(lines.begin() + 1, lines.end());
  return TriangleArray::from_rows(rows);
}

TriangleArray parse_triangle_file(const std::string& path) {
  auto f = open_file(path);
  return parse_triangle(f);
}

std::string triangle_to_file_string(const TriangleArray& p) {
  return std::to_string(p.n()) + "\n" + triangle_to_string(p);
}

std::string triangle_to_string(const TriangleArray& p) {
  std::ostringstream os;
  for (const auto& row : p.rows()) {
    for (size_t y = 0; y < row.size(); ++y) {
      if (y) os << " ";
      os << row[y];
    }
    os << "\n";
  }
  return os.str();
}

GTPattern parse_gt(std::istream& in) {
  auto lines = read_int_lines(in);
  for (size_t i = 0; i < lines.size(); ++i)
    if (lines[i].size() != i + 1)
      throw std::invalid_argument("parse_gt: row " + std::to_string(i + 1) +
                                  " must have " + std::to_string(i + 1) +
                                  " entries");
  GTPattern g{lines};
  if (!is_valid_gt(g))
    throw std::invalid_argument("parse_gt: interlacing fails");
  return g;
}

GTPattern parse_gt_file(const std::string& path) {
  auto f = open_file(path);
  return parse_gt(f);
}

SkewTableau parse_tableau(std::istream& in) {
  std::vector<std::vector<int>> rows;
  std::vector<int> inner;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    if (first) {
      first = false;
      std::string head;
      std::istringstream probe(line);
      probe >> head;
      if (head == "inner:") {
        ls >> head;
        int v;
        while (ls >> v) inner.push_back(v);
        continue;
      }
    }
    std::vector<int> vals;
    int v;
    while (ls >> v) vals.push_back(v);
    if (!vals.empty()) rows.push_back(vals);
  }
  int n = static_cast<int>(rows.size());
  for (const auto& r : rows)
    for (int v : r) n = std::max(n, v);
  if (!inner.empty()) {
    inner.resize(std::max(inner.size(), rows.size()), 0);
    rows.resize(inner.size());
    return make_skew_tableau(n, inner, rows);
  }
  return make_tableau(n, rows);
}

SkewTableau parse_tableau_file(const std::string& path) {
  auto f = open_file(path);
  return parse_tableau(f);
}

std::vector<int> parse_weight_arg(const std::string& s) {
  std::vector<int> out;
  std::string cur;
  for (char ch : s) {
    if (ch == ',') {
      if (cur.empty())
        throw std::invalid_argument("weight argument: empty entry in '" + s + "'");
      out.push_back(std::stoi(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (cur.empty())
    throw std::invalid_argument("weight argument: empty entry in '" + s + "'");
  out.push_back(std::stoi(cur));
  return out;
}

}  // namespace hives
