#ifndef DCDLAB_IO_HPP
#define DCDLAB_IO_HPP

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "dcdlab/errors.hpp"
#include "dcdlab/ground_set.hpp"

namespace dcdlab {

// Set file format: one base-10 integer per line, '#' lines and blank
// lines ignored, order irrelevant (re-sorted on load). Duplicate lines
// are rejected like any other duplicate element.

inline GroundSet read_set(std::istream& in) {
  std::vector<std::int64_t> values;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view sv(line);
    while (!sv.empty() && (sv.front() == ' ' || sv.front() == '\t')) sv.remove_prefix(1);
    while (!sv.empty() && (sv.back() == ' ' || sv.back() == '\t' || sv.back() == '\r'))
      sv.remove_suffix(1);
    if (sv.empty() || sv.front() == '#') continue;
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(sv.data(), sv.data() + sv.size(), value);
    if (ec != std::errc{} || ptr != sv.data() + sv.size())
      throw IoError("set file line " + std::to_string(lineno) + ": not an integer: " +
                    std::string(sv));
    values.push_back(value);
  }
  if (values.empty()) throw IoError("set file contains no elements");
  return make_set(std::move(values));
}

inline GroundSet load_set_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open set file: " + path);
  return read_set(in);
}

inline void write_set(std::ostream& out, const GroundSet& a) {
  for (std::int64_t x : a.elements()) out << x << '\n';
}

inline void save_set_file(const std::string& path, const GroundSet& a) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open output file: " + path);
  write_set(out, a);
  if (!out) throw IoError("write failed: " + path);
}

}  // namespace dcdlab

#endif  // DCDLAB_IO_HPP
