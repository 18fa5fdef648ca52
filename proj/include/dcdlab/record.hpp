#ifndef DCDLAB_RECORD_HPP
#define DCDLAB_RECORD_HPP

#include <cstdint>
#include <cstdio>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace dcdlab {

// Shortest-faithful double formatting shared by the CSV writer so reruns
// are byte-identical.
inline std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

/// One experiment's outcome: instance descriptor, exact measured
/// quantities, bound values, dimensionless ratios, and a pass flag. The
/// headline (measured, bound, ratio) triple is what the CSV rows carry;
/// everything goes into the JSON line. Ratios are always recomputable
/// from the stored exact quantities.
struct Record {
  std::string check;
  std::string family;
  std::int64_t k = 0;
  nlohmann::json params = nlohmann::json::object();
  std::int64_t measured = 0;
  double bound = 0.0;
  double ratio = 0.0;
  bool pass = true;
  std::map<std::string, std::int64_t> quantities;
  std::map<std::string, double> ratios;

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["check"] = check;
    j["family"] = family;
    j["k"] = k;
    j["params"] = params;
    j["measured"] = measured;
    j["bound"] = bound;
    j["ratio"] = ratio;
    j["pass"] = pass;
    j["quantities"] = quantities;
    j["ratios"] = ratios;
    return j;
  }
};

inline constexpr const char* kCsvHeader = "# dcdlab-csv v1";

inline void write_csv(std::ostream& out, const std::vector<Record>& records) {
  out << kCsvHeader << '\n';
  out << "check,family,k,measured,bound,ratio,pass\n";
  for (const Record& r : records) {
    out << r.check << ',' << r.family << ',' << r.k << ',' << r.measured << ','
        << format_double(r.bound) << ',' << format_double(r.ratio) << ','
        << (r.pass ? "true" : "false") << '\n';
  }
}

inline void write_jsonl(std::ostream& out, const std::vector<Record>& records) {
  for (const Record& r : records) out << r.to_json().dump() << '\n';
}

inline bool all_pass(const std::vector<Record>& records) {
  for (const Record& r : records)
    if (!r.pass) return false;
  return true;
}

}  // namespace dcdlab

#endif  // DCDLAB_RECORD_HPP
