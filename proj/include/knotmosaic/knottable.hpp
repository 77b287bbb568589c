#pragma once

#include <istream>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "knotmosaic/invariants.hpp"

namespace knotmosaic {

struct KnotRecord {
  std::string name;  ///< "3_1" style up to 10 crossings, "11a341" style above
  int crossings = 0;
  DiagramCode code;
  Fingerprint fp;
  /// refinement_key of the code; filled only when another record shares fp.
  std::string refinement;
};

struct TableError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class KnotTable {
 public:
  KnotTable() = default;
  explicit KnotTable(std::vector<KnotRecord> records);

  const std::vector<KnotRecord>& records() const { return records_; }
  std::size_t size() const { return records_.size(); }
  const KnotRecord* find(std::string_view name) const;

  /// Names sharing the fingerprint, in table order; empty when unknown.
  std::vector<std::string> identify(const Fingerprint& fp) const;
  /// As above, then narrowed by refinement_key when several names match.
  std::vector<std::string> identify(const DiagramCode& code) const;
  std::vector<std::string> identify(const Fingerprint& fp, const DiagramCode& code) const;
  /// Groups of two or more names with equal fingerprints.
  std::vector<std::vector<std::string>> fingerprint_groups() const;
  /// Groups that refinement_key does not split either.
  std::vector<std::vector<std::string>> collisions() const;

 private:
  std::vector<KnotRecord> records_;
  std::map<std::string, std::vector<std::size_t>> by_key_;
};

/// Crossing number encoded in a knot name ("10_11" -> 10, "11a341" -> 11).
int name_crossings(std::string_view name);

/// Rows "name,crossings,[a b c d][...]"; blank lines and '#' lines skipped.
/// Throws TableError naming the line on malformed input.
KnotTable load_table(std::istream& in);
KnotTable load_table_text(std::string_view text);
KnotTable load_table_file(const std::string& path);

/// One name per line (first comma-separated field), '#' comments allowed.
std::vector<std::string> load_name_list(std::istream& in);
std::vector<std::string> load_name_list_file(const std::string& path);

inline std::vector<std::string> identify(const Fingerprint& fp, const KnotTable& table) { return table.identify(fp); }

}  // namespace knotmosaic
