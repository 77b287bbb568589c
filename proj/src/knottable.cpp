#include "knotmosaic/knottable.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace knotmosaic {

KnotTable::KnotTable(std::vector<KnotRecord> records) : records_(std::move(records)) {
  for (std::size_t i = 0; i < records_.size(); ++i) by_key_[records_[i].fp.key()].push_back(i);
  for (const auto& [key, idx] : by_key_)
    if (idx.size() > 1)
      for (std::size_t i : idx)
        if (records_[i].refinement.empty()) records_[i].refinement = refinement_key(records_[i].code);
}

const KnotRecord* KnotTable::find(std::string_view name) const {
  for (const KnotRecord& r : records_)
    if (r.name == name) return &r;
  return nullptr;
}

std::vector<std::string> KnotTable::identify(const Fingerprint& fp) const {
  std::vector<std::string> out;
  auto it = by_key_.find(fp.key());
  if (it == by_key_.end()) return out;
  for (std::size_t i : it->second) out.push_back(records_[i].name);
  return out;
}

std::vector<std::string> KnotTable::identify(const DiagramCode& code) const { return identify(fingerprint(code), code); }

std::vector<std::string> KnotTable::identify(const Fingerprint& fp, const DiagramCode& code) const {
  auto it = by_key_.find(fp.key());
  if (it == by_key_.end()) return {};
  std::vector<std::string> out;
  if (it->second.size() == 1) {
    out.push_back(records_[it->second.front()].name);
    return out;
  }
  const std::string key = refinement_key(code);
  for (std::size_t i : it->second)
    if (records_[i].refinement == key) out.push_back(records_[i].name);
  return out;
}

std::vector<std::vector<std::string>> KnotTable::fingerprint_groups() const {
  std::vector<std::vector<std::string>> out;
  for (const auto& [key, idx] : by_key_) {
    if (idx.size() < 2) continue;
    std::vector<std::string> group;
    for (std::size_t i : idx) group.push_back(records_[i].name);
    out.push_back(std::move(group));
  }
  return out;
}

std::vector<std::vector<std::string>> KnotTable::collisions() const {
  std::vector<std::vector<std::string>> out;
  for (const auto& [key, idx] : by_key_) {
    std::map<std::string, std::vector<std::string>> split;
    for (std::size_t i : idx) split[records_[i].refinement].push_back(records_[i].name);
    for (auto& [r, names] : split)
      if (names.size() > 1) out.push_back(std::move(names));
  }
  return out;
}

int name_crossings(std::string_view name) {
  std::size_t i = 0;
  int value = 0;
  while (i < name.size() && std::isdigit(static_cast<unsigned char>(name[i]))) value = value * 10 + (name[i++] - '0');
  if (i == 0 || i == name.size() || (name[i] != '_' && name[i] != 'a' && name[i] != 'n'))
    throw TableError("cannot read crossing number from name '" + std::string(name) + "'");
  return value;
}

namespace {

std::string trim(std::string s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return {};
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

}  // namespace

KnotTable load_table(std::istream& in) {
  std::vector<KnotRecord> records;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    auto fail = [&](const std::string& why) {
      return TableError("line " + std::to_string(line_no) + ": " + why);
    };
    const auto c1 = line.find(',');
    const auto c2 = c1 == std::string::npos ? c1 : line.find(',', c1 + 1);
    if (c2 == std::string::npos) throw fail("expected name,crossings,code");
    KnotRecord r;
    r.name = trim(line.substr(0, c1));
    try {
      r.crossings = std::stoi(trim(line.substr(c1 + 1, c2 - c1 - 1)));
      r.code = parse_pd(trim(line.substr(c2 + 1)));
      if (name_crossings(r.name) != r.crossings) throw fail("crossing number disagrees with the name");
      if (r.code.size() < r.crossings) throw fail("code has fewer crossings than the crossing number");
    } catch (const TableError&) {
      throw;
    } catch (const std::exception& e) {
      throw fail(e.what());
    }
    r.fp = fingerprint(r.code);
    records.push_back(std::move(r));
  }
  return KnotTable(std::move(records));
}

KnotTable load_table_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  return load_table(in);
}

KnotTable load_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw TableError("cannot open table '" + path + "'");
  return load_table(in);
}

std::vector<std::string> load_name_list(std::istream& in) {
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    out.push_back(trim(line.substr(0, line.find(','))));
  }
  return out;
}

std::vector<std::string> load_name_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw TableError("cannot open name list '" + path + "'");
  return load_name_list(in);
}

}  // namespace knotmosaic
