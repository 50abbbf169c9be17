#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "rzlab/zerolab.hpp"

namespace rzlab::zerolab {

// A scanned region and the winding count found for it.
struct Coverage {
  Rectangle region;
  int count = 0;
  bool operator==(const Coverage&) const = default;
};

// Zeros of R, one JSON object per line after a format header:
//   {"format":"rzlab-zeros","version":1}
//   {"beta":...,"gamma":...,"multiplicity":1,"side":"left","resid":...,"index":3,"method":"newton"}
//   {"scan":{"sigma_min":...,"sigma_max":...,"t_min":...,"t_max":...,"count":12}}
// Numbers carry 17 significant digits so a reload is bit-identical.
class ZeroStore {
 public:
  ZeroStore() = default;

  // A missing file gives an empty store; a malformed one throws FormatError.
  static ZeroStore load(const std::filesystem::path& path);
  static ZeroStore parse(const std::string& text);

  // Merges records (duplicates within 1e-7 are dropped) and renumbers.
  void add(const std::vector<ZeroRecord>& records);
  void add_coverage(const Coverage& c);

  // Writes the store. If the file on disk is a prefix of this store's
  // canonical form the new lines are appended; otherwise the file is
  // replaced atomically.
  void save(const std::filesystem::path& path) const;
  std::string serialize() const;

  // gamma > 0 by increasing gamma (indices 1, 2, ...).
  const std::vector<ZeroRecord>& upper() const { return upper_; }
  // gamma <= 0 by decreasing gamma (indices 0, -1, ...).
  const std::vector<ZeroRecord>& lower() const { return lower_; }
  const std::vector<Coverage>& coverage() const { return coverage_; }
  std::vector<ZeroRecord> all() const;
  bool empty() const { return upper_.empty() && lower_.empty(); }

  // Largest T with (0, T] covered by recorded scans (0 if none).
  double covered_above() const;
  // Smallest t <= 0 with [t, 0] covered by recorded scans (0 if none).
  double covered_below() const;

 private:
  void renumber();

  std::vector<ZeroRecord> upper_;
  std::vector<ZeroRecord> lower_;
  std::vector<Coverage> coverage_;
};

std::string record_line(const ZeroRecord& r);
ZeroRecord parse_record(const std::string& line, long line_no);

}  // namespace rzlab::zerolab
