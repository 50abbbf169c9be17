#include "rzlab/store.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

namespace rzlab::zerolab {

namespace {

constexpr const char* header_line = R"({"format":"rzlab-zeros","version":1})";
constexpr double duplicate_tol = 1e-7;

std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string coverage_line(const Coverage& c) {
  return std::string(R"({"scan":{"sigma_min":)") + num(c.region.sigma_min) +
         R"(,"sigma_max":)" + num(c.region.sigma_max) + R"(,"t_min":)" +
         num(c.region.t_min) + R"(,"t_max":)" + num(c.region.t_max) +
         R"(,"count":)" + std::to_string(c.count) + "}}";
}

Method method_from_string(const std::string& s, long line_no) {
  for (Method m : {Method::newton, Method::cluster})
    if (s == to_string(m)) return m;
  throw FormatError("unknown method '" + s + "'", line_no);
}

double get_number(const nlohmann::json& j, const char* key, long line_no) {
  if (!j.contains(key) || !j.at(key).is_number())
    throw FormatError(std::string("missing or non-numeric field '") + key + "'", line_no);
  const double v = j.at(key).get<double>();
  if (!std::isfinite(v)) throw FormatError(std::string("non-finite '") + key + "'", line_no);
  return v;
}

bool near(const ZeroRecord& a, const ZeroRecord& b) {
  return std::abs(a.rho() - b.rho()) < duplicate_tol;
}

// Inserts r into a vector kept sorted by `less`, skipping duplicates.
template <class Less>
void insert_sorted(std::vector<ZeroRecord>& v, const ZeroRecord& r, Less less) {
  auto it = std::lower_bound(v.begin(), v.end(), r, less);
  if (it != v.end() && near(*it, r)) return;
  if (it != v.begin() && near(*(it - 1), r)) return;
  v.insert(it, r);
}

bool by_gamma_up(const ZeroRecord& a, const ZeroRecord& b) {
  return a.gamma < b.gamma || (a.gamma == b.gamma && a.beta < b.beta);
}
bool by_gamma_down(const ZeroRecord& a, const ZeroRecord& b) {
  return a.gamma > b.gamma || (a.gamma == b.gamma && a.beta < b.beta);
}

// Length of the union of [lo, hi] intervals that is connected to `from`,
// walking in direction `dir`.
double covered_from(std::vector<std::pair<double, double>> iv, double from, int dir) {
  double reach = from;
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& [lo, hi] : iv) {
      if (dir > 0 && lo <= reach + 1e-2 && hi > reach) {
        reach = hi;
        grew = true;
      }
      if (dir < 0 && hi >= reach - 1e-2 && lo < reach) {
        reach = lo;
        grew = true;
      }
    }
  }
  return reach;
}

}  // namespace

std::string record_line(const ZeroRecord& r) {
  return std::string(R"({"beta":)") + num(r.beta) + R"(,"gamma":)" + num(r.gamma) +
         R"(,"multiplicity":)" + std::to_string(r.multiplicity) + R"(,"side":")" +
         to_string(r.side) + R"(","resid":)" + num(r.resid) + R"(,"index":)" +
         std::to_string(r.index) + R"(,"method":")" + to_string(r.method) + "\"}";
}

ZeroRecord parse_record(const std::string& line, long line_no) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("malformed JSON: ") + e.what(), line_no);
  }
  if (!j.is_object()) throw FormatError("record is not an object", line_no);
  ZeroRecord r;
  r.beta = get_number(j, "beta", line_no);
  r.gamma = get_number(j, "gamma", line_no);
  if (!j.contains("multiplicity") || !j["multiplicity"].is_number_integer())
    throw FormatError("missing or non-integer 'multiplicity'", line_no);
  r.multiplicity = j["multiplicity"].get<int>();
  if (r.multiplicity < 1) throw FormatError("multiplicity < 1", line_no);
  if (!j.contains("side") || !j["side"].is_string())
    throw FormatError("missing 'side'", line_no);
  try {
    r.side = side_from_string(j["side"].get<std::string>());
  } catch (const Error&) {
    throw FormatError("unknown side", line_no);
  }
  r.resid = get_number(j, "resid", line_no);
  if (r.resid < 0.0) throw FormatError("negative resid", line_no);
  if (!j.contains("index") || !j["index"].is_number_integer())
    throw FormatError("missing or non-integer 'index'", line_no);
  r.index = j["index"].get<long>();
  if (!j.contains("method") || !j["method"].is_string())
    throw FormatError("missing 'method'", line_no);
  r.method = method_from_string(j["method"].get<std::string>(), line_no);
  return r;
}

ZeroStore ZeroStore::parse(const std::string& text) {
  ZeroStore st;
  std::istringstream in(text);
  std::string line;
  long line_no = 0;
  bool header = false;
  std::map<long, long> index_line;  // stored index -> line, for the order check
  std::vector<ZeroRecord> recs;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (!header) {
      nlohmann::json h;
      try {
        h = nlohmann::json::parse(line);
      } catch (const nlohmann::json::exception&) {
        throw FormatError("missing format header", line_no);
      }
      if (!h.is_object() || h.value("format", "") != "rzlab-zeros")
        throw FormatError("missing format header", line_no);
      if (h.value("version", 0) != 1) throw FormatError("unsupported store version", line_no);
      header = true;
      continue;
    }
    if (line.rfind(R"({"scan")", 0) == 0) {
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(line);
      } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("malformed JSON: ") + e.what(), line_no);
      }
      const auto& sc = j["scan"];
      if (!sc.is_object()) throw FormatError("malformed scan line", line_no);
      Coverage c;
      try {
        c.region = Rectangle::make(get_number(sc, "sigma_min", line_no),
                                   get_number(sc, "sigma_max", line_no),
                                   get_number(sc, "t_min", line_no),
                                   get_number(sc, "t_max", line_no));
      } catch (const ContourError&) {
        throw FormatError("degenerate scan region", line_no);
      }
      if (!sc.contains("count") || !sc["count"].is_number_integer())
        throw FormatError("missing scan count", line_no);
      c.count = sc["count"].get<int>();
      st.coverage_.push_back(c);
      continue;
    }
    ZeroRecord r = parse_record(line, line_no);
    if (index_line.count(r.index)) throw FormatError("duplicate index", line_no);
    index_line[r.index] = line_no;
    recs.push_back(r);
  }
  if (!header) throw FormatError("empty store file", 1);
  const std::vector<ZeroRecord> original = recs;
  st.add(recs);
  // Stored indices must agree with the gamma order.
  for (const auto& r : original) {
    const auto& half = r.gamma > 0.0 ? st.upper_ : st.lower_;
    auto it = std::find_if(half.begin(), half.end(),
                           [&](const ZeroRecord& q) { return q.beta == r.beta && q.gamma == r.gamma; });
    if (it == half.end() || it->index != r.index)
      throw FormatError("index out of gamma order", index_line[r.index]);
  }
  return st;
}

ZeroStore ZeroStore::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return {};
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

void ZeroStore::add(const std::vector<ZeroRecord>& records) {
  for (const auto& r : records) {
    if (r.gamma > 0.0)
      insert_sorted(upper_, r, by_gamma_up);
    else
      insert_sorted(lower_, r, by_gamma_down);
  }
  renumber();
}

void ZeroStore::add_coverage(const Coverage& c) {
  if (std::find(coverage_.begin(), coverage_.end(), c) == coverage_.end())
    coverage_.push_back(c);
}

void ZeroStore::renumber() {
  for (std::size_t i = 0; i < upper_.size(); ++i) upper_[i].index = static_cast<long>(i) + 1;
  for (std::size_t i = 0; i < lower_.size(); ++i) lower_[i].index = -static_cast<long>(i);
}

std::vector<ZeroRecord> ZeroStore::all() const {
  std::vector<ZeroRecord> out(lower_.rbegin(), lower_.rend());
  out.insert(out.end(), upper_.begin(), upper_.end());
  return out;
}

std::string ZeroStore::serialize() const {
  std::string out = std::string(header_line) + "\n";
  for (const auto& c : coverage_) out += coverage_line(c) + "\n";
  for (const auto& r : upper_) out += record_line(r) + "\n";
  for (const auto& r : lower_) out += record_line(r) + "\n";
  return out;
}

void ZeroStore::save(const std::filesystem::path& path) const {
  const std::string text = serialize();
  std::string existing;
  {
    std::ifstream in(path, std::ios::binary);
    if (in) {
      std::ostringstream ss;
      ss << in.rdbuf();
      existing = ss.str();
    }
  }
  if (!existing.empty() && existing.size() <= text.size() &&
      text.compare(0, existing.size(), existing) == 0) {
    std::ofstream out(path, std::ios::binary | std::ios::app);
    out << text.substr(existing.size());
    if (!out) throw Error("cannot append to " + path.string());
    return;
  }
  const auto tmp = std::filesystem::path(path.string() + ".tmp");
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << text;
    if (!out) throw Error("cannot write " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

double ZeroStore::covered_above() const {
  std::vector<std::pair<double, double>> iv;
  for (const auto& c : coverage_)
    if (c.region.t_max > 0.0) iv.emplace_back(c.region.t_min, c.region.t_max);
  return std::max(0.0, covered_from(iv, 0.0, +1));
}

double ZeroStore::covered_below() const {
  std::vector<std::pair<double, double>> iv;
  for (const auto& c : coverage_)
    if (c.region.t_min < 0.0) iv.emplace_back(c.region.t_min, c.region.t_max);
  return std::min(0.0, covered_from(iv, 0.0, -1));
}

}  // namespace rzlab::zerolab
