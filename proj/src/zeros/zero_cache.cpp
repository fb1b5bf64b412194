#include <filesystem>
#include <fstream>
#include <sstream>

#include "zeta/zero_finder.hpp"

namespace rzeta {

namespace {

constexpr std::string_view kHeaderPrefix = "# zeta-zeros v1 digits=";

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) out.push_back(field);
  return out;
}

long parse_long(const std::string& text, const char* what, long line_no) {
  try {
    size_t used = 0;
    const long v = std::stol(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw Error(ErrorKind::CacheFormat,
              "line " + std::to_string(line_no) + ": bad " + what + " '" + text + "'");
}

}  // namespace

ZeroCache read_zero_cache(std::istream& in, long bits) {
  ZeroCache cache;
  std::string line;
  if (!std::getline(in, line) || line.rfind(kHeaderPrefix, 0) != 0) {
    throw Error(ErrorKind::CacheFormat, "missing '# zeta-zeros v1' header");
  }
  cache.digits = static_cast<int>(parse_long(line.substr(kHeaderPrefix.size()), "digits", 1));
  long line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto f = split_fields(line);
    if (f.size() != 5) {
      throw Error(ErrorKind::CacheFormat, "line " + std::to_string(line_no) + ": expected 5 fields");
    }
    ZeroRecord z;
    z.index = parse_long(f[0], "index", line_no);
    if (!cache.zeros.empty() && z.index <= cache.zeros.back().index) {
      throw Error(ErrorKind::CacheFormat, "line " + std::to_string(line_no) + ": index not increasing");
    }
    try {
      z.t = HpReal::from_string(f[1], bits);
      z.zeta_prime_abs = HpReal::from_string(f[2], bits);
    } catch (const Error&) {
      throw Error(ErrorKind::CacheFormat, "line " + std::to_string(line_no) + ": bad number");
    }
    z.rho = HpComplex(HpReal(0.5, bits), z.t);
    z.winding = static_cast<int>(parse_long(f[3], "winding", line_no));
    z.status = parse_zero_status(f[4]);
    cache.zeros.push_back(std::move(z));
  }
  return cache;
}

ZeroCache read_zero_cache_file(const std::string& path, long bits) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::CacheFormat, "cannot open zero cache '" + path + "'");
  return read_zero_cache(in, bits);
}

void write_zero_cache_header(std::ostream& out, int digits) {
  out << kHeaderPrefix << digits << '\n';
}

void write_zero_record(std::ostream& out, const ZeroRecord& z) {
  out << z.index << ',' << z.t.to_roundtrip_string() << ',' << z.zeta_prime_abs.to_roundtrip_string()
      << ',' << z.winding << ',' << to_string(z.status) << '\n';
}

long append_zero_cache(const std::string& path, int digits, const std::vector<ZeroRecord>& zeros) {
  namespace fs = std::filesystem;
  long last_index = 0;
  const bool exists = fs::exists(path) && fs::file_size(path) > 0;
  if (exists) {
    const ZeroCache cache = read_zero_cache_file(path, PrecisionContext::min_bits_for(digits));
    if (cache.digits != digits) {
      throw Error(ErrorKind::CacheFormat, "cache '" + path + "' holds digits=" +
                                              std::to_string(cache.digits) + ", run asks for " +
                                              std::to_string(digits));
    }
    if (!cache.zeros.empty()) last_index = cache.zeros.back().index;
  }
  std::ofstream out(path, std::ios::app);
  if (!out) throw Error(ErrorKind::CacheFormat, "cannot write zero cache '" + path + "'");
  if (!exists) write_zero_cache_header(out, digits);
  long appended = 0;
  for (const auto& z : zeros) {
    if (z.index <= last_index) continue;
    write_zero_record(out, z);
    ++appended;
  }
  if (!out) throw Error(ErrorKind::CacheFormat, "write to zero cache '" + path + "' failed");
  return appended;
}

}  // namespace rzeta
