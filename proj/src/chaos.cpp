#include "dnacipher/chaos.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "dnacipher/error.hpp"

namespace dnacipher {

LogisticStream::LogisticStream(const LogisticParams& params) : r_(params.r), x_(params.x0) {
  for (std::size_t i = 0; i < params.burn_in; ++i) advance();
}

double LogisticStream::advance() {
  x_ = logistic_step(x_, r_);
  if (x_ == 0.0 || x_ == 1.0) {
    throw Error(ErrorCode::kDegenerateStream,
                "trajectory reached fixed point " + std::to_string(x_));
  }
  return x_;
}

double LogisticStream::next() {
  const double x = advance();
  ++emitted_;
  return x;
}

std::vector<double> stream(const LogisticParams& params, std::size_t n) {
  LogisticStream s(params);
  std::vector<double> out(n);
  for (auto& x : out) x = s.next();
  return out;
}

namespace {

void check_params(const LogisticParams& p, const char* name) {
  const std::string prefix(name);
  // Negated comparisons so NaN fails too.
  if (!(p.r >= kMinChaoticR && p.r <= kMaxChaoticR)) {
    throw Error(ErrorCode::kInvalidKey,
                prefix + "_r = " + std::to_string(p.r) + " outside chaotic range [3.57, 4]");
  }
  if (!(p.x0 > 0.0 && p.x0 < 1.0)) {
    throw Error(ErrorCode::kInvalidKey, prefix + "_x0 = " + std::to_string(p.x0) + " not in (0, 1)");
  }
}

constexpr const char* kKeyNames[] = {"selector_r", "selector_x0", "shuffle_r", "shuffle_x0",
                                     "xor_r",      "xor_x0",      "burn_in"};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_real(std::string_view name, std::string_view value) {
  double out = 0.0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw Error(ErrorCode::kInvalidKey, std::string(name) + ": not a number: " + std::string(value));
  }
  return out;
}

std::size_t parse_count(std::string_view name, std::string_view value) {
  std::size_t out = 0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw Error(ErrorCode::kInvalidKey,
                std::string(name) + ": not a non-negative integer: " + std::string(value));
  }
  return out;
}

std::string format_real(double v) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

}  // namespace

void validate_key(const CipherKey& key) {
  check_params(key.selector, "selector");
  check_params(key.shuffle, "shuffle");
  check_params(key.xor_mask, "xor");
}

CipherKey parse_key(std::string_view text) {
  std::map<std::string, std::string, std::less<>> fields;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    const std::string_view line = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorCode::kInvalidKey, "line " + std::to_string(line_no) + ": expected name=value");
    }
    const std::string name(trim(line.substr(0, eq)));
    const std::string value(trim(line.substr(eq + 1)));
    bool known = false;
    for (const char* k : kKeyNames) known = known || name == k;
    if (!known) throw Error(ErrorCode::kInvalidKey, "unknown field '" + name + "'");
    if (!fields.emplace(name, value).second) {
      throw Error(ErrorCode::kInvalidKey, "field '" + name + "' repeated");
    }
  }
  for (const char* k : kKeyNames) {
    if (!fields.contains(k)) throw Error(ErrorCode::kInvalidKey, std::string("missing field '") + k + "'");
  }

  const std::size_t burn_in = parse_count("burn_in", fields["burn_in"]);
  auto params = [&](const std::string& prefix) {
    return LogisticParams{parse_real(prefix + "_r", fields[prefix + "_r"]),
                          parse_real(prefix + "_x0", fields[prefix + "_x0"]), burn_in};
  };
  CipherKey key{params("selector"), params("shuffle"), params("xor")};
  validate_key(key);
  return key;
}

std::string format_key(const CipherKey& key) {
  std::ostringstream out;
  out << "selector_r=" << format_real(key.selector.r) << '\n'
      << "selector_x0=" << format_real(key.selector.x0) << '\n'
      << "shuffle_r=" << format_real(key.shuffle.r) << '\n'
      << "shuffle_x0=" << format_real(key.shuffle.x0) << '\n'
      << "xor_r=" << format_real(key.xor_mask.r) << '\n'
      << "xor_x0=" << format_real(key.xor_mask.x0) << '\n'
      << "burn_in=" << key.selector.burn_in << '\n';
  return out.str();
}

CipherKey load_key(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open key file " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return parse_key(text.str());
}

void save_key(const std::string& path, const CipherKey& key) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot open " + path + " for writing");
  out << format_key(key);
  if (!out) throw Error(ErrorCode::kIo, "write failed: " + path);
}

}  // namespace dnacipher
