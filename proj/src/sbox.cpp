#include "dnacipher/sbox.hpp"

#include <fstream>
#include <sstream>

#include "dnacipher/error.hpp"

namespace dnacipher {

SBox::SBox(const Table& table) : table_(table), inverse_{} {
  std::array<bool, 256> seen{};
  for (std::size_t b = 0; b < 256; ++b) {
    const std::uint8_t v = table_[b];
    if (seen[v]) {
      throw Error(ErrorCode::kInvalidSBox, "value " + std::to_string(v) + " appears twice");
    }
    seen[v] = true;
    inverse_[v] = static_cast<std::uint8_t>(b);
  }
}

namespace {

// Multiplication in GF(2^8) modulo x^8 + x^4 + x^3 + x + 1.
std::uint8_t gf_mul(std::uint8_t a, std::uint8_t b) {
  std::uint8_t p = 0;
  while (b != 0) {
    if (b & 1) p ^= a;
    const bool carry = a & 0x80;
    a = static_cast<std::uint8_t>(a << 1);
    if (carry) a ^= 0x1B;
    b >>= 1;
  }
  return p;
}

// a^254 == a^-1 for a != 0, and 0 maps to 0.
std::uint8_t gf_inverse(std::uint8_t a) {
  std::uint8_t result = 1;
  std::uint8_t base = a;
  for (unsigned e = 254; e != 0; e >>= 1) {
    if (e & 1) result = gf_mul(result, base);
    base = gf_mul(base, base);
  }
  return a == 0 ? 0 : result;
}

std::uint8_t rotl8(std::uint8_t v, unsigned s) {
  return static_cast<std::uint8_t>((v << s) | (v >> (8 - s)));
}

}  // namespace

SBox::Table aes_sbox_table() {
  SBox::Table t{};
  for (unsigned b = 0; b < 256; ++b) {
    const std::uint8_t inv = gf_inverse(static_cast<std::uint8_t>(b));
    t[b] = static_cast<std::uint8_t>(inv ^ rotl8(inv, 1) ^ rotl8(inv, 2) ^ rotl8(inv, 3) ^
                                     rotl8(inv, 4) ^ 0x63);
  }
  return t;
}

SBoxSet default_sbox_set() {
  const SBox::Table s1 = aes_sbox_table();
  SBox::Table s2{};
  SBox::Table s3{};
  for (std::size_t b = 0; b < 256; ++b) {
    s2[b] = s1[s1[b]];
    s3[b] = static_cast<std::uint8_t>(s1[b] ^ 0x5A);
  }
  return {SBox(s1), SBox(s2), SBox(s3)};
}

SBoxSet parse_sbox_set(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::array<SBox::Table, kSBoxCount> tables{};
  for (std::size_t box = 0; box < kSBoxCount; ++box) {
    for (std::size_t b = 0; b < 256; ++b) {
      long v = 0;
      if (!(in >> v)) {
        throw Error(ErrorCode::kInvalidSBox, "box " + std::to_string(box + 1) + " has only " +
                                                 std::to_string(b) + " entries");
      }
      if (v < 0 || v > 255) {
        throw Error(ErrorCode::kInvalidSBox, "entry " + std::to_string(v) + " out of range");
      }
      tables[box][b] = static_cast<std::uint8_t>(v);
    }
  }
  std::string extra;
  if (in >> extra) throw Error(ErrorCode::kInvalidSBox, "unexpected trailing content '" + extra + "'");
  return {SBox(tables[0]), SBox(tables[1]), SBox(tables[2])};
}

SBoxSet load_sbox_set(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open S-box file " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return parse_sbox_set(text.str());
}

}  // namespace dnacipher
