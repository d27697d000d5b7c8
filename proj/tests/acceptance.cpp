// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails. Keys come from keygen with fixed seed strings so every
// run measures the same ciphers.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "dnacipher/chaos.hpp"
#include "dnacipher/cipher.hpp"
#include "dnacipher/dna.hpp"
#include "dnacipher/error.hpp"
#include "dnacipher/metrics.hpp"
#include "dnacipher/permute.hpp"
#include "dnacipher/sbox.hpp"

using namespace dnacipher;

namespace {

constexpr double kEntropyFloor = 7.98;
constexpr double kCorrelationBound = 0.01;
constexpr double kContrastLow = 9.5, kContrastHigh = 11.5;
constexpr double kHomogeneityLow = 0.37, kHomogeneityHigh = 0.41;
constexpr double kEnergyLow = 0.014, kEnergyHigh = 0.018;
constexpr double kChiSquareCritical = 293.25;  // 5% point, 255 degrees of freedom
constexpr double kChiSquareCeiling = 400.0;
constexpr double kKeySensitivityFloor = 0.99;
constexpr double kRoundTripSeconds = 1.0;

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void report(const char* id, const char* title, const Outcome& o) {
  std::printf("[%s] %s %s: %s\n", o.pass ? "PASS" : "FAIL", id, title, o.detail.c_str());
  std::fflush(stdout);
  if (!o.pass) ++failures;
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

PixelGrid random_grid(std::mt19937_64& rng, std::size_t w, std::size_t h) {
  std::vector<std::uint8_t> data(w * h);
  for (auto& v : data) v = static_cast<std::uint8_t>(rng() & 0xFF);
  return PixelGrid(w, h, std::move(data));
}

struct NamedImage {
  std::string name;
  PixelGrid grid;
};

std::vector<NamedImage> standard_images() {
  const std::string dir = DNACIPHER_TEST_DATA_DIR;
  return {{"cameraman", load_pgm(dir + "/cameraman.pgm")}, {"texture", load_pgm(dir + "/texture.pgm")}};
}

double fraction_differing(const PixelGrid& a, const PixelGrid& b) {
  std::size_t diff = 0;
  for (std::size_t i = 0; i < a.size(); ++i) diff += a.pixels()[i] != b.pixels()[i];
  return static_cast<double>(diff) / static_cast<double>(a.size());
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

Outcome round_trip(const std::vector<NamedImage>& images, const SBoxSet& boxes) {
  Outcome o;
  std::mt19937_64 rng(1001);
  std::vector<PixelGrid> grids;
  for (const auto& img : images) grids.push_back(img.grid);
  for (int i = 0; i < 100; ++i) grids.push_back(random_grid(rng, 256, 256));

  double slowest = 0.0;
  std::size_t mismatches = 0;
  for (std::size_t i = 0; i < grids.size(); ++i) {
    const CipherKey key = keygen("acceptance-roundtrip-" + std::to_string(i));
    const auto t0 = std::chrono::steady_clock::now();
    const PixelGrid back = decrypt(encrypt(grids[i], key, boxes), key, boxes);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    slowest = std::max(slowest, secs);
    mismatches += back != grids[i];
  }
  o.pass = mismatches == 0 && slowest < kRoundTripSeconds;
  o.detail = std::to_string(grids.size()) + " grids, " + std::to_string(mismatches) +
             " mismatches, slowest encrypt+decrypt " + fmt("%.3f s", slowest);
  return o;
}

struct CipherSample {
  std::string label;
  PixelGrid cipher;
};

std::vector<CipherSample> standard_ciphers(const std::vector<NamedImage>& images, const SBoxSet& boxes) {
  std::vector<CipherSample> out;
  for (const auto& img : images) {
    for (int k = 0; k < 5; ++k) {
      const CipherKey key = keygen("acceptance-stats-" + std::to_string(k));
      out.push_back({img.name + "/key" + std::to_string(k), encrypt(img.grid, key, boxes)});
    }
  }
  return out;
}

Outcome entropy_band(const std::vector<CipherSample>& ciphers) {
  Outcome o;
  double lowest = 8.0;
  for (const auto& c : ciphers) {
    const double h = entropy(c.cipher);
    lowest = std::min(lowest, h);
    if (h < kEntropyFloor) {
      o.pass = false;
      o.detail += c.label + "=" + fmt("%.5f ", h);
    }
  }
  o.detail += std::to_string(ciphers.size()) + " ciphers, min entropy " + fmt("%.5f", lowest) +
              " (floor 7.98)";
  return o;
}

Outcome correlation_band(const std::vector<CipherSample>& ciphers) {
  Outcome o;
  double worst = 0.0;
  for (const auto& c : ciphers) {
    for (const Direction d : {Direction::kHorizontal, Direction::kVertical, Direction::kDiagonal}) {
      const double r = correlation(c.cipher, d);
      worst = std::max(worst, std::abs(r));
      if (std::abs(r) > kCorrelationBound) {
        o.pass = false;
        o.detail += c.label + "=" + fmt("%.5f ", r);
      }
    }
  }
  o.detail += "max |r| " + fmt("%.5f", worst) + " over " + std::to_string(3 * ciphers.size()) +
              " direction/cipher pairs (bound 0.01)";
  return o;
}

Outcome glcm_bands(const std::vector<CipherSample>& ciphers) {
  Outcome o;
  double c_lo = 1e9, c_hi = -1e9, h_lo = 1e9, h_hi = -1e9, e_lo = 1e9, e_hi = -1e9;
  for (const auto& c : ciphers) {
    const GlcmMatrix g = glcm(c.cipher);
    const double con = contrast(g), hom = homogeneity(g), ene = energy(g);
    c_lo = std::min(c_lo, con), c_hi = std::max(c_hi, con);
    h_lo = std::min(h_lo, hom), h_hi = std::max(h_hi, hom);
    e_lo = std::min(e_lo, ene), e_hi = std::max(e_hi, ene);
    if (con < kContrastLow || con > kContrastHigh || hom < kHomogeneityLow || hom > kHomogeneityHigh ||
        ene < kEnergyLow || ene > kEnergyHigh) {
      o.pass = false;
      o.detail += c.label + " out of band; ";
    }
  }
  o.detail += "contrast [" + fmt("%.4f", c_lo) + ", " + fmt("%.4f", c_hi) + "], homogeneity [" +
              fmt("%.5f", h_lo) + ", " + fmt("%.5f", h_hi) + "], energy [" + fmt("%.6f", e_lo) +
              ", " + fmt("%.6f", e_hi) + "]";
  return o;
}

Outcome histogram_uniformity(const PixelGrid& cameraman, const SBoxSet& boxes) {
  std::vector<double> stats;
  for (int k = 0; k < 20; ++k) {
    const CipherKey key = keygen("acceptance-histogram-" + std::to_string(k));
    stats.push_back(chi_square(histogram(encrypt(cameraman, key, boxes))));
  }
  const double med = median(stats);
  const double worst = *std::max_element(stats.begin(), stats.end());
  Outcome o;
  o.pass = med < kChiSquareCritical && worst <= kChiSquareCeiling;
  o.detail = "20 keys on cameraman: median chi-square " + fmt("%.2f", med) + " (< 293.25), max " +
             fmt("%.2f", worst) + " (<= 400)";
  return o;
}

Outcome structural_suites(const SBoxSet& boxes) {
  std::vector<std::string> broken;
  std::mt19937_64 rng(6006);

  // Snake involution on 50 shapes, the first three degenerate.
  for (int i = 0; i < 50; ++i) {
    std::size_t w = 1 + rng() % 64, h = 1 + rng() % 64;
    if (i == 0) w = h = 1;
    if (i == 1) h = 1;
    if (i == 2) w = 1;
    const PixelGrid g = random_grid(rng, w, h);
    if (snake(snake(g)) != g) broken.push_back("snake involution");
  }

  for (int b = 0; b < 256; ++b) {
    const PixelGrid one(1, 1, {static_cast<std::uint8_t>(b)});
    if (decode_sequence(encode_grid(one), 1, 1).at(0, 0) != static_cast<std::uint8_t>(~b)) {
      broken.push_back("DNA complement at " + std::to_string(b));
    }
  }
  for (int i = 0; i < 50; ++i) {
    const PixelGrid g = random_grid(rng, 1 + rng() % 40, 1 + rng() % 40);
    if (invert_encode(encode_grid(g), g.width(), g.height()) != g) broken.push_back("DNA forward round-trip");
    const DnaSequence s = encode_grid(g);
    if (invert_decode(decode_sequence(s, g.width(), g.height())) != s) broken.push_back("DNA reverse round-trip");
  }

  for (const SBox& box : boxes) {
    std::array<bool, 256> hit{};
    for (int b = 0; b < 256; ++b) {
      const auto byte = static_cast<std::uint8_t>(b);
      const std::uint8_t c = substitute(byte, box);
      hit[c] = true;
      if (c != box.table()[byte] || box.cell((b >> 4) + 1, (b & 15) + 1) != box.table()[byte]) {
        broken.push_back("nibble rule");
      }
      if (substitute_inverse(c, box) != byte) broken.push_back("S-box inverse");
    }
    if (!std::all_of(hit.begin(), hit.end(), [](bool x) { return x; })) broken.push_back("S-box bijectivity");
  }

  std::uniform_real_distribution<double> draw(0.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const std::size_t len = 1 + rng() % 500;
    std::string seq(len, 'A');
    for (auto& c : seq) c = "ACGT"[rng() % 4];
    std::vector<double> draws(len - 1);
    for (auto& d : draws) d = draw(rng);
    const auto [out, trace] = keyed_shuffle(seq, draws);
    if (invert_shuffle(out, trace) != seq) broken.push_back("shuffle round-trip");
  }

  const LogisticParams p{3.99, 0.4, 1000};
  if (stream(p, 262143) != stream(p, 262143)) broken.push_back("stream determinism");

  Outcome o;
  o.pass = broken.empty();
  o.detail = o.pass ? "snake x50, DNA complement x256, DNA round-trips x100, S-box 3x256, "
                      "shuffle x1000, stream determinism"
                    : std::to_string(broken.size()) + " violations, first: " + broken.front();
  return o;
}

Outcome key_sensitivity(const SBoxSet& boxes) {
  struct Slot {
    const char* name;
    std::function<void(CipherKey&)> perturb;
  };
  const Slot slots[] = {
      {"selector_x0", [](CipherKey& k) { k.selector.x0 += 1e-12; }},
      {"shuffle_x0", [](CipherKey& k) { k.shuffle.x0 += 1e-12; }},
      {"xor_x0", [](CipherKey& k) { k.xor_mask.x0 += 1e-12; }},
  };
  Outcome o;
  std::mt19937_64 rng(7007);
  std::vector<PixelGrid> images;
  std::vector<CipherKey> keys;
  for (int t = 0; t < 20; ++t) {
    images.push_back(random_grid(rng, 256, 256));
    keys.push_back(keygen("acceptance-sensitivity-" + std::to_string(t)));
  }
  for (const auto& slot : slots) {
    std::vector<double> fractions;
    for (int t = 0; t < 20; ++t) {
      CipherKey other = keys[t];
      slot.perturb(other);
      fractions.push_back(fraction_differing(encrypt(images[t], keys[t], boxes),
                                             encrypt(images[t], other, boxes)));
    }
    const double med = median(fractions);
    if (med < kKeySensitivityFloor) o.pass = false;
    o.detail += std::string(slot.name) + " median " + fmt("%.4f", med) + "; ";
  }
  o.detail += "floor 0.99 per slot";
  return o;
}

Outcome worked_examples(const SBoxSet& boxes) {
  std::vector<std::string> broken;
  if (encode_grid(PixelGrid(1, 1, {0b11000110})).symbols() != "ATGC") broken.push_back("11000110 -> ATGC");
  if (decode_sequence(DnaSequence("AGCT"), 1, 1).at(0, 0) != 0b00100111) broken.push_back("AGCT -> 00100111");
  std::vector<std::uint8_t> v(16);
  std::iota(v.begin(), v.end(), 1);
  const PixelGrid s = snake(PixelGrid(4, 4, v));
  const std::vector<std::uint8_t> fig = {1, 2, 3, 4, 8, 7, 6, 5, 9, 10, 11, 12, 16, 15, 14, 13};
  if (!std::equal(fig.begin(), fig.end(), s.pixels().begin())) broken.push_back("4x4 snake");
  for (const SBox& box : boxes) {
    if (substitute(85, box) != box.cell(6, 6)) broken.push_back("85 -> (6,6)");
  }
  Outcome o;
  o.pass = broken.empty();
  o.detail = o.pass ? "11000110->ATGC, AGCT->00100111, 4x4 snake, 85->(6,6)"
                    : "broken: " + broken.front();
  return o;
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  try {
    const SBoxSet boxes = default_sbox_set();
    const auto images = standard_images();

    report("C1", "round-trip exactness", round_trip(images, boxes));
    const auto ciphers = standard_ciphers(images, boxes);
    report("C2", "entropy band", entropy_band(ciphers));
    report("C3", "correlation band", correlation_band(ciphers));
    report("C4", "GLCM bands", glcm_bands(ciphers));
    report("C5", "histogram uniformity", histogram_uniformity(images.front().grid, boxes));
    report("C6", "structural property suites", structural_suites(boxes));
    report("C7", "key sensitivity", key_sensitivity(boxes));
    report("C8", "worked-example fidelity", worked_examples(boxes));
  } catch (const Error& e) {
    std::printf("[FAIL] acceptance aborted: %s\n", e.what());
    return 1;
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%d criteria failed; total %.1f s\n", failures, secs);
  return failures == 0 ? 0 : 1;
}
