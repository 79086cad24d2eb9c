#include "qse/ghd.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>

#include "qse/error.hpp"
#include "qse/rng.hpp"

namespace qse {

namespace {

std::vector<std::uint8_t> parse_bits(std::string_view text,
                                     std::size_t line_no) {
  std::vector<std::uint8_t> bits;
  bits.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '0') bits.push_back(0);
    else if (text[i] == '1') bits.push_back(1);
    else
      throw ParseError("line " + std::to_string(line_no) +
                           ": expected '0' or '1'",
                       i + 1);
  }
  if (bits.empty())
    throw ParseError("line " + std::to_string(line_no) + " is empty");
  return bits;
}

std::uint64_t ceil_sqrt(std::uint64_t m) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(m)));
  while (r * r > m) --r;
  while (r * r < m) ++r;
  return r;
}

}  // namespace

std::uint64_t GhdInstance::hamming_distance() const {
  std::uint64_t d = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != y[i]) ++d;
  return d;
}

GhdInstance make_ghd_instance(std::string_view x_bits, std::string_view y_bits) {
  GhdInstance g;
  g.x = parse_bits(x_bits, 1);
  g.y = parse_bits(y_bits, 2);
  if (g.x.size() != g.y.size())
    throw ParseError("the two bit strings differ in length");
  return g;
}

GhdInstance load_ghd_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::string first, second, extra;
  if (!std::getline(in, first) || !std::getline(in, second))
    throw ParseError("instance file needs two lines of bits");
  while (std::getline(in, extra))
    if (!extra.empty() && extra != "\r")
      throw ParseError("instance file has more than two lines");
  if (!first.empty() && first.back() == '\r') first.pop_back();
  if (!second.empty() && second.back() == '\r') second.pop_back();
  return make_ghd_instance(first, second);
}

void save_ghd_instance(const GhdInstance& g, const std::string& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw ParseError("cannot open '" + path + "' for writing");
  for (std::uint8_t b : g.x) out << (b ? '1' : '0');
  out << '\n';
  for (std::uint8_t b : g.y) out << (b ? '1' : '0');
  out << '\n';
}

GhdClass classify_instance(const GhdInstance& g) {
  std::uint64_t m = g.m();
  std::uint64_t d = g.hamming_distance();
  // d <= m/2 - sqrt(m) and d >= m/2 + sqrt(m), kept in integers.
  if (m >= 2 * d && (m - 2 * d) * (m - 2 * d) >= 4 * m) return GhdClass::near;
  if (2 * d >= m && (2 * d - m) * (2 * d - m) >= 4 * m) return GhdClass::far;
  return GhdClass::unpromised;
}

const char* decision_name(GhdDecision d) {
  switch (d) {
    case GhdDecision::near: return "near";
    case GhdDecision::far: return "far";
    case GhdDecision::undecided: return "undecided";
  }
  return "?";
}

Stream encode_streams(const GhdInstance& g) {
  std::uint64_t m = g.m();
  if (m > 0x7fffffffULL) throw DomainError("instance too large to encode");
  std::vector<std::uint32_t> elements;
  elements.reserve(2 * m);
  for (std::uint64_t j = 1; j <= m; ++j)
    elements.push_back(static_cast<std::uint32_t>(j + m * g.x[j - 1]));
  for (std::uint64_t j = 1; j <= m; ++j)
    elements.push_back(static_cast<std::uint32_t>(j + m * g.y[j - 1]));
  return make_stream(std::move(elements), static_cast<std::uint32_t>(2 * m));
}

double ghd_exact_entropy(const GhdInstance& g) {
  double m = static_cast<double>(g.m());
  return std::log2(m) + static_cast<double>(g.hamming_distance()) / m;
}

GhdDecision decide_ghd(double h_estimate, std::uint64_t m) {
  if (m < 2) throw DomainError("decision needs m >= 2");
  double base = std::log2(static_cast<double>(m)) + 0.5;
  double gap = 1.0 / std::sqrt(static_cast<double>(m));
  // Inclusive thresholds with an ulp-scale guard: when sqrt(m) is an integer
  // the extremal promise distance puts the exact entropy right on the
  // threshold, and an estimate summed by a different route can land a couple
  // of ulps past it. The guard absorbs that rounding while staying orders of
  // magnitude below the width 2/sqrt(m) of the undecided band.
  double guard = 1e-12 * (1.0 + std::abs(h_estimate));
  if (h_estimate <= base - gap + guard) return GhdDecision::near;
  if (h_estimate >= base + gap - guard) return GhdDecision::far;
  return GhdDecision::undecided;
}

double feasible_epsilon(std::uint64_t m) {
  if (m < 2) throw DomainError("feasible accuracy needs m >= 2");
  double fm = static_cast<double>(m);
  return 1.0 / (std::sqrt(fm) * (std::log2(fm) + 0.5));
}

GhdInstance make_boundary_instance(std::uint64_t m, GhdClass side,
                                   std::uint64_t seed) {
  if (m < 4) throw DomainError("boundary instances need m >= 4");
  if (side == GhdClass::unpromised)
    throw DomainError("boundary side must be near or far");
  std::uint64_t s = ceil_sqrt(m);
  std::uint64_t half = m / 2;
  std::uint64_t d = side == GhdClass::near ? half - std::min(half, s) : half + s;
  if (d > m) throw DomainError("boundary distance exceeds m");

  auto rng = make_rng(seed);
  GhdInstance g;
  g.x.resize(m);
  for (auto& b : g.x) b = static_cast<std::uint8_t>(rng() & 1);
  g.y = g.x;
  std::vector<std::uint64_t> idx(m);
  std::iota(idx.begin(), idx.end(), std::uint64_t{0});
  std::shuffle(idx.begin(), idx.end(), rng);
  for (std::uint64_t i = 0; i < d; ++i) g.y[idx[i]] ^= 1;

  if ((side == GhdClass::near && classify_instance(g) != GhdClass::near) ||
      (side == GhdClass::far && classify_instance(g) != GhdClass::far))
    throw DomainError(
        "distance floor(m/2) -+ ceil(sqrt(m)) misses the promise for this m");
  return g;
}

ProtocolTranscript simulate_protocol(const GhdInstance& g,
                                     StreamingEstimator& estimator,
                                     std::uint64_t passes,
                                     std::uint64_t memory_bits) {
  if (passes == 0) throw DomainError("at least one pass");
  if (memory_bits == 0) throw DomainError("message budget must be positive");
  std::uint64_t m = g.m();
  Stream encoded = encode_streams(g);

  ProtocolTranscript t;
  t.passes = passes;
  t.memory_bits = memory_bits;
  t.rounds = 2 * passes - 1;

  estimator.reset(encoded.size(), encoded.n);
  if (estimator.state_bits() > memory_bits)
    throw DomainError("estimator declares more working state than the budget");

  auto ship = [&](std::uint64_t round, Party sender) {
    std::vector<std::uint8_t> state = estimator.snapshot();
    std::uint64_t bits = state.size() * 8;
    t.messages.push_back({round, sender, bits});
    if (bits > memory_bits) t.budget_violation = true;
    estimator.resume(state);  // the receiving party continues from bytes
  };

  for (std::uint64_t i = 1; i <= passes; ++i) {
    estimator.begin_pass(i);
    for (std::uint64_t j = 0; j < m; ++j) estimator.feed(encoded.elements[j]);
    ship(2 * i - 1, Party::alice);
    for (std::uint64_t j = m; j < 2 * m; ++j) estimator.feed(encoded.elements[j]);
    if (i < passes) ship(2 * i, Party::bob);
  }
  t.estimate = estimator.finish();
  t.answer = decide_ghd(t.estimate, m);
  return t;
}

}  // namespace qse
