#include "qse/stream.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstring>
#include <fstream>
#include <sstream>

#include "qse/error.hpp"
#include "qse/ghd.hpp"
#include "qse/rng.hpp"

namespace qse {

namespace {

constexpr char kMagic[4] = {'Q', 'S', 'E', '1'};

std::uint32_t read_u32_le(const unsigned char* p) {
  return static_cast<std::uint32_t>(p[0]) |
         (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) |
         (static_cast<std::uint32_t>(p[3]) << 24);
}

void write_u32_le(std::string& out, std::uint32_t v) {
  out.push_back(static_cast<char>(v & 0xff));
  out.push_back(static_cast<char>((v >> 8) & 0xff));
  out.push_back(static_cast<char>((v >> 16) & 0xff));
  out.push_back(static_cast<char>((v >> 24) & 0xff));
}

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

// Parses "key=<decimal>" and returns the value.
std::uint64_t header_field(std::string_view line, std::string_view key) {
  auto pos = line.find(key);
  if (pos == std::string_view::npos)
    throw ParseError("stream header is missing '" + std::string(key) + "<int>'");
  std::uint64_t value = 0;
  const char* first = line.data() + pos + key.size();
  const char* last = line.data() + line.size();
  auto res = std::from_chars(first, last, value);
  if (res.ec != std::errc{})
    throw ParseError("stream header has a malformed '" + std::string(key) + "' value");
  return value;
}

Stream parse_text(std::string_view bytes) {
  std::size_t i = 0;
  while (i < bytes.size() && is_space(bytes[i])) ++i;

  std::optional<std::uint64_t> header_m;
  std::optional<std::uint32_t> header_n;
  if (i < bytes.size() && bytes[i] == '#') {
    auto eol = bytes.find('\n', i);
    std::string_view line = bytes.substr(i, eol == std::string_view::npos
                                                ? std::string_view::npos
                                                : eol - i);
    header_m = header_field(line, "m=");
    std::uint64_t n = header_field(line, "n=");
    if (n == 0 || n > 0xffffffffULL)
      throw ParseError("stream header n out of range");
    header_n = static_cast<std::uint32_t>(n);
    i = (eol == std::string_view::npos) ? bytes.size() : eol + 1;
  }

  std::vector<std::uint32_t> elements;
  if (header_m) elements.reserve(*header_m);
  std::size_t token_index = 0;
  while (i < bytes.size()) {
    while (i < bytes.size() && is_space(bytes[i])) ++i;
    if (i >= bytes.size()) break;
    std::size_t start = i;
    while (i < bytes.size() && !is_space(bytes[i])) ++i;
    ++token_index;
    std::uint64_t value = 0;
    const char* first = bytes.data() + start;
    const char* last = bytes.data() + i;
    auto res = std::from_chars(first, last, value);
    if (res.ec != std::errc{} || res.ptr != last)
      throw ParseError("token " + std::to_string(token_index) +
                           " is not a positive integer",
                       token_index);
    if (value == 0 || value > 0xffffffffULL)
      throw ParseError("token " + std::to_string(token_index) +
                           " is outside the symbol range",
                       token_index);
    elements.push_back(static_cast<std::uint32_t>(value));
  }

  if (elements.empty()) throw ParseError("empty stream");
  if (header_m && *header_m != elements.size())
    throw ParseError("stream header declares m=" + std::to_string(*header_m) +
                     " but " + std::to_string(elements.size()) +
                     " elements follow");
  if (header_n) {
    for (std::size_t k = 0; k < elements.size(); ++k)
      if (elements[k] > *header_n)
        throw ParseError("element " + std::to_string(k + 1) +
                             " exceeds the declared alphabet bound",
                         k + 1);
  }
  return make_stream(std::move(elements), header_n);
}

Stream parse_binary(std::string_view bytes) {
  const auto* p = reinterpret_cast<const unsigned char*>(bytes.data());
  if (bytes.size() >= 4 && std::memcmp(bytes.data(), kMagic, 4) == 0) {
    if (bytes.size() < 12) throw ParseError("binary stream header truncated");
    std::uint64_t m = read_u32_le(p + 4);
    std::uint32_t n = read_u32_le(p + 8);
    if (m == 0) throw ParseError("empty stream");
    if (n == 0) throw ParseError("binary stream header has n=0");
    if (bytes.size() != 12 + 4 * m)
      throw ParseError("binary stream body has " +
                       std::to_string((bytes.size() - 12) / 4) +
                       " elements, header declares " + std::to_string(m));
    std::vector<std::uint32_t> elements(m);
    for (std::uint64_t j = 0; j < m; ++j) {
      elements[j] = read_u32_le(p + 12 + 4 * j);
      if (elements[j] == 0 || elements[j] > n)
        throw ParseError("element " + std::to_string(j + 1) +
                             " is outside {1.." + std::to_string(n) + "}",
                         j + 1);
    }
    return make_stream(std::move(elements), n);
  }
  // Headerless variant: a bare sequence of little-endian u32 values.
  if (bytes.empty()) throw ParseError("empty stream");
  if (bytes.size() % 4 != 0)
    throw ParseError("binary stream length is not a multiple of 4");
  std::uint64_t m = bytes.size() / 4;
  std::vector<std::uint32_t> elements(m);
  for (std::uint64_t j = 0; j < m; ++j) {
    elements[j] = read_u32_le(p + 4 * j);
    if (elements[j] == 0)
      throw ParseError("element " + std::to_string(j + 1) + " is zero", j + 1);
  }
  return make_stream(std::move(elements));
}

}  // namespace

std::uint32_t Stream::at(std::uint64_t q) const {
  if (q == 0 || q > size())
    throw DomainError("position " + std::to_string(q) +
                      " outside 1.." + std::to_string(size()));
  return elements[q - 1];
}

Stream make_stream(std::vector<std::uint32_t> elements,
                   std::optional<std::uint32_t> n) {
  if (elements.empty()) throw DomainError("a stream must hold at least one element");
  std::uint32_t max_elem = 0;
  for (std::uint32_t e : elements) {
    if (e == 0) throw DomainError("stream symbols are positive integers");
    max_elem = std::max(max_elem, e);
  }
  Stream s;
  if (n) {
    if (*n < max_elem)
      throw DomainError("alphabet bound n=" + std::to_string(*n) +
                        " is below the largest element");
    s.n = *n;
  } else {
    s.n = max_elem;
  }
  s.elements = std::move(elements);
  return s;
}

double EmpiricalDistribution::probability(std::uint32_t symbol) const {
  auto it = counts.find(symbol);
  if (it == counts.end() || m == 0) return 0.0;
  return static_cast<double>(it->second) / static_cast<double>(m);
}

Stream parse_stream(std::string_view bytes, StreamFormat format) {
  return format == StreamFormat::text ? parse_text(bytes) : parse_binary(bytes);
}

std::string format_stream(const Stream& s, StreamFormat format) {
  std::string out;
  if (format == StreamFormat::text) {
    out += "# m=" + std::to_string(s.size()) + " n=" + std::to_string(s.n) + "\n";
    for (std::uint32_t e : s.elements) {
      out += std::to_string(e);
      out += '\n';
    }
    return out;
  }
  out.append(kMagic, 4);
  write_u32_le(out, static_cast<std::uint32_t>(s.size()));
  write_u32_le(out, s.n);
  for (std::uint32_t e : s.elements) write_u32_le(out, e);
  return out;
}

Stream load_stream(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string bytes = buf.str();
  bool binary = bytes.size() >= 4 && std::memcmp(bytes.data(), kMagic, 4) == 0;
  return parse_stream(bytes, binary ? StreamFormat::binary : StreamFormat::text);
}

void save_stream(const Stream& s, const std::string& path, StreamFormat format) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ParseError("cannot open '" + path + "' for writing");
  std::string bytes = format_stream(s, format);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

EmpiricalDistribution frequencies(const Stream& s) {
  EmpiricalDistribution d;
  d.m = s.size();
  for (std::uint32_t e : s.elements) ++d.counts[e];
  return d;
}

double exact_entropy(const EmpiricalDistribution& d) {
  if (d.m == 0) throw DomainError("entropy of an empty distribution");
  double h = 0.0;
  for (const auto& [symbol, count] : d.counts) {
    (void)symbol;
    double p = static_cast<double>(count) / static_cast<double>(d.m);
    // p * log2(1/p) with the quotient formed first: exact 0 when count == m.
    h += p * std::log2(static_cast<double>(d.m) / static_cast<double>(count));
  }
  return h;
}

double exact_entropy(const Stream& s) { return exact_entropy(frequencies(s)); }

std::uint32_t boyer_moore_candidate(const Stream& s) {
  if (s.size() == 0) throw DomainError("majority vote over an empty stream");
  std::uint32_t candidate = 0;
  std::uint64_t count = 0;
  for (std::uint32_t e : s.elements) {
    if (count == 0) {
      candidate = e;
      count = 1;
    } else if (e == candidate) {
      ++count;
    } else {
      --count;
    }
  }
  return candidate;
}

std::uint64_t count_symbol(const Stream& s, std::uint32_t x) {
  std::uint64_t c = 0;
  for (std::uint32_t e : s.elements)
    if (e == x) ++c;
  return c;
}

MajorityReport detect_majority(const Stream& s) {
  MajorityReport r;
  r.candidate = boyer_moore_candidate(s);
  r.count = count_symbol(s, r.candidate);
  r.is_majority = 2 * r.count > s.size();
  return r;
}

Stream generate_stream(StreamKind kind, const GeneratorParams& params,
                       std::uint64_t seed) {
  if (kind == StreamKind::ghd)
    return encode_streams(make_ghd_instance(params.ghd_x, params.ghd_y));

  if (params.m == 0) throw DomainError("generator needs m >= 1");
  if (params.n == 0) throw DomainError("generator needs n >= 1");
  auto rng = make_rng(seed);
  std::vector<std::uint32_t> elements;
  elements.reserve(params.m);

  switch (kind) {
    case StreamKind::uniform: {
      std::uniform_int_distribution<std::uint32_t> pick(1, params.n);
      for (std::uint64_t j = 0; j < params.m; ++j) elements.push_back(pick(rng));
      break;
    }
    case StreamKind::zipf: {
      if (!(params.zipf_exponent > 0.0))
        throw DomainError("zipf exponent must be positive");
      std::vector<double> weights(params.n);
      for (std::uint32_t i = 0; i < params.n; ++i)
        weights[i] = std::pow(static_cast<double>(i) + 1.0, -params.zipf_exponent);
      std::discrete_distribution<std::uint32_t> pick(weights.begin(), weights.end());
      for (std::uint64_t j = 0; j < params.m; ++j)
        elements.push_back(pick(rng) + 1);
      break;
    }
    case StreamKind::majority: {
      if (!(params.majority_fraction > 0.5) || !(params.majority_fraction <= 1.0))
        throw DomainError("majority fraction must lie in (1/2, 1]");
      if (params.n < 2)
        throw DomainError("majority generator needs n >= 2");
      auto count = static_cast<std::uint64_t>(
          std::ceil(params.majority_fraction * static_cast<double>(params.m)));
      count = std::min(count, params.m);
      std::uniform_int_distribution<std::uint32_t> pick_major(1, params.n);
      std::uint32_t major = pick_major(rng);
      elements.assign(count, major);
      // Fill the remainder from the alphabet without the planted symbol so the
      // declared fraction is exact.
      std::uniform_int_distribution<std::uint32_t> pick_rest(1, params.n - 1);
      for (std::uint64_t j = count; j < params.m; ++j) {
        std::uint32_t e = pick_rest(rng);
        if (e >= major) ++e;
        elements.push_back(e);
      }
      std::shuffle(elements.begin(), elements.end(), rng);
      break;
    }
    case StreamKind::ghd:
      break;  // handled above
  }
  return make_stream(std::move(elements), params.n);
}

}  // namespace qse
