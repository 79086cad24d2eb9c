#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "qse/error.hpp"
#include "qse/rng.hpp"
#include "qse/stream.hpp"

using namespace qse;

namespace {

Stream mk(std::initializer_list<std::uint32_t> elems) {
  return make_stream(std::vector<std::uint32_t>(elems));
}

// Independent recount used against frequencies(); deliberately a plain loop.
std::uint64_t naive_count(const Stream& s, std::uint32_t x) {
  std::uint64_t c = 0;
  for (auto e : s.elements)
    if (e == x) ++c;
  return c;
}

Stream random_stream(std::mt19937_64& rng, std::uint64_t max_m,
                     std::uint32_t max_n) {
  std::uniform_int_distribution<std::uint64_t> len(1, max_m);
  std::uniform_int_distribution<std::uint32_t> alpha(1, max_n);
  std::uint32_t n = alpha(rng);
  std::uniform_int_distribution<std::uint32_t> sym(1, n);
  std::vector<std::uint32_t> e(len(rng));
  for (auto& v : e) v = sym(rng);
  return make_stream(std::move(e));
}

}  // namespace

TEST_SUITE("stream") {

TEST_CASE("text parsing accepts whitespace-separated decimals") {
  Stream s = parse_stream("1 1 2", StreamFormat::text);
  CHECK(s.elements == std::vector<std::uint32_t>{1, 1, 2});
  CHECK(s.size() == 3);
  CHECK(s.n == 2);

  Stream t = parse_stream("\n  3\t4\n5  ", StreamFormat::text);
  CHECK(t.elements == std::vector<std::uint32_t>{3, 4, 5});
}

TEST_CASE("text header overrides the alphabet bound") {
  Stream s = parse_stream("# m=3 n=7\n1 1 2", StreamFormat::text);
  CHECK(s.n == 7);
  CHECK_THROWS_AS(parse_stream("# m=4 n=7\n1 1 2", StreamFormat::text), ParseError);
  CHECK_THROWS_AS(parse_stream("# m=3 n=1\n1 1 2", StreamFormat::text), ParseError);
  CHECK_THROWS_AS(parse_stream("# m=3\n1 1 2", StreamFormat::text), ParseError);
}

TEST_CASE("malformed tokens report their 1-based index") {
  CHECK_THROWS_AS(parse_stream("", StreamFormat::text), ParseError);
  CHECK_THROWS_AS(parse_stream("   \n ", StreamFormat::text), ParseError);
  try {
    parse_stream("1 x 2", StreamFormat::text);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.token_index() == 2);
  }
  try {
    parse_stream("0 1", StreamFormat::text);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.token_index() == 1);
  }
  CHECK_THROWS_AS(parse_stream("-3 1", StreamFormat::text), ParseError);
}

TEST_CASE("bare little-endian words decode as a headerless binary stream") {
  const char bytes[] = {1, 0, 0, 0, 5, 0, 0, 0};
  Stream s = parse_stream(std::string_view(bytes, 8), StreamFormat::binary);
  CHECK(s.elements == std::vector<std::uint32_t>{1, 5});
  CHECK(s.size() == 2);
}

TEST_CASE("binary format round-trips through the magic header") {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 50; ++it) {
    Stream s = random_stream(rng, 200, 1000);
    std::string bytes = format_stream(s, StreamFormat::binary);
    CHECK(bytes.substr(0, 4) == "QSE1");
    Stream back = parse_stream(bytes, StreamFormat::binary);
    CHECK(back.elements == s.elements);
    CHECK(back.n == s.n);
  }
}

TEST_CASE("text format round-trips") {
  std::mt19937_64 rng(8);
  for (int it = 0; it < 50; ++it) {
    Stream s = random_stream(rng, 200, 1000);
    Stream back = parse_stream(format_stream(s, StreamFormat::text),
                               StreamFormat::text);
    CHECK(back.elements == s.elements);
    CHECK(back.n == s.n);
  }
}

TEST_CASE("binary rejects truncated and mismatched bodies") {
  std::string good = format_stream(mk({1, 2, 3}), StreamFormat::binary);
  CHECK_THROWS_AS(parse_stream(good.substr(0, 10), StreamFormat::binary), ParseError);
  CHECK_THROWS_AS(parse_stream(good + "XX", StreamFormat::binary), ParseError);
  CHECK_THROWS_AS(parse_stream(std::string_view("\x00\x00\x00\x00", 4),
                               StreamFormat::binary),
                  ParseError);
}

TEST_CASE("frequencies recounts every symbol exactly") {
  auto d = frequencies(mk({1, 1, 2}));
  CHECK(d.m == 3);
  CHECK(d.counts.at(1) == 2);
  CHECK(d.counts.at(2) == 1);
  CHECK(d.probability(1) == doctest::Approx(2.0 / 3).epsilon(1e-15));
  CHECK(d.probability(9) == 0.0);

  auto single = frequencies(mk({7}));
  CHECK(single.counts.size() == 1);
  CHECK(single.counts.at(7) == 1);

  std::mt19937_64 rng(9);
  for (int it = 0; it < 100; ++it) {
    Stream s = random_stream(rng, 300, 20);
    auto f = frequencies(s);
    std::uint64_t total = 0;
    for (const auto& [sym, c] : f.counts) {
      CHECK(c == naive_count(s, sym));
      total += c;
    }
    CHECK(total == s.size());
  }
}

TEST_CASE("entropy of a single-symbol stream is exactly zero") {
  CHECK(exact_entropy(mk({4, 4, 4, 4})) == 0.0);
  CHECK(exact_entropy(mk({1})) == 0.0);
}

TEST_CASE("entropy of m distinct symbols is log2 m") {
  CHECK(exact_entropy(mk({1, 2, 3, 4})) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(exact_entropy(mk({3, 1, 4, 2, 8, 6, 7, 5})) ==
        doctest::Approx(3.0).epsilon(1e-15));
}

TEST_CASE("entropy of counts {2,1}") {
  // (2/3)log2(3/2) + (1/3)log2(3), evaluated independently here.
  double expected = (2.0 / 3) * std::log2(1.5) + (1.0 / 3) * std::log2(3.0);
  CHECK(expected == doctest::Approx(0.9182958340544896).epsilon(1e-15));
  CHECK(exact_entropy(mk({1, 1, 2})) == doctest::Approx(expected).epsilon(1e-15));
}

TEST_CASE("entropy is permutation invariant") {
  std::mt19937_64 rng(10);
  for (int it = 0; it < 50; ++it) {
    Stream s = random_stream(rng, 500, 30);
    double h = exact_entropy(s);
    Stream shuffled = s;
    std::shuffle(shuffled.elements.begin(), shuffled.elements.end(), rng);
    CHECK(exact_entropy(shuffled) == h);  // same counts, bit-identical sum
  }
}

TEST_CASE("majority vote returns any true majority") {
  CHECK(boyer_moore_candidate(mk({5, 7, 5})) == 5);
  CHECK(boyer_moore_candidate(mk({9})) == 9);
  // Without a majority the vote may return anything; this input settles on 3.
  CHECK(boyer_moore_candidate(mk({1, 2, 3})) == 3);

  std::mt19937_64 rng(11);
  for (int it = 0; it < 500; ++it) {
    Stream s = random_stream(rng, 400, 3);
    std::uint32_t best = 0;
    std::uint64_t best_count = 0;
    for (std::uint32_t sym = 1; sym <= s.n; ++sym) {
      std::uint64_t c = naive_count(s, sym);
      if (c > best_count) {
        best = sym;
        best_count = c;
      }
    }
    if (2 * best_count > s.size())
      CHECK(boyer_moore_candidate(s) == best);
  }
}

TEST_CASE("majority detection pairs the vote with an exact count") {
  auto r = detect_majority(mk({5, 5, 5, 7}));
  CHECK(r.candidate == 5);
  CHECK(r.count == 3);
  CHECK(r.is_majority);

  auto r2 = detect_majority(mk({1, 2, 1, 2}));
  CHECK(r2.count == naive_count(mk({1, 2, 1, 2}), r2.candidate));
  CHECK_FALSE(r2.is_majority);

  CHECK(count_symbol(mk({5, 7, 5}), 5) == 2);
  CHECK(count_symbol(mk({5, 7, 5}), 6) == 0);
}

TEST_CASE("generator is deterministic per seed") {
  GeneratorParams p;
  p.m = 8;
  p.n = 4;
  Stream a = generate_stream(StreamKind::uniform, p, 7);
  Stream b = generate_stream(StreamKind::uniform, p, 7);
  CHECK(a.elements == b.elements);
  Stream c = generate_stream(StreamKind::uniform, p, 8);
  CHECK(a.elements != c.elements);  // overwhelmingly likely, fixed seeds
}

TEST_CASE("majority generator plants an exact fraction") {
  GeneratorParams p;
  p.m = 4;
  p.n = 4;
  p.majority_fraction = 0.75;
  Stream s = generate_stream(StreamKind::majority, p, 1);
  auto r = detect_majority(s);
  CHECK(r.count == 3);
  CHECK(r.is_majority);

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    p.m = 101;
    p.majority_fraction = 0.6;
    auto rep = detect_majority(generate_stream(StreamKind::majority, p, seed));
    CHECK(rep.count == 61);  // ceil(0.6 * 101)
  }
}

TEST_CASE("generator rejects out-of-domain parameters") {
  GeneratorParams p;
  p.m = 4;
  p.n = 4;
  p.majority_fraction = 0.5;
  CHECK_THROWS_AS(generate_stream(StreamKind::majority, p, 1), DomainError);
  p.majority_fraction = 0.75;
  p.zipf_exponent = 0.0;
  CHECK_THROWS_AS(generate_stream(StreamKind::zipf, p, 1), DomainError);
  p.m = 0;
  CHECK_THROWS_AS(generate_stream(StreamKind::uniform, p, 1), DomainError);
}

TEST_CASE("two-party encoding via the generator") {
  GeneratorParams p;
  p.ghd_x = "00";
  p.ghd_y = "01";
  Stream s = generate_stream(StreamKind::ghd, p, 0);
  CHECK(s.elements == std::vector<std::uint32_t>{1, 2, 1, 4});
  CHECK(s.n == 4);
}

TEST_CASE("construction validates the element range") {
  CHECK_THROWS_AS(make_stream({}), DomainError);
  CHECK_THROWS_AS(make_stream({1, 0, 2}), DomainError);
  CHECK_THROWS_AS(make_stream({1, 5}, 4), DomainError);
  Stream s = mk({2, 2});
  CHECK(s.at(1) == 2);
  CHECK_THROWS_AS(s.at(0), DomainError);
  CHECK_THROWS_AS(s.at(3), DomainError);
}

}  // TEST_SUITE
