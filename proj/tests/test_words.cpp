#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "finsg/words.hpp"

#include "support.hpp"

using namespace finsg;

namespace {

  std::set<char> letters(std::string const& w) {
    return {w.begin(), w.end()};
  }

  // Left basic factorization by trying every split point.
  Factorization brute_lbf(std::string const& w) {
    auto const c = letters(w);
    for (std::size_t i = 0; i < w.size(); ++i) {
      auto const pre = w.substr(0, i);
      auto       cp  = letters(pre);
      if (cp.size() + 1 == c.size() && cp.count(w[i]) == 0) {
        return {pre, w[i], w.substr(i + 1)};
      }
    }
    return {"", 0, ""};
  }

  std::vector<Factor> brute_chi(std::string const& w) {
    std::size_t const   k = letters(w).size();
    std::vector<Factor> all;
    for (std::size_t i = 0; i < w.size(); ++i) {
      for (std::size_t j = i; j < w.size(); ++j) {
        auto const f = w.substr(i, j - i + 1);
        if (letters(f).size() == k - 1) {
          all.push_back({f, i + 1, j + 1});
        }
      }
    }
    std::vector<Factor> out;
    for (auto const& f : all) {
      bool maximal = true;
      for (auto const& g : all) {
        if ((g.start <= f.start && f.end <= g.end) && !(g == f)) {
          maximal = false;
        }
      }
      if (maximal) {
        out.push_back(f);
      }
    }
    std::sort(out.begin(), out.end(),
              [](Factor const& a, Factor const& b) { return a.start < b.start; });
    return out;
  }

  std::size_t occurrences(std::string const& w, std::string const& f) {
    std::size_t n = 0;
    for (std::size_t i = 0; i + f.size() <= w.size(); ++i) {
      n += w.compare(i, f.size(), f) == 0 ? 1 : 0;
    }
    return n;
  }

  bool ends_with(std::string const& w, std::string const& s) {
    return w.size() >= s.size() && w.compare(w.size() - s.size(), s.size(), s) == 0;
  }

}  // namespace

TEST_CASE("prefixes, suffixes and content") {
  CHECK(t_n("abcab", 2) == "ab");
  CHECK(i_n("abcab", 2) == "ab");
  CHECK(t_n("ab", 5) == "ab");
  CHECK(content("aba") == "ab");
  CHECK(content("") == "");
  auto r = oracle::rng(1);
  for (int i = 0; i < 500; ++i) {
    auto const w = oracle::random_word(r, oracle::uniform(r, 0, 8), 3);
    auto const n = oracle::uniform(r, 0, 10);
    CHECK(t_n(w, n).size() == std::min(n, w.size()));
    CHECK(ends_with(w, t_n(w, n)));
    CHECK(w.rfind(i_n(w, n), 0) == 0);
  }
}

TEST_CASE("de Bruijn encoding") {
  CHECK(debruijn_encode("aba", 1) == std::vector<std::string>{"ab", "ba"});
  CHECK(debruijn_encode("ab", 2).empty());
  CHECK(debruijn_encode("abc", 0) == std::vector<std::string>{"a", "b", "c"});
  CHECK(join_grams(debruijn_encode("aba", 1)) == "ab.ba");
  CHECK(join_grams({}) == "");
  CHECK(is_debruijn_path(debruijn_encode("aabab", 2)));
  CHECK_FALSE(is_debruijn_path({"ab", "ab"}));

  auto r = oracle::rng(2);
  for (int i = 0; i < 2000; ++i) {
    std::size_t const n = oracle::uniform(r, 0, 4);
    std::size_t const k = oracle::uniform(r, 1, 4);
    auto const        u = oracle::random_word(r, oracle::uniform(r, 0, 9), k);
    auto const        v = oracle::random_word(r, oracle::uniform(r, 0, 9), k);
    CHECK(debruijn_encode(u + v, n) == oracle::grams(u + v, n));
    CHECK(debruijn_encode(u + v, n)
          == oracle::cat(debruijn_encode(u, n), debruijn_encode(t_n(u, n) + v, n)));
    CHECK(oracle::cat(debruijn_encode(u, n), debruijn_encode(t_n(u, n) + v, n))
          == oracle::cat(debruijn_encode(u + i_n(v, n), n), debruijn_encode(v, n)));
  }
}

TEST_CASE("de Bruijn encoding is injective above length n") {
  for (std::size_t n = 1; n <= 3; ++n) {
    std::set<std::vector<std::string>> seen;
    std::size_t                        count = 0;
    for (std::size_t len = n + 1; len <= 8; ++len) {
      for (auto const& w : oracle::words_of_length(len, 2)) {
        seen.insert(debruijn_encode(w, n));
        ++count;
      }
    }
    CHECK(seen.size() == count);
  }
}

TEST_CASE("basic factorizations") {
  CHECK(left_basic_factorization("aabac") == Factorization{"aaba", 'c', ""});
  CHECK(left_basic_factorization("acaba") == Factorization{"aca", 'b', "a"});
  CHECK(right_basic_factorization("acaba") == Factorization{"a", 'c', "aba"});
  CHECK(zero_funcs("acaba") == std::pair<std::string, char>{"aca", 'b'});
  CHECK(one_funcs("acaba") == std::pair<std::string, char>{"aba", 'c'});
  CHECK_THROWS_AS((void) left_basic_factorization(""), Error);
  CHECK_THROWS_AS((void) zero_funcs(""), Error);

  // Iterating 0 lists first occurrences right to left: acaba -> b, c, a.
  std::string w = "acaba", order;
  while (!w.empty()) {
    auto const [pre, marker] = zero_funcs(w);
    order.insert(order.begin(), marker);
    w = pre;
  }
  CHECK(order == "acb");

  auto r = oracle::rng(3);
  for (int i = 0; i < 1000; ++i) {
    auto const x = oracle::random_word(r, oracle::uniform(r, 1, 9), 4);
    auto const f = left_basic_factorization(x);
    CHECK(f.prefix + f.marker + f.remainder == x);
    CHECK(f == brute_lbf(x));
    auto const g  = right_basic_factorization(x);
    auto       xr = x;
    std::reverse(xr.begin(), xr.end());
    auto b = brute_lbf(xr);
    std::reverse(b.prefix.begin(), b.prefix.end());
    std::reverse(b.remainder.begin(), b.remainder.end());
    CHECK(g == Factorization{b.remainder, b.marker, b.prefix});
    CHECK(content(g.remainder).size() + 1 == content(x).size());
  }
}

TEST_CASE("subwords") {
  auto const o = greedy_subword("aabb", "ab");
  REQUIRE(o.has_value());
  CHECK(o->positions == std::vector<std::size_t>{1, 3});
  CHECK(o->remainder == "b");
  CHECK_FALSE(greedy_subword("aabb", "ba").has_value());
  auto const p = greedy_subword("ab", "ab");
  REQUIRE(p.has_value());
  CHECK(p->positions == std::vector<std::size_t>{1, 2});
  CHECK(p->remainder == "");

  CHECK(is_subword("ab", "axb"));
  CHECK_FALSE(is_subword("ba", "aab"));
  CHECK(is_subword("", "abc"));

  auto r = oracle::rng(4);
  for (int i = 0; i < 1000; ++i) {
    auto const w = oracle::random_word(r, oracle::uniform(r, 0, 9), 3);
    auto const u = oracle::random_word(r, oracle::uniform(r, 1, 4), 3);
    // Oracle: try every subset of positions of the right size.
    bool sub = false;
    for (std::size_t mask = 0; !sub && mask < (std::size_t{1} << w.size()); ++mask) {
      std::string pick;
      for (std::size_t j = 0; j < w.size(); ++j) {
        if (mask >> j & 1) {
          pick += w[j];
        }
      }
      sub = pick == u;
    }
    CHECK(is_subword(u, w) == sub);
    auto const g = greedy_subword(w, u);
    CHECK(g.has_value() == sub);
    if (g) {
      std::string got;
      for (auto pos : g->positions) {
        got += w[pos - 1];
      }
      CHECK(got == u);
      CHECK(g->remainder == w.substr(g->positions.back()));
    }
  }
  CHECK(count_factor("aaaa", "aa") == 3);
}

TEST_CASE("characteristic sequence") {
  CHECK(characteristic_sequence("ab")
        == std::vector<Factor>{{"a", 1, 1}, {"b", 2, 2}});
  CHECK(characteristic_sequence("aabba")
        == std::vector<Factor>{{"aa", 1, 2}, {"bb", 3, 4}, {"a", 5, 5}});
  CHECK(characteristic_sequence("abcab")
        == std::vector<Factor>{{"ab", 1, 2}, {"bc", 2, 3}, {"ca", 3, 4}, {"ab", 4, 5}});
  CHECK_THROWS_AS((void) characteristic_sequence("aaa"), Error);

  auto r = oracle::rng(5);
  for (int i = 0; i < 500; ++i) {
    auto const w = oracle::random_word(r, oracle::uniform(r, 2, 10), 3);
    if (content(w).size() < 2) {
      continue;
    }
    auto const chi = characteristic_sequence(w);
    CHECK(chi == brute_chi(w));
    std::vector<bool> covered(w.size() + 1, false);
    for (std::size_t j = 0; j < chi.size(); ++j) {
      CHECK(content(chi[j].factor).size() + 1 == content(w).size());
      for (std::size_t p = chi[j].start; p <= chi[j].end; ++p) {
        covered[p] = true;
      }
      if (j > 0) {
        CHECK(chi[j].start <= chi[j - 1].end + 1);
      }
    }
    CHECK(std::all_of(covered.begin() + 1, covered.end(), [](bool b) { return b; }));
  }
}

TEST_CASE("stretch word") {
  CHECK(stretch_word("b", {}, "baa", "ab") == "babab");
  CHECK(stretch_word("b", {"bbabab"}, "baa", "ab") == "bababb");
  CHECK_THROWS_AS((void) stretch_word("b", {}, "ba", "ab"), Error);
  CHECK_THROWS_AS((void) stretch_word("baab", {}, "baa", "ab"), Error);

  auto r = oracle::rng(6);
  for (int i = 0; i < 500; ++i) {
    std::size_t const k     = oracle::uniform(r, 2, 3);
    std::string const alpha = std::string("abc").substr(0, k);
    char const        a     = alpha[oracle::uniform(r, 0, k - 1)];
    auto const s = oracle::random_word(r, oracle::uniform(r, 0, 4), k) + a + a;
    auto const x = oracle::random_word(r, oracle::uniform(r, 0, 6), k);
    if (occurrences(x, s) > 0) {
      continue;
    }
    std::vector<std::string> avoid;
    for (std::size_t j = oracle::uniform(r, 0, 2); j > 0; --j) {
      avoid.push_back(x + oracle::random_word(r, oracle::uniform(r, 1, 8), k));
    }
    auto const rr = stretch_word(x, avoid, s, alpha);
    auto const xr = x + rr;
    CHECK(std::find(avoid.begin(), avoid.end(), xr) == avoid.end());
    CHECK(occurrences(xr + s, s) == 1);
    CHECK(ends_with(xr + s, s));
  }
}

TEST_CASE("connect word") {
  CHECK(connect_word("ab", 'a', 'b') == "aaab");
  CHECK(connect_word("", 'a', 'b') == "a");
  CHECK(connect_word("a", 'a', 'b') == "a");

  auto r = oracle::rng(7);
  for (int i = 0; i < 500; ++i) {
    auto const w  = oracle::random_word(r, oracle::uniform(r, 0, 7), 3);
    char const a  = static_cast<char>('a' + oracle::uniform(r, 0, 2));
    char       b  = static_cast<char>('a' + oracle::uniform(r, 0, 2));
    if (b == a) {
      b = a == 'c' ? 'a' : static_cast<char>(a + 1);
    }
    auto const t  = connect_word(w, a, b);
    auto const wt = w + t;
    CHECK(occurrences(wt, a + w) == 1);
    CHECK(ends_with(wt, a + w));
    CHECK(occurrences(wt, b + w) == 0);
  }
}
