#pragma once

// Brute-force reference implementations shared by the test binaries. They
// deliberately avoid the library algorithms they are compared against.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "finsg/constructions.hpp"
#include "finsg/library.hpp"
#include "finsg/semigroup.hpp"

namespace oracle {

  using finsg::Element;
  using finsg::FiniteSemigroup;
  using Table = std::vector<std::vector<Element>>;

  inline std::mt19937_64 rng(std::uint64_t seed) {
    return std::mt19937_64(seed);
  }

  inline std::size_t uniform(std::mt19937_64& g, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(g);
  }

  inline std::string random_word(std::mt19937_64& g,
                                 std::size_t      len,
                                 std::size_t      letters) {
    std::string w;
    for (std::size_t i = 0; i < len; ++i) {
      w += static_cast<char>('a' + uniform(g, 0, letters - 1));
    }
    return w;
  }

  //! All words of length exactly len over the first k letters.
  inline std::vector<std::string> words_of_length(std::size_t len, std::size_t k) {
    std::vector<std::string> out{""};
    for (std::size_t i = 0; i < len; ++i) {
      std::vector<std::string> next;
      for (auto const& w : out) {
        for (std::size_t a = 0; a < k; ++a) {
          next.push_back(w + static_cast<char>('a' + a));
        }
      }
      out = std::move(next);
    }
    return out;
  }

  inline bool associative(Table const& t) {
    std::size_t const n = t.size();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          if (t[t[i][j]][k] != t[i][t[j][k]]) {
            return false;
          }
        }
      }
    }
    return true;
  }

  //! s^k by repeated multiplication.
  inline Element naive_power(FiniteSemigroup const& S, Element s, std::size_t k) {
    Element x = s;
    for (std::size_t i = 1; i < k; ++i) {
      x = S.product(x, s);
    }
    return x;
  }

  //! The idempotent among s, s^2, ..., s^n.
  inline Element naive_omega(FiniteSemigroup const& S, Element s) {
    for (std::size_t k = 1;; ++k) {
      Element const x = naive_power(S, s, k);
      if (S.product(x, x) == x) {
        return x;
      }
    }
  }

  //! Isomorphism by trying every permutation (small sizes only).
  inline bool isomorphic(FiniteSemigroup const& S, FiniteSemigroup const& T) {
    if (S.size() != T.size()) {
      return false;
    }
    std::vector<Element> perm(S.size());
    std::iota(perm.begin(), perm.end(), 0);
    do {
      bool ok = true;
      for (Element x = 0; ok && x < S.size(); ++x) {
        for (Element y = 0; ok && y < S.size(); ++y) {
          ok = perm[S.product(x, y)] == T.product(perm[x], perm[y]);
        }
      }
      if (ok) {
        return true;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
  }

  //! Whether f is a table-preserving bijection.
  inline bool is_isomorphism(FiniteSemigroup const&      S,
                             FiniteSemigroup const&      T,
                             std::vector<Element> const& f) {
    if (f.size() != S.size() || S.size() != T.size()) {
      return false;
    }
    std::set<Element> image(f.begin(), f.end());
    if (image.size() != f.size()) {
      return false;
    }
    for (Element x = 0; x < S.size(); ++x) {
      for (Element y = 0; y < S.size(); ++y) {
        if (f[S.product(x, y)] != T.product(f[x], f[y])) {
          return false;
        }
      }
    }
    return true;
  }

  //! Successive factors of length n + 1 by direct slicing.
  inline std::vector<std::string> grams(std::string const& w, std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i + n + 1 <= w.size(); ++i) {
      out.push_back(w.substr(i, n + 1));
    }
    return out;
  }

  inline std::vector<std::string> cat(std::vector<std::string> a,
                                      std::vector<std::string> const& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  }

  //! U1, LZ2, RZ2 and their pairwise products.
  inline std::vector<FiniteSemigroup> band_models() {
    using namespace finsg::library;
    std::vector<FiniteSemigroup> basic{u1(), left_zero(2), right_zero(2)};
    std::vector<FiniteSemigroup> out = basic;
    for (auto const& A : basic) {
      for (auto const& B : basic) {
        out.push_back(finsg::direct_product(A, B));
      }
    }
    return out;
  }

  //! Evaluation of a word under a letter -> element map given as a vector
  //! indexed by letter - 'a'.
  inline Element eval_word(FiniteSemigroup const&      S,
                           std::vector<Element> const& images,
                           std::string const&          w) {
    Element x = images[static_cast<std::size_t>(w[0] - 'a')];
    for (std::size_t i = 1; i < w.size(); ++i) {
      x = S.product(x, images[static_cast<std::size_t>(w[i] - 'a')]);
    }
    return x;
  }

  //! Every map from k letters into S.
  inline std::vector<std::vector<Element>> assignments(std::size_t n, std::size_t k) {
    std::vector<std::vector<Element>> out{{}};
    for (std::size_t i = 0; i < k; ++i) {
      std::vector<std::vector<Element>> next;
      for (auto const& a : out) {
        for (Element x = 0; x < n; ++x) {
          auto b = a;
          b.push_back(x);
          next.push_back(std::move(b));
        }
      }
      out = std::move(next);
    }
    return out;
  }

  //! Whether u and v take the same value in S under every assignment.
  inline bool same_everywhere(FiniteSemigroup const& S,
                              std::string const&     u,
                              std::string const&     v,
                              std::size_t            letters) {
    for (auto const& a : assignments(S.size(), letters)) {
      if (eval_word(S, a, u) != eval_word(S, a, v)) {
        return false;
      }
    }
    return true;
  }

  //! A random sandwich matrix B x A over a group of order g.
  inline Table random_sandwich(std::mt19937_64& r,
                               std::size_t      a,
                               std::size_t      b,
                               std::size_t      g) {
    Table P(b, std::vector<Element>(a));
    for (auto& row : P) {
      for (auto& x : row) {
        x = static_cast<Element>(uniform(r, 0, g - 1));
      }
    }
    return P;
  }

}  // namespace oracle
