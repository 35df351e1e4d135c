#include "finsg/words.hpp"

#include <algorithm>

#include "finsg/error.hpp"

namespace finsg {

  std::string content(std::string_view w) {
    std::string c(w);
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    return c;
  }

  std::string i_n(std::string_view w, std::size_t n) {
    return std::string(w.substr(0, std::min(n, w.size())));
  }

  std::string t_n(std::string_view w, std::size_t n) {
    return std::string(w.substr(w.size() - std::min(n, w.size())));
  }

  std::vector<std::string> debruijn_encode(std::string_view w, std::size_t n) {
    std::vector<std::string> grams;
    for (std::size_t i = 0; i + n < w.size(); ++i) {
      grams.emplace_back(w.substr(i, n + 1));
    }
    return grams;
  }

  bool is_debruijn_path(std::vector<std::string> const& grams) {
    for (std::size_t i = 0; i + 1 < grams.size(); ++i) {
      auto const& g = grams[i];
      auto const& h = grams[i + 1];
      if (g.empty() || g.size() != h.size()
          || g.compare(1, g.size() - 1, h, 0, h.size() - 1) != 0) {
        return false;
      }
    }
    return true;
  }

  std::string join_grams(std::vector<std::string> const& grams) {
    std::string out;
    for (std::size_t i = 0; i < grams.size(); ++i) {
      out += (i ? "." : "") + grams[i];
    }
    return out;
  }

  Factorization left_basic_factorization(std::string_view w) {
    if (w.empty()) {
      throw Error(ErrorKind::empty_word, "basic factorization of the empty word");
    }
    std::size_t latest = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w.substr(0, i).find(w[i]) == std::string_view::npos) {
        latest = i;
      }
    }
    return {std::string(w.substr(0, latest)), w[latest],
            std::string(w.substr(latest + 1))};
  }

  Factorization right_basic_factorization(std::string_view w) {
    std::string r(w.rbegin(), w.rend());
    auto        f = left_basic_factorization(r);
    return {std::string(f.remainder.rbegin(), f.remainder.rend()), f.marker,
            std::string(f.prefix.rbegin(), f.prefix.rend())};
  }

  std::pair<std::string, char> zero_funcs(std::string_view w) {
    auto f = left_basic_factorization(w);
    return {std::move(f.prefix), f.marker};
  }

  std::pair<std::string, char> one_funcs(std::string_view w) {
    auto f = right_basic_factorization(w);
    return {std::move(f.remainder), f.marker};
  }

  std::optional<SubwordOccurrence> greedy_subword(std::string_view w,
                                                  std::string_view u) {
    SubwordOccurrence occ;
    std::size_t       pos = 0;
    for (char c : u) {
      auto const k = w.find(c, pos);
      if (k == std::string_view::npos) {
        return std::nullopt;
      }
      occ.positions.push_back(k + 1);
      pos = k + 1;
    }
    occ.remainder = std::string(w.substr(pos));
    return occ;
  }

  bool is_subword(std::string_view u, std::string_view w) {
    std::size_t i = 0;
    for (char c : w) {
      if (i < u.size() && u[i] == c) {
        ++i;
      }
    }
    return i == u.size();
  }

  std::size_t count_factor(std::string_view w, std::string_view f) {
    std::size_t count = 0;
    for (auto k = w.find(f); k != std::string_view::npos; k = w.find(f, k + 1)) {
      ++count;
    }
    return count;
  }

  std::vector<Factor> characteristic_sequence(std::string_view w) {
    std::size_t const k = content(w).size();
    if (k < 2) {
      throw Error(ErrorKind::content_too_small,
                  "characteristic sequence needs at least two letters");
    }
    // for each start, the longest factor missing exactly one letter
    std::vector<std::pair<std::size_t, std::size_t>> spans;
    for (std::size_t i = 0; i < w.size(); ++i) {
      std::string seen;
      std::size_t end = i;
      bool        any = false;
      for (std::size_t j = i; j < w.size(); ++j) {
        if (seen.find(w[j]) == std::string::npos) {
          seen += w[j];
        }
        if (seen.size() == k) {
          break;
        }
        if (seen.size() == k - 1) {
          end = j;
          any = true;
        }
      }
      if (any) {
        spans.emplace_back(i, end);
      }
    }
    std::vector<Factor> out;
    for (auto [i, j] : spans) {
      bool const contained
          = std::any_of(spans.begin(), spans.end(), [&](auto const& o) {
              return o != std::make_pair(i, j) && o.first <= i && j <= o.second;
            });
      if (!contained) {
        out.push_back({std::string(w.substr(i, j - i + 1)), i + 1, j + 1});
      }
    }
    return out;
  }

  std::string stretch_word(std::string_view                x,
                           std::vector<std::string> const& avoid,
                           std::string_view                s,
                           std::string_view                alphabet) {
    if (s.size() < 2 || s[s.size() - 1] != s[s.size() - 2]) {
      throw Error(ErrorKind::precondition_violated,
                  "the last two letters of s must be equal");
    }
    char const a = s.back();
    if (x.find(s) != std::string_view::npos) {
      throw Error(ErrorKind::precondition_violated, "s is a factor of x");
    }
    auto const b_pos = std::find_if(alphabet.begin(), alphabet.end(),
                                    [a](char c) { return c != a; });
    if (b_pos == alphabet.end()) {
      throw Error(ErrorKind::precondition_violated,
                  "the alphabet needs a letter other than the tail of s");
    }
    char const        b = *b_pos;
    std::size_t const k = (s.size() + 1) / 2;
    std::string       base(1, b);
    for (std::size_t i = 0; i < k; ++i) {
      base += a;
      base += b;
    }
    bool all_avoided = true;
    for (std::string const& r : {base, base + b, base + b + b}) {
      std::string const xr(std::string(x) + r);
      if (std::find(avoid.begin(), avoid.end(), xr) != avoid.end()) {
        continue;
      }
      all_avoided = false;
      if (count_factor(xr + std::string(s), s) == 1) {
        return r;
      }
    }
    if (all_avoided) {
      throw Error(ErrorKind::avoid_set_too_large,
                  "every candidate is in the avoided set");
    }
    throw Error(ErrorKind::precondition_violated,
                "no candidate keeps s a unique suffix");
  }

  std::string connect_word(std::string_view w, char a, char b) {
    if (a == b) {
      throw Error(ErrorKind::precondition_violated, "a and b must differ");
    }
    std::string const aw = a + std::string(w);
    std::string const bw = b + std::string(w);
    std::string       t;
    if (w.empty()) {
      t = std::string(1, a);
    } else {
      std::string const z = std::string(w) + std::string(w.size(), a)
                            + std::string(w);
      auto const k = z.find(aw);
      t = z.substr(w.size(), k + aw.size() - w.size());
    }
    std::string const wt = std::string(w) + t;
    if (count_factor(wt, aw) != 1 || wt.rfind(aw) != wt.size() - aw.size()
        || wt.find(bw) != std::string::npos) {
      throw Error(ErrorKind::precondition_violated,
                  "connecting word fails its postcondition");
    }
    return t;
  }

}  // namespace finsg
