#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

// Finite words over single-character letters, stored as std::string.
namespace finsg {

  //! The letters of w, sorted and without repetitions.
  std::string content(std::string_view w);

  //! Longest prefix (suffix) of w of length at most n.
  std::string i_n(std::string_view w, std::size_t n);
  std::string t_n(std::string_view w, std::size_t n);

  //! The successive factors of length n + 1, left to right. Words of length
  //! at most n encode to the empty sequence.
  std::vector<std::string> debruijn_encode(std::string_view w, std::size_t n);

  //! Consecutive grams overlap as (ax)(xb) and all grams have one length.
  bool is_debruijn_path(std::vector<std::string> const& grams);

  //! Grams joined with '.' (the empty sequence prints as "").
  std::string join_grams(std::vector<std::string> const& grams);

  struct Factorization {
    std::string prefix;
    char        marker;
    std::string remainder;

    bool operator==(Factorization const&) const = default;
  };

  //! w = prefix . marker . remainder with c(w) = c(prefix) + {marker}.
  //! Throws ErrorKind::empty_word.
  Factorization left_basic_factorization(std::string_view w);
  //! w = prefix . marker . remainder with c(w) = c(remainder) + {marker}.
  //! Throws ErrorKind::empty_word.
  Factorization right_basic_factorization(std::string_view w);

  //! (0(w), marker) from the left basic factorization.
  std::pair<std::string, char> zero_funcs(std::string_view w);
  //! (1(w), marker) from the right basic factorization.
  std::pair<std::string, char> one_funcs(std::string_view w);

  struct SubwordOccurrence {
    std::vector<std::size_t> positions;  // 1-based
    std::string              remainder;
  };
  //! The left-greedy occurrence of u as a subword of w.
  std::optional<SubwordOccurrence> greedy_subword(std::string_view w,
                                                  std::string_view u);

  bool is_subword(std::string_view u, std::string_view w);

  //! Number of occurrences of f as a factor of w (overlaps counted).
  std::size_t count_factor(std::string_view w, std::string_view f);

  struct Factor {
    std::string factor;
    std::size_t start, end;  // 1-based, inclusive

    bool operator==(Factor const&) const = default;
  };
  //! Maximal factors whose content misses exactly one letter of c(w).
  //! Throws ErrorKind::content_too_small when |c(w)| < 2.
  std::vector<Factor> characteristic_sequence(std::string_view w);

  //! A word r in {b(ab)^k, b(ab)^k b, b(ab)^k bb}, k = ceil(|s|/2), b the
  //! least letter of the alphabet other than a, such that x r is not in
  //! avoid and s occurs in x r s only as a suffix. Here t_2(s) = aa.
  //!
  //! Throws ErrorKind::precondition_violated or
  //! ErrorKind::avoid_set_too_large.
  std::string stretch_word(std::string_view                x,
                           std::vector<std::string> const& avoid,
                           std::string_view                s,
                           std::string_view                alphabet);

  //! t such that w t is the shortest prefix of w a^|w| w containing aw;
  //! then aw occurs in wt only as a suffix and bw does not occur.
  //! Throws ErrorKind::precondition_violated.
  std::string connect_word(std::string_view w, char a, char b);

}  // namespace finsg
