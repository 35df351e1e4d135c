#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "finsg/order.hpp"
#include "finsg/semigroup.hpp"

namespace finsg {

  //! A complete deterministic automaton over single-character letters.
  struct Dfa {
    std::vector<std::string>              states;
    std::vector<char>                     alphabet;
    std::vector<std::vector<std::size_t>> delta;  // delta[q][letter index]
    std::size_t                           initial = 0;
    std::vector<bool>                     accepting;

    //! Throws ErrorKind::invalid_dfa.
    void validate() const;
    //! Throws ErrorKind::unknown_letter.
    [[nodiscard]] std::size_t letter_index(char a) const;
    [[nodiscard]] std::size_t run(std::size_t q, std::string_view w) const;
    [[nodiscard]] bool        accepts(std::string_view w) const;
  };

  //! Builds a DFA from a possibly partial transition list; missing
  //! transitions go to an added sink state "#sink".
  //! Throws ErrorKind::invalid_dfa.
  Dfa make_dfa(std::vector<std::string> states,
               std::vector<char>        alphabet,
               std::vector<std::tuple<std::string, char, std::string>> const&
                                         transitions,
               std::string const&        initial,
               std::vector<std::string> const& accepting);

  //! Reachable part, states merged by Moore refinement; state order by
  //! breadth-first discovery from the initial state.
  Dfa minimize(Dfa const& dfa);

  //! The transformation semigroup of the minimal DFA on nonempty words with
  //! u <= v iff every context accepting v accepts u.
  struct SyntacticSemigroup {
    OrderedSemigroup ordered;
    //! Shortlex least word of every element; generators map letters.
    std::vector<std::string> words;
    Dfa                      minimal;

    //! The element of a nonempty word. Throws ErrorKind::empty_word or
    //! ErrorKind::unknown_letter.
    [[nodiscard]] Element element_of(std::string_view w) const;
  };
  SyntacticSemigroup syntactic_semigroup(Dfa const& dfa);

  //! A DFA for L a.
  Dfa concat_letter(Dfa const& dfa, char a);

}  // namespace finsg
