#pragma once

#include <stdexcept>
#include <string>

namespace finsg {

  //! Categories of failure raised by the library.
  enum class ErrorKind {
    non_associative,
    out_of_range,
    generators_do_not_generate,
    not_a_square_table,
    size_mismatch,
    bound_exceeded,
    unknown_letter,
    not_idempotent,
    not_completely_simple,
    not_a_group,
    shape_mismatch,
    not_prime,
    partial_map,
    not_monoid_hom,
    not_endomorphism,
    empty_word,
    content_too_small,
    precondition_violated,
    avoid_set_too_large,
    syntax_error,
    unassigned_letter,
    unknown_pseudovariety,
    term_too_short,
    invalid_order,
    invalid_dfa,
    invalid_input,
  };

  char const* to_string(ErrorKind kind) noexcept;

  //! The single exception type thrown by finsg; the kind identifies the
  //! violated precondition, the message carries the witness.
  class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, std::string const& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what),
          _kind(kind) {}

    [[nodiscard]] ErrorKind kind() const noexcept {
      return _kind;
    }

   private:
    ErrorKind _kind;
  };

}  // namespace finsg
