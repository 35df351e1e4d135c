#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "finsg/semigroup.hpp"

namespace finsg {

  class OrderedSemigroup;

  //! An omega-term: a letter, a flattened concatenation, or a power.
  //!
  //! Letters are strings so that de Bruijn gram letters ("ab") can be used as
  //! variables; parse_term only produces single-character letters. A power is
  //! either a plain positive exponent or omega + k with k >= -1.
  class Term {
   public:
    enum class Kind { letter, concat, power };

    static Term letter(std::string name);
    //! Flattens nested concatenations and drops empty parts; a single part is
    //! returned as is. An empty list gives the empty term.
    static Term concat(std::vector<Term> parts);
    //! Throws ErrorKind::invalid_input for exponent < 1.
    static Term power(Term base, long exponent);
    //! base^(omega + k). Throws ErrorKind::invalid_input for k < -1.
    static Term omega(Term base, long k = 0);
    //! The empty term: concat of no parts. Only produced as an intermediate.
    static Term empty();

    [[nodiscard]] Kind kind() const noexcept {
      return _kind;
    }
    [[nodiscard]] bool is_empty() const noexcept {
      return _kind == Kind::concat && _parts.empty();
    }
    [[nodiscard]] std::string const& name() const noexcept {
      return _name;
    }
    [[nodiscard]] std::vector<Term> const& parts() const noexcept {
      return _parts;
    }
    //! The base of a power.
    [[nodiscard]] Term const& base() const {
      return _parts.front();
    }
    [[nodiscard]] bool is_omega() const noexcept {
      return _omega;
    }
    //! The plain exponent, or k of omega + k.
    [[nodiscard]] long exponent() const noexcept {
      return _exponent;
    }
    //! Letters occurring in the term, sorted.
    [[nodiscard]] std::vector<std::string> variables() const;
    [[nodiscard]] bool has_omega() const;

    bool operator==(Term const&) const = default;

   private:
    Term() = default;

    Kind              _kind = Kind::concat;
    std::string       _name;
    std::vector<Term> _parts;
    bool              _omega    = false;
    long              _exponent = 1;
  };

  //! Grammar: letters [a-z], gram letters "[..]", juxtaposition, parentheses,
  //! suffix ^w, ^(w-1), ^(w+k), ^k with k >= 1. Whitespace is ignored.
  //! Throws ErrorKind::syntax_error with the offending position.
  Term parse_term(std::string_view text);

  //! Inverse of parse_term; multi-character letters print as "[..]".
  std::string to_string(Term const& t);

  using Assignment = std::map<std::string, Element>;

  //! Throws ErrorKind::unassigned_letter.
  Element evaluate(Term const& t, FiniteSemigroup const& S, Assignment const& v);

  struct IdentityResult {
    bool holds = true;
    //! On failure, the first failing assignment in lexicographic order of
    //! the sorted variables, elements in index order.
    std::optional<Assignment> witness;
  };

  //! S satisfies lhs = rhs under every assignment of the variables of either
  //! side. The assignment space is split across jobs threads.
  IdentityResult satisfies_identity(FiniteSemigroup const& S,
                                    Term const&            lhs,
                                    Term const&            rhs,
                                    unsigned               jobs = 1);

  //! eval(lhs) <= eval(rhs) under every assignment.
  IdentityResult satisfies_inequality(OrderedSemigroup const& S,
                                      Term const&             lhs,
                                      Term const&             rhs,
                                      unsigned                jobs = 1);

  //! The term with every omega + k replaced by the plain exponent m + k; an
  //! exponent of 0 gives the empty term.
  Term unfold(Term const& t, long m);
  //! The finite word of a term without omega powers (single-character
  //! letters). Throws ErrorKind::invalid_input otherwise.
  std::string to_word(Term const& t);

  //! Prefix and suffix of length at most n of every sufficiently deep
  //! unfolding. Throws ErrorKind::invalid_input for multi-character letters.
  std::pair<std::string, std::string> term_i_t(Term const& t, std::size_t n);

  //! The de Bruijn encoding as a term over (n+1)-gram letters.
  //! Throws ErrorKind::term_too_short when the unfolded length is at most n.
  Term debruijn_encode_term(Term const& t, std::size_t n);

  struct VDnCheck {
    bool           i_t_equal;
    bool           encoded_identity_holds;
    IdentityResult encoded;
    Term           u_encoded, v_encoded;
  };
  VDnCheck check_VDn(Term const&            u,
                     Term const&            v,
                     std::size_t            n,
                     FiniteSemigroup const& T,
                     unsigned               jobs = 1);

  // Pseudovariety registry

  struct Pseudoidentity {
    Term lhs, rhs;
  };

  struct PseudovarietyBasis {
    std::string                 name;
    std::string                 description;
    std::vector<Pseudoidentity> basis;
  };

  //! Names accepted by pseudovariety_basis besides the parametrized ones
  //! D<n>, K<n>, Ab<n>.
  std::vector<std::string> const& pseudovariety_names();

  //! Throws ErrorKind::unknown_pseudovariety.
  PseudovarietyBasis pseudovariety_basis(std::string const& name);

  struct MembershipResult {
    bool                          holds = true;
    std::optional<Pseudoidentity> failed;
    std::optional<Assignment>     witness;
  };

  //! S satisfies every identity of the stored basis. D<n> and K<n> are
  //! checked through the set of n-fold products instead of n + 1 variables.
  MembershipResult pseudovariety_membership(FiniteSemigroup const& S,
                                            std::string const&     name,
                                            unsigned               jobs = 1);

  // Word problem for completely regular semigroups with groups in H

  struct GroupSpec {
    enum class Kind { trivial, abelian_mod_n, all_groups };
    Kind        kind = Kind::trivial;
    std::size_t n    = 0;

    static GroupSpec trivial() {
      return {};
    }
    //! Throws ErrorKind::invalid_input for n < 2.
    static GroupSpec abelian(std::size_t n);
    static GroupSpec all_groups() {
      return {Kind::all_groups, 0};
    }
  };

  struct CrhResult {
    bool equal;
    //! 0 when equal, else the first failing condition: 1 content, 2 the
    //! left basic prefixes, 3 the right basic suffixes, 4 the group part.
    int failed_condition;
  };

  //! Throws ErrorKind::empty_word.
  CrhResult equal_in_CRH(std::string const& u,
                         std::string const& v,
                         GroupSpec          h);

}  // namespace finsg
