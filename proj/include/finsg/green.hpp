#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "finsg/semigroup.hpp"

namespace finsg {

  //! Green's relations of a finite semigroup as class-id maps.
  //!
  //! Class ids are numbered by first appearance in element order. On finite
  //! semigroups D = J, so there is no separate D map.
  struct GreenStructure {
    std::vector<std::size_t> r_class, l_class, j_class, h_class;
    std::size_t              r_count = 0, l_count = 0, j_count = 0, h_count = 0;
    //! j_leq[a][b]: the J-class a lies below (or equals) J-class b.
    std::vector<std::vector<bool>> j_leq;
    std::size_t                    kernel_class = 0;
    //! regular[a]: J-class a contains an idempotent.
    std::vector<bool> regular;

    //! Elements of the given J-class, in element order.
    [[nodiscard]] std::vector<Element> j_members(std::size_t cls) const;
  };

  GreenStructure green_structure(FiniteSemigroup const& S);

  //! The minimum ideal, sorted.
  std::vector<Element> kernel(FiniteSemigroup const& S);

  //! x (yx)^omega = x for all x, y.
  bool is_completely_simple(FiniteSemigroup const& S);

  //! M(A, G, B; P): a_size * |G| * b_size triples, sandwich is B x A.
  struct ReesMatrixSemigroup {
    std::size_t                       a_size = 0;
    std::size_t                       b_size = 0;
    FiniteSemigroup                   group;
    std::vector<std::vector<Element>> sandwich;  // sandwich[b][a]

    //! Index of (a, g, b) in rees_matrix(*this).
    [[nodiscard]] Element index(std::size_t a, Element g, std::size_t b) const {
      return static_cast<Element>((a * group.size() + g) * b_size + b);
    }
  };

  //! Coordinatization of a completely simple semigroup.
  struct ReesCoordinates {
    ReesMatrixSemigroup rees;
    //! to_s[i]: the element of S corresponding to element i of
    //! rees_matrix(rees); a bijection.
    std::vector<Element> to_s;
  };

  //! Throws ErrorKind::not_completely_simple. Picks the idempotent of least
  //! index e; row and column of P through e are the identity of H_e.
  ReesCoordinates rees_coordinatize(FiniteSemigroup const& S);

  //! The H-class of e with the induced product; identity is e.
  //! Throws ErrorKind::not_idempotent.
  FiniteSemigroup maximal_subgroup(FiniteSemigroup const& S, Element e);

  //! For finite groups: all subgroups, each as a sorted element list.
  std::vector<std::vector<Element>> subgroups(FiniteSemigroup const& G);

  struct EquidivisibilityResult {
    bool holds = true;
    //! (s, t, u, v) with st = uv and no suitable w in S^1.
    std::optional<std::array<Element, 4>> counterexample;
  };
  EquidivisibilityResult is_equidivisible(FiniteSemigroup const& S);

  struct CancellationWitness {
    Element s, t;
    char    letter;
  };
  struct LetterCancellation {
    bool                               right = true;
    bool                               left  = true;
    std::optional<CancellationWitness> right_witness, left_witness;
  };
  //! right: sa = ta implies s = t for every generator a; left is dual.
  LetterCancellation letter_cancelative(FiniteSemigroup const& S,
                                        GeneratorMap const&    gens);

}  // namespace finsg
