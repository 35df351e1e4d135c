#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "finsg/green.hpp"
#include "finsg/semigroup.hpp"

namespace finsg {

  //! The triples of R under (a,g,b)(a',g',b') = (a, g P(b,a') g', b'),
  //! element order as in ReesMatrixSemigroup::index, labels "(a,g,b)" with
  //! the group label in the middle.
  //!
  //! Throws ErrorKind::not_a_group or ErrorKind::shape_mismatch.
  FiniteSemigroup rees_matrix(ReesMatrixSemigroup const& R);

  ReesMatrixSemigroup make_rees(std::size_t                       a_size,
                                FiniteSemigroup                   group,
                                std::size_t                       b_size,
                                std::vector<std::vector<Element>> sandwich);

  bool is_prime(std::size_t p) noexcept;

  //! M({0,1}, Z/p, {0,1}; [[0,0],[0,1]]). Throws ErrorKind::not_prime.
  ReesMatrixSemigroup k_p_rees(std::size_t p);
  FiniteSemigroup     k_p(std::size_t p);

  //! M(S, T, f) = S + S1 x T1 x S1.
  //!
  //! Elements 0..|S|-1 are the copy of S (labels "S:x"); the triple
  //! (s1, t, s2) over S1 x T1 x S1 follows at triple_index.
  struct SynthesisSemigroup {
    FiniteSemigroup      s_part, t_part;
    FiniteSemigroup      s_one, t_one;  // adjoin_identity of each part
    std::vector<Element> f;             // indexed by s_one, values in t_one
    FiniteSemigroup      carrier;

    [[nodiscard]] Element s_index(Element s) const noexcept {
      return s;
    }
    [[nodiscard]] Element triple_index(Element s1, Element t, Element s2) const
        noexcept {
      return static_cast<Element>(
          s_part.size() + (s1 * t_one.size() + t) * s_one.size() + s2);
    }
  };

  //! f maps every element of S1 to an element of T1 (indices of
  //! adjoin_identity(S), adjoin_identity(T)). Throws ErrorKind::partial_map.
  SynthesisSemigroup synthesis(FiniteSemigroup const&      S,
                               FiniteSemigroup const&      T,
                               std::vector<Element> const& f);

  //! A copy of K_p with an identity, cut out of a synthesis semigroup.
  //! Throws ErrorKind::not_prime.
  FiniteSemigroup bullet_gadget(std::size_t p);

  //! S x T with (s1,t1)(s2,t2) = (s1 * act_t1(s2), t1 t2), element (s,t) at
  //! s * |T| + t. action[t] is the endomorphism of S for t in T; when T has
  //! no identity, the adjoined one acts trivially.
  //!
  //! Throws ErrorKind::not_endomorphism, ErrorKind::not_monoid_hom, or
  //! ErrorKind::shape_mismatch.
  FiniteSemigroup
  semidirect_product(FiniteSemigroup const&                   S,
                     FiniteSemigroup const&                   T,
                     std::vector<std::vector<Element>> const& action);

}  // namespace finsg
