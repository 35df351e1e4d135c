#pragma once

#include <cstddef>
#include <vector>

#include "finsg/green.hpp"
#include "finsg/semigroup.hpp"

namespace finsg {

  //! A pair of self-maps of a fixed carrier: lambda acts on the left,
  //! rho on the right, written (s)rho = rho[s].
  struct Bitranslation {
    std::vector<Element> lambda, rho;

    auto operator<=>(Bitranslation const&) const = default;
  };

  //! lambda(st) = lambda(s) t for all s, t.
  bool is_left_translation(FiniteSemigroup const& S, std::vector<Element> const& f);
  //! (st)rho = s (t)rho for all s, t.
  bool is_right_translation(FiniteSemigroup const& S,
                            std::vector<Element> const& f);
  //! s lambda(t) = (s)rho t for all s, t.
  bool is_linked(FiniteSemigroup const& S, Bitranslation const& w);

  //! (lambda_s, rho_s) = (u -> su, u -> us).
  Bitranslation inner_bitranslation(FiniteSemigroup const& S, Element s);

  //! The product in the translational hull: (l1 o l2, r2 o r1), so that
  //! s -> inner_bitranslation(S, s) is a homomorphism.
  Bitranslation compose(Bitranslation const& a, Bitranslation const& b);

  //! Every linked pair of a left and a right translation, sorted.
  //! Throws ErrorKind::bound_exceeded when |S| > bound.
  std::vector<Bitranslation> enumerate_hull(FiniteSemigroup const& S,
                                            std::size_t            bound = 8);

  //! The same set for rees_matrix(R), enumerated through the parameters
  //! (phi, mu) on rows and (psi, nu) on columns; no size bound.
  std::vector<Bitranslation> enumerate_hull(ReesMatrixSemigroup const& R);

  //! The monoid of the given bitranslations under compose, elements in the
  //! given order, labelled "w0", "w1", ... Throws ErrorKind::invalid_input
  //! when the set is not closed.
  FiniteSemigroup hull_semigroup(std::vector<Bitranslation> const& hull);

  //! Action of every element of S on the kernel by left and right
  //! multiplication; maps are on positions in `kernel`.
  struct KernelRepresentation {
    std::vector<Element>              kernel;
    std::vector<std::vector<Element>> lambda_of, rho_of;
  };
  KernelRepresentation kernel_representation(FiniteSemigroup const& S);

  struct Classification {
    bool lm, rm, ggm, wggm;
  };
  Classification classify(FiniteSemigroup const& S);

  struct Reductivity {
    bool left_reductive, right_reductive, weakly_reductive;
  };
  Reductivity reductivity(FiniteSemigroup const& S);

  struct TorsionChecks {
    bool has_torsion, full_torsion, plenty_left, plenty_right;
  };
  //! Throws ErrorKind::not_completely_simple.
  TorsionChecks torsion_checks(FiniteSemigroup const& S);

}  // namespace finsg
