#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "finsg/semigroup.hpp"

namespace finsg {

  using Relation = std::vector<std::vector<bool>>;
  using Pair     = std::pair<Element, Element>;

  //! A finite semigroup with a stable partial order.
  class OrderedSemigroup {
   public:
    //! Checks reflexivity, antisymmetry, transitivity and stability.
    //! Throws ErrorKind::invalid_order naming the first violation.
    static OrderedSemigroup validate(FiniteSemigroup S, Relation leq);
    //! The reflexive closure of the given pairs, then validate().
    static OrderedSemigroup from_pairs(FiniteSemigroup        S,
                                       std::span<Pair const> pairs);
    //! The equality order.
    static OrderedSemigroup trivial(FiniteSemigroup S);

    [[nodiscard]] FiniteSemigroup const& semigroup() const noexcept {
      return _S;
    }
    [[nodiscard]] bool leq(Element s, Element t) const {
      return _leq[s][t];
    }
    [[nodiscard]] Relation const& relation() const noexcept {
      return _leq;
    }
    //! The strict pairs s < t in lexicographic order.
    [[nodiscard]] std::vector<Pair> strict_pairs() const;
    [[nodiscard]] bool is_trivial() const;

    bool operator==(OrderedSemigroup const&) const = default;

   private:
    OrderedSemigroup(FiniteSemigroup S, Relation leq)
        : _S(std::move(S)), _leq(std::move(leq)) {}

    FiniteSemigroup _S;
    Relation        _leq;
  };

  //! The first failing law of a relation as a stable partial order, if any.
  std::optional<std::string> order_violation(FiniteSemigroup const& S,
                                             Relation const&        leq);

  struct ClosureResult {
    Relation relation;
    //! The lexicographically least s < t with s <= t and t <= s.
    std::optional<Pair> antisymmetry_violation;
  };

  //! The least reflexive, transitive, stable relation containing the seeds.
  ClosureResult stable_closure(FiniteSemigroup const& S,
                               std::span<Pair const>  seeds);

  struct OrderabilityResult {
    bool orderable = false;
    //! The closure of the first seed pair (lexicographic) that is antisymmetric.
    std::optional<OrderedSemigroup> witness;
  };
  OrderabilityResult is_orderable(FiniteSemigroup const& S, unsigned jobs = 1);

  //! All stable partial orders, stopping after limit results. Without a
  //! limit, throws ErrorKind::bound_exceeded when |S| > bound.
  std::vector<OrderedSemigroup>
  enumerate_stable_orders(FiniteSemigroup const&     S,
                          std::optional<std::size_t> limit = std::nullopt,
                          std::size_t                bound = 6);

  struct UnorderabilityReport {
    bool ggm;
    bool nontrivial;
    bool orderable;
    bool kernel_group_nontrivial;
    //! Not (ggm, nontrivial, nontrivial kernel groups and orderable).
    bool consistent;
  };
  UnorderabilityReport unorderability_report(FiniteSemigroup const& S,
                                             unsigned               jobs = 1);

  //! Reverses every pair.
  OrderedSemigroup order_dual(OrderedSemigroup const& S);

}  // namespace finsg
