#pragma once

#include <cstddef>

#include "finsg/semigroup.hpp"

// Small named semigroups used throughout tests, fixtures and the CLI.
namespace finsg::library {

  FiniteSemigroup trivial();
  //! Z/n under addition, labels "0".."n-1".
  FiniteSemigroup cyclic_group(std::size_t n);
  //! {0,1} under the usual product (min).
  FiniteSemigroup u1();
  //! xy = x on n elements.
  FiniteSemigroup left_zero(std::size_t n);
  //! xy = y on n elements.
  FiniteSemigroup right_zero(std::size_t n);
  //! n-1 nonzero elements whose products all vanish, plus a zero "0".
  //! null_semigroup(2) is N2 = {a, 0}.
  FiniteSemigroup null_semigroup(std::size_t n);
  //! A x B with (a,b)(a',b') = (a,b'); labels "(a,b)".
  FiniteSemigroup rectangular_band(std::size_t a, std::size_t b);
  //! Monogenic semigroup <s | s^(index+period) = s^index>, labels "s^k".
  FiniteSemigroup monogenic(std::size_t index, std::size_t period);
  //! Permutations of {0..n-1}, composed as functions (f*g)(x) = f(g(x)).
  FiniteSemigroup symmetric_group(std::size_t n);
  //! All self-maps of {0..n-1}. With compose_left, f*g = f o g (maps act on
  //! the left); otherwise f*g = g o f (maps act on the right).
  FiniteSemigroup full_transformation_monoid(std::size_t n,
                                             bool        compose_left = true);

}  // namespace finsg::library
