#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "finsg/error.hpp"

namespace finsg {

  //! Index of an element relative to its owning FiniteSemigroup.
  using Element = std::uint32_t;

  //! An ordered alphabet of single-character letters with an element image
  //! for each letter.
  class GeneratorMap {
   public:
    GeneratorMap() = default;
    GeneratorMap(std::vector<char> alphabet, std::vector<Element> images);

    //! Appends a letter, or rebinds it if already present.
    void set(char letter, Element image);

    [[nodiscard]] bool contains(char letter) const noexcept;
    //! Throws ErrorKind::unknown_letter for letters outside the alphabet.
    [[nodiscard]] Element image(char letter) const;

    [[nodiscard]] std::vector<char> const& alphabet() const noexcept {
      return _alphabet;
    }
    [[nodiscard]] std::vector<Element> const& images() const noexcept {
      return _images;
    }
    [[nodiscard]] std::size_t size() const noexcept {
      return _alphabet.size();
    }

    bool operator==(GeneratorMap const&) const = default;

   private:
    std::vector<char>    _alphabet;
    std::vector<Element> _images;
  };

  //! A finite semigroup given by its Cayley table.
  //!
  //! Instances are only obtained through validate(), which checks closure and
  //! associativity exhaustively; afterwards they are immutable. Elements are
  //! referred to by index, labels are only used for input and output.
  class FiniteSemigroup {
   public:
    //! Validates and builds a semigroup.
    //!
    //! Throws Error with kind not_a_square_table, out_of_range,
    //! non_associative (message names the first witness (i,j,k) in
    //! lexicographic order), generators_do_not_generate, or invalid_input
    //! (duplicate labels, a declared identity that is not neutral).
    static FiniteSemigroup
    validate(std::vector<std::string>                 labels,
             std::vector<std::vector<Element>> const& table,
             std::optional<GeneratorMap>              generators = std::nullopt,
             std::optional<Element>                   identity = std::nullopt);

    //! Same as validate(), with labels "0", "1", ...
    static FiniteSemigroup
    from_table(std::vector<std::vector<Element>> const& table);

    [[nodiscard]] std::size_t size() const noexcept {
      return _labels.size();
    }

    [[nodiscard]] Element product(Element x, Element y) const noexcept {
      return _table[static_cast<std::size_t>(x) * _labels.size() + y];
    }

    //! The row of left multiplication by x, i.e. x*0, x*1, ...
    [[nodiscard]] std::span<Element const> row(Element x) const noexcept {
      return {_table.data() + static_cast<std::size_t>(x) * size(), size()};
    }

    [[nodiscard]] std::string const& label(Element x) const {
      return _labels.at(x);
    }
    [[nodiscard]] std::vector<std::string> const& labels() const noexcept {
      return _labels;
    }
    [[nodiscard]] std::optional<Element> find(std::string_view label) const;
    //! Like find() but throws ErrorKind::invalid_input.
    [[nodiscard]] Element at(std::string_view label) const;

    //! The two-sided identity, if S is a monoid.
    [[nodiscard]] std::optional<Element> identity() const noexcept {
      return _identity;
    }
    [[nodiscard]] std::optional<GeneratorMap> const&
    generators() const noexcept {
      return _generators;
    }

    [[nodiscard]] bool is_idempotent(Element x) const noexcept {
      return product(x, x) == x;
    }
    [[nodiscard]] std::vector<Element> idempotents() const;
    [[nodiscard]] std::vector<std::vector<Element>> table() const;

    //! A copy carrying the given generator map (validated).
    [[nodiscard]] FiniteSemigroup with_generators(GeneratorMap gens) const;
    //! A copy with new labels (same table).
    [[nodiscard]] FiniteSemigroup
    relabelled(std::vector<std::string> labels) const;

    //! Equality of labels and tables, element for element.
    bool operator==(FiniteSemigroup const&) const = default;

   private:
    FiniteSemigroup() = default;

    std::vector<std::string>    _labels;
    std::vector<Element>        _table;
    std::optional<Element>      _identity;
    std::optional<GeneratorMap> _generators;
  };

  //! The associativity witness (x*y)*z != x*(y*z), or nothing.
  struct AssociativityWitness {
    Element x, y, z;
  };
  std::optional<AssociativityWitness>
  find_non_associative(std::vector<std::vector<Element>> const& table);

  //! Index and period of the monogenic subsemigroup generated by s:
  //! s^index = s^(index + period) is the first repetition.
  struct CyclicStructure {
    std::size_t          index;
    std::size_t          period;
    std::vector<Element> powers;  // powers[k] = s^(k+1), k < index + period
  };
  CyclicStructure cyclic_structure(FiniteSemigroup const& S, Element s);

  //! s^k for k >= 1.
  Element power(FiniteSemigroup const& S, Element s, std::size_t k);
  //! The unique idempotent in the monogenic subsemigroup of s.
  Element omega_power(FiniteSemigroup const& S, Element s);
  //! The inverse of s * s^omega in the maximal subgroup of s^omega.
  Element omega_minus_one(FiniteSemigroup const& S, Element s);

  //! The least subsemigroup containing the subset, sorted.
  std::vector<Element> generated_subsemigroup(FiniteSemigroup const&  S,
                                              std::span<Element const> subset);

  //! The subsemigroup on a closed subset, with element order as given.
  //! Throws ErrorKind::invalid_input when the subset is not closed.
  FiniteSemigroup induced_subsemigroup(FiniteSemigroup const&  S,
                                       std::span<Element const> subset);

  //! S^1: S itself when S is a monoid, else S with a fresh identity (last).
  FiniteSemigroup adjoin_identity(FiniteSemigroup const& S);
  //! S^I: always adds a fresh identity as the last element.
  FiniteSemigroup adjoin_new_identity(FiniteSemigroup const& S);

  //! Componentwise product; element (s,t) has index s * |T| + t.
  FiniteSemigroup direct_product(FiniteSemigroup const& S,
                                 FiniteSemigroup const& T);

  //! The dual semigroup x *' y = y * x.
  FiniteSemigroup reversed(FiniteSemigroup const& S);

  //! Product of the generator images along the word, left to right.
  Element evaluate_word(FiniteSemigroup const& S,
                        GeneratorMap const&    gens,
                        std::string_view       word);

  //! True if f is a homomorphism S -> T.
  bool is_homomorphism(FiniteSemigroup const&   S,
                       FiniteSemigroup const&   T,
                       std::span<Element const> f);

  //! True if S has an identity and every element has an inverse.
  bool is_group(FiniteSemigroup const& S);

  //! A table-preserving bijection S -> T (iso[s] in T), or nothing.
  //!
  //! Throws ErrorKind::size_mismatch if |S| != |T| and
  //! ErrorKind::bound_exceeded if |S| > bound.
  std::optional<std::vector<Element>> is_isomorphic(FiniteSemigroup const& S,
                                                    FiniteSemigroup const& T,
                                                    std::size_t bound = 16);

}  // namespace finsg
