#include "finsg/semigroup.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>
#include <tuple>
#include <unordered_set>

namespace finsg {

  char const* to_string(ErrorKind kind) noexcept {
    switch (kind) {
      case ErrorKind::non_associative: return "NonAssociative";
      case ErrorKind::out_of_range: return "OutOfRange";
      case ErrorKind::generators_do_not_generate:
        return "GeneratorsDoNotGenerate";
      case ErrorKind::not_a_square_table: return "NotASquareTable";
      case ErrorKind::size_mismatch: return "SizeMismatch";
      case ErrorKind::bound_exceeded: return "BoundExceeded";
      case ErrorKind::unknown_letter: return "UnknownLetter";
      case ErrorKind::not_idempotent: return "NotIdempotent";
      case ErrorKind::not_completely_simple: return "NotCompletelySimple";
      case ErrorKind::not_a_group: return "NotAGroup";
      case ErrorKind::shape_mismatch: return "ShapeMismatch";
      case ErrorKind::not_prime: return "NotPrime";
      case ErrorKind::partial_map: return "PartialF";
      case ErrorKind::not_monoid_hom: return "NotMonoidHom";
      case ErrorKind::not_endomorphism: return "NotEndomorphism";
      case ErrorKind::empty_word: return "EmptyWord";
      case ErrorKind::content_too_small: return "ContentTooSmall";
      case ErrorKind::precondition_violated: return "PreconditionViolated";
      case ErrorKind::avoid_set_too_large: return "AvoidSetTooLarge";
      case ErrorKind::syntax_error: return "SyntaxError";
      case ErrorKind::unassigned_letter: return "UnassignedLetter";
      case ErrorKind::unknown_pseudovariety: return "UnknownPseudovariety";
      case ErrorKind::term_too_short: return "TermTooShort";
      case ErrorKind::invalid_order: return "InvalidOrder";
      case ErrorKind::invalid_dfa: return "InvalidDfa";
      case ErrorKind::invalid_input: return "InvalidInput";
    }
    return "Error";
  }

  ////////////////////////////////////////////////////////////////////////
  // GeneratorMap
  ////////////////////////////////////////////////////////////////////////

  GeneratorMap::GeneratorMap(std::vector<char> alphabet,
                             std::vector<Element> images)
      : _alphabet(std::move(alphabet)), _images(std::move(images)) {
    if (_alphabet.size() != _images.size()) {
      throw Error(ErrorKind::invalid_input,
                  "generator map: alphabet and images differ in length");
    }
    std::set<char> seen(_alphabet.begin(), _alphabet.end());
    if (seen.size() != _alphabet.size()) {
      throw Error(ErrorKind::invalid_input, "generator map: repeated letter");
    }
  }

  void GeneratorMap::set(char letter, Element image) {
    auto it = std::find(_alphabet.begin(), _alphabet.end(), letter);
    if (it == _alphabet.end()) {
      _alphabet.push_back(letter);
      _images.push_back(image);
    } else {
      _images[static_cast<std::size_t>(it - _alphabet.begin())] = image;
    }
  }

  bool GeneratorMap::contains(char letter) const noexcept {
    return std::find(_alphabet.begin(), _alphabet.end(), letter)
           != _alphabet.end();
  }

  Element GeneratorMap::image(char letter) const {
    auto it = std::find(_alphabet.begin(), _alphabet.end(), letter);
    if (it == _alphabet.end()) {
      throw Error(ErrorKind::unknown_letter, std::string(1, letter));
    }
    return _images[static_cast<std::size_t>(it - _alphabet.begin())];
  }

  ////////////////////////////////////////////////////////////////////////
  // FiniteSemigroup
  ////////////////////////////////////////////////////////////////////////

  std::optional<AssociativityWitness>
  find_non_associative(std::vector<std::vector<Element>> const& table) {
    std::size_t const n = table.size();
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        Element const xy = table[x][y];
        for (Element z = 0; z < n; ++z) {
          if (table[xy][z] != table[x][table[y][z]]) {
            return AssociativityWitness{x, y, z};
          }
        }
      }
    }
    return std::nullopt;
  }

  FiniteSemigroup
  FiniteSemigroup::validate(std::vector<std::string>                 labels,
                            std::vector<std::vector<Element>> const& table,
                            std::optional<GeneratorMap>              gens,
                            std::optional<Element>                   identity) {
    std::size_t const n = labels.size();
    if (n == 0) {
      throw Error(ErrorKind::not_a_square_table, "empty semigroup");
    }
    if (table.size() != n) {
      throw Error(ErrorKind::not_a_square_table,
                  "table has " + std::to_string(table.size()) + " rows for "
                      + std::to_string(n) + " labels");
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (table[i].size() != n) {
        throw Error(ErrorKind::not_a_square_table,
                    "row " + std::to_string(i) + " has length "
                        + std::to_string(table[i].size()));
      }
      for (std::size_t j = 0; j < n; ++j) {
        if (table[i][j] >= n) {
          throw Error(ErrorKind::out_of_range,
                      "table[" + std::to_string(i) + "][" + std::to_string(j)
                          + "] = " + std::to_string(table[i][j]));
        }
      }
    }
    {
      std::set<std::string> seen(labels.begin(), labels.end());
      if (seen.size() != n) {
        throw Error(ErrorKind::invalid_input, "duplicate element labels");
      }
    }
    if (auto w = find_non_associative(table)) {
      throw Error(ErrorKind::non_associative,
                  "(" + std::to_string(w->x) + "," + std::to_string(w->y) + ","
                      + std::to_string(w->z) + ")");
    }

    FiniteSemigroup S;
    S._labels = std::move(labels);
    S._table.reserve(n * n);
    for (auto const& r : table) {
      S._table.insert(S._table.end(), r.begin(), r.end());
    }
    for (Element e = 0; e < n; ++e) {
      bool neutral = true;
      for (Element x = 0; x < n && neutral; ++x) {
        neutral = S.product(e, x) == x && S.product(x, e) == x;
      }
      if (neutral) {
        S._identity = e;
        break;
      }
    }
    if (identity && identity != S._identity) {
      throw Error(ErrorKind::invalid_input,
                  "declared identity " + std::to_string(*identity)
                      + " is not a two-sided neutral element");
    }
    if (gens) {
      for (Element g : gens->images()) {
        if (g >= n) {
          throw Error(ErrorKind::out_of_range,
                      "generator image " + std::to_string(g));
        }
      }
      auto closure = generated_subsemigroup(S, gens->images());
      if (closure.size() != n) {
        throw Error(ErrorKind::generators_do_not_generate,
                    "generators reach " + std::to_string(closure.size())
                        + " of " + std::to_string(n) + " elements");
      }
      S._generators = std::move(gens);
    }
    return S;
  }

  FiniteSemigroup
  FiniteSemigroup::from_table(std::vector<std::vector<Element>> const& table) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < table.size(); ++i) {
      labels.push_back(std::to_string(i));
    }
    return validate(std::move(labels), table);
  }

  std::optional<Element> FiniteSemigroup::find(std::string_view label) const {
    auto it = std::find(_labels.begin(), _labels.end(), label);
    if (it == _labels.end()) {
      return std::nullopt;
    }
    return static_cast<Element>(it - _labels.begin());
  }

  Element FiniteSemigroup::at(std::string_view label) const {
    if (auto x = find(label)) {
      return *x;
    }
    throw Error(ErrorKind::invalid_input,
                "no element labelled " + std::string(label));
  }

  std::vector<Element> FiniteSemigroup::idempotents() const {
    std::vector<Element> out;
    for (Element x = 0; x < size(); ++x) {
      if (is_idempotent(x)) {
        out.push_back(x);
      }
    }
    return out;
  }

  std::vector<std::vector<Element>> FiniteSemigroup::table() const {
    std::vector<std::vector<Element>> out(size());
    for (Element x = 0; x < size(); ++x) {
      auto r = row(x);
      out[x].assign(r.begin(), r.end());
    }
    return out;
  }

  FiniteSemigroup FiniteSemigroup::with_generators(GeneratorMap gens) const {
    return validate(_labels, table(), std::move(gens));
  }

  FiniteSemigroup
  FiniteSemigroup::relabelled(std::vector<std::string> labels) const {
    return validate(std::move(labels), table(), _generators);
  }

  ////////////////////////////////////////////////////////////////////////
  // Powers
  ////////////////////////////////////////////////////////////////////////

  CyclicStructure cyclic_structure(FiniteSemigroup const& S, Element s) {
    // first_seen[x] = exponent k such that s^k = x
    std::vector<std::size_t> first_seen(S.size(), 0);
    CyclicStructure          out{0, 0, {}};
    Element                  x = s;
    for (std::size_t k = 1;; ++k) {
      if (first_seen[x] != 0) {
        out.index  = first_seen[x];
        out.period = k - first_seen[x];
        return out;
      }
      first_seen[x] = k;
      out.powers.push_back(x);
      x = S.product(x, s);
    }
  }

  namespace {
    // Position (1-based exponent) inside the cycle congruent to e mod period.
    Element cycle_power(CyclicStructure const& c, std::size_t e_mod) {
      std::size_t k = c.index;
      while (k % c.period != e_mod % c.period) {
        ++k;
      }
      return c.powers[k - 1];
    }
  }  // namespace

  Element power(FiniteSemigroup const& S, Element s, std::size_t k) {
    if (k == 0) {
      throw Error(ErrorKind::precondition_violated, "power exponent 0");
    }
    auto c = cyclic_structure(S, s);
    if (k <= c.powers.size()) {
      return c.powers[k - 1];
    }
    return cycle_power(c, k);
  }

  Element omega_power(FiniteSemigroup const& S, Element s) {
    return cycle_power(cyclic_structure(S, s), 0);
  }

  Element omega_minus_one(FiniteSemigroup const& S, Element s) {
    auto c = cyclic_structure(S, s);
    return cycle_power(c, c.period - 1);
  }

  ////////////////////////////////////////////////////////////////////////
  // Subsemigroups and products
  ////////////////////////////////////////////////////////////////////////

  std::vector<Element>
  generated_subsemigroup(FiniteSemigroup const&   S,
                         std::span<Element const> subset) {
    std::vector<bool>    in(S.size(), false);
    std::vector<Element> elts;
    std::vector<Element> gens;
    for (Element g : subset) {
      if (!in[g]) {
        in[g] = true;
        elts.push_back(g);
        gens.push_back(g);
      }
    }
    for (std::size_t i = 0; i < elts.size(); ++i) {
      for (Element g : gens) {
        Element const x = S.product(elts[i], g);
        if (!in[x]) {
          in[x] = true;
          elts.push_back(x);
        }
      }
    }
    std::sort(elts.begin(), elts.end());
    return elts;
  }

  FiniteSemigroup induced_subsemigroup(FiniteSemigroup const&   S,
                                       std::span<Element const> subset) {
    std::vector<std::int64_t> pos(S.size(), -1);
    for (std::size_t i = 0; i < subset.size(); ++i) {
      pos[subset[i]] = static_cast<std::int64_t>(i);
    }
    std::vector<std::vector<Element>> table(subset.size(),
                                            std::vector<Element>(subset.size()));
    std::vector<std::string>          labels;
    for (std::size_t i = 0; i < subset.size(); ++i) {
      labels.push_back(S.label(subset[i]));
      for (std::size_t j = 0; j < subset.size(); ++j) {
        auto p = pos[S.product(subset[i], subset[j])];
        if (p < 0) {
          throw Error(ErrorKind::invalid_input,
                      "subset is not closed: " + S.label(subset[i]) + "*"
                          + S.label(subset[j]));
        }
        table[i][j] = static_cast<Element>(p);
      }
    }
    return FiniteSemigroup::validate(std::move(labels), table);
  }

  namespace {
    std::string fresh_label(FiniteSemigroup const& S, std::string base) {
      while (S.find(base)) {
        base += "'";
      }
      return base;
    }
  }  // namespace

  FiniteSemigroup adjoin_new_identity(FiniteSemigroup const& S) {
    std::size_t const n     = S.size();
    auto              table = S.table();
    auto              one   = static_cast<Element>(n);
    for (Element x = 0; x < n; ++x) {
      table[x].push_back(x);
    }
    std::vector<Element> last(n + 1);
    std::iota(last.begin(), last.end(), Element{0});
    table.push_back(last);
    auto labels = S.labels();
    labels.push_back(fresh_label(S, "1"));
    return FiniteSemigroup::validate(std::move(labels), table, std::nullopt, one);
  }

  FiniteSemigroup adjoin_identity(FiniteSemigroup const& S) {
    if (S.identity()) {
      return S;
    }
    return adjoin_new_identity(S);
  }

  FiniteSemigroup direct_product(FiniteSemigroup const& S,
                                 FiniteSemigroup const& T) {
    std::size_t const                 m = T.size();
    std::size_t const                 N = S.size() * m;
    std::vector<std::vector<Element>> table(N, std::vector<Element>(N));
    std::vector<std::string>          labels;
    for (Element s = 0; s < S.size(); ++s) {
      for (Element t = 0; t < m; ++t) {
        labels.push_back("(" + S.label(s) + "," + T.label(t) + ")");
      }
    }
    for (std::size_t i = 0; i < N; ++i) {
      for (std::size_t j = 0; j < N; ++j) {
        auto s = S.product(static_cast<Element>(i / m), static_cast<Element>(j / m));
        auto t = T.product(static_cast<Element>(i % m), static_cast<Element>(j % m));
        table[i][j] = static_cast<Element>(s * m + t);
      }
    }
    return FiniteSemigroup::validate(std::move(labels), table);
  }

  FiniteSemigroup reversed(FiniteSemigroup const& S) {
    auto table = S.table();
    for (Element x = 0; x < S.size(); ++x) {
      for (Element y = 0; y < S.size(); ++y) {
        table[x][y] = S.product(y, x);
      }
    }
    return FiniteSemigroup::validate(S.labels(), table);
  }

  Element evaluate_word(FiniteSemigroup const& S,
                        GeneratorMap const&    gens,
                        std::string_view       word) {
    if (word.empty()) {
      throw Error(ErrorKind::empty_word, "cannot evaluate the empty word");
    }
    Element x = gens.image(word[0]);
    for (std::size_t i = 1; i < word.size(); ++i) {
      x = S.product(x, gens.image(word[i]));
    }
    return x;
  }

  bool is_homomorphism(FiniteSemigroup const&   S,
                       FiniteSemigroup const&   T,
                       std::span<Element const> f) {
    if (f.size() != S.size()) {
      return false;
    }
    for (Element x = 0; x < S.size(); ++x) {
      for (Element y = 0; y < S.size(); ++y) {
        if (f[S.product(x, y)] != T.product(f[x], f[y])) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_group(FiniteSemigroup const& S) {
    auto e = S.identity();
    if (!e) {
      return false;
    }
    for (Element x = 0; x < S.size(); ++x) {
      auto r = S.row(x);
      if (std::find(r.begin(), r.end(), *e) == r.end()) {
        return false;
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Isomorphism
  ////////////////////////////////////////////////////////////////////////

  namespace {
    using Signature = std::array<std::size_t, 6>;

    std::vector<Signature> signatures(FiniteSemigroup const& S) {
      std::size_t const      n = S.size();
      std::vector<Signature> out(n);
      for (Element s = 0; s < n; ++s) {
        auto              c = cyclic_structure(S, s);
        std::vector<bool> right(n, false), left(n, false), two(n, false);
        right[s] = left[s] = two[s] = true;
        for (Element x = 0; x < n; ++x) {
          right[S.product(s, x)] = true;
          left[S.product(x, s)]  = true;
        }
        for (Element x = 0; x < n; ++x) {
          if (left[x]) {
            two[x] = true;
            for (Element y = 0; y < n; ++y) {
              two[S.product(x, y)] = true;
            }
          }
        }
        auto count = [](std::vector<bool> const& v) {
          return static_cast<std::size_t>(std::count(v.begin(), v.end(), true));
        };
        std::size_t fixes = 0;
        for (Element x = 0; x < n; ++x) {
          fixes += S.product(s, x) == x ? 1 : 0;
        }
        out[s] = {c.index, c.period, count(right), count(left), count(two),
                  fixes};
      }
      return out;
    }

    // A generating set, indecomposable elements first.
    std::vector<Element> generating_set(FiniteSemigroup const& S) {
      std::size_t const n = S.size();
      std::vector<bool> decomposable(n, false);
      for (Element x = 0; x < n; ++x) {
        for (Element y = 0; y < n; ++y) {
          decomposable[S.product(x, y)] = true;
        }
      }
      std::vector<Element> gens;
      for (Element x = 0; x < n; ++x) {
        if (!decomposable[x]) {
          gens.push_back(x);
        }
      }
      std::vector<Element> closure
          = gens.empty() ? std::vector<Element>{}
                         : generated_subsemigroup(S, gens);
      std::vector<bool> in(n, false);
      for (Element x : closure) {
        in[x] = true;
      }
      for (Element x = 0; x < n; ++x) {
        if (!in[x]) {
          gens.push_back(x);
          for (Element y : generated_subsemigroup(S, gens)) {
            in[y] = true;
          }
        }
      }
      return gens;
    }

    struct IsoSearch {
      FiniteSemigroup const&        S;
      FiniteSemigroup const&        T;
      std::vector<Element>          gens;
      std::vector<Signature>        sig_s, sig_t;
      std::vector<Element>          image;  // of gens

      // Extends the generator assignment to all of S by closure.
      std::optional<std::vector<Element>> extend() const {
        std::size_t const    n = S.size();
        constexpr Element    unset = static_cast<Element>(-1);
        std::vector<Element> f(n, unset);
        std::vector<Element> queue;
        for (std::size_t i = 0; i < gens.size(); ++i) {
          if (f[gens[i]] != unset && f[gens[i]] != image[i]) {
            return std::nullopt;
          }
          if (f[gens[i]] == unset) {
            f[gens[i]] = image[i];
            queue.push_back(gens[i]);
          }
        }
        for (std::size_t q = 0; q < queue.size(); ++q) {
          Element const x = queue[q];
          for (std::size_t i = 0; i < gens.size(); ++i) {
            Element const y  = S.product(x, gens[i]);
            Element const fy = T.product(f[x], image[i]);
            if (f[y] == unset) {
              f[y] = fy;
              queue.push_back(y);
            } else if (f[y] != fy) {
              return std::nullopt;
            }
          }
        }
        std::vector<bool> hit(n, false);
        for (Element x = 0; x < n; ++x) {
          if (f[x] == unset || hit[f[x]] || sig_s[x] != sig_t[f[x]]) {
            return std::nullopt;
          }
          hit[f[x]] = true;
        }
        if (!is_homomorphism(S, T, f)) {
          return std::nullopt;
        }
        return f;
      }

      std::optional<std::vector<Element>> search(std::size_t depth) {
        if (depth == gens.size()) {
          return extend();
        }
        for (Element t = 0; t < T.size(); ++t) {
          if (sig_t[t] != sig_s[gens[depth]]) {
            continue;
          }
          image[depth] = t;
          if (auto f = search(depth + 1)) {
            return f;
          }
        }
        return std::nullopt;
      }
    };
  }  // namespace

  std::optional<std::vector<Element>> is_isomorphic(FiniteSemigroup const& S,
                                                    FiniteSemigroup const& T,
                                                    std::size_t bound) {
    if (S.size() != T.size()) {
      throw Error(ErrorKind::size_mismatch,
                  std::to_string(S.size()) + " vs " + std::to_string(T.size()));
    }
    if (S.size() > bound) {
      throw Error(ErrorKind::bound_exceeded,
                  "isomorphism search on " + std::to_string(S.size())
                      + " elements exceeds bound " + std::to_string(bound));
    }
    IsoSearch search{S, T, generating_set(S), signatures(S), signatures(T), {}};
    auto      ms = search.sig_s, mt = search.sig_t;
    std::sort(ms.begin(), ms.end());
    std::sort(mt.begin(), mt.end());
    if (ms != mt) {
      return std::nullopt;
    }
    search.image.assign(search.gens.size(), 0);
    return search.search(0);
  }

}  // namespace finsg
