#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "finsg/constructions.hpp"
#include "finsg/library.hpp"
#include "finsg/semigroup.hpp"

#include "support.hpp"

using namespace finsg;

namespace {
  std::vector<FiniteSemigroup> small_library() {
    using namespace library;
    return {trivial(),          u1(),
            cyclic_group(2),    cyclic_group(3),
            cyclic_group(6),    left_zero(2),
            right_zero(3),      null_semigroup(2),
            null_semigroup(3),  rectangular_band(2, 3),
            monogenic(3, 2),    monogenic(1, 4),
            symmetric_group(3), full_transformation_monoid(2),
            full_transformation_monoid(2, false), k_p(2)};
  }
}  // namespace

TEST_CASE("validate accepts semilattice and group tables") {
  auto const U = FiniteSemigroup::validate({"0", "1"}, {{0, 0}, {0, 1}});
  CHECK(U.size() == 2);
  CHECK(U.identity() == std::optional<Element>(1));

  auto const Z3 = FiniteSemigroup::from_table({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
  CHECK(Z3.identity() == std::optional<Element>(0));
}

TEST_CASE("validate reports the first non-associative triple") {
  std::vector<std::vector<Element>> const t{{1, 0}, {0, 0}};
  REQUIRE_FALSE(oracle::associative(t));
  auto const w = find_non_associative(t);
  REQUIRE(w.has_value());
  // Oracle: lexicographic scan.
  bool found = false;
  for (Element i = 0; i < 2 && !found; ++i) {
    for (Element j = 0; j < 2 && !found; ++j) {
      for (Element k = 0; k < 2 && !found; ++k) {
        if (t[t[i][j]][k] != t[i][t[j][k]]) {
          CHECK(w->x == i);
          CHECK(w->y == j);
          CHECK(w->z == k);
          found = true;
        }
      }
    }
  }
  try {
    (void) FiniteSemigroup::from_table(t);
    FAIL("expected non_associative");
  } catch (Error const& e) {
    CHECK(e.kind() == ErrorKind::non_associative);
  }
}

TEST_CASE("validate rejects malformed input") {
  auto kind_of = [](auto f) {
    try {
      f();
    } catch (Error const& e) {
      return e.kind();
    }
    return ErrorKind::invalid_input;
  };
  CHECK(kind_of([] { (void) FiniteSemigroup::from_table({{0, 2}, {0, 0}}); })
        == ErrorKind::out_of_range);
  CHECK(kind_of([] { (void) FiniteSemigroup::from_table({{0, 0}}); })
        == ErrorKind::not_a_square_table);
  CHECK(kind_of([] {
          (void) FiniteSemigroup::validate({"0", "1"}, {{0, 0}, {0, 1}},
                                           GeneratorMap({'a'}, {0}));
        })
        == ErrorKind::generators_do_not_generate);
  CHECK(kind_of([] {
          (void) FiniteSemigroup::validate({"x", "x"}, {{0, 0}, {0, 1}});
        })
        == ErrorKind::invalid_input);
}

TEST_CASE("omega powers") {
  auto const Z6 = library::cyclic_group(6);
  CHECK(omega_power(Z6, 2) == 0);
  auto const U = library::u1();
  CHECK(omega_power(U, 1) == 1);
  auto const K2 = k_p(2);
  CHECK(omega_power(K2, K2.at("(0,1,0)")) == K2.at("(0,0,0)"));
}

TEST_CASE("omega laws hold on the library") {
  for (auto const& S : small_library()) {
    for (Element s = 0; s < S.size(); ++s) {
      Element const e   = omega_power(S, s);
      Element const inv = omega_minus_one(S, s);
      CHECK(e == oracle::naive_omega(S, s));
      CHECK(S.is_idempotent(e));
      Element const one[] = {s};
      auto const    gen   = generated_subsemigroup(S, one);
      CHECK(std::binary_search(gen.begin(), gen.end(), e));
      CHECK(S.product(s, inv) == e);
      CHECK(S.product(inv, s) == e);
      CHECK(S.product(S.product(e, s), inv) == e);
    }
  }
}

TEST_CASE("cyclic structure and powers") {
  auto const M = library::monogenic(3, 2);
  auto const c = cyclic_structure(M, M.at("s^1"));
  CHECK(c.index == 3);
  CHECK(c.period == 2);
  for (std::size_t k = 1; k < 12; ++k) {
    CHECK(power(M, 0, k) == oracle::naive_power(M, 0, k));
  }
}

TEST_CASE("generated subsemigroups") {
  auto const  U  = library::u1();
  Element const zero[] = {0};
  CHECK(generated_subsemigroup(U, zero) == std::vector<Element>{0});

  auto const  Z6  = library::cyclic_group(6);
  Element const two[] = {2};
  CHECK(generated_subsemigroup(Z6, two) == std::vector<Element>{0, 2, 4});

  auto const    K2     = k_p(2);
  Element const gens[] = {K2.at("(0,0,1)"), K2.at("(1,0,0)")};
  CHECK(generated_subsemigroup(K2, gens).size() == 8);
}

TEST_CASE("identity adjunction") {
  auto const Z2 = library::cyclic_group(2);
  CHECK(adjoin_identity(Z2) == Z2);
  CHECK(adjoin_new_identity(Z2).size() == 3);

  // M^I is isomorphic to M x {0} + {(1,1)} inside M x U1.
  for (auto const& M : {library::u1(), library::cyclic_group(2),
                        library::full_transformation_monoid(2)}) {
    auto const           P = direct_product(M, library::u1());
    std::vector<Element> sub;
    for (Element m = 0; m < M.size(); ++m) {
      sub.push_back(static_cast<Element>(m * 2));
    }
    sub.push_back(static_cast<Element>(*M.identity() * 2 + 1));
    auto const MI = adjoin_new_identity(M);
    auto const Q  = induced_subsemigroup(P, sub);
    CHECK(oracle::isomorphic(MI, Q));
    CHECK(is_isomorphic(MI, Q).has_value());
  }

  for (auto const& S : small_library()) {
    auto const S1 = adjoin_identity(S);
    CHECK(adjoin_identity(S1) == S1);
    CHECK(S1.identity().has_value());
  }
}

TEST_CASE("direct products") {
  auto const U2 = direct_product(library::u1(), library::u1());
  CHECK(U2.size() == 4);
  CHECK(U2.idempotents().size() == 4);

  auto const Z6  = library::cyclic_group(6);
  auto const Z23 = direct_product(library::cyclic_group(2), library::cyclic_group(3));
  auto const iso = is_isomorphic(Z6, Z23);
  REQUIRE(iso.has_value());
  CHECK(oracle::is_isomorphism(Z6, Z23, *iso));

  for (auto const& S : small_library()) {
    CHECK(is_isomorphic(direct_product(S, library::trivial()), S).has_value());
  }

  // Projections are homomorphisms.
  auto const lib = small_library();
  for (auto const& S : lib) {
    for (auto const& T : lib) {
      if (S.size() > 8 || T.size() > 8) {
        continue;
      }
      auto const           P = direct_product(S, T);
      std::vector<Element> p1(P.size()), p2(P.size());
      for (Element x = 0; x < P.size(); ++x) {
        p1[x] = static_cast<Element>(x / T.size());
        p2[x] = static_cast<Element>(x % T.size());
      }
      CHECK(is_homomorphism(P, S, p1));
      CHECK(is_homomorphism(P, T, p2));
    }
  }
}

TEST_CASE("word evaluation") {
  auto const U = library::u1();
  CHECK(evaluate_word(U, GeneratorMap({'a'}, {0}), "aaa") == 0);
  auto const Z2 = library::cyclic_group(2);
  CHECK(evaluate_word(Z2, GeneratorMap({'a'}, {1}), "aa") == 0);
  auto const K2 = k_p(2);
  GeneratorMap const g({'x', 'y'}, {K2.at("(0,0,1)"), K2.at("(1,0,0)")});
  CHECK(evaluate_word(K2, g, "xyxy") == K2.at("(0,0,0)"));
  CHECK_THROWS_AS((void) evaluate_word(K2, g, "xz"), Error);

  auto r = oracle::rng(7);
  GeneratorMap const ab({'a', 'b'}, {K2.at("(0,0,1)"), K2.at("(1,0,0)")});
  for (int trial = 0; trial < 200; ++trial) {
    auto const u = oracle::random_word(r, oracle::uniform(r, 1, 6), 2);
    auto const v = oracle::random_word(r, oracle::uniform(r, 1, 6), 2);
    CHECK(evaluate_word(K2, ab, u + v)
          == K2.product(evaluate_word(K2, ab, u), evaluate_word(K2, ab, v)));
  }
}

TEST_CASE("isomorphism search") {
  using namespace library;
  auto const Z4  = cyclic_group(4);
  auto const V4  = direct_product(cyclic_group(2), cyclic_group(2));
  CHECK_FALSE(is_isomorphic(Z4, V4).has_value());
  CHECK_FALSE(oracle::isomorphic(Z4, V4));

  for (auto const& S : small_library()) {
    auto const id = is_isomorphic(S, S);
    REQUIRE(id.has_value());
    CHECK(oracle::is_isomorphism(S, S, *id));
  }

  // Agreement with the permutation oracle on all pairs of order <= 6.
  auto const lib = small_library();
  for (auto const& S : lib) {
    for (auto const& T : lib) {
      if (S.size() != T.size() || S.size() > 6) {
        continue;
      }
      auto const iso = is_isomorphic(S, T);
      CHECK(iso.has_value() == oracle::isomorphic(S, T));
      if (iso) {
        CHECK(oracle::is_isomorphism(S, T, *iso));
      }
    }
  }

  CHECK_THROWS_AS((void) is_isomorphic(Z4, cyclic_group(3)), Error);
  auto const big = full_transformation_monoid(3);
  CHECK_THROWS_AS((void) is_isomorphic(big, big), Error);
}

TEST_CASE("reversed semigroup") {
  auto const L = library::left_zero(3);
  CHECK(is_isomorphic(reversed(L), library::right_zero(3)).has_value());
  for (auto const& S : small_library()) {
    CHECK(reversed(reversed(S)) == S);
  }
}

TEST_CASE("groups") {
  CHECK(is_group(library::symmetric_group(3)));
  CHECK(is_group(library::trivial()));
  CHECK_FALSE(is_group(library::u1()));
  CHECK_FALSE(is_group(library::left_zero(2)));
}
