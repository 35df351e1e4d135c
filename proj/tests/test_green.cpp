#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "finsg/constructions.hpp"
#include "finsg/green.hpp"
#include "finsg/library.hpp"

#include "support.hpp"

using namespace finsg;

namespace {

  using Ideal = std::set<Element>;

  // Principal ideals by direct products with S^1.
  Ideal right_ideal(FiniteSemigroup const& S, Element s) {
    Ideal I{s};
    for (Element x = 0; x < S.size(); ++x) {
      I.insert(S.product(s, x));
    }
    return I;
  }

  Ideal left_ideal(FiniteSemigroup const& S, Element s) {
    Ideal I{s};
    for (Element x = 0; x < S.size(); ++x) {
      I.insert(S.product(x, s));
    }
    return I;
  }

  Ideal two_sided(FiniteSemigroup const& S, Element s) {
    Ideal I;
    for (Element y : left_ideal(S, s)) {
      for (Element z : right_ideal(S, y)) {
        I.insert(z);
      }
    }
    return I;
  }

  // Two class maps describe the same partition.
  template <typename F>
  bool same_partition(FiniteSemigroup const&          S,
                      std::vector<std::size_t> const& cls,
                      F                               ideal) {
    for (Element x = 0; x < S.size(); ++x) {
      for (Element y = 0; y < S.size(); ++y) {
        if ((cls[x] == cls[y]) != (ideal(S, x) == ideal(S, y))) {
          return false;
        }
      }
    }
    return true;
  }

  std::vector<FiniteSemigroup> family() {
    using namespace library;
    std::vector<FiniteSemigroup> out{
        trivial(),          u1(),          cyclic_group(4), left_zero(3),
        right_zero(2),      null_semigroup(3), rectangular_band(2, 3),
        monogenic(2, 3),    symmetric_group(3), full_transformation_monoid(2),
        full_transformation_monoid(3), k_p(2), k_p(3),
        direct_product(u1(), cyclic_group(2)),
        direct_product(left_zero(2), u1())};
    return out;
  }

  FiniteSemigroup transpose(FiniteSemigroup const& S) {
    return reversed(S);
  }

}  // namespace

TEST_CASE("green classes agree with principal ideals") {
  for (auto const& S : family()) {
    auto const G = green_structure(S);
    CHECK(same_partition(S, G.r_class, right_ideal));
    CHECK(same_partition(S, G.l_class, left_ideal));
    CHECK(same_partition(S, G.j_class, two_sided));
    for (Element x = 0; x < S.size(); ++x) {
      for (Element y = 0; y < S.size(); ++y) {
        bool const h = G.r_class[x] == G.r_class[y] && G.l_class[x] == G.l_class[y];
        CHECK((G.h_class[x] == G.h_class[y]) == h);
        // j order from ideal containment
        auto const Ix = two_sided(S, x);
        auto const Iy = two_sided(S, y);
        bool const below = std::includes(Iy.begin(), Iy.end(), Ix.begin(), Ix.end());
        CHECK(G.j_leq[G.j_class[x]][G.j_class[y]] == below);
      }
    }
    for (std::size_t c = 0; c < G.j_count; ++c) {
      CHECK(G.j_leq[G.kernel_class][c]);
    }
  }
}

TEST_CASE("green structure of small examples") {
  auto const U = green_structure(library::u1());
  CHECK(U.j_count == 2);
  CHECK(U.j_members(U.kernel_class) == std::vector<Element>{0});

  auto const B = green_structure(library::rectangular_band(2, 2));
  CHECK(B.j_count == 1);
  CHECK(B.r_count == 2);
  CHECK(B.l_count == 2);
  CHECK(B.h_count == 4);

  auto const K = green_structure(k_p(2));
  CHECK(K.j_count == 1);
  CHECK(K.r_count == 2);
  CHECK(K.l_count == 2);
  CHECK(K.h_count == 4);
}

TEST_CASE("green classes swap under reversal") {
  for (auto const& S : family()) {
    auto const G  = green_structure(S);
    auto const Gt = green_structure(transpose(S));
    for (Element x = 0; x < S.size(); ++x) {
      for (Element y = 0; y < S.size(); ++y) {
        CHECK((G.r_class[x] == G.r_class[y]) == (Gt.l_class[x] == Gt.l_class[y]));
        CHECK((G.j_class[x] == G.j_class[y]) == (Gt.j_class[x] == Gt.j_class[y]));
      }
    }
  }
}

TEST_CASE("kernel") {
  CHECK(kernel(library::u1()) == std::vector<Element>{0});
  auto const S3 = library::symmetric_group(3);
  CHECK(kernel(S3).size() == 6);

  for (auto const& S : family()) {
    auto const K = kernel(S);
    // Oracle: the intersection of all two-sided principal ideals.
    Ideal all;
    for (Element x = 0; x < S.size(); ++x) {
      all.insert(x);
    }
    for (Element x = 0; x < S.size(); ++x) {
      Ideal const I = two_sided(S, x);
      Ideal       meet;
      std::set_intersection(all.begin(), all.end(), I.begin(), I.end(),
                            std::inserter(meet, meet.end()));
      all = meet;
    }
    CHECK(std::vector<Element>(all.begin(), all.end()) == K);
    for (Element s = 0; s < S.size(); ++s) {
      for (Element k : K) {
        CHECK(std::binary_search(K.begin(), K.end(), S.product(s, k)));
        CHECK(std::binary_search(K.begin(), K.end(), S.product(k, s)));
      }
    }
  }
}

TEST_CASE("complete simplicity agrees with kernel = S") {
  CHECK(is_completely_simple(k_p(2)));
  CHECK_FALSE(is_completely_simple(library::u1()));
  CHECK(is_completely_simple(library::rectangular_band(3, 2)));
  for (auto const& S : family()) {
    if (S.size() > 12) {
      continue;
    }
    CHECK(is_completely_simple(S) == (kernel(S).size() == S.size()));
  }
}

TEST_CASE("regularity in completely simple semigroups") {
  auto r = oracle::rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    auto const a = oracle::uniform(r, 1, 3);
    auto const b = oracle::uniform(r, 1, 3);
    auto       G = library::cyclic_group(oracle::uniform(r, 1, 3));
    auto const P = oracle::random_sandwich(r, a, b, G.size());
    auto const S = rees_matrix(make_rees(a, G, b, P));
    auto const GS = green_structure(S);
    for (bool reg : GS.regular) {
      CHECK(reg);
    }
    for (Element e : S.idempotents()) {
      auto const H = maximal_subgroup(S, e);
      CHECK(is_group(H));
      CHECK(H.size() == G.size());
    }
  }
}

TEST_CASE("rees coordinatization round trips") {
  auto const B  = library::rectangular_band(2, 2);
  auto const RB = rees_coordinatize(B);
  CHECK(RB.rees.a_size == 2);
  CHECK(RB.rees.b_size == 2);
  CHECK(RB.rees.group.size() == 1);

  auto const Z3 = library::cyclic_group(3);
  auto const RG = rees_coordinatize(Z3);
  CHECK(RG.rees.a_size == 1);
  CHECK(RG.rees.b_size == 1);
  CHECK(RG.rees.group.size() == 3);

  auto check_round_trip = [](FiniteSemigroup const& S) {
    auto const C = rees_coordinatize(S);
    auto const R = rees_matrix(C.rees);
    CHECK(oracle::is_isomorphism(R, S, C.to_s));
    CHECK(is_isomorphic(R, S).has_value());
    // normalized: row and column through the chosen idempotent
    Element const one = *C.rees.group.identity();
    for (std::size_t a = 0; a < C.rees.a_size; ++a) {
      CHECK(C.rees.sandwich[0][a] == one);
    }
    for (std::size_t b = 0; b < C.rees.b_size; ++b) {
      CHECK(C.rees.sandwich[b][0] == one);
    }
  };
  check_round_trip(k_p(2));
  check_round_trip(k_p(3));
  check_round_trip(B);
  auto r = oracle::rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    auto const a = oracle::uniform(r, 1, 3);
    auto const b = oracle::uniform(r, 1, 2);
    auto       G = trial % 2 ? library::cyclic_group(2) : library::symmetric_group(3);
    if (a * b * G.size() > 16) {
      G = library::cyclic_group(2);
    }
    check_round_trip(rees_matrix(make_rees(a, G, b, oracle::random_sandwich(r, a, b, G.size()))));
  }
  CHECK_THROWS_AS((void) rees_coordinatize(library::u1()), Error);
}

TEST_CASE("maximal subgroups") {
  auto const U = maximal_subgroup(library::u1(), 1);
  CHECK(U.size() == 1);
  auto const K2 = k_p(2);
  auto const H  = maximal_subgroup(K2, K2.at("(0,0,0)"));
  CHECK(H.size() == 2);
  CHECK(H.identity().has_value());
  auto const Z6 = maximal_subgroup(library::cyclic_group(6), 0);
  CHECK(Z6.size() == 6);
  CHECK_THROWS_AS((void) maximal_subgroup(K2, K2.at("(0,1,0)")), Error);
}

TEST_CASE("subgroups of groups") {
  CHECK(subgroups(library::cyclic_group(6)).size() == 4);
  CHECK(subgroups(library::symmetric_group(3)).size() == 6);
  CHECK(subgroups(direct_product(library::cyclic_group(2), library::cyclic_group(2))).size()
        == 5);
}

TEST_CASE("equidivisibility") {
  auto brute = [](FiniteSemigroup const& S) {
    std::size_t const n = S.size();
    auto mul = [&](Element x, Element y) -> Element {
      if (x == n) {
        return y;
      }
      if (y == n) {
        return x;
      }
      return S.product(x, y);
    };
    for (Element s = 0; s < n; ++s) {
      for (Element t = 0; t < n; ++t) {
        for (Element u = 0; u < n; ++u) {
          for (Element v = 0; v < n; ++v) {
            if (S.product(s, t) != S.product(u, v)) {
              continue;
            }
            bool ok = false;
            for (Element w = 0; w <= n && !ok; ++w) {
              ok = (u == mul(s, w) && mul(w, v) == t)
                   || (mul(u, w) == s && v == mul(w, t));
            }
            if (!ok) {
              return false;
            }
          }
        }
      }
    }
    return true;
  };
  CHECK(is_equidivisible(library::cyclic_group(3)).holds);
  CHECK(is_equidivisible(library::u1()).holds);
  auto const N2 = library::null_semigroup(2);
  auto const r  = is_equidivisible(N2);
  CHECK_FALSE(r.holds);
  REQUIRE(r.counterexample.has_value());
  auto const [s, t, u, v] = *r.counterexample;
  CHECK(N2.product(s, t) == N2.product(u, v));
  for (auto const& S : family()) {
    if (S.size() <= 8) {
      CHECK(is_equidivisible(S).holds == brute(S));
    }
  }
}

TEST_CASE("letter cancellation") {
  auto const Z2 = library::cyclic_group(2);
  auto const a  = letter_cancelative(Z2, GeneratorMap({'a'}, {1}));
  CHECK(a.right);
  CHECK(a.left);

  auto const N2 = library::null_semigroup(2);
  auto const b  = letter_cancelative(N2, GeneratorMap({'a'}, {N2.at("a")}));
  CHECK_FALSE(b.right);
  REQUIRE(b.right_witness.has_value());
  CHECK(b.right_witness->s != b.right_witness->t);

  auto const L = library::left_zero(2);
  auto const c = letter_cancelative(L, GeneratorMap({'a', 'b'}, {0, 1}));
  CHECK(c.right);
  CHECK_FALSE(c.left);
}
