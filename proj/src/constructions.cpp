#include "finsg/constructions.hpp"

#include <string>

#include "finsg/library.hpp"

namespace finsg {

  namespace {
    using Table = std::vector<std::vector<Element>>;

    Table square(std::size_t n) {
      return Table(n, std::vector<Element>(n, 0));
    }
  }  // namespace

  ReesMatrixSemigroup make_rees(std::size_t                       a_size,
                                FiniteSemigroup                   group,
                                std::size_t                       b_size,
                                std::vector<std::vector<Element>> sandwich) {
    ReesMatrixSemigroup R{a_size, b_size, std::move(group), std::move(sandwich)};
    rees_matrix(R);
    return R;
  }

  FiniteSemigroup rees_matrix(ReesMatrixSemigroup const& R) {
    auto const& G = R.group;
    if (!is_group(G)) {
      throw Error(ErrorKind::not_a_group, "Rees matrix over a non-group");
    }
    if (R.a_size == 0 || R.b_size == 0 || R.sandwich.size() != R.b_size) {
      throw Error(ErrorKind::shape_mismatch,
                  "sandwich must have " + std::to_string(R.b_size) + " rows");
    }
    for (auto const& row : R.sandwich) {
      if (row.size() != R.a_size) {
        throw Error(ErrorKind::shape_mismatch,
                    "sandwich rows must have " + std::to_string(R.a_size)
                        + " entries");
      }
      for (Element p : row) {
        if (p >= G.size()) {
          throw Error(ErrorKind::out_of_range,
                      "sandwich entry " + std::to_string(p));
        }
      }
    }
    std::size_t const        g = G.size();
    std::size_t const        n = R.a_size * g * R.b_size;
    auto                     table = square(n);
    std::vector<std::string> labels(n);
    for (std::size_t a = 0; a < R.a_size; ++a) {
      for (Element x = 0; x < g; ++x) {
        for (std::size_t b = 0; b < R.b_size; ++b) {
          Element const i = R.index(a, x, b);
          labels[i]       = "(" + std::to_string(a) + "," + G.label(x) + ","
                      + std::to_string(b) + ")";
          for (std::size_t a2 = 0; a2 < R.a_size; ++a2) {
            Element const xp = G.product(x, R.sandwich[b][a2]);
            for (Element y = 0; y < g; ++y) {
              for (std::size_t b2 = 0; b2 < R.b_size; ++b2) {
                table[i][R.index(a2, y, b2)] = R.index(a, G.product(xp, y), b2);
              }
            }
          }
        }
      }
    }
    return FiniteSemigroup::validate(std::move(labels), table);
  }

  bool is_prime(std::size_t p) noexcept {
    if (p < 2) {
      return false;
    }
    for (std::size_t d = 2; d * d <= p; ++d) {
      if (p % d == 0) {
        return false;
      }
    }
    return true;
  }

  ReesMatrixSemigroup k_p_rees(std::size_t p) {
    if (!is_prime(p)) {
      throw Error(ErrorKind::not_prime, std::to_string(p) + " is not prime");
    }
    return {2, 2, library::cyclic_group(p), {{0, 0}, {0, 1}}};
  }

  FiniteSemigroup k_p(std::size_t p) {
    return rees_matrix(k_p_rees(p));
  }

  SynthesisSemigroup synthesis(FiniteSemigroup const&      S,
                               FiniteSemigroup const&      T,
                               std::vector<Element> const& f) {
    auto S1 = adjoin_identity(S);
    auto T1 = adjoin_identity(T);
    if (f.size() != S1.size()) {
      throw Error(ErrorKind::partial_map,
                  "f needs " + std::to_string(S1.size()) + " values, got "
                      + std::to_string(f.size()));
    }
    for (Element x : f) {
      if (x >= T1.size()) {
        throw Error(ErrorKind::partial_map,
                    "f value " + std::to_string(x) + " outside T1");
      }
    }
    SynthesisSemigroup M{S, T, std::move(S1), std::move(T1), f, S};
    std::size_t const  ns = S.size(), n1 = M.s_one.size(), nt = M.t_one.size();
    std::size_t const  n = ns + n1 * nt * n1;

    auto const&              P  = M.s_one;
    auto const&              Q  = M.t_one;
    auto                     table = square(n);
    std::vector<std::string> labels(n);
    for (Element s = 0; s < ns; ++s) {
      labels[s] = "S:" + S.label(s);
      for (Element s2 = 0; s2 < ns; ++s2) {
        table[s][s2] = S.product(s, s2);
      }
    }
    for (Element s1 = 0; s1 < n1; ++s1) {
      for (Element t = 0; t < nt; ++t) {
        for (Element s2 = 0; s2 < n1; ++s2) {
          Element const i = M.triple_index(s1, t, s2);
          labels[i] = "(" + P.label(s1) + "," + Q.label(t) + "," + P.label(s2)
                      + ")";
          for (Element s = 0; s < ns; ++s) {
            table[s][i] = M.triple_index(P.product(s, s1), t, s2);
            table[i][s] = M.triple_index(s1, t, P.product(s2, s));
          }
          for (Element u1 = 0; u1 < n1; ++u1) {
            Element const mid = Q.product(t, f[P.product(s2, u1)]);
            for (Element u = 0; u < nt; ++u) {
              for (Element u2 = 0; u2 < n1; ++u2) {
                table[i][M.triple_index(u1, u, u2)]
                    = M.triple_index(s1, Q.product(mid, u), u2);
              }
            }
          }
        }
      }
    }
    M.carrier = FiniteSemigroup::validate(std::move(labels), table);
    return M;
  }

  FiniteSemigroup bullet_gadget(std::size_t p) {
    if (!is_prime(p)) {
      throw Error(ErrorKind::not_prime, std::to_string(p) + " is not prime");
    }
    auto const G = library::cyclic_group(p);
    if (p != 2) {
      std::vector<Element> g(p, 0);
      g[2]         = 1;
      auto const M = synthesis(G, G, g);
      std::vector<Element> subset{M.s_index(0)};
      for (Element s1 : {0u, 1u}) {
        for (Element t = 0; t < p; ++t) {
          for (Element s2 : {0u, 1u}) {
            subset.push_back(M.triple_index(s1, t, s2));
          }
        }
      }
      return induced_subsemigroup(M.carrier, subset);
    }
    // G x G: (i,j) has index 2i + j
    auto const           GG = direct_product(G, G);
    std::vector<Element> h(4, 0);
    h[3]         = 1;
    auto const M = synthesis(GG, G, h);
    std::vector<Element> subset{M.s_index(0)};
    for (Element s1 : {0u, 2u}) {
      for (Element t = 0; t < 2; ++t) {
        for (Element s2 : {0u, 1u}) {
          subset.push_back(M.triple_index(s1, t, s2));
        }
      }
    }
    return induced_subsemigroup(M.carrier, subset);
  }

  FiniteSemigroup
  semidirect_product(FiniteSemigroup const&                   S,
                     FiniteSemigroup const&                   T,
                     std::vector<std::vector<Element>> const& action) {
    std::size_t const ns = S.size(), nt = T.size();
    if (action.size() != nt) {
      throw Error(ErrorKind::shape_mismatch,
                  "action needs one map per element of T");
    }
    for (Element t = 0; t < nt; ++t) {
      if (action[t].size() != ns) {
        throw Error(ErrorKind::shape_mismatch,
                    "action map of " + T.label(t) + " is not total");
      }
      for (Element s : action[t]) {
        if (s >= ns) {
          throw Error(ErrorKind::out_of_range,
                      "action value " + std::to_string(s));
        }
      }
      if (!is_homomorphism(S, S, action[t])) {
        throw Error(ErrorKind::not_endomorphism,
                    "action of " + T.label(t) + " is not an endomorphism");
      }
    }
    if (auto e = T.identity()) {
      for (Element s = 0; s < ns; ++s) {
        if (action[*e][s] != s) {
          throw Error(ErrorKind::not_monoid_hom,
                      "identity of T does not act trivially");
        }
      }
    }
    for (Element t1 = 0; t1 < nt; ++t1) {
      for (Element t2 = 0; t2 < nt; ++t2) {
        auto const& a12 = action[T.product(t1, t2)];
        for (Element s = 0; s < ns; ++s) {
          if (a12[s] != action[t1][action[t2][s]]) {
            throw Error(ErrorKind::not_monoid_hom,
                        "action of " + T.label(t1) + T.label(t2)
                            + " is not the composite");
          }
        }
      }
    }
    std::size_t const        n = ns * nt;
    auto                     table = square(n);
    std::vector<std::string> labels(n);
    for (Element s1 = 0; s1 < ns; ++s1) {
      for (Element t1 = 0; t1 < nt; ++t1) {
        Element const i = static_cast<Element>(s1 * nt + t1);
        labels[i]       = "(" + S.label(s1) + "," + T.label(t1) + ")";
        for (Element s2 = 0; s2 < ns; ++s2) {
          Element const s = S.product(s1, action[t1][s2]);
          for (Element t2 = 0; t2 < nt; ++t2) {
            table[i][s2 * nt + t2]
                = static_cast<Element>(s * nt + T.product(t1, t2));
          }
        }
      }
    }
    return FiniteSemigroup::validate(std::move(labels), table);
  }

}  // namespace finsg
