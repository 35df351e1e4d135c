#include "finsg/hull.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "finsg/constructions.hpp"
#include "finsg/terms.hpp"

namespace finsg {

  bool is_left_translation(FiniteSemigroup const&      S,
                           std::vector<Element> const& f) {
    for (Element s = 0; s < S.size(); ++s) {
      for (Element t = 0; t < S.size(); ++t) {
        if (f[S.product(s, t)] != S.product(f[s], t)) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_right_translation(FiniteSemigroup const&      S,
                            std::vector<Element> const& f) {
    for (Element s = 0; s < S.size(); ++s) {
      for (Element t = 0; t < S.size(); ++t) {
        if (f[S.product(s, t)] != S.product(s, f[t])) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_linked(FiniteSemigroup const& S, Bitranslation const& w) {
    for (Element s = 0; s < S.size(); ++s) {
      for (Element t = 0; t < S.size(); ++t) {
        if (S.product(s, w.lambda[t]) != S.product(w.rho[s], t)) {
          return false;
        }
      }
    }
    return true;
  }

  Bitranslation inner_bitranslation(FiniteSemigroup const& S, Element s) {
    Bitranslation w;
    for (Element u = 0; u < S.size(); ++u) {
      w.lambda.push_back(S.product(s, u));
      w.rho.push_back(S.product(u, s));
    }
    return w;
  }

  Bitranslation compose(Bitranslation const& a, Bitranslation const& b) {
    Bitranslation w;
    for (std::size_t u = 0; u < a.lambda.size(); ++u) {
      w.lambda.push_back(a.lambda[b.lambda[u]]);
      w.rho.push_back(b.rho[a.rho[u]]);
    }
    return w;
  }

  namespace {
    // Elements in the order they are first reached from a small generating
    // set: gens first, then gens times S.
    std::vector<Element> spanning_generators(FiniteSemigroup const& S) {
      std::vector<Element> gens;
      std::vector<bool>    reached(S.size(), false);
      for (Element s = 0; s < S.size(); ++s) {
        if (reached[s]) {
          continue;
        }
        gens.push_back(s);
        auto closure = generated_subsemigroup(S, gens);
        std::fill(reached.begin(), reached.end(), false);
        for (Element x : closure) {
          reached[x] = true;
        }
      }
      return gens;
    }

    // All maps f with f(st) = f(s) t (left) or f(ts) = t f(s) (right),
    // by choosing values on generators and propagating.
    std::vector<std::vector<Element>> translations(FiniteSemigroup const& S,
                                                   bool                   left) {
      std::size_t const    n    = S.size();
      auto const           gens = spanning_generators(S);
      std::vector<std::vector<Element>> out;
      constexpr Element                 unset = ~Element{0};

      auto mul = [&](Element s, Element t) {
        return left ? S.product(s, t) : S.product(t, s);
      };
      // assign f[s] = v and close under f(s t) = f(s) t
      auto propagate = [&](std::vector<Element>& f, Element s, Element v) {
        std::vector<std::pair<Element, Element>> todo{{s, v}};
        while (!todo.empty()) {
          auto [x, y] = todo.back();
          todo.pop_back();
          if (f[x] != unset) {
            if (f[x] != y) {
              return false;
            }
            continue;
          }
          f[x] = y;
          for (Element t = 0; t < n; ++t) {
            todo.emplace_back(mul(x, t), mul(y, t));
          }
        }
        return true;
      };
      // the closure may leave earlier-set values unchecked against new ones
      auto search = [&](auto&& self, std::vector<Element> f, std::size_t i) {
        if (i == gens.size()) {
          if (std::find(f.begin(), f.end(), unset) == f.end()
              && (left ? is_left_translation(S, f)
                       : is_right_translation(S, f))) {
            out.push_back(std::move(f));
          }
          return;
        }
        if (f[gens[i]] != unset) {
          self(self, std::move(f), i + 1);
          return;
        }
        for (Element v = 0; v < n; ++v) {
          auto g = f;
          if (propagate(g, gens[i], v)) {
            self(self, std::move(g), i + 1);
          }
        }
      };
      search(search, std::vector<Element>(n, unset), 0);
      return out;
    }
  }  // namespace

  std::vector<Bitranslation> enumerate_hull(FiniteSemigroup const& S,
                                            std::size_t            bound) {
    if (S.size() > bound) {
      throw Error(ErrorKind::bound_exceeded,
                  "hull enumeration of " + std::to_string(S.size())
                      + " elements, bound " + std::to_string(bound));
    }
    auto const                 lefts  = translations(S, true);
    auto const                 rights = translations(S, false);
    std::vector<Bitranslation> out;
    for (auto const& l : lefts) {
      for (auto const& r : rights) {
        Bitranslation w{l, r};
        if (is_linked(S, w)) {
          out.push_back(std::move(w));
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<Bitranslation> enumerate_hull(ReesMatrixSemigroup const& R) {
    auto const        M  = rees_matrix(R);
    auto const&       G  = R.group;
    std::size_t const A  = R.a_size, B = R.b_size, g = G.size();
    auto const&       P  = R.sandwich;

    // all maps {0..k-1} -> {0..m-1} as vectors
    auto maps = [](std::size_t k, std::size_t m) {
      std::vector<std::vector<Element>> out;
      std::vector<Element>              f(k, 0);
      while (true) {
        out.push_back(f);
        std::size_t i = 0;
        while (i < k && ++f[i] == m) {
          f[i++] = 0;
        }
        if (i == k) {
          return out;
        }
      }
    };
    auto const row_maps   = maps(A, A);
    auto const col_maps   = maps(B, B);
    auto const row_groups = maps(A, g);
    auto const col_groups = maps(B, g);

    std::vector<Bitranslation> out;
    for (auto const& phi : row_maps) {
      for (auto const& mu : row_groups) {
        Bitranslation w;
        w.lambda.resize(M.size());
        for (std::size_t a = 0; a < A; ++a) {
          for (Element x = 0; x < g; ++x) {
            for (std::size_t b = 0; b < B; ++b) {
              w.lambda[R.index(a, x, b)]
                  = R.index(phi[a], G.product(mu[a], x), b);
            }
          }
        }
        for (auto const& psi : col_maps) {
          for (auto const& nu : col_groups) {
            bool ok = true;
            for (std::size_t b = 0; b < B && ok; ++b) {
              for (std::size_t a = 0; a < A && ok; ++a) {
                ok = G.product(nu[b], P[psi[b]][a])
                     == G.product(P[b][phi[a]], mu[a]);
              }
            }
            if (!ok) {
              continue;
            }
            w.rho.assign(M.size(), 0);
            for (std::size_t a = 0; a < A; ++a) {
              for (Element x = 0; x < g; ++x) {
                for (std::size_t b = 0; b < B; ++b) {
                  w.rho[R.index(a, x, b)]
                      = R.index(a, G.product(x, nu[b]), psi[b]);
                }
              }
            }
            out.push_back(w);
          }
        }
      }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  FiniteSemigroup hull_semigroup(std::vector<Bitranslation> const& hull) {
    std::map<Bitranslation, Element> index;
    for (std::size_t i = 0; i < hull.size(); ++i) {
      index.emplace(hull[i], static_cast<Element>(i));
    }
    std::vector<std::vector<Element>> table(hull.size(),
                                            std::vector<Element>(hull.size()));
    std::vector<std::string>          labels;
    for (std::size_t i = 0; i < hull.size(); ++i) {
      labels.push_back("w" + std::to_string(i));
      for (std::size_t j = 0; j < hull.size(); ++j) {
        auto it = index.find(compose(hull[i], hull[j]));
        if (it == index.end()) {
          throw Error(ErrorKind::invalid_input,
                      "bitranslations not closed under composition");
        }
        table[i][j] = it->second;
      }
    }
    return FiniteSemigroup::validate(std::move(labels), table);
  }

  KernelRepresentation kernel_representation(FiniteSemigroup const& S) {
    KernelRepresentation K;
    K.kernel = kernel(S);
    std::vector<Element> pos(S.size(), 0);
    for (std::size_t i = 0; i < K.kernel.size(); ++i) {
      pos[K.kernel[i]] = static_cast<Element>(i);
    }
    for (Element s = 0; s < S.size(); ++s) {
      std::vector<Element> l, r;
      for (Element k : K.kernel) {
        l.push_back(pos[S.product(s, k)]);
        r.push_back(pos[S.product(k, s)]);
      }
      K.lambda_of.push_back(std::move(l));
      K.rho_of.push_back(std::move(r));
    }
    return K;
  }

  namespace {
    template <typename T>
    bool injective(std::vector<T> const& images) {
      std::set<T> seen(images.begin(), images.end());
      return seen.size() == images.size();
    }
  }  // namespace

  Classification classify(FiniteSemigroup const& S) {
    auto const        K = kernel_representation(S);
    std::vector<bool> in_k(S.size(), false);
    for (Element k : K.kernel) {
      in_k[k] = true;
    }
    Classification c{injective(K.lambda_of), injective(K.rho_of), false, true};
    c.ggm = c.lm && c.rm;
    for (Element u = 0; u < S.size() && c.wggm; ++u) {
      for (Element v = u + 1; v < S.size(); ++v) {
        bool const both = K.lambda_of[u] != K.lambda_of[v]
                          && K.rho_of[u] != K.rho_of[v];
        if (!both && !(in_k[u] && in_k[v])) {
          c.wggm = false;
          break;
        }
      }
    }
    return c;
  }

  Reductivity reductivity(FiniteSemigroup const& S) {
    std::vector<std::vector<Element>> lambdas, rhos;
    std::vector<Bitranslation>        pairs;
    for (Element s = 0; s < S.size(); ++s) {
      auto w = inner_bitranslation(S, s);
      lambdas.push_back(w.lambda);
      rhos.push_back(w.rho);
      pairs.push_back(std::move(w));
    }
    return {injective(rhos), injective(lambdas), injective(pairs)};
  }

  TorsionChecks torsion_checks(FiniteSemigroup const& S) {
    if (!is_completely_simple(S)) {
      throw Error(ErrorKind::not_completely_simple, "torsion checks");
    }
    TorsionChecks out{};
    out.has_torsion
        = !satisfies_identity(S, parse_term("x y^w x^w"), parse_term("x")).holds;

    auto const G = green_structure(S);
    auto const E = S.idempotents();
    out.full_torsion = G.r_count > 1 && G.l_count > 1;
    for (Element e : E) {
      for (Element f : E) {
        Element const ef = S.product(e, f);
        if (S.is_idempotent(ef) && ef != e && ef != f) {
          out.full_torsion = false;
        }
      }
    }

    // dual = false: e R f, g in L_e with f g != e
    auto plenty = [&](bool dual) {
      for (Element e : E) {
        for (Element f : E) {
          bool const related = dual ? G.l_class[e] == G.l_class[f]
                                    : G.r_class[e] == G.r_class[f];
          if (e == f || !related) {
            continue;
          }
          bool found = false;
          for (Element g : E) {
            bool const in_class = dual ? G.r_class[g] == G.r_class[e]
                                       : G.l_class[g] == G.l_class[e];
            Element const prod  = dual ? S.product(g, f) : S.product(f, g);
            if (in_class && prod != e) {
              found = true;
              break;
            }
          }
          if (!found) {
            return false;
          }
        }
      }
      return true;
    };
    out.plenty_left  = plenty(false);
    out.plenty_right = plenty(true);
    return out;
  }

}  // namespace finsg
