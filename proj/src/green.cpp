#include "finsg/green.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace finsg {

  namespace {
    using Ideal = std::vector<bool>;

    std::vector<std::size_t> classes_by_ideal(std::vector<Ideal> const& ideals,
                                              std::size_t&              count) {
      std::map<Ideal, std::size_t> ids;
      std::vector<std::size_t>     out;
      for (auto const& I : ideals) {
        auto [it, inserted] = ids.emplace(I, ids.size());
        out.push_back(it->second);
      }
      count = ids.size();
      return out;
    }

    Element group_inverse(FiniteSemigroup const&   S,
                          std::vector<Element> const& H,
                          Element                  e,
                          Element                  h) {
      for (Element x : H) {
        if (S.product(h, x) == e && S.product(x, h) == e) {
          return x;
        }
      }
      throw Error(ErrorKind::not_a_group, "no inverse in H-class");
    }
  }  // namespace

  std::vector<Element> GreenStructure::j_members(std::size_t cls) const {
    std::vector<Element> out;
    for (std::size_t x = 0; x < j_class.size(); ++x) {
      if (j_class[x] == cls) {
        out.push_back(static_cast<Element>(x));
      }
    }
    return out;
  }

  GreenStructure green_structure(FiniteSemigroup const& S) {
    std::size_t const  n = S.size();
    std::vector<Ideal> right(n, Ideal(n, false)), left(n, Ideal(n, false)),
        two(n, Ideal(n, false));
    for (Element s = 0; s < n; ++s) {
      right[s][s] = left[s][s] = true;
      for (Element x = 0; x < n; ++x) {
        right[s][S.product(s, x)] = true;
        left[s][S.product(x, s)]  = true;
      }
      two[s] = left[s];
      for (Element x = 0; x < n; ++x) {
        if (left[s][x]) {
          for (Element y = 0; y < n; ++y) {
            two[s][S.product(x, y)] = true;
          }
        }
      }
    }

    GreenStructure G;
    G.r_class = classes_by_ideal(right, G.r_count);
    G.l_class = classes_by_ideal(left, G.l_count);
    G.j_class = classes_by_ideal(two, G.j_count);
    {
      std::map<std::pair<std::size_t, std::size_t>, std::size_t> ids;
      for (Element s = 0; s < n; ++s) {
        auto [it, inserted]
            = ids.emplace(std::make_pair(G.r_class[s], G.l_class[s]), ids.size());
        G.h_class.push_back(it->second);
      }
      G.h_count = ids.size();
    }

    std::vector<Element> rep(G.j_count);
    for (Element s = n; s-- > 0;) {
      rep[G.j_class[s]] = s;
    }
    G.j_leq.assign(G.j_count, std::vector<bool>(G.j_count, false));
    for (std::size_t a = 0; a < G.j_count; ++a) {
      for (std::size_t b = 0; b < G.j_count; ++b) {
        G.j_leq[a][b] = two[rep[b]][rep[a]];
      }
    }
    for (std::size_t a = 0; a < G.j_count; ++a) {
      if (std::all_of(G.j_leq[a].begin(), G.j_leq[a].end(),
                      [](bool x) { return x; })) {
        G.kernel_class = a;
        break;
      }
    }
    G.regular.assign(G.j_count, false);
    for (Element s = 0; s < n; ++s) {
      if (S.is_idempotent(s)) {
        G.regular[G.j_class[s]] = true;
      }
    }
    return G;
  }

  std::vector<Element> kernel(FiniteSemigroup const& S) {
    auto G = green_structure(S);
    return G.j_members(G.kernel_class);
  }

  bool is_completely_simple(FiniteSemigroup const& S) {
    for (Element x = 0; x < S.size(); ++x) {
      for (Element y = 0; y < S.size(); ++y) {
        Element const yx = S.product(y, x);
        if (S.product(x, omega_power(S, yx)) != x) {
          return false;
        }
      }
    }
    return true;
  }

  ReesCoordinates rees_coordinatize(FiniteSemigroup const& S) {
    if (!is_completely_simple(S)) {
      throw Error(ErrorKind::not_completely_simple,
                  "x(yx)^w = x fails, cannot coordinatize");
    }
    auto const    G = green_structure(S);
    Element const e = S.idempotents().front();

    std::vector<Element> H;
    for (Element x = 0; x < S.size(); ++x) {
      if (G.h_class[x] == G.h_class[e]) {
        H.push_back(x);
      }
    }
    auto local = [&](Element h) {
      return static_cast<Element>(
          std::lower_bound(H.begin(), H.end(), h) - H.begin());
    };

    // R-classes (rows) and L-classes (columns), the classes of e first
    std::vector<std::size_t> rows{G.r_class[e]}, cols{G.l_class[e]};
    for (Element x = 0; x < S.size(); ++x) {
      if (std::find(rows.begin(), rows.end(), G.r_class[x]) == rows.end()) {
        rows.push_back(G.r_class[x]);
      }
      if (std::find(cols.begin(), cols.end(), G.l_class[x]) == cols.end()) {
        cols.push_back(G.l_class[x]);
      }
    }

    // r[a] in R_a cap L_e with e r[a] = e; q[b] in R_e cap L_b with q[b] e = e
    std::vector<Element> r(rows.size()), q(cols.size());
    for (std::size_t a = 0; a < rows.size(); ++a) {
      Element x = 0;
      while (!(G.r_class[x] == rows[a] && G.l_class[x] == G.l_class[e])) {
        ++x;
      }
      r[a] = S.product(x, group_inverse(S, H, e, S.product(e, x)));
    }
    for (std::size_t b = 0; b < cols.size(); ++b) {
      Element x = 0;
      while (!(G.r_class[x] == G.r_class[e] && G.l_class[x] == cols[b])) {
        ++x;
      }
      q[b] = S.product(group_inverse(S, H, e, S.product(x, e)), x);
    }

    ReesCoordinates out{{rows.size(), cols.size(), induced_subsemigroup(S, H), {}},
                        {}};
    out.rees.sandwich.assign(cols.size(), std::vector<Element>(rows.size()));
    for (std::size_t b = 0; b < cols.size(); ++b) {
      for (std::size_t a = 0; a < rows.size(); ++a) {
        out.rees.sandwich[b][a] = local(S.product(q[b], r[a]));
      }
    }
    out.to_s.resize(S.size());
    std::vector<bool> hit(S.size(), false);
    for (std::size_t a = 0; a < rows.size(); ++a) {
      for (Element g = 0; g < H.size(); ++g) {
        for (std::size_t b = 0; b < cols.size(); ++b) {
          Element const s = S.product(S.product(r[a], H[g]), q[b]);
          out.to_s[out.rees.index(a, g, b)] = s;
          hit[s]                              = true;
        }
      }
    }
    if (std::find(hit.begin(), hit.end(), false) != hit.end()
        || rows.size() * H.size() * cols.size() != S.size()) {
      throw Error(ErrorKind::not_completely_simple,
                  "Rees coordinates are not a bijection");
    }
    return out;
  }

  FiniteSemigroup maximal_subgroup(FiniteSemigroup const& S, Element e) {
    if (e >= S.size() || !S.is_idempotent(e)) {
      throw Error(ErrorKind::not_idempotent, "element " + std::to_string(e));
    }
    auto const           G = green_structure(S);
    std::vector<Element> H;
    for (Element x = 0; x < S.size(); ++x) {
      if (G.h_class[x] == G.h_class[e]) {
        H.push_back(x);
      }
    }
    return induced_subsemigroup(S, H);
  }

  std::vector<std::vector<Element>> subgroups(FiniteSemigroup const& G) {
    if (!is_group(G)) {
      throw Error(ErrorKind::not_a_group, "subgroups of a non-group");
    }
    std::set<std::vector<Element>>    seen{{*G.identity()}};
    std::vector<std::vector<Element>> out{{*G.identity()}};
    for (std::size_t i = 0; i < out.size(); ++i) {
      for (Element g = 0; g < G.size(); ++g) {
        if (std::binary_search(out[i].begin(), out[i].end(), g)) {
          continue;
        }
        auto gens = out[i];
        gens.push_back(g);
        auto H = generated_subsemigroup(G, gens);
        if (seen.insert(H).second) {
          out.push_back(H);
        }
      }
    }
    return out;
  }

  EquidivisibilityResult is_equidivisible(FiniteSemigroup const& S) {
    std::size_t const n = S.size();
    // S^1 as S plus (possibly) the empty product, encoded as n
    bool const             monoid = S.identity().has_value();
    std::vector<std::size_t> one_ext;
    for (std::size_t w = 0; w < n; ++w) {
      one_ext.push_back(w);
    }
    if (!monoid) {
      one_ext.push_back(n);
    }
    auto mul = [&](std::size_t x, std::size_t y) -> std::size_t {
      if (x == n) {
        return y;
      }
      if (y == n) {
        return x;
      }
      return S.product(static_cast<Element>(x), static_cast<Element>(y));
    };
    for (Element s = 0; s < n; ++s) {
      for (Element t = 0; t < n; ++t) {
        for (Element u = 0; u < n; ++u) {
          for (Element v = 0; v < n; ++v) {
            if (S.product(s, t) != S.product(u, v)) {
              continue;
            }
            bool ok = false;
            for (std::size_t w : one_ext) {
              if ((mul(s, w) == u && mul(w, v) == t)
                  || (mul(u, w) == s && mul(w, t) == v)) {
                ok = true;
                break;
              }
            }
            if (!ok) {
              return {false, std::array<Element, 4>{s, t, u, v}};
            }
          }
        }
      }
    }
    return {};
  }

  LetterCancellation letter_cancelative(FiniteSemigroup const& S,
                                        GeneratorMap const&    gens) {
    LetterCancellation out;
    for (char letter : gens.alphabet()) {
      Element const a = gens.image(letter);
      for (Element s = 0; s < S.size(); ++s) {
        for (Element t = s + 1; t < S.size(); ++t) {
          if (out.right && S.product(s, a) == S.product(t, a)) {
            out.right         = false;
            out.right_witness = CancellationWitness{s, t, letter};
          }
          if (out.left && S.product(a, s) == S.product(a, t)) {
            out.left         = false;
            out.left_witness = CancellationWitness{s, t, letter};
          }
        }
      }
    }
    return out;
  }

}  // namespace finsg
