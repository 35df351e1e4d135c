#include "finsg/order.hpp"

#include <algorithm>
#include <set>
#include <thread>

#include "finsg/green.hpp"
#include "finsg/hull.hpp"

namespace finsg {

  std::optional<std::string> order_violation(FiniteSemigroup const& S,
                                             Relation const&        leq) {
    std::size_t const n = S.size();
    if (leq.size() != n) {
      return "relation has the wrong size";
    }
    for (auto const& row : leq) {
      if (row.size() != n) {
        return "relation has the wrong size";
      }
    }
    auto pair = [](Element s, Element t) {
      return "(" + std::to_string(s) + "," + std::to_string(t) + ")";
    };
    for (Element s = 0; s < n; ++s) {
      if (!leq[s][s]) {
        return "not reflexive at " + std::to_string(s);
      }
    }
    for (Element s = 0; s < n; ++s) {
      for (Element t = 0; t < n; ++t) {
        if (!leq[s][t]) {
          continue;
        }
        if (s != t && leq[t][s]) {
          return "not antisymmetric at " + pair(s, t);
        }
        for (Element u = 0; u < n; ++u) {
          if (leq[t][u] && !leq[s][u]) {
            return "not transitive at " + pair(s, t) + pair(t, u);
          }
          if (!leq[S.product(u, s)][S.product(u, t)]
              || !leq[S.product(s, u)][S.product(t, u)]) {
            return "not stable at " + pair(s, t) + " under " + std::to_string(u);
          }
        }
      }
    }
    return std::nullopt;
  }

  OrderedSemigroup OrderedSemigroup::validate(FiniteSemigroup S, Relation leq) {
    if (auto why = order_violation(S, leq)) {
      throw Error(ErrorKind::invalid_order, *why);
    }
    return {std::move(S), std::move(leq)};
  }

  OrderedSemigroup OrderedSemigroup::from_pairs(FiniteSemigroup       S,
                                                std::span<Pair const> pairs) {
    std::size_t const n = S.size();
    Relation          leq(n, std::vector<bool>(n, false));
    for (Element s = 0; s < n; ++s) {
      leq[s][s] = true;
    }
    for (auto [s, t] : pairs) {
      if (s >= n || t >= n) {
        throw Error(ErrorKind::out_of_range, "order pair outside S");
      }
      leq[s][t] = true;
    }
    return validate(std::move(S), std::move(leq));
  }

  OrderedSemigroup OrderedSemigroup::trivial(FiniteSemigroup S) {
    return from_pairs(std::move(S), {});
  }

  std::vector<Pair> OrderedSemigroup::strict_pairs() const {
    std::vector<Pair> out;
    for (Element s = 0; s < _S.size(); ++s) {
      for (Element t = 0; t < _S.size(); ++t) {
        if (s != t && _leq[s][t]) {
          out.emplace_back(s, t);
        }
      }
    }
    return out;
  }

  bool OrderedSemigroup::is_trivial() const {
    return strict_pairs().empty();
  }

  namespace {
    // Adds the seeds to a relation that is already a stable preorder.
    void close(FiniteSemigroup const& S, Relation& R, std::span<Pair const> seeds) {
      std::size_t const n = S.size();
      std::vector<Pair> todo;
      auto add = [&](Element s, Element t) {
        if (!R[s][t]) {
          R[s][t] = true;
          todo.emplace_back(s, t);
        }
      };
      for (auto [s, t] : seeds) {
        add(s, t);
      }
      while (!todo.empty()) {
        auto [s, t] = todo.back();
        todo.pop_back();
        for (Element u = 0; u < n; ++u) {
          add(S.product(u, s), S.product(u, t));
          add(S.product(s, u), S.product(t, u));
          if (R[u][s]) {
            add(u, t);
          }
          if (R[t][u]) {
            add(s, u);
          }
        }
      }
    }

    std::optional<Pair> antisymmetry(Relation const& R) {
      for (Element s = 0; s < R.size(); ++s) {
        for (Element t = s + 1; t < R.size(); ++t) {
          if (R[s][t] && R[t][s]) {
            return Pair{s, t};
          }
        }
      }
      return std::nullopt;
    }

    Relation equality(std::size_t n) {
      Relation R(n, std::vector<bool>(n, false));
      for (std::size_t s = 0; s < n; ++s) {
        R[s][s] = true;
      }
      return R;
    }
  }  // namespace

  ClosureResult stable_closure(FiniteSemigroup const& S,
                               std::span<Pair const>  seeds) {
    for (auto [s, t] : seeds) {
      if (s >= S.size() || t >= S.size()) {
        throw Error(ErrorKind::out_of_range, "seed pair outside S");
      }
    }
    ClosureResult out{equality(S.size()), std::nullopt};
    close(S, out.relation, seeds);
    out.antisymmetry_violation = antisymmetry(out.relation);
    return out;
  }

  OrderabilityResult is_orderable(FiniteSemigroup const& S, unsigned jobs) {
    std::vector<Pair> seeds;
    for (Element s = 0; s < S.size(); ++s) {
      for (Element t = 0; t < S.size(); ++t) {
        if (s != t) {
          seeds.emplace_back(s, t);
        }
      }
    }
    std::vector<char> good(seeds.size(), 0);
    auto work = [&](std::size_t lo, std::size_t hi) {
      for (std::size_t i = lo; i < hi; ++i) {
        Pair const seed[1] = {seeds[i]};
        good[i] = !stable_closure(S, seed).antisymmetry_violation.has_value();
      }
    };
    jobs = std::max(1U, std::min<unsigned>(jobs, 64));
    if (jobs == 1 || seeds.size() < 64) {
      work(0, seeds.size());
    } else {
      std::vector<std::thread> pool;
      std::size_t const        chunk = (seeds.size() + jobs - 1) / jobs;
      for (unsigned j = 0; j < jobs; ++j) {
        std::size_t const lo = std::min(seeds.size(), j * chunk);
        pool.emplace_back(work, lo, std::min(seeds.size(), lo + chunk));
      }
      for (auto& th : pool) {
        th.join();
      }
    }
    auto it = std::find(good.begin(), good.end(), 1);
    if (it == good.end()) {
      return {};
    }
    Pair const seed[1] = {seeds[static_cast<std::size_t>(it - good.begin())]};
    return {true, OrderedSemigroup::validate(S, stable_closure(S, seed).relation)};
  }

  std::vector<OrderedSemigroup>
  enumerate_stable_orders(FiniteSemigroup const&     S,
                          std::optional<std::size_t> limit,
                          std::size_t                bound) {
    if (!limit && S.size() > bound) {
      throw Error(ErrorKind::bound_exceeded,
                  "order enumeration on " + std::to_string(S.size())
                      + " elements, bound " + std::to_string(bound));
    }
    std::vector<Pair> pairs;
    for (Element s = 0; s < S.size(); ++s) {
      for (Element t = 0; t < S.size(); ++t) {
        if (s != t) {
          pairs.emplace_back(s, t);
        }
      }
    }
    std::vector<OrderedSemigroup> out;
    std::vector<bool>             forbidden(pairs.size(), false);
    auto search = [&](auto&& self, Relation const& R, std::size_t i) -> void {
      if (limit && out.size() >= *limit) {
        return;
      }
      if (i == pairs.size()) {
        out.push_back(OrderedSemigroup::validate(S, R));
        return;
      }
      auto const [s, t] = pairs[i];
      if (R[s][t]) {
        self(self, R, i + 1);
        return;
      }
      forbidden[i] = true;
      self(self, R, i + 1);
      forbidden[i] = false;

      Relation   grown = R;
      Pair const seed[1] = {pairs[i]};
      close(S, grown, seed);
      if (antisymmetry(grown)) {
        return;
      }
      for (std::size_t j = 0; j < i; ++j) {
        if (forbidden[j] && grown[pairs[j].first][pairs[j].second]) {
          return;
        }
      }
      self(self, grown, i + 1);
    };
    search(search, equality(S.size()), 0);
    return out;
  }

  UnorderabilityReport unorderability_report(FiniteSemigroup const& S,
                                             unsigned               jobs) {
    UnorderabilityReport r{};
    r.ggm        = classify(S).ggm;
    r.nontrivial = S.size() > 1;
    r.orderable  = is_orderable(S, jobs).orderable;
    auto const K = kernel(S);
    auto const E = std::find_if(K.begin(), K.end(),
                                [&](Element k) { return S.is_idempotent(k); });
    r.kernel_group_nontrivial = maximal_subgroup(S, *E).size() > 1;
    r.consistent
        = !(r.ggm && r.nontrivial && r.kernel_group_nontrivial && r.orderable);
    return r;
  }

  OrderedSemigroup order_dual(OrderedSemigroup const& S) {
    std::size_t const n = S.semigroup().size();
    Relation          R(n, std::vector<bool>(n, false));
    for (Element s = 0; s < n; ++s) {
      for (Element t = 0; t < n; ++t) {
        R[t][s] = S.leq(s, t);
      }
    }
    return OrderedSemigroup::validate(S.semigroup(), std::move(R));
  }

}  // namespace finsg
