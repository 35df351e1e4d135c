#include "finsg/dfa.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace finsg {

  void Dfa::validate() const {
    if (states.empty()) {
      throw Error(ErrorKind::invalid_dfa, "no states");
    }
    if (alphabet.empty()) {
      throw Error(ErrorKind::invalid_dfa, "empty alphabet");
    }
    auto letters = alphabet;
    std::sort(letters.begin(), letters.end());
    if (std::adjacent_find(letters.begin(), letters.end()) != letters.end()) {
      throw Error(ErrorKind::invalid_dfa, "repeated letter");
    }
    if (initial >= states.size() || accepting.size() != states.size()
        || delta.size() != states.size()) {
      throw Error(ErrorKind::invalid_dfa, "inconsistent sizes");
    }
    for (auto const& row : delta) {
      if (row.size() != alphabet.size()) {
        throw Error(ErrorKind::invalid_dfa, "transition function not total");
      }
      for (std::size_t q : row) {
        if (q >= states.size()) {
          throw Error(ErrorKind::invalid_dfa, "transition to unknown state");
        }
      }
    }
  }

  std::size_t Dfa::letter_index(char a) const {
    auto it = std::find(alphabet.begin(), alphabet.end(), a);
    if (it == alphabet.end()) {
      throw Error(ErrorKind::unknown_letter, std::string(1, a));
    }
    return static_cast<std::size_t>(it - alphabet.begin());
  }

  std::size_t Dfa::run(std::size_t q, std::string_view w) const {
    for (char a : w) {
      q = delta[q][letter_index(a)];
    }
    return q;
  }

  bool Dfa::accepts(std::string_view w) const {
    return accepting[run(initial, w)];
  }

  Dfa make_dfa(std::vector<std::string> states,
               std::vector<char>        alphabet,
               std::vector<std::tuple<std::string, char, std::string>> const&
                                               transitions,
               std::string const&              initial,
               std::vector<std::string> const& accepting) {
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < states.size(); ++i) {
      if (!index.emplace(states[i], i).second) {
        throw Error(ErrorKind::invalid_dfa, "repeated state " + states[i]);
      }
    }
    auto state = [&](std::string const& name) {
      auto it = index.find(name);
      if (it == index.end()) {
        throw Error(ErrorKind::invalid_dfa, "unknown state " + name);
      }
      return it->second;
    };
    Dfa d;
    d.alphabet = std::move(alphabet);
    std::size_t const none = ~std::size_t{0};
    d.delta.assign(states.size(), std::vector<std::size_t>(d.alphabet.size(), none));
    for (auto const& [from, letter, to] : transitions) {
      auto it = std::find(d.alphabet.begin(), d.alphabet.end(), letter);
      if (it == d.alphabet.end()) {
        throw Error(ErrorKind::invalid_dfa,
                    "transition on unknown letter " + std::string(1, letter));
      }
      auto& slot = d.delta[state(from)][static_cast<std::size_t>(it - d.alphabet.begin())];
      std::size_t const target = state(to);
      if (slot != none && slot != target) {
        throw Error(ErrorKind::invalid_dfa,
                    "nondeterministic transition from " + from);
      }
      slot = target;
    }
    d.initial = state(initial);
    d.accepting.assign(states.size(), false);
    for (auto const& q : accepting) {
      d.accepting[state(q)] = true;
    }
    bool partial = false;
    for (auto const& row : d.delta) {
      partial = partial || std::find(row.begin(), row.end(), none) != row.end();
    }
    if (partial) {
      std::size_t const sink = states.size();
      states.push_back("#sink");
      d.accepting.push_back(false);
      d.delta.emplace_back(d.alphabet.size(), sink);
      for (auto& row : d.delta) {
        std::replace(row.begin(), row.end(), none, sink);
      }
    }
    d.states = std::move(states);
    d.validate();
    return d;
  }

  Dfa minimize(Dfa const& dfa) {
    dfa.validate();
    std::size_t const k = dfa.alphabet.size();
    // reachable states in breadth-first order
    std::vector<std::size_t> order{dfa.initial};
    std::vector<bool>        seen(dfa.states.size(), false);
    seen[dfa.initial] = true;
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (std::size_t a = 0; a < k; ++a) {
        std::size_t const q = dfa.delta[order[i]][a];
        if (!seen[q]) {
          seen[q] = true;
          order.push_back(q);
        }
      }
    }
    std::map<std::size_t, std::size_t> cls;
    for (std::size_t q : order) {
      cls[q] = dfa.accepting[q] ? 1 : 0;
    }
    std::size_t count = 0;
    while (true) {
      std::map<std::vector<std::size_t>, std::size_t> ids;
      std::map<std::size_t, std::size_t>              next;
      for (std::size_t q : order) {
        std::vector<std::size_t> sig{cls[q]};
        for (std::size_t a = 0; a < k; ++a) {
          sig.push_back(cls[dfa.delta[q][a]]);
        }
        next[q] = ids.emplace(sig, ids.size()).first->second;
      }
      cls = std::move(next);
      if (ids.size() == count) {
        break;
      }
      count = ids.size();
    }
    // ids above are numbered by first appearance in breadth-first order
    Dfa m;
    m.alphabet = dfa.alphabet;
    m.states.resize(count);
    m.accepting.resize(count);
    m.delta.assign(count, std::vector<std::size_t>(k));
    std::vector<bool> named(count, false);
    for (std::size_t q : order) {
      std::size_t const c = cls[q];
      if (named[c]) {
        continue;
      }
      named[c]       = true;
      m.states[c]    = dfa.states[q];
      m.accepting[c] = dfa.accepting[q];
      for (std::size_t a = 0; a < k; ++a) {
        m.delta[c][a] = cls[dfa.delta[q][a]];
      }
    }
    m.initial = cls[dfa.initial];
    return m;
  }

  Element SyntacticSemigroup::element_of(std::string_view w) const {
    if (w.empty()) {
      throw Error(ErrorKind::empty_word, "syntactic image of the empty word");
    }
    auto const& S = ordered.semigroup();
    return evaluate_word(S, *S.generators(), w);
  }

  namespace {
    SyntacticSemigroup build(Dfa m) {
      std::size_t const        nq = m.states.size(), k = m.alphabet.size();
      using Map                   = std::vector<std::size_t>;
      std::vector<Map>         maps;
      std::vector<std::string> words;
      std::map<Map, Element>   index;
      auto add = [&](Map f, std::string w) {
        auto [it, inserted] = index.emplace(f, static_cast<Element>(maps.size()));
        if (inserted) {
          maps.push_back(std::move(f));
          words.push_back(std::move(w));
        }
        return it->second;
      };
      std::vector<Element> letter_of(k);
      for (std::size_t a = 0; a < k; ++a) {
        Map f(nq);
        for (std::size_t q = 0; q < nq; ++q) {
          f[q] = m.delta[q][a];
        }
        letter_of[a] = add(std::move(f), std::string(1, m.alphabet[a]));
      }
      for (std::size_t i = 0; i < maps.size(); ++i) {
        for (std::size_t a = 0; a < k; ++a) {
          Map f(nq);
          for (std::size_t q = 0; q < nq; ++q) {
            f[q] = m.delta[maps[i][q]][a];
          }
          add(std::move(f), words[i] + m.alphabet[a]);
        }
      }
      std::size_t const                 n = maps.size();
      std::vector<std::vector<Element>> table(n, std::vector<Element>(n));
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          Map f(nq);
          for (std::size_t q = 0; q < nq; ++q) {
            f[q] = maps[j][maps[i][q]];
          }
          table[i][j] = index.at(f);
        }
      }
      GeneratorMap gens;
      for (std::size_t a = 0; a < k; ++a) {
        gens.set(m.alphabet[a], letter_of[a]);
      }
      auto S = FiniteSemigroup::validate(words, table, gens);

      // incl[p][q]: the language from p is contained in the one from q
      Relation incl(nq, std::vector<bool>(nq));
      for (std::size_t p = 0; p < nq; ++p) {
        for (std::size_t q = 0; q < nq; ++q) {
          incl[p][q] = !m.accepting[p] || m.accepting[q];
        }
      }
      for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t p = 0; p < nq; ++p) {
          for (std::size_t q = 0; q < nq; ++q) {
            if (!incl[p][q]) {
              continue;
            }
            for (std::size_t a = 0; a < k; ++a) {
              if (!incl[m.delta[p][a]][m.delta[q][a]]) {
                incl[p][q] = false;
                changed    = true;
                break;
              }
            }
          }
        }
      }
      Relation leq(n, std::vector<bool>(n));
      for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = 0; v < n; ++v) {
          bool ok = true;
          for (std::size_t p = 0; p < nq && ok; ++p) {
            ok = incl[maps[v][p]][maps[u][p]];
          }
          leq[u][v] = ok;
        }
      }
      return {OrderedSemigroup::validate(std::move(S), std::move(leq)),
              std::move(words), std::move(m)};
    }
  }  // namespace

  SyntacticSemigroup syntactic_semigroup(Dfa const& dfa) {
    return build(minimize(dfa));
  }

  Dfa concat_letter(Dfa const& dfa, char a) {
    dfa.validate();
    std::size_t const ai = dfa.letter_index(a);
    std::size_t const k  = dfa.alphabet.size();
    // state (q, f): q the state of dfa after w, f whether w ends in a after
    // an accepted prefix
    std::map<std::pair<std::size_t, bool>, std::size_t> index;
    std::vector<std::pair<std::size_t, bool>>           states;
    auto id = [&](std::size_t q, bool f) {
      auto [it, inserted] = index.emplace(std::make_pair(q, f), states.size());
      if (inserted) {
        states.emplace_back(q, f);
      }
      return it->second;
    };
    id(dfa.initial, false);
    Dfa out;
    out.alphabet = dfa.alphabet;
    for (std::size_t i = 0; i < states.size(); ++i) {
      auto const [q, f] = states[i];
      std::vector<std::size_t> row(k);
      for (std::size_t b = 0; b < k; ++b) {
        row[b] = id(dfa.delta[q][b], dfa.accepting[q] && b == ai);
      }
      out.delta.push_back(std::move(row));
      out.states.push_back("(" + dfa.states[q] + "," + (f ? "1" : "0") + ")");
      out.accepting.push_back(f);
    }
    out.initial = 0;
    return out;
  }

}  // namespace finsg
