#include "finsg/io.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace finsg::io {

  namespace {
    [[noreturn]] void bad(std::string const& what) {
      throw Error(ErrorKind::invalid_input, what);
    }

    json const& field(json const& j, char const* key) {
      if (!j.is_object() || !j.contains(key)) {
        bad(std::string("missing field \"") + key + "\"");
      }
      return j.at(key);
    }

    Element index_value(json const& v, std::size_t n, char const* what) {
      if (!v.is_number_integer() || v.get<long long>() < 0
          || static_cast<std::size_t>(v.get<long long>()) >= n) {
        bad(std::string(what) + " is not an element index");
      }
      return static_cast<Element>(v.get<long long>());
    }

    std::string label_value(json const& v) {
      if (v.is_string()) {
        return v.get<std::string>();
      }
      if (v.is_number_integer()) {
        return std::to_string(v.get<long long>());
      }
      bad("labels must be strings");
    }
  }  // namespace

  json parse_json(std::string const& text) {
    try {
      return json::parse(text);
    } catch (json::exception const& e) {
      bad(std::string("malformed JSON: ") + e.what());
    }
  }

  json read_json(std::string const& path) {
    std::string text;
    if (path == "-") {
      text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
      std::ifstream in(path);
      if (!in) {
        bad("cannot open " + path);
      }
      std::ostringstream ss;
      ss << in.rdbuf();
      text = ss.str();
    }
    return parse_json(text);
  }

  json to_json(FiniteSemigroup const& S) {
    json j;
    j["elements"] = S.labels();
    j["table"]    = S.table();
    if (auto const& g = S.generators()) {
      json gens = json::object();
      for (std::size_t i = 0; i < g->size(); ++i) {
        gens[std::string(1, g->alphabet()[i])] = g->images()[i];
      }
      j["generators"] = gens;
    }
    if (auto e = S.identity()) {
      j["identity"] = *e;
    }
    return j;
  }

  json to_json(OrderedSemigroup const& S) {
    json j       = to_json(S.semigroup());
    json pairs   = json::array();
    for (auto [s, t] : S.strict_pairs()) {
      pairs.push_back({s, t});
    }
    j["order"] = pairs;
    return j;
  }

  FiniteSemigroup semigroup_from_json(json const& j) {
    json const& t = field(j, "table");
    if (!t.is_array()) {
      bad("\"table\" must be an array of rows");
    }
    std::size_t const                 n = t.size();
    std::vector<std::vector<Element>> table;
    for (auto const& row : t) {
      if (!row.is_array()) {
        bad("\"table\" must be an array of rows");
      }
      std::vector<Element> r;
      for (auto const& v : row) {
        if (!v.is_number_integer() || v.get<long long>() < 0) {
          bad("table entries must be nonnegative integers");
        }
        r.push_back(static_cast<Element>(v.get<long long>()));
      }
      table.push_back(std::move(r));
    }
    std::vector<std::string> labels;
    if (j.contains("elements")) {
      if (!j["elements"].is_array()) {
        bad("\"elements\" must be an array");
      }
      for (auto const& v : j["elements"]) {
        labels.push_back(label_value(v));
      }
    } else {
      for (std::size_t i = 0; i < n; ++i) {
        labels.push_back(std::to_string(i));
      }
    }
    std::optional<GeneratorMap> gens;
    if (j.contains("generators")) {
      if (!j["generators"].is_object()) {
        bad("\"generators\" must be an object");
      }
      gens.emplace();
      for (auto const& [k, v] : j["generators"].items()) {
        if (k.size() != 1) {
          bad("generator names must be single characters");
        }
        gens->set(k[0], index_value(v, n, "generator image"));
      }
    }
    std::optional<Element> identity;
    if (j.contains("identity") && !j["identity"].is_null()) {
      identity = index_value(j["identity"], n, "identity");
    }
    return FiniteSemigroup::validate(std::move(labels), table, gens, identity);
  }

  OrderedSemigroup ordered_from_json(json const& j) {
    auto              S = semigroup_from_json(j);
    std::vector<Pair> pairs;
    if (j.contains("order")) {
      if (!j["order"].is_array()) {
        bad("\"order\" must be an array of pairs");
      }
      for (auto const& p : j["order"]) {
        if (!p.is_array() || p.size() != 2) {
          bad("\"order\" must be an array of pairs");
        }
        pairs.emplace_back(index_value(p[0], S.size(), "order entry"),
                           index_value(p[1], S.size(), "order entry"));
      }
    }
    return OrderedSemigroup::from_pairs(std::move(S), pairs);
  }

  json to_json(ReesMatrixSemigroup const& R) {
    return {{"a", R.a_size},
            {"b", R.b_size},
            {"group", to_json(R.group)},
            {"sandwich", R.sandwich}};
  }

  ReesMatrixSemigroup rees_from_json(json const& j) {
    auto size = [&](char const* key) {
      json const& v = field(j, key);
      if (!v.is_number_integer() || v.get<long long>() < 1) {
        bad(std::string("\"") + key + "\" must be a positive integer");
      }
      return static_cast<std::size_t>(v.get<long long>());
    };
    ReesMatrixSemigroup R{size("a"), size("b"),
                          semigroup_from_json(field(j, "group")), {}};
    json const& P = field(j, "sandwich");
    if (!P.is_array()) {
      bad("\"sandwich\" must be an array of rows");
    }
    for (auto const& row : P) {
      if (!row.is_array()) {
        bad("\"sandwich\" must be an array of rows");
      }
      std::vector<Element> r;
      for (auto const& v : row) {
        r.push_back(index_value(v, R.group.size(), "sandwich entry"));
      }
      R.sandwich.push_back(std::move(r));
    }
    return R;
  }

  json to_json(Dfa const& d) {
    json trans = json::object();
    for (std::size_t q = 0; q < d.states.size(); ++q) {
      for (std::size_t a = 0; a < d.alphabet.size(); ++a) {
        trans[d.states[q] + "," + d.alphabet[a]] = d.states[d.delta[q][a]];
      }
    }
    json alphabet = json::array();
    for (char a : d.alphabet) {
      alphabet.push_back(std::string(1, a));
    }
    json accepting = json::array();
    for (std::size_t q = 0; q < d.states.size(); ++q) {
      if (d.accepting[q]) {
        accepting.push_back(d.states[q]);
      }
    }
    return {{"states", d.states},
            {"alphabet", alphabet},
            {"transitions", trans},
            {"initial", d.states[d.initial]},
            {"accepting", accepting}};
  }

  Dfa dfa_from_json(json const& j) {
    auto strings = [&](char const* key) {
      json const& v = field(j, key);
      if (!v.is_array()) {
        bad(std::string("\"") + key + "\" must be an array");
      }
      std::vector<std::string> out;
      for (auto const& s : v) {
        out.push_back(label_value(s));
      }
      return out;
    };
    auto const        states = strings("states");
    std::vector<char> alphabet;
    for (auto const& a : strings("alphabet")) {
      if (a.size() != 1) {
        bad("letters must be single characters");
      }
      alphabet.push_back(a[0]);
    }
    std::vector<std::tuple<std::string, char, std::string>> transitions;
    json const& t = field(j, "transitions");
    if (!t.is_object()) {
      bad("\"transitions\" must be an object");
    }
    for (auto const& [key, to] : t.items()) {
      auto const comma = key.rfind(',');
      if (comma == std::string::npos || comma + 2 != key.size()) {
        bad("transition keys have the form \"state,letter\"");
      }
      transitions.emplace_back(key.substr(0, comma), key.back(),
                               label_value(to));
    }
    return make_dfa(states, alphabet, transitions,
                    label_value(field(j, "initial")), strings("accepting"));
  }

  std::vector<Element> map_from_json(json const&            j,
                                     FiniteSemigroup const& from,
                                     FiniteSemigroup const& to) {
    if (!j.is_object()) {
      throw Error(ErrorKind::partial_map, "a map must be a JSON object");
    }
    std::vector<Element> f(from.size());
    std::vector<bool>    set(from.size(), false);
    for (auto const& [k, v] : j.items()) {
      auto const x = from.find(k);
      auto const y = to.find(label_value(v));
      if (!x || !y) {
        throw Error(ErrorKind::partial_map, "unknown label in map entry " + k);
      }
      f[*x]   = *y;
      set[*x] = true;
    }
    for (Element x = 0; x < from.size(); ++x) {
      if (!set[x]) {
        throw Error(ErrorKind::partial_map, "no value for " + from.label(x));
      }
    }
    return f;
  }

  json labels(FiniteSemigroup const& S, std::vector<Element> const& xs) {
    json out = json::array();
    for (Element x : xs) {
      out.push_back(S.label(x));
    }
    return out;
  }

}  // namespace finsg::io
