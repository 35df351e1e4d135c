// finsg: command-line front end of the finite semigroup toolkit.

#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "finsg/constructions.hpp"
#include "finsg/dfa.hpp"
#include "finsg/green.hpp"
#include "finsg/hull.hpp"
#include "finsg/io.hpp"
#include "finsg/library.hpp"
#include "finsg/order.hpp"
#include "finsg/report.hpp"
#include "finsg/terms.hpp"
#include "finsg/words.hpp"

using namespace finsg;
using io::json;

namespace {

  struct Globals {
    std::string format = "text";
    unsigned    jobs   = 1;

    [[nodiscard]] bool text() const {
      return format == "text";
    }
  };

  Globals globals;

  void emit(json const& j, std::string const& text) {
    if (globals.text()) {
      std::cout << text;
      if (!text.empty() && text.back() != '\n') {
        std::cout << '\n';
      }
    } else {
      std::cout << j.dump(2) << '\n';
    }
  }

  FiniteSemigroup load(std::string const& path) {
    return io::semigroup_from_json(io::read_json(path));
  }

  // "trivial", "z<n>", "s<n>" or a JSON file
  FiniteSemigroup group_argument(std::string const& g) {
    if (g == "trivial") {
      return library::trivial();
    }
    if (g.size() > 1 && (g[0] == 'z' || g[0] == 's')
        && g.find_first_not_of("0123456789", 1) == std::string::npos) {
      std::size_t const n = std::stoul(g.substr(1));
      if (n == 0 || (g[0] == 's' && n > 6)) {
        throw Error(ErrorKind::invalid_input, "group " + g);
      }
      return g[0] == 'z' ? library::cyclic_group(n) : library::symmetric_group(n);
    }
    return load(g);
  }

  FiniteSemigroup named(std::string const& name) {
    if (name == "u1") {
      return library::u1();
    }
    if (name == "trivial") {
      return library::trivial();
    }
    if (name == "n2") {
      return library::null_semigroup(2);
    }
    if (name == "lz2") {
      return library::left_zero(2);
    }
    if (name == "rz2") {
      return library::right_zero(2);
    }
    if (name == "rb22") {
      return library::rectangular_band(2, 2);
    }
    if (name.size() > 1 && name[0] == 't'
        && name.find_first_not_of("0123456789", 1) == std::string::npos) {
      std::size_t const n = std::stoul(name.substr(1));
      if (n == 0 || n > 5) {
        throw Error(ErrorKind::invalid_input, "transformation monoid " + name);
      }
      return library::full_transformation_monoid(n);
    }
    return group_argument(name);
  }

  std::string witness_text(Assignment const& a, FiniteSemigroup const& S) {
    std::string out;
    for (auto const& [k, v] : a) {
      out += (out.empty() ? "" : " ") + (k.size() == 1 ? k : "[" + k + "]") + "="
             + S.label(v);
    }
    return out;
  }

  json witness_json(Assignment const& a, FiniteSemigroup const& S) {
    json out = json::object();
    for (auto const& [k, v] : a) {
      out[k] = S.label(v);
    }
    return out;
  }

  int identity_outcome(IdentityResult const& r, FiniteSemigroup const& S) {
    json j = {{"holds", r.holds}};
    std::string text = r.holds ? "holds" : "fails";
    if (r.witness) {
      j["witness"] = witness_json(*r.witness, S);
      text += "\nwitness: " + witness_text(*r.witness, S);
    }
    emit(j, text);
    return r.holds ? 0 : 1;
  }

  std::string bool_text(bool b) {
    return b ? "true" : "false";
  }

  std::string flags_text(json const& j) {
    return flatten_text(j);
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite semigroup toolkit"};
  app.require_subcommand(1);
  app.add_option("--format", globals.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--jobs", globals.jobs, "Worker threads for scans")
      ->check(CLI::Range(1, 64));

  int          status = 0;
  std::string  path, path2, path3, lhs, rhs, name;
  std::vector<std::string> pv;

  // analyze
  auto* analyze = app.add_subcommand("analyze", "Structural report of a semigroup");
  analyze->add_option("path", path, "Semigroup JSON ('-' for stdin)")->required();
  analyze->add_option("--pv", pv, "Pseudovarieties to test ('all' for every one)");
  analyze->callback([&] {
    ReportOptions opt{path, pv, globals.jobs};
    auto const    r = finsg::analyze(load(path), opt);
    emit(r, flatten_text(r));
  });

  // construct
  auto* construct = app.add_subcommand("construct", "Build a semigroup, print its JSON");
  construct->require_subcommand(1);
  std::size_t p = 0;
  auto*       kp = construct->add_subcommand("kp", "The Rees matrix semigroup K_p");
  kp->add_option("p", p)->required();
  kp->callback([&] { std::cout << io::to_json(k_p(p)).dump() << '\n'; });

  auto* bullet = construct->add_subcommand("bullet", "K_p with identity, via synthesis");
  bullet->add_option("p", p)->required();
  bullet->callback([&] { std::cout << io::to_json(bullet_gadget(p)).dump() << '\n'; });

  std::size_t a_size = 1, b_size = 1;
  std::string group = "trivial", sandwich;
  auto*       rees  = construct->add_subcommand("rees", "Rees matrix semigroup M(A,G,B;P)");
  rees->add_option("--a", a_size, "Number of rows A")->required();
  rees->add_option("--b", b_size, "Number of columns B")->required();
  rees->add_option("--group", group, "trivial, z<n>, s<n> or a group JSON");
  rees->add_option("--sandwich", sandwich, "B x A matrix of group indices as JSON");
  rees->add_option("--from", path, "Rees JSON document instead of the options");
  rees->callback([&] {
    auto build = [&]() -> ReesMatrixSemigroup {
      if (!path.empty()) {
        return io::rees_from_json(io::read_json(path));
      }
      auto G = group_argument(group);
      if (sandwich.empty()) {
        std::vector<std::vector<Element>> P(
            b_size, std::vector<Element>(a_size, *G.identity()));
        return {a_size, b_size, std::move(G), std::move(P)};
      }
      return io::rees_from_json({{"a", a_size},
                                 {"b", b_size},
                                 {"group", io::to_json(G)},
                                 {"sandwich", io::parse_json(sandwich)}});
    };
    std::cout << io::to_json(rees_matrix(build())).dump() << '\n';
  });

  auto* synth = construct->add_subcommand("synthesis", "M(S,T,f) = S + S1 x T1 x S1");
  synth->add_option("S", path, "Semigroup S")->required();
  synth->add_option("T", path2, "Semigroup T")->required();
  synth->add_option("f", path3, "Map from labels of S1 to labels of T1")->required();
  synth->callback([&] {
    auto const S = load(path);
    auto const T = load(path2);
    auto const f = io::map_from_json(io::read_json(path3), adjoin_identity(S),
                                     adjoin_identity(T));
    std::cout << io::to_json(synthesis(S, T, f).carrier).dump() << '\n';
  });

  auto* semi = construct->add_subcommand("semidirect", "Semidirect product S * T");
  semi->add_option("S", path, "Semigroup S")->required();
  semi->add_option("T", path2, "Semigroup T")->required();
  semi->add_option("action", path3, "{\"t\": {\"s\": \"s'\"}} for every t in T")
      ->required();
  semi->callback([&] {
    auto const S = load(path);
    auto const T = load(path2);
    auto const j = io::read_json(path3);
    if (!j.is_object()) {
      throw Error(ErrorKind::invalid_input, "action must be a JSON object");
    }
    std::vector<std::vector<Element>> action(T.size());
    for (Element t = 0; t < T.size(); ++t) {
      if (!j.contains(T.label(t))) {
        throw Error(ErrorKind::partial_map, "no action for " + T.label(t));
      }
      action[t] = io::map_from_json(j.at(T.label(t)), S, S);
    }
    std::cout << io::to_json(semidirect_product(S, T, action)).dump() << '\n';
  });

  auto* product = construct->add_subcommand("product", "Direct product S x T");
  product->add_option("S", path)->required();
  product->add_option("T", path2)->required();
  product->callback([&] {
    std::cout << io::to_json(direct_product(load(path), load(path2))).dump() << '\n';
  });

  bool  fresh  = false;
  auto* adjoin = construct->add_subcommand("adjoin", "S1, or S with a new identity");
  adjoin->add_option("S", path)->required();
  adjoin->add_flag("--new", fresh, "Always add a new identity");
  adjoin->callback([&] {
    auto const S = load(path);
    std::cout << io::to_json(fresh ? adjoin_new_identity(S) : adjoin_identity(S)).dump()
              << '\n';
  });

  auto* lib = construct->add_subcommand(
      "named", "u1, trivial, n2, lz2, rz2, rb22, z<n>, s<n>, t<n>");
  lib->add_option("name", name)->required();
  lib->callback([&] { std::cout << io::to_json(named(name)).dump() << '\n'; });

  // check
  auto* check = app.add_subcommand("check", "Identities, inequalities, pseudovarieties");
  check->require_subcommand(1);
  auto* id = check->add_subcommand("id", "S satisfies lhs = rhs");
  id->add_option("S", path)->required();
  id->add_option("lhs", lhs)->required();
  id->add_option("rhs", rhs)->required();
  id->callback([&] {
    auto const S = load(path);
    status = identity_outcome(
        satisfies_identity(S, parse_term(lhs), parse_term(rhs), globals.jobs), S);
  });

  auto* ineq = check->add_subcommand("ineq", "ordered S satisfies lhs <= rhs");
  ineq->add_option("S", path, "Semigroup JSON with an \"order\" field")->required();
  ineq->add_option("lhs", lhs)->required();
  ineq->add_option("rhs", rhs)->required();
  ineq->callback([&] {
    auto const S = io::ordered_from_json(io::read_json(path));
    status       = identity_outcome(
        satisfies_inequality(S, parse_term(lhs), parse_term(rhs), globals.jobs),
        S.semigroup());
  });

  auto* pvc = check->add_subcommand("pv", "Membership in a pseudovariety");
  pvc->add_option("S", path)->required();
  pvc->add_option("name", name)->required();
  pvc->callback([&] {
    auto const S = load(path);
    auto const r = pseudovariety_membership(S, name, globals.jobs);
    json       j = {{"pseudovariety", name}, {"holds", r.holds}};
    std::string text = std::string(r.holds ? "member" : "not a member");
    if (r.failed) {
      std::string const identity
          = to_string(r.failed->lhs) + " = " + to_string(r.failed->rhs);
      j["failed"]  = identity;
      j["witness"] = witness_json(*r.witness, S);
      text += "\nfails " + identity + "\nwitness: " + witness_text(*r.witness, S);
    }
    emit(j, text);
    status = r.holds ? 0 : 1;
  });

  std::string h = "groups";
  auto*       crh = check->add_subcommand("crh", "Word problem of CR with groups in H");
  crh->add_option("u", lhs)->required();
  crh->add_option("v", rhs)->required();
  crh->set_help_flag("--help", "Print this help message and exit");
  crh->add_option("--h,--groups", h, "trivial, ab:<n> or groups");
  crh->callback([&] {
    GroupSpec spec;
    if (h == "trivial") {
      spec = GroupSpec::trivial();
    } else if (h == "groups") {
      spec = GroupSpec::all_groups();
    } else if (h.rfind("ab:", 0) == 0
               && h.find_first_not_of("0123456789", 3) == std::string::npos
               && h.size() > 3 && h.size() < 10) {
      spec = GroupSpec::abelian(std::stoul(h.substr(3)));
    } else {
      throw Error(ErrorKind::invalid_input, "unknown group family " + h);
    }
    auto const r = equal_in_CRH(lhs, rhs, spec);
    json       j = {{"equal", r.equal}, {"failed_condition", r.failed_condition}};
    emit(j, r.equal ? "equal" : "different (condition "
                                    + std::to_string(r.failed_condition) + ")");
    status = r.equal ? 0 : 1;
  });

  std::size_t n = 1;
  auto*       vdn = check->add_subcommand("vdn", "The V*D_n criterion tested in T");
  vdn->add_option("u", lhs)->required();
  vdn->add_option("v", rhs)->required();
  vdn->add_option("--n", n)->required();
  vdn->add_option("--in", path, "Semigroup T")->required();
  vdn->callback([&] {
    auto const T = load(path);
    auto const r = check_VDn(parse_term(lhs), parse_term(rhs), n, T, globals.jobs);
    json j = {{"i_t_equal", r.i_t_equal},
              {"encoded_identity_holds", r.encoded_identity_holds},
              {"u_encoded", to_string(r.u_encoded)},
              {"v_encoded", to_string(r.v_encoded)}};
    std::string text = "i_t_equal=" + bool_text(r.i_t_equal)
                       + "\nencoded_identity_holds="
                       + bool_text(r.encoded_identity_holds)
                       + "\nu_encoded=" + to_string(r.u_encoded)
                       + "\nv_encoded=" + to_string(r.v_encoded);
    if (r.encoded.witness) {
      j["witness"] = witness_json(*r.encoded.witness, T);
      text += "\nwitness: " + witness_text(*r.encoded.witness, T);
    }
    emit(j, text);
    status = r.i_t_equal && r.encoded_identity_holds ? 0 : 1;
  });

  // words
  auto* words = app.add_subcommand("words", "Word combinatorics");
  words->require_subcommand(1);
  std::string w, x, alphabet;
  std::vector<std::string> avoid;
  auto add_word = [&](CLI::App* sub, std::string& target, char const* label) {
    sub->add_option(label, target)->required();
  };

  auto* wc = words->add_subcommand("content", "Letters of w");
  add_word(wc, w, "w");
  wc->callback([&] { emit({{"content", content(w)}}, content(w)); });

  auto factorization = [&](Factorization const& f) {
    json j = {{"prefix", f.prefix},
              {"marker", std::string(1, f.marker)},
              {"remainder", f.remainder}};
    emit(j, "prefix=" + f.prefix + "\nmarker=" + f.marker + "\nremainder="
                + f.remainder);
  };
  auto* lbf = words->add_subcommand("lbf", "Left basic factorization");
  add_word(lbf, w, "w");
  lbf->callback([&] { factorization(left_basic_factorization(w)); });
  auto* rbf = words->add_subcommand("rbf", "Right basic factorization");
  add_word(rbf, w, "w");
  rbf->callback([&] { factorization(right_basic_factorization(w)); });

  auto* zero = words->add_subcommand("zero", "0(w) and its marker");
  add_word(zero, w, "w");
  zero->callback([&] {
    auto const [u, m] = zero_funcs(w);
    emit({{"word", u}, {"marker", std::string(1, m)}}, u + "\n" + m);
  });
  auto* one = words->add_subcommand("one", "1(w) and its marker");
  add_word(one, w, "w");
  one->callback([&] {
    auto const [u, m] = one_funcs(w);
    emit({{"word", u}, {"marker", std::string(1, m)}}, u + "\n" + m);
  });

  auto* chi = words->add_subcommand("chi", "Characteristic sequence");
  add_word(chi, w, "w");
  chi->callback([&] {
    json        j = json::array();
    std::string text;
    for (auto const& f : characteristic_sequence(w)) {
      j.push_back({{"factor", f.factor}, {"start", f.start}, {"end", f.end}});
      text += f.factor + " " + std::to_string(f.start) + " "
              + std::to_string(f.end) + "\n";
    }
    emit(j, text);
  });

  auto* db = words->add_subcommand("debruijn", "Sequence of (n+1)-grams");
  db->add_option("n", n)->required();
  add_word(db, w, "w");
  db->callback([&] {
    auto const grams = debruijn_encode(w, n);
    emit(grams, join_grams(grams) + "\n");
  });

  auto* dbt = words->add_subcommand("debruijn-term", "Encoding of an omega-term");
  dbt->add_option("n", n)->required();
  add_word(dbt, w, "term");
  dbt->callback([&] {
    auto const e = to_string(debruijn_encode_term(parse_term(w), n));
    emit({{"encoded", e}}, e);
  });

  auto* stretch = words->add_subcommand("stretch", "Word r with s a unique suffix of xrs");
  add_word(stretch, x, "x");
  add_word(stretch, w, "s");
  stretch->add_option("--avoid", avoid, "Words that x r must differ from");
  stretch->add_option("--alphabet", alphabet, "Alphabet (default: letters of x and s)");
  stretch->callback([&] {
    std::string const A = alphabet.empty() ? content(x + w) : alphabet;
    auto const        r = stretch_word(x, avoid, w, A);
    emit({{"r", r}}, r);
  });

  char a = 'a', b = 'b';
  auto* connect = words->add_subcommand("connect", "Word t with aw a unique suffix of wt");
  connect->add_option("w", w)->required();
  connect->add_option("a", a)->required();
  connect->add_option("b", b)->required();
  connect->callback([&] {
    auto const t = connect_word(w, a, b);
    emit({{"t", t}}, t);
  });

  auto* sub = words->add_subcommand("subword", "u is a scattered subword of w");
  add_word(sub, x, "u");
  add_word(sub, w, "w");
  sub->callback([&] {
    bool const r = is_subword(x, w);
    emit({{"subword", r}}, bool_text(r));
    status = r ? 0 : 1;
  });

  auto* greedy = words->add_subcommand("greedy", "Left-greedy occurrence of u in w");
  add_word(greedy, x, "u");
  add_word(greedy, w, "w");
  greedy->callback([&] {
    auto const occ = greedy_subword(w, x);
    if (!occ) {
      emit({{"occurs", false}}, "absent");
      status = 1;
      return;
    }
    std::string pos;
    for (auto k : occ->positions) {
      pos += (pos.empty() ? "" : ".") + std::to_string(k);
    }
    emit({{"occurs", true}, {"positions", occ->positions}, {"remainder", occ->remainder}},
         "positions=" + pos + "\nremainder=" + occ->remainder);
  });

  // hull, classify
  std::size_t bound = 8;
  auto*       hull = app.add_subcommand("hull", "Translational hull of a small semigroup");
  hull->add_option("S", path)->required();
  hull->add_option("--bound", bound, "Largest size enumerated by brute force");
  hull->callback([&] {
    auto const S     = load(path);
    auto const omega = enumerate_hull(S, bound);
    std::set<Bitranslation> inner;
    for (Element s = 0; s < S.size(); ++s) {
      inner.insert(inner_bitranslation(S, s));
    }
    auto const r = reductivity(S);
    json j = {{"hull_size", omega.size()},
              {"inner_size", inner.size()},
              {"left_reductive", r.left_reductive},
              {"right_reductive", r.right_reductive},
              {"weakly_reductive", r.weakly_reductive}};
    emit(j, "|Omega(S)|=" + std::to_string(omega.size()) + "\n|inner|="
                + std::to_string(inner.size()) + "\nleft_reductive="
                + bool_text(r.left_reductive) + "\nright_reductive="
                + bool_text(r.right_reductive) + "\nweakly_reductive="
                + bool_text(r.weakly_reductive));
  });

  auto* cls = app.add_subcommand("classify", "LM/RM/GGM/WGGM and kernel torsion");
  cls->add_option("S", path)->required();
  cls->callback([&] {
    auto const S = load(path);
    auto const c = classify(S);
    auto const t = torsion_checks(induced_subsemigroup(S, kernel(S)));
    json j = {{"lm", c.lm},
              {"rm", c.rm},
              {"ggm", c.ggm},
              {"wggm", c.wggm},
              {"kernel_torsion",
               {{"has_torsion", t.has_torsion},
                {"full_torsion", t.full_torsion},
                {"plenty_left", t.plenty_left},
                {"plenty_right", t.plenty_right}}}};
    emit(j, flags_text(j));
  });

  // orders and languages
  auto* orderable = app.add_subcommand("orderable", "Existence of a nontrivial stable order");
  orderable->add_option("S", path)->required();
  orderable->callback([&] {
    auto const S = load(path);
    auto const r = is_orderable(S, globals.jobs);
    json       j = {{"orderable", r.orderable}};
    std::string text = bool_text(r.orderable);
    if (r.witness) {
      j["witness"] = io::to_json(*r.witness);
      for (auto [s, t] : r.witness->strict_pairs()) {
        text += "\n" + S.label(s) + " < " + S.label(t);
      }
    }
    emit(j, text);
    status = r.orderable ? 0 : 1;
  });

  std::optional<std::size_t> limit;
  auto* orders = app.add_subcommand("orders", "All stable partial orders");
  orders->add_option("S", path)->required();
  orders->add_option("--limit", limit, "Stop after this many orders");
  orders->callback([&] {
    auto const S   = load(path);
    auto const all = enumerate_stable_orders(S, limit);
    json        j  = json::array();
    std::string text = std::to_string(all.size()) + " orders\n";
    for (auto const& o : all) {
      j.push_back(io::to_json(o)["order"]);
      std::string line;
      for (auto [s, t] : o.strict_pairs()) {
        line += (line.empty() ? "" : " ") + S.label(s) + "<" + S.label(t);
      }
      text += (line.empty() ? "(trivial)" : line) + "\n";
    }
    emit(j, text);
  });

  std::optional<char> concat;
  auto* syn = app.add_subcommand("syntactic", "Ordered syntactic semigroup of a DFA");
  syn->add_option("dfa", path)->required();
  syn->add_option("--concat-letter", concat, "Use the language L a instead");
  syn->callback([&] {
    Dfa d = io::dfa_from_json(io::read_json(path));
    if (concat) {
      d = concat_letter(d, *concat);
    }
    auto const s = syntactic_semigroup(d);
    json       j = io::to_json(s.ordered);
    std::string text = "size=" + std::to_string(s.ordered.semigroup().size())
                       + "\nelements=";
    for (std::size_t i = 0; i < s.words.size(); ++i) {
      text += (i ? "." : "") + s.words[i];
    }
    for (auto [u, v] : s.ordered.strict_pairs()) {
      text += "\n" + s.words[u] + " < " + s.words[v];
    }
    emit(j, text);
  });

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (Error const& e) {
    std::cerr << "finsg: " << e.what() << '\n';
    return 2;
  } catch (std::exception const& e) {
    std::cerr << "finsg: " << e.what() << '\n';
    return 2;
  }
  return status;
}
