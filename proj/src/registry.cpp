#include <algorithm>
#include <cctype>
#include <map>

#include "finsg/terms.hpp"

namespace finsg {

  namespace {
    struct Entry {
      char const*                              description;
      std::vector<std::pair<char const*, char const*>> identities;
    };

    std::map<std::string, Entry> const& table() {
      static std::map<std::string, Entry> const entries{
          {"S", {"all finite semigroups", {{"x", "x"}}}},
          {"I", {"trivial", {{"x", "y"}}}},
          {"Sl", {"semilattices", {{"x^2", "x"}, {"xy", "yx"}}}},
          {"N",
           {"nilpotent",
            {{"x^w y", "x^w"}, {"y x^w", "x^w"}, {"x^w", "y^w"}}}},
          {"D", {"definite", {{"xy^w", "y^w"}}}},
          {"K", {"reverse definite", {{"x^w y", "x^w"}}}},
          {"LI", {"locally trivial", {{"x^w y x^w", "x^w"}}}},
          {"LSl",
           {"local semilattices",
            {{"x^w y x^w y x^w", "x^w y x^w"},
             {"x^w y x^w z x^w", "x^w z x^w y x^w"}}}},
          {"LZ", {"left zero", {{"xy", "x"}}}},
          {"RZ", {"right zero", {{"xy", "y"}}}},
          {"RB", {"rectangular bands", {{"x^2", "x"}, {"xyx", "x"}}}},
          {"B", {"bands", {{"x^2", "x"}}}},
          {"A", {"aperiodic", {{"x^(w+1)", "x^w"}}}},
          {"G", {"groups", {{"x^w y", "y"}, {"y x^w", "y"}}}},
          {"ReG", {"rectangular groups", {{"x y^w x^w", "x"}}}},
          {"CS", {"completely simple", {{"x(yx)^w", "x"}}}},
          {"CR", {"completely regular", {{"x^(w+1)", "x"}}}},
          {"J",
           {"J-trivial", {{"(xy)^w", "(xy)^w x"}, {"(xy)^w", "(yx)^w"}}}},
          {"DA",
           {"regular D-classes are aperiodic subsemigroups",
            {{"(xy)^w (yx)^w (xy)^w", "(xy)^w"}, {"x^(w+1)", "x^w"}}}},
          {"DO",
           {"regular D-classes are rectangular groups",
            {{"(xy)^w (yx)^w (xy)^w", "(xy)^w"}}}},
          {"DS",
           {"regular D-classes are subsemigroups",
            {{"((xy)^w (yx)^w (xy)^w)^w", "(xy)^w"}}}},
      };
      return entries;
    }

    // "D12" -> ("D", 12)
    std::optional<std::pair<std::string, std::size_t>>
    parametrized(std::string const& name) {
      std::size_t i = 0;
      while (i < name.size() && std::isalpha(static_cast<unsigned char>(name[i]))) {
        ++i;
      }
      std::string const head = name.substr(0, i);
      std::string const tail = name.substr(i);
      if ((head != "D" && head != "K" && head != "Ab") || tail.empty()
          || tail.size() > 6
          || !std::all_of(tail.begin(), tail.end(), [](char c) {
               return std::isdigit(static_cast<unsigned char>(c));
             })) {
        return std::nullopt;
      }
      std::size_t const n = std::stoul(tail);
      if (n == 0) {
        return std::nullopt;
      }
      return std::make_pair(head, n);
    }

    std::vector<Term> letters(std::string const& stem, std::size_t n) {
      std::vector<Term> out;
      for (std::size_t i = 1; i <= n; ++i) {
        out.push_back(Term::letter(stem + std::to_string(i)));
      }
      return out;
    }

    // Products of n elements, each with one factorization.
    std::map<Element, std::vector<Element>> products(FiniteSemigroup const& S,
                                                     std::size_t           n) {
      std::map<Element, std::vector<Element>> cur;
      for (Element s = 0; s < S.size(); ++s) {
        cur.emplace(s, std::vector<Element>{s});
      }
      for (std::size_t k = 1; k < n; ++k) {
        std::map<Element, std::vector<Element>> next;
        for (auto const& [p, f] : cur) {
          for (Element s = 0; s < S.size(); ++s) {
            auto [it, inserted] = next.emplace(S.product(p, s), f);
            if (inserted) {
              it->second.push_back(s);
            }
          }
        }
        cur = std::move(next);
      }
      return cur;
    }

    MembershipResult definite_check(FiniteSemigroup const&    S,
                                    PseudovarietyBasis const& basis,
                                    std::size_t               n,
                                    bool                      left) {
      std::string const stem = left ? "x" : "y";
      std::string const free = left ? "y" : "x";
      for (auto const& [p, f] : products(S, n)) {
        for (Element s = 0; s < S.size(); ++s) {
          Element const q = left ? S.product(p, s) : S.product(s, p);
          if (q != p) {
            Assignment a{{free, s}};
            for (std::size_t i = 0; i < n; ++i) {
              a[stem + std::to_string(i + 1)] = f[i];
            }
            return {false, basis.basis.front(), std::move(a)};
          }
        }
      }
      return {};
    }
  }  // namespace

  std::vector<std::string> const& pseudovariety_names() {
    static std::vector<std::string> const names = [] {
      std::vector<std::string> out;
      for (auto const& [name, entry] : table()) {
        out.push_back(name);
      }
      return out;
    }();
    return names;
  }

  PseudovarietyBasis pseudovariety_basis(std::string const& name) {
    if (auto it = table().find(name); it != table().end()) {
      PseudovarietyBasis out{name, it->second.description, {}};
      for (auto const& [lhs, rhs] : it->second.identities) {
        out.basis.push_back({parse_term(lhs), parse_term(rhs)});
      }
      return out;
    }
    auto const param = parametrized(name);
    if (!param) {
      throw Error(ErrorKind::unknown_pseudovariety, name);
    }
    auto const& [head, n] = *param;
    if (head == "Ab") {
      return {name,
              "abelian groups of exponent dividing " + std::to_string(n),
              {{Term::concat({Term::power(Term::letter("x"),
                                          static_cast<long>(n)),
                              Term::letter("y")}),
                Term::letter("y")},
               {parse_term("xy"), parse_term("yx")}}};
    }
    if (head == "D") {
      auto ys = letters("y", n);
      auto lhs = ys;
      lhs.insert(lhs.begin(), Term::letter("x"));
      return {name, "definite of degree " + std::to_string(n),
              {{Term::concat(std::move(lhs)), Term::concat(std::move(ys))}}};
    }
    auto xs  = letters("x", n);
    auto lhs = xs;
    lhs.push_back(Term::letter("y"));
    return {name, "reverse definite of degree " + std::to_string(n),
            {{Term::concat(std::move(lhs)), Term::concat(std::move(xs))}}};
  }

  MembershipResult pseudovariety_membership(FiniteSemigroup const& S,
                                            std::string const&     name,
                                            unsigned               jobs) {
    auto const basis = pseudovariety_basis(name);
    if (auto param = parametrized(name); param && param->first != "Ab") {
      return definite_check(S, basis, param->second, param->first == "K");
    }
    for (auto const& id : basis.basis) {
      auto res = satisfies_identity(S, id.lhs, id.rhs, jobs);
      if (!res.holds) {
        return {false, id, std::move(res.witness)};
      }
    }
    return {};
  }

}  // namespace finsg
