#include "finsg/terms.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <set>
#include <thread>

#include "finsg/order.hpp"

namespace finsg {

  // Term

  Term Term::letter(std::string name) {
    if (name.empty()) {
      throw Error(ErrorKind::invalid_input, "empty letter name");
    }
    Term t;
    t._kind = Kind::letter;
    t._name = std::move(name);
    return t;
  }

  Term Term::concat(std::vector<Term> parts) {
    std::vector<Term> flat;
    for (auto& p : parts) {
      if (p._kind == Kind::concat) {
        for (auto& q : p._parts) {
          flat.push_back(std::move(q));
        }
      } else {
        flat.push_back(std::move(p));
      }
    }
    if (flat.size() == 1) {
      return std::move(flat.front());
    }
    Term t;
    t._parts = std::move(flat);
    return t;
  }

  Term Term::power(Term base, long exponent) {
    if (exponent < 1) {
      throw Error(ErrorKind::invalid_input,
                  "integer exponent " + std::to_string(exponent) + " < 1");
    }
    if (base.is_empty()) {
      throw Error(ErrorKind::invalid_input, "power of the empty term");
    }
    Term t;
    t._kind     = Kind::power;
    t._exponent = exponent;
    t._parts.push_back(std::move(base));
    return t;
  }

  Term Term::omega(Term base, long k) {
    if (k < -1) {
      throw Error(ErrorKind::invalid_input,
                  "omega exponent w" + std::to_string(k) + " below w-1");
    }
    if (base.is_empty()) {
      throw Error(ErrorKind::invalid_input, "power of the empty term");
    }
    Term t;
    t._kind     = Kind::power;
    t._omega    = true;
    t._exponent = k;
    t._parts.push_back(std::move(base));
    return t;
  }

  Term Term::empty() {
    return Term{};
  }

  std::vector<std::string> Term::variables() const {
    std::set<std::string> out;
    std::vector<Term const*> stack{this};
    while (!stack.empty()) {
      auto const* t = stack.back();
      stack.pop_back();
      if (t->_kind == Kind::letter) {
        out.insert(t->_name);
      }
      for (auto const& p : t->_parts) {
        stack.push_back(&p);
      }
    }
    return {out.begin(), out.end()};
  }

  bool Term::has_omega() const {
    if (_kind == Kind::power && _omega) {
      return true;
    }
    return std::any_of(_parts.begin(), _parts.end(),
                       [](Term const& p) { return p.has_omega(); });
  }

  // Parsing and printing

  namespace {
    class Parser {
     public:
      explicit Parser(std::string_view text) : _text(text) {}

      Term parse() {
        Term t = sequence();
        skip();
        if (_pos != _text.size()) {
          fail("unexpected '" + std::string(1, _text[_pos]) + "'");
        }
        return t;
      }

     private:
      [[noreturn]] void fail(std::string const& what) const {
        throw Error(ErrorKind::syntax_error,
                    what + " at position " + std::to_string(_pos));
      }

      void skip() {
        while (_pos < _text.size()
               && (_text[_pos] == ' ' || _text[_pos] == '\t'
                   || _text[_pos] == '\n')) {
          ++_pos;
        }
      }

      bool peek(char c) {
        skip();
        return _pos < _text.size() && _text[_pos] == c;
      }

      void expect(char c) {
        if (!peek(c)) {
          fail(std::string("expected '") + c + "'");
        }
        ++_pos;
      }

      Term sequence() {
        std::vector<Term> parts;
        while (true) {
          skip();
          if (_pos == _text.size() || _text[_pos] == ')') {
            break;
          }
          parts.push_back(factor());
        }
        if (parts.empty()) {
          fail("expected a term");
        }
        return Term::concat(std::move(parts));
      }

      Term factor() {
        Term t = primary();
        while (peek('^')) {
          ++_pos;
          t = exponent(std::move(t));
        }
        return t;
      }

      Term primary() {
        skip();
        char const c = _text[_pos];
        if (c >= 'a' && c <= 'z') {
          ++_pos;
          return Term::letter(std::string(1, c));
        }
        if (c == '[') {
          std::size_t const close = _text.find(']', _pos);
          if (close == std::string_view::npos || close == _pos + 1) {
            fail("malformed gram letter");
          }
          std::string name(_text.substr(_pos + 1, close - _pos - 1));
          _pos = close + 1;
          return Term::letter(std::move(name));
        }
        if (c == '(') {
          ++_pos;
          Term t = sequence();
          expect(')');
          return t;
        }
        fail("unexpected '" + std::string(1, c) + "'");
      }

      long number() {
        skip();
        std::size_t const start = _pos;
        while (_pos < _text.size() && _text[_pos] >= '0' && _text[_pos] <= '9') {
          ++_pos;
        }
        if (start == _pos) {
          fail("expected a number");
        }
        if (_pos - start > 9) {
          fail("exponent too large");
        }
        return std::stol(std::string(_text.substr(start, _pos - start)));
      }

      Term exponent(Term base) {
        skip();
        if (_pos == _text.size()) {
          fail("missing exponent");
        }
        if (_text[_pos] == 'w') {
          ++_pos;
          return Term::omega(std::move(base));
        }
        if (_text[_pos] == '(') {
          ++_pos;
          if (!peek('w')) {
            long const k = number();
            expect(')');
            if (k < 1) {
              fail("integer exponent must be at least 1");
            }
            return Term::power(std::move(base), k);
          }
          ++_pos;
          long k = 0;
          if (peek('+')) {
            ++_pos;
            k = number();
          } else if (peek('-')) {
            ++_pos;
            k = -number();
            if (k < -1) {
              fail("omega exponent below w-1");
            }
          }
          expect(')');
          return Term::omega(std::move(base), k);
        }
        long const k = number();
        if (k < 1) {
          fail("integer exponent must be at least 1");
        }
        return Term::power(std::move(base), k);
      }

      std::string_view _text;
      std::size_t      _pos = 0;
    };
  }  // namespace

  Term parse_term(std::string_view text) {
    return Parser(text).parse();
  }

  std::string to_string(Term const& t) {
    switch (t.kind()) {
      case Term::Kind::letter:
        return t.name().size() == 1 ? t.name() : "[" + t.name() + "]";
      case Term::Kind::concat: {
        std::string out;
        for (auto const& p : t.parts()) {
          out += to_string(p);
        }
        return out;
      }
      case Term::Kind::power: {
        std::string out = t.base().kind() == Term::Kind::letter
                              ? to_string(t.base())
                              : "(" + to_string(t.base()) + ")";
        if (!t.is_omega()) {
          return out + "^" + std::to_string(t.exponent());
        }
        if (t.exponent() == 0) {
          return out + "^w";
        }
        if (t.exponent() < 0) {
          return out + "^(w-1)";
        }
        return out + "^(w+" + std::to_string(t.exponent()) + ")";
      }
    }
    return {};
  }

  // Evaluation

  namespace {
    class Evaluator {
     public:
      explicit Evaluator(FiniteSemigroup const& S) : _S(S) {
        for (Element s = 0; s < S.size(); ++s) {
          _omega.push_back(omega_power(S, s));
          _inverse.push_back(omega_minus_one(S, s));
        }
      }

      Element operator()(Term const& t, Assignment const& v) const {
        switch (t.kind()) {
          case Term::Kind::letter: {
            auto it = v.find(t.name());
            if (it == v.end()) {
              throw Error(ErrorKind::unassigned_letter, t.name());
            }
            if (it->second >= _S.size()) {
              throw Error(ErrorKind::out_of_range,
                          "value of " + t.name() + " not in S");
            }
            return it->second;
          }
          case Term::Kind::concat: {
            if (t.parts().empty()) {
              throw Error(ErrorKind::invalid_input, "empty term");
            }
            Element x = (*this)(t.parts().front(), v);
            for (std::size_t i = 1; i < t.parts().size(); ++i) {
              x = _S.product(x, (*this)(t.parts()[i], v));
            }
            return x;
          }
          case Term::Kind::power: {
            Element const x = (*this)(t.base(), v);
            if (!t.is_omega()) {
              return pow(x, static_cast<std::size_t>(t.exponent()));
            }
            if (t.exponent() < 0) {
              return _inverse[x];
            }
            Element y = _omega[x];
            for (long k = 0; k < t.exponent(); ++k) {
              y = _S.product(y, x);
            }
            return y;
          }
        }
        return 0;
      }

      Element pow(Element x, std::size_t k) const {
        Element result = x;
        Element base   = x;
        --k;
        while (k > 0) {
          if (k & 1U) {
            result = _S.product(result, base);
          }
          base = _S.product(base, base);
          k >>= 1U;
        }
        return result;
      }

     private:
      FiniteSemigroup const& _S;
      std::vector<Element>   _omega, _inverse;
    };

    template <typename Pred>
    IdentityResult scan_assignments(FiniteSemigroup const&          S,
                                    std::vector<std::string> const& vars,
                                    unsigned                        jobs,
                                    Pred const&                     ok) {
      std::size_t const n = S.size();
      std::size_t       total = 1;
      for (std::size_t i = 0; i < vars.size(); ++i) {
        if (total > std::numeric_limits<std::size_t>::max() / n) {
          throw Error(ErrorKind::bound_exceeded, "too many assignments");
        }
        total *= n;
      }
      auto decode = [&](std::size_t idx) {
        Assignment a;
        for (std::size_t i = vars.size(); i-- > 0;) {
          a[vars[i]] = static_cast<Element>(idx % n);
          idx /= n;
        }
        return a;
      };

      std::atomic<std::size_t> first{total};
      auto work = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t idx = lo; idx < hi && idx < first.load(); ++idx) {
          if (!ok(decode(idx))) {
            std::size_t cur = first.load();
            while (idx < cur && !first.compare_exchange_weak(cur, idx)) {
            }
            return;
          }
        }
      };

      jobs = std::max(1U, std::min<unsigned>(jobs, 64));
      if (jobs == 1 || total < 1024) {
        work(0, total);
      } else {
        std::vector<std::thread> pool;
        std::size_t const        chunk = (total + jobs - 1) / jobs;
        for (unsigned j = 0; j < jobs; ++j) {
          std::size_t const lo = j * chunk;
          pool.emplace_back(work, lo, std::min(total, lo + chunk));
        }
        for (auto& th : pool) {
          th.join();
        }
      }
      if (first.load() == total) {
        return {};
      }
      return {false, decode(first.load())};
    }

    std::vector<std::string> merged_variables(Term const& lhs, Term const& rhs) {
      auto a = lhs.variables();
      auto b = rhs.variables();
      std::vector<std::string> out;
      std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                     std::back_inserter(out));
      return out;
    }
  }  // namespace

  Element evaluate(Term const&            t,
                   FiniteSemigroup const& S,
                   Assignment const&      v) {
    return Evaluator(S)(t, v);
  }

  IdentityResult satisfies_identity(FiniteSemigroup const& S,
                                    Term const&            lhs,
                                    Term const&            rhs,
                                    unsigned               jobs) {
    Evaluator const eval(S);
    return scan_assignments(
        S, merged_variables(lhs, rhs), jobs,
        [&](Assignment const& a) { return eval(lhs, a) == eval(rhs, a); });
  }

  IdentityResult satisfies_inequality(OrderedSemigroup const& S,
                                      Term const&             lhs,
                                      Term const&             rhs,
                                      unsigned                jobs) {
    Evaluator const eval(S.semigroup());
    return scan_assignments(
        S.semigroup(), merged_variables(lhs, rhs), jobs,
        [&](Assignment const& a) { return S.leq(eval(lhs, a), eval(rhs, a)); });
  }

  // Unfolding, prefixes and suffixes

  Term unfold(Term const& t, long m) {
    switch (t.kind()) {
      case Term::Kind::letter:
        return t;
      case Term::Kind::concat: {
        std::vector<Term> parts;
        for (auto const& p : t.parts()) {
          parts.push_back(unfold(p, m));
        }
        return Term::concat(std::move(parts));
      }
      case Term::Kind::power: {
        long const k = t.is_omega() ? m + t.exponent() : t.exponent();
        return k == 0 ? Term::empty() : Term::power(unfold(t.base(), m), k);
      }
    }
    return t;
  }

  std::string to_word(Term const& t) {
    switch (t.kind()) {
      case Term::Kind::letter:
        if (t.name().size() != 1) {
          throw Error(ErrorKind::invalid_input,
                      "letter [" + t.name() + "] is not a single character");
        }
        return t.name();
      case Term::Kind::concat: {
        std::string out;
        for (auto const& p : t.parts()) {
          out += to_word(p);
        }
        return out;
      }
      case Term::Kind::power: {
        if (t.is_omega()) {
          throw Error(ErrorKind::invalid_input, "term has omega powers");
        }
        std::string const base = to_word(t.base());
        std::string       out;
        for (long k = 0; k < t.exponent(); ++k) {
          out += base;
        }
        return out;
      }
    }
    return {};
  }

  namespace {
    // The unfolded word when it has length at most n, else its prefix and
    // suffix of length n.
    struct Shadow {
      bool        complete = true;
      std::string word, prefix, suffix;

      [[nodiscard]] std::string const& head() const {
        return complete ? word : prefix;
      }
      [[nodiscard]] std::string const& tail() const {
        return complete ? word : suffix;
      }
    };

    std::string first(std::string const& w, std::size_t n) {
      return w.substr(0, std::min(n, w.size()));
    }
    std::string last(std::string const& w, std::size_t n) {
      return w.substr(w.size() - std::min(n, w.size()));
    }

    Shadow make_shadow(std::string w, std::size_t n) {
      if (w.size() <= n) {
        return {true, std::move(w), {}, {}};
      }
      return {false, {}, first(w, n), last(w, n)};
    }

    Shadow join(Shadow const& a, Shadow const& b, std::size_t n) {
      if (a.complete && b.complete) {
        return make_shadow(a.word + b.word, n);
      }
      return {false, {}, first(a.head() + b.head(), n),
              last(a.tail() + b.tail(), n)};
    }

    Shadow repeat(Shadow const& a, std::size_t k, std::size_t n) {
      if (!a.complete) {
        return a;
      }
      std::string w;
      for (std::size_t i = 0; i < k && w.size() <= n; ++i) {
        w += a.word;
      }
      if (w.size() > n) {
        return {false, {}, first(w, n), last(w, n)};
      }
      return make_shadow(std::move(w), n);
    }

    Shadow shadow(Term const& t, std::size_t n) {
      switch (t.kind()) {
        case Term::Kind::letter:
          if (t.name().size() != 1) {
            throw Error(ErrorKind::invalid_input,
                        "letter [" + t.name() + "] is not a single character");
          }
          return make_shadow(t.name(), n);
        case Term::Kind::concat: {
          Shadow s;
          for (auto const& p : t.parts()) {
            s = join(s, shadow(p, n), n);
          }
          return s;
        }
        case Term::Kind::power: {
          Shadow const base = shadow(t.base(), n);
          if (!t.is_omega()) {
            return repeat(base, static_cast<std::size_t>(t.exponent()), n);
          }
          // every unfolding long enough to exceed n
          return repeat(base, n + 2, n);
        }
      }
      return {};
    }

    class Encoder {
     public:
      explicit Encoder(std::size_t n) : _n(n) {}

      // Grams of c t ending inside t, where c is the length-n context (or
      // shorter at the start of the word).
      Term encode(std::string const& c, Term const& t) const {
        switch (t.kind()) {
          case Term::Kind::letter:
            if (c.size() < _n) {
              return Term::empty();
            }
            return Term::letter(c + t.name());
          case Term::Kind::concat: {
            std::vector<Term> parts;
            std::string       ctx = c;
            for (auto const& p : t.parts()) {
              parts.push_back(encode(ctx, p));
              ctx = after(ctx, p);
            }
            return Term::concat(std::move(parts));
          }
          case Term::Kind::power:
            return t.is_omega() ? encode_omega(c, t) : encode_power(c, t);
        }
        return Term::empty();
      }

      // t_n(c . t)
      [[nodiscard]] std::string after(std::string const& c, Term const& t) const {
        Shadow const s = shadow(t, _n);
        return s.complete ? last(c + s.word, _n) : s.suffix;
      }

     private:
      [[nodiscard]] bool long_enough(Term const& t) const {
        Shadow const s = shadow(t, _n);
        return !s.complete || s.word.size() >= _n;
      }

      static Term raise(Term const& t, long k) {
        if (k == 1) {
          return t;
        }
        return Term::power(t, k);
      }

      Term encode_power(std::string const& c, Term const& t) const {
        Term const& u = t.base();
        long const  m = t.exponent();
        if (!long_enough(u)) {
          return encode(c, Term::concat(std::vector<Term>(m, u)));
        }
        Term head = encode(c, u);
        if (m == 1) {
          return head;
        }
        Term const body = encode(after({}, u), u);
        return Term::concat({std::move(head), raise(body, m - 1)});
      }

      Term encode_omega(std::string const& c, Term const& t) const {
        Term const&  u = t.base();
        Shadow const s = shadow(u, _n);
        long         r = 1;
        if (s.complete && s.word.size() < _n) {
          r = static_cast<long>((_n + s.word.size() - 1) / s.word.size());
        }
        Term const        U = r == 1 ? u : Term::concat(std::vector<Term>(r, u));
        std::string const ctx  = after({}, U);
        Term const        body = encode(ctx, U);
        std::vector<Term> parts{encode(c, U), Term::omega(body, -1)};
        if (t.exponent() < 0) {
          parts.push_back(Term::omega(body, -1));
          if (r > 1) {
            parts.push_back(encode(ctx, raise(u, r - 1)));
          }
        } else if (t.exponent() > 0) {
          parts.push_back(encode(ctx, raise(u, t.exponent())));
        }
        return Term::concat(std::move(parts));
      }

      std::size_t _n;
    };
  }  // namespace

  std::pair<std::string, std::string> term_i_t(Term const& t, std::size_t n) {
    Shadow const s = shadow(t, n);
    return {std::string(s.head()), std::string(s.tail())};
  }

  Term debruijn_encode_term(Term const& t, std::size_t n) {
    Shadow const s = shadow(t, n);
    if (s.complete) {
      throw Error(ErrorKind::term_too_short,
                  "unfolded length " + std::to_string(s.word.size())
                      + " is at most " + std::to_string(n));
    }
    if (n == 0) {
      return t;
    }
    return Encoder(n).encode({}, t);
  }

  VDnCheck check_VDn(Term const&            u,
                     Term const&            v,
                     std::size_t            n,
                     FiniteSemigroup const& T,
                     unsigned               jobs) {
    Term eu = debruijn_encode_term(u, n);
    Term ev = debruijn_encode_term(v, n);
    auto res = satisfies_identity(T, eu, ev, jobs);
    return {term_i_t(u, n) == term_i_t(v, n), res.holds, std::move(res),
            std::move(eu), std::move(ev)};
  }

}  // namespace finsg
