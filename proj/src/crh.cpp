#include <map>

#include "finsg/terms.hpp"
#include "finsg/words.hpp"

namespace finsg {

  GroupSpec GroupSpec::abelian(std::size_t n) {
    if (n < 2) {
      throw Error(ErrorKind::invalid_input, "abelian exponent must be >= 2");
    }
    return {Kind::abelian_mod_n, n};
  }

  namespace {
    class CrhSolver {
     public:
      explicit CrhSolver(GroupSpec h) : _h(h) {}

      CrhResult equal(std::string const& u, std::string const& v) {
        if (u == v) {
          return {true, 0};
        }
        if (u.empty() || v.empty()) {
          return {false, 1};
        }
        auto key = u < v ? std::make_pair(u, v) : std::make_pair(v, u);
        if (auto it = _memo.find(key); it != _memo.end()) {
          return it->second;
        }
        CrhResult const r = compute(u, v);
        _memo.emplace(std::move(key), r);
        return r;
      }

     private:
      CrhResult compute(std::string const& u, std::string const& v) {
        std::string const c = content(u);
        if (c != content(v)) {
          return {false, 1};
        }
        if (!equal(zero_funcs(u).first, zero_funcs(v).first).equal) {
          return {false, 2};
        }
        if (!equal(one_funcs(u).first, one_funcs(v).first).equal) {
          return {false, 3};
        }
        bool const ok = group_part(u, v, c.size());
        return {ok, ok ? 0 : 4};
      }

      bool group_part(std::string const& u, std::string const& v, std::size_t k) {
        using K = GroupSpec::Kind;
        if (_h.kind == K::trivial) {
          return true;
        }
        if (k == 1) {
          return _h.kind == K::all_groups ? u.size() == v.size()
                                          : u.size() % _h.n == v.size() % _h.n;
        }
        std::vector<std::string> reps;
        auto ids = [&](std::string const& w) {
          std::vector<std::size_t> out;
          for (auto const& f : characteristic_sequence(w)) {
            std::size_t i = 0;
            while (i < reps.size() && !equal(f.factor, reps[i]).equal) {
              ++i;
            }
            if (i == reps.size()) {
              reps.push_back(f.factor);
            }
            out.push_back(i);
          }
          return out;
        };
        auto const iu = ids(u);
        auto const iv = ids(v);
        if (_h.kind == K::all_groups) {
          return iu == iv;
        }
        std::vector<std::size_t> count(reps.size(), 0);
        for (auto i : iu) {
          ++count[i];
        }
        for (auto i : iv) {
          count[i] += _h.n - 1;
        }
        for (auto c : count) {
          if (c % _h.n != 0) {
            return false;
          }
        }
        return true;
      }

      GroupSpec                                                 _h;
      std::map<std::pair<std::string, std::string>, CrhResult> _memo;
    };
  }  // namespace

  CrhResult equal_in_CRH(std::string const& u,
                         std::string const& v,
                         GroupSpec          h) {
    if (u.empty() || v.empty()) {
      throw Error(ErrorKind::empty_word, "word problem on the empty word");
    }
    return CrhSolver(h).equal(u, v);
  }

}  // namespace finsg
