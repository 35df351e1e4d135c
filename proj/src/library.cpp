#include "finsg/library.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

namespace finsg::library {

  namespace {
    using Table = std::vector<std::vector<Element>>;

    Table square(std::size_t n) {
      return Table(n, std::vector<Element>(n, 0));
    }

    std::string map_label(std::vector<Element> const& f) {
      std::string s = "[";
      for (std::size_t i = 0; i < f.size(); ++i) {
        s += (i ? "," : "") + std::to_string(f[i]);
      }
      return s + "]";
    }

    FiniteSemigroup maps_semigroup(std::vector<std::vector<Element>> maps,
                                   bool compose_left) {
      std::sort(maps.begin(), maps.end());
      std::map<std::vector<Element>, Element> index;
      for (std::size_t i = 0; i < maps.size(); ++i) {
        index[maps[i]] = static_cast<Element>(i);
      }
      auto                     table = square(maps.size());
      std::vector<std::string> labels;
      std::size_t const        d = maps.empty() ? 0 : maps[0].size();
      for (std::size_t i = 0; i < maps.size(); ++i) {
        labels.push_back(map_label(maps[i]));
        for (std::size_t j = 0; j < maps.size(); ++j) {
          auto const&          f = compose_left ? maps[i] : maps[j];
          auto const&          g = compose_left ? maps[j] : maps[i];
          std::vector<Element> fg(d);
          for (std::size_t x = 0; x < d; ++x) {
            fg[x] = f[g[x]];
          }
          table[i][j] = index.at(fg);
        }
      }
      return FiniteSemigroup::validate(std::move(labels), table);
    }
  }  // namespace

  FiniteSemigroup trivial() {
    return FiniteSemigroup::validate({"e"}, {{0}});
  }

  FiniteSemigroup cyclic_group(std::size_t n) {
    auto table = square(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        table[i][j] = static_cast<Element>((i + j) % n);
      }
    }
    return FiniteSemigroup::from_table(table);
  }

  FiniteSemigroup u1() {
    return FiniteSemigroup::from_table({{0, 0}, {0, 1}});
  }

  FiniteSemigroup left_zero(std::size_t n) {
    auto table = square(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::fill(table[i].begin(), table[i].end(), static_cast<Element>(i));
    }
    return FiniteSemigroup::from_table(table);
  }

  FiniteSemigroup right_zero(std::size_t n) {
    auto table = square(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::iota(table[i].begin(), table[i].end(), Element{0});
    }
    return FiniteSemigroup::from_table(table);
  }

  FiniteSemigroup null_semigroup(std::size_t n) {
    // element 0 is the zero, the others are labelled a, b, ...
    std::vector<std::string> labels{"0"};
    for (std::size_t i = 1; i < n; ++i) {
      labels.push_back(std::string(1, static_cast<char>('a' + i - 1)));
    }
    return FiniteSemigroup::validate(std::move(labels), square(n));
  }

  FiniteSemigroup rectangular_band(std::size_t a, std::size_t b) {
    std::size_t const        n     = a * b;
    auto                     table = square(n);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) {
      labels.push_back("(" + std::to_string(i / b) + "," + std::to_string(i % b)
                       + ")");
      for (std::size_t j = 0; j < n; ++j) {
        table[i][j] = static_cast<Element>((i / b) * b + j % b);
      }
    }
    return FiniteSemigroup::validate(std::move(labels), table);
  }

  FiniteSemigroup monogenic(std::size_t index, std::size_t period) {
    std::size_t const        n     = index + period - 1;
    auto                     table = square(n);
    std::vector<std::string> labels;
    auto reduce = [&](std::size_t k) {  // exponent k >= 1 -> element
      if (k > n) {
        k = index + (k - index) % period;
      }
      return static_cast<Element>(k - 1);
    };
    for (std::size_t i = 1; i <= n; ++i) {
      labels.push_back("s^" + std::to_string(i));
      for (std::size_t j = 1; j <= n; ++j) {
        table[i - 1][j - 1] = reduce(i + j);
      }
    }
    return FiniteSemigroup::validate(std::move(labels), table);
  }

  FiniteSemigroup symmetric_group(std::size_t n) {
    std::vector<Element> p(n);
    std::iota(p.begin(), p.end(), Element{0});
    std::vector<std::vector<Element>> maps;
    do {
      maps.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return maps_semigroup(std::move(maps), true);
  }

  FiniteSemigroup full_transformation_monoid(std::size_t n, bool compose_left) {
    std::vector<std::vector<Element>> maps;
    std::vector<Element>              f(n, 0);
    while (true) {
      maps.push_back(f);
      std::size_t i = 0;
      while (i < n && ++f[i] == n) {
        f[i++] = 0;
      }
      if (i == n) {
        break;
      }
    }
    return maps_semigroup(std::move(maps), compose_left);
  }

}  // namespace finsg::library
