#pragma once

// Brute-force reference computations used to produce expected values. They
// work on plain strings and integer vectors and share no code with the
// library.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace oracle {

  inline std::int64_t falling_factorial(std::int64_t k, std::int64_t n) {
    std::int64_t r = 1;
    for (std::int64_t i = 0; i < n; ++i) {
      r *= (k - i);
    }
    return r;
  }

  inline std::int64_t ipow(std::int64_t k, std::int64_t n) {
    std::int64_t r = 1;
    while (n-- > 0) {
      r *= k;
    }
    return r;
  }

  // All strings of length n over the first k letters, in lex order.
  inline std::vector<std::string> all_strings(int k, int n) {
    std::vector<std::string> out{""};
    for (int i = 0; i < n; ++i) {
      std::vector<std::string> next;
      for (auto const& s : out) {
        for (int c = 0; c < k; ++c) {
          next.push_back(s + static_cast<char>('a' + c));
        }
      }
      out = std::move(next);
    }
    return out;
  }

  inline bool has_repeated_letter(std::string const& s) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s.find(s[i], i + 1) != std::string::npos) {
        return true;
      }
    }
    return false;
  }

  // Longest factorization of an exponent vector into non-identity factors,
  // by exhaustive recursion over sub-vectors.
  inline int longest_factorization(std::vector<int> const& x) {
    if (std::all_of(x.begin(), x.end(), [](int e) { return e == 0; })) {
      return 0;
    }
    int              best = 0;
    std::vector<int> y(x.size(), 0);
    while (true) {
      std::size_t i = y.size();
      while (i > 0 && y[i - 1] == x[i - 1]) {
        y[i - 1] = 0;
        --i;
      }
      if (i == 0) {
        break;
      }
      ++y[i - 1];
      std::vector<int> rest(x.size());
      for (std::size_t j = 0; j < x.size(); ++j) {
        rest[j] = x[j] - y[j];
      }
      best = std::max(best, 1 + longest_factorization(rest));
    }
    return best;
  }

  using StringSeries = std::map<std::string, std::int64_t>;

  // Möbius function of X*/I by the triangular recursion
  //   mu(x) = [x = 1] - sum over splits x = yz with y nonempty of mu(z),
  // over the words of length <= n outside the ideal.
  inline StringSeries
  quotient_mobius(int k, int n, std::function<bool(std::string const&)> in_ideal) {
    StringSeries mu;
    for (int len = 0; len <= n; ++len) {
      for (auto const& x : all_strings(k, len)) {
        if (in_ideal(x)) {
          continue;
        }
        std::int64_t v = x.empty() ? 1 : 0;
        for (std::size_t i = 1; i <= x.size(); ++i) {
          auto it = mu.find(x.substr(i));
          if (it != mu.end()) {
            v -= it->second;
          }
        }
        mu[x] = v;
      }
    }
    std::erase_if(mu, [](auto const& kv) { return kv.second == 0; });
    return mu;
  }

  // Classical Möbius function of the free commutative monoid on k letters,
  // mu(x) = -sum_{y < x} mu(y), indexed by exponent vector, for degree <= n.
  inline std::map<std::vector<int>, std::int64_t> commutative_mobius(int k,
                                                                     int n) {
    std::map<std::vector<int>, std::int64_t> mu;
    std::function<void(std::vector<int>&, int, int)> gen;
    std::vector<std::vector<int>> vectors;
    gen = [&](std::vector<int>& v, int pos, int left) {
      if (pos == k) {
        vectors.push_back(v);
        return;
      }
      for (int e = 0; e <= left; ++e) {
        v[pos] = e;
        gen(v, pos + 1, left - e);
      }
      v[pos] = 0;
    };
    std::vector<int> v(k, 0);
    gen(v, 0, n);
    std::sort(vectors.begin(), vectors.end(), [](auto const& a, auto const& b) {
      int sa = 0, sb = 0;
      for (int e : a) sa += e;
      for (int e : b) sb += e;
      return sa != sb ? sa < sb : a < b;
    });
    for (auto const& x : vectors) {
      bool const   is_one = std::all_of(x.begin(), x.end(), [](int e) { return e == 0; });
      std::int64_t s      = is_one ? 1 : 0;
      for (auto const& [y, m] : mu) {
        bool below = y != x;
        for (int i = 0; i < k && below; ++i) {
          below = y[i] <= x[i];
        }
        if (below) {
          s -= m;
        }
      }
      mu[x] = s;
    }
    std::erase_if(mu, [](auto const& kv) { return kv.second == 0; });
    return mu;
  }

}  // namespace oracle
