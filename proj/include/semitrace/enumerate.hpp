#ifndef SEMITRACE_ENUMERATE_HPP_
#define SEMITRACE_ENUMERATE_HPP_

#include <cstddef>
#include <functional>
#include <numeric>
#include <vector>

#include "error.hpp"
#include "integer.hpp"
#include "threegen.hpp"

namespace semitrace {

  //! All minimal triples n1 < n2 < n3 <= bound with gcd 1, lexicographically.
  inline std::vector<Triple> threegen_triples(Int bound) {
    if (bound < 0) {
      detail::fail(ErrorCode::BadRange, "bound must be nonnegative");
    }
    std::vector<Triple> out;
    for (Int n1 = 2; n1 <= bound; ++n1) {
      for (Int n2 = n1 + 1; n2 <= bound; ++n2) {
        if (n2 % n1 == 0) {
          continue;
        }
        for (Int n3 = n2 + 1; n3 <= bound; ++n3) {
          if (std::gcd(std::gcd(n1, n2), n3) != 1
              || detail::in_two_generated(n3, n1, n2)) {
            continue;
          }
          out.push_back({n1, n2, n3});
        }
      }
    }
    return out;
  }

  //! All minimal generating sets of numerical semigroups with largest
  //! generator <= bound and at most max_edim generators, in lexicographic
  //! order (<1> included).
  inline std::vector<std::vector<Int>> bounded_generator_sets(Int bound,
                                                              Int max_edim) {
    if (bound < 1 || max_edim < 1) {
      detail::fail(ErrorCode::BadRange, "bounds must be positive");
    }
    std::vector<std::vector<Int>> out;
    std::vector<Int>              prefix;
    auto const size = static_cast<std::size_t>(bound) + 1;

    // reachable[x]: x is in the monoid generated by `prefix`.
    std::function<void(std::vector<bool> const&, Int)> extend
        = [&](std::vector<bool> const& reachable, Int start) {
            if (static_cast<Int>(prefix.size()) == max_edim) {
              return;
            }
            for (Int g = start; g <= bound; ++g) {
              if (reachable[static_cast<std::size_t>(g)]) {
                continue;
              }
              prefix.push_back(g);
              if (gcd_of(prefix) == 1) {
                out.push_back(prefix);
              }
              std::vector<bool> next = reachable;
              for (auto x = static_cast<std::size_t>(g); x < size; ++x) {
                if (next[x - static_cast<std::size_t>(g)]) {
                  next[x] = true;
                }
              }
              extend(next, g + 1);
              prefix.pop_back();
            }
          };
    std::vector<bool> start(size, false);
    start[0] = true;
    extend(start, 1);
    return out;
  }

}  // namespace semitrace

#endif  // SEMITRACE_ENUMERATE_HPP_
