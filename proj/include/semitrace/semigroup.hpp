#ifndef SEMITRACE_SEMIGROUP_HPP_
#define SEMITRACE_SEMIGROUP_HPP_

#include <algorithm>
#include <cstddef>
#include <functional>
#include <limits>
#include <memory>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "integer.hpp"

namespace semitrace {

  //! Largest modulus for which an Apery table is materialized.
  inline constexpr Int max_apery_modulus = Int(1) << 24;

  namespace detail {
    inline std::string join(std::span<Int const> xs) {
      std::string out;
      for (std::size_t i = 0; i < xs.size(); ++i) {
        out += (i == 0 ? "" : ",") + std::to_string(xs[i]);
      }
      return out;
    }

    // Shortest paths over residue classes mod `modulus`; each generator g is
    // an edge r -> r + g of weight g. Unreachable classes stay at `unreached`.
    inline constexpr Int unreached = std::numeric_limits<Int>::max();

    inline std::vector<Int> apery_table(std::span<Int const> gens,
                                        Int                  modulus) {
      if (modulus > max_apery_modulus) {
        fail(ErrorCode::ResourceLimit,
             "Apery table modulus " + std::to_string(modulus)
                 + " exceeds the supported maximum");
      }
      auto const       size = static_cast<std::size_t>(modulus);
      std::vector<Int> dist(size, unreached);
      using entry = std::pair<Int, Int>;
      std::priority_queue<entry, std::vector<entry>, std::greater<>> queue;
      dist[0] = 0;
      queue.emplace(0, 0);
      while (!queue.empty()) {
        auto [d, r] = queue.top();
        queue.pop();
        if (d != dist[r]) {
          continue;
        }
        for (Int g : gens) {
          Int const next = mod(r + g % modulus, modulus);
          Int const cand = add(d, g);
          if (cand < dist[next]) {
            dist[next] = cand;
            queue.emplace(cand, next);
          }
        }
      }
      return dist;
    }
  }  // namespace detail

  //! A numerical semigroup given by its minimal generators.
  //!
  //! All invariants are computed once at construction from the Apery set with
  //! respect to the multiplicity and are immutable afterwards; copies share
  //! the same data, so values may be passed around and across threads freely.
  class NumericalSemigroup {
   public:
    //! Minimalizes `gens` (sorted, duplicates and redundant generators
    //! dropped). Throws EmptyInput, InvalidGenerator (an entry <= 0) or
    //! NonPrimitive (gcd > 1; see normalize()).
    explicit NumericalSemigroup(std::vector<Int> gens) {
      if (gens.empty()) {
        detail::fail(ErrorCode::EmptyInput, "generator list is empty");
      }
      for (Int g : gens) {
        if (g <= 0) {
          detail::fail(ErrorCode::InvalidGenerator,
                       "generators must be positive, got "
                           + std::to_string(g));
        }
      }
      if (gcd_of(gens) != 1) {
        detail::fail(ErrorCode::NonPrimitive,
                     "gcd(" + detail::join(gens) + ") = "
                         + std::to_string(gcd_of(gens)) + " != 1");
      }
      std::sort(gens.begin(), gens.end());
      gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

      auto data = std::make_shared<Data>();
      Int  m    = gens.front();
      data->apery = detail::apery_table(gens, m);

      // g is redundant iff g - h lies in H for some other generator h.
      auto in_h = [&](Int x) {
        return x >= 0 && x >= data->apery[static_cast<std::size_t>(x % m)];
      };
      for (Int g : gens) {
        bool redundant = false;
        for (Int h : data->gens) {
          if (in_h(g - h)) {
            redundant = true;
            break;
          }
        }
        if (!redundant) {
          data->gens.push_back(g);
        }
      }
      populate(*data);
      _data = std::move(data);
    }

    NumericalSemigroup(std::initializer_list<Int> gens)
        : NumericalSemigroup(std::vector<Int>(gens)) {}

    std::span<Int const> generators() const noexcept {
      return _data->gens;
    }

    Int multiplicity() const noexcept {
      return _data->gens.front();
    }

    std::size_t embedding_dimension() const noexcept {
      return _data->gens.size();
    }

    bool is_trivial() const noexcept {
      return multiplicity() == 1;
    }

    bool contains(Int x) const noexcept {
      if (x < 0) {
        return false;
      }
      return x >= _data->apery[static_cast<std::size_t>(x % multiplicity())];
    }

    //! Apery set with respect to the multiplicity; entry i is the least
    //! element of H congruent to i.
    std::span<Int const> apery() const noexcept {
      return _data->apery;
    }

    //! Apery set with respect to an arbitrary nonzero element n of H.
    std::vector<Int> apery_set(Int n) const {
      if (n <= 0 || !contains(n)) {
        detail::fail(ErrorCode::NotAnElement,
                     std::to_string(n) + " is not a nonzero element of H");
      }
      if (n == multiplicity()) {
        return _data->apery;
      }
      return detail::apery_table(_data->gens, n);
    }

    //! -1 for <1>.
    Int frobenius() const noexcept {
      return _data->frobenius;
    }

    Int conductor() const noexcept {
      return _data->frobenius + 1;
    }

    Int genus() const noexcept {
      return _data->genus;
    }

    //! n(H) = |{x in H : x < Fr(H)}|.
    Int nongaps_count() const noexcept {
      return _data->frobenius + 1 - _data->genus;
    }

    std::vector<Int> gaps() const {
      std::vector<Int> out;
      out.reserve(static_cast<std::size_t>(_data->genus));
      Int const m = multiplicity();
      for (Int w : _data->apery) {
        for (Int x = w - m; x > 0; x -= m) {
          out.push_back(x);
        }
      }
      std::sort(out.begin(), out.end());
      return out;
    }

    std::span<Int const> pseudo_frobenius() const noexcept {
      return _data->pf;
    }

    //! Cohen-Macaulay type; 1 for <1> by convention.
    std::size_t type() const noexcept {
      return is_trivial() ? 1 : _data->pf.size();
    }

    bool is_symmetric() const noexcept {
      return _data->symmetric;
    }

    bool is_almost_symmetric() const noexcept {
      auto const& pf  = _data->pf;
      std::size_t tau = pf.size();
      for (std::size_t i = 1; i <= tau / 2; ++i) {
        // pf is 0-indexed: f_i = pf[i-1], f_{tau-i} = pf[tau-i-1].
        if (pf[i - 1] + pf[tau - i - 1] != _data->frobenius) {
          return false;
        }
      }
      return true;
    }

    //! Type 2 with PF = {Fr/2, Fr}.
    bool is_pseudo_symmetric() const noexcept {
      auto const& pf = _data->pf;
      return pf.size() == 2 && _data->frobenius % 2 == 0
             && pf[0] == _data->frobenius / 2;
    }

    friend bool operator==(NumericalSemigroup const& x,
                           NumericalSemigroup const& y) noexcept {
      return x._data == y._data
             || std::equal(x._data->gens.begin(),
                           x._data->gens.end(),
                           y._data->gens.begin(),
                           y._data->gens.end());
    }

   private:
    struct Data {
      std::vector<Int> gens;
      std::vector<Int> apery;
      std::vector<Int> pf;
      Int              frobenius = -1;
      Int              genus     = 0;
      bool             symmetric = true;
    };

    static void populate(Data& data) {
      Int const m = data.gens.front();
      Int       max_w = 0;
      for (Int w : data.apery) {
        max_w = std::max(max_w, w);
        data.genus = add(data.genus, w / m);
      }
      data.frobenius = max_w - m;
      if (m == 1) {
        return;
      }
      // Maximal elements of Ap(H, m) under x <=_H y iff y - x in H; it is
      // enough to test single generator steps since Ap is downward closed.
      for (Int w : data.apery) {
        if (w == 0) {
          continue;
        }
        bool maximal = true;
        for (Int g : data.gens) {
          Int const next = w + g;
          if (data.apery[static_cast<std::size_t>(next % m)] == next) {
            maximal = false;
            break;
          }
        }
        if (maximal) {
          data.pf.push_back(w - m);
        }
      }
      std::sort(data.pf.begin(), data.pf.end());

      Int const nongaps = data.frobenius + 1 - data.genus;
      detail::ensure(nongaps >= 0 && nongaps <= data.genus,
                     "n(H) + g(H) = Fr(H) + 1 with n <= g violated");
      detail::ensure(!data.pf.empty() && data.pf.back() == data.frobenius,
                     "max PF(H) differs from Fr(H)");
      bool const type_one = data.pf.size() == 1;
      detail::ensure(type_one == (nongaps == data.genus),
                     "symmetry tests disagree: type vs n(H) = g(H)");
      data.symmetric = type_one;
    }

    std::shared_ptr<Data const> _data;
  };

  //! Divides out the gcd of `gens` and returns the primitive semigroup
  //! together with the divisor.
  inline std::pair<NumericalSemigroup, Int> normalize(std::vector<Int> gens) {
    if (gens.empty()) {
      detail::fail(ErrorCode::EmptyInput, "generator list is empty");
    }
    for (Int g : gens) {
      if (g <= 0) {
        detail::fail(ErrorCode::InvalidGenerator,
                     "generators must be positive, got " + std::to_string(g));
      }
    }
    Int const d = gcd_of(gens);
    for (Int& g : gens) {
      g /= d;
    }
    return {NumericalSemigroup(std::move(gens)), d};
  }

}  // namespace semitrace

#endif  // SEMITRACE_SEMIGROUP_HPP_
