#ifndef SEMITRACE_FAMILIES_HPP_
#define SEMITRACE_FAMILIES_HPP_

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "ideal.hpp"
#include "integer.hpp"
#include "semigroup.hpp"

namespace semitrace {

  //! Closed-form claims attached to a family member. Unset fields make no
  //! claim.
  struct Predictions {
    std::optional<Int>              frobenius;
    std::optional<std::vector<Int>> pseudo_frobenius;
    std::optional<std::size_t>      type;
    std::optional<Int>              residue;
    std::optional<bool>             symmetric;
    std::optional<bool>             almost_symmetric;
    std::optional<bool>             pseudo_symmetric;
    std::optional<bool>             nearly_gorenstein;
    std::optional<bool>             trace_equals_m;
    std::optional<bool>             trace_equals_conductor;
  };

  struct FamilyMember {
    NumericalSemigroup semigroup;
    //! Generators in the order the family formula lists them.
    std::vector<Int> labeled;
    //! permutation[i] = index of labeled[i] in semigroup.generators().
    std::vector<std::size_t> permutation;
    Predictions              predictions;
    //! False when the family degenerates and the predictions do not apply.
    bool predictions_apply = true;
  };

  //! One line per prediction that the general machinery contradicts.
  inline std::vector<std::string> check_predictions(FamilyMember const& f) {
    std::vector<std::string> out;
    if (!f.predictions_apply) {
      return out;
    }
    auto const& h = f.semigroup;
    auto const& p = f.predictions;
    auto        report = [&](char const* what, auto want, auto got) {
      if (want != got) {
        out.push_back(std::string(what) + ": predicted "
                      + std::to_string(want) + ", computed "
                      + std::to_string(got));
      }
    };
    if (p.frobenius) {
      report("frobenius", *p.frobenius, h.frobenius());
    }
    if (p.type) {
      report("type", *p.type, h.type());
    }
    if (p.pseudo_frobenius) {
      auto pf = h.pseudo_frobenius();
      if (!std::equal(pf.begin(),
                      pf.end(),
                      p.pseudo_frobenius->begin(),
                      p.pseudo_frobenius->end())) {
        out.push_back("pseudo_frobenius: predicted ["
                      + detail::join(*p.pseudo_frobenius) + "], computed ["
                      + detail::join(pf) + "]");
      }
    }
    if (p.symmetric) {
      report("symmetric", *p.symmetric, h.is_symmetric());
    }
    if (p.almost_symmetric) {
      report("almost_symmetric", *p.almost_symmetric, h.is_almost_symmetric());
    }
    if (p.pseudo_symmetric) {
      report("pseudo_symmetric", *p.pseudo_symmetric, h.is_pseudo_symmetric());
    }
    if (p.residue || p.nearly_gorenstein || p.trace_equals_m
        || p.trace_equals_conductor) {
      auto const data = trace_ideal(h);
      if (p.residue) {
        report("residue", *p.residue, data.residue);
      }
      if (p.nearly_gorenstein) {
        report("nearly_gorenstein",
               *p.nearly_gorenstein,
               is_nearly_gorenstein(data));
      }
      if (p.trace_equals_m) {
        report("trace_equals_m", *p.trace_equals_m, data.position.equals_m());
      }
      if (p.trace_equals_conductor) {
        report("trace_equals_conductor",
               *p.trace_equals_conductor,
               data.equals_conductor());
      }
    }
    return out;
  }

  enum class Verify { yes, no };

  namespace detail {
    inline FamilyMember make_member(std::vector<Int> labeled,
                                    Predictions      predictions,
                                    Verify           verify,
                                    bool             apply = true) {
      NumericalSemigroup h(labeled);
      FamilyMember       f{h, labeled, {}, std::move(predictions), apply};
      auto               gens = h.generators();
      for (Int x : labeled) {
        auto it = std::find(gens.begin(), gens.end(), x);
        f.permutation.push_back(
            it == gens.end() ? gens.size()
                             : static_cast<std::size_t>(it - gens.begin()));
      }
      if (verify == Verify::yes) {
        auto bad = check_predictions(f);
        if (!bad.empty()) {
          fail(ErrorCode::InternalInconsistency,
               "family prediction failed for <" + join(labeled)
                   + ">: " + bad.front());
        }
      }
      return f;
    }

    // Family formulas assume three distinct minimal generators.
    inline void require_three_minimal(std::vector<Int> const& labeled) {
      for (Int x : labeled) {
        if (x <= 0) {
          fail(ErrorCode::Degenerate, "non-positive generator");
        }
      }
      if (gcd_of(labeled) != 1) {
        fail(ErrorCode::GcdFail, "generators <" + join(labeled)
                                     + "> are not coprime");
      }
      if (NumericalSemigroup(labeled).embedding_dimension() != 3) {
        fail(ErrorCode::Degenerate,
             "<" + join(labeled) + "> is not minimally 3-generated");
      }
    }
  }  // namespace detail

  struct ArithmeticParams {
    Int a = 0;  // first term
    Int d = 0;  // common difference
    Int e = 0;  // number of generators

    void validate() const {
      if (e <= 2 || d <= 0 || a < e || std::gcd(a, d) != 1) {
        detail::fail(ErrorCode::BadParams,
                     "need e > 2, d > 0, e <= a and gcd(a, d) = 1");
      }
    }

    //! a = k (e - 1) + tau + 1 with 1 <= tau <= e - 1.
    Int k() const noexcept {
      return (a - 2) / (e - 1);
    }

    Int tau() const noexcept {
      return a - 1 - k() * (e - 1);
    }
  };

  //! <a, a + d, ..., a + (e - 1) d>.
  inline FamilyMember arithmetic(ArithmeticParams const& params,
                                 Verify                  verify = Verify::yes) {
    params.validate();
    auto const& [a, d, e] = params;
    std::vector<Int> labeled;
    for (Int i = 0; i < e; ++i) {
      labeled.push_back(add(a, mul(i, d)));
    }
    Int const   tau = params.tau();
    Int const   fr  = add(mul(a, params.k()), mul(d, a - 1));
    Predictions p;
    p.frobenius = fr;
    p.type      = static_cast<std::size_t>(tau);
    std::vector<Int> pf;
    for (Int i = tau - 1; i >= 0; --i) {
      pf.push_back(fr - i * d);
    }
    p.pseudo_frobenius  = pf;
    p.nearly_gorenstein = true;
    bool const sym      = mod(a, e - 1) == mod(2, e - 1);
    p.symmetric         = sym;
    p.almost_symmetric  = a == e || sym;
    return detail::make_member(std::move(labeled), std::move(p), verify);
  }

  //! <m, qm + 1, ..., qm + m - 1>: minimal multiplicity with tr(H) = C_H and
  //! res(H) = q. At m = 2 the semigroup is 2-generated (symmetric) and the
  //! predictions are marked inapplicable.
  inline FamilyMember med_family(Int m, Int q, Verify verify = Verify::yes) {
    if (m < 2 || q < 1) {
      detail::fail(ErrorCode::BadParams, "need m > 1 and q > 0");
    }
    std::vector<Int> labeled{m};
    for (Int i = 1; i < m; ++i) {
      labeled.push_back(add(mul(q, m), i));
    }
    Predictions p;
    if (m > 2) {
      std::vector<Int> pf;
      for (Int x = (q - 1) * m + 1; x <= q * m - 1; ++x) {
        pf.push_back(x);
      }
      p.pseudo_frobenius       = pf;
      p.frobenius              = q * m - 1;
      p.trace_equals_conductor = true;
      p.residue                = q;
    }
    return detail::make_member(
        std::move(labeled), std::move(p), verify, m > 2);
  }

  //! <ab + b + 1, b + c + 1, ac + a + c> with gcd(b + c + 1, ab - c) = 1.
  //! The generators are pairwise congruent in gcd, and n1 - n2 = ab - c, so
  //! this is exactly gcd(n1, n2, n3) = 1. Note b + c + 1, not b + c - 1:
  //! the latter would reject e.g. (1, 2, 5) -> <5, 8, 11>, whose trace is M.
  inline FamilyMember family_tm_i(Int a, Int b, Int c,
                                  Verify verify = Verify::yes) {
    if (a < 1 || b < 1 || c < 1) {
      detail::fail(ErrorCode::BadParams, "a, b, c must be positive");
    }
    Int const ab = mul(a, b);
    if (std::gcd(b + c + 1, ab - c) != 1) {
      detail::fail(ErrorCode::GcdFail, "gcd(b + c + 1, ab - c) != 1");
    }
    std::vector<Int> labeled{ab + b + 1, b + c + 1, add(mul(a, c), a + c)};
    detail::require_three_minimal(labeled);
    Predictions p;
    p.trace_equals_m    = true;
    p.nearly_gorenstein = true;
    p.residue           = 1;
    p.frobenius = add(sub(add(mul(ab, c), mul(b, c)), b + 1),
                      std::max<Int>(0, ab - c));
    return detail::make_member(std::move(labeled), std::move(p), verify);
  }

  //! <bc + b + 1, ca + c + 1, ab + a + 1> with gcd(bc + b + 1, ca + c + 1)
  //! = 1; these are the pseudo-symmetric 3-generated semigroups.
  inline FamilyMember family_tm_ii(Int a, Int b, Int c,
                                   Verify verify = Verify::yes) {
    if (a < 1 || b < 1 || c < 1) {
      detail::fail(ErrorCode::BadParams, "a, b, c must be positive");
    }
    Int const n1 = add(mul(b, c), b + 1);
    Int const n2 = add(mul(c, a), c + 1);
    Int const n3 = add(mul(a, b), a + 1);
    if (std::gcd(n1, n2) != 1) {
      detail::fail(ErrorCode::GcdFail, "gcd(bc + b + 1, ca + c + 1) != 1");
    }
    std::vector<Int> labeled{n1, n2, n3};
    detail::require_three_minimal(labeled);
    Predictions p;
    p.trace_equals_m    = true;
    p.nearly_gorenstein = true;
    p.residue           = 1;
    p.frobenius         = sub(mul(2, mul(mul(a, b), c)), 2);
    p.pseudo_symmetric  = true;
    p.almost_symmetric  = true;
    p.type              = 2;
    return detail::make_member(std::move(labeled), std::move(p), verify);
  }

  //! <3, 3a + 1, 3a + 2>: tr(H) = C_H and res(H) = a.
  inline FamilyMember conductor_family(Int a, Verify verify = Verify::yes) {
    if (a < 1) {
      detail::fail(ErrorCode::BadParams, "a must be positive");
    }
    std::vector<Int> labeled{3, add(mul(3, a), 1), add(mul(3, a), 2)};
    Predictions      p;
    p.trace_equals_conductor = true;
    p.residue                = a;
    p.frobenius              = 3 * a - 1;
    return detail::make_member(std::move(labeled), std::move(p), verify);
  }

}  // namespace semitrace

#endif  // SEMITRACE_FAMILIES_HPP_
