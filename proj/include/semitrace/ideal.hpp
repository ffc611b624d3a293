#ifndef SEMITRACE_IDEAL_HPP_
#define SEMITRACE_IDEAL_HPP_

#include <algorithm>
#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "integer.hpp"
#include "semigroup.hpp"

namespace semitrace {

  //! A relative ideal I of H (I + H in I, h + I in H for some h in H), held
  //! by its minimal generators. Since I + m lies in I for the multiplicity m,
  //! I is also determined by its least element in every residue class mod m;
  //! that table (the "profile") makes membership O(1).
  class RelativeIdeal {
   public:
    RelativeIdeal(NumericalSemigroup base, std::vector<Int> gens)
        : _base(std::move(base)) {
      if (gens.empty()) {
        detail::fail(ErrorCode::EmptyInput,
                     "relative ideal needs at least one generator");
      }
      _gens = minimalize(_base, std::move(gens));
      _profile = profile_of(_base, _gens);
    }

    NumericalSemigroup const& base() const noexcept {
      return _base;
    }

    std::span<Int const> generators() const noexcept {
      return _gens;
    }

    Int min_generator() const noexcept {
      return _gens.front();
    }

    bool member(Int x) const noexcept {
      Int const m = _base.multiplicity();
      return x >= _profile[static_cast<std::size_t>(mod(x, m))];
    }

    //! Least element of the ideal in each residue class mod multiplicity.
    std::span<Int const> profile() const noexcept {
      return _profile;
    }

    friend bool operator==(RelativeIdeal const& x,
                           RelativeIdeal const& y) noexcept {
      return x._base == y._base && x._gens == y._gens;
    }

    //! Keep a candidate iff no smaller kept candidate differs from it by an
    //! element of H. Per residue class only the least candidate can survive,
    //! so the pairwise pass runs over at most `multiplicity` values.
    static std::vector<Int> minimalize(NumericalSemigroup const& base,
                                       std::vector<Int>          candidates) {
      Int const m = base.multiplicity();
      std::sort(candidates.begin(), candidates.end());
      candidates.erase(std::unique(candidates.begin(), candidates.end()),
                       candidates.end());
      std::vector<Int>  least;
      std::vector<bool> seen(static_cast<std::size_t>(m), false);
      for (Int c : candidates) {
        auto r = static_cast<std::size_t>(mod(c, m));
        if (!seen[r]) {
          seen[r] = true;
          least.push_back(c);
        }
      }
      std::vector<Int> kept;
      for (Int c : least) {
        bool dominated = std::any_of(kept.begin(), kept.end(), [&](Int k) {
          return base.contains(sub(c, k));
        });
        if (!dominated) {
          kept.push_back(c);
        }
      }
      return kept;
    }

   private:
    static std::vector<Int> profile_of(NumericalSemigroup const& base,
                                       std::span<Int const>      gens) {
      Int const        m = base.multiplicity();
      auto             ap = base.apery();
      std::vector<Int> out(static_cast<std::size_t>(m), detail::unreached);
      for (Int g : gens) {
        for (Int r = 0; r < m; ++r) {
          Int const w    = ap[static_cast<std::size_t>(mod(r - g, m))];
          Int const cand = add(g, w);
          auto&     slot = out[static_cast<std::size_t>(mod(cand, m))];
          slot           = std::min(slot, cand);
        }
      }
      return out;
    }

    NumericalSemigroup _base;
    std::vector<Int>   _gens;
    std::vector<Int>   _profile;
  };

  inline RelativeIdeal rel_ideal(NumericalSemigroup const& base,
                                 std::vector<Int>          gens) {
    return RelativeIdeal(base, std::move(gens));
  }

  //! H viewed as an ideal of itself.
  inline RelativeIdeal whole(NumericalSemigroup const& base) {
    return RelativeIdeal(base, {0});
  }

  inline RelativeIdeal sum(RelativeIdeal const& x, RelativeIdeal const& y) {
    if (!(x.base() == y.base())) {
      detail::fail(ErrorCode::BaseMismatch,
                   "ideals live over different semigroups");
    }
    std::vector<Int> gens;
    gens.reserve(x.generators().size() * y.generators().size());
    for (Int g : x.generators()) {
      for (Int h : y.generators()) {
        gens.push_back(add(g, h));
      }
    }
    return RelativeIdeal(x.base(), std::move(gens));
  }

  //! H - I = {x : x + I in H}. The least member congruent to r is the largest
  //! of the per-generator bounds Ap(r + g) - g, so no window is needed.
  inline RelativeIdeal dual(RelativeIdeal const& ideal) {
    auto const&      base = ideal.base();
    Int const        m    = base.multiplicity();
    auto             ap   = base.apery();
    std::vector<Int> candidates;
    candidates.reserve(static_cast<std::size_t>(m));
    for (Int r = 0; r < m; ++r) {
      Int least = std::numeric_limits<Int>::min();
      for (Int g : ideal.generators()) {
        least = std::max(least,
                         sub(ap[static_cast<std::size_t>(mod(r + g, m))], g));
      }
      candidates.push_back(least);
    }
    return RelativeIdeal(base, std::move(candidates));
  }

  //! Membership test for H - I straight from the definition.
  inline bool dual_member(RelativeIdeal const& ideal, Int x) {
    auto const& base = ideal.base();
    return std::all_of(ideal.generators().begin(),
                       ideal.generators().end(),
                       [&](Int g) { return base.contains(add(x, g)); });
  }

  //! Default upper end of the dual scan window: every x at or beyond
  //! c(H) - min(gens) is a member, and the multiplicity-many values from
  //! there on generate that tail.
  inline Int dual_window_end(RelativeIdeal const& ideal) {
    return add(sub(ideal.base().conductor(), ideal.min_generator()),
               ideal.base().multiplicity() - 1);
  }

  //! Dual by explicit scan of [-min(gens), window_end]. With the default
  //! window the result equals dual(); a smaller override is a stress hook
  //! and may return a strictly smaller ideal.
  inline RelativeIdeal dual_by_window(RelativeIdeal const& ideal,
                                      std::optional<Int>   window_end = {}) {
    Int const lo = -ideal.min_generator();
    Int const hi = window_end.value_or(dual_window_end(ideal));
    if (hi < lo) {
      detail::fail(ErrorCode::BadRange,
                   "dual window ends before " + std::to_string(lo));
    }
    std::vector<Int> members;
    for (Int x = lo; x <= hi; ++x) {
      if (dual_member(ideal, x)) {
        members.push_back(x);
      }
    }
    if (members.empty()) {
      detail::fail(ErrorCode::BadRange, "dual window contains no member");
    }
    return RelativeIdeal(ideal.base(), std::move(members));
  }

  //! Omega_H, generated by -PF(H).
  inline RelativeIdeal canonical_ideal(NumericalSemigroup const& base) {
    if (base.is_trivial()) {
      detail::fail(ErrorCode::TrivialSemigroup,
                   "<1> has no pseudo-Frobenius numbers");
    }
    std::vector<Int> gens;
    for (Int f : base.pseudo_frobenius()) {
      gens.push_back(-f);
    }
    return RelativeIdeal(base, std::move(gens));
  }

  //! The ideal generated by c(H), ..., c(H) + m - 1.
  inline RelativeIdeal conductor_ideal(NumericalSemigroup const& base) {
    std::vector<Int> gens;
    Int const        c = base.conductor();
    for (Int i = 0; i < base.multiplicity(); ++i) {
      gens.push_back(c + i);
    }
    return RelativeIdeal(base, std::move(gens));
  }

  inline Int conductor(NumericalSemigroup const& base) noexcept {
    return base.conductor();
  }

  //! M = H \ {0}, generated by the minimal generators.
  inline RelativeIdeal maximal_ideal(NumericalSemigroup const& base) {
    auto gens = base.generators();
    return RelativeIdeal(base, std::vector<Int>(gens.begin(), gens.end()));
  }

  // Position of tr(H) inside the chain C_H <= tr(H) <= H.
  enum class TracePosition {
    WholeH,
    EqualsM,
    StrictlyBetween,
    EqualsConductor
  };

  constexpr std::string_view to_string(TracePosition p) noexcept {
    switch (p) {
      case TracePosition::WholeH: return "WHOLE_H";
      case TracePosition::EqualsM: return "EQUALS_M";
      case TracePosition::StrictlyBetween: return "STRICTLY_BETWEEN";
      case TracePosition::EqualsConductor: return "EQUALS_CONDUCTOR";
    }
    return "UNKNOWN";
  }

  //! When M = C_H the trace equals both; the position is then reported as
  //! EqualsConductor with `also_equals_m` set.
  struct PositionInfo {
    TracePosition position      = TracePosition::WholeH;
    bool          also_equals_m = false;

    bool equals_m() const noexcept {
      return position == TracePosition::EqualsM || also_equals_m;
    }

    friend bool operator==(PositionInfo const&, PositionInfo const&)
        = default;
  };

  struct TraceOptions {
    //! Recompute membership through the PF formula on [-Fr, 3 Fr + 1] and
    //! compare with the ideal arithmetic.
    bool cross_check = true;
    //! Route the dual through dual_by_window() with this end point.
    std::optional<Int> window_override;
  };

  struct TraceData {
    NumericalSemigroup base;
    RelativeIdeal      trace;
    //! tr(H) intersected with [0, Fr(H)].
    std::vector<Int> sporadic;
    Int              residue = 0;
    PositionInfo     position;

    //! tr(H) = C_H, i.e. no element of tr(H) is <= Fr(H).
    bool equals_conductor() const noexcept {
      return sporadic.empty();
    }
  };

  //! x in tr(H) iff some f in PF(H) has x + f - g in H for every g in PF(H).
  //! This unfolds x = -f + y with y in Omega^{-1} and is independent of the
  //! ideal arithmetic used by trace_ideal().
  inline bool trace_member_by_pf(NumericalSemigroup const& base, Int x) {
    auto pf = base.pseudo_frobenius();
    if (pf.empty()) {
      return base.contains(x);
    }
    return std::any_of(pf.begin(), pf.end(), [&](Int f) {
      return std::all_of(pf.begin(), pf.end(), [&](Int g) {
        return base.contains(x + f - g);
      });
    });
  }

  inline TraceData trace_ideal(NumericalSemigroup const& base,
                               TraceOptions const&       options = {}) {
    Int const fr = base.frobenius();
    if (base.is_symmetric()) {
      std::vector<Int> sporadic;
      for (Int x = 0; x <= fr; ++x) {
        if (base.contains(x)) {
          sporadic.push_back(x);
        }
      }
      return TraceData{base,
                       whole(base),
                       std::move(sporadic),
                       0,
                       {TracePosition::WholeH, false}};
    }

    RelativeIdeal const omega = canonical_ideal(base);
    RelativeIdeal const anti  = options.window_override
                                    ? dual_by_window(omega,
                                                     options.window_override)
                                    : dual(omega);
    RelativeIdeal trace = sum(omega, anti);

    if (options.cross_check) {
      for (Int x = -fr; x <= 3 * fr + 1; ++x) {
        if (trace.member(x) != trace_member_by_pf(base, x)) {
          detail::fail(ErrorCode::InternalInconsistency,
                       "trace membership of " + std::to_string(x)
                           + " differs between Omega + Omega^-1 and the PF "
                             "formula");
        }
      }
    }

    std::vector<Int> sporadic;
    Int              residue = 0;
    bool             all_m   = true;
    for (Int x = 0; x <= fr; ++x) {
      bool const in_h  = base.contains(x);
      bool const in_tr = trace.member(x);
      if (in_tr) {
        sporadic.push_back(x);
      }
      if (in_h && !in_tr) {
        ++residue;
        if (x != 0) {
          all_m = false;
        }
      }
    }

    all_m = all_m && !trace.member(0);
    PositionInfo position;
    if (sporadic.empty()) {
      position = {TracePosition::EqualsConductor, all_m};
    } else if (all_m) {
      position = {TracePosition::EqualsM, false};
    } else {
      position = {TracePosition::StrictlyBetween, false};
    }
    return TraceData{base,
                     std::move(trace),
                     std::move(sporadic),
                     residue,
                     position};
  }

  inline Int residue(NumericalSemigroup const& base) {
    return trace_ideal(base, {.cross_check = false, .window_override = {}}).residue;
  }

  //! Residue of an arbitrary (not necessarily primitive) generator list.
  inline Int residue(std::vector<Int> gens) {
    return residue(normalize(std::move(gens)).first);
  }

  inline bool is_nearly_gorenstein(TraceData const& data) {
    auto gens = data.base.generators();
    bool const by_gens
        = data.base.is_symmetric()
          || std::all_of(gens.begin(), gens.end(), [&](Int g) {
               return data.trace.member(g);
             });
    detail::ensure(by_gens == (data.residue <= 1),
                   "nearly Gorenstein test disagrees with res(H) <= 1");
    return by_gens;
  }

  inline bool is_nearly_gorenstein(NumericalSemigroup const& base) {
    return is_nearly_gorenstein(trace_ideal(base, {.cross_check = false, .window_override = {}}));
  }

  //! C_H <= tr(H) <= H, and tr(H) <= M when H is not symmetric.
  inline bool trace_sandwich_holds(TraceData const& data) {
    auto const& base = data.base;
    Int const   c    = base.conductor();
    for (Int i = 0; i < base.multiplicity(); ++i) {
      if (!data.trace.member(c + i)) {
        return false;
      }
    }
    for (Int g : data.trace.generators()) {
      if (!base.contains(g)) {
        return false;
      }
    }
    return base.is_symmetric() || !data.trace.member(0);
  }

  struct BoundsReport {
    Int  residue     = 0;
    Int  nongaps     = 0;
    Int  genus       = 0;
    bool cor13_ok    = true;  // res <= n
    bool q12_ok      = true;  // res <= g - n
    bool cor13_tight = true;  // res = n iff tr = C_H
  };

  inline BoundsReport bounds_report(TraceData const& data) {
    BoundsReport out;
    out.residue     = data.residue;
    out.nongaps     = data.base.nongaps_count();
    out.genus       = data.base.genus();
    out.cor13_ok    = out.residue <= out.nongaps;
    out.q12_ok      = out.residue <= out.genus - out.nongaps;
    out.cor13_tight = (out.residue == out.nongaps) == data.equals_conductor();
    return out;
  }

  inline BoundsReport bounds_report(NumericalSemigroup const& base) {
    return bounds_report(trace_ideal(base, {.cross_check = false, .window_override = {}}));
  }

}  // namespace semitrace

#endif  // SEMITRACE_IDEAL_HPP_
