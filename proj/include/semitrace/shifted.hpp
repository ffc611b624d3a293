#ifndef SEMITRACE_SHIFTED_HPP_
#define SEMITRACE_SHIFTED_HPP_

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "ideal.hpp"
#include "integer.hpp"
#include "parallel.hpp"
#include "semigroup.hpp"
#include "threegen.hpp"

namespace semitrace {

  //! Constants governing the shifted family H_j = <j, j + a, j + b>.
  struct ShiftParams {
    Int a = 0;
    Int b = 0;
    Int D = 0;  // gcd(a, b)
    //! Product of p^v_p(b) over primes p with v_p(a) < v_p(b); for j > k the
    //! member H_j is symmetric iff T | j.
    Int T = 0;
    //! k_{a,b} = max{b((b - a)/D - 1), ba/D}.
    Int k = 0;

    //! Amount by which the last column of the structure matrix grows when j
    //! moves to j + b.
    Int step(Int j) const noexcept {
      return D / std::gcd(std::gcd(j, a), b);
    }
  };

  inline ShiftParams shift_params(Int a, Int b) {
    if (a <= 0 || b <= a) {
      detail::fail(ErrorCode::BadParams, "need 0 < a < b");
    }
    ShiftParams p{a, b, std::gcd(a, b), 1, 0};
    Int rest = b;
    for (Int prime = 2; rest > 1; ++prime) {
      if (prime * prime > rest) {
        prime = rest;
      }
      if (rest % prime != 0) {
        continue;
      }
      int const vb = valuation(b, prime);
      while (rest % prime == 0) {
        rest /= prime;
      }
      if (valuation(a, prime) < vb) {
        for (int i = 0; i < vb; ++i) {
          p.T = mul(p.T, prime);
        }
      }
    }
    p.k = std::max(mul(b, (b - a) / p.D - 1), mul(b, a) / p.D);
    return p;
  }

  struct ShiftMember {
    Int                j = 0;
    std::vector<Int>   raw;      // j, j + a, j + b
    Int                divisor = 1;  // gcd(j, a, b)
    NumericalSemigroup semigroup;
    //! The normalized triple is not a minimal 3-generator system.
    bool degenerate = false;
  };

  inline ShiftMember semigroup_at(ShiftParams const& p, Int j) {
    if (j < 1) {
      detail::fail(ErrorCode::BadParams, "shift must be >= 1");
    }
    std::vector<Int> raw{j, add(j, p.a), add(j, p.b)};
    auto [h, d]       = normalize(raw);
    bool const degen  = h.embedding_dimension() != 3;
    return ShiftMember{j, std::move(raw), d, std::move(h), degen};
  }

  //! T | j; only claimed for j > k.
  inline bool symmetric_predicate(ShiftParams const& p, Int j) {
    if (j <= p.k) {
      detail::fail(ErrorCode::ThresholdViolation,
                   "symmetry period is only claimed for j > "
                       + std::to_string(p.k));
    }
    return j % p.T == 0;
  }

  struct ShiftRow {
    Int                            j = 0;
    Int                            divisor = 1;
    std::vector<Int>               gens;
    bool                           degenerate = false;
    Int                            residue    = 0;
    std::optional<Int>             residue3;
    bool                           symmetric         = false;
    bool                           nearly_gorenstein = false;
    bool                           almost_symmetric  = false;
    std::optional<StructureMatrix> matrix;
  };

  struct ShiftVerdicts {
    bool residue_routes_ok   = true;  // trace computation vs d1 d2 d3
    bool periodicity_ok      = true;
    bool lemma33_ok          = true;  // symmetric iff T | j, j > k
    bool middle_eq_ok        = true;
    bool stable_formula_ok   = true;
    bool matrix_step_ok      = true;
    bool cor34_div_ok        = true;
    bool cor34_bound_ok      = true;
    bool nearly_g_periodic_ok = true;

    bool all() const noexcept {
      return residue_routes_ok && periodicity_ok && lemma33_ok
             && middle_eq_ok && stable_formula_ok && matrix_step_ok
             && cor34_div_ok && cor34_bound_ok && nearly_g_periodic_ok;
    }
  };

  struct ShiftScanReport {
    ShiftParams           params;
    Int                   j_max = 0;
    std::vector<ShiftRow> rows;  // rows[i].j == i + 1
    ShiftVerdicts         verdicts;
    //! Smallest j0 with res(H_j) = res(H_{j+b}) for all j0 <= j <= j_max - b.
    Int empirical_onset = 1;
    //! 2k + 1, where periodicity is proved to start.
    Int theoretical_onset = 1;
    //! Smallest p <= b with res(H_j) = res(H_{j+p}) for 2k < j <= j_max - p.
    Int detected_period = 0;
    //! Failed checks, one line each.
    std::vector<std::string> witnesses;
  };

  struct ScanOptions {
    unsigned jobs        = 1;
    bool     cross_check = false;  // double-compute every trace ideal
  };

  inline ShiftRow scan_row(ShiftParams const& p, Int j, bool cross_check) {
    auto     member = semigroup_at(p, j);
    ShiftRow row;
    row.j          = j;
    row.divisor    = member.divisor;
    row.degenerate = member.degenerate;
    auto gens      = member.semigroup.generators();
    row.gens.assign(gens.begin(), gens.end());

    auto const data       = trace_ideal(member.semigroup,
                                  {.cross_check = cross_check, .window_override = {}});
    row.residue           = data.residue;
    row.symmetric         = member.semigroup.is_symmetric();
    row.nearly_gorenstein = is_nearly_gorenstein(data);
    row.almost_symmetric  = member.semigroup.is_almost_symmetric();
    if (!member.degenerate) {
      auto r3      = residue3(member.semigroup);
      row.residue3 = r3.residue;
      row.matrix   = r3.matrix;
    }
    return row;
  }

  inline ShiftScanReport scan(ShiftParams const& p,
                              Int                j_max,
                              ScanOptions const& options = {}) {
    if (j_max <= 2 * p.k + 2 * p.b) {
      detail::fail(ErrorCode::BadRange,
                   "j_max must exceed 2k + 2b = "
                       + std::to_string(2 * p.k + 2 * p.b));
    }
    ShiftScanReport report;
    report.params            = p;
    report.j_max             = j_max;
    report.theoretical_onset = 2 * p.k + 1;
    report.rows              = parallel_map(
        static_cast<std::size_t>(j_max), options.jobs, [&](std::size_t i) {
          return scan_row(p, static_cast<Int>(i) + 1, options.cross_check);
        });

    auto&      v    = report.verdicts;
    auto const row  = [&](Int j) -> ShiftRow const& {
      return report.rows[static_cast<std::size_t>(j - 1)];
    };
    auto const flag = [&](bool& verdict, Int j, std::string const& what) {
      verdict = false;
      report.witnesses.push_back("j=" + std::to_string(j) + ": " + what);
    };

    Int const D        = p.D;
    Int const a_over   = p.a / D;
    Int const ba_over  = (p.b - p.a) / D;
    Int const b_over   = p.b / D;
    Int const divisor  = mul(ba_over, a_over);
    Int const bound_lhs_factor = mul(27, mul(mul(D, D), D));
    Int const bound_rhs = mul(8, mul(mul(p.b, p.b), p.b));

    for (Int j = 1; j <= j_max; ++j) {
      auto const& r = row(j);
      if (r.residue3 && *r.residue3 != r.residue) {
        flag(v.residue_routes_ok, j, "d1 d2 d3 != |H \\ tr(H)|");
      }
      if (j <= p.k || r.degenerate) {
        continue;
      }
      if (symmetric_predicate(p, j) != r.symmetric) {
        flag(v.lemma33_ok, j, "symmetry differs from T | j");
      }
      if (!r.symmetric) {
        auto const& s = *r.matrix;
        if (s.a[0] != ba_over || s.c[1] != b_over || s.b[2] != a_over) {
          flag(v.middle_eq_ok, j, "middle relation is not (b/D) n2 = "
                                  "((b-a)/D) n1 + (a/D) n3");
        }
        if (j + p.b <= j_max && !row(j + p.b).symmetric) {
          auto const& t = *row(j + p.b).matrix;
          Int const   e = p.step(j);
          if (t.a[0] != s.a[0] || t.a[1] != s.a[1] || t.b[1] != s.b[1]
              || t.b[2] != s.b[2] || t.a[2] != s.a[2] + e
              || t.b[0] != s.b[0] + e) {
            flag(v.matrix_step_ok, j, "A_{j+b} is not A_j with the last "
                                      "column raised by "
                                          + std::to_string(e));
          }
        }
      }
      if (j <= 2 * p.k) {
        continue;
      }
      if (j + p.b <= j_max) {
        auto const& next = row(j + p.b);
        if (next.residue != r.residue) {
          flag(v.periodicity_ok, j, "res(H_j) != res(H_{j+b})");
        }
        if (next.nearly_gorenstein != r.nearly_gorenstein) {
          flag(v.nearly_g_periodic_ok, j,
               "nearly Gorenstein differs from H_{j+b}");
        }
      }
      if (mul(bound_lhs_factor, r.residue) >= bound_rhs) {
        flag(v.cor34_bound_ok, j, "res(H_j) >= 8b^3/(27D^3)");
      }
      if (!r.symmetric) {
        auto const& s = *r.matrix;
        if (r.residue != mul(std::min(s.a[1], s.b[1]), divisor)) {
          flag(v.stable_formula_ok, j,
               "res(H_j) != min{a2, b2} a(b-a)/D^2");
        }
        if (r.residue % divisor != 0) {
          flag(v.cor34_div_ok, j, "(b-a)a/D^2 does not divide res(H_j)");
        }
      }
    }

    Int onset = 1;
    for (Int j = j_max - p.b; j >= 1; --j) {
      if (row(j).residue != row(j + p.b).residue) {
        onset = j + 1;
        break;
      }
    }
    report.empirical_onset = onset;

    for (Int period = 1; period <= p.b; ++period) {
      bool holds = true;
      for (Int j = 2 * p.k + 1; j + period <= j_max && holds; ++j) {
        holds = row(j).residue == row(j + period).residue;
      }
      if (holds) {
        report.detected_period = period;
        break;
      }
    }
    return report;
  }

  //! Evidence for shifted families <a1 + j, ..., ae + j> of any width.
  struct GeneralScanRow {
    Int              j = 0;
    std::vector<Int> gens;
    Int              residue = 0;
  };

  struct GeneralScanReport {
    std::vector<Int>            offsets;
    Int                         width = 0;
    Int                         j_max = 0;
    std::vector<GeneralScanRow> rows;
    //! Smallest j0 with res(j) = res(j + width) on [j0, j_max - width].
    Int empirical_onset = 1;
    //! Smallest p <= width with res(j) = res(j + p) on the upper half.
    Int  detected_period = 0;
    bool width_period_on_tail = false;
  };

  inline GeneralScanReport scan_general(std::vector<Int> offsets,
                                        Int              j_max,
                                        ScanOptions const& options = {}) {
    if (offsets.size() < 2
        || !std::is_sorted(offsets.begin(), offsets.end())
        || std::adjacent_find(offsets.begin(), offsets.end())
               != offsets.end()
        || offsets.front() < 0) {
      detail::fail(ErrorCode::BadParams,
                   "offsets must be distinct, increasing and nonnegative");
    }
    GeneralScanReport report;
    report.width = offsets.back() - offsets.front();
    if (j_max <= 2 * report.width) {
      detail::fail(ErrorCode::BadRange, "j_max must exceed twice the width");
    }
    report.offsets = offsets;
    report.j_max   = j_max;
    report.rows    = parallel_map(
        static_cast<std::size_t>(j_max), options.jobs, [&](std::size_t i) {
          Int const        j = static_cast<Int>(i) + 1;
          std::vector<Int> gens;
          for (Int o : offsets) {
            gens.push_back(add(o, j));
          }
          auto           h = normalize(gens).first;
          GeneralScanRow r{j, {}, residue(h)};
          r.gens.assign(h.generators().begin(), h.generators().end());
          return r;
        });

    auto const res = [&](Int j) {
      return report.rows[static_cast<std::size_t>(j - 1)].residue;
    };
    Int const w = report.width;
    report.empirical_onset = 1;
    for (Int j = j_max - w; j >= 1; --j) {
      if (res(j) != res(j + w)) {
        report.empirical_onset = j + 1;
        break;
      }
    }
    Int const tail = j_max / 2;
    for (Int period = 1; period <= w; ++period) {
      bool holds = true;
      for (Int j = tail; j + period <= j_max && holds; ++j) {
        holds = res(j) == res(j + period);
      }
      if (holds) {
        report.detected_period = period;
        break;
      }
    }
    report.width_period_on_tail = report.empirical_onset <= tail;
    return report;
  }

}  // namespace semitrace

#endif  // SEMITRACE_SHIFTED_HPP_
