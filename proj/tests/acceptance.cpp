// Acceptance run: one PASS/FAIL line per criterion, each with its time
// budget. Exit status is nonzero if any line fails.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "oracles.hpp"
#include "semitrace/semitrace.hpp"

namespace {

  using namespace semitrace;
  using V = std::vector<Int>;

  struct Outcome {
    bool        ok = true;
    std::string detail;
  };

  // First failure wins the detail slot; later ones only count.
  struct Tally {
    Outcome     outcome;
    std::size_t checked  = 0;
    std::size_t failures = 0;

    void expect(bool cond, std::string const& what) {
      ++checked;
      if (!cond) {
        if (outcome.ok) {
          outcome.detail = "first failure: " + what;
        }
        outcome.ok = false;
        ++failures;
      }
    }

    Outcome done(std::string const& summary) {
      if (outcome.ok) {
        outcome.detail = summary;
      } else {
        outcome.detail += " (" + std::to_string(failures) + " of "
                          + std::to_string(checked) + " checks failed)";
      }
      return outcome;
    }
  };

  std::string show(V const& xs) {
    return "<" + detail::join(xs) + ">";
  }

  V vec(std::span<Int const> xs) {
    return {xs.begin(), xs.end()};
  }

  TraceData fast_trace(NumericalSemigroup const& h) {
    return trace_ideal(h, {.cross_check = false, .window_override = {}});
  }

  // Non-symmetric 3-generated semigroups with n3 <= 60, shared by several
  // criteria.
  std::vector<NumericalSemigroup> const& corpus60() {
    static auto const out = [] {
      std::vector<NumericalSemigroup> sets;
      for (auto const& t : threegen_triples(60)) {
        NumericalSemigroup h({t[0], t[1], t[2]});
        if (!h.is_symmetric()) {
          sets.push_back(std::move(h));
        }
      }
      return sets;
    }();
    return out;
  }

  Outcome remark_conductor_family() {
    Tally t;
    for (Int a = 1; a <= 50; ++a) {
      NumericalSemigroup const h({3, 3 * a + 1, 3 * a + 2});
      auto const               name = show(vec(h.generators()));
      t.expect(residue(h) == a, name + " trace route");
      t.expect(residue3(h).residue == a, name + " matrix route");
    }
    return t.done("res = a for a = 1..50 by both routes");
  }

  Outcome med_family_grid() {
    Tally t;
    for (Int m = 3; m <= 10; ++m) {
      for (Int q = 1; q <= 10; ++q) {
        auto const  f    = med_family(m, q, Verify::no);
        auto const& h    = f.semigroup;
        auto const  name = "m=" + std::to_string(m) + " q=" + std::to_string(q);
        V           pf;
        for (Int x = (q - 1) * m + 1; x <= q * m - 1; ++x) {
          pf.push_back(x);
        }
        t.expect(vec(h.pseudo_frobenius()) == pf, name + " PF");
        auto const data = trace_ideal(h);
        t.expect(data.trace == conductor_ideal(h), name + " tr = C_H");
        t.expect(data.residue == q, name + " res = q");
        t.expect(check_predictions(f).empty(), name + " predictions");
      }
    }
    return t.done("80 members: PF, tr = C_H, res = q");
  }

  Outcome arithmetic_grid() {
    Tally       t;
    std::size_t count = 0;
    for (Int e = 3; e <= 6; ++e) {
      for (Int a = e; a <= 30; ++a) {
        for (Int d = 1; d <= 5; ++d) {
          if (std::gcd(a, d) != 1) {
            continue;
          }
          ++count;
          ArithmeticParams const params{a, d, e};
          auto const f    = arithmetic(params, Verify::no);
          auto const& h   = f.semigroup;
          auto const name = "(a,d,e)=(" + std::to_string(a) + ","
                            + std::to_string(d) + "," + std::to_string(e)
                            + ")";
          bool const sym = (a - 2) % (e - 1) == 0;
          t.expect(is_nearly_gorenstein(trace_ideal(h)), name + " nearly G");
          t.expect(h.is_symmetric() == sym, name + " symmetric");
          t.expect(h.is_almost_symmetric() == (a == e || sym),
                   name + " almost symmetric");
          Int const k = (a - 2) / (e - 1);
          t.expect(h.frobenius() == a * k + d * (a - 1), name + " Fr");
          Int const tau = a - 1 - k * (e - 1);
          V         pf;
          for (Int i = tau - 1; i >= 0; --i) {
            pf.push_back(h.frobenius() - i * d);
          }
          t.expect(vec(h.pseudo_frobenius()) == pf, name + " PF");
          t.expect(check_predictions(f).empty(), name + " predictions");
        }
      }
    }
    return t.done(std::to_string(count) + " parameter triples");
  }

  Outcome oracle_equivalence() {
    Tally t;
    for (auto const& h : corpus60()) {
      auto const name = show(vec(h.generators()));
      t.expect(residue3(h).residue == residue(h), name + " residue");
      t.expect(frobenius3(structure_matrix(h)) == h.frobenius(),
               name + " Frobenius");
    }
    return t.done(std::to_string(corpus60().size())
                  + " non-symmetric triples");
  }

  Outcome residue_bounds() {
    Tally t;
    for (auto const& h : corpus60()) {
      auto const name   = show(vec(h.generators()));
      auto const data   = fast_trace(h);
      auto const bounds = bounds_report(data);
      t.expect(trace_sandwich_holds(data), name + " C_H <= tr <= M");
      t.expect(bounds.cor13_ok, name + " res <= n");
      t.expect((bounds.residue == bounds.nongaps)
                   == (data.position.position
                       == TracePosition::EqualsConductor),
               name + " res = n iff EQUALS_CONDUCTOR");
      t.expect(bounds.q12_ok, name + " res <= g - n");
    }
    return t.done(std::to_string(corpus60().size())
                  + " triples, zero violations");
  }

  Outcome trace_maximal_families() {
    Tally       t;
    std::size_t built = 0;
    for (Int a = 1; a <= 6; ++a) {
      for (Int b = 1; b <= 6; ++b) {
        for (Int c = 1; c <= 6; ++c) {
          auto const name = "(" + std::to_string(a) + "," + std::to_string(b)
                            + "," + std::to_string(c) + ")";
          try {
            auto const  f = family_tm_i(a, b, c, Verify::no);
            auto const& h = f.semigroup;
            ++built;
            t.expect(fast_trace(h).position.equals_m(), "(i) " + name + " tr = M");
            t.expect(h.frobenius()
                         == a * b * c + b * c - b - 1
                                + std::max<Int>(0, a * b - c),
                     "(i) " + name + " Fr");
          } catch (Error const& e) {
            t.expect(e.code() == ErrorCode::GcdFail
                         || e.code() == ErrorCode::Degenerate,
                     "(i) " + name + " " + e.what());
          }
          try {
            auto const  f = family_tm_ii(a, b, c, Verify::no);
            auto const& h = f.semigroup;
            ++built;
            t.expect(fast_trace(h).position.equals_m(),
                     "(ii) " + name + " tr = M");
            t.expect(h.frobenius() == 2 * a * b * c - 2, "(ii) " + name + " Fr");
            t.expect(h.is_pseudo_symmetric(), "(ii) " + name + " pseudo-sym");
          } catch (Error const& e) {
            t.expect(e.code() == ErrorCode::GcdFail
                         || e.code() == ErrorCode::Degenerate,
                     "(ii) " + name + " " + e.what());
          }
        }
      }
    }
    return t.done(std::to_string(built) + " members built");
  }

  Outcome conductor_position() {
    Tally       t;
    std::size_t hits = 0;
    for (auto const& h : corpus60()) {
      auto const g    = h.generators();
      bool const fam  = g[0] == 3 && g[1] % 3 == 1 && g[2] == g[1] + 1;
      auto const pos  = fast_trace(h).position;
      bool const cond = pos.position == TracePosition::EqualsConductor;
      hits += cond ? 1 : 0;
      t.expect(cond == fam, show(vec(g)) + " EQUALS_CONDUCTOR iff <3,3a+1,3a+2>");
      t.expect(trace_position3(h) == pos, show(vec(g)) + " matrix position");
    }
    return t.done(std::to_string(hits) + " EQUALS_CONDUCTOR members, all "
                  "of the form <3, 3a+1, 3a+2>");
  }

  Outcome shifted_scans() {
    Tally       t;
    std::size_t rows = 0;
    for (Int b = 2; b <= 12; ++b) {
      for (Int a = 1; a < b; ++a) {
        auto const p      = shift_params(a, b);
        auto const report = scan(p, 2 * p.k + 4 * p.b);
        auto const name   = "(a,b)=(" + std::to_string(a) + ","
                            + std::to_string(b) + ")";
        auto const& v = report.verdicts;
        rows += report.rows.size();
        t.expect(v.periodicity_ok, name + " periodicity");
        t.expect(v.lemma33_ok, name + " symmetric iff T | j");
        t.expect(v.cor34_div_ok, name + " divisibility");
        t.expect(v.cor34_bound_ok, name + " bound 8b^3/(27D^3)");
        t.expect(v.nearly_g_periodic_ok, name + " nearly G periodicity");
        t.expect(v.residue_routes_ok, name + " residue routes");
        t.expect(v.middle_eq_ok && v.stable_formula_ok && v.matrix_step_ok,
                 name + " matrix shape");
        if (!report.witnesses.empty()) {
          t.expect(false, name + " " + report.witnesses.front());
        }
      }
    }
    return t.done("66 pairs, " + std::to_string(rows) + " members");
  }

  Outcome question_bound() {
    cli::CorpusOptions c;
    c.kind     = "bounded";
    c.bound    = 25;
    c.max_edim = 5;
    auto const r        = cli::cmd_experiment("q12", c);
    auto const findings = r.doc["summary"]["violations"].get<std::size_t>();
    Outcome    out;
    out.ok     = findings == 0;
    out.detail = std::to_string(r.doc["summary"]["tested"].get<std::size_t>())
                 + " semigroups, " + std::to_string(findings) + " findings";
    for (auto const& row : r.doc["rows"]) {
      std::printf("  finding: %s\n", row.dump().c_str());
    }
    return out;
  }

  std::string slurp(std::string const& path) {
    std::ifstream      in(path, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
  }

  Outcome property_suite() {
    Tally       t;
    std::size_t count = 0;
    auto const  check = [&](NumericalSemigroup const& h) {
      ++count;
      auto const      name = show(vec(h.generators()));
      oracle::Sieve   sieve(vec(h.generators()), 3 * h.frobenius() + 4);
      for (Int x = -10; x <= 3 * h.frobenius() + 3; ++x) {
        if (h.contains(x) != sieve.contains(x)) {
          t.expect(false, name + " membership of " + std::to_string(x));
          break;
        }
      }
      t.expect(h.nongaps_count() + h.genus() == h.frobenius() + 1,
               name + " n + g = Fr + 1");
      try {
        trace_ideal(h);  // both trace routes, compared on [-Fr, 3 Fr + 1]
      } catch (Error const& e) {
        t.expect(false, name + " " + e.what());
      }
      if (!h.is_trivial()) {
        auto const omega = canonical_ideal(h);
        for (auto const& ideal : {omega, maximal_ideal(h)}) {
          auto const bidual = dual(dual(ideal));
          bool       in     = true;
          for (Int g : ideal.generators()) {
            in = in && bidual.member(g);
          }
          t.expect(in, name + " ideal inside its bidual");
        }
      }
    };
    for (auto const& tr : threegen_triples(60)) {
      check(NumericalSemigroup({tr[0], tr[1], tr[2]}));
    }
    for (auto const& gens : bounded_generator_sets(25, 5)) {
      check(NumericalSemigroup(gens));
    }
    for (auto const& [gens, file] :
         std::vector<std::pair<V, std::string>>{
             {{3, 4, 5}, "info_3_4_5.json"},
             {{3, 7, 8}, "info_3_7_8.json"},
             {{5, 6, 7}, "info_5_6_7.json"}}) {
      auto const want = slurp(std::string(SEMITRACE_GOLDEN_DIR) + "/" + file);
      auto const got  = cli::render(cli::cmd_info(gens), cli::Format::json);
      t.expect(!want.empty() && got == want, file + " byte-stable");
    }
    return t.done(std::to_string(count) + " instances, 3 golden files");
  }

  struct Criterion {
    int                      id;
    char const*              name;
    double                   budget_seconds;  // 0: no time limit
    std::function<Outcome()> run;
  };

}  // namespace

int main() {
  std::vector<Criterion> const criteria{
      {1, "conductor family residues", 1, remark_conductor_family},
      {2, "minimal multiplicity family", 5, med_family_grid},
      {3, "arithmetic sequences", 30, arithmetic_grid},
      {4, "3-generated oracle equivalence", 120, oracle_equivalence},
      {5, "residue bounds on 3-generated corpus", 0, residue_bounds},
      {6, "trace-maximal families", 30, trace_maximal_families},
      {7, "trace-conductor classification", 0, conductor_position},
      {8, "shifted family scans", 300, shifted_scans},
      {9, "res <= g - n evidence run", 600, question_bound},
      {10, "property suite and golden files", 0, property_suite},
  };
  corpus60();  // shared setup, not charged to any one criterion

  int failed = 0;
  for (auto const& c : criteria) {
    auto const start = std::chrono::steady_clock::now();
    Outcome    out;
    try {
      out = c.run();
    } catch (std::exception const& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    double const secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    bool const in_time = c.budget_seconds == 0 || secs < c.budget_seconds;
    bool const pass    = out.ok && in_time;
    failed += pass ? 0 : 1;
    std::string budget =
        c.budget_seconds == 0
            ? std::string("no limit")
            : "limit " + std::to_string(static_cast<int>(c.budget_seconds))
                  + "s";
    std::printf("criterion %2d %s: %s [%.3fs, %s]%s - %s\n",
                c.id,
                pass ? "PASS" : "FAIL",
                c.name,
                secs,
                budget.c_str(),
                in_time ? "" : " TIME LIMIT EXCEEDED",
                out.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n",
              static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
