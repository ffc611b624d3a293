#ifndef SEMITRACE_TOOLS_COMMANDS_HPP_
#define SEMITRACE_TOOLS_COMMANDS_HPP_

// Subcommand implementations for the semitrace CLI. Each command builds one
// JSON report; rendering to text, JSON or CSV happens in render().

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "semitrace/enumerate.hpp"
#include "semitrace/families.hpp"
#include "semitrace/ideal.hpp"
#include "semitrace/parallel.hpp"
#include "semitrace/report.hpp"
#include "semitrace/semigroup.hpp"
#include "semitrace/shifted.hpp"
#include "semitrace/threegen.hpp"

namespace semitrace::cli {

  enum class Format { text, json, csv };

  //! Exit-code contract.
  inline constexpr int exit_clean     = 0;
  inline constexpr int exit_violation = 1;
  inline constexpr int exit_usage     = 2;

  struct CommonOptions {
    unsigned                     jobs = 1;
    std::optional<std::uint64_t> seed;
    std::optional<Int>           window_override;
  };

  struct CorpusOptions {
    std::string        kind = "threegen";  // threegen | bounded
    Int                bound    = 40;
    Int                max_edim = 5;
    std::optional<Int> sample;  // pick this many instances at random
  };

  struct CommandResult {
    json        doc;
    int         exit_code = exit_clean;
    std::string notice;  // diagnostics for stderr
    //! Which field list a CSV rendering uses.
    bool shift_rows = false;
  };

  namespace detail {
    inline json base_doc(std::string const& command, json inputs) {
      json doc;
      doc["schema_version"] = std::string(schema_version);
      doc["command"]        = command;
      doc["inputs"]         = std::move(inputs);
      doc["rows"]           = json::array();
      doc["summary"]        = json::object();
      return doc;
    }

    struct Prepared {
      NumericalSemigroup h;
      Int                divisor;
      TraceData          data;
    };

    inline Prepared prepare(std::vector<Int> const& gens,
                            CommonOptions const&    common,
                            std::string&            notice) {
      auto [h, d] = normalize(gens);
      if (d > 1) {
        notice = "notice: generators share the factor " + std::to_string(d)
                 + "; working with <" + semitrace::detail::join(h.generators())
                 + ">\n";
      }
      TraceOptions options;
      options.cross_check     = true;
      options.window_override = common.window_override;
      auto data               = trace_ideal(h, options);
      return {h, d, std::move(data)};
    }

    inline json gens_inputs(std::vector<Int> const& gens, Int divisor) {
      return json{{"gens", gens}, {"normalized_by", divisor}};
    }

    inline std::vector<std::vector<Int>> corpus(CorpusOptions const& c,
                                                CommonOptions const& common) {
      std::vector<std::vector<Int>> out;
      if (c.kind == "threegen") {
        for (auto const& t : threegen_triples(c.bound)) {
          out.push_back({t[0], t[1], t[2]});
        }
      } else if (c.kind == "bounded") {
        out = bounded_generator_sets(c.bound, c.max_edim);
      } else {
        semitrace::detail::fail(ErrorCode::BadParams,
                                "unknown corpus kind '" + c.kind + "'");
      }
      if (c.sample && *c.sample < static_cast<Int>(out.size())) {
        if (*c.sample < 0) {
          semitrace::detail::fail(ErrorCode::BadRange,
                                  "sample size must be nonnegative");
        }
        std::mt19937_64 rng(common.seed.value_or(0));
        std::vector<std::size_t> index(out.size());
        for (std::size_t i = 0; i < index.size(); ++i) {
          index[i] = i;
        }
        std::shuffle(index.begin(), index.end(), rng);
        index.resize(static_cast<std::size_t>(*c.sample));
        std::sort(index.begin(), index.end());
        std::vector<std::vector<Int>> picked;
        for (auto i : index) {
          picked.push_back(out[i]);
        }
        out = std::move(picked);
      }
      return out;
    }

    inline json corpus_inputs(CorpusOptions const& c,
                              CommonOptions const& common) {
      json in{{"kind", c.kind}, {"n", c.bound}};
      if (c.kind == "bounded") {
        in["e"] = c.max_edim;
      }
      if (c.sample) {
        in["sample"] = *c.sample;
        in["seed"]   = common.seed.value_or(0);
      }
      return in;
    }
  }  // namespace detail

  inline CommandResult cmd_info(std::vector<Int> const& gens,
                                CommonOptions const&    common = {}) {
    CommandResult r;
    auto          p = detail::prepare(gens, common, r.notice);
    r.doc = detail::base_doc("info", detail::gens_inputs(gens, p.divisor));
    r.doc["rows"].push_back(semigroup_row(p.data));
    return r;
  }

  inline CommandResult cmd_residue(std::vector<Int> const& gens,
                                   CommonOptions const&    common = {}) {
    CommandResult r;
    auto          p = detail::prepare(gens, common, r.notice);
    r.doc = detail::base_doc("residue", detail::gens_inputs(gens, p.divisor));
    r.doc["rows"].push_back(semigroup_row(p.data));
    r.doc["summary"]["residue"] = p.data.residue;
    return r;
  }

  inline CommandResult cmd_trace(std::vector<Int> const& gens,
                                 CommonOptions const&    common = {}) {
    CommandResult r;
    auto          p   = detail::prepare(gens, common, r.notice);
    r.doc = detail::base_doc("trace", detail::gens_inputs(gens, p.divisor));
    json          row = semigroup_row(p.data);
    row["trace_gens"]     = to_json(p.data.trace.generators());
    row["conductor_gens"] = to_json(conductor_ideal(p.h).generators());
    if (!p.h.is_trivial()) {
      auto const omega = canonical_ideal(p.h);
      row["canonical_gens"]     = to_json(omega.generators());
      row["anticanonical_gens"] = to_json(dual(omega).generators());
    }
    row["sandwich_ok"] = trace_sandwich_holds(p.data);
    r.doc["rows"].push_back(std::move(row));
    return r;
  }

  inline CommandResult cmd_classify(std::vector<Int> const& gens,
                                    CommonOptions const&    common = {}) {
    CommandResult r;
    auto          p      = detail::prepare(gens, common, r.notice);
    r.doc = detail::base_doc("classify", detail::gens_inputs(gens, p.divisor));
    json          row    = semigroup_row(p.data);
    auto const    bounds = bounds_report(p.data);
    row["pseudo_symmetric"] = p.h.is_pseudo_symmetric();
    row["cor13_tight"]      = bounds.cor13_tight;
    row["trace_equals_conductor"] = p.data.equals_conductor();
    row["trace_equals_m"]         = p.data.position.equals_m();
    r.doc["rows"].push_back(std::move(row));
    return r;
  }

  inline CommandResult cmd_matrix3(std::vector<Int> const& gens,
                                   CommonOptions const&    common = {}) {
    CommandResult r;
    auto          p = detail::prepare(gens, common, r.notice);
    if (p.h.embedding_dimension() != 3) {
      semitrace::detail::fail(ErrorCode::BadParams,
                              "matrix3 needs a 3-generated semigroup, got <"
                                  + semitrace::detail::join(p.h.generators())
                                  + ">");
    }
    r.doc = detail::base_doc("matrix3", detail::gens_inputs(gens, p.divisor));
    json       row = semigroup_row(p.data);
    auto const r3  = residue3(p.h);
    row["residue3"] = r3.residue;
    row["d"]        = r3.d;
    auto const position3 = trace_position3(p.h);
    row["position3"]     = std::string(to_string(position3.position));
    if (r3.matrix) {
      row["matrix"]     = matrix_json(*r3.matrix);
      row["frobenius3"] = frobenius3(*r3.matrix);
      auto const gi     = genus_identity_check(p.h);
      row["genus_identity"] = json{{"lhs", gi.lhs},
                                   {"a_product", gi.a_product},
                                   {"b_product", gi.b_product},
                                   {"ok", gi.ok}};
      if (!gi.ok || frobenius3(*r3.matrix) != p.h.frobenius()) {
        r.exit_code = exit_violation;
      }
    } else {
      row["matrix"] = nullptr;
    }
    if (r3.residue != p.data.residue || !(position3 == p.data.position)) {
      r.exit_code = exit_violation;
    }
    r.doc["rows"].push_back(std::move(row));
    return r;
  }

  struct FamilyOptions {
    std::string kind;
    Int         a = 0, b = 0, c = 0, d = 0, e = 0, m = 0, q = 0;
  };

  inline CommandResult cmd_family(FamilyOptions const& f,
                                  CommonOptions const& = {}) {
    FamilyMember member = [&] {
      if (f.kind == "arithmetic") {
        return arithmetic({f.a, f.d, f.e}, Verify::no);
      }
      if (f.kind == "med") {
        return med_family(f.m, f.q, Verify::no);
      }
      if (f.kind == "tm1") {
        return family_tm_i(f.a, f.b, f.c, Verify::no);
      }
      if (f.kind == "tm2") {
        return family_tm_ii(f.a, f.b, f.c, Verify::no);
      }
      if (f.kind == "conductor") {
        return conductor_family(f.a, Verify::no);
      }
      semitrace::detail::fail(ErrorCode::BadParams,
                              "unknown family kind '" + f.kind + "'");
    }();
    json inputs{{"kind", f.kind}};
    if (f.kind == "arithmetic") {
      inputs.update(json{{"a", f.a}, {"d", f.d}, {"e", f.e}});
    } else if (f.kind == "med") {
      inputs.update(json{{"m", f.m}, {"q", f.q}});
    } else if (f.kind == "conductor") {
      inputs["a"] = f.a;
    } else {
      inputs.update(json{{"a", f.a}, {"b", f.b}, {"c", f.c}});
    }
    CommandResult r;
    r.doc = detail::base_doc("family", std::move(inputs));
    json row = semigroup_row(member.semigroup);
    row["labeled_gens"]      = member.labeled;
    row["permutation"]       = member.permutation;
    row["predictions_apply"] = member.predictions_apply;
    auto const mismatches    = check_predictions(member);
    row["mismatches"]        = mismatches;
    r.doc["rows"].push_back(std::move(row));
    r.doc["summary"]["predictions_hold"] = mismatches.empty();
    if (!mismatches.empty()) {
      r.exit_code = exit_violation;
    }
    return r;
  }

  struct ShiftOptions {
    Int              a = 0, b = 0, j_max = 0;
    std::vector<Int> general;
  };

  inline CommandResult cmd_shift_scan(ShiftOptions const&  s,
                                      CommonOptions const& common = {}) {
    CommandResult r;
    ScanOptions   options{common.jobs, false};
    if (!s.general.empty()) {
      auto report = scan_general(s.general, s.j_max, options);
      r.doc       = detail::base_doc("shift-scan",
                               json{{"general", s.general}, {"jmax", s.j_max}});
      auto body   = general_scan_json(report);
      r.doc["rows"]    = body["rows"];
      body.erase("rows");
      r.doc["summary"] = std::move(body);
      r.shift_rows     = true;
      return r;
    }
    auto const params = shift_params(s.a, s.b);
    auto       report = scan(params, s.j_max, options);
    r.doc             = detail::base_doc(
        "shift-scan", json{{"a", s.a}, {"b", s.b}, {"jmax", s.j_max}});
    auto body        = shift_report_json(report);
    r.doc["rows"]    = body["rows"];
    body.erase("rows");
    r.doc["summary"] = std::move(body);
    r.shift_rows     = true;
    if (!report.verdicts.all()) {
      r.exit_code = exit_violation;
    }
    return r;
  }

  struct EnumerateFilters {
    bool               non_symmetric_only = false;
    std::optional<Int> min_residue;
  };

  inline CommandResult cmd_enumerate(CorpusOptions const&    c,
                                     EnumerateFilters const& filters = {},
                                     CommonOptions const&    common  = {}) {
    auto const sets = detail::corpus(c, common);
    auto rows = parallel_map(sets.size(), common.jobs, [&](std::size_t i) {
      return semigroup_row(NumericalSemigroup(sets[i]));
    });
    json inputs = detail::corpus_inputs(c, common);
    inputs["non_symmetric_only"] = filters.non_symmetric_only;
    if (filters.min_residue) {
      inputs["min_residue"] = *filters.min_residue;
    }
    CommandResult r;
    r.doc = detail::base_doc("enumerate", std::move(inputs));
    for (auto& row : rows) {
      if (filters.non_symmetric_only && row["symmetric"].get<bool>()) {
        continue;
      }
      if (filters.min_residue
          && row["residue"].get<Int>() < *filters.min_residue) {
        continue;
      }
      r.doc["rows"].push_back(std::move(row));
    }
    r.doc["summary"]["corpus_size"] = sets.size();
    r.doc["summary"]["count"]       = r.doc["rows"].size();
    return r;
  }

  //! Runs one bound over a corpus. Proved statements (cor13, prop11, prop22)
  //! exit 1 on any violation; q12 is open, so violations are findings.
  inline CommandResult cmd_experiment(std::string const&   name,
                                      CorpusOptions const& c,
                                      CommonOptions const& common = {}) {
    if (name != "q12" && name != "cor13" && name != "prop11"
        && name != "prop22") {
      semitrace::detail::fail(ErrorCode::BadParams,
                              "unknown experiment '" + name + "'");
    }
    auto const sets = detail::corpus(c, common);
    // Each entry: nullopt when the instance is out of scope or satisfies the
    // statement, else the witness row.
    auto checked = parallel_map(
        sets.size(), common.jobs, [&](std::size_t i) -> std::optional<json> {
          NumericalSemigroup h(sets[i]);
          if (name == "prop22" && h.embedding_dimension() != 3) {
            return json(nullptr);
          }
          auto const data   = trace_ideal(h, {.cross_check = false, .window_override = {}});
          auto const bounds = bounds_report(data);
          bool       ok     = true;
          if (name == "q12" || name == "prop22") {
            ok = bounds.q12_ok;
          } else if (name == "cor13") {
            ok = bounds.cor13_ok && bounds.cor13_tight;
          } else {
            ok = trace_sandwich_holds(data);
          }
          if (ok) {
            return std::nullopt;
          }
          return semigroup_row(data);
        });
    CommandResult r;
    json          inputs = detail::corpus_inputs(c, common);
    inputs["experiment"] = name;
    r.doc                = detail::base_doc("experiment", std::move(inputs));
    std::size_t tested   = 0;
    for (auto& entry : checked) {
      if (entry && entry->is_null()) {
        continue;
      }
      ++tested;
      if (entry) {
        r.doc["rows"].push_back(std::move(*entry));
      }
    }
    std::size_t const violations = r.doc["rows"].size();
    r.doc["summary"]["tested"]     = tested;
    r.doc["summary"]["violations"] = violations;
    if (name == "q12") {
      r.doc["summary"]["finding"] = violations > 0;
    } else if (violations > 0) {
      r.exit_code = exit_violation;
    }
    return r;
  }

  namespace detail {
    inline std::string text_value(json const& v) {
      if (v.is_string()) {
        return v.get<std::string>();
      }
      return v.dump();
    }
  }  // namespace detail

  inline std::string render(CommandResult const& r, Format format) {
    switch (format) {
      case Format::json: return dump_json(r.doc);
      case Format::csv:
        return r.shift_rows ? rows_to_csv(r.doc["rows"], shift_columns)
                            : rows_to_csv(r.doc["rows"], row_columns);
      case Format::text: break;
    }
    std::ostringstream out;
    auto const&        command = r.doc["command"].get<std::string>();
    if (command == "residue") {
      out << "residue: " << r.doc["summary"]["residue"].dump() << '\n';
      return out.str();
    }
    bool const many = r.doc["rows"].size() > 1 || r.shift_rows;
    if (many) {
      for (auto const& row : r.doc["rows"]) {
        out << row.dump() << '\n';
      }
    } else {
      for (auto const& row : r.doc["rows"]) {
        for (auto const& [key, value] : row.items()) {
          out << key << ": " << detail::text_value(value) << '\n';
        }
      }
    }
    for (auto const& [key, value] : r.doc["summary"].items()) {
      out << key << ": " << detail::text_value(value) << '\n';
    }
    return out.str();
  }

}  // namespace semitrace::cli

#endif  // SEMITRACE_TOOLS_COMMANDS_HPP_
