#ifndef SEMITRACE_REPORT_HPP_
#define SEMITRACE_REPORT_HPP_

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "ideal.hpp"
#include "semigroup.hpp"
#include "shifted.hpp"
#include "threegen.hpp"

namespace semitrace {

  using json = nlohmann::json;

  inline constexpr std::string_view schema_version = "1";

  //! CSV column order for per-semigroup rows.
  inline constexpr std::array<std::string_view, 17> row_columns{
      "gens",
      "mult",
      "edim",
      "frobenius",
      "genus",
      "n",
      "type",
      "pf",
      "residue",
      "trace_sporadic",
      "position",
      "also_equals_m",
      "symmetric",
      "almost_symmetric",
      "nearly_gorenstein",
      "cor13_ok",
      "q12_ok"};

  //! CSV column order for shift-scan rows.
  inline constexpr std::array<std::string_view, 11> shift_columns{
      "j",
      "divisor",
      "gens",
      "degenerate",
      "residue",
      "residue3",
      "symmetric",
      "nearly_gorenstein",
      "almost_symmetric",
      "matrix_a",
      "matrix_b"};

  inline json to_json(std::span<Int const> xs) {
    return json(std::vector<Int>(xs.begin(), xs.end()));
  }

  inline json semigroup_row(TraceData const& data) {
    auto const& h      = data.base;
    auto const  bounds = bounds_report(data);
    json        row;
    row["gens"]              = to_json(h.generators());
    row["mult"]              = h.multiplicity();
    row["edim"]              = h.embedding_dimension();
    row["frobenius"]         = h.frobenius();
    row["genus"]             = h.genus();
    row["n"]                 = h.nongaps_count();
    row["type"]              = h.type();
    row["pf"]                = to_json(h.pseudo_frobenius());
    row["residue"]           = data.residue;
    row["trace_sporadic"]    = data.sporadic;
    row["position"]          = std::string(to_string(data.position.position));
    row["also_equals_m"]     = data.position.also_equals_m;
    row["symmetric"]         = h.is_symmetric();
    row["almost_symmetric"]  = h.is_almost_symmetric();
    row["nearly_gorenstein"] = is_nearly_gorenstein(data);
    row["cor13_ok"]          = bounds.cor13_ok;
    row["q12_ok"]            = bounds.q12_ok;
    return row;
  }

  inline json semigroup_row(NumericalSemigroup const& h) {
    return semigroup_row(trace_ideal(h, {.cross_check = false, .window_override = {}}));
  }

  inline json matrix_json(StructureMatrix const& s) {
    return json{{"n", s.n}, {"a", s.a}, {"b", s.b}, {"c", s.c}, {"d", s.d()}};
  }

  inline json shift_row_json(ShiftRow const& r) {
    json row;
    row["j"]                 = r.j;
    row["divisor"]           = r.divisor;
    row["gens"]              = r.gens;
    row["degenerate"]        = r.degenerate;
    row["residue"]           = r.residue;
    row["residue3"]          = r.residue3 ? json(*r.residue3) : json(nullptr);
    row["symmetric"]         = r.symmetric;
    row["nearly_gorenstein"] = r.nearly_gorenstein;
    row["almost_symmetric"]  = r.almost_symmetric;
    row["matrix_a"]          = r.matrix ? json(r.matrix->a) : json(nullptr);
    row["matrix_b"]          = r.matrix ? json(r.matrix->b) : json(nullptr);
    return row;
  }

  inline json shift_report_json(ShiftScanReport const& report) {
    json out;
    auto const& p = report.params;
    out["params"] = json{{"a", p.a}, {"b", p.b}, {"D", p.D}, {"T", p.T},
                         {"k", p.k}};
    out["j_max"] = report.j_max;
    json rows    = json::array();
    for (auto const& r : report.rows) {
      rows.push_back(shift_row_json(r));
    }
    out["rows"] = std::move(rows);
    auto const& v = report.verdicts;
    out["verdicts"] = json{{"residue_routes_ok", v.residue_routes_ok},
                           {"periodicity_ok", v.periodicity_ok},
                           {"lemma33_ok", v.lemma33_ok},
                           {"middle_eq_ok", v.middle_eq_ok},
                           {"stable_formula_ok", v.stable_formula_ok},
                           {"matrix_step_ok", v.matrix_step_ok},
                           {"cor34_div_ok", v.cor34_div_ok},
                           {"cor34_bound_ok", v.cor34_bound_ok},
                           {"nearly_g_periodic_ok", v.nearly_g_periodic_ok}};
    out["empirical_onset"]   = report.empirical_onset;
    out["theoretical_onset"] = report.theoretical_onset;
    out["detected_period"]   = report.detected_period;
    out["witnesses"]         = report.witnesses;
    return out;
  }

  inline json general_scan_json(GeneralScanReport const& report) {
    json out;
    out["offsets"] = report.offsets;
    out["width"]   = report.width;
    out["j_max"]   = report.j_max;
    json rows      = json::array();
    for (auto const& r : report.rows) {
      rows.push_back(json{{"j", r.j}, {"gens", r.gens}, {"residue", r.residue}});
    }
    out["rows"]                 = std::move(rows);
    out["empirical_onset"]      = report.empirical_onset;
    out["detected_period"]      = report.detected_period;
    out["width_period_on_tail"] = report.width_period_on_tail;
    return out;
  }

  //! One JSON document per invocation: UTF-8, keys sorted, trailing newline.
  inline std::string dump_json(json const& doc) {
    return doc.dump(2) + "\n";
  }

  namespace detail {
    inline std::string csv_cell(json const& value) {
      std::string text;
      if (value.is_array()) {
        for (std::size_t i = 0; i < value.size(); ++i) {
          text += (i == 0 ? "" : " ") + csv_cell(value[i]);
        }
      } else if (value.is_string()) {
        text = value.get<std::string>();
      } else if (value.is_null()) {
        text = "";
      } else {
        text = value.dump();
      }
      if (text.find_first_of(",\"\r\n") == std::string::npos) {
        return text;
      }
      std::string quoted = "\"";
      for (char ch : text) {
        quoted += ch;
        if (ch == '"') {
          quoted += '"';
        }
      }
      return quoted + "\"";
    }
  }  // namespace detail

  //! RFC 4180: header row, CRLF line ends, quoting where needed. List cells
  //! are space separated.
  template <std::size_t N>
  std::string rows_to_csv(json const&                             rows,
                          std::array<std::string_view, N> const& columns) {
    std::string out;
    for (std::size_t i = 0; i < N; ++i) {
      out += (i == 0 ? "" : ",") + std::string(columns[i]);
    }
    out += "\r\n";
    for (auto const& row : rows) {
      for (std::size_t i = 0; i < N; ++i) {
        auto key = std::string(columns[i]);
        out += (i == 0 ? "" : ",")
               + (row.contains(key) ? detail::csv_cell(row[key]) : "");
      }
      out += "\r\n";
    }
    return out;
  }

}  // namespace semitrace

#endif  // SEMITRACE_REPORT_HPP_
