#include "plactic/report.hpp"

#include <array>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace plactic {

namespace {

std::string dec(const BigInt& v) { return v.str(); }

// RFC 4180 quoting; needed because comma-separated words can appear in cells.
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string shape_str(const Partition& shape, char sep = ',') {
  std::string out;
  for (std::size_t i = 0; i < shape.parts().size(); ++i) {
    if (i) out += sep;
    out += std::to_string(shape.parts()[i]);
  }
  return out.empty() ? "-" : out;
}

std::string rows_str(const std::vector<std::vector<Letter>>& rows) {
  if (rows.empty()) return "[]";
  std::string out;
  for (const auto& row : rows) {
    out += '[';
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(row[i]);
    }
    out += ']';
  }
  return out;
}

nlohmann::json coeff_json(const CoeffVector& cv) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : cv.coeffs) coeffs.push_back(dec(c));
  return {{"basis_shift", cv.basis_shift}, {"coeffs", coeffs}};
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

Format parse_format(const std::string& name) {
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  if (name == "table") return Format::table;
  throw std::invalid_argument("unknown format '" + name +
                              "' (expected json, csv, or table)");
}

nlohmann::json tableau_json(const Tableau& t) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : t.rows()) rows.push_back(row);
  return {{"rows", rows}};
}

Tableau tableau_from_json(const nlohmann::json& j) {
  std::vector<std::vector<Letter>> rows;
  for (const auto& row : j.at("rows")) {
    std::vector<Letter> r;
    for (const auto& cell : row) {
      if (!cell.is_number_unsigned() || cell.get<std::uint64_t>() == 0 ||
          cell.get<std::uint64_t>() > std::numeric_limits<Letter>::max())
        throw std::invalid_argument("tableau entries must be positive integers");
      r.push_back(cell.get<Letter>());
    }
    rows.push_back(std::move(r));
  }
  return Tableau(std::move(rows));  // validating constructor
}

nlohmann::json slice_json(const CentralizerSlice& slice) {
  nlohmann::json classes = nlohmann::json::array();
  for (const auto& wc : slice.classes) {
    nlohmann::json shape = nlohmann::json::array();
    Partition sh = wc.tableau.shape();  // keep alive across the loop
    for (auto part : sh.parts()) shape.push_back(part);
    classes.push_back({{"shape", shape},
                       {"tableau", tableau_json(wc.tableau)},
                       {"weight", dec(wc.weight)}});
  }
  return {{"base", slice.base.str()},
          {"length", slice.length},
          {"max_letter", slice.max_letter},
          {"class_count", slice.classes.size()},
          {"classes", classes},
          {"total", dec(slice.total)}};
}

nlohmann::json stability_json(const StabilityReport& report) {
  nlohmann::json powers = nlohmann::json::array();
  for (const auto& p : report.powers)
    powers.push_back({{"k", p.k},
                      {"fingerprint", std::to_string(p.fingerprint)},
                      {"word_count", dec(p.word_count)},
                      {"class_count", p.class_count}});
  nlohmann::json diffs = nlohmann::json::array();
  for (const auto& d : report.witness_diffs) {
    nlohmann::json gained = nlohmann::json::array();
    for (const auto& w : d.gained) gained.push_back(w.str());
    nlohmann::json lost = nlohmann::json::array();
    for (const auto& w : d.lost) lost.push_back(w.str());
    diffs.push_back({{"k_from", d.k_from},
                     {"k_to", d.k_to},
                     {"gained", gained},
                     {"lost", lost}});
  }
  nlohmann::json j{{"base", report.base.str()},
                   {"max_power", report.max_power},
                   {"max_len", report.max_len},
                   {"max_letter", report.max_letter},
                   {"powers", powers},
                   {"witness_diffs", diffs}};
  if (report.observed_stabilization_index)
    j["observed_stabilization_index"] = *report.observed_stabilization_index;
  else
    j["observed_stabilization_index"] = nullptr;
  return j;
}

nlohmann::json coefficient_json(const CoefficientReport& report) {
  nlohmann::json values = nlohmann::json::array();
  for (const auto& v : report.values) values.push_back(dec(v));
  nlohmann::json checks{{"a0_zero", report.a0_zero},
                        {"a1_one", report.a1_one},
                        {"a2_formula", report.a2_formula},
                        {"a_top_one", report.a_top_one},
                        {"a_positive", report.a_positive},
                        {"b1_one", report.b1_one},
                        {"b2_formula", report.b2_formula},
                        {"bn_one", report.bn_one},
                        {"b_positive", report.b_positive},
                        {"b_matches_refined", report.b_matches_refined},
                        {"b_valid_below_degree", report.b_valid_below_degree},
                        {"log_concave", report.log_concave},
                        {"all_pass", report.all_pass()}};
  return {{"n", report.n},
          {"values", values},
          {"a", coeff_json(report.a)},
          {"b", coeff_json(report.b)},
          {"checks", checks}};
}

nlohmann::json packed_sweep_json(const PackedSweepReport& report) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : report.entries)
    entries.push_back(
        {{"representative", e.representative.str()}, {"stable", e.stable}});
  nlohmann::json candidates = nlohmann::json::array();
  for (const auto& w : report.candidates) candidates.push_back(w.str());
  return {{"m", report.m},
          {"max_len", report.max_len},
          {"max_power", report.max_power},
          {"trunc_len", report.trunc_len},
          {"all_pass", report.all_pass},
          {"entries", entries},
          {"candidates", candidates}};
}

std::string render_tableau(const Tableau& t) {
  if (t.empty()) return "(empty)\n";
  std::string out;
  for (const auto& row : t.rows()) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(row[i]);
    }
    out += '\n';
  }
  return out;
}

std::string render_slice(const CentralizerSlice& slice, Format format) {
  if (format == Format::json) return slice_json(slice).dump() + "\n";
  std::ostringstream os;
  if (format == Format::csv) {
    os << "reading_word,shape,weight\n";
    for (const auto& wc : slice.classes)
      os << csv_field(wc.tableau.reading_word().str()) << ','
         << shape_str(wc.tableau.shape(), ' ') << ',' << dec(wc.weight)
         << '\n';
    return os.str();
  }
  os << "slice base=" << slice.base.str() << " n=" << slice.length
     << " m=" << static_cast<std::uint64_t>(slice.max_letter) << ": "
     << slice.classes.size() << " classes, " << dec(slice.total) << " words\n";
  for (const auto& wc : slice.classes)
    os << "  " << rows_str(wc.tableau.rows())
       << " shape=" << shape_str(wc.tableau.shape())
       << " weight=" << dec(wc.weight) << '\n';
  return os.str();
}

std::string render_stability(const StabilityReport& report, Format format) {
  if (format == Format::json) return stability_json(report).dump() + "\n";
  std::ostringstream os;
  if (format == Format::csv) {
    os << "base,k,fingerprint,word_count,class_count,stabilized\n";
    for (const auto& p : report.powers) {
      bool settled = report.observed_stabilization_index &&
                     p.k >= *report.observed_stabilization_index;
      os << csv_field(report.base.str()) << ',' << p.k << ',' << p.fingerprint
         << ',' << dec(p.word_count) << ',' << p.class_count << ','
         << (settled ? "true" : "false") << '\n';
    }
    return os.str();
  }
  os << "stability base=" << report.base.str() << " K=" << report.max_power
     << " L=" << report.max_len
     << " M=" << static_cast<std::uint64_t>(report.max_letter) << '\n';
  for (const auto& p : report.powers)
    os << "  k=" << p.k << " fingerprint=" << p.fingerprint
       << " words=" << dec(p.word_count) << " classes=" << p.class_count
       << '\n';
  if (report.observed_stabilization_index)
    os << "  observed stabilization index: "
       << *report.observed_stabilization_index << '\n';
  else
    os << "  observed stabilization index: none\n";
  for (const auto& d : report.witness_diffs) {
    os << "  diff " << d.k_from << "->" << d.k_to << ':';
    for (const auto& w : d.gained) os << " +" << w.str();
    for (const auto& w : d.lost) os << " -" << w.str();
    os << '\n';
  }
  return os.str();
}

std::string render_coefficients(const CoefficientReport& report,
                                Format format) {
  if (format == Format::json) return coefficient_json(report).dump() + "\n";
  std::ostringstream os;
  if (format == Format::csv) {
    os << "n,k,b\n";
    for (std::size_t k = 1; k <= report.b.coeffs.size(); ++k)
      os << report.n << ',' << k << ',' << dec(report.b.coeffs[k - 1]) << '\n';
    return os.str();
  }
  os << "coefficients n=" << report.n << '\n';
  os << "  values m=0.." << report.n + 2 << ':';
  for (const auto& v : report.values) os << ' ' << dec(v);
  os << '\n';
  // right-aligned columns: n, k, a_k (basis C(m,k)), b_k (basis C(m-1,k-1))
  std::vector<std::array<std::string, 4>> grid;
  grid.push_back({"n", "k", "a_k", "b_k"});
  for (std::size_t k = 0; k <= report.n; ++k) {
    std::string a = k < report.a.coeffs.size() ? dec(report.a.coeffs[k]) : "-";
    std::string b =
        k >= 1 && k <= report.b.coeffs.size() ? dec(report.b.coeffs[k - 1]) : "-";
    grid.push_back({std::to_string(report.n), std::to_string(k), a, b});
  }
  std::array<std::size_t, 4> width{};
  for (const auto& row : grid)
    for (std::size_t c = 0; c < 4; ++c)
      width[c] = std::max(width[c], row[c].size());
  for (const auto& row : grid) {
    os << " ";
    for (std::size_t c = 0; c < 4; ++c)
      os << ' ' << std::string(width[c] - row[c].size(), ' ') << row[c];
    os << '\n';
  }
  os << "  checks: a0_zero=" << yes_no(report.a0_zero)
     << " a1_one=" << yes_no(report.a1_one)
     << " a2_formula=" << yes_no(report.a2_formula)
     << " a_top_one=" << yes_no(report.a_top_one)
     << " a_positive=" << yes_no(report.a_positive)
     << " b1_one=" << yes_no(report.b1_one)
     << " b2_formula=" << yes_no(report.b2_formula)
     << " bn_one=" << yes_no(report.bn_one)
     << " b_positive=" << yes_no(report.b_positive)
     << " b_matches_refined=" << yes_no(report.b_matches_refined)
     << " b_valid_below_degree=" << yes_no(report.b_valid_below_degree)
     << " log_concave=" << yes_no(report.log_concave)
     << " all_pass=" << yes_no(report.all_pass()) << '\n';
  return os.str();
}

std::string render_packed_sweep(const PackedSweepReport& report,
                                Format format) {
  if (format == Format::json) return packed_sweep_json(report).dump() + "\n";
  std::ostringstream os;
  if (format == Format::csv) {
    os << "representative,stable\n";
    for (const auto& e : report.entries)
      os << csv_field(e.representative.str()) << ','
         << (e.stable ? "true" : "false") << '\n';
    return os.str();
  }
  os << "packed sweep m=" << static_cast<std::uint64_t>(report.m)
     << " max_len=" << report.max_len << " K=" << report.max_power
     << " trunc_len=" << report.trunc_len << ": "
     << (report.all_pass ? "all stable" : "counterexample candidates found")
     << " (" << report.entries.size() << " classes)\n";
  for (const auto& e : report.entries)
    os << "  " << e.representative.str() << ' '
       << (e.stable ? "stable" : "UNSTABLE") << '\n';
  if (!report.candidates.empty()) {
    os << "  candidates:";
    for (const auto& w : report.candidates) os << ' ' << w.str();
    os << '\n';
  }
  return os.str();
}

}  // namespace plactic
