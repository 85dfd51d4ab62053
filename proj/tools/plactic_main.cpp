// Command-line surface over the plactic centralizer library.  Exit codes:
// 0 = requested checks pass, 1 = a checked property is false (counterexample
// printed), 2 = parse or resource errors.

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "plactic/characterize.hpp"
#include "plactic/counting.hpp"
#include "plactic/errors.hpp"
#include "plactic/exec.hpp"
#include "plactic/knuth.hpp"
#include "plactic/report.hpp"
#include "plactic/stability.hpp"
#include "plactic/tableau.hpp"
#include "plactic/word.hpp"

namespace {

using namespace plactic;

// Flat single-record reports (characterize, count) share one renderer: the
// JSON object itself, a one-row CSV, or aligned key/value lines.
void emit_flat(const nlohmann::json& j, Format format) {
  if (format == Format::json) {
    std::cout << j.dump() << '\n';
    return;
  }
  auto cell = [](const nlohmann::json& v) -> std::string {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    return v.dump();
  };
  if (format == Format::csv) {
    std::string header, row;
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (!header.empty()) {
        header += ',';
        row += ',';
      }
      header += it.key();
      row += cell(it.value());
    }
    std::cout << header << '\n' << row << '\n';
    return;
  }
  std::size_t keywidth = 0;
  for (auto it = j.begin(); it != j.end(); ++it)
    keywidth = std::max(keywidth, it.key().size());
  for (auto it = j.begin(); it != j.end(); ++it)
    std::cout << "  " << it.key()
              << std::string(keywidth - it.key().size() + 2, ' ')
              << cell(it.value()) << '\n';
}

void emit_tableau_rows(const char* which, const Tableau& t) {
  // CSV view of a tableau: one row per line, cells space-joined.
  for (std::size_t r = 0; r < t.rows().size(); ++r) {
    std::cout << which << ',' << r + 1 << ',';
    const auto& row = t.rows()[r];
    for (std::size_t i = 0; i < row.size(); ++i)
      std::cout << (i ? " " : "") << row[i];
    std::cout << '\n';
  }
}

void emit_word_list(const std::vector<Word>& words, Format format,
                    const char* json_key, nlohmann::json extra) {
  if (format == Format::json) {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& w : words) list.push_back(w.str());
    extra[json_key] = list;
    std::cout << extra.dump() << '\n';
    return;
  }
  if (format == Format::csv) std::cout << "word\n";
  for (const auto& w : words) std::cout << w.str() << '\n';
}

struct CharacterizeResult {
  nlohmann::json report;
  bool pass = false;
};

int run_app(int argc, char** argv) {
  CLI::App app{"plactic monoid centralizers: tableau algorithms, membership "
               "characterizations, stability probes, and coefficient counts"};
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand

  std::string format_name = "table";
  std::string cache_dir;
  Exec exec;
  app.add_option("--format", format_name, "output format: json, csv, table")
      ->capture_default_str();
  app.add_option("--guard", exec.guard,
                 "maximum objects any single enumeration may visit")
      ->capture_default_str();
  app.add_option("--workers", exec.workers, "worker threads (0 = all cores)")
      ->capture_default_str();
  app.add_option("--cache-dir", cache_dir,
                 "fingerprint cache directory (or set PLACTIC_CACHE_DIR)");

  // rsk ----------------------------------------------------------------
  std::string rsk_word;
  auto* cmd_rsk = app.add_subcommand("rsk", "insertion and recording tableaux");
  cmd_rsk->add_option("word", rsk_word, "input word")->required();

  // jdt ----------------------------------------------------------------
  std::string jdt_first, jdt_second;
  auto* cmd_jdt = app.add_subcommand(
      "jdt", "rectify the skew product configuration of two words' tableaux");
  cmd_jdt->add_option("first", jdt_first)->required();
  cmd_jdt->add_option("second", jdt_second)->required();

  // knuth-class ----------------------------------------------------------
  std::string kc_word;
  std::size_t kc_max_len = 9;
  auto* cmd_kc =
      app.add_subcommand("knuth-class", "list the plactic class of a word");
  cmd_kc->add_option("word", kc_word)->required();
  cmd_kc->add_option("--max-len", kc_max_len, "refuse longer words")
      ->capture_default_str();

  // centralizer ----------------------------------------------------------
  std::string cz_base;
  std::uint64_t cz_len = 0;
  Letter cz_max = 0;
  bool cz_witnesses = false;
  auto* cmd_cz = app.add_subcommand(
      "centralizer", "slice of C(u): words of length n over [m]");
  cmd_cz->add_option("u", cz_base)->required();
  cmd_cz->add_option("n", cz_len, "word length")->required();
  cmd_cz->add_option("m", cz_max, "alphabet bound")->required();
  cmd_cz->add_flag("--witnesses", cz_witnesses, "list member words explicitly");

  // characterize ---------------------------------------------------------
  auto* cmd_ch = app.add_subcommand(
      "characterize", "closed-form membership and structure checks");
  cmd_ch->require_subcommand(1);

  std::string c1_word;
  auto* ch_c1 = cmd_ch->add_subcommand("c1", "membership in C(1), three ways");
  ch_c1->add_option("w", c1_word)->required();

  std::string tl_base, tl_word;
  auto* ch_tl = cmd_ch->add_subcommand(
      "two-letter", "membership in C(u) for two-letter u by singleton counts");
  ch_tl->add_option("u", tl_base)->required();
  ch_tl->add_option("w", tl_word)->required();

  std::string st_word;
  Letter st_m = 0;
  auto* ch_st = cmd_ch->add_subcommand(
      "staircase", "membership in C(m(m-1)...1) by the first m rows");
  ch_st->add_option("w", st_word)->required();
  ch_st->add_option("m", st_m, "staircase size")->required();

  std::string rb_word, rb_base;
  auto* ch_rb = cmd_ch->add_subcommand(
      "row-bound", "row maxima bound forced by a descending run in u");
  ch_rb->add_option("w", rb_word)->required();
  ch_rb->add_option("u", rb_base)->required();

  std::string r2_word, r2_base;
  auto* ch_r2 = cmd_ch->add_subcommand(
      "r2", "second-row length of P(wu) by the product rule");
  ch_r2->add_option("w", r2_word)->required();
  ch_r2->add_option("u", r2_base)->required();

  std::string cc_base;
  std::size_t cc_kmax = 0;
  auto* ch_cc = cmd_ch->add_subcommand(
      "c1c2", "singleton-count invariance under powers");
  ch_cc->add_option("u", cc_base)->required();
  ch_cc->add_option("k_max", cc_kmax)->required();

  std::string rs_base;
  std::size_t rs_k = 0;
  auto* ch_rs = cmd_ch->add_subcommand(
      "row-shift", "row growth of P(u^k) for permutations, k >= m");
  ch_rs->add_option("u", rs_base)->required();
  ch_rs->add_option("k", rs_k)->required();

  std::string lg_base;
  std::size_t lg_i = 0, lg_k = 0;
  auto* ch_lg = cmd_ch->add_subcommand(
      "lwi-growth", "increasing-subsequence growth under one more factor");
  ch_lg->add_option("u", lg_base)->required();
  ch_lg->add_option("i", lg_i)->required();
  ch_lg->add_option("k", lg_k)->required();

  // stability --------------------------------------------------------------
  std::string sb_base;
  std::size_t sb_k = 4, sb_l = 5;
  Letter sb_m = 0;
  bool sb_m_set = false, sb_witnesses = false;
  auto* cmd_sb = app.add_subcommand(
      "stability", "probe C'(u^k) for k = 1..K at truncation (L, M)");
  cmd_sb->add_option("u", sb_base)->required();
  cmd_sb->add_option("--K", sb_k, "largest power probed")->capture_default_str();
  cmd_sb->add_option("--L", sb_l, "max word length")->capture_default_str();
  cmd_sb->add_option("--M", sb_m, "alphabet bound (default: max(u)+1)")
      ->each([&](const std::string&) { sb_m_set = true; });
  cmd_sb->add_flag("--witnesses", sb_witnesses,
                   "track member words and print gained/lost witnesses");

  // count --------------------------------------------------------------
  std::string ct_base;
  std::uint64_t ct_len = 0;
  Letter ct_max = 0;
  std::size_t ct_distinct = 0;
  auto* cmd_ct = app.add_subcommand(
      "count", "c_{n,m}(u), optionally refined by distinct letters");
  cmd_ct->add_option("u", ct_base)->required();
  cmd_ct->add_option("n", ct_len, "word length")->required();
  cmd_ct->add_option("m", ct_max, "alphabet bound")->required();
  cmd_ct->add_option("--distinct", ct_distinct,
                     "count only classes with exactly k distinct letters");

  // coeffs --------------------------------------------------------------
  std::uint64_t cf_n = 0;
  auto* cmd_cf = app.add_subcommand(
      "coeffs", "binomial-basis coefficients of m -> c_{n,m}(1) with checks");
  cmd_cf->add_option("n", cf_n)->required();

  // conjectures ----------------------------------------------------------
  std::string cj_which;
  std::uint64_t cj_nmax = 12;
  Letter cj_m = 3, cj_alphabet = 2;
  std::size_t cj_lenmax = 4;
  std::size_t cj_k = 0, cj_l = 0;
  Letter cj_trunc_m = 0;
  bool cj_k_set = false, cj_l_set = false, cj_m_set = false;
  auto* cmd_cj =
      app.add_subcommand("conjectures", "desk-scale conjecture verification");
  cmd_cj
      ->add_option("--which", cj_which,
                   "one of: logconcave, packed, stability")
      ->required();
  cmd_cj->add_option("--n-max", cj_nmax, "logconcave: largest n")
      ->capture_default_str();
  cmd_cj->add_option("--m", cj_m, "packed: alphabet size")
      ->capture_default_str();
  cmd_cj->add_option("--alphabet", cj_alphabet, "stability: alphabet size")
      ->capture_default_str();
  cmd_cj->add_option("--len-max", cj_lenmax, "packed/stability: longest base")
      ->capture_default_str();
  cmd_cj->add_option("--K", cj_k, "largest power (default depends on --which)")
      ->each([&](const std::string&) { cj_k_set = true; });
  cmd_cj->add_option("--L", cj_l, "truncation length (default depends)")
      ->each([&](const std::string&) { cj_l_set = true; });
  cmd_cj->add_option("--M", cj_trunc_m, "stability: truncation alphabet")
      ->each([&](const std::string&) { cj_m_set = true; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  Format format = parse_format(format_name);
  StabilityOptions sopts;
  if (!cache_dir.empty()) sopts.cache_dir = cache_dir;

  if (cmd_rsk->parsed()) {
    Word w = Word::parse(rsk_word);
    auto [p, q] = rsk(w);
    if (format == Format::json) {
      nlohmann::json j{{"word", w.str()},
                       {"p", tableau_json(p)},
                       {"q", tableau_json(q)}};
      std::cout << j.dump() << '\n';
    } else if (format == Format::csv) {
      std::cout << "tableau,row,cells\n";
      emit_tableau_rows("p", p);
      emit_tableau_rows("q", q);
    } else {
      std::cout << "P:\n" << render_tableau(p) << "Q:\n" << render_tableau(q);
    }
    return 0;
  }

  if (cmd_jdt->parsed()) {
    Word first = Word::parse(jdt_first);
    Word second = Word::parse(jdt_second);
    auto cfg = SkewConfiguration::product(p_tableau(first), p_tableau(second));
    Tableau rect = jdt_rectify(cfg);
    bool agrees = rect == p_tableau(concat(first, second));
    if (format == Format::json) {
      nlohmann::json j{{"first", first.str()},
                       {"second", second.str()},
                       {"rectified", tableau_json(rect)},
                       {"agrees_with_insertion", agrees}};
      std::cout << j.dump() << '\n';
    } else if (format == Format::csv) {
      std::cout << "tableau,row,cells\n";
      emit_tableau_rows("rectified", rect);
    } else {
      std::cout << "rectified:\n"
                << render_tableau(rect) << "agrees with insertion: "
                << (agrees ? "yes" : "no") << '\n';
    }
    return agrees ? 0 : 1;
  }

  if (cmd_kc->parsed()) {
    Word w = Word::parse(kc_word);
    auto members = knuth_class(w, kc_max_len);
    emit_word_list(members, format, "members",
                   {{"word", w.str()}, {"class_size", members.size()}});
    return 0;
  }

  if (cmd_cz->parsed()) {
    Word u = Word::parse(cz_base);
    auto slice = centralizer_slice(u, cz_len, cz_max, exec);
    if (cz_witnesses) {
      auto words = centralizer_words(u, cz_len, cz_max, exec);
      if (format == Format::json) {
        nlohmann::json j = slice_json(slice);
        nlohmann::json list = nlohmann::json::array();
        for (const auto& w : words) list.push_back(w.str());
        j["witnesses"] = list;
        std::cout << j.dump() << '\n';
      } else {
        // witness lists are newline-separated text
        if (format == Format::csv) std::cout << "word\n";
        for (const auto& w : words) std::cout << w.str() << '\n';
      }
    } else {
      std::cout << render_slice(slice, format);
    }
    return 0;
  }

  if (cmd_ch->parsed()) {
    CharacterizeResult res;
    if (ch_c1->parsed()) {
      Word w = Word::parse(c1_word);
      auto m = c_one_membership(w);
      res.report = {{"check", "c1"},
                    {"word", w.str()},
                    {"direct", m.direct},
                    {"first_row_ones", m.first_row_ones},
                    {"lwi_match", m.lwi_match},
                    {"consistent", m.consistent()},
                    {"member", m.member()}};
      res.pass = m.member() && m.consistent();
    } else if (ch_tl->parsed()) {
      Word u = Word::parse(tl_base);
      Word w = Word::parse(tl_word);
      bool direct = in_centralizer(u, w);
      try {
        bool member = two_letter_membership(u, w);
        res.report = {{"check", "two-letter"},
                      {"base", u.str()},
                      {"word", w.str()},
                      {"route", "two_letter"},
                      {"member", member},
                      {"matches_direct", member == direct}};
        res.pass = member && member == direct;
      } catch (const routed_error& e) {
        // constant base: C(a^r) = C(a), the single-letter case
        Word reduced{{u[0]}};
        bool member = in_centralizer(reduced, w);
        res.report = {{"check", "two-letter"},
                      {"base", u.str()},
                      {"word", w.str()},
                      {"route", e.route},
                      {"reduced_base", reduced.str()},
                      {"member", member},
                      {"matches_direct", member == direct}};
        res.pass = member && member == direct;
      }
    } else if (ch_st->parsed()) {
      Word w = Word::parse(st_word);
      bool member = staircase_membership(w, st_m);
      std::vector<Letter> stairs(st_m);
      for (Letter i = 0; i < st_m; ++i) stairs[i] = st_m - i;
      bool direct = in_centralizer(Word{stairs}, w);
      res.report = {{"check", "staircase"},
                    {"word", w.str()},
                    {"m", st_m},
                    {"member", member},
                    {"matches_direct", member == direct}};
      res.pass = member && member == direct;
    } else if (ch_rb->parsed()) {
      Word w = Word::parse(rb_word);
      Word u = Word::parse(rb_base);
      bool bound = row_bound_check(w, u);
      bool member = in_centralizer(u, w);
      res.report = {{"check", "row-bound"},
                    {"word", w.str()},
                    {"base", u.str()},
                    {"run_length", descending_run_from_max(u)},
                    {"bound_holds", bound},
                    {"member", member},
                    {"implication_ok", !member || bound}};
      res.pass = bound;
    } else if (ch_r2->parsed()) {
      Word w = Word::parse(r2_word);
      Word u = Word::parse(r2_base);
      std::uint64_t predicted = r2_product_length(w, u);
      std::uint64_t actual = p_tableau(concat(w, u)).row(2).size();
      res.report = {{"check", "r2"},
                    {"word", w.str()},
                    {"base", u.str()},
                    {"predicted", predicted},
                    {"actual", actual},
                    {"match", predicted == actual}};
      res.pass = predicted == actual;
    } else if (ch_cc->parsed()) {
      Word u = Word::parse(cc_base);
      bool holds = c1c2_power_invariance(u, cc_kmax);
      res.report = {{"check", "c1c2"},
                    {"base", u.str()},
                    {"k_max", cc_kmax},
                    {"holds", holds}};
      res.pass = holds;
    } else if (ch_rs->parsed()) {
      Word u = Word::parse(rs_base);
      bool holds = row_shift_check(u, rs_k);
      res.report = {
          {"check", "row-shift"}, {"base", u.str()}, {"k", rs_k}, {"holds", holds}};
      res.pass = holds;
    } else {
      Word u = Word::parse(lg_base);
      bool holds = lwi_growth_check(u, lg_i, lg_k);
      res.report = {{"check", "lwi-growth"},
                    {"base", u.str()},
                    {"i", lg_i},
                    {"k", lg_k},
                    {"holds", holds}};
      res.pass = holds;
    }
    emit_flat(res.report, format);
    return res.pass ? 0 : 1;
  }

  if (cmd_sb->parsed()) {
    Word u = Word::parse(sb_base);
    if (!sb_m_set) sb_m = u.max_letter() + 1;
    sopts.with_members = sb_witnesses;
    auto report = stability_probe(u, sb_k, sb_l, sb_m, exec, sopts);
    std::cout << render_stability(report, format);
    return 0;
  }

  if (cmd_ct->parsed()) {
    Word u = Word::parse(ct_base);
    nlohmann::json j{{"base", u.str()},
                     {"length", ct_len},
                     {"max_letter", ct_max}};
    if (cmd_ct->count("--distinct")) {
      j["distinct"] = ct_distinct;
      j["count"] = count_c_refined(ct_len, ct_max, ct_distinct, u, exec).str();
    } else {
      j["count"] = count_c(ct_len, ct_max, u, exec).str();
    }
    emit_flat(j, format);
    return 0;
  }

  if (cmd_cf->parsed()) {
    auto report = coefficient_report(cf_n, exec);
    std::cout << render_coefficients(report, format);
    return report.all_pass() ? 0 : 1;
  }

  // conjectures
  if (cj_which == "logconcave") {
    bool all = true;
    nlohmann::json results = nlohmann::json::array();
    std::ostringstream csv, table;
    csv << "n,k,b\n";
    for (std::uint64_t n = 2; n <= cj_nmax; ++n) {
      auto report = coefficient_report(n, exec);
      all = all && report.log_concave;
      nlohmann::json bs = nlohmann::json::array();
      for (std::size_t k = 1; k <= report.b.coeffs.size(); ++k) {
        bs.push_back(report.b.coeffs[k - 1].str());
        csv << n << ',' << k << ',' << report.b.coeffs[k - 1].str() << '\n';
      }
      results.push_back(
          {{"n", n}, {"b", bs}, {"log_concave", report.log_concave}});
      table << "  n=" << n << " b:";
      for (const auto& c : report.b.coeffs) table << ' ' << c.str();
      table << (report.log_concave ? "  log-concave" : "  NOT log-concave")
            << '\n';
    }
    if (format == Format::json) {
      nlohmann::json j{{"which", "logconcave"},
                       {"n_max", cj_nmax},
                       {"results", results},
                       {"all_pass", all}};
      std::cout << j.dump() << '\n';
    } else if (format == Format::csv) {
      std::cout << csv.str();
    } else {
      std::cout << "log-concavity of b for n=2.." << cj_nmax << ": "
                << (all ? "all pass" : "FALSIFIED") << '\n'
                << table.str();
    }
    return all ? 0 : 1;
  }

  if (cj_which == "packed") {
    std::size_t kk = cj_k_set ? cj_k : cj_m + 3;
    std::size_t ll = cj_l_set ? cj_l : cj_lenmax + 1;
    auto report = packed_conjecture_sweep(cj_m, cj_lenmax, kk, ll, exec, sopts);
    std::cout << render_packed_sweep(report, format);
    return report.all_pass ? 0 : 1;
  }

  if (cj_which == "stability") {
    std::size_t kk = cj_k_set ? cj_k : 4;
    std::size_t ll = cj_l_set ? cj_l : 5;
    Letter mm = cj_m_set ? cj_trunc_m : cj_alphabet + 1;
    // one representative per plactic class; C(u) depends only on the class
    std::set<Tableau> seen;
    bool all = true;
    nlohmann::json entries = nlohmann::json::array();
    std::ostringstream lines;
    std::vector<Word> failures;
    for (std::size_t n = 1; n <= cj_lenmax; ++n) {
      std::vector<Letter> w(n, 1);
      while (true) {
        Word word{w};
        if (seen.insert(p_tableau(word)).second) {
          bool stable =
              strong_stability_check_two_letter(word, kk, ll, mm, exec, sopts);
          all = all && stable;
          if (!stable) failures.push_back(word);
          entries.push_back({{"word", word.str()}, {"stable", stable}});
          lines << "  " << word.str() << ' '
                << (stable ? "stable" : "UNSTABLE") << '\n';
        }
        std::size_t pos = n;
        while (pos > 0 && w[pos - 1] == cj_alphabet) w[--pos] = 1;
        if (pos == 0) break;
        ++w[pos - 1];
      }
    }
    if (format == Format::json) {
      nlohmann::json j{{"which", "stability"},   {"alphabet", cj_alphabet},
                       {"len_max", cj_lenmax},   {"K", kk},
                       {"L", ll},                {"M", mm},
                       {"entries", entries},     {"all_pass", all}};
      std::cout << j.dump() << '\n';
    } else if (format == Format::csv) {
      std::cout << "word,stable\n";
      for (const auto& e : entries)
        std::cout << e["word"].get<std::string>() << ','
                  << (e["stable"].get<bool>() ? "true" : "false") << '\n';
    } else {
      std::cout << "strong stability over [" << +cj_alphabet << "]^{1.."
                << cj_lenmax << "} at K=" << kk << " L=" << ll << " M=" << +mm
                << ": " << (all ? "all pass" : "FALSIFIED") << '\n'
                << lines.str();
      if (!all) {
        std::cout << "  counterexample candidates:";
        for (const auto& w : failures) std::cout << ' ' << w.str();
        std::cout << '\n';
      }
    }
    return all ? 0 : 1;
  }

  throw std::invalid_argument("conjectures: --which must be logconcave, "
                              "packed, or stability");
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run_app(argc, argv);
  } catch (const plactic::resource_limit_error& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "report error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
