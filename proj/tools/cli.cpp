#include "cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <filesystem>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>

#include "prat/cohen.hpp"
#include "prat/dirichlet.hpp"
#include "prat/errors.hpp"
#include "prat/p_rationality.hpp"
#include "prat/qexp_io.hpp"
#include "prat/search5.hpp"
#include "prat/serre_scan.hpp"

namespace prat::cli {

namespace {

using json = nlohmann::ordered_json;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<json>> rows;
};

std::string cell_text(const json& v) {
  if (v.is_null()) return "-";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void emit(const Table& t, const std::string& format, std::ostream& out) {
  if (format == "json") {
    json arr = json::array();
    for (const auto& row : t.rows) {
      json obj = json::object();
      for (std::size_t c = 0; c < t.columns.size(); ++c) obj[t.columns[c]] = row[c];
      arr.push_back(std::move(obj));
    }
    out << arr.dump(2) << '\n';
    return;
  }
  for (std::size_t c = 0; c < t.columns.size(); ++c) out << (c ? "\t" : "") << t.columns[c];
  out << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "\t" : "") << cell_text(row[c]);
    out << '\n';
  }
}

json rat(const BigRational& q) { return to_string(q); }

template <typename T>
json opt(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

std::vector<std::int64_t> parse_csv(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::int64_t v{};
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc() || ptr != item.data() + item.size()) {
      throw CLI::ValidationError("list", "bad integer '" + item + "'");
    }
    out.push_back(v);
  }
  return out;
}

std::vector<std::uint64_t> parse_csv_unsigned(const std::string& text) {
  std::vector<std::uint64_t> out;
  for (auto v : parse_csv(text)) {
    if (v < 0) throw CLI::ValidationError("list", "negative entry " + std::to_string(v));
    out.push_back(static_cast<std::uint64_t>(v));
  }
  return out;
}

std::vector<std::string> report_columns() {
  return {"d", "p", "l_value", "valuation", "verdict", "reason"};
}

std::vector<json> report_row(const RationalityReport& r) {
  json lv = r.l_value ? rat(*r.l_value) : json(nullptr);
  return {r.d, r.p, lv, opt(r.valuation), std::string(verdict_name(r.verdict)), r.reason};
}

ProgressFn stderr_progress(std::ostream& err, std::string label) {
  auto last = std::make_shared<std::size_t>(0);
  auto mu = std::make_shared<std::mutex>();
  return [&err, label = std::move(label), last, mu](std::size_t done, std::size_t total) {
    const std::size_t pct = total ? done * 100 / total : 100;
    std::lock_guard lock(*mu);
    if (pct >= *last + 10 || done == total) {
      *last = pct;
      err << label << ": " << done << "/" << total << '\n';
    }
  };
}

std::string join(const std::vector<std::uint64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "-" : "") + std::to_string(v[i]);
  return s.empty() ? "none" : s;
}

ResidueSeries residue_f(const ScanConfig& cfg, const std::string& cache_dir, unsigned jobs,
                        std::ostream& err) {
  std::optional<std::filesystem::path> path;
  if (!cache_dir.empty()) {
    std::filesystem::create_directories(cache_dir);
    path = std::filesystem::path(cache_dir) /
           ("f_p" + std::to_string(cfg.p) + "_t" + std::to_string(cfg.t) + "_L" + join(cfg.L) +
            "_e" + std::to_string(cfg.residue_e) + "_N" + std::to_string(cfg.N) + ".qexp");
    if (std::filesystem::exists(*path)) {
      auto f = load_residue_qexp(*path);
      if (f.p == cfg.p && f.e == cfg.residue_e && f.precision() == cfg.N) return f;
    }
  }
  auto f = build_f_residue(cfg, jobs, stderr_progress(err, "L-values"));
  if (path) save_residue_qexp(*path, f);
  return f;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quadratic L-values, Cohen-Eisenstein series and p-rationality scans"};
  app.require_subcommand(1);
  std::string format = "tsv";
  std::string cache_dir;
  unsigned jobs = 1;
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"tsv", "json"}))
      ->capture_default_str();
  app.add_option("--cache", cache_dir, "Directory for cached qexp series");
  app.add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1u, 1024u));

  Table table;
  std::function<void()> action;

  // lvalue
  unsigned lv_i = 0;
  std::int64_t lv_d = 1;
  auto* lvalue = app.add_subcommand("lvalue", "L(1 - i, chi_d)");
  lvalue->add_option("--i", lv_i)->required();
  lvalue->add_option("--d", lv_d)->required();
  lvalue->callback([&] {
    action = [&] {
      auto L = l_neg(lv_i, QuadCharacter(lv_d));
      table = {{"i", "d", "value"}, {{lv_i, lv_d, rat(L.value)}}};
    };
  });

  // cohen
  unsigned ch_i = 0;
  std::uint64_t ch_n = 0;
  auto* cohen = app.add_subcommand("cohen", "Cohen coefficient h(i, n)");
  cohen->add_option("--i", ch_i)->required();
  cohen->add_option("--n", ch_n)->required();
  cohen->callback([&] {
    action = [&] { table = {{"i", "n", "h"}, {{ch_i, ch_n, rat(h_coeff(ch_i, ch_n))}}}; };
  });

  // cohen-series
  unsigned cs_i = 0;
  std::size_t cs_prec = 0;
  std::string cs_out;
  auto* cohen_series = app.add_subcommand("cohen-series", "Write H_i as a qexp file");
  cohen_series->add_option("--i", cs_i)->required();
  cohen_series->add_option("--prec", cs_prec)->required();
  cohen_series->add_option("--out", cs_out)->required();
  cohen_series->callback([&] {
    action = [&] {
      auto H = h_series(cs_i, cs_prec);
      save_qexp(cs_out, H);
      std::size_t nonzero = 0;
      for (const auto& c : H.coeffs()) nonzero += c != 0;
      table = {{"i", "prec", "nonzero", "path"}, {{cs_i, cs_prec, nonzero, cs_out}}};
    };
  });

  // is-p-rational
  std::uint64_t ipr_p = 0;
  std::int64_t ipr_d = 0;
  auto* is_rat = app.add_subcommand("is-p-rational", "Verdict for Q(sqrt d)");
  is_rat->add_option("--p", ipr_p)->required();
  is_rat->add_option("--d", ipr_d)->required();
  is_rat->callback([&] {
    action = [&] {
      auto r = ipr_d < 0 ? is_p_rational_imag_sufficient(ipr_d, ipr_p)
                         : is_p_rational_real(ipr_d, ipr_p);
      table = {report_columns(), {report_row(r)}};
    };
  });

  // scan
  std::uint64_t sc_p = 0, sc_dmax = 0;
  auto* scan = app.add_subcommand("scan", "Verdicts for all real d <= dmax");
  scan->add_option("--p", sc_p)->required();
  scan->add_option("--dmax", sc_dmax)->required();
  scan->callback([&] {
    action = [&] {
      table.columns = report_columns();
      for (const auto& r : scan_real(sc_p, sc_dmax, jobs)) table.rows.push_back(report_row(r));
    };
  });

  // verify-identity
  std::uint64_t vi_nmax = 0;
  auto* verify = app.add_subcommand("verify-identity", "Check the weight 5/2 identity");
  verify->add_option("--nmax", vi_nmax)->required()->check(CLI::PositiveNumber);
  verify->callback([&] {
    action = [&] {
      table.columns = {"n", "lhs", "rhs_divisor_term", "rhs_two_square_term", "equal"};
      std::vector<IdentityEvaluation> evs(vi_nmax);
      parallel_for(vi_nmax, jobs, [&](std::size_t k) { evs[k] = identity_eval(k + 1); });
      for (const auto& ev : evs) {
        table.rows.push_back({ev.n, rat(ev.lhs), rat(ev.rhs_divisor_term),
                              rat(ev.rhs_two_square_term), ev.equal});
      }
    };
  });

  // find-5rational
  std::uint64_t fr_l = 0, fr_lp = 0;
  auto* find5 = app.add_subcommand("find-5rational", "d with 2 l l' = x^2 + d y^2");
  find5->add_option("--l", fr_l)->required();
  find5->add_option("--lprime", fr_lp)->required();
  find5->callback([&] {
    action = [&] {
      auto w = find_d(fr_l, fr_lp);
      table = {{"ell", "ell_prime", "d", "x", "y", "l_value"},
               {{fr_l, fr_lp, w.d, w.x, w.y, rat(w.l_value)}}};
    };
  });

  // sieve
  std::string sv_list;
  std::uint64_t sv_bound = 0;
  auto* sieve = app.add_subcommand("sieve", "Primes l = 3 (mod 4), v_5(1 - l) = 1, (d/l) = 1");
  sieve->add_option("--d-list", sv_list)->required();
  sieve->add_option("--bound", sv_bound)->required();
  sieve->callback([&] {
    action = [&] {
      table.columns = {"ell"};
      auto ds = parse_csv(sv_list);
      for (auto ell : sieve_lemma42(ds, sv_bound)) table.rows.push_back({ell});
    };
  });

  // next-new
  std::string nn_known;
  std::uint64_t nn_sieve = 0, nn_lp = 0;
  auto* next_new = app.add_subcommand("next-new", "A 5-rational d outside a known list");
  next_new->add_option("--known", nn_known)->required();
  next_new->add_option("--sieve-bound", nn_sieve)->required();
  next_new->add_option("--lp-bound", nn_lp)->required();
  next_new->callback([&] {
    action = [&] {
      table.columns = {"status", "d_new", "ell", "ell_second", "x", "y", "l_value"};
      auto known = parse_csv(nn_known);
      if (auto r = next_new_5rational(known, nn_sieve, nn_lp)) {
        table.rows.push_back({"found", r->d_new, r->ell, r->ell_second, r->witness.x,
                              r->witness.y, rat(r->witness.l_value)});
      } else {
        table.rows.push_back({"exhausted", nullptr, nullptr, nullptr, nullptr, nullptr, nullptr});
      }
    };
  });

  // serre-scan
  ScanConfig cfg;
  std::string ss_primes;
  auto* serre = app.add_subcommand("serre-scan", "Candidate primes for f | T(l) = 2f (mod p^2)");
  serre->add_option("--p", cfg.p)->required();
  serre->add_option("--t", cfg.t)->required();
  serre->add_option("--primes", ss_primes, "Restriction primes, comma separated");
  serre->add_option("--prec", cfg.N)->required();
  serre->add_option("--ncheck", cfg.n_check)->capture_default_str();
  serre->add_option("--lmin", cfg.ell_lo)->required();
  serre->add_option("--lmax", cfg.ell_hi)->required();
  serre->callback([&] {
    action = [&] {
      cfg.L = parse_csv_unsigned(ss_primes);
      validate(cfg);
      std::vector<SerreScanReport> reports;
      if (!candidate_primes(cfg).empty()) {
        const std::size_t required = static_cast<std::size_t>(cfg.ell_hi) * cfg.n_check;
        if (cfg.N < required) throw PrecisionTooSmall(required);
        auto f = residue_f(cfg, cache_dir, jobs, err);
        reports = scan_serre(cfg, &f, jobs);
      }
      table.columns = {"ell",     "congruence_ok",      "a",        "b",
                       "b_prime", "wieferich_ok",       "eps_sigma_b_mod_p2",
                       "hp_holds", "A_mod_p2",          "B_mod_p2", "ab_congruence_ok",
                       "extracted_d"};
      for (const auto& r : reports) {
        table.rows.push_back({r.ell, r.congruence_ok,
                              r.cornacchia ? json(r.cornacchia->a) : json(nullptr),
                              r.cornacchia ? json(r.cornacchia->b) : json(nullptr), r.b_prime,
                              r.wieferich_ok, r.eps_sigma_b_mod_p2, r.hp_holds, r.A_mod_p2,
                              r.B_mod_p2, r.ab_congruence_ok, opt(r.extracted_d)});
      }
    };
  });

  // hyp-check
  std::uint64_t hc_p = 0, hc_t = 0, hc_l = 0;
  auto* hyp = app.add_subcommand("hyp-check", "l = t a^2 + b^2 and eps_sigma(b) mod p^2");
  hyp->add_option("--p", hc_p)->required();
  hyp->add_option("--t", hc_t)->required();
  hyp->add_option("--l", hc_l)->required();
  hyp->callback([&] {
    action = [&] {
      auto r = hyp_check(hc_p, hc_t, hc_l);
      table = {{"ell", "a", "b", "b_prime", "wieferich_ok", "eps_sigma_b_mod_p2", "hp_holds"},
               {{r.ell, r.cornacchia ? json(r.cornacchia->a) : json(nullptr),
                 r.cornacchia ? json(r.cornacchia->b) : json(nullptr), r.b_prime,
                 r.wieferich_ok, r.eps_sigma_b_mod_p2, r.hp_holds}}};
    };
  });

  std::vector<const char*> argv{"prat"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    action();
    emit(table, format, out);
    return 0;
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const NoWitnessFound& e) {
    err << e.tag() << ": " << e.what() << '\n';
    return 1;
  } catch (const Error& e) {
    err << e.tag() << ": " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    err << "internal: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace prat::cli
