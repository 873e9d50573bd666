#include "tmt/cli.hpp"

#include <bit>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "tmt/complexity.hpp"
#include "tmt/corrections.hpp"
#include "tmt/formats.hpp"
#include "tmt/mask_core.hpp"
#include "tmt/numeration.hpp"
#include "tmt/pte.hpp"
#include "tmt/transform_op.hpp"

namespace tmt {
namespace {

using nlohmann::json;

enum class Format { plain, bfile, csv, js };

const std::map<std::string, Format> format_names{{"plain", Format::plain},
                                                 {"bfile", Format::bfile},
                                                 {"csv", Format::csv},
                                                 {"json", Format::js}};

// 0 when m is not of the form 2^k - 1.
unsigned mersenne_k(unsigned m) {
  return (m >= 1 && (m & (m + 1)) == 0) ? static_cast<unsigned>(std::popcount(m)) : 0;
}

void emit_word(const word& w, Format f, const std::string& name, std::ostream& out) {
  switch (f) {
    case Format::plain:
      if (!w.empty()) out << word_to_string(w) << '\n';
      break;
    case Format::bfile: {
      std::vector<BfileEntry> rows;
      rows.reserve(w.size());
      for (std::size_t n = 0; n < w.size(); ++n)
        rows.push_back({n, std::string(1, static_cast<char>('0' + w[n]))});
      out << to_bfile(rows);
      break;
    }
    case Format::csv: {
      std::vector<std::vector<std::string>> rows;
      rows.reserve(w.size());
      for (std::size_t n = 0; n < w.size(); ++n)
        rows.push_back({std::to_string(n), std::to_string(int(w[n]))});
      out << to_csv({"n", "value"}, rows);
      break;
    }
    case Format::js: {
      json j{{"name", name}, {"count", w.size()}};
      j["values"] = json::array();
      for (bit b : w) j["values"].push_back(int(b));
      out << j.dump(2) << '\n';
      break;
    }
  }
}

json violations_to_json(const std::vector<IdentityViolation>& vs) {
  json arr = json::array();
  for (const auto& v : vs)
    arr.push_back({{"identity", v.identity}, {"n", v.n}, {"lhs", v.lhs}, {"rhs", v.rhs}});
  return arr;
}

int emit_check(const CheckReport& rep, Format f, const SweepOptions& opts,
               std::ostream& out) {
  if (f == Format::js) {
    json j{{"check", rep.check},
           {"range", rep.range},
           {"ok", rep.ok()},
           {"violations", violations_to_json(rep.violations)},
           {"notes", rep.notes},
           {"provenance", {{"budget", opts.budget}, {"threads", opts.threads}}}};
    out << j.dump(2) << '\n';
  } else {
    out << rep.check << ": n < " << rep.range << '\n';
    out << "violations: " << rep.violations.size() << '\n';
    std::size_t shown = 0;
    for (const auto& v : rep.violations) {
      if (++shown > 10) {
        out << "  ... " << (rep.violations.size() - 10) << " more\n";
        break;
      }
      out << "  " << v.identity << " at n = " << v.n << ": " << v.lhs
          << " != " << v.rhs << '\n';
    }
    for (const auto& n : rep.notes) out << "note: " << n << '\n';
    out << (rep.ok() ? "ok" : "FAIL") << '\n';
  }
  return rep.ok() ? 0 : 1;
}

int emit_verdict(const PteVerdict& v, Format f, const SweepOptions& opts,
                 const std::string& command, std::ostream& out) {
  if (f == Format::js) {
    json sums = json::array();
    for (const auto& row : v.table.sums) {
      json cls = json::array();
      for (const auto& s : row) cls.push_back(s.str());
      sums.push_back(cls);
    }
    json j{{"command", command},
           {"partition", v.partition},
           {"interval", v.interval_length},
           {"classes", v.classes},
           {"expected_degree", v.expected_degree},
           {"equal_through", v.equal_through},
           {"sharp", v.sharp},
           {"sharpness_required", v.sharpness_required},
           {"witness", v.witness},
           {"ok", v.ok()},
           {"sums", sums},
           {"provenance", {{"budget", opts.budget}, {"threads", opts.threads}}}};
    out << j.dump(2) << '\n';
  } else {
    out << command << ": " << v.partition << '\n';
    out << "interval [0, " << v.interval_length << "), " << v.classes
        << " classes\n";
    out << "degree " << v.equal_through;
    if (v.sharp)
      out << ", sharp at " << (v.expected_degree + 1);
    else if (v.sharpness_required)
      out << ", NOT sharp at " << (v.expected_degree + 1);
    else
      out << ", no inequality witnessed at " << (v.expected_degree + 1)
          << " (sharpness not required)";
    out << '\n';
    if (!v.witness.empty()) out << "witness: " << v.witness << '\n';
    out << (v.ok() ? "ok" : "FAIL") << '\n';
  }
  return v.ok() ? 0 : 1;
}

SequenceOracle parse_seed(const std::string& s) {
  if (s == "tm") return tower_oracle(0);
  if (s == "ftm") return SequenceOracle("ftm", [](std::uint64_t n) { return ftm(n); });
  if (s == "m2") return SequenceOracle("m2", [](std::uint64_t n) { return m2(n); });
  if (s.rfind("level:", 0) == 0) {
    unsigned m = static_cast<unsigned>(std::stoul(s.substr(6)));
    return tower_oracle(m);
  }
  if (s.rfind("file:", 0) == 0) return file_oracle(s.substr(5));
  throw std::invalid_argument("unknown seed \"" + s +
                              "\" (want tm, ftm, m2, level:<m>, file:<path>)");
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"iterated bitmask parity sequences: generation, identity checks, "
               "factor complexity, equal power sums"};
  app.require_subcommand(1);

  SweepOptions opts;
  app.add_option("--budget", opts.budget, "sweep point budget")
      ->capture_default_str();
  app.add_option("--threads", opts.threads, "parallelism cap for sweeps")
      ->capture_default_str();

  int exit_code = 0;
  Format fmt = Format::plain;
  app.add_option("--format", fmt, "output format: plain | bfile | csv | json")
      ->transform(CLI::CheckedTransformer(format_names, CLI::ignore_case));

  // seq ----------------------------------------------------------------
  {
    auto* seq = app.add_subcommand("seq", "emit a level sequence prefix");
    seq->fallthrough();
    auto level = std::make_shared<unsigned>(0);
    auto count = std::make_shared<std::uint64_t>(0);
    seq->add_option("--level", *level, "mask m (0..31)")->capture_default_str();
    seq->add_option("--count", *count, "letters to emit")->required();
    seq->callback([&, level, count] {
      word w = tower_prefix(*level, *count);
      emit_word(w, fmt, "a_" + std::to_string(*level), out);
    });
  }

  // transform ----------------------------------------------------------
  {
    auto* tr = app.add_subcommand("transform", "apply the transform to a seed");
    tr->fallthrough();
    auto seed = std::make_shared<std::string>("tm");
    auto iterations = std::make_shared<unsigned>(1);
    auto count = std::make_shared<std::uint64_t>(0);
    tr->add_option("--seed", *seed, "tm | ftm | m2 | level:<m> | file:<path>")
        ->capture_default_str();
    tr->add_option("--iterations", *iterations, "times to apply the transform")
        ->capture_default_str();
    tr->add_option("--count", *count, "letters to emit")->required();
    tr->callback([&, seed, iterations, count] {
      SequenceOracle oracle = parse_seed(*seed);
      word w;
      if (*count > 0 && *iterations == 0) {
        w.reserve(*count);
        for (std::uint64_t n = 0; n < *count; ++n) w.push_back(oracle.eval(n));
      } else if (*count > 0) {
        w = transform_prefix(oracle, *count);
        for (unsigned i = 1; i < *iterations; ++i) w = transform_prefix(w);
      }
      emit_word(w, fmt,
                "T^" + std::to_string(*iterations) + "(" + oracle.name + ")", out);
    });
  }

  // verify ---------------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "check identities by sweep");
  verify->fallthrough();
  verify->require_subcommand(1);

  {
    auto* c = verify->add_subcommand("closed-form",
                                     "iterated transform vs digit selection");
    c->fallthrough();
    auto level = std::make_shared<unsigned>(0);
    auto count = std::make_shared<std::uint64_t>(4096);
    c->add_option("--level", *level, "mask m")->required();
    c->add_option("--count", *count, "prefix length")->capture_default_str();
    c->callback([&, level, count] {
      auto rep = verify_closed_form(*level, *count);
      if (fmt == Format::js) {
        json mm = json::array();
        for (const auto& s : rep.mismatches)
          mm.push_back({{"index", s.index},
                        {"expected", int(s.expected)},
                        {"got", int(s.got)}});
        json j{{"command", "verify closed-form"}, {"level", rep.mask},
               {"length", rep.length},           {"ok", rep.ok()},
               {"mismatches", mm},               {"note", rep.note}};
        out << j.dump(2) << '\n';
      } else {
        out << "closed form vs iterated transform: level " << rep.mask
            << ", length " << rep.length << '\n';
        out << "mismatches: " << rep.mismatches.size() << '\n';
        if (!rep.note.empty()) out << "note: " << rep.note << '\n';
        out << (rep.ok() ? "ok" : "FAIL") << '\n';
      }
      exit_code = rep.ok() ? 0 : 1;
    });
  }

  {
    auto* c = verify->add_subcommand("composition", "pairing composition identities");
    c->fallthrough();
    auto level = std::make_shared<unsigned>(0);
    auto max_n = std::make_shared<std::uint64_t>(10000);
    c->add_option("--level", *level, "mask m")->required();
    c->add_option("--max-n", *max_n, "sweep bound")->capture_default_str();
    c->callback([&, level, max_n] {
      exit_code = emit_check(verify_composition(*level, *max_n), fmt, opts, out);
    });
  }

  {
    auto* c = verify->add_subcommand("cross", "mixed-level composition identities");
    c->fallthrough();
    auto level = std::make_shared<unsigned>(0);
    auto inner = std::make_shared<unsigned>(0);
    auto max_n = std::make_shared<std::uint64_t>(10000);
    c->add_option("--level", *level, "outer mask m")->required();
    c->add_option("--inner", *inner, "inner mask m'")->required();
    c->add_option("--max-n", *max_n, "sweep bound")->capture_default_str();
    c->callback([&, level, inner, max_n] {
      exit_code = emit_check(verify_cross(*level, *inner, *max_n), fmt, opts, out);
    });
  }

  {
    auto* c = verify->add_subcommand("mersenne",
                                     "correction = shifted level at m = 2^k - 1");
    c->fallthrough();
    auto k = std::make_shared<unsigned>(1);
    auto max_n = std::make_shared<std::uint64_t>(100000);
    c->add_option("--k", *k, "exponent, 1..5")->required();
    c->add_option("--max-n", *max_n, "sweep bound")->capture_default_str();
    c->callback([&, k, max_n] {
      exit_code = emit_check(mersenne_correction_check(*k, *max_n), fmt, opts, out);
    });
  }

  {
    auto* c = verify->add_subcommand("equivalence-m7",
                                     "three-level xor equivalence at mask 7");
    c->fallthrough();
    auto max_n = std::make_shared<std::uint64_t>(100000);
    c->add_option("--max-n", *max_n, "sweep bound")->capture_default_str();
    c->callback([&, max_n] {
      exit_code = emit_check(equivalence_m7_check(*max_n), fmt, opts, out);
    });
  }

  {
    auto* c = verify->add_subcommand("pte", "equal power sums of the two classes");
    c->fallthrough();
    auto level = std::make_shared<unsigned>(0);
    auto blocks = std::make_shared<unsigned>(1);
    c->add_option("--level", *level, "mask m")->required();
    c->add_option("--L", *blocks, "aligned blocks per class interval")->required();
    c->callback([&, level, blocks] {
      exit_code = emit_verdict(pte_verify(*level, *blocks, opts), fmt, opts,
                               "verify pte", out);
    });
  }

  {
    auto* c = verify->add_subcommand("multi", "joint classes of several masks");
    c->fallthrough();
    auto levels = std::make_shared<std::vector<unsigned>>();
    auto blocks = std::make_shared<unsigned>(1);
    c->add_option("--levels", *levels, "comma-separated masks")
        ->required()
        ->delimiter(',');
    c->add_option("--L", *blocks, "window length in letters")->required();
    c->callback([&, levels, blocks] {
      exit_code = emit_verdict(multi_pte_verify(*levels, *blocks, opts), fmt, opts,
                               "verify multi", out);
    });
  }

  {
    auto* c = verify->add_subcommand("pte-d", "digit-sum classes in base d");
    c->fallthrough();
    auto base = std::make_shared<unsigned>(2);
    auto level = std::make_shared<unsigned>(0);
    auto blocks = std::make_shared<unsigned>(0);
    auto digits = std::make_shared<unsigned>(0);
    c->add_option("--base", *base, "digit base d >= 2")->required();
    c->add_option("--level", *level, "mask m on digit positions")->required();
    auto* opt_l = c->add_option("--L", *blocks, "aligned blocks (period * L digits)");
    auto* opt_m = c->add_option("--digits", *digits, "digit positions");
    opt_l->excludes(opt_m);
    opt_m->excludes(opt_l);
    c->callback([&, base, level, blocks, digits, opt_l, opt_m] {
      if (opt_l->count() == 0 && opt_m->count() == 0)
        throw std::invalid_argument("pte-d needs --L or --digits");
      PteVerdict v = opt_l->count()
                         ? pte_d_verify(*base, *level, *blocks, opts)
                         : pte_d_verify_digits(*base, *level, *digits, opts);
      exit_code = emit_verdict(v, fmt, opts, "verify pte-d", out);
    });
  }

  {
    auto* c = verify->add_subcommand("m2", "filtered parity: recurrences and classes");
    c->fallthrough();
    auto count = std::make_shared<std::uint64_t>(65536);
    auto blocks = std::make_shared<unsigned>(0);
    c->add_option("--count", *count, "recurrence replay length")
        ->capture_default_str();
    auto* opt_l = c->add_option("--L", *blocks, "also verify classes over [0, 2^L)");
    c->callback([&, count, blocks, opt_l] {
      int rc = emit_check(m2_check(*count), fmt, opts, out);
      if (opt_l->count()) {
        int rc2 = emit_verdict(m2_pte_verify(*blocks, opts), fmt, opts,
                               "verify m2 classes", out);
        rc = rc ? rc : rc2;
      }
      exit_code = rc;
    });
  }

  {
    auto* c = verify->add_subcommand("fib", "Zeckendorf parity moments");
    c->fallthrough();
    auto r = std::make_shared<unsigned>(1);
    auto degree = std::make_shared<int>(1);
    auto poly_l = std::make_shared<unsigned>(0);
    c->add_option("--r", *r, "interval [0, F_{3r})")->required();
    c->add_option("--degree", *degree, "0 = balance only, 1 or 2 = moment")
        ->check(CLI::Range(0, 2))
        ->capture_default_str();
    auto* opt_poly =
        c->add_option("--poly-L", *poly_l, "also check the polynomial recursion");
    c->callback([&, r, degree, poly_l, opt_poly] {
      int rc = 0;
      if (*degree == 0) {
        auto v = fib_balance_check(*r, opts);
        if (fmt == Format::js) {
          json j{{"command", "verify fib"},   {"r", v.r},
                 {"interval", v.interval},    {"zeros", v.zeros},
                 {"ones", v.ones},            {"balanced", v.balanced},
                 {"sign_pattern_ok", v.sign_pattern_ok},
                 {"ok", v.ok()},
                 {"provenance", {{"budget", opts.budget}, {"threads", opts.threads}}}};
          out << j.dump(2) << '\n';
        } else {
          out << "letter balance: r = " << v.r << ", interval [0, " << v.interval
              << ")\n";
          out << "zeros " << v.zeros << ", ones " << v.ones << '\n';
          out << "sign pattern " << (v.sign_pattern_ok ? "ok" : "BROKEN") << '\n';
          out << (v.ok() ? "ok" : "FAIL") << '\n';
        }
        rc = v.ok() ? 0 : 1;
      } else {
        auto rep = fib_defect(*r, *degree, opts);
        if (fmt == Format::js) {
          json j{{"command", "verify fib"},
                 {"r", rep.r},
                 {"degree", rep.degree},
                 {"defect1", rep.defect1.str()},
                 {"predicted1", rep.predicted1.str()},
                 {"match1", rep.match1},
                 {"defect2", rep.defect2.str()},
                 {"predicted2", rep.predicted2.str()},
                 {"match2", rep.match2},
                 {"ok", rep.ok()},
                 {"provenance", {{"budget", opts.budget}, {"threads", opts.threads}}}};
          out << j.dump(2) << '\n';
        } else {
          out << "signed moments: r = " << rep.r << '\n';
          out << "degree-1 defect " << rep.defect1.str() << " (predicted "
              << rep.predicted1.str() << ") "
              << (rep.match1 ? "match" : "MISMATCH") << '\n';
          out << "degree-2 defect " << rep.defect2.str() << " (predicted "
              << rep.predicted2.str() << ") "
              << (rep.match2 ? "match" : "MISMATCH") << '\n';
          out << (rep.ok() ? "ok" : "FAIL") << '\n';
        }
        rc = rep.ok() ? 0 : 1;
      }
      if (opt_poly->count()) {
        int rc2 = emit_check(fib_poly_recursion_check(*poly_l), fmt, opts, out);
        rc = rc ? rc : rc2;
      }
      exit_code = rc;
    });
  }

  // complexity -----------------------------------------------------------
  {
    auto* c = app.add_subcommand("complexity", "factor counts p(1..max)");
    c->fallthrough();
    auto level = std::make_shared<unsigned>(0);
    auto max_n = std::make_shared<std::uint64_t>(12);
    auto method = std::make_shared<std::string>("brute");
    auto brute_max = std::make_shared<unsigned>(128);
    auto pieces = std::make_shared<bool>(false);
    c->add_option("--level", *level, "mask m")->required();
    c->add_option("--max", *max_n, "largest window length")->required();
    c->add_option("--method", *method, "brute | formula | desub | all")
        ->check(CLI::IsMember({"brute", "formula", "desub", "all"}))
        ->capture_default_str();
    c->add_option("--brute-max", *brute_max,
                  "window cap for the brute route under --method all")
        ->capture_default_str();
    c->add_flag("--pieces", *pieces, "also list the formula pieces");
    c->callback([&, level, max_n, method, brute_max, pieces] {
      unsigned k = mersenne_k(*level);
      if (*method != "brute" && k == 0)
        throw std::invalid_argument(
            "method \"" + *method +
            "\" requires a Mersenne mask (1, 3, 7, 15, 31); mask " +
            std::to_string(*level) + " only supports --method brute");
      if (*pieces && k == 0)
        throw std::invalid_argument("--pieces requires a Mersenne mask");

      std::vector<std::string> values;
      std::size_t prefix_used = 0;
      std::string failure;

      if (*method == "brute") {
        auto prof = level_complexity_brute(
            *level, static_cast<unsigned>(*max_n));
        prefix_used = prof.prefix_used;
        for (unsigned n = 1; n <= *max_n; ++n)
          values.push_back(std::to_string(prof.p(n)));
      } else if (*method == "formula") {
        for (std::uint64_t n = 1; n <= *max_n; ++n)
          values.push_back(mersenne_formula(k, n).str());
      } else if (*method == "desub") {
        for (std::uint64_t n = 1; n <= *max_n; ++n)
          values.push_back((2 * q_desub(k, n - 1)).str());
      } else {  // all: formula is emitted, the other two must agree with it
        DesubCounter counter(k);
        for (std::uint64_t n = 1; n <= *max_n; ++n) {
          bigint f = mersenne_formula(k, n);
          bigint q2 = 2 * counter.q(n - 1);
          if (f != q2 && failure.empty())
            failure = "desub disagrees at n = " + std::to_string(n) + ": " +
                      q2.str() + " vs " + f.str();
          values.push_back(f.str());
        }
        unsigned bmax = static_cast<unsigned>(
            std::min<std::uint64_t>(*max_n, *brute_max));
        auto prof = level_complexity_brute(*level, bmax);
        prefix_used = prof.prefix_used;
        for (unsigned n = 1; n <= bmax; ++n)
          if (bigint(prof.p(n)) != bigint(values[n - 1]) && failure.empty())
            failure = "brute disagrees at n = " + std::to_string(n) + ": " +
                      std::to_string(prof.p(n)) + " vs " + values[n - 1];
      }

      std::vector<PiecewisePiece> piece_rows;
      if (*pieces) piece_rows = mersenne_pieces(k, *max_n);

      if (fmt == Format::js) {
        json j{{"command", "complexity"},
               {"level", *level},
               {"method", *method},
               {"max", *max_n},
               {"ok", failure.empty()},
               {"values", values},
               {"provenance",
                {{"budget", opts.budget},
                 {"threads", opts.threads},
                 {"prefix_used", prefix_used}}}};
        if (!failure.empty()) j["failure"] = failure;
        if (*pieces) {
          json arr = json::array();
          for (const auto& pc : piece_rows)
            arr.push_back({{"lo", pc.lo},
                           {"hi", pc.hi},
                           {"slope", pc.slope},
                           {"intercept", pc.intercept.str()}});
          j["pieces"] = arr;
        }
        out << j.dump(2) << '\n';
      } else if (fmt == Format::csv) {
        std::vector<std::vector<std::string>> rows;
        for (std::size_t i = 0; i < values.size(); ++i)
          rows.push_back({std::to_string(i + 1), values[i], *method});
        out << to_csv({"n", "p", "method"}, rows);
        if (*pieces) {
          std::vector<std::vector<std::string>> prows;
          for (const auto& pc : piece_rows)
            prows.push_back({std::to_string(pc.lo), std::to_string(pc.hi),
                             std::to_string(pc.slope), pc.intercept.str()});
          out << to_csv({"lo", "hi", "slope", "intercept"}, prows);
        }
        if (!failure.empty()) out << "# " << failure << '\n';
      } else if (fmt == Format::bfile) {
        std::vector<BfileEntry> rows;
        for (std::size_t i = 0; i < values.size(); ++i)
          rows.push_back({i + 1, values[i]});
        out << to_bfile(rows);
      } else {
        for (std::size_t i = 0; i < values.size(); ++i)
          out << (i ? " " : "") << values[i];
        out << '\n';
        for (const auto& pc : piece_rows) {
          bigint c0 = pc.intercept;
          out << "n in [" << pc.lo << ", " << pc.hi << "]: p = " << pc.slope
              << "n " << (c0 < 0 ? "- " : "+ ") << bigint(abs(c0)).str() << '\n';
        }
        if (!failure.empty()) out << "FAIL: " << failure << '\n';
      }
      exit_code = failure.empty() ? 0 : 1;
    });
  }

  // explore ----------------------------------------------------------------
  {
    auto* ex = app.add_subcommand("explore", "reported data with no claims");
    ex->fallthrough();
    ex->require_subcommand(1);
    auto* orbit = ex->add_subcommand("ftm-orbit",
                                     "transform of the Zeckendorf parity word");
    orbit->fallthrough();
    auto count = std::make_shared<std::uint64_t>(4096);
    auto profile_max = std::make_shared<unsigned>(12);
    orbit->add_option("--count", *count, "prefix length")->capture_default_str();
    orbit->add_option("--profile-max", *profile_max, "window lengths to count")
        ->capture_default_str();
    orbit->callback([&, count, profile_max] {
      auto res = tm_transform_of_ftm(*count, *profile_max);
      if (fmt == Format::js) {
        json j{{"label", res.label},
               {"count", res.transformed.size()},
               {"zeros", res.zeros},
               {"ones", res.ones},
               {"window_counts", res.profile.values},
               {"provenance", {{"prefix_used", res.profile.prefix_used}}}};
        out << j.dump(2) << '\n';
      } else {
        out << res.label << ": transform of the Zeckendorf parity word\n";
        out << "length " << res.transformed.size() << ": zeros " << res.zeros
            << ", ones " << res.ones << '\n';
        out << "window counts (1.." << res.profile.values.size() << "):";
        for (auto v : res.profile.values) out << ' ' << v;
        out << '\n';
        std::size_t head = std::min<std::size_t>(res.transformed.size(), 64);
        word prefix(res.transformed.begin(), res.transformed.begin() + head);
        out << "prefix: " << word_to_string(prefix) << '\n';
      }
    });
  }

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("tmt");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 2;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return 3;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 2;
  }
  return exit_code;
}

}  // namespace tmt
