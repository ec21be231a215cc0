#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <regex>
#include <sstream>

#include "supercong/congruences.hpp"
#include "supercong/numeric_series.hpp"
#include "supercong/primes.hpp"
#include "supercong/sequences.hpp"

namespace supercong::cli {

namespace {

using nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

ordered_json manifest_header(const std::string& command, ordered_json parameters) {
  ordered_json doc;
  doc["command"] = command;
  doc["tool_version"] = kToolVersion;
  doc["timestamp"] = utc_timestamp();
  doc["parameters"] = std::move(parameters);
  return doc;
}

// ---- check ----------------------------------------------------------------

std::vector<const CongruenceFamily*> select_families(const std::vector<std::string>& selectors,
                                                     const std::string& mode) {
  std::vector<SumId> sums;
  for (const auto& raw : selectors) {
    std::string sel = raw;
    std::transform(sel.begin(), sel.end(), sel.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (sel == "all") {
      sums.assign(kAllSums.begin(), kAllSums.end());
      continue;
    }
    auto it = std::find_if(kAllSums.begin(), kAllSums.end(), [&](SumId id) {
      std::string name(sum_name(id));
      name[0] = 's';
      return name == sel;
    });
    if (it == kAllSums.end()) throw UsageError("unknown family selector '" + raw + "'");
    sums.push_back(*it);
  }
  std::vector<const CongruenceFamily*> out;
  for (const auto& family : builtin_families()) {
    if (std::find(sums.begin(), sums.end(), family.sum) == sums.end()) continue;
    if (mode != "both" && truncation_name(family.mode) != mode) continue;
    out.push_back(&family);
  }
  return out;
}

ordered_json outcome_record(const CongruenceOutcome& o) {
  ordered_json rec;
  rec["family"] = o.family;
  rec["p"] = o.p;
  rec["s"] = o.s;
  rec["truncation"] = o.n_lhs;
  rec["modulus"] = o.ring.to_string();
  rec["lhs"] = o.lhs.rep().get_str();
  rec["rhs"] = o.rhs.rep().get_str();
  rec["valuation_excess"] = o.excess;
  rec["holds"] = o.holds;
  rec["expected_exception"] = o.expected_exception;
  rec["symbol_zero"] = o.symbol_zero;
  return rec;
}

std::string csv_cell(const ordered_json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void write_check_report(const std::string& format, const ordered_json& doc, std::ostream& os) {
  const auto& outcomes = doc["outcomes"];
  if (format == "json") {
    os << doc.dump(2) << '\n';
  } else if (format == "csv") {
    os << "family,p,s,truncation,modulus,lhs,rhs,valuation_excess,holds,expected_exception,"
          "symbol_zero\n";
    for (const auto& rec : outcomes) {
      bool first = true;
      for (const auto& [key, value] : rec.items()) {
        if (!first) os << ',';
        os << csv_cell(value);
        first = false;
      }
      os << '\n';
    }
  } else {
    os << std::left << std::setw(9) << "family" << std::right << std::setw(6) << "p"
       << std::setw(3) << "s" << std::setw(10) << "N" << std::setw(10) << "modulus"
       << std::setw(8) << "excess" << "  status\n";
    for (const auto& rec : outcomes) {
      std::string status = rec["holds"].get<bool>() ? "holds" : "FAILS";
      if (rec["expected_exception"].get<bool>()) status += " (expected exception)";
      if (rec["symbol_zero"].get<bool>()) status += " [symbol zero]";
      os << std::left << std::setw(9) << rec["family"].get<std::string>() << std::right
         << std::setw(6) << rec["p"].get<std::uint64_t>() << std::setw(3)
         << rec["s"].get<unsigned>() << std::setw(10) << rec["truncation"].get<unsigned long>()
         << std::setw(10) << rec["modulus"].get<std::string>() << std::setw(8)
         << rec["valuation_excess"].get<unsigned>() << "  " << status << '\n';
    }
    const auto& summary = doc["summary"];
    os << "cases: " << summary["cases"] << ", holding: " << summary["holds"]
       << ", expected exceptions: " << summary["expected_exceptions"]
       << ", unexpected: " << summary["unexpected"].size()
       << ", anomalies: " << summary["anomalies"].size() << '\n';
    os << "verdict: " << (doc["verdict"].get<bool>() ? "PASS" : "FAIL") << '\n';
  }
}

struct CheckOptions {
  std::vector<std::string> selectors{"all"};
  std::uint64_t p_max = 50;
  unsigned s_max = 1;
  std::string mode = "both";
  std::string format = "json";
  std::string out_path;
  unsigned jobs = 1;
};

int run_check(const CheckOptions& opt, std::ostream& out, std::ostream& err) {
  if (opt.p_max < 3) throw UsageError("--p-max must be >= 3");
  if (opt.s_max < 1) throw UsageError("--s-max must be >= 1");
  if (opt.jobs < 1) throw UsageError("--jobs must be >= 1");
  const auto selected = select_families(opt.selectors, opt.mode);

  std::vector<CongruenceFamily> families;
  for (const auto* f : selected) families.push_back(*f);
  const auto outcomes = run_sweep(families, opt.p_max, opt.s_max, opt.jobs);

  ordered_json params;
  params["families"] = ordered_json::array();
  for (const auto& f : families) params["families"].push_back(f.id);
  params["p_max"] = opt.p_max;
  params["s_max"] = opt.s_max;
  params["mode"] = opt.mode;
  params["jobs"] = opt.jobs;

  ordered_json doc = manifest_header("check", std::move(params));
  const bool verdict = aggregate_verdict(outcomes);
  ordered_json summary;
  std::size_t holds = 0;
  std::size_t exceptions = 0;
  std::size_t symbol_zero = 0;
  ordered_json unexpected = ordered_json::array();
  ordered_json anomalies = ordered_json::array();
  for (const auto& o : outcomes) {
    holds += o.holds ? 1 : 0;
    exceptions += o.expected_exception ? 1 : 0;
    symbol_zero += o.symbol_zero ? 1 : 0;
    if (o.is_anomaly()) {
      anomalies.push_back(o.family + " p=" + std::to_string(o.p) + " s=" + std::to_string(o.s));
    } else if (!o.as_expected()) {
      unexpected.push_back(o.family + " p=" + std::to_string(o.p) + " s=" + std::to_string(o.s) +
                           (o.expected_exception ? " (expected exception did not fail)" : ""));
    }
  }
  summary["cases"] = outcomes.size();
  summary["holds"] = holds;
  summary["expected_exceptions"] = exceptions;
  summary["symbol_zero_cases"] = symbol_zero;
  summary["unexpected"] = std::move(unexpected);
  summary["anomalies"] = std::move(anomalies);
  doc["verdict"] = verdict;
  doc["summary"] = std::move(summary);
  doc["outcomes"] = ordered_json::array();
  for (const auto& o : outcomes) doc["outcomes"].push_back(outcome_record(o));

  if (opt.out_path.empty()) {
    write_check_report(opt.format, doc, out);
  } else {
    std::ofstream file(opt.out_path);
    if (!file) {
      err << "error: cannot open " << opt.out_path << " for writing\n";
      return kExitFailure;
    }
    write_check_report(opt.format, doc, file);
  }
  if (!verdict) err << "unexpected congruence failures; see report\n";
  return verdict ? kExitOk : kExitFailure;
}

// ---- series ---------------------------------------------------------------

struct SeriesOptions {
  std::vector<std::string> selectors{"all"};
  long digits = 50;
  std::string format = "table";
};

int run_series(const SeriesOptions& opt, std::ostream& out) {
  if (opt.digits < 10 || opt.digits > 10000) throw UsageError("--digits must be in [10, 10000]");
  std::vector<const SeriesSpec*> specs;
  for (const auto& sel : opt.selectors) {
    if (sel == "all") {
      for (const auto& s : builtin_series()) specs.push_back(&s);
      continue;
    }
    try {
      specs.push_back(&find_series(sel));
    } catch (const std::invalid_argument&) {
      throw UsageError("unknown series selector '" + sel + "'");
    }
  }

  ordered_json params;
  params["series"] = ordered_json::array();
  for (const auto* s : specs) params["series"].push_back(s->name);
  params["digits"] = opt.digits;
  ordered_json doc = manifest_header("series", std::move(params));

  bool all_pass = true;
  ordered_json results = ordered_json::array();
  for (const auto* spec : specs) {
    const LimitReport r = verify_limit(*spec, opt.digits);
    all_pass = all_pass && r.pass;
    ordered_json rec;
    rec["series"] = r.series;
    rec["closed_form"] = spec->limit.to_string();
    rec["value"] = r.value.to_string(static_cast<int>(opt.digits + 5));
    rec["limit"] = r.limit.to_string(static_cast<int>(opt.digits + 5));
    rec["abs_error"] = r.abs_error.to_string(6);
    rec["digits_matched"] = r.digits_matched;
    rec["terms_used"] = r.terms_used;
    rec["tail_bound"] = r.tail_bound.to_string(6);
    rec["conjectural"] = spec->conjectural;
    rec["pass"] = r.pass;
    results.push_back(std::move(rec));
  }
  doc["verdict"] = all_pass;
  doc["results"] = std::move(results);

  if (opt.format == "json") {
    out << doc.dump(2) << '\n';
  } else {
    for (const auto& rec : doc["results"]) {
      out << rec["series"].get<std::string>() << "  -> " << rec["closed_form"].get<std::string>()
          << (rec["conjectural"].get<bool>() ? "  (conjectural)" : "") << '\n'
          << "  value        " << rec["value"].get<std::string>() << '\n'
          << "  limit        " << rec["limit"].get<std::string>() << '\n'
          << "  abs error    " << rec["abs_error"].get<std::string>() << '\n'
          << "  digits       " << rec["digits_matched"] << '\n'
          << "  terms        " << rec["terms_used"] << '\n'
          << "  tail bound   " << rec["tail_bound"].get<std::string>() << '\n'
          << "  " << (rec["pass"].get<bool>() ? "PASS" : "FAIL") << '\n';
    }
  }
  return all_pass ? kExitOk : kExitFailure;
}

// ---- dump -----------------------------------------------------------------

struct DumpOptions {
  std::string sequence;
  long count = 10;
  std::string modulus;
  std::string format = "text";
};

std::optional<RingDescriptor> parse_modulus(const std::string& text) {
  if (text.empty()) return std::nullopt;
  static const std::regex pattern(R"(^\s*(\d{1,18})\s*\^\s*(\d{1,4})\s*$)");
  std::smatch m;
  if (!std::regex_match(text, m, pattern)) {
    throw UsageError("malformed modulus '" + text + "', expected p^K");
  }
  const std::uint64_t p = std::stoull(m[1].str());
  const unsigned k = static_cast<unsigned>(std::stoul(m[2].str()));
  try {
    return RingDescriptor(p, k);
  } catch (const std::invalid_argument& e) {
    throw UsageError("invalid modulus '" + text + "': " + e.what());
  }
}

std::vector<Integer> sequence_terms(const std::string& name, std::size_t count) {
  std::vector<Integer> out;
  out.reserve(count);
  if (name == "fib" || name == "lucas") {
    Integer a = name == "fib" ? 0 : 2;
    Integer b = 1;
    for (std::size_t i = 0; i < count; ++i) {
      out.push_back(a);
      Integer c = a + b;
      a = std::move(b);
      b = std::move(c);
    }
    return out;
  }
  if (name == "apery") {
    AperyStream stream;
    for (std::size_t i = 0; i < count; ++i, stream.advance()) out.push_back(stream.value());
    return out;
  }
  for (Companion c : {Companion::F8, Companion::L8, Companion::F15, Companion::L15, Companion::U,
                      Companion::V}) {
    if (companion_name(c) == name) return companion_terms(c, count);
  }
  throw UsageError("unknown sequence '" + name + "'");
}

int run_dump(const DumpOptions& opt, std::ostream& out) {
  if (opt.count < 1) throw UsageError("--count must be >= 1");
  const auto ring = parse_modulus(opt.modulus);
  std::string name = opt.sequence;
  std::transform(name.begin(), name.end(), name.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  auto terms = sequence_terms(name, static_cast<std::size_t>(opt.count));
  if (ring) {
    for (auto& t : terms) ring->reduce_in_place(t);
  }
  if (opt.format == "json") {
    ordered_json params;
    params["sequence"] = name;
    params["count"] = opt.count;
    params["modulus"] = ring ? ordered_json(ring->to_string()) : ordered_json(nullptr);
    ordered_json doc = manifest_header("dump", std::move(params));
    doc["terms"] = ordered_json::array();
    for (const auto& t : terms) doc["terms"].push_back(t.get_str());
    out << doc.dump(2) << '\n';
  } else {
    for (const auto& t : terms) out << t.get_str() << '\n';
  }
  return kExitOk;
}

}  // namespace

int run_selftest_command(const SelftestOptions& options, const std::string& format,
                         std::ostream& out) {
  const SelftestReport report = run_selftest(options);
  if (format == "json") {
    ordered_json params;
    params["grid_length"] = options.grid_length;
    params["series_digits"] = options.series_digits;
    ordered_json doc = manifest_header("selftest", std::move(params));
    doc["verdict"] = report.pass();
    doc["checks"] = ordered_json::array();
    for (const auto& c : report.checks) {
      doc["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    }
    out << doc.dump(2) << '\n';
  } else {
    for (const auto& c : report.checks) {
      out << (c.pass ? "PASS  " : "FAIL  ") << c.name;
      if (!c.detail.empty()) out << "  -- " << c.detail;
      out << '\n';
    }
    out << "selftest: " << (report.pass() ? "PASS" : "FAIL") << '\n';
  }
  return report.pass() ? kExitOk : kExitFailure;
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Supercongruence and Ramanujan-series verification toolkit", "supercong"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  CheckOptions check;
  auto* check_cmd = app.add_subcommand("check", "Verify supercongruence families over a prime sweep");
  check_cmd->add_option("families", check.selectors, "s1..s6 or all")->default_str("all");
  check_cmd->add_option("--p-max", check.p_max, "Largest prime in the sweep")->capture_default_str();
  check_cmd->add_option("--s-max", check.s_max, "Largest exponent s")->capture_default_str();
  check_cmd->add_option("--mode", check.mode, "Truncation mode")
      ->check(CLI::IsMember({"full", "half", "both"}))
      ->capture_default_str();
  check_cmd->add_option("--format", check.format, "Report format")
      ->check(CLI::IsMember({"json", "csv", "table"}))
      ->capture_default_str();
  check_cmd->add_option("--out", check.out_path, "Write the report to this file");
  check_cmd->add_option("--jobs", check.jobs, "Worker threads")->capture_default_str();

  SeriesOptions series;
  auto* series_cmd = app.add_subcommand("series", "Evaluate the 1/pi series to high precision");
  series_cmd->add_option("series", series.selectors, "e1 e2 e3 e4 e8 ecz or all")->default_str("all");
  series_cmd->add_option("--digits", series.digits, "Decimal digits, 10..10000")->capture_default_str();
  series_cmd->add_option("--format", series.format, "Report format")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();

  std::string selftest_format = "table";
  auto* selftest_cmd = app.add_subcommand("selftest", "Run the built-in consistency suite");
  selftest_cmd->add_option("--format", selftest_format, "Report format")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();

  DumpOptions dump;
  auto* dump_cmd = app.add_subcommand("dump", "Print terms of a sequence");
  dump_cmd->add_option("sequence", dump.sequence, "fib lucas f8 l8 f15 l15 u v apery")->required();
  dump_cmd->add_option("--count", dump.count, "Number of terms")->capture_default_str();
  dump_cmd->add_option("--mod", dump.modulus, "Reduce modulo p^K");
  dump_cmd->add_option("--format", dump.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (check_cmd->parsed()) return run_check(check, out, err);
    if (series_cmd->parsed()) return run_series(series, out);
    if (selftest_cmd->parsed()) return run_selftest_command({}, selftest_format, out);
    if (dump_cmd->parsed()) return run_dump(dump, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace supercong::cli
