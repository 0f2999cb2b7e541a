// qtc: query-table complexity census and CRT profile construction.
//
// Every run prints a report whose header echoes the resolved config;
// identical configs give byte-identical reports.  Exit codes:
//   0 success, 1 verification/assertion failure, 2 usage error,
//   3 budget/overflow error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "qtc/automaton_io.hpp"
#include "qtc/crt.hpp"
#include "qtc/errors.hpp"
#include "qtc/report.hpp"

namespace {

using qtc::Json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

uint64_t env_or(const char* name, uint64_t fallback) {
  const char* v = std::getenv(name);
  return v ? std::strtoull(v, nullptr, 10) : fallback;
}

struct CommonOpts {
  std::string oracle = "squarefree";
  std::string automaton_file;
  std::string explicit_members;
  uint64_t explicit_cutoff = 0;
  std::string format = "json";
  std::string output;
  unsigned threads = 1;
  uint64_t chunk_size = 1 << 16;
  uint64_t window_cap = env_or("QTC_WINDOW_CAP", qtc::kDefaultWindowCap);
  uint64_t map_cap = env_or("QTC_MAP_CAP", uint64_t(1) << 20);
};

void add_oracle_flags(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--oracle", o.oracle, "primes|squarefree|automaton|explicit")
      ->check(CLI::IsMember({"primes", "squarefree", "automaton", "explicit"}));
  cmd->add_option("--automaton-file", o.automaton_file,
                  "automaton description (oracle=automaton)");
  cmd->add_option("--members", o.explicit_members,
                  "comma-separated values (oracle=explicit)");
  cmd->add_option("--cutoff", o.explicit_cutoff,
                  "domain cutoff (oracle=explicit)");
}

void add_output_flags(CLI::App* cmd, CommonOpts& o, bool csv = false) {
  if (csv)
    cmd->add_option("--format", o.format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--output", o.output, "output path (default stdout)");
}

std::vector<uint64_t> parse_list(const std::string& csv) {
  std::vector<uint64_t> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(std::strtoull(item.c_str(), nullptr, 10));
  return out;
}

qtc::LanguageOracle make_oracle(const CommonOpts& o) {
  if (o.oracle == "primes") return qtc::LanguageOracle::primes();
  if (o.oracle == "squarefree") return qtc::LanguageOracle::squarefree();
  if (o.oracle == "automaton") {
    if (o.automaton_file.empty())
      throw CLI::ValidationError("--automaton-file required for oracle=automaton");
    return qtc::LanguageOracle::automaton(
        qtc::parse_automaton_file(o.automaton_file));
  }
  if (o.explicit_cutoff == 0)
    throw CLI::ValidationError("--cutoff required for oracle=explicit");
  auto values = parse_list(o.explicit_members);
  return qtc::LanguageOracle::explicit_set({values.begin(), values.end()},
                                           o.explicit_cutoff);
}

Json config_json(const CommonOpts& o, const std::string& subcommand) {
  Json c;
  c["subcommand"] = subcommand;
  c["oracle"] = o.oracle;
  if (!o.automaton_file.empty()) c["automatonFile"] = o.automaton_file;
  c["format"] = o.format;
  c["threads"] = o.threads;
  c["chunkSize"] = o.chunk_size;
  c["windowCap"] = o.window_cap;
  c["mapCap"] = o.map_cap;
  return c;
}

void emit(const CommonOpts& o, const std::string& text) {
  if (o.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(o.output, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file " + o.output);
  out << text;
}

void emit_report(const CommonOpts& o, Json config, Json report) {
  Json doc;
  doc["config"] = std::move(config);
  doc["report"] = std::move(report);
  emit(o, qtc::render(doc));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"query-table complexity census over binary integer languages"};
  app.require_subcommand(1);

  CommonOpts o;
  size_t n = 2;
  uint64_t y = 0, y_lo = 0, y_hi = 0, x = 1000, y_bound = 0;
  std::string t_list, witness_file, word;
  size_t prefix_len = 2, suffix_depth = 4, census_depth = 0, tree_depth = 0;
  size_t suffix_len_max = 12;
  uint64_t z_bound = env_or("QTC_Z_BOUND", 1'000'000);
  uint64_t work_cap = env_or("QTC_WORK_CAP", uint64_t(1) << 24);
  bool do_census = false, do_tree = false, do_print = false, do_bound = false;

  auto* profiles = app.add_subcommand("profiles", "profile of order n at y");
  add_oracle_flags(profiles, o);
  add_output_flags(profiles, o);
  profiles->add_option("--n", n, "profile order")->required();
  profiles->add_option("--y", y, "suffix integer")->required();

  auto* scan = app.add_subcommand("scan", "distinct-profile census over a y range");
  add_oracle_flags(scan, o);
  add_output_flags(scan, o, /*csv=*/true);
  scan->add_option("--n", n, "profile order")->required();
  scan->add_option("--y-lo", y_lo, "range start (default 0)");
  scan->add_option("--y-hi", y_hi, "range end, exclusive")->required();
  scan->add_option("--threads", o.threads, "parallelism degree");
  scan->add_option("--chunk-size", o.chunk_size, "y values per work unit");

  auto* richness = app.add_subcommand("richness",
                                      "rich/poor prime-interval census");
  add_output_flags(richness, o);
  richness->add_option("--x", x, "scan limit")->required();
  richness->add_option("--n", n, "interval length exponent")->required();

  auto* construct = app.add_subcommand("construct",
                                       "CRT witness for a squarefree profile");
  add_output_flags(construct, o);
  construct->add_option("--n", n, "profile order")->required();
  construct->add_option("--t", t_list,
                        "target profile, comma-separated (empty for {})");
  construct->add_option("--z-bound", z_bound, "search bound on z");

  auto* verify = app.add_subcommand("verify", "re-verify a serialized witness");
  add_output_flags(verify, o);
  verify->add_option("--witness", witness_file, "witness JSON file")->required();

  auto* coverage = app.add_subcommand("coverage",
                                      "squarefree profile-space coverage");
  add_output_flags(coverage, o);
  coverage->add_option("--n", n, "profile order")->required();
  coverage->add_option("--y-bound", y_bound, "scan bound")->required();
  coverage->add_option("--threads", o.threads, "parallelism degree");
  coverage->add_option("--chunk-size", o.chunk_size, "y values per work unit");

  auto* automaton = app.add_subcommand("automaton", "automaton utilities");
  add_oracle_flags(automaton, o);
  add_output_flags(automaton, o);
  automaton->add_option("--accepts", word, "word over {0,1}, LSB first");
  automaton->add_flag("--print", do_print, "echo in interchange format");
  automaton->add_option("--census", census_depth, "reachable-state census depth")
      ->expected(1);
  automaton->add_flag("--census-run", do_census, "run the census");
  automaton->add_option("--tree-depth", tree_depth,
                        "build the truncated tree DFA of --oracle");
  automaton->add_flag("--tree", do_tree, "emit the tree DFA");
  automaton->add_flag("--profile-bound", do_bound,
                      "check distinct profiles <= 2^{reachable}");
  automaton->add_option("--n", n, "profile order for --profile-bound");
  automaton->add_option("--suffix-len-max", suffix_len_max,
                        "suffix length cap for --profile-bound");

  auto* residuals = app.add_subcommand("residuals",
                                       "residual-language class count");
  add_oracle_flags(residuals, o);
  add_output_flags(residuals, o);
  residuals->add_option("--prefix-len", prefix_len, "max prefix length")
      ->required();
  residuals->add_option("--suffix-depth", suffix_depth, "max suffix length")
      ->required();
  residuals->add_option("--work-cap", work_cap, "enumeration budget");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    qtc::ScanOptions sopt{o.chunk_size, o.threads, o.window_cap, o.map_cap, ""};

    if (profiles->parsed()) {
      auto oracle = make_oracle(o);
      qtc::Profile p = qtc::profile(oracle, n, y);
      Json c = config_json(o, "profiles");
      c["n"] = n;
      c["y"] = y;
      Json r;
      r["members"] = p.members();
      r["hex"] = p.to_hex();
      r["popcount"] = p.popcount();
      emit_report(o, c, r);
    } else if (scan->parsed()) {
      auto oracle = make_oracle(o);
      auto result = qtc::scan_profiles(oracle, n, y_lo, y_hi, sopt);
      Json c = config_json(o, "scan");
      c["n"] = n;
      c["yLo"] = y_lo;
      c["yHi"] = y_hi;
      if (o.format == "csv") {
        std::string header = "# " + c.dump() + "\n";
        emit(o, header + qtc::scan_to_csv(result));
      } else {
        emit_report(o, c, qtc::scan_to_json(result));
      }
    } else if (richness->parsed()) {
      auto result = qtc::richness_report(x, n, o.window_cap);
      Json c = config_json(o, "richness");
      c["x"] = x;
      c["n"] = n;
      emit_report(o, c, qtc::richness_to_json(result));
    } else if (construct->parsed()) {
      qtc::CrtOptions copt;
      copt.z_bound = z_bound;
      auto w = qtc::construct_witness(n, parse_list(t_list), copt);
      Json c = config_json(o, "construct");
      c["n"] = n;
      c["t"] = t_list;
      c["zBound"] = z_bound;
      emit_report(o, c, qtc::witness_to_json(w));
      if (!w.verified) return kExitCheckFailed;
    } else if (verify->parsed()) {
      std::ifstream in(witness_file);
      if (!in) throw qtc::ParseError("cannot open witness file: " + witness_file);
      Json doc = Json::parse(in);
      // Accept either a bare witness or a full construct report.
      auto w = qtc::witness_from_json(doc.contains("report") ? doc["report"] : doc);
      bool ok = qtc::verify_witness(w);
      Json c = config_json(o, "verify");
      c["witnessFile"] = witness_file;
      emit_report(o, c, qtc::witness_to_json(w));
      if (!ok) return kExitCheckFailed;
    } else if (coverage->parsed()) {
      auto result = qtc::profile_coverage_census(n, y_bound, sopt);
      Json c = config_json(o, "coverage");
      c["n"] = n;
      c["yBound"] = y_bound;
      emit_report(o, c, qtc::coverage_to_json(result));
    } else if (automaton->parsed()) {
      Json c = config_json(o, "automaton");
      if (do_tree || tree_depth > 0) {
        auto oracle = make_oracle(o);
        auto dfa = qtc::tree_dfa(
            [&](const qtc::BitWord& w) { return oracle.contains_word(w); },
            tree_depth);
        emit(o, qtc::format_automaton(dfa));
      } else {
        auto aut = qtc::parse_automaton_file(o.automaton_file);
        if (do_print) {
          emit(o, qtc::format_automaton(aut));
        } else if (do_bound) {
          auto check = qtc::dfa_profile_bound_check(aut, n, suffix_len_max,
                                                    work_cap);
          c["n"] = n;
          c["suffixLenMax"] = suffix_len_max;
          emit_report(o, c, qtc::bound_check_to_json(check));
          if (!check.holds) return kExitCheckFailed;
        } else if (do_census || census_depth > 0) {
          c["censusDepth"] = census_depth;
          emit_report(o, c,
                      qtc::census_to_json(qtc::reachable_census(aut, census_depth)));
        } else if (!word.empty() || automaton->count("--accepts")) {
          std::vector<uint8_t> bits;
          for (char ch : word) {
            if (ch != '0' && ch != '1')
              throw CLI::ValidationError("--accepts word must be over {0,1}");
            bits.push_back(ch == '1');
          }
          bool acc = qtc::accepts(aut, qtc::BitWord(bits));
          c["word"] = word;
          Json r;
          r["accepts"] = acc;
          emit_report(o, c, r);
        } else {
          throw CLI::ValidationError(
              "automaton: pick one of --accepts/--print/--census/--tree/"
              "--profile-bound");
        }
      }
    } else if (residuals->parsed()) {
      auto oracle = make_oracle(o);
      auto result = qtc::residual_count(
          [&](const qtc::BitWord& w) { return oracle.contains_word(w); },
          prefix_len, suffix_depth, work_cap);
      Json c = config_json(o, "residuals");
      c["prefixLen"] = prefix_len;
      c["suffixDepth"] = suffix_depth;
      c["workCap"] = work_cap;
      emit_report(o, c, qtc::residual_to_json(result, oracle.kind_name()));
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const qtc::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const qtc::BudgetError& e) {
    std::cerr << "budget error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const qtc::OverflowError& e) {
    std::cerr << "overflow error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const qtc::DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  }
  return kExitOk;
}
