#include "qtc/report.hpp"

#include <sstream>

#include "qtc/errors.hpp"

namespace qtc {

namespace {

std::string hash_hex(uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace

Json scan_to_json(const QueryTableScan& scan) {
  Json j;
  j["kind"] = scan.oracle_kind;
  j["n"] = scan.n;
  j["yLo"] = scan.y_lo;
  j["yHi"] = scan.y_hi;
  j["distinct"] = scan.distinct;
  j["maxMultiplicity"] = scan.max_multiplicity;
  j["popcountHistogram"] = scan.popcount_histogram;
  j["baselineHash"] = hash_hex(scan.baseline_hash);
  return j;
}

std::string scan_to_csv(const QueryTableScan& scan) {
  std::ostringstream out;
  out << "profile_hex,multiplicity\n";
  for (const auto& [p, c] : scan.entries)
    out << p.to_hex() << "," << c << "\n";
  return out.str();
}

Json richness_to_json(const RichnessReport& r) {
  Json j;
  j["x"] = r.x;
  j["n"] = r.n;
  j["N"] = r.N;
  j["threshold"] = r.threshold;
  j["thresholdLog2"] = r.threshold_log2;
  j["intervalCount"] = r.interval_count;
  j["richCount"] = r.rich_count;
  j["poorCount"] = r.poor_count;
  j["poorPrimeTotal"] = r.poor_prime_total;
  j["richLowerBound"] = r.rich_lower_bound;
  j["firstIntervalPrimes"] = r.first_interval_primes;
  j["firstIntervalRich"] = r.first_interval_rich;
  return j;
}

Json coverage_to_json(const CoverageReport& r) {
  Json j;
  j["n"] = r.n;
  j["yBound"] = r.y_bound;
  j["sSize"] = r.s_size;
  j["observed"] = r.observed;
  j["target"] = r.target;
  j["coverage"] = r.coverage;
  j["allSubsetsOfS"] = r.all_subsets_of_s;
  return j;
}

Json residual_to_json(const ResidualReport& r, const std::string& oracle_kind) {
  Json j;
  j["kind"] = oracle_kind;
  j["prefixLen"] = r.prefix_len;
  j["suffixDepth"] = r.suffix_depth;
  j["distinctCount"] = r.distinct_count;
  return j;
}

Json census_to_json(const std::vector<size_t>& counts) {
  Json j;
  j["counts"] = counts;
  // Reachability for alternating automata is the live-set
  // over-approximation, not a game-theoretic notion.
  j["semantics"] = "atom-closure-over-approximation";
  return j;
}

Json bound_check_to_json(const DfaProfileBoundCheck& c) {
  Json j;
  j["holds"] = c.holds;
  j["distinctProfiles"] = c.distinct_profiles;
  j["reachableStates"] = c.reachable_states;
  j["bound"] = c.bound;
  return j;
}

Json witness_to_json(const CrtWitness& w) {
  Json j;
  j["n"] = w.n;
  j["N"] = w.N;
  j["target"] = w.target;
  j["sResidues"] = w.s_residues;
  j["basePrimes"] = w.base_primes;
  j["q"] = w.q;
  Json assignment = Json::array();
  for (auto [a, p] : w.assignment)
    assignment.push_back(Json{{"a", a}, {"prime", p}});
  j["assignment"] = assignment;
  j["paddingPrimes"] = w.padding_primes;
  j["qPrime"] = w.q_prime;
  j["y0"] = w.y0;
  j["z"] = w.z;
  j["y"] = w.y;
  j["verified"] = w.verified;
  Json transcript = Json::array();
  for (const auto& e : w.transcript) {
    Json t;
    t["a"] = e.a;
    t["value"] = e.value;
    t["inTarget"] = e.in_target;
    if (e.squarefree)
      t["witness"] = "squarefree";
    else
      t["witness"] = std::to_string(e.square_divisor) + "^2";
    t["ok"] = e.ok;
    transcript.push_back(t);
  }
  j["transcript"] = transcript;
  return j;
}

CrtWitness witness_from_json(const Json& j) {
  try {
    CrtWitness w;
    w.n = j.at("n").get<size_t>();
    w.N = j.at("N").get<uint64_t>();
    w.target = j.at("target").get<std::vector<uint64_t>>();
    w.s_residues = j.at("sResidues").get<std::vector<uint64_t>>();
    w.base_primes = j.at("basePrimes").get<std::vector<uint64_t>>();
    w.q = j.at("q").get<uint64_t>();
    for (const auto& t : j.at("assignment"))
      w.assignment.emplace_back(t.at("a").get<uint64_t>(),
                                t.at("prime").get<uint64_t>());
    w.padding_primes = j.at("paddingPrimes").get<std::vector<uint64_t>>();
    w.q_prime = j.at("qPrime").get<uint64_t>();
    w.y0 = j.at("y0").get<uint64_t>();
    w.z = j.at("z").get<uint64_t>();
    w.y = j.at("y").get<uint64_t>();
    w.verified = j.value("verified", false);
    if (w.N != (uint64_t(1) << w.n))
      throw ParseError("witness: N does not match 2^n");
    return w;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed witness JSON: ") + e.what());
  }
}

std::string render(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace qtc
