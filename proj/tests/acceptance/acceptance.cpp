// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Usage: acceptance [seed]

#include <stdlib.h>
#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "ecag/io.hpp"
#include "generators.hpp"
#include "json.hpp"
#include "oracles.hpp"

namespace {

using namespace ecag;
namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

struct Outcome {
  bool pass = true;
  std::string detail;
  std::string artifact;  // everything the run produced, for the determinism check
};

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult ecag_run(std::vector<std::string> args) {
  args.insert(args.begin(), "ecag");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class Workdir {
 public:
  Workdir() {
    std::string tmpl = (fs::temp_directory_path() / "ecag-acceptance-XXXXXX").string();
    if (::mkdtemp(tmpl.data()) == nullptr) throw std::runtime_error("mkdtemp failed");
    path_ = tmpl;
  }
  ~Workdir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

std::string instance_text(const SubsetSumInstance& inst) {
  return write_instance_file(InstanceFile{inst.q, inst.a, inst.b, inst.k});
}

std::uint64_t u64(const BigInt& v) { return v.get_ui(); }

struct Failures {
  std::size_t count = 0;
  std::string first;
  void add(const std::string& what) {
    if (count++ == 0) first = what;
  }
  std::string summary(std::size_t total, const std::string& noun) const {
    std::ostringstream os;
    os << count << " mismatches over " << total << " " << noun;
    if (count) os << "; first: " << first;
    return os.str();
  }
};

// -- 1, 2 and 4: soundness sweeps through the CLI ----------------------------

struct SweepCase {
  SubsetSumInstance inst;
  std::uint64_t seed;
  std::string instance_path;
  std::string code_path;
};

std::vector<SweepCase> sweep_cases(std::uint64_t seed, const Workdir& dir, const std::string& tag) {
  Rng rng(seed);
  std::vector<SweepCase> cases;
  for (std::size_t i = 0; i < 200; ++i) {
    SweepCase c{gen::admissible_instance(rng), seed * 1000 + i, dir.file(tag + std::to_string(i) + ".json"),
                dir.file(tag + std::to_string(i) + "-code.json")};
    write_text_file(c.instance_path, instance_text(c.inst));
    cases.push_back(std::move(c));
  }
  return cases;
}

Outcome soundness_sweep(const std::vector<SweepCase>& cases, bool decoding) {
  Outcome res;
  Failures fail;
  std::size_t yes = 0;
  for (const auto& c : cases) {
    const auto& inst = c.inst;
    std::ostringstream id;
    id << "q=" << inst.q << " n=" << inst.n() << " k=" << inst.k << " seed=" << c.seed;
    const std::string seed = std::to_string(c.seed);
    const CliResult v =
        ecag_run({"--seed", seed, "--in", c.instance_path, "--json", "verify", "--mode", decoding ? "mld" : "mdp"});
    res.artifact += v.out;
    if (v.code != 0) {
      fail.add(id.str() + ": verify exit " + std::to_string(v.code) + " " + v.err);
      continue;
    }
    const Json j = Json::parse(v.out);
    const Json& check = j["checks"][0];

    // ground truth from plain enumeration, not the DP
    const bool truth = oracle::brute_subset_sum(gen::to_u64(inst.a), u64(inst.b), inst.k, u64(inst.q)).has_value();
    yes += truth;
    const std::size_t n = inst.n(), k = inst.k;
    const std::size_t expected = truth ? n - k : n - k + 1;
    if ((j["subset_sum"] == "YES") != truth) fail.add(id.str() + ": DP disagrees with enumeration");
    if (check["distance"].get<std::size_t>() != expected || !check["exact"].get<bool>())
      fail.add(id.str() + ": distance " + check["distance"].dump() + ", expected " + std::to_string(expected));
    if (decoding && !check["received_outside_code"].get<bool>()) fail.add(id.str() + ": received word is a codeword");

    // emit the code artifact for the designed-distance guard
    const CliResult r =
        ecag_run({"--seed", seed, "--in", c.instance_path, "--out", c.code_path, decoding ? "reduce-mld" : "reduce-mdp"});
    if (r.code != 0) fail.add(id.str() + ": reduce exit " + std::to_string(r.code));
    res.artifact += read_text_file(c.code_path);
  }
  res.pass = fail.count == 0;
  res.detail = fail.summary(cases.size(), "instances") + " (" + std::to_string(yes) + " YES)";
  return res;
}

Outcome designed_distance_guard(const std::vector<SweepCase>& mdp, const std::vector<SweepCase>& mld) {
  Outcome res;
  Failures fail;
  for (const auto& c : mdp) {
    const CodeFile f = read_code_file(read_text_file(c.code_path));
    if (min_distance_support_oracle(f.code, c.inst.k + 1).exists_vanishing)
      fail.add("mdp seed=" + std::to_string(c.seed) + ": vanishing support of size k+1");
  }
  for (const auto& c : mld) {
    const CodeFile f = read_code_file(read_text_file(c.code_path));
    const std::size_t n = f.code.n(), k = c.inst.k;
    // [n, k-1] code: its own designed distance n-k+1 forbids k zeros
    if (min_distance_support_oracle(f.code, k).exists_vanishing)
      fail.add("mld seed=" + std::to_string(c.seed) + ": code below designed distance");
    if (coset_distance_support_oracle(f.code, *f.received, ScanMode::Full) < n - k)
      fail.add("mld seed=" + std::to_string(c.seed) + ": received word closer than n-k");
  }
  res.pass = fail.count == 0;
  res.detail = std::to_string(fail.count) + " violations over " + std::to_string(mdp.size() + mld.size()) + " codes";
  if (fail.count) res.detail += "; first: " + fail.first;
  return res;
}

// -- 3: exhaustive enumeration against the support oracle ---------------------

Outcome oracle_cross_validation(std::uint64_t seed) {
  Outcome res;
  Failures fail;
  Rng rng(seed);
  std::size_t done = 0, codes = 0;
  const BigInt limit(1'000'000);
  while (done < 50) {
    const SubsetSumInstance inst = gen::admissible_instance(rng, {5, 7, 3, 5, 2, 3, false});
    const std::uint64_t s = gen::uniform(rng, 0, 1u << 30);
    Rng r1(s), r2(s);
    ReductionOutput mdp = reduce_mdp(inst, r1);
    BigInt pk;
    mpz_pow_ui(pk.get_mpz_t(), mdp.code.p().get_mpz_t(), inst.k);
    if (pk > limit) continue;  // resample until p^k fits
    const ReductionOutput mld = reduce_mld(inst, r2);
    ++done;
    std::ostringstream id;
    id << "q=" << inst.q << " n=" << inst.n() << " k=" << inst.k << " p=" << mdp.code.p() << " seed=" << s;

    for (const CodeInstance* code : std::vector<const CodeInstance*>{&mdp.code, &mld.code}) {
      ++codes;
      const std::size_t ex = min_distance_exhaustive(*code, 1'000'000);
      const std::size_t sup = min_distance_support(*code, ScanMode::Full).distance;
      const std::size_t brute = oracle::brute_min_distance(gen::to_u64_rows(code->gen), u64(code->p()));
      if (ex != sup || ex != brute)
        fail.add(id.str() + ": min distance exhaustive " + std::to_string(ex) + ", support " + std::to_string(sup));
      res.artifact += std::to_string(ex) + " ";
    }
    const std::size_t cex = coset_distance_exhaustive(mld.code, *mld.received, 1'000'000);
    const std::size_t csup = coset_distance_support_oracle(mld.code, *mld.received);
    const std::size_t cfull = coset_distance_support_oracle(mld.code, *mld.received, ScanMode::Full);
    if (cex != csup || cex != cfull)
      fail.add(id.str() + ": coset distance exhaustive " + std::to_string(cex) + ", support " + std::to_string(csup));
    res.artifact += std::to_string(cex) + "\n" + write_code_file(to_code_file(mdp)) + write_code_file(to_code_file(mld));
  }
  res.pass = fail.count == 0;
  res.detail = fail.summary(done, "instances") + " (" + std::to_string(codes) + " codes, " + std::to_string(done) +
               " received words)";
  return res;
}

// -- 5: parameter generation ---------------------------------------------------

Outcome parameter_suite(std::uint64_t seed) {
  Outcome res;
  Failures fail;
  std::size_t runs = 0, counted = 0;
  for (std::uint64_t q : gen::primes_in(5, 101)) {
    for (std::uint64_t s = 0; s < 10; ++s) {
      ++runs;
      Rng rng(seed + s);
      const std::string id = "q=" + std::to_string(q) + " seed=" + std::to_string(seed + s);
      const GroupParams gp = build_group_generator(BigInt(static_cast<unsigned long>(q)), rng);
      res.artifact += write_group_params(gp);
      const std::uint64_t p = u64(gp.p);
      if (!oracle::is_prime_trial(p)) fail.add(id + ": p composite");
      if ((p + 1) % q != 0) fail.add(id + ": p != -1 mod q");
      if (p % 3 != 2) fail.add(id + ": p != 2 mod 3");
      if (p >= 3 * q * q + 3 * q) fail.add(id + ": p too large");
      if (gp.generator.is_infinity()) fail.add(id + ": G = O");
      if (!gp.curve.mul(gp.q, gp.generator).is_infinity()) fail.add(id + ": qG != O");
      if (p <= 10'000) {
        ++counted;
        if (gp.curve.enumerate_points().size() != p + 1) fail.add(id + ": |E| != p + 1");
      }
    }
  }
  res.pass = fail.count == 0;
  res.detail = fail.summary(runs, "runs") + " (" + std::to_string(counted) + " point counts)";
  return res;
}

// -- 6: group laws -----------------------------------------------------------------

Outcome group_laws(std::uint64_t seed) {
  Outcome res;
  Failures fail;
  std::size_t triples = 0;
  for (std::uint64_t p : {5ull, 11ull, 17ull, 23ull}) {
    const Curve c(BigInt(static_cast<unsigned long>(p)), BigInt(0), BigInt(1));
    const oracle::ToyCurve toy{p, 0, 1};
    const auto pts = c.enumerate_points();
    const auto as_pt = [](const CurvePoint& x) {
      return x.is_infinity() ? oracle::Pt::O() : oracle::Pt::at(x.x().value().get_ui(), x.y().value().get_ui());
    };
    for (const auto& P : pts) {
      if (!c.add(P, c.neg(P)).is_infinity()) fail.add("p=" + std::to_string(p) + ": P + (-P) != O");
      if (c.add(P, CurvePoint::infinity()) != P) fail.add("p=" + std::to_string(p) + ": P + O != P");
      for (const auto& Q : pts) {
        const CurvePoint pq = c.add(P, Q);
        if (pq != c.add(Q, P)) fail.add("p=" + std::to_string(p) + ": not commutative");
        if (as_pt(pq) != toy.add(as_pt(P), as_pt(Q))) fail.add("p=" + std::to_string(p) + ": differs from oracle");
        for (const auto& R : pts) {
          ++triples;
          if (c.add(pq, R) != c.add(P, c.add(Q, R)))
            fail.add("p=" + std::to_string(p) + ": not associative at " + to_string(P) + ", " + to_string(Q) + ", " +
                     to_string(R));
        }
      }
    }
  }
  // p = 1000037 is prime and 2 mod 3
  const Curve big(BigInt(1000037), BigInt(0), BigInt(1));
  Rng rng(seed);
  for (int t = 0; t < 1000; ++t) {
    const CurvePoint P = big.random_point_supersingular(rng), Q = big.random_point_supersingular(rng),
                     R = big.random_point_supersingular(rng);
    ++triples;
    res.artifact += to_string(P) + to_string(Q) + to_string(R);
    const std::string id = "p=1000037 triple " + std::to_string(t);
    if (big.add(big.add(P, Q), R) != big.add(P, big.add(Q, R))) fail.add(id + ": not associative");
    if (big.add(P, Q) != big.add(Q, P)) fail.add(id + ": not commutative");
    if (!big.add(P, big.neg(P)).is_infinity()) fail.add(id + ": no inverse");
    if (!big.mul(BigInt(1000038), P).is_infinity()) fail.add(id + ": (p + 1) P != O");
  }
  res.pass = fail.count == 0;
  res.detail = std::to_string(fail.count) + " failures over " + std::to_string(triples) + " triples";
  if (fail.count) res.detail += "; first: " + fail.first;
  return res;
}

// -- 7: f' divisor and representations ------------------------------------------

Outcome fprime_consistency() {
  Outcome res;
  Failures fail;
  std::size_t pairs = 0, fallbacks = 0;
  const std::vector<std::array<std::uint64_t, 3>> curves{{5, 0, 1},   {11, 0, 1}, {13, 2, 3}, {17, 0, 1},
                                                         {23, 0, 1},  {29, 0, 1}, {31, 3, 7}, {41, 0, 1},
                                                         {59, 0, 1}};
  const auto as_pt = [](const CurvePoint& x) {
    return x.is_infinity() ? oracle::Pt::O() : oracle::Pt::at(x.x().value().get_ui(), x.y().value().get_ui());
  };
  for (const auto& [p, a, b] : curves) {
    const Curve c(BigInt(static_cast<unsigned long>(p)), BigInt(static_cast<unsigned long>(a)),
                  BigInt(static_cast<unsigned long>(b)));
    const oracle::ToyCurve toy{p, a, b};
    const auto pts = c.enumerate_points();
    for (const auto& Q : pts) {
      if (Q.is_infinity()) continue;
      const CurvePoint minus_q = c.neg(Q);
      for (const auto& Q1 : pts) {
        if (Q1.is_infinity() || Q1 == Q) continue;
        ++pairs;
        const std::string id = "p=" + std::to_string(p) + " Q=" + to_string(Q) + " Q'=" + to_string(Q1);
        const FPrime f = fprime_through(c, Q, Q1);
        oracle::Divisor expected;
        for (const auto& [pt, m] : std::vector<std::pair<oracle::Pt, int>>{
                 {as_pt(f.q_prime()), 1}, {as_pt(f.q_double_prime()), 1}, {as_pt(Q), -1}, {oracle::Pt::O(), -1}}) {
          if ((expected[pt] += m) == 0) expected.erase(pt);
        }
        if (oracle::fprime_divisor(toy, as_pt(Q), as_pt(f.q_prime()), as_pt(f.q_double_prime())) != expected)
          fail.add(id + ": divisor differs from Q' + Q'' - Q - O");
        for (const auto& P : pts) {
          if (P.is_infinity() || P == Q) continue;
          const auto chord = f.eval_chord_form(P);
          const auto product = f.eval_product_form(P);
          if (chord && product && *chord != *product) fail.add(id + ": forms disagree at " + to_string(P));
          if (!chord && !product) fail.add(id + ": no form defined at " + to_string(P));
          const FieldElement v = f.eval(P);
          if (P == minus_q) {
            ++fallbacks;
            const auto limit =
                oracle::fprime_limit_at_minus_q(toy, as_pt(Q), as_pt(f.q_prime()), as_pt(f.q_double_prime()));
            if (!limit || v.value().get_ui() != *limit) fail.add(id + ": fallback at -Q differs from the limit");
          }
          const auto it = expected.find(as_pt(P));
          if (v.is_zero() != (it != expected.end() && it->second > 0)) fail.add(id + ": zero at " + to_string(P));
        }
      }
    }
  }
  res.pass = fail.count == 0;
  res.detail = std::to_string(fail.count) + " failures over " + std::to_string(pairs) + " (Q, Q') pairs on " +
               std::to_string(curves.size()) + " curves, " + std::to_string(fallbacks) + " -Q evaluations";
  if (fail.count) res.detail += "; first: " + fail.first;
  return res;
}

// -- 8: discrete logarithms ----------------------------------------------------------

Outcome ecdlp_demo(std::uint64_t seed) {
  Outcome res;
  Failures fail;
  Rng rng(seed);
  const GroupParams gp = build_group_generator(BigInt(1031), rng);
  const EcdlpParams params{gp.curve, gp.generator, gp.q};
  const std::size_t n = ecdlp_bits(gp.q);
  if (n != 10) fail.add("n = " + std::to_string(n));
  std::uint64_t samples = 0, worst = 0;
  for (int t = 0; t < 20; ++t) {
    const BigInt l = rand_below(gp.q, rng);
    const CurvePoint target = gp.curve.mul(l, gp.generator);
    const EcdlpResult r = ecdlp_solve(params, target, rng);
    samples += r.samples;
    worst = std::max(worst, r.samples);
    res.artifact += to_string(l) + " " + to_string(r.log) + " " + std::to_string(r.samples) + "\n";
    if (gp.curve.mul(r.log, gp.generator) != target) fail.add("l=" + to_string(l) + ": l P != T");
    if (r.log != l) fail.add("l=" + to_string(l) + ": recovered " + to_string(r.log));
    if (r.samples > 50) fail.add("l=" + to_string(l) + ": " + std::to_string(r.samples) + " samples");
  }
  res.pass = fail.count == 0;
  std::ostringstream os;
  os << fail.count << " failures over 20 targets, p = " << gp.p << ", n = " << n << ", mean samples "
     << static_cast<double>(samples) / 20.0 << ", max " << worst;
  if (fail.count) os << "; first: " << fail.first;
  res.detail = os.str();
  return res;
}

// -- 9: determinism ------------------------------------------------------------------

Outcome determinism(std::uint64_t seed, const std::map<int, std::string>& first_run,
                    const std::map<int, std::function<Outcome()>>& rerun) {
  Outcome res;
  Failures fail;
  for (const auto& [id, fn] : rerun) {
    if (fn().artifact != first_run.at(id)) fail.add("criterion " + std::to_string(id) + " artifacts differ");
  }
  // the CLI artifacts themselves, run twice
  Workdir dir;
  Rng rng(seed);
  const std::string in = dir.file("inst.json");
  write_text_file(in, instance_text(gen::admissible_instance(rng)));
  const std::string s = std::to_string(seed);
  const std::vector<std::vector<std::string>> commands{
      {"--seed", s, "--in", in, "reduce-mdp"},        {"--seed", s, "--in", in, "reduce-mld"},
      {"--seed", s, "gen-params", "--q", "101"},      {"--seed", s, "--in", in, "--json", "verify"},
      {"--seed", s, "ecdlp-demo", "--targets", "3"}, {"--seed", s, "--in", in, "--json", "solve-subset-sum"}};
  for (const auto& cmd : commands) {
    const CliResult a = ecag_run(cmd), b = ecag_run(cmd);
    if (a.code != 0 || a.out != b.out || a.out.empty()) fail.add(cmd[cmd.size() > 4 ? 4 : 2] + " output differs");
  }
  res.pass = fail.count == 0;
  res.detail = std::to_string(fail.count) + " differences over " + std::to_string(rerun.size()) +
               " rerun criteria and " + std::to_string(commands.size()) + " CLI commands";
  if (fail.count) res.detail += "; first: " + fail.first;
  return res;
}

}  // namespace

int main(int argc, char** argv) {
  const std::uint64_t seed = argc > 1 ? std::stoull(argv[1]) : 20240601;
  Workdir dir;
  bool all = true;
  std::map<int, std::string> artifacts;

  const auto report = [&](int id, const std::string& name, double budget, const std::function<Outcome()>& fn) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (budget > 0 && secs > budget) {
      o.pass = false;
      o.detail += " (over the " + std::to_string(static_cast<int>(budget)) + " s budget)";
    }
    artifacts[id] = o.artifact;
    all = all && o.pass;
    std::printf("%s criterion %d: %s: %s [%.2f s]\n", o.pass ? "PASS" : "FAIL", id, name.c_str(), o.detail.c_str(),
                secs);
    std::fflush(stdout);
  };

  std::vector<SweepCase> mdp_cases, mld_cases;
  const auto sweep1 = [&] {
    mdp_cases = sweep_cases(seed + 1, dir, "mdp");
    return soundness_sweep(mdp_cases, false);
  };
  const auto sweep2 = [&] {
    mld_cases = sweep_cases(seed + 2, dir, "mld");
    return soundness_sweep(mld_cases, true);
  };
  const auto c3 = [&] { return oracle_cross_validation(seed + 3); };
  const auto c5 = [&] { return parameter_suite(seed + 5); };
  const auto c6 = [&] { return group_laws(seed + 6); };
  const auto c8 = [&] { return ecdlp_demo(seed + 8); };

  report(1, "minimum distance soundness sweep", 60, sweep1);
  report(2, "decoding soundness sweep", 60, sweep2);
  report(3, "exhaustive vs support oracles", 120, c3);
  report(4, "designed-distance guard", 0, [&] { return designed_distance_guard(mdp_cases, mld_cases); });
  report(5, "group parameters", 30, c5);
  report(6, "group laws", 0, c6);
  report(7, "f' divisor and representations", 0, fprime_consistency);
  report(8, "ECDLP through minimum distance", 120, c8);
  const std::map<int, std::function<Outcome()>> rerun{
      {1, sweep1}, {2, sweep2}, {3, c3}, {5, c5}, {6, c6}, {7, fprime_consistency}, {8, c8}};
  report(9, "determinism", 0, [&] { return determinism(seed + 9, artifacts, rerun); });

  std::printf("%s\n", all ? "all criteria passed" : "some criteria FAILED");
  return all ? 0 : 1;
}
