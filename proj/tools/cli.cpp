#include "cli.hpp"

#include <functional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "ecag/io.hpp"
#include "json.hpp"

namespace ecag::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t x : v) s += (s.empty() ? "" : " ") + std::to_string(x);
  return s;
}

std::string join(const Vector& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : " ") + to_string(x);
  return s;
}

Json to_json(const std::vector<std::size_t>& v) { return Json(v); }

Json to_json(const Vector& v) {
  Json j = Json::array();
  for (const auto& x : v) j.push_back(to_string(x));
  return j;
}

bool subset_sums_to(const SubsetSumInstance& inst, const std::vector<std::size_t>& idx) {
  BigInt sum = 0;
  for (std::size_t i : idx) sum += inst.a[i];
  return mod(sum - inst.b, inst.q) == 0;
}

VerifyOutcome check_mdp(const SubsetSumInstance& inst, const SubsetSumAnswer& answer, std::uint64_t seed,
                        ScanMode scan) {
  Rng rng(seed);
  const ReductionOutput red = inst.b == 0 ? reduce_mdp_one_point(inst, rng) : reduce_mdp(inst, rng);
  VerifyOutcome out;
  out.variant = red.code.provenance.variant;
  out.n = red.code.n();
  out.k = red.code.k();
  out.p = red.code.p();
  out.claim = red.claim;
  out.yes = answer.yes;
  out.expected = answer.yes ? red.claim.yes_distance : red.claim.no_distance;
  out.oracle = min_distance_support(red.code, scan);
  out.designed_distance_ok = !min_distance_support_oracle(red.code, inst.k + 1).exists_vanishing;
  if (answer.yes && out.oracle.exact && out.oracle.distance == out.expected) {
    out.support_sums_to_b = out.oracle.support.size() == inst.k && subset_sums_to(inst, out.oracle.support);
  }
  return out;
}

VerifyOutcome check_mld(const SubsetSumInstance& inst, const SubsetSumAnswer& answer, std::uint64_t seed,
                        ScanMode scan) {
  Rng rng(seed);
  const ReductionOutput red = reduce_mld(inst, rng);
  VerifyOutcome out;
  out.variant = red.code.provenance.variant;
  out.n = red.code.n();
  out.k = inst.k;
  out.p = red.code.p();
  out.claim = red.claim;
  out.yes = answer.yes;
  out.expected = answer.yes ? red.claim.yes_distance : red.claim.no_distance;
  out.oracle = coset_distance_support(red.code, *red.received, scan);
  out.received_outside_code = !solve_left(red.code.gen, *red.received).has_value();

  // no agreement set of size k + 1, and the [n, k-1] code itself keeps distance >= n - k
  out.designed_distance_ok = !min_distance_support_oracle(red.code, inst.k + 1).exists_vanishing;
  if (inst.k + 1 <= red.code.n()) {
    const DistanceReport wide = coset_distance_support(red.code, *red.received, ScanMode::Dichotomy);
    out.designed_distance_ok = out.designed_distance_ok && wide.exact && wide.distance >= red.code.n() - inst.k;
  }
  if (answer.yes && out.oracle.exact && out.oracle.distance == out.expected) {
    out.support_sums_to_b = out.oracle.support.size() == inst.k && subset_sums_to(inst, out.oracle.support);
  }
  return out;
}

// -- command plumbing -------------------------------------------------------

struct Globals {
  std::uint64_t seed = 1;
  std::string in;
  std::string out;
  bool json = false;
  bool full = false;
  std::optional<std::uint64_t> bound;
};

class Session {
 public:
  Session(const Globals& g, std::ostream& out, std::ostream& err) : g_(g), out_(out), err_(err) {}

  std::string input() const {
    if (g_.in.empty()) throw Error(ErrorKind::InvalidInput, "--in <path> is required");
    return read_text_file(g_.in);
  }

  void emit(const std::string& text) const {
    if (g_.out.empty()) {
      out_ << text;
    } else {
      write_text_file(g_.out, text);
    }
  }

  void print(const Json& j, const std::string& text) const { out_ << (g_.json ? j.dump(2) + "\n" : text); }

  const Globals& g() const { return g_; }
  std::ostream& err() const { return err_; }

 private:
  const Globals& g_;
  std::ostream& out_;
  std::ostream& err_;
};

SubsetSumInstance load_instance(const Session& s, bool admissible = true) {
  Rng rng(s.g().seed);
  return to_instance(read_instance_file(s.input()), rng, admissible);
}

int cmd_gen_params(const Session& s, const std::string& q_text) {
  Rng rng(s.g().seed);
  const GroupParams params = build_group_generator(parse_bigint(q_text), rng);
  s.emit(write_group_params(params));
  return kOk;
}

int cmd_reduce(const Session& s, bool decoding) {
  const SubsetSumInstance inst = load_instance(s);
  Rng rng(s.g().seed);
  ReductionOutput red = decoding ? reduce_mld(inst, rng)
                                 : (inst.b == 0 ? reduce_mdp_one_point(inst, rng) : reduce_mdp(inst, rng));
  s.emit(write_code_file(to_code_file(red)));
  return kOk;
}

int cmd_mindist(const Session& s) {
  const CodeFile file = read_code_file(s.input());
  file.code.validate();
  Json j;
  std::ostringstream text;
  if (s.g().bound) {
    const std::size_t d = min_distance_exhaustive(file.code, *s.g().bound);
    j["method"] = "exhaustive";
    j["distance"] = d;
    text << "d = " << d << "\nmethod = exhaustive\n";
  } else {
    const DistanceReport r = min_distance_support(file.code, s.g().full ? ScanMode::Full : ScanMode::Dichotomy);
    j["method"] = s.g().full ? "support-full" : "support-dichotomy";
    j["distance"] = r.distance;
    j["exact"] = r.exact;
    j["sizes_scanned"] = to_json(r.sizes_scanned);
    j["vanishing_support"] = to_json(r.support);
    if (r.witness) j["witness"] = to_json(*r.witness);
    text << (r.exact ? "d = " : "d <= ") << r.distance << "\nmethod = " << j["method"].get<std::string>()
         << "\nvanishing support = " << join(r.support) << "\n";
    if (r.witness) text << "witness = " << join(*r.witness) << "\n";
    if (!r.exact) text << "note: distance is below the dichotomy range; rerun with --full for the exact value\n";
  }
  if (file.claim) {
    j["claim"] = Json{{"yes_distance", file.claim->yes_distance}, {"no_distance", file.claim->no_distance}};
  }
  s.print(j, text.str());
  return kOk;
}

int cmd_coset_dist(const Session& s) {
  const CodeFile file = read_code_file(s.input());
  file.code.validate();
  if (!file.received) throw Error(ErrorKind::InvalidInput, "code file has no received word");
  Json j;
  std::ostringstream text;
  if (s.g().bound) {
    const std::size_t d = coset_distance_exhaustive(file.code, *file.received, *s.g().bound);
    j["method"] = "exhaustive";
    j["distance"] = d;
    text << "distance = " << d << "\nmethod = exhaustive\n";
  } else {
    const DistanceReport r =
        coset_distance_support(file.code, *file.received, s.g().full ? ScanMode::Full : ScanMode::Dichotomy);
    j["method"] = s.g().full ? "support-full" : "support-dichotomy";
    j["distance"] = r.distance;
    j["exact"] = r.exact;
    j["sizes_scanned"] = to_json(r.sizes_scanned);
    j["agreement_support"] = to_json(r.support);
    if (r.witness) j["nearest_codeword"] = to_json(*r.witness);
    text << (r.exact ? "distance = " : "distance <= ") << r.distance << "\nmethod = " << j["method"].get<std::string>()
         << "\nagreement support = " << join(r.support) << "\n";
    if (r.witness) text << "nearest codeword = " << join(*r.witness) << "\n";
    if (!r.exact) text << "note: distance is below the dichotomy range; rerun with --full for the exact value\n";
  }
  s.print(j, text.str());
  return kOk;
}

int cmd_solve(const Session& s) {
  const SubsetSumInstance inst = load_instance(s, false);
  const SubsetSumAnswer ans = subset_sum_dp(inst);
  Json j;
  j["q"] = to_string(inst.q);
  j["answer"] = ans.yes ? "YES" : "NO";
  std::string text = ans.yes ? "YES\n" : "NO\n";
  if (ans.witness) {
    Json values = Json::array();
    std::string vals;
    for (std::size_t i : *ans.witness) {
      values.push_back(to_string(inst.a[i]));
      vals += (vals.empty() ? "" : " ") + to_string(inst.a[i]);
    }
    j["indices"] = to_json(*ans.witness);
    j["values"] = std::move(values);
    text += "indices = " + join(*ans.witness) + "\nvalues = " + vals + "\n";
  }
  s.print(j, text);
  return kOk;
}

Json report_json(const VerifyReport& report) {
  Json j;
  j["q"] = to_string(report.instance.q);
  j["n"] = report.instance.n();
  j["k"] = report.instance.k;
  j["subset_sum"] = report.answer.yes ? "YES" : "NO";
  Json outs = Json::array();
  for (const auto& o : report.outcomes) {
    outs.push_back(Json{{"variant", o.variant},
                        {"p", to_string(o.p)},
                        {"expected", o.expected},
                        {"distance", o.oracle.distance},
                        {"exact", o.oracle.exact},
                        {"designed_distance_ok", o.designed_distance_ok},
                        {"received_outside_code", o.received_outside_code},
                        {"support_sums_to_b", o.support_sums_to_b},
                        {"match", o.matches()}});
  }
  j["checks"] = std::move(outs);
  j["ok"] = report.ok();
  return j;
}

int cmd_verify(const Session& s, const std::string& mode_text) {
  const SubsetSumInstance inst = load_instance(s);
  VerifyMode mode = VerifyMode::Both;
  if (mode_text == "mdp") mode = VerifyMode::Mdp;
  if (mode_text == "mld") mode = VerifyMode::Mld;
  const VerifyReport report = verify_instance(inst, s.g().seed, mode, s.g().full ? ScanMode::Full : ScanMode::Dichotomy);
  s.print(report_json(report), format_report(report));
  if (!report.ok()) s.err() << "claim mismatch\n";
  return report.ok() ? kOk : kClaimMismatch;
}

int cmd_ecdlp(const Session& s, const std::string& order_text, std::size_t targets) {
  Rng rng(s.g().seed);
  const GroupParams gp = build_group_generator(parse_bigint(order_text), rng);
  const EcdlpParams params{gp.curve, gp.generator, gp.q};
  Json runs = Json::array();
  std::ostringstream text;
  text << "curve y^2 = x^3 + 1 over F_" << to_string(gp.p) << ", base " << to_string(gp.generator) << " of order "
       << to_string(gp.q) << ", n = " << ecdlp_bits(gp.q) << "\n";
  bool all_ok = true;
  for (std::size_t t = 0; t < targets; ++t) {
    const BigInt secret = rand_below(gp.q, rng);
    const CurvePoint target = gp.curve.mul(secret, gp.generator);
    const EcdlpResult res = ecdlp_solve(params, target, rng);
    const bool ok = res.log == secret;
    all_ok = all_ok && ok;
    runs.push_back(Json{{"target", to_string(target)},
                        {"l", to_string(res.log)},
                        {"samples", res.samples},
                        {"queries", res.queries},
                        {"verified", ok}});
    text << "target " << to_string(target) << ": l = " << to_string(res.log) << " (samples " << res.samples
         << ", queries " << res.queries << (ok ? ")" : ", WRONG)") << "\n";
  }
  Json j;
  j["p"] = to_string(gp.p);
  j["order"] = to_string(gp.q);
  j["n"] = ecdlp_bits(gp.q);
  j["runs"] = std::move(runs);
  s.print(j, text.str());
  return all_ok ? kOk : kClaimMismatch;
}

}  // namespace

int exit_code_for(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::TooLarge:
    case ErrorKind::SearchFailed:
      return kResourceBound;
    case ErrorKind::OrderCheckFailed:
    case ErrorKind::EvaluationError:
      return kClaimMismatch;
    default:
      return kInvalidInput;
  }
}

bool VerifyReport::ok() const {
  if (outcomes.empty()) return false;
  for (const auto& o : outcomes)
    if (!o.matches()) return false;
  return true;
}

VerifyReport verify_instance(const SubsetSumInstance& raw, std::uint64_t seed, VerifyMode mode, ScanMode scan) {
  VerifyReport report;
  report.instance = normalize(raw);
  report.answer = subset_sum_dp(report.instance);
  if (mode != VerifyMode::Mld) report.outcomes.push_back(check_mdp(report.instance, report.answer, seed, scan));
  if (mode != VerifyMode::Mdp && report.instance.b != 0) {
    report.outcomes.push_back(check_mld(report.instance, report.answer, seed, scan));
  }
  return report;
}

std::string format_report(const VerifyReport& report) {
  std::ostringstream os;
  os << "instance: q = " << to_string(report.instance.q) << ", n = " << report.instance.n()
     << ", k = " << report.instance.k << ", subset sum = " << (report.answer.yes ? "YES" : "NO") << "\n";
  for (const auto& o : report.outcomes) {
    const bool mld = o.variant == "mld";
    const std::size_t n = o.n;
    const std::size_t k = o.k;
    os << o.variant << ": " << (o.yes ? "YES" : "NO") << " / " << (mld ? "dist" : "d") << " = " << o.oracle.distance
       << " = " << (o.oracle.distance == n - k ? "n-k" : o.oracle.distance == n - k + 1 ? "n-k+1" : "?")
       << " (n=" << n << ", k=" << k << ", p=" << to_string(o.p) << ")";
    os << (o.matches() ? " ok" : " MISMATCH") << "\n";
    if (!o.designed_distance_ok) os << "  designed distance violated\n";
    if (!o.received_outside_code) os << "  received word is a codeword\n";
    if (!o.support_sums_to_b) os << "  witness support does not sum to b\n";
  }
  if (report.outcomes.size() == 1 && report.instance.b == 0) os << "mld: skipped (b = 0)\n";
  return os.str();
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Elliptic-curve AG codes and subset-sum reductions", "ecag"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--seed", g.seed, "Seed for every randomized step");
  app.add_option("--in", g.in, "Input file");
  app.add_option("--out", g.out, "Output file (default: stdout)");
  app.add_flag("--json", g.json, "Machine-readable output");
  app.add_flag("--full", g.full, "Scan every support size instead of the two-size dichotomy");
  app.add_option("--bound", g.bound, "Use exhaustive enumeration up to p^k <= bound");

  std::function<int()> action;
  const Session session(g, out, err);

  std::string q_text;
  auto* gen = app.add_subcommand("gen-params", "Build p, y^2 = x^3 + 1 and a point of order q");
  gen->add_option("--q", q_text, "Prime q > 3")->required();
  gen->callback([&] { action = [&] { return cmd_gen_params(session, q_text); }; });

  app.add_subcommand("reduce-mdp", "Instance file -> code file (minimum distance reduction)")
      ->callback([&] { action = [&] { return cmd_reduce(session, false); }; });
  app.add_subcommand("reduce-mld", "Instance file -> code file with received word (decoding reduction)")
      ->callback([&] { action = [&] { return cmd_reduce(session, true); }; });
  app.add_subcommand("mindist", "Minimum distance of a code file")
      ->callback([&] { action = [&] { return cmd_mindist(session); }; });
  app.add_subcommand("coset-dist", "Distance from the received word to the code")
      ->callback([&] { action = [&] { return cmd_coset_dist(session); }; });
  app.add_subcommand("solve-subset-sum", "Decide a subset-sum instance by dynamic programming")
      ->callback([&] { action = [&] { return cmd_solve(session); }; });

  std::string mode_text = "both";
  auto* verify = app.add_subcommand("verify", "Run instance -> reduction -> oracle -> DP and compare");
  verify->add_option("--mode", mode_text, "mdp, mld or both")->check(CLI::IsMember({"mdp", "mld", "both"}));
  verify->callback([&] { action = [&] { return cmd_verify(session, mode_text); }; });

  std::string order_text = "1031";
  std::size_t targets = 1;
  auto* ecdlp = app.add_subcommand("ecdlp-demo", "Solve toy discrete logs with minimum-distance queries");
  ecdlp->add_option("--order", order_text, "Prime subgroup order");
  ecdlp->add_option("--targets", targets, "Number of random targets");
  ecdlp->callback([&] { action = [&] { return cmd_ecdlp(session, order_text, targets); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalidInput;
  }

  try {
    return action();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  }
}

}  // namespace ecag::cli
