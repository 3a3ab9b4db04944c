#include "ecag/reduction.hpp"

#include <algorithm>
#include <set>

namespace ecag {

namespace {

[[noreturn]] void reject(const std::string& why) { throw Error(ErrorKind::InvalidInstance, why); }

void check_reduction_shape(const SubsetSumInstance& inst) {
  if (inst.k < 2) {
    throw Error(ErrorKind::DegenerateDimension, "k = " + std::to_string(inst.k) + "; the reductions need k >= 2");
  }
}

struct Embedding {
  GroupParams params;
  std::vector<CurvePoint> points;
  Transcript transcript;
};

Embedding embed(const SubsetSumInstance& inst, Rng& rng) {
  Transcript transcript;
  transcript.seed = rng.seed();
  transcript.draws_before = rng.draws();
  GroupParams params = build_group_generator(inst.q, rng, &transcript);
  std::vector<CurvePoint> points;
  points.reserve(inst.n());
  for (const auto& ai : inst.a) points.push_back(params.curve.mul(ai, params.generator));
  return Embedding{std::move(params), std::move(points), std::move(transcript)};
}

Provenance base_provenance(const SubsetSumInstance& inst, const Embedding& e, std::string variant, std::string divisor) {
  Provenance prov;
  prov.variant = std::move(variant);
  prov.divisor = std::move(divisor);
  prov.q = inst.q;
  prov.curve_a = e.params.curve.a().value();
  prov.curve_b = e.params.curve.b().value();
  prov.generator = e.params.generator;
  prov.points = e.points;
  prov.seed = e.transcript.seed;
  return prov;
}

}  // namespace

SubsetSumInstance reduce_mod_q(SubsetSumInstance inst) {
  if (inst.q <= 3) reject("q = " + to_string(inst.q) + " must exceed 3");
  if (!is_probable_prime(inst.q)) reject("q = " + to_string(inst.q) + " is not prime");
  if (inst.k < 1 || inst.k >= inst.n()) {
    reject("need 1 <= k < n, got k = " + std::to_string(inst.k) + ", n = " + std::to_string(inst.n()));
  }
  inst.b = mod(inst.b, inst.q);
  for (auto& ai : inst.a) ai = mod(ai, inst.q);
  return inst;
}

SubsetSumInstance normalize(SubsetSumInstance inst) {
  inst = reduce_mod_q(std::move(inst));
  std::set<BigInt> seen;
  for (std::size_t i = 0; i < inst.n(); ++i) {
    const std::string where = "a[" + std::to_string(i) + "]";
    if (inst.a[i] == 0) reject(where + " = 0 (mod q) would place P_i at O");
    if (inst.a[i] == inst.b) reject(where + " = b (mod q) would place P_i at the pole Q");
    if (!seen.insert(inst.a[i]).second) reject(where + " = " + to_string(inst.a[i]) + " repeats an earlier value mod q");
  }
  return inst;
}

SubsetSumAnswer subset_sum_dp(const SubsetSumInstance& inst, std::uint64_t max_cells) {
  const std::size_t n = inst.n();
  const std::size_t k = inst.k;
  const BigInt cells = BigInt(static_cast<unsigned long>(n)) * static_cast<unsigned long>(k) * inst.q;
  if (cells > BigInt(static_cast<unsigned long>(max_cells))) {
    throw Error(ErrorKind::TooLarge, "subset-sum table needs " + to_string(cells) + " cells (bound " +
                                         std::to_string(max_cells) + ")");
  }
  if (inst.q < 1) throw Error(ErrorKind::InvalidInput, "q must be positive");
  const std::uint64_t q = inst.q.get_ui();
  const std::size_t width = (k + 1) * q;
  auto cell = [q](std::size_t count, std::uint64_t residue) { return count * q + residue; };

  std::vector<std::uint64_t> a(n);
  for (std::size_t i = 0; i < n; ++i) a[i] = mod(inst.a[i], inst.q).get_ui();
  const std::uint64_t target = mod(inst.b, inst.q).get_ui();

  // layer[i] = reachable (count, residue) using items [0, i)
  std::vector<std::vector<bool>> layer(n + 1, std::vector<bool>(width, false));
  layer[0][cell(0, 0)] = true;
  for (std::size_t i = 0; i < n; ++i) {
    layer[i + 1] = layer[i];
    for (std::size_t c = 0; c < k; ++c) {
      for (std::uint64_t r = 0; r < q; ++r) {
        if (layer[i][cell(c, r)]) layer[i + 1][cell(c + 1, (r + a[i]) % q)] = true;
      }
    }
  }

  SubsetSumAnswer answer;
  if (!layer[n][cell(k, target)]) return answer;
  answer.yes = true;
  std::vector<std::size_t> picked;
  std::size_t c = k;
  std::uint64_t r = target;
  for (std::size_t i = n; i-- > 0;) {
    if (layer[i][cell(c, r)]) continue;  // reachable without item i
    picked.push_back(i);
    r = (r + q - a[i]) % q;
    --c;
  }
  std::reverse(picked.begin(), picked.end());
  answer.witness = std::move(picked);
  return answer;
}

SubsetSumInstance lift_plain_subset_sum(const std::vector<BigInt>& a, const BigInt& b, std::size_t k, Rng& rng,
                                        bool admissible) {
  if (a.empty()) reject("empty value list");
  if (k < 1 || k >= a.size()) reject("need 1 <= k < n");
  BigInt total = b;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < 1) reject("a[" + std::to_string(i) + "] must be a positive integer");
    total += a[i];
  }
  if (b < 1) reject("b must be a positive integer");

  // Bertrand: (total, 2 total] holds a prime
  const BigInt low = std::max(total, BigInt(4));
  const std::uint64_t attempts = default_prime_attempts(low);
  for (std::uint64_t t = 0; t < attempts; ++t) {
    const BigInt candidate = low + 1 + rand_below(low, rng);
    if (miller_rabin(candidate, kDefaultMillerRabinRounds, rng)) {
      SubsetSumInstance inst{candidate, a, b, k};
      return admissible ? normalize(std::move(inst)) : reduce_mod_q(std::move(inst));
    }
  }
  throw Error(ErrorKind::SearchFailed, "no prime found above " + to_string(total));
}

std::uint64_t default_prime_attempts(const BigInt& q) {
  const std::uint64_t lg = bit_length(BigInt(3 * q - 1));  // ceil(log2 3q)
  return 64 * lg * lg;
}

BigInt find_prime_p(const BigInt& q, Rng& rng, std::uint64_t max_attempts, Transcript* transcript) {
  if (q <= 3 || !is_probable_prime(q)) {
    throw Error(ErrorKind::InvalidInput, "q = " + to_string(q) + " must be a prime above 3");
  }
  if (max_attempts == 0) max_attempts = default_prime_attempts(q);
  const BigInt base = crt2(q - 1, q, 2, 3);  // in [0, 3q)
  const BigInt step = 3 * q;
  for (std::uint64_t t = 0; t < max_attempts; ++t) {
    const BigInt x = rand_below(q, rng) + 1;
    const BigInt candidate = base + step * x;
    if (miller_rabin(candidate, kDefaultMillerRabinRounds, rng)) {
      if (transcript) {
        transcript->note("prime_attempts", std::to_string(t + 1));
        transcript->note("x", to_string(x));
        transcript->note("p", to_string(candidate));
      }
      return candidate;
    }
  }
  throw Error(ErrorKind::SearchFailed, "no prime p = " + to_string(base) + " + " + to_string(step) + " x after " +
                                           std::to_string(max_attempts) + " attempts");
}

GroupParams build_group_generator(const BigInt& q, Rng& rng, Transcript* transcript) {
  const BigInt p = find_prime_p(q, rng, 0, transcript);
  Curve curve(p, 0, 1);
  const BigInt cofactor = (p + 1) / q;
  for (std::uint64_t t = 0; t < kDefaultPointAttempts; ++t) {
    const CurvePoint sample = curve.random_point_supersingular(rng);
    CurvePoint g = curve.mul(cofactor, sample);
    if (g.is_infinity()) continue;
    if (!curve.mul(q, g).is_infinity()) {
      throw Error(ErrorKind::OrderCheckFailed, "q G != O for G = " + to_string(g) + " over F_" + to_string(p));
    }
    if (transcript) {
      transcript->note("P", to_string(sample));
      transcript->note("G", to_string(g));
    }
    return GroupParams{q, p, std::move(curve), std::move(g)};
  }
  throw Error(ErrorKind::SearchFailed, "no point of order q found over F_" + to_string(p));
}

ReductionOutput reduce_mdp(const SubsetSumInstance& raw, Rng& rng) {
  check_reduction_shape(raw);
  const SubsetSumInstance inst = normalize(raw);
  if (inst.b == 0) throw Error(ErrorKind::UseOnePointVariant, "b = 0 (mod q): use the one-point divisor reduction");

  Embedding e = embed(inst, rng);
  const Curve& curve = e.params.curve;
  const CurvePoint pole = curve.mul(inst.b, e.params.generator);
  FPrime fp = build_fprime(curve, pole, rng);
  e.transcript.note("Q", to_string(pole));
  e.transcript.note("Q'", to_string(fp.q_prime()));

  std::vector<BasisFunction> basis;
  for (const auto& mon : monomial_basis(static_cast<unsigned>(inst.k - 1))) basis.emplace_back(mon);
  basis.emplace_back(fp);

  Provenance prov = base_provenance(inst, e, "mdp", "Q + " + std::to_string(inst.k - 1) + "*O");
  prov.pole = pole;
  CodeInstance code{generator_matrix(basis, e.points), std::move(prov)};
  code.validate();
  e.transcript.draws_after = rng.draws();
  const std::size_t n = inst.n();
  return ReductionOutput{std::move(code), std::nullopt, Claim{n - inst.k, n - inst.k + 1}, std::move(e.params),
                         std::move(e.transcript)};
}

ReductionOutput reduce_mdp_one_point(const SubsetSumInstance& raw, Rng& rng) {
  check_reduction_shape(raw);
  if (raw.q > 0 && mod(raw.b, raw.q) != 0) {
    throw Error(ErrorKind::WrongVariant, "one-point reduction needs b = 0 (mod q)");
  }
  const SubsetSumInstance inst = normalize(raw);
  Embedding e = embed(inst, rng);

  std::vector<BasisFunction> basis;
  for (const auto& mon : monomial_basis(static_cast<unsigned>(inst.k))) basis.emplace_back(mon);

  Provenance prov = base_provenance(inst, e, "mdp-one-point", std::to_string(inst.k) + "*O");
  prov.pole = CurvePoint::infinity();
  CodeInstance code{generator_matrix(basis, e.points), std::move(prov)};
  code.validate();
  e.transcript.draws_after = rng.draws();
  const std::size_t n = inst.n();
  return ReductionOutput{std::move(code), std::nullopt, Claim{n - inst.k, n - inst.k + 1}, std::move(e.params),
                         std::move(e.transcript)};
}

ReductionOutput reduce_mld(const SubsetSumInstance& raw, Rng& rng) {
  check_reduction_shape(raw);
  const SubsetSumInstance inst = normalize(raw);
  if (inst.b == 0) throw Error(ErrorKind::UseOnePointVariant, "b = 0 (mod q): use the one-point divisor reduction");

  Embedding e = embed(inst, rng);
  const Curve& curve = e.params.curve;
  const CurvePoint pole = curve.mul(inst.b, e.params.generator);
  FPrime fp = build_fprime(curve, pole, rng);
  e.transcript.note("Q", to_string(pole));
  e.transcript.note("Q'", to_string(fp.q_prime()));

  std::vector<BasisFunction> basis;
  for (const auto& mon : monomial_basis(static_cast<unsigned>(inst.k - 1))) basis.emplace_back(mon);

  Vector received;
  received.reserve(inst.n());
  for (const auto& pt : e.points) received.push_back(fp.eval(pt));

  Provenance prov = base_provenance(inst, e, "mld", std::to_string(inst.k - 1) + "*O");
  prov.pole = pole;
  CodeInstance code{generator_matrix(basis, e.points), std::move(prov)};
  code.validate();
  e.transcript.draws_after = rng.draws();
  const std::size_t n = inst.n();
  return ReductionOutput{std::move(code), std::move(received), Claim{n - inst.k, n - inst.k + 1},
                         std::move(e.params), std::move(e.transcript)};
}

std::size_t ecdlp_bits(const BigInt& order) {
  if (order < 1) return 0;
  const std::size_t floor_log = bit_length(order) - 1;
  return floor_log - floor_log % 2;
}

EcdlpResult ecdlp_solve(const EcdlpParams& params, const CurvePoint& target, Rng& rng, std::uint64_t max_samples) {
  const Curve& curve = params.curve;
  const BigInt& ord = params.order;
  if (!is_probable_prime(ord)) throw Error(ErrorKind::InvalidInput, "base order " + to_string(ord) + " is not prime");
  if (params.base.is_infinity() || !curve.mul(ord, params.base).is_infinity()) {
    throw Error(ErrorKind::InvalidInput, "base point does not have order " + to_string(ord));
  }
  if (!curve.mul(ord, target).is_infinity()) {
    throw Error(ErrorKind::InvalidInput, "target is outside the subgroup generated by the base");
  }
  const std::size_t n = ecdlp_bits(ord);
  const std::size_t half = n / 2;
  if (half < 2) throw Error(ErrorKind::InvalidInput, "order " + to_string(ord) + " is too small (need n >= 4)");

  EcdlpResult result;
  if (target.is_infinity()) return result;  // log = 0

  std::vector<CurvePoint> points{params.base};
  for (std::size_t i = 1; i < n; ++i) points.push_back(curve.dbl(points.back()));
  const auto monomials = monomial_basis(static_cast<unsigned>(half - 1));

  while (result.samples < max_samples) {
    ++result.samples;
    const BigInt r = rand_below(ord - 1, rng) + 1;
    const CurvePoint pole = curve.mul(r, target);
    if (pole.is_infinity() || std::find(points.begin(), points.end(), pole) != points.end()) continue;

    // f' through a random subgroup point Q' != R
    CurvePoint q_prime = CurvePoint::infinity();
    while (q_prime.is_infinity() || q_prime == pole) q_prime = curve.mul(rand_below(ord - 1, rng) + 1, params.base);
    std::vector<BasisFunction> basis(monomials.begin(), monomials.end());
    basis.emplace_back(fprime_through(curve, pole, q_prime));

    CodeInstance code{generator_matrix(basis, points), {}};
    ++result.queries;
    if (!min_distance_support_oracle(code, half).exists_vanishing) continue;  // log R is not balanced

    BigInt candidate = 0;
    for (std::size_t i = 0; i < n; ++i) {
      CodeInstance punctured{code.gen.without_column(i), {}};
      ++result.queries;
      if (!min_distance_support_oracle(punctured, half).exists_vanishing) candidate += BigInt(1) << i;
    }
    BigInt r_inv;
    mpz_invert(r_inv.get_mpz_t(), r.get_mpz_t(), ord.get_mpz_t());
    const BigInt log = mod(candidate * r_inv, ord);
    if (curve.mul(log, params.base) == target) {
      result.log = log;
      return result;
    }
  }
  throw Error(ErrorKind::SearchFailed, "no verified logarithm after " + std::to_string(max_samples) + " samples");
}

}  // namespace ecag
