#include "sigmahull/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "sigmahull/eaqecc.hpp"
#include "sigmahull/error.hpp"
#include "sigmahull/hullsteer.hpp"
#include "sigmahull/oracle.hpp"
#include "sigmahull/random.hpp"
#include "sigmahull/semilinear.hpp"

namespace sigmahull::verify {
namespace {

using io::Json;
using gen::Rng;

struct Context {
  std::string suite;
  Options options;
  std::vector<std::uint32_t> fields;
  Report* report;
};

// One instance outcome: nullopt on pass, otherwise the certificate body.
using Outcome = std::optional<Json>;

FieldPtr pick_field(const Context& ctx, Rng& rng) {
  const auto i = std::uniform_int_distribution<std::size_t>(0, ctx.fields.size() - 1)(rng);
  return Field::of_order(ctx.fields[i]);
}

std::size_t pick(std::size_t lo, std::size_t hi, Rng& rng) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

Json set_json(const std::set<std::size_t>& s) {
  Json out = Json::array();
  for (auto v : s) out.push_back(v);
  return out;
}

Json forms_json(const RankForms& f) { return Json{{"via_parity", f.via_parity}, {"via_generator", f.via_generator}}; }

std::size_t oracle_min_distance(const LinearCode& code) {
  std::size_t best = code.n() + 1;
  for (const auto& w : oracle::enumerate_codewords(code)) {
    const std::size_t wt = hamming_weight(w);
    if (wt > 0) best = std::min(best, wt);
  }
  return best;
}

// Odd instances are built with a planted self-orthogonal part.
LinearCode battery_code(const FieldPtr& field, std::size_t n, std::size_t k, const SemilinearIsometry& sigma,
                        std::uint64_t index, Rng& rng) {
  if (index % 2 == 0 || k == 0) return gen::code(field, n, k, rng);
  LinearCode c = gen::code_with_hull(field, n, k, pick(1, k, rng), sigma, rng);
  return c.is_zero() ? gen::code(field, n, k, rng) : c;
}

Outcome cor32_instance(const Context& ctx, Rng& rng, std::uint64_t index) {
  const FieldPtr field = pick_field(ctx, rng);
  const std::size_t n = pick(1, ctx.options.max_n, rng);
  const SemilinearIsometry sigma = gen::sigma(field, n, rng);
  const LinearCode code = battery_code(field, n, pick(1, n, rng), sigma, index, rng);

  const RankForms forms = hull_forms(code, sigma);
  const std::size_t hull = oracle::sigma_hull_dim(code, sigma);
  const LinearCode dual = oracle::sigma_dual(code, sigma);
  const std::size_t dual_hull = oracle::sigma_hull_dim(dual, sigma);
  const HullResult hr = sigma_hull(code, sigma);
  const LinearCode basis = LinearCode::from_generator_allow_zero(hr.basis);
  const bool basis_ok = basis.k() == hull && oracle::subset(basis, code) && oracle::subset(basis, dual);

  if (forms.via_parity == hull && forms.via_generator == hull && dual_hull == hull && basis_ok) return std::nullopt;
  return Json{{"code", io::code_to_json(code)},
              {"sigma", io::sigma_to_json(sigma)},
              {"rank_forms", forms_json(forms)},
              {"oracle_hull", hull},
              {"oracle_dual_hull", dual_hull},
              {"basis_ok", basis_ok}};
}

// Pairs: independent codes, C2 = C1 + extra rows, or C1 a subcode of C2,
// with planted hull structure in the last two shapes.
std::pair<LinearCode, LinearCode> battery_pair(const FieldPtr& field, std::size_t n, const SemilinearIsometry& sigma,
                                               std::uint64_t index, Rng& rng) {
  switch (index % 3) {
    case 1: {
      const LinearCode c1 = battery_code(field, n, pick(0, n, rng), sigma, 1, rng);
      return {c1, gen::code_sum(c1, gen::code_in_range(field, n, 0, n - c1.k(), rng))};
    }
    case 2: {
      const LinearCode c2 = battery_code(field, n, pick(0, n, rng), sigma, 1, rng);
      return {gen::code_intersection(c2, gen::code_in_range(field, n, 0, n, rng)), c2};
    }
    default: return {gen::code_in_range(field, n, 0, n, rng), gen::code_in_range(field, n, 0, n, rng)};
  }
}

Outcome lemma31_instance(const Context& ctx, Rng& rng, std::uint64_t index) {
  const FieldPtr field = pick_field(ctx, rng);
  const std::size_t n = pick(1, ctx.options.max_n, rng);
  const SemilinearIsometry sigma = gen::sigma(field, n, rng);
  const auto [c1, c2] = battery_pair(field, n, sigma, index, rng);

  const RankForms part1 = relative_hull_forms(c1, c2, sigma);
  const RankForms part2 = bidual_relative_forms(c1, c2, sigma);
  const std::size_t o1 = oracle::relative_dim(c1, c2, sigma);
  const std::size_t o2 = oracle::bidual_relative_dim(c1, c2, sigma);
  if (part1.via_parity == o1 && part1.via_generator == o1 && part2.via_parity == o2 && part2.via_generator == o2)
    return std::nullopt;
  return Json{{"c1", io::code_to_json(c1)}, {"c2", io::code_to_json(c2)}, {"sigma", io::sigma_to_json(sigma)},
              {"part1", forms_json(part1)}, {"oracle_part1", o1},
              {"part2", forms_json(part2)}, {"oracle_part2", o2}};
}

// Square MP instances with k in {2,3} and constituent length n <= min(max_n, 4).
// Every third instance is repaired towards dual-containing and every third
// towards self-orthogonal so that both truth values of each test occur.
// nullopt asks the caller to draw again.
std::optional<gen::MpInstance> mp_battery_instance(const Context& ctx, Rng& rng, std::uint64_t index) {
  const FieldPtr field = pick_field(ctx, rng);
  const std::size_t k = pick(2, 3, rng);
  const std::size_t n = pick(1, std::min<std::size_t>(ctx.options.max_n, 4), rng);
  auto inst = gen::mp_instance(field, k, n, rng);
  if (!inst) return std::nullopt;
  if (index % 3 == 0) return inst;
  inst = index % 3 == 1 ? gen::make_dual_containing(std::move(*inst)) : gen::make_self_orthogonal(std::move(*inst));
  // Repairs that collapse to the zero or full space are redrawn.
  const std::size_t dim = inst->spec.dimension();
  if (dim == 0 || dim == inst->spec.length()) return std::nullopt;
  return inst;
}

Json mp_json(const gen::MpInstance& inst) { return io::mp_to_json(inst.spec, inst.sigma); }

Outcome thm31_instance(const gen::MpInstance& inst) {
  const std::size_t formula = mp_hull_dim(inst.spec, inst.sigma);
  const std::size_t truth = oracle::sigma_hull_dim(mp_code(inst.spec), inst.sigma.assembled());
  if (formula == truth) return std::nullopt;
  Json terms = Json::array();
  for (auto t : mp_hull_terms(inst.spec, inst.sigma)) terms.push_back(t);
  return Json{{"mp", mp_json(inst)}, {"block_terms", terms}, {"mp_hull_dim", formula}, {"oracle_hull", truth}};
}

struct Thm32Counts {
  std::uint64_t dc_true = 0, dc_false = 0, so_true = 0, so_false = 0;
};

Outcome thm32_instance(const gen::MpInstance& inst, Thm32Counts& counts) {
  const bool dc = is_sigma_dual_containing(inst.spec, inst.sigma);
  const bool so = is_sigma_self_orthogonal(inst.spec, inst.sigma);
  const LinearCode code = mp_code(inst.spec);
  const LinearCode dual = oracle::sigma_dual(code, inst.sigma.assembled());
  const bool odc = oracle::subset(dual, code);
  const bool oso = oracle::subset(code, dual);
  ++(odc ? counts.dc_true : counts.dc_false);
  ++(oso ? counts.so_true : counts.so_false);
  if (dc == odc && so == oso) return std::nullopt;
  return Json{{"mp", mp_json(inst)},
              {"dual_containing", dc},
              {"oracle_dual_containing", odc},
              {"self_orthogonal", so},
              {"oracle_self_orthogonal", oso}};
}

Outcome mpdual_instance(const gen::MpInstance& inst) {
  const LinearCode via_blocks = mp_code(mp_sigma_dual(inst.spec, inst.sigma));
  const LinearCode truth = oracle::sigma_dual(mp_code(inst.spec), inst.sigma.assembled());
  if (oracle::equal(via_blocks, truth)) return std::nullopt;
  return Json{{"mp", mp_json(inst)},
              {"block_dual_generator", io::matrix_to_json(via_blocks.generator())},
              {"oracle_dual_generator", io::matrix_to_json(truth.generator())}};
}

struct Thm45Counts {
  std::uint64_t self_instances = 0, self_gaps = 0;
  std::map<std::uint32_t, std::uint64_t> self_gaps_by_q;
};

Outcome thm45_instance(const Context& ctx, Rng& rng, std::uint64_t index, Thm45Counts& counts) {
  FieldPtr field = pick_field(ctx, rng);
  std::size_t n = pick(1, std::min<std::size_t>(ctx.options.max_n, 3), rng);
  while (n > 1 && !exhaustive_by_default(field->q(), n)) --n;
  const SemilinearIsometry sigma = gen::sigma(field, n, rng);
  const auto [c1, c2] = battery_pair(field, n, sigma, index, rng);

  const std::size_t low = c1.k() > c2.k() ? c1.k() - c2.k() : 0;
  const std::size_t high = relative_hull_dim(c1, c2, sigma);
  const auto reach = reachable_relative_dims(c1, c2, sigma);
  std::vector<std::size_t> gaps;
  for (std::size_t h = low; h <= high; ++h)
    if (!reach.contains(h)) gaps.push_back(h);

  // One certified witness per instance, checked against the oracle.
  bool witness_ok = true;
  std::optional<std::size_t> target;
  if (gaps.empty() && field->q() > 2) {
    target = pick(low, high, rng);
    const SteerResult hit = steer_relative_hull(c1, c2, sigma, *target, SearchOptions{10000, ctx.options.seed, SearchMode::Auto});
    witness_ok = oracle::relative_dim(c1, hit.code, sigma) == *target &&
                 codes_equal(hit.code, apply_monomial(c2, hit.witness)) && hit.code.k() == c2.k();
  }

  if (!c1.is_zero()) {
    ++counts.self_instances;
    const std::size_t top = sigma_hull_dim(c1, sigma);
    const auto self_reach = reachable_self_hull_dims(c1, sigma);
    for (std::size_t h = 0; h <= top; ++h)
      if (!self_reach.contains(h)) {
        ++counts.self_gaps;
        ++counts.self_gaps_by_q[field->q()];
        break;
      }
  }

  if (gaps.empty() && witness_ok) return std::nullopt;
  Json out{{"c1", io::code_to_json(c1)},
           {"c2", io::code_to_json(c2)},
           {"sigma", io::sigma_to_json(sigma)},
           {"range", Json::array({low, high})},
           {"reachable", set_json(reach)},
           {"missing", gaps}};
  if (target) out["steer_target"] = *target;
  out["witness_ok"] = witness_ok;
  return out;
}

struct EaqeccCounts {
  std::uint64_t hull_records = 0, mp_checked = 0, mp_nsc = 0, mp_non_nsc_violations = 0, mp_skipped = 0;
};

Outcome eaqecc_hull_instance(const Context& ctx, Rng& rng, std::uint64_t index, EaqeccCounts& counts) {
  const FieldPtr field = pick_field(ctx, rng);
  const std::size_t n = pick(1, ctx.options.max_n, rng);
  const SemilinearIsometry sigma = gen::sigma(field, n, rng);
  const LinearCode code = battery_code(field, n, pick(1, n, rng), sigma, index / 2, rng);
  const std::size_t k = code.k();

  const auto [r1, r2] = eaqecc_from_hull(code, sigma);
  const EaqeccParams pair = eaqecc_from_pair(code, sigma_image_code(code, sigma));
  const std::size_t h = oracle::sigma_hull_dim(code, sigma);
  counts.hull_records += 2;
  const LinearCode dual = oracle::sigma_dual(code, sigma);
  const bool dual_distance_ok =
      dual.is_zero() ? r2.d.flag == DistanceFlag::Unavailable
                     : r2.d.flag == DistanceFlag::Exact && r2.d.value == oracle_min_distance(dual);
  const bool ok = h <= k && k + h <= n && pair.c == n - k - h && r1.c == n - k - h && r1.k == k - h &&
                  r2.k == n - k - h && r2.c == k - h && r1.k + r1.c == n - 2 * h && r2.k + r2.c == n - 2 * h &&
                  r1.d.value == oracle_min_distance(code) && dual_distance_ok;
  if (ok) return std::nullopt;
  return Json{{"code", io::code_to_json(code)}, {"sigma", io::sigma_to_json(sigma)}, {"oracle_hull", h},
              {"record1", io::eaqecc_to_json(r1)}, {"record2", io::eaqecc_to_json(r2)},
              {"pair", io::eaqecc_to_json(pair)}};
}

// Exact distance of C(A) against min_i D_i(A) d_i. Only non-singular-by-columns
// A are held to the bound; other matrices are tallied.
Outcome eaqecc_mp_instance(const Context& ctx, Rng& rng, EaqeccCounts& counts) {
  const FieldPtr field = pick_field(ctx, rng);
  const std::size_t k = pick(2, 3, rng);
  const std::size_t t = pick(k, k + 1, rng);
  const std::size_t n = pick(1, std::min<std::size_t>(ctx.options.max_n, 4), rng);
  const bool want_nsc = rng() % 2 == 0;
  Matrix a = gen::matrix(field, k, t, rng);
  for (int tries = 0; tries < 2000; ++tries) {
    a = gen::matrix(field, k, t, rng);
    if (rank(a) == k && (!want_nsc || is_nonsingular_by_columns(a))) break;
  }
  if (rank(a) != k) {
    ++counts.mp_skipped;
    return std::nullopt;
  }
  std::vector<LinearCode> codes;
  std::size_t dim = 0;
  for (std::size_t i = 0; i < k; ++i) {
    codes.push_back(gen::code_in_range(field, n, 1, n, rng));
    dim += codes.back().k();
  }
  if (saturating_pow(field->q(), dim) > oracle::default_budget()) {
    ++counts.mp_skipped;
    return std::nullopt;
  }
  const MatrixProductSpec spec(a, codes);
  const auto row_dists = row_span_distances(a);
  std::size_t bound = SIZE_MAX;
  for (std::size_t i = 0; i < k; ++i) bound = std::min(bound, row_dists[i] * oracle_min_distance(codes[i]));
  const std::size_t exact = oracle_min_distance(mp_code(spec));
  const bool nsc = is_nonsingular_by_columns(a);
  ++counts.mp_checked;
  if (nsc) ++counts.mp_nsc;
  if (exact >= bound) return std::nullopt;
  if (!nsc) {
    ++counts.mp_non_nsc_violations;
    return std::nullopt;
  }
  Json d = Json::array();
  for (auto v : row_dists) d.push_back(v);
  return Json{{"mp", io::mp_to_json(spec)}, {"row_span_distances", d}, {"bound", bound}, {"exact_distance", exact}};
}

Matrix entrywise_pow(const Matrix& g, std::uint64_t exponent) {
  Matrix out(g.field(), g.rows(), g.cols());
  for (std::size_t r = 0; r < g.rows(); ++r)
    for (std::size_t c = 0; c < g.cols(); ++c) out(r, c) = g.F().pow(g(r, c), exponent);
  return out;
}

struct ReductionCounts {
  std::uint64_t hermitian = 0, galois = 0, ell_mismatch = 0;
};

Outcome reduction_instance(const Context& ctx, Rng& rng, ReductionCounts& counts) {
  const FieldPtr field = pick_field(ctx, rng);
  const std::size_t n = pick(1, ctx.options.max_n, rng);
  const LinearCode code = gen::code(field, n, pick(1, n, rng), rng);
  const std::uint32_t e = field->e();
  const std::uint64_t p = field->p();
  Json out{{"code", io::code_to_json(code)}};
  bool ok = true;

  const LinearCode euclid = LinearCode::from_generator_allow_zero(kernel_basis(code.generator()));
  const bool euclid_ok = codes_equal(sigma_dual(code, SemilinearIsometry::euclidean(field, n)), euclid);
  out["euclidean_ok"] = euclid_ok;
  ok = ok && euclid_ok;

  if (e % 2 == 0) {
    ++counts.hermitian;
    const std::uint64_t root = saturating_pow(p, e / 2);
    const LinearCode herm = LinearCode::from_generator_allow_zero(kernel_basis(entrywise_pow(code.generator(), root)));
    const bool herm_ok = codes_equal(sigma_dual(code, SemilinearIsometry::galois(field, n, e / 2)), herm);
    out["hermitian_ok"] = herm_ok;
    ok = ok && herm_ok;
  }

  // s = e - ell: the product is sum a_i b_i^{p^{e-ell}}.
  const auto ell = static_cast<std::uint32_t>(pick(0, e - 1, rng));
  ++counts.galois;
  const LinearCode direct = LinearCode::from_generator_allow_zero(
      kernel_basis(entrywise_pow(code.generator(), saturating_pow(p, e - ell))));
  const LinearCode via_sigma = sigma_dual(code, SemilinearIsometry::galois(field, n, e - ell));
  const bool galois_ok = codes_equal(via_sigma, direct);
  out["ell"] = ell;
  out["galois_ok"] = galois_ok;
  ok = ok && galois_ok;
  const LinearCode ell_dual = LinearCode::from_generator_allow_zero(
      kernel_basis(entrywise_pow(code.generator(), saturating_pow(p, ell))));
  if (!codes_equal(via_sigma, ell_dual)) ++counts.ell_mismatch;

  if (ok) return std::nullopt;
  return out;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

void record(Context& ctx, std::uint64_t index, std::uint64_t seed, const std::function<Outcome()>& body) {
  Report& r = *ctx.report;
  ++r.trials;
  Outcome outcome;
  try {
    outcome = body();
  } catch (const Error& err) {
    if (err.code() == ErrorCode::TooLarge) {
      ++r.skipped;
      return;
    }
    outcome = Json{{"error", err.what()}};
  }
  if (!outcome) {
    ++r.passed;
    return;
  }
  Json cert{{"suite", ctx.suite}, {"instance", index}, {"instance_seed", seed}};
  for (auto& [key, value] : outcome->items()) cert[key] = value;
  r.failures.push_back(std::move(cert));
}

// MP suites draw until an instance passes the rho-monomial filter.
template <typename Check>
void run_mp_suite(Context& ctx, Check check) {
  for (std::uint64_t i = 0; i < ctx.options.trials; ++i) {
    const std::uint64_t seed = instance_seed(ctx.options.seed, "mp", i);
    Rng rng(seed);
    std::optional<gen::MpInstance> inst;
    for (int attempt = 0; attempt < 64 && !inst; ++attempt) inst = mp_battery_instance(ctx, rng, i);
    if (!inst) {
      ctx.report->notes.push_back("instance " + std::to_string(i) + ": no rho-monomial pair found");
      continue;
    }
    record(ctx, i, seed, [&] { return check(*inst); });
  }
}

template <typename Body>
void run_plain(Context& ctx, Body body) {
  for (std::uint64_t i = 0; i < ctx.options.trials; ++i) {
    const std::uint64_t seed = instance_seed(ctx.options.seed, ctx.suite, i);
    Rng rng(seed);
    record(ctx, i, seed, [&] { return body(rng, i); });
  }
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"lemma31", "cor32", "thm31", "thm32", "thm45", "mpdual", "eaqecc", "reductions"};
  return names;
}

std::vector<std::uint32_t> default_fields(const std::string& suite) {
  if (suite == "thm31" || suite == "thm32" || suite == "mpdual") return {3, 4, 5};
  if (suite == "thm45") return {3, 4};
  if (suite == "reductions") return {3, 4, 5, 7, 8, 9, 16, 25, 27};
  return {3, 4, 5, 7, 8, 9};
}

std::uint64_t instance_seed(std::uint64_t seed, const std::string& suite, std::uint64_t index) {
  return splitmix(splitmix(seed ^ fnv1a(suite)) + index);
}

Report run(const std::string& suite, const Options& options) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end())
    fail(ErrorCode::InvalidArgument, "unknown suite \"" + suite + "\"");
  if (options.max_n == 0) fail(ErrorCode::InvalidArgument, "--max-n must be positive");

  Report report;
  report.suite = suite;
  report.seed = options.seed;
  Context ctx{suite, options, options.fields.empty() ? default_fields(suite) : options.fields, &report};
  for (auto q : ctx.fields) Field::of_order(q);

  if (suite == "cor32") {
    run_plain(ctx, [&](Rng& rng, std::uint64_t i) { return cor32_instance(ctx, rng, i); });
  } else if (suite == "lemma31") {
    run_plain(ctx, [&](Rng& rng, std::uint64_t i) { return lemma31_instance(ctx, rng, i); });
  } else if (suite == "thm31") {
    run_mp_suite(ctx, thm31_instance);
  } else if (suite == "thm32") {
    Thm32Counts counts;
    run_mp_suite(ctx, [&](const gen::MpInstance& inst) { return thm32_instance(inst, counts); });
    report.counters = {{"oracle_dc_true", counts.dc_true},
                       {"oracle_dc_false", counts.dc_false},
                       {"oracle_so_true", counts.so_true},
                       {"oracle_so_false", counts.so_false}};
    report.notes.push_back("oracle dual-containing: " + std::to_string(counts.dc_true) + " true, " +
                           std::to_string(counts.dc_false) + " false");
    report.notes.push_back("oracle self-orthogonal: " + std::to_string(counts.so_true) + " true, " +
                           std::to_string(counts.so_false) + " false");
  } else if (suite == "mpdual") {
    run_mp_suite(ctx, mpdual_instance);
  } else if (suite == "thm45") {
    Thm45Counts counts;
    run_plain(ctx, [&](Rng& rng, std::uint64_t i) { return thm45_instance(ctx, rng, i, counts); });
    report.counters = {{"self_instances", counts.self_instances}, {"self_gaps", counts.self_gaps}};
    std::string by_q;
    for (auto [q, c] : counts.self_gaps_by_q) by_q += " q=" + std::to_string(q) + ":" + std::to_string(c);
    report.notes.push_back("self-hull range gaps (informational): " + std::to_string(counts.self_gaps) + " of " +
                           std::to_string(counts.self_instances) + " instances" + by_q);
  } else if (suite == "eaqecc") {
    EaqeccCounts counts;
    run_plain(ctx, [&](Rng& rng, std::uint64_t i) {
      return i % 2 == 0 ? eaqecc_hull_instance(ctx, rng, i, counts) : eaqecc_mp_instance(ctx, rng, counts);
    });
    report.counters = {{"hull_records", counts.hull_records},
                       {"mp_checked", counts.mp_checked},
                       {"mp_nsc", counts.mp_nsc},
                       {"mp_skipped", counts.mp_skipped},
                       {"mp_non_nsc_violations", counts.mp_non_nsc_violations}};
    report.notes.push_back("hull-derived records checked: " + std::to_string(counts.hull_records));
    report.notes.push_back("MP distance bound checks: " + std::to_string(counts.mp_checked) + " (" +
                           std::to_string(counts.mp_nsc) + " non-singular by columns, " +
                           std::to_string(counts.mp_skipped) + " skipped as too large)");
    report.notes.push_back("bound violations for matrices that are not non-singular by columns: " +
                           std::to_string(counts.mp_non_nsc_violations));
  } else if (suite == "reductions") {
    ReductionCounts counts;
    run_plain(ctx, [&](Rng& rng, std::uint64_t) { return reduction_instance(ctx, rng, counts); });
    report.counters = {{"euclidean", report.trials},
                       {"hermitian", counts.hermitian},
                       {"galois", counts.galois},
                       {"ell_mismatch", counts.ell_mismatch}};
    report.notes.push_back("hermitian comparisons: " + std::to_string(counts.hermitian) +
                           ", galois comparisons: " + std::to_string(counts.galois));
    report.notes.push_back("s = e - ell duals differing from the sum a_i b_i^{p^ell} dual: " +
                           std::to_string(counts.ell_mismatch));
  }
  return report;
}

std::string Report::to_text() const {
  std::ostringstream out;
  out << "suite: " << suite << "\n";
  out << "seed: " << seed << "\n";
  out << passed << "/" << trials << " pass\n";
  if (skipped > 0) out << "skipped: " << skipped << " (enumeration budget)\n";
  for (const auto& n : notes) out << "note: " << n << "\n";
  if (!failures.empty()) out << "counterexamples: " << failures.size() << "\n";
  return out.str();
}

Json Report::to_json() const {
  Json j{{"suite", suite}, {"seed", seed}, {"trials", trials}, {"passed", passed}, {"skipped", skipped}};
  j["notes"] = notes;
  j["counters"] = counters;
  j["counterexamples"] = failures;
  return j;
}

}  // namespace sigmahull::verify
