#pragma once

// Verification suites. Each suite runs its checks (in
// parallel when asked), assembles results in input order, and returns a
// report whose content is independent of the thread count. The only
// run-dependent field is elapsed_ms.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <exception>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <unordered_set>
#include <vector>

#include <nlohmann/json.hpp>

#include "skewchain/gl_action.hpp"
#include "skewchain/ideal.hpp"
#include "skewchain/poly_io.hpp"
#include "skewchain/ring.hpp"

namespace skewchain::verify {

using nlohmann::json;

struct Witness {
  std::string element;  // human-readable label
  json polynomial;      // exchange-format polynomial, or null
  std::string verdict;
  bool certified = true;
  json detail;  // certificate, counterexample data, or null

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct Report {
  std::string suite;
  json params = json::object();
  bool passed = false;
  std::vector<Witness> witnesses;
  json dims = json::object();
  double elapsed_ms = 0;
  std::vector<Report> children;  // only for the aggregate suite

  friend bool operator==(const Report&, const Report&) = default;
};

inline json to_json(const Witness& w) {
  return json{{"element", w.element}, {"polynomial", w.polynomial}, {"verdict", w.verdict},
              {"certified", w.certified}, {"detail", w.detail}};
}

inline json to_json(const Report& r) {
  json witnesses = json::array();
  for (const auto& w : r.witnesses) witnesses.push_back(to_json(w));
  json out{{"suite", r.suite},
           {"params", r.params},
           {"verdict", r.passed ? "pass" : "fail"},
           {"witnesses", witnesses},
           {"dims", r.dims},
           {"elapsed_ms", r.elapsed_ms}};
  if (!r.children.empty()) {
    json children = json::array();
    for (const auto& c : r.children) children.push_back(to_json(c));
    out["suites"] = children;
  }
  return out;
}

inline Report report_from_json(const json& j) {
  Report r;
  r.suite = j.at("suite").get<std::string>();
  r.params = j.at("params");
  const auto verdict = j.at("verdict").get<std::string>();
  if (verdict != "pass" && verdict != "fail") throw std::invalid_argument("verdict must be pass or fail");
  r.passed = verdict == "pass";
  for (const auto& w : j.at("witnesses")) {
    r.witnesses.push_back({w.at("element").get<std::string>(), w.at("polynomial"), w.at("verdict").get<std::string>(),
                           w.at("certified").get<bool>(), w.at("detail")});
  }
  r.dims = j.at("dims");
  r.elapsed_ms = j.at("elapsed_ms").get<double>();
  if (j.contains("suites")) {
    for (const auto& c : j.at("suites")) r.children.push_back(report_from_json(c));
  }
  return r;
}

/// Removes every elapsed_ms key, recursively. Two runs of the same command
/// must agree on what remains.
inline json strip_timing(json j) {
  if (j.is_object()) {
    j.erase("elapsed_ms");
    for (auto& [key, value] : j.items()) value = strip_timing(value);
  } else if (j.is_array()) {
    for (auto& value : j) value = strip_timing(value);
  }
  return j;
}

struct Context {
  ideal::Engine& engine;
  int jobs = 1;
  std::uint64_t seed = 20240601;
  std::size_t sample_threshold = 5000;
};

/// Runs fn(i) for i in [0, count) on up to `jobs` threads. The first
/// exception by index is rethrown after all workers stop.
template <class Fn>
void parallel_for(std::size_t count, int jobs, Fn&& fn) {
  const auto workers = static_cast<std::size_t>(std::max(1, jobs));
  std::vector<std::exception_ptr> errors(count);
  if (workers == 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) {
      try {
        fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < std::min(workers, count); ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < count; i = next++) {
          try {
            fn(i);
          } catch (...) {
            errors[i] = std::current_exception();
          }
        }
      });
    }
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

namespace detail {

class Stopwatch {
 public:
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline json membership_detail(const ideal::MembershipResult& r) {
  json comps = json::array();
  for (const auto& c : r.components) {
    comps.push_back({{"degree", c.degree.to_string()},
                     {"member", c.member},
                     {"certified", c.certified},
                     {"dim_R", c.dim_R},
                     {"dim_I", c.dim_I}});
  }
  return json{{"components", comps}};
}

inline Witness membership_witness(const std::string& label, const EdgePolynomial& f, const ideal::MembershipResult& r,
                                  const std::string& ideal_name) {
  return {label + (r.member ? " in " : " not in ") + ideal_name, io::to_json(f),
          r.member ? "member" : "not member", r.certified, membership_detail(r)};
}

}  // namespace detail

// ---------------------------------------------------------------------------

/// w_{n+1} is not in I_n (rank oracle and cycle-sum replay), and it is in
/// I_{n+1}, so the inclusion I_n in I_{n+1} is strict in degree (2^{n+1}).
inline Report verify_dkk(Context& ctx, int n, std::optional<int> vertices = std::nullopt) {
  detail::Stopwatch clock;
  const int N = vertices.value_or(std::max(4, n + 1));
  if (N < n + 1) throw std::invalid_argument("verify dkk needs N >= n+1");
  const auto spec = ideal::IdealSpec::make(n, N);
  const auto next = ideal::IdealSpec::make(n + 1, std::max(N, 4));
  const EdgePolynomial w(N, standard_cycle(n + 1));
  const auto d = Multidegree::uniform(n + 1, 2);

  Report r;
  r.suite = "dkk";
  r.params = {{"n", n}, {"N", N}, {"degree", d.to_string()}};

  const auto in_n = ctx.engine.member(w, spec);
  const auto in_next = ctx.engine.member(w, next);
  const auto replay = ideal::proof_replay_dkk(n);
  const auto basis_n = ctx.engine.graded_basis(spec, d);
  const auto basis_next = ctx.engine.graded_basis(next, d);

  const std::string wname = "w" + std::to_string(n + 1);
  r.witnesses.push_back(detail::membership_witness(wname, w, in_n, "I" + std::to_string(n)));
  r.witnesses.push_back(detail::membership_witness(wname, w, in_next, "I" + std::to_string(n + 1)));
  Witness replay_witness{"cycle-sum functional on spanning rows of (I" + std::to_string(n) + ")_d",
                         nullptr,
                         replay.passed() ? "vanishes" : "nonzero",
                         true,
                         {{"rows_checked", replay.rows_checked},
                          {"rows_with_functional_1", replay.rows_nonzero},
                          {"functional_of_" + wname, replay.functional_of_cycle ? 1 : 0}}};
  if (replay.offending_row) {
    replay_witness.polynomial = io::to_json(*replay.offending_row);
    replay_witness.detail["offending_product"] = *replay.offending_label;
  }
  r.witnesses.push_back(std::move(replay_witness));

  const auto gap = static_cast<long long>(basis_next->rank()) - static_cast<long long>(basis_n->rank());
  r.dims = {{"dim_R", basis_n->dim_R()},
            {"dim_I_n", basis_n->rank()},
            {"dim_I_n_plus_1", basis_next->rank()},
            {"dim_quotient", basis_n->dim_R() - basis_n->rank()},
            {"dimension_gap", gap},
            {"replay_rows", replay.rows_checked}};
  r.passed = !in_n.member && in_n.certified && in_next.member && replay.passed() && gap >= 1;
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

/// g(h) lies in I_n for every generator h of I_n on 1..N and every
/// transvection and transposition g on 1..N.
inline Report verify_stability(Context& ctx, int n, std::optional<int> vertices = std::nullopt) {
  detail::Stopwatch clock;
  const int N = vertices.value_or(std::max(4, n + 2));
  if (N < n + 1) throw std::invalid_argument("verify stability needs N >= n+1");
  const auto spec = ideal::IdealSpec::make(n, N);
  const auto gens = ideal::generators(spec);
  const auto group = gl::all_group_generators(N);

  struct Outcome {
    bool zero = false;
    ideal::MembershipResult result;
    EdgePolynomial image;
  };
  std::vector<Outcome> outcomes(gens.size() * group.size());
  parallel_for(outcomes.size(), ctx.jobs, [&](std::size_t k) {
    const auto& h = gens[k / group.size()];
    const auto& g = group[k % group.size()];
    auto image = gl::apply_generator(g, h.poly);
    outcomes[k].zero = image.is_zero();
    outcomes[k].result = ctx.engine.member(image, spec);
    outcomes[k].image = std::move(image);
  });

  Report r;
  r.suite = "stability";
  r.params = {{"n", n}, {"N", N}};
  std::size_t failures = 0, uncertified = 0, zero_images = 0, components = 0;
  std::set<Multidegree> shapes;
  for (std::size_t k = 0; k < outcomes.size(); ++k) {
    const auto& o = outcomes[k];
    zero_images += o.zero ? 1 : 0;
    components += o.result.components.size();
    for (const auto& c : o.result.components) shapes.insert(c.canonical_degree);
    if (!o.result.certified) ++uncertified;
    if (!o.result.member || !o.result.certified) {
      ++failures;
      const auto& h = gens[k / group.size()];
      const auto& g = group[k % group.size()];
      auto w = detail::membership_witness(gl::to_string(g) + " applied to " + h.label(), o.image, o.result,
                                          "I" + std::to_string(n));
      r.witnesses.push_back(std::move(w));
    }
  }
  r.dims = {{"ideal_generators", gens.size()},
            {"group_generators", group.size()},
            {"images_checked", outcomes.size()},
            {"zero_images", zero_images},
            {"components_checked", components},
            {"distinct_component_shapes", shapes.size()},
            {"failures", failures},
            {"uncertified", uncertified}};
  r.passed = failures == 0;
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

/// w_{n+1} * x_{n+2,n+3} lies in I_n. Alongside the rank verdict an explicit
/// combination of spanning products is solved for and re-multiplied.
inline Report verify_tail_containment(Context& ctx, int n, std::optional<int> vertices = std::nullopt) {
  detail::Stopwatch clock;
  const int N = vertices.value_or(n + 3);
  if (N < n + 3) throw std::invalid_argument("verify tail needs N >= n+3");
  const auto spec = ideal::IdealSpec::make(n, N);
  const EdgePolynomial f(N, *mono_mul(standard_cycle(n + 1), EdgeMonomial{Edge(n + 2, n + 3)}));
  const auto verdict = ctx.engine.member(f, spec);

  Report r;
  r.suite = "tail";
  r.params = {{"n", n}, {"N", N}};
  auto w = detail::membership_witness("w" + std::to_string(n + 1) + "*x" + std::to_string(n + 2) + "," +
                                          std::to_string(n + 3),
                                      f, verdict, "I" + std::to_string(n));
  bool certificate_ok = true;
  try {
    auto cert = ideal::explain_membership(f, spec, ctx.engine.budget());
    if (cert) {
      certificate_ok = cert->evaluate(N) == f;
      json terms = json::array();
      for (const auto& [g, cof] : cert->terms) terms.push_back(cof.to_string() + " * " + g.label());
      w.detail["certificate"] = {{"products", cert->terms.size()}, {"sum_matches", certificate_ok}, {"terms", terms}};
    } else {
      certificate_ok = !verdict.member;
      w.detail["certificate"] = nullptr;
    }
  } catch (const ideal::BudgetExceeded& e) {
    w.detail["certificate"] = {{"skipped", e.what()}};
  }
  r.witnesses.push_back(std::move(w));
  r.dims = {{"degree", verdict.components.empty() ? "" : verdict.components.front().degree.to_string()},
            {"dim_R", verdict.components.empty() ? 0 : verdict.components.front().dim_R},
            {"dim_I", verdict.components.empty() ? 0 : verdict.components.front().dim_I}};
  r.passed = verdict.member && verdict.certified && certificate_ok;
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

namespace detail {

/// k distinct values from [0, total) (Floyd's algorithm), sorted.
inline std::vector<std::uint64_t> sample_indices(std::uint64_t total, std::uint64_t k, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::unordered_set<std::uint64_t> chosen;
  for (std::uint64_t j = total - k; j < total; ++j) {
    const std::uint64_t t = rng() % (j + 1);
    if (!chosen.insert(t).second) chosen.insert(j);
  }
  std::vector<std::uint64_t> out(chosen.begin(), chosen.end());
  std::sort(out.begin(), out.end());
  return out;
}

/// Index -> (i, j) with i <= j over a G x G upper triangle, row-major.
inline std::pair<std::size_t, std::size_t> triangle_pair(std::uint64_t index, std::size_t g) {
  std::size_t i = 0;
  std::uint64_t row = g;
  while (index >= row) {
    index -= row;
    ++i;
    --row;
  }
  return {i, i + static_cast<std::size_t>(index)};
}

inline bool is_generator_of(const ideal::Generator& g, int n) {
  return g.kind == ideal::Generator::Kind::Plucker || static_cast<int>(g.indices.size()) <= n;
}

}  // namespace detail

/// Products of two generators of I_{n+1} lie in I_n. Above the sample
/// threshold a seeded sample of pairs is checked.
///
/// Each product is checked directly by the rank oracle. When its component
/// is over budget, a product with a factor already in I_n passes by ideal
/// closure, and a product of two (n+1)-cycles g1*g2 passes if g1*x_e is in
/// I_n for an edge x_e of g2 (checked by the rank oracle).
inline Report verify_square_containment(Context& ctx, int n, std::optional<int> vertices = std::nullopt) {
  detail::Stopwatch clock;
  const int N = vertices.value_or(2 * n + 2);
  if (N < 2 * (n + 1)) throw std::invalid_argument("verify square needs N >= 2(n+1)");
  const auto spec = ideal::IdealSpec::make(n, N);
  const auto gens = ideal::generators(ideal::IdealSpec::make(n + 1, N));
  const std::uint64_t g = gens.size();
  const std::uint64_t total = g * (g + 1) / 2;
  const bool sampled = total > ctx.sample_threshold;
  std::vector<std::uint64_t> picks;
  if (sampled) {
    picks = detail::sample_indices(total, ctx.sample_threshold, ctx.seed);
  } else {
    picks.resize(total);
    std::iota(picks.begin(), picks.end(), 0);
  }

  enum class Route { Zero, Direct, FactorInIdeal, Divisor };
  struct Outcome {
    Route route = Route::Zero;
    bool member = true;
    EdgePolynomial product;
  };
  std::vector<Outcome> outcomes(picks.size());
  parallel_for(picks.size(), ctx.jobs, [&](std::size_t k) {
    const auto [i, j] = detail::triangle_pair(picks[k], gens.size());
    auto& o = outcomes[k];
    o.product = poly_mul(gens[i].poly, gens[j].poly);
    if (o.product.is_zero()) return;
    try {
      o.route = Route::Direct;
      o.member = ctx.engine.contains(o.product, spec);
      return;
    } catch (const ideal::BudgetExceeded&) {
    }
    if (detail::is_generator_of(gens[i], n) || detail::is_generator_of(gens[j], n)) {
      o.route = Route::FactorInIdeal;
      o.member = true;
      return;
    }
    o.route = Route::Divisor;
    const auto& a = gens[i].poly.terms().front();
    const auto& b = gens[j].poly.terms().front();
    const auto edge = std::find_if(b.variables().begin(), b.variables().end(), [&](const Edge& e) { return !a.contains(e); });
    o.member = ctx.engine.contains(EdgePolynomial(N, *mono_mul(a, EdgeMonomial{*edge})), spec);
  });

  Report r;
  r.suite = "square";
  r.params = {{"n", n}, {"N", N}, {"sampled", sampled}, {"seed", sampled ? json(ctx.seed) : json(nullptr)}};
  std::map<std::string, std::size_t> routes{{"zero", 0}, {"direct", 0}, {"factor_in_ideal", 0}, {"divisor", 0}};
  std::size_t failures = 0;
  for (std::size_t k = 0; k < outcomes.size(); ++k) {
    const auto& o = outcomes[k];
    switch (o.route) {
      case Route::Zero: ++routes["zero"]; break;
      case Route::Direct: ++routes["direct"]; break;
      case Route::FactorInIdeal: ++routes["factor_in_ideal"]; break;
      case Route::Divisor: ++routes["divisor"]; break;
    }
    if (!o.member) {
      ++failures;
      const auto [i, j] = detail::triangle_pair(picks[k], gens.size());
      r.witnesses.push_back({gens[i].label() + " * " + gens[j].label() + " not in I" + std::to_string(n),
                             io::to_json(o.product), "not member", true, nullptr});
    }
  }
  r.dims = {{"generators_of_I_n_plus_1", gens.size()},
            {"pairs_total", total},
            {"pairs_checked", picks.size()},
            {"routes", routes},
            {"failures", failures}};
  r.passed = failures == 0;
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

/// Default cofactors m' for the trivalent identity: 1, x_{1,2}, x_{6,7}x_{7,8},
/// then single edges and edge pairs on {1,2,3,6,7,8} in canonical order.
inline std::vector<EdgeMonomial> default_lemma_cofactors(std::size_t count) {
  std::vector<EdgeMonomial> out{EdgeMonomial{}, EdgeMonomial{Edge(1, 2)}, EdgeMonomial{Edge(6, 7), Edge(7, 8)}};
  const std::vector<Vertex> pool{1, 2, 3, 6, 7, 8};
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < pool.size(); ++a) {
    for (std::size_t b = a + 1; b < pool.size(); ++b) edges.emplace_back(pool[a], pool[b]);
  }
  std::vector<EdgeMonomial> extra;
  for (const auto& e : edges) extra.push_back(EdgeMonomial{e});
  for (std::size_t a = 0; a < edges.size(); ++a) {
    for (std::size_t b = a + 1; b < edges.size(); ++b) extra.push_back(EdgeMonomial{edges[a], edges[b]});
  }
  for (auto& m : extra) {
    if (out.size() >= count) break;
    if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(std::move(m));
  }
  return out;
}

/// For m = m' x_{1,4}x_{2,4}x_{3,4} with m' free of indices 4 and 5, the
/// derivation e_{4,5} maps m to n = m'(x_{1,5}x_{2,4}x_{3,4} +
/// x_{1,4}x_{2,5}x_{3,4} + x_{1,4}x_{2,4}x_{3,5}). Equivalently the operator
/// id + e_{4,5} sends m to m + n; both forms are checked.
inline Report verify_trivalent_lemma(Context&, const std::vector<EdgeMonomial>& cofactors) {
  detail::Stopwatch clock;
  Report r;
  r.suite = "lemma";
  r.params = {{"cofactors", cofactors.size()}, {"derivation", "e4,5"}};
  std::size_t failures = 0;
  const gl::LieDerivation e{4, 5};
  for (const auto& mp : cofactors) {
    for (const auto& v : mp.variables()) {
      if (v.touches(4) || v.touches(5)) {
        throw std::invalid_argument("cofactor " + mp.to_string() + " must avoid indices 4 and 5");
      }
    }
    const int N = std::max(5, mp.max_index());
    const EdgePolynomial cof(N, mp);
    const EdgePolynomial m = cof * EdgePolynomial(N, EdgeMonomial{Edge(1, 4), Edge(2, 4), Edge(3, 4)});
    const EdgePolynomial trinomial(N, {EdgeMonomial{Edge(1, 5), Edge(2, 4), Edge(3, 4)},
                                       EdgeMonomial{Edge(1, 4), Edge(2, 5), Edge(3, 4)},
                                       EdgeMonomial{Edge(1, 4), Edge(2, 4), Edge(3, 5)}});
    const EdgePolynomial expected = cof * trinomial;
    const EdgePolynomial image = gl::apply_derivation(e, m);
    const bool ok = image == expected && (m + image) == (m + expected) && !m.is_zero();
    if (!ok) {
      ++failures;
      r.witnesses.push_back({"e4,5(" + m.to_string() + ")", io::to_json(image), "identity fails", true,
                             {{"expected", io::to_json(expected)}}});
    }
  }
  r.dims = {{"cofactors_checked", cofactors.size()}, {"failures", failures}};
  r.passed = failures == 0 && !cofactors.empty();
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

/// phi kills every Plucker element on 1..N and the standard cycles w_3..w_nmax,
/// does not kill x_{1,2}, and w_3 witnesses that I_2 is strictly inside ker(phi).
inline Report verify_phi_kernel(Context& ctx, int N, int n_max) {
  detail::Stopwatch clock;
  if (N < std::max(4, n_max)) throw std::invalid_argument("verify phi needs N >= max(4, n_max)");
  if (n_max < 3) throw std::invalid_argument("verify phi needs n_max >= 3");
  Report r;
  r.suite = "phi";
  r.params = {{"N", N}, {"n_max", n_max}};
  std::size_t plucker_checked = 0, failures = 0;
  std::vector<Vertex> all(static_cast<std::size_t>(N));
  std::iota(all.begin(), all.end(), 1);
  ideal::detail::for_each_subset(all, 4, [&](const std::vector<Vertex>& s) {
    ++plucker_checked;
    const auto pl = plucker(s[0], s[1], s[2], s[3], N);
    const auto image = gl::phi(pl);
    if (!image.is_zero()) {
      ++failures;
      r.witnesses.push_back({"phi(pl(" + std::to_string(s[0]) + "," + std::to_string(s[1]) + "," +
                                 std::to_string(s[2]) + "," + std::to_string(s[3]) + ")) != 0",
                             io::to_json(pl), "nonzero image", true, {{"image", io::to_json(image)}}});
    }
  });
  for (int m = 3; m <= n_max; ++m) {
    const EdgePolynomial w(N, standard_cycle(m));
    const auto image = gl::phi(w);
    if (!image.is_zero()) {
      ++failures;
      r.witnesses.push_back({"phi(w" + std::to_string(m) + ") != 0", io::to_json(w), "nonzero image", true,
                             {{"image", io::to_json(image)}}});
    }
  }
  const EdgePolynomial x12(N, EdgeMonomial{Edge(1, 2)});
  const auto x12_image = gl::phi(x12);
  r.witnesses.push_back({"phi(x1,2)", io::to_json(x12), x12_image.is_zero() ? "zero" : "nonzero", true,
                         {{"image", io::to_json(x12_image)}}});
  const EdgePolynomial w3(N, standard_cycle(3));
  const auto w3_in_I2 = ctx.engine.member(w3, ideal::IdealSpec::make(2, N));
  const bool strict = gl::phi(w3).is_zero() && !w3_in_I2.member && w3_in_I2.certified;
  r.witnesses.push_back({"w3 in ker(phi) but not in I2", io::to_json(w3), strict ? "strict" : "not strict",
                         w3_in_I2.certified, detail::membership_detail(w3_in_I2)});
  r.dims = {{"plucker_checked", plucker_checked}, {"cycles_checked", n_max - 2}, {"failures", failures}};
  r.passed = failures == 0 && !x12_image.is_zero() && strict;
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

struct AllOptions {
  int n_min = 2;
  int n_max = 4;
  std::size_t lemma_cofactors = 24;
};

/// Every suite for n = n_min..n_max with default truncations.
inline Report verify_all(Context& ctx, const AllOptions& opt) {
  detail::Stopwatch clock;
  if (opt.n_min < 2 || opt.n_max < opt.n_min) throw std::invalid_argument("need 2 <= n_min <= n_max");
  Report r;
  r.suite = "all";
  r.params = {{"n_min", opt.n_min}, {"n_max", opt.n_max}};
  for (int n = opt.n_min; n <= opt.n_max; ++n) r.children.push_back(verify_dkk(ctx, n));
  for (int n = opt.n_min; n <= opt.n_max; ++n) r.children.push_back(verify_stability(ctx, n));
  for (int n = opt.n_min; n <= opt.n_max; ++n) r.children.push_back(verify_tail_containment(ctx, n));
  for (int n = opt.n_min; n <= opt.n_max; ++n) r.children.push_back(verify_square_containment(ctx, n));
  r.children.push_back(verify_trivalent_lemma(ctx, default_lemma_cofactors(opt.lemma_cofactors)));
  const int phi_n = std::max(6, opt.n_max);
  r.children.push_back(verify_phi_kernel(ctx, phi_n, phi_n));
  std::size_t failed = 0;
  for (const auto& c : r.children) failed += c.passed ? 0 : 1;
  r.passed = failed == 0;
  r.dims = {{"suites", r.children.size()}, {"failed_suites", failed}};
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

// ---------------------------------------------------------------------------

struct DimensionRow {
  int n;
  Multidegree degree;
  std::size_t dim_R;
  std::size_t dim_I;
  std::size_t dim_quotient() const noexcept { return dim_R - dim_I; }
};

/// dim R_d, dim (I_n)_d and the quotient for every (n, d) pair, n-major.
inline std::vector<DimensionRow> dimension_stats(ideal::Engine& engine, const std::vector<int>& ns,
                                                 const std::vector<Multidegree>& degrees) {
  std::vector<DimensionRow> out;
  for (int n : ns) {
    for (const auto& d : degrees) {
      const auto spec = ideal::IdealSpec::make(n, std::max({4, n, d.max_vertex()}));
      auto basis = engine.graded_basis(spec, d);
      out.push_back({n, d, basis->dim_R(), basis->rank()});
    }
  }
  return out;
}

inline std::string stats_csv(const std::vector<DimensionRow>& rows) {
  std::string s = "n,degree,dim_R,dim_I,dim_quotient\n";
  for (const auto& r : rows) {
    std::string deg = r.degree.to_string();
    std::replace(deg.begin(), deg.end(), ',', ' ');
    s += std::to_string(r.n) + "," + deg + "," + std::to_string(r.dim_R) + "," + std::to_string(r.dim_I) + "," +
         std::to_string(r.dim_quotient()) + "\n";
  }
  return s;
}

inline json stats_json(const std::vector<DimensionRow>& rows) {
  json out = json::array();
  for (const auto& r : rows) {
    out.push_back({{"n", r.n}, {"degree", r.degree.entries()}, {"dim_R", r.dim_R}, {"dim_I", r.dim_I},
                   {"dim_quotient", r.dim_quotient()}});
  }
  return out;
}

}  // namespace skewchain::verify
