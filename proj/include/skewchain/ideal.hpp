#pragma once

// The ideals I_n of the edge algebra: I_2 is generated by the Plucker
// elements, and I_n (n > 2) adds every cycle monomial of length 3..n.
//
// All generators are multihomogeneous, so (I_n)_d is spanned by products
// m * g with g a generator of degree e <= d and m a monomial of degree d - e.
// Membership is therefore decided exactly, one multidegree at a time, by a
// rank computation over F2. Only generators supported inside support(d) can
// contribute, which is also why a verdict computed with indices truncated to
// 1..N is valid for the untruncated ring whenever support(d) lies in 1..N.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <future>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "skewchain/gf2.hpp"
#include "skewchain/poly_io.hpp"
#include "skewchain/ring.hpp"

namespace skewchain::ideal {

using nlohmann::json;

struct IdealSpec {
  int n = 2;  // longest generating cycle
  int N = 4;  // indices truncated to 1..N

  static IdealSpec make(int n, int N) {
    if (n < 2) throw std::invalid_argument("ideal index n must be at least 2");
    if (N < std::max(4, n)) {
      throw std::invalid_argument("truncation N=" + std::to_string(N) + " must be at least max(4, n)");
    }
    return {n, N};
  }

  friend bool operator==(const IdealSpec&, const IdealSpec&) = default;
};

struct Generator {
  enum class Kind { Plucker, Cycle };
  Kind kind;
  std::vector<Vertex> indices;  // Plucker: sorted 4-subset; Cycle: visiting order
  EdgePolynomial poly;
  Multidegree degree;

  std::string label() const {
    std::string s = kind == Kind::Plucker ? "pl(" : "cycle(";
    for (std::size_t i = 0; i < indices.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(indices[i]);
    }
    return s + ")";
  }
};

namespace detail {

template <class Fn>
void for_each_subset(const std::vector<Vertex>& pool, std::size_t k, Fn&& fn) {
  if (k > pool.size()) return;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<Vertex> subset(k);
  while (true) {
    for (std::size_t i = 0; i < k; ++i) subset[i] = pool[idx[i]];
    fn(subset);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == pool.size() - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// One visiting order per dihedral class: starts at the smallest vertex and
/// its second vertex is smaller than its last.
inline std::vector<std::vector<Vertex>> dihedral_cycles(const std::vector<Vertex>& subset) {
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> rest(subset.begin() + 1, subset.end());
  do {
    if (rest.front() < rest.back()) {
      std::vector<Vertex> seq{subset.front()};
      seq.insert(seq.end(), rest.begin(), rest.end());
      out.push_back(std::move(seq));
    }
  } while (std::next_permutation(rest.begin(), rest.end()));
  return out;
}

}  // namespace detail

/// Generators of I_n whose indices all lie in `vertices` (sorted): Plucker
/// elements per 4-subset, then cycles by length, subset, and visiting order.
inline std::vector<Generator> generators_on(int n, const std::vector<Vertex>& vertices, int universe) {
  std::vector<Generator> out;
  detail::for_each_subset(vertices, 4, [&](const std::vector<Vertex>& s) {
    auto poly = plucker(s[0], s[1], s[2], s[3], universe);
    out.push_back({Generator::Kind::Plucker, s, poly, multidegree(poly.terms().front())});
  });
  for (int len = 3; len <= n; ++len) {
    detail::for_each_subset(vertices, static_cast<std::size_t>(len), [&](const std::vector<Vertex>& s) {
      for (auto& seq : detail::dihedral_cycles(s)) {
        auto m = cycle_monomial(seq);
        out.push_back({Generator::Kind::Cycle, std::move(seq), EdgePolynomial(universe, m), multidegree(m)});
      }
    });
  }
  return out;
}

inline std::vector<Generator> generators(const IdealSpec& spec) {
  std::vector<Vertex> all(static_cast<std::size_t>(spec.N));
  std::iota(all.begin(), all.end(), 1);
  return generators_on(spec.n, all, spec.N);
}

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const Multidegree& d, std::uint64_t estimate, std::uint64_t budget)
      : std::runtime_error("degree (" + d.to_string() + ") needs about " + std::to_string(estimate) +
                           " bit-cells, budget is " + std::to_string(budget) + " (use --force to override)"),
        estimate_(estimate) {}
  std::uint64_t estimate() const noexcept { return estimate_; }

 private:
  std::uint64_t estimate_;
};

struct Budget {
  std::uint64_t bit_cells = 100'000'000;
  bool force = false;
};

/// The monomial basis of R_d and the coordinate map into it.
class ColumnIndex {
 public:
  ColumnIndex() = default;
  explicit ColumnIndex(std::vector<EdgeMonomial> columns) : columns_(std::move(columns)) {}

  const std::vector<EdgeMonomial>& columns() const noexcept { return columns_; }
  std::size_t size() const noexcept { return columns_.size(); }

  std::optional<std::size_t> find(const EdgeMonomial& m) const {
    auto it = std::lower_bound(columns_.begin(), columns_.end(), m);
    if (it == columns_.end() || *it != m) return std::nullopt;
    return static_cast<std::size_t>(it - columns_.begin());
  }

  /// Coefficient vector of f; every term of f must be a column.
  gf2::BitVector encode(const EdgePolynomial& f) const {
    gf2::BitVector v(columns_.size());
    for (const auto& t : f.terms()) {
      auto c = find(t);
      if (!c) throw std::invalid_argument("term " + t.to_string() + " is not in this graded component");
      v.set(*c);
    }
    return v;
  }

  EdgePolynomial decode(const gf2::BitVector& v, int universe) const {
    std::vector<EdgeMonomial> terms;
    v.for_each_set([&](std::size_t c) { terms.push_back(columns_[c]); });
    return EdgePolynomial(universe, std::move(terms));
  }

 private:
  std::vector<EdgeMonomial> columns_;
};

struct Provenance {
  std::size_t generator;  // index into the generator list of the component
  EdgeMonomial cofactor;
};

namespace detail {

inline void require_support(const IdealSpec& spec, const Multidegree& d) {
  if (d.max_vertex() > spec.N) {
    throw std::out_of_range("multidegree (" + d.to_string() + ") is not supported in 1.." + std::to_string(spec.N));
  }
}

/// Rows that the spanning set will contain, counted up to `cap`.
inline std::uint64_t estimate_rows(const std::vector<Generator>& gens, const Multidegree& d, std::uint64_t cap) {
  std::uint64_t rows = 0;
  for (const auto& g : gens) {
    if (!g.degree.divides(d)) continue;
    rows += count_monomials(d - g.degree, static_cast<std::size_t>(cap - std::min(cap, rows)) + 1);
    if (rows > cap) return rows;
  }
  return rows;
}

inline std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
  return a * b;
}

}  // namespace detail

/// Generators relevant to degree d, i.e. those supported inside support(d).
inline std::vector<Generator> component_generators(const IdealSpec& spec, const Multidegree& d) {
  detail::require_support(spec, d);
  auto gens = generators_on(spec.n, d.support(), spec.N);
  std::erase_if(gens, [&](const Generator& g) { return !g.degree.divides(d); });
  return gens;
}

/// Calls visit(product, generator index, cofactor) for every nonzero m * g
/// landing in degree d, in a fixed order.
template <class Visit>
void for_each_spanning_product(const IdealSpec& spec, const Multidegree& d, const std::vector<Generator>& gens,
                               Visit&& visit) {
  for (std::size_t gi = 0; gi < gens.size(); ++gi) {
    const auto& g = gens[gi];
    if (!g.degree.divides(d)) continue;
    for (auto& cof : enumerate_monomials(d - g.degree)) {
      auto product = poly_mul(EdgePolynomial(spec.N, cof), g.poly);
      if (product.is_zero()) continue;
      visit(product, gi, cof);
    }
  }
}

/// Materialized spanning set of (I_n)_d: distinct nonzero rows with the
/// (generator, cofactor) pair that first produced each.
struct SpanningRows {
  IdealSpec spec;
  Multidegree degree;
  ColumnIndex columns;
  std::vector<Generator> generators;
  gf2::BitMatrix rows;
  std::vector<Provenance> provenance;
};

inline SpanningRows graded_spanning_rows(const IdealSpec& spec, const Multidegree& d, const Budget& budget = {}) {
  detail::require_support(spec, d);
  const auto col_count = count_monomials(d, static_cast<std::size_t>(budget.bit_cells));
  auto gens = component_generators(spec, d);
  if (!budget.force) {
    const auto rows = detail::estimate_rows(gens, d, budget.bit_cells);
    const auto cells = detail::saturating_mul(col_count, rows);
    if (cells > budget.bit_cells) throw BudgetExceeded(d, cells, budget.bit_cells);
  }
  SpanningRows out{spec, d, ColumnIndex(enumerate_monomials(d)), std::move(gens), {}, {}};
  out.rows = gf2::BitMatrix(out.columns.size());
  for_each_spanning_product(spec, d, out.generators, [&](const EdgePolynomial& p, std::size_t gi, const EdgeMonomial& cof) {
    if (out.rows.add_row(out.columns.encode(p))) out.provenance.push_back({gi, cof});
  });
  return out;
}

/// Echelonized basis of (I_n)_d over the monomial basis of R_d.
struct GradedBasis {
  IdealSpec spec;
  Multidegree degree;
  ColumnIndex columns;
  gf2::BitMatrix basis;

  std::size_t dim_R() const noexcept { return columns.size(); }
  std::size_t rank() const noexcept { return basis.row_count(); }

  /// f must be homogeneous of this degree (or zero).
  bool contains(const EdgePolynomial& f) const { return gf2::in_rowspace(basis, columns.encode(f)); }
};

/// Streams the spanning products into an incremental echelon form, so
/// storage is bounded by dim R_d squared rather than the row count.
inline GradedBasis compute_graded_basis(const IdealSpec& spec, const Multidegree& d, const Budget& budget = {}) {
  detail::require_support(spec, d);
  const auto cap = static_cast<std::size_t>(std::min<std::uint64_t>(budget.bit_cells, SIZE_MAX - 1));
  const auto col_count = count_monomials(d, cap);
  auto gens = component_generators(spec, d);
  if (!budget.force) {
    const auto rows = detail::estimate_rows(gens, d, col_count);
    const auto cells = detail::saturating_mul(col_count, std::min<std::uint64_t>(rows, col_count));
    if (cells > budget.bit_cells) throw BudgetExceeded(d, cells, budget.bit_cells);
  }
  ColumnIndex columns(enumerate_monomials(d));
  gf2::Echelon echelon(columns.size());
  for (std::size_t gi = 0; gi < gens.size() && !echelon.full(); ++gi) {
    const auto& g = gens[gi];
    for (auto& cof : enumerate_monomials(d - g.degree)) {
      auto product = poly_mul(EdgePolynomial(spec.N, cof), g.poly);
      if (!product.is_zero()) echelon.insert(columns.encode(product));
      if (echelon.full()) break;
    }
  }
  return {spec, d, std::move(columns), echelon.to_matrix()};
}

// ---------------------------------------------------------------------------
// Basis dump format and on-disk cache.

inline constexpr int kBasisFormatVersion = 1;

inline std::uint64_t fnv1a(std::string_view data) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

inline json basis_to_json(const GradedBasis& b) {
  json cols = json::array();
  for (const auto& m : b.columns.columns()) cols.push_back(io::monomial_to_json(m));
  json rows = json::array();
  for (const auto& r : b.basis.rows()) rows.push_back(r.to_string());
  return json{{"spec", {{"n", b.spec.n}, {"N", b.spec.N}}},
              {"d", b.degree.entries()},
              {"columns", cols},
              {"rank", b.rank()},
              {"rows", rows}};
}

inline GradedBasis basis_from_json(const json& j) {
  GradedBasis b;
  b.spec = IdealSpec::make(j.at("spec").at("n").get<int>(), j.at("spec").at("N").get<int>());
  b.degree = Multidegree(j.at("d").get<std::vector<int>>());
  std::vector<EdgeMonomial> cols;
  for (const auto& c : j.at("columns")) {
    std::vector<Edge> edges;
    for (const auto& e : c) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    cols.emplace_back(std::move(edges));
  }
  if (!std::is_sorted(cols.begin(), cols.end())) throw std::runtime_error("basis columns are not in canonical order");
  b.columns = ColumnIndex(std::move(cols));
  gf2::Echelon e(b.columns.size());
  for (const auto& r : j.at("rows")) {
    auto v = gf2::BitVector::from_string(r.get<std::string>());
    if (!e.insert(v)) throw std::runtime_error("basis rows are linearly dependent");
  }
  b.basis = e.to_matrix();
  if (b.basis.row_count() != j.at("rank").get<std::size_t>()) throw std::runtime_error("basis rank mismatch");
  return b;
}

/// One file per (n, d). The payload carries an FNV-1a checksum; a file whose
/// checksum does not match is ignored and recomputed.
class DiskCache {
 public:
  explicit DiskCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  std::filesystem::path path_for(int n, const Multidegree& d) const {
    std::string deg = d.to_string();
    std::replace(deg.begin(), deg.end(), ',', '-');
    return dir_ / ("basis-v" + std::to_string(kBasisFormatVersion) + "-n" + std::to_string(n) + "-d" + deg + ".json");
  }

  std::optional<GradedBasis> load(int n, const Multidegree& d) const {
    std::ifstream in(path_for(n, d));
    if (!in) return std::nullopt;
    std::stringstream ss;
    ss << in.rdbuf();
    try {
      auto doc = json::parse(ss.str());
      if (doc.at("format_version").get<int>() != kBasisFormatVersion) return std::nullopt;
      const auto payload = doc.at("basis").dump();
      if (doc.at("checksum").get<std::uint64_t>() != fnv1a(payload)) return std::nullopt;
      auto b = basis_from_json(doc.at("basis"));
      if (b.spec.n != n || b.degree != d) return std::nullopt;
      return b;
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }

  void store(const GradedBasis& b) const {
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    const auto payload = basis_to_json(b);
    json doc{{"format_version", kBasisFormatVersion}, {"checksum", fnv1a(payload.dump())}, {"basis", payload}};
    const auto target = path_for(b.spec.n, b.degree);
    const auto tmp = target.string() + ".tmp";
    {
      std::ofstream out(tmp);
      if (!out) return;
      out << doc.dump();
    }
    std::filesystem::rename(tmp, target, ec);
  }

 private:
  std::filesystem::path dir_;
};

// ---------------------------------------------------------------------------
// Membership.

struct ComponentVerdict {
  Multidegree degree;            // as queried
  Multidegree canonical_degree;  // after relabeling, the cache key
  bool member = false;
  bool certified = false;
  std::size_t dim_R = 0;
  std::size_t dim_I = 0;
};

struct MembershipResult {
  bool member = true;
  bool certified = true;
  std::vector<ComponentVerdict> components;
};

/// Relabels the support of a homogeneous component to 1..k, vertices of
/// larger degree first (ties by index). I_n is stable under permutations,
/// so membership is unchanged and components of the same shape share a basis.
struct CanonicalForm {
  Multidegree degree;
  std::vector<Vertex> perm;  // perm[old] = new
};

inline CanonicalForm canonical_form(const Multidegree& d) {
  auto support = d.support();
  std::stable_sort(support.begin(), support.end(), [&](Vertex a, Vertex b) { return d[a] > d[b]; });
  CanonicalForm out;
  out.perm.assign(static_cast<std::size_t>(d.max_vertex()) + 1, 0);
  std::vector<int> deg;
  for (std::size_t i = 0; i < support.size(); ++i) {
    out.perm[static_cast<std::size_t>(support[i])] = static_cast<Vertex>(i + 1);
    deg.push_back(d[support[i]]);
  }
  out.degree = Multidegree(std::move(deg));
  return out;
}

/// Graded bases memoized per (n, d). A basis depends only on n and d as long
/// as support(d) is inside the truncation, so N is not part of the key.
/// Concurrent callers asking for the same key wait for one computation.
class Engine {
 public:
  explicit Engine(Budget budget = {}, std::optional<std::filesystem::path> cache_dir = std::nullopt)
      : budget_(budget) {
    if (cache_dir) disk_.emplace(*cache_dir);
  }

  const Budget& budget() const noexcept { return budget_; }

  std::shared_ptr<const GradedBasis> graded_basis(const IdealSpec& spec, const Multidegree& d) {
    detail::require_support(spec, d);
    const Key key{spec.n, d};
    std::promise<std::shared_ptr<const GradedBasis>> promise;
    std::shared_future<std::shared_ptr<const GradedBasis>> future;
    {
      std::unique_lock lock(mutex_);
      auto it = cache_.find(key);
      if (it != cache_.end()) {
        future = it->second;
        lock.unlock();
        return future.get();
      }
      future = promise.get_future().share();
      cache_.emplace(key, future);
    }
    try {
      std::optional<GradedBasis> loaded;
      if (disk_) loaded = disk_->load(spec.n, d);
      if (!loaded) {
        loaded = compute_graded_basis(IdealSpec{spec.n, std::max(spec.N, d.max_vertex())}, d, budget_);
        if (disk_) disk_->store(*loaded);
      }
      promise.set_value(std::make_shared<const GradedBasis>(std::move(*loaded)));
    } catch (...) {
      promise.set_exception(std::current_exception());
    }
    return future.get();
  }

  /// f is in I_n iff each multihomogeneous component is in (I_n)_d.
  MembershipResult member(const EdgePolynomial& f, const IdealSpec& spec) {
    if (f.universe() > spec.N) {
      throw AlphabetMismatch("polynomial over N=" + std::to_string(f.universe()) + " tested against truncation N=" +
                             std::to_string(spec.N));
    }
    MembershipResult out;
    for (auto& [d, component] : homogeneous_components(f)) {
      ComponentVerdict v;
      v.degree = d;
      v.certified = d.max_vertex() <= spec.N;
      auto canon = canonical_form(d);
      v.canonical_degree = canon.degree;
      auto relabeled = relabel(component, canon.perm, spec.N);
      auto basis = graded_basis(spec, canon.degree);
      v.dim_R = basis->dim_R();
      v.dim_I = basis->rank();
      v.member = basis->contains(relabeled);
      out.member = out.member && v.member;
      out.certified = out.certified && v.certified;
      out.components.push_back(std::move(v));
    }
    return out;
  }

  bool contains(const EdgePolynomial& f, const IdealSpec& spec) { return member(f, spec).member; }

 private:
  using Key = std::pair<int, Multidegree>;
  Budget budget_;
  std::optional<DiskCache> disk_;
  std::mutex mutex_;
  std::map<Key, std::shared_future<std::shared_ptr<const GradedBasis>>> cache_;
};

// ---------------------------------------------------------------------------
// Membership certificates.

/// Spanning products summing to f, as (generator label, cofactor) pairs.
struct Certificate {
  std::vector<std::pair<Generator, EdgeMonomial>> terms;

  EdgePolynomial evaluate(int universe) const {
    EdgePolynomial sum(universe);
    for (const auto& [g, cof] : terms) sum += poly_mul(EdgePolynomial(universe, cof), g.poly);
    return sum;
  }
};

/// Solves for an explicit combination of spanning products equal to the
/// homogeneous polynomial f; nullopt if f is not in (I_n)_d.
inline std::optional<Certificate> explain_membership(const EdgePolynomial& f, const IdealSpec& spec,
                                                     const Budget& budget = {}) {
  if (f.is_zero()) return Certificate{};
  auto d = homogeneous_degree(f);
  if (!d) throw std::invalid_argument("explain_membership needs a multihomogeneous polynomial");
  auto span = graded_spanning_rows(spec, *d, budget);
  const std::size_t n_rows = span.rows.row_count();

  // Elimination that tracks, for each pivot row, which spanning rows it sums.
  struct Tracked {
    gf2::BitVector value;
    gf2::BitVector combo;
  };
  std::vector<Tracked> pivots;
  std::vector<std::size_t> pivot_col;
  auto reduce = [&](Tracked t) {
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      if (t.value.test(pivot_col[i])) {
        t.value ^= pivots[i].value;
        t.combo ^= pivots[i].combo;
      }
    }
    return t;
  };
  for (std::size_t r = 0; r < n_rows; ++r) {
    Tracked t{span.rows.row(r), gf2::BitVector(n_rows)};
    t.combo.set(r);
    t = reduce(std::move(t));
    if (auto p = t.value.first_set()) {
      pivot_col.push_back(*p);
      pivots.push_back(std::move(t));
    }
  }
  auto target = reduce(Tracked{span.columns.encode(f), gf2::BitVector(n_rows)});
  if (target.value.any()) return std::nullopt;
  Certificate cert;
  target.combo.for_each_set([&](std::size_t r) {
    const auto& prov = span.provenance[r];
    cert.terms.emplace_back(span.generators[prov.generator], prov.cofactor);
  });
  return cert;
}

// ---------------------------------------------------------------------------
// The cycle-sum functional behind the non-membership of w_{n+1}.
//
// In degree d = (2,...,2) on n+1 vertices every monomial is a 2-regular
// graph: either one Hamiltonian cycle or a union of shorter cycles. R_d
// splits as (short-cycle monomials) + (cycle-sum-zero combinations of
// Hamiltonian cycles) + k*w_{n+1}; the functional below is the projection
// onto the last summand. It vanishes on every m * pl and on every multiple
// of a short cycle, but not on w_{n+1}.

inline bool is_two_regular_on(const Multidegree& d, int vertex_count) {
  const auto support = d.support();
  return static_cast<int>(support.size()) == vertex_count &&
         std::all_of(support.begin(), support.end(), [&](Vertex v) { return d[v] == 2; });
}

/// Parity of the number of terms of f that are a single (n+1)-cycle.
inline bool cycle_sum_functional(const EdgePolynomial& f, int n) {
  bool parity = false;
  for (const auto& t : f.terms()) {
    if (!is_two_regular_on(multidegree(t), n + 1)) {
      throw std::invalid_argument("term " + t.to_string() + " is not of degree (2,...,2) on " + std::to_string(n + 1) +
                                  " vertices");
    }
    if (cycle_structure(t).is_single_cycle()) parity = !parity;
  }
  return parity;
}

struct DkkReplay {
  int n = 0;
  std::size_t columns = 0;          // dim R_d
  std::size_t rows_checked = 0;     // spanning products examined
  std::size_t rows_nonzero = 0;     // products with functional 1 (must be 0)
  bool functional_of_cycle = false; // functional(w_{n+1}), must be 1
  std::optional<EdgePolynomial> offending_row;
  std::optional<std::string> offending_label;

  bool passed() const noexcept { return rows_nonzero == 0 && functional_of_cycle; }
};

/// Checks the functional on every spanning product of (I_n)_d, without any
/// rank computation. A pass proves w_{n+1} is not in I_n.
inline DkkReplay proof_replay_dkk(int n) {
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  const auto spec = IdealSpec::make(n, std::max(4, n + 1));
  const auto d = Multidegree::uniform(n + 1, 2);
  DkkReplay out;
  out.n = n;
  out.columns = count_monomials(d);
  auto gens = component_generators(spec, d);
  for_each_spanning_product(spec, d, gens, [&](const EdgePolynomial& p, std::size_t gi, const EdgeMonomial& cof) {
    ++out.rows_checked;
    if (cycle_sum_functional(p, n)) {
      ++out.rows_nonzero;
      if (!out.offending_row) {
        out.offending_row = p;
        out.offending_label = cof.to_string() + " * " + gens[gi].label();
      }
    }
  });
  out.functional_of_cycle = cycle_sum_functional(EdgePolynomial(spec.N, standard_cycle(n + 1)), n);
  return out;
}

}  // namespace skewchain::ideal
