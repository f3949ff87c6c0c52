#pragma once

// Squarefree characteristic-2 algebras: the exterior algebra on edge
// variables x_{i,j} (monomials are simple graphs) and the exterior algebra on
// paired generators x_i, y_i. Both are commutative with x^2 = 0, so one
// Polynomial template covers them.
//
// Coefficients live in F2. Membership questions for F2-polynomials in ideals
// with F2 generators have the same answer over every extension field of F2,
// so nothing is lost against a general field of characteristic two.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace skewchain {

class AlphabetMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Vertex = int;

/// The variable x_{u,v}; stored with u < v.
class Edge {
 public:
  constexpr Edge() = default;
  constexpr Edge(Vertex a, Vertex b) : u_(a < b ? a : b), v_(a < b ? b : a) {
    if (a == b) throw std::invalid_argument("edge x_{" + std::to_string(a) + "," + std::to_string(b) + "} is a loop");
    if (u_ < 1) throw std::invalid_argument("vertex indices start at 1");
  }

  constexpr Vertex u() const noexcept { return u_; }
  constexpr Vertex v() const noexcept { return v_; }
  constexpr Vertex max_index() const noexcept { return v_; }
  constexpr bool touches(Vertex w) const noexcept { return u_ == w || v_ == w; }
  constexpr Vertex other(Vertex w) const noexcept { return w == u_ ? v_ : u_; }

  std::string to_string() const { return "x" + std::to_string(u_) + "," + std::to_string(v_); }

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;

 private:
  Vertex u_ = 1;
  Vertex v_ = 2;
};

/// A generator x_i or y_i of the paired exterior algebra.
class PairedGenerator {
 public:
  enum class Side : std::uint8_t { X, Y };

  constexpr PairedGenerator() = default;
  constexpr PairedGenerator(Side side, Vertex index) : side_(side), index_(index) {
    if (index < 1) throw std::invalid_argument("generator indices start at 1");
  }
  static constexpr PairedGenerator x(Vertex i) { return {Side::X, i}; }
  static constexpr PairedGenerator y(Vertex i) { return {Side::Y, i}; }

  /// Accepts "x3" / "y7".
  static PairedGenerator parse(std::string_view name) {
    if (name.size() < 2 || (name[0] != 'x' && name[0] != 'y')) {
      throw std::invalid_argument("paired generator must look like x3 or y7, got '" + std::string(name) + "'");
    }
    Vertex idx = 0;
    for (char c : name.substr(1)) {
      if (c < '0' || c > '9') throw std::invalid_argument("bad generator index in '" + std::string(name) + "'");
      idx = idx * 10 + (c - '0');
    }
    return {name[0] == 'x' ? Side::X : Side::Y, idx};
  }

  constexpr Side side() const noexcept { return side_; }
  constexpr Vertex index() const noexcept { return index_; }
  constexpr Vertex max_index() const noexcept { return index_; }

  std::string to_string() const { return (side_ == Side::X ? "x" : "y") + std::to_string(index_); }

  friend constexpr auto operator<=>(const PairedGenerator&, const PairedGenerator&) = default;

 private:
  Side side_ = Side::X;
  Vertex index_ = 1;
};

struct EdgeAlphabet {
  using Variable = Edge;
  static constexpr std::string_view name = "edge";
};

struct PairedAlphabet {
  using Variable = PairedGenerator;
  static constexpr std::string_view name = "paired";
};

/// Squarefree monomial: a strictly increasing list of variables. The empty
/// list is the monomial 1.
template <class Alphabet>
class Monomial {
 public:
  using Variable = typename Alphabet::Variable;

  Monomial() = default;
  /// Sorts the variables; a repeated variable is an error (the product would be zero).
  explicit Monomial(std::vector<Variable> vars) : vars_(std::move(vars)) {
    std::sort(vars_.begin(), vars_.end());
    if (std::adjacent_find(vars_.begin(), vars_.end()) != vars_.end()) {
      throw std::invalid_argument("monomial repeats a variable");
    }
  }
  Monomial(std::initializer_list<Variable> vars) : Monomial(std::vector<Variable>(vars)) {}

  const std::vector<Variable>& variables() const noexcept { return vars_; }
  std::size_t degree() const noexcept { return vars_.size(); }
  bool is_one() const noexcept { return vars_.empty(); }
  bool contains(const Variable& v) const { return std::binary_search(vars_.begin(), vars_.end(), v); }

  Vertex max_index() const noexcept {
    Vertex m = 0;
    for (const auto& v : vars_) m = std::max(m, v.max_index());
    return m;
  }

  std::string to_string() const {
    if (vars_.empty()) return "1";
    std::string s;
    for (const auto& v : vars_) {
      if (!s.empty()) s += '*';
      s += v.to_string();
    }
    return s;
  }

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  struct Sorted {};
  Monomial(Sorted, std::vector<Variable> vars) : vars_(std::move(vars)) {}

  template <class A>
  friend std::optional<Monomial<A>> mono_mul(const Monomial<A>&, const Monomial<A>&);
  template <class A>
  friend Monomial<A> monomial_from_sorted(std::vector<typename A::Variable>);

  std::vector<Variable> vars_;
};

template <class Alphabet>
Monomial<Alphabet> monomial_from_sorted(std::vector<typename Alphabet::Variable> vars) {
  return Monomial<Alphabet>(typename Monomial<Alphabet>::Sorted{}, std::move(vars));
}

/// Product of two monomials; nullopt when they share a variable (x^2 = 0).
template <class Alphabet>
std::optional<Monomial<Alphabet>> mono_mul(const Monomial<Alphabet>& a, const Monomial<Alphabet>& b) {
  std::vector<typename Alphabet::Variable> out;
  out.reserve(a.degree() + b.degree());
  auto i = a.vars_.begin();
  auto j = b.vars_.begin();
  while (i != a.vars_.end() && j != b.vars_.end()) {
    if (*i < *j) {
      out.push_back(*i++);
    } else if (*j < *i) {
      out.push_back(*j++);
    } else {
      return std::nullopt;
    }
  }
  out.insert(out.end(), i, a.vars_.end());
  out.insert(out.end(), j, b.vars_.end());
  return Monomial<Alphabet>(typename Monomial<Alphabet>::Sorted{}, std::move(out));
}

/// F2-linear combination of monomials over the universe of indices 1..N.
/// Terms are kept sorted and distinct; addition is symmetric difference.
template <class Alphabet>
class Polynomial {
 public:
  using Mono = Monomial<Alphabet>;

  Polynomial() = default;
  explicit Polynomial(int universe) : universe_(universe) {}
  /// Terms appearing an even number of times cancel.
  Polynomial(int universe, std::vector<Mono> terms) : universe_(universe), terms_(std::move(terms)) {
    normalize();
    for (const auto& t : terms_) check_in_universe(t);
  }
  Polynomial(int universe, Mono m) : Polynomial(universe, std::vector<Mono>{std::move(m)}) {}

  static Polynomial zero(int universe) { return Polynomial(universe); }
  static Polynomial one(int universe) { return Polynomial(universe, Mono{}); }

  int universe() const noexcept { return universe_; }
  const std::vector<Mono>& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool contains(const Mono& m) const { return std::binary_search(terms_.begin(), terms_.end(), m); }

  Polynomial& operator+=(const Polynomial& other) {
    require_same_universe(other);
    std::vector<Mono> out;
    out.reserve(terms_.size() + other.terms_.size());
    std::set_symmetric_difference(terms_.begin(), terms_.end(), other.terms_.begin(), other.terms_.end(),
                                  std::back_inserter(out));
    terms_ = std::move(out);
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }

  friend Polynomial operator*(const Polynomial& f, const Polynomial& g) { return poly_mul(f, g); }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& t : terms_) {
      if (!s.empty()) s += " + ";
      s += t.to_string();
    }
    return s;
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  void require_same_universe(const Polynomial& other) const {
    if (other.universe_ != universe_) {
      throw AlphabetMismatch(std::string(Alphabet::name) + " universes differ: N=" + std::to_string(universe_) +
                             " vs N=" + std::to_string(other.universe_));
    }
  }

  void check_in_universe(const Mono& m) const {
    if (m.max_index() > universe_) {
      throw std::out_of_range("monomial " + m.to_string() + " exceeds universe N=" + std::to_string(universe_));
    }
  }

 private:
  template <class A>
  friend Polynomial<A> poly_mul(const Polynomial<A>&, const Polynomial<A>&);

  void normalize() {
    std::sort(terms_.begin(), terms_.end());
    std::vector<Mono> out;
    out.reserve(terms_.size());
    for (std::size_t i = 0; i < terms_.size();) {
      std::size_t j = i;
      while (j < terms_.size() && terms_[j] == terms_[i]) ++j;
      if ((j - i) % 2 == 1) out.push_back(std::move(terms_[i]));
      i = j;
    }
    terms_ = std::move(out);
  }

  int universe_ = 0;
  std::vector<Mono> terms_;
};

template <class Alphabet>
Polynomial<Alphabet> poly_mul(const Polynomial<Alphabet>& f, const Polynomial<Alphabet>& g) {
  f.require_same_universe(g);
  Polynomial<Alphabet> out(f.universe());
  out.terms_.reserve(f.term_count() * g.term_count());
  for (const auto& a : f.terms()) {
    for (const auto& b : g.terms()) {
      if (auto p = mono_mul(a, b)) out.terms_.push_back(std::move(*p));
    }
  }
  out.normalize();
  return out;
}

using EdgeMonomial = Monomial<EdgeAlphabet>;
using EdgePolynomial = Polynomial<EdgeAlphabet>;
using PairedMonomial = Monomial<PairedAlphabet>;
using PairedPolynomial = Polynomial<PairedAlphabet>;

/// Vertex-degree vector; entry i-1 is the degree of vertex i. Trailing zeros
/// are trimmed so equal degrees compare equal regardless of how they were built.
class Multidegree {
 public:
  Multidegree() = default;
  explicit Multidegree(std::vector<int> degrees) : deg_(std::move(degrees)) {
    for (int d : deg_) {
      if (d < 0) throw std::invalid_argument("multidegree entries must be nonnegative");
    }
    trim();
  }
  Multidegree(std::initializer_list<int> degrees) : Multidegree(std::vector<int>(degrees)) {}

  /// Degree (2,...,2) on vertices 1..k.
  static Multidegree uniform(int k, int value) { return Multidegree(std::vector<int>(static_cast<std::size_t>(k), value)); }

  /// Parses "2,2,2,2".
  static Multidegree parse(std::string_view text) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      auto comma = text.find(',', pos);
      auto piece = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
      if (piece.empty()) throw std::invalid_argument("empty entry in multidegree '" + std::string(text) + "'");
      int value = 0;
      for (char c : piece) {
        if (c < '0' || c > '9') throw std::invalid_argument("bad multidegree entry '" + std::string(piece) + "'");
        value = value * 10 + (c - '0');
      }
      out.push_back(value);
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
    return Multidegree(std::move(out));
  }

  int operator[](Vertex v) const noexcept {
    return v >= 1 && static_cast<std::size_t>(v) <= deg_.size() ? deg_[static_cast<std::size_t>(v - 1)] : 0;
  }
  void add(Vertex v, int amount) {
    if (static_cast<std::size_t>(v) > deg_.size()) deg_.resize(static_cast<std::size_t>(v), 0);
    deg_[static_cast<std::size_t>(v - 1)] += amount;
    trim();
  }

  /// Largest vertex with nonzero degree (0 for the zero multidegree).
  Vertex max_vertex() const noexcept { return static_cast<Vertex>(deg_.size()); }
  const std::vector<int>& entries() const noexcept { return deg_; }
  bool is_zero() const noexcept { return deg_.empty(); }
  int total() const noexcept { return std::accumulate(deg_.begin(), deg_.end(), 0); }

  std::vector<Vertex> support() const {
    std::vector<Vertex> s;
    for (std::size_t i = 0; i < deg_.size(); ++i) {
      if (deg_[i] > 0) s.push_back(static_cast<Vertex>(i + 1));
    }
    return s;
  }

  /// Componentwise <=.
  bool divides(const Multidegree& other) const noexcept {
    for (std::size_t i = 0; i < deg_.size(); ++i) {
      if (deg_[i] > other[static_cast<Vertex>(i + 1)]) return false;
    }
    return true;
  }

  friend Multidegree operator+(const Multidegree& a, const Multidegree& b) {
    std::vector<int> out(std::max(a.deg_.size(), b.deg_.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[static_cast<Vertex>(i + 1)] + b[static_cast<Vertex>(i + 1)];
    return Multidegree(std::move(out));
  }
  /// Requires b.divides(a).
  friend Multidegree operator-(const Multidegree& a, const Multidegree& b) {
    if (!b.divides(a)) throw std::invalid_argument("multidegree subtraction would go negative");
    std::vector<int> out = a.deg_;
    for (std::size_t i = 0; i < b.deg_.size(); ++i) out[i] -= b.deg_[i];
    return Multidegree(std::move(out));
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < deg_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(deg_[i]);
    }
    return s;
  }

  friend auto operator<=>(const Multidegree&, const Multidegree&) = default;
  friend bool operator==(const Multidegree&, const Multidegree&) = default;

 private:
  void trim() {
    while (!deg_.empty() && deg_.back() == 0) deg_.pop_back();
  }
  std::vector<int> deg_;
};

inline Multidegree multidegree(const EdgeMonomial& m) {
  Multidegree d;
  std::vector<int> deg(static_cast<std::size_t>(m.max_index()), 0);
  for (const auto& e : m.variables()) {
    ++deg[static_cast<std::size_t>(e.u() - 1)];
    ++deg[static_cast<std::size_t>(e.v() - 1)];
  }
  return Multidegree(std::move(deg));
}

/// The common multidegree of all terms, or nullopt if f is not
/// multihomogeneous. The zero polynomial has no degree.
inline std::optional<Multidegree> homogeneous_degree(const EdgePolynomial& f) {
  if (f.is_zero()) return std::nullopt;
  Multidegree d = multidegree(f.terms().front());
  for (const auto& t : f.terms()) {
    if (multidegree(t) != d) return std::nullopt;
  }
  return d;
}

/// Splits f into multihomogeneous components, ordered by degree.
inline std::vector<std::pair<Multidegree, EdgePolynomial>> homogeneous_components(const EdgePolynomial& f) {
  std::vector<std::pair<Multidegree, EdgeMonomial>> tagged;
  tagged.reserve(f.term_count());
  for (const auto& t : f.terms()) tagged.emplace_back(multidegree(t), t);
  std::sort(tagged.begin(), tagged.end());
  std::vector<std::pair<Multidegree, EdgePolynomial>> out;
  for (std::size_t i = 0; i < tagged.size();) {
    std::size_t j = i;
    std::vector<EdgeMonomial> terms;
    while (j < tagged.size() && tagged[j].first == tagged[i].first) terms.push_back(tagged[j++].second);
    out.emplace_back(tagged[i].first, EdgePolynomial(f.universe(), std::move(terms)));
    i = j;
  }
  return out;
}

namespace detail {

struct DegreeSequenceSearch {
  std::vector<int> residual;  // index = vertex - 1
  std::vector<Edge> edges;
  std::size_t limit = 0;  // 0 = unlimited
  std::size_t found = 0;
  bool stopped = false;

  template <class Emit>
  void run(std::size_t vertex, Emit& emit) {
    if (stopped) return;
    while (vertex < residual.size() && residual[vertex] == 0) ++vertex;
    if (vertex == residual.size()) {
      ++found;
      emit(edges);
      if (limit != 0 && found > limit) stopped = true;
      return;
    }
    std::vector<std::size_t> candidates;
    int later_sum = 0;
    for (std::size_t w = vertex + 1; w < residual.size(); ++w) {
      if (residual[w] > 0) {
        candidates.push_back(w);
        later_sum += residual[w];
      }
    }
    const int need = residual[vertex];
    if (static_cast<std::size_t>(need) > candidates.size() || need > later_sum) return;
    std::vector<std::size_t> chosen;
    choose(vertex, candidates, 0, need, chosen, emit);
  }

  template <class Emit>
  void choose(std::size_t vertex, const std::vector<std::size_t>& candidates, std::size_t start, int remaining,
              std::vector<std::size_t>& chosen, Emit& emit) {
    if (stopped) return;
    if (remaining == 0) {
      const int saved = residual[vertex];
      residual[vertex] = 0;
      for (auto w : chosen) {
        --residual[w];
        edges.emplace_back(static_cast<Vertex>(vertex + 1), static_cast<Vertex>(w + 1));
      }
      run(vertex + 1, emit);
      for (auto w : chosen) {
        ++residual[w];
        edges.pop_back();
      }
      residual[vertex] = saved;
      return;
    }
    for (std::size_t k = start; k + static_cast<std::size_t>(remaining) <= candidates.size(); ++k) {
      chosen.push_back(candidates[k]);
      choose(vertex, candidates, k + 1, remaining - 1, chosen, emit);
      chosen.pop_back();
    }
  }
};

}  // namespace detail

/// Every simple graph whose vertex-degree sequence is exactly d, as
/// monomials in canonical (sorted) order. These index the columns of R_d.
inline std::vector<EdgeMonomial> enumerate_monomials(const Multidegree& d) {
  std::vector<EdgeMonomial> out;
  if (d.total() % 2 != 0) return out;
  detail::DegreeSequenceSearch search{d.entries(), {}, 0, 0, false};
  auto emit = [&](const std::vector<Edge>& edges) { out.push_back(monomial_from_sorted<EdgeAlphabet>(edges)); };
  search.run(0, emit);
  std::sort(out.begin(), out.end());
  return out;
}

/// Number of graphs with degree sequence d, stopping once it exceeds limit
/// (limit 0 = count everything).
inline std::size_t count_monomials(const Multidegree& d, std::size_t limit = 0) {
  if (d.total() % 2 != 0) return 0;
  detail::DegreeSequenceSearch search{d.entries(), {}, limit, 0, false};
  auto emit = [](const std::vector<Edge>&) {};
  search.run(0, emit);
  return search.found;
}

/// x_{i1,i2}x_{i3,i4} + x_{i1,i3}x_{i2,i4} + x_{i1,i4}x_{i2,i3}.
inline EdgePolynomial plucker(Vertex i1, Vertex i2, Vertex i3, Vertex i4, int universe) {
  std::vector<Vertex> idx{i1, i2, i3, i4};
  std::sort(idx.begin(), idx.end());
  if (std::adjacent_find(idx.begin(), idx.end()) != idx.end()) {
    throw std::invalid_argument("Plucker indices must be pairwise distinct");
  }
  return EdgePolynomial(universe, {EdgeMonomial{Edge(i1, i2), Edge(i3, i4)}, EdgeMonomial{Edge(i1, i3), Edge(i2, i4)},
                                   EdgeMonomial{Edge(i1, i4), Edge(i2, i3)}});
}

/// The cycle visiting seq in order and closing back to seq.front().
inline EdgeMonomial cycle_monomial(const std::vector<Vertex>& seq) {
  if (seq.size() < 3) throw std::invalid_argument("a cycle needs at least 3 vertices");
  auto sorted = seq;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("cycle vertices must be distinct");
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < seq.size(); ++i) edges.emplace_back(seq[i], seq[(i + 1) % seq.size()]);
  return EdgeMonomial(std::move(edges));
}

/// The standard cycle x_{1,2}x_{2,3}...x_{k,1}.
inline EdgeMonomial standard_cycle(int k) {
  std::vector<Vertex> seq(static_cast<std::size_t>(k));
  std::iota(seq.begin(), seq.end(), 1);
  return cycle_monomial(seq);
}

struct GraphComponent {
  enum class Kind { Cycle, Acyclic, Other };
  std::vector<Vertex> vertices;
  std::size_t edge_count = 0;
  Kind kind = Kind::Acyclic;
};

struct CycleStructure {
  std::vector<GraphComponent> components;
  std::vector<std::size_t> cycle_lengths;  // sorted lengths of components that are exactly cycles
  std::size_t acyclic_components = 0;
  std::optional<std::size_t> shortest_cycle;  // girth of the whole graph

  /// True iff the graph is one cycle through every one of its vertices.
  bool is_single_cycle() const noexcept {
    return components.size() == 1 && components.front().kind == GraphComponent::Kind::Cycle;
  }
};

/// Connected components of G_m with their classification, and the girth.
inline CycleStructure cycle_structure(const EdgeMonomial& m) {
  CycleStructure out;
  const auto n = static_cast<std::size_t>(m.max_index());
  std::vector<std::vector<Vertex>> adj(n + 1);
  for (const auto& e : m.variables()) {
    adj[static_cast<std::size_t>(e.u())].push_back(e.v());
    adj[static_cast<std::size_t>(e.v())].push_back(e.u());
  }
  std::vector<int> comp(n + 1, -1);
  for (Vertex start = 1; static_cast<std::size_t>(start) <= n; ++start) {
    if (adj[static_cast<std::size_t>(start)].empty() || comp[static_cast<std::size_t>(start)] >= 0) continue;
    GraphComponent c;
    std::vector<Vertex> stack{start};
    comp[static_cast<std::size_t>(start)] = static_cast<int>(out.components.size());
    std::size_t degree_sum = 0;
    bool all_two = true;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      c.vertices.push_back(v);
      const auto& nb = adj[static_cast<std::size_t>(v)];
      degree_sum += nb.size();
      all_two = all_two && nb.size() == 2;
      for (Vertex w : nb) {
        if (comp[static_cast<std::size_t>(w)] < 0) {
          comp[static_cast<std::size_t>(w)] = static_cast<int>(out.components.size());
          stack.push_back(w);
        }
      }
    }
    std::sort(c.vertices.begin(), c.vertices.end());
    c.edge_count = degree_sum / 2;
    if (c.edge_count + 1 == c.vertices.size()) {
      c.kind = GraphComponent::Kind::Acyclic;
      ++out.acyclic_components;
    } else if (all_two) {
      c.kind = GraphComponent::Kind::Cycle;
      out.cycle_lengths.push_back(c.vertices.size());
    } else {
      c.kind = GraphComponent::Kind::Other;
    }
    out.components.push_back(std::move(c));
  }
  std::sort(out.cycle_lengths.begin(), out.cycle_lengths.end());

  // Girth by BFS from every vertex; graphs here have a handful of vertices.
  for (Vertex s = 1; static_cast<std::size_t>(s) <= n; ++s) {
    if (adj[static_cast<std::size_t>(s)].empty()) continue;
    std::vector<int> dist(n + 1, -1), parent(n + 1, 0);
    std::vector<Vertex> queue{s};
    dist[static_cast<std::size_t>(s)] = 0;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      Vertex v = queue[qi];
      for (Vertex w : adj[static_cast<std::size_t>(v)]) {
        const auto wi = static_cast<std::size_t>(w);
        if (dist[wi] < 0) {
          dist[wi] = dist[static_cast<std::size_t>(v)] + 1;
          parent[wi] = v;
          queue.push_back(w);
        } else if (parent[static_cast<std::size_t>(v)] != w) {
          auto len = static_cast<std::size_t>(dist[wi] + dist[static_cast<std::size_t>(v)] + 1);
          if (!out.shortest_cycle || len < *out.shortest_cycle) out.shortest_cycle = len;
        }
      }
    }
  }
  return out;
}

/// Relabels every index through perm (perm[i] is the new label of i; perm[0] unused).
inline EdgeMonomial relabel(const EdgeMonomial& m, const std::vector<Vertex>& perm) {
  std::vector<Edge> edges;
  edges.reserve(m.degree());
  for (const auto& e : m.variables()) {
    edges.emplace_back(perm[static_cast<std::size_t>(e.u())], perm[static_cast<std::size_t>(e.v())]);
  }
  return EdgeMonomial(std::move(edges));
}

inline EdgePolynomial relabel(const EdgePolynomial& f, const std::vector<Vertex>& perm, int universe) {
  std::vector<EdgeMonomial> terms;
  terms.reserve(f.term_count());
  for (const auto& t : f.terms()) terms.push_back(relabel(t, perm));
  return EdgePolynomial(universe, std::move(terms));
}

}  // namespace skewchain
