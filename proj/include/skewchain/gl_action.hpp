#pragma once

// Action of GL generators on the edge algebra, the Lie derivations e_{i,j},
// and the equivariant map phi: x_{i,j} -> x_i y_j + x_j y_i.
//
// The substitution x_{a,b} = e_a ^ e_b -> g(e_a) ^ g(e_b) is expanded here
// rather than transcribed from any hand-written expansion of E_{2,1}(m).

#include <stdexcept>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "skewchain/ring.hpp"

namespace skewchain::gl {

/// e_src -> e_src + e_add, all other basis vectors fixed.
struct Transvection {
  Vertex src;
  Vertex add;
  friend bool operator==(const Transvection&, const Transvection&) = default;
};

/// Swaps basis vectors e_i and e_j.
struct Transposition {
  Vertex i;
  Vertex j;
  friend bool operator==(const Transposition&, const Transposition&) = default;
};

using GroupGenerator = std::variant<Transvection, Transposition>;

inline std::string to_string(const GroupGenerator& g) {
  if (const auto* t = std::get_if<Transvection>(&g)) {
    return "E(" + std::to_string(t->src) + "+=" + std::to_string(t->add) + ")";
  }
  const auto& p = std::get<Transposition>(g);
  return "swap(" + std::to_string(p.i) + "," + std::to_string(p.j) + ")";
}

inline void validate(const GroupGenerator& g, int universe) {
  auto check = [&](Vertex a, Vertex b) {
    if (a == b) throw std::invalid_argument("group generator indices must differ");
    if (a < 1 || b < 1 || a > universe || b > universe) {
      throw std::out_of_range("group generator index outside 1.." + std::to_string(universe));
    }
  };
  std::visit([&](const auto& x) {
    if constexpr (std::is_same_v<std::decay_t<decltype(x)>, Transvection>) {
      check(x.src, x.add);
    } else {
      check(x.i, x.j);
    }
  }, g);
}

/// Every transvection and transposition on 1..N, transvections first.
inline std::vector<GroupGenerator> all_group_generators(int universe) {
  std::vector<GroupGenerator> out;
  for (Vertex s = 1; s <= universe; ++s) {
    for (Vertex t = 1; t <= universe; ++t) {
      if (s != t) out.emplace_back(Transvection{s, t});
    }
  }
  for (Vertex i = 1; i <= universe; ++i) {
    for (Vertex j = i + 1; j <= universe; ++j) out.emplace_back(Transposition{i, j});
  }
  return out;
}

namespace detail {

inline EdgePolynomial image_of_variable(const Transvection& t, const Edge& e, int universe) {
  // (e_a + [a==src] e_add) ^ (e_b + [b==src] e_add); e_c ^ e_c = 0.
  std::vector<EdgeMonomial> terms{EdgeMonomial{e}};
  Vertex other = 0;
  if (e.u() == t.src) other = e.v();
  if (e.v() == t.src) other = e.u();
  if (other != 0 && other != t.add) terms.push_back(EdgeMonomial{Edge(t.add, other)});
  return EdgePolynomial(universe, std::move(terms));
}

inline Vertex swap_index(const Transposition& p, Vertex v) {
  if (v == p.i) return p.j;
  if (v == p.j) return p.i;
  return v;
}

}  // namespace detail

inline EdgePolynomial apply_generator(const GroupGenerator& g, const EdgePolynomial& f) {
  validate(g, f.universe());
  const int universe = f.universe();
  if (const auto* p = std::get_if<Transposition>(&g)) {
    std::vector<EdgeMonomial> terms;
    terms.reserve(f.term_count());
    for (const auto& m : f.terms()) {
      std::vector<Edge> edges;
      edges.reserve(m.degree());
      for (const auto& e : m.variables()) {
        edges.emplace_back(detail::swap_index(*p, e.u()), detail::swap_index(*p, e.v()));
      }
      terms.emplace_back(std::move(edges));
    }
    return EdgePolynomial(universe, std::move(terms));
  }
  const auto& t = std::get<Transvection>(g);
  EdgePolynomial out(universe);
  for (const auto& m : f.terms()) {
    EdgePolynomial image = EdgePolynomial::one(universe);
    for (const auto& e : m.variables()) {
      image = poly_mul(image, detail::image_of_variable(t, e, universe));
      if (image.is_zero()) break;
    }
    out += image;
  }
  return out;
}

/// The derivation sending x_{a,from} to x_{a,to} and killing variables
/// that do not involve `from`, extended by the Leibniz rule.
struct LieDerivation {
  Vertex from;
  Vertex to;
};

inline EdgePolynomial apply_derivation(const LieDerivation& d, const EdgePolynomial& f) {
  if (d.from == d.to) throw std::invalid_argument("derivation indices must differ");
  if (d.to < 1 || d.to > f.universe() || d.from < 1) {
    throw std::out_of_range("derivation index outside 1.." + std::to_string(f.universe()));
  }
  std::vector<EdgeMonomial> terms;
  for (const auto& m : f.terms()) {
    const auto& vars = m.variables();
    for (std::size_t k = 0; k < vars.size(); ++k) {
      if (!vars[k].touches(d.from)) continue;
      const Vertex other = vars[k].other(d.from);
      if (other == d.to) continue;  // would be a loop
      const Edge replaced(other, d.to);
      std::vector<Edge> rest;
      rest.reserve(vars.size());
      bool square = false;
      for (std::size_t l = 0; l < vars.size(); ++l) {
        if (l == k) continue;
        if (vars[l] == replaced) square = true;
        rest.push_back(vars[l]);
      }
      if (square) continue;
      rest.push_back(replaced);
      terms.emplace_back(std::move(rest));
    }
  }
  return EdgePolynomial(f.universe(), std::move(terms));
}

/// phi(x_{i,j}) = x_i y_j + x_j y_i, extended multiplicatively.
inline PairedPolynomial phi(const EdgePolynomial& f) {
  const int universe = f.universe();
  PairedPolynomial out(universe);
  for (const auto& m : f.terms()) {
    PairedPolynomial image = PairedPolynomial::one(universe);
    for (const auto& e : m.variables()) {
      PairedPolynomial factor(universe, {PairedMonomial{PairedGenerator::x(e.u()), PairedGenerator::y(e.v())},
                                         PairedMonomial{PairedGenerator::x(e.v()), PairedGenerator::y(e.u())}});
      image = poly_mul(image, factor);
      if (image.is_zero()) break;
    }
    out += image;
  }
  return out;
}

/// Simultaneous swap of x_i<->x_j and y_i<->y_j.
inline PairedPolynomial apply_transposition(const Transposition& p, const PairedPolynomial& f) {
  std::vector<PairedMonomial> terms;
  for (const auto& m : f.terms()) {
    std::vector<PairedGenerator> gens;
    for (const auto& g : m.variables()) gens.emplace_back(g.side(), detail::swap_index(p, g.index()));
    terms.emplace_back(std::move(gens));
  }
  return PairedPolynomial(f.universe(), std::move(terms));
}

}  // namespace skewchain::gl
