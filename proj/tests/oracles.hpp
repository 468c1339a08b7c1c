// Independent reference implementations used only by the tests.
#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "termcheck/checker.hpp"
#include "termcheck/relations.hpp"

namespace termcheck::oracle {

// Operation tables indexed by Relation (Less, Equal, Unknown), written out
// cell by cell rather than derived from rel_plus / rel_times.
inline constexpr Relation kPlusTable[3][3] = {
    {Relation::Less, Relation::Less, Relation::Less},
    {Relation::Less, Relation::Equal, Relation::Equal},
    {Relation::Less, Relation::Equal, Relation::Unknown},
};
inline constexpr Relation kTimesTable[3][3] = {
    {Relation::Less, Relation::Less, Relation::Unknown},
    {Relation::Less, Relation::Equal, Relation::Unknown},
    {Relation::Unknown, Relation::Unknown, Relation::Unknown},
};

inline Relation plus(Relation a, Relation b) { return kPlusTable[int(a)][int(b)]; }
inline Relation times(Relation a, Relation b) { return kTimesTable[int(a)][int(b)]; }

using Grid = std::vector<std::vector<Relation>>;

inline Grid grid_of(const CallMatrix& m) {
  Grid g(m.rows(), std::vector<Relation>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) g[i][j] = m.at(i, j);
  return g;
}

// Textbook triple loop over the literal tables.
inline Grid multiply(const Grid& a, const Grid& b, std::size_t inner, std::size_t cols) {
  Grid c(a.size(), std::vector<Relation>(cols, Relation::Unknown));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      Relation acc = Relation::Unknown;
      for (std::size_t k = 0; k < inner; ++k) acc = plus(acc, times(a[i][k], b[k][j]));
      c[i][j] = acc;
    }
  return c;
}

inline CallMatrix to_matrix(const Grid& g, std::size_t cols) { return CallMatrix::from_rows(g, cols); }

// Random matrix with at most one known entry per row.
inline CallMatrix random_call_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols) {
  std::vector<RelVector> g(rows, RelVector(cols, Relation::Unknown));
  if (cols > 0) {
    std::uniform_int_distribution<std::size_t> col(0, cols - 1);
    std::uniform_int_distribution<int> rel(0, 2);
    for (auto& row : g) row[col(rng)] = static_cast<Relation>(rel(rng));
  }
  return CallMatrix::from_rows(g, cols);
}

struct RandomGraph {
  std::vector<std::size_t> arity;
  std::vector<Call> base;

  CallGraph graph() const {
    std::vector<FunctionInfo> vs;
    for (std::size_t i = 0; i < arity.size(); ++i) {
      FunctionInfo f;
      f.id = i;
      f.display_name = "f" + std::to_string(i);
      f.arity = arity[i];
      f.declaration_order = i;
      vs.push_back(std::move(f));
    }
    CallGraph g(std::move(vs));
    for (const auto& c : base) g.add_edge(c);
    return g;
  }
};

// Up to max_vertices vertices of arity <= max_arity, up to max_edges base calls.
inline RandomGraph random_graph(std::mt19937& rng, std::size_t max_vertices = 4, std::size_t max_arity = 3,
                                std::size_t max_edges = 6) {
  RandomGraph g;
  std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_vertices)(rng);
  for (std::size_t i = 0; i < n; ++i) g.arity.push_back(std::uniform_int_distribution<std::size_t>(0, max_arity)(rng));
  std::size_t m = std::uniform_int_distribution<std::size_t>(0, max_edges)(rng);
  std::uniform_int_distribution<std::size_t> vertex(0, n - 1);
  for (std::size_t k = 0; k < m; ++k) {
    std::size_t from = vertex(rng), to = vertex(rng);
    g.base.push_back(Call{from, to, random_call_matrix(rng, g.arity[to], g.arity[from]), {from, to}});
  }
  return g;
}

// All products c1 o ... o cn of base edges along walks of length <= max_len,
// one layer of walk lengths at a time. A layer is determined by the previous
// one, so enumeration stops once a layer repeats.
inline std::set<EdgeKey> enumerate_products(const std::vector<Call>& base, const std::vector<std::size_t>& arity,
                                            std::size_t max_len) {
  std::set<EdgeKey> out;
  std::set<EdgeKey> layer;
  for (const auto& e : base) layer.insert(edge_key(e));
  std::set<std::set<EdgeKey>> seen_layers;
  for (std::size_t len = 1; len <= max_len && !layer.empty(); ++len) {
    if (!seen_layers.insert(layer).second) break;
    out.insert(layer.begin(), layer.end());
    std::set<EdgeKey> next;
    for (const auto& [from, to, m] : layer) {
      for (const auto& e : base) {
        if (e.caller != to) continue;
        Grid prod = multiply(grid_of(e.matrix), grid_of(m), arity[to], arity[from]);
        next.insert(EdgeKey{from, e.callee, to_matrix(prod, arity[from])});
      }
    }
    layer = std::move(next);
  }
  return out;
}

// Cap on walk length: one more than the number of possible edge keys.
inline std::size_t pigeonhole_bound(const std::vector<std::size_t>& arity) {
  std::size_t pairs = arity.size() * arity.size();
  std::size_t most = 1;
  for (auto a : arity)
    for (auto b : arity) {
      // rows: b entries, each row: Unknown or one of 2 known values in a columns.
      std::size_t per_row = 1 + 2 * a;
      std::size_t total = 1;
      for (std::size_t r = 0; r < b; ++r) total *= per_row;
      most = std::max(most, total);
    }
  return pairs * most + 1;
}

// Does any full permutation satisfy the lexicographic descent condition?
inline bool exists_def1_order(const std::vector<RelVector>& rows, std::size_t arity) {
  std::vector<std::size_t> perm(arity);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool all = true;
    for (const auto& r : rows) {
      bool ok = false;
      for (std::size_t k = 0; k < arity; ++k) {
        if (r[perm[k]] == Relation::Less) {
          ok = true;
          break;
        }
        if (r[perm[k]] != Relation::Equal) break;
      }
      if (!ok) {
        all = false;
        break;
      }
    }
    if (all) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Every vector in R^n.
inline std::vector<RelVector> all_vectors(std::size_t n) {
  std::vector<RelVector> out{RelVector{}};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<RelVector> next;
    for (const auto& v : out)
      for (Relation r : kAllRelations) {
        auto w = v;
        w.push_back(r);
        next.push_back(std::move(w));
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace termcheck::oracle
