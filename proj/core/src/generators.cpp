#include <algorithm>
#include <cstdint>
#include <functional>

#include "rvc/errors.hpp"
#include "rvc/harness.hpp"

namespace rvc {

namespace {

bool mask_connected(int n, const std::vector<VertexPair>& slots, std::uint32_t mask) {
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
  for (std::size_t e = 0; e < slots.size(); ++e) {
    if ((mask >> e) & 1u) {
      adj[static_cast<std::size_t>(slots[e].u) - 1] |= 1u << (slots[e].v - 1);
      adj[static_cast<std::size_t>(slots[e].v) - 1] |= 1u << (slots[e].u - 1);
    }
  }
  std::uint32_t seen = 1, frontier = 1;
  while (frontier != 0) {
    std::uint32_t next = 0;
    for (int v = 0; v < n; ++v) {
      if ((frontier >> v) & 1u) next |= adj[static_cast<std::size_t>(v)];
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == (n == 32 ? ~0u : (1u << n) - 1);
}

}  // namespace

void for_each_connected_graph(int n, const std::function<void(const Graph&)>& fn) {
  if (n < 1) throw InvalidInput("graph order must be at least 1");
  if (n > kMaxEnumeratedOrder) {
    throw SizeLimitError("graph enumeration supports n <= " + std::to_string(kMaxEnumeratedOrder));
  }
  std::vector<VertexPair> slots;
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = u + 1; v <= n; ++v) slots.push_back({u, v});
  }
  const std::uint32_t limit = std::uint32_t{1} << slots.size();
  std::vector<VertexPair> edges;
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    if (!mask_connected(n, slots, mask)) continue;
    edges.clear();
    for (std::size_t e = 0; e < slots.size(); ++e) {
      if ((mask >> e) & 1u) edges.push_back(slots[e]);
    }
    fn(build_graph(n, edges));
  }
}

std::vector<Graph> enumerate_connected_graphs(int n) {
  std::vector<Graph> out;
  for_each_connected_graph(n, [&](const Graph& g) { out.push_back(g); });
  return out;
}

namespace {

// All clauses over x_1..x_n of the admitted widths, as sorted literal lists.
std::vector<Clause> clause_pool(int n, int min_width, int max_width) {
  std::vector<Clause> pool;
  for (int w = min_width; w <= max_width; ++w) {
    // Variable subsets of size w in lexicographic order, then sign patterns.
    std::vector<int> vars(static_cast<std::size_t>(w));
    std::function<void(int, int)> pick = [&](int pos, int from) {
      if (pos == w) {
        for (int signs = 0; signs < (1 << w); ++signs) {
          Clause c;
          for (int i = 0; i < w; ++i) c.push_back({vars[static_cast<std::size_t>(i)], ((signs >> (w - 1 - i)) & 1) != 0});
          pool.push_back(std::move(c));
        }
        return;
      }
      for (int v = from; v <= n; ++v) {
        vars[static_cast<std::size_t>(pos)] = v;
        pick(pos + 1, v + 1);
      }
    };
    pick(0, 1);
  }
  return pool;
}

bool admissible(int n, const std::vector<Clause>& clauses, bool normalized_only) {
  std::vector<int> pos(static_cast<std::size_t>(n) + 1, 0), neg(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& c : clauses) {
    for (const auto& lit : c) ++(lit.negated ? neg : pos)[static_cast<std::size_t>(lit.var)];
  }
  for (int v = 1; v <= n; ++v) {
    const auto i = static_cast<std::size_t>(v);
    if (pos[i] + neg[i] == 0) return false;
    if (normalized_only && (pos[i] == 0 || neg[i] == 0)) return false;
  }
  return true;
}

}  // namespace

void for_each_small_cnf(const CnfFamily& family, const std::function<void(const CnfFormula&)>& fn) {
  if (family.max_vars > kMaxEnumeratedVars || family.max_clauses > kMaxEnumeratedClauses) {
    throw SizeLimitError("formula enumeration supports at most " + std::to_string(kMaxEnumeratedVars) +
                         " variables and " + std::to_string(kMaxEnumeratedClauses) + " clauses");
  }
  if (family.min_width < 1 || family.max_width > 3 || family.min_width > family.max_width) {
    throw InvalidInput("clause widths must satisfy 1 <= min <= max <= 3");
  }
  for (int n = 1; n <= family.max_vars; ++n) {
    const auto pool = clause_pool(n, family.min_width, std::min(family.max_width, n));
    const int p = static_cast<int>(pool.size());
    for (int size = 1; size <= family.max_clauses && size <= p; ++size) {
      std::vector<int> idx(static_cast<std::size_t>(size));
      for (int i = 0; i < size; ++i) idx[static_cast<std::size_t>(i)] = i;
      for (;;) {
        std::vector<Clause> clauses;
        for (int i : idx) clauses.push_back(pool[static_cast<std::size_t>(i)]);
        if (admissible(n, clauses, family.normalized_only)) fn(CnfFormula(n, std::move(clauses)));
        // Next combination of `size` indices out of p.
        int i = size - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == p - size + i) --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < size; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j) - 1] + 1;
      }
    }
  }
}

std::vector<CnfFormula> enumerate_small_cnf(int max_vars, int max_clauses, bool normalized_only) {
  std::vector<CnfFormula> out;
  for_each_small_cnf({max_vars, max_clauses, normalized_only, 3, 3},
                     [&](const CnfFormula& f) { out.push_back(f); });
  return out;
}

CnfFormula all_sign_patterns_formula() {
  std::vector<std::vector<int>> clauses;
  for (int signs = 0; signs < 8; ++signs) {
    clauses.push_back({(signs & 4) ? -1 : 1, (signs & 2) ? -2 : 2, (signs & 1) ? -3 : 3});
  }
  return make_formula(3, clauses);
}

}  // namespace rvc
