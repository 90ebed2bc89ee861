#include "rvc/reductions.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "rvc/errors.hpp"

namespace rvc {

namespace {

std::string sub(std::string_view stem, int i) { return std::string(stem) + "_{" + std::to_string(i) + "}"; }

std::string sup_sub(std::string_view stem, int j, int a, int b) {
  return std::string(stem) + "^" + std::to_string(j) + "_{" + std::to_string(a) + "," + std::to_string(b) + "}";
}

std::string pair_label(std::string_view stem, VertexPair p) {
  return std::string(stem) + "_{(" + std::to_string(p.u) + "," + std::to_string(p.v) + ")}";
}

void require_reduction(const ReductionCertificate& cert, std::string_view name) {
  if (cert.reduction != name) {
    throw InvalidInput("certificate belongs to '" + cert.reduction + "', expected '" + std::string(name) + "'");
  }
}

const CnfFormula& require_formula(const ReductionCertificate& cert) {
  if (!cert.formula) throw InvalidInput("certificate carries no source formula");
  return *cert.formula;
}

void require_vertex(const Graph& g, Vertex v, const char* what) {
  if (!g.contains(v)) throw InvalidInput(std::string(what) + ": vertex " + std::to_string(v) + " is not in the graph");
}

}  // namespace

// ---------------------------------------------------------------------------

StToGlobal st_to_global(const ColoredGraph& cg, Vertex s, Vertex t) {
  const Graph& g = cg.graph();
  require_vertex(g, s, "st_to_global");
  require_vertex(g, t, "st_to_global");
  if (s == t) throw InvalidInput("st_to_global: s and t coincide");
  require_connected(g, "st_to_global");
  const int k = cg.coloring().palette_size();
  if (k == 0) throw InvalidInput("st_to_global: input coloring has an empty palette");

  const int n = g.order();
  const Vertex s2 = n + 1, t2 = n + 2, a = n + 3, b = n + 4;
  const Color c1 = k + 1, c2 = k + 2;

  std::vector<VertexPair> edges = g.edges();
  edges.push_back({s, s2});
  edges.push_back({t, t2});
  for (Vertex v = 1; v <= n; ++v) {
    edges.push_back({v, a});
    edges.push_back({v, b});
  }

  const auto base = cg.coloring().colors();
  std::vector<Color> colors(base.begin(), base.end());
  colors[static_cast<std::size_t>(s) - 1] = c1;
  colors[static_cast<std::size_t>(t) - 1] = c2;
  colors.insert(colors.end(), {c1, c2, c1, c2});

  StToGlobal out{ColoredGraph(build_graph(n + 4, edges), Coloring(k + 2, std::move(colors))), {}};
  auto& cert = out.certificate;
  cert.reduction = "st-to-global";
  for (Vertex v = 1; v <= n; ++v) {
    cert.roles.emplace_back(v == s ? "s" : v == t ? "t" : sub("v", v), v);
  }
  cert.roles.emplace_back("s'", s2);
  cert.roles.emplace_back("t'", t2);
  cert.roles.emplace_back("a", a);
  cert.roles.emplace_back("b", b);
  cert.colors = {{"c_1", c1}, {"c_2", c2}};
  return out;
}

// ---------------------------------------------------------------------------

namespace {

// Per-variable color block: alpha^j_{a,b} = base + (a-1) * l + (b-1).
struct ColorBlocks {
  std::vector<OccurrenceCount> occ;
  std::vector<int> base;

  explicit ColorBlocks(std::vector<OccurrenceCount> profile) : occ(std::move(profile)) {
    int next = 2;
    for (const auto& o : occ) {
      base.push_back(next);
      next += o.positive * o.negative;
    }
    palette = next - 1;
  }

  Color alpha(int j, int a, int b) const {
    const auto& o = occ[static_cast<std::size_t>(j) - 1];
    return base[static_cast<std::size_t>(j) - 1] + (a - 1) * o.negative + (b - 1);
  }

  int palette = 1;
};

}  // namespace

SatToSt sat_to_st(const CnfFormula& f) {
  auto profile = occurrence_profile(f);
  for (std::size_t j = 0; j < profile.size(); ++j) {
    const bool one_sided = (profile[j].positive == 0) != (profile[j].negative == 0);
    if (one_sided) {
      throw InvalidInput("sat_to_st: variable " + std::to_string(j + 1) +
                         " occurs with one polarity only; normalize the formula first");
    }
  }
  const ColorBlocks blocks(profile);

  std::vector<Color> colors{1};  // s
  std::vector<VertexPair> edges;
  ReductionCertificate cert;
  cert.reduction = "sat-to-st";
  cert.roles.emplace_back("s", 1);

  std::vector<int> seen_pos(profile.size(), 0), seen_neg(profile.size(), 0);
  std::vector<Vertex> prev_lasts{1};
  for (const auto& clause : f.clauses()) {
    std::vector<Vertex> firsts, lasts;
    for (const auto& lit : clause) {
      const int j = lit.var;
      const auto& o = profile[static_cast<std::size_t>(j) - 1];
      // Positive occurrence a walks v^j_{a,1..l}; negative occurrence b walks vbar^j_{1..k,b}.
      const int index = lit.negated ? ++seen_neg[static_cast<std::size_t>(j) - 1]
                                    : ++seen_pos[static_cast<std::size_t>(j) - 1];
      const int len = lit.negated ? o.positive : o.negative;
      const Vertex first = static_cast<Vertex>(colors.size()) + 1;
      for (int step = 1; step <= len; ++step) {
        const int a = lit.negated ? step : index;
        const int b = lit.negated ? index : step;
        const Vertex v = static_cast<Vertex>(colors.size()) + 1;
        colors.push_back(blocks.alpha(j, a, b));
        cert.roles.emplace_back(sup_sub(lit.negated ? "vbar" : "v", j, a, b), v);
        if (step > 1) edges.push_back({v - 1, v});
      }
      firsts.push_back(first);
      lasts.push_back(static_cast<Vertex>(colors.size()));
    }
    for (Vertex p : prev_lasts) {
      for (Vertex q : firsts) edges.push_back({p, q});
    }
    prev_lasts = std::move(lasts);
  }
  const Vertex t = static_cast<Vertex>(colors.size()) + 1;
  colors.push_back(1);
  cert.roles.emplace_back("t", t);
  for (Vertex p : prev_lasts) edges.push_back({p, t});

  cert.colors.emplace_back("alpha_0", 1);
  for (std::size_t j = 1; j <= profile.size(); ++j) {
    const auto& o = profile[j - 1];
    for (int a = 1; a <= o.positive; ++a) {
      for (int b = 1; b <= o.negative; ++b) {
        const int jj = static_cast<int>(j);
        cert.colors.emplace_back(sup_sub("alpha", jj, a, b), blocks.alpha(jj, a, b));
      }
    }
  }
  cert.occurrences = profile;
  cert.formula = f;

  SatToSt out;
  out.gadget = ColoredGraph(build_graph(t, edges), Coloring(blocks.palette, std::move(colors)));
  out.s = 1;
  out.t = t;
  out.certificate = std::move(cert);
  return out;
}

Assignment decode_st_witness(const ReductionCertificate& cert, const Path& q) {
  require_reduction(cert, "sat-to-st");
  const CnfFormula& f = require_formula(cert);
  if (static_cast<int>(cert.occurrences.size()) != f.num_vars()) {
    throw InvalidInput("certificate occurrence profile does not match its formula");
  }
  const Vertex s = cert.role("s"), t = cert.role("t");
  if (q.vertices.size() < 2 || q.vertices.front() != s || q.vertices.back() != t) {
    throw InvalidInput("decode: witness is not an s-t path");
  }

  std::map<Vertex, Color> color_of;
  for (int j = 1; j <= f.num_vars(); ++j) {
    const auto& o = cert.occurrences[static_cast<std::size_t>(j) - 1];
    for (int a = 1; a <= o.positive; ++a) {
      for (int b = 1; b <= o.negative; ++b) {
        const Color c = cert.color(sup_sub("alpha", j, a, b));
        color_of[cert.role(sup_sub("v", j, a, b))] = c;
        color_of[cert.role(sup_sub("vbar", j, a, b))] = c;
      }
    }
  }

  std::set<Vertex> on_path{q.vertices.begin(), q.vertices.end()};
  if (on_path.size() != q.vertices.size()) throw InvalidInput("decode: witness repeats a vertex");
  std::set<Color> used;
  for (std::size_t i = 1; i + 1 < q.vertices.size(); ++i) {
    const auto it = color_of.find(q.vertices[i]);
    if (it == color_of.end()) throw InvalidInput("decode: witness uses unnamed vertex " + std::to_string(q.vertices[i]));
    if (!used.insert(it->second).second) throw InvalidInput("decode: witness is not rainbow");
  }

  // A path of the gadget counts as traversed when all of its vertices lie on q.
  std::vector<int> value(static_cast<std::size_t>(f.num_vars()), -1);
  for (int j = 1; j <= f.num_vars(); ++j) {
    const auto& o = cert.occurrences[static_cast<std::size_t>(j) - 1];
    auto set_value = [&](int v) {
      auto& slot = value[static_cast<std::size_t>(j) - 1];
      if (slot >= 0 && slot != v) {
        throw std::logic_error("decode: witness traverses both polarities of x" + std::to_string(j));
      }
      slot = v;
    };
    for (int a = 1; a <= o.positive; ++a) {
      bool whole = true;
      for (int b = 1; b <= o.negative && whole; ++b) whole = on_path.count(cert.role(sup_sub("v", j, a, b))) > 0;
      if (whole) set_value(1);
    }
    for (int b = 1; b <= o.negative; ++b) {
      bool whole = true;
      for (int a = 1; a <= o.positive && whole; ++a) whole = on_path.count(cert.role(sup_sub("vbar", j, a, b))) > 0;
      if (whole) set_value(0);
    }
  }

  std::vector<bool> bits;
  for (int v : value) bits.push_back(v == 1);
  Assignment result(std::move(bits));
  if (!evaluate(f, result)) throw InvalidInput("decode: witness does not yield a satisfying assignment");
  return result;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<VertexPair> complement_pairs(int n, const PairSet& p) {
  std::vector<VertexPair> out;
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = u + 1; v <= n; ++v) {
      if (!p.contains({u, v})) out.push_back({u, v});
    }
  }
  return out;
}

void require_pairs_in(const Graph& g, const std::vector<VertexPair>& pairs, const char* what) {
  for (const auto& q : pairs) {
    require_vertex(g, q.u, what);
    require_vertex(g, q.v, what);
  }
}

}  // namespace

SubsetToRvc2 subset_to_rvc2(const Graph& g, const PairSet& p) {
  require_connected(g, "subset_to_rvc2");
  require_pairs_in(g, p.pairs(), "subset_to_rvc2");
  const int n = g.order();
  const auto outside = complement_pairs(n, p);
  const auto q = static_cast<int>(outside.size());
  const Vertex s = 2 * n + 2 * q + 1, t = s + 1;

  SubsetToRvc2 out;
  auto& cert = out.certificate;
  cert.reduction = "subset-to-rvc2";
  std::vector<VertexPair> edges = g.edges();
  for (Vertex v = 1; v <= n; ++v) cert.roles.emplace_back(sub("v", v), v);
  for (Vertex v = 1; v <= n; ++v) {
    const Vertex xv = n + v;
    edges.insert(edges.end(), {{v, xv}, {s, xv}, {t, xv}});
    cert.roles.emplace_back(sub("x", v), xv);
  }
  for (int i = 0; i < q; ++i) {
    const auto [u, v] = outside[static_cast<std::size_t>(i)];
    const Vertex x1 = 2 * n + 2 * i + 1, x2 = x1 + 1;
    edges.insert(edges.end(), {{u, x1}, {x1, x2}, {x2, v}, {s, x1}, {t, x2}});
    cert.roles.emplace_back(pair_label("x1", {u, v}), x1);
    cert.roles.emplace_back(pair_label("x2", {u, v}), x2);
  }
  cert.roles.emplace_back("s", s);
  cert.roles.emplace_back("t", t);
  out.gadget = build_graph(t, edges);
  return out;
}

Coloring extend_subset_witness(const Graph& g, const PairSet& p, const Coloring& c) {
  const int n = g.order();
  if (c.vertex_count() != n || c.palette_size() > 2 || c.palette_size() < 1) {
    throw InvalidInput("extend_subset_witness: expected a coloring of the input graph with at most 2 colors");
  }
  const auto q = complement_pairs(n, p).size();
  const auto base = c.colors();
  std::vector<Color> colors(base.begin(), base.end());
  colors.insert(colors.end(), static_cast<std::size_t>(n), 1);
  for (std::size_t i = 0; i < q; ++i) colors.insert(colors.end(), {1, 2});
  colors.insert(colors.end(), {2, 2});
  return Coloring(2, std::move(colors));
}

// ---------------------------------------------------------------------------

DiffpairsToSubset diffpairs_to_subset(const Graph& g, const Pairing& pairing) {
  require_connected(g, "diffpairs_to_subset");
  const auto partners = pairing.pairs();
  require_pairs_in(g, partners, "diffpairs_to_subset");
  if (partners.empty()) throw InvalidInput("diffpairs_to_subset: the pairing is empty");
  const int n = g.order();
  const Vertex s = n + 6 * static_cast<int>(partners.size()) + 1;

  DiffpairsToSubset out;
  auto& cert = out.certificate;
  cert.reduction = "diffpairs-to-subset";
  std::vector<VertexPair> edges = g.edges();
  std::vector<VertexPair> required = PairSet::all_pairs(n).pairs();
  for (Vertex v = 1; v <= n; ++v) cert.roles.emplace_back(sub("v", v), v);
  for (std::size_t i = 0; i < partners.size(); ++i) {
    const auto [v, w] = partners[i];
    const Vertex base = n + 6 * static_cast<int>(i);
    auto x = [&](int j) { return base + j; };
    for (int j = 1; j <= 6; ++j) {
      cert.roles.emplace_back("x^" + std::to_string(j) + pair_label("", {v, w}), x(j));
    }
    edges.insert(edges.end(), {{s, x(5)}, {x(5), v}, {v, x(1)}, {x(1), x(2)}, {x(2), x(3)}, {x(3), x(4)},
                               {x(4), w}, {w, x(6)}, {x(6), s}});
    required.insert(required.end(), {{x(5), x(2)}, {v, x(3)}, {x(1), x(4)}, {x(2), w}, {x(3), x(6)}});
  }
  cert.roles.emplace_back("s", s);
  out.gadget = build_graph(s, edges);
  out.pairs = PairSet(std::move(required));
  return out;
}

Coloring extend_diffpairs_witness(const Graph& g, const Pairing& pairing, const Coloring& c) {
  const int n = g.order();
  if (c.vertex_count() != n || c.palette_size() > 2 || c.palette_size() < 1) {
    throw InvalidInput("extend_diffpairs_witness: expected a coloring of the input graph with at most 2 colors");
  }
  const auto base = c.colors();
  std::vector<Color> colors(base.begin(), base.end());
  for (const auto& [v, w] : pairing.pairs()) {
    const Color cv = c[v], cw = c[w];
    colors.insert(colors.end(), {cw, cv, cw, cv, 1, 1});
  }
  colors.push_back(1);
  return Coloring(2, std::move(colors));
}

// ---------------------------------------------------------------------------

SatToDiffpairs sat_to_diffpairs(const CnfFormula& f) {
  const int m = f.num_clauses(), n = f.num_vars();
  if (m == 0) throw InvalidInput("sat_to_diffpairs: formula has no clauses");
  auto clause_v = [](int i) { return i; };
  auto pos_v = [m](int i) { return m + 2 * i - 1; };
  auto neg_v = [m](int i) { return m + 2 * i; };
  const Vertex s = m + 2 * n + 1, t = s + 1;

  SatToDiffpairs out;
  auto& cert = out.certificate;
  cert.reduction = "sat-to-diffpairs";
  std::vector<VertexPair> edges;
  for (int i = 1; i <= m; ++i) {
    for (int j = i + 1; j <= m; ++j) edges.push_back({clause_v(i), clause_v(j)});
  }
  std::vector<Vertex> first, second;
  for (int i = 1; i <= n; ++i) {
    edges.push_back({t, pos_v(i)});
    edges.push_back({t, neg_v(i)});
    first.push_back(pos_v(i));
    second.push_back(neg_v(i));
  }
  for (int i = 1; i <= m; ++i) {
    for (const auto& lit : f.clauses()[static_cast<std::size_t>(i) - 1]) {
      edges.push_back({lit.negated ? neg_v(lit.var) : pos_v(lit.var), clause_v(i)});
    }
  }
  edges.push_back({s, t});

  for (int i = 1; i <= m; ++i) cert.roles.emplace_back(sub("c", i), clause_v(i));
  for (int i = 1; i <= n; ++i) {
    cert.roles.emplace_back(sub("x", i), pos_v(i));
    cert.roles.emplace_back(sub("xbar", i), neg_v(i));
  }
  cert.roles.emplace_back("s", s);
  cert.roles.emplace_back("t", t);
  cert.formula = f;
  out.gadget = build_graph(t, edges);
  out.pairing = Pairing(std::move(first), std::move(second));
  return out;
}

Assignment decode_diffpairs_witness(const ReductionCertificate& cert, const Coloring& c) {
  require_reduction(cert, "sat-to-diffpairs");
  const CnfFormula& f = require_formula(cert);
  if (c.vertex_count() != static_cast<int>(cert.roles.size())) {
    throw InvalidInput("decode: coloring covers " + std::to_string(c.vertex_count()) + " vertices, gadget has " +
                       std::to_string(cert.roles.size()));
  }
  if (c.palette_size() == 0) throw InvalidInput("decode: coloring is empty");
  const Color ct = c[cert.role("t")];
  std::vector<bool> bits;
  for (int i = 1; i <= f.num_vars(); ++i) {
    const Color cx = c[cert.role(sub("x", i))];
    if (cx == c[cert.role(sub("xbar", i))]) {
      throw InvalidInput("decode: x_" + std::to_string(i) + " and its complement share a color");
    }
    bits.push_back(cx != ct);
  }
  Assignment result(std::move(bits));
  if (!evaluate(f, result)) throw InvalidInput("decode: witness does not yield a satisfying assignment");
  return result;
}

}  // namespace rvc
