#include <chrono>
#include <sstream>

#include "rvc/errors.hpp"
#include "rvc/harness.hpp"
#include "rvc/reductions.hpp"
#include "rvc/solve.hpp"

namespace rvc {

std::string describe(const Graph& g) {
  std::ostringstream out;
  out << "n=" << g.order() << " E={";
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    out << (i ? "," : "") << g.edges()[i].u << '-' << g.edges()[i].v;
  }
  out << '}';
  return out.str();
}

std::string describe(const CnfFormula& f) {
  std::ostringstream out;
  out << "vars=" << f.num_vars() << ' ';
  for (const auto& clause : f.clauses()) {
    out << '(';
    for (std::size_t i = 0; i < clause.size(); ++i) out << (i ? " " : "") << clause[i].dimacs();
    out << ')';
  }
  return out.str();
}

const std::vector<std::string>& reduction_names() {
  static const std::vector<std::string> names{"st-to-global",     "sat-to-st",        "subset-to-rvc2",
                                              "diffpairs-to-subset", "sat-to-diffpairs", "sat-to-rvc2"};
  return names;
}

SuiteConfig default_suite_config(std::string_view name) {
  SuiteConfig c;
  if (name == "sat-to-diffpairs") c.max_clauses = 4;
  if (name == "sat-to-rvc2") {
    c.max_vars = 2;
    c.max_clauses = 2;
    c.min_width = 1;
  }
  return c;
}

namespace {

// Stops the enumeration once fail_fast has something to report.
struct StopSuite {};

class Recorder {
 public:
  Recorder(SuiteReport& report, const SuiteConfig& config) : report_(report), config_(config) {}

  void instance() { ++report_.instances; }
  void witness() { ++report_.witnesses_checked; }

  void compare(const std::string& what, bool source, bool target) {
    if (source != target) add({what, source, target, {}});
  }
  void require(bool ok, const std::string& what, bool source, bool target, const char* detail) {
    if (!ok) add({what, source, target, detail});
  }

 private:
  void add(Mismatch m) {
    report_.mismatches.push_back(std::move(m));
    if (config_.fail_fast) throw StopSuite{};
  }

  SuiteReport& report_;
  const SuiteConfig& config_;
};

void run_st_to_global(const SuiteConfig& cfg, Recorder& rec) {
  for (int n = 2; n <= cfg.max_n; ++n) {
    for_each_connected_graph(n, [&](const Graph& g) {
      for (int k = 1; k <= cfg.max_k; ++k) {
        std::vector<Color> colors(static_cast<std::size_t>(n), 1);
        for (;;) {
          const ColoredGraph cg(g, Coloring(k, colors));
          for (Vertex s = 1; s <= n; ++s) {
            for (Vertex t = 1; t <= n; ++t) {
              if (s == t) continue;
              rec.instance();
              const auto out = st_to_global(cg, s, t);
              const bool source = find_rainbow_path(cg, s, t).holds;
              const bool target = check_rainbow_vertex_connected(out.gadget).holds;
              std::ostringstream what;
              what << describe(g) << " c=";
              for (Color c : colors) what << c;
              what << " s=" << s << " t=" << t;
              rec.compare(what.str(), source, target);
              const auto& c = out.gadget.coloring();
              const auto& cert = out.certificate;
              const bool shape = out.gadget.graph().order() == n + 4 &&
                                 out.gadget.graph().size() == g.size() + 2 + 2 * n && c.palette_size() == k + 2 &&
                                 c[cert.role("a")] == c[s] && c[s] == k + 1 && c[cert.role("b")] == c[t] &&
                                 c[t] == k + 2;
              rec.require(shape, what.str(), source, target, "gadget shape");
            }
          }
          int i = n - 1;
          while (i >= 0 && colors[static_cast<std::size_t>(i)] == k) colors[static_cast<std::size_t>(i--)] = 1;
          if (i < 0) break;
          ++colors[static_cast<std::size_t>(i)];
        }
      }
    });
  }
}

CnfFamily formula_family(const SuiteConfig& cfg) {
  return {cfg.max_vars, cfg.max_clauses, true, cfg.min_width, 3};
}

void run_sat_to_st(const SuiteConfig& cfg, Recorder& rec) {
  for_each_small_cnf(formula_family(cfg), [&](const CnfFormula& f) {
    rec.instance();
    const auto out = sat_to_st(f);
    const bool source = brute_force_sat(f).sat;
    const auto path = find_rainbow_path(out.gadget, out.s, out.t);
    const std::string what = describe(f);
    rec.compare(what, source, path.holds);
    int weight = 0;
    for (const auto& o : occurrence_profile(f)) weight += o.positive * o.negative;
    rec.require(out.gadget.graph().order() == 2 + 2 * weight && out.gadget.coloring().palette_size() == 1 + weight,
                what, source, path.holds, "gadget size");
    if (path.holds) {
      rec.witness();
      bool decoded = true;
      try {
        decode_st_witness(out.certificate, *path.witness);
      } catch (const std::exception&) {
        decoded = false;
      }
      rec.require(decoded, what, source, path.holds, "decoded assignment");
    }
  });
}

std::vector<VertexPair> pairs_of_mask(int n, unsigned mask) {
  std::vector<VertexPair> out;
  int bit = 0;
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = u + 1; v <= n; ++v, ++bit) {
      if ((mask >> bit) & 1u) out.push_back({u, v});
    }
  }
  return out;
}

void run_subset_to_rvc2(const SuiteConfig& cfg, Recorder& rec) {
  for (int n = 1; n <= cfg.max_n; ++n) {
    const unsigned limit = 1u << (n * (n - 1) / 2);
    for_each_connected_graph(n, [&](const Graph& g) {
      for (unsigned mask = 0; mask < limit; ++mask) {
        rec.instance();
        const PairSet p(pairs_of_mask(n, mask));
        const auto out = subset_to_rvc2(g, p);
        const auto source = decide_subset_rvc2(g, p);
        const bool target = decide_rvc_le_k(out.gadget, 2).holds;
        std::ostringstream what;
        what << describe(g) << " P={";
        for (const auto& q : p.pairs()) what << '(' << q.u << ',' << q.v << ')';
        what << '}';
        rec.compare(what.str(), source.holds, target);
        const int outside = n * (n - 1) / 2 - static_cast<int>(p.size());
        rec.require(out.gadget.order() == 2 * n + 2 * outside + 2, what.str(), source.holds, target, "gadget size");
        if (source.holds) {
          rec.witness();
          const Coloring ext = extend_subset_witness(g, p, *source.witness);
          rec.require(check_rainbow_vertex_connected(ColoredGraph(out.gadget, ext)).holds, what.str(), source.holds,
                      target, "witness extension");
        }
      }
    });
  }
}

void run_diffpairs_to_subset(const SuiteConfig& cfg, Recorder& rec) {
  for (int n = 2; n <= cfg.max_n; ++n) {
    for_each_connected_graph(n, [&](const Graph& g) {
      for (Vertex v = 1; v <= n; ++v) {
        for (Vertex w = 1; w <= n; ++w) {
          if (v == w) continue;
          rec.instance();
          const Pairing pairing({v}, {w});
          const auto out = diffpairs_to_subset(g, pairing);
          const auto source = decide_diffpairs_rvc2(g, pairing);
          const bool target = decide_subset_rvc2(out.gadget, out.pairs).holds;
          std::ostringstream what;
          what << describe(g) << " f(" << v << ")=" << w;
          rec.compare(what.str(), source.holds, target);
          rec.require(out.gadget.order() == n + 7 && out.gadget.size() == g.size() + 9 &&
                          static_cast<int>(out.pairs.size()) == n * (n - 1) / 2 + 5,
                      what.str(), source.holds, target, "gadget size");
          if (source.holds) {
            rec.witness();
            const Coloring ext = extend_diffpairs_witness(g, pairing, *source.witness);
            rec.require(check_pairs(ColoredGraph(out.gadget, ext), out.pairs).holds, what.str(), source.holds, target,
                        "witness extension");
          }
        }
      }
    });
  }
}

void check_sat_to_diffpairs(const CnfFormula& f, Recorder& rec) {
  rec.instance();
  const auto out = sat_to_diffpairs(f);
  const bool source = brute_force_sat(f).sat;
  const auto target = decide_diffpairs_rvc2(out.gadget, out.pairing);
  const std::string what = describe(f);
  rec.compare(what, source, target.holds);
  const int m = f.num_clauses(), n = f.num_vars();
  int occurrences = 0;
  for (const auto& c : f.clauses()) occurrences += static_cast<int>(c.size());
  rec.require(out.gadget.order() == m + 2 * n + 2 && out.gadget.size() == m * (m - 1) / 2 + 2 * n + occurrences + 1,
              what, source, target.holds, "gadget size");
  if (target.holds) {
    rec.witness();
    // Decoding must survive swapping the two colors.
    std::vector<Color> swapped;
    for (Color c : target.witness->colors()) swapped.push_back(3 - c);
    bool decoded = true;
    try {
      decode_diffpairs_witness(out.certificate, *target.witness);
      decode_diffpairs_witness(out.certificate, Coloring(2, std::move(swapped)));
    } catch (const std::exception&) {
      decoded = false;
    }
    rec.require(decoded, what, source, target.holds, "decoded assignment");
  }
}

void run_sat_to_diffpairs(const SuiteConfig& cfg, Recorder& rec) {
  for_each_small_cnf(formula_family(cfg), [&](const CnfFormula& f) { check_sat_to_diffpairs(f, rec); });
  check_sat_to_diffpairs(all_sign_patterns_formula(), rec);
}

void run_sat_to_rvc2(const SuiteConfig& cfg, Recorder& rec) {
  for_each_small_cnf(formula_family(cfg), [&](const CnfFormula& f) {
    rec.instance();
    const auto stage1 = sat_to_diffpairs(f);
    const auto stage2 = diffpairs_to_subset(stage1.gadget, stage1.pairing);
    const auto stage3 = subset_to_rvc2(stage2.gadget, stage2.pairs);
    rec.compare(describe(f), brute_force_sat(f).sat, decide_rvc_le_k(stage3.gadget, 2).holds);
  });
}

}  // namespace

SuiteReport verify_reduction(std::string_view name, const SuiteConfig& config) {
  SuiteReport report;
  report.reduction = std::string(name);
  Recorder rec(report, config);
  const auto start = std::chrono::steady_clock::now();
  try {
    if (name == "st-to-global") {
      run_st_to_global(config, rec);
    } else if (name == "sat-to-st") {
      run_sat_to_st(config, rec);
    } else if (name == "subset-to-rvc2") {
      run_subset_to_rvc2(config, rec);
    } else if (name == "diffpairs-to-subset") {
      run_diffpairs_to_subset(config, rec);
    } else if (name == "sat-to-diffpairs") {
      run_sat_to_diffpairs(config, rec);
    } else if (name == "sat-to-rvc2") {
      run_sat_to_rvc2(config, rec);
    } else {
      throw InvalidInput("unknown reduction '" + std::string(name) + "'");
    }
  } catch (const StopSuite&) {
  }
  report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace rvc
