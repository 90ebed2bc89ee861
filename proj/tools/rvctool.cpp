// rvctool: command-line front end for the rvc library.
//
// Verdict commands exit 0 when the property holds, 1 when it does not and 2
// on any error. Other commands exit 0 or 2; verify exits 1 on mismatches.

#include <cmath>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "rvc/certificate.hpp"
#include "rvc/check.hpp"
#include "rvc/cnf.hpp"
#include "rvc/errors.hpp"
#include "rvc/harness.hpp"
#include "rvc/reductions.hpp"
#include "rvc/rvcg.hpp"
#include "rvc/solve.hpp"

namespace {

using json = nlohmann::ordered_json;

constexpr int kHolds = 0;
constexpr int kFails = 1;
constexpr int kError = 2;

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

void emit(const json& j) { std::cout << j.dump() << '\n'; }

json coloring_json(const rvc::Coloring& c) {
  json out = json::object();
  for (rvc::Vertex v = 1; v <= c.vertex_count(); ++v) out[std::to_string(v)] = c[v];
  return out;
}

json verdict_json(const rvc::ColoringVerdict& v) {
  json out{{"holds", v.holds}};
  if (v.witness) out["witness"] = coloring_json(*v.witness);
  return out;
}

rvc::Graph read_graph(const std::string& path) { return rvc::parse_colored_graph(read_input(path)).graph(); }

// A coloring given either as the JSON printed by the decide-* commands or as
// a colored RVCG file.
rvc::Coloring read_coloring(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    const json j = json::parse(text);
    const json& w = j.contains("witness") ? j.at("witness") : j;
    std::vector<rvc::Color> colors(w.size(), 0);
    int palette = 0;
    for (const auto& [key, value] : w.items()) {
      const int v = std::stoi(key);
      if (v < 1 || v > static_cast<int>(colors.size())) throw rvc::InvalidInput("witness vertex " + key + " out of range");
      colors[static_cast<std::size_t>(v) - 1] = value.get<int>();
      palette = std::max(palette, value.get<int>());
    }
    return rvc::Coloring(palette, std::move(colors));
  }
  return rvc::parse_colored_graph(text).coloring();
}

// A path given either as st-check JSON or as whitespace separated vertex ids.
rvc::Path read_path(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  rvc::Path q;
  if (first != std::string::npos && text[first] == '{') {
    const json j = json::parse(text);
    if (!j.contains("path")) throw rvc::InvalidInput("witness JSON has no path");
    q.vertices = j.at("path").get<std::vector<rvc::Vertex>>();
    return q;
  }
  std::istringstream in(text);
  std::string token;
  int line = 1;
  while (in >> token) q.vertices.push_back(rvc::text::parse_int(token, line));
  return q;
}

int cmd_check(const std::string& file) {
  const auto cg = rvc::parse_colored_graph(read_input(file));
  const auto verdict = rvc::check_rainbow_vertex_connected(cg);
  json out{{"verdict", verdict.holds}};
  if (verdict.failing_pair) out["failing_pair"] = {verdict.failing_pair->u, verdict.failing_pair->v};
  emit(out);
  return verdict.holds ? kHolds : kFails;
}

int cmd_st_check(const std::string& file, int s, int t) {
  const auto cg = rvc::parse_colored_graph(read_input(file));
  const auto verdict = rvc::find_rainbow_path(cg, s, t);
  json out{{"verdict", verdict.holds}};
  if (verdict.witness) out["path"] = verdict.witness->vertices;
  emit(out);
  return verdict.holds ? kHolds : kFails;
}

int cmd_solve(const std::string& file) {
  const auto g = read_graph(file);
  const auto bounds = rvc::rvc_bounds(g);
  const auto result = rvc::rvc_exact(g);
  json ky = std::isfinite(bounds.ky_bound) ? json(bounds.ky_bound) : json(nullptr);
  emit({{"rvc", result.value},
        {"witness", coloring_json(result.witness)},
        {"bounds", {{"lower", bounds.lower}, {"upper", bounds.upper}, {"ky", ky}}}});
  return kHolds;
}

int emit_verdict(const rvc::ColoringVerdict& v) {
  emit(verdict_json(v));
  return v.holds ? kHolds : kFails;
}

std::string reduce(const std::string& name, const std::string& in, int s, int t, const std::string& pairs_file,
                   const std::string& pairing_file, const std::string& pairs_out, std::string& cert_text) {
  const std::string text = read_input(in);
  if (name == "st-to-global") {
    const auto out = rvc::st_to_global(rvc::parse_colored_graph(text), s, t);
    cert_text = rvc::serialize_certificate(out.certificate);
    return rvc::serialize_colored_graph(out.gadget);
  }
  if (name == "sat-to-st") {
    const auto out = rvc::sat_to_st(rvc::parse_dimacs(text));
    cert_text = rvc::serialize_certificate(out.certificate);
    if (!pairs_out.empty()) write_output(pairs_out, rvc::serialize_pair_lines({{out.s, out.t}}));
    return rvc::serialize_colored_graph(out.gadget);
  }
  if (name == "subset-to-rvc2") {
    if (pairs_file.empty()) throw rvc::InvalidInput("subset-to-rvc2 needs --pairs");
    const rvc::PairSet p(rvc::parse_pair_lines(read_input(pairs_file)));
    const auto out = rvc::subset_to_rvc2(rvc::parse_colored_graph(text).graph(), p);
    cert_text = rvc::serialize_certificate(out.certificate);
    return rvc::serialize_graph(out.gadget);
  }
  if (name == "diffpairs-to-subset") {
    if (pairing_file.empty()) throw rvc::InvalidInput("diffpairs-to-subset needs --pairing");
    const auto pairing = rvc::Pairing::from_pairs(rvc::parse_pair_lines(read_input(pairing_file)));
    const auto out = rvc::diffpairs_to_subset(rvc::parse_colored_graph(text).graph(), pairing);
    cert_text = rvc::serialize_certificate(out.certificate);
    if (!pairs_out.empty()) write_output(pairs_out, rvc::serialize_pair_lines(out.pairs.pairs()));
    return rvc::serialize_graph(out.gadget);
  }
  if (name == "sat-to-diffpairs") {
    const auto out = rvc::sat_to_diffpairs(rvc::parse_dimacs(text));
    cert_text = rvc::serialize_certificate(out.certificate);
    if (!pairs_out.empty()) write_output(pairs_out, rvc::serialize_pair_lines(out.pairing.pairs()));
    return rvc::serialize_graph(out.gadget);
  }
  throw rvc::InvalidInput("unknown reduction '" + name + "'");
}

int cmd_decode(const std::string& name, const std::string& cert_file, const std::string& witness_file) {
  const auto cert = rvc::parse_certificate(read_input(cert_file));
  const std::string witness = read_input(witness_file);
  rvc::Assignment a;
  if (name == "sat-to-st") {
    a = rvc::decode_st_witness(cert, read_path(witness));
  } else if (name == "sat-to-diffpairs") {
    a = rvc::decode_diffpairs_witness(cert, read_coloring(witness));
  } else {
    throw rvc::InvalidInput("no decoder for '" + name + "'; use sat-to-st or sat-to-diffpairs");
  }
  std::cout << rvc::format_assignment(a);
  return kHolds;
}

int cmd_verify(const std::string& name, const CLI::App& sub, int max_n, int max_m, int max_k, int min_width,
               bool fail_fast, bool timing) {
  rvc::SuiteConfig config = rvc::default_suite_config(name);
  if (sub.count("--max-n") > 0) config.max_n = config.max_vars = max_n;
  if (sub.count("--max-m") > 0) config.max_clauses = max_m;
  if (sub.count("--max-k") > 0) config.max_k = max_k;
  if (sub.count("--min-width") > 0) config.min_width = min_width;
  config.fail_fast = fail_fast;
  const auto report = rvc::verify_reduction(name, config);
  json mismatches = json::array();
  for (const auto& m : report.mismatches) {
    json entry{{"instance", m.instance}, {"source", m.source}, {"target", m.target}};
    if (!m.detail.empty()) entry["detail"] = m.detail;
    mismatches.push_back(std::move(entry));
  }
  json out{{"reduction", report.reduction},
           {"instances", report.instances},
           {"witnesses_checked", report.witnesses_checked},
           {"mismatches", std::move(mismatches)},
           {"passed", report.passed()}};
  if (timing) out["elapsed_seconds"] = report.elapsed_seconds;
  emit(out);
  return report.passed() ? kHolds : kFails;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rainbow vertex-connection toolkit"};
  app.require_subcommand(1);
  std::function<int()> run;

  std::string file, name, in, out, cert, witness, pairs_file, pairing_file, pairs_out;
  int s = 0, t = 0, k = 0, max_n = 0, max_m = 0, max_k = 0, min_width = 3, gen_n = 0, vars = 0, clauses = 0;
  bool fail_fast = false, timing = false, normalized = false;

  auto* check = app.add_subcommand("check", "Is the colored graph rainbow vertex-connected?");
  check->add_option("file", file, "RVCG file ('-' for stdin)")->required();
  check->callback([&] { run = [&] { return cmd_check(file); }; });

  auto* st = app.add_subcommand("st-check", "Is there a rainbow s-t path?");
  st->add_option("file", file)->required();
  st->add_option("--s", s)->required();
  st->add_option("--t", t)->required();
  st->callback([&] { run = [&] { return cmd_st_check(file, s, t); }; });

  auto* solve = app.add_subcommand("solve", "Exact rainbow vertex-connection number");
  solve->add_option("file", file, "RVCG file; colors are ignored")->required();
  solve->callback([&] { run = [&] { return cmd_solve(file); }; });

  auto* dk = app.add_subcommand("decide-k", "Is there a valid coloring with k colors?");
  dk->add_option("file", file)->required();
  dk->add_option("--k", k)->required();
  dk->callback([&] { run = [&] { return emit_verdict(rvc::decide_rvc_le_k(read_graph(file), k)); }; });

  auto* ds = app.add_subcommand("decide-subset", "Two colors serving the listed pairs");
  ds->add_option("file", file)->required();
  ds->add_option("--pairs", pairs_file, "lines 'p <u> <v>'")->required();
  ds->callback([&] {
    run = [&] {
      const rvc::PairSet p(rvc::parse_pair_lines(read_input(pairs_file)));
      return emit_verdict(rvc::decide_subset_rvc2(read_graph(file), p));
    };
  });

  auto* dd = app.add_subcommand("decide-diffpairs", "Two colors, partners colored differently");
  dd->add_option("file", file)->required();
  dd->add_option("--pairing", pairing_file, "lines 'p <v> <f(v)>'")->required();
  dd->callback([&] {
    run = [&] {
      const auto pairing = rvc::Pairing::from_pairs(rvc::parse_pair_lines(read_input(pairing_file)));
      return emit_verdict(rvc::decide_diffpairs_rvc2(read_graph(file), pairing));
    };
  });

  auto* red = app.add_subcommand("reduce", "Build a reduction gadget");
  red->add_option("name", name)->required();
  red->add_option("--in", in, "source instance (RVCG or DIMACS)")->required();
  red->add_option("--out", out, "gadget file (default stdout)");
  red->add_option("--cert", cert, "certificate file (default: stdout after the gadget)");
  red->add_option("--s", s);
  red->add_option("--t", t);
  red->add_option("--pairs", pairs_file);
  red->add_option("--pairing", pairing_file);
  red->add_option("--pairs-out", pairs_out, "pairs, pairing or s-t pair of the gadget");
  red->callback([&] {
    run = [&] {
      std::string cert_text;
      const std::string gadget = reduce(name, in, s, t, pairs_file, pairing_file, pairs_out, cert_text);
      if (cert.empty()) {
        write_output(out, gadget + (out.empty() ? cert_text : ""));
        if (!out.empty()) std::cout << cert_text;
      } else {
        write_output(out, gadget);
        write_output(cert, cert_text);
      }
      return kHolds;
    };
  });

  auto* dec = app.add_subcommand("decode", "Read an assignment off a gadget witness");
  dec->add_option("name", name)->required();
  dec->add_option("--cert", cert)->required();
  dec->add_option("--witness", witness, "path (sat-to-st) or coloring (sat-to-diffpairs)")->required();
  dec->callback([&] { run = [&] { return cmd_decode(name, cert, witness); }; });

  auto* ver = app.add_subcommand("verify", "Exhaustive reduction equivalence suite");
  ver->add_option("name", name)->required()->check(CLI::IsMember(rvc::reduction_names()));
  ver->add_option("--max-n", max_n, "graph order, or variable count for formula suites");
  ver->add_option("--max-m", max_m, "clause count");
  ver->add_option("--max-k", max_k, "palette size");
  ver->add_option("--min-width", min_width, "smallest clause width");
  ver->add_flag("--fail-fast", fail_fast);
  ver->add_flag("--timing", timing, "include wall time in the report");
  ver->callback([&] {
    run = [&] { return cmd_verify(name, *ver, max_n, max_m, max_k, min_width, fail_fast, timing); };
  });

  auto* gen = app.add_subcommand("gen", "Stream small instances");
  gen->require_subcommand(1);
  auto* gg = gen->add_subcommand("graphs", "Labeled connected graphs, RVCG, blank-line separated");
  gg->add_option("--n", gen_n)->required();
  gg->callback([&] {
    run = [&] {
      rvc::for_each_connected_graph(gen_n, [](const rvc::Graph& g) { std::cout << rvc::serialize_graph(g) << '\n'; });
      return kHolds;
    };
  });
  auto* gc = gen->add_subcommand("cnf", "Small 3-CNF formulas, DIMACS, blank-line separated");
  gc->add_option("--vars", vars)->required();
  gc->add_option("--clauses", clauses)->required();
  gc->add_flag("--normalized", normalized);
  gc->add_option("--min-width", min_width, "smallest clause width");
  gc->callback([&] {
    run = [&] {
      rvc::for_each_small_cnf({vars, clauses, normalized, min_width, 3},
                              [](const rvc::CnfFormula& f) { std::cout << rvc::write_dimacs(f) << '\n'; });
      return kHolds;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kError;
  }
  try {
    return run();
  } catch (const rvc::ParseError& e) {
    std::cerr << "rvctool: parse error, " << e.what() << '\n';
  } catch (const rvc::SizeLimitError& e) {
    std::cerr << "rvctool: size limit: " << e.what() << '\n';
  } catch (const std::exception& e) {
    std::cerr << "rvctool: " << e.what() << '\n';
  }
  return kError;
}
