#pragma once

#include "rvc/certificate.hpp"
#include "rvc/check.hpp"
#include "rvc/cnf.hpp"
#include "rvc/solve.hpp"

namespace rvc {

// Gadget vertex ids follow one canonical order per reduction: original
// vertices keep their ids, fresh vertices follow in the order listed below.

/// s-t question on (G, c) to whole-graph question on G'.
/// Fresh vertices s', t', a, b (ids n+1..n+4); s' hangs off s, t' off t, and
/// a, b see every original vertex. Colors c_1 = k+1 on s, s', a and
/// c_2 = k+2 on t, t', b.
struct StToGlobal {
  ColoredGraph gadget;
  ReductionCertificate certificate;
};
/// Throws InvalidInput for s == t, ids out of range, a disconnected graph or
/// an empty palette.
StToGlobal st_to_global(const ColoredGraph& cg, Vertex s, Vertex t);

/// 3-SAT to an s-t question. Variable x_j with k positive and l negative
/// occurrences gets one path v^j_{a,1..l} per positive occurrence a and one
/// path vbar^j_{1..k,b} per negative occurrence b; v^j_{a,b} and vbar^j_{a,b}
/// share color alpha^j_{a,b}. Paths are bundled by clause and consecutive
/// bundles are joined last vertex to first vertex.
///
/// Ids: s = 1, then path vertices by clause, literal, position; t last.
/// Colors: alpha_0 = 1 on s and t, then alpha^j_{a,b} by j, a, b.
struct SatToSt {
  ColoredGraph gadget;
  Vertex s = 0;
  Vertex t = 0;
  ReductionCertificate certificate;
};
/// Throws InvalidInput if some variable occurs with one polarity only.
SatToSt sat_to_st(const CnfFormula& f);

/// Reads the assignment off a rainbow s-t path of a sat_to_st gadget:
/// x_j = 1 if q runs through a whole positive path of x_j, 0 otherwise.
/// Throws InvalidInput if q is not a rainbow s-t path over named vertices
/// or the result does not satisfy the formula stored in the certificate.
Assignment decode_st_witness(const ReductionCertificate& cert, const Path& q);

/// Subset question on (G, P) to the two-color question on G'.
/// Ids: originals, x_{v} for each v, then x1_{(u,v)}, x2_{(u,v)} for each
/// pair outside P in lexicographic order, then s, t.
struct SubsetToRvc2 {
  Graph gadget;
  ReductionCertificate certificate;
};
SubsetToRvc2 subset_to_rvc2(const Graph& g, const PairSet& p);

/// Extends a coloring of G that serves P to the gadget: x_v = x1 = 1, x2 = s = t = 2.
Coloring extend_subset_witness(const Graph& g, const PairSet& p, const Coloring& c);

/// Different-pairs question on (G, pairing) to a subset question.
/// Ids: originals, then x^1_{(v,w)} .. x^6_{(v,w)} per pairing entry, then s.
struct DiffpairsToSubset {
  Graph gadget;
  PairSet pairs;
  ReductionCertificate certificate;
};
DiffpairsToSubset diffpairs_to_subset(const Graph& g, const Pairing& pairing);

/// x^1 = x^3 = c(w), x^2 = x^4 = c(v); x^5, x^6 and s get color 1.
Coloring extend_diffpairs_witness(const Graph& g, const Pairing& pairing, const Coloring& c);

/// 3-SAT to the different-pairs question.
/// Ids: c_{1..m}, then x_{i}, xbar_{i} interleaved, then s, t.
struct SatToDiffpairs {
  Graph gadget;
  Pairing pairing;
  ReductionCertificate certificate;
};
/// Throws InvalidInput for a formula without clauses.
SatToDiffpairs sat_to_diffpairs(const CnfFormula& f);

/// x_i = 1 iff c(x_i) != c(t). Throws InvalidInput if a pairing constraint
/// is violated or the result does not satisfy the certificate's formula.
Assignment decode_diffpairs_witness(const ReductionCertificate& cert, const Coloring& c);

}  // namespace rvc
