#pragma once

#include <string>
#include <vector>

#include "wenger/gf.hpp"
#include "wenger/graph.hpp"

namespace wenger {

/// A tuple over GF(q) with the canonical base-q integer encoding
/// sum(coord[i] * q^i). Mathematical subscript i (1-based) is coords[i-1].
class FqVector {
 public:
  FqVector(FieldSpecPtr spec, std::vector<int> coords);
  static FqVector decode(FieldSpecPtr spec, int length, long long index);

  long long encode() const;
  int size() const { return static_cast<int>(coords_.size()); }
  int coord(int i) const { return coords_.at(i); }
  const std::vector<int>& coords() const { return coords_; }
  FieldElement at(int i) const;
  const FieldSpecPtr& field() const { return spec_; }

  friend bool operator==(const FqVector& a, const FqVector& b);

 private:
  FieldSpecPtr spec_;
  std::vector<int> coords_;
};

struct WengerParams {
  FieldSpecPtr field;
  int m;

  WengerParams(FieldSpecPtr f, int m_in);
  int q() const { return field->q(); }
  /// q^(m+1), the size of each partite set.
  long long n_tuples() const;
  /// m <= q-1; otherwise the graph splits into q^(m-q+1) components.
  bool connected_regime() const { return m <= field->q() - 1; }
};

/// Bipartite graph on two copies of F_q^(m+1): point (p) and line [l] are
/// adjacent iff l_{i+1} + p_{i+1} = l_i * p_1 for i = 1..m. Point index is
/// the canonical tuple integer; line index is offset by q^(m+1).
BipartiteGraph build_W(const WengerParams& params);

/// Same partite sets, adjacency l_k + p_k = l_1 * p_1^(k-1) for k = 2..m+1.
BipartiteGraph build_W_prime(const WengerParams& params);

/// p-regular bipartite graph on two copies of {0,...,p-1}^k with adjacency
/// b_j = a_j + a_{j+1} * b_{k-1} (mod p) for j = 0..k-2. Requires k >= 2
/// and p prime.
BipartiteGraph build_H(int k, int p);

/// Bipartite graph on two copies of F_q^(n-1): points carry subscripts
/// (2, 3, ..., n), lines carry (1, 3, 4, ..., n) -- subscript 2 is skipped
/// on the line side -- and adjacency is l_k - p_k = l_1 * p_{k-1} for
/// k = 3..n. Storage maps the subscript lists to dense 0-based arrays:
/// point coords[j] = p_{j+2}; line coords[0] = l_1, coords[j] = l_{j+2}
/// for j >= 1. Requires n >= 3.
BipartiteGraph build_H_prime(int n, const FieldSpecPtr& field);

// Tuple-level isomorphism maps.

/// phi reverses the coordinate tuple (both sides of H_k -> H'_{k+1}).
std::vector<int> phi_tuple(const std::vector<int>& coords);
/// psi sends a point of H'_{m+2}(q) to the line of W_m(q) with the same
/// coordinates.
FqVector psi_point_to_line(const FqVector& point);
/// psi sends a line of H'_{m+2}(q) to the point of W_m(q) obtained by
/// negating all its listed coordinates in order.
FqVector psi_line_to_point(const FqVector& line);
/// omega fixes p_1, p_2 and maps p_k to p_k + sum_{i=2}^{k-1} p_i p_1^{k-i};
/// lines are fixed.
FqVector omega_point(const FqVector& point);

// Full vertex maps, indexed like the corresponding builders.
std::vector<int> iso_phi(int k, int p);             // H_k(p)      -> H'_{k+1}(p)
std::vector<int> iso_psi(const WengerParams& params);  // H'_{m+2}(q) -> W_m(q)
std::vector<int> iso_omega(const WengerParams& params);  // W_m(q)   -> W'_m(q)

struct IsoReport {
  bool ok = false;
  std::string detail;  // first violation when !ok
};

/// True iff vertex_map is a bijection g1 -> g2 preserving adjacency and
/// non-adjacency in both directions.
IsoReport verify_isomorphism(const BipartiteGraph& g1, const BipartiteGraph& g2,
                             const std::vector<int>& vertex_map);

/// The Cayley connection set S = {(t, tu, ..., tu^m) : t in F_q^*, u in F_q};
/// |S| = q(q-1) and S = -S.
std::vector<FqVector> connection_set(const WengerParams& params);

/// Graph on the lines of W_m(q): the Cayley graph of (F_q^(m+1), +) with
/// connection set S. Vertex index = canonical tuple integer.
SimpleGraph point_graph(const WengerParams& params);

/// Independent route to the same graph: join distinct lines of w that share
/// a common point neighbor. Vertex index = line index - n_points.
SimpleGraph point_graph_distance2(const BipartiteGraph& w);

}  // namespace wenger
