#pragma once

#include <complex>
#include <string>
#include <vector>

#include "wenger/checked_int.hpp"
#include "wenger/construct.hpp"
#include "wenger/gf.hpp"
#include "wenger/graph.hpp"

namespace wenger {

enum class Provenance { closed_form, census, numeric };
std::string to_string(Provenance p);

struct SpectrumEntry {
  double value = 0.0;
  long long multiplicity = 0;
  /// Eigenvalues of W_m(q) square to i*q for an integer class i (the class
  /// of +-q is i = q). -1 when unknown (numeric provenance).
  int iq_class = -1;
  int sign = 0;  // -1, 0, +1
  /// "sqrt(6)", "-sqrt(6)", "0"; empty when the class is unknown.
  std::string exact;
};

/// Multiset of (eigenvalue, multiplicity) pairs, sorted by value descending.
class SpectrumTable {
 public:
  /// class_mults[i] = multiplicity of each of +sqrt(i*q) and -sqrt(i*q);
  /// the i = 0 slot carries the full multiplicity of eigenvalue 0.
  static SpectrumTable from_iq_classes(
      int q, int m, Provenance prov,
      const std::vector<std::pair<int, long long>>& class_mults);
  /// Clusters a descending list of numeric eigenvalues; values within
  /// cluster_tol of the running cluster mean are merged.
  static SpectrumTable from_numeric(std::vector<double> eigenvalues,
                                    double cluster_tol, int q = 0, int m = 0);

  int q() const { return q_; }
  int m() const { return m_; }
  Provenance provenance() const { return prov_; }
  const std::vector<SpectrumEntry>& entries() const { return entries_; }

  long long total_multiplicity() const;
  /// sum(multiplicity * value^k).
  double moment(int k) const;
  /// sum(multiplicity * i * q) over classes; exact. Throws when a class is
  /// unknown.
  CheckedInt second_moment_exact() const;

  /// Entry-for-entry equality of exact classes and multiplicities.
  bool same_exact(const SpectrumTable& other) const;
  /// Pairwise |value| agreement within tol and exact multiplicity match.
  bool matches(const SpectrumTable& other, double tol) const;

  std::string to_text() const;
  std::string to_json() const;

 private:
  SpectrumTable() = default;
  int q_ = 0, m_ = 0;
  Provenance prov_ = Provenance::numeric;
  std::vector<SpectrumEntry> entries_;
};

/// Number of monic polynomials of degree d over F_q with exactly i distinct
/// roots in F_q: C(q,i) * sum_{k=0}^{d-i} (-1)^k C(q-i,k) q^(d-i-k).
/// Requires 0 <= i <= d <= q-1.
CheckedInt b_monic(int q, int d, int i);

/// Multiplicity of each of +sqrt(i*q) and -sqrt(i*q) in the spectrum of
/// W_m(q) for 1 <= m <= q-1: (q-1) * sum_{d=i}^{m} b(q,d,i). For i = 0 the
/// eigenvalue 0 of the adjacency matrix carries twice this value.
CheckedInt eigenvalue_multiplicity(int q, int m, int i);

/// The full closed-form spectrum. For m <= q-1 the distinct eigenvalues are
/// +-q, +-sqrt(iq) (1 <= i <= m) and 0; for m >= q the table of W_{q-1}(q)
/// scaled by the component count q^(m+1-q).
SpectrumTable closed_form_spectrum(int q, int m);

/// Counts of tuples (w_1, ..., w_{m+1}) in F_q^(m+1) classified by the
/// number of distinct roots of f(X) = w_1 + w_2 X + ... + w_{m+1} X^m.
struct RootCensus {
  int q = 0, m = 0;
  /// counts[i] = nonzero tuples whose f has exactly i distinct roots;
  /// counts[q] > 0 only when m >= q (f vanishing everywhere as a function).
  std::vector<long long> counts;
  /// The all-zero tuple, tracked separately.
  long long zero_polynomial = 1;

  long long nonzero_total() const;  // q^(m+1) - 1
};

RootCensus root_census(const FieldSpecPtr& field, int m);

/// Independent enumeration oracle: each tuple with i distinct roots
/// contributes the eigenvalue pair +-sqrt(iq) (i = q giving +-q, i = 0
/// contributing eigenvalue 0 twice).
SpectrumTable census_spectrum(const FieldSpecPtr& field, int m);
SpectrumTable census_spectrum(int q, int m);

/// Eigenvalue of the point graph indexed by w: i*q - q where i is the
/// number of distinct roots of f (q(q-1) when f vanishes identically).
long long cayley_eigenvalue(const FqVector& w);

/// The same eigenvalue via the additive character double sum
/// sum_{t in F_q^*, u in F_q} omega^(tr(t f(u))), omega = exp(2 pi i / p).
std::complex<double> character_sum_oracle(const FqVector& w);

struct GramReport {
  bool ok = false;
  std::string detail;  // first mismatching entry when !ok
};

/// Checks N^T N = B + qI entry-exactly, where N is the point/line incidence
/// block of w and B is the adjacency matrix of h.
GramReport verify_gram_identity(const BipartiteGraph& w, const SimpleGraph& h);

/// Eigenvalues of a dense symmetric matrix (row-major, order n) by cyclic
/// Jacobi rotations; returned sorted descending. Converges when the
/// off-diagonal Frobenius norm drops below 1e-12 * n (hard cap 100 sweeps).
std::vector<double> jacobi_eigenvalues(std::vector<double> a, int n);

enum class BipartitePath {
  /// Decompose the lines x lines Gram matrix N^T N and unfold each
  /// eigenvalue mu as the pair +-sqrt(mu); half the matrix order.
  gram_unfold,
  /// Decompose the full adjacency matrix.
  direct,
};

SpectrumTable numeric_spectrum(const SimpleGraph& g, double cluster_tol = 1e-6);
SpectrumTable numeric_spectrum(const BipartiteGraph& g,
                               BipartitePath path = BipartitePath::gram_unfold,
                               double cluster_tol = 1e-6);
/// Wenger wrapper: cluster tolerance 1e-6 * max(1, q), parameters stamped
/// into the table. Distinct theoretical eigenvalues are at least
/// sqrt(q)(sqrt(2)-1) > 0.4 apart, so this tolerance separates clusters
/// with a wide margin.
SpectrumTable numeric_wenger_spectrum(
    const BipartiteGraph& g, int q, int m,
    BipartitePath path = BipartitePath::gram_unfold);

struct IdentityCheck {
  bool equal = false;
  CheckedInt lhs, rhs;
};

/// Evaluates sum_{i=0}^m C(q,i) sum_{d=i}^m sum_{k=0}^{d-i} (-1)^k
/// C(q-i,k) q^(d-i-k) against (q^(m+1)-1)/(q-1), exactly. Accepts any
/// integer q >= 2, not only prime powers.
IdentityCheck check_identity(long long q, int m);

struct Lambda2Report {
  int q = 0, m = 0;
  int m_eff = 0;              // min(m, q-1)
  double lambda2 = 0.0;       // sqrt(m_eff * q)
  std::string lambda2_exact;  // "sqrt(10)"
  double conjecture_bound = 0.0;  // 2 sqrt(q)
  bool conjecture_holds = false;  // lambda2 <= 2 sqrt(q), i.e. m_eff <= 4
  double ramanujan_bound = 0.0;   // 2 sqrt(q-1)
  bool ramanujan_holds = false;   // m_eff * q <= 4 (q-1)
  double spectral_gap = 0.0;      // q - lambda2

  std::string to_text() const;
  std::string to_json() const;
};

Lambda2Report lambda2_report(int q, int m);

}  // namespace wenger
