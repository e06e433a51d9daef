#ifndef CONGLAB_INVARIANTS_HPP
#define CONGLAB_INVARIANTS_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace conglab {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

Int binomial(const Int& n, unsigned k);

// Numerical invariants of a surface in P^n. HK is determined by the
// adjunction relation 2*pi - 2 = m + H.K.
struct SurfaceInvariants {
  int n;        // ambient projective dimension
  Int m;        // degree
  Int pi;       // sectional geometric genus
  Int Ksq;      // K^2
  Int chi;      // Euler-Poincare characteristic

  Int HK() const { return 2 * pi - 2 - m; }
};

// One row of the classification table for first order trisecant
// congruences in P^4.
struct InvariantRow {
  Int m, h, k, a, x, pi;

  bool operator==(const InvariantRow& o) const = default;
};

// Multiset of parasitic planes: (plane-curve degree mu >= 3, count b >= 1).
struct ParasiticDecomposition {
  std::vector<std::pair<Int, Int>> parts;  // (mu, b), mu strictly increasing

  bool operator==(const ParasiticDecomposition& o) const = default;
};

// Contact lengths h_a of a line of a first order congruence with the
// fundamental d-loci; each entry carries the codimension index i of its
// component (h_a >= i).
struct FocalBudget {
  int n;
  std::vector<std::pair<int, int>> contacts;  // (codim index i, length h_a)
};

// Trisecant count of a general projection to P^3 of a smooth surface in P^n,
// n >= 4. Throws if the rational expression is non-integral.
Int triple_points_general(const SurfaceInvariants& inv);

// Same count for a smooth surface already in P^4.
Int triple_points_p4(const Int& m, const Int& pi, const Int& chi);

// Parity obstruction for smooth quintics in P^4: t = 2(chi - pi + 1).
Int smooth_quintic_parity(const Int& chi, const Int& pi);

// Residual m^2 - 10m - 5*HK - 2*K^2 + 12*chi; asserts the identity
// (triple_points_general - triple_points_p4) == -residual/2.
Int double_point_consistency(const SurfaceInvariants& inv);

// Class of the trisecant congruence: a = h(m-2) - C(m,3).
Int cayley_class(const Int& h, const Int& m);

// Multiplicity of the fundamental surface on V_Pi: k = h - m + 2.
Int multiplicity_k(const Int& h, const Int& m);

// Apparent double points of the hyperplane-section curve: h = C(m-1,2) - pi.
Int clebsch_h(const Int& m, const Int& pi);

// h = m(m+2)/6 - 1 when integral and nonnegative. Only valid for
// 3 < m < 9, m != 5.
std::optional<Int> integrality_gate(const Int& m);

// x = (n-1)^2 k^2 - k^2 m - 1 - 2a; throws when negative.
Int parasitic_excess(const Int& m, const Int& k, const Int& a, int n = 4);

// Non-throwing variant used by the classification sieve.
std::optional<Int> parasitic_excess_checked(const Int& m, const Int& k,
                                            const Int& a, int n = 4);

// sum l_j k_j <= a0 + a1, with equality demanded when the pure fundamental
// locus has pure dimension n-2.
bool check_agen(const std::vector<std::pair<Int, Int>>& components,
                const Int& a0, const Int& a1, bool pure_dim);

// (a0+a1)^2 == x + sum k_j^2 m_j + a0 + 2a1 + a2.
bool check_bgen(const Int& a0, const Int& a1, const Int& a2, const Int& x,
                const std::vector<std::pair<Int, Int>>& components);

// Multiplicity i = sum C(mu, n-1) of a parasitic scheme meeting the
// fundamental loci in curves of the given degrees.
Int parasitic_multiplicity(const std::vector<Int>& mus, int n = 4);

// All multisets {(mu, b)} with mu >= 3 and sum C(mu,3)^2 * b = x.
std::vector<ParasiticDecomposition> decompose_x(const Int& x, int n = 4);

// True iff sum h_a = n-1 and every h_a >= its codimension index.
bool focal_budget_check(const FocalBudget& budget);

// Open bounds (n-1)/k' < m < (n-1)^2 on the fundamental-surface degree.
std::pair<Rational, Rational> degree_bounds(int n, const Int& kprime);

// Sectional genus of the congruence: pi(B) = p_a(C_a) + a - 1.
Int congruence_sectional_genus(const Int& p_a, const Int& a);

// Record of a candidate ruled out by the classification sieve.
struct ClassifyExclusion {
  Int m;
  std::optional<Int> h;  // set for m=5 sub-cases
  std::string reason;
};

struct ClassifyResult {
  std::vector<InvariantRow> rows;
  std::vector<ClassifyExclusion> exclusions;
};

// Enumerates m = 4..8 and reproduces the classification table of first
// order trisecant congruences in P^4 (four rows).
ClassifyResult classify_p4();

}  // namespace conglab

#endif
