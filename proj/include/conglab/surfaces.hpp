#ifndef CONGLAB_SURFACES_HPP
#define CONGLAB_SURFACES_HPP

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "conglab/geometry.hpp"
#include "conglab/poly.hpp"

namespace conglab {

// Implicit (optionally parametrized) surface over F_q.
struct SurfaceModel {
  int n = 4;                 // ambient projective dimension
  std::uint32_t q = 101;
  std::uint64_t seed = 0;
  std::string provenance;    // bordiga | veronese | veronese-degenerate |
                             // delpezzo | scroll-14 | scroll-23 |
                             // quartic-scroll | zak
  int degree = 3;            // common degree of the generators
  std::vector<MultiPoly> generators;       // forms in n+1 variables
  std::vector<MultiPoly> parametrization;  // empty when not parametrized
  std::size_t source_vars = 0;             // arity of the parametrization

  PrimeField field() const { return PrimeField(q); }
  bool has_parametrization() const { return !parametrization.empty(); }
};

// 3x4 matrix of linear forms in 5 variables cutting a Bordiga surface.
struct LinearMatrix34 {
  // rows x cols = 3 x 4, each entry homogeneous of degree 1 in 5 variables
  std::vector<std::vector<MultiPoly>> entries;
};

LinearMatrix34 random_linear_matrix34(const PrimeField& fq, Rng& rng);

// Degeneracy-locus surface: generators are the four 3x3 minors. Validates
// that a random plane section is finite of degree 6 (3 retries).
SurfaceModel bordiga_from_matrix(const LinearMatrix34& M, std::uint32_t q,
                                 std::uint64_t seed = 0);

// Bordiga surface built with last column (x3, x4, 0), so that V(x3, x4) is a
// 1-parasitic plane meeting the surface in the cubic det of the 3x3 block.
// Returns the model and three points spanning that plane.
std::pair<SurfaceModel, std::vector<ProjPoint>> bordiga_with_parasitic_plane(
    std::uint32_t q, std::uint64_t seed);

// Singular Bordiga surface: random hyperplane slice of the secant variety of
// the rational normal quintic curve (3x3 catalecticant minors). When `slice`
// is non-null it receives the linear form l(x0..x4) substituted for x5.
SurfaceModel zak_bordiga(std::uint32_t q, std::uint64_t seed,
                         MultiPoly* slice = nullptr);

// Projection of the Veronese surface from a point of P^5. Generic centers
// avoid the secant cubic (det of the symmetric catalecticant); degenerate
// centers sit on a secant line, giving the quadric complete intersection.
SurfaceModel veronese_projection(std::uint32_t q, std::uint64_t seed,
                                 bool degenerate);

// Projection of the anticanonical quintic Del Pezzo surface of P^5 from a
// random point off the surface.
SurfaceModel delpezzo_projection(std::uint32_t q, std::uint64_t seed);

enum class ScrollKind { S14, S23 };

// Projection of the smooth quintic scroll S_{1,4} or S_{2,3} of P^6 from a
// random line disjoint from the scroll.
SurfaceModel scroll_projection(ScrollKind kind, std::uint32_t q,
                               std::uint64_t seed);

// Projection of the quartic scroll S_{1,3} of P^5 from a random point off
// the scroll (order-zero reference family).
SurfaceModel quartic_scroll_projection(std::uint32_t q, std::uint64_t seed);

// Basis of the degree-d forms on P^{target} vanishing on the image of the
// parametrization (exact nullspace of the coefficient matrix of the
// composed forms).
std::vector<MultiPoly> implicitize(const std::vector<MultiPoly>& param,
                                   int degree, std::uint32_t q);

// Degree of a finite plane section of the model (count of common zeros over
// the algebraic closure): squarefree gcd of pairwise resultants of three
// random combinations of the restricted generators. Returns -1 when the
// section is not finite or the combinations degenerate.
int plane_section_degree(const SurfaceModel& model,
                         const std::vector<ProjPoint>& plane, Rng& rng);

// Random plane through nothing in particular, as three spanning points.
std::vector<ProjPoint> random_plane(const PrimeField& fq, std::size_t n,
                                    Rng& rng);

SurfaceModel make_family(const std::string& family, std::uint32_t q,
                         std::uint64_t seed);

}  // namespace conglab

#endif
