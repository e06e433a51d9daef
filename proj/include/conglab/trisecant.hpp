#ifndef CONGLAB_TRISECANT_HPP
#define CONGLAB_TRISECANT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "conglab/surfaces.hpp"

namespace conglab {

enum class LineVerdict { trisecant, not_trisecant, contained };

// Restricts every generator to L. All restrictions zero -> contained.
// Otherwise trisecant iff the restriction coefficient vectors have rank 1
// (the line meets the scheme cut by the generators in length d >= 3); for
// degree-2 models a rank-1 restriction certifies only length 2, so the
// verdict is never "trisecant".
LineVerdict is_trisecant(const SurfaceModel& model, const ProjLine& L);

// True iff every generator vanishes identically on L.
bool line_in_surface(const SurfaceModel& model, const ProjLine& L);

struct PointCount {
  long trisecants = 0;
  long contained = 0;
};

// Exhaustive count over all q^3+q^2+q+1 lines through P (one normalized
// direction representative per line, taken on the transversal hyperplane
// x_j = 0 for the first nonzero coordinate j of P). Throws if P lies on the
// surface. `threads` bounds the parallel search (0 = library default).
PointCount count_trisecants_through_point(const SurfaceModel& model,
                                          const ProjPoint& P, int threads = 0);

// Serial reference implementation of the same count: per-line restriction by
// interpolation and a rank test, no screening. Only usable at small q.
PointCount count_trisecants_reference(const SurfaceModel& model,
                                      const ProjPoint& P);

struct TrisecantReport {
  std::string family;
  std::uint32_t q = 101;
  std::uint64_t seed = 0;
  int trials = 0;
  std::vector<std::vector<Fe>> points;  // sampled points, normalized
  std::vector<long> counts;             // trisecants through points[i]
  std::vector<long> contained;          // contained lines through points[i]
  long mode = 0;
  std::vector<int> anomalies;           // indices with counts[i] != mode
  double wall_ms = 0.0;                 // informational, not serialized
};

// Samples `trials` random points off the surface and counts trisecants
// through each; deterministic given (model, trials, seed).
TrisecantReport estimate_order(const SurfaceModel& model, int trials,
                               std::uint64_t seed, int threads = 0);

struct PlaneSectionReport {
  std::vector<std::vector<Fe>> plane;  // three spanning points
  int gcd_degree = 0;
  std::vector<int> residuals;  // deg(restriction) - gcd_degree, -1 when zero
};

// Degree of the common factor of the generators restricted to the plane,
// measured along a pencil of random lines in the plane plus a confirmation
// line. gcd_degree >= 3 is the parasitic-plane signature.
PlaneSectionReport plane_section(const SurfaceModel& model,
                                 const std::vector<ProjPoint>& plane,
                                 std::uint64_t seed = 0);

}  // namespace conglab

#endif
