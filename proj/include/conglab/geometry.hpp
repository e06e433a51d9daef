#ifndef CONGLAB_GEOMETRY_HPP
#define CONGLAB_GEOMETRY_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "conglab/poly.hpp"

namespace conglab {

// Deterministic RNG. Only raw mt19937_64 output is consumed so streams are
// reproducible for a given seed independent of the standard library.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  std::uint32_t below(std::uint32_t n) {
    return static_cast<std::uint32_t>(next() % n);
  }

  Fe element(const PrimeField& fq) { return below(fq.modulus()); }

  Fe nonzero(const PrimeField& fq) { return 1 + below(fq.modulus() - 1); }

private:
  std::mt19937_64 eng_;
};

// Point of P^n(F_q): homogeneous coordinates normalized so that the first
// nonzero coordinate is 1.
class ProjPoint {
public:
  ProjPoint(const PrimeField& fq, std::vector<Fe> coords);

  const std::vector<Fe>& coords() const { return coords_; }
  std::size_t dim() const { return coords_.size() - 1; }  // ambient n

  bool operator==(const ProjPoint& o) const { return coords_ == o.coords_; }

private:
  std::vector<Fe> coords_;
};

// Line in P^n spanned by two independent points.
class ProjLine {
public:
  ProjLine(const PrimeField& fq, ProjPoint base, ProjPoint direction);

  const ProjPoint& base() const { return base_; }
  const ProjPoint& direction() const { return dir_; }

private:
  ProjPoint base_, dir_;
};

// Random point of P^n(F_q).
ProjPoint random_point(const PrimeField& fq, std::size_t n, Rng& rng);

// Coefficients of f restricted to L(t) = base + t*direction, degree-d binary
// form given as length d+1 (constant term first). Requires q > d.
UPoly restrict_to_line(const MultiPoly& f, const ProjLine& line);

// Exact restriction of f to the plane spanned by three independent points;
// result is a form in 3 variables (u, v, w).
MultiPoly restrict_to_plane(const MultiPoly& f,
                            const std::vector<ProjPoint>& span3);

}  // namespace conglab

#endif
