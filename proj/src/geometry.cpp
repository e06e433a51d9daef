#include "conglab/geometry.hpp"

#include <stdexcept>

#include "conglab/linalg.hpp"

namespace conglab {

ProjPoint::ProjPoint(const PrimeField& fq, std::vector<Fe> coords)
    : coords_(std::move(coords)) {
  std::size_t first = coords_.size();
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    coords_[i] %= fq.modulus();
    if (first == coords_.size() && coords_[i] != 0) first = i;
  }
  if (first == coords_.size())
    throw std::invalid_argument("ProjPoint: zero vector");
  Fe inv = fq.inv(coords_[first]);
  for (std::size_t i = first; i < coords_.size(); ++i)
    coords_[i] = fq.mul(coords_[i], inv);
}

ProjLine::ProjLine(const PrimeField& fq, ProjPoint base, ProjPoint direction)
    : base_(std::move(base)), dir_(std::move(direction)) {
  if (base_.coords().size() != dir_.coords().size())
    throw std::invalid_argument("ProjLine: ambient mismatch");
  Matrix m(fq, 2, base_.coords().size());
  for (std::size_t i = 0; i < base_.coords().size(); ++i) {
    m.at(0, i) = base_.coords()[i];
    m.at(1, i) = dir_.coords()[i];
  }
  if (m.rank() != 2)
    throw std::invalid_argument("ProjLine: points not independent");
}

ProjPoint random_point(const PrimeField& fq, std::size_t n, Rng& rng) {
  for (;;) {
    std::vector<Fe> v(n + 1);
    bool nonzero = false;
    for (auto& c : v) {
      c = rng.element(fq);
      nonzero |= (c != 0);
    }
    if (nonzero) return ProjPoint(fq, std::move(v));
  }
}

UPoly restrict_to_line(const MultiPoly& f, const ProjLine& line) {
  const PrimeField& fq = f.field();
  int d = f.total_degree();
  if (d < 0) d = 0;
  if (f.nvars() != line.base().coords().size())
    throw std::invalid_argument("restrict_to_line: arity mismatch");
  if (fq.modulus() <= static_cast<std::uint32_t>(d))
    throw std::domain_error("restrict_to_line: modulus too small");
  std::vector<Fe> xs(static_cast<std::size_t>(d) + 1), ys(xs.size());
  std::vector<Fe> pt(f.nvars());
  for (std::size_t k = 0; k < xs.size(); ++k) {
    Fe t = static_cast<Fe>(k);
    xs[k] = t;
    for (std::size_t i = 0; i < pt.size(); ++i)
      pt[i] = fq.add(line.base().coords()[i],
                     fq.mul(t, line.direction().coords()[i]));
    ys[k] = f.eval(pt);
  }
  UPoly r = up_interpolate(fq, xs, ys);
  r.resize(static_cast<std::size_t>(d) + 1, 0);
  return r;
}

MultiPoly restrict_to_plane(const MultiPoly& f,
                            const std::vector<ProjPoint>& span3) {
  const PrimeField& fq = f.field();
  if (span3.size() != 3)
    throw std::invalid_argument("restrict_to_plane: need three points");
  Matrix m(fq, 3, f.nvars());
  for (std::size_t r = 0; r < 3; ++r) {
    if (span3[r].coords().size() != f.nvars())
      throw std::invalid_argument("restrict_to_plane: arity mismatch");
    for (std::size_t c = 0; c < f.nvars(); ++c)
      m.at(r, c) = span3[r].coords()[c];
  }
  if (m.rank() != 3)
    throw std::invalid_argument("restrict_to_plane: degenerate plane");
  // x_i = p0_i*u + p1_i*v + p2_i*w
  std::vector<MultiPoly> images;
  images.reserve(f.nvars());
  for (std::size_t i = 0; i < f.nvars(); ++i) {
    MultiPoly li(fq, 3);
    for (std::size_t r = 0; r < 3; ++r) {
      Monomial mono(3, 0);
      mono[r] = 1;
      li.add_term(mono, span3[r].coords()[i]);
    }
    images.push_back(std::move(li));
  }
  return f.compose(images);
}

}  // namespace conglab
