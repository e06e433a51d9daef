#include "conglab/trisecant.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <map>
#include <stdexcept>

#include "conglab/linalg.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace conglab {

LineVerdict is_trisecant(const SurfaceModel& model, const ProjLine& L) {
  PrimeField fq = model.field();
  const int d = model.degree;
  Matrix m(fq, model.generators.size(), static_cast<std::size_t>(d) + 1);
  bool all_zero = true;
  for (std::size_t i = 0; i < model.generators.size(); ++i) {
    UPoly r = restrict_to_line(model.generators[i], L);
    for (std::size_t k = 0; k < r.size(); ++k) {
      m.at(i, k) = r[k];
      if (r[k] != 0) all_zero = false;
    }
  }
  if (all_zero) return LineVerdict::contained;
  if (d < 3) return LineVerdict::not_trisecant;
  return m.rank() == 1 ? LineVerdict::trisecant : LineVerdict::not_trisecant;
}

bool line_in_surface(const SurfaceModel& model, const ProjLine& L) {
  for (const auto& g : model.generators) {
    UPoly r = restrict_to_line(g, L);
    if (up_deg(r) >= 0) return false;
  }
  return true;
}

namespace {

// 2x2-minor forms of one generator against the base generator, as dense
// forms in the 4 direction coordinates (graded pieces of f(P + D)).
struct MinorSet {
  std::array<Fe, 4> lin{};
  std::array<std::array<Fe, 4>, 4> quad{};  // upper triangle a <= b
  std::vector<std::pair<std::array<std::uint8_t, 3>, Fe>> cubic;
};

// Degree-k part (in D) of f(P + D), a form in the 5 coordinates of D.
std::array<MultiPoly, 4> graded_shift(const MultiPoly& f,
                                      const std::vector<Fe>& P) {
  const PrimeField& fq = f.field();
  std::vector<MultiPoly> images;
  for (std::size_t v = 0; v < 5; ++v)
    images.push_back(mp_const(fq, 5, P[v]) + mp_var(fq, 5, v));
  MultiPoly shifted = f.compose(images);
  std::array<MultiPoly, 4> parts{MultiPoly(fq, 5), MultiPoly(fq, 5),
                                 MultiPoly(fq, 5), MultiPoly(fq, 5)};
  for (const auto& [m, c] : shifted.terms()) {
    int deg = 0;
    for (auto e : m) deg += e;
    parts[static_cast<std::size_t>(deg)].add_term(m, c);
  }
  return parts;
}

MinorSet build_minors(const PrimeField& fq, const std::array<MultiPoly, 4>& hj,
                      const std::array<MultiPoly, 4>& h0, Fe c0, Fe cj,
                      const std::array<std::size_t, 4>& active) {
  std::array<int, 5> pos;  // 5-coordinate index -> active slot, -1 for x_jz
  pos.fill(-1);
  for (std::size_t s = 0; s < 4; ++s) pos[active[s]] = static_cast<int>(s);
  MinorSet out;
  for (int k = 1; k <= 3; ++k) {
    MultiPoly minor = hj[static_cast<std::size_t>(k)].scaled(c0) -
                      h0[static_cast<std::size_t>(k)].scaled(cj);
    for (const auto& [m, c] : minor.terms()) {
      std::array<std::uint8_t, 3> idx{};
      std::size_t w = 0;
      bool drop = false;
      for (std::size_t v = 0; v < 5 && !drop; ++v)
        for (std::uint8_t e = 0; e < m[v]; ++e) {
          if (pos[v] < 0) {
            drop = true;  // direction lives on x_jz = 0
            break;
          }
          idx[w++] = static_cast<std::uint8_t>(pos[v]);
        }
      if (drop) continue;
      if (k == 1) {
        out.lin[idx[0]] = fq.add(out.lin[idx[0]], c);
      } else if (k == 2) {
        out.quad[idx[0]][idx[1]] = fq.add(out.quad[idx[0]][idx[1]], c);
      } else {
        out.cubic.emplace_back(idx, c);
      }
    }
  }
  return out;
}

inline Fe eval_lin(const PrimeField& fq, const MinorSet& ms,
                   const std::array<Fe, 4>& d) {
  std::uint64_t acc = 0;
  for (std::size_t v = 0; v < 4; ++v)
    acc += std::uint64_t(ms.lin[v]) * d[v];
  return static_cast<Fe>(acc % fq.modulus());
}

inline Fe eval_quad(const PrimeField& fq, const MinorSet& ms,
                    const std::array<Fe, 4>& d) {
  const std::uint64_t q = fq.modulus();
  std::uint64_t acc = 0;
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = a; b < 4; ++b) {
      if (ms.quad[a][b] == 0) continue;
      acc += std::uint64_t(ms.quad[a][b]) * d[a] % q * d[b];
    }
  return static_cast<Fe>(acc % q);
}

inline Fe eval_cubic(const PrimeField& fq, const MinorSet& ms,
                     const std::array<Fe, 4>& d) {
  const std::uint64_t q = fq.modulus();
  std::uint64_t acc = 0;
  for (const auto& [idx, c] : ms.cubic)
    acc += std::uint64_t(c) * d[idx[0]] % q * d[idx[1]] % q * d[idx[2]];
  return static_cast<Fe>(acc % q);
}

// Quadratic and cubic layers of the minor test (the linear layer is assumed
// already checked or is checked by the caller).
bool higher_layers_vanish(const PrimeField& fq,
                          const std::vector<MinorSet>& minors,
                          const std::array<Fe, 4>& d) {
  for (const auto& ms : minors)
    if (eval_quad(fq, ms, d) != 0) return false;
  for (const auto& ms : minors)
    if (eval_cubic(fq, ms, d) != 0) return false;
  return true;
}

bool all_layers_vanish(const PrimeField& fq,
                       const std::vector<MinorSet>& minors,
                       const std::array<Fe, 4>& d) {
  for (const auto& ms : minors)
    if (eval_lin(fq, ms, d) != 0) return false;
  return higher_layers_vanish(fq, minors, d);
}

}  // namespace

PointCount count_trisecants_through_point(const SurfaceModel& model,
                                          const ProjPoint& P, int threads) {
  PrimeField fq = model.field();
  const std::uint32_t q = fq.modulus();
  if (P.coords().size() != 5 || model.n != 4)
    throw std::invalid_argument("count_trisecants: ambient must be P^4");
  std::vector<Fe> vals;
  bool off_surface = false;
  for (const auto& g : model.generators) {
    vals.push_back(g.eval(P.coords()));
    off_surface |= (vals.back() != 0);
  }
  if (!off_surface)
    throw std::invalid_argument("count_trisecants: point lies on the surface");
  // A rank-1 restriction of quadrics certifies only length 2, never a
  // trisecant; and no line through an off-surface point is contained.
  if (model.degree == 2) return {0, 0};
  if (model.degree != 3)
    throw std::invalid_argument("count_trisecants: generators must be cubics");

  std::size_t jz = 0;
  while (P.coords()[jz] == 0) ++jz;
  std::array<std::size_t, 4> active{};
  for (std::size_t v = 0, w = 0; v < 5; ++v)
    if (v != jz) active[w++] = v;

  std::size_t i0 = 0;
  while (vals[i0] == 0) ++i0;
  const Fe c0 = vals[i0];
  auto h0 = graded_shift(model.generators[i0], P.coords());
  std::vector<MinorSet> minors;
  for (std::size_t j = 0; j < model.generators.size(); ++j) {
    if (j == i0) continue;
    auto hj = graded_shift(model.generators[j], P.coords());
    minors.push_back(build_minors(fq, hj, h0, c0, vals[j], active));
  }

  long count = 0;
  // Directions with first active coordinate 0: q^2 + q + 1 of them.
  std::array<Fe, 4> d{};
  for (std::uint32_t b = 0; b < q; ++b)
    for (std::uint32_t c = 0; c < q; ++c) {
      d = {0, 1, b, c};
      if (all_layers_vanish(fq, minors, d)) ++count;
    }
  for (std::uint32_t c = 0; c < q; ++c) {
    d = {0, 0, 1, c};
    if (all_layers_vanish(fq, minors, d)) ++count;
  }
  d = {0, 0, 0, 1};
  if (all_layers_vanish(fq, minors, d)) ++count;

  // Main block (1, a, b, c): the linear layer is screened incrementally in
  // c (one modular add per minor per direction); rare survivors get the
  // quadratic and cubic layers.
  const std::size_t nm = minors.size();
#ifdef _OPENMP
  const int nthreads = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for reduction(+ : count) schedule(static) \
    num_threads(nthreads)
#endif
  for (std::int64_t a = 0; a < static_cast<std::int64_t>(q); ++a) {
    std::vector<Fe> v(nm), step(nm);
    for (std::size_t j = 0; j < nm; ++j) step[j] = minors[j].lin[3];
    for (std::uint32_t b = 0; b < q; ++b) {
      for (std::size_t j = 0; j < nm; ++j) {
        const auto& l = minors[j].lin;
        std::uint64_t base = l[0] + std::uint64_t(l[1]) * a +
                             std::uint64_t(l[2]) * b;
        v[j] = static_cast<Fe>(base % q);
      }
      for (std::uint32_t c = 0; c < q; ++c) {
        bool zero = true;
        for (std::size_t j = 0; j < nm; ++j)
          if (v[j] != 0) {
            zero = false;
            break;
          }
        if (zero) {
          std::array<Fe, 4> dir{1, static_cast<Fe>(a), b, c};
          if (higher_layers_vanish(fq, minors, dir)) ++count;
        }
        for (std::size_t j = 0; j < nm; ++j) {
          Fe s = v[j] + step[j];
          v[j] = s >= q ? s - q : s;
        }
      }
    }
  }
  (void)threads;
  return {count, 0};
}

PointCount count_trisecants_reference(const SurfaceModel& model,
                                      const ProjPoint& P) {
  PrimeField fq = model.field();
  const std::uint32_t q = fq.modulus();
  if (P.coords().size() != 5)
    throw std::invalid_argument("count_trisecants: ambient must be P^4");
  bool off_surface = false;
  for (const auto& g : model.generators)
    off_surface |= (g.eval(P.coords()) != 0);
  if (!off_surface)
    throw std::invalid_argument("count_trisecants: point lies on the surface");

  std::size_t jz = 0;
  while (P.coords()[jz] == 0) ++jz;
  std::array<std::size_t, 4> active{};
  for (std::size_t v = 0, w = 0; v < 5; ++v)
    if (v != jz) active[w++] = v;

  PointCount out;
  auto visit = [&](const std::array<Fe, 4>& d) {
    std::vector<Fe> coords(5, 0);
    for (std::size_t s = 0; s < 4; ++s) coords[active[s]] = d[s];
    ProjLine line(fq, P, ProjPoint(fq, coords));
    switch (is_trisecant(model, line)) {
      case LineVerdict::trisecant: ++out.trisecants; break;
      case LineVerdict::contained: ++out.contained; break;
      case LineVerdict::not_trisecant: break;
    }
  };
  for (std::uint32_t a = 0; a < q; ++a)
    for (std::uint32_t b = 0; b < q; ++b)
      for (std::uint32_t c = 0; c < q; ++c) visit({1, a, b, c});
  for (std::uint32_t b = 0; b < q; ++b)
    for (std::uint32_t c = 0; c < q; ++c) visit({0, 1, b, c});
  for (std::uint32_t c = 0; c < q; ++c) visit({0, 0, 1, c});
  visit({0, 0, 0, 1});
  return out;
}

TrisecantReport estimate_order(const SurfaceModel& model, int trials,
                               std::uint64_t seed, int threads) {
  if (trials < 1)
    throw std::invalid_argument("estimate_order: need trials >= 1");
  PrimeField fq = model.field();
  const auto start = std::chrono::steady_clock::now();
  TrisecantReport rep;
  rep.family = model.provenance;
  rep.q = model.q;
  rep.seed = seed;
  rep.trials = trials;
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    ProjPoint P = random_point(fq, static_cast<std::size_t>(model.n), rng);
    for (;;) {
      bool on_surface = true;
      for (const auto& g : model.generators)
        if (g.eval(P.coords()) != 0) {
          on_surface = false;
          break;
        }
      if (!on_surface) break;
      P = random_point(fq, static_cast<std::size_t>(model.n), rng);
    }
    PointCount pc = count_trisecants_through_point(model, P, threads);
    rep.points.push_back(P.coords());
    rep.counts.push_back(pc.trisecants);
    rep.contained.push_back(pc.contained);
  }
  // Mode of the counts; ties break toward the smaller count.
  std::map<long, int> freq;
  for (long c : rep.counts) ++freq[c];
  int best = 0;
  for (const auto& [c, f] : freq)
    if (f > best) {
      best = f;
      rep.mode = c;
    }
  for (int i = 0; i < trials; ++i)
    if (rep.counts[static_cast<std::size_t>(i)] != rep.mode)
      rep.anomalies.push_back(i);
  rep.wall_ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  return rep;
}

PlaneSectionReport plane_section(const SurfaceModel& model,
                                 const std::vector<ProjPoint>& plane,
                                 std::uint64_t seed) {
  PrimeField fq = model.field();
  const int d = model.degree;
  PlaneSectionReport rep;
  for (const auto& p : plane) rep.plane.push_back(p.coords());
  std::vector<MultiPoly> restricted;
  for (const auto& g : model.generators)
    restricted.push_back(restrict_to_plane(g, plane));

  std::size_t nonzero = 0;
  for (const auto& r : restricted)
    if (!r.is_zero()) ++nonzero;

  int g = 0;
  if (nonzero == 0) {
    g = d;  // the whole plane lies on the surface
  } else if (nonzero == 1) {
    g = d;  // the gcd is the lone restriction itself
  } else {
    // Degree of the common factor, as the minimum over random lines in the
    // plane of the gcd of the univariate restrictions (three sampling lines
    // plus one confirmation line).
    Rng rng(seed * 0x9e3779b97f4a7c15ULL + 0x632be59bd9b4e019ULL);
    g = d;
    int valid = 0;
    for (int attempt = 0; attempt < 12 && valid < 4; ++attempt) {
      ProjPoint p1 = random_point(fq, 2, rng);
      ProjPoint p2 = random_point(fq, 2, rng);
      if (p1 == p2) continue;
      ProjLine line(fq, p1, p2);
      UPoly acc;
      bool have = false;
      int inf_mult = d;
      bool degenerate_line = true;
      for (const auto& r : restricted) {
        if (r.is_zero()) continue;
        UPoly u = restrict_to_line(r, line);  // length d+1
        int du = up_deg(u);
        if (du < 0) continue;  // line inside this generator's curve
        degenerate_line = false;
        inf_mult = std::min(inf_mult, d - du);
        up_trim(u);
        acc = have ? up_gcd(fq, acc, u) : u;
        have = true;
      }
      if (degenerate_line) continue;
      ++valid;
      g = std::min(g, up_deg(acc) + inf_mult);
      if (g == 0) break;
    }
  }
  rep.gcd_degree = g;
  for (const auto& r : restricted)
    rep.residuals.push_back(r.is_zero() ? -1 : r.total_degree() - g);
  return rep;
}

}  // namespace conglab
