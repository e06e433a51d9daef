#include "conglab/surfaces.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "conglab/linalg.hpp"

namespace conglab {

namespace {

MultiPoly random_linear_form(const PrimeField& fq, std::size_t nvars,
                             Rng& rng) {
  for (;;) {
    MultiPoly f(fq, nvars);
    for (std::size_t i = 0; i < nvars; ++i) {
      Monomial m(nvars, 0);
      m[i] = 1;
      f.add_term(m, rng.element(fq));
    }
    if (!f.is_zero()) return f;
  }
}

// det of a 3x3 block of a matrix of polynomials, skipping column `skip`.
MultiPoly minor3(const std::vector<std::vector<MultiPoly>>& m,
                 std::size_t skip) {
  std::array<std::size_t, 3> cols{};
  std::size_t k = 0;
  for (std::size_t c = 0; c < 4; ++c)
    if (c != skip) cols[k++] = c;
  const MultiPoly& a = m[0][cols[0]];
  const MultiPoly& b = m[0][cols[1]];
  const MultiPoly& c = m[0][cols[2]];
  const MultiPoly& d = m[1][cols[0]];
  const MultiPoly& e = m[1][cols[1]];
  const MultiPoly& f = m[1][cols[2]];
  const MultiPoly& g = m[2][cols[0]];
  const MultiPoly& h = m[2][cols[1]];
  const MultiPoly& i = m[2][cols[2]];
  return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g);
}

// Dimension of the span of the (linear) entries inside the space of linear
// forms.
std::size_t entry_span_dim(const PrimeField& fq, const LinearMatrix34& M) {
  Matrix span(fq, 12, 5);
  std::size_t r = 0;
  for (const auto& row : M.entries)
    for (const auto& e : row) {
      for (const auto& [mono, c] : e.terms())
        for (std::size_t i = 0; i < 5; ++i)
          if (mono[i] == 1) span.at(r, i) = c;
      ++r;
    }
  return span.rank();
}

// Linear forms cutting out the projection away from the span of `centers`
// (each a coordinate vector of length N+1); returns the nullspace rows.
std::vector<std::vector<Fe>> projection_rows(
    const PrimeField& fq, const std::vector<std::vector<Fe>>& centers) {
  Matrix m(fq, centers.size(), centers[0].size());
  for (std::size_t r = 0; r < centers.size(); ++r)
    for (std::size_t c = 0; c < centers[0].size(); ++c)
      m.at(r, c) = centers[r][c];
  return m.nullspace();
}

// Composition of the projection linear forms with a parametrization.
std::vector<MultiPoly> project_param(const PrimeField& fq,
                                     const std::vector<MultiPoly>& param,
                                     const std::vector<std::vector<Fe>>& rows) {
  std::vector<MultiPoly> out;
  out.reserve(rows.size());
  for (const auto& row : rows) {
    MultiPoly acc(fq, param[0].nvars());
    for (std::size_t i = 0; i < row.size(); ++i)
      if (row[i] != 0) acc = acc + param[i].scaled(row[i]);
    out.push_back(std::move(acc));
  }
  return out;
}

// True iff the common zero locus of `forms` meets the line (over the
// algebraic closure). All forms share one degree d.
bool line_meets_variety(const std::vector<MultiPoly>& forms,
                        const ProjLine& line) {
  if (forms.empty()) return true;
  const PrimeField& fq = forms[0].field();
  UPoly g;
  bool have = false;
  bool all_top_zero = true;
  bool all_zero = true;
  for (const auto& f : forms) {
    UPoly r = restrict_to_line(f, line);
    if (r.back() != 0) all_top_zero = false;
    UPoly rt = r;
    up_trim(rt);
    if (up_deg(rt) < 0) continue;  // form vanishes on the whole line
    all_zero = false;
    g = have ? up_gcd(fq, g, rt) : rt;
    have = true;
    if (up_deg(g) == 0 && !all_top_zero) return false;
  }
  if (all_zero) return true;               // line inside the zero locus
  if (up_deg(g) >= 1) return true;         // affine common root
  return all_top_zero;                     // common root at t = infinity
}

void validate_section_degree(SurfaceModel& model, int expected,
                             std::uint64_t salt) {
  Rng rng(model.seed * 0x9e3779b97f4a7c15ULL + salt);
  PrimeField fq = model.field();
  for (int attempt = 0; attempt < 3; ++attempt) {
    auto plane = random_plane(fq, static_cast<std::size_t>(model.n), rng);
    if (plane_section_degree(model, plane, rng) == expected) return;
  }
  throw std::runtime_error("surface validation: plane-section degree != " +
                           std::to_string(expected));
}

std::vector<MultiPoly> veronese_param(const PrimeField& fq) {
  auto u = mp_var(fq, 3, 0), v = mp_var(fq, 3, 1), w = mp_var(fq, 3, 2);
  return {u * u, u * v, u * w, v * v, v * w, w * w};
}

Fe symmetric_det3(const PrimeField& fq, const std::vector<Fe>& p) {
  // symmetric matrix [[p0,p1,p2],[p1,p3,p4],[p2,p4,p5]]
  Fe a = p[0], b = p[1], c = p[2], d = p[3], e = p[4], f = p[5];
  Fe t1 = fq.mul(a, fq.sub(fq.mul(d, f), fq.mul(e, e)));
  Fe t2 = fq.mul(b, fq.sub(fq.mul(b, f), fq.mul(c, e)));
  Fe t3 = fq.mul(c, fq.sub(fq.mul(b, e), fq.mul(c, d)));
  return fq.add(fq.sub(t1, t2), t3);
}

std::size_t symmetric_rank3(const PrimeField& fq, const std::vector<Fe>& p) {
  Matrix m(fq, 3, 3);
  m.at(0, 0) = p[0]; m.at(0, 1) = p[1]; m.at(0, 2) = p[2];
  m.at(1, 0) = p[1]; m.at(1, 1) = p[3]; m.at(1, 2) = p[4];
  m.at(2, 0) = p[2]; m.at(2, 1) = p[4]; m.at(2, 2) = p[5];
  return m.rank();
}

std::vector<Fe> eval_param(const std::vector<MultiPoly>& param,
                           std::span<const Fe> src) {
  std::vector<Fe> out(param.size());
  for (std::size_t i = 0; i < param.size(); ++i) out[i] = param[i].eval(src);
  return out;
}

// Scroll S_{a,b}: x_i = u s^{a-i} t^i, y_j = v s^{b-j} t^j.
std::vector<MultiPoly> scroll_param(const PrimeField& fq, int a, int b) {
  std::vector<MultiPoly> out;
  for (int i = 0; i <= a; ++i) {
    Monomial m(4, 0);
    m[0] = static_cast<std::uint8_t>(a - i);
    m[1] = static_cast<std::uint8_t>(i);
    m[2] = 1;  // u
    MultiPoly p(fq, 4);
    p.add_term(m, 1);
    out.push_back(std::move(p));
  }
  for (int j = 0; j <= b; ++j) {
    Monomial m(4, 0);
    m[0] = static_cast<std::uint8_t>(b - j);
    m[1] = static_cast<std::uint8_t>(j);
    m[3] = 1;  // v
    MultiPoly p(fq, 4);
    p.add_term(m, 1);
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

LinearMatrix34 random_linear_matrix34(const PrimeField& fq, Rng& rng) {
  LinearMatrix34 M;
  M.entries.assign(3, {});
  for (auto& row : M.entries)
    for (int c = 0; c < 4; ++c) row.push_back(random_linear_form(fq, 5, rng));
  return M;
}

SurfaceModel bordiga_from_matrix(const LinearMatrix34& M, std::uint32_t q,
                                 std::uint64_t seed) {
  PrimeField fq(q);
  if (M.entries.size() != 3 || M.entries[0].size() != 4)
    throw std::invalid_argument("bordiga_from_matrix: need a 3x4 matrix");
  for (const auto& row : M.entries)
    for (const auto& e : row)
      if (!e.is_zero() && (e.total_degree() != 1 || e.nvars() != 5))
        throw std::invalid_argument("bordiga_from_matrix: entries must be "
                                    "linear forms in 5 variables");
  if (entry_span_dim(fq, M) < 2)
    throw std::invalid_argument(
        "bordiga_from_matrix: entries span a line of forms (cone)");
  SurfaceModel model;
  model.n = 4;
  model.q = q;
  model.seed = seed;
  model.provenance = "bordiga";
  model.degree = 3;
  bool all_zero = true;
  for (std::size_t skip = 0; skip < 4; ++skip) {
    MultiPoly g = minor3(M.entries, skip);
    if (!g.is_zero()) all_zero = false;
    model.generators.push_back(std::move(g));
  }
  if (all_zero)
    throw std::invalid_argument("bordiga_from_matrix: minors vanish");
  validate_section_degree(model, 6, 17);
  return model;
}

std::pair<SurfaceModel, std::vector<ProjPoint>> bordiga_with_parasitic_plane(
    std::uint32_t q, std::uint64_t seed) {
  PrimeField fq(q);
  Rng rng(seed);
  LinearMatrix34 M;
  M.entries.assign(3, {});
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c)
      M.entries[static_cast<std::size_t>(r)].push_back(
          random_linear_form(fq, 5, rng));
  // last column (x3, x4, 0)
  M.entries[0].push_back(mp_var(fq, 5, 3));
  M.entries[1].push_back(mp_var(fq, 5, 4));
  M.entries[2].push_back(MultiPoly(fq, 5));
  SurfaceModel model = bordiga_from_matrix(M, q, seed);
  model.provenance = "bordiga";
  std::vector<ProjPoint> plane{
      ProjPoint(fq, {1, 0, 0, 0, 0}),
      ProjPoint(fq, {0, 1, 0, 0, 0}),
      ProjPoint(fq, {0, 0, 1, 0, 0})};
  return {std::move(model), std::move(plane)};
}

SurfaceModel zak_bordiga(std::uint32_t q, std::uint64_t seed,
                         MultiPoly* slice) {
  PrimeField fq(q);
  Rng rng(seed);
  for (int attempt = 0; attempt < 5; ++attempt) {
    // catalecticant rows (x_i, x_{i+1}, x_{i+2}, x_{i+3})
    std::vector<std::vector<MultiPoly>> cat(3);
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = 0; c < 4; ++c)
        cat[r].push_back(mp_var(fq, 6, r + c));
    // slice x5 = l(x0..x4)
    std::vector<MultiPoly> images;
    for (std::size_t i = 0; i < 5; ++i) images.push_back(mp_var(fq, 5, i));
    images.push_back(random_linear_form(fq, 5, rng));
    SurfaceModel model;
    model.n = 4;
    model.q = q;
    model.seed = seed;
    model.provenance = "zak";
    model.degree = 3;
    for (std::size_t skip = 0; skip < 4; ++skip)
      model.generators.push_back(minor3(cat, skip).compose(images));
    try {
      validate_section_degree(model, 6, 23 + static_cast<std::uint64_t>(attempt));
      if (slice) *slice = images.back();
      return model;
    } catch (const std::runtime_error&) {
      continue;  // degenerate slice, re-randomize
    }
  }
  throw std::runtime_error("zak_bordiga: no valid slice found");
}

SurfaceModel veronese_projection(std::uint32_t q, std::uint64_t seed,
                                 bool degenerate) {
  PrimeField fq(q);
  Rng rng(seed);
  auto param5 = veronese_param(fq);
  for (int attempt = 0; attempt < 10; ++attempt) {
    std::vector<Fe> center;
    if (degenerate) {
      // random point of a random secant line, off the surface
      ProjPoint s1 = random_point(fq, 2, rng);
      ProjPoint s2 = random_point(fq, 2, rng);
      auto i1 = eval_param(param5, s1.coords());
      auto i2 = eval_param(param5, s2.coords());
      Fe lambda = rng.nonzero(fq);
      center.resize(6);
      for (std::size_t i = 0; i < 6; ++i)
        center[i] = fq.add(i1[i], fq.mul(lambda, i2[i]));
      if (symmetric_rank3(fq, center) != 2) continue;
    } else {
      center.resize(6);
      for (auto& c : center) c = rng.element(fq);
      bool nz = std::any_of(center.begin(), center.end(),
                            [](Fe c) { return c != 0; });
      if (!nz || symmetric_det3(fq, center) == 0) continue;
    }
    auto rows = projection_rows(fq, {center});
    auto composed = project_param(fq, param5, rows);
    SurfaceModel model;
    model.n = 4;
    model.q = q;
    model.seed = seed;
    model.provenance = degenerate ? "veronese-degenerate" : "veronese";
    model.degree = degenerate ? 2 : 3;
    model.parametrization = composed;
    model.source_vars = 3;
    model.generators = implicitize(composed, model.degree, q);
    if (degenerate) {
      if (model.generators.size() != 2) continue;
    } else {
      if (!implicitize(composed, 2, q).empty()) continue;
      if (model.generators.empty()) continue;
    }
    return model;
  }
  throw std::runtime_error("veronese_projection: no valid center found");
}

SurfaceModel delpezzo_projection(std::uint32_t q, std::uint64_t seed) {
  PrimeField fq(q);
  Rng rng(seed);
  // anticanonical system: cubics through 4 general points
  const std::vector<std::vector<Fe>> base = {
      {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}};
  auto monos = monomials_of_degree(3, 3);
  Matrix cond(fq, base.size(), monos.size());
  for (std::size_t r = 0; r < base.size(); ++r)
    for (std::size_t c = 0; c < monos.size(); ++c) {
      Fe v = 1;
      for (std::size_t i = 0; i < 3; ++i)
        for (std::uint8_t e = 0; e < monos[c][i]; ++e)
          v = fq.mul(v, base[r][i]);
      cond.at(r, c) = v;
    }
  auto kernel = cond.nullspace();
  if (kernel.size() != 6)
    throw std::logic_error("delpezzo_projection: anticanonical system size");
  std::vector<MultiPoly> param5;
  for (const auto& vec : kernel) {
    MultiPoly f(fq, 3);
    for (std::size_t c = 0; c < monos.size(); ++c) f.add_term(monos[c], vec[c]);
    param5.push_back(std::move(f));
  }
  auto quads = implicitize(param5, 2, q);  // quadrics cutting D in P^5
  for (int attempt = 0; attempt < 10; ++attempt) {
    std::vector<Fe> center(6);
    for (auto& c : center) c = rng.element(fq);
    if (std::all_of(center.begin(), center.end(),
                    [](Fe c) { return c == 0; }))
      continue;
    bool on_surface = std::all_of(
        quads.begin(), quads.end(),
        [&](const MultiPoly& f) { return f.eval(center) == 0; });
    if (on_surface) continue;
    auto rows = projection_rows(fq, {center});
    auto composed = project_param(fq, param5, rows);
    SurfaceModel model;
    model.n = 4;
    model.q = q;
    model.seed = seed;
    model.provenance = "delpezzo";
    model.degree = 3;
    model.parametrization = composed;
    model.source_vars = 3;
    model.generators = implicitize(composed, 3, q);
    if (model.generators.empty()) continue;
    return model;
  }
  throw std::runtime_error("delpezzo_projection: no valid center found");
}

static SurfaceModel scroll_projection_impl(int a, int b, int point_center,
                                           const char* label, std::uint32_t q,
                                           std::uint64_t seed) {
  PrimeField fq(q);
  Rng rng(seed);
  auto param = scroll_param(fq, a, b);
  const std::size_t ncoords = param.size();          // a + b + 2
  auto quads = implicitize(param, 2, q);             // quadrics cutting S
  for (int attempt = 0; attempt < 10; ++attempt) {
    std::vector<std::vector<Fe>> centers;
    if (point_center) {
      std::vector<Fe> p(ncoords);
      for (auto& c : p) c = rng.element(fq);
      if (std::all_of(p.begin(), p.end(), [](Fe c) { return c == 0; }))
        continue;
      bool on_scroll = std::all_of(
          quads.begin(), quads.end(),
          [&](const MultiPoly& f) { return f.eval(p) == 0; });
      if (on_scroll) continue;
      centers.push_back(std::move(p));
    } else {
      ProjPoint p1 = random_point(fq, ncoords - 1, rng);
      ProjPoint p2 = random_point(fq, ncoords - 1, rng);
      if (p1 == p2) continue;
      ProjLine line(fq, p1, p2);
      if (line_meets_variety(quads, line)) continue;
      centers.push_back(p1.coords());
      centers.push_back(p2.coords());
    }
    auto rows = projection_rows(fq, centers);
    if (rows.size() != 5) continue;
    auto composed = project_param(fq, param, rows);
    SurfaceModel model;
    model.n = 4;
    model.q = q;
    model.seed = seed;
    model.provenance = label;
    model.degree = 3;
    model.parametrization = composed;
    model.source_vars = 4;
    model.generators = implicitize(composed, 3, q);
    if (model.generators.empty()) continue;
    return model;
  }
  throw std::runtime_error(std::string(label) + ": no valid center found");
}

SurfaceModel scroll_projection(ScrollKind kind, std::uint32_t q,
                               std::uint64_t seed) {
  return kind == ScrollKind::S14
             ? scroll_projection_impl(1, 4, 0, "scroll-14", q, seed)
             : scroll_projection_impl(2, 3, 0, "scroll-23", q, seed);
}

SurfaceModel quartic_scroll_projection(std::uint32_t q, std::uint64_t seed) {
  return scroll_projection_impl(1, 3, 1, "quartic-scroll", q, seed);
}

std::vector<MultiPoly> implicitize(const std::vector<MultiPoly>& param,
                                   int degree, std::uint32_t q) {
  PrimeField fq(q);
  if (param.empty()) throw std::invalid_argument("implicitize: empty map");
  const std::size_t ambient_vars = param.size();
  const std::size_t src_vars = param[0].nvars();
  auto cols = monomials_of_degree(ambient_vars, degree);

  // power cache param[i]^e
  std::vector<std::vector<MultiPoly>> powers(ambient_vars);
  for (std::size_t i = 0; i < ambient_vars; ++i) {
    powers[i].push_back(mp_const(fq, src_vars, 1));
    for (int e = 1; e <= degree; ++e)
      powers[i].push_back(powers[i].back() * param[i]);
  }

  std::vector<MultiPoly> composed;
  composed.reserve(cols.size());
  std::map<Monomial, std::size_t, GrlexLess> row_index;
  for (const auto& mono : cols) {
    MultiPoly t = mp_const(fq, src_vars, 1);
    for (std::size_t i = 0; i < ambient_vars; ++i)
      if (mono[i]) t = t * powers[i][mono[i]];
    for (const auto& [m, c] : t.terms())
      row_index.emplace(m, row_index.size());
    composed.push_back(std::move(t));
  }

  Matrix mat(fq, std::max<std::size_t>(row_index.size(), 1), cols.size());
  for (std::size_t c = 0; c < composed.size(); ++c)
    for (const auto& [m, coeff] : composed[c].terms())
      mat.at(row_index.at(m), c) = coeff;

  std::vector<MultiPoly> out;
  for (const auto& vec : mat.nullspace()) {
    MultiPoly f(fq, ambient_vars);
    for (std::size_t c = 0; c < cols.size(); ++c) f.add_term(cols[c], vec[c]);
    out.push_back(std::move(f));
  }
  return out;
}

int plane_section_degree(const SurfaceModel& model,
                         const std::vector<ProjPoint>& plane, Rng& rng) {
  PrimeField fq = model.field();
  const int d = model.degree;
  const int D = d * d;  // formal resultant degree
  if (fq.modulus() <= static_cast<std::uint32_t>(D))
    throw std::domain_error("plane_section_degree: modulus too small");
  std::vector<MultiPoly> restricted;
  for (const auto& g : model.generators)
    restricted.push_back(restrict_to_plane(g, plane));

  auto combo = [&]() {
    MultiPoly acc(fq, 3);
    for (const auto& r : restricted) acc = acc + r.scaled(rng.element(fq));
    return acc;
  };
  MultiPoly A = combo(), B = combo(), C = combo();
  if (A.total_degree() != d || B.total_degree() != d || C.total_degree() != d)
    return -1;

  // Res_w of two trivariate degree-d forms, as a coefficient vector of the
  // dehomogenized binary form R(t) = R(u=t, v=1); formal degree D.
  auto res_w = [&](const MultiPoly& F, const MultiPoly& G) -> UPoly {
    std::vector<Fe> xs, ys;
    for (int t = 0; t <= D; ++t) {
      auto slice = [&](const MultiPoly& h) {
        UPoly p(static_cast<std::size_t>(d) + 1, 0);
        Fe tv = static_cast<Fe>(t);
        for (const auto& [m, c] : h.terms()) {
          Fe v = c;
          for (std::uint8_t e = 0; e < m[0]; ++e) v = fq.mul(v, tv);
          p[m[2]] = fq.add(p[m[2]], v);
        }
        return p;
      };
      xs.push_back(static_cast<Fe>(t));
      ys.push_back(up_resultant(fq, slice(F), slice(G), d, d));
    }
    return up_interpolate(fq, xs, ys);
  };

  UPoly r1 = res_w(A, B), r2 = res_w(A, C), r3 = res_w(B, C);
  if (up_deg(r1) < 0 || up_deg(r2) < 0 || up_deg(r3) < 0)
    return -1;  // a pair shares a curve component; not a finite section
  UPoly g = up_gcd(fq, up_gcd(fq, r1, r2), r3);
  int inf_mult = std::min({D - up_deg(r1), D - up_deg(r2), D - up_deg(r3)});
  int count = inf_mult > 0 ? 1 : 0;
  if (up_deg(g) >= 1)
    count += up_deg(up_squarefree(fq, g));
  return count;
}

std::vector<ProjPoint> random_plane(const PrimeField& fq, std::size_t n,
                                    Rng& rng) {
  for (;;) {
    std::vector<ProjPoint> pts{random_point(fq, n, rng),
                               random_point(fq, n, rng),
                               random_point(fq, n, rng)};
    Matrix m(fq, 3, n + 1);
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = 0; c <= n; ++c) m.at(r, c) = pts[r].coords()[c];
    if (m.rank() == 3) return pts;
  }
}

SurfaceModel make_family(const std::string& family, std::uint32_t q,
                         std::uint64_t seed) {
  if (family == "bordiga") {
    PrimeField fq(q);
    Rng rng(seed);
    for (int attempt = 0; attempt < 5; ++attempt) {
      try {
        return bordiga_from_matrix(random_linear_matrix34(fq, rng), q, seed);
      } catch (const std::runtime_error&) {
        continue;
      }
    }
    throw std::runtime_error("make_family: bordiga construction failed");
  }
  if (family == "veronese") return veronese_projection(q, seed, false);
  if (family == "veronese-degenerate")
    return veronese_projection(q, seed, true);
  if (family == "delpezzo") return delpezzo_projection(q, seed);
  if (family == "scroll14") return scroll_projection(ScrollKind::S14, q, seed);
  if (family == "scroll23") return scroll_projection(ScrollKind::S23, q, seed);
  if (family == "quartic-scroll") return quartic_scroll_projection(q, seed);
  if (family == "zak") return zak_bordiga(q, seed);
  throw std::invalid_argument("make_family: unknown family " + family);
}

}  // namespace conglab
