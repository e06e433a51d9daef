#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "conglab/json_io.hpp"
#include "conglab/surfaces.hpp"

using namespace conglab;

namespace {

// Exact check that every generator composed with the parametrization is the
// zero polynomial.
void check_vanishing(const SurfaceModel& model) {
  REQUIRE(model.has_parametrization());
  for (const auto& g : model.generators)
    CHECK(g.compose(model.parametrization).is_zero());
}

int section_degree_with_retries(const SurfaceModel& model, int retries,
                                std::uint64_t seed) {
  Rng rng(seed);
  PrimeField fq = model.field();
  int d = -1;
  for (int i = 0; i < retries && d < 0; ++i) {
    auto plane = random_plane(fq, static_cast<std::size_t>(model.n), rng);
    d = plane_section_degree(model, plane, rng);
  }
  return d;
}

std::vector<MultiPoly> quadric_veronese_param(const PrimeField& fq) {
  auto u = mp_var(fq, 3, 0), v = mp_var(fq, 3, 1), w = mp_var(fq, 3, 2);
  return {u * u, u * v, u * w, v * v, v * w, w * w};
}

}  // namespace

TEST_CASE("implicitize recovers the classical quadrics of the Veronese") {
  PrimeField fq(101);
  auto quads = implicitize(quadric_veronese_param(fq), 2, 101);
  CHECK(quads.size() == 6);
  for (const auto& f : quads) {
    CHECK(f.total_degree() == 2);
    CHECK(f.is_homogeneous());
    CHECK(f.compose(quadric_veronese_param(fq)).is_zero());
  }
}

TEST_CASE("bordiga construction") {
  SurfaceModel model = make_family("bordiga", 101, 1);
  CHECK(model.generators.size() == 4);
  for (const auto& g : model.generators) {
    CHECK(g.total_degree() == 3);
    CHECK(g.is_homogeneous());
  }
  CHECK(model.provenance == "bordiga");
  CHECK(!model.has_parametrization());

  // deterministic given (q, seed)
  SurfaceModel again = make_family("bordiga", 101, 1);
  CHECK(model.generators == again.generators);

  CHECK(section_degree_with_retries(model, 3, 5) == 6);
}

TEST_CASE("bordiga rejects cones") {
  PrimeField fq(101);
  LinearMatrix34 M;
  M.entries.assign(3, {});
  MultiPoly x0 = mp_var(fq, 5, 0);
  for (auto& row : M.entries)
    for (int c = 0; c < 4; ++c) row.push_back(x0.scaled(static_cast<Fe>(c + 2)));
  CHECK_THROWS_AS(bordiga_from_matrix(M, 101, 0), std::invalid_argument);
}

TEST_CASE("bordiga with parasitic plane") {
  auto [model, plane] = bordiga_with_parasitic_plane(101, 3);
  CHECK(model.generators.size() == 4);
  // three minors restrict to zero on the plane, the fourth to a cubic
  int zero = 0, cubic = 0;
  for (const auto& g : model.generators) {
    MultiPoly r = restrict_to_plane(g, plane);
    if (r.is_zero())
      ++zero;
    else if (r.total_degree() == 3)
      ++cubic;
  }
  CHECK(zero == 3);
  CHECK(cubic == 1);
}

TEST_CASE("zak slice of the quintic secant catalecticant") {
  PrimeField fq(101);
  MultiPoly slice(fq, 5);
  SurfaceModel model = zak_bordiga(101, 2, &slice);
  CHECK(model.generators.size() == 4);
  for (const auto& g : model.generators) CHECK(g.total_degree() == 3);
  CHECK(section_degree_with_retries(model, 3, 9) == 6);

  // singular points sit over slice ∩ rational normal curve: the parameter
  // polynomial t^5 - l(1, t, t^2, t^3, t^4) is monic of degree 5
  REQUIRE(!slice.is_zero());
  UPoly param(6, 0);
  param[5] = 1;
  for (const auto& [m, c] : slice.terms())
    for (std::size_t v = 0; v < 5; ++v)
      if (m[v] == 1) param[v] = fq.neg(c);
  CHECK(up_deg(param) == 5);
}

TEST_CASE("generic veronese projection") {
  SurfaceModel model = make_family("veronese", 101, 1);
  CHECK(model.degree == 3);
  CHECK(model.source_vars == 3);
  check_vanishing(model);
  // lies on no quadric
  CHECK(implicitize(model.parametrization, 2, 101).empty());
  CHECK(section_degree_with_retries(model, 3, 11) == 4);
}

TEST_CASE("degenerate veronese projection") {
  SurfaceModel model = make_family("veronese-degenerate", 101, 1);
  CHECK(model.degree == 2);
  CHECK(model.generators.size() == 2);  // complete intersection of quadrics
  check_vanishing(model);
  CHECK(section_degree_with_retries(model, 3, 13) == 4);
}

TEST_CASE("del pezzo projection") {
  SurfaceModel model = make_family("delpezzo", 101, 1);
  CHECK(model.degree == 3);
  check_vanishing(model);
  CHECK(section_degree_with_retries(model, 3, 17) == 5);

  // generator count is a linear-algebra dimension, stable across seeds
  SurfaceModel other = make_family("delpezzo", 101, 7);
  CHECK(model.generators.size() == other.generators.size());
}

TEST_CASE("quintic scroll projections") {
  for (const char* family : {"scroll14", "scroll23"}) {
    SurfaceModel model = make_family(family, 101, 1);
    CHECK(model.degree == 3);
    CHECK(model.source_vars == 4);
    check_vanishing(model);

    // The full cubic system through the projected scroll carries one extra
    // degree-1 base component, so its generic plane section has 6 points.
    // The quartic system cuts the surface itself: 5 points, the true degree.
    SurfaceModel quartic = model;
    quartic.generators = implicitize(model.parametrization, 4, 101);
    quartic.degree = 4;
    int cubic_count = 0, quartic_count = 0;
    Rng rng(19);
    PrimeField fq = model.field();
    for (int i = 0; i < 3; ++i) {
      auto plane = random_plane(fq, 4, rng);
      Rng r1(7), r2(7);
      cubic_count = std::max(cubic_count, plane_section_degree(model, plane, r1));
      quartic_count =
          std::max(quartic_count, plane_section_degree(quartic, plane, r2));
    }
    CHECK(cubic_count == 6);
    CHECK(quartic_count == 5);
  }
}

TEST_CASE("quartic scroll projection") {
  SurfaceModel model = make_family("quartic-scroll", 101, 1);
  CHECK(model.degree == 3);
  check_vanishing(model);
  CHECK(section_degree_with_retries(model, 3, 23) == 4);
}

TEST_CASE("construction determinism across all families") {
  for (const char* family :
       {"bordiga", "veronese", "veronese-degenerate", "delpezzo", "scroll14",
        "scroll23", "quartic-scroll", "zak"}) {
    SurfaceModel a = make_family(family, 101, 42);
    SurfaceModel b = make_family(family, 101, 42);
    CHECK(a.generators == b.generators);
    CHECK(a.parametrization == b.parametrization);
  }
  CHECK_THROWS_AS(make_family("nonsense", 101, 0), std::invalid_argument);
}

TEST_CASE("generators vanish at many random parameter points") {
  SurfaceModel model = make_family("veronese", 131, 4);
  PrimeField fq = model.field();
  Rng rng(88);
  for (int trial = 0; trial < 50; ++trial) {
    ProjPoint s = random_point(fq, 2, rng);
    std::vector<Fe> img;
    for (const auto& p : model.parametrization) img.push_back(p.eval(s.coords()));
    for (const auto& g : model.generators) CHECK(g.eval(img) == 0);
  }
}

TEST_CASE("surface model JSON round trip is bit-exact") {
  for (const char* family : {"bordiga", "veronese-degenerate", "scroll14"}) {
    SurfaceModel model = make_family(family, 101, 9);
    nlohmann::json j = surface_to_json(model);
    SurfaceModel back = surface_from_json(j);
    CHECK(back.generators == model.generators);
    CHECK(back.parametrization == model.parametrization);
    CHECK(back.provenance == model.provenance);
    CHECK(surface_to_json(back).dump() == j.dump());
  }
  nlohmann::json bad = surface_to_json(make_family("bordiga", 101, 9));
  bad["schema"] = "v0";
  CHECK_THROWS_AS(surface_from_json(bad), std::runtime_error);
}
