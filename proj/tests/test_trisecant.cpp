#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "conglab/json_io.hpp"
#include "conglab/surfaces.hpp"
#include "conglab/trisecant.hpp"

using namespace conglab;

namespace {

ProjPoint random_point_off_surface(const SurfaceModel& model, Rng& rng) {
  PrimeField fq = model.field();
  for (;;) {
    ProjPoint P = random_point(fq, static_cast<std::size_t>(model.n), rng);
    for (const auto& g : model.generators)
      if (g.eval(P.coords()) != 0) return P;
  }
}

}  // namespace

TEST_CASE("verdicts on the parasitic-plane cubic") {
  auto [model, plane] = bordiga_with_parasitic_plane(101, 3);
  PrimeField fq = model.field();
  // a line of the plane meets the plane cubic in three points (counted in
  // the algebraic closure): trisecant
  ProjLine in_plane(fq, plane[0], plane[1]);
  CHECK(is_trisecant(model, in_plane) == LineVerdict::trisecant);
  CHECK(!line_in_surface(model, in_plane));

  // random lines miss the 3-dimensional trisecant family
  Rng rng(17);
  int not_count = 0;
  for (int trial = 0; trial < 20; ++trial) {
    ProjPoint a = random_point(fq, 4, rng);
    ProjPoint b = random_point(fq, 4, rng);
    if (a == b) continue;
    if (is_trisecant(model, ProjLine(fq, a, b)) == LineVerdict::not_trisecant)
      ++not_count;
  }
  CHECK(not_count >= 18);
}

TEST_CASE("degree-2 models never report a trisecant") {
  SurfaceModel model = make_family("veronese-degenerate", 101, 1);
  PrimeField fq = model.field();
  Rng rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    ProjPoint a = random_point(fq, 4, rng);
    ProjPoint b = random_point(fq, 4, rng);
    if (a == b) continue;
    CHECK(is_trisecant(model, ProjLine(fq, a, b)) != LineVerdict::trisecant);
  }
  ProjPoint P = random_point_off_surface(model, rng);
  PointCount pc = count_trisecants_through_point(model, P);
  CHECK(pc.trisecants == 0);
  CHECK(pc.contained == 0);
}

TEST_CASE("ruling lines of the quartic scroll are contained") {
  SurfaceModel model = make_family("quartic-scroll", 101, 1);
  PrimeField fq = model.field();
  // ruling over (s:t) = (1:2): u,v parametrize a line of the scroll, and
  // projection keeps it a line
  auto image = [&](Fe u, Fe v) {
    std::vector<Fe> src = {1, 2, u, v};
    std::vector<Fe> out;
    for (const auto& p : model.parametrization) out.push_back(p.eval(src));
    return ProjPoint(fq, out);
  };
  ProjLine ruling(fq, image(1, 0), image(0, 1));
  CHECK(line_in_surface(model, ruling));
  CHECK(is_trisecant(model, ruling) == LineVerdict::contained);

  Rng rng(31);
  ProjPoint a = random_point(fq, 4, rng);
  ProjPoint b = random_point(fq, 4, rng);
  CHECK(!line_in_surface(model, ProjLine(fq, a, b)));
}

TEST_CASE("kernel agrees with the serial reference at small q") {
  for (const char* family : {"bordiga", "veronese", "quartic-scroll"}) {
    SurfaceModel model = make_family(family, 13, 1);
    Rng rng(5);
    for (int i = 0; i < 2; ++i) {
      ProjPoint P = random_point_off_surface(model, rng);
      PointCount ref = count_trisecants_reference(model, P);
      PointCount fast = count_trisecants_through_point(model, P);
      CHECK(ref.trisecants == fast.trisecants);
      CHECK(ref.contained == fast.contained);
    }
  }
}

TEST_CASE("count is invariant under renormalization and generator scaling") {
  SurfaceModel model = make_family("bordiga", 101, 1);
  PrimeField fq = model.field();
  Rng rng(41);
  ProjPoint P = random_point_off_surface(model, rng);
  PointCount base = count_trisecants_through_point(model, P);

  // same projective point from rescaled coordinates
  std::vector<Fe> scaled;
  for (Fe c : P.coords()) scaled.push_back(fq.mul(c, 37));
  PointCount renorm =
      count_trisecants_through_point(model, ProjPoint(fq, scaled));
  CHECK(renorm.trisecants == base.trisecants);

  // generators scaled by nonzero constants
  SurfaceModel rescaled = model;
  Fe scale = 2;
  for (auto& g : rescaled.generators) {
    g = g.scaled(scale);
    scale = fq.mul(scale, 3);
  }
  PointCount sc = count_trisecants_through_point(rescaled, P);
  CHECK(sc.trisecants == base.trisecants);

  // verdicts are scale-invariant line by line
  for (int trial = 0; trial < 10; ++trial) {
    ProjPoint a = random_point(fq, 4, rng);
    ProjPoint b = random_point(fq, 4, rng);
    if (a == b) continue;
    ProjLine L(fq, a, b);
    CHECK(is_trisecant(model, L) == is_trisecant(rescaled, L));
  }
}

TEST_CASE("points on the surface are rejected") {
  SurfaceModel model = make_family("veronese", 101, 1);
  PrimeField fq = model.field();
  // image of a parameter point lies on the surface
  std::vector<Fe> src = {1, 2, 3};
  std::vector<Fe> img;
  for (const auto& p : model.parametrization) img.push_back(p.eval(src));
  CHECK_THROWS_AS(
      count_trisecants_through_point(model, ProjPoint(fq, img)),
      std::invalid_argument);
}

TEST_CASE("estimate_order is deterministic and mode-aware") {
  SurfaceModel model = make_family("veronese-degenerate", 101, 1);
  TrisecantReport a = estimate_order(model, 20, 7);
  TrisecantReport b = estimate_order(model, 20, 7);
  CHECK(report_to_json(a).dump() == report_to_json(b).dump());
  CHECK(a.mode == 0);
  CHECK(a.anomalies.empty());
  CHECK(a.counts.size() == 20);

  TrisecantReport c = estimate_order(model, 20, 7, 1);
  TrisecantReport d = estimate_order(model, 20, 7, 2);
  CHECK(report_to_json(c).dump() == report_to_json(d).dump());

  CHECK_THROWS_AS(estimate_order(model, 0, 7), std::invalid_argument);
}

TEST_CASE("plane section gcd certificates") {
  auto [model, plane] = bordiga_with_parasitic_plane(101, 3);
  PlaneSectionReport rep = plane_section(model, plane);
  CHECK(rep.gcd_degree == 3);
  int zero_rows = 0;
  for (int r : rep.residuals) zero_rows += (r == -1);
  CHECK(zero_rows == 3);

  // five random planes show no curve component
  PrimeField fq = model.field();
  Rng rng(53);
  for (int i = 0; i < 5; ++i) {
    auto p = random_plane(fq, 4, rng);
    CHECK(plane_section(model, p, static_cast<std::uint64_t>(i)).gcd_degree == 0);
  }
}

TEST_CASE("a conic of the del pezzo survives projection: gcd degree 2") {
  SurfaceModel model = make_family("delpezzo", 101, 1);
  PrimeField fq = model.field();
  // a line of P^2 through exactly one base point (1:0:0) maps to a conic;
  // its plane is spanned by three image points. The direction (1:2) avoids
  // the other base points.
  auto image = [&](Fe a, Fe b) {
    std::vector<Fe> src = {a, b, fq.mul(2, b)};
    std::vector<Fe> out;
    for (const auto& p : model.parametrization) out.push_back(p.eval(src));
    return ProjPoint(fq, out);
  };
  std::vector<ProjPoint> plane{image(1, 1), image(2, 1), image(3, 1)};
  PlaneSectionReport rep = plane_section(model, plane);
  CHECK(rep.gcd_degree == 2);
}

TEST_CASE("trisecant report JSON round trip") {
  SurfaceModel model = make_family("veronese-degenerate", 101, 1);
  TrisecantReport rep = estimate_order(model, 5, 3);
  nlohmann::json j = report_to_json(rep);
  TrisecantReport back = report_from_json(j);
  CHECK(report_to_json(back).dump() == j.dump());
  CHECK(j.find("wall_ms") == j.end());  // wall time never serialized
  nlohmann::json bad = j;
  bad["schema"] = "v2";
  CHECK_THROWS_AS(report_from_json(bad), std::runtime_error);
}
