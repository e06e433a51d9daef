// Benchmark: serial per-line reference count vs the screened parallel
// kernel, on the same surface and points. Verifies agreement, then reports
// wall times and directions/second.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <string>

#include "conglab/surfaces.hpp"
#include "conglab/trisecant.hpp"

using Clock = std::chrono::steady_clock;

static double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

int main(int argc, char** argv) {
  std::string family = "bordiga";
  std::uint32_t q_ref = 13;    // reference path is O(q^3) full rank tests
  std::uint32_t q_kernel = 101;
  int points = 3;
  int threads = 0;
  for (int i = 1; i + 1 < argc; i += 2) {
    std::string flag = argv[i];
    std::string val = argv[i + 1];
    if (flag == "--family") family = val;
    else if (flag == "--q-ref") q_ref = static_cast<std::uint32_t>(std::stoul(val));
    else if (flag == "--q") q_kernel = static_cast<std::uint32_t>(std::stoul(val));
    else if (flag == "--points") points = std::stoi(val);
    else if (flag == "--threads") threads = std::stoi(val);
    else {
      std::cerr << "unknown flag " << flag << "\n";
      return 2;
    }
  }

  using namespace conglab;

  // Agreement at a modulus small enough for the reference implementation.
  {
    SurfaceModel model = make_family(family, q_ref, 1);
    PrimeField fq = model.field();
    Rng rng(99);
    double t_ref = 0, t_fast = 0;
    long lines = 0;
    for (int i = 0; i < points; ++i) {
      ProjPoint P = random_point(fq, 4, rng);
      bool on = true;
      for (const auto& g : model.generators)
        if (g.eval(P.coords()) != 0) { on = false; break; }
      if (on) { --i; continue; }
      auto t0 = Clock::now();
      PointCount ref = count_trisecants_reference(model, P);
      t_ref += ms_since(t0);
      t0 = Clock::now();
      PointCount fast = count_trisecants_through_point(model, P, threads);
      t_fast += ms_since(t0);
      lines += static_cast<long>(q_ref) * q_ref * q_ref + q_ref * q_ref + q_ref + 1;
      if (ref.trisecants != fast.trisecants || ref.contained != fast.contained) {
        std::cerr << "MISMATCH at q=" << q_ref << ": reference "
                  << ref.trisecants << "/" << ref.contained << " vs kernel "
                  << fast.trisecants << "/" << fast.contained << "\n";
        return 1;
      }
    }
    std::cout << family << " q=" << q_ref << " (" << points
              << " points, agreement OK)\n"
              << "  reference: " << t_ref << " ms  ("
              << (lines / t_ref * 1000.0) << " lines/s)\n"
              << "  kernel:    " << t_fast << " ms  ("
              << (lines / t_fast * 1000.0) << " lines/s)\n"
              << "  speedup:   " << (t_ref / t_fast) << "x\n";
  }

  // Kernel throughput at production modulus.
  {
    SurfaceModel model = make_family(family, q_kernel, 1);
    PrimeField fq = model.field();
    Rng rng(7);
    double t_fast = 0;
    long lines = 0;
    long mode = -1;
    for (int i = 0; i < points; ++i) {
      ProjPoint P = random_point(fq, 4, rng);
      bool on = true;
      for (const auto& g : model.generators)
        if (g.eval(P.coords()) != 0) { on = false; break; }
      if (on) { --i; continue; }
      auto t0 = Clock::now();
      PointCount fast = count_trisecants_through_point(model, P, threads);
      t_fast += ms_since(t0);
      mode = fast.trisecants;
      lines += static_cast<long>(q_kernel) * q_kernel * q_kernel +
               static_cast<long>(q_kernel) * q_kernel + q_kernel + 1;
    }
    std::cout << family << " q=" << q_kernel << " kernel only: " << t_fast
              << " ms for " << lines << " lines ("
              << (lines / t_fast * 1000.0) << " lines/s), last count " << mode
              << "\n";
  }
  return 0;
}
