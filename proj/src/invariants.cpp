#include "conglab/invariants.hpp"

#include <stdexcept>

namespace conglab {

Int binomial(const Int& n, unsigned k) {
  if (n < 0) throw std::invalid_argument("binomial: negative n");
  if (n < k) return 0;
  Int num = 1, den = 1;
  for (unsigned i = 0; i < k; ++i) {
    num *= n - i;
    den *= i + 1;
  }
  return num / den;
}

static Int require_integral(const Rational& r, const char* what) {
  if (denominator(r) != 1)
    throw std::domain_error(std::string(what) + ": non-integral value");
  return numerator(r);
}

static Rational triple_points_general_rat(const SurfaceInvariants& inv) {
  const Rational m(inv.m), pi(inv.pi), Ksq(inv.Ksq), chi(inv.chi);
  return m * m * m / 6 - Rational(3, 2) * m * m + Rational(13, 3) * m -
         m * pi + Ksq + 8 * pi - 4 * chi - 8;
}

Int triple_points_general(const SurfaceInvariants& inv) {
  if (inv.n < 4)
    throw std::invalid_argument("triple_points_general: need n >= 4");
  return require_integral(triple_points_general_rat(inv),
                          "triple_points_general");
}

Int triple_points_p4(const Int& m, const Int& pi, const Int& chi) {
  return binomial(m - 1, 3) - pi * (m - 3) + 2 * chi - 2;
}

Int smooth_quintic_parity(const Int& chi, const Int& pi) {
  return 2 * (chi - pi + 1);
}

Int double_point_consistency(const SurfaceInvariants& inv) {
  Int residual = inv.m * inv.m - 10 * inv.m - 5 * inv.HK() -
                 2 * inv.Ksq + 12 * inv.chi;
  Rational delta = triple_points_general_rat(inv) -
                   Rational(triple_points_p4(inv.m, inv.pi, inv.chi));
  if (delta != -Rational(residual) / 2)
    throw std::logic_error(
        "double_point_consistency: identity delta == -residual/2 failed");
  return residual;
}

Int cayley_class(const Int& h, const Int& m) {
  if (m < 3 || h < 0) throw std::invalid_argument("cayley_class: domain");
  return h * (m - 2) - binomial(m, 3);
}

Int multiplicity_k(const Int& h, const Int& m) { return h - m + 2; }

Int clebsch_h(const Int& m, const Int& pi) {
  if (m < 3) throw std::invalid_argument("clebsch_h: need m >= 3");
  Int bound = binomial(m - 1, 2);
  if (pi < 0 || pi > bound)
    throw std::invalid_argument("clebsch_h: genus out of range");
  return bound - pi;
}

std::optional<Int> integrality_gate(const Int& m) {
  if (m == 5) throw std::invalid_argument("integrality_gate: m = 5 excluded");
  if (m <= 3 || m >= 9)
    throw std::invalid_argument("integrality_gate: need 3 < m < 9");
  Rational h = Rational(m * (m + 2)) / 6 - 1;
  if (denominator(h) != 1 || h < 0) return std::nullopt;
  return numerator(h);
}

std::optional<Int> parasitic_excess_checked(const Int& m, const Int& k,
                                            const Int& a, int n) {
  if (k < 1) throw std::invalid_argument("parasitic_excess: need k >= 1");
  Int nn(n - 1);
  Int x = nn * nn * k * k - k * k * m - 1 - 2 * a;
  if (x < 0) return std::nullopt;
  return x;
}

Int parasitic_excess(const Int& m, const Int& k, const Int& a, int n) {
  auto x = parasitic_excess_checked(m, k, a, n);
  if (!x) throw std::domain_error("parasitic_excess: negative excess");
  return *x;
}

bool check_agen(const std::vector<std::pair<Int, Int>>& components,
                const Int& a0, const Int& a1, bool pure_dim) {
  Int sum = 0;
  for (const auto& [l, k] : components) {
    if (l < 1 || k < 1)
      throw std::invalid_argument("check_agen: components must be >= 1");
    sum += l * k;
  }
  return pure_dim ? sum == a0 + a1 : sum <= a0 + a1;
}

bool check_bgen(const Int& a0, const Int& a1, const Int& a2, const Int& x,
                const std::vector<std::pair<Int, Int>>& components) {
  Int sum = 0;
  for (const auto& [k, m] : components) sum += k * k * m;
  return (a0 + a1) * (a0 + a1) == x + sum + a0 + 2 * a1 + a2;
}

Int parasitic_multiplicity(const std::vector<Int>& mus, int n) {
  Int i = 0;
  for (const auto& mu : mus) {
    if (mu < 0) throw std::invalid_argument("parasitic_multiplicity: mu < 0");
    i += binomial(mu, static_cast<unsigned>(n - 1));
  }
  return i;
}

static void decompose_rec(const Int& remaining, const Int& mu_min,
                          std::vector<std::pair<Int, Int>>& acc,
                          std::vector<ParasiticDecomposition>& out) {
  if (remaining == 0) {
    out.push_back(ParasiticDecomposition{acc});
    return;
  }
  // Plane-curve degree is capped at the smallest mu with C(mu,3)^2 > x.
  for (Int mu = mu_min;; ++mu) {
    Int i = binomial(mu, 3);
    Int w = i * i;
    if (w > remaining) break;
    for (Int b = 1; w * b <= remaining; ++b) {
      acc.emplace_back(mu, b);
      decompose_rec(remaining - w * b, mu + 1, acc, out);
      acc.pop_back();
    }
  }
}

std::vector<ParasiticDecomposition> decompose_x(const Int& x, int n) {
  if (x < 0) throw std::invalid_argument("decompose_x: x < 0");
  if (n != 4)
    throw std::invalid_argument("decompose_x: only ambient n = 4 supported");
  std::vector<ParasiticDecomposition> out;
  std::vector<std::pair<Int, Int>> acc;
  decompose_rec(x, 3, acc, out);
  return out;
}

bool focal_budget_check(const FocalBudget& budget) {
  int sum = 0;
  for (const auto& [i, h] : budget.contacts) {
    if (i < 1 || h < 1) return false;
    if (h < i) return false;
    sum += h;
  }
  return sum == budget.n - 1;
}

std::pair<Rational, Rational> degree_bounds(int n, const Int& kprime) {
  if (kprime < 1) throw std::invalid_argument("degree_bounds: need k' >= 1");
  return {Rational(n - 1) / Rational(kprime), Rational((n - 1) * (n - 1))};
}

Int congruence_sectional_genus(const Int& p_a, const Int& a) {
  if (p_a < 0 || a < 0)
    throw std::invalid_argument("congruence_sectional_genus: domain");
  return p_a + a - 1;
}

ClassifyResult classify_p4() {
  ClassifyResult res;
  for (Int m = 4; m <= 8; ++m) {
    if (m != 5) {
      auto h = integrality_gate(m);
      if (!h) {
        res.exclusions.push_back(
            {m, std::nullopt, "m(m+2)/6 - 1 is not an integer"});
        continue;
      }
      Int k = multiplicity_k(*h, m);
      Int a = cayley_class(*h, m);
      Int pi = binomial(m - 1, 2) - *h;  // Clebsch
      auto x = parasitic_excess_checked(m, k, a);
      if (!x) {
        res.exclusions.push_back({m, *h, "negative parasitic excess"});
        continue;
      }
      res.rows.push_back({m, *h, k, a, *x, pi});
    } else {
      // m = 5: the closed form degenerates; sweep h under the Clebsch bound.
      Int h_max = binomial(m - 1, 2);  // pi >= 0
      for (Int h = 0; h <= h_max; ++h) {
        Int k = multiplicity_k(h, m);
        if (k < 1) {
          res.exclusions.push_back({m, h, "multiplicity k < 1"});
          continue;
        }
        Int a = cayley_class(h, m);
        if (a < 0) {
          res.exclusions.push_back({m, h, "negative class a"});
          continue;
        }
        auto x = parasitic_excess_checked(m, k, a);
        if (!x) {
          res.exclusions.push_back({m, h, "negative parasitic excess"});
          continue;
        }
        res.rows.push_back({m, h, k, a, *x, h_max - h});
      }
    }
  }
  return res;
}

}  // namespace conglab
