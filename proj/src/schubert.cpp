#include "conglab/schubert.hpp"

#include <stdexcept>

namespace conglab {

SchubertSymbol::SchubertSymbol(int a_, int b_, int n_) : a(a_), b(b_), n(n_) {
  if (n < 2) throw std::invalid_argument("SchubertSymbol: need n >= 2");
  if (!(n - 1 >= a && a >= b && b >= 0))
    throw std::invalid_argument("SchubertSymbol: need n-1 >= a >= b >= 0");
}

SchubertClass SchubertClass::sigma(int n, int a, int b) {
  SchubertClass c(n);
  c.add_term(SchubertSymbol(a, b, n), 1);
  return c;
}

int SchubertClass::codim() const {
  int d = -1;
  for (const auto& [s, c] : terms_) {
    if (d < 0) d = s.codim();
    if (s.codim() != d)
      throw std::logic_error("SchubertClass: not graded-homogeneous");
  }
  return d;
}

void SchubertClass::add_term(const SchubertSymbol& s, const Int& c) {
  if (s.n != n_)
    throw std::invalid_argument("SchubertClass: ambient dimension mismatch");
  if (c == 0) return;
  if (!terms_.empty() && terms_.begin()->first.codim() != s.codim())
    throw std::invalid_argument("SchubertClass: mixed codimension");
  auto it = terms_.find(s);
  if (it == terms_.end()) {
    terms_.emplace(s, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Int SchubertClass::coefficient(const SchubertSymbol& s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? Int(0) : it->second;
}

SchubertClass SchubertClass::operator+(const SchubertClass& o) const {
  if (n_ != o.n_)
    throw std::invalid_argument("SchubertClass: ambient dimension mismatch");
  SchubertClass r = *this;
  for (const auto& [s, c] : o.terms_) r.add_term(s, c);
  return r;
}

SchubertClass SchubertClass::operator-(const SchubertClass& o) const {
  if (n_ != o.n_)
    throw std::invalid_argument("SchubertClass: ambient dimension mismatch");
  SchubertClass r = *this;
  for (const auto& [s, c] : o.terms_) r.add_term(s, -c);
  return r;
}

SchubertClass SchubertClass::scaled(const Int& c) const {
  SchubertClass r(n_);
  for (const auto& [s, cc] : terms_) r.add_term(s, cc * c);
  return r;
}

SchubertClass pieri(const SchubertClass& cls, int p) {
  const int n = cls.ambient();
  if (p < 0 || p > n - 1)
    throw std::invalid_argument("pieri: need 0 <= p <= n-1");
  SchubertClass r(n);
  for (const auto& [s, coeff] : cls.terms()) {
    // sigma_{a,b} * sigma_p = sum of sigma_{c,d}, c+d = a+b+p, c >= a >= d >= b.
    for (int c = s.a; c <= n - 1; ++c) {
      int d = s.a + s.b + p - c;
      if (d < s.b || d > s.a || d > c) continue;
      r.add_term(SchubertSymbol(c, d, n), coeff);
    }
  }
  return r;
}

// sigma_p with p outside [0, n-1] is zero in the Chow ring; Giambelli chains
// need that convention for sigma_{a+1} when a = n-1.
static SchubertClass pieri_or_zero(const SchubertClass& cls, int p) {
  if (p < 0 || p > cls.ambient() - 1) return SchubertClass(cls.ambient());
  return pieri(cls, p);
}

SchubertClass mult(const SchubertClass& c1, const SchubertClass& c2) {
  const int n = c1.ambient();
  if (n != c2.ambient())
    throw std::invalid_argument("mult: ambient dimension mismatch");
  SchubertClass r(n);
  bool first = true;
  for (const auto& [s, coeff] : c2.terms()) {
    // Giambelli: sigma_{a,b} = sigma_a * sigma_b - sigma_{a+1} * sigma_{b-1}.
    SchubertClass t = pieri_or_zero(pieri_or_zero(c1, s.a), s.b);
    if (s.b >= 1)
      t = t - pieri_or_zero(pieri_or_zero(c1, s.a + 1), s.b - 1);
    t = t.scaled(coeff);
    if (first) {
      r = t;
      first = false;
    } else {
      r = r + t;
    }
  }
  return r;
}

Int pair(const SchubertClass& c1, const SchubertClass& c2) {
  const int n = c1.ambient();
  if (n != c2.ambient())
    throw std::invalid_argument("pair: ambient dimension mismatch");
  if (c1.is_zero() || c2.is_zero()) return 0;
  if (c1.codim() + c2.codim() != 2 * (n - 1))
    throw std::invalid_argument("pair: codimensions not complementary");
  SchubertClass p = mult(c1, c2);
  return p.coefficient(SchubertSymbol(n - 1, n - 1, n));
}

CongruenceDegrees::CongruenceDegrees(int n, std::vector<Int> degrees)
    : n_(n), degrees_(std::move(degrees)) {
  if (n_ < 2) throw std::invalid_argument("CongruenceDegrees: need n >= 2");
  if (degrees_.size() != static_cast<std::size_t>(nu() + 1))
    throw std::invalid_argument("CongruenceDegrees: need exactly nu+1 degrees");
  for (const auto& d : degrees_)
    if (d < 0) throw std::invalid_argument("CongruenceDegrees: negative degree");
}

Int CongruenceDegrees::degree(int i) const {
  if (i < 0) throw std::invalid_argument("CongruenceDegrees: negative index");
  return i <= nu() ? degrees_[static_cast<std::size_t>(i)] : Int(0);
}

SchubertClass CongruenceDegrees::to_class() const {
  SchubertClass c(n_);
  for (int i = 0; i <= nu(); ++i)
    c.add_term(SchubertSymbol(n_ - 1 - i, i, n_), degree(i));
  return c;
}

Int v_pi_degree(const CongruenceDegrees& B) {
  const int n = B.ambient();
  SchubertClass g = pieri(B.to_class(), 1);
  // pairing with sigma_{n-2,0} extracts the coefficient of its dual,
  // sigma_{n-1,1}
  Int deg = pair(g, SchubertClass::sigma(n, n - 2, 0));
  if (deg != B.degree(0) + B.degree(1))
    throw std::logic_error("v_pi_degree: pairing disagrees with a0+a1");
  return deg;
}

Int sigma_scroll_degree(const CongruenceDegrees& B) {
  const int n = B.ambient();
  if (n <= 3) throw std::invalid_argument("sigma_scroll_degree: need n > 3");
  SchubertClass g = pieri(pieri(B.to_class(), 1), 1);
  // pairing with sigma_{n-3,0} extracts the coefficient of its dual,
  // sigma_{n-1,2}
  Int deg = pair(g, SchubertClass::sigma(n, n - 3, 0));
  if (deg != B.degree(0) + 2 * B.degree(1) + B.degree(2))
    throw std::logic_error("sigma_scroll_degree: pairing disagrees");
  return deg;
}

}  // namespace conglab
