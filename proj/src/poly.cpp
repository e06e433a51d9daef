#include "conglab/poly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "conglab/linalg.hpp"

namespace conglab {

void up_trim(UPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int up_deg(const UPoly& p) {
  for (std::size_t i = p.size(); i-- > 0;)
    if (p[i] != 0) return static_cast<int>(i);
  return -1;
}

UPoly up_add(const PrimeField& fq, const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = fq.add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  up_trim(r);
  return r;
}

UPoly up_sub(const PrimeField& fq, const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = fq.sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  up_trim(r);
  return r;
}

UPoly up_mul(const PrimeField& fq, const UPoly& a, const UPoly& b) {
  if (up_deg(a) < 0 || up_deg(b) < 0) return {};
  UPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = fq.add(r[i + j], fq.mul(a[i], b[j]));
  }
  up_trim(r);
  return r;
}

UPoly up_scale(const PrimeField& fq, const UPoly& a, Fe c) {
  if (c == 0) return {};
  UPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = fq.mul(a[i], c);
  up_trim(r);
  return r;
}

Fe up_eval(const PrimeField& fq, const UPoly& p, Fe x) {
  Fe acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = fq.add(fq.mul(acc, x), p[i]);
  return acc;
}

UPoly up_derivative(const PrimeField& fq, const UPoly& p) {
  if (p.size() <= 1) return {};
  UPoly r(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i)
    r[i - 1] = fq.mul(p[i], fq.reduce(static_cast<std::int64_t>(i)));
  up_trim(r);
  return r;
}

UPoly up_rem(const PrimeField& fq, const UPoly& a, const UPoly& b) {
  int db = up_deg(b);
  if (db < 0) throw std::domain_error("up_rem: division by zero");
  UPoly r = a;
  up_trim(r);
  Fe lead_inv = fq.inv(b[static_cast<std::size_t>(db)]);
  while (up_deg(r) >= db) {
    int dr = up_deg(r);
    Fe f = fq.mul(r[static_cast<std::size_t>(dr)], lead_inv);
    for (int i = 0; i <= db; ++i)
      r[static_cast<std::size_t>(dr - db + i)] =
          fq.sub(r[static_cast<std::size_t>(dr - db + i)],
                 fq.mul(f, b[static_cast<std::size_t>(i)]));
    up_trim(r);
  }
  return r;
}

UPoly up_gcd(const PrimeField& fq, const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  up_trim(x);
  up_trim(y);
  if (up_deg(x) < 0 && up_deg(y) < 0)
    throw std::domain_error("up_gcd: both arguments zero");
  while (up_deg(y) >= 0) {
    UPoly r = up_rem(fq, x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return up_scale(fq, x, fq.inv(x[static_cast<std::size_t>(up_deg(x))]));
}

static UPoly up_quo(const PrimeField& fq, const UPoly& a, const UPoly& b) {
  int db = up_deg(b);
  if (db < 0) throw std::domain_error("up_quo: division by zero");
  UPoly num = a;
  up_trim(num);
  int dn = up_deg(num);
  if (dn < db) return {};
  UPoly quo(static_cast<std::size_t>(dn - db) + 1, 0);
  Fe lead_inv = fq.inv(b[static_cast<std::size_t>(db)]);
  while ((dn = up_deg(num)) >= db) {
    Fe f = fq.mul(num[static_cast<std::size_t>(dn)], lead_inv);
    quo[static_cast<std::size_t>(dn - db)] = f;
    for (int i = 0; i <= db; ++i)
      num[static_cast<std::size_t>(dn - db + i)] =
          fq.sub(num[static_cast<std::size_t>(dn - db + i)],
                 fq.mul(f, b[static_cast<std::size_t>(i)]));
    up_trim(num);
  }
  up_trim(quo);
  return quo;
}

UPoly up_squarefree(const PrimeField& fq, const UPoly& p) {
  int d = up_deg(p);
  if (d < 0) throw std::domain_error("up_squarefree: zero polynomial");
  if (d == 0) return {1};
  UPoly dp = up_derivative(fq, p);
  if (up_deg(dp) < 0)
    throw std::domain_error("up_squarefree: derivative vanished (char p)");
  UPoly g = up_gcd(fq, p, dp);
  UPoly quo = up_quo(fq, p, g);
  return up_scale(fq, quo, fq.inv(quo[static_cast<std::size_t>(up_deg(quo))]));
}

UPoly up_interpolate(const PrimeField& fq, std::span<const Fe> xs,
                     std::span<const Fe> ys) {
  if (xs.size() != ys.size())
    throw std::invalid_argument("up_interpolate: size mismatch");
  UPoly result;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    UPoly num = {1};
    Fe den = 1;
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      num = up_mul(fq, num, {fq.neg(xs[j]), 1});
      den = fq.mul(den, fq.sub(xs[i], xs[j]));
    }
    result = up_add(fq, result, up_scale(fq, num, fq.mul(ys[i], fq.inv(den))));
  }
  return result;
}

Fe up_resultant(const PrimeField& fq, const UPoly& a, const UPoly& b, int da,
                int db) {
  if (up_deg(a) > da || up_deg(b) > db)
    throw std::invalid_argument("up_resultant: degree exceeds formal degree");
  if (da == 0 && db == 0) return 1;
  std::size_t n = static_cast<std::size_t>(da + db);
  Matrix syl(fq, n, n);
  auto coef = [](const UPoly& p, int i) -> Fe {
    return (i >= 0 && i < static_cast<int>(p.size())) ? p[static_cast<std::size_t>(i)] : 0;
  };
  for (int r = 0; r < db; ++r)
    for (int c = 0; c <= da; ++c)
      syl.at(static_cast<std::size_t>(r), static_cast<std::size_t>(r + c)) =
          coef(a, da - c);
  for (int r = 0; r < da; ++r)
    for (int c = 0; c <= db; ++c)
      syl.at(static_cast<std::size_t>(db + r),
             static_cast<std::size_t>(r + c)) = coef(b, db - c);
  return syl.det();
}

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
  int da = std::accumulate(a.begin(), a.end(), 0);
  int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da < db;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

void MultiPoly::add_term(const Monomial& exps, Fe c) {
  if (exps.size() != nvars_)
    throw std::invalid_argument("MultiPoly::add_term: arity mismatch");
  if (c == 0) return;
  auto it = terms_.find(exps);
  if (it == terms_.end()) {
    terms_.emplace(exps, c);
  } else {
    Fe s = fq_.add(it->second, c);
    if (s == 0)
      terms_.erase(it);
    else
      it->second = s;
  }
}

int MultiPoly::total_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_)
    d = std::max(d, std::accumulate(m.begin(), m.end(), 0));
  return d;
}

bool MultiPoly::is_homogeneous() const {
  int d = -1;
  for (const auto& [m, c] : terms_) {
    int dm = std::accumulate(m.begin(), m.end(), 0);
    if (d < 0) d = dm;
    if (dm != d) return false;
  }
  return true;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  MultiPoly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  MultiPoly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, fq_.neg(c));
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  if (nvars_ != o.nvars_)
    throw std::invalid_argument("MultiPoly::operator*: arity mismatch");
  MultiPoly r(fq_, nvars_);
  Monomial m(nvars_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) {
      for (std::size_t i = 0; i < nvars_; ++i)
        m[i] = static_cast<std::uint8_t>(ma[i] + mb[i]);
      r.add_term(m, fq_.mul(ca, cb));
    }
  return r;
}

MultiPoly MultiPoly::scaled(Fe c) const {
  MultiPoly r(fq_, nvars_);
  for (const auto& [m, cc] : terms_) r.add_term(m, fq_.mul(cc, c));
  return r;
}

Fe MultiPoly::eval(std::span<const Fe> point) const {
  if (point.size() != nvars_)
    throw std::invalid_argument("MultiPoly::eval: arity mismatch");
  std::uint64_t acc = 0;
  const std::uint32_t q = fq_.modulus();
  for (const auto& [m, c] : terms_) {
    std::uint64_t t = c;
    for (std::size_t i = 0; i < nvars_; ++i)
      for (std::uint8_t e = 0; e < m[i]; ++e) t = t * point[i] % q;
    acc += t;
  }
  return static_cast<Fe>(acc % q);
}

MultiPoly MultiPoly::compose(std::span<const MultiPoly> images) const {
  if (images.size() != nvars_)
    throw std::invalid_argument("MultiPoly::compose: arity mismatch");
  std::size_t target_vars = images.empty() ? 0 : images[0].nvars();
  MultiPoly r(fq_, target_vars);
  for (const auto& [m, c] : terms_) {
    MultiPoly t = mp_const(fq_, target_vars, c);
    for (std::size_t i = 0; i < nvars_; ++i)
      for (std::uint8_t e = 0; e < m[i]; ++e) t = t * images[i];
    r = r + t;
  }
  return r;
}

MultiPoly mp_var(const PrimeField& fq, std::size_t nvars, std::size_t i) {
  MultiPoly p(fq, nvars);
  Monomial m(nvars, 0);
  m.at(i) = 1;
  p.add_term(m, 1);
  return p;
}

MultiPoly mp_const(const PrimeField& fq, std::size_t nvars, Fe c) {
  MultiPoly p(fq, nvars);
  p.add_term(Monomial(nvars, 0), c);
  return p;
}

static void enum_monomials(std::size_t nvars, int degree, std::size_t pos,
                           Monomial& cur, std::vector<Monomial>& out) {
  if (pos + 1 == nvars) {
    cur[pos] = static_cast<std::uint8_t>(degree);
    out.push_back(cur);
    return;
  }
  for (int e = degree; e >= 0; --e) {
    cur[pos] = static_cast<std::uint8_t>(e);
    enum_monomials(nvars, degree - e, pos + 1, cur, out);
  }
}

std::vector<Monomial> monomials_of_degree(std::size_t nvars, int degree) {
  std::vector<Monomial> out;
  Monomial cur(nvars, 0);
  enum_monomials(nvars, degree, 0, cur, out);
  std::sort(out.begin(), out.end(), GrlexLess{});
  return out;
}

}  // namespace conglab
