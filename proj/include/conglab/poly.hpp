#ifndef CONGLAB_POLY_HPP
#define CONGLAB_POLY_HPP

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "conglab/field.hpp"

namespace conglab {

//
// Univariate polynomials: coefficient vectors, lowest degree first.
// The zero polynomial is the empty vector (or all-zero, callers trim).
//

using UPoly = std::vector<Fe>;

void up_trim(UPoly& p);
int up_deg(const UPoly& p);  // -1 for the zero polynomial
UPoly up_add(const PrimeField& fq, const UPoly& a, const UPoly& b);
UPoly up_sub(const PrimeField& fq, const UPoly& a, const UPoly& b);
UPoly up_mul(const PrimeField& fq, const UPoly& a, const UPoly& b);
UPoly up_scale(const PrimeField& fq, const UPoly& a, Fe c);
Fe up_eval(const PrimeField& fq, const UPoly& p, Fe x);
UPoly up_derivative(const PrimeField& fq, const UPoly& p);

// Remainder of a by b (b nonzero).
UPoly up_rem(const PrimeField& fq, const UPoly& a, const UPoly& b);

// Monic gcd; throws if both arguments are zero.
UPoly up_gcd(const PrimeField& fq, const UPoly& a, const UPoly& b);

// Squarefree part (radical) of a nonzero polynomial, monic.
UPoly up_squarefree(const PrimeField& fq, const UPoly& p);

// Lagrange interpolation through distinct nodes xs.
UPoly up_interpolate(const PrimeField& fq, std::span<const Fe> xs,
                     std::span<const Fe> ys);

// Resultant of a and b taken with formal degrees da, db (Sylvester
// determinant); coefficients above the stated degree must be absent.
Fe up_resultant(const PrimeField& fq, const UPoly& a, const UPoly& b, int da,
                int db);

//
// Sparse multivariate polynomials over F_q.
//

using Monomial = std::vector<std::uint8_t>;  // exponent vector

// Graded lexicographic order on exponent vectors of equal length.
struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

class MultiPoly {
public:
  MultiPoly(const PrimeField& fq, std::size_t nvars)
      : fq_(fq), nvars_(nvars) {}

  const PrimeField& field() const { return fq_; }
  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Monomial, Fe, GrlexLess>& terms() const { return terms_; }

  // Adds c * x^exps; cancelling terms are erased, zero is never stored.
  void add_term(const Monomial& exps, Fe c);

  int total_degree() const;
  bool is_homogeneous() const;

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly scaled(Fe c) const;

  Fe eval(std::span<const Fe> point) const;

  // Substitutes variable i by images[i]; all images share one variable set.
  MultiPoly compose(std::span<const MultiPoly> images) const;

  bool operator==(const MultiPoly& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }

private:
  PrimeField fq_;
  std::size_t nvars_;
  std::map<Monomial, Fe, GrlexLess> terms_;
};

// x_i as a polynomial in nvars variables.
MultiPoly mp_var(const PrimeField& fq, std::size_t nvars, std::size_t i);
MultiPoly mp_const(const PrimeField& fq, std::size_t nvars, Fe c);

// All monomials of the given total degree, grlex-sorted.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, int degree);

}  // namespace conglab

#endif
