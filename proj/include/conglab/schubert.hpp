#ifndef CONGLAB_SCHUBERT_HPP
#define CONGLAB_SCHUBERT_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <vector>

namespace conglab {

using Int = boost::multiprecision::cpp_int;

// Schubert symbol sigma_{a,b} on G(1,n): lines meeting a fixed P^{n-1-a}
// inside a fixed P^{n-b}.
struct SchubertSymbol {
  int a, b, n;

  SchubertSymbol(int a_, int b_, int n_);

  int codim() const { return a + b; }
  SchubertSymbol dual() const { return {n - 1 - b, n - 1 - a, n}; }

  auto operator<=>(const SchubertSymbol&) const = default;
};

// Formal integer combination of two-row Schubert symbols of one ambient n.
// Classes are graded-homogeneous; zero coefficients are never stored.
class SchubertClass {
public:
  explicit SchubertClass(int n) : n_(n) {}

  static SchubertClass sigma(int n, int a, int b);

  int ambient() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<SchubertSymbol, Int>& terms() const { return terms_; }

  // Codimension of the (homogeneous) class; -1 for zero. Throws if mixed.
  int codim() const;

  void add_term(const SchubertSymbol& s, const Int& c);
  Int coefficient(const SchubertSymbol& s) const;

  SchubertClass operator+(const SchubertClass& o) const;
  SchubertClass operator-(const SchubertClass& o) const;
  SchubertClass scaled(const Int& c) const;

  bool operator==(const SchubertClass& o) const {
    return n_ == o.n_ && terms_ == o.terms_;
  }

private:
  int n_;
  std::map<SchubertSymbol, Int> terms_;
};

// Product with the special class sigma_{p,0} by Pieri's rule. 0 <= p <= n-1.
SchubertClass pieri(const SchubertClass& cls, int p);

// Chow-ring product, via Giambelli reduction to Pieri chains.
SchubertClass mult(const SchubertClass& c1, const SchubertClass& c2);

// Intersection number of two classes of complementary codimension.
Int pair(const SchubertClass& c1, const SchubertClass& c2);

// Degree sequence (a_0,...,a_nu) of a congruence in G(1,n), nu=floor((n-1)/2).
class CongruenceDegrees {
public:
  CongruenceDegrees(int n, std::vector<Int> degrees);

  int ambient() const { return n_; }
  int nu() const { return (n_ - 1) / 2; }
  // a_i, read as 0 for i > nu.
  Int degree(int i) const;

  SchubertClass to_class() const;

private:
  int n_;
  std::vector<Int> degrees_;
};

// Degree of the hypersurface swept by the lines meeting a general
// (n-2)-plane: a_0 + a_1, cross-checked against the Chow-ring pairing.
Int v_pi_degree(const CongruenceDegrees& B);

// Degree of the (n-2)-dimensional scroll of lines meeting two general
// (n-2)-planes: a_0 + 2a_1 + a_2, cross-checked likewise. Requires n > 3.
Int sigma_scroll_degree(const CongruenceDegrees& B);

}  // namespace conglab

#endif
