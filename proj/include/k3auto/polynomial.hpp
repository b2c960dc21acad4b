#ifndef K3AUTO_POLYNOMIAL_HPP
#define K3AUTO_POLYNOMIAL_HPP

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "k3auto/rational.hpp"

namespace k3auto {

/// Univariate polynomial in t with exact rational coefficients.
///
/// Stored sparsely as exponent -> coefficient; zero coefficients are never
/// stored. The zero polynomial has degree -1 (standing in for minus
/// infinity).
class RationalPolynomial {
 public:
  using Terms = std::map<unsigned, Rational>;

  RationalPolynomial() = default;
  RationalPolynomial(const Rational& c) {  // NOLINT(google-explicit-constructor)
    if (!c.is_zero()) terms_.emplace(0u, c);
  }
  RationalPolynomial(long long c) : RationalPolynomial(Rational(c)) {}  // NOLINT

  static RationalPolynomial monomial(const Rational& c, unsigned e) {
    RationalPolynomial p;
    if (!c.is_zero()) p.terms_.emplace(e, c);
    return p;
  }
  static RationalPolynomial variable() { return monomial(1, 1); }

  /// Builds from (coefficient, exponent) pairs; repeated exponents add up.
  static RationalPolynomial from_pairs(const std::vector<std::pair<Rational, unsigned>>& pairs) {
    RationalPolynomial p;
    for (const auto& [c, e] : pairs) p += monomial(c, e);
    return p;
  }
  /// Dense coefficients, lowest degree first.
  static RationalPolynomial from_dense(const std::vector<Rational>& coeffs) {
    RationalPolynomial p;
    for (unsigned e = 0; e < coeffs.size(); ++e) {
      if (!coeffs[e].is_zero()) p.terms_.emplace(e, coeffs[e]);
    }
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }
  int degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first); }

  Rational coefficient(unsigned e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }
  Rational leading_coefficient() const { return terms_.empty() ? Rational(0) : terms_.rbegin()->second; }
  /// Lowest stored exponent, i.e. the order of vanishing at t = 0.
  unsigned lowest_exponent() const { return terms_.empty() ? 0u : terms_.begin()->first; }

  Rational operator()(const Rational& x) const {
    Rational acc;
    int d = degree();
    for (int e = d; e >= 0; --e) acc = acc * x + coefficient(static_cast<unsigned>(e));
    return acc;
  }

  RationalPolynomial derivative() const {
    RationalPolynomial d;
    for (const auto& [e, c] : terms_) {
      if (e > 0) d.terms_.emplace(e - 1, c * Rational(static_cast<long long>(e)));
    }
    return d;
  }

  RationalPolynomial monic() const {
    if (is_zero()) return *this;
    return *this * leading_coefficient().inverse();
  }

  RationalPolynomial pow(unsigned n) const {
    RationalPolynomial result(1);
    RationalPolynomial base = *this;
    while (n > 0) {
      if (n & 1u) result *= base;
      n >>= 1u;
      if (n > 0) base *= base;
    }
    return result;
  }

  /// s^n * p(1/s); requires deg p <= n.
  RationalPolynomial reversed(unsigned n) const {
    if (degree() > static_cast<int>(n)) throw InvalidDatum("reversal degree below polynomial degree");
    RationalPolynomial r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(n - e, c);
    return r;
  }

  /// p(c * t).
  RationalPolynomial scale_variable(const Rational& c) const {
    RationalPolynomial r;
    Rational power(1);
    unsigned last = 0;
    for (const auto& [e, coeff] : terms_) {
      for (; last < e; ++last) power *= c;
      Rational v = coeff * power;
      if (!v.is_zero()) r.terms_.emplace(e, v);
    }
    return r;
  }

  /// Quotient and remainder of Euclidean division; divisor must be nonzero.
  static std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial& num,
                                                                  const RationalPolynomial& den) {
    if (den.is_zero()) throw DivisionByZero();
    RationalPolynomial q;
    RationalPolynomial r = num;
    const int dd = den.degree();
    const Rational lead_inv = den.leading_coefficient().inverse();
    while (!r.is_zero() && r.degree() >= dd) {
      unsigned shift = static_cast<unsigned>(r.degree() - dd);
      Rational factor = r.leading_coefficient() * lead_inv;
      q.terms_[shift] += factor;
      for (const auto& [e, c] : den.terms_) r.add_term(e + shift, -(c * factor));
    }
    q.prune();
    return {std::move(q), std::move(r)};
  }

  bool divides(const RationalPolynomial& other) const { return divmod(other, *this).second.is_zero(); }

  /// Division known to be exact; throws InvalidDatum otherwise.
  RationalPolynomial exact_div(const RationalPolynomial& den) const {
    auto [q, r] = divmod(*this, den);
    if (!r.is_zero()) throw InvalidDatum("polynomial division is not exact");
    return q;
  }

  RationalPolynomial operator-() const {
    RationalPolynomial r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }
  RationalPolynomial& operator+=(const RationalPolynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  RationalPolynomial& operator-=(const RationalPolynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  RationalPolynomial& operator*=(const RationalPolynomial& o) {
    RationalPolynomial r;
    for (const auto& [e1, c1] : terms_) {
      for (const auto& [e2, c2] : o.terms_) r.terms_[e1 + e2] += c1 * c2;
    }
    r.prune();
    *this = std::move(r);
    return *this;
  }
  friend RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b) { return a += b; }
  friend RationalPolynomial operator-(RationalPolynomial a, const RationalPolynomial& b) { return a -= b; }
  friend RationalPolynomial operator*(RationalPolynomial a, const RationalPolynomial& b) { return a *= b; }
  friend RationalPolynomial operator*(RationalPolynomial a, const Rational& c) { return a *= RationalPolynomial(c); }
  friend RationalPolynomial operator*(const Rational& c, RationalPolynomial a) { return a *= RationalPolynomial(c); }

  friend bool operator==(const RationalPolynomial& a, const RationalPolynomial& b) { return a.terms_ == b.terms_; }

  std::string to_string(const std::string& var = "t") const {
    if (is_zero()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      Rational mag = abs(c);
      if (out.empty()) {
        if (c.sign() < 0) out += "-";
      } else {
        out += c.sign() < 0 ? " - " : " + ";
      }
      bool unit = mag == Rational(1);
      if (!unit || e == 0) out += mag.to_string();
      if (e > 0) {
        if (!unit) out += "*";
        out += var;
        if (e > 1) out += "^" + std::to_string(e);
      }
    }
    return out;
  }

 private:
  void add_term(unsigned e, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  void prune() {
    std::erase_if(terms_, [](const auto& kv) { return kv.second.is_zero(); });
  }

  Terms terms_;
};

/// Monic greatest common divisor; gcd(0, 0) = 0.
inline RationalPolynomial gcd(RationalPolynomial a, RationalPolynomial b) {
  while (!b.is_zero()) {
    auto r = RationalPolynomial::divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// One factor of a squarefree decomposition: `factor` is monic, squarefree
/// and of positive degree.
struct SquarefreeFactor {
  RationalPolynomial factor;
  unsigned multiplicity = 0;
};

/// Yun's algorithm: p = lc(p) * prod factor_i^multiplicity_i with pairwise
/// coprime squarefree factors. Constant input yields an empty list.
inline std::vector<SquarefreeFactor> squarefree_decomposition(const RationalPolynomial& p) {
  if (p.is_zero()) throw InvalidDatum("squarefree decomposition of the zero polynomial");
  std::vector<SquarefreeFactor> out;
  if (p.degree() == 0) return out;
  RationalPolynomial f = p.monic();
  RationalPolynomial df = f.derivative();
  RationalPolynomial a = gcd(f, df);
  RationalPolynomial b = f.exact_div(a);
  RationalPolynomial c = df.exact_div(a);
  RationalPolynomial d = c - b.derivative();
  unsigned i = 1;
  while (b.degree() > 0) {
    RationalPolynomial g = gcd(b, d);
    b = b.exact_div(g);
    c = d.exact_div(g);
    d = c - b.derivative();
    if (g.degree() > 0) out.push_back({g.monic(), i});
    ++i;
  }
  return out;
}

inline bool is_squarefree(const RationalPolynomial& p) {
  if (p.is_zero()) return false;
  return gcd(p, p.derivative()).degree() <= 0;
}

namespace detail {

inline BigInt big_abs(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

inline std::vector<BigInt> positive_divisors(BigInt n) {
  n = big_abs(n);
  std::vector<BigInt> small, large;
  for (BigInt d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

/// Integer coefficients with gcd 1, lowest degree first (dense).
inline std::vector<BigInt> primitive_integer_coefficients(const RationalPolynomial& p) {
  BigInt lcm_den = 1;
  for (const auto& [e, c] : p.terms()) lcm_den = boost::multiprecision::lcm(lcm_den, c.denominator());
  std::vector<BigInt> coeffs(static_cast<std::size_t>(p.degree() + 1), BigInt(0));
  BigInt g = 0;
  for (const auto& [e, c] : p.terms()) {
    coeffs[e] = c.numerator() * (lcm_den / c.denominator());
    g = boost::multiprecision::gcd(g, big_abs(coeffs[e]));
  }
  if (g > 1) {
    for (auto& v : coeffs) v /= g;
  }
  return coeffs;
}

}  // namespace detail

/// Distinct rational roots, in increasing order.
inline std::vector<Rational> rational_roots(const RationalPolynomial& p) {
  if (p.is_zero()) throw InvalidDatum("rational roots of the zero polynomial");
  std::vector<Rational> roots;
  if (p.degree() <= 0) return roots;
  RationalPolynomial q = p;
  if (q.lowest_exponent() > 0) {
    roots.emplace_back(0);
    RationalPolynomial shifted;
    const unsigned low = q.lowest_exponent();
    for (const auto& [e, c] : q.terms()) shifted += RationalPolynomial::monomial(c, e - low);
    q = shifted;
  }
  if (q.degree() > 0) {
    // Work on the squarefree part to keep the candidate set small.
    RationalPolynomial red = q.exact_div(gcd(q, q.derivative()));
    auto coeffs = detail::primitive_integer_coefficients(red);
    auto num_divs = detail::positive_divisors(coeffs.front());
    auto den_divs = detail::positive_divisors(coeffs.back());
    for (const auto& n : num_divs) {
      for (const auto& d : den_divs) {
        if (boost::multiprecision::gcd(n, d) != 1) continue;
        for (int sgn : {1, -1}) {
          Rational cand(BigInt(sgn * n), d);
          if (red(cand).is_zero()) roots.push_back(cand);
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace k3auto

#endif  // K3AUTO_POLYNOMIAL_HPP
