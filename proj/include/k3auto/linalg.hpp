#ifndef K3AUTO_LINALG_HPP
#define K3AUTO_LINALG_HPP

#include <cstddef>
#include <vector>

#include "k3auto/rational.hpp"

namespace k3auto {

using RationalMatrix = std::vector<std::vector<Rational>>;
using IntegerMatrix = std::vector<std::vector<BigInt>>;

/// Reduced row echelon form over Q; zero rows are dropped.
inline RationalMatrix rref(RationalMatrix m) {
  if (m.empty()) return m;
  const std::size_t cols = m.front().size();
  std::size_t lead = 0;
  for (std::size_t col = 0; col < cols && lead < m.size(); ++col) {
    std::size_t piv = lead;
    while (piv < m.size() && m[piv][col].is_zero()) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[lead]);
    Rational inv = m[lead][col].inverse();
    for (auto& v : m[lead]) v *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == lead || m[r][col].is_zero()) continue;
      Rational f = m[r][col];
      for (std::size_t k = 0; k < cols; ++k) m[r][k] -= f * m[lead][k];
    }
    ++lead;
  }
  m.resize(lead);
  return m;
}

/// Hermite normal form of the row lattice: positive pivots, entries above a
/// pivot reduced into [0, pivot), zero rows dropped.
inline IntegerMatrix hermite_normal_form(IntegerMatrix m) {
  if (m.empty()) return m;
  auto magnitude = [](const BigInt& v) { return v < 0 ? BigInt(-v) : v; };
  const std::size_t cols = m.front().size();
  std::size_t lead = 0;
  for (std::size_t col = 0; col < cols && lead < m.size(); ++col) {
    // Euclid on the column below `lead` until one nonzero entry remains.
    while (true) {
      std::size_t best = m.size();
      for (std::size_t r = lead; r < m.size(); ++r) {
        if (m[r][col] == 0) continue;
        if (best == m.size() || magnitude(m[r][col]) < magnitude(m[best][col])) best = r;
      }
      if (best == m.size()) break;
      std::swap(m[best], m[lead]);
      bool done = true;
      for (std::size_t r = lead + 1; r < m.size(); ++r) {
        if (m[r][col] == 0) continue;
        BigInt q = m[r][col] / m[lead][col];
        for (std::size_t k = 0; k < cols; ++k) m[r][k] -= q * m[lead][k];
        if (m[r][col] != 0) done = false;
      }
      if (done) break;
    }
    if (lead == m.size() || m[lead][col] == 0) continue;
    if (m[lead][col] < 0) {
      for (auto& v : m[lead]) v = -v;
    }
    for (std::size_t r = 0; r < lead; ++r) {
      BigInt q = m[r][col] / m[lead][col];
      if (m[r][col] - q * m[lead][col] < 0) q -= 1;
      if (q != 0) {
        for (std::size_t k = 0; k < cols; ++k) m[r][k] -= q * m[lead][k];
      }
    }
    ++lead;
  }
  m.resize(lead);
  return m;
}

/// Integer basis of (row space over Q) intersected with Z^n, given the RREF
/// rows of that space. Every integral vector of the space is sum c_i * row_i
/// with c_i its pivot entry, so it suffices to scan c modulo the common
/// denominator.
inline IntegerMatrix saturate(const RationalMatrix& reduced) {
  IntegerMatrix gens;
  if (reduced.empty()) return gens;
  const std::size_t cols = reduced.front().size();
  BigInt den = 1;
  for (const auto& row : reduced) {
    for (const auto& v : row) den = boost::multiprecision::lcm(den, v.denominator());
  }
  if (den > 64) throw InvalidDatum("saturation denominator too large for enumeration");
  const std::size_t r = reduced.size();
  const long long d = static_cast<long long>(den);
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<BigInt> g(cols);
    for (std::size_t k = 0; k < cols; ++k) g[k] = (reduced[i][k] * Rational(d)).numerator();
    gens.push_back(std::move(g));
  }
  std::vector<long long> c(r, 0);
  while (true) {
    std::size_t pos = 0;
    while (pos < r && ++c[pos] == d) c[pos++] = 0;
    if (pos == r) break;
    std::vector<Rational> v(cols);
    for (std::size_t i = 0; i < r; ++i) {
      if (c[i] == 0) continue;
      for (std::size_t k = 0; k < cols; ++k) v[k] += Rational(c[i]) * reduced[i][k];
    }
    bool integral = true;
    for (const auto& x : v) integral = integral && x.is_integer();
    if (!integral) continue;
    std::vector<BigInt> g(cols);
    for (std::size_t k = 0; k < cols; ++k) g[k] = v[k].numerator();
    gens.push_back(std::move(g));
  }
  return hermite_normal_form(gens);
}

}  // namespace k3auto

#endif  // K3AUTO_LINALG_HPP
