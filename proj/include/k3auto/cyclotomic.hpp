#ifndef K3AUTO_CYCLOTOMIC_HPP
#define K3AUTO_CYCLOTOMIC_HPP

#include <array>
#include <complex>
#include <ostream>
#include <string>
#include <utility>

#include "k3auto/rational.hpp"

namespace k3auto {

inline int mod8(long long e) {
  long long r = e % 8;
  return static_cast<int>(r < 0 ? r + 8 : r);
}

/// Element c0 + c1*z + c2*z^2 + c3*z^3 of Q(z), z a primitive 8th root of
/// unity, reduced with z^4 = -1.
class Cyc8 {
 public:
  using Coords = std::array<Rational, 4>;

  Cyc8() = default;
  Cyc8(const Rational& c) : c_{c, 0, 0, 0} {}  // NOLINT(google-explicit-constructor)
  Cyc8(long long c) : c_{Rational(c), 0, 0, 0} {}  // NOLINT(google-explicit-constructor)
  explicit Cyc8(Coords c) : c_(std::move(c)) {}
  Cyc8(const Rational& c0, const Rational& c1, const Rational& c2, const Rational& c3) : c_{c0, c1, c2, c3} {}

  /// z^e for any integer e.
  static Cyc8 zeta_pow(long long e) {
    int r = mod8(e);
    Cyc8 out;
    out.c_[static_cast<std::size_t>(r % 4)] = r < 4 ? Rational(1) : Rational(-1);
    return out;
  }
  static Cyc8 zeta() { return zeta_pow(1); }

  const Coords& coords() const { return c_; }
  const Rational& operator[](std::size_t i) const { return c_[i]; }

  bool is_zero() const {
    for (const auto& v : c_) {
      if (!v.is_zero()) return false;
    }
    return true;
  }
  bool is_rational() const { return c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero(); }

  Cyc8 operator-() const {
    Cyc8 r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
  }
  Cyc8& operator+=(const Cyc8& o) {
    for (std::size_t i = 0; i < 4; ++i) c_[i] += o.c_[i];
    return *this;
  }
  Cyc8& operator-=(const Cyc8& o) {
    for (std::size_t i = 0; i < 4; ++i) c_[i] -= o.c_[i];
    return *this;
  }
  Cyc8& operator*=(const Cyc8& o) {
    std::array<Rational, 7> wide{};
    for (std::size_t i = 0; i < 4; ++i) {
      if (c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < 4; ++j) wide[i + j] += c_[i] * o.c_[j];
    }
    for (std::size_t i = 0; i < 4; ++i) c_[i] = wide[i] - (i + 4 < 7 ? wide[i + 4] : Rational(0));
    return *this;
  }
  Cyc8& operator/=(const Cyc8& o) { return *this *= o.inverse(); }

  friend Cyc8 operator+(Cyc8 a, const Cyc8& b) { return a += b; }
  friend Cyc8 operator-(Cyc8 a, const Cyc8& b) { return a -= b; }
  friend Cyc8 operator*(Cyc8 a, const Cyc8& b) { return a *= b; }
  friend Cyc8 operator/(Cyc8 a, const Cyc8& b) { return a /= b; }
  friend bool operator==(const Cyc8& a, const Cyc8& b) { return a.c_ == b.c_; }

  /// Solves (this) * y = 1 as a 4x4 rational linear system.
  Cyc8 inverse() const {
    if (is_zero()) throw DivisionByZero();
    // Column j of the multiplication matrix is this * z^j.
    std::array<std::array<Rational, 5>, 4> m{};
    for (std::size_t j = 0; j < 4; ++j) {
      Cyc8 col = *this * zeta_pow(static_cast<long long>(j));
      for (std::size_t i = 0; i < 4; ++i) m[i][j] = col.c_[i];
    }
    m[0][4] = 1;
    for (std::size_t col = 0; col < 4; ++col) {
      std::size_t piv = col;
      while (piv < 4 && m[piv][col].is_zero()) ++piv;
      if (piv == 4) throw DivisionByZero();  // unreachable in a field
      std::swap(m[piv], m[col]);
      Rational inv = m[col][col].inverse();
      for (auto& v : m[col]) v *= inv;
      for (std::size_t r = 0; r < 4; ++r) {
        if (r == col || m[r][col].is_zero()) continue;
        Rational f = m[r][col];
        for (std::size_t k = col; k < 5; ++k) m[r][k] -= f * m[col][k];
      }
    }
    return Cyc8(m[0][4], m[1][4], m[2][4], m[3][4]);
  }

  /// Field automorphism z -> z^j, j odd.
  Cyc8 galois(int j) const {
    if (mod8(j) % 2 == 0) throw InvalidDatum("galois exponent must be odd");
    Cyc8 out;
    for (std::size_t i = 0; i < 4; ++i) {
      if (c_[i].is_zero()) continue;
      out += Cyc8(c_[i]) * zeta_pow(static_cast<long long>(i) * j);
    }
    return out;
  }
  Cyc8 conj() const { return galois(7); }

  std::complex<double> to_complex() const {
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t i = 0; i < 4; ++i) {
      double v = static_cast<double>(c_[i].numerator()) / static_cast<double>(c_[i].denominator());
      acc += v * std::polar(1.0, static_cast<double>(i) * 3.14159265358979323846 / 4.0);
    }
    return acc;
  }

  std::string to_string() const {
    static const char* const basis[] = {"", "z", "z^2", "z^3"};
    std::string out;
    for (std::size_t i = 0; i < 4; ++i) {
      if (c_[i].is_zero()) continue;
      Rational mag = abs(c_[i]);
      if (out.empty()) {
        if (c_[i].sign() < 0) out += "-";
      } else {
        out += c_[i].sign() < 0 ? " - " : " + ";
      }
      if (i == 0 || mag != Rational(1)) out += mag.to_string();
      if (i > 0) {
        if (mag != Rational(1)) out += "*";
        out += basis[i];
      }
    }
    return out.empty() ? "0" : out;
  }
  friend std::ostream& operator<<(std::ostream& os, const Cyc8& x) { return os << x.to_string(); }

 private:
  Coords c_{};
};

inline Cyc8 zeta_pow(long long e) { return Cyc8::zeta_pow(e); }

}  // namespace k3auto

#endif  // K3AUTO_CYCLOTOMIC_HPP
