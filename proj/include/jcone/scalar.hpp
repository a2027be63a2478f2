#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <iosfwd>
#include <string_view>
#include <type_traits>

namespace jcone {

using Complex = std::complex<double>;

/// Real quaternion a + b i + c j + d k.
struct Quaternion {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;

  constexpr Quaternion() = default;
  constexpr explicit Quaternion(double re) : a(re) {}
  constexpr Quaternion(double a_, double b_, double c_, double d_)
      : a(a_), b(b_), c(c_), d(d_) {}
  constexpr explicit Quaternion(const Complex& z) : a(z.real()), b(z.imag()) {}

  /// Writes q = z1 + z2 j with z1 = a + b i and z2 = c + d i.
  static constexpr Quaternion from_pair(const Complex& z1, const Complex& z2) {
    return {z1.real(), z1.imag(), z2.real(), z2.imag()};
  }
  constexpr Complex z1() const { return {a, b}; }
  constexpr Complex z2() const { return {c, d}; }

  constexpr double real() const { return a; }
  constexpr Quaternion imag() const { return {0.0, b, c, d}; }

  Quaternion& operator+=(const Quaternion& o) {
    a += o.a; b += o.b; c += o.c; d += o.d;
    return *this;
  }
  Quaternion& operator-=(const Quaternion& o) {
    a -= o.a; b -= o.b; c -= o.c; d -= o.d;
    return *this;
  }
  Quaternion& operator*=(double s) {
    a *= s; b *= s; c *= s; d *= s;
    return *this;
  }
  Quaternion& operator*=(const Quaternion& o);

  friend constexpr bool operator==(const Quaternion&, const Quaternion&) = default;
};

constexpr Quaternion operator+(Quaternion p, const Quaternion& q) {
  return {p.a + q.a, p.b + q.b, p.c + q.c, p.d + q.d};
}
constexpr Quaternion operator-(Quaternion p, const Quaternion& q) {
  return {p.a - q.a, p.b - q.b, p.c - q.c, p.d - q.d};
}
constexpr Quaternion operator-(const Quaternion& q) {
  return {-q.a, -q.b, -q.c, -q.d};
}
constexpr Quaternion operator*(const Quaternion& p, const Quaternion& q) {
  return {p.a * q.a - p.b * q.b - p.c * q.c - p.d * q.d,
          p.a * q.b + p.b * q.a + p.c * q.d - p.d * q.c,
          p.a * q.c - p.b * q.d + p.c * q.a + p.d * q.b,
          p.a * q.d + p.b * q.c - p.c * q.b + p.d * q.a};
}
constexpr Quaternion operator*(double s, const Quaternion& q) {
  return {s * q.a, s * q.b, s * q.c, s * q.d};
}
constexpr Quaternion operator*(const Quaternion& q, double s) { return s * q; }
constexpr Quaternion operator/(const Quaternion& q, double s) {
  return {q.a / s, q.b / s, q.c / s, q.d / s};
}

inline Quaternion& Quaternion::operator*=(const Quaternion& o) {
  *this = *this * o;
  return *this;
}

constexpr Quaternion conj(const Quaternion& q) { return {q.a, -q.b, -q.c, -q.d}; }
constexpr double norm2(const Quaternion& q) {
  return q.a * q.a + q.b * q.b + q.c * q.c + q.d * q.d;
}
inline double abs(const Quaternion& q) { return std::sqrt(norm2(q)); }
/// Reduced trace of a scalar, which is its real part.
constexpr double trd(const Quaternion& q) { return q.a; }
constexpr Quaternion inverse(const Quaternion& q) { return conj(q) / norm2(q); }

/// Polar form q = a + b u with u a unit pure quaternion (u^2 = -1) and
/// b = |Im q|. Unique when b > 0; for real q the axis defaults to i.
struct QuaternionPolar {
  double a = 0.0;
  double b = 0.0;
  Quaternion axis{0.0, 1.0, 0.0, 0.0};
};
QuaternionPolar polar(const Quaternion& q);

std::ostream& operator<<(std::ostream& os, const Quaternion& q);

inline const Quaternion kI{0.0, 1.0, 0.0, 0.0};
inline const Quaternion kJ{0.0, 0.0, 1.0, 0.0};
inline const Quaternion kK{0.0, 0.0, 0.0, 1.0};

/// The three scalar fields, ordered by generality: R < C < H.
enum class Field { kReal = 0, kComplex = 1, kQuaternion = 2 };

std::string_view field_name(Field f);  // "R", "C", "H"
Field parse_field(std::string_view s);
constexpr Field promote(Field a, Field b) { return a < b ? b : a; }

template <typename T>
struct ScalarTraits;

template <>
struct ScalarTraits<double> {
  static constexpr Field kField = Field::kReal;
  static constexpr int kRealDim = 1;
  static double conj(double x) { return x; }
  static double real(double x) { return x; }
  static double abs2(double x) { return x * x; }
  static double inverse(double x) { return 1.0 / x; }
};

template <>
struct ScalarTraits<Complex> {
  static constexpr Field kField = Field::kComplex;
  static constexpr int kRealDim = 2;
  static Complex conj(const Complex& z) { return std::conj(z); }
  static double real(const Complex& z) { return z.real(); }
  static double abs2(const Complex& z) { return std::norm(z); }
  static Complex inverse(const Complex& z) { return 1.0 / z; }
};

template <>
struct ScalarTraits<Quaternion> {
  static constexpr Field kField = Field::kQuaternion;
  static constexpr int kRealDim = 4;
  static Quaternion conj(const Quaternion& q) { return jcone::conj(q); }
  static double real(const Quaternion& q) { return q.a; }
  static double abs2(const Quaternion& q) { return norm2(q); }
  static Quaternion inverse(const Quaternion& q) { return jcone::inverse(q); }
};

template <typename T>
concept Scalar = requires { ScalarTraits<T>::kField; };

template <Scalar T>
T conjugate(const T& x) { return ScalarTraits<T>::conj(x); }
template <Scalar T>
double real_part(const T& x) { return ScalarTraits<T>::real(x); }
template <Scalar T>
double abs2(const T& x) { return ScalarTraits<T>::abs2(x); }

/// Real coordinates of a scalar, in the order used by the JSON encoding.
template <Scalar T>
std::array<double, ScalarTraits<T>::kRealDim> components(const T& x) {
  if constexpr (std::is_same_v<T, double>) {
    return {x};
  } else if constexpr (std::is_same_v<T, Complex>) {
    return {x.real(), x.imag()};
  } else {
    return {x.a, x.b, x.c, x.d};
  }
}

template <Scalar T>
T from_components(const std::array<double, ScalarTraits<T>::kRealDim>& c) {
  if constexpr (std::is_same_v<T, double>) {
    return c[0];
  } else if constexpr (std::is_same_v<T, Complex>) {
    return {c[0], c[1]};
  } else {
    return {c[0], c[1], c[2], c[3]};
  }
}

/// Lossless widening along R -> C -> H.
template <Scalar To, Scalar From>
To promote_scalar(const From& x) {
  if constexpr (std::is_same_v<To, From>) {
    return x;
  } else if constexpr (std::is_same_v<From, double>) {
    return To(x);
  } else {
    static_assert(std::is_same_v<From, Complex> && std::is_same_v<To, Quaternion>,
                  "promotion only widens");
    return Quaternion(x);
  }
}

}  // namespace jcone
