#pragma once

/**
 * @file jet.hpp
 * @brief Truncated Taylor jets: a value together with its first N derivatives.
 *
 * Channel k of a Jet<N> holds the k-th derivative (not the k-th Taylor
 * coefficient) with respect to the single independent variable, which in
 * this library is always the profile arclength s. Arithmetic propagates the
 * channels by the Leibniz rule and by Faa di Bruno's formula, so results are
 * exact up to roundoff for every N <= 3.
 *
 * @code
 * auto s = revtype::Jet3::variable(1.0);
 * auto y = sqrt(1.0 + s * s);
 * // y[0] = sqrt(2), y[1] = 1/sqrt(2), y[2] = 2^{-3/2}, y[3] = -3 * 2^{-5/2}
 * @endcode
 */

#include <array>
#include <cmath>
#include <cstddef>
#include <ostream>

namespace revtype {

template <int N>
class Jet {
  static_assert(N >= 0 && N <= 3, "jets are implemented up to order 3");

 public:
  static constexpr int order = N;

  constexpr Jet() = default;
  constexpr explicit Jet(double value) { d_[0] = value; }
  constexpr explicit Jet(const std::array<double, N + 1>& derivatives) : d_(derivatives) {}

  static constexpr Jet constant(double value) { return Jet(value); }

  /// The independent variable evaluated at `at`: (at, 1, 0, ...).
  static constexpr Jet variable(double at) {
    Jet j(at);
    if constexpr (N >= 1) j.d_[1] = 1.0;
    return j;
  }

  constexpr double operator[](std::size_t k) const { return d_[k]; }
  constexpr double& operator[](std::size_t k) { return d_[k]; }
  constexpr double value() const { return d_[0]; }
  constexpr const std::array<double, N + 1>& derivatives() const { return d_; }

  /// Jet of the derivative: channels shift down by one, losing one order.
  constexpr Jet<N - 1> derivative() const
    requires(N >= 1)
  {
    std::array<double, N> out{};
    for (int k = 0; k < N; ++k) out[k] = d_[k + 1];
    return Jet<N - 1>(out);
  }

  template <int M>
  constexpr Jet<M> truncate() const
    requires(M <= N)
  {
    std::array<double, M + 1> out{};
    for (int k = 0; k <= M; ++k) out[k] = d_[k];
    return Jet<M>(out);
  }

  constexpr Jet& operator+=(const Jet& o) {
    for (int k = 0; k <= N; ++k) d_[k] += o.d_[k];
    return *this;
  }
  constexpr Jet& operator-=(const Jet& o) {
    for (int k = 0; k <= N; ++k) d_[k] -= o.d_[k];
    return *this;
  }
  constexpr Jet& operator*=(double c) {
    for (auto& v : d_) v *= c;
    return *this;
  }

  friend constexpr Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend constexpr Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend constexpr Jet operator-(Jet a) { return a *= -1.0; }
  friend constexpr Jet operator*(Jet a, double c) { return a *= c; }
  friend constexpr Jet operator*(double c, Jet a) { return a *= c; }
  friend constexpr Jet operator+(Jet a, double c) {
    a.d_[0] += c;
    return a;
  }
  friend constexpr Jet operator+(double c, Jet a) { return a + c; }
  friend constexpr Jet operator-(Jet a, double c) { return a + (-c); }
  friend constexpr Jet operator-(double c, const Jet& a) { return c + (-a); }

  // Leibniz: (uv)^(n) = sum_k C(n,k) u^(k) v^(n-k)
  friend constexpr Jet operator*(const Jet& u, const Jet& v) {
    Jet r;
    r.d_[0] = u.d_[0] * v.d_[0];
    if constexpr (N >= 1) r.d_[1] = u.d_[1] * v.d_[0] + u.d_[0] * v.d_[1];
    if constexpr (N >= 2)
      r.d_[2] = u.d_[2] * v.d_[0] + 2.0 * u.d_[1] * v.d_[1] + u.d_[0] * v.d_[2];
    if constexpr (N >= 3)
      r.d_[3] = u.d_[3] * v.d_[0] + 3.0 * u.d_[2] * v.d_[1] + 3.0 * u.d_[1] * v.d_[2] +
                u.d_[0] * v.d_[3];
    return r;
  }

  friend constexpr Jet operator/(const Jet& u, const Jet& v) { return u * reciprocal(v); }
  friend constexpr Jet operator/(const Jet& u, double c) { return u * (1.0 / c); }
  friend constexpr Jet operator/(double c, const Jet& v) { return c * reciprocal(v); }

  friend constexpr bool operator==(const Jet&, const Jet&) = default;

  friend std::ostream& operator<<(std::ostream& os, const Jet& j) {
    os << '(';
    for (int k = 0; k <= N; ++k) os << (k ? ", " : "") << j.d_[k];
    return os << ')';
  }

 private:
  std::array<double, N + 1> d_{};
};

using Jet3 = Jet<3>;

/// Chain rule for an outer function F whose derivatives F(u0), F'(u0), ...
/// are supplied in `outer`.
template <int N>
constexpr Jet<N> compose(const Jet<N>& u, const std::array<double, N + 1>& outer) {
  std::array<double, N + 1> r{};
  r[0] = outer[0];
  if constexpr (N >= 1) r[1] = outer[1] * u[1];
  if constexpr (N >= 2) r[2] = outer[2] * u[1] * u[1] + outer[1] * u[2];
  if constexpr (N >= 3)
    r[3] = outer[3] * u[1] * u[1] * u[1] + 3.0 * outer[2] * u[1] * u[2] + outer[1] * u[3];
  return Jet<N>(r);
}

namespace detail {

// First N+1 entries of a 4-element derivative table.
template <int N>
constexpr std::array<double, N + 1> head(const std::array<double, 4>& all) {
  std::array<double, N + 1> out{};
  for (int k = 0; k <= N; ++k) out[k] = all[k];
  return out;
}

}  // namespace detail

template <int N>
constexpr Jet<N> reciprocal(const Jet<N>& u) {
  const double x = u[0];
  const double r = 1.0 / x;
  return compose(u, detail::head<N>({r, -r * r, 2.0 * r * r * r, -6.0 * r * r * r * r}));
}

template <int N>
Jet<N> sin(const Jet<N>& u) {
  const double s = std::sin(u[0]), c = std::cos(u[0]);
  return compose(u, detail::head<N>({s, c, -s, -c}));
}

template <int N>
Jet<N> cos(const Jet<N>& u) {
  const double s = std::sin(u[0]), c = std::cos(u[0]);
  return compose(u, detail::head<N>({c, -s, -c, s}));
}

template <int N>
Jet<N> tan(const Jet<N>& u) {
  const double t = std::tan(u[0]);
  const double sec2 = 1.0 + t * t;
  return compose(u, detail::head<N>({t, sec2, 2.0 * t * sec2, 2.0 * sec2 * (1.0 + 3.0 * t * t)}));
}

template <int N>
Jet<N> sinh(const Jet<N>& u) {
  const double s = std::sinh(u[0]), c = std::cosh(u[0]);
  return compose(u, detail::head<N>({s, c, s, c}));
}

template <int N>
Jet<N> cosh(const Jet<N>& u) {
  const double s = std::sinh(u[0]), c = std::cosh(u[0]);
  return compose(u, detail::head<N>({c, s, c, s}));
}

template <int N>
Jet<N> asinh(const Jet<N>& u) {
  const double x = u[0];
  const double q = 1.0 + x * x;
  const double rs = 1.0 / std::sqrt(q);  // q^{-1/2}
  return compose(u, detail::head<N>({std::asinh(x), rs, -x * rs / q,
                                     (2.0 * x * x - 1.0) * rs / (q * q)}));
}

/// Requires u[0] > 0; the caller owns the domain check.
template <int N>
Jet<N> sqrt(const Jet<N>& u) {
  const double r = std::sqrt(u[0]);
  const double x = u[0];
  return compose(u, detail::head<N>({r, 0.5 / r, -0.25 / (r * x), 0.375 / (r * x * x)}));
}

template <int N>
Jet<N> exp(const Jet<N>& u) {
  const double e = std::exp(u[0]);
  return compose(u, detail::head<N>({e, e, e, e}));
}

/// Natural logarithm; requires u[0] > 0.
template <int N>
Jet<N> log(const Jet<N>& u) {
  const double r = 1.0 / u[0];
  return compose(u, detail::head<N>({std::log(u[0]), r, -r * r, 2.0 * r * r * r}));
}

/// u^p for a constant real exponent. Integer p is valid for any u[0] (p < 0
/// needs u[0] != 0); non-integer p requires u[0] > 0.
template <int N>
Jet<N> pow(const Jet<N>& u, double p) {
  const double x = u[0];
  std::array<double, 4> outer{};
  double falling = 1.0;  // p (p-1) ... (p-k+1)
  const bool integral = std::floor(p) == p;
  for (int k = 0; k <= 3; ++k) {
    const double e = p - k;
    if (integral && p >= 0.0 && e < 0.0) {
      outer[k] = 0.0;  // derivative of a polynomial beyond its degree
    } else {
      outer[k] = falling * std::pow(x, e);
    }
    falling *= e;
  }
  return compose(u, detail::head<N>(outer));
}

}  // namespace revtype
