#include "revtype/case2.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace revtype {

namespace {

// Closed interval enclosure for the coefficient polynomials.
struct Range {
  double lo, hi;

  friend Range operator+(Range a, Range b) { return {a.lo + b.lo, a.hi + b.hi}; }
  friend Range operator-(Range a, Range b) { return {a.lo - b.hi, a.hi - b.lo}; }
  friend Range operator+(Range a, double c) { return {a.lo + c, a.hi + c}; }
  friend Range operator*(double c, Range a) {
    return c >= 0 ? Range{c * a.lo, c * a.hi} : Range{c * a.hi, c * a.lo};
  }
  friend Range operator*(Range a, Range b) {
    const double p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
    return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
  }
  Range squared() const {
    if (lo >= 0) return {lo * lo, hi * hi};
    if (hi <= 0) return {hi * hi, lo * lo};
    return {0.0, std::max(lo * lo, hi * hi)};
  }
  // Smallest |x| over the range.
  double mignitude() const {
    if (lo <= 0 && hi >= 0) return 0.0;
    return std::min(std::abs(lo), std::abs(hi));
  }
};

double coefficient_lower_bound(Range l, Range m) {
  const Range d = l - m;
  const Range c4 = l * d.squared();
  const Range c2 = d * ((l * m) - l.squared() + (5.0 * l) + m + (-2.0));
  const Range c0 = (l + m) * (m - (3.0 * l) + 4.0);
  return std::max({c4.mignitude(), c2.mignitude(), c0.mignitude()});
}

struct Cell {
  double l0, l1, m0, m1;
};

class CellCertifier {
 public:
  CellCertifier(double band, int max_depth, CellBound& out) : band_(band), max_depth_(max_depth), out_(out) {}

  void certify(const Cell& c, int depth) {
    // lambda - mu over the cell
    const double dlo = c.l0 - c.m1, dhi = c.l1 - c.m0;
    if (dlo > -band_ && dhi < band_) return;  // inside the excluded diagonal band

    const double bound = coefficient_lower_bound({c.l0, c.l1}, {c.m0, c.m1});
    if (bound > 0.0) {
      ++out_.certified_leaves;
      out_.min_lower_bound = std::min(out_.min_lower_bound, bound);
      return;
    }
    if (depth >= max_depth_) {
      ++out_.uncertified_leaves;
      if (out_.uncertified.size() < 16) {
        const double l = 0.5 * (c.l0 + c.l1), m = 0.5 * (c.m0 + c.m1);
        out_.uncertified.push_back({l, m, quartic_coefficients(l, m)});
      }
      return;
    }
    const double lm = 0.5 * (c.l0 + c.l1), mm = 0.5 * (c.m0 + c.m1);
    certify({c.l0, lm, c.m0, mm}, depth + 1);
    certify({lm, c.l1, c.m0, mm}, depth + 1);
    certify({c.l0, lm, mm, c.m1}, depth + 1);
    certify({lm, c.l1, mm, c.m1}, depth + 1);
  }

 private:
  double band_;
  int max_depth_;
  CellBound& out_;
};

}  // namespace

std::vector<double> case2_axis(double lo, double hi, double step) {
  const auto n = static_cast<long>(std::floor((hi - lo) / step + 1e-9)) + 1;
  std::vector<double> v;
  v.reserve(static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i) v.push_back(lo + static_cast<double>(i) * step);
  return v;
}

double QuarticCoefficients::max_abs() const { return std::max({std::abs(c4), std::abs(c2), std::abs(c0)}); }

double QuarticCoefficients::value(double sin_phi) const {
  const double x = sin_phi * sin_phi;
  return (c4 * x + c2) * x + c0;
}

QuarticCoefficients quartic_coefficients(double l, double m) {
  const double d = l - m;
  return {l * d * d, d * (l * m - l * l + 5.0 * l + m - 2.0), (l + m) * (m - 3.0 * l + 4.0)};
}

Case2Coefficients case2_coefficients(double l, double m, double s, double c) {
  if (l == m) throw std::domain_error("case2_coefficients: lambda == mu (the lambda != mu branch only)");
  if (s * c == 0.0) throw std::domain_error("case2_coefficients: sin(phi) cos(phi) = 0");
  const double d = l - m;
  const double s2 = s * s, s4 = s2 * s2;
  Case2Coefficients out;
  out.a = l * s + (l + m) / (d * s);
  out.b = 2.0 * m / (d * c) - m * c;
  out.a1 = l * d * d * s4 + d * (l * m - l * l + 3.0 * l + m) * s2 - (l + m) * (3.0 * l - m);
  out.b1 = m * (d * d * s4 + d * (m - l + 4.0) * s2 - 2.0 * (l + m));
  out.poly = quartic_coefficients(l, m);
  return out;
}

Case2Coefficients case2_coefficients(double l, double m, double s) {
  if (!(s > 0.0 && s < 1.0)) throw std::domain_error("case2_coefficients: sin(phi) must lie in (0, 1)");
  return case2_coefficients(l, m, s, std::sqrt(1.0 - s * s));
}

double elimination_determinant(double l, double m, double phi) {
  const double s = std::sin(phi), c = std::cos(phi);
  const Case2Coefficients k = case2_coefficients(l, m, s, c);
  return k.a * k.b1 / c - k.b * k.a1 / s;
}

EliminationCheck elimination_check(double l, double m, std::span<const double> phis) {
  if (l == m) throw std::domain_error("elimination_check: lambda == mu");
  if (m == 0.0) throw std::domain_error("elimination_check: mu == 0 makes b and b1 vanish identically");

  EliminationCheck out;
  out.factor = elimination_factor(l, m);
  out.ratio_min = std::numeric_limits<double>::infinity();
  out.ratio_max = -std::numeric_limits<double>::infinity();
  out.zero_sets_match = true;
  const QuarticCoefficients q = quartic_coefficients(l, m);
  const double zero_tol = 1e-9 * std::max(1.0, q.max_abs() * std::abs(m));

  for (double phi : phis) {
    const double s = std::sin(phi), c = std::cos(phi);
    if (std::abs(s * c) < 1e-12) throw std::domain_error("elimination_check: sample at sin(phi) cos(phi) = 0");
    const double cleared = elimination_determinant(l, m, phi) * s * c;
    const double mq = m * q.value(s);
    out.max_zero_set_discrepancy = std::max(out.max_zero_set_discrepancy, std::abs(cleared - mq) / (1.0 + std::abs(mq)));

    const bool d_zero = std::abs(cleared) <= zero_tol;
    const bool q_zero = std::abs(mq) <= zero_tol;
    if (d_zero != q_zero || (!d_zero && (cleared > 0) != (mq > 0))) out.zero_sets_match = false;

    const double qv = q.value(s);
    if (std::abs(qv) > zero_tol) {
      const double ratio = cleared / qv;
      out.ratio_min = std::min(out.ratio_min, ratio);
      out.ratio_max = std::max(out.ratio_max, ratio);
    }
    ++out.samples;
  }
  if (out.ratio_min > out.ratio_max) {
    out.ratio_min = out.ratio_max = out.factor;
  }
  out.ratio_spread = (out.ratio_max - out.ratio_min) / std::max(1.0, std::abs(out.factor));
  return out;
}

Case2Certificate case2_scan(const Case2ScanConfig& cfg) {
  if (!(cfg.step > 0.0)) throw std::invalid_argument("case2_scan: step must be positive");
  if (cfg.lambda_max < cfg.lambda_min || cfg.mu_max < cfg.mu_min) {
    throw std::invalid_argument("case2_scan: empty range");
  }

  Case2Certificate cert;
  cert.config = cfg;
  const double half = 0.5 * cfg.step;
  const std::vector<double> ls = case2_axis(cfg.lambda_min, cfg.lambda_max, cfg.step);
  const std::vector<double> ms = case2_axis(cfg.mu_min, cfg.mu_max, cfg.step);

  cert.cells.band_halfwidth = half;
  cert.cells.min_lower_bound = std::numeric_limits<double>::infinity();
  CellCertifier certifier(half, cfg.max_depth, cert.cells);

  for (double l : ls) {
    for (double m : ms) {
      if (std::abs(l - m) < half) {
        ++cert.points_skipped_diagonal;
        continue;
      }
      ++cert.points_scanned;
      const QuarticCoefficients q = quartic_coefficients(l, m);
      const double v = q.max_abs();
      if (!cert.min_max_abs_coeff || v < *cert.min_max_abs_coeff) {
        cert.min_max_abs_coeff = v;
        cert.argmin = ScanArgmin{l, m, q};
      }
      ++cert.cells.cells;
      certifier.certify({l - half, l + half, m - half, m + half}, 0);
    }
  }
  if (cert.cells.certified_leaves == 0) cert.cells.min_lower_bound = 0.0;

  cert.bounded_away_from_zero = cert.min_max_abs_coeff.has_value() && *cert.min_max_abs_coeff > cfg.threshold;

  // mu = 0: a = (lambda s^2 + 1) / s and b = 0, so a f + b g = 0 forces
  // lambda s^2 + 1 = 0. c4(lambda, 0) = lambda^3 forces lambda = 0, where that
  // factor is identically 1.
  MuZeroCheck& mz = cert.mu_zero;
  mz.lambda_from_c4 = 0.0;
  mz.min_lambda_sin2_plus_one = std::numeric_limits<double>::infinity();
  mz.max_identity_defect = 0.0;
  for (int k = 1; k < 64; ++k) {
    const double s = k / 64.0;
    mz.min_lambda_sin2_plus_one =
        std::min(mz.min_lambda_sin2_plus_one, std::abs(mz.lambda_from_c4 * s * s + 1.0));
    for (double l : {-3.0, -1.0, 0.5, 2.0}) {
      const Case2Coefficients k0 = case2_coefficients(l, 0.0, s);
      mz.max_identity_defect =
          std::max({mz.max_identity_defect, std::abs(k0.a * s - (l * s * s + 1.0)), std::abs(k0.b)});
    }
  }
  mz.contradiction = quartic_coefficients(mz.lambda_from_c4, 0.0).c4 == 0.0 && mz.min_lambda_sin2_plus_one > 0.5 &&
                     mz.max_identity_defect < 1e-12;
  return cert;
}

}  // namespace revtype
