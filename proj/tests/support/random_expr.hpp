#pragma once

// Random expression trees and a finite-difference oracle for jet checks.

#include <array>
#include <cmath>
#include <optional>
#include <random>

#include <revtype/errors.hpp>
#include <revtype/expression.hpp>
#include <revtype/verification.hpp>

namespace revtype::testing {

inline double uniform(std::mt19937_64& rng, double lo, double hi) { return lo + (hi - lo) * unit_uniform(rng); }

inline Expr random_expr(std::mt19937_64& rng, int depth) {
  if (depth == 0 || rng() % 4 == 0) {
    if (rng() % 2 == 0) return Expr::variable();
    // Short decimals keep unparse output readable; round trip is exact anyway.
    return Expr::constant(std::round(uniform(rng, -3, 3) * 100.0) / 100.0);
  }
  switch (rng() % 3) {
    case 0: {
      static constexpr std::array ops = {UnaryOp::Neg,   UnaryOp::Sin,  UnaryOp::Cos, UnaryOp::Tan,
                                         UnaryOp::Sinh,  UnaryOp::Cosh, UnaryOp::Asinh, UnaryOp::Sqrt,
                                         UnaryOp::Exp,   UnaryOp::Ln};
      return Expr::unary(ops[rng() % ops.size()], random_expr(rng, depth - 1));
    }
    case 1: {
      static constexpr std::array ops = {BinaryOp::Add, BinaryOp::Sub, BinaryOp::Mul, BinaryOp::Div};
      return Expr::binary(ops[rng() % ops.size()], random_expr(rng, depth - 1), random_expr(rng, depth - 1));
    }
    default: {
      static constexpr std::array exponents = {2.0, 3.0, -1.0, 0.5, 1.5, -2.0};
      return Expr::power(random_expr(rng, depth - 1), exponents[rng() % exponents.size()]);
    }
  }
}

/// Central difference of channel k of the jet.
inline double central_difference(const Expr& e, double s, int k, double h) {
  auto c = [&](double x) { return eval_jet3(e, x, {})[static_cast<std::size_t>(k)]; };
  return (c(s + h) - c(s - h)) / (2 * h);
}

struct JetSample {
  Expr expr;
  double s;
  Jet3 jet;
  std::array<double, 3> fd;  ///< difference estimates of channels 1, 2, 3
};

/// Draws an expression and a point where every channel and every difference
/// evaluation is defined and moderate (below `bound` in magnitude). Draws that
/// fail those conditions are discarded.
inline JetSample draw_jet_sample(std::mt19937_64& rng, int max_depth, double h, double bound = 1e4) {
  for (;;) {
    const Expr e = random_expr(rng, 1 + static_cast<int>(rng() % static_cast<unsigned>(max_depth)));
    const double s = uniform(rng, -1.5, 1.5);
    try {
      const Jet3 j = eval_jet3(e, s, {});
      bool ok = true;
      for (int k = 0; k < 4; ++k) ok = ok && std::isfinite(j[k]) && std::abs(j[k]) < bound;
      if (!ok) continue;
      std::array<double, 3> fd{};
      for (int k = 0; k < 3; ++k) fd[static_cast<std::size_t>(k)] = central_difference(e, s, k, h);
      return {e, s, j, fd};
    } catch (const DomainError&) {
      continue;
    }
  }
}

}  // namespace revtype::testing
