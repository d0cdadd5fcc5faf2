#pragma once

#include "rnls/field.hpp"

namespace rnls {

/// Conserved and decaying quantities of one state u(t), t = field.time().
///
///   E     = 1/2 ||grad u||^2 - 1/2 ||x u||^2 + 1/3 ||u||_6^6 = E1 - E2
///   calE1 = 1/2 ||J(t)u||^2 + 1/3 cosh^2 t ||u||_6^6
///   calE2 = 1/2 ||H(t)u||^2 + 1/3 sinh^2 t ||u||_6^6
///
/// ||J(t)u||^2 and ||H(t)u||^2 are expanded in the quadratic forms
/// grad2 = ||grad u||^2, moment2 = ||x u||^2 and cross = 2 Re <x u, i grad u>.
struct EnergyLedger {
  double t = 0.0;
  double M = 0.0;  // ||u||_2
  double E = 0.0;
  double E1 = 0.0;
  double E2 = 0.0;
  double calE1 = 0.0;
  double calE2 = 0.0;
  double pot6 = 0.0;
  double L10 = 0.0;  // ||u(t)||_10
  double tail_mass = 0.0;
  double grad2 = 0.0;
  double moment2 = 0.0;
  double cross = 0.0;

  double J_norm_sq() const noexcept;
  double H_norm_sq() const noexcept;
};

EnergyLedger ledger(const RadialField& field);

}  // namespace rnls
