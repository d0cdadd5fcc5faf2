#pragma once

#include "rnls/config.hpp"
#include "rnls/field.hpp"

namespace rnls {

enum class Galilean { J, H };
enum class GalileanMethod { direct, factorized };

/// J(t)u = x sinh t u + i cosh t grad u,  H(t)u = x cosh t u + i sinh t grad u.
///
/// For radial u both are radial vector fields v(r) x/|x|; the result stores
/// r v(r), so mass_squared and lp_norm of the output are the norms of the
/// vector field over R^3. The factorized path conjugates the derivative by
/// the chirp e^{i r^2 tanh t / 2} (J) or e^{i r^2 coth t / 2} (H).
/// Throws ErrorKind::range for factorized H at t = 0.
RadialField galilean_apply(const RadialField& field, double t, Galilean which,
                           GalileanMethod method = GalileanMethod::direct);

/// ||G(t)U(t)u0 - U(t)G(0)u0||_2 / ||G(0)u0||_2 for G = J or H, i.e. the
/// commutation J(t) = U(t) i grad U(-t), H(t) = U(t) x U(-t). U(t)u0 comes
/// from linear_flow; U(t) on the vector side from the l = 1 Mehler kernel.
/// Throws ErrorKind::undefined when G(0)u0 vanishes.
double heisenberg_residual(const RadialField& u0, double t, double dt, Galilean which,
                           Splitting splitting = Splitting::strang);

/// ||f||_{p_out} / ||J(t) f||_{p_in} for (p_out, p_in) in {(10, 30/13), (18, 18/7)}.
double embedding_ratio(const RadialField& field, double t, double p_out, double p_in);

struct DispersiveRatio {
  double plain;      // ||U(t)u0||_inf |t|^{3/2} / ||u0||_1
  double sinh_form;  // ||U(t)u0||_inf |2 pi sinh t|^{3/2} / ||u0||_1
};

/// Decay audit of U(t) from L^1 to L^inf, with U(t) from the Mehler quadrature.
DispersiveRatio dispersive_ratio(const RadialField& u0, double t);

}  // namespace rnls
