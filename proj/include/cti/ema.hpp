#pragma once

#include <vector>

namespace cti {

/// Two-phase transaction mixture: cash conductivity sigma_cash, cashless
/// conductivity sigma_cashless, lattice coordination number z.
/// Valid configs satisfy sigma_cashless > sigma_cash > 0 and z > 2
/// (so the quadratic coefficient A = z/2 - 1 stays positive).
struct EmaConfig {
    double sigma_cash = 1.0;
    double sigma_cashless = 10.0;
    double z = 4.0;

    double A() const { return z / 2.0 - 1.0; }
    double C() const { return -sigma_cash * sigma_cashless; }
    double delta_sigma() const { return sigma_cashless - sigma_cash; }

    /// Throws std::domain_error if the invariants above are violated.
    void validate() const;
};

/// One component of a general mixture: conductivity sigma_i with
/// population fraction f(sigma_i).
struct MixtureComponent {
    double conductivity = 0.0;
    double fraction = 0.0;
};

/// Index bands, ordered from least to most cashless.
enum class Region { Inception, Transitioning, TippingPoint, NearlyCashless };

const char* to_string(Region r);

/// Coefficients of the self-consistency quadratic A*s^2 + B*s + C = 0
/// for the two-phase mixture at cashless share p. Kept public so the
/// rate formulas reuse the exact same B(p) and discriminant.
struct QuadraticCoeffs {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    double discriminant() const { return b * b - 4.0 * a * c; }
};

QuadraticCoeffs two_phase_coeffs(double p, const EmaConfig& cfg);

/// Effective conductivity of the two-phase mixture: the unique positive
/// root of the self-consistency quadratic. sigma_cash <= result <= sigma_cashless.
double solve_two_phase(double p, const EmaConfig& cfg);

/// Effective conductivity of an arbitrary mixture, solving
///   sum_i f_i (sigma_i - s) / (sigma_i + (z/2-1) s) = 0
/// by bisection on [min sigma_i, max sigma_i]. Fractions must sum to 1
/// within 1e-9; residual at the returned root is below 1e-12.
double solve_general(const std::vector<MixtureComponent>& components, double z);

/// Cashless transaction index on a 0..10 log scale:
///   CTI = 10 * log10(sigma_e / sigma_cash) / log10(sigma_cashless / sigma_cash),
/// which for sigma_cash = 1 is 10 * log10(sigma_e) / log10(sigma_cashless).
double cti_from_share(double p, const EmaConfig& cfg);

/// Inverse of cti_from_share (closed form: invert the log scale, then the
/// linear-in-p quadratic coefficient B).
double share_from_cti(double cti, const EmaConfig& cfg);

/// Region bands are half-open: [0,2.5) [2.5,5) [5,7.5) [7.5,10].
Region classify(double cti);

/// Percolation threshold 1/(z-1) used by the calibration formulas.
double calibration_threshold(double z);

/// Share 2/z at which the two-phase solution leaves ~0 in the
/// sigma_cash -> 0 limit. Distinct from calibration_threshold by design;
/// exposed as a consistency probe.
double ema_insulator_threshold(double z);

} // namespace cti
