#pragma once

#include <cstddef>
#include <vector>

#include "eigenbound/optimize.hpp"
#include "eigenbound/profile.hpp"

namespace eigenbound {

/// sup_r phi(r) psi(r).
Extremum delta(const CoefficientProfile& p, std::size_t resolution = 2001);
/// sup_r { phi^-1/2 int_0^r C phi^3/2 + phi^1/2 int_r^1 C phi^1/2 }.
Extremum delta1(const CoefficientProfile& p, std::size_t resolution = 2001);
/// sup_r { phi^-1 int_0^r C phi^2 + phi psi }.
Extremum delta1_prime(const CoefficientProfile& p, std::size_t resolution = 2001);
/// sup_r { psi^-1/2 int_r^1 C^-1 psi^3/2 + psi^1/2 int_0^r C^-1 psi^1/2 }.
Extremum delta1_star(const CoefficientProfile& p, std::size_t resolution = 2001);
/// sup_r { psi^-1 int_r^1 C^-1 psi^2 + phi psi }.
Extremum delta1_star_prime(const CoefficientProfile& p, std::size_t resolution = 2001);

/// The five sup-quantities together with the bracket they give for the
/// principal eigenvalue lambda-bar of the reduced operator:
/// max(1/delta1, 1/delta1*) <= lambda-bar <= min(1/delta1', 1/delta1*').
/// Infinite quantities contribute reciprocal 0.
struct BoundBracket {
  double delta = 0.0;
  double delta1 = 0.0;
  double delta1_prime = 0.0;
  double delta1_star = 0.0;
  double delta1_star_prime = 0.0;
  double lower_for_barlambda = 0.0;
  double upper_for_barlambda = 0.0;
};

BoundBracket delta_bracket(const CoefficientProfile& p, std::size_t resolution = 2001);
BoundBracket delta_bracket(int d, const Alpha& alpha, std::size_t resolution = 2001);

struct IterationTrace {
  int n = 0;
  std::vector<double> lower_sequence;     // delta_n
  std::vector<double> upper_sequence;     // delta_n'
  std::vector<double> rayleigh_sequence;  // delta-bar_n
  /// Node samples of f_n (lower iteration) or of f_n^(r) at the maximising r
  /// of delta_n' (upper iteration).
  std::vector<std::vector<double>> test_functions;
  /// Maximising r for each entry of the sequences.
  std::vector<double> argsup;
};

/// f_1 = sqrt(phi), f_{n+1}(r) = int_0^r C^-1(s) ds int_s^1 C f_n,
/// delta_n = sup f_{n+1} / f_n. Fills lower_sequence.
IterationTrace iterate_lower(const CoefficientProfile& p, int n_max, std::size_t resolution = 2001);

/// For fixed r: f_1 = phi(. ^ r), f_{n+1} = H_n(. ^ r) with H_n as above.
/// delta_n' = sup_r inf_s f_{n+1}/f_n and delta-bar_n = sup_r of the
/// Rayleigh ratio int f_n^2 C / int (f_n')^2 C. Fills upper_sequence and
/// rayleigh_sequence; the outer sup scans r_resolution points then polishes.
IterationTrace iterate_upper(const CoefficientProfile& p, int n_max, std::size_t r_resolution = 101);

enum class VariationalForm { primal, dual };

/// inf_r f(r) / (int_0^r C^-1 ds int_s^1 C f)   (primal), or
/// inf_r f(r) / (int_r^1 C ds int_0^s C^-1 f)   (dual).
/// A lower bound for lambda-bar for every f positive on (0, 1); throws
/// InvalidTestFunction otherwise.
double variational_ratio(const RealFunction& f, const CoefficientProfile& p, VariationalForm form,
                         std::size_t resolution = 2001);

}  // namespace eigenbound
