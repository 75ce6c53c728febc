#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "sparse_evolve/extension.hpp"
#include "sparse_evolve/rational.hpp"

namespace sparse_evolve {

using Exact = boost::multiprecision::cpp_rational;
using HighReal = boost::multiprecision::cpp_bin_float_50;

std::string to_string(const Exact& x);

// (alpha*e_1, ..., alpha*e_n) for the given back-edge counts.
std::vector<Exact> exponent_vector(const Alpha& alpha, std::span<const int> back_edges);

// Throws DegeneracyError if some window k - (a_{i+1} + ... + a_{i+k}) is zero.
// Every denominator of the closed form is such a window.
void check_exponents(std::span<const Exact> alphas);

// The iterated integral
//   I_n = ∫_{τ0}^T ∫_{τ1}^T ... ∫_{τ_{n-1}}^T τ1^-a1 ... τn^-an dτn ... dτ1
// expands as sum_j c[j] * T^t_exponents[j] * τ0^tau0_exponents[j].
struct CoefficientTable {
  std::vector<Exact> c;
  std::vector<Exact> t_exponents;
  std::vector<Exact> tau0_exponents;

  int order() const { return static_cast<int>(c.size()) - 1; }
  friend bool operator==(const CoefficientTable&, const CoefficientTable&) = default;
};

// Closed form: c[j] = (-1)^j / (prod_{k=1}^{n-j} (k - (a_{j+1}+...+a_{j+k}))
//                              * prod_{i=1}^{j} (i - (a_{j+1-i}+...+a_j))).
CoefficientTable coeff_C_closed(std::span<const Exact> alphas);

// The same table built from the n = 1 base case, the recurrence
// C^{n+1}_{j+1}[a_1..] = -C^n_j[a_2..] / ((j+1) - (a_1+...+a_{j+1})) and
// C^n_0 = -sum_{j>=1} C^n_j.
CoefficientTable coeff_C_recur(std::span<const Exact> alphas);

// Coefficients D^n_j of J_n, the integral whose first integrand factor is 1,
// given the remaining exponents (a_2, ..., a_n). Built from the shifted
// C^{n-1} table rather than by prepending a zero exponent.
CoefficientTable coeff_D(std::span<const Exact> tail);

HighReal evaluate(const CoefficientTable& table, const HighReal& tau0, const HighReal& t);

// I_n(τ0; a_1..a_n) on [τ0, T], 0 < τ0 <= T.
double integral_I(double tau0, double t, std::span<const Exact> alphas);
// J_n(τ0; a_2..a_n) on [τ0, T]; n = tail.size() + 1.
double integral_J(double tau0, double t, std::span<const Exact> tail);

enum class Regime { kGrowsWithT, kTailDecays };
const char* to_string(Regime r);

// One term C_S * T^delta(H/S) * τ0^delta(S/R) of the grouped expansion.
struct ThetaTerm {
  std::uint32_t subset = 0;  // mask of extension vertices in S
  Exact coefficient;
  Exact t_exponent;
  Exact tau0_exponent;
};

struct ThetaForm {
  std::vector<ThetaTerm> terms;  // by subset mask
  Exact dominant_t_exponent;     // d(H/R)
  Regime regime = Regime::kGrowsWithT;

  const ThetaTerm& term(std::uint32_t subset) const;
  // Proper subsets S with delta(H/S) = d(H/R).
  std::vector<std::uint32_t> dominant_subsets() const;
};

struct ClosedFormExpectation {
  double value = 0.0;
  ThetaForm theta;
};

// Sum over all orderings of the extension vertices of I_n (or J_n when the
// root is empty), grouped by the realised prefix sets.
ClosedFormExpectation expected_count_closed(const RootedExtension& ext, const Alpha& alpha,
                                            double tau0, double t);

// Exact expected number of induced rooted embeddings landing in
// G(T) \ G(τ0), summed over orderings and arrival times τ0 < t1 < ... < tn <= T.
// Evaluated with 50-digit arithmetic.
HighReal exact_expectation_oracle_hp(const RootedExtension& ext, const Alpha& alpha,
                                     std::uint64_t tau0, std::uint64_t t);
double exact_expectation_oracle(const RootedExtension& ext, const Alpha& alpha,
                                std::uint64_t tau0, std::uint64_t t);

// Work budget of the oracle in (orderings * n * (T - τ0)) steps.
inline constexpr std::uint64_t kOracleBudget = 50'000'000;
inline constexpr int kMaxClosedFormOrder = 8;

struct AsymptoticExponent {
  Regime regime;
  Rational exponent;  // d(H/R) when growing, delta(H/R) when decaying
};

AsymptoticExponent asymptotic_exponent(const RootedExtension& ext, const Alpha& alpha);

}  // namespace sparse_evolve
