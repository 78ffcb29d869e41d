#ifndef OPDC_FAMILIES_HPP
#define OPDC_FAMILIES_HPP

#include <functional>
#include <vector>

#include "opdc/rational.hpp"
#include "opdc/reflection.hpp"
#include "opdc/transforms.hpp"

namespace opdc {

/// Bannai-Ito parameter pack (rho1, rho2, r1, r2); g = rho1 + rho2 - r1 - r2.
struct BIParameters {
    Rational rho1;
    Rational rho2;
    Rational r1;
    Rational r2;

    Rational g() const { return rho1 + rho2 - r1 - r2; }
};

/// Racah-Wilson parameter pack (beta1..beta4); sigma = beta1+beta2+beta3+beta4.
struct RWParameters {
    Rational beta1;
    Rational beta2;
    Rational beta3;
    Rational beta4;

    Rational sigma() const { return beta1 + beta2 + beta3 + beta4; }
};

struct BICoeffs {
    std::vector<Rational> A;
    std::vector<Rational> C;
    ThreeTermRecurrence rec; // b_k = rho1 - A_k - C_k, u_k = A_{k-1} C_k; AC-form attached
};

/// Bannai-Ito recurrence coefficients A_0..A_{n-1}, C_0..C_{n-1}
/// (parity-split rational formulas). Pole factors are checked eagerly up
/// to the requested depth.
BICoeffs bi_coeffs(const BIParameters& p, int n);

struct CBICoeffs {
    std::vector<Rational> v;
    ThreeTermRecurrence rec; // b_k = (-1)^k rho2, u_k = v_k
};

/// Complementary Bannai-Ito (companion) coefficients v_0..v_{n-1}.
CBICoeffs cbi_coeffs(const BIParameters& p, int n);

struct BISeed {
    Rational a0;
    Rational lambda0;
    Rational lambda_bi;      // 4 / (-rho2 - r2 - 1/2)^2
    Rational sqrt_lambda_bi; // signed branch 2 / (-rho2 - r2 - 1/2)
};

/// Seeds of the reflection-parameter recursion. The signed square-root
/// branch makes lambda0 * s - 1/s = rho2 hold exactly; this identity is
/// re-checked before returning.
BISeed bi_seed(const BIParameters& p);

enum class ReflectionMode { ClosedForm, Recursive };

/// Reflection parameters a_0..a_{n-1} attached to the Bannai-Ito family,
/// either from the parity-split closed form or by iterating
/// a_k = 1 - v_k / (lambda0 (1 + a_{k-1})) from the closed seed.
std::vector<Rational> bi_reflection(const BIParameters& p, int n, ReflectionMode mode);

struct RWCoeffs {
    std::vector<Rational> A;
    std::vector<Rational> C;
};

RWCoeffs rw_coeffs(const RWParameters& p, int n);

/// beta1 = rho2, beta2 = 1 + rho1, beta3 = -r1 + 1/2, beta4 = -r2 + 1/2;
/// the derived sums satisfy sigma = g + 2.
RWParameters beta_map(const BIParameters& p);

/// Reflection parameters of the symmetrized Racah-Wilson preimage
/// (parity-split closed form in the betas).
std::vector<Rational> rw_reflection(const RWParameters& p, int n);

/// Parameter substitution (rho1, rho2, r1, r2) ->
/// (-r2 - 1/2, rho1, r1, -rho2 - 1/2); leaves g unchanged.
BIParameters subs1(const BIParameters& p);

/// Closed form of the substituted reflection parameters,
/// bi_reflection(subs1(p)) written directly in the original parameters:
///   even: 1 - 2 (rho2 - r2 + (n+1)/2)(rho2 - r1 + (n+1)/2) / ((rho2 - rho1)(n + g + 1))
///   odd:  1 - 2 (g + (n+1)/2)(rho1 + rho2 + (n+1)/2) / ((rho1 + rho2)(n + g + 1))
std::vector<Rational> bi_q_reflection(const BIParameters& p, int n);

struct IdentifyQReport {
    Rational lambda;
    int n = 0;
    bool pass = false;
};

/// The full identification: a_k from the substituted closed form (computed
/// both directly and as bi_reflection(subs1(p)); the two must agree),
/// lambda = (rho2 + rho1)/(rho2 - rho1), and the exact equalities
///   b_k(lambda) = 2 (rho1 - A_k - C_k) / (rho2 - rho1),
///   u_k(lambda) = 4 A_{k-1} C_k / (rho2 - rho1)^2
/// against bi_coeffs(p). Throws IdentityViolation at the first failing
/// index; otherwise returns pass = true.
IdentifyQReport bi_identify_q(const BIParameters& p, int n);

/// Generator adapters for ReflectionSequence plumbing.
ReflectionSequence::Generator bi_reflection_generator(BIParameters p);
ReflectionSequence::Generator bi_q_reflection_generator(BIParameters p);
ReflectionSequence::Generator rw_reflection_generator(RWParameters p);

} // namespace opdc

#endif
