#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "maxfront/rational.hpp"

namespace maxfront {

// Medium/theorem parameter tuple. N is the ambient space dimension of the
// theorem; simulations may run a lower-dimensional reduction of the same
// medium (grid dimension lives in GridSpec, not here).
struct MediumParams {
  int N = 2;
  Rat m{0};
  Rat n{2};
  Rat p{2};
  double d1 = 1.0;
  double d2 = 1.0;
  double d3 = 1.0;
  double w0_l1 = 1.0;  // L1 norm of the initial energy density
};

struct AdmissibilityCheck {
  std::string name;
  std::string detail;  // inequality rendered with numbers
  bool pass = false;
};

struct AdmissibilityReport {
  bool admissible = false;
  std::vector<AdmissibilityCheck> checks;
  std::vector<std::string> warnings;
};

// Every derived quantity of the front bound and its time horizons. All pure
// exponents are exact rationals; decimal views are for display and floating
// evaluation only.
struct DerivedExponents {
  MediumParams params;

  Rat beta1, beta2;        // interpolation exponents of the A/B estimates
  Rat k1, k2;              // time-power exponents, each < 1
  Rat theta;               // interpolation exponent of the L1 lemma
  Rat gamma;               // growth exponent of the L1 integral inequality
  Rat kappa;               // small-time front exponent
  Rat alpha_large;         // large-time front exponent
  Rat beta;                // (1+beta1)(1+beta2)
  Rat f_exp1, f_exp2;      // exponents of F(T) = max{T^f_exp1, T^f_exp2}
  Rat t2_exp1, t2_exp2;    // exponents of K0 in the T2 display

  Rat t1_coeff;            // T1 = t1_coeff * w0_l1^t1_exponent
  Rat t1_exponent;
  double t1 = 0.0;
  // T2 with the generic constants c and K0 normalized to 1; with K0 = 1 the
  // two K0-powers are both 1, so the normalized value is identically 1.
  // The exponents above carry the actual shape.
  double t2_shape = 1.0;
  double t_star = 0.0;     // min(t1, t2_shape), shape-only
};

namespace detail {

inline std::string render(const Rat& r) {
  std::string s = r.str();
  if (!r.is_integer()) s += " (" + std::to_string(r.to_double()) + ")";
  return s;
}

inline void add_check(AdmissibilityReport& rep, std::string name,
                      std::string detail, bool pass) {
  rep.checks.push_back({std::move(name), std::move(detail), pass});
  if (!pass) rep.admissible = false;
}

}  // namespace detail

// Checks every hypothesis of Theorem 1 on the parameter tuple, plus the two
// direct side conditions k1 < 1 and k2 < 1 that the stated bounds on m do
// not actually guarantee (see the warning path).
inline AdmissibilityReport validate_params(const MediumParams& P) {
  using detail::add_check;
  using detail::render;

  if (P.N != 1 && P.N != 2 && P.N != 3)
    throw std::invalid_argument("validate_params: N must be 1, 2 or 3");
  if (!(P.d1 > 0) || !(P.d2 > 0) || !(P.d3 > 0))
    throw std::invalid_argument("validate_params: d1, d2, d3 must be positive");

  AdmissibilityReport rep;
  rep.admissible = true;

  const bool finite = std::isfinite(P.d1) && std::isfinite(P.d2) &&
                      std::isfinite(P.d3) && std::isfinite(P.w0_l1) &&
                      P.w0_l1 >= 0;
  add_check(rep, "inputs_finite",
            finite ? "structure constants and w0_l1 finite, w0_l1 >= 0"
                   : "non-finite or negative scalar input",
            finite);
  if (!finite) return rep;

  if (P.N == 1)
    rep.warnings.push_back(
        "N = 1 accepted as engineering reduction; the theorem states N = 2,3");

  const Rat N(P.N), m = P.m, n = P.n, p = P.p, one(1), two(2);

  add_check(rep, "p_gt_1", "p > 1: " + render(p) + " > 1", p > one);
  add_check(rep, "n_gt_1", "n > 1: " + render(n) + " > 1", n > one);
  if (!rep.admissible) return rep;

  if (p < two) {
    // n < 1 + (p-1)(p+N) / (pN(2-p)), only restrictive for p < 2
    Rat bound = one + (p - one) * (p + N) / (p * N * (two - p));
    add_check(rep, "n_upper_subquadratic",
              "n < 1 + (p-1)(p+N)/(pN(2-p)): " + render(n) + " < " + render(bound),
              n < bound);
  } else {
    add_check(rep, "n_upper_subquadratic", "not applicable (p >= 2)", true);
  }

  // max{-p, -p(1 + 1/N - n/p), -p(1 + 1/N - (n-1)/(p-1))} < m < p(n-2)+1
  Rat lb1 = -p;
  Rat lb2 = -p * (one + one / N - n / p);
  Rat lb3 = -p * (one + one / N - (n - one) / (p - one));
  Rat lb = max(lb1, max(lb2, lb3));
  add_check(rep, "m_lower",
            "m > max{" + lb1.str() + ", " + lb2.str() + ", " + lb3.str() +
                "} = " + render(lb) + ": " + render(m) + " > " + render(lb),
            m > lb);
  Rat ub = p * (n - two) + one;
  add_check(rep, "m_upper",
            "m < p(n-2)+1: " + render(m) + " < " + render(ub), m < ub);

  const bool paper_bounds = rep.admissible;

  // Direct evaluation of the side conditions stated beneath the A/B
  // estimates. These can fail on tuples the bounds above admit.
  Rat D = p + N * (m + p - one);
  if (!(D > Rat(0))) {
    add_check(rep, "denominator_positive",
              "p + N(m+p-1) > 0: " + render(D) + " > 0", false);
    return rep;
  }
  Rat k1 = N * (n - one) / D;
  Rat k2 = N * (p * (n - two) - m + one) / ((p - one) * D);
  bool k1_ok = k1 < one, k2_ok = k2 < one;
  add_check(rep, "k1_lt_1", "k1 < 1: " + render(k1) + " < 1", k1_ok);
  add_check(rep, "k2_lt_1", "k2 < 1: " + render(k2) + " < 1", k2_ok);
  if (paper_bounds && !k1_ok)
    rep.warnings.push_back("k1 >= 1 although paper bounds pass (k1 = " +
                           k1.str() + ")");
  if (paper_bounds && !k2_ok)
    rep.warnings.push_back("k2 >= 1 although paper bounds pass (k2 = " +
                           k2.str() + ")");

  return rep;
}

// Evaluates every closed-form exponent and time horizon of the theorem in
// exact rational arithmetic. Requires an admissible tuple.
inline DerivedExponents derive_exponents(const MediumParams& P) {
  AdmissibilityReport rep = validate_params(P);
  if (!rep.admissible) {
    std::string why;
    for (const auto& c : rep.checks)
      if (!c.pass) why += (why.empty() ? "" : "; ") + c.detail;
    throw std::invalid_argument("derive_exponents: parameters not admissible: " + why);
  }

  const Rat N(P.N), m = P.m, n = P.n, p = P.p, one(1), two(2);
  const Rat D = p + N * (m + p - one);       // shared denominator
  const Rat S = p * (n - two) - m + one;     // p(n-2) - m + 1

  DerivedExponents E;
  E.params = P;
  E.k1 = N * (n - one) / D;
  E.beta1 = p * (n - one) / D;
  E.k2 = N * S / ((p - one) * D);
  E.beta2 = p * S / ((p - one) * D);
  E.theta = N * (m + n) * S / (D * (p * (n - one) - m));
  E.gamma = ((N - one) * (p * (n - one) - m) + N * (p - one) * (m + p)) /
            (p * (p - one + N * (m + p - n)));
  E.kappa = p * (p - one + N * (m + p - n)) * (n * p + N * (m + p - one)) /
            (D * (p * (p * (n - one) - m) + N * (p - one) * (m + p - one)));
  E.alpha_large = (p + N * (m + p - n)) / D;
  E.beta = (one + E.beta1) * (one + E.beta2);
  E.f_exp1 = (one - E.k1) * (one + E.beta2);
  E.f_exp2 = (one - E.k2) * (one + E.beta1);
  E.t2_exp1 = -E.beta2 / ((one - E.k1) * (one + E.beta2) * (one + E.beta2));
  E.t2_exp2 = -E.beta2 / ((one - E.k2) * (one + E.beta1) * (one + E.beta2));

  if (E.gamma == one)
    throw std::domain_error("derive_exponents: T1 formula singular at gamma = 1");
  if (E.gamma < one) {
    E.t1_coeff = two / (one - E.gamma);
    E.t1_exponent = one - E.gamma;
  } else {
    E.t1_coeff = one / (two * (E.gamma - one));
    E.t1_exponent = E.gamma - one;
  }
  E.t1 = E.t1_coeff.to_double() *
         std::pow(P.w0_l1, E.t1_exponent.to_double());
  E.t2_shape = 1.0;
  E.t_star = std::min(E.t1, E.t2_shape);
  return E;
}

// Front bound Gamma(t) = K max{t^alpha_large, t^kappa}; K is the theorem's
// uncomputable constant and is supplied by the caller (shape-only use).
inline double front_bound(const DerivedExponents& E, double t, double K) {
  if (t < 0) throw std::domain_error("front_bound: negative time");
  if (!(K > 0)) throw std::invalid_argument("front_bound: K must be positive");
  return K * std::max(std::pow(t, E.alpha_large.to_double()),
                      std::pow(t, E.kappa.to_double()));
}

// F(T) = max{T^{(1-k1)(1+beta2)}, T^{(1-k2)(1+beta1)}}; vanishes as T -> 0
// exactly when k1, k2 < 1.
inline double f_of_t(const DerivedExponents& E, double T) {
  if (!(T > 0)) throw std::domain_error("f_of_t: T must be positive");
  if (!(E.k1 < Rat(1)) || !(E.k2 < Rat(1)))
    throw std::domain_error("f_of_t: requires k1 < 1 and k2 < 1");
  return std::max(std::pow(T, E.f_exp1.to_double()),
                  std::pow(T, E.f_exp2.to_double()));
}

}  // namespace maxfront
