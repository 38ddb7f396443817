#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "equiarbor/cuts.hpp"
#include "equiarbor/network.hpp"

namespace equiarbor {

/// Arguments of the cut bound F(x, y) for a k-regular graph, with
/// a = k-x, b = k-y, c = k-x-y+1.
struct FParams {
  long k = 0;
  long x = 0;
  long y = 0;
  Rational a;
  Rational b;
  Rational c;

  /// Validates 1 <= x,y <= k-1, x+y <= k+1 (so c >= 0) and a positive
  /// denominator 2ab(k+1) - kc^2; throws DomainError otherwise.
  static FParams make(long k, long x, long y);

  Rational numerator() const { return 4 * a * b - c * c; }
  Rational denominator() const { return 2 * a * b * (k + 1) - k * c * c; }
};

/// F(x,y) = (4(k-x)(k-y) - (k-x-y+1)^2) / (2(k-x)(k-y)(k+1) - k(k-x-y+1)^2).
Rational f_xy(long k, long x, long y);

/// The reduced four-vertex network of the cut bound, labels u1=0, u2=1, v1=2,
/// v2=3. Edges whose resistance formula is 1/0 are left out (open circuit).
WeightedNetwork cut_bound_network(long k, long x, long y);

struct KirchhoffCheck {
  Rational resistance;       // solver value of Omega_N(u1, v1)
  Rational closed_form;      // f_xy(k, x, y)
  Rational voltage_u2;       // solver, unit voltage across u1 (1) and v1 (0)
  Rational voltage_v2;
  Rational current;          // solver, 1 / resistance
  bool resistance_matches = false;
  bool voltages_match = false;       // against (2ab+c(x-1))/(4ab-c^2), a(2x+c-2)/(4ab-c^2)
  bool current_matches = false;      // against (2ab(k+1)-kc^2)/(4ab-c^2)
  bool simplification_holds = false; // k - (aV_u2 + (x-1)V_v2) equals the simplified current

  bool ok() const { return resistance_matches && voltages_match && current_matches && simplification_holds; }
};

/// Solves the cut-bound network with the generic engine and compares it with
/// the closed forms. Throws DomainError or SingularNetworkError.
KirchhoffCheck kirchhoff_cross_check(long k, long x, long y);

/// Every (x, y) for which f_xy is defined at regularity k.
std::vector<std::pair<long, long>> f_domain(long k);

/// max F(d(u), d(v)) over crossing edges uv, degrees taken in G[C].
/// Throws PreconditionError for trivial cuts, |C| > k, or non-k-regular g.
Rational cut_lower_bound(const Graph& g, const EdgeCut& cut, long k);

/// Largest integer s with s <= k - sqrt(k) - 2, computed with integers only
/// (may be negative).
long floor_k_minus_sqrt_k_minus_2(long k);
/// floor(k - sqrt(k)).
long floor_k_minus_sqrt_k(long k);

/// F(x+1, y+1) >= 2/k for all x, y >= 1 with x + y <= k - sqrt(k) - 2 (k >= 7).
bool verify_claim4(long k);
/// 2(k-x-1)(k-y-1)(k+1) - k(k-x-y-1)^2 > 0 for all x, y >= 1, x + y <= k-1 (k >= 7).
bool verify_appendix_b(long k);
/// G(x) = (3k+x-5)/(k^2+(x-1)k-2) is strictly decreasing over x = 3..k+1, meets
/// 2/k exactly at x = k+4/k-3, and equals F(x-1, 1) on its domain.
bool verify_g_monotone(long k);
/// 2 floor(k - sqrt k) - 2 >= k for k >= 8, and >= k+1 for k >= 11.
bool verify_claim3_arithmetic(long k);
/// F(1,1) = 3/(k+2) >= 2/k for k >= 4 (the K2-component contradiction).
bool verify_k2_bound(long k);

/// Worked networks with known closed-form resistances.
enum class WorkedNetwork {
  C4w,  // 4-cycle u1 u2 v2 v1; params p = R(u1,u2), q = R(v1,v2); Omega(u1,v1)
  C3w,  // triangle u1 u2 v3; params s = R(u1,u2), t = R(u1,v3); Omega(u2,v3)
  M1,   // params x1, y1; Omega(u1,v1)
  M2,   // params x2, y2; Omega(u1,v1)
  M3,   // params x3, y3; Omega(u1,v1)
  K4w,  // the cut-bound network; params k, x, y; Omega(u1,v1) = F(x,y)
  N2,   // double-star reduction of a K_{2,3} cut; params p, q; Omega(u1,v1)
};

WorkedNetwork parse_worked_network(std::string_view name);
std::string to_string(WorkedNetwork id);

using ParamMap = std::map<std::string, Rational>;

/// The network itself, with the measured pair stored as its terminals.
WeightedNetwork worked_network(WorkedNetwork id, const ParamMap& params);

/// Closed-form resistance for the worked network, verified against the
/// generic solver (VerificationError on mismatch). Throws ParameterError for
/// missing or non-positive parameters.
Rational closed_form(WorkedNetwork id, const ParamMap& params);

/// M1 difference Omega(u1,v1) - Omega(u1,v2) = y1/(x1y1+2x1+2y1+3), checked
/// through the solver.
bool verify_m1_difference(const Rational& x1, const Rational& y1);

/// t1 + t2t3/(t2+t3) = t2 + t1t3/(t1+t3) holds exactly when t1 = t2.
bool verify_claim2(const Rational& t1, const Rational& t2, const Rational& t3);

}  // namespace equiarbor
