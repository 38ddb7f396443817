#include "equiarbor/bounds.hpp"

#include <algorithm>

#include "equiarbor/errors.hpp"
#include "equiarbor/resistance.hpp"

namespace equiarbor {

namespace {

Rational q(long v) { return Rational(v); }

long isqrt(long k) {
  long r = 0;
  while ((r + 1) * (r + 1) <= k) ++r;
  return r;
}

long ceil_sqrt(long k) {
  const long r = isqrt(k);
  return r * r == k ? r : r + 1;
}

}  // namespace

FParams FParams::make(long k, long x, long y) {
  const std::string where = "F(" + std::to_string(x) + "," + std::to_string(y) + ") at k=" + std::to_string(k);
  if (k < 2) throw DomainError(where + ": regularity must be at least 2");
  if (x < 1 || y < 1 || x > k - 1 || y > k - 1) throw DomainError(where + ": need 1 <= x, y <= k-1");
  if (x + y > k + 1) throw DomainError(where + ": need x + y <= k+1");
  FParams p;
  p.k = k;
  p.x = x;
  p.y = y;
  p.a = q(k - x);
  p.b = q(k - y);
  p.c = q(k - x - y + 1);
  if (p.denominator() <= 0) throw DomainError(where + ": denominator 2ab(k+1) - kc^2 is not positive");
  return p;
}

Rational f_xy(long k, long x, long y) {
  const FParams p = FParams::make(k, x, y);
  return p.numerator() / p.denominator();
}

WeightedNetwork cut_bound_network(long k, long x, long y) {
  FParams::make(k, x, y);
  constexpr Vertex u1 = 0, u2 = 1, v1 = 2, v2 = 3;
  WeightedNetwork net(4);
  // Conductances rather than resistances: a zero conductance is the open circuit.
  auto join = [&](Vertex u, Vertex v, long conductance) {
    if (conductance != 0) net.add_conductance(u, v, q(conductance));
  };
  join(u1, v1, 1);
  join(u1, u2, k - x);
  join(v1, v2, k - y);
  join(u1, v2, x - 1);
  join(u2, v1, y - 1);
  join(u2, v2, k - x - y + 1);
  net.set_terminals({u1, v1});
  return net;
}

KirchhoffCheck kirchhoff_cross_check(long k, long x, long y) {
  const FParams p = FParams::make(k, x, y);
  const WeightedNetwork net = cut_bound_network(k, x, y);
  const UnitCurrentSolution sol = unit_current_potentials(net, 0, 2);
  KirchhoffCheck out;
  out.resistance = sol.resistance;
  out.closed_form = p.numerator() / p.denominator();
  // Rescale from unit current to unit voltage across u1, v1.
  out.voltage_u2 = sol.potential(1) / sol.resistance;
  out.voltage_v2 = sol.potential(3) / sol.resistance;
  out.current = 1 / sol.resistance;

  const Rational disc = 4 * p.a * p.b - p.c * p.c;
  const Rational vu2 = (2 * p.a * p.b + p.c * q(x - 1)) / disc;
  const Rational vv2 = p.a * (2 * q(x) + p.c - 2) / disc;
  const Rational current = p.denominator() / disc;
  out.resistance_matches = out.resistance == out.closed_form;
  out.voltages_match = out.voltage_u2 == vu2 && out.voltage_v2 == vv2;
  out.current_matches = out.current == current;
  out.simplification_holds = q(k) - (p.a * out.voltage_u2 + q(x - 1) * out.voltage_v2) == current;
  return out;
}

std::vector<std::pair<long, long>> f_domain(long k) {
  std::vector<std::pair<long, long>> points;
  for (long x = 1; x <= k - 1; ++x) {
    for (long y = 1; y <= k - 1; ++y) {
      try {
        FParams::make(k, x, y);
        points.emplace_back(x, y);
      } catch (const DomainError&) {
      }
    }
  }
  return points;
}

Rational cut_lower_bound(const Graph& g, const EdgeCut& cut, long k) {
  if (cut.is_trivial()) throw PreconditionError("the F bound needs a non-trivial cut");
  if (k < 1 || g.regularity() != static_cast<std::size_t>(k)) {
    throw PreconditionError("the F bound needs a " + std::to_string(k) + "-regular graph");
  }
  if (cut.size() > static_cast<std::size_t>(k)) {
    throw PreconditionError("the F bound needs |C| <= k (cut has " + std::to_string(cut.size()) + " edges)");
  }
  const CutClassification cls = classify_cut(g, cut);
  std::optional<Rational> best;
  for (const Edge& e : cut.crossing) {
    const long du = static_cast<long>(cls.cut_degree.at(e.u));
    const long dv = static_cast<long>(cls.cut_degree.at(e.v));
    try {
      const Rational f = f_xy(k, du, dv);
      if (!best || f > *best) best = f;
    } catch (const DomainError&) {
      // a side carrying all k edges of a vertex: no bound from this edge
    }
  }
  if (!best) throw DomainError("no crossing edge has G[C]-degrees inside the domain of F");
  return *best;
}

long floor_k_minus_sqrt_k_minus_2(long k) {
  if (k < 0) throw ParameterError("k must be non-negative");
  return k - 2 - ceil_sqrt(k);
}

long floor_k_minus_sqrt_k(long k) {
  if (k < 0) throw ParameterError("k must be non-negative");
  return k - ceil_sqrt(k);
}

bool verify_claim4(long k) {
  if (k < 7) throw ParameterError("the F(x+1,y+1) >= 2/k grid starts at k = 7");
  const long s = floor_k_minus_sqrt_k_minus_2(k);
  const Rational target(BigInt(2), BigInt(k));
  for (long x = 1; x + 1 <= s; ++x) {
    for (long y = 1; x + y <= s; ++y) {
      try {
        if (f_xy(k, x + 1, y + 1) < target) return false;
      } catch (const DomainError&) {
        return false;
      }
    }
  }
  return true;
}

bool verify_appendix_b(long k) {
  if (k < 7) throw ParameterError("the positivity grid starts at k = 7");
  for (long x = 1; x + 1 <= k - 1; ++x) {
    for (long y = 1; x + y <= k - 1; ++y) {
      const BigInt lhs = BigInt(2) * (k - x - 1) * (k - y - 1) * (k + 1);
      const BigInt c = BigInt(k - x - y - 1);
      if (lhs - BigInt(k) * c * c <= 0) return false;
    }
  }
  return true;
}

bool verify_g_monotone(long k) {
  if (k < 3) throw ParameterError("G(x) is studied for k >= 3");
  auto g_at = [k](const Rational& x) { return (3 * q(k) + x - 5) / (q(k) * k + (x - 1) * k - 2); };
  for (long x = 3; x <= k; ++x) {
    if (g_at(q(x + 1)) >= g_at(q(x))) return false;
    try {
      if (f_xy(k, x - 1, 1) != g_at(q(x))) return false;
    } catch (const DomainError&) {
      return false;
    }
  }
  const Rational crossing = q(k) + Rational(BigInt(4), BigInt(k)) - 3;
  const Rational two_over_k(BigInt(2), BigInt(k));
  if (g_at(crossing) != two_over_k) return false;
  for (long x = 3; x <= k + 1; ++x) {
    const bool below = q(x) <= crossing;
    if (below != (g_at(q(x)) >= two_over_k)) return false;
  }
  return true;
}

bool verify_claim3_arithmetic(long k) {
  if (k < 8) throw ParameterError("the size bound starts at k = 8");
  const long bound = 2 * floor_k_minus_sqrt_k(k) - 2;
  if (bound < k) return false;
  if (k >= 11 && bound < k + 1) return false;
  return true;
}

bool verify_k2_bound(long k) {
  if (k < 4) throw ParameterError("the K2 contradiction starts at k = 4");
  const Rational f = f_xy(k, 1, 1);
  return f == Rational(BigInt(3), BigInt(k + 2)) && f >= Rational(BigInt(2), BigInt(k));
}

WorkedNetwork parse_worked_network(std::string_view name) {
  for (WorkedNetwork id : {WorkedNetwork::C4w, WorkedNetwork::C3w, WorkedNetwork::M1, WorkedNetwork::M2,
                           WorkedNetwork::M3, WorkedNetwork::K4w, WorkedNetwork::N2}) {
    if (to_string(id) == name) return id;
  }
  throw ParameterError("unknown worked network '" + std::string(name) + "'");
}

std::string to_string(WorkedNetwork id) {
  switch (id) {
    case WorkedNetwork::C4w: return "C4w";
    case WorkedNetwork::C3w: return "C3w";
    case WorkedNetwork::M1: return "M1";
    case WorkedNetwork::M2: return "M2";
    case WorkedNetwork::M3: return "M3";
    case WorkedNetwork::K4w: return "K4w";
    case WorkedNetwork::N2: return "N2";
  }
  return "?";
}

namespace {

std::vector<std::string> param_names(WorkedNetwork id) {
  switch (id) {
    case WorkedNetwork::C4w: return {"p", "q"};
    case WorkedNetwork::C3w: return {"s", "t"};
    case WorkedNetwork::M1: return {"x1", "y1"};
    case WorkedNetwork::M2: return {"x2", "y2"};
    case WorkedNetwork::M3: return {"x3", "y3"};
    case WorkedNetwork::K4w: return {"k", "x", "y"};
    case WorkedNetwork::N2: return {"p", "q"};
  }
  return {};
}

std::vector<Rational> take_params(WorkedNetwork id, const ParamMap& params) {
  const auto names = param_names(id);
  for (const auto& [name, value] : params) {
    if (std::find(names.begin(), names.end(), name) == names.end()) {
      throw ParameterError(to_string(id) + " has no parameter '" + name + "'");
    }
  }
  std::vector<Rational> out;
  for (const auto& name : names) {
    auto it = params.find(name);
    if (it == params.end()) throw ParameterError(to_string(id) + " needs parameter '" + name + "'");
    if (it->second <= 0) throw ParameterError(to_string(id) + " parameter '" + name + "' must be positive");
    out.push_back(it->second);
  }
  if (id == WorkedNetwork::K4w) {
    for (const Rational& v : out) {
      if (denominator(v) != 1) throw ParameterError("K4w parameters k, x, y are integers");
    }
  }
  return out;
}

long as_long(const Rational& v) { return static_cast<long>(numerator(v)); }

}  // namespace

WeightedNetwork worked_network(WorkedNetwork id, const ParamMap& params) {
  const std::vector<Rational> p = take_params(id, params);
  const Rational one(1);
  switch (id) {
    case WorkedNetwork::C4w: {
      // u1=0 u2=1 v1=2 v2=3
      WeightedNetwork net(4);
      net.add_resistor(0, 1, p[0]);
      net.add_resistor(2, 3, p[1]);
      net.add_resistor(0, 2, one);
      net.add_resistor(1, 3, one);
      net.set_terminals({0, 2});
      return net;
    }
    case WorkedNetwork::C3w: {
      // u1=0 u2=1 v3=2
      WeightedNetwork net(3);
      net.add_resistor(0, 1, p[0]);
      net.add_resistor(0, 2, p[1]);
      net.add_resistor(1, 2, one);
      net.set_terminals({1, 2});
      return net;
    }
    case WorkedNetwork::M1:
    case WorkedNetwork::M2:
    case WorkedNetwork::M3: {
      WeightedNetwork net(4);
      net.add_resistor(0, 1, p[0]);
      net.add_resistor(2, 3, p[1]);
      net.add_resistor(0, 2, one);
      net.add_resistor(0, 3, one);
      if (id == WorkedNetwork::M2) net.add_resistor(1, 2, one);
      net.add_resistor(1, 3, id == WorkedNetwork::M3 ? Rational(BigInt(1), BigInt(2)) : one);
      net.set_terminals({0, 2});
      return net;
    }
    case WorkedNetwork::K4w:
      return cut_bound_network(as_long(p[0]), as_long(p[1]), as_long(p[2]));
    case WorkedNetwork::N2: {
      // u1=0 u2=1 v1=2 v2=3 v3=4 u0=5 v0=6 o=7
      WeightedNetwork net(8);
      net.add_resistor(0, 1, p[0]);
      for (Vertex u : {0, 1}) net.add_resistor(u, 5, Rational(BigInt(1), BigInt(3)));
      for (Vertex v : {2, 3, 4}) {
        net.add_resistor(v, 6, Rational(BigInt(1), BigInt(2)));
        net.add_resistor(v, 7, p[1]);
      }
      net.add_resistor(5, 6, Rational(BigInt(-1), BigInt(6)));
      net.set_terminals({0, 2});
      return net;
    }
  }
  throw ParameterError("unknown worked network");
}

Rational closed_form(WorkedNetwork id, const ParamMap& params) {
  const std::vector<Rational> p = take_params(id, params);
  Rational value;
  switch (id) {
    case WorkedNetwork::C4w:
      value = (p[0] + p[1] + 1) / (p[0] + p[1] + 2);
      break;
    case WorkedNetwork::C3w:
      value = (p[0] + p[1]) / (p[0] + p[1] + 1);
      break;
    case WorkedNetwork::M1: {
      const Rational& x = p[0];
      const Rational& y = p[1];
      value = ((1 + x) + (2 + x) * y) / (x * y + 2 * x + 2 * y + 3);
      break;
    }
    case WorkedNetwork::M2: {
      const Rational& x = p[0];
      const Rational& y = p[1];
      value = (1 + 2 * x) / (4 + 4 * x) + (1 + 2 * y) / (4 + 4 * y) - Rational(BigInt(1), BigInt(4));
      break;
    }
    case WorkedNetwork::M3: {
      const Rational& x = p[0];
      const Rational& y = p[1];
      value = (2 * x + y * (2 * x + 3) + 1) / (2 * x + (2 * x + 3) * (y + 1) + 1);
      break;
    }
    case WorkedNetwork::K4w:
      value = f_xy(as_long(p[0]), as_long(p[1]), as_long(p[2]));
      break;
    case WorkedNetwork::N2: {
      const Rational third(BigInt(1), BigInt(3));
      const Rational half(BigInt(1), BigInt(2));
      // u0 and v0 are cut vertices, so the three legs add in series.
      const Rational left = third * (third + p[0]) / (2 * third + p[0]);
      const Rational far = p[1] + (p[1] + half) / 2;
      const Rational right = half * far / (half + far);
      value = left - Rational(BigInt(1), BigInt(6)) + right;
      break;
    }
  }
  const WeightedNetwork net = worked_network(id, params);
  const auto& t = *net.terminals();
  const Rational solved = resistance(net, t[0], t[1]);
  if (solved != value) {
    throw VerificationError(to_string(id) + ": closed form " + to_string(value) + " disagrees with solver value " +
                            to_string(solved));
  }
  return value;
}

bool verify_m1_difference(const Rational& x1, const Rational& y1) {
  const WeightedNetwork net = worked_network(WorkedNetwork::M1, {{"x1", x1}, {"y1", y1}});
  const Rational diff = resistance(net, 0, 2) - resistance(net, 0, 3);
  const Rational expected = y1 / (x1 * y1 + 2 * x1 + 2 * y1 + 3);
  return diff == expected && diff > 0;
}

bool verify_claim2(const Rational& t1, const Rational& t2, const Rational& t3) {
  if (t1 <= 0 || t2 <= 0 || t3 <= 0) throw ParameterError("the leg-balance identity takes positive t values");
  const Rational lhs = t1 + t2 * t3 / (t2 + t3);
  const Rational rhs = t2 + t1 * t3 / (t1 + t3);
  const Rational factored =
      (t1 - t2) * (t1 * t2 + t2 * t3 + t3 * t1) / ((t2 + t3) * (t1 + t3));
  return lhs - rhs == factored && ((lhs == rhs) == (t1 == t2));
}

}  // namespace equiarbor
