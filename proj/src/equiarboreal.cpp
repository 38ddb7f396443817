#include "equiarbor/equiarboreal.hpp"

#include "equiarbor/cuts.hpp"
#include "equiarbor/errors.hpp"
#include "equiarbor/resistance.hpp"

namespace equiarbor {

EquiarborealVerdict check_equiarboreal(const Graph& g) {
  if (!g.is_connected()) throw ConnectivityError("equiarboreality is decided on connected graphs");
  const std::vector<Edge> edges = g.edges();
  if (edges.empty()) throw ParameterError("equiarboreality needs at least one edge");
  const RationalMatrix omega = resistance_matrix(g);
  auto at = [&](const Edge& e) {
    return omega(static_cast<Eigen::Index>(e.u), static_cast<Eigen::Index>(e.v));
  };
  const Rational first = at(edges.front());
  EquiarborealVerdict verdict;
  for (std::size_t j = 1; j < edges.size(); ++j) {
    const Rational r = at(edges[j]);
    if (r != first) {
      verdict.witness = UnequalEdges{edges.front(), edges[j], first, r};
      return verdict;
    }
  }
  const Rational expected(BigInt(g.vertex_count() - 1), BigInt(g.edge_count()));
  if (first != expected) {
    throw VerificationError("common edge resistance " + to_string(first) + " differs from (n-1)/m = " +
                            to_string(expected));
  }
  verdict.is_equiarboreal = true;
  verdict.omega = first;
  return verdict;
}

GodsilBound godsil_bound_check(const Graph& g) {
  const EquiarborealVerdict verdict = check_equiarboreal(g);
  if (!verdict.is_equiarboreal) throw PreconditionError("Godsil's bound applies to equiarboreal graphs only");
  GodsilBound out;
  out.bound = Rational(BigInt(g.edge_count()), BigInt(g.vertex_count() - 1));
  out.lambda = edge_connectivity(g);
  out.holds = Rational(static_cast<long>(out.lambda)) >= out.bound;
  return out;
}

nlohmann::json to_json(const EquiarborealVerdict& verdict) {
  nlohmann::json doc;
  doc["equiarboreal"] = verdict.is_equiarboreal;
  doc["omega"] = verdict.omega ? nlohmann::json(to_string(*verdict.omega)) : nlohmann::json(nullptr);
  if (verdict.witness) {
    const auto& w = *verdict.witness;
    doc["witness"] = {{"first", {{"u", w.first.u}, {"v", w.first.v}, {"resistance", to_string(w.first_resistance)}}},
                      {"second",
                       {{"u", w.second.u}, {"v", w.second.v}, {"resistance", to_string(w.second_resistance)}}}};
  } else {
    doc["witness"] = nullptr;
  }
  return doc;
}

}  // namespace equiarbor
