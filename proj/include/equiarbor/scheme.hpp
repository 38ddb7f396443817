#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "equiarbor/graph.hpp"

namespace equiarbor {

/// Class index of every ordered point pair, row-major.
struct RelationTable {
  std::size_t point_count = 0;
  std::size_t class_count = 0;  // n; indices run over 0..n
  std::vector<std::size_t> relation;

  std::size_t operator()(std::size_t x, std::size_t y) const { return relation[x * point_count + y]; }
};

/// Intersection numbers p^k_ij.
class IntersectionTensor {
 public:
  IntersectionTensor() = default;
  explicit IntersectionTensor(std::size_t class_count);

  std::size_t class_count() const { return classes_; }
  long operator()(std::size_t i, std::size_t j, std::size_t k) const;
  long& at(std::size_t i, std::size_t j, std::size_t k);

  friend bool operator==(const IntersectionTensor&, const IntersectionTensor&) = default;

 private:
  std::size_t classes_ = 0;  // n + 1 relations
  std::vector<long> p_;
};

struct SchemeViolation {
  std::string axiom;  // "i", "ii", "iii" or "iv"
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t x = 0;
  std::size_t y = 0;
  std::string detail;
};

struct SchemeVerification {
  bool valid = false;
  std::optional<IntersectionTensor> tensor;
  std::optional<SchemeViolation> violation;
};

/// Exhaustive check of the symmetric association-scheme axioms. For axiom iv
/// the z-counts (A_i A_j)(x, y) must be constant over each class; the first
/// violating (i, j, x, y) is reported. Throws ParameterError on a malformed table.
SchemeVerification verify_scheme(const RelationTable& rel);

/// Indicator matrix A_i.
Eigen::MatrixXi relation_matrix(const RelationTable& rel, std::size_t i);

class AssociationScheme {
 public:
  /// Empty when the table is not a scheme.
  static std::optional<AssociationScheme> from_relation(RelationTable rel);

  std::size_t point_count() const { return rel_.point_count; }
  std::size_t class_count() const { return rel_.class_count; }
  const RelationTable& relation() const { return rel_; }
  const IntersectionTensor& intersection_numbers() const { return p_; }
  /// p^0_ii, the degree of colour class i.
  long valency(std::size_t i) const { return p_(i, i, 0); }

 private:
  AssociationScheme(RelationTable rel, IntersectionTensor p) : rel_(std::move(rel)), p_(std::move(p)) {}

  RelationTable rel_;
  IntersectionTensor p_;
};

/// relation(x, y) = hop distance. Throws ConnectivityError or ParameterError (multigraph).
RelationTable distance_relation(const Graph& g);

/// The distance partition as a scheme, when it is one (distance-regular graphs).
std::optional<AssociationScheme> scheme_from_distance_partition(const Graph& g);

/// The graph of relation i (1 <= i <= n). Throws ParameterError.
Graph colour_class(const AssociationScheme& s, std::size_t i);

struct ColourClassReport {
  std::size_t index = 0;
  std::size_t degree = 0;
  bool connected = false;
  std::size_t components = 0;
  bool equiarboreal = false;  // per component when disconnected
  std::optional<Rational> omega;
  bool omega_matches_formula = false;  // (n-1)/m on each component
  std::optional<std::size_t> lambda;   // connected classes only
  bool passed = false;
};

struct GodsilReport {
  std::vector<ColourClassReport> classes;
  bool passed() const;
};

/// Every colour class is equiarboreal, and every connected one has
/// edge connectivity equal to its degree.
GodsilReport verify_godsil_theorems(const AssociationScheme& s);

/// Text form: "pointCount classCount" then the upper triangle (x < y) row by row.
RelationTable parse_relation_table(std::string_view text);
std::string to_text(const RelationTable& rel);

nlohmann::json to_json(const SchemeVerification& v);
nlohmann::json to_json(const IntersectionTensor& p);
nlohmann::json to_json(const GodsilReport& r);

}  // namespace equiarbor
