#include "equiarbor/scheme.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "equiarbor/cuts.hpp"
#include "equiarbor/equiarboreal.hpp"
#include "equiarbor/errors.hpp"

namespace equiarbor {

IntersectionTensor::IntersectionTensor(std::size_t class_count)
    : classes_(class_count + 1), p_(classes_ * classes_ * classes_, 0) {}

long IntersectionTensor::operator()(std::size_t i, std::size_t j, std::size_t k) const {
  if (i >= classes_ || j >= classes_ || k >= classes_) throw ParameterError("intersection index out of range");
  return p_[(i * classes_ + j) * classes_ + k];
}

long& IntersectionTensor::at(std::size_t i, std::size_t j, std::size_t k) {
  if (i >= classes_ || j >= classes_ || k >= classes_) throw ParameterError("intersection index out of range");
  return p_[(i * classes_ + j) * classes_ + k];
}

namespace {

void check_table(const RelationTable& rel) {
  if (rel.relation.size() != rel.point_count * rel.point_count) {
    throw ParameterError("relation table has " + std::to_string(rel.relation.size()) + " entries, expected " +
                         std::to_string(rel.point_count * rel.point_count));
  }
  for (std::size_t r : rel.relation) {
    if (r > rel.class_count) {
      throw ParameterError("class index " + std::to_string(r) + " exceeds class count " +
                           std::to_string(rel.class_count));
    }
  }
}

SchemeVerification fail(std::string axiom, std::size_t i, std::size_t j, std::size_t x, std::size_t y,
                        std::string detail) {
  SchemeVerification v;
  v.violation = SchemeViolation{std::move(axiom), i, j, x, y, std::move(detail)};
  return v;
}

}  // namespace

Eigen::MatrixXi relation_matrix(const RelationTable& rel, std::size_t i) {
  check_table(rel);
  const auto n = static_cast<Eigen::Index>(rel.point_count);
  Eigen::MatrixXi a = Eigen::MatrixXi::Zero(n, n);
  for (Eigen::Index x = 0; x < n; ++x) {
    for (Eigen::Index y = 0; y < n; ++y) {
      if (rel(static_cast<std::size_t>(x), static_cast<std::size_t>(y)) == i) a(x, y) = 1;
    }
  }
  return a;
}

SchemeVerification verify_scheme(const RelationTable& rel) {
  check_table(rel);
  const std::size_t np = rel.point_count;
  const std::size_t nc = rel.class_count;
  for (std::size_t x = 0; x < np; ++x) {
    for (std::size_t y = 0; y < np; ++y) {
      const bool self = x == y;
      if (self != (rel(x, y) == 0)) {
        return fail("i", rel(x, y), 0, x, y,
                    self ? "diagonal pair outside class 0" : "off-diagonal pair in class 0");
      }
    }
  }
  std::vector<std::size_t> class_size(nc + 1, 0);
  for (std::size_t r : rel.relation) ++class_size[r];
  for (std::size_t i = 0; i <= nc; ++i) {
    if (class_size[i] == 0) return fail("ii", i, 0, 0, 0, "class " + std::to_string(i) + " is empty");
  }
  for (std::size_t x = 0; x < np; ++x) {
    for (std::size_t y = x + 1; y < np; ++y) {
      if (rel(x, y) != rel(y, x)) return fail("iii", rel(x, y), rel(y, x), x, y, "relation is not symmetric");
    }
  }

  std::vector<Eigen::MatrixXi> a;
  for (std::size_t i = 0; i <= nc; ++i) a.push_back(relation_matrix(rel, i));
  IntersectionTensor p(nc);
  for (std::size_t i = 0; i <= nc; ++i) {
    for (std::size_t j = 0; j <= nc; ++j) {
      const Eigen::MatrixXi prod = a[i] * a[j];
      std::vector<long> seen(nc + 1, -1);
      for (std::size_t x = 0; x < np; ++x) {
        for (std::size_t y = 0; y < np; ++y) {
          const std::size_t k = rel(x, y);
          const long count = prod(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(y));
          if (seen[k] < 0) {
            seen[k] = count;
          } else if (seen[k] != count) {
            return fail("iv", i, j, x, y,
                        "(A_" + std::to_string(i) + " A_" + std::to_string(j) + ")(" + std::to_string(x) + "," +
                            std::to_string(y) + ") = " + std::to_string(count) + " but another pair of class " +
                            std::to_string(k) + " gives " + std::to_string(seen[k]));
          }
        }
      }
      for (std::size_t k = 0; k <= nc; ++k) p.at(i, j, k) = seen[k];
    }
  }
  SchemeVerification v;
  v.valid = true;
  v.tensor = std::move(p);
  return v;
}

std::optional<AssociationScheme> AssociationScheme::from_relation(RelationTable rel) {
  SchemeVerification v = verify_scheme(rel);
  if (!v.valid) return std::nullopt;
  return AssociationScheme(std::move(rel), std::move(*v.tensor));
}

RelationTable distance_relation(const Graph& g) {
  if (!g.is_simple()) throw ParameterError("distance schemes are built from simple graphs");
  if (!g.is_connected()) throw ConnectivityError("distance partition needs a connected graph");
  const auto d = distance_matrix(g);
  RelationTable rel;
  rel.point_count = g.vertex_count();
  rel.relation.reserve(rel.point_count * rel.point_count);
  for (std::size_t x = 0; x < rel.point_count; ++x) {
    for (std::size_t y = 0; y < rel.point_count; ++y) {
      const auto dist = static_cast<std::size_t>(d[x][y]);
      rel.relation.push_back(dist);
      rel.class_count = std::max(rel.class_count, dist);
    }
  }
  return rel;
}

std::optional<AssociationScheme> scheme_from_distance_partition(const Graph& g) {
  return AssociationScheme::from_relation(distance_relation(g));
}

Graph colour_class(const AssociationScheme& s, std::size_t i) {
  if (i == 0 || i > s.class_count()) {
    throw ParameterError("colour class index must be in 1.." + std::to_string(s.class_count()));
  }
  Graph g(s.point_count());
  const RelationTable& rel = s.relation();
  for (std::size_t x = 0; x < rel.point_count; ++x) {
    for (std::size_t y = x + 1; y < rel.point_count; ++y) {
      if (rel(x, y) == i) g.add_edge(x, y);
    }
  }
  if (g.regularity() != static_cast<std::size_t>(s.valency(i))) {
    throw VerificationError("colour class " + std::to_string(i) + " is not regular of degree p^0_ii");
  }
  return g;
}

bool GodsilReport::passed() const {
  for (const ColourClassReport& c : classes) {
    if (!c.passed) return false;
  }
  return true;
}

GodsilReport verify_godsil_theorems(const AssociationScheme& s) {
  GodsilReport report;
  for (std::size_t i = 1; i <= s.class_count(); ++i) {
    const Graph g = colour_class(s, i);
    ColourClassReport c;
    c.index = i;
    c.degree = g.regularity().value_or(0);
    const auto comps = g.components();
    c.components = comps.size();
    c.connected = comps.size() == 1;
    c.equiarboreal = true;
    c.omega_matches_formula = true;
    std::optional<Rational> common;
    bool uniform = true;
    for (const auto& comp : comps) {
      const Graph h = g.induced(comp);
      const EquiarborealVerdict v = check_equiarboreal(h);
      if (!v.is_equiarboreal) {
        c.equiarboreal = false;
        c.omega_matches_formula = false;
        uniform = false;
        continue;
      }
      const Rational expected(BigInt(h.vertex_count() - 1), BigInt(h.edge_count()));
      if (*v.omega != expected) c.omega_matches_formula = false;
      if (!common) {
        common = v.omega;
      } else if (*common != *v.omega) {
        uniform = false;
      }
    }
    if (uniform) c.omega = common;
    bool lambda_ok = true;
    if (c.connected) {
      c.lambda = edge_connectivity(g);
      lambda_ok = *c.lambda == c.degree;
    }
    c.passed = c.equiarboreal && c.omega_matches_formula && lambda_ok;
    report.classes.push_back(std::move(c));
  }
  return report;
}

RelationTable parse_relation_table(std::string_view text) {
  std::size_t pos = 0;
  auto next = [&](const char* what) -> std::size_t {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos >= text.size()) throw ParseError(std::string("relation table: expected ") + what, pos);
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc() || ptr == text.data() + pos) {
      throw ParseError(std::string("relation table: bad ") + what, pos);
    }
    pos = static_cast<std::size_t>(ptr - text.data());
    return value;
  };
  RelationTable rel;
  rel.point_count = next("point count");
  rel.class_count = next("class count");
  if (rel.point_count > 4096) throw ScaleError("relation table is limited to 4096 points");
  rel.relation.assign(rel.point_count * rel.point_count, 0);
  for (std::size_t x = 0; x < rel.point_count; ++x) {
    for (std::size_t y = x + 1; y < rel.point_count; ++y) {
      const std::size_t at = pos;
      const std::size_t r = next("class index");
      if (r > rel.class_count) throw ParseError("relation table: class index out of range", at);
      rel.relation[x * rel.point_count + y] = r;
      rel.relation[y * rel.point_count + x] = r;
    }
  }
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos != text.size()) throw ParseError("relation table: trailing data", pos);
  return rel;
}

std::string to_text(const RelationTable& rel) {
  std::ostringstream out;
  out << rel.point_count << ' ' << rel.class_count << '\n';
  for (std::size_t x = 0; x < rel.point_count; ++x) {
    bool first = true;
    for (std::size_t y = x + 1; y < rel.point_count; ++y) {
      out << (first ? "" : " ") << rel(x, y);
      first = false;
    }
    if (x + 1 < rel.point_count) out << '\n';
  }
  return out.str();
}

nlohmann::json to_json(const IntersectionTensor& p) {
  // p[k][i][j]
  nlohmann::json out = nlohmann::json::array();
  const std::size_t c = p.class_count();
  for (std::size_t k = 0; k < c; ++k) {
    nlohmann::json layer = nlohmann::json::array();
    for (std::size_t i = 0; i < c; ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (std::size_t j = 0; j < c; ++j) row.push_back(p(i, j, k));
      layer.push_back(row);
    }
    out.push_back(layer);
  }
  return out;
}

nlohmann::json to_json(const SchemeVerification& v) {
  nlohmann::json doc = {{"valid", v.valid}};
  doc["intersectionNumbers"] = v.tensor ? to_json(*v.tensor) : nlohmann::json(nullptr);
  if (v.violation) {
    const auto& w = *v.violation;
    doc["violation"] = {{"axiom", w.axiom}, {"i", w.i}, {"j", w.j}, {"x", w.x}, {"y", w.y}, {"detail", w.detail}};
  } else {
    doc["violation"] = nullptr;
  }
  return doc;
}

nlohmann::json to_json(const GodsilReport& r) {
  nlohmann::json classes = nlohmann::json::array();
  for (const ColourClassReport& c : r.classes) {
    classes.push_back({{"index", c.index},
                       {"degree", c.degree},
                       {"connected", c.connected},
                       {"components", c.components},
                       {"equiarboreal", c.equiarboreal},
                       {"omega", c.omega ? nlohmann::json(to_string(*c.omega)) : nlohmann::json(nullptr)},
                       {"omegaMatchesFormula", c.omega_matches_formula},
                       {"lambda", c.lambda ? nlohmann::json(*c.lambda) : nlohmann::json(nullptr)},
                       {"passed", c.passed}});
  }
  return {{"classes", classes}, {"passed", r.passed()}};
}

}  // namespace equiarbor
