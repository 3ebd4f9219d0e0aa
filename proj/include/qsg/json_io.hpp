#pragma once

#include <json.hpp>
#include <memory>
#include <string>

#include "qsg/abelian.hpp"
#include "qsg/operator_matrix.hpp"
#include "qsg/perm_group.hpp"

namespace qsg {

using Json = nlohmann::json;

// Scalars: rationals serialize as "p/q" strings (or plain integers),
// cyclotomics as {"order": N, "coeffs": [...]}.
Json scalar_to_json(const Cyclo& c);
Cyclo scalar_from_json(const Json& j);

Json matrix_to_json(const ExactMat& m);
ExactMat matrix_from_json(const Json& j);

// Named constructors accepted in "algebra" slots:
//   {"pointwise": ["1/4", ...]}
//   {"group_algebra": "z<n>" | "z2^<k>" | "s3" | "d4"}
//   {"matrix_algebra": {"k": 2, "state": ["1/3","2/3"]}}
// or a full structure-constant object (see algebra_to_json).
std::shared_ptr<StructuredAlgebra> algebra_from_json(const Json& j);
Json algebra_to_json(const StructuredAlgebra& a);

struct LoadedFiltration {
  std::shared_ptr<StructuredAlgebra> algebra;
  OrthogonalFiltration filtration;
};
// {"algebra": <algebra>, "parts": [[[coords]]], "labels": [...]}
LoadedFiltration filtration_from_json(const Json& j);

Json colored_matrix_to_json(const ColoredMatrix& m);
ColoredMatrix colored_matrix_from_json(const Json& j);

Json perm_group_to_json(const PermGroup& g);

// {"n": d, "m": m, "labels": "signed"|"plain", "tolerance": t,
//  "entries": d x d x m x m arrays of [re, im]}
Json operator_matrix_to_json(const OperatorMatrix& u);
OperatorMatrix operator_matrix_from_json(const Json& j);

Json relation_report_to_json(const RelationReport& r);

// Aligned plain-text grid of exact entries, row per line.
std::string render_exact_matrix(const ExactMat& m);
std::string render_mask(const std::vector<std::vector<int>>& mask);

FiniteGroupData builtin_group(const std::string& name);

}  // namespace qsg
