#include "qsg/json_io.hpp"

#include <limits>
#include <sstream>

namespace qsg {

namespace {

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw std::invalid_argument("expected an integer or a \"p/q\" string");
}

Json rational_to_json(const Rational& r) {
  if (boost::multiprecision::denominator(r) == 1 &&
      boost::multiprecision::numerator(r) >= std::numeric_limits<int>::min() &&
      boost::multiprecision::numerator(r) <= std::numeric_limits<int>::max())
    return static_cast<int>(boost::multiprecision::numerator(r).convert_to<long long>());
  return format_rational(r);
}

}  // namespace

Json scalar_to_json(const Cyclo& c) {
  if (c.is_rational()) return rational_to_json(c.rational_part());
  Json coeffs = Json::array();
  for (const auto& x : c.coeffs()) coeffs.push_back(rational_to_json(x));
  return Json{{"order", c.order()}, {"coeffs", coeffs}};
}

Cyclo scalar_from_json(const Json& j) {
  if (j.is_object()) {
    const unsigned order = j.at("order").get<unsigned>();
    std::vector<Rational> raw;
    for (const auto& x : j.at("coeffs")) raw.push_back(rational_from_json(x));
    return Cyclo::reduce(order, std::move(raw));
  }
  return Cyclo(rational_from_json(j));
}

Json matrix_to_json(const ExactMat& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(scalar_to_json(m.at(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

ExactMat matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix must be a non-empty array of rows");
  ExactMat m(static_cast<int>(j.size()), static_cast<int>(j[0].size()));
  for (int r = 0; r < m.rows(); ++r) {
    if (static_cast<int>(j[r].size()) != m.cols()) throw std::invalid_argument("ragged matrix rows");
    for (int c = 0; c < m.cols(); ++c) m.at(r, c) = scalar_from_json(j[r][c]);
  }
  return m;
}

FiniteGroupData builtin_group(const std::string& name) {
  if (name == "s3") return symmetric3();
  if (name == "d4") return dihedral4();
  if (name.rfind("z2^", 0) == 0) return elementary_abelian2(std::stoi(name.substr(3)));
  if (name.rfind('z', 0) == 0) return cyclic_group(std::stoi(name.substr(1)));
  throw std::invalid_argument("unknown builtin group: " + name);
}

std::shared_ptr<StructuredAlgebra> algebra_from_json(const Json& j) {
  if (j.contains("pointwise")) {
    std::vector<Rational> weights;
    for (const auto& w : j.at("pointwise")) weights.push_back(rational_from_json(w));
    return std::make_shared<StructuredAlgebra>(pointwise_algebra(weights));
  }
  if (j.contains("group_algebra"))
    return std::make_shared<StructuredAlgebra>(group_algebra(builtin_group(j.at("group_algebra"))));
  if (j.contains("matrix_algebra")) {
    const auto& spec = j.at("matrix_algebra");
    std::vector<Rational> diag;
    for (const auto& w : spec.at("state")) diag.push_back(rational_from_json(w));
    return std::make_shared<StructuredAlgebra>(matrix_algebra(spec.at("k").get<int>(), diag));
  }
  auto a = std::make_shared<StructuredAlgebra>();
  a->dim = static_cast<int>(j.at("basis").size());
  for (const auto& b : j.at("basis")) a->basis_labels.push_back(b.get<std::string>());
  a->mult.assign(a->dim, std::vector<CVec>(a->dim, CVec(a->dim)));
  for (const auto& t : j.at("structure_constants")) {
    if (!t.is_array() || t.size() != 4) throw std::invalid_argument("structure constant entries are [i,j,k,value]");
    a->mult[t[0].get<int>()][t[1].get<int>()][t[2].get<int>()] = scalar_from_json(t[3]);
  }
  a->involution = ExactMat(a->dim, a->dim);
  for (const auto& t : j.at("involution")) {
    if (!t.is_array() || t.size() != 3) throw std::invalid_argument("involution entries are [i,k,value]");
    a->involution.at(t[0].get<int>(), t[1].get<int>()) = scalar_from_json(t[2]);
  }
  for (const auto& x : j.at("unit")) a->unit.push_back(scalar_from_json(x));
  for (const auto& x : j.at("state")) a->state.push_back(scalar_from_json(x));
  if (static_cast<int>(a->unit.size()) != a->dim || static_cast<int>(a->state.size()) != a->dim)
    throw std::invalid_argument("unit/state length must equal the basis size");
  a->validate();
  return a;
}

Json algebra_to_json(const StructuredAlgebra& a) {
  Json j;
  j["basis"] = a.basis_labels;
  Json sc = Json::array();
  for (int i = 0; i < a.dim; ++i)
    for (int k = 0; k < a.dim; ++k)
      for (int l = 0; l < a.dim; ++l)
        if (!a.mult[i][k][l].is_zero()) sc.push_back(Json::array({i, k, l, scalar_to_json(a.mult[i][k][l])}));
  j["structure_constants"] = std::move(sc);
  Json inv = Json::array();
  for (int i = 0; i < a.dim; ++i)
    for (int k = 0; k < a.dim; ++k)
      if (!a.involution.at(i, k).is_zero()) inv.push_back(Json::array({i, k, scalar_to_json(a.involution.at(i, k))}));
  j["involution"] = std::move(inv);
  Json unit = Json::array(), state = Json::array();
  for (const auto& x : a.unit) unit.push_back(scalar_to_json(x));
  for (const auto& x : a.state) state.push_back(scalar_to_json(x));
  j["unit"] = std::move(unit);
  j["state"] = std::move(state);
  return j;
}

LoadedFiltration filtration_from_json(const Json& j) {
  LoadedFiltration out;
  out.algebra = algebra_from_json(j.at("algebra"));
  out.filtration.algebra = out.algebra.get();
  for (const auto& part : j.at("parts")) {
    std::vector<CVec> vectors;
    for (const auto& vec : part) {
      CVec v;
      for (const auto& x : vec) v.push_back(scalar_from_json(x));
      if (static_cast<int>(v.size()) != out.algebra->dim)
        throw std::invalid_argument("part vector length must equal the algebra dimension");
      vectors.push_back(std::move(v));
    }
    out.filtration.parts.push_back(std::move(vectors));
  }
  if (j.contains("labels"))
    for (const auto& l : j.at("labels")) out.filtration.labels.push_back(l.get<std::string>());
  while (out.filtration.labels.size() < out.filtration.parts.size())
    out.filtration.labels.push_back("V" + std::to_string(out.filtration.labels.size()));
  return out;
}

Json colored_matrix_to_json(const ColoredMatrix& m) {
  Json j;
  j["size"] = m.size();
  j["entries"] = matrix_to_json(m.entries);
  Json palette = Json::array();
  for (const auto& v : m.palette) palette.push_back(scalar_to_json(v));
  j["palette"] = std::move(palette);
  return j;
}

ColoredMatrix colored_matrix_from_json(const Json& j) {
  return ColoredMatrix::from(matrix_from_json(j.is_object() ? j.at("entries") : j));
}

Json perm_group_to_json(const PermGroup& g) {
  Json j;
  j["degree"] = g.degree;
  j["order"] = g.order.str();
  j["generators"] = g.generators;
  return j;
}

Json operator_matrix_to_json(const OperatorMatrix& u) {
  Json j;
  j["n"] = u.dim;
  j["m"] = u.op_dim;
  j["labels"] = u.signed_labels ? "signed" : "plain";
  j["tolerance"] = u.tol;
  Json entries = Json::array();
  for (int r = 0; r < u.dim; ++r) {
    Json row = Json::array();
    for (int c = 0; c < u.dim; ++c) {
      Json block = Json::array();
      for (int a = 0; a < u.op_dim; ++a) {
        Json brow = Json::array();
        for (int b = 0; b < u.op_dim; ++b)
          brow.push_back(Json::array({u.at(r, c)(a, b).real(), u.at(r, c)(a, b).imag()}));
        block.push_back(std::move(brow));
      }
      row.push_back(std::move(block));
    }
    entries.push_back(std::move(row));
  }
  j["entries"] = std::move(entries);
  return j;
}

OperatorMatrix operator_matrix_from_json(const Json& j) {
  const int d = j.at("n").get<int>();
  const int m = j.at("m").get<int>();
  const bool signed_labels = j.value("labels", d % 2 == 0 ? "signed" : "plain") == std::string("signed");
  OperatorMatrix u = OperatorMatrix::zero(d, m, signed_labels, j.value("tolerance", 1e-9));
  const auto& entries = j.at("entries");
  if (static_cast<int>(entries.size()) != d) throw std::invalid_argument("entry grid must be n x n");
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) {
      const auto& block = entries[r][c];
      for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
          u.at(r, c)(a, b) = std::complex<double>(block[a][b][0].get<double>(), block[a][b][1].get<double>());
    }
  return u;
}

Json relation_report_to_json(const RelationReport& r) {
  Json flags = Json::array();
  for (const auto& f : r.flags)
    flags.push_back(Json{{"name", f.name}, {"ok", f.ok}, {"violation", f.violation}});
  return Json{{"flags", flags}, {"all_ok", r.all_ok()}, {"max_violation", r.max_violation()}};
}

std::string render_exact_matrix(const ExactMat& m) {
  std::vector<std::vector<std::string>> cells(m.rows(), std::vector<std::string>(m.cols()));
  std::vector<size_t> width(m.cols(), 0);
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) {
      cells[r][c] = m.at(r, c).str();
      width[c] = std::max(width[c], cells[r][c].size());
    }
  std::ostringstream out;
  for (int r = 0; r < m.rows(); ++r) {
    out << "[";
    for (int c = 0; c < m.cols(); ++c) {
      if (c) out << "  ";
      out << std::string(width[c] - cells[r][c].size(), ' ') << cells[r][c];
    }
    out << "]\n";
  }
  return out.str();
}

std::string render_mask(const std::vector<std::vector<int>>& mask) {
  std::ostringstream out;
  for (const auto& row : mask) {
    out << "[";
    for (size_t c = 0; c < row.size(); ++c) out << (c ? " " : "") << row[c];
    out << "]\n";
  }
  return out.str();
}

}  // namespace qsg
