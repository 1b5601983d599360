#include "serialize.hpp"

#include <sstream>

#include "twisted_h1/error.hpp"

namespace twisted_h1::cli {

Json rational_vector(const RatVec& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.to_string());
  return out;
}

Json int_matrix(const IntMatrix& m) {
  Json out = Json::array();
  for (const auto& row : m.to_rows()) out.push_back(row);
  return out;
}

RatVec parse_rational_list(const std::string& text) {
  RatVec out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(Rational::parse(item));
  if (out.empty()) fail(ErrorKind::invalid_input, "expected a comma-separated list of rationals, got '" + text + "'");
  return out;
}

Json datum_to_json(const RootDatum& d) {
  Json out;
  out["type"] = std::string(1, to_char(d.type().family));
  out["rank"] = d.rank();
  out["isogeny"] = std::string(to_string(d.isogeny()));
  out["cartan"] = int_matrix(d.cartan());
  out["basis"] = d.basis_labels();
  out["simple_coroots"] = d.simple_coroots();
  out["simple_roots"] = d.simple_roots();
  out["positive_roots"] = d.root_system().positive_count();
  return out;
}

Json folded_to_json(const FoldedDatum& fd) {
  Json out;
  out["tau_order"] = fd.tau_order;
  out["fixed_type"] = fd.fixed_type.to_string();
  out["orbits"] = Json::array();
  for (const auto& o : fd.orbits) {
    std::vector<int> one_based;
    for (int i : o) one_based.push_back(i + 1);
    out["orbits"].push_back(one_based);
  }
  out["invariant_basis"] = fd.invariant_basis;
  out["folded_simple_roots"] = fd.simple_roots;
  out["folded_simple_coroots"] = fd.simple_coroots;
  out["folded_cartan"] = int_matrix(fd.cartan());
  out["theta0"] = fd.theta0;
  out["theta0_check"] = rational_vector(fd.theta0_check);
  out["translation_lattice"] = fd.translation_lattice;
  out["kac_labels"] = fd.kac_labels;
  out["affine_symmetries"] = fd.affine_symmetries;
  return out;
}

Json class_to_json(const CohomologyClass& c, const FoldedDatum& fd, std::size_t index) {
  Json out;
  out["index"] = index;
  out["m"] = c.m;
  out["lambda"] = c.lambda;
  out["lambda_ambient"] = c.lambda_ambient;
  out["coweight"] = rational_vector(c.coweight());
  out["coweight_ambient"] = rational_vector(to_ambient(fd, c.coweight()));
  if (c.orbit_size > 0) out["orbit_size"] = c.orbit_size;
  if (c.alcove_point) out["alcove_point"] = rational_vector(*c.alcove_point);
  if (c.kac) out["kac"] = *c.kac;
  return out;
}

Json descriptor_to_json(const AutomorphismDescriptor& d) {
  Json out;
  out["type"] = d.type.to_string();
  out["isogeny"] = std::string(to_string(d.isogeny));
  out["tau_order"] = d.tau_order;
  out["m"] = d.m;
  out["lambda"] = d.lambda;
  out["lambda_ambient"] = d.lambda_ambient;
  if (d.kac) out["kac"] = *d.kac;
  out["sigma"] = d.sigma();
  return out;
}

std::string join(const IntVec& v) { return format_vector(v); }
std::string join(const RatVec& v) { return format_vector(v); }

}  // namespace twisted_h1::cli
