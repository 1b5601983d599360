#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "twisted_h1/alcove.hpp"
#include "twisted_h1/cohomology.hpp"
#include "twisted_h1/lattice.hpp"

namespace twisted_h1::cli {

using Json = nlohmann::ordered_json;

/// Rationals are serialized as "p/q" strings (plain "p" when integral).
Json rational_vector(const RatVec& v);
Json int_matrix(const IntMatrix& m);
RatVec parse_rational_list(const std::string& text);

Json datum_to_json(const RootDatum& d);
Json folded_to_json(const FoldedDatum& fd);
Json class_to_json(const CohomologyClass& c, const FoldedDatum& fd, std::size_t index);
Json descriptor_to_json(const AutomorphismDescriptor& d);

/// Comma-joined form used by the text and CSV renderers, e.g. "(0,1/2)".
std::string join(const IntVec& v);
std::string join(const RatVec& v);

}  // namespace twisted_h1::cli
