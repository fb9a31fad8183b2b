#pragma once

#include "skewhowe/bases.hpp"
#include "skewhowe/howe.hpp"
#include "skewhowe/web.hpp"

#include <json.hpp>

namespace skewhowe {

using json = nlohmann::json;

// Coefficients outside the 64-bit range are written as decimal strings.
json to_json(const LaurentPoly& p);
json to_json(const Tableau& t);
json to_json(const BoundaryObject& obj);
json to_json(const TensorVector& x);
json to_json(const Slice& s);
json to_json(const Web& w);
json to_json(const TableauVector& x);
json to_json(const GradedMatrix& g);
json to_json(const PeelWord& w);

// Parsers throw Error(InvalidInput) on malformed documents.
LaurentPoly poly_from_json(const json& j);
Tableau tableau_from_json(const json& j);
BoundaryObject object_from_json(int N, const json& j);
TensorVector tensor_from_json(const json& j);
Web web_from_json(const json& j);
TableauVector tableau_vector_from_json(const json& j);

}  // namespace skewhowe
