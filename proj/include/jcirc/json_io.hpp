#ifndef JCIRC_JSON_IO_HPP
#define JCIRC_JSON_IO_HPP

#include <json.hpp>

#include <vector>

#include "jcirc/circulant.hpp"
#include "jcirc/dense_matrix.hpp"
#include "jcirc/rational.hpp"
#include "jcirc/verify.hpp"

namespace jcirc {

// Values routinely exceed 64-bit (and 53-bit JSON-number) ranges, so
// integers always travel as decimal strings.

nlohmann::json to_json(const Integer& v);                 // "123..."
nlohmann::json to_json(const Rational& v);                // {"num": "...", "den": "..."}
nlohmann::json to_json(const DenseMatrix& m);             // nested arrays of Rational
nlohmann::json to_json(const CirculantMatrix& c);         // {"n": ..., "first_row": [...]}
nlohmann::json to_json(const EigenSystem& e);             // lambdas as {"re", "im"} pairs

/// Flat array of claim records; each record carries its kind and order.
nlohmann::json to_json(const std::vector<VerificationReport>& reports);

Integer integer_from_json(const nlohmann::json& j);
Rational rational_from_json(const nlohmann::json& j);
DenseMatrix dense_from_json(const nlohmann::json& j);
CirculantMatrix circulant_from_json(const nlohmann::json& j);

}  // namespace jcirc

#endif
