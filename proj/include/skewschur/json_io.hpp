#ifndef SKEWSCHUR_JSON_IO_HPP
#define SKEWSCHUR_JSON_IO_HPP

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "skewschur/expansion.hpp"
#include "skewschur/shapes.hpp"

namespace skewschur {

inline constexpr int kSchemaVersion = 1;

/// Malformed or schema-violating input; the CLI maps it to exit code 2.
struct BadInput : std::runtime_error {
    explicit BadInput(const std::string& what) : std::runtime_error(what) {}
};

/// {"lambda":[...], "mu":[...]}; mu may be omitted.
ShapePtr shapeFromJson(const nlohmann::json& j);
nlohmann::json shapeToJson(const SkewShape& shape);

/// [z1,...,zm], all nonnegative.
Content contentFromJson(const nlohmann::json& j);

/// {"shape":{...}, "rows":[[row 1 entries left to right],...]}. The
/// alphabet is the largest entry unless a wider one is requested.
Filling fillingFromJson(const nlohmann::json& j, int minAlphabet = 1);
nlohmann::json fillingToJson(const Filling& f);

/// Row lists only, without the shape envelope.
nlohmann::json rowsToJson(const Filling& f);

/// {"basis":"ssyt"|"d", "coeffs":[{"index":1-based,"tableau":rows,"coeff":n}]}.
nlohmann::json expansionToJson(const Expansion& e);

nlohmann::json parseJsonFile(const std::string& path);
nlohmann::json parseJsonText(const std::string& text);

}  // namespace skewschur

#endif
