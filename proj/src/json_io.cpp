#include "skewschur/json_io.hpp"

#include <fstream>
#include <limits>

namespace skewschur {

namespace {

std::vector<int> intArray(const nlohmann::json& j, const std::string& what) {
    if (!j.is_array()) throw BadInput(what + " must be an array");
    std::vector<int> out;
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw BadInput(what + " must contain integers");
        out.push_back(v.get<int>());
    }
    return out;
}

nlohmann::json coeffToJson(const Int& c) {
    static const Int lo = std::numeric_limits<std::int64_t>::min();
    static const Int hi = std::numeric_limits<std::int64_t>::max();
    if (c >= lo && c <= hi) return c.convert_to<std::int64_t>();
    return c.str();
}

}  // namespace

ShapePtr shapeFromJson(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("lambda"))
        throw BadInput("shape must be an object with a \"lambda\" array");
    std::vector<int> lambda = intArray(j.at("lambda"), "lambda");
    std::vector<int> mu;
    if (j.contains("mu")) mu = intArray(j.at("mu"), "mu");
    try {
        return makeShape(std::move(lambda), std::move(mu));
    } catch (const std::invalid_argument& e) {
        throw BadInput(e.what());
    }
}

nlohmann::json shapeToJson(const SkewShape& shape) {
    return {{"lambda", shape.lambda().parts()}, {"mu", shape.mu().parts()}};
}

Content contentFromJson(const nlohmann::json& j) {
    Content z = intArray(j, "content");
    for (int v : z)
        if (v < 0) throw BadInput("content entries must be nonnegative");
    return z;
}

Filling fillingFromJson(const nlohmann::json& j, int minAlphabet) {
    if (!j.is_object() || !j.contains("shape") || !j.contains("rows"))
        throw BadInput("filling must be an object with \"shape\" and \"rows\"");
    ShapePtr shape = shapeFromJson(j.at("shape"));
    if (!j.at("rows").is_array() ||
        j.at("rows").size() != static_cast<size_t>(shape->numRows()))
        throw BadInput("rows must list one array per shape row");
    std::vector<int> entries;
    entries.reserve(static_cast<size_t>(shape->size()));
    for (int r = 1; r <= shape->numRows(); ++r) {
        std::vector<int> row =
            intArray(j.at("rows")[static_cast<size_t>(r - 1)], "row");
        int expected = shape->lambda().part(r) - shape->mu().part(r);
        if (static_cast<int>(row.size()) != expected)
            throw BadInput("row length does not match the shape");
        entries.insert(entries.end(), row.begin(), row.end());
    }
    int m = minAlphabet;
    for (int e : entries) {
        if (e < 1) throw BadInput("filling entries must be positive");
        m = std::max(m, e);
    }
    return Filling(std::move(shape), std::move(entries), m);
}

nlohmann::json rowsToJson(const Filling& f) {
    nlohmann::json rows = nlohmann::json::array();
    const SkewShape& sh = f.shape();
    size_t pos = 0;
    for (int r = 1; r <= sh.numRows(); ++r) {
        size_t len = static_cast<size_t>(sh.lambda().part(r) - sh.mu().part(r));
        rows.push_back(std::vector<int>(
            f.entries().begin() + static_cast<long>(pos),
            f.entries().begin() + static_cast<long>(pos + len)));
        pos += len;
    }
    return rows;
}

nlohmann::json fillingToJson(const Filling& f) {
    return {{"shape", shapeToJson(f.shape())}, {"rows", rowsToJson(f)}};
}

nlohmann::json expansionToJson(const Expansion& e) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& [i, c] : e.coeffs) {
        nlohmann::json entry = {{"index", i + 1}, {"coeff", coeffToJson(c)}};
        if (e.context) entry["tableau"] = rowsToJson(e.context->tableau(i));
        coeffs.push_back(std::move(entry));
    }
    return {{"basis", e.basis == BasisKind::Ssyt ? "ssyt" : "d"},
            {"coeffs", std::move(coeffs)}};
}

nlohmann::json parseJsonFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw BadInput("cannot open " + path);
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw BadInput(std::string("invalid JSON in ") + path + ": " + e.what());
    }
}

nlohmann::json parseJsonText(const std::string& text) {
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw BadInput(std::string("invalid JSON: ") + e.what());
    }
}

}  // namespace skewschur
