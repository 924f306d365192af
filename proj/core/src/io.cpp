#include "szego/io.hpp"

#include <json.hpp>
#include <vector>

#include "szego/errors.hpp"

namespace szego {
namespace {

using nlohmann::json;

json pair(Complex c) { return json::array({c.real(), c.imag()}); }

Complex parse_pair(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw FormatError("expected a complex value as [re, im]");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

json parse(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw FormatError(std::string("invalid JSON: ") + e.what());
    }
}

}  // namespace

std::string to_json_text(const HardyFunction& f) {
    json coeffs = json::array();
    for (Complex c : f.coeffs()) coeffs.push_back(pair(c));
    return json{{"coeffs", coeffs}}.dump();
}

std::string to_json_text(const MixedCoefficients& x) {
    json blocks = json::array();
    for (std::size_t k = 1; k <= x.rings(); ++k) {
        json block = json::array();
        for (Complex c : x.block(k)) block.push_back(pair(c));
        blocks.push_back(std::move(block));
    }
    return json{{"K", x.rings()}, {"blocks", blocks}}.dump();
}

HardyFunction hardy_from_json_text(std::string_view text) {
    const json doc = parse(text);
    if (!doc.is_object() || !doc.contains("coeffs") || !doc["coeffs"].is_array()) {
        throw FormatError("HardyFunction JSON needs an array field \"coeffs\"");
    }
    std::vector<Complex> c;
    c.reserve(doc["coeffs"].size());
    for (const auto& entry : doc["coeffs"]) c.push_back(parse_pair(entry));
    try {
        return HardyFunction(std::move(c));
    } catch (const DomainError& e) {
        throw FormatError(e.what());
    }
}

MixedCoefficients mixed_from_json_text(std::string_view text) {
    const json doc = parse(text);
    if (!doc.is_object() || !doc.contains("K") || !doc.contains("blocks") || !doc["blocks"].is_array()) {
        throw FormatError("MixedCoefficients JSON needs fields \"K\" and \"blocks\"");
    }
    if (!doc["K"].is_number_unsigned() || doc["K"].get<std::size_t>() < 1) {
        throw FormatError("MixedCoefficients: K must be a positive integer");
    }
    const auto rings = doc["K"].get<std::size_t>();
    const json& blocks = doc["blocks"];
    if (blocks.size() != rings) throw FormatError("MixedCoefficients: expected K blocks");
    MixedCoefficients x(rings);
    for (std::size_t k = 1; k <= rings; ++k) {
        const json& block = blocks[k - 1];
        if (!block.is_array() || block.size() != k) {
            throw FormatError("MixedCoefficients: block " + std::to_string(k) + " must hold " +
                              std::to_string(k) + " entries");
        }
        for (std::size_t j = 0; j < k; ++j) x(k, j) = parse_pair(block[j]);
    }
    return x;
}

}  // namespace szego
