#pragma once

// Batch-output tables (CSV/JSON) and the JSON function-file format consumed
// by the CLI:
//
//   {"system": "trigonometric",
//    "representation": {"type": "trig-poly", "coeffs": [[re, im], ...]}}
//   {"system": "trigonometric",
//    "representation": {"type": "samples", "values": [...]}}
//   {"system": "walsh-paley",
//    "representation": {"type": "dyadic-step", "values": [...]}}
//
// Scalars may be JSON integers or strings ("3", "-19/720", "0.5"). In exact
// mode non-integer JSON numbers are rejected: a binary double does not say
// which decimal was meant, so exact inputs must be written as strings.

#include "summab/fourier.hpp"
#include "summab/scalar.hpp"

#include <json.hpp>

#include <fstream>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace summab {

// All cells preformatted as strings; one optional key/value note block.
// Writers are byte-deterministic for identical content.
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::pair<std::string, std::string>> notes;

    void add_row(std::vector<std::string> row) { rows.push_back(std::move(row)); }
    void add_note(std::string key, std::string value)
    {
        notes.emplace_back(std::move(key), std::move(value));
    }

    void write_csv(std::ostream& out) const;
    void write_json(std::ostream& out) const;
    void write(std::ostream& out, const std::string& format) const;
};

template <ScalarMode S>
S scalar_from_json(const nlohmann::json& v)
{
    if (v.is_string())
        return parse_scalar<S>(v.get<std::string>());
    if (v.is_number_integer())
        return ratio<S>(v.get<long>());
    if (v.is_number_float()) {
        if constexpr (is_exact_v<S>)
            throw precondition_error(
                "exact mode: write non-integer values as strings like \"1/2\" or \"0.5\"");
        else
            return v.get<double>();
    }
    throw precondition_error("expected a number or a numeric string, got: " + v.dump());
}

template <ScalarMode S>
std::vector<S> scalar_array_from_json(const nlohmann::json& arr)
{
    if (!arr.is_array())
        throw precondition_error("expected a JSON array of values");
    std::vector<S> out;
    out.reserve(arr.size());
    for (const auto& v : arr)
        out.push_back(scalar_from_json<S>(v));
    return out;
}

template <ScalarMode S>
FourierFunction<S> function_from_json(const nlohmann::json& j)
{
    if (!j.is_object() || !j.contains("representation"))
        throw precondition_error("function file: need an object with a 'representation' field");
    const nlohmann::json& rep = j.at("representation");
    if (!rep.is_object() || !rep.contains("type") || !rep.at("type").is_string())
        throw precondition_error("function file: representation needs a string 'type'");
    const std::string type = rep.at("type").get<std::string>();

    std::string system = type == "dyadic-step" ? "walsh-paley" : "trigonometric";
    if (j.contains("system")) {
        if (!j.at("system").is_string())
            throw precondition_error("function file: 'system' must be a string");
        system = j.at("system").get<std::string>();
    }

    if (type == "trig-poly") {
        if (system != "trigonometric")
            throw precondition_error("function file: trig-poly requires system 'trigonometric'");
        if (!rep.contains("coeffs") || !rep.at("coeffs").is_array())
            throw precondition_error("function file: trig-poly needs a 'coeffs' array");
        std::vector<TrigCoeff<S>> coeffs;
        for (const auto& pair : rep.at("coeffs")) {
            if (!pair.is_array() || pair.size() != 2)
                throw precondition_error("function file: each coefficient is a [re, im] pair");
            coeffs.push_back({scalar_from_json<S>(pair[0]), scalar_from_json<S>(pair[1])});
        }
        return FourierFunction<S>::trig_poly(coeffs);
    }
    if (type == "samples") {
        if (system != "trigonometric")
            throw precondition_error("function file: samples requires system 'trigonometric'");
        if (!rep.contains("values") || !rep.at("values").is_array())
            throw precondition_error("function file: samples needs a 'values' array");
        return FourierFunction<S>::samples(scalar_array_from_json<S>(rep.at("values")));
    }
    if (type == "dyadic-step") {
        if (system != "walsh-paley")
            throw precondition_error("function file: dyadic-step requires system 'walsh-paley'");
        if (!rep.contains("values") || !rep.at("values").is_array())
            throw precondition_error("function file: dyadic-step needs a 'values' array");
        return FourierFunction<S>::dyadic_step(scalar_array_from_json<S>(rep.at("values")));
    }
    throw precondition_error("function file: unknown representation type '" + type +
                             "' (expected trig-poly, samples, or dyadic-step)");
}

template <ScalarMode S>
FourierFunction<S> load_function_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw precondition_error("cannot open function file: " + path);
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw precondition_error("function file " + path + ": " + e.what());
    }
    return function_from_json<S>(j);
}

template <ScalarMode S>
std::vector<S> load_scalar_array_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw precondition_error("cannot open sequence file: " + path);
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw precondition_error("sequence file " + path + ": " + e.what());
    }
    return scalar_array_from_json<S>(j);
}

} // namespace summab
