#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "projnorm/matrix.hpp"
#include "projnorm/projections.hpp"

namespace projnorm::projections {

/// Malformed pair file: wrong schema, wrong lengths, or non-finite entries.
class PairFormatError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Flat row-major list of [re, im] pairs.
inline nlohmann::json entries_to_json(const linalg::ComplexMatrix& m) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& z : m.entries()) {
        out.push_back({z.real(), z.imag()});
    }
    return out;
}

/// {"rows", "cols", "entries"} form used for rectangular blocks in reports.
inline nlohmann::json matrix_to_json(const linalg::ComplexMatrix& m) {
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries_to_json(m)}};
}

/// {"dim": n, "f": [[re,im],...], "g": [[re,im],...]}
inline nlohmann::json pair_to_json(const ProjectionPair& pair) {
    return {{"dim", pair.dim()}, {"f", entries_to_json(pair.f())}, {"g", entries_to_json(pair.g())}};
}

namespace detail {

inline linalg::ComplexMatrix entries_from_json(const nlohmann::json& j, std::size_t dim,
                                               const char* name) {
    if (!j.is_array() || j.size() != dim * dim) {
        throw PairFormatError(std::string("\"") + name + "\" must be an array of " +
                              std::to_string(dim * dim) + " [re, im] pairs");
    }
    std::vector<linalg::Complex> entries;
    entries.reserve(dim * dim);
    for (const auto& z : j) {
        if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number()) {
            throw PairFormatError(std::string("\"") + name + "\" entries must be [re, im] number pairs");
        }
        const double re = z[0].get<double>();
        const double im = z[1].get<double>();
        if (!std::isfinite(re) || !std::isfinite(im)) {
            throw PairFormatError(std::string("\"") + name + "\" contains a non-finite entry");
        }
        entries.emplace_back(re, im);
    }
    return linalg::ComplexMatrix(dim, dim, std::move(entries));
}

}  // namespace detail

/// Parse and validate a pair. Schema problems raise PairFormatError; matrices
/// that are not projections within `tol` raise InvalidProjectionError.
inline ProjectionPair pair_from_json(const nlohmann::json& j, double tol = kProjectionTol) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("f") || !j.contains("g")) {
        throw PairFormatError("pair file must be an object with \"dim\", \"f\" and \"g\"");
    }
    if (!j["dim"].is_number_unsigned() || j["dim"].get<std::size_t>() == 0) {
        throw PairFormatError("\"dim\" must be a positive integer");
    }
    const auto dim = j["dim"].get<std::size_t>();
    Provenance prov;
    prov.source = PairSource::file;
    return ProjectionPair::make(detail::entries_from_json(j["f"], dim, "f"),
                                detail::entries_from_json(j["g"], dim, "g"), std::move(prov), tol);
}

}  // namespace projnorm::projections
