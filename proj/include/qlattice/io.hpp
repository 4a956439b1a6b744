#pragma once

#include <json.hpp>
#include <string>

#include "qlattice/states.hpp"

namespace qlat {

/// On-disk matrix: dim, optional label, entries as explicit [re, im] pairs.
/// dim is redundant with the entry array shape and acts as a truncation
/// checksum.
struct MatrixFile {
    int dim = 0;
    std::string label;
    Matrix entries;
};

namespace io {

/// 12 significant digits, locale-independent.
std::string format_double(double x);

/// Exact bit pattern of the double, 16 hex digits.
std::string hex_bits(double x);

/// FNV-1a over the raw bytes, as a hex string.
std::string content_hash(const std::string& bytes);

nlohmann::json matrix_to_json(const Matrix& m, const std::string& label = {});
MatrixFile matrix_from_json(const nlohmann::json& j);

void write_matrix_file(const std::string& path, const Matrix& m, const std::string& label = {});
MatrixFile read_matrix_file(const std::string& path);

nlohmann::json tolerance_to_json(const ToleranceConfig& tol);
nlohmann::json transition_to_json(const TransitionResult& res);
nlohmann::json symmetry_to_json(const ClassificationReport& report);
nlohmann::json certificate_to_json(const ExclusionCertificate& cert);

}  // namespace io
}  // namespace qlat
