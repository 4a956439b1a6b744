#include "qlattice/io.hpp"

#include <bit>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace qlat::io {

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

std::string hex_bits(double x) {
    char buf[20];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(std::bit_cast<std::uint64_t>(x)));
    return buf;
}

std::string content_hash(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[20];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

nlohmann::json matrix_to_json(const Matrix& m, const std::string& label) {
    nlohmann::json j;
    j["dim"] = m.rows();
    if (!label.empty()) j["label"] = label;
    nlohmann::json rows = nlohmann::json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (Eigen::Index k = 0; k < m.cols(); ++k)
            row.push_back({m(i, k).real(), m(i, k).imag()});
        rows.push_back(row);
    }
    j["entries"] = rows;
    return j;
}

MatrixFile matrix_from_json(const nlohmann::json& j) {
    try {
        MatrixFile f;
        f.dim = j.at("dim").get<int>();
        if (f.dim < 1) throw ParseError("matrix file: dim must be positive");
        f.label = j.value("label", std::string{});
        const auto& rows = j.at("entries");
        if (!rows.is_array() || static_cast<int>(rows.size()) != f.dim)
            throw ParseError("matrix file: entries row count does not match dim");
        f.entries = Matrix(f.dim, f.dim);
        for (int i = 0; i < f.dim; ++i) {
            const auto& row = rows.at(static_cast<std::size_t>(i));
            if (!row.is_array() || static_cast<int>(row.size()) != f.dim)
                throw ParseError("matrix file: entries column count does not match dim");
            for (int k = 0; k < f.dim; ++k) {
                const auto& cell = row.at(static_cast<std::size_t>(k));
                if (!cell.is_array() || cell.size() != 2)
                    throw ParseError("matrix file: each entry must be a [re, im] pair");
                f.entries(i, k) = Complex(cell.at(0).get<double>(), cell.at(1).get<double>());
            }
        }
        if (!numeric::all_finite(f.entries))
            throw ParseError("matrix file: non-finite entry");
        return f;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("matrix file: ") + e.what());
    }
}

void write_matrix_file(const std::string& path, const Matrix& m, const std::string& label) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open for writing: " + path);
    out << matrix_to_json(m, label).dump(2) << "\n";
}

MatrixFile read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed JSON in ") + path + ": " + e.what());
    }
    return matrix_from_json(j);
}

nlohmann::json tolerance_to_json(const ToleranceConfig& tol) {
    return {{"eps_structural", tol.eps_structural},
            {"eps_exist", tol.eps_exist},
            {"eps_rank", tol.eps_rank}};
}

namespace {
nlohmann::json number_with_bits(double x) {
    return {{"value", x}, {"repr", format_double(x)}, {"bits", hex_bits(x)}};
}
}  // namespace

nlohmann::json transition_to_json(const TransitionResult& res) {
    nlohmann::json j;
    j["exists"] = res.exists;
    if (res.value) j["value"] = number_with_bits(*res.value);
    j["candidate"] = number_with_bits(res.candidate);
    j["residual_algebraic"] = number_with_bits(res.residual_algebraic);
    j["residual_compression"] = number_with_bits(res.residual_compression);
    j["compression_spectrum"] = res.compression_spectrum;
    j["spread"] = number_with_bits(res.spread);
    j["numerically_ambiguous"] = res.numerically_ambiguous;
    j["classification"] = std::string(to_string(res.classification));
    return j;
}

nlohmann::json symmetry_to_json(const ClassificationReport& report) {
    return {{"forward", transition_to_json(report.forward)},
            {"backward", transition_to_json(report.backward)},
            {"symmetric_ok", report.symmetric_ok}};
}

nlohmann::json certificate_to_json(const ExclusionCertificate& cert) {
    nlohmann::json j;
    j["dim"] = cert.dim;
    nlohmann::json basis = nlohmann::json::array();
    for (std::size_t i = 0; i < cert.basis_projectors.size(); ++i)
        basis.push_back(matrix_to_json(cert.basis_projectors[i].matrix(),
                                       "p_" + std::to_string(i)));
    j["basis_projectors"] = basis;
    nlohmann::json partners = nlohmann::json::array();
    for (std::size_t i = 0; i < cert.partners.size(); ++i)
        partners.push_back(matrix_to_json(cert.partners[i].matrix(),
                                          "q_" + std::to_string(i)));
    j["partners"] = partners;
    nlohmann::json values = nlohmann::json::array();
    for (double v : cert.partner_values) values.push_back(number_with_bits(v));
    j["partner_values"] = values;
    nlohmann::json steps = nlohmann::json::array();
    for (const auto& step : cert.derivation)
        steps.push_back({{"claim", step.claim},
                         {"verified", step.verified},
                         {"witness_value", number_with_bits(step.witness_value)}});
    j["derivation"] = steps;
    j["contradiction"] = cert.contradiction;
    j["verified"] = cert.verified;
    return j;
}

}  // namespace qlat::io
