#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "mmfusion/certificate.hpp"
#include "mmfusion/cover_search.hpp"
#include "mmfusion/fusion.hpp"
#include "mmfusion/minimal_model.hpp"
#include "mmfusion/rational.hpp"

namespace mmfusion::cli {

enum class Format { Text, Json };

struct ModelInfo {
    int p = 2;
    int q = 3;
    Rational c;
    std::size_t sector_count = 0;

    friend bool operator==(const ModelInfo&, const ModelInfo&) = default;
};

ModelInfo model_info(const ModelParams& params);

struct KacPayload {
    std::vector<std::vector<Rational>> grid;  // row m-1, column n-1
    std::vector<Sector> sectors;

    friend bool operator==(const KacPayload&, const KacPayload&) = default;
};

struct FusionPayload {
    std::vector<Sector> sectors;
    std::vector<std::vector<std::vector<std::size_t>>> table;  // [i][j] -> ascending k

    friend bool operator==(const FusionPayload&, const FusionPayload&) = default;
};

struct CertificatePayload {
    std::string construction;  // "two-group" or "group-file"
    CoverCertificate certificate;
    std::vector<Sector> sectors;  // resolves sector indices in the witness

    friend bool operator==(const CertificatePayload&, const CertificatePayload&) = default;
};

struct SearchPayload {
    std::int64_t max_order = 1;
    std::vector<LabeledGroup> covers;
    std::vector<Sector> sectors;

    friend bool operator==(const SearchPayload&, const SearchPayload&) = default;
};

using Payload = std::variant<KacPayload, FusionPayload, CertificatePayload, SearchPayload>;

struct OutputDocument {
    ModelInfo model;
    Payload payload;

    friend bool operator==(const OutputDocument&, const OutputDocument&) = default;
};

OutputDocument kac_document(const ModelParams& params);
OutputDocument fusion_document(const FusionTensor& tensor);
OutputDocument certificate_document(const ModelParams& params, std::string construction, CoverCertificate cert);
OutputDocument search_document(const ModelParams& params, std::int64_t max_order, std::vector<LabeledGroup> covers);

/// Top level is {"model": {p, q, c, N}, <payload key>: {...}} where the
/// payload key is one of kac, fusion, certificate, search.
nlohmann::json to_json(const OutputDocument& doc);
/// Inverse of to_json. Throws ArgumentError on schema violations.
OutputDocument document_from_json(const nlohmann::json& j);

/// Human-readable rendering; tables are column-aligned with no trailing
/// whitespace and end with a newline.
std::string render_text(const OutputDocument& doc);

std::string render(const OutputDocument& doc, Format format);

}  // namespace mmfusion::cli
