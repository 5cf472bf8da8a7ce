#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>

#include "mmfusion/cover_search.hpp"
#include "mmfusion/errors.hpp"
#include "mmfusion/minimal_model.hpp"

namespace mmfusion::cli {

/// Malformed group file; what() reads "<source>:<line>: <message>".
struct GroupFileError : ArgumentError {
    GroupFileError(std::string_view source, std::size_t line, const std::string& message);
    std::size_t line;
};

/// Reads the line-oriented labeling format:
///
///     group k1 k2 ... kt
///     e1,...,et -> m,n
///     ...
///
/// one element line per group element, with Kac labels of the given
/// model. Blank lines and text after '#' are ignored. The identity must
/// carry a label of the (1,1) sector.
LabeledGroup parse_group_file(std::istream& in, const ModelParams& params, std::string_view source = "<input>");

LabeledGroup load_group_file(const std::string& path, const ModelParams& params);

/// Writes lg in the same format, one line per element in index order,
/// using canonical sector labels.
std::string format_group_file(const LabeledGroup& lg, const ModelParams& params);

}  // namespace mmfusion::cli
