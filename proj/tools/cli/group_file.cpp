#include "cli/group_file.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <sstream>
#include <vector>

namespace mmfusion::cli {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::optional<std::int64_t> to_int(std::string_view s) {
    s = trim(s);
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
    return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    while (true) {
        const auto pos = s.find(sep);
        out.push_back(s.substr(0, pos));
        if (pos == std::string_view::npos) break;
        s.remove_prefix(pos + 1);
    }
    return out;
}

}  // namespace

GroupFileError::GroupFileError(std::string_view source, std::size_t line_no, const std::string& message)
    : ArgumentError(std::string(source) + ":" + std::to_string(line_no) + ": " + message), line(line_no) {}

LabeledGroup parse_group_file(std::istream& in, const ModelParams& params, std::string_view source) {
    std::optional<AbelianGroupSpec> spec;
    std::vector<std::uint32_t> labels;
    std::vector<std::size_t> defined_on;  // line of each element's definition, 0 = missing
    std::size_t header_line = 0;

    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line = raw;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        if (!spec) {
            std::istringstream words{std::string(line)};
            std::string keyword;
            words >> keyword;
            if (keyword != "group") throw GroupFileError(source, line_no, "expected header 'group k1 ... kt'");
            std::vector<std::int64_t> factors;
            std::string word;
            while (words >> word) {
                const auto f = to_int(word);
                if (!f || *f < 2) {
                    throw GroupFileError(source, line_no, "invariant factor '" + word + "' must be an integer >= 2");
                }
                factors.push_back(*f);
            }
            try {
                spec = AbelianGroupSpec(std::move(factors));
            } catch (const std::exception& e) {
                throw GroupFileError(source, line_no, e.what());
            }
            labels.assign(spec->order(), 0);
            defined_on.assign(spec->order(), 0);
            header_line = line_no;
            continue;
        }

        const auto arrow = line.find("->");
        if (arrow == std::string_view::npos) {
            throw GroupFileError(source, line_no, "expected 'e1,...,et -> m,n'");
        }
        const auto element_text = trim(line.substr(0, arrow));
        const auto label_text = trim(line.substr(arrow + 2));

        std::vector<std::int64_t> coords;
        if (!element_text.empty()) {
            for (const auto part : split(element_text, ',')) {
                const auto v = to_int(part);
                if (!v) throw GroupFileError(source, line_no, "element coordinate '" + std::string(trim(part)) + "' is not an integer");
                coords.push_back(*v);
            }
        }
        std::uint64_t index = 0;
        try {
            index = spec->index_of(coords);
        } catch (const std::exception& e) {
            throw GroupFileError(source, line_no, std::string("bad element: ") + e.what());
        }
        if (defined_on[index] != 0) {
            throw GroupFileError(source, line_no,
                                 "element " + std::string(element_text) + " already labeled on line " +
                                     std::to_string(defined_on[index]));
        }

        const auto label_parts = split(label_text, ',');
        const auto m = label_parts.size() == 2 ? to_int(label_parts[0]) : std::nullopt;
        const auto n = label_parts.size() == 2 ? to_int(label_parts[1]) : std::nullopt;
        if (!m || !n) throw GroupFileError(source, line_no, "label '" + std::string(label_text) + "' is not 'm,n'");
        const KacLabel label{static_cast<int>(*m), static_cast<int>(*n)};
        if (!in_kac_range(params, label)) {
            throw GroupFileError(source, line_no,
                                 "label (" + std::to_string(*m) + "," + std::to_string(*n) + ") outside 0<m<" +
                                     std::to_string(params.p()) + ", 0<n<" + std::to_string(params.q()));
        }
        const auto sector = static_cast<std::uint32_t>(sector_index(params, label));
        if (index == 0 && sector != 0) {
            throw GroupFileError(source, line_no, "the identity element must be labeled with the (1,1) sector");
        }
        labels[index] = sector;
        defined_on[index] = line_no;
    }

    if (!spec) throw GroupFileError(source, line_no, "missing 'group' header");
    for (std::uint64_t g = 0; g < defined_on.size(); ++g) {
        if (defined_on[g] == 0) {
            std::string coords;
            for (const auto c : spec->coordinates(g)) coords += (coords.empty() ? "" : ",") + std::to_string(c);
            throw GroupFileError(source, header_line,
                                 "labeling is partial: element " + (coords.empty() ? std::string("()") : coords) +
                                     " has no label");
        }
    }
    return LabeledGroup(std::move(*spec), std::move(labels));
}

LabeledGroup load_group_file(const std::string& path, const ModelParams& params) {
    std::ifstream in(path);
    if (!in) throw GroupFileError(path, 0, "cannot open file");
    return parse_group_file(in, params, path);
}

std::string format_group_file(const LabeledGroup& lg, const ModelParams& params) {
    const auto all = sectors(params);
    std::ostringstream os;
    os << "group";
    for (const auto f : lg.spec().factors()) os << " " << f;
    os << "\n";
    for (std::uint64_t g = 0; g < lg.spec().order(); ++g) {
        std::string coords;
        for (const auto c : lg.spec().coordinates(g)) coords += (coords.empty() ? "" : ",") + std::to_string(c);
        const auto& label = all.at(lg.label(g)).label;
        os << coords << " -> " << label.m << "," << label.n << "\n";
    }
    return os.str();
}

}  // namespace mmfusion::cli
