#include "cli/document.hpp"

#include <algorithm>
#include <sstream>

#include "mmfusion/errors.hpp"

namespace mmfusion::cli {

using nlohmann::json;

namespace {

// ---- JSON helpers ----

json sector_ref(const Sector& s) { return {{"m", s.label.m}, {"n", s.label.n}, {"sector", s.name()}}; }

json label_pair(const KacLabel& label) { return json::array({label.m, label.n}); }

KacLabel parse_label_pair(const json& j) {
    if (!j.is_array() || j.size() != 2) throw ArgumentError("expected [m, n] label, got " + j.dump());
    return {j[0].get<int>(), j[1].get<int>()};
}

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw ArgumentError(std::string("missing JSON field '") + key + "'");
    return j.at(key);
}

std::vector<Sector> parse_sectors(const json& j) {
    std::vector<Sector> out;
    for (const auto& s : j) {
        out.push_back(Sector{{field(s, "m").get<int>(), field(s, "n").get<int>()},
                             Rational::parse(field(s, "h").get<std::string>()),
                             out.size()});
    }
    return out;
}

json sectors_json(const std::vector<Sector>& sectors) {
    json out = json::array();
    for (const auto& s : sectors) {
        out.push_back({{"m", s.label.m}, {"n", s.label.n}, {"h", s.h.to_string()}, {"name", s.name()}});
    }
    return out;
}

std::size_t resolve_ref(const std::vector<Sector>& sectors, const json& ref) {
    const KacLabel label{field(ref, "m").get<int>(), field(ref, "n").get<int>()};
    const auto it = std::find_if(sectors.begin(), sectors.end(), [&](const Sector& s) { return s.label == label; });
    if (it == sectors.end()) throw ArgumentError("reference to unknown sector " + ref.dump());
    return it->index;
}

json witness_json(const CertificatePayload& payload) {
    const auto& cert = payload.certificate;
    if (const auto* w = std::get_if<SumWitness>(&cert.witness)) {
        json out = {{"kind", "sum"},
                    {"first", w->first},
                    {"second", w->second},
                    {"sum", w->sum},
                    {"sectors", json::array()}};
        for (const auto s : w->sectors) out["sectors"].push_back(sector_ref(payload.sectors.at(s)));
        if (w->class_labels) {
            out["class_labels"] = json::array();
            for (const auto& l : *w->class_labels) out["class_labels"].push_back(label_pair(l));
        }
        return out;
    }
    if (const auto* w = std::get_if<UncoveredTriple>(&cert.witness)) {
        json out = {{"kind", "uncovered_triple"}, {"labels", json::array()}};
        for (const auto& l : w->labels) out["labels"].push_back(label_pair(l));
        return out;
    }
    return nullptr;
}

std::variant<std::monostate, SumWitness, UncoveredTriple> parse_witness(const json& j,
                                                                        const std::vector<Sector>& sectors) {
    if (j.is_null()) return std::monostate{};
    const auto kind = field(j, "kind").get<std::string>();
    if (kind == "sum") {
        SumWitness w;
        w.first = field(j, "first").get<std::vector<std::int64_t>>();
        w.second = field(j, "second").get<std::vector<std::int64_t>>();
        w.sum = field(j, "sum").get<std::vector<std::int64_t>>();
        const auto& refs = field(j, "sectors");
        if (refs.size() != 3) throw ArgumentError("sum witness needs three sectors");
        for (std::size_t i = 0; i < 3; ++i) w.sectors[i] = resolve_ref(sectors, refs[i]);
        if (j.contains("class_labels")) {
            std::array<KacLabel, 3> labels{};
            for (std::size_t i = 0; i < 3; ++i) labels[i] = parse_label_pair(j["class_labels"].at(i));
            w.class_labels = labels;
        }
        return w;
    }
    if (kind == "uncovered_triple") {
        UncoveredTriple w;
        for (std::size_t i = 0; i < 3; ++i) w.labels[i] = parse_label_pair(field(j, "labels").at(i));
        return w;
    }
    throw ArgumentError("unknown witness kind '" + kind + "'");
}

json payload_json(const KacPayload& p) {
    json grid = json::array();
    for (const auto& row : p.grid) {
        json r = json::array();
        for (const auto& h : row) r.push_back(h.to_string());
        grid.push_back(r);
    }
    return {{"kac", {{"grid", grid}, {"sectors", sectors_json(p.sectors)}}}};
}

json payload_json(const FusionPayload& p) {
    json table = json::array();
    for (const auto& row : p.table) {
        json r = json::array();
        for (const auto& cell : row) {
            json c = json::array();
            for (const auto k : cell) c.push_back(sector_ref(p.sectors.at(k)));
            r.push_back(c);
        }
        table.push_back(r);
    }
    return {{"fusion", {{"sectors", sectors_json(p.sectors)}, {"table", table}}}};
}

json payload_json(const CertificatePayload& p) {
    const auto& cert = p.certificate;
    return {{"certificate",
             {{"construction", p.construction},
              {"verdict", cert.passed() ? "PASS" : "FAIL"},
              {"group", {{"factors", cert.group_factors}, {"order", cert.group_order()}}},
              {"stats", {{"pairs_checked", cert.stats.pairs_checked}, {"triples_checked", cert.stats.triples_checked}}},
              {"witness", witness_json(p)},
              {"sectors", sectors_json(p.sectors)}}}};
}

json payload_json(const SearchPayload& p) {
    json covers = json::array();
    for (const auto& lg : p.covers) {
        json labels = json::array();
        for (std::uint64_t g = 0; g < lg.spec().order(); ++g) {
            json entry = sector_ref(p.sectors.at(lg.label(g)));
            entry["element"] = lg.spec().coordinates(g);
            labels.push_back(entry);
        }
        covers.push_back({{"group", lg.spec().factors()}, {"order", lg.spec().order()}, {"labels", labels}});
    }
    return {{"search", {{"max_order", p.max_order}, {"covers", covers}, {"sectors", sectors_json(p.sectors)}}}};
}

// ---- text helpers ----

std::string model_line(const ModelInfo& m) {
    return "model (" + std::to_string(m.p) + "," + std::to_string(m.q) + ")  c = " + m.c.to_string() +
           "  N = " + std::to_string(m.sector_count) + "\n";
}

std::string aligned(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> widths;
    for (const auto& row : rows) {
        if (widths.size() < row.size()) widths.resize(row.size(), 0);
        for (std::size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], row[c].size());
    }
    std::string out;
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            line += row[c];
            if (c + 1 < row.size()) line += std::string(widths[c] - row[c].size() + 2, ' ');
        }
        out += line + "\n";
    }
    return out;
}

std::string tuple_text(const std::vector<std::int64_t>& coords) {
    std::string out = "(";
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (i > 0) out += ",";
        out += std::to_string(coords[i]);
    }
    return out + ")";
}

std::string label_text(const KacLabel& l) { return "(" + std::to_string(l.m) + "," + std::to_string(l.n) + ")"; }

std::string element_text(const std::vector<std::int64_t>& coords, const std::vector<std::int64_t>& factors) {
    // single-factor groups read more naturally as plain residues
    if (factors.size() == 1) return std::to_string(coords.at(0));
    return tuple_text(coords);
}

std::string text(const ModelInfo& model, const KacPayload& p) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> header{"h_{m,n}"};
    const std::size_t cols = p.grid.empty() ? 0 : p.grid.front().size();
    for (std::size_t n = 1; n <= cols; ++n) header.push_back("n=" + std::to_string(n));
    rows.push_back(header);
    for (std::size_t m = 0; m < p.grid.size(); ++m) {
        std::vector<std::string> row{"m=" + std::to_string(m + 1)};
        for (const auto& h : p.grid[m]) row.push_back(h.to_string());
        rows.push_back(row);
    }
    return model_line(model) + aligned(rows);
}

std::string text(const ModelInfo& model, const FusionPayload& p) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> header{"[h]x[h']"};
    for (const auto& s : p.sectors) header.push_back(s.name());
    rows.push_back(header);
    for (std::size_t i = 0; i < p.sectors.size(); ++i) {
        std::vector<std::string> row{p.sectors[i].name()};
        for (const auto& cell : p.table[i]) {
            std::string sum;
            for (const auto k : cell) sum += (sum.empty() ? "" : "+") + p.sectors[k].name();
            row.push_back(sum.empty() ? "0" : sum);
        }
        rows.push_back(row);
    }
    return model_line(model) + aligned(rows);
}

std::string text(const ModelInfo& model, const CertificatePayload& p) {
    const auto& cert = p.certificate;
    const std::string group = AbelianGroupSpec(cert.group_factors).to_string();
    std::ostringstream os;
    os << model_line(model);
    os << "construction: " << p.construction << "\n";
    os << "group: " << group << "  order " << cert.group_order() << "\n";
    os << "verdict: " << (cert.passed() ? "PASS" : "FAIL") << "\n";
    os << "pairs checked: " << cert.stats.pairs_checked << "\n";
    os << "admissible triples checked: " << cert.stats.triples_checked << "\n";
    if (const auto* w = std::get_if<SumWitness>(&cert.witness)) {
        const auto& s = p.sectors;
        os << "witness: g1=" << element_text(w->first, cert.group_factors)
           << " g2=" << element_text(w->second, cert.group_factors)
           << " g1+g2=" << element_text(w->sum, cert.group_factors) << " labeled " << s.at(w->sectors[0]).name()
           << " " << s.at(w->sectors[1]).name() << " " << s.at(w->sectors[2]).name();
        if (w->class_labels) {
            const auto& l = *w->class_labels;
            os << "; class triple (" << label_text(l[0]) << "," << label_text(l[1]) << "," << label_text(l[2])
               << ") is not admissible\n";
        } else {
            os << "; " << s.at(w->sectors[2]).name() << " does not occur in " << s.at(w->sectors[0]).name() << "x"
               << s.at(w->sectors[1]).name() << "\n";
        }
    } else if (const auto* w = std::get_if<UncoveredTriple>(&cert.witness)) {
        const auto& l = w->labels;
        os << "witness: admissible triple (" << label_text(l[0]) << "," << label_text(l[1]) << ","
           << label_text(l[2]) << ") is realized by no g1+g2=g3\n";
    }
    return os.str();
}

std::string text(const ModelInfo& model, const SearchPayload& p) {
    std::ostringstream os;
    os << model_line(model);
    os << "cyclic covers up to order " << p.max_order << ": " << p.covers.size() << "\n";
    for (const auto& lg : p.covers) {
        os << "Z" << lg.spec().order() << ":";
        for (std::uint64_t g = 0; g < lg.spec().order(); ++g) os << " " << g << "->" << p.sectors.at(lg.label(g)).name();
        os << "\n";
    }
    return os.str();
}

}  // namespace

ModelInfo model_info(const ModelParams& params) {
    return {params.p(), params.q(), central_charge(params), params.sector_count()};
}

OutputDocument kac_document(const ModelParams& params) {
    auto table = kac_table(params);
    return {model_info(params), KacPayload{std::move(table.weights), sectors(params)}};
}

OutputDocument fusion_document(const FusionTensor& tensor) {
    FusionPayload payload{tensor.sectors(), {}};
    payload.table.resize(tensor.size());
    for (std::size_t i = 0; i < tensor.size(); ++i) {
        for (std::size_t j = 0; j < tensor.size(); ++j) payload.table[i].push_back(tensor.product(i, j));
    }
    return {model_info(tensor.model()), std::move(payload)};
}

OutputDocument certificate_document(const ModelParams& params, std::string construction, CoverCertificate cert) {
    return {model_info(params), CertificatePayload{std::move(construction), std::move(cert), sectors(params)}};
}

OutputDocument search_document(const ModelParams& params, std::int64_t max_order, std::vector<LabeledGroup> covers) {
    return {model_info(params), SearchPayload{max_order, std::move(covers), sectors(params)}};
}

json to_json(const OutputDocument& doc) {
    json out = {{"model",
                 {{"p", doc.model.p}, {"q", doc.model.q}, {"c", doc.model.c.to_string()}, {"N", doc.model.sector_count}}}};
    out.update(std::visit([](const auto& p) { return payload_json(p); }, doc.payload));
    return out;
}

OutputDocument document_from_json(const json& j) {
    try {
        const auto& m = field(j, "model");
        OutputDocument doc{ModelInfo{field(m, "p").get<int>(), field(m, "q").get<int>(),
                                     Rational::parse(field(m, "c").get<std::string>()),
                                     field(m, "N").get<std::size_t>()},
                           KacPayload{}};
        if (j.contains("kac")) {
            const auto& k = j["kac"];
            KacPayload p;
            for (const auto& row : field(k, "grid")) {
                std::vector<Rational> r;
                for (const auto& h : row) r.push_back(Rational::parse(h.get<std::string>()));
                p.grid.push_back(std::move(r));
            }
            p.sectors = parse_sectors(field(k, "sectors"));
            doc.payload = std::move(p);
        } else if (j.contains("fusion")) {
            const auto& f = j["fusion"];
            FusionPayload p;
            p.sectors = parse_sectors(field(f, "sectors"));
            for (const auto& row : field(f, "table")) {
                std::vector<std::vector<std::size_t>> r;
                for (const auto& cell : row) {
                    std::vector<std::size_t> c;
                    for (const auto& ref : cell) c.push_back(resolve_ref(p.sectors, ref));
                    r.push_back(std::move(c));
                }
                p.table.push_back(std::move(r));
            }
            doc.payload = std::move(p);
        } else if (j.contains("certificate")) {
            const auto& c = j["certificate"];
            CertificatePayload p;
            p.construction = field(c, "construction").get<std::string>();
            p.sectors = parse_sectors(field(c, "sectors"));
            const auto verdict = field(c, "verdict").get<std::string>();
            if (verdict != "PASS" && verdict != "FAIL") throw ArgumentError("verdict must be PASS or FAIL");
            p.certificate.verdict = verdict == "PASS" ? Verdict::Pass : Verdict::Fail;
            p.certificate.group_factors = field(field(c, "group"), "factors").get<std::vector<std::int64_t>>();
            p.certificate.stats.pairs_checked = field(field(c, "stats"), "pairs_checked").get<std::uint64_t>();
            p.certificate.stats.triples_checked = field(field(c, "stats"), "triples_checked").get<std::uint64_t>();
            p.certificate.witness = parse_witness(field(c, "witness"), p.sectors);
            doc.payload = std::move(p);
        } else if (j.contains("search")) {
            const auto& s = j["search"];
            SearchPayload p;
            p.max_order = field(s, "max_order").get<std::int64_t>();
            p.sectors = parse_sectors(field(s, "sectors"));
            for (const auto& cover : field(s, "covers")) {
                AbelianGroupSpec spec(field(cover, "group").get<std::vector<std::int64_t>>());
                std::vector<std::uint32_t> labels(spec.order(), 0);
                for (const auto& entry : field(cover, "labels")) {
                    const auto coords = field(entry, "element").get<std::vector<std::int64_t>>();
                    labels.at(spec.index_of(coords)) = static_cast<std::uint32_t>(resolve_ref(p.sectors, entry));
                }
                p.covers.emplace_back(std::move(spec), std::move(labels));
            }
            doc.payload = std::move(p);
        } else {
            throw ArgumentError("document has no kac, fusion, certificate or search payload");
        }
        return doc;
    } catch (const json::exception& e) {
        throw ArgumentError(std::string("malformed document JSON: ") + e.what());
    }
}

std::string render_text(const OutputDocument& doc) {
    return std::visit([&](const auto& p) { return text(doc.model, p); }, doc.payload);
}

std::string render(const OutputDocument& doc, Format format) {
    if (format == Format::Json) return to_json(doc).dump(2) + "\n";
    return render_text(doc);
}

}  // namespace mmfusion::cli
