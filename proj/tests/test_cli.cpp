#include <doctest.h>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli/commands.hpp"
#include "cli/document.hpp"
#include "cli/group_file.hpp"
#include "mmfusion/two_group_cover.hpp"

using namespace mmfusion;
using namespace mmfusion::cli;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string golden(const std::string& name) { return slurp(std::string(MMFUSION_GOLDEN_DIR) + "/" + name); }
std::string data(const std::string& name) { return std::string(MMFUSION_DATA_DIR) + "/" + name; }

void check_round_trip(const OutputDocument& doc) {
    const auto j = to_json(doc);
    CHECK(document_from_json(j) == doc);
    CHECK(document_from_json(nlohmann::json::parse(j.dump())) == doc);
}

LabeledGroup parse(const std::string& text, const ModelParams& params) {
    std::istringstream in(text);
    return parse_group_file(in, params, "test.cover");
}

}  // namespace

TEST_CASE("text tables match the golden files byte for byte") {
    for (const auto& [p, q] : {std::pair{3, 4}, {4, 5}}) {
        const auto suffix = std::to_string(p) + "_" + std::to_string(q) + ".txt";
        const auto kac = run({"kac", "--p", std::to_string(p), "--q", std::to_string(q)});
        CHECK(kac.code == kSuccess);
        CHECK(kac.out == golden("kac_" + suffix));
        const auto fusion = run({"fusion", "--p", std::to_string(p), "--q", std::to_string(q)});
        CHECK(fusion.code == kSuccess);
        CHECK(fusion.out == golden("fusion_" + suffix));
    }
}

TEST_CASE("kac documents") {
    const auto doc = kac_document(ModelParams(3, 4));
    const auto& kac = std::get<KacPayload>(doc.payload);
    CHECK(kac.grid == std::vector<std::vector<Rational>>{{0, Rational(1, 16), Rational(1, 2)},
                                                        {Rational(1, 2), Rational(1, 16), 0}});
    const auto trivial = std::get<KacPayload>(kac_document(ModelParams(2, 3)).payload);
    // Full 1x2 grid; h_{1,2} = ((2*2 - 3)^2 - 1)/24 = 0.
    CHECK(trivial.grid == std::vector<std::vector<Rational>>{{0, 0}});
    const auto j = to_json(kac_document(ModelParams(4, 5)));
    CHECK(j["model"]["c"] == "7/10");
    CHECK(j["model"]["N"] == 6);
    CHECK(j["kac"]["grid"][1][1] == "3/80");
}

TEST_CASE("fusion documents") {
    const auto json = nlohmann::json::parse(run({"fusion", "--p", "4", "--q", "5", "--format", "json"}).out);
    const auto& table = json["fusion"]["table"];
    CHECK(table.size() == 6);
    const auto doc = fusion_document(fusion_tensor(ModelParams(4, 5)));
    const auto& payload = std::get<FusionPayload>(doc.payload);
    CHECK(payload.table[5][5] == std::vector<std::size_t>{0, 1, 2, 3});
    for (std::size_t j = 0; j < 6; ++j) CHECK(payload.table[0][j] == std::vector<std::size_t>{j});
    CHECK(render_text(doc).find("[0]+[1/10]+[3/5]+[3/2]") != std::string::npos);
}

TEST_CASE("JSON round trip on every payload kind") {
    check_round_trip(kac_document(ModelParams(4, 5)));
    check_round_trip(kac_document(ModelParams(2, 3)));
    check_round_trip(fusion_document(fusion_tensor(ModelParams(3, 4))));
    const ModelParams ising(3, 4);
    const auto tensor = fusion_tensor(ising);
    const GroupContext ctx(ising);
    check_round_trip(certificate_document(ising, "two-group", verify_cover(CoverMap::canonical(ctx), tensor)));
    check_round_trip(
        certificate_document(ising, "two-group", verify_cover(CoverMap::from_assignment(ctx, {2, 0, 1, 1}), tensor)));
    check_round_trip(certificate_document(
        ising, "group-file", verify_abelian_cover(LabeledGroup(AbelianGroupSpec::cyclic(2), {0, 2}), tensor)));
    check_round_trip(search_document(ising, 8, search_cyclic_covers(tensor, 8)));
    check_round_trip(search_document(ising, 2, {}));
    CHECK_THROWS_AS(document_from_json(nlohmann::json::parse(R"({"model": {}})")), ArgumentError);
    CHECK_THROWS_AS(document_from_json(nlohmann::json::array()), ArgumentError);
}

TEST_CASE("cover verify exit codes") {
    const auto tg = run({"cover", "verify", "--p", "4", "--q", "5"});
    CHECK(tg.code == kSuccess);
    CHECK(tg.out.find("verdict: PASS") != std::string::npos);
    CHECK(tg.out.find("order 16") != std::string::npos);

    CHECK(run({"cover", "verify", "--p", "3", "--q", "4", "--group", data("ising_z4.cover")}).code == kSuccess);
    CHECK(run({"cover", "verify", "--p", "3", "--q", "4", "--group", data("ising_z2xz2.cover")}).code == kSuccess);
    CHECK(run({"cover", "verify", "--p", "4", "--q", "5", "--group", data("tricritical_z12.cover")}).code ==
          kSuccess);

    const auto bad = run({"cover", "verify", "--p", "3", "--q", "4", "--group", data("ising_z4_corrupted.cover")});
    CHECK(bad.code == kVerifyFailed);
    CHECK(bad.out.find("verdict: FAIL") != std::string::npos);
    CHECK(bad.out.find("witness: g1=1 g2=1 g1+g2=2") != std::string::npos);

    const auto js = run({"cover", "verify", "--p", "3", "--q", "4", "--group", data("ising_z4_corrupted.cover"),
                         "--format", "json"});
    CHECK(js.code == kVerifyFailed);
    const auto doc = document_from_json(nlohmann::json::parse(js.out));
    CHECK_FALSE(std::get<CertificatePayload>(doc.payload).certificate.passed());

    const auto threaded = run({"cover", "verify", "--p", "5", "--q", "7", "--threads", "4"});
    CHECK(threaded.out == run({"cover", "verify", "--p", "5", "--q", "7"}).out);
}

TEST_CASE("usage errors exit with 2") {
    const auto coprime = run({"kac", "--p", "4", "--q", "6"});
    CHECK(coprime.code == kUsageError);
    CHECK(coprime.err.find("coprime") != std::string::npos);
    CHECK(run({"fusion", "--p", "1", "--q", "4"}).code == kUsageError);
    CHECK(run({"kac", "--p", "3"}).code == kUsageError);
    CHECK(run({"frobnicate"}).code == kUsageError);
    CHECK(run({"kac", "--p", "3", "--q", "4", "--format", "xml"}).code == kUsageError);
    CHECK(run({"cover", "verify", "--p", "3", "--q", "4", "--group", data("missing.cover")}).code == kUsageError);
    CHECK(run({"cover", "verify", "--p", "9", "--q", "10"}).code == kUsageError);
    CHECK(run({"cover", "search", "--p", "3", "--q", "4"}).code == kUsageError);
    const auto big = run({"cover", "search", "--p", "3", "--q", "4", "--max-order", "30"});
    CHECK(big.code == kUsageError);
    CHECK(big.err.find("--allow-large") != std::string::npos);
    CHECK(run({"cover", "search", "--p", "3", "--q", "4", "--max-order", "25", "--allow-large"}).code == kSuccess);
}

TEST_CASE("cover search") {
    const auto empty = run({"cover", "search", "--p", "3", "--q", "4", "--max-order", "2", "--format", "json"});
    CHECK(empty.code == kSuccess);
    CHECK(nlohmann::json::parse(empty.out)["search"]["covers"].empty());
    const auto z4 = run({"cover", "search", "--p", "3", "--q", "4", "--max-order", "4"});
    CHECK(z4.code == kSuccess);
    CHECK(z4.out.find("Z4: 0->[0] 1->[1/16] 2->[1/2] 3->[1/16]") != std::string::npos);
    const auto z12 = run({"cover", "search", "--p", "4", "--q", "5", "--max-order", "12"});
    CHECK(z12.out.find("Z12: 0->[0] 1->[3/80] 2->[1/10] 3->[7/16] 4->[3/5] 5->[3/80] 6->[3/2] 7->[3/80] "
                       "8->[3/5] 9->[7/16] 10->[1/10] 11->[3/80]") != std::string::npos);
}

TEST_CASE("group files") {
    const ModelParams ising(3, 4);
    const auto lg = parse("# comment\n\ngroup 2 2\n0,0 -> 1,1\n1,0 -> 2,2 # alt label\n0,1 -> 1,2\n1,1 -> 1,3\n",
                          ising);
    CHECK(lg.spec().factors() == std::vector<std::int64_t>{2, 2});
    CHECK(lg.labels() == std::vector<std::uint32_t>{0, 1, 1, 2});
    const auto text = format_group_file(lg, ising);
    CHECK(parse(text, ising) == lg);
    CHECK(load_group_file(data("tricritical_z12.cover"), ModelParams(4, 5)).spec().order() == 12);
}

TEST_CASE("group file diagnostics name the line") {
    const ModelParams ising(3, 4);
    auto error_of = [&](const std::string& text) -> std::string {
        try {
            parse(text, ising);
        } catch (const GroupFileError& e) {
            return e.what();
        }
        return "";
    };
    CHECK(error_of("group 4\n0 -> 1,1\n1 -> 1,2\n1 -> 1,3\n").rfind("test.cover:4:", 0) == 0);
    CHECK(error_of("group 4\n0 -> 1,1\n5 -> 1,2\n").rfind("test.cover:3:", 0) == 0);
    CHECK(error_of("group 4\n0 -> 1,1\n1 -> 3,1\n").rfind("test.cover:3:", 0) == 0);
    CHECK(error_of("group 4\n0 -> 1,2\n").rfind("test.cover:2:", 0) == 0);
    CHECK(error_of("group 4\n0 -> 1,1\n1 -> 1,2\n").find("test.cover") == 0);
    CHECK(error_of("grp 4\n").rfind("test.cover:1:", 0) == 0);
    CHECK(error_of("group 4\n0 1,1\n").rfind("test.cover:2:", 0) == 0);
    CHECK(error_of("").find("test.cover") == 0);
}
