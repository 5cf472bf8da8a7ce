#include "cli/commands.hpp"

#include <algorithm>
#include <map>
#include <ostream>

#include <CLI11.hpp>

#include "cli/document.hpp"
#include "cli/group_file.hpp"
#include "mmfusion/cover_search.hpp"
#include "mmfusion/errors.hpp"
#include "mmfusion/fusion.hpp"
#include "mmfusion/two_group_cover.hpp"

namespace mmfusion::cli {

namespace {

struct ModelOptions {
    int p = 0;
    int q = 0;
    Format format = Format::Text;
};

void add_model_options(CLI::App& cmd, ModelOptions& opts) {
    cmd.add_option("--p", opts.p, "first minimal model parameter (>= 2)")->required();
    cmd.add_option("--q", opts.q, "second minimal model parameter (>= 2, coprime to p)")->required();
    const std::map<std::string, Format> formats{{"text", Format::Text}, {"json", Format::Json}};
    cmd.add_option("--format", opts.format, "output format: text or json")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
        ->default_str("text");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Minimal model fusion rules and their group covers", "mmfusion"};
    app.require_subcommand(1);

    ModelOptions kac_opts;
    auto* kac = app.add_subcommand("kac", "print the Kac table of conformal weights");
    add_model_options(*kac, kac_opts);

    ModelOptions fusion_opts;
    auto* fusion = app.add_subcommand("fusion", "print the fusion rule table");
    add_model_options(*fusion, fusion_opts);

    auto* cover = app.add_subcommand("cover", "verify or search for group covers of the fusion rules");
    cover->require_subcommand(1);

    ModelOptions verify_opts;
    std::string group_path;
    unsigned verify_threads = 1;
    bool verify_large = false;
    auto* verify = cover->add_subcommand("verify", "verify the Z_2^(p+q-5) cover, or a labeling from --group");
    add_model_options(*verify, verify_opts);
    verify->add_option("--group", group_path, "group labeling file")->check(CLI::ExistingFile);
    verify->add_option("--threads", verify_threads, "worker threads")->check(CLI::Range(1U, 256U));
    verify->add_flag("--allow-large", verify_large, "allow p+q above the default verification budget");

    ModelOptions search_opts;
    long max_order = 0;
    unsigned search_threads = 1;
    bool search_large = false;
    auto* search = cover->add_subcommand("search", "search cyclic groups Z_k, k <= max-order, for covers");
    add_model_options(*search, search_opts);
    search->add_option("--max-order", max_order, "largest cyclic group order to try")->required()->check(
        CLI::PositiveNumber);
    search->add_option("--threads", search_threads, "worker threads")->check(CLI::Range(1U, 256U));
    search->add_flag("--allow-large", search_large, "allow max-order above the default search budget");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsageError;
    }

    try {
        if (*kac) {
            const ModelParams params(kac_opts.p, kac_opts.q);
            out << render(kac_document(params), kac_opts.format);
            return kSuccess;
        }
        if (*fusion) {
            const ModelParams params(fusion_opts.p, fusion_opts.q);
            out << render(fusion_document(fusion_tensor(params)), fusion_opts.format);
            return kSuccess;
        }
        if (*verify) {
            const ModelParams params(verify_opts.p, verify_opts.q);
            const FusionTensor tensor(params);
            CoverCertificate cert;
            std::string construction;
            if (!group_path.empty()) {
                const auto lg = load_group_file(group_path, params);
                cert = verify_abelian_cover(lg, tensor, verify_threads);
                construction = "group-file";
            } else {
                if (params.p() + params.q() > kDefaultVerifyBudget && !verify_large) {
                    err << "error: p+q = " << params.p() + params.q() << " exceeds the verification budget of "
                        << kDefaultVerifyBudget << "; pass --allow-large to run it anyway\n";
                    return kUsageError;
                }
                const GroupContext ctx(params);
                cert = verify_cover(CoverMap::canonical(ctx), tensor, verify_threads);
                construction = "two-group";
            }
            const bool passed = cert.passed();
            out << render(certificate_document(params, construction, std::move(cert)), verify_opts.format);
            return passed ? kSuccess : kVerifyFailed;
        }
        if (*search) {
            const ModelParams params(search_opts.p, search_opts.q);
            if (max_order > kDefaultSearchBudget && !search_large) {
                err << "error: --max-order " << max_order << " exceeds the search budget of " << kDefaultSearchBudget
                    << "; pass --allow-large to run it anyway\n";
                return kUsageError;
            }
            SearchOptions options;
            options.order_budget = search_large ? static_cast<std::int64_t>(kMaxGroupOrder) : kDefaultSearchBudget;
            options.threads = search_threads;
            auto covers = search_cyclic_covers(fusion_tensor(params), max_order, options);
            out << render(search_document(params, max_order, std::move(covers)), search_opts.format);
            return kSuccess;
        }
    } catch (const ArgumentError& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const RangeError& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const CapacityError& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    }
    return kUsageError;
}

}  // namespace mmfusion::cli
