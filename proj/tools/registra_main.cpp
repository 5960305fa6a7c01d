// registra command-line interface. Links the public C API only.

#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "registra.h"

namespace {

int exit_code_for(registra_status status) {
    switch (status) {
        case REGISTRA_OK: return 0;
        case REGISTRA_ERR_NUMERICAL: return 2;
        default: return 1;
    }
}

int report_result(registra_status status) {
    if (status != REGISTRA_OK) {
        std::fprintf(stderr, "registra: %s\n", registra_last_error());
    }
    return exit_code_for(status);
}

int run_command(const std::string& command, const std::string& config,
                const std::string& out) {
    return report_result(
        registra_run(command.c_str(), config.c_str(), out.empty() ? nullptr : out.c_str()));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"registra -- corpus stylometry toolkit"};
    app.set_version_flag("--version", std::string(registra_version()));
    app.require_subcommand(1);

    std::string config;
    std::string out;
    std::string manifest;

    auto* ingest = app.add_subcommand("ingest", "Load a corpus manifest into a corpus cache");
    ingest->add_option("--manifest", manifest, "Corpus manifest JSON");
    ingest->add_option("--config", config, "Analysis config JSON (alternative to --manifest)");
    ingest->add_option("--out", out, "Corpus cache output path")->required();

    auto* fwpca = app.add_subcommand("fwpca", "Function-word PCA pipeline");
    auto* mda = app.add_subcommand("mda", "Multidimensional register analysis pipeline");
    auto* pos = app.add_subcommand("pos", "Word-class contrast rates and chart");
    auto* profile = app.add_subcommand("profile", "Content-word profile of top-ranked words");
    auto* compare = app.add_subcommand("compare", "Group comparisons over a scores CSV");
    auto* generate = app.add_subcommand("generate", "Generate a matched AI corpus from a jobs file");
    for (auto* sub : {fwpca, mda, pos, profile, compare, generate}) {
        sub->add_option("--config", config, "Analysis config JSON")->required();
        sub->add_option("--out", out, "Output directory (overrides the config)");
    }

    CLI11_PARSE(app, argc, argv);

    if (ingest->parsed()) {
        if (!manifest.empty()) return report_result(registra_ingest(manifest.c_str(), out.c_str()));
        if (!config.empty()) return run_command("ingest", config, out);
        std::fprintf(stderr, "registra: ingest needs --manifest or --config\n");
        return 1;
    }
    for (auto* sub : {fwpca, mda, pos, profile, compare, generate}) {
        if (sub->parsed()) return run_command(sub->get_name(), config, out);
    }
    return 1;
}
