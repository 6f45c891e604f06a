#include "strata/boundary.hpp"
#include "strata/errors.hpp"
#include "strata/fixture.hpp"
#include "strata/monodromy.hpp"
#include "strata/report.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitParse = 2;

struct Options {
    std::string command;
    std::string file;
    std::string batch;
    std::string format = "text";
    std::string sigma;
    std::string generator;
};

struct Outcome {
    int code = kExitOk;
    strata::Rendered rendered;
    bool have_report = false;
    std::string error;
};

std::vector<strata::GrcSpanEntry> all_grc_spans(const strata::Fixture& f) {
    std::vector<strata::GrcSpanEntry> spans;
    for (long i : f.graph.levels()) spans.push_back(strata::grc_span(f.model, f.graph, i));
    return spans;
}

// Resolves the weights for the forced/report commands: the flag wins, the
// fixture's own block is the fallback.
bool resolve_sigma(const strata::Fixture& f, const Options& opts, strata::SigmaSpec& out) {
    if (!opts.sigma.empty()) {
        out = strata::parse_sigma_spec(f, opts.sigma);
        return true;
    }
    if (f.has_sigma) {
        out = f.sigma;
        return true;
    }
    return false;
}

Outcome run_one(const Options& opts, const std::string& path) {
    Outcome out;
    try {
        strata::Fixture f = strata::parse_fixture_file(path);

        strata::ValidationReport validation = strata::validate_fixture(f);
        strata::SigmaSpec sigma;
        bool have_sigma = false;
        if (opts.command == "forced" || opts.command == "report") {
            have_sigma = resolve_sigma(f, opts, sigma);
            if (opts.command == "forced" && !have_sigma) {
                out.code = kExitParse;
                out.error = "forced: no sigma given and the fixture declares none";
                return out;
            }
            if (have_sigma && !opts.sigma.empty())
                validation.merge(strata::validate_sigma(f, sigma));
        }

        if (opts.command == "validate") {
            out.rendered = strata::render_validation(f, validation);
            out.have_report = true;
            out.code = validation.ok() ? kExitOk : kExitInvalid;
            return out;
        }

        if (!validation.ok()) {
            out.rendered = strata::render_validation(f, validation);
            out.have_report = true;
            out.code = kExitInvalid;
            return out;
        }

        if (opts.command == "boundary") {
            out.rendered = strata::render_boundary(f, strata::boundary_equations(f, f.equations));
        } else if (opts.command == "grc") {
            out.rendered = strata::render_grc(f, all_grc_spans(f));
        } else if (opts.command == "forced") {
            strata::Rref reduced = strata::rref_equations(f, f.equations);
            out.rendered = strata::render_forced(
                f, sigma, strata::forced_residue_equations(f, reduced.mat, sigma));
        } else if (opts.command == "monodromy") {
            strata::Generator gen = strata::parse_generator(f, opts.generator);
            out.rendered = strata::render_monodromy(f, gen, strata::twist_matrix(f, gen),
                                                    strata::monodromy_log(f, gen));
        } else if (opts.command == "report") {
            strata::BoundaryEquationSet set = strata::boundary_equations(f, f.equations);
            std::vector<strata::GrcSpanEntry> spans = all_grc_spans(f);
            if (have_sigma) {
                strata::Rref reduced = strata::rref_equations(f, f.equations);
                std::vector<strata::ResidueForm> forms =
                    strata::forced_residue_equations(f, reduced.mat, sigma);
                out.rendered = strata::render_report(f, validation, set, spans, &sigma, &forms);
            } else {
                out.rendered = strata::render_report(f, validation, set, spans, nullptr, nullptr);
            }
        }
        out.have_report = true;
        return out;
    } catch (const strata::ParseError& e) {
        out.code = kExitParse;
        out.error = std::string("parse error: ") + e.what();
        return out;
    } catch (const strata::DomainError& e) {
        out.code = kExitParse;
        out.error = std::string("error: ") + e.what();
        return out;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Boundary equations of linear subvarieties of strata of differentials"};
    app.require_subcommand(1);

    Options opts;
    for (const char* name : {"validate", "boundary", "grc", "forced", "monodromy", "report"}) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("file", opts.file, "fixture file");
        sub->add_option("--batch", opts.batch, "directory of fixture files")
            ->excludes(sub->get_option("file"));
        sub->add_option("--format", opts.format, "text or json")
            ->check(CLI::IsMember({"text", "json"}));
        if (std::string(name) == "forced" || std::string(name) == "report")
            sub->add_option("--sigma", opts.sigma, "weights, inline JSON or a file path");
        if (std::string(name) == "monodromy")
            sub->add_option("--generator", opts.generator, "edge:<id> or level:<integer>")
                ->required();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? kExitParse : kExitOk;
    }

    opts.command = app.get_subcommands().front()->get_name();

    std::vector<std::string> files;
    if (!opts.batch.empty()) {
        std::error_code ec;
        std::filesystem::directory_iterator it(opts.batch, ec);
        if (ec) {
            std::cerr << "error: cannot read directory '" << opts.batch << "'\n";
            return kExitParse;
        }
        for (const auto& entry : it)
            if (entry.path().extension() == ".json") files.push_back(entry.path().string());
        std::sort(files.begin(), files.end());
        if (files.empty()) {
            std::cerr << "error: no .json fixtures in '" << opts.batch << "'\n";
            return kExitParse;
        }
    } else if (!opts.file.empty()) {
        files.push_back(opts.file);
    } else {
        std::cerr << "error: give a fixture file or --batch\n";
        return kExitParse;
    }

    bool json = opts.format == "json";
    bool batch = files.size() > 1 || !opts.batch.empty();
    int worst = kExitOk;
    nlohmann::ordered_json batch_json = nlohmann::ordered_json::array();

    for (const std::string& path : files) {
        Outcome out = run_one(opts, path);
        worst = std::max(worst, out.code);
        if (!out.error.empty()) std::cerr << path << ": " << out.error << "\n";
        if (!out.have_report) continue;
        if (json) {
            if (batch) {
                nlohmann::ordered_json entry;
                entry["file"] = path;
                entry["report"] = out.rendered.json;
                batch_json.push_back(std::move(entry));
            } else {
                std::cout << out.rendered.json.dump(2) << "\n";
            }
        } else {
            if (batch) std::cout << "== " << path << " ==\n";
            std::cout << out.rendered.text;
        }
    }
    if (json && batch) std::cout << batch_json.dump(2) << "\n";

    return worst;
}
