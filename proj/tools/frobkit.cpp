#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "frobkit/runner.hpp"

using namespace frobkit;

namespace {

enum Exit { kClean = 0, kFailPresent = 1, kInputError = 2 };

void write_output(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw InputError("cannot write " + path);
    out << text;
}

void list_presets() {
    for (const auto& p : preset_catalog()) std::cout << p.name << "\t" << p.kind << "\t" << p.description << "\n";
}

template <ExactScalar S>
std::string emit(const std::string& name, const FieldSpec& field) {
    return emit_document(make_preset<S>(name, field)).dump(2) + "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Invariants and verification checks for Frobenius and Hopf algebras over Q and F_p"};
    app.require_subcommand(0, 1);
    bool list_flag = false;
    app.add_flag("--list-presets", list_flag, "List the preset catalog and exit");

    JobSpec job;
    std::string field_text, format = "json", out_path;
    bool no_timing = false;

    auto add_job_options = [&](CLI::App* cmd) {
        cmd->add_option("input", job.input, "JSON document, or - for stdin");
        cmd->add_option("--preset", job.preset, "Preset name with parameters, e.g. symmetric:3");
        cmd->add_option("--field", field_text, "Q, F<p> or Fp:<p>");
        cmd->add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "md"}));
        cmd->add_option("--out", out_path, "Write the report here instead of stdout");
        cmd->add_option("--lambda", job.lambda, "Named Frobenius form: matrix-trace, group-coefficient-of-one, hopf-integral");
        cmd->add_flag("--no-timing", no_timing, "Omit per-suite timings");
    };

    auto* analyze_cmd = app.add_subcommand("analyze", "Print structural invariants");
    add_job_options(analyze_cmd);
    auto* verify_cmd = app.add_subcommand("verify", "Run verification suites");
    add_job_options(verify_cmd);
    verify_cmd->add_option("--suite", job.suites, "Suite to run (repeatable); all when omitted")
        ->check(CLI::IsMember(all_suites()));
    verify_cmd->add_option("--seed", job.seed, "Random seed");
    verify_cmd->add_option("--trials", job.trials, "Random trials per check")->check(CLI::PositiveNumber);

    auto* preset_cmd = app.add_subcommand("preset", "Inspect the preset catalog");
    preset_cmd->require_subcommand(1);
    preset_cmd->add_subcommand("list", "List presets");
    std::string emit_name;
    auto* emit_cmd = preset_cmd->add_subcommand("emit", "Print a preset as an input document");
    emit_cmd->add_option("name", emit_name)->required();
    emit_cmd->add_option("--field", field_text, "Q, F<p> or Fp:<p>");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kClean : kInputError;
    }

    try {
        if (!field_text.empty()) {
            try {
                job.field = FieldSpec::parse(field_text);
            } catch (const std::exception& e) {
                throw InputError(e.what());
            }
        }
        if (list_flag || preset_cmd->got_subcommand("list")) {
            list_presets();
            return kClean;
        }
        if (*emit_cmd) {
            const FieldSpec f = job.field.value_or(FieldSpec::rationals());
            try {
                std::cout << (f.is_prime_field() ? emit<Zp>(emit_name, f) : emit<Rational>(emit_name, f));
            } catch (const std::invalid_argument& e) {
                throw InputError(e.what());
            }
            return kClean;
        }
        if (!*analyze_cmd && !*verify_cmd) {
            std::cout << app.help();
            return kInputError;
        }
        const bool timing = !no_timing && *verify_cmd;
        Report rep = *verify_cmd ? run(job) : analyze(job);
        write_output(format == "md" ? report_markdown(rep, timing) : report_json(rep, timing).dump(2) + "\n", out_path);
        return rep.has_failure() ? kFailPresent : kClean;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
}
