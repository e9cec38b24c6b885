// iotforge command line: validate models, generate ThingML, run
// schedulability analysis, pretty-print reports.
//
// Exit codes: 0 success/schedulable, 1 validation errors, 2 I/O or usage
// failure, 3 valid but not schedulable.
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <unistd.h>

#include <CLI11.hpp>
#include <json.hpp>

#include "iotforge/api.hpp"
#include "iotforge/parser.hpp"
#include "iotforge/sched.hpp"
#include "iotforge/serializer.hpp"
#include "iotforge/thingml.hpp"
#include "iotforge/validator.hpp"

namespace fs = std::filesystem;
using namespace iotforge;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitIo = 2;
constexpr int kExitUnschedulable = 3;

bool color_enabled(std::ostream& stream) {
    const char* env = std::getenv("IOTFORGE_COLOR");
    if (env && std::string_view(env) == "never") return false;
    int fd = &stream == &std::cout ? STDOUT_FILENO : STDERR_FILENO;
    return isatty(fd) != 0;
}

bool read_file(const std::string& path, std::string& out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    std::ostringstream buffer;
    buffer << in.rdbuf();
    out = buffer.str();
    return true;
}

void print_diagnostics_text(std::ostream& stream, const std::string& path,
                            std::span<const Diagnostic> diagnostics) {
    bool color = color_enabled(stream);
    for (const auto& d : diagnostics) stream << render_diagnostic(path, d, color) << "\n";
}

struct LoadedModel {
    Model model;
    std::vector<Diagnostic> diagnostics;  // parse + validation findings
    bool parsed = false;
};

int load_and_validate(const std::string& path, LoadedModel& out) {
    std::string text;
    if (!read_file(path, text)) {
        std::cerr << "error: cannot read '" << path << "'\n";
        return kExitIo;
    }
    ParseResult parsed = parse_model({path, text});
    if (!parsed.ok()) {
        out.diagnostics = std::move(parsed.diagnostics);
        return kExitInvalid;
    }
    out.model = std::move(*parsed.model);
    out.parsed = true;
    out.diagnostics = validate(out.model);
    if (has_errors(out.diagnostics)) return kExitInvalid;
    return kExitOk;
}

int cmd_validate(const std::vector<std::string>& paths, const std::string& format,
                 bool fail_on_warning) {
    std::vector<Diagnostic> all;
    int exit_code = kExitOk;
    for (const auto& path : paths) {
        LoadedModel loaded;
        int rc = load_and_validate(path, loaded);
        if (rc == kExitIo) return kExitIo;
        if (rc != kExitOk) exit_code = rc;
        if (fail_on_warning && !loaded.diagnostics.empty() && exit_code == kExitOk)
            exit_code = kExitInvalid;
        if (format == "text") print_diagnostics_text(std::cout, path, loaded.diagnostics);
        for (auto& d : loaded.diagnostics) all.push_back(std::move(d));
    }
    if (format == "json") std::cout << render_diagnostics_json(all);
    if (format == "text" && exit_code == kExitOk && all.empty() && isatty(STDOUT_FILENO))
        std::cout << "ok\n";
    return exit_code;
}

int cmd_generate(const std::string& path, const std::string& outdir, bool to_stdout) {
    LoadedModel loaded;
    int rc = load_and_validate(path, loaded);
    if (rc != kExitOk) {
        print_diagnostics_text(std::cerr, path, loaded.diagnostics);
        return rc;
    }
    print_diagnostics_text(std::cerr, path, loaded.diagnostics);  // warnings only

    GenerationResult result = generate(loaded.model);
    if (to_stdout) {
        for (const auto& unit : result.units) {
            std::cout << "// ===== " << unit.file_name << " =====\n";
            std::cout << unit.text;
        }
        return kExitOk;
    }

    fs::path base = fs::path(outdir) / loaded.model.name;
    std::error_code ec;
    fs::create_directories(base, ec);
    if (ec) {
        std::cerr << "error: cannot create output directory '" << base.string() << "'\n";
        return kExitIo;
    }
    for (const auto& unit : result.units) {
        fs::path target = base / unit.file_name;
        fs::path temp = target;
        temp += ".tmp";
        {
            std::ofstream out(temp, std::ios::binary | std::ios::trunc);
            if (!out) {
                std::cerr << "error: cannot write '" << temp.string() << "'\n";
                return kExitIo;
            }
            out << unit.text;
        }
        fs::rename(temp, target, ec);
        if (ec) {
            std::cerr << "error: cannot move '" << temp.string() << "' into place\n";
            return kExitIo;
        }
        std::cout << (base / unit.file_name).string() << "\n";
    }
    return kExitOk;
}

int cmd_analyze(const std::string& path, const std::string& format) {
    LoadedModel loaded;
    int rc = load_and_validate(path, loaded);
    if (rc != kExitOk) {
        if (format == "json")
            std::cout << render_diagnostics_json(loaded.diagnostics);
        else
            print_diagnostics_text(std::cout, path, loaded.diagnostics);
        return rc;
    }
    print_diagnostics_text(std::cerr, path, loaded.diagnostics);  // warnings only

    SchedReport report = analyze(loaded.model);
    if (format == "json")
        std::cout << render_report_json(report);
    else
        std::cout << render_report_text(report);
    return report.schedulable ? kExitOk : kExitUnschedulable;
}

int cmd_report(const std::string& path) {
    std::string text;
    if (!read_file(path, text)) {
        std::cerr << "error: cannot read '" << path << "'\n";
        return kExitIo;
    }
    nlohmann::json doc = nlohmann::json::parse(text, nullptr, false);
    if (doc.is_discarded() || !doc.is_object() || !doc.contains("system") ||
        !doc.contains("verdict") || !doc.contains("cores")) {
        std::cerr << "error: '" << path << "' is not a schedulability report\n";
        return kExitIo;
    }
    try {
        SchedReport report;
        report.system = doc["system"].get<std::string>();
        report.schedulable = doc["verdict"].get<std::string>() == "schedulable";
        for (const auto& core : doc["cores"]) {
            CoreVerdict cv;
            cv.core.processor = core["processor"].get<std::string>();
            cv.core.core = core["core"].get<std::string>();
            std::string util = core["utilization"].get<std::string>();
            std::size_t slash = util.find('/');
            cv.utilization = Rational(std::stoll(util.substr(0, slash)),
                                      std::stoll(util.substr(slash + 1)));
            cv.schedulable = true;
            for (const auto& task : core["tasks"]) {
                TaskVerdict tv;
                tv.id = task["id"].get<std::string>();
                tv.wcet = task["C_us"].get<Micros>();
                tv.period = task["T_us"].get<Micros>();
                tv.deadline = task["D_us"].get<Micros>();
                tv.priority = task["priority"].get<int>();
                if (task["R_us"].is_number()) tv.response = task["R_us"].get<Micros>();
                tv.deadline_met = task["deadline_met"].get<bool>();
                if (!task["slack_us"].is_null()) tv.slack = task["slack_us"].get<Micros>();
                if (!tv.deadline_met) cv.schedulable = false;
                cv.tasks.push_back(std::move(tv));
            }
            if (cv.utilization > Rational::from_int(1)) cv.schedulable = false;
            report.cores.push_back(std::move(cv));
        }
        std::cout << render_report_text(report);
    } catch (const std::exception& e) {
        std::cerr << "error: malformed report: " << e.what() << "\n";
        return kExitIo;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"iotforge - model validation, ThingML generation and "
                 "schedulability analysis for .ciot designs"};
    app.require_subcommand(1);

    std::vector<std::string> validate_paths;
    std::string validate_format = "text";
    bool fail_on_warning = false;
    auto* validate_cmd = app.add_subcommand("validate", "Check model well-formedness");
    validate_cmd->add_option("paths", validate_paths, "model files")->required();
    validate_cmd->add_option("--format", validate_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    validate_cmd->add_flag("--fail-on-warning", fail_on_warning,
                           "treat warnings as failures");

    std::string generate_path;
    std::string outdir = "out";
    bool to_stdout = false;
    auto* generate_cmd = app.add_subcommand("generate", "Emit ThingML source");
    generate_cmd->add_option("path", generate_path, "model file")->required();
    generate_cmd->add_option("--out", outdir, "output directory (default: out)");
    generate_cmd->add_flag("--stdout", to_stdout, "stream units instead of writing files");

    std::string analyze_path;
    std::string analyze_format = "text";
    auto* analyze_cmd = app.add_subcommand("analyze", "Run schedulability analysis");
    analyze_cmd->add_option("path", analyze_path, "model file")->required();
    analyze_cmd->add_option("--format", analyze_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    std::string report_path;
    auto* report_cmd = app.add_subcommand("report", "Pretty-print a JSON report");
    report_cmd->add_option("path", report_path, "report file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitIo;
    }

    try {
        if (validate_cmd->parsed())
            return cmd_validate(validate_paths, validate_format, fail_on_warning);
        if (generate_cmd->parsed()) return cmd_generate(generate_path, outdir, to_stdout);
        if (analyze_cmd->parsed()) return cmd_analyze(analyze_path, analyze_format);
        if (report_cmd->parsed()) return cmd_report(report_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
    return kExitIo;
}
