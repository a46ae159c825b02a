// Command-line surface: check documents, execute constructions, re-render
// stored reports. Exit codes: 0 all requested checks passed, 1 a mathematical
// check failed or a construction was refused (witnesses in the report),
// 2 input errors (unreadable files, malformed documents, unknown ids).

#include "workbench/dispatch.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace wb;

std::string target_name(const WorkbenchDocument& doc, const std::string& path) {
    if (!doc.name.empty()) return doc.name;
    return std::filesystem::path(path).stem().string();
}

std::vector<std::string> split_ids(const std::string& csv) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : csv) {
        if (ch == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DocumentError("$", "cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DocumentError("$", "cannot write file: " + path);
    out << text;
    if (!out) throw DocumentError("$", "cannot write file: " + path);
}

void emit(const DocumentReport& rep, const std::string& format) {
    std::cout << (format == "text" ? render_report_text(rep) : render_report_json(rep));
}

bool all_ok(const std::vector<CheckRun>& runs) {
    for (const CheckRun& run : runs)
        if (run.status == "fail") return false;
    return true;
}

int run_check_command(const std::string& file, const std::string& checks_csv, bool all_witnesses,
                      const std::string& format) {
    const WorkbenchDocument doc = parse_document_file(file);
    CheckOptions opt;
    if (all_witnesses) opt.witness_cap = -1;
    DocumentReport rep;
    rep.target = target_name(doc, file);
    rep.checks = run_checks(doc, split_ids(checks_csv), opt);
    emit(rep, format);
    return all_ok(rep.checks) ? 0 : 1;
}

int run_construct_command(const std::string& id, const std::vector<std::string>& files,
                          const std::string& out_path, bool all_witnesses,
                          const std::string& format) {
    std::vector<WorkbenchDocument> inputs;
    inputs.reserve(files.size());
    for (const std::string& f : files) inputs.push_back(parse_document_file(f));
    CheckOptions opt;
    if (all_witnesses) opt.witness_cap = -1;

    DocumentReport rep;
    rep.target = inputs.empty() ? id : target_name(inputs[0], files[0]);
    try {
        ConstructionResult res = run_construction(id, inputs, opt);
        rep.checks = res.post;
        rep.notes = res.notes;
        const bool ok = all_ok(res.post);
        ConstructionRef ref;
        ref.id = id;
        ref.name = res.output.name;
        ref.kind = kind_name(res.output.kind);
        ref.dim = document_dim(res.output);
        if (ok && !out_path.empty()) {
            write_file(out_path, serialize_document(res.output));
            ref.file = out_path;
        }
        rep.constructions.push_back(std::move(ref));
        emit(rep, format);
        return ok ? 0 : 1;
    } catch (const CheckFailure& e) {
        // Refused: surface the gate's report under the construction id.
        CheckRun run;
        run.id = id;
        run.status = "fail";
        run.report = e.report;
        run.report.ok = false;
        run.report.notes.push_back(e.what());
        rep.checks.push_back(std::move(run));
        emit(rep, format);
        return 1;
    }
}

int run_report_command(const std::string& file, const std::string& format) {
    const DocumentReport rep = parse_report_text(read_file(file));
    emit(rep, format);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic workbench for twisted algebraic structures"};
    app.require_subcommand(1);

    std::string check_file, check_ids, check_format = "json";
    bool check_all_witnesses = false;
    CLI::App* check_cmd = app.add_subcommand("check", "run axiom checks on a document");
    check_cmd->add_option("file", check_file, "JSON document to check")->required();
    check_cmd->add_option("--checks", check_ids, "comma-separated check ids (default: all applicable)");
    check_cmd->add_flag("--all-witnesses", check_all_witnesses, "lift the per-condition witness cap");
    check_cmd->add_option("--format", check_format, "report format")
        ->check(CLI::IsMember({"json", "text"}));

    std::string construct_id, construct_out, construct_format = "json";
    std::vector<std::string> construct_files;
    bool construct_all_witnesses = false;
    CLI::App* construct_cmd = app.add_subcommand("construct", "run a construction and verify its output");
    construct_cmd->add_option("id", construct_id, "construction id")->required();
    construct_cmd->add_option("files", construct_files, "input document(s)")
        ->required()
        ->expected(1, 2);
    construct_cmd->add_option("-o,--output", construct_out, "where to write the output document");
    construct_cmd->add_flag("--all-witnesses", construct_all_witnesses,
                            "lift the per-condition witness cap");
    construct_cmd->add_option("--format", construct_format, "report format")
        ->check(CLI::IsMember({"json", "text"}));

    std::string report_file, report_format = "text";
    CLI::App* report_cmd = app.add_subcommand("report", "re-render a stored JSON report");
    report_cmd->add_option("file", report_file, "report produced by check or construct")->required();
    report_cmd->add_option("--format", report_format, "output format")
        ->check(CLI::IsMember({"json", "text"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (check_cmd->parsed())
            return run_check_command(check_file, check_ids, check_all_witnesses, check_format);
        if (construct_cmd->parsed())
            return run_construct_command(construct_id, construct_files, construct_out,
                                         construct_all_witnesses, construct_format);
        return run_report_command(report_file, report_format);
    } catch (const DocumentError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DimensionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
