#include "workbench/dispatch.hpp"

#include "json_util.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace wb {

namespace {

using nlohmann::json;
using detail::scalar_json;

[[noreturn]] void fail(const std::string& msg) { throw DocumentError("$", msg); }

template <typename T> const T& payload(const WorkbenchDocument& doc) {
    return std::get<T>(doc.payload);
}

template <typename... Ts> bool holds_any(const WorkbenchDocument& doc) {
    return (std::holds_alternative<Ts>(doc.payload) || ...);
}

const OperatorData& op_payload(const WorkbenchDocument& doc) {
    return payload<OperatorData>(doc);
}

struct CheckEntry {
    const char* id;
    DocKind kind;
    bool (*applies)(const WorkbenchDocument&);
    CheckReport (*run)(const WorkbenchDocument&, const CheckOptions&);
};

// Fixed registry; execution and report order follow this table.
const CheckEntry kChecks[] = {
    {"hom_associative", DocKind::hom_algebra,
     [](const WorkbenchDocument&) { return true; },
     [](const WorkbenchDocument& d, const CheckOptions& o) {
         return check_hom_associative(payload<HomAlgebra>(d), o);
     }},
    {"multiplicative", DocKind::hom_algebra,
     [](const WorkbenchDocument&) { return true; },
     [](const WorkbenchDocument& d, const CheckOptions& o) {
         return check_multiplicative(payload<HomAlgebra>(d), o);
     }},
    {"bihom_associative", DocKind::bihom_algebra,
     [](const WorkbenchDocument&) { return true; },
     [](const WorkbenchDocument& d, const CheckOptions& o) {
         return check_bihom_associative(payload<BiHomAlgebra>(d), o);
     }},
    {"hom_dendriform", DocKind::hom_dendriform,
     [](const WorkbenchDocument&) { return true; },
     [](const WorkbenchDocument& d, const CheckOptions& o) {
         return check_hom_dendriform(payload<HomDendriform>(d), o);
     }},
    {"bihom_dendriform", DocKind::bihom_dendriform,
     [](const WorkbenchDocument&) { return true; },
     [](const WorkbenchDocument& d, const CheckOptions& o) {
         return check_bihom_dendriform(payload<BiHomDendriform>(d), o);
     }},
    {"bimodule", DocKind::bimodule,
     [](const WorkbenchDocument& d) { return holds_any<HomBimodule>(d); },
     [](const WorkbenchDocument& d, const CheckOptions& o) {
         return check_bimodule(payload<HomBimodule>(d), o);
     }},
    {"bihom_bimodule", DocKind::bimodule,
     [](const WorkbenchDocument& d) { return holds_any<BiHomBimodule>(d); },
     [](const WorkbenchDocument& d, const CheckOptions& o) {
         return check_bihom_bimodule(payload<BiHomBimodule>(d), o);
     }},
    {"dendriform_bimodule", DocKind::bimodule,
     [](const WorkbenchDocument& d) {
         return holds_any<HomDendriformBimodule, BiHomDendriformBimodule>(d);
     },
     [](const WorkbenchDocument& d, const CheckOptions& o) {
         if (holds_any<HomDendriformBimodule>(d))
             return check_dendriform_bimodule(payload<HomDendriformBimodule>(d), o);
         return check_dendriform_bimodule(payload<BiHomDendriformBimodule>(d), o);
     }},
    {"matched_pair", DocKind::matched_pair,
     [](const WorkbenchDocument& d) { return holds_any<HomMatchedPair>(d); },
     [](const WorkbenchDocument& d, const CheckOptions& o) {
         return check_matched_pair(payload<HomMatchedPair>(d), o);
     }},
    {"bihom_matched_pair", DocKind::matched_pair,
     [](const WorkbenchDocument& d) { return holds_any<BiHomMatchedPair>(d); },
     [](const WorkbenchDocument& d, const CheckOptions& o) {
         return check_bihom_matched_pair(payload<BiHomMatchedPair>(d), o);
     }},
    {"dendriform_matched_pair", DocKind::matched_pair,
     [](const WorkbenchDocument& d) {
         return holds_any<HomDendriformMatchedPair, BiHomDendriformMatchedPair>(d);
     },
     [](const WorkbenchDocument& d, const CheckOptions& o) {
         if (holds_any<HomDendriformMatchedPair>(d))
             return check_dendriform_matched_pair(payload<HomDendriformMatchedPair>(d), o);
         return check_dendriform_matched_pair(payload<BiHomDendriformMatchedPair>(d), o);
     }},
    {"hom_bialgebra", DocKind::bialgebra_data,
     [](const WorkbenchDocument& d) { return holds_any<HomBialgebraData>(d); },
     [](const WorkbenchDocument& d, const CheckOptions& o) {
         return check_hom_bialgebra(payload<HomBialgebraData>(d), o);
     }},
    {"hom_matched_criterion", DocKind::bialgebra_data,
     [](const WorkbenchDocument& d) { return holds_any<HomBialgebraData>(d); },
     [](const WorkbenchDocument& d, const CheckOptions& o) {
         return check_hom_matched_criterion(payload<HomBialgebraData>(d), o);
     }},
    {"bihom_bialgebra", DocKind::bialgebra_data,
     [](const WorkbenchDocument& d) { return holds_any<BiHomBialgebraData>(d); },
     [](const WorkbenchDocument& d, const CheckOptions& o) {
         return check_bihom_bialgebra(payload<BiHomBialgebraData>(d), o);
     }},
    {"bihom_matched_criterion", DocKind::bialgebra_data,
     [](const WorkbenchDocument& d) { return holds_any<BiHomBialgebraData>(d); },
     [](const WorkbenchDocument& d, const CheckOptions& o) {
         return check_bihom_matched_criterion(payload<BiHomBialgebraData>(d), o);
     }},
    {"dendriform_d_bialgebra", DocKind::bialgebra_data,
     [](const WorkbenchDocument& d) { return holds_any<DendriformBialgebraData>(d); },
     [](const WorkbenchDocument& d, const CheckOptions& o) {
         const auto& b = payload<DendriformBialgebraData>(d);
         return check_dendriform_d_bialgebra(b.dendriform, b.coprod_succ, b.coprod_prec, o);
     }},
    {"form", DocKind::form,
     [](const WorkbenchDocument& d) { return holds_any<HomBilinearForm>(d); },
     [](const WorkbenchDocument& d, const CheckOptions& o) {
         return check_form(payload<HomBilinearForm>(d), o);
     }},
    {"symplectic", DocKind::form,
     [](const WorkbenchDocument& d) { return holds_any<HomBilinearForm>(d); },
     [](const WorkbenchDocument& d, const CheckOptions& o) {
         const auto& f = payload<HomBilinearForm>(d);
         return check_symplectic(SymplecticHomAlgebra{f.algebra, f.gram}, o);
     }},
    {"alphabeta_invariant", DocKind::form,
     [](const WorkbenchDocument& d) { return holds_any<BiHomForm>(d); },
     [](const WorkbenchDocument& d, const CheckOptions& o) {
         const auto& f = payload<BiHomForm>(d);
         return check_alphabeta_invariant(f.algebra, f.gram, o);
     }},
    {"o_operator", DocKind::op,
     [](const WorkbenchDocument& d) { return op_payload(d).bimodule.has_value(); },
     [](const WorkbenchDocument& d, const CheckOptions& o) {
         const auto& op = op_payload(d);
         if (std::holds_alternative<HomBimodule>(*op.bimodule))
             return check_o_operator(HomOOperator{std::get<HomBimodule>(*op.bimodule), op.map},
                                     o);
         return check_o_operator(BiHomOOperator{std::get<BiHomBimodule>(*op.bimodule), op.map},
                                 o);
     }},
    {"rota_baxter", DocKind::op,
     [](const WorkbenchDocument& d) { return op_payload(d).algebra.has_value(); },
     [](const WorkbenchDocument& d, const CheckOptions& o) {
         const auto& op = op_payload(d);
         if (std::holds_alternative<HomAlgebra>(*op.algebra))
             return check_rota_baxter(std::get<HomAlgebra>(*op.algebra), op.map, o);
         return check_rota_baxter(std::get<BiHomAlgebra>(*op.algebra), op.map, o);
     }},
};

const char* kConstructionIds[] = {
    "yau_twist",
    "semidirect_sum",
    "bihom_semidirect_sum",
    "bicrossed_sum",
    "bihom_bicrossed_sum",
    "dendriform_bicrossed_sum",
    "frobenius_double",
    "bihom_frobenius_double",
    "associated_algebra",
    "dendriform_from_rota_baxter",
    "dendriform_from_o_operator",
    "dendriform_from_symplectic",
    "symplectic_double",
};

template <typename Fn> CheckRun run_adhoc(const char* id, Fn&& fn) {
    CheckRun run;
    run.id = id;
    try {
        run.report = fn();
        run.status = run.report.ok ? "ok" : "fail";
    } catch (const CheckFailure& e) {
        run.report = e.report;
        run.status = "fail";
        run.report.ok = false;
        run.report.notes.push_back(e.what());
    }
    return run;
}

CheckRun execute_entry(const CheckEntry& entry, const WorkbenchDocument& doc,
                       const CheckOptions& opt) {
    return run_adhoc(entry.id, [&] { return entry.run(doc, opt); });
}

WorkbenchDocument make_output(DocKind kind, DocPayload p, const std::string& base,
                              const std::string& id) {
    WorkbenchDocument doc;
    doc.kind = kind;
    doc.name = base.empty() ? id : base + "." + id;
    doc.payload = std::move(p);
    return doc;
}

void require_kind(const WorkbenchDocument& doc, DocKind kind, const std::string& id,
                  const char* what) {
    if (doc.kind != kind)
        fail("construction \"" + id + "\" expects a " + std::string(kind_name(kind)) +
             " document for its " + what);
}

std::vector<CheckRun> post_checks(const WorkbenchDocument& out,
                                  const std::vector<std::string>& ids, const CheckOptions& opt) {
    return run_checks(out, ids, opt);
}

// -- report rendering --------------------------------------------------------

json witness_json(const Witness& w) {
    json j;
    json idx = json::array();
    for (int i : w.indices) idx.push_back(i + 1);
    j["indices"] = std::move(idx);
    json res = json::array();
    for (const Scalar& s : w.residual) res.push_back(scalar_json(s));
    j["residual"] = std::move(res);
    return j;
}

json condition_json(const ConditionResult& c) {
    json j;
    j["id"] = c.id;
    j["ok"] = c.ok;
    j["violations"] = c.violations;
    json ws = json::array();
    for (const Witness& w : c.witnesses) ws.push_back(witness_json(w));
    j["witnesses"] = std::move(ws);
    return j;
}

json check_run_json(const CheckRun& run) {
    json j;
    j["check"] = run.id;
    j["status"] = run.status;
    json conds = json::array();
    for (const ConditionResult& c : run.report.conditions) conds.push_back(condition_json(c));
    j["conditions"] = std::move(conds);
    j["notes"] = run.report.notes;
    return j;
}

json construction_json(const ConstructionRef& ref) {
    json j;
    j["id"] = ref.id;
    j["name"] = ref.name;
    j["kind"] = ref.kind;
    j["dim"] = ref.dim;
    if (!ref.file.empty()) j["file"] = ref.file;
    return j;
}

std::string indices_text(const std::vector<int>& indices) {
    std::string out = "(";
    for (std::size_t i = 0; i < indices.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(indices[i] + 1);
    }
    return out + ")";
}

std::string residual_text(const Vec& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += scalar_to_string(v[i]);
    }
    return out + "]";
}

// -- report parsing (inverse of render_report_json) ---------------------------

[[noreturn]] void bad_report(const std::string& why) {
    throw DocumentError("$", "not a report document: " + why);
}

const json& report_field(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) bad_report(std::string("missing field \"") + key + "\"");
    return *it;
}

Scalar report_scalar(const json& v) {
    if (v.is_number_integer() && !v.is_number_unsigned()) return Scalar(Int(v.get<std::int64_t>()));
    if (v.is_number_unsigned()) return Scalar(Int(v.get<std::uint64_t>()));
    if (v.is_string()) {
        if (auto s = parse_scalar(v.get<std::string>())) return *s;
    }
    bad_report("non-rational scalar " + v.dump());
}

} // namespace

std::vector<std::string> all_check_ids() {
    std::vector<std::string> out;
    for (const CheckEntry& e : kChecks) out.push_back(e.id);
    return out;
}

std::vector<std::string> construction_ids() {
    return {std::begin(kConstructionIds), std::end(kConstructionIds)};
}

std::vector<std::string> applicable_check_ids(const WorkbenchDocument& doc) {
    std::vector<std::string> out;
    for (const CheckEntry& e : kChecks)
        if (e.kind == doc.kind && e.applies(doc)) out.push_back(e.id);
    return out;
}

std::vector<CheckRun> run_checks(const WorkbenchDocument& doc, const std::vector<std::string>& ids,
                                 const CheckOptions& opt) {
    std::set<std::string> requested;
    for (const std::string& id : ids) {
        const auto* entry =
            std::find_if(std::begin(kChecks), std::end(kChecks),
                         [&](const CheckEntry& e) { return id == e.id; });
        if (entry == std::end(kChecks)) fail("unknown check id \"" + id + "\"");
        if (entry->kind != doc.kind)
            fail("inapplicable check id \"" + id + "\" for kind \"" +
                 kind_name(doc.kind) + "\"");
        requested.insert(id);
    }

    std::vector<CheckRun> out;
    for (const CheckEntry& e : kChecks) {
        if (e.kind != doc.kind) continue;
        const bool explicit_request = requested.count(e.id) > 0;
        if (!ids.empty() && !explicit_request) continue;
        if (!e.applies(doc)) {
            // Reachable only for explicit requests: the kind hosts this check
            // but the document's flavor does not carry the needed pieces.
            if (explicit_request) out.push_back(CheckRun{e.id, "skipped", {}});
            continue;
        }
        out.push_back(execute_entry(e, doc, opt));
    }
    return out;
}

ConstructionResult run_construction(const std::string& id,
                                    const std::vector<WorkbenchDocument>& inputs,
                                    const CheckOptions& opt) {
    const auto known = construction_ids();
    if (std::find(known.begin(), known.end(), id) == known.end())
        fail("unknown construction id \"" + id + "\"");

    const std::size_t arity = (id == "yau_twist" || id == "symplectic_double") ? 2 : 1;
    if (inputs.size() != arity)
        fail("construction \"" + id + "\" expects " + std::to_string(arity) +
             " input document(s), got " + std::to_string(inputs.size()));

    const std::string& base = inputs[0].name;
    ConstructionResult res;

    if (id == "yau_twist") {
        require_kind(inputs[0], DocKind::hom_algebra, id, "first input");
        require_kind(inputs[1], DocKind::op, id, "second input (the twisting map)");
        const auto& a = payload<HomAlgebra>(inputs[0]);
        const Mat& beta = op_payload(inputs[1]).map;
        res.output = make_output(DocKind::hom_algebra, yau_twist(a, beta), base, id);
        res.post = post_checks(res.output, {"hom_associative", "multiplicative"}, opt);
    } else if (id == "semidirect_sum") {
        require_kind(inputs[0], DocKind::bimodule, id, "input");
        if (!holds_any<HomBimodule>(inputs[0]))
            fail("construction \"semidirect_sum\" needs the plain single-twist bimodule "
                 "flavor; see bihom_semidirect_sum");
        res.output = make_output(DocKind::hom_algebra,
                                 semidirect_sum(payload<HomBimodule>(inputs[0]), opt), base, id);
        res.post = post_checks(res.output, {"hom_associative"}, opt);
    } else if (id == "bihom_semidirect_sum") {
        require_kind(inputs[0], DocKind::bimodule, id, "input");
        if (!holds_any<BiHomBimodule>(inputs[0]))
            fail("construction \"bihom_semidirect_sum\" needs the two-twist bimodule flavor");
        res.output =
            make_output(DocKind::bihom_algebra,
                        bihom_semidirect_sum(payload<BiHomBimodule>(inputs[0]), opt), base, id);
        res.post = post_checks(res.output, {"bihom_associative"}, opt);
    } else if (id == "bicrossed_sum") {
        require_kind(inputs[0], DocKind::matched_pair, id, "input");
        if (!holds_any<HomMatchedPair>(inputs[0]))
            fail("construction \"bicrossed_sum\" needs the plain single-twist matched pair "
                 "flavor; see bihom_bicrossed_sum and dendriform_bicrossed_sum");
        res.output = make_output(DocKind::hom_algebra,
                                 bicrossed_sum(payload<HomMatchedPair>(inputs[0]), opt), base, id);
        res.post = post_checks(res.output, {"hom_associative"}, opt);
    } else if (id == "bihom_bicrossed_sum") {
        require_kind(inputs[0], DocKind::matched_pair, id, "input");
        if (!holds_any<BiHomMatchedPair>(inputs[0]))
            fail("construction \"bihom_bicrossed_sum\" needs the two-twist matched pair flavor");
        res.output =
            make_output(DocKind::bihom_algebra,
                        bihom_bicrossed_sum(payload<BiHomMatchedPair>(inputs[0]), opt), base, id);
        res.post = post_checks(res.output, {"bihom_associative"}, opt);
    } else if (id == "dendriform_bicrossed_sum") {
        require_kind(inputs[0], DocKind::matched_pair, id, "input");
        if (holds_any<HomDendriformMatchedPair>(inputs[0])) {
            res.output = make_output(
                DocKind::hom_dendriform,
                dendriform_bicrossed_sum(payload<HomDendriformMatchedPair>(inputs[0]), opt), base,
                id);
            res.post = post_checks(res.output, {"hom_dendriform"}, opt);
        } else if (holds_any<BiHomDendriformMatchedPair>(inputs[0])) {
            res.output = make_output(
                DocKind::bihom_dendriform,
                dendriform_bicrossed_sum(payload<BiHomDendriformMatchedPair>(inputs[0]), opt),
                base, id);
            res.post = post_checks(res.output, {"bihom_dendriform"}, opt);
        } else {
            fail("construction \"dendriform_bicrossed_sum\" needs a dendriform matched pair");
        }
    } else if (id == "frobenius_double") {
        require_kind(inputs[0], DocKind::bialgebra_data, id, "input");
        if (!holds_any<HomBialgebraData>(inputs[0]))
            fail("construction \"frobenius_double\" needs single-twist bialgebra data; see "
                 "bihom_frobenius_double");
        const FrobeniusDouble dbl =
            double_construct_frobenius(payload<HomBialgebraData>(inputs[0]), opt);
        res.output = make_output(DocKind::form, HomBilinearForm{dbl.total, dbl.gram}, base, id);
        // The total is an algebra riding inside a form document, so its
        // associativity check runs directly rather than through the registry.
        res.post.push_back(run_adhoc("hom_associative",
                                     [&] { return check_hom_associative(dbl.total, opt); }));
        for (CheckRun& run : post_checks(res.output, {"form"}, opt))
            res.post.push_back(std::move(run));
    } else if (id == "bihom_frobenius_double") {
        require_kind(inputs[0], DocKind::bialgebra_data, id, "input");
        if (!holds_any<BiHomBialgebraData>(inputs[0]))
            fail("construction \"bihom_frobenius_double\" needs two-twist bialgebra data");
        const BiHomFrobeniusDouble dbl =
            double_construct_bihom_frobenius(payload<BiHomBialgebraData>(inputs[0]), opt);
        res.output = make_output(DocKind::form, BiHomForm{dbl.total, dbl.gram}, base, id);
        res.post.push_back(run_adhoc("bihom_associative",
                                     [&] { return check_bihom_associative(dbl.total, opt); }));
        for (CheckRun& run : post_checks(res.output, {"alphabeta_invariant"}, opt))
            res.post.push_back(std::move(run));
    } else if (id == "associated_algebra") {
        if (inputs[0].kind == DocKind::hom_dendriform) {
            res.output =
                make_output(DocKind::hom_algebra,
                            associated_algebra(payload<HomDendriform>(inputs[0]), opt), base, id);
            res.post = post_checks(res.output, {"hom_associative"}, opt);
        } else if (inputs[0].kind == DocKind::bihom_dendriform) {
            res.output = make_output(DocKind::bihom_algebra,
                                     associated_algebra(payload<BiHomDendriform>(inputs[0]), opt),
                                     base, id);
            res.post = post_checks(res.output, {"bihom_associative"}, opt);
        } else {
            fail("construction \"associated_algebra\" expects a hom_dendriform or "
                 "bihom_dendriform document");
        }
    } else if (id == "dendriform_from_rota_baxter") {
        require_kind(inputs[0], DocKind::op, id, "input");
        const auto& op = op_payload(inputs[0]);
        if (!op.algebra)
            fail("construction \"dendriform_from_rota_baxter\" needs an operator document "
                 "with an algebra carrier");
        if (std::holds_alternative<HomAlgebra>(*op.algebra)) {
            res.output = make_output(
                DocKind::hom_dendriform,
                dendriform_from_rota_baxter(std::get<HomAlgebra>(*op.algebra), op.map, opt), base,
                id);
            res.post = post_checks(res.output, {"hom_dendriform"}, opt);
        } else {
            res.output = make_output(
                DocKind::bihom_dendriform,
                dendriform_from_rota_baxter(std::get<BiHomAlgebra>(*op.algebra), op.map, opt),
                base, id);
            res.post = post_checks(res.output, {"bihom_dendriform"}, opt);
        }
    } else if (id == "dendriform_from_o_operator") {
        require_kind(inputs[0], DocKind::op, id, "input");
        const auto& op = op_payload(inputs[0]);
        if (!op.bimodule)
            fail("construction \"dendriform_from_o_operator\" needs an operator document "
                 "with a bimodule carrier");
        if (std::holds_alternative<HomBimodule>(*op.bimodule)) {
            res.output = make_output(
                DocKind::hom_dendriform,
                dendriform_from_o_operator(
                    HomOOperator{std::get<HomBimodule>(*op.bimodule), op.map}, opt),
                base, id);
            res.post = post_checks(res.output, {"hom_dendriform"}, opt);
        } else {
            res.output = make_output(
                DocKind::bihom_dendriform,
                dendriform_from_o_operator(
                    BiHomOOperator{std::get<BiHomBimodule>(*op.bimodule), op.map}, opt),
                base, id);
            res.post = post_checks(res.output, {"bihom_dendriform"}, opt);
        }
    } else if (id == "dendriform_from_symplectic") {
        require_kind(inputs[0], DocKind::form, id, "input");
        if (!holds_any<HomBilinearForm>(inputs[0]))
            fail("construction \"dendriform_from_symplectic\" needs a single-twist form");
        const auto& f = payload<HomBilinearForm>(inputs[0]);
        res.output = make_output(
            DocKind::hom_dendriform,
            dendriform_from_symplectic(SymplecticHomAlgebra{f.algebra, f.gram}, opt), base, id);
        res.post = post_checks(res.output, {"hom_dendriform"}, opt);
        res.notes.push_back(kSymplecticConventionNote);
    } else { // symplectic_double
        require_kind(inputs[0], DocKind::hom_dendriform, id, "first input");
        require_kind(inputs[1], DocKind::hom_dendriform, id, "second input (the dual side)");
        const SymplecticDouble dbl = symplectic_double(payload<HomDendriform>(inputs[0]),
                                                       payload<HomDendriform>(inputs[1]), opt);
        res.output = make_output(DocKind::form, HomBilinearForm{dbl.total, dbl.omega}, base, id);
        res.post.push_back(run_adhoc("hom_associative",
                                     [&] { return check_hom_associative(dbl.total, opt); }));
        for (CheckRun& run : post_checks(res.output, {"symplectic"}, opt))
            res.post.push_back(std::move(run));
        res.notes.push_back(kSymplecticConventionNote);
    }

    return res;
}

std::string render_report_json(const DocumentReport& report) {
    json j;
    j["target"] = report.target;
    json checks = json::array();
    for (const CheckRun& run : report.checks) checks.push_back(check_run_json(run));
    j["checks"] = std::move(checks);
    json cons = json::array();
    for (const ConstructionRef& ref : report.constructions) cons.push_back(construction_json(ref));
    j["constructions"] = std::move(cons);
    j["notes"] = report.notes;
    return detail::dump_canonical(j);
}

std::string render_report_text(const DocumentReport& report) {
    std::ostringstream out;
    out << "target: " << report.target << "\n";
    for (const CheckRun& run : report.checks) {
        if (run.status == "skipped") {
            out << "check " << run.id << ": skipped (flavor does not apply)\n";
            continue;
        }
        out << "check " << run.id << ": " << (run.status == "ok" ? "ok" : "FAIL") << "\n";
        for (const ConditionResult& c : run.report.conditions) {
            if (c.ok) continue;
            out << "  condition " << c.id << ": " << c.violations << " violation"
                << (c.violations == 1 ? "" : "s") << " (showing " << c.witnesses.size() << ")\n";
            for (const Witness& w : c.witnesses)
                out << "    witness " << indices_text(w.indices) << ": residual "
                    << residual_text(w.residual) << "\n";
        }
        for (const std::string& note : run.report.notes) out << "  note: " << note << "\n";
    }
    for (const ConstructionRef& ref : report.constructions) {
        out << "construction " << ref.id << ": " << ref.name << " (kind " << ref.kind << ", dim "
            << ref.dim << ")";
        if (!ref.file.empty()) out << " -> " << ref.file;
        out << "\n";
    }
    for (const std::string& note : report.notes) out << "note: " << note << "\n";
    return out.str();
}

DocumentReport parse_report_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        std::string msg = e.what();
        const auto pos = msg.find("] ");
        if (pos != std::string::npos) msg = msg.substr(pos + 2);
        throw DocumentError("$", msg);
    }
    if (!j.is_object()) bad_report("expected an object");

    DocumentReport report;
    const json& target = report_field(j, "target");
    if (!target.is_string()) bad_report("target must be a string");
    report.target = target.get<std::string>();

    for (const json& cj : report_field(j, "checks")) {
        CheckRun run;
        run.id = report_field(cj, "check").get<std::string>();
        run.status = report_field(cj, "status").get<std::string>();
        if (run.status != "ok" && run.status != "fail" && run.status != "skipped")
            bad_report("unknown status \"" + run.status + "\"");
        run.report.check_id = run.id;
        run.report.ok = run.status != "fail";
        for (const json& condj : report_field(cj, "conditions")) {
            ConditionResult c;
            c.id = report_field(condj, "id").get<std::string>();
            c.ok = report_field(condj, "ok").get<bool>();
            c.violations = report_field(condj, "violations").get<long>();
            for (const json& wj : report_field(condj, "witnesses")) {
                Witness w;
                for (const json& idx : report_field(wj, "indices"))
                    w.indices.push_back(idx.get<int>() - 1);
                for (const json& r : report_field(wj, "residual"))
                    w.residual.push_back(report_scalar(r));
                c.witnesses.push_back(std::move(w));
            }
            run.report.conditions.push_back(std::move(c));
        }
        for (const json& note : report_field(cj, "notes"))
            run.report.notes.push_back(note.get<std::string>());
        report.checks.push_back(std::move(run));
    }

    for (const json& rj : report_field(j, "constructions")) {
        ConstructionRef ref;
        ref.id = report_field(rj, "id").get<std::string>();
        ref.name = report_field(rj, "name").get<std::string>();
        ref.kind = report_field(rj, "kind").get<std::string>();
        ref.dim = report_field(rj, "dim").get<int>();
        if (auto it = rj.find("file"); it != rj.end()) ref.file = it->get<std::string>();
        report.constructions.push_back(std::move(ref));
    }

    for (const json& note : report_field(j, "notes"))
        report.notes.push_back(note.get<std::string>());

    return report;
}

} // namespace wb
