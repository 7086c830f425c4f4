// Command line front end: model validation, index/fingerprint computation,
// and the three enumeration modes. Exit codes: 0 success, 1 validation
// failure, 2 parse error, 3 I/O error, 4 search budget exhausted.

#include <fstream>
#include <iostream>
#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "equifix/bundle_expr.hpp"
#include "equifix/ci.hpp"
#include "equifix/document.hpp"
#include "equifix/finiteness.hpp"
#include "equifix/hcp.hpp"
#include "equifix/localization.hpp"
#include "equifix/model.hpp"
#include "equifix/su2.hpp"

namespace {

using nlohmann::ordered_json;
using namespace equifix;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitParse = 2;
constexpr int kExitIo = 3;
constexpr int kExitBudget = 4;

constexpr int kSchemaVersion = 1;
constexpr const char* kEmptyReason = "no S3 tangent representation without zero weights";

bool read_file(const std::string& path, std::string& out) {
    std::ifstream f(path, std::ios::binary);
    if (!f)
        return false;
    std::ostringstream ss;
    ss << f.rdbuf();
    if (f.bad())
        return false;
    out = ss.str();
    return true;
}

std::string format_int_list(const std::vector<long>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(v[i]);
    }
    return s + "]";
}

std::string format_point(const FixedPoint& p) {
    std::string s = "m=" + format_int_list(p.m) + " eps=" + std::to_string(p.eps) +
                    " a=" + format_int_list(p.a);
    if (p.s3_fixed)
        s += " s3";
    return s;
}

std::string format_points(const std::vector<FixedPoint>& pts) {
    std::string s = "[";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i)
            s += "; ";
        s += format_point(pts[i]);
    }
    return s + "]";
}

ordered_json json_point(const FixedPoint& p) {
    ordered_json j;
    j["m"] = p.m;
    j["eps"] = p.eps;
    j["a"] = p.a;
    j["s3_fixed"] = p.s3_fixed;
    return j;
}

ordered_json json_points(const std::vector<FixedPoint>& pts) {
    ordered_json arr = ordered_json::array();
    for (const auto& p : pts)
        arr.push_back(json_point(p));
    return arr;
}

ordered_json json_fingerprint(const Fingerprint& fp) {
    ordered_json j = ordered_json::object();
    for (const auto& [mono, value] : fp)
        j[mono.to_string()] = value.to_string();
    return j;
}

std::string format_fingerprint(const Fingerprint& fp) {
    std::string s = "{";
    bool first = true;
    for (const auto& [mono, value] : fp) {
        if (!first)
            s += " ";
        first = false;
        s += mono.to_string() + "=" + value.to_string();
    }
    return s + "}";
}

void print_violations(const std::vector<Violation>& violations) {
    for (const auto& v : violations) {
        std::cout << "violation ";
        if (v.point)
            std::cout << "[point " << *v.point << "] ";
        else
            std::cout << "[model] ";
        std::cout << v.constraint;
        if (!v.detail.empty())
            std::cout << ": " << v.detail;
        std::cout << "\n";
    }
}

ordered_json json_violations(const std::vector<Violation>& violations) {
    ordered_json arr = ordered_json::array();
    for (const auto& v : violations) {
        ordered_json j;
        if (v.point)
            j["point"] = *v.point;
        j["constraint"] = v.constraint;
        j["detail"] = v.detail;
        arr.push_back(std::move(j));
    }
    return arr;
}

// Shared ingestion: read + parse, or report and return the failing exit code.
int load_model(const std::string& path, std::optional<FixedPointModel>& out) {
    std::string text;
    if (!read_file(path, text)) {
        std::cerr << "error: cannot read " << path << "\n";
        return kExitIo;
    }
    try {
        out.emplace(parse_model_document(text));
    } catch (const document_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    }
    return kExitOk;
}

int cmd_validate(const std::string& path, bool force_eq1, bool no_eq1, bool require_s3,
                 const std::string& format) {
    std::optional<FixedPointModel> model;
    if (int rc = load_model(path, model); rc != kExitOk)
        return rc;
    // The square-sum constancy identity is a consequence of the S3
    // hypothesis, so by default it is enforced exactly when the document
    // declares an S3-fixed point; --eq1/--no-eq1 force it either way.
    bool has_s3 = std::any_of(model->points().begin(), model->points().end(),
                              [](const FixedPoint& p) { return p.s3_fixed; });
    ValidationOptions opts;
    opts.check_eq1 = force_eq1 || (!no_eq1 && has_s3);
    opts.require_s3_point = require_s3;
    auto violations = validate(*model, opts);
    if (format == "json") {
        ordered_json j;
        j["schema_version"] = kSchemaVersion;
        j["command"] = "validate";
        j["ok"] = violations.empty();
        j["violations"] = json_violations(violations);
        std::cout << j.dump(2) << "\n";
    } else {
        print_violations(violations);
        if (violations.empty())
            std::cout << "ok\n";
    }
    return violations.empty() ? kExitOk : kExitValidation;
}

int cmd_index(const std::string& path, const std::string& twist, const std::string& format) {
    std::optional<FixedPointModel> model;
    if (int rc = load_model(path, model); rc != kExitOk)
        return rc;
    auto violations = validate(*model, ValidationOptions{false, false});
    if (!violations.empty()) {
        print_violations(violations);
        return kExitValidation;
    }
    BundleExpr expr = BundleExpr::one(model->k());
    try {
        expr = BundleExpr::parse(twist, model->k());
    } catch (const expr_parse_error& e) {
        std::cerr << "parse error: twist expression, position " << e.pos << ": " << e.what()
                  << "\n";
        return kExitParse;
    }

    RatFn index = equivariant_twisted_signature(*model, expr);
    auto constant = index.is_constant();
    std::string limit;
    bool pole = false;
    try {
        limit = index.limit_at_one().to_string();
    } catch (const pole_error& e) {
        limit = e.what();
        pole = true;
    }
    Rat cohom = cohom_twisted_signature(*model, expr);

    if (format == "json") {
        ordered_json j;
        j["schema_version"] = kSchemaVersion;
        j["command"] = "index";
        j["twist"] = expr.to_string();
        j["index"] = index.to_string();
        if (constant)
            j["constant"] = constant->to_string();
        if (pole)
            j["pole_at_1"] = limit;
        else
            j["limit_at_1"] = limit;
        j["cohomological_check"] = cohom.to_string();
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "schema_version " << kSchemaVersion << "\n";
        std::cout << "twist " << expr.to_string() << "\n";
        std::cout << "index " << index.to_string() << "\n";
        if (constant)
            std::cout << "constant " << constant->to_string() << "\n";
        else
            std::cout << "nonconstant\n";
        if (pole)
            std::cout << "limit_at_1 pole: " << limit << "\n";
        else
            std::cout << "limit_at_1 " << limit << "\n";
        std::cout << "cohomological_check " << cohom.to_string() << "\n";
    }
    return kExitOk;
}

int cmd_fingerprint(const std::string& path, const std::string& format) {
    std::optional<FixedPointModel> model;
    if (int rc = load_model(path, model); rc != kExitOk)
        return rc;
    auto violations = validate(*model, ValidationOptions{false, false});
    if (!violations.empty()) {
        print_violations(violations);
        return kExitValidation;
    }
    Fingerprint fp = bordism_fingerprint(*model);
    if (format == "json") {
        ordered_json j;
        j["schema_version"] = kSchemaVersion;
        j["command"] = "fingerprint";
        j["fingerprint"] = json_fingerprint(fp);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "schema_version " << kSchemaVersion << "\n";
        std::cout << "entries " << fp.size() << "\n";
        for (const auto& [mono, value] : fp)
            std::cout << mono.to_string() << " " << value.to_string() << "\n";
    }
    return kExitOk;
}

int enumerate_general(long n, long C, long k, long N, long long max_branches,
                      const std::string& format) {
    SearchBudget budget(max_branches);
    auto result = enumerate_admissible_models(n, C, k, N, budget);

    std::vector<Fingerprint> fingerprints;
    fingerprints.reserve(result.items.size());
    for (const auto& model : result.items)
        fingerprints.push_back(bordism_fingerprint(model));
    auto [kept, rejected] = integrality_filter(result.items);
    auto groups = fingerprint_partition(result.items);

    bool empty_by_parity = enumerate_isolated_tangent_sets(n).empty();

    if (format == "json") {
        ordered_json j;
        j["schema_version"] = kSchemaVersion;
        j["command"] = "enumerate";
        j["mode"] = "general";
        j["params"] = {{"n", n}, {"C", C}, {"k", k}, {"N", N}};
        j["budget"] = {{"limit", budget.limit()}, {"used", budget.used()}};
        j["partial"] = !result.complete;
        if (empty_by_parity)
            j["reason"] = kEmptyReason;
        ordered_json models = ordered_json::array();
        for (std::size_t i = 0; i < result.items.size(); ++i) {
            ordered_json m;
            m["points"] = json_points(result.items[i].points());
            m["fingerprint"] = json_fingerprint(fingerprints[i]);
            models.push_back(std::move(m));
        }
        j["models"] = std::move(models);
        j["integrality"] = {{"kept", kept.size()}, {"rejected", rejected.size()}};
        ordered_json groups_json = ordered_json::array();
        for (const auto& group : groups) {
            ordered_json g;
            g["fingerprint"] = json_fingerprint(bordism_fingerprint(group.front()));
            g["size"] = group.size();
            groups_json.push_back(std::move(g));
        }
        j["groups"] = std::move(groups_json);
        j["group_count"] = groups.size();
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "schema_version " << kSchemaVersion << "\n";
        std::cout << "mode general\n";
        std::cout << "n " << n << "\nC " << C << "\nk " << k << "\nN " << N << "\n";
        std::cout << "budget_limit " << budget.limit() << "\n";
        std::cout << "budget_used " << budget.used() << "\n";
        std::cout << "partial " << (result.complete ? "false" : "true") << "\n";
        if (empty_by_parity)
            std::cout << "reason " << kEmptyReason << "\n";
        std::cout << "models " << result.items.size() << "\n";
        for (std::size_t i = 0; i < result.items.size(); ++i)
            std::cout << "model " << i + 1 << " chi=" << result.items[i].points().size()
                      << " points=" << format_points(result.items[i].points())
                      << " fingerprint=" << format_fingerprint(fingerprints[i]) << "\n";
        std::cout << "integrality_kept " << kept.size() << "\n";
        std::cout << "integrality_rejected " << rejected.size() << "\n";
        std::cout << "groups " << groups.size() << "\n";
        for (std::size_t i = 0; i < groups.size(); ++i)
            std::cout << "group " << i + 1 << " size=" << groups[i].size() << " fingerprint="
                      << format_fingerprint(bordism_fingerprint(groups[i].front())) << "\n";
    }
    return result.complete ? kExitOk : kExitBudget;
}

int enumerate_hcp(long n, long long max_branches, const std::string& format) {
    SearchBudget budget(max_branches);
    auto result = enumerate_hcp_models(n, budget);
    bool empty_by_parity = enumerate_isolated_tangent_sets(n).empty();

    if (format == "json") {
        ordered_json j;
        j["schema_version"] = kSchemaVersion;
        j["command"] = "enumerate";
        j["mode"] = "hcp";
        j["params"] = {{"n", n}};
        j["budget"] = {{"limit", budget.limit()}, {"used", budget.used()}};
        j["partial"] = !result.complete;
        if (empty_by_parity)
            j["reason"] = kEmptyReason;
        ordered_json arr = ordered_json::array();
        for (const auto& cand : result.items) {
            ordered_json c;
            c["points"] = json_points(cand.model.points());
            ordered_json coeffs = ordered_json::object();
            for (std::size_t i = 0; i < cand.pontryagin_coeffs.size(); ++i)
                coeffs["p" + std::to_string(i + 1)] = cand.pontryagin_coeffs[i].to_string();
            c["pontryagin"] = std::move(coeffs);
            arr.push_back(std::move(c));
        }
        j["candidates"] = std::move(arr);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "schema_version " << kSchemaVersion << "\n";
        std::cout << "mode hcp\n";
        std::cout << "n " << n << "\n";
        std::cout << "budget_limit " << budget.limit() << "\n";
        std::cout << "budget_used " << budget.used() << "\n";
        std::cout << "partial " << (result.complete ? "false" : "true") << "\n";
        if (empty_by_parity)
            std::cout << "reason " << kEmptyReason << "\n";
        std::cout << "candidates " << result.items.size() << "\n";
        for (std::size_t i = 0; i < result.items.size(); ++i) {
            std::cout << "candidate " << i + 1
                      << " points=" << format_points(result.items[i].model.points());
            for (std::size_t j = 0; j < result.items[i].pontryagin_coeffs.size(); ++j)
                std::cout << " p" << j + 1 << "="
                          << result.items[i].pontryagin_coeffs[j].to_string();
            std::cout << "\n";
        }
    }
    return result.complete ? kExitOk : kExitBudget;
}

int enumerate_ci(long n, const std::string& format) {
    auto scan = scan_non_semi_negative(n);
    auto tangent_sets = enumerate_isolated_tangent_sets(n);

    if (format == "json") {
        ordered_json j;
        j["schema_version"] = kSchemaVersion;
        j["command"] = "enumerate";
        j["mode"] = "ci";
        j["params"] = {{"n", n}};
        ordered_json scan_json = ordered_json::array();
        for (const auto& degrees : scan)
            scan_json.push_back(degrees);
        j["non_semi_negative"] = std::move(scan_json);
        ordered_json ts = ordered_json::array();
        for (const auto& w : tangent_sets) {
            ordered_json t;
            t["m"] = w.m;
            t["eps"] = w.eps;
            ts.push_back(std::move(t));
        }
        j["s3_tangent_sets"] = std::move(ts);
        if (tangent_sets.empty())
            j["reason"] = kEmptyReason;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "schema_version " << kSchemaVersion << "\n";
        std::cout << "mode ci\n";
        std::cout << "n " << n << "\n";
        std::cout << "non_semi_negative " << scan.size() << "\n";
        for (const auto& degrees : scan) {
            std::cout << "  (";
            for (std::size_t i = 0; i < degrees.size(); ++i) {
                if (i)
                    std::cout << ",";
                std::cout << degrees[i];
            }
            std::cout << ")\n";
        }
        std::cout << "s3_tangent_sets " << tangent_sets.size() << "\n";
        for (const auto& w : tangent_sets)
            std::cout << "  m=" << format_int_list(w.m) << " eps=" << w.eps << "\n";
        if (tangent_sets.empty())
            std::cout << "reason " << kEmptyReason << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact fixed-point indices, characteristic numbers, and "
                 "desk-scale enumeration of admissible local circle/S3 geometries"};
    app.require_subcommand(1);

    std::string path;
    std::string twist = "1";
    std::string mode;
    std::string format = "text";
    bool force_eq1 = false;
    bool no_eq1 = false;
    bool require_s3 = false;
    long n = 0, C = 1, k = 0, N = 1;
    long long max_branches = 10'000'000;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "json"}))
            ->capture_default_str();
    };

    CLI::App* validate_cmd =
        app.add_subcommand("validate", "check a model document against the constraints");
    validate_cmd->add_option("file", path, "model document")->required();
    validate_cmd->add_flag("--eq1", force_eq1, "check square-sum constancy even without S3 points");
    validate_cmd->add_flag("--no-eq1", no_eq1, "skip the square-sum constancy check");
    validate_cmd->add_flag("--require-s3", require_s3, "require at least one S3-fixed point");
    add_format(validate_cmd);

    CLI::App* index_cmd = app.add_subcommand(
        "index", "equivariant twisted signature as an exact rational function");
    index_cmd->add_option("file", path, "model document")->required();
    index_cmd->add_option("--twist", twist, "bundle expression in L1..Lk and T")
        ->capture_default_str();
    add_format(index_cmd);

    CLI::App* fingerprint_cmd = app.add_subcommand(
        "fingerprint", "top-degree characteristic numbers of a model");
    fingerprint_cmd->add_option("file", path, "model document")->required();
    add_format(fingerprint_cmd);

    CLI::App* enumerate_cmd =
        app.add_subcommand("enumerate", "run one of the bounded enumeration modes");
    enumerate_cmd->add_option("--mode", mode, "general | hcp | ci")
        ->required()
        ->check(CLI::IsMember({"general", "hcp", "ci"}));
    enumerate_cmd->add_option("--n", n, "half dimension")->required();
    enumerate_cmd->add_option("--C", C, "Euler characteristic bound (general mode)")
        ->capture_default_str();
    enumerate_cmd->add_option("--k", k, "number of line bundles (general mode)")
        ->capture_default_str();
    enumerate_cmd->add_option("--N", N, "square-sum multiplier (general mode)")
        ->capture_default_str();
    enumerate_cmd->add_option("--max-branches", max_branches, "search budget")
        ->envname("EQUIFIX_BUDGET")
        ->capture_default_str();
    add_format(enumerate_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitParse;
    }

    try {
        if (validate_cmd->parsed())
            return cmd_validate(path, force_eq1, no_eq1, require_s3, format);
        if (index_cmd->parsed())
            return cmd_index(path, twist, format);
        if (fingerprint_cmd->parsed())
            return cmd_fingerprint(path, format);
        if (enumerate_cmd->parsed()) {
            if (n < 1) {
                std::cerr << "error: --n must be at least 1\n";
                return kExitParse;
            }
            if (mode == "general") {
                if (C < 1 || N < 1 || k < 0) {
                    std::cerr << "error: general mode needs C >= 1, N >= 1, k >= 0\n";
                    return kExitParse;
                }
                return enumerate_general(n, C, k, N, max_branches, format);
            }
            if (mode == "hcp")
                return enumerate_hcp(n, max_branches, format);
            return enumerate_ci(n, format);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
    return kExitOk;
}
