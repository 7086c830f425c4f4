#include "equifix/document.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <set>

#include "json.hpp"

namespace equifix {
namespace {

using ordered_json = nlohmann::ordered_json;

long require_int(const ordered_json& v, const std::string& path) {
    if (v.is_number_float())
        throw document_error("floating-point numbers are not allowed", path);
    if (!v.is_number_integer())
        throw document_error("expected an integer", path);
    if (v.is_number_unsigned() &&
        v.get<std::uint64_t>() >
            static_cast<std::uint64_t>(std::numeric_limits<long>::max()))
        throw document_error("integer out of range", path);
    return v.get<long>();
}

std::vector<long> require_int_array(const ordered_json& v, const std::string& path) {
    if (!v.is_array())
        throw document_error("expected an array of integers", path);
    std::vector<long> out;
    out.reserve(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out.push_back(require_int(v[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

void reject_unknown_keys(const ordered_json& obj, const std::set<std::string>& allowed,
                         const std::string& path) {
    for (const auto& item : obj.items())
        if (!allowed.count(item.key()))
            throw document_error("unknown key \"" + item.key() + "\"",
                                 path.empty() ? item.key() : path + "." + item.key());
}

const ordered_json& require_key(const ordered_json& obj, const std::string& key,
                                const std::string& path) {
    auto it = obj.find(key);
    if (it == obj.end())
        throw document_error("missing required key \"" + key + "\"", path);
    return *it;
}

}  // namespace

FixedPointModel parse_model_document(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const ordered_json::parse_error& e) {
        std::size_t offset = e.byte > 0 ? e.byte - 1 : 0;
        offset = std::min(offset, text.size());
        std::size_t line =
            1 + static_cast<std::size_t>(
                    std::count(text.begin(), text.begin() + static_cast<long>(offset), '\n'));
        std::string msg = e.what();
        // Strip nlohmann's bracketed error-id prefix.
        if (auto pos = msg.find("] "); pos != std::string::npos)
            msg = msg.substr(pos + 2);
        throw document_error(msg, "line " + std::to_string(line));
    }

    if (!doc.is_object())
        throw document_error("top level must be an object", "");
    reject_unknown_keys(doc, {"dim", "k", "N", "points", "label"}, "");

    long dim = require_int(require_key(doc, "dim", ""), "dim");
    if (dim <= 0 || dim % 2 != 0)
        throw document_error("dim must be a positive even integer", "dim");
    long k = require_int(require_key(doc, "k", ""), "k");
    long N = require_int(require_key(doc, "N", ""), "N");

    std::string label;
    if (auto it = doc.find("label"); it != doc.end()) {
        if (!it->is_string())
            throw document_error("label must be a string", "label");
        label = it->get<std::string>();
    }

    const ordered_json& pts = require_key(doc, "points", "");
    if (!pts.is_array() || pts.empty())
        throw document_error("points must be a nonempty array", "points");

    std::vector<FixedPoint> points;
    points.reserve(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        std::string path = "points[" + std::to_string(i) + "]";
        const ordered_json& p = pts[i];
        if (!p.is_object())
            throw document_error("expected an object", path);
        reject_unknown_keys(p, {"m", "eps", "a", "s3_fixed"}, path);
        std::vector<long> m = require_int_array(require_key(p, "m", path), path + ".m");
        std::vector<long> a = require_int_array(require_key(p, "a", path), path + ".a");
        long eps = require_int(require_key(p, "eps", path), path + ".eps");
        if (eps != 1 && eps != -1)
            throw document_error("eps must be 1 or -1", path + ".eps");
        const ordered_json& s3 = require_key(p, "s3_fixed", path);
        if (!s3.is_boolean())
            throw document_error("s3_fixed must be a boolean", path + ".s3_fixed");
        try {
            points.emplace_back(std::move(m), static_cast<int>(eps), std::move(a),
                                s3.get<bool>());
        } catch (const std::exception& e) {
            throw document_error(e.what(), path);
        }
    }

    try {
        return FixedPointModel(dim / 2, k, N, std::move(points), std::move(label));
    } catch (const std::exception& e) {
        throw document_error(e.what(), "");
    }
}

std::string serialize_model_document(const FixedPointModel& model) {
    ordered_json doc;
    doc["dim"] = 2 * model.n();
    doc["k"] = model.k();
    doc["N"] = model.multiplier();
    if (!model.label().empty())
        doc["label"] = model.label();
    std::vector<FixedPoint> pts = model.points();
    std::sort(pts.begin(), pts.end());
    ordered_json arr = ordered_json::array();
    for (const auto& pt : pts) {
        ordered_json p;
        p["m"] = pt.m;
        p["eps"] = pt.eps;
        p["a"] = pt.a;
        p["s3_fixed"] = pt.s3_fixed;
        arr.push_back(std::move(p));
    }
    doc["points"] = std::move(arr);
    return doc.dump(2) + "\n";
}

}  // namespace equifix
