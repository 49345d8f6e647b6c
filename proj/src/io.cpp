#include "passband/io.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "passband/errors.hpp"

namespace passband {

namespace {

using nlohmann::json;

double require_number(const json& j, const char* field) {
    if (!j.contains(field) || !j[field].is_number())
        throw ParseError(std::string("density: missing or non-numeric field \"") + field + "\"");
    return j[field].get<double>();
}

Segment segment_from_json(const json& j) {
    if (!j.is_object() || !j.contains("form") || !j["form"].is_string())
        throw ParseError("density: each segment needs a \"form\" string");
    const std::string form = j["form"].get<std::string>();

    try {
        if (form == "constant") {
            return Segment::constant(require_number(j, "lo"), require_number(j, "hi"),
                                     require_number(j, "c"));
        }
        if (form == "power") {
            double hi = std::numeric_limits<double>::infinity();
            if (!j.contains("hi"))
                throw ParseError("density: power segment needs \"hi\" (null for unbounded)");
            if (!j["hi"].is_null()) hi = require_number(j, "hi");
            return Segment::power(require_number(j, "lo"), hi, require_number(j, "c"),
                                  require_number(j, "anchor"), require_number(j, "gamma"));
        }
        if (form == "grid") {
            if (!j.contains("ts") || !j.contains("vs") || !j["ts"].is_array() ||
                !j["vs"].is_array())
                throw ParseError("density: grid segment needs \"ts\" and \"vs\" arrays");
            std::vector<double> ts, vs;
            for (const auto& t : j["ts"]) {
                if (!t.is_number()) throw ParseError("density: non-numeric grid abscissa");
                ts.push_back(t.get<double>());
            }
            for (const auto& v : j["vs"]) {
                if (!v.is_number()) throw ParseError("density: non-numeric grid ordinate");
                vs.push_back(v.get<double>());
            }
            GridInterp interp = GridInterp::linear;
            if (j.contains("interp")) {
                if (!j["interp"].is_string())
                    throw ParseError("density: \"interp\" must be \"linear\" or \"cubic\"");
                const std::string s = j["interp"].get<std::string>();
                if (s == "cubic")
                    interp = GridInterp::cubic;
                else if (s != "linear")
                    throw ParseError("density: \"interp\" must be \"linear\" or \"cubic\"");
            }
            Segment seg = Segment::grid(std::move(ts), std::move(vs), interp);
            if ((j.contains("lo") && require_number(j, "lo") != seg.lo) ||
                (j.contains("hi") && !j["hi"].is_null() && require_number(j, "hi") != seg.hi))
                throw ParseError("density: grid \"lo\"/\"hi\" disagree with the knot range");
            return seg;
        }
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("density: invalid segment: ") + e.what());
    }
    throw ParseError("density: unknown form \"" + form + "\"");
}

} // namespace

Density density_from_json(const nlohmann::json& doc) {
    if (!doc.is_object() || !doc.contains("segments") || !doc["segments"].is_array())
        throw ParseError("density: document must be {\"segments\": [...]}");
    std::vector<Segment> segments;
    for (const auto& j : doc["segments"]) segments.push_back(segment_from_json(j));
    try {
        return Density(std::move(segments));
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("density: ") + e.what());
    }
}

nlohmann::json density_to_json(const Density& v) {
    json segs = json::array();
    for (const Segment& s : v.segments()) {
        json j;
        switch (s.form) {
        case SegmentForm::constant:
            j = {{"form", "constant"}, {"lo", s.lo}, {"hi", s.hi}, {"c", s.c}};
            break;
        case SegmentForm::power:
            j = {{"form", "power"},     {"lo", s.lo},        {"hi", nullptr},
                 {"c", s.c},            {"anchor", s.anchor}, {"gamma", s.gamma}};
            if (std::isfinite(s.hi)) j["hi"] = s.hi;
            break;
        case SegmentForm::grid:
            j = {{"form", "grid"},
                 {"ts", s.ts},
                 {"vs", s.vs},
                 {"interp", s.interp == GridInterp::cubic ? "cubic" : "linear"}};
            break;
        }
        segs.push_back(std::move(j));
    }
    return json{{"segments", std::move(segs)}};
}

Density load_density_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open density file: " + path);
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw ParseError("density file " + path + ": " + e.what());
    }
    return density_from_json(doc);
}

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

nlohmann::json json_number(double x) {
    if (!std::isfinite(x)) return nullptr;
    return std::strtod(format_double(x).c_str(), nullptr);
}

std::string extension_csv(const ExtensionResult& ext, const std::vector<std::string>& preamble) {
    std::ostringstream out;
    for (const std::string& line : preamble) out << "# " << line << "\n";
    out << "x,v_ext,err\n";
    for (std::size_t i = 0; i < ext.grid.size(); ++i)
        out << format_double(ext.grid[i]) << ',' << format_double(ext.values[i]) << ','
            << format_double(ext.errors[i]) << "\n";
    return out.str();
}

nlohmann::json extension_json(const ExtensionResult& ext) {
    json points = json::array();
    for (std::size_t i = 0; i < ext.grid.size(); ++i)
        points.push_back({{"x", json_number(ext.grid[i])},
                          {"v_ext", json_number(ext.values[i])},
                          {"err", json_number(ext.errors[i])}});
    return json{{"band", {{"a", json_number(ext.band.a)}, {"b", json_number(ext.band.b)}}},
                {"alpha", json_number(ext.alpha)},
                {"alpha_error", json_number(ext.alpha_error)},
                {"sup_norm", json_number(ext.sup_norm)},
                {"points", std::move(points)}};
}

std::string sweep_csv(const std::vector<SweepRecord>& records) {
    std::ostringstream out;
    out << "epsilon,alpha,sup_norm,gap,l1,l2,l4\n";
    for (const SweepRecord& r : records)
        out << format_double(r.epsilon) << ',' << format_double(r.alpha) << ','
            << format_double(r.sup_norm) << ',' << format_double(r.gap) << ','
            << format_double(r.l1) << ',' << format_double(r.l2) << ',' << format_double(r.l4)
            << "\n";
    return out.str();
}

nlohmann::json sweep_json(const std::vector<SweepRecord>& records) {
    json recs = json::array();
    for (const SweepRecord& r : records)
        recs.push_back({{"epsilon", json_number(r.epsilon)},
                        {"alpha", json_number(r.alpha)},
                        {"sup_norm", json_number(r.sup_norm)},
                        {"gap", json_number(r.gap)},
                        {"l1", json_number(r.l1)},
                        {"l2", json_number(r.l2)},
                        {"l4", json_number(r.l4)},
                        {"linf", json_number(r.linf())},
                        {"err", json_number(r.err)}});
    return json{{"records", std::move(recs)}};
}

std::string decay_csv(const std::vector<DecayRecord>& records) {
    std::ostringstream out;
    out << "R,alpha,sup_norm\n";
    for (const DecayRecord& r : records)
        out << format_double(r.radius) << ',' << format_double(r.alpha) << ','
            << format_double(r.sup_norm) << "\n";
    return out.str();
}

nlohmann::json decay_json(const std::vector<DecayRecord>& records) {
    json recs = json::array();
    for (const DecayRecord& r : records)
        recs.push_back({{"R", json_number(r.radius)},
                        {"alpha", json_number(r.alpha)},
                        {"sup_norm", json_number(r.sup_norm)}});
    return json{{"records", std::move(recs)}};
}

nlohmann::json feasibility_json(const FeasibilityReport& rep) {
    auto cond = [](const ConditionReport& c) {
        return json{{"verdict", to_string(c.verdict)},
                    {"value", json_number(c.value)},
                    {"error", json_number(c.error)}};
    };
    return json{{"condition_one", cond(rep.condition_one)},
                {"corollary_condition", cond(rep.corollary_condition)},
                {"notes", rep.notes}};
}

void write_file_atomic(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    if (target.has_parent_path()) fs::create_directories(target.parent_path());
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open for writing: " + tmp.string());
        out << content;
        if (!out) throw std::runtime_error("write failed: " + tmp.string());
    }
    fs::rename(tmp, target);
}

} // namespace passband
