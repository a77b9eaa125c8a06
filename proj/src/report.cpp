#include "ffmobius/report.hpp"

#include <charconv>

#include <json.hpp>

#include "ffmobius/version.hpp"

namespace ffmobius {

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string scan_to_csv(const ScanReport& rep, const ConfigEcho& config) {
    std::string out;
    out += "# ffmobius scan report\n";
    out += "# schema_version: " + std::to_string(kSchemaVersion) + "\n";
    out += "# version: " + std::string(kVersion) + "\n";
    out += "# field: " + rep.field_token + "\n";
    for (const auto& [k, v] : config) out += "# cfg." + k + ": " + v + "\n";
    out += "# n: " + std::to_string(rep.n) + "\n";
    out += "# theta_space: " + std::to_string(rep.theta_space) + "\n";
    out += "# points: " + std::to_string(rep.points) + "\n";
    out += "# sampled: " + std::string(rep.sampled ? "true" : "false") + "\n";
    out += "# max_abs: " + format_double(rep.max_abs) + "\n";
    out += "# argmax: \"" + rep.argmax + "\"\n";
    out += "# bound: " + format_double(rep.bound) + "\n";
    out += "# ratio_max_over_qhalf: " + format_double(rep.ratio_max_over_qhalf) + "\n";
    out += "# verdict: " + rep.verdict + "\n";
    out += "theta,re,im,abs\n";
    for (const auto& row : rep.rows) {
        out += "\"" + row.theta + "\",";
        out += format_double(row.value.real()) + ",";
        out += format_double(row.value.imag()) + ",";
        out += format_double(std::abs(row.value)) + "\n";
    }
    return out;
}

std::string scan_to_json(const ScanReport& rep, const ConfigEcho& config) {
    nlohmann::json j;
    j["schema_version"] = kSchemaVersion;
    j["tool"] = {{"name", "ffmobius"}, {"version", kVersion}};
    nlohmann::json cfg = nlohmann::json::object();
    for (const auto& [k, v] : config) cfg[k] = v;
    j["config"] = cfg;
    j["field"] = rep.field_token;
    j["q"] = rep.q;
    j["n"] = rep.n;
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : rep.rows)
        rows.push_back({{"theta", row.theta},
                        {"re", row.value.real()},
                        {"im", row.value.imag()},
                        {"abs", std::abs(row.value)}});
    j["rows"] = std::move(rows);
    j["summary"] = {{"max_abs", rep.max_abs},
                    {"argmax", rep.argmax},
                    {"bound", rep.bound},
                    {"ratio_max_over_qhalf", rep.ratio_max_over_qhalf},
                    {"verdict", rep.verdict},
                    {"points", rep.points},
                    {"theta_space", rep.theta_space},
                    {"sampled", rep.sampled}};
    return j.dump(2) + "\n";
}

std::string bound_checks_to_csv(const std::vector<BoundCheck>& checks, const ConfigEcho& config) {
    std::string out;
    out += "# ffmobius bound checks\n";
    out += "# schema_version: " + std::to_string(kSchemaVersion) + "\n";
    out += "# version: " + std::string(kVersion) + "\n";
    for (const auto& [k, v] : config) out += "# cfg." + k + ": " + v + "\n";
    out += "name,params,lhs,rhs,verdict\n";
    for (const auto& c : checks) {
        out += c.name + ",\"" + c.params + "\",";
        out += format_double(c.lhs) + "," + format_double(c.rhs) + ",";
        out += (c.pass ? "pass" : (c.informational ? "info-fail" : "FAIL"));
        out += "\n";
    }
    return out;
}

} // namespace ffmobius
