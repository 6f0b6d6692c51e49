#include "hecke/report.hpp"

#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace hecke::report {

Format parse_format(const std::string& s) {
    if (s == "csv") return Format::csv;
    if (s == "json") return Format::json;
    throw std::invalid_argument("unknown output format '" + s + "' (csv or json)");
}

Record& Record::add(std::string key, Cell value) {
    fields.emplace_back(std::move(key), std::move(value));
    return *this;
}

const Cell* Record::find(const std::string& key) const {
    for (const auto& [k, v] : fields)
        if (k == key) return &v;
    return nullptr;
}

std::string sci(double x, int digits) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    const int sig = std::clamp(digits, 1, 17);
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*e", sig - 1, x);
    return buf;
}

std::string sci(const Real& x, int digits) { return x.to_string(std::max(digits, 1)); }

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string csv_cell(const Cell& c, int digits) {
    return std::visit(
        [&](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, long>) return std::to_string(v);
            else if constexpr (std::is_same_v<T, double>) return sci(v, digits);
            else if constexpr (std::is_same_v<T, Real>) return sci(v, digits);
            else if constexpr (std::is_same_v<T, bool>) return v ? "true" : "false";
            else return csv_escape(v);
        },
        c);
}

nlohmann::ordered_json json_cell(const Cell& c, int digits) {
    return std::visit(
        [&](const auto& v) -> nlohmann::ordered_json {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Real>) return sci(v, digits);
            else if constexpr (std::is_same_v<T, double>) {
                if (!std::isfinite(v)) return sci(v, digits);
                return v;
            } else return v;
        },
        c);
}

}  // namespace

void write(std::ostream& os, const std::vector<Record>& records, Format fmt, int digits) {
    if (fmt == Format::csv) {
        if (records.empty()) return;
        const auto& head = records.front().fields;
        for (size_t i = 0; i < head.size(); ++i) os << (i ? "," : "") << csv_escape(head[i].first);
        os << '\n';
        for (const auto& r : records) {
            if (r.fields.size() != head.size()) throw std::logic_error("report: ragged CSV records");
            for (size_t i = 0; i < r.fields.size(); ++i) os << (i ? "," : "") << csv_cell(r.fields[i].second, digits);
            os << '\n';
        }
        return;
    }
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : records) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (const auto& [k, v] : r.fields) obj[k] = json_cell(v, digits);
        arr.push_back(std::move(obj));
    }
    os << arr.dump(2) << '\n';
}

std::string to_string(const std::vector<Record>& records, Format fmt, int digits) {
    std::ostringstream os;
    write(os, records, fmt, digits);
    return os.str();
}

}  // namespace hecke::report
