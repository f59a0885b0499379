#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

namespace multizeta::cli {

std::string format_double(double x)
{
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

namespace {

void write(std::ostringstream& os, const nlohmann::json& j, int depth)
{
    const std::string pad(static_cast<std::size_t>(2 * (depth + 1)), ' ');
    const std::string close_pad(static_cast<std::size_t>(2 * depth), ' ');
    switch (j.type()) {
    case nlohmann::json::value_t::object: {
        if (j.empty()) { os << "{}"; return; }
        // nlohmann's default object is already a std::map, but sort explicitly so
        // an ordered_json input cannot leak insertion order.
        std::map<std::string, const nlohmann::json*> sorted;
        for (auto it = j.begin(); it != j.end(); ++it) sorted[it.key()] = &it.value();
        os << "{\n";
        bool first = true;
        for (const auto& [key, value] : sorted) {
            if (!first) os << ",\n";
            first = false;
            os << pad << nlohmann::json(key).dump() << ": ";
            write(os, *value, depth + 1);
        }
        os << '\n' << close_pad << '}';
        return;
    }
    case nlohmann::json::value_t::array: {
        if (j.empty()) { os << "[]"; return; }
        os << "[\n";
        for (std::size_t i = 0; i < j.size(); ++i) {
            if (i) os << ",\n";
            os << pad;
            write(os, j[i], depth + 1);
        }
        os << '\n' << close_pad << ']';
        return;
    }
    case nlohmann::json::value_t::number_float: {
        const double x = j.get<double>();
        os << (std::isfinite(x) ? format_double(x) : "null");
        return;
    }
    default:
        os << j.dump();
    }
}

}  // namespace

std::string dump_json(const nlohmann::json& j)
{
    std::ostringstream os;
    write(os, j, 0);
    os << '\n';
    return os.str();
}

}  // namespace multizeta::cli
