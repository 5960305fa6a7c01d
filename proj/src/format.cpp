#include "registra/format.hpp"

#include <cstdio>

#include "registra/errors.hpp"

namespace registra {

std::string format_fixed(double value, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, value);
    std::string s(buf);
    if (s.find_first_of("0123456789") != std::string::npos &&
        s.find_first_not_of("-0.") == std::string::npos && s[0] == '-') {
        s.erase(0, 1); // -0.000000 -> 0.000000
    }
    return s;
}

std::string csv_quote(const std::string& field) {
    if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += '"';
    return out;
}

} // namespace registra
