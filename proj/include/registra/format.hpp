#pragma once

#include <string>

namespace registra {

// Fixed-point decimal formatting used by every emitted CSV/SVG/report so
// that identical inputs produce byte-identical files. Negative zero is
// normalized to zero.
std::string format_fixed(double value, int decimals);

// RFC 4180 quoting, applied only when the field needs it.
std::string csv_quote(const std::string& field);

} // namespace registra
