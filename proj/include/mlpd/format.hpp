#pragma once

#include <string>
#include <string_view>

#include "mlpd/complex_log.hpp"

namespace mlpd {

// 17 significant digits: enough to round-trip any double exactly.
std::string fmt_g17(double v);

// a+bi / a-bi, both parts at 17 significant digits, no spaces.
std::string format_complex(const cplx& z);

// Accepts "a+bi", "a-bi", "bi", "a" with C double literals for a and b.
// Throws DomainError on anything else.
cplx parse_complex(std::string_view text);

}  // namespace mlpd
