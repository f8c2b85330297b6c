#pragma once

/// \file
/// \brief JSON encodings of field elements, points, reports and convergents.
///
///   QuadExt     {"a": "p/q", "b": "p/q", "c": "p/q", "d": "p/q", "decimal": "<12 digits>"}
///   Point       {"x": QuadExt, "y": QuadExt}
///   PhiReport   {"vertex": "q,r,c", "side": "p/q", "segments": [...], "phi_exact_ok",
///                "equal_lengths_ok", "ratio_decimal", "fibonacci": {"n", "ratio", "variance"}}

#include <json.hpp>

#include "phihex/construction.hpp"
#include "phihex/fibonacci.hpp"

namespace phihex {

using Json = nlohmann::ordered_json;

inline constexpr int kJsonDecimalDigits = 12;

/// Published values use a decimal comma; our output always uses '.'.
inline constexpr const char* kDecimalSeparatorNote =
    "decimals use '.'; the reference values are printed with ',' as the decimal separator";

Json to_json(const QuadExt& x);
Json to_json(const Point& p);
Json to_json(const PhiSegment& seg);
Json to_json(const PhiReport& report);

/// {"n", "fn", "fn_1", "ratio", "variance"} with decimals at frac_digits.
Json convergent_json(const Convergent& c, int frac_digits, Rounding mode);

}  // namespace phihex
