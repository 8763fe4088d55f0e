#pragma once

#include <json.hpp>

#include "qvertex/laurent_fraction.hpp"
#include "qvertex/prodred.hpp"
#include "qvertex/report.hpp"
#include "qvertex/series.hpp"

namespace qvertex {

inline constexpr const char* kEngineVersion = "qvertex 0.1.0";

/// Terms as [t, s, "p/q"], or [t, s, s2, s3, "p/q"] when s2 or s3 occur.
nlohmann::json to_json(const LaurentPoly& p);
/// {"num": terms, "den": terms} with the denominator fully expanded.
nlohmann::json to_json(const LaurentFraction& f);
/// {"trunc": D, "coeffs": [...]}.
nlohmann::json to_json(const QSeries& s);
nlohmann::json to_json(const QSeries2& s);
/// Sorted [exponent, multiplicity] pairs.
nlohmann::json to_json(const SignedExponentMultiset& ms);
/// Entries, summary counts and the parameter echo; no timing, so equal
/// inputs give byte-identical output.
nlohmann::json to_json(const VerificationReport& r);

/// Exponent units of the serialized lattices.
nlohmann::json units_json();

}  // namespace qvertex
