#pragma once

// Machine-readable output. Fractions are "a/d" strings and exact rationals
// are "p/q" strings; integers are JSON numbers when they fit in 64 bits and
// decimal strings otherwise. Only the empirical constants are floats.

#include <nlohmann/json.hpp>

#include <span>
#include <string>

#include "cr/bounds.hpp"
#include "cr/cantor.hpp"
#include "cr/orbit.hpp"
#include "cr/orders.hpp"

namespace cr {

using Json = nlohmann::ordered_json;

Json to_json(const Integer& v);
Json to_json(const Rational& v);
Json to_json(const ReducedFraction& x);
Json to_json(const Factorization& f);
Json to_json(const OrderProfile& profile);
Json to_json(const DenominatorSplit& split);
Json to_json(const Orbit& orbit);
Json to_json(const OrbitDecomposition& dec);
Json to_json(const DensityReport& report);
Json to_json(const Expansion& e);
Json to_json(const DigitSet& ds);
Json to_json(const MemberCounts& counts);
Json to_json(const SIntegerCertificate& cert);
Json to_json(const ConstantSummary& summary);
Json to_json(const ThresholdCheck& check);

/// One JSON-lines record: {"num", "den", "preperiod", "period"}.
Json member_record(unsigned base, const ReducedFraction& x);

/// "T,count_reduced,count_all,includes_endpoints" and one row per
/// endpoint convention.
std::string counts_csv(const MemberCounts& counts, bool header = true);

std::string bound_csv_header();
std::string bound_csv_row(const DigitSet& ds, const BoundReport& r);

/// Shortest round-trip decimal form of a double.
std::string format_double(double v);

}  // namespace cr
