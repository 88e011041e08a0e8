#pragma once

#include <chrono>
#include <string>
#include <string_view>

namespace docmine {

using Timestamp = std::chrono::sys_seconds;
using Date = std::chrono::year_month_day;

/// Parses ISO-8601 "YYYY-MM-DD", "YYYY-MM-DDTHH:MM:SS[.fff](Z|+HH:MM|-HH:MM)" into UTC.
/// Throws ParseError on anything else.
Timestamp parse_timestamp(std::string_view text);
Date parse_date(std::string_view text);

std::string format_timestamp(Timestamp ts);  // "YYYY-MM-DDTHH:MM:SSZ"
std::string format_date(Date date);          // "YYYY-MM-DD"

/// Same calendar day `years` earlier; Feb 29 falls back to Feb 28.
Date subtract_years(Date date, int years);

Date today_utc();

inline Timestamp start_of_day(Date date) { return std::chrono::sys_days{date}; }

}  // namespace docmine
