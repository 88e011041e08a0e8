#include <gtest/gtest.h>

#include "docmine/errors.hpp"
#include "docmine/timestamp.hpp"

using namespace docmine;
using namespace std::chrono;

TEST(Timestamp, ParsesZonesToUtc) {
  EXPECT_EQ(format_timestamp(parse_timestamp("2020-02-29T12:34:56Z")), "2020-02-29T12:34:56Z");
  EXPECT_EQ(format_timestamp(parse_timestamp("2020-01-01T01:00:00+02:00")), "2019-12-31T23:00:00Z");
  EXPECT_EQ(format_timestamp(parse_timestamp("2020-01-01T23:30:00-01:00")), "2020-01-02T00:30:00Z");
  EXPECT_EQ(format_timestamp(parse_timestamp("2020-01-01 10:00:00")), "2020-01-01T10:00:00Z");
  EXPECT_EQ(format_timestamp(parse_timestamp("2020-01-01")), "2020-01-01T00:00:00Z");
}

TEST(Timestamp, FractionIsTruncated) {
  EXPECT_EQ(format_timestamp(parse_timestamp("2017-12-31T23:59:59.999Z")), "2017-12-31T23:59:59Z");
}

TEST(Timestamp, EpochSecondsMatchCalendarArithmetic) {
  // 2018-01-01 is 17532 days after the epoch.
  EXPECT_EQ(parse_timestamp("2018-01-01T00:00:00Z").time_since_epoch().count(), 17532LL * 86400);
}

TEST(Timestamp, RejectsGarbage) {
  for (const char* bad : {"", "2020", "2020-13-01", "2020-02-30", "2020-01-01T25:00:00Z", "yesterday",
                          "2020-01-01T10:00:00+1", "2020-01-01T10:00:00Zjunk"}) {
    EXPECT_THROW(parse_timestamp(bad), ParseError) << bad;
  }
}

TEST(Dates, SubtractYearsClampsLeapDay) {
  EXPECT_EQ(format_date(subtract_years(parse_date("2021-01-01"), 3)), "2018-01-01");
  EXPECT_EQ(format_date(subtract_years(parse_date("2020-02-29"), 1)), "2019-02-28");
  EXPECT_EQ(format_date(subtract_years(parse_date("2020-02-29"), 4)), "2016-02-29");
}
