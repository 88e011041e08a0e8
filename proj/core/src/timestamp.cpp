#include "docmine/timestamp.hpp"

#include <cstdio>
#include <string>

#include "docmine/errors.hpp"

namespace docmine {

namespace {

bool read_int(std::string_view text, std::size_t pos, std::size_t width, int& out) {
  if (pos + width > text.size()) return false;
  int value = 0;
  for (std::size_t i = 0; i < width; ++i) {
    const char c = text[pos + i];
    if (c < '0' || c > '9') return false;
    value = value * 10 + (c - '0');
  }
  out = value;
  return true;
}

[[noreturn]] void fail(std::string_view text) {
  throw ParseError("invalid timestamp '" + std::string(text) + "'");
}

Date read_date(std::string_view text) {
  int y = 0, m = 0, d = 0;
  if (text.size() < 10 || !read_int(text, 0, 4, y) || text[4] != '-' || !read_int(text, 5, 2, m) ||
      text[7] != '-' || !read_int(text, 8, 2, d)) {
    fail(text);
  }
  const Date date{std::chrono::year{y}, std::chrono::month{static_cast<unsigned>(m)},
                  std::chrono::day{static_cast<unsigned>(d)}};
  if (!date.ok()) fail(text);
  return date;
}

}  // namespace

Date parse_date(std::string_view text) {
  if (text.size() != 10) fail(text);
  return read_date(text);
}

Timestamp parse_timestamp(std::string_view text) {
  const Date date = read_date(text);
  Timestamp ts = start_of_day(date);
  if (text.size() == 10) return ts;
  if (text[10] != 'T' && text[10] != 't' && text[10] != ' ') fail(text);
  int hh = 0, mm = 0, ss = 0;
  if (!read_int(text, 11, 2, hh) || text.size() < 19 || text[13] != ':' ||
      !read_int(text, 14, 2, mm) || text[16] != ':' || !read_int(text, 17, 2, ss) || hh > 23 ||
      mm > 59 || ss > 60) {
    fail(text);
  }
  std::size_t pos = 19;
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
  }
  ts += std::chrono::hours{hh} + std::chrono::minutes{mm} + std::chrono::seconds{ss};
  if (pos == text.size()) return ts;  // no zone: UTC
  const char z = text[pos];
  if ((z == 'Z' || z == 'z') && pos + 1 == text.size()) return ts;
  if (z == '+' || z == '-') {
    int oh = 0, om = 0;
    if (!read_int(text, pos + 1, 2, oh)) fail(text);
    std::size_t after = pos + 3;
    if (after < text.size() && text[after] == ':') ++after;
    if (!read_int(text, after, 2, om) || after + 2 != text.size()) fail(text);
    const auto offset = std::chrono::hours{oh} + std::chrono::minutes{om};
    return z == '+' ? ts - offset : ts + offset;
  }
  fail(text);
}

std::string format_date(Date date) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", static_cast<int>(date.year()),
                static_cast<unsigned>(date.month()), static_cast<unsigned>(date.day()));
  return buf;
}

std::string format_timestamp(Timestamp ts) {
  const auto day = std::chrono::floor<std::chrono::days>(ts);
  const std::chrono::hh_mm_ss tod{ts - day};
  char buf[32];
  std::snprintf(buf, sizeof buf, "%sT%02d:%02d:%02dZ", format_date(Date{day}).c_str(),
                static_cast<int>(tod.hours().count()), static_cast<int>(tod.minutes().count()),
                static_cast<int>(tod.seconds().count()));
  return buf;
}

Date subtract_years(Date date, int years) {
  Date shifted = date - std::chrono::years{years};
  if (!shifted.ok()) shifted = shifted.year() / shifted.month() / std::chrono::last;
  return shifted;
}

Date today_utc() {
  return Date{std::chrono::floor<std::chrono::days>(std::chrono::system_clock::now())};
}

}  // namespace docmine
