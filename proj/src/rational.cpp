#include "hoffgraph/rational.hpp"

#include <cctype>
#include <charconv>

namespace hoffgraph {

namespace {

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
    throw std::invalid_argument("not a rational number: \"" + std::string(whole) + "\"");
  return v;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  const std::string_view whole = text;
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.starts_with('+')) text.remove_prefix(1);
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    const auto den = parse_int(text.substr(slash + 1), whole);
    if (den == 0) throw std::invalid_argument("zero denominator in \"" + std::string(whole) + "\"");
    return {parse_int(text.substr(0, slash), whole), den};
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    const bool negative = text.starts_with('-');
    auto int_part = text.substr(negative ? 1 : 0, dot - (negative ? 1 : 0));
    auto frac_part = text.substr(dot + 1);
    if (frac_part.empty() || frac_part.size() > 15 || (int_part.empty() && frac_part.empty()))
      throw std::invalid_argument("not a rational number: \"" + std::string(whole) + "\"");
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
    const std::int64_t ip = int_part.empty() ? 0 : parse_int(int_part, whole);
    const std::int64_t fp = parse_int(frac_part, whole);
    if (ip < 0 || fp < 0) throw std::invalid_argument("not a rational number: \"" + std::string(whole) + "\"");
    const Rational magnitude(ip * scale + fp, scale);
    return negative ? -magnitude : magnitude;
  }
  return {parse_int(text, whole)};
}

}  // namespace hoffgraph
