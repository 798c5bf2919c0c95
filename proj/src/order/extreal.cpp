// SPDX-License-Identifier: Apache-2.0

#include "maxitive/order/extreal.hpp"

#include "maxitive/errors.hpp"

#include <algorithm>
#include <charconv>

namespace maxitive::order {

ExtReal::ExtReal(Rational value) : value_(value) {
  if (value < 0) throw InputError("extended real must be nonnegative, got " + std::to_string(value.numerator()) + "/" + std::to_string(value.denominator()));
}

std::strong_ordering operator<=>(const ExtReal& a, const ExtReal& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
  if (a.value_ < b.value_) return std::strong_ordering::less;
  if (b.value_ < a.value_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string ExtReal::to_string() const {
  if (infinite_) return "inf";
  if (value_.denominator() == 1) return std::to_string(value_.numerator());
  return std::to_string(value_.numerator()) + "/" + std::to_string(value_.denominator());
}

namespace {

std::int64_t parse_integer(std::string_view text, std::string_view whole) {
  std::int64_t v = 0;
  const auto* begin = text.data();
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(begin, end, v);
  if (text.empty() || ec != std::errc{} || ptr != end)
    throw InputError("cannot parse extended real '" + std::string(whole) + "'");
  return v;
}

} // namespace

ExtReal ExtReal::parse(std::string_view text) {
  if (text == "inf" || text == "\xE2\x88\x9E") return infinity();
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return ExtReal(Rational(parse_integer(text, text)));
  const auto num = parse_integer(text.substr(0, slash), text);
  const auto den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  return ExtReal(Rational(num, den));
}

std::optional<ExtReal> ExtRealLattice::supremum(std::span<const ExtReal> values) const {
  ExtReal best;
  for (const auto& v : values) best = std::max(best, v);
  return best;
}

std::optional<ExtReal> ExtRealLattice::infimum(std::span<const ExtReal> values) const {
  ExtReal best = ExtReal::infinity();
  for (const auto& v : values) best = std::min(best, v);
  return best;
}

std::vector<ExtReal> ExtRealLattice::level_probes(std::span<const ExtReal> image) const {
  std::vector<ExtReal> finite;
  for (const auto& v : image)
    if (!v.is_infinite()) finite.push_back(v);
  finite.push_back(ExtReal{});
  std::sort(finite.begin(), finite.end());
  finite.erase(std::unique(finite.begin(), finite.end()), finite.end());

  std::vector<ExtReal> probes = finite;
  for (std::size_t i = 0; i + 1 < finite.size(); ++i)
    probes.emplace_back((finite[i].finite_value() + finite[i + 1].finite_value()) / 2);
  probes.emplace_back(finite.back().finite_value() + 1);
  probes.push_back(ExtReal::infinity());
  std::sort(probes.begin(), probes.end());
  probes.erase(std::unique(probes.begin(), probes.end()), probes.end());
  return probes;
}

} // namespace maxitive::order
