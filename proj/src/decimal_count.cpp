#include "selfref/decimal_count.hpp"

#include <algorithm>
#include <charconv>
#include <vector>

#include "selfref/error.hpp"

namespace selfref::godel {

DecimalCount DecimalCount::parse(std::string_view digits) {
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(),
                                     [](char c) { return c >= '0' && c <= '9'; })) {
    throw Error(ErrorCode::InvalidNumber, "'" + std::string(digits) + "' is not a decimal count");
  }
  const auto first = digits.find_first_not_of('0');
  DecimalCount out;
  if (first != std::string_view::npos) out.digits_ = std::string(digits.substr(first));
  return out;
}

std::optional<std::uint64_t> DecimalCount::to_u64() const {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(digits_.data(), digits_.data() + digits_.size(), v);
  if (ec != std::errc{}) return std::nullopt;
  return v;
}

DecimalCount operator+(const DecimalCount& a, const DecimalCount& b) {
  const std::string& x = a.digits_;
  const std::string& y = b.digits_;
  std::string sum(std::max(x.size(), y.size()) + 1, '0');
  int carry = 0;
  for (std::size_t i = 0; i < sum.size(); ++i) {
    int d = carry;
    if (i < x.size()) d += x[x.size() - 1 - i] - '0';
    if (i < y.size()) d += y[y.size() - 1 - i] - '0';
    sum[sum.size() - 1 - i] = static_cast<char>('0' + d % 10);
    carry = d / 10;
  }
  return DecimalCount::parse(sum);
}

DecimalCount operator*(const DecimalCount& a, const DecimalCount& b) {
  if (a.is_zero() || b.is_zero()) return DecimalCount{};
  // Schoolbook in base 10^9 limbs, least significant first.
  constexpr std::uint64_t kBase = 1'000'000'000;
  auto limbs = [](const std::string& s) {
    std::vector<std::uint64_t> out;
    for (std::size_t end = s.size(); end > 0;) {
      const std::size_t begin = end >= 9 ? end - 9 : 0;
      std::uint64_t v = 0;
      std::from_chars(s.data() + begin, s.data() + end, v);
      out.push_back(v);
      end = begin;
    }
    return out;
  };
  const auto x = limbs(a.digits_);
  const auto y = limbs(b.digits_);
  std::vector<std::uint64_t> prod(x.size() + y.size(), 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    std::uint64_t carry = 0;
    for (std::size_t j = 0; j < y.size() || carry != 0; ++j) {
      const std::uint64_t cur =
          prod[i + j] + carry + (j < y.size() ? x[i] * y[j] : 0);
      prod[i + j] = cur % kBase;
      carry = cur / kBase;
    }
  }
  std::string out;
  for (std::size_t i = prod.size(); i > 0; --i) {
    std::string limb = std::to_string(prod[i - 1]);
    if (!out.empty()) limb.insert(0, 9 - limb.size(), '0');
    if (!out.empty() || prod[i - 1] != 0) out += limb;
  }
  return DecimalCount::parse(out.empty() ? "0" : out);
}

}  // namespace selfref::godel
