#pragma once

// Non-negative integers held as canonical decimal digit strings. Counts in
// run-length numbers can exceed any machine word (a run of 6s whose length is
// itself a 341757-digit number), but only addition, multiplication and
// comparison are ever needed.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace selfref::godel {

class DecimalCount {
 public:
  DecimalCount() : digits_("0") {}
  explicit DecimalCount(std::uint64_t value) : digits_(std::to_string(value)) {}

  // Plain decimal digits; leading zeros are stripped. Throws InvalidNumber.
  static DecimalCount parse(std::string_view digits);

  const std::string& str() const noexcept { return digits_; }
  bool is_zero() const noexcept { return digits_ == "0"; }
  std::size_t num_digits() const noexcept { return digits_.size(); }
  std::optional<std::uint64_t> to_u64() const;

  friend DecimalCount operator+(const DecimalCount& a, const DecimalCount& b);
  friend DecimalCount operator*(const DecimalCount& a, const DecimalCount& b);
  DecimalCount& operator+=(const DecimalCount& other) { return *this = *this + other; }

  friend bool operator==(const DecimalCount&, const DecimalCount&) = default;
  friend std::strong_ordering operator<=>(const DecimalCount& a, const DecimalCount& b) {
    if (auto c = a.digits_.size() <=> b.digits_.size(); c != 0) return c;
    return a.digits_ <=> b.digits_;
  }

 private:
  std::string digits_;
};

}  // namespace selfref::godel
