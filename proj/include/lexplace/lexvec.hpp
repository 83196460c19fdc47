#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace lexplace {

// Failure aggregate <p_0, ..., p_rho>: entry i counts vertices whose failure
// number is rho - i. Ordered lexicographically, with a distinguished infinity
// above every finite vector. Entries are signed so that correction terms can
// go negative before sibling contributions are added back.
class FailAgg {
 public:
  FailAgg() = default;
  FailAgg(std::initializer_list<std::int64_t> entries) : entries_(entries) {}
  explicit FailAgg(std::vector<std::int64_t> entries) : entries_(std::move(entries)) {}

  static FailAgg infinity();
  static FailAgg zeros(std::size_t rho);
  // Single 1 at index rho - failure_number.
  static FailAgg unit(std::size_t failure_number, std::size_t rho);

  bool is_infinite() const { return infinite_; }
  // Number of entries, rho + 1. Zero for infinity.
  std::size_t length() const { return entries_.size(); }
  std::size_t rho() const { return entries_.empty() ? 0 : entries_.size() - 1; }
  std::int64_t operator[](std::size_t i) const { return entries_[i]; }
  std::span<const std::int64_t> entries() const { return entries_; }

  // Adds `count` vertices with the given failure number. No-op on infinity.
  void add_unit(std::size_t failure_number, std::int64_t count = 1);
  // *this = a + b without reallocating when the length already matches.
  void assign_sum(const FailAgg& a, const FailAgg& b);

  FailAgg& operator+=(const FailAgg& other);
  FailAgg& operator-=(const FailAgg& other);
  friend FailAgg operator+(FailAgg a, const FailAgg& b) { return a += b; }
  friend FailAgg operator-(FailAgg a, const FailAgg& b) { return a -= b; }

  std::int64_t sum() const;
  bool all_nonnegative() const;

  bool operator==(const FailAgg& other) const;
  std::strong_ordering operator<=>(const FailAgg& other) const;

  std::string to_string() const;

 private:
  std::vector<std::int64_t> entries_;
  bool infinite_ = false;
};

// Three-way lexicographic comparison; infinity is above every finite vector
// and equal to itself. Finite operands must have equal length.
std::strong_ordering lex_cmp(const FailAgg& a, const FailAgg& b);

inline FailAgg unit(std::size_t failure_number, std::size_t rho) {
  return FailAgg::unit(failure_number, rho);
}

}  // namespace lexplace
