#include "lexplace/lexvec.hpp"

#include <numeric>
#include <sstream>

#include "lexplace/errors.hpp"

namespace lexplace {

FailAgg FailAgg::infinity() {
  FailAgg a;
  a.infinite_ = true;
  return a;
}

FailAgg FailAgg::zeros(std::size_t rho) { return FailAgg(std::vector<std::int64_t>(rho + 1, 0)); }

FailAgg FailAgg::unit(std::size_t failure_number, std::size_t rho) {
  if (failure_number > rho)
    throw InputError("unit(" + std::to_string(failure_number) + ", " + std::to_string(rho) +
                     "): failure number exceeds rho");
  FailAgg a = zeros(rho);
  a.entries_[rho - failure_number] = 1;
  return a;
}

void FailAgg::add_unit(std::size_t failure_number, std::int64_t count) {
  if (infinite_) return;
  entries_[entries_.size() - 1 - failure_number] += count;
}

void FailAgg::assign_sum(const FailAgg& a, const FailAgg& b) {
  if (a.infinite_ || b.infinite_) {
    *this = infinity();
    return;
  }
  infinite_ = false;
  entries_.resize(a.entries_.size());
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] = a.entries_[i] + b.entries_[i];
}

FailAgg& FailAgg::operator+=(const FailAgg& other) {
  if (infinite_) return *this;
  if (other.infinite_) return *this = infinity();
  if (entries_.size() != other.entries_.size())
    throw InputError("aggregate length mismatch in addition");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

FailAgg& FailAgg::operator-=(const FailAgg& other) {
  if (infinite_) return *this;
  if (other.infinite_) return *this = infinity();
  if (entries_.size() != other.entries_.size())
    throw InputError("aggregate length mismatch in subtraction");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

std::int64_t FailAgg::sum() const { return std::accumulate(entries_.begin(), entries_.end(), std::int64_t{0}); }

bool FailAgg::all_nonnegative() const {
  for (auto e : entries_)
    if (e < 0) return false;
  return true;
}

bool FailAgg::operator==(const FailAgg& other) const { return lex_cmp(*this, other) == 0; }

std::strong_ordering FailAgg::operator<=>(const FailAgg& other) const { return lex_cmp(*this, other); }

std::string FailAgg::to_string() const {
  if (infinite_) return "inf";
  std::ostringstream out;
  out << '<';
  for (std::size_t i = 0; i < entries_.size(); ++i) out << (i ? "," : "") << entries_[i];
  out << '>';
  return out.str();
}

std::strong_ordering lex_cmp(const FailAgg& a, const FailAgg& b) {
  if (a.is_infinite() || b.is_infinite()) {
    if (a.is_infinite() && b.is_infinite()) return std::strong_ordering::equal;
    return a.is_infinite() ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  auto x = a.entries();
  auto y = b.entries();
  if (x.size() != y.size()) throw InputError("aggregate length mismatch in comparison");
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != y[i]) return x[i] <=> y[i];
  return std::strong_ordering::equal;
}

}  // namespace lexplace
