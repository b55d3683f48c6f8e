#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace iwip {

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Multiset of positive half-integers, stored doubled and sorted decreasingly.
class IndexList {
 public:
  IndexList() = default;
  explicit IndexList(std::vector<int> doubled);

  // "1/2,1,3/2" or "[1/2, 1]"; throws InputError.
  static IndexList parse(std::string_view text);
  static IndexList from_strings(const std::vector<std::string>& entries);

  const std::vector<int>& doubled() const { return doubled_; }
  std::size_t size() const { return doubled_.size(); }
  bool empty() const { return doubled_.empty(); }
  int doubled_sum() const;

  std::vector<std::string> strings() const;
  std::string to_string() const;  // "[1, 1/2]"

  friend bool operator==(const IndexList&, const IndexList&) = default;
  friend auto operator<=>(const IndexList&, const IndexList&) = default;

 private:
  std::vector<int> doubled_;
};

std::string format_half(int doubled);
int parse_half(std::string_view text);  // doubled value
// Comma separated entries, optionally bracketed, in the given order.
std::vector<int> parse_half_list(std::string_view text);

// Every list with 1/2 <= Σ <= N - 3/2, ordered by length, then by sum, then
// decreasingly.
std::vector<IndexList> enumerate_admissible(int rank);

}  // namespace iwip
