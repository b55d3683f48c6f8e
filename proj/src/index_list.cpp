#include "iwip/index_list.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>

namespace iwip {

IndexList::IndexList(std::vector<int> doubled) : doubled_(std::move(doubled)) {
  for (int d : doubled_)
    if (d <= 0) throw InputError("index entries must be positive");
  std::sort(doubled_.begin(), doubled_.end(), std::greater<>());
}

int IndexList::doubled_sum() const { return std::accumulate(doubled_.begin(), doubled_.end(), 0); }

std::string format_half(int doubled) {
  return doubled % 2 == 0 ? std::to_string(doubled / 2) : std::to_string(doubled) + "/2";
}

namespace {

int parse_int(std::string_view s) {
  int v = 0;
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (s.empty() || ec != std::errc{} || ptr != end) throw InputError("malformed index entry: " + std::string(s));
  return v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

int parse_half(std::string_view text) {
  text = trim(text);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    const int v = parse_int(text);
    if (v <= 0) throw InputError("index entries must be positive");
    return 2 * v;
  }
  const int num = parse_int(trim(text.substr(0, slash)));
  const int den = parse_int(trim(text.substr(slash + 1)));
  if (den == 1 && num > 0) return 2 * num;
  if (den != 2 || num <= 0) throw InputError("index entries must be positive halves: " + std::string(text));
  return num;
}

std::vector<int> parse_half_list(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '[') {
    if (text.back() != ']') throw InputError("unbalanced brackets in index list");
    text = trim(text.substr(1, text.size() - 2));
  }
  if (text.empty()) throw InputError("empty index list");
  std::vector<int> out;
  while (true) {
    const auto comma = text.find(',');
    out.push_back(parse_half(text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

IndexList IndexList::parse(std::string_view text) { return IndexList(parse_half_list(text)); }

IndexList IndexList::from_strings(const std::vector<std::string>& entries) {
  std::vector<int> out;
  for (const auto& e : entries) out.push_back(parse_half(e));
  return IndexList(std::move(out));
}

std::vector<std::string> IndexList::strings() const {
  std::vector<std::string> out;
  for (int d : doubled_) out.push_back(format_half(d));
  return out;
}

std::string IndexList::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < doubled_.size(); ++i) {
    if (i) out += ", ";
    out += format_half(doubled_[i]);
  }
  return out + "]";
}

std::vector<IndexList> enumerate_admissible(int rank) {
  std::vector<IndexList> out;
  std::vector<int> parts;
  // Partitions of `remaining` into parts at most `max_part`, decreasing.
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(parts);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      parts.push_back(p);
      rec(remaining - p, p);
      parts.pop_back();
    }
  };
  for (int total = 1; total <= 2 * rank - 3; ++total) rec(total, total);
  std::stable_sort(out.begin(), out.end(), [](const IndexList& a, const IndexList& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.doubled_sum() < b.doubled_sum();
  });
  return out;
}

}  // namespace iwip
