#pragma once

#include <compare>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace sqw {

class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);  // trailing zeros dropped, must be weakly decreasing

  static Partition parse(std::string_view text);  // "3,1"; empty string is the empty partition

  // 1-based part, zero beyond the length
  int operator[](int i) const { return i >= 1 && i <= length() ? parts_[i - 1] : 0; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const;
  bool empty() const { return parts_.empty(); }
  const std::vector<int>& parts() const { return parts_; }
  std::string str() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

Partition conjugate(const Partition& lambda);

// m_j(lambda') = lambda_j - lambda_{j+1}
int col_mult(const Partition& lambda, int j);

// lambda_i >= mu_i >= lambda_{i+1} for all i
bool interlaces(const Partition& lambda, const Partition& mu);

// mu is contained in lambda
bool contains(const Partition& lambda, const Partition& mu);

// mu in lambda with lambda_i - mu_i in {0,1}
bool vertical_strip(const Partition& lambda, const Partition& mu);

// graded by size, lexicographic on parts inside each size
std::vector<Partition> enum_box(int rows, int cols);

std::vector<Partition> enum_interlacing_above(const Partition& mu, int cap);

// all mu with lambda > mu
std::vector<Partition> enum_interlacing_below(const Partition& lambda);

// all mu inside lambda with lambda/mu a vertical strip
std::vector<Partition> enum_vertical_strip_below(const Partition& lambda);

bool fits_box(const Partition& lambda, int rows, int cols);

}  // namespace sqw

template <>
struct std::hash<sqw::Partition> {
  std::size_t operator()(const sqw::Partition& p) const {
    std::size_t h = 1469598103934665603ULL;
    for (int x : p.parts()) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ULL;
    return h;
  }
};
