#include "sqw/partition.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "sqw/errors.hpp"

namespace sqw {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw ParseError("negative part");
    if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1]) throw ParseError("parts not weakly decreasing");
  }
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  if (text.empty()) return Partition();
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string_view tok = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    if (tok.empty() || tok.size() > 9) throw ParseError("bad partition '" + std::string(text) + "'");
    for (char c : tok)
      if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("bad partition '" + std::string(text) + "'");
    parts.push_back(std::stoi(std::string(tok)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (!std::is_sorted(parts.rbegin(), parts.rend()))
    throw ParseError("partition '" + std::string(text) + "' is not weakly decreasing");
  return Partition(std::move(parts));
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string Partition::str() const {
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s;
}

Partition conjugate(const Partition& lambda) {
  std::vector<int> c(lambda[1], 0);
  for (int x : lambda.parts())
    for (int i = 0; i < x; ++i) ++c[i];
  return Partition(std::move(c));
}

int col_mult(const Partition& lambda, int j) { return lambda[j] - lambda[j + 1]; }

bool interlaces(const Partition& lambda, const Partition& mu) {
  int n = std::max(lambda.length(), mu.length());
  for (int i = 1; i <= n; ++i)
    if (!(lambda[i] >= mu[i] && mu[i] >= lambda[i + 1])) return false;
  return true;
}

bool contains(const Partition& lambda, const Partition& mu) {
  if (mu.length() > lambda.length()) return false;
  for (int i = 1; i <= mu.length(); ++i)
    if (mu[i] > lambda[i]) return false;
  return true;
}

bool vertical_strip(const Partition& lambda, const Partition& mu) {
  if (!contains(lambda, mu)) return false;
  for (int i = 1; i <= lambda.length(); ++i)
    if (lambda[i] - mu[i] > 1) return false;
  return true;
}

bool fits_box(const Partition& lambda, int rows, int cols) {
  return lambda.length() <= rows && lambda[1] <= cols;
}

namespace {

void gen_box(int rows, int maxpart, int remaining, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  if (static_cast<int>(cur.size()) == rows) return;
  for (int p = std::min(maxpart, remaining); p >= 1; --p) {
    cur.push_back(p);
    gen_box(rows, p, remaining - p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> enum_box(int rows, int cols) {
  if (rows < 0 || cols < 0) throw PreconditionError("enum_box with negative bounds");
  std::vector<Partition> out;
  std::vector<int> cur;
  for (int n = 0; n <= rows * cols; ++n) {
    std::vector<Partition> level;
    gen_box(rows, cols, n, cur, level);
    std::sort(level.begin(), level.end());
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::vector<Partition> enum_interlacing_above(const Partition& mu, int cap) {
  std::vector<Partition> out;
  if (cap < mu[1]) return out;
  int n = mu.length() + 1;
  std::vector<int> cur(n, 0);
  auto rec = [&](auto&& self, int i) -> void {
    if (i > n) {
      out.emplace_back(cur);
      return;
    }
    int lo = mu[i];
    int hi = i == 1 ? cap : mu[i - 1];
    for (int v = lo; v <= hi; ++v) {
      cur[i - 1] = v;
      self(self, i + 1);
    }
  };
  rec(rec, 1);
  std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

std::vector<Partition> enum_interlacing_below(const Partition& lambda) {
  std::vector<Partition> out;
  int n = lambda.length();
  std::vector<int> cur(n, 0);
  auto rec = [&](auto&& self, int i) -> void {
    if (i > n) {
      out.emplace_back(cur);
      return;
    }
    for (int v = lambda[i + 1]; v <= lambda[i]; ++v) {
      cur[i - 1] = v;
      self(self, i + 1);
    }
  };
  rec(rec, 1);
  return out;
}

std::vector<Partition> enum_vertical_strip_below(const Partition& lambda) {
  std::vector<Partition> out;
  int n = lambda.length();
  std::vector<int> cur(n, 0);
  auto rec = [&](auto&& self, int i) -> void {
    if (i > n) {
      out.emplace_back(cur);
      return;
    }
    for (int d = 0; d <= 1; ++d) {
      int v = lambda[i] - d;
      if (i > 1 && v > cur[i - 2]) continue;
      cur[i - 1] = v;
      self(self, i + 1);
    }
  };
  rec(rec, 1);
  return out;
}

}  // namespace sqw
