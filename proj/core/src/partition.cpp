#include "jhall/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace jhall {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
  }
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_unsorted(std::vector<int> parts) {
  if (std::any_of(parts.begin(), parts.end(), [](int x) { return x < 0; }))
    throw std::invalid_argument("partition parts must be nonnegative");
  std::erase(parts, 0);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Partition Partition::rectangle(int k, int r) {
  if (k < 0 || r < 0) throw std::invalid_argument("rectangle: negative size");
  if (k == 0 || r == 0) return {};
  return Partition(std::vector<int>(static_cast<std::size_t>(r), k));
}

Partition Partition::conjugate() const {
  if (parts_.empty()) return {};
  std::vector<int> c(static_cast<std::size_t>(parts_.front()), 0);
  for (int p : parts_)
    for (int i = 0; i < p; ++i) ++c[static_cast<std::size_t>(i)];
  return Partition(std::move(c));
}

int Partition::n_stat() const {
  int n = 0;
  for (std::size_t i = 0; i < parts_.size(); ++i) n += static_cast<int>(i) * parts_[i];
  return n;
}

std::vector<int> Partition::multiplicities() const {
  std::vector<int> m(static_cast<std::size_t>(parts_.empty() ? 1 : parts_.front() + 1), 0);
  for (int p : parts_) ++m[static_cast<std::size_t>(p)];
  return m;
}

long long Partition::z_factor() const {
  long long z = 1;
  const auto m = multiplicities();
  for (std::size_t i = 1; i < m.size(); ++i)
    for (int j = 1; j <= m[i]; ++j) z *= static_cast<long long>(i) * j;
  return z;
}

std::string Partition::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << "(" << p.to_string() << ")"; }

bool dominance_leq(const Partition& lambda, const Partition& mu) {
  if (lambda.weight() != mu.weight()) throw std::invalid_argument("dominance order needs partitions of equal weight");
  int a = 0;
  int b = 0;
  const std::size_t n = std::max(lambda.length(), mu.length());
  for (std::size_t i = 0; i < n; ++i) {
    a += lambda.part(i);
    b += mu.part(i);
    if (a > b) return false;
  }
  return true;
}

bool vertical_strip(const Partition& lambda, const Partition& mu, int r) {
  if (lambda.weight() - mu.weight() != r || r < 0) return false;
  if (mu.length() > lambda.length()) return false;
  for (std::size_t i = 0; i < lambda.length(); ++i) {
    const int d = lambda.part(i) - mu.part(i);
    if (d != 0 && d != 1) return false;
  }
  return true;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: negative weight");
  std::vector<Partition> out;
  std::vector<int> cur;
  partitions_rec(n, n, cur, out);
  return out;
}

std::vector<Partition> partitions_up_to(int n) {
  std::vector<Partition> out;
  for (int k = 0; k <= n; ++k) {
    auto ps = partitions_of(k);
    out.insert(out.end(), ps.begin(), ps.end());
  }
  return out;
}

std::vector<Partition> add_vertical_strip(const Partition& mu, int r) {
  std::vector<Partition> out;
  if (r < 0) return out;
  const std::size_t rows = mu.length() + static_cast<std::size_t>(r);
  std::vector<int> cur(rows);
  for (std::size_t i = 0; i < rows; ++i) cur[i] = mu.part(i);
  // Choose r rows receiving one box; rows beyond length(mu) must be an
  // initial run so the result stays a partition.
  std::function<void(std::size_t, int)> rec = [&](std::size_t row, int left) {
    if (left == 0) {
      std::vector<int> parts;
      for (int x : cur)
        if (x > 0) parts.push_back(x);
      bool ok = true;
      for (std::size_t i = 1; i < parts.size(); ++i)
        if (parts[i] > parts[i - 1]) ok = false;
      for (std::size_t i = 0; i + 1 < cur.size(); ++i)
        if (cur[i] == 0 && cur[i + 1] > 0) ok = false;
      if (ok) out.emplace_back(std::move(parts));
      return;
    }
    if (row >= rows || rows - row < static_cast<std::size_t>(left)) return;
    ++cur[row];
    rec(row + 1, left - 1);
    --cur[row];
    rec(row + 1, left);
  };
  rec(0, r);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::vector<Partition> ordered_partitions(int n, DominanceExtension ext) {
  auto ps = partitions_of(n);
  if (ext == DominanceExtension::ConjugateColex) {
    std::sort(ps.begin(), ps.end(), [](const Partition& a, const Partition& b) { return a.conjugate() < b.conjugate(); });
  }
  return ps;
}

std::size_t PartitionHash::operator()(const Partition& p) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (int x : p.parts()) {
    h ^= static_cast<std::size_t>(x);
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace jhall
