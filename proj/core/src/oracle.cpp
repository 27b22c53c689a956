#include "jhall/oracle.hpp"

#include <algorithm>
#include <future>
#include <random>
#include <set>
#include <string>
#include <tuple>

#include "jhall/memo.hpp"

namespace jhall::oracle {
namespace {

void require_prime(int p) {
  if (p != 2 && p != 3) throw std::invalid_argument("oracle supports p = 2 or 3, got " + std::to_string(p));
}

std::uint64_t checked_power(int p, int d, std::uint64_t budget) {
  std::uint64_t n = 1;
  for (int i = 0; i < d; ++i) {
    n *= static_cast<std::uint64_t>(p);
    if (n > budget)
      throw BudgetExceeded(std::to_string(p) + "^" + std::to_string(d) + " elements exceed the budget of " +
                           std::to_string(budget));
  }
  return n;
}

// Visits every vector of the F_p-span of the rows of `basis`. The first few
// coordinates are fixed per task and the tasks run concurrently, each with
// its own accumulator.
template <class Acc, class Visit>
std::vector<Acc> sweep_span(const FpMatrix& basis, Visit visit) {
  const int p = basis.prime();
  const int d = basis.rows();
  const int len = basis.cols();
  const int fixed = std::min(d, p == 2 ? 3 : 2);
  int tasks = 1;
  for (int i = 0; i < fixed; ++i) tasks *= p;

  auto run = [&](int task) {
    Acc acc{};
    std::vector<std::uint8_t> vec(static_cast<std::size_t>(len), 0);
    std::vector<int> digits(static_cast<std::size_t>(d), 0);
    auto add_row = [&](int r) {
      for (int c = 0; c < len; ++c) vec[static_cast<std::size_t>(c)] = static_cast<std::uint8_t>((vec[c] + basis.at(r, c)) % p);
    };
    for (int i = 0, t = task; i < fixed; ++i, t /= p)
      for (int k = 0; k < t % p; ++k) add_row(i);
    while (true) {
      visit(acc, vec);
      int j = fixed;
      // p additions of a row return it to zero, so a carry is one more add.
      while (j < d) {
        add_row(j);
        if (++digits[static_cast<std::size_t>(j)] < p) break;
        digits[static_cast<std::size_t>(j)] = 0;
        ++j;
      }
      if (j == d) break;
    }
    return acc;
  };

  std::vector<std::future<Acc>> futures;
  for (int t = 0; t < tasks; ++t) futures.push_back(std::async(std::launch::async, run, t));
  std::vector<Acc> out;
  for (auto& f : futures) out.push_back(f.get());
  return out;
}

FpMatrix unflatten(const std::vector<std::uint8_t>& vec, int rows, int cols, int p) {
  FpMatrix m(rows, cols, p);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.set(i, j, vec[static_cast<std::size_t>(i * cols + j)]);
  return m;
}

FpMatrix random_matrix(int rows, int cols, int p, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dist(0, p - 1);
  FpMatrix m(rows, cols, p);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.set(i, j, dist(rng));
  return m;
}

FpMatrix random_invertible(int n, int p, std::mt19937_64& rng) {
  while (true) {
    FpMatrix m = random_matrix(n, n, p, rng);
    if (m.rank() == n) return m;
  }
}

FpMatrix first_rows(const FpMatrix& m, int k) {
  FpMatrix out(k, m.cols(), m.prime());
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < m.cols(); ++j) out.set(i, j, m.at(i, j));
  return out;
}

// ker g subset span(rows)
bool kernel_inside(const FpMatrix& g, const FpMatrix& rows) {
  const FpMatrix k = g.nullspace();
  return FpMatrix::vstack(rows, k).rank() == rows.rank();
}

}  // namespace

int submodule_weight_cap(int p) {
  require_prime(p);
  return p == 2 ? 5 : 4;
}

NilModule jordan_module(const Partition& lambda, int p) {
  require_prime(p);
  const int n = lambda.weight();
  FpMatrix a(n, n, p);
  int offset = 0;
  for (int s : lambda.parts()) {
    for (int j = 0; j + 1 < s; ++j) a.set(offset + j + 1, offset + j, 1);
    offset += s;
  }
  return {p, lambda, std::move(a)};
}

Partition type_from_ranks(const std::vector<int>& ranks) {
  std::vector<int> conj;
  for (std::size_t k = 1; k < ranks.size(); ++k) {
    const int d = ranks[k - 1] - ranks[k];
    if (d < 0 || (!conj.empty() && d > conj.back())) throw std::logic_error("rank sequence is not that of a nilpotent");
    if (d > 0) conj.push_back(d);
  }
  return Partition(conj).conjugate();
}

Partition recover_type(const FpMatrix& action) {
  return type_of_subspace(FpMatrix::identity(action.rows(), action.prime()), action);
}

bool is_invariant(const FpMatrix& rows, const FpMatrix& action) {
  const FpMatrix image = rows * action.transpose();
  return FpMatrix::vstack(rows, image).rank() == rows.rank();
}

Partition type_of_subspace(const FpMatrix& rows, const FpMatrix& action) {
  const FpMatrix nt = action.transpose();
  std::vector<int> ranks{rows.rank()};
  FpMatrix m = rows;
  while (ranks.back() > 0) {
    m = m * nt;
    ranks.push_back(m.rank());
    if (ranks.size() > static_cast<std::size_t>(action.rows()) + 2) throw std::logic_error("action is not nilpotent");
  }
  return type_from_ranks(ranks);
}

Partition type_of_quotient(const FpMatrix& rows, const FpMatrix& action) {
  const FpMatrix nt = action.transpose();
  const int base = rows.rank();
  FpMatrix power = FpMatrix::identity(action.rows(), action.prime());
  std::vector<int> ranks{action.rows() - base};
  while (ranks.back() > 0) {
    power = power * nt;
    ranks.push_back(FpMatrix::vstack(power, rows).rank() - base);
    if (ranks.size() > static_cast<std::size_t>(action.rows()) + 2) throw std::logic_error("action is not nilpotent");
  }
  return type_from_ranks(ranks);
}

std::vector<FpMatrix> enumerate_subspaces(int n, int k, int p) {
  require_prime(p);
  if (k < 0 || k > n) return {};
  std::vector<FpMatrix> out;
  std::vector<int> pivots(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) pivots[static_cast<std::size_t>(i)] = i;
  while (true) {
    // Free entries: row i, columns right of its pivot that are not pivots.
    std::vector<std::pair<int, int>> free;
    for (int i = 0; i < k; ++i)
      for (int c = pivots[static_cast<std::size_t>(i)] + 1; c < n; ++c)
        if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) free.emplace_back(i, c);
    std::vector<int> values(free.size(), 0);
    while (true) {
      FpMatrix m(k, n, p);
      for (int i = 0; i < k; ++i) m.set(i, pivots[static_cast<std::size_t>(i)], 1);
      for (std::size_t f = 0; f < free.size(); ++f) m.set(free[f].first, free[f].second, values[f]);
      out.push_back(std::move(m));
      std::size_t j = 0;
      while (j < values.size() && ++values[j] == p) values[j++] = 0;
      if (j == values.size()) break;
    }
    // Next pivot combination.
    int i = k - 1;
    while (i >= 0 && pivots[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++pivots[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) pivots[static_cast<std::size_t>(j)] = pivots[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

FpMatrix hom_space_basis(const Partition& lambda, const Partition& mu, int p) {
  const FpMatrix jl = jordan_module(lambda, p).action;
  const FpMatrix jm = jordan_module(mu, p).action;
  const int nl = lambda.weight();
  const int nm = mu.weight();
  // Unknown X(i,k) sits at column i * nl + k; one equation per entry (i,j)
  // of X J_lambda - J_mu X.
  FpMatrix system(nm * nl, nm * nl, p);
  for (int i = 0; i < nm; ++i)
    for (int j = 0; j < nl; ++j) {
      const int row = i * nl + j;
      for (int k = 0; k < nl; ++k)
        if (jl.at(k, j)) system.set(row, i * nl + k, system.at(row, i * nl + k) + jl.at(k, j));
      for (int k = 0; k < nm; ++k)
        if (jm.at(i, k)) system.set(row, k * nl + j, system.at(row, k * nl + j) - jm.at(i, k));
    }
  return system.nullspace();
}

int hom_dim_oracle(const Partition& lambda, const Partition& mu, int p) {
  require_prime(p);
  if (lambda.weight() > kMaxHomDimension || mu.weight() > kMaxHomDimension)
    throw BudgetExceeded("hom_dim_oracle: modules of dimension above " + std::to_string(kMaxHomDimension));
  return hom_space_basis(lambda, mu, p).rows();
}

std::uint64_t aut_count(const Partition& lambda, int p, std::uint64_t budget) {
  require_prime(p);
  const FpMatrix basis = hom_space_basis(lambda, lambda, p);
  checked_power(p, basis.rows(), budget);
  const int n = lambda.weight();
  struct Acc {
    std::uint64_t count = 0;
    std::vector<std::uint8_t> scratch;
  };
  auto parts = sweep_span<Acc>(basis, [&](Acc& acc, const std::vector<std::uint8_t>& x) {
    acc.scratch.assign(x.begin(), x.end());
    if (fp_rank_inplace(acc.scratch.data(), n, n, p) == n) ++acc.count;
  });
  std::uint64_t total = 0;
  for (const auto& a : parts) total += a.count;
  return total;
}

const TypeHistogram& submodule_histogram(const Partition& lambda, int p) {
  if (lambda.weight() > submodule_weight_cap(p))
    throw BudgetExceeded("submodule enumeration is capped at |lambda| <= " + std::to_string(submodule_weight_cap(p)) +
                         " for p = " + std::to_string(p));
  static MemoCache<std::pair<Partition, int>, TypeHistogram> cache;
  return cache.get_or_compute({lambda, p}, [&] {
    const NilModule m = jordan_module(lambda, p);
    TypeHistogram h;
    for (int k = 0; k <= m.dim(); ++k)
      for (const auto& w : enumerate_subspaces(m.dim(), k, p)) {
        if (!is_invariant(w, m.action)) continue;
        ++h[{type_of_quotient(w, m.action), type_of_subspace(w, m.action)}];
      }
    return h;
  });
}

std::uint64_t count_submodules(const Partition& lambda, const Partition& mu, const Partition& nu, int p) {
  const TypeHistogram& h = submodule_histogram(lambda, p);
  auto it = h.find({mu, nu});
  return it == h.end() ? 0 : it->second;
}

TypeHistogram classify_morphisms(const Partition& lambda, const Partition& mu, int p, std::uint64_t budget) {
  require_prime(p);
  const FpMatrix basis = hom_space_basis(lambda, mu, p);
  checked_power(p, basis.rows(), budget);
  const FpMatrix jl = jordan_module(lambda, p).action;
  const FpMatrix jm = jordan_module(mu, p).action;
  const int nl = lambda.weight();
  const int nm = mu.weight();
  auto parts = sweep_span<TypeHistogram>(basis, [&](TypeHistogram& h, const std::vector<std::uint8_t>& x) {
    const FpMatrix l = unflatten(x, nm, nl, p);
    const Partition ker = type_of_subspace(l.nullspace(), jl);
    const Partition coker = type_of_quotient(l.transpose(), jm);
    ++h[{ker, coker}];
  });
  TypeHistogram total;
  for (const auto& h : parts)
    for (const auto& [k, c] : h) total[k] += c;
  return total;
}

SampleReport appendix_identity_check(int p, std::array<int, 3> dims, int trials, std::uint64_t seed) {
  require_prime(p);
  const auto [d1, d2, d3] = dims;
  for (int d : dims) {
    if (d < 0) throw std::invalid_argument("appendix check: negative dimension");
    if (d > kMaxAppendixDimension)
      throw BudgetExceeded("appendix check: dimensions are capped at " + std::to_string(kMaxAppendixDimension));
  }
  // ker g has dimension at least d2 - d3 and must fit in im f.
  if (d2 - d3 > d1)
    throw std::invalid_argument("appendix check: no f, g of these dimensions have ker g inside im f");
  std::mt19937_64 rng(seed);
  SampleReport r;
  r.requested = trials;
  const long max_attempts = 2000L * std::max(trials, 1);
  long attempts = 0;
  while (r.accepted < trials && attempts++ < max_attempts) {
    const FpMatrix f = random_matrix(d2, d1, p, rng);
    const FpMatrix g = random_matrix(d3, d2, p, rng);
    if (!kernel_inside(g, f.transpose())) {
      ++r.rejected;
      continue;
    }
    ++r.accepted;
    if (f.rank() + g.rank() != d2 + (g * f).rank()) ++r.failures;
  }
  r.configurations = r.accepted > 0 ? 1 : 0;
  return r;
}

SampleReport appendix_random_check(int p, int max_dim, int trials, std::uint64_t seed) {
  require_prime(p);
  if (max_dim < 0) throw std::invalid_argument("appendix check: negative dimension");
  if (max_dim > kMaxAppendixDimension)
    throw BudgetExceeded("appendix check: dimensions are capped at " + std::to_string(kMaxAppendixDimension));
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dim(0, max_dim);
  SampleReport r;
  r.requested = trials;
  std::set<std::array<int, 3>> seen;
  const long max_attempts = 2000L * std::max(trials, 1);
  long attempts = 0;
  while (r.accepted < trials && attempts++ < max_attempts) {
    const int d1 = dim(rng), d2 = dim(rng), d3 = dim(rng);
    const FpMatrix f = random_matrix(d2, d1, p, rng);
    const FpMatrix g = random_matrix(d3, d2, p, rng);
    if (!kernel_inside(g, f.transpose())) {
      ++r.rejected;
      continue;
    }
    ++r.accepted;
    seen.insert({d1, d2, d3});
    if (f.rank() + g.rank() != d2 + (g * f).rank()) ++r.failures;
  }
  r.configurations = static_cast<int>(seen.size());
  return r;
}

SampleReport lemma_square_check(int p, int n, int trials, std::uint64_t seed) {
  require_prime(p);
  if (n < 0) throw std::invalid_argument("lemma check: negative dimension");
  if (n > kMaxAppendixDimension)
    throw BudgetExceeded("lemma check: dimension is capped at " + std::to_string(kMaxAppendixDimension));
  std::mt19937_64 rng(seed);
  SampleReport r;
  r.requested = trials;
  for (int t = 0; t < trials; ++t) {
    std::uniform_int_distribution<int> pick(0, n);
    int a = pick(rng);
    int a_sub = std::uniform_int_distribution<int>(0, a)(rng);
    const FpMatrix frame = random_invertible(n, p, rng);
    // V1' subset V1 subset V2 = F_p^n; f, f' are the inclusions.
    const FpMatrix v1 = first_rows(frame, a);
    const FpMatrix v1_sub = first_rows(frame, a_sub);
    const FpMatrix f = v1.transpose();
    const FpMatrix f_sub = v1_sub.transpose();
    FpMatrix h_sub(a, a_sub, p);
    for (int i = 0; i < a_sub; ++i) h_sub.set(i, i, 1);
    // g, g' are quotient maps with kernels V1' and V1, in scrambled bases.
    const FpMatrix g = random_invertible(n - a_sub, p, rng) * v1_sub.nullspace();
    const FpMatrix g_bar = random_invertible(n - a, p, rng) * v1.nullspace();
    ++r.accepted;
    const bool top_exact =
        f_sub.rank() == a_sub && (g * f_sub).is_zero() && g.rank() == n - a_sub && g.nullspace().rows() == a_sub;
    const bool bottom_exact =
        f.rank() == a && (g_bar * f).is_zero() && g_bar.rank() == n - a && g_bar.nullspace().rows() == a;
    const bool square = f * h_sub == f_sub && kernel_inside(g, g_bar.nullspace());
    const bool identity = a + (n - a_sub) == n + (g * f).rank();
    if (!(top_exact && bottom_exact && square && identity)) ++r.failures;
  }
  return r;
}

}  // namespace jhall::oracle
