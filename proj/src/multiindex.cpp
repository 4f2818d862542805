#include "recnodes/multiindex.hpp"

#include <numeric>
#include <stdexcept>

namespace recnodes {

int total(const MultiIndex& alpha)
{
  return std::accumulate(alpha.begin(), alpha.end(), 0);
}

MultiIndex remove_entry(const MultiIndex& alpha, int i)
{
  if (i < 0 || i >= static_cast<int>(alpha.size()))
    throw std::out_of_range("remove_entry: position out of range");
  if (alpha.size() < 2)
    throw std::out_of_range("remove_entry: tuple length must stay >= 1");
  MultiIndex out;
  out.reserve(alpha.size() - 1);
  out.insert(out.end(), alpha.begin(), alpha.begin() + i);
  out.insert(out.end(), alpha.begin() + i + 1, alpha.end());
  return out;
}

MultiIndex insert_zero(const MultiIndex& alpha, int i)
{
  if (i < 0 || i > static_cast<int>(alpha.size()))
    throw std::out_of_range("insert_zero: position out of range");
  MultiIndex out;
  out.reserve(alpha.size() + 1);
  out.insert(out.end(), alpha.begin(), alpha.begin() + i);
  out.push_back(0);
  out.insert(out.end(), alpha.begin() + i, alpha.end());
  return out;
}

namespace {

void enumerate_rec(int length, int sum, MultiIndex& prefix,
                   std::vector<MultiIndex>& out)
{
  if (length == 1) {
    prefix.push_back(sum);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int head = sum; head >= 0; --head) {
    prefix.push_back(head);
    enumerate_rec(length - 1, sum - head, prefix, out);
    prefix.pop_back();
  }
}

} // namespace

std::vector<MultiIndex> enumerate_indices(int d, int n)
{
  if (d < 0 || n < 0)
    throw std::invalid_argument("enumerate_indices: d and n must be >= 0");
  std::vector<MultiIndex> out;
  out.reserve(static_cast<std::size_t>(binomial(n + d, d)));
  MultiIndex prefix;
  enumerate_rec(d + 1, n, prefix, out);
  return out;
}

std::int64_t binomial(int n, int k)
{
  if (k < 0 || k > n)
    return 0;
  if (k > n - k)
    k = n - k;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
  }
  return r;
}

} // namespace recnodes
