#include "pq/group.hpp"

#include <algorithm>
#include <set>

#include "pq/error.hpp"

namespace pq {

namespace {

using Row = std::vector<mpz_class>;

// rows[a] <- x*rows[a] + y*rows[b], rows[b] <- u*rows[a] + v*rows[b] with
// xv - yu = +-1, so the transformation stays unimodular.
void combine(Row& a, Row& b, const mpz_class& x, const mpz_class& y, const mpz_class& u, const mpz_class& v) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    mpz_class na = x * a[i] + y * b[i];
    mpz_class nb = u * a[i] + v * b[i];
    a[i] = std::move(na);
    b[i] = std::move(nb);
  }
}

}  // namespace

GroupAnalysis group_analysis(const std::vector<Rational>& generators) {
  GroupAnalysis out;
  std::vector<PrimeFactorization> factored;
  std::set<mpz_class> primes;
  for (const auto& g : generators) {
    if (g.is_zero()) throw InvalidArgument("group generator must be nonzero");
    factored.push_back(g.factor());
    for (const auto& [p, e] : factored.back().exponents) primes.insert(p);
  }
  out.primes.assign(primes.begin(), primes.end());
  const std::size_t m = generators.size(), k = out.primes.size();

  for (const auto& f : factored) {
    Row row(k, 0);
    for (std::size_t j = 0; j < k; ++j) {
      auto it = f.exponents.find(out.primes[j]);
      if (it != f.exponents.end()) row[j] = it->second;
    }
    out.exponents.push_back(row);
    out.sign_parity.push_back(f.sign < 0 ? 1 : 0);
  }

  // Row-reduce [E | I] over Z with unimodular operations. Rows whose E part
  // vanishes carry, in the I part, a basis of the left kernel of E.
  std::vector<Row> work(m, Row(k + m, 0));
  for (std::size_t i = 0; i < m; ++i) {
    std::copy(out.exponents[i].begin(), out.exponents[i].end(), work[i].begin());
    work[i][k + i] = 1;
  }
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < k && pivot_row < m; ++col) {
    for (std::size_t r = pivot_row + 1; r < m; ++r) {
      if (work[r][col] == 0) continue;
      mpz_class a = work[pivot_row][col], b = work[r][col], g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      mpz_class u = -b / g, v = a / g;
      combine(work[pivot_row], work[r], s, t, u, v);
    }
    if (work[pivot_row][col] != 0) ++pivot_row;
  }
  out.lattice_rank = static_cast<int>(pivot_row);

  for (std::size_t r = pivot_row; r < m; ++r) {
    Row rel(work[r].begin() + static_cast<long>(k), work[r].end());
    mpz_class parity = 0;
    for (std::size_t i = 0; i < m; ++i) parity += rel[i] * out.sign_parity[i];
    if (mpz_odd_p(parity.get_mpz_t())) out.contains_minus_one = true;
    out.relations.push_back(std::move(rel));
  }
  return out;
}

}  // namespace pq
