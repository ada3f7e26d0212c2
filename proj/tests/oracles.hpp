// Independent reference computations for the test suites. Nothing here
// calls into the library's enumeration or recurrence code.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

#include <gmpxx.h>

namespace oracle {

// OEIS A000111.
inline const std::vector<const char*> kSecantTangent = {
    "1",         "1",          "1",           "2",           "5",
    "16",        "61",         "272",         "1385",        "7936",
    "50521",     "353792",     "2702765",     "22368256",    "199360981",
    "1903757312", "19391512145", "209865342976", "2404879675441",
    "29088885112832", "370371188237525"};

inline bool zigzag_from(const std::vector<int>& w, bool first_up) {
  bool up = first_up;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (up ? !(w[i] < w[i + 1]) : !(w[i] > w[i + 1])) return false;
    up = !up;
  }
  return true;
}

// Visits every permutation of 1..n through std::next_permutation.
inline void all_perms(std::size_t n, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  do {
    f(w);
  } while (std::next_permutation(w.begin(), w.end()));
}

inline std::uint64_t count_zigzag(std::size_t n, bool first_up) {
  std::uint64_t c = 0;
  all_perms(n, [&](const std::vector<int>& w) { c += zigzag_from(w, first_up); });
  return c;
}

// Down-up permutations of size n+1 that start with k+1.
inline std::uint64_t entringer_brute(std::size_t n, std::size_t k) {
  std::uint64_t c = 0;
  all_perms(n + 1, [&](const std::vector<int>& w) {
    if (w[0] == static_cast<int>(k + 1) && zigzag_from(w, false)) ++c;
  });
  return c;
}

inline unsigned interior_peaks(const std::vector<int>& w) {
  unsigned c = 0;
  for (std::size_t i = 1; i + 1 < w.size(); ++i) c += w[i - 1] < w[i] && w[i] > w[i + 1];
  return c;
}

// Ordinary Taylor coefficients of sn, cn, dn at a fixed m, from
// (k+1) a_{k+1} = [product]_k with plain Cauchy products.
struct JacobiOgf {
  std::vector<mpq_class> sn, cn, dn;
};

inline JacobiOgf jacobi_ogf(const mpq_class& m, std::size_t order) {
  JacobiOgf r;
  r.sn.assign(order + 1, 0);
  r.cn.assign(order + 1, 0);
  r.dn.assign(order + 1, 0);
  r.cn[0] = 1;
  r.dn[0] = 1;
  auto cauchy = [](const std::vector<mpq_class>& a, const std::vector<mpq_class>& b,
                   std::size_t k) {
    mpq_class s = 0;
    for (std::size_t i = 0; i <= k; ++i) s += a[i] * b[k - i];
    return s;
  };
  for (std::size_t k = 0; k < order; ++k) {
    const mpq_class kk(static_cast<long>(k + 1));
    r.sn[k + 1] = cauchy(r.cn, r.dn, k) / kk;
    r.cn[k + 1] = -cauchy(r.sn, r.dn, k) / kk;
    r.dn[k + 1] = -m * cauchy(r.sn, r.cn, k) / kk;
  }
  return r;
}

inline mpz_class fact(unsigned long n) {
  mpz_class f = 1;
  for (unsigned long i = 2; i <= n; ++i) f *= i;
  return f;
}

// tan u = sin u / cos u as an ordinary series, by long division.
inline std::vector<mpq_class> tan_ogf(std::size_t order) {
  std::vector<mpq_class> s(order + 1, 0), c(order + 1, 0), t(order + 1, 0);
  for (std::size_t i = 0; i <= order; ++i) {
    mpq_class v(1, 1);
    v /= mpq_class(fact(i));
    const bool neg = (i / 2) % 2 == 1;
    if (i % 2 == 1) s[i] = neg ? -v : v;
    else c[i] = neg ? -v : v;
  }
  for (std::size_t i = 0; i <= order; ++i) {
    mpq_class acc = s[i];
    for (std::size_t j = 0; j < i; ++j) acc -= t[j] * c[i - j];
    t[i] = acc;
  }
  return t;
}

}  // namespace oracle
