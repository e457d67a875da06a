#include "sparseyao/farey.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace sparseyao {

namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

Fraction make_fraction(long long p, long long q) {
  require(q >= 1, "fraction denominator must be positive");
  require(p >= 0 && p <= q, "fraction value must lie in [0,1]");
  long long g = std::gcd(p, q);
  if (g > 1) {
    p /= g;
    q /= g;
  }
  return {p, q};
}

bool operator==(Fraction a, Fraction b) { return a.p == b.p && a.q == b.q; }

bool operator<(Fraction a, Fraction b) { return a.p * b.q < b.p * a.q; }

long long totient(long long m) {
  require(m >= 1, "totient needs m >= 1");
  long long result = m;
  for (long long d = 2; d * d <= m; ++d) {
    if (m % d) continue;
    result -= result / d;
    while (m % d == 0) m /= d;
  }
  if (m > 1) result -= result / m;
  return result;
}

FareySet farey_set(int n) {
  require(n >= 1, "farey order must be >= 1");
  FareySet f;
  f.n = n;
  // Next-term recurrence: from consecutive a/b < c/d the following member is
  // (t*c - a)/(t*d - b) with t = (n + b) / d, already in lowest terms.
  long long a = 0, b = 1, c = 1, d = n;
  f.items.push_back({a, b});
  while (c <= n && !(c == 1 && d == 1)) {
    f.items.push_back({c, d});
    long long t = (n + b) / d;
    long long a2 = c, b2 = d;
    c = t * c - a;
    d = t * d - b;
    a = a2;
    b = b2;
  }
  f.items.push_back({1, 1});
  return f;
}

bool farey_adjacent_check(Fraction f1, Fraction f2) {
  require(f1 < f2, "farey_adjacent_check needs f1 < f2");
  long long det = f1.p * f2.q - f2.p * f1.q;
  return (det < 0 ? -det : det) == 1;
}

double rho(const FareySet& f, double x) {
  require(x >= 0.0 && x <= 1.0, "rho needs x in [0,1]");
  const auto& v = f.items;
  auto it = std::lower_bound(v.begin(), v.end(), x, [](Fraction fr, double t) {
    return static_cast<double>(fr.p) / static_cast<double>(fr.q) < t;
  });
  double best = 2.0;
  if (it != v.end())
    best = std::min(best, static_cast<double>(it->p) / it->q - x);
  if (it != v.begin()) {
    --it;
    best = std::min(best, x - static_cast<double>(it->p) / it->q);
  }
  return best;
}

double rho(int n, double x) { return rho(farey_set(n), x); }

double integral_rho_exact(const FareySet& f) {
  double total = 0.0;
  for (size_t i = 1; i < f.items.size(); ++i) {
    // For consecutive members the gap is exactly 1/(q_i * q_{i+1}).
    double g = 1.0 / (static_cast<double>(f.items[i - 1].q) * f.items[i].q);
    total += g * g / 4.0;
  }
  return total;
}

double integral_rho_exact(int n) { return integral_rho_exact(farey_set(n)); }

std::vector<long long> min_interval_denominators(int k) {
  require(k >= 1, "needs k >= 1");
  std::vector<long long> q(static_cast<size_t>(k), 0);
  int filled = 0;
  for (long long den = 1; den <= k && filled < k; ++den) {
    for (long long num = 0; num <= den; ++num) {
      // p/q lies in [(i-1)/k, i/k] exactly when i-1 <= p*k/q <= i.
      long long scaled = num * k;
      long long lo = (scaled + den - 1) / den;  // ceil(p*k/q)
      long long hi = scaled / den + 1;          // floor(p*k/q) + 1
      lo = std::max(lo, 1LL);
      hi = std::min(hi, static_cast<long long>(k));
      for (long long i = lo; i <= hi; ++i) {
        if (q[static_cast<size_t>(i - 1)] == 0) {
          q[static_cast<size_t>(i - 1)] = den;
          ++filled;
        }
      }
    }
  }
  return q;
}

std::pair<long long, long long> min_denominator_sums(int k) {
  require(k >= 2, "needs k >= 2");
  auto q = min_interval_denominators(k);
  long long s = 0, s3 = 0;
  for (long long v : q) {
    s += v;
    s3 += v * v * v;
  }
  return {s, s3};
}

}  // namespace sparseyao
