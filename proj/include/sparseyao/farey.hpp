#pragma once

#include <utility>
#include <vector>

namespace sparseyao {

// Reduced fraction p/q with value in [0,1]. make_fraction normalizes and
// validates; all comparisons use exact integer arithmetic.
struct Fraction {
  long long p = 0;
  long long q = 1;
};

Fraction make_fraction(long long p, long long q);
bool operator==(Fraction a, Fraction b);
bool operator<(Fraction a, Fraction b);

// Farey set of order n: every reduced fraction in [0,1] with denominator
// <= n, strictly increasing from 0/1 to 1/1.
struct FareySet {
  int n = 1;
  std::vector<Fraction> items;
};

// Count of 1 <= j <= m coprime to m.
long long totient(long long m);

FareySet farey_set(int n);

// Unimodularity of a fraction pair: |p1*q2 - p2*q1| == 1. Holds exactly for
// consecutive members of any Farey set. Requires f1 < f2.
bool farey_adjacent_check(Fraction f1, Fraction f2);

// Distance from x in [0,1] to the nearest member of F_n.
double rho(const FareySet& f, double x);
double rho(int n, double x);

// Exact value of the integral of rho over [0,1]: the function is a tent of
// height g/2 on each gap g between consecutive members, contributing g^2/4.
double integral_rho_exact(const FareySet& f);
double integral_rho_exact(int n);

// For each closed interval [(i-1)/k, i/k], i = 1..k, the smallest positive
// denominator q such that some p/q lies in the interval. Endpoint fractions
// count for both adjacent intervals; q_i <= k always.
std::vector<long long> min_interval_denominators(int k);

// (sum of q_i, sum of q_i^3) over the k intervals; k >= 2.
std::pair<long long, long long> min_denominator_sums(int k);

}  // namespace sparseyao
