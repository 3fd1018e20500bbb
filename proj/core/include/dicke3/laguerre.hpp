#pragma once

namespace dicke3 {

/// Associated Laguerre polynomial L_n^k(x) by the three-term recurrence.
double laguerre_assoc(int n, int k, double x);

/// <m| exp(d (a^dagger - a)) |n> for real d.
///
/// n >= m: sqrt(m!/n!) e^{-d^2/2} (-d)^{n-m} L_m^{n-m}(d^2)
/// m >  n: sqrt(n!/m!) e^{-d^2/2}   d ^{m-n} L_n^{m-n}(d^2)
double displaced_overlap(int m, int n, double d);

}  // namespace dicke3
