#pragma once

#include <map>
#include <ostream>
#include <utility>
#include <vector>

#include "fglab/adams.hpp"

namespace fglab {

/// t_0 .. t_n: the coefficients of 1 / (3 - 3x + x^2), from the recurrence
/// t_0 = t_1 = 1/3, t_{k+2} = t_{k+1} - t_k / 3.
std::vector<Rat> theta_gen(int n);

/// t_k from its 6-periodic closed form.
Rat theta_gen_closed(int k);

/// Coefficients c_mn, 0 <= m, n <= bound, of
/// theta^3((1 - L1)(1 - L2)) = sum c_mn x^m y^n with x = 1 - L1, y = 1 - L2.
struct ThetaTable {
  int bound = 0;
  std::vector<std::vector<Rat>> c;

  /// c_mn; zero for negative indices. Throws IndexOutOfRange past the bound.
  Rat at(int m, int n) const;
  /// The same table over the 2-adic integers (all denominators are powers of 3).
  std::vector<std::vector<Padic2>> to_2adic(int precision) const;
  /// Rows m, columns n, with a header row "m,0,1,...".
  void write_csv(std::ostream& os) const;
};

/// theta^3((1 - L1)(1 - L2)) as a series in x, y of total degree <= bound.
QSeries theta3_series(int bound);

/// 3 (1 + (1-x)(1-y) + (1-x)^2 (1-y)^2) / ((3 - 3x + x^2)(3 - 3y + y^2)) by
/// series division.
ThetaTable theta3_direct(int bound);

/// c_mn by the nine-term bilinear formula in the t_k.
Rat theta3_bilinear(int m, int n);

/// c_mn from c_0n = [n = 0], c_1n = 3 t_{n+1} (n >= 1), and for m, n >= 2
/// the 6-periodic form (-1)^(M+N) 3^-(3M+3N+floor((i+k)/2)) b_{i-k} with
/// m = 6M + i, n = 6N + k.
Rat theta3_periodic(int m, int n);

/// c_mn from c_0n = [n = 0], c_1n = 3 t_{n+1} (n >= 1), and for m, n >= 2 the
/// residue-class rule 3^-floor((m+n)/2) * {2, 1, 0, -1} by m - n modulo 12.
/// The rule carries no sign for m - n = 6 (mod 12), where the series has
/// -2 * 3^-floor((m+n)/2).
Rat theta3_closed(int m, int n);

/// A virtual bundle sum_r mult_r * L1^a_r L2^b_r over CP^inf x CP^inf,
/// keyed by (a, b).
using VirtualBundle = std::map<std::pair<int, int>, int>;

/// theta^k from the line-bundle formula theta^k(M) = 1 + M* + ... + M*^(k-1)
/// and multiplicativity, with x = 1 - L1, y = 1 - L2 (so L1* = 1/(1-x)).
/// Series in x, y of total degree <= bound.
QSeries theta_of_bundle(int k, const VirtualBundle& bundle, int bound);

/// The stable class k q_k(x' + y' - x'y') / (q_k(x') q_k(y')) with
/// q_k(t) = (1 - (1-t)^k) / t, as a series in x', y' (named "xp", "yp").
/// Throws EvenK for even k.
QSeries theta_k_virtual(int k, int bound);

/// Rewrites a series in x', y' in terms of x = 1 - L1, y = 1 - L2 through
/// x' = -x / (1 - x).
QSeries orientation_to_x(const QSeries& series_in_xp);

/// psi^{3^-1} d_k at the Thom level: the base-level operation on
/// sum_{m,n} c_mn sum_i n_k^i a_{i-m, k-i-n}, reduced to the d_k.
QSeries thom_psi_dk(int k, const ThetaTable& theta, DReducer& reducer);

/// thom_psi_dk for k = 2..max_k.
PsiTable thom_psi_table(int max_k, const ThetaTable& theta, DReducer& reducer);

}  // namespace fglab
