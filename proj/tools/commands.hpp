#pragma once

#include <string>

#include "report.hpp"

namespace fglab::cli {

/// Coefficients c_1..c_n of the inverse of x + b1 x^2 + ... + bn x^(n+1);
/// method "recursive" or "residue".
Report series_inverse(const Config& cfg, int n, const std::string& method);

/// a_ij images under the twist of x + y + v x y by the generic strict series.
Report fgl_twist_images(const Config& cfg, int n);
/// Axiom check of the twisted law to the configured bound.
Report fgl_check_twisted(const Config& cfg, int n);
/// Logarithm of the multiplicative or Todd law.
Report fgl_log_of(const Config& cfg, const std::string& law);
/// The law attached to the Todd genus.
Report fgl_todd(const Config& cfg);
/// [CP^n] in the a_ij under the configured substitution mode.
Report fgl_cpn(const Config& cfg, int n);
/// Image of a bordism expression under the twisted law with b1..bn.
Report fgl_miscenko(const Config& cfg, const std::string& expr, int n);

Report chern_system(const Config& cfg, int dim);
Report chern_reduce(const Config& cfg, int dim);
Report chern_nullspace(const Config& cfg, int dim);
/// `space` such as "CP1xCP3", `monomial` such as "c1^2*c2".
Report chern_number_of(const Config& cfg, const std::string& space, const std::string& monomial);
/// T4 on a product of projective spaces, or on five comma-separated Chern
/// numbers c1^4, c1*c3, c1^2*c2, c2^2, c4.
Report chern_todd(const Config& cfg, const std::string& space, const std::string& numbers);

Report adams_beta(const Config& cfg, int k, int i);
Report adams_matrix(const Config& cfg, int k, int n, bool mod2);
/// (3x - 3x^2 + x^3)^j.
Report adams_power(const Config& cfg, int j);
Report adams_nki(const Config& cfg, int k);
Report adams_relations(const Config& cfg, int n, bool at_v1);
Report adams_psi(const Config& cfg, int max_k, bool mod2);

Report cannibal_sequence(const Config& cfg, int n);
/// c_mn for m, n <= the configured bound.
Report cannibal_table(const Config& cfg);
Report cannibal_thom(const Config& cfg, int max_k, bool mod2);
Report cannibal_spherical(const Config& cfg, int max_weight);
Report cannibal_lift(const Config& cfg, const std::string& z, int target);
Report cannibal_virtual(const Config& cfg, int k);

/// `n` < 0 expands to the degree of the polynomial.
Report mahler_expand_poly(const Config& cfg, const std::string& poly, int n);
/// `k` is an integer (exact) or p/q with q odd (2-adic at the configured precision).
Report mahler_dilate(const Config& cfg, const std::string& k, int i);
Report mahler_matrix(const Config& cfg, long k, int n);
Report mahler_check(const Config& cfg, int n, int k);

/// `u` is an integer or p/q with q odd.
Report artin_schreier(const Config& cfg, const std::string& u);

}  // namespace fglab::cli
