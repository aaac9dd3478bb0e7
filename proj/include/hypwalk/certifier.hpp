#pragma once

#include <functional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "hypwalk/model_space.hpp"

namespace hypwalk {

/// A signed generator: gens[index]^sign.
struct SignedSymbol {
  int index = 0;  // 0-based
  int sign = +1;
};

/// The verified inequalities for a generator tuple (g_1,...,g_k):
///   d(x0, g_i x0) >= 2 (g_j^s x0 . g_l^t x0)_{x0} + 18 delta + 1
/// over all i and all pairs of distinct signed symbols. A certificate
/// witnesses that the orbit map of <g_1,...,g_k> is a quasi-isometric
/// embedding with lower bound |g| <= d(x0, g x0) and upper bound
/// d(x0, g x0) <= M |g|, hence the subgroup is free of rank k, undistorted,
/// and purely loxodromic.
struct Certificate {
  std::vector<GroupElement> generators;
  double delta_used = 0.0;
  double min_displacement = 0.0;
  double max_product = 0.0;
  double margin = 0.0;  // min_displacement - (2 max_product + 18 delta + 1)
  double lipschitz_constant = 0.0;  // M = max_i d(x0, g_i x0)
  // Lower-bound guarantee: |g|_Gamma <= d(x0, g x0), i.e. constants (1, 0).
  bool free_of_rank_k = true;
  bool undistorted = true;
  bool qi_embedding = true;
  bool purely_loxodromic = true;
};

struct Violation {
  int gen_index = 0;  // 0-based i with failing displacement
  double displacement = 0.0;
  SignedSymbol first, second;
  double product = 0.0;
  double required = 0.0;  // 2 product + 18 delta + 1
};

/// Failure is not a proof of non-embedding; it only means this tuple does
/// not clear the criterion at this delta. No power tuple is ever retried
/// silently: max_power_tested records that only the tuple itself was run.
struct FailureReport {
  std::vector<GroupElement> generators;
  double delta_used = 0.0;
  double min_displacement = 0.0;
  double max_product = 0.0;
  double margin = 0.0;
  std::vector<Violation> violations;
  int max_power_tested = 1;
};

using CertifyResult = std::variant<Certificate, FailureReport>;

inline bool certified(const CertifyResult& r) {
  return std::holds_alternative<Certificate>(r);
}

/// Evaluates the criterion for explicit generators. Tree certificates
/// require margin >= 0; plane certificates require margin > 1e-6 so float
/// noise cannot flip a borderline case to sound.
CertifyResult criterion_check(const std::vector<GroupElement>& generators,
                              const ModelSpace& space, double delta);

/// Key-value text form, one datum per line.
std::string to_text(const Certificate& cert, const ModelSpace& space);
std::string to_text(const FailureReport& report, const ModelSpace& space);
std::string to_text(const CertifyResult& result, const ModelSpace& space);

struct BruteforceReport {
  long words_checked = 0;
  long points_checked = 0;
  int max_len = 0;
};

/// Enumerates every reduced word s_1...s_m, m <= max_len, in the signed
/// generators and asserts the certificate's guarantees:
///   (i)  m <= d(x0, g x0)       (lower bound)
///   (ii) d(x0, g x0) <= M m     (coarse Lipschitz upper bound)
///   (iii) all orbit points distinct (freeness up to length max_len)
/// plus the chain inequality along every word's orbit chain. Throws
/// CertificateRefuted on any violation (an implementation bug or an
/// underestimated delta), BudgetError if (2k)(2k-1)^(max_len-1) > 10^6.
BruteforceReport verify_certificate_bruteforce(
    const std::vector<GroupElement>& generators, const ModelSpace& space,
    const Certificate& cert, int max_len);

/// Strips matching first/last letters: the shortest conjugate.
FreeWord cyclically_reduce(const FreeWord& word);

/// Visits every nonempty reduced word of length <= max_len over 2k signed
/// symbols. Symbol s in [0, 2k) means gens[s/2]^(s%2 ? -1 : +1); reduced
/// means no symbol follows its inverse s^1.
void for_each_reduced_symbol_word(
    int k, int max_len, const std::function<void(std::span<const int>)>& visit);

}  // namespace hypwalk
