#ifndef PVC_GUARDS_HPP
#define PVC_GUARDS_HPP

#include <stdexcept>
#include <string>

namespace pvc {

/// Instance-size limits for the exponential searches. Defaults never hang.
struct Guards {
  /// k-disjoint path systems with k <= 2.
  int max_n_paths_k2 = 12;
  /// k-disjoint path systems with k >= 3.
  int max_n_paths_k3 = 8;
  /// pvc_k / pc_k minimization with k >= 2, and pc_1.
  int max_n_solve_k2 = 8;
  /// pvc_1, spvc, srvc and chromatic number minimization.
  int max_n_solve = 10;
  int max_k = 64;

  static Guards unlimited() { return {64, 64, 64, 64, 64}; }

  /// Raises (or lowers) every order limit at once, as --max-n does.
  Guards& with_max_n(int n) {
    max_n_paths_k2 = max_n_paths_k3 = max_n_solve_k2 = max_n_solve = n;
    return *this;
  }
};

class GuardViolation : public std::runtime_error {
 public:
  GuardViolation(const std::string& what, int n, int limit)
      : std::runtime_error(what + " limited to n <= " + std::to_string(limit) + " (got n = " + std::to_string(n) +
                           "); raise with --max-n") {}
  GuardViolation(const std::string& what, int k)
      : std::runtime_error(what + ": k = " + std::to_string(k) + " exceeds the k guard; raise with --max-k") {}
};

inline void check_order_guard(const std::string& what, int n, int limit) {
  if (n > limit) throw GuardViolation(what, n, limit);
}

}  // namespace pvc

#endif  // PVC_GUARDS_HPP
