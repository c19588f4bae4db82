#pragma once

// Exhaustive invariant checks over a matrix of root systems and involutions.
// Each invariant accumulates a case count and the first few counterexamples.

#include "twinv/planner.hpp"

#include <functional>
#include <string>
#include <vector>

namespace twinv {

struct InvariantResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::vector<std::string> counterexamples;
  /// Reported but never counted as a failure of the suite.
  bool informational = false;
  bool pass() const { return informational || failures == 0; }
};

class CheckReport {
 public:
  static constexpr std::size_t kMaxExamples = 5;

  /// Registers one case of an invariant; describe() is only called on failure.
  void record(const std::string& name, bool ok, const std::function<std::string()>& describe);
  void note(const std::string& name, bool hit, const std::function<std::string()>& describe);
  /// Runs body, turning an escaping exception into a failure of `name`.
  void guard(const std::string& name, const std::string& context, const std::function<void()>& body);

  const std::vector<InvariantResult>& results() const { return results_; }
  const InvariantResult* find(const std::string& name) const;
  bool all_pass() const;
  std::string to_text() const;
  Json to_json() const;

 private:
  InvariantResult& slot(const std::string& name);
  std::vector<InvariantResult> results_;
};

/// Cartan axioms, root count, reflection closure, rho pairing, projections and
/// relative coroots. Safe on corrupted systems built with the raw constructor.
void check_root_system(const RootSystemPtr& rs, CheckReport& report);

/// Length, double-coset, W^L(M), longest-relative and decomposition invariants.
/// The quadratic ones only run for rank <= 3.
void check_weyl(const RootSystemPtr& rs, CheckReport& report, std::size_t cap = kDefaultEnumerationCap);

/// Maximality (three-way), eigenspace identities at the Levi L, graph, paths,
/// cones for every c in cs, modulus checks, plans and certificates.
void check_involution(const DiagramInvolution& theta, CheckReport& report, const std::vector<Rational>& cs,
                      std::size_t cap = kDefaultEnumerationCap);

/// For theta = id: an involution w is fixed-or-negative on Delta_0 iff
/// w = w_0 w_0^L fixing Delta_0^L iff w has maximal length in its conjugacy class.
void check_maximal_involutions(const RootSystemPtr& rs, CheckReport& report, std::size_t cap = kDefaultEnumerationCap);

std::vector<std::string> default_check_types();
std::vector<std::string> extended_check_types();

/// Every check on every type and every diagram involution. Throws CapExceeded
/// before running anything if some |W| exceeds cap.
CheckReport run_checks(const std::vector<std::string>& types, std::size_t cap = kDefaultEnumerationCap,
                       const std::vector<Rational>& cs = {0, 1, 10});

}  // namespace twinv
