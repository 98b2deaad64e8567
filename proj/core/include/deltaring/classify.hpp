#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "deltaring/graded_ring.hpp"
#include "deltaring/ring_core.hpp"

namespace deltaring {

enum class LocalKind { GradedField, ExteriorAlgebra, TMod4, NotDelta };

enum class Reason {
  NotQuasiFrobenius,
  MaximalIdealNotPrincipal,
  SquareNonzero,
  AnnihilatorNotPrincipalEqual,
  MissingUnitDegree,
  WrongCharacteristic,
  OddSuspensionCharacteristicClash,
  ResidueNotGradedField,
};

std::string_view to_string(LocalKind k);
std::string_view to_string(Reason r);

struct LocalVerdict {
  LocalKind kind = LocalKind::NotDelta;
  std::optional<Reason> reason;
  /// Degree whose unit was required but missing (MissingUnitDegree).
  std::optional<int> needed_degree;
  std::optional<int> x_degree;
  std::optional<int> unit_degree_found;
  /// Generator of the maximal ideal when one was found.
  std::optional<RingElement> generator;
  std::string detail;

  [[nodiscard]] bool positive() const { return kind != LocalKind::NotDelta; }
};

struct ClassifiedFactor {
  GradedRing ring;
  LocalVerdict verdict;
};

struct Verdict {
  std::vector<ClassifiedFactor> factors;
  bool is_delta = false;
  int suspension = 0;
  /// Set for suspensions outside {0, 1}, where only the local criteria are
  /// checked.
  bool local_criteria_only = false;
  /// For local_criteria_only verdicts: false when some exterior factor has
  /// |x| and n both even over a residue field of odd characteristic.
  std::optional<bool> parity_admissible;
};

bool has_unit_in_degree(GradedRing const& r, int d, EnumerationLimits lim = {});

/// Decision for a single local ring. Throws NotLocal for non-local input.
LocalVerdict classify_local(GradedRing const& r, int n, EnumerationLimits lim = {});

Verdict classify(GradedRing const& r, int n, EnumerationLimits lim = {});
/// Classifies the direct product of the given rings.
Verdict classify(std::vector<GradedRing> const& factors, int n,
                 EnumerationLimits lim = {});

nlohmann::json to_json(LocalVerdict const& v);
nlohmann::json to_json(Verdict const& v);

}  // namespace deltaring
