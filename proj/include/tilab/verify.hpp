#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tilab/extremal.hpp"
#include "tilab/index_value.hpp"
#include "tilab/indices.hpp"
#include "tilab/partiteness.hpp"

namespace tilab {

enum class ClaimType {
  /// Optimum over the class is attained only by one member of the join family.
  Extremality,
  /// A closed-form bound in n, m, k, s, t.
  Theorem,
  /// The k = 2 specialisation, split by parity of n - m.
  Corollary,
};

/// Inequality as printed: TI(G) >= bound or TI(G) <= bound.
enum class PrintedBound { AtLeast, AtMost };

struct ClaimInfo {
  std::string_view id;
  ClaimType type;
  /// Absent for extremality claims, which cover a whole direction.
  std::optional<IndexKind> kind;
  PrintedBound bound;
  /// For extremality claims: the index direction covered.
  Direction covers = Direction::Decreasing;
};

const std::vector<ClaimInfo>& claim_catalog();
/// Throws InvalidArgument for an unknown id (case-insensitive).
const ClaimInfo& find_claim(std::string_view id);

struct GridSpec {
  int n_min = 4;
  int n_max = 12;
  int k_min = 2;
  int k_max = 4;
  /// Tuples with n <= scan_n_max are also checked against an exhaustive scan.
  int scan_n_max = 0;
  /// Skip tuples whose smallest part (s) is below this size.
  int min_part_size = 1;
  int workers = 1;
};

/// Largest order accepted for formula-versus-construction checks.
inline constexpr int kConstructionCap = 12;

enum class Verdict { Confirmed, Refuted, RegimeFlagged };

std::string_view verdict_name(Verdict v);

struct TupleVerdict {
  ClassParams params;
  /// Set for corollary claims.
  std::optional<Parity> parity;
  Verdict verdict = Verdict::Confirmed;
  std::optional<IndexValue> expected;
  std::optional<IndexValue> actual;
  std::string note;
};

struct VerificationReport {
  std::string claim;
  std::optional<IndexKind> kind;
  GridSpec grid;
  std::vector<TupleVerdict> verdicts;

  std::size_t count(Verdict v) const;
  bool all_confirmed() const { return count(Verdict::Confirmed) == verdicts.size(); }
};

/// Theorem claims compare the printed bound with the index of the
/// construction; corollary claims also compare with the theorem line at k = 2.
/// Within scan_n_max the printed inequality and uniqueness are checked against
/// the class optimum. Extremality claims are scan-only and need n_max within
/// the enumeration cap.
VerificationReport verify_theorem(std::string_view claim, const GridSpec& grid);

}  // namespace tilab
