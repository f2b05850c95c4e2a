#pragma once

#include "d4quad/oracle.hpp"
#include "d4quad/reduction.hpp"

namespace d4quad::pipeline {

using tuples::Family;

enum class Verdict { REGULAR_CONFIRMED, COUNTEREXAMPLE, INCONCLUSIVE };
std::string verdict_name(Verdict v);

struct ReductionRecord {
  Int q;
  int eta_sign;
  Int new_bound;
};

struct ResidualRecord {
  Int l, m;  // sequence indices (l = P-side / v-side index)
  Int x;     // common sequence value
  Int d;     // extension element implied by x
  std::string d_class;  // "zero", "d-", "d+" or "other"
};

struct BranchRecord {
  int p = 0;
  Int a;
  std::string branch;  // "a", "b", "vw_even", "vw_odd"
  std::string status;  // "degenerate", "closed_by_gap",
                       // "closed_after_reduction", "residual_checked"
  Int matveev_cap, gap_lower, reduced;
  std::vector<ReductionRecord> reduction;
  std::vector<ResidualRecord> residual;
};

struct VerificationReport {
  int k = 0;
  Family family = Family::c1p;
  std::vector<BranchRecord> records;
  Verdict verdict = Verdict::INCONCLUSIVE;
  std::string failure;  // cause when INCONCLUSIVE
};

/// Full theorem replication for one (k, signed family): p-range from the
/// index bounds, iterated reductions on every sign/type branch, gap-bound
/// closure, residual small-index enumeration with d-classification.
/// p_max_override > 0 restricts the p-range (for quick runs).
VerificationReport verify_family(int k, Family family, int p_max_override = 0,
                                 long prec = exact::kDefaultPrecision);

/// Byte-deterministic JSON; all integers rendered as decimal strings.
std::string to_json(const VerificationReport& report);

std::string sweep_to_csv(const oracle::SweepReport& report);
std::string sweep_to_json(const oracle::SweepReport& report);

}  // namespace d4quad::pipeline
