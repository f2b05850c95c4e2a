#include "d4quad/pipeline.hpp"

#include <json.hpp>

#include <algorithm>

namespace d4quad::pipeline {

using json = nlohmann::ordered_json;
using linforms::BranchType;
using reduction::Route;

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::REGULAR_CONFIRMED: return "REGULAR_CONFIRMED";
    case Verdict::COUNTEREXAMPLE: return "COUNTEREXAMPLE";
    case Verdict::INCONCLUSIVE: return "INCONCLUSIVE";
  }
  return "?";
}

namespace {

constexpr unsigned long kResidualCap = 200;

std::string classify_d(const Int& d, const Int& dm, const Int& dp) {
  if (d == 0) return "zero";
  if (d == dm) return "d-";
  if (d == dp) return "d+";
  return "other";
}

void append_pq_residual(BranchRecord& rec, const tuples::Triple& t,
                        tuples::SolutionType type, unsigned long l_cap) {
  auto [dm, dp] = tuples::d_pm(t.a, t.b, t.c);
  for (int z0_sign : {1, -1}) {
    for (int y2_sign : {1, -1}) {
      for (const auto& sol :
           oracle::solve_PQ_small(t, type, z0_sign, y2_sign, l_cap)) {
        Int num = sol.x * sol.x - 4;
        if (num % t.a != 0) continue;  // x not a valid extension coordinate
        Int d = num / t.a;
        ResidualRecord rr{Int(sol.l), Int(sol.m), sol.x, d,
                          classify_d(d, dm, dp)};
        bool dup = std::any_of(
            rec.residual.begin(), rec.residual.end(), [&](const auto& e) {
              return e.l == rr.l && e.m == rr.m && e.x == rr.x;
            });
        if (!dup) rec.residual.push_back(std::move(rr));
      }
    }
  }
}

void append_vw_residual(BranchRecord& rec, const tuples::Triple& t, bool odd,
                        unsigned long m_cap) {
  auto [dm, dp] = tuples::d_pm(t.a, t.b, t.c);
  for (int sigma : {1, -1}) {
    for (const auto& sol : oracle::solve_vw_small(t, odd, sigma, m_cap)) {
      Int num = sol.z * sol.z - 4;
      if (num % t.c != 0) continue;
      Int d = num / t.c;
      ResidualRecord rr{Int(sol.m), Int(sol.n), sol.z, d,
                        classify_d(d, dm, dp)};
      bool dup = std::any_of(rec.residual.begin(), rec.residual.end(),
                             [&](const auto& e) {
                               return e.l == rr.l && e.m == rr.m && e.x == rr.x;
                             });
      if (!dup) rec.residual.push_back(std::move(rr));
    }
  }
}

void run_branch(BranchRecord& rec, int k, const pell::D4Pair& pair, int nu,
                int sign, BranchType branch, long prec) {
  linforms::RouteBound rb = linforms::route_bound(k, pair, nu, sign, branch, prec);
  if (!rb.defined) {
    rec.status = "degenerate";
    return;
  }
  rec.matveev_cap = rb.cap;
  rec.gap_lower = rb.gap;
  tuples::Triple t =
      tuples::c_family(pair, tuples::family_of(nu, sign)).sorted;
  // the gap lemmas only constrain m >= 3 (PQ) / m >= 2 (VW); indices below
  // that floor always get the exhaustive small-index check
  constexpr unsigned long kSmallIndexFloor = 8;
  if (!rb.admissible) {
    rec.status = "closed_by_gap";
    if (branch == BranchType::type_a || branch == BranchType::type_b) {
      append_pq_residual(rec, t,
                         branch == BranchType::type_a
                             ? tuples::SolutionType::a
                             : tuples::SolutionType::b,
                         kSmallIndexFloor);
    } else {
      append_vw_residual(rec, t, branch == BranchType::vw_odd,
                         kSmallIndexFloor);
    }
    return;
  }
  // the exclusion lemma empties the s = +-a (mod r) branch on c2 triples;
  // it needs r > 28, so tiny p falls through to the residual enumeration
  if (nu == 2 && branch == BranchType::type_b) {
    try {
      gaps::exclusion_c2_s_congruence(pair);
    } catch (const InapplicableSmallR&) {
    }
  }
  struct InstanceChoice {
    Route route;
    int sign;
    int y2_sign;
  };
  std::vector<InstanceChoice> choices;
  switch (branch) {
    case BranchType::type_a:
      choices = {{Route::PQ_typeA, 1, 1}, {Route::PQ_typeA, -1, 1}};
      break;
    case BranchType::type_b:
      for (int z0 : {1, -1})
        for (int y2 : {1, -1}) choices.push_back({Route::PQ_typeB, z0, y2});
      break;
    case BranchType::vw_even:
      choices = {{Route::VW_even, 1, 1}, {Route::VW_even, -1, 1}};
      break;
    case BranchType::vw_odd:
      choices = {{Route::VW_odd, 1, 1}, {Route::VW_odd, -1, 1}};
      break;
  }
  Int reduced = 0;
  for (const auto& ch : choices) {
    auto inst = reduction::build_reduction(t, ch.route, ch.sign, ch.y2_sign,
                                           rb.cap);
    auto it = reduction::iterate_reduce(inst);
    for (const auto& step : it.steps) {
      rec.reduction.push_back({step.q, step.eta_sign, step.new_bound});
    }
    if (it.final_bound > reduced) reduced = it.final_bound;
  }
  rec.reduced = reduced;
  if (reduced > kResidualCap) {
    throw Error("residual bound " + reduced.get_str() +
                " too large for exhaustive enumeration");
  }
  // every surviving solution has index <= reduced; enumerate at least the
  // small-index floor so sub-gap (trivial) solutions are always classified
  unsigned long cap = std::max(reduced.get_ui(), kSmallIndexFloor);
  if (branch == BranchType::type_a || branch == BranchType::type_b) {
    append_pq_residual(rec, t,
                       branch == BranchType::type_a ? tuples::SolutionType::a
                                                    : tuples::SolutionType::b,
                       cap);
  } else {
    append_vw_residual(rec, t, branch == BranchType::vw_odd, cap);
  }
  rec.status = rec.gap_lower > reduced ? "closed_after_reduction"
                                       : "residual_checked";
}

}  // namespace

VerificationReport verify_family(int k, Family family, int p_max_override,
                                 long prec) {
  VerificationReport report;
  report.k = k;
  report.family = family;
  int nu = tuples::family_nu(family);
  int sign = tuples::family_sign(family);
  std::vector<BranchType> branches;
  if (nu == 1) {
    branches = {BranchType::type_a};
  } else if (nu == 2) {
    branches = {BranchType::type_a, BranchType::type_b};
  } else {
    branches = {BranchType::vw_even, BranchType::vw_odd};
  }
  bool counterexample = false;
  try {
    int p_max = 0;
    for (BranchType b : branches) {
      p_max = std::max(p_max, linforms::p_bound(k, nu, b, prec).p_max);
    }
    if (p_max_override > 0) p_max = std::min(p_max, p_max_override);
    for (int p = 1; p <= p_max; ++p) {
      pell::D4Pair pair = pell::pair_at(k, static_cast<unsigned>(p));
      for (BranchType b : branches) {
        BranchRecord rec;
        rec.p = p;
        rec.a = pair.a;
        rec.branch = linforms::branch_name(b);
        run_branch(rec, k, pair, nu, sign, b, prec);
        for (const auto& rr : rec.residual) {
          if (rr.d_class == "other") counterexample = true;
        }
        report.records.push_back(std::move(rec));
      }
    }
    report.verdict =
        counterexample ? Verdict::COUNTEREXAMPLE : Verdict::REGULAR_CONFIRMED;
  } catch (const Error& e) {
    report.verdict = Verdict::INCONCLUSIVE;
    report.failure = e.what();
  }
  return report;
}

std::string to_json(const VerificationReport& report) {
  json out;
  out["k"] = std::to_string(report.k);
  out["family"] = tuples::family_name(report.family);
  out["records"] = json::array();
  for (const auto& rec : report.records) {
    json jr;
    jr["p"] = std::to_string(rec.p);
    jr["a"] = rec.a.get_str();
    jr["branch"] = rec.branch;
    jr["status"] = rec.status;
    jr["bounds"] = {{"matveev_l", rec.matveev_cap.get_str()},
                    {"reduced_l", rec.reduced.get_str()},
                    {"gap_lower", rec.gap_lower.get_str()}};
    jr["reduction"] = json::array();
    for (const auto& step : rec.reduction) {
      jr["reduction"].push_back({{"q", step.q.get_str()},
                                 {"eta_sign", step.eta_sign > 0 ? "1" : "-1"},
                                 {"new_bound", step.new_bound.get_str()}});
    }
    jr["residual"] = json::array();
    for (const auto& rr : rec.residual) {
      jr["residual"].push_back({{"l", rr.l.get_str()},
                                {"m", rr.m.get_str()},
                                {"x", rr.x.get_str()},
                                {"d_class", rr.d_class}});
    }
    out["records"].push_back(std::move(jr));
  }
  out["verdict"] = verdict_name(report.verdict);
  if (report.verdict == Verdict::INCONCLUSIVE) out["failure"] = report.failure;
  return out.dump(2) + "\n";
}

std::string sweep_to_csv(const oracle::SweepReport& report) {
  std::string out = "a,b,c,d,d_class\n";
  for (const auto& row : report.rows) {
    out += row.a.get_str() + "," + row.b.get_str() + "," + row.c.get_str() +
           "," + row.d.get_str() + "," + row.d_class + "\n";
  }
  return out;
}

std::string sweep_to_json(const oracle::SweepReport& report) {
  json out;
  out["k"] = std::to_string(report.k);
  out["window"] = {{"a_max", report.window.a_max.get_str()},
                   {"c_max", report.window.c_max.get_str()},
                   {"d_max", report.window.d_max.get_str()}};
  out["triples"] = std::to_string(report.triples);
  out["irregular"] = std::to_string(report.irregular);
  out["rows"] = json::array();
  for (const auto& row : report.rows) {
    out["rows"].push_back({{"a", row.a.get_str()},
                           {"b", row.b.get_str()},
                           {"c", row.c.get_str()},
                           {"d", row.d.get_str()},
                           {"d_class", row.d_class}});
  }
  return out.dump(2) + "\n";
}

}  // namespace d4quad::pipeline
