#include "d4quad/oracle.hpp"

#include <algorithm>

namespace d4quad::oracle {

namespace {

constexpr unsigned long kResidueScanCap = 4'000'000;

// candidate x values with x^2 = a*d + 4 for some positive integer d
void for_each_x(const Int& a, const Int& x_max, const auto& fn) {
  if (a <= kResidueScanCap) {
    std::vector<unsigned long> residues;
    unsigned long am = a.get_ui();
    for (unsigned long r = 0; r < am; ++r) {
      if ((Int(r) * r - 4) % am == 0) residues.push_back(r);
    }
    for (Int base = 0; base <= x_max; base += a) {
      for (unsigned long r : residues) {
        Int x = base + r;
        if (x >= 3 && x <= x_max) fn(x);
      }
    }
  } else {
    for (Int x = 3; x <= x_max; ++x) fn(x);
  }
}

}  // namespace

std::vector<Int> extend_triple(const Int& a, const Int& b, const Int& c,
                               const Int& d_max) {
  tuples::make_triple(a, b, c);  // validates; throws NotATriple otherwise
  std::vector<Int> found;
  Int x_max = isqrt(a * d_max + 4);
  for_each_x(a, x_max, [&](const Int& x) {
    Int num = x * x - 4;
    if (num <= 0 || num % a != 0) return;
    Int d = num / a;
    if (d < 1 || d > d_max || d == a || d == b || d == c) return;
    if (!is_perfect_square(b * d + 4)) return;
    if (!is_perfect_square(c * d + 4)) return;
    found.push_back(d);
  });
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  return found;
}

std::vector<PQSolution> solve_PQ_small(const Triple& t, SolutionType type,
                                       int z0_sign, int y2_sign,
                                       unsigned long l_max) {
  if (l_max > 10'000) throw Error("solve_PQ_small: l_max capped at 10^4");
  seq::RecurrenceSpec P = seq::seq_P(t, y2_sign);
  seq::RecurrenceSpec Q = seq::seq_Q(t, type, z0_sign);
  std::vector<PQSolution> out;
  // both doubled sequences are strictly increasing from index 1 on, so a
  // two-pointer merge finds every coincidence
  unsigned long l = 0, m = 0;
  Int pl_prev = 0, pl = P.du0, ql_prev = 0, ql = Q.du0;
  while (l <= l_max && m <= l_max) {
    if (pl == ql) {
      if (pl % 2 == 0 && m <= l) {
        out.push_back({l, m, pl / 2});
      }
      Int pn = (l == 0) ? P.du1 : P.coeff * pl - pl_prev;
      pl_prev = pl;
      pl = pn;
      ++l;
      Int qn = (m == 0) ? Q.du1 : Q.coeff * ql - ql_prev;
      ql_prev = ql;
      ql = qn;
      ++m;
    } else if (pl < ql) {
      Int pn = (l == 0) ? P.du1 : P.coeff * pl - pl_prev;
      pl_prev = pl;
      pl = pn;
      ++l;
    } else {
      Int qn = (m == 0) ? Q.du1 : Q.coeff * ql - ql_prev;
      ql_prev = ql;
      ql = qn;
      ++m;
    }
  }
  return out;
}

std::vector<VWSolution> solve_vw_small(const Triple& t, bool odd, int sign,
                                       unsigned long m_max) {
  if (m_max > 10'000) throw Error("solve_vw_small: m_max capped at 10^4");
  Int z0 = odd ? Int(sign * t.t) : Int(sign * 2);
  Int x0 = odd ? t.r : Int(2);
  Int z1 = odd ? Int(sign * t.s) : Int(sign * 2);
  Int y1 = odd ? t.r : Int(2);
  seq::RecurrenceSpec v = seq::seq_v(t, z0, x0);
  seq::RecurrenceSpec w = seq::seq_w(t, z1, y1);
  std::vector<VWSolution> out;
  unsigned long m = 0, n = 0;
  Int vm_prev = 0, vm = v.du0, wn_prev = 0, wn = w.du0;
  while (m <= m_max && n <= m_max) {
    if (vm == wn) {
      if (vm % 2 == 0 && n <= m) out.push_back({m, n, vm / 2});
      Int vn = (m == 0) ? v.du1 : v.coeff * vm - vm_prev;
      vm_prev = vm;
      vm = vn;
      ++m;
      Int wm = (n == 0) ? w.du1 : w.coeff * wn - wn_prev;
      wn_prev = wn;
      wn = wm;
      ++n;
    } else if (vm < wn) {
      Int vn = (m == 0) ? v.du1 : v.coeff * vm - vm_prev;
      vm_prev = vm;
      vm = vn;
      ++m;
    } else {
      Int wm = (n == 0) ? w.du1 : w.coeff * wn - wn_prev;
      wn_prev = wn;
      wn = wm;
      ++n;
    }
  }
  return out;
}

SweepReport quadruples_containing_pair(int k, const Int& a_max,
                                       const Int& c_max, const Int& d_max) {
  SweepReport report;
  report.k = k;
  report.window = SearchWindow{a_max, c_max, d_max, 0};
  for (Int a = 1; a <= a_max; ++a) {
    if (!is_perfect_square(k * a * a + 4)) continue;
    Int b = k * a;
    for (Int c = 1; c <= c_max; ++c) {
      if (c == a || c == b) continue;
      if (!is_perfect_square(a * c + 4)) continue;
      if (!is_perfect_square(b * c + 4)) continue;
      ++report.triples;
      tuples::Triple sorted = tuples::make_triple(a, b, c);
      auto [dm, dp] = tuples::d_pm(a, b, c);
      for (const Int& d : extend_triple(sorted.a, sorted.b, sorted.c, d_max)) {
        SweepRow row{a, b, c, d, "irregular"};
        if (d == dm) {
          row.d_class = "d-";
        } else if (d == dp) {
          row.d_class = "d+";
        }
        if (row.d_class == "irregular") ++report.irregular;
        report.rows.push_back(std::move(row));
      }
    }
  }
  return report;
}

bool fibonacci_check(unsigned n_max) {
  if (n_max == 0) return true;
  // Lucas/Fibonacci pairs (L_{2n}, F_{2n}) for n = 1..n_max
  std::vector<std::pair<Int, Int>> expected;
  Int l0 = 2, l1 = 1, f0 = 0, f1 = 1;  // L_0, L_1, F_0, F_1
  for (unsigned i = 1; expected.size() < n_max; ++i) {
    Int l2 = l0 + l1, f2 = f0 + f1;
    l0 = l1;
    l1 = l2;
    f0 = f1;
    f1 = f2;
    if (i % 2 == 0) expected.emplace_back(l0, f0);
    if (i > 4 * n_max + 4) break;
  }
  if (expected.size() != n_max) return false;
  Int r_cap = expected.back().first;
  std::vector<std::pair<Int, Int>> found;
  for (Int r = 3; r <= r_cap; ++r) {
    Int num = r * r - 4;
    if (num % 5 != 0) continue;
    Int a;
    if (!is_perfect_square(num / 5, &a)) continue;
    if (a >= 1) found.emplace_back(r, a);
  }
  return found == expected;
}

bool k4_check(const Int& r_max) {
  for (Int r = 3; r <= r_max; ++r) {
    Int num = r * r - 4;
    if (num % 4 != 0) continue;
    Int a;
    if (is_perfect_square(num / 4, &a) && a >= 1) return false;
  }
  return true;
}

}  // namespace d4quad::oracle
