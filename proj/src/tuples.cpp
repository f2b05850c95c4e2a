#include "d4quad/tuples.hpp"

#include <algorithm>

namespace d4quad::tuples {

int family_nu(Family f) {
  switch (f) {
    case Family::c1p:
    case Family::c1m:
      return 1;
    case Family::c2p:
    case Family::c2m:
      return 2;
    default:
      return 3;
  }
}

int family_sign(Family f) {
  switch (f) {
    case Family::c1p:
    case Family::c2p:
    case Family::c3p:
      return 1;
    default:
      return -1;
  }
}

Family family_of(int nu, int sign) {
  if (nu < 1 || nu > 3 || (sign != 1 && sign != -1)) {
    throw UnsupportedFamily("family_of: nu must be 1..3 and sign +-1");
  }
  static const Family table[3][2] = {{Family::c1p, Family::c1m},
                                     {Family::c2p, Family::c2m},
                                     {Family::c3p, Family::c3m}};
  return table[nu - 1][sign > 0 ? 0 : 1];
}

std::string family_name(Family f) {
  switch (f) {
    case Family::c1p: return "c1+";
    case Family::c1m: return "c1-";
    case Family::c2p: return "c2+";
    case Family::c2m: return "c2-";
    case Family::c3p: return "c3+";
    case Family::c3m: return "c3-";
  }
  return "?";
}

Family family_from_name(const std::string& name) {
  if (name == "c1+") return Family::c1p;
  if (name == "c1-") return Family::c1m;
  if (name == "c2+") return Family::c2p;
  if (name == "c2-") return Family::c2m;
  if (name == "c3+") return Family::c3p;
  if (name == "c3-") return Family::c3m;
  throw UnsupportedFamily("unknown family name: " + name);
}

Triple make_triple(const Int& x, const Int& y, const Int& z) {
  std::array<std::pair<Int, int>, 3> v{{{x, 0}, {y, 1}, {z, 2}}};
  std::sort(v.begin(), v.end(),
            [](const auto& l, const auto& r) { return l.first < r.first; });
  if (v[0].first <= 0 || v[0].first == v[1].first || v[1].first == v[2].first) {
    throw NotATriple("make_triple: elements must be distinct and positive");
  }
  Triple t;
  t.a = v[0].first;
  t.b = v[1].first;
  t.c = v[2].first;
  for (int i = 0; i < 3; ++i) t.role_order[v[i].second] = i;
  if (!is_perfect_square(t.a * t.b + 4, &t.r) ||
      !is_perfect_square(t.a * t.c + 4, &t.s) ||
      !is_perfect_square(t.b * t.c + 4, &t.t)) {
    throw NotATriple("make_triple: not a D(4)-triple");
  }
  return t;
}

std::pair<Int, Int> d_pm(const Int& a, const Int& b, const Int& c) {
  Int prod = (a * b + 4) * (a * c + 4) * (b * c + 4);
  Int rst;
  if (!is_perfect_square(prod, &rst)) {
    throw NotATriple("d_pm: (ab+4)(ac+4)(bc+4) is not a perfect square");
  }
  Int base = a + b + c;
  Int abc = a * b * c;
  if ((abc + rst) % 2 != 0) throw NotATriple("d_pm: parity violation");
  Int d_plus = base + (abc + rst) / 2;
  Int d_minus = base + (abc - rst) / 2;
  return {d_minus, d_plus};
}

TripleCandidate c_family(const D4Pair& pair, Family family) {
  const Int& a = pair.a;
  const Int b = pair.b();
  const Int& r = pair.r;
  int sign = family_sign(family);
  int nu = family_nu(family);
  Int c1 = a + b + sign * 2 * r;
  Int ab = a * b;
  Int c;
  switch (nu) {
    case 1:
      c = c1;
      break;
    case 2:
      c = (ab + 4) * c1 - sign * 4 * r;
      break;
    default:
      c = (ab * ab + 6 * ab + 9) * c1 - sign * 4 * r * (ab + 3);
      break;
  }
  if (c <= 0) {
    throw DegenerateC("c_family: " + family_name(family) + " degenerates for a=" +
                      a.get_str());
  }
  TripleCandidate tc;
  tc.pair = pair;
  tc.family = family;
  tc.c = c;
  if (!is_perfect_square(a * c + 4, &tc.s) ||
      !is_perfect_square(b * c + 4, &tc.t)) {
    throw NotATriple("c_family: internal inconsistency, ac+4 or bc+4 not square");
  }
  // cross-check against the (t_nu, s_nu) recurrences propagated from the
  // fundamental solution (+-2, 2)
  Int s_prev = 2, s_cur = r + sign * a;
  Int t_prev = sign * 2, t_cur = b + sign * r;
  for (int i = 1; i < nu; ++i) {
    Int sn = r * s_cur - s_prev;
    Int tn = r * t_cur - t_prev;
    s_prev = s_cur;
    s_cur = sn;
    t_prev = t_cur;
    t_cur = tn;
  }
  if (s_cur != tc.s && s_cur != -tc.s) {
    throw Error("c_family: closed form disagrees with s_nu recurrence");
  }
  if (t_cur != tc.t && t_cur != -tc.t) {
    throw Error("c_family: closed form disagrees with t_nu recurrence");
  }
  tc.sorted = make_triple(a, b, c);
  return tc;
}

bool check_tuple(const std::vector<Int>& elements, const Int& n) {
  for (size_t i = 0; i < elements.size(); ++i) {
    for (size_t j = i + 1; j < elements.size(); ++j) {
      if (!is_perfect_square(elements[i] * elements[j] + n)) return false;
    }
  }
  return true;
}

bool is_regular(const std::vector<Int>& quadruple) {
  if (quadruple.size() != 4) return false;
  for (int skip = 0; skip < 4; ++skip) {
    std::vector<Int> rest;
    for (int i = 0; i < 4; ++i) {
      if (i != skip) rest.push_back(quadruple[i]);
    }
    try {
      auto [dm, dp] = d_pm(rest[0], rest[1], rest[2]);
      if (quadruple[skip] == dp || quadruple[skip] == dm) return true;
    } catch (const NotATriple&) {
      continue;
    }
  }
  return false;
}

}  // namespace d4quad::tuples
