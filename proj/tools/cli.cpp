#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "d4quad/pipeline.hpp"

namespace {

using namespace d4quad;

long g_precision = exact::kDefaultPrecision;
std::string g_out;
std::string g_format = "json";

void emit(const std::string& text) {
  if (g_out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
  } else {
    std::ofstream f(g_out, std::ios::binary);
    if (!f) throw Error("cannot open output file: " + g_out);
    f << text;
  }
}

std::vector<Int> parse_ints(const std::string& csv) {
  std::vector<Int> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.emplace_back(item);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Regularity pipeline for D(4)-quadruples containing {a, ka}"};
  app.require_subcommand(1);
  app.add_option("--precision-bits", g_precision, "interval working precision")
      ->check(CLI::Range(64L, 1L << 20));
  app.add_option("--out", g_out, "write output to this file");
  app.add_option("--format", g_format, "output format")
      ->check(CLI::IsMember({"json", "csv"}));

  int k = 2, p = 1, p_max_override = 0;
  std::string family_name, type_name = "a", elements, triple_csv;
  Int a_max = 300, c_max = 1'000'000, d_max;
  d_max = Int("10000000000");
  unsigned n_max = 15;
  Int r_max = 1'000'000;

  auto add_k = [&](CLI::App* cmd) {
    cmd->add_option("--k", k, "pair ratio")->check(CLI::IsMember({2, 3, 6}));
  };

  auto* pell_cmd = app.add_subcommand("pell", "Pell-family pair queries");
  pell_cmd->require_subcommand(1);
  auto* pell_fund = pell_cmd->add_subcommand("fundamental", "fundamental (r, a)");
  add_k(pell_fund);
  auto* pell_at = pell_cmd->add_subcommand("at", "p-th pair (r_p, a_p)");
  add_k(pell_at);
  pell_at->add_option("--p", p, "index, 1-based")->check(CLI::PositiveNumber);

  auto* tuple_cmd = app.add_subcommand("tuple", "tuple predicates");
  tuple_cmd->require_subcommand(1);
  auto* tuple_check = tuple_cmd->add_subcommand("check", "is a D(4)-tuple?");
  tuple_check->add_option("--elements", elements, "comma-separated")->required();
  auto* tuple_extend = tuple_cmd->add_subcommand("extend", "extensions d of a triple");
  tuple_extend->add_option("--triple", triple_csv, "a,b,c")->required();
  tuple_extend->add_option("--d-max", d_max, "search cap");

  auto* family_cmd = app.add_subcommand("family", "c-family elements");
  family_cmd->require_subcommand(1);
  auto* family_gen = family_cmd->add_subcommand("gen", "c_nu^sign at (k, p)");
  add_k(family_gen);
  family_gen->add_option("--p", p)->check(CLI::PositiveNumber);
  family_gen->add_option("--family", family_name, "c1+ .. c3-")->required();

  auto* bounds_cmd = app.add_subcommand("bounds", "index bounds per family/branch");
  add_k(bounds_cmd);
  bounds_cmd->add_option("--family", family_name, "c1, c2 or c3")->required();
  bounds_cmd->add_option("--type", type_name, "a, b, vw_even or vw_odd");

  auto* reduce_cmd = app.add_subcommand("reduce", "one reduction instance");
  add_k(reduce_cmd);
  reduce_cmd->add_option("--p", p)->check(CLI::PositiveNumber);
  reduce_cmd->add_option("--family", family_name, "c1+ .. c3-")->required();
  reduce_cmd->add_option("--type", type_name, "a, b, vw_even or vw_odd");

  auto* verify_cmd = app.add_subcommand("verify", "full verification report");
  add_k(verify_cmd);
  verify_cmd->add_option("--family", family_name, "c1+ .. c3-")->required();
  verify_cmd->add_option("--p-max", p_max_override, "restrict the p-range");

  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force ground truth");
  oracle_cmd->require_subcommand(1);
  auto* sweep_cmd = oracle_cmd->add_subcommand("sweep", "exhaustive window sweep");
  add_k(sweep_cmd);
  sweep_cmd->add_option("--a-max", a_max);
  sweep_cmd->add_option("--c-max", c_max);
  sweep_cmd->add_option("--d-max", d_max);

  auto* sanity_cmd = app.add_subcommand("sanity", "side identities");
  sanity_cmd->require_subcommand(1);
  auto* fib_cmd = sanity_cmd->add_subcommand("fib", "r^2-5a^2=4 vs Lucas/Fibonacci");
  fib_cmd->add_option("--n-max", n_max);
  auto* k4_cmd = sanity_cmd->add_subcommand("k4", "r^2-4a^2=4 has no pair");
  k4_cmd->add_option("--r-max", r_max);

  // let global flags (--out, --format, --precision-bits) appear after the
  // subcommand as well
  std::function<void(CLI::App*)> allow_fallthrough = [&](CLI::App* cmd) {
    cmd->fallthrough();
    for (auto* sub : cmd->get_subcommands({})) allow_fallthrough(sub);
  };
  allow_fallthrough(&app);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*pell_fund) {
      auto [r, a] = pell::fundamental_pair(k);
      emit("r=" + r.get_str() + " a=" + a.get_str());
    } else if (*pell_at) {
      auto pr = pell::pair_at(k, static_cast<unsigned>(p));
      emit("r=" + pr.r.get_str() + " a=" + pr.a.get_str() +
           " b=" + pr.b().get_str());
    } else if (*tuple_check) {
      bool ok = tuples::check_tuple(parse_ints(elements));
      emit(ok ? "valid" : "invalid");
      return ok ? 0 : 1;
    } else if (*tuple_extend) {
      auto v = parse_ints(triple_csv);
      if (v.size() != 3) throw Error("--triple needs exactly three elements");
      std::string out;
      for (const auto& d : oracle::extend_triple(v[0], v[1], v[2], d_max)) {
        out += d.get_str() + "\n";
      }
      emit(out);
    } else if (*family_gen) {
      auto tc = tuples::c_family(pell::pair_at(k, static_cast<unsigned>(p)),
                                 tuples::family_from_name(family_name));
      emit("c=" + tc.c.get_str() + " s=" + tc.s.get_str() +
           " t=" + tc.t.get_str());
    } else if (*bounds_cmd) {
      int nu = 0;
      if (family_name == "c1") nu = 1;
      else if (family_name == "c2") nu = 2;
      else if (family_name == "c3") nu = 3;
      else throw UnsupportedFamily("bounds: family must be c1, c2 or c3");
      auto pb = linforms::p_bound(k, nu, linforms::branch_from_name(type_name),
                                  g_precision);
      emit("p_max=" + std::to_string(pb.p_max) +
           " index_cap=" + pb.index_cap.get_str());
    } else if (*reduce_cmd) {
      auto fam = tuples::family_from_name(family_name);
      auto branch = linforms::branch_from_name(type_name);
      auto pair = pell::pair_at(k, static_cast<unsigned>(p));
      auto rb = linforms::route_bound(k, pair, tuples::family_nu(fam),
                                      tuples::family_sign(fam), branch,
                                      g_precision);
      if (!rb.defined) throw DegenerateC("family element degenerates at this p");
      auto t = tuples::c_family(pair, fam).sorted;
      reduction::Route route =
          branch == linforms::BranchType::type_a ? reduction::Route::PQ_typeA
          : branch == linforms::BranchType::type_b ? reduction::Route::PQ_typeB
          : branch == linforms::BranchType::vw_even ? reduction::Route::VW_even
                                                    : reduction::Route::VW_odd;
      std::string out = "M=" + rb.cap.get_str() + "\n";
      for (int sign : {1, -1}) {
        auto inst = reduction::build_reduction(t, route, sign, 1, rb.cap);
        auto it = reduction::iterate_reduce(inst);
        out += std::string("sign=") + (sign > 0 ? "+" : "-");
        for (const auto& step : it.steps) {
          out += " q=" + step.q.get_str() + "->" + step.new_bound.get_str();
        }
        out += " final=" + it.final_bound.get_str() + "\n";
      }
      emit(out);
    } else if (*verify_cmd) {
      auto report = pipeline::verify_family(
          k, tuples::family_from_name(family_name), p_max_override, g_precision);
      emit(pipeline::to_json(report));
      return report.verdict == pipeline::Verdict::REGULAR_CONFIRMED ? 0 : 1;
    } else if (*sweep_cmd) {
      auto report = oracle::quadruples_containing_pair(k, a_max, c_max, d_max);
      emit(g_format == "csv" ? pipeline::sweep_to_csv(report)
                             : pipeline::sweep_to_json(report));
      return report.irregular == 0 ? 0 : 1;
    } else if (*fib_cmd) {
      bool ok = oracle::fibonacci_check(n_max);
      emit(ok ? "pass" : "fail");
      return ok ? 0 : 1;
    } else if (*k4_cmd) {
      bool ok = oracle::k4_check(r_max);
      emit(ok ? "pass" : "fail");
      return ok ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
