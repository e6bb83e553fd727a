// quatalg: command-line front end.
//
// Exit codes: 0 success, 1 mathematical error, 2 parse error, 3 budget exhausted.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "quatalg/brauer_q.hpp"
#include "quatalg/errors.hpp"
#include "quatalg/funcfield_fp.hpp"
#include "quatalg/funcfield_q.hpp"
#include "quatalg/json_io.hpp"
#include "quatalg/local_symbols.hpp"
#include "quatalg/properties.hpp"

using namespace quatalg;

namespace {

struct Globals {
  bool json = false;
  std::uint64_t seed = 1;
};

Json budget_json(const SquareTestBudget& b) {
  return Json{{"max_prime", b.max_prime},
              {"min_exponent", b.min_exponent},
              {"max_exponent", b.max_exponent},
              {"max_lift_factors", b.max_lift_factors}};
}

void emit(const Globals& g, const std::string& command, const Json& result, const std::string& text,
          const Json& extra_meta = Json::object()) {
  if (g.json) {
    Json meta{{"seed", g.seed}};
    for (const auto& [k, v] : extra_meta.items()) meta[k] = v;
    std::cout << Json{{"command", command}, {"meta", meta}, {"result", result}}.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

BrauerClassQ read_class(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return decode<BrauerClassQ>(parse_json(ss.str()));
}

std::string class_text(const BrauerClassQ& c) {
  if (c.is_zero()) return "  (zero class)\n";
  std::string out;
  for (const auto& [v, x] : c.invariants()) out += "  inv_" + v.str() + " = " + to_string(x) + "\n";
  return out;
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string certificate_text(const SquareClassVerdict& v) {
  if (v.is_square) return "square, root " + to_string(*v.root);
  return "nonsquare mod " + std::to_string(v.witness->prime) + " at factor " + to_string(v.witness->factor);
}

// CLI11 short options are single letters; accept -f1/-g1/-f2/-g2 as written.
std::vector<std::string> normalize_args(int argc, char** argv) {
  std::vector<std::string> out;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "-f1" || a == "-g1" || a == "-f2" || a == "-g2") a = "-" + a;
    out.push_back(a);
  }
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quaternion algebras over Q, Q(x) and F_p(x): local symbols, Brauer classes, isomorphism tests",
               "quatalg"};
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--json", g.json, "Machine-readable JSON output");
  app.add_option("--seed", g.seed, "Seed for every randomized component")->capture_default_str();

  // hilbert
  auto* hil = app.add_subcommand("hilbert", "Hilbert symbol (a, b)_v");
  std::string ha, hb, hp;
  bool h_real = false, h_all = false;
  hil->add_option("-a", ha, "a (rational)")->required();
  hil->add_option("-b", hb, "b (rational)")->required();
  auto* hp_opt = hil->add_option("-p", hp, "prime place");
  auto* hreal_opt = hil->add_flag("--real", h_real, "real place");
  auto* hall_opt = hil->add_flag("--all", h_all, "every place where the symbol can be -1 (default)");
  hp_opt->excludes(hreal_opt)->excludes(hall_opt);
  hreal_opt->excludes(hall_opt);

  // brq
  auto* brq = app.add_subcommand("brq", "Brauer classes of Q")->require_subcommand(1);
  auto* brq_class = brq->add_subcommand("class", "Local invariants of (a, b)");
  std::string ca, cb;
  brq_class->add_option("-a", ca)->required();
  brq_class->add_option("-b", cb)->required();
  auto* brq_samesub = brq->add_subcommand("samesub", "Same maximal subfields for two classes given as JSON files");
  std::string file1, file2;
  brq_samesub->add_option("FILE1", file1)->required();
  brq_samesub->add_option("FILE2", file2)->required();
  auto* brq_ex = brq->add_subcommand("ex65", "Classes with invariants (1/n,1/n,-1/n,-1/n) and (1/n,-1/n,1/n,-1/n)");
  long ex_n = 0;
  std::vector<std::string> ex_places;
  brq_ex->add_option("-n", ex_n)->required();
  brq_ex->add_option("-p", ex_places, "four places, comma separated")->required()->delimiter(',');
  auto* brq_scale = brq->add_subcommand("scale", "m * class");
  std::string scale_file, scale_m;
  brq_scale->add_option("FILE", scale_file)->required();
  brq_scale->add_option("-m", scale_m)->required();

  // qx
  auto* qx = app.add_subcommand("qx", "Quaternion algebras over Q(x)")->require_subcommand(1);
  std::string qf, qg, qf1, qg1, qf2, qg2, q_at;
  auto* qx_res = qx->add_subcommand("residues", "Residue table of (f, g)");
  qx_res->add_option("-f", qf)->required();
  qx_res->add_option("-g", qg)->required();
  auto* qx_isom = qx->add_subcommand("isom", "Decide (f1, g1) ~ (f2, g2)");
  qx_isom->add_option("--f1", qf1)->required();
  qx_isom->add_option("--g1", qg1)->required();
  qx_isom->add_option("--f2", qf2)->required();
  qx_isom->add_option("--g2", qg2)->required();
  auto* qx_spec = qx->add_subcommand("specialize", "Specialize (f, g) at x = A");
  qx_spec->add_option("-f", qf)->required();
  qx_spec->add_option("-g", qg)->required();
  qx_spec->add_option("--at", q_at)->required();

  // ffx
  auto* ffx = app.add_subcommand("ffx", "Quaternion algebras over F_p(x)")->require_subcommand(1);
  std::uint64_t fchar = 0;
  std::string ff, fg, ff1, fg1, ff2, fg2;
  auto* ffx_res = ffx->add_subcommand("residues", "Residues at every place including infinity");
  ffx_res->add_option("--char", fchar)->required();
  ffx_res->add_option("-f", ff)->required();
  ffx_res->add_option("-g", fg)->required();
  auto* ffx_isom = ffx->add_subcommand("isom", "Decide (f1, g1) ~ (f2, g2)");
  ffx_isom->add_option("--char", fchar)->required();
  ffx_isom->add_option("--f1", ff1)->required();
  ffx_isom->add_option("--g1", fg1)->required();
  ffx_isom->add_option("--f2", ff2)->required();
  ffx_isom->add_option("--g2", fg2)->required();

  // selftest
  auto* self = app.add_subcommand("selftest", "Run the property suites");
  int cases = SelftestOptions{}.cases;
  self->add_option("--seed", g.seed, "Seed")->capture_default_str();
  self->add_option("--cases", cases, "Base number of cases per suite")->capture_default_str();

  try {
    app.parse(normalize_args(argc, argv));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*hil) {
      const BigRational a = parse_rational(ha), b = parse_rational(hb);
      HilbertTable t;
      if (!hp.empty()) {
        const PlaceQ v = PlaceQ::finite(BigInt(parse_rational(hp)));
        t.symbols.emplace(v, hilbert(a, b, v));
      } else if (h_real) {
        t.symbols.emplace(PlaceQ::real(), hilbert(a, b, PlaceQ::real()));
      } else {
        t.symbols = hilbert_all(a, b);
      }
      Json j = encode(t);
      std::string text;
      for (const auto& [v, s] : t.symbols)
        text += "(" + to_string(a) + ", " + to_string(b) + ")_" + v.str() + " = " + std::to_string(s) + "\n";
      if (t.symbols.size() > 1)
        text += "product = " + std::to_string(j["product"].get<int>()) + "\n";
      else
        j.erase("product");
      emit(g, "hilbert", j, text);
    } else if (*brq_class) {
      const QuaternionQ q(parse_rational(ca), parse_rational(cb));
      const BrauerClassQ c = class_of_quaternion(q);
      emit(g, "brq class", encode(c), "class of (" + to_string(q.a) + ", " + to_string(q.b) + "):\n" + class_text(c));
    } else if (*brq_samesub) {
      const BrauerClassQ c1 = read_class(file1), c2 = read_class(file2);
      const bool same = same_maximal_subfields_q(c1, c2);
      Json li1 = Json::object(), li2 = Json::object();
      for (const auto& [v, n] : local_index_vector(c1)) li1[v.str()] = n.get_str();
      for (const auto& [v, n] : local_index_vector(c2)) li2[v.str()] = n.get_str();
      Json j{{"same_maximal_subfields", same},
             {"index", index(c1).get_str()},
             {"local_indices1", li1},
             {"local_indices2", li2},
             {"citations",
              {"a field embeds in a central division algebra over Q iff its local degrees divide the local "
               "indices (Albert-Brauer-Hasse-Noether)"}}};
      emit(g, "brq samesub", j, "same maximal subfields: " + yes_no(same) + " (index " + index(c1).get_str() + ")\n");
    } else if (*brq_ex) {
      std::vector<PlaceQ> places;
      for (const auto& p : ex_places) places.push_back(PlaceQ::finite(BigInt(parse_rational(p))));
      const auto [c1, c2] = four_place_pair(ex_n, places);
      const bool same_max = same_maximal_subfields_q(c1, c2);
      const bool same_sub = same_subgroup(c1, c2);
      Json plist = Json::array();
      for (const auto& v : places) plist.push_back(v.str());
      Json j{{"n", ex_n},
             {"places", plist},
             {"class1", encode(c1)},
             {"class2", encode(c2)},
             {"same_maximal_subfields", same_max},
             {"same_subgroup", same_sub},
             {"equal", c1 == c2}};
      emit(g, "brq ex65", j,
           "class 1:\n" + class_text(c1) + "class 2:\n" + class_text(c2) + "same maximal subfields: " +
               yes_no(same_max) + "\nsame subgroup: " + yes_no(same_sub) + "\nequal: " + yes_no(c1 == c2) + "\n");
    } else if (*brq_scale) {
      const BrauerClassQ c = read_class(scale_file);
      const BigRational m = parse_rational(scale_m);
      if (m.get_den() != 1) throw ParseError("-m must be an integer");
      const BrauerClassQ s = scale_class(c, m.get_num());
      emit(g, "brq scale", encode(s), "scaled class:\n" + class_text(s));
    } else if (*qx_res) {
      const SquareTestBudget budget = SquareTestBudget::from_environment();
      const QuaternionFF d{FactoredFunc::parse(qf), FactoredFunc::parse(qg)};
      const ResidueTableQ t{d, residue_table(d, budget)};
      std::string text = "residues of (" + d.f.str() + ", " + d.g.str() + "):\n";
      for (const auto& r : t.residues)
        text += "  at " + to_string(r.place) + ": symbol " + to_string(r.symbol) + ", " +
                (r.trivial ? "trivial" : "nontrivial") + " (" + certificate_text(r.certificate) + ")\n";
      if (t.residues.empty()) text += "  (no finite place divides f or g)\n";
      emit(g, "qx residues", encode(t), text, Json{{"square_budget", budget_json(budget)}});
    } else if (*qx_isom) {
      const SquareTestBudget budget = SquareTestBudget::from_environment();
      const QuaternionFF d1{FactoredFunc::parse(qf1), FactoredFunc::parse(qg1)};
      const QuaternionFF d2{FactoredFunc::parse(qf2), FactoredFunc::parse(qg2)};
      const IsomorphismVerdict v = is_isomorphic_qx(d1, d2, budget);
      std::string text = v.isomorphic ? "isomorphic\n" : "not_isomorphic\n";
      if (v.residue_witness)
        text += "  residues differ at " + to_string(v.residue_witness->place) + ": " +
                to_string(v.residue_witness->symbol1) + " vs " + to_string(v.residue_witness->symbol2) + " (" +
                certificate_text(v.residue_witness->ratio_certificate) + ")\n";
      if (v.specialization_point) {
        text += "  specialization at x = " + to_string(*v.specialization_point) + ": (" +
                to_string(v.specialized1->a) + ", " + to_string(v.specialized1->b) + ") and (" +
                to_string(v.specialized2->a) + ", " + to_string(v.specialized2->b) + ")\n";
        text += "  difference class:\n" + class_text(*v.constant_difference);
      }
      emit(g, "qx isom", encode(v), text, Json{{"square_budget", budget_json(budget)}});
    } else if (*qx_spec) {
      const QuaternionFF d{FactoredFunc::parse(qf), FactoredFunc::parse(qg)};
      const BigRational at = parse_rational(q_at);
      const QuaternionQ q = specialize(d, at);
      const BrauerClassQ c = class_of_quaternion(q);
      Json j{{"at", to_string(at)}, {"quaternion", encode(q)}, {"class", encode(c)}};
      emit(g, "qx specialize", j,
           "(" + to_string(q.a) + ", " + to_string(q.b) + ") at x = " + to_string(at) + ", class:\n" + class_text(c));
    } else if (*ffx_res) {
      const QuaternionFFp d{FactoredFuncFp::parse(ff, fchar), FactoredFuncFp::parse(fg, fchar)};
      Json residues = Json::object();
      std::string text = "residues of (" + d.f.str() + ", " + d.g.str() + ") over F_" + std::to_string(fchar) + "(x):\n";
      for (const auto& v : candidate_places_fp(d)) {
        const int r = residue_fp(d, v);
        residues[v.str()] = r;
        text += "  at " + v.str() + ": " + std::to_string(r) + "\n";
      }
      const QuatClassFp c = class_fp(d);
      emit(g, "ffx residues", Json{{"algebra", encode(d)}, {"residues", residues}, {"class", encode(c)}},
           text + (c.is_zero() ? "split\n" : "division algebra\n"));
    } else if (*ffx_isom) {
      const QuaternionFFp d1{FactoredFuncFp::parse(ff1, fchar), FactoredFuncFp::parse(fg1, fchar)};
      const QuaternionFFp d2{FactoredFuncFp::parse(ff2, fchar), FactoredFuncFp::parse(fg2, fchar)};
      const IsomorphismVerdictFp v = is_isomorphic_fpx(d1, d2);
      std::string text = v.isomorphic ? "isomorphic\n" : "not_isomorphic\n";
      if (v.witness) text += "  residues differ at " + v.witness->str() + "\n";
      emit(g, "ffx isom", encode(v), text);
    } else if (*self) {
      if (cases < 1) throw ParseError("--cases must be positive");
      const auto results = run_selftest(SelftestOptions{g.seed, cases});
      bool ok = true;
      Json list = Json::array();
      std::string text;
      for (const auto& r : results) {
        ok = ok && r.passed;
        Json e{{"name", r.name}, {"passed", r.passed}, {"cases", r.cases}};
        if (!r.passed) e["detail"] = r.detail;
        list.push_back(e);
        text += std::string(r.passed ? "PASS " : "FAIL ") + r.name + " (" + std::to_string(r.cases) + " cases)" +
                (r.passed ? "" : ": " + r.detail) + "\n";
      }
      emit(g, "selftest", Json{{"passed", ok}, {"suites", list}}, text, Json{{"cases", cases}});
      return ok ? 0 : 1;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const MathError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const BudgetExhausted& e) {
    std::cerr << "undecided: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
