// ginwb - command-line front end for the degree-11 gin workbench:
// ideal enumeration, rewrite searches, implicitization over a prime field,
// syzygy splitting types, surface/liaison arithmetic, and the audit corpus.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ginwb/fixtures.hpp"
#include "ginwb/report.hpp"

using namespace ginwb;
using nlohmann::json;

namespace {

struct CommonOpts {
  std::string out_path;
  bool as_json = false;
  int threads = 1;
  std::uint32_t modulus = 32003;
};

int finish(ReportDocument& doc, const CommonOpts& common, const std::string& extra_input = {}) {
  doc.inputs_digest = fnv_digest(doc.command + "\n" + extra_input);
  std::string text;
  if (common.as_json) {
    text = doc.to_json().dump(2) + "\n";
  } else {
    text = "ginwb " + std::string(kToolVersion) + " :: " + doc.command + "\n";
    text += doc.sections.dump(2) + "\n";
    if (!doc.discrepancies.empty()) {
      text += "discrepancies:\n";
      for (const auto& d : doc.discrepancies) text += "  - " + d + "\n";
    }
  }
  if (!common.out_path.empty()) {
    std::ofstream out(common.out_path);
    out << text;
  } else {
    std::cout << text;
  }
  return doc.discrepancies.empty() ? 0 : 1;
}

std::vector<Form2> input_forms(const std::string& fixture, const std::string& param_file,
                               int& degree, const PrimeField& F) {
  if (!fixture.empty()) {
    degree = fixtures::fixture_degree(fixture);
    return fixtures::fixture_forms(fixture, F);
  }
  if (!param_file.empty()) {
    auto [forms, d] = fixtures::load_param_file(param_file, F);
    degree = d;
    return forms;
  }
  throw CLI::ValidationError("--fixture or --param-file is required");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"degree-11 rational-curve gin workbench"};
  app.require_subcommand(1);
  app.fallthrough();

  CommonOpts common;
  if (const char* env = std::getenv("GINWB_THREADS")) common.threads = std::atoi(env);
  app.add_option("--threads", common.threads, "worker threads for enumeration frontiers");
  app.add_option("--out", common.out_path, "write the report to a file");
  app.add_flag("--json", common.as_json, "emit the full JSON report");
  app.add_option("--modulus", common.modulus, "prime modulus for the polynomial engines");

  std::string ambient = "p4";
  long long degree = 11;
  std::string ideal_literal;
  std::string fixture, param_file;
  std::string surface_name = "F1";
  bool no_uniform_position = false;
  int budget = -1;
  int curve_reg = 7;

  auto* cmd_enum = app.add_subcommand("enumerate", "hyperplane-gin classification");
  cmd_enum->add_option("--ambient", ambient, "p3 or p4");
  cmd_enum->add_option("--degree", degree, "degree of the hyperplane section");
  cmd_enum->add_flag("--no-uniform-position", no_uniform_position,
                     "drop the uniform-position Hilbert bound above degree 2");

  auto* cmd_bound = app.add_subcommand("bound", "g+i bound of a hyperplane gin");
  cmd_bound->add_option("--ideal", ideal_literal, "ideal literal in x0..x2")->required();

  auto* cmd_curve = app.add_subcommand("curve-gins", "curve gins reachable from a hyperplane gin");
  cmd_curve->add_option("--ideal", ideal_literal, "hyperplane gin literal in x0..x2")->required();
  cmd_curve->add_option("--budget", budget, "number of rewrites (default: down to genus 0)");
  cmd_curve->add_option("--max-regularity", curve_reg, "regularity cap for the search");

  std::string order = "grevlex";
  auto* cmd_impl = app.add_subcommand("implicitize", "kernel of a parameterized curve");
  cmd_impl->add_option("--fixture", fixture, "aux1 | aux2 | aux3");
  cmd_impl->add_option("--param-file", param_file, "one form per line in t,u");
  cmd_impl->add_option("--order", order,
                       "grevlex: report the kernel basis; elim: also report the size of "
                       "the truncated elimination basis");

  auto* cmd_split = app.add_subcommand("splitting", "syzygy degrees and splitting type");
  cmd_split->add_option("--fixture", fixture, "aux1 | aux2 | aux3");
  cmd_split->add_option("--param-file", param_file, "one form per line in t,u");

  auto* cmd_syz = app.add_subcommand("syzygy-solve", "solve a fixture's relation system");
  cmd_syz->add_option("--fixture", fixture, "aux2 | aux3")->required();

  auto* cmd_surface = app.add_subcommand("surface", "divisor arithmetic on a surface model");
  cmd_surface->add_option("--surface", surface_name, "F0 | F1 | F2 | F3 | Bl6P2");

  auto* cmd_liaison = app.add_subcommand("liaison", "residual Hilbert-polynomial arithmetic");

  auto* cmd_audit = app.add_subcommand("audit", "run the case corpus");
  bool audit_all = false;
  cmd_audit->add_flag("--all", audit_all, "include every corpus family");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  ReportDocument doc;
  for (int i = 1; i < argc; ++i) doc.command += std::string(i > 1 ? " " : "") + argv[i];

  try {
    if (cmd_enum->parsed()) {
      StageTimer t(doc, "enumerate_ms");
      if (ambient == "p4") {
        ConstraintSet C;
        if (no_uniform_position) C.uniform_position_max_degree = 2;
        auto recs = enumerate_hyperplane_gins_p4(degree, C);
        json arr = json::array();
        std::multiset<long long> bounds;
        for (const auto& r : recs) {
          arr.push_back(record_json(r));
          bounds.insert(r.bound);
          for (const auto& n : r.notes)
            doc.discrepancies.push_back(ideal_str(r.ideal) + ": " + n);
        }
        doc.sections["records"] = arr;
        doc.sections["count"] = recs.size();
        doc.sections["bound_multiset"] = std::vector<long long>(bounds.begin(), bounds.end());
        for (const auto& [idx, why] : reference_diff(recs)) doc.discrepancies.push_back(why);
      } else if (ambient == "p3") {
        auto sts = enumerate_hyperplane_gins_p3(degree);
        json arr = json::array();
        for (const auto& r : sts) {
          json j;
          j["staircase"] = r.staircase.str();
          j["degree"] = r.degree;
          j["regularity"] = r.regularity;
          j["cone_genus"] = r.cone_genus;
          j["ideal"] = ideal_str(r.staircase.ideal());
          arr.push_back(j);
        }
        doc.sections["staircases"] = arr;
      } else {
        throw ginwb_error("--ambient must be p3 or p4");
      }
    } else if (cmd_bound->parsed()) {
      auto I = parse_ideal_literal(ideal_literal, 3);
      long long len = colength(I);
      doc.sections["ideal"] = ideal_str(I);
      doc.sections["colength"] = len;
      doc.sections["regularity"] = regularity(cone_extend(I, 1));
      doc.sections["cone_genus"] = one_dim_degree_genus(cone_extend(I, 2)).second;
      doc.sections["bound"] = gplusi_bound(I, len);
    } else if (cmd_curve->parsed()) {
      StageTimer t(doc, "search_ms");
      auto I = parse_ideal_literal(ideal_literal, 3);
      auto [d0, cg] = one_dim_degree_genus(cone_extend(I, 2));
      (void)d0;
      int b = budget < 0 ? static_cast<int>(cg) : budget;
      ConstraintSet C;
      C.curve_max_regularity = curve_reg;
      auto S = enumerate_curve_gins(I, b, C, common.threads);
      long long max_i = 0;
      for (const auto& r : S.records) max_i = std::max(max_i, r.i);
      doc.sections["states"] = S.records.size();
      doc.sections["cone_genus"] = S.cone_genus;
      doc.sections["max_i"] = max_i;
      long long max_gi = 0;
      for (const auto& r : S.records) max_gi = std::max(max_gi, r.g + r.i);
      doc.sections["max_g_plus_i"] = max_gi;
    } else if (cmd_impl->parsed()) {
      StageTimer t(doc, "implicitize_ms");
      int d = 0;
      PrimeField F(common.modulus);
      auto forms = input_forms(fixture, param_file, d, F);
      auto impl = implicitize(forms, d, common.modulus, d <= 10 ? 6 : 7);
      if (order == "elim")
        doc.sections["elimination_basis_size"] = impl.elimination_basis_size;
      else if (order != "grevlex")
        throw ginwb_error("--order must be grevlex or elim");
      doc.sections["kernel_size"] = impl.kernel.size();
      doc.sections["initial_ideal"] = ideal_str(impl.initial_ideal);
      doc.sections["initial_ideal_borel_fixed"] = is_borel_fixed(impl.initial_ideal);
      doc.sections["max_generator_degree"] = impl.initial_ideal.max_gen_degree();
      auto [dd, gg] = image_degree_genus(impl);
      doc.sections["image_degree"] = dd;
      doc.sections["image_genus"] = gg;
      if (fixture == "aux2" && !(impl.initial_ideal == fixtures::aux2_initial_ideal()))
        doc.discrepancies.push_back("aux2 initial ideal differs from the reference");
      if (fixture == "aux3") {
        if (!(impl.initial_ideal == fixtures::aux3_initial_ideal()))
          doc.discrepancies.push_back("aux3 initial ideal differs from the computed reference");
        if (!(impl.initial_ideal == fixtures::aux3_initial_ideal_printed()))
          doc.discrepancies.push_back(
              "aux3 initial ideal differs from the published rendition in one generator "
              "(x0^2*x3^2 vs x0^2*x3^3)");
      }
    } else if (cmd_split->parsed()) {
      StageTimer t(doc, "splitting_ms");
      int d = 0;
      PrimeField F(common.modulus);
      auto forms = input_forms(fixture, param_file, d, F);
      auto sp = syzygy_splitting_type(forms, d, common.modulus);
      doc.sections["syzygy_degrees"] = sp.record.syzygy_degrees;
      doc.sections["splitting"] = sp.splitting;
      doc.sections["betti"] = betti_of(sp.record).str();
    } else if (cmd_syz->parsed()) {
      StageTimer t(doc, "solve_ms");
      PrimeField F(common.modulus);
      auto rels = fixtures::fixture_relations(fixture, F);
      auto sol = solve_syzygy_constraints(rels, 11, common.modulus);
      doc.sections["rank"] = sol.rank;
      doc.sections["nullity"] = sol.nullity;
      if (!sol.representatives.empty()) {
        json forms = json::array();
        for (const auto& f : sol.representatives[0]) forms.push_back(form_str(f, F));
        doc.sections["representative"] = forms;
        doc.sections["matches_reference"] =
            proportional(sol.representatives[0], fixtures::fixture_forms(fixture, F), F);
      }
    } else if (cmd_surface->parsed()) {
      json j;
      if (surface_name == "Bl6P2") {
        auto sols = blowup6_solutions();
        j["divisor_system_solutions"] = sols.size();
        auto relaxed = blowup6_solutions(true, true, true, false);
        j["solutions_without_smoothness_floor"] = relaxed.size();
      } else {
        int n = surface_name[1] - '0';
        auto S = SurfaceModel::hirzebruch(n);
        DivisorClass H{1, n == 0 ? 2 : (n == 1 ? 2 : 3)};
        j["hyperplane_class"] = H.str();
        auto classes = solve_classes(S, H, 11, {12}, n != 3);
        json cls = json::array();
        for (const auto& c : classes) {
          json cj;
          cj["class"] = c.str();
          auto st = divisor_stats(S, c, H);
          cj["genus"] = st.genus;
          cj["pairs_with_section"] = S.pair(c, DivisorClass{1, 0});
          auto nb = normal_sheaf_bound(S, c);
          cj["normal_sheaf_degree_bound"] = nb.degree_bound;
          cj["normal_sheaf_section_bound"] = nb.section_bound;
          cls.push_back(cj);
        }
        j["degree11_genus12_classes"] = cls;
        json low_genus = json::array();
        for (const auto& c : solve_classes(S, H, 11, {0, 1, 2}))
          low_genus.push_back(c.str());
        j["degree11_low_genus_classes"] = low_genus;
        j["h0_of_hyperplane_class"] = h0_line_bundle_fn(n, (int)H.c[0], (int)H.c[1]);
      }
      doc.sections[surface_name] = j;
      auto dims = scroll_family_dims();
      doc.sections["scroll_families"] = {
          {"s22_family", dims.s22_family}, {"s13_family", dims.s13_family},
          {"s13_total", dims.s13_total},   {"s22_total", dims.s22_total},
          {"veronese_even_degree_only", dims.veronese_even_degree_only}};
    } else if (cmd_liaison->parsed()) {
      auto chiX = koszul_chi({3, 3, 3}, 4);
      doc.sections["chi_333"] = chiX.str();
      auto chi33 = koszul_chi({3, 3}, 4);
      RationalPoly scroll({Rational(1), Rational(5, 2), Rational(3, 2)});
      auto r6 = liaison_residual_chi(chi33, scroll);
      doc.sections["deg6_residual"] = r6.chi_residual.str();
      doc.sections["deg6_sectional_genus"] = r6.sectional_genus;
      auto r7 = liaison_residual_chi(chi33, koszul_chi({1, 2}, 4));
      doc.sections["deg7_residual"] = r7.chi_residual.str();
      doc.sections["deg7_sectional_genus"] = r7.sectional_genus;
      auto r8 = liaison_residual_chi(chi33, binomial_poly(2, 2));
      doc.sections["deg8_residual"] = r8.chi_residual.str();
      RationalPoly printed8({Rational(4), Rational(-3), Rational(4)});
      if (!(r8.chi_residual == printed8))
        doc.discrepancies.push_back("degree-8 residual chi " + r8.chi_residual.str() +
                                    " differs from the published 4*t^2 - 3*t + 4");
    } else if (cmd_audit->parsed()) {
      StageTimer t(doc, "audit_ms");
      auto rep = run_audit(audit_corpus(common.threads));
      json arr = json::array();
      for (const auto& c : rep.cases) arr.push_back(case_json(c));
      doc.sections["cases"] = arr;
      doc.sections["case_count"] = rep.cases.size();
      doc.sections["mismatched_verdicts"] = rep.mismatched_verdicts;
      for (const auto& d : rep.discrepancies) doc.discrepancies.push_back(d);
    }
  } catch (const ginwb_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  std::string extra;
  if (!param_file.empty()) {
    std::ifstream in(param_file);
    std::stringstream ss;
    ss << in.rdbuf();
    extra = ss.str();
  }
  return finish(doc, common, extra);
}
