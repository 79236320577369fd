// transversal-lab command line: generators, checkers, searches and the
// verification suites, all over exact rational arithmetic.
//
// Exit codes: 0 success/pass, 1 property failure (counterexample written
// when available), 2 input error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "tlab/error.hpp"
#include "tlab/generators.hpp"
#include "tlab/io.hpp"
#include "tlab/lines3.hpp"
#include "tlab/suites.hpp"
#include "tlab/svg.hpp"
#include "tlab/transversal.hpp"

using namespace tlab;

namespace {

Scalar parse_scalar(const std::string& s) { return Scalar::from_string(s); }

int cmd_gen(const std::string& generator, int n, uint64_t seed, const std::string& fatness,
            const std::string& height, const std::string& eps, const std::string& out) {
  Instance inst;
  if (generator == "cap_family2") {
    inst = gen_cap_family2(n, parse_scalar(fatness), seed);
  } else if (generator == "monotone_lines3") {
    inst = gen_monotone_lines3(n, seed);
  } else if (generator == "strict2_family3") {
    inst = gen_strict2_family3(n, parse_scalar(height), seed);
  } else if (generator == "paraboloid") {
    inst = gen_paraboloid(n, parse_scalar(eps), seed);
  } else {
    throw Error(ErrorCode::BadInput,
                "unknown generator '" + generator +
                    "' (cap_family2, monotone_lines3, strict2_family3, paraboloid)");
  }
  json j = to_json(inst);
  if (out.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    save_json(out, j);
    std::cout << "wrote " << out << " (" << inst.generator << ", " << inst.set_count()
              << " sets, " << inst.lines.size() << " lines)\n";
  }
  return 0;
}

int cmd_check(const std::string& path) {
  Instance inst = load_instance(path);  // re-verifies certificates
  json report;
  report["generator"] = inst.generator;
  report["certified"] = inst.certifies;
  if (inst.dim == 2 && inst.sets2.size() >= 2) {
    FamilyClass2 c = family_class2(inst.sets2);
    report["family_class"] = c == FamilyClass2::Strict2     ? "STRICT_2"
                             : c == FamilyClass2::HasTriple ? "HAS_TRIPLE"
                                                            : "NOT_PAIRWISE";
  }
  if (inst.dim == 3 && inst.sets3.size() >= 2) {
    bool pairwise = true;
    for (size_t i = 0; i < inst.sets3.size() && pairwise; ++i)
      for (size_t j = i + 1; j < inst.sets3.size() && pairwise; ++j)
        if (!polytope_common_point(inst.sets3[i], inst.sets3[j])) pairwise = false;
    report["pairwise_intersecting"] = pairwise;
    if (pairwise && inst.sets3.size() >= 3) {
      std::vector<ConvexPoly2> shadows;
      for (const auto& K : inst.sets3) shadows.push_back(K.shadow());
      FamilyClass2 c = family_class2(shadows);
      report["shadow_class"] = c == FamilyClass2::Strict2     ? "STRICT_2"
                               : c == FamilyClass2::HasTriple ? "HAS_TRIPLE"
                                                              : "NOT_PAIRWISE";
    }
  }
  std::cout << report.dump(2) << "\n";
  return 0;
}

int cmd_realize(const std::string& path, int target, const std::string& out) {
  Instance inst = load_instance(path);
  std::vector<ConvexPoly2> sets = inst.sets2;
  if (inst.dim == 3)
    for (const auto& K : inst.sets3) sets.push_back(K.shadow());
  auto r = extract_realizable(sets, target);
  if (!r) {
    std::cout << "{\"realization\": null}\n";
    return 1;
  }
  json j = to_json(*r);
  if (!out.empty()) save_json(out, j);
  std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_separate(const std::string& path, bool extended) {
  Instance inst = load_instance(path);
  if (inst.lines.size() < 2) throw Error(ErrorCode::BadInput, "instance carries no line family");
  GenericFrame frame = make_projection_generic(inst.lines);
  SeparationSearch s = best_separating_plane(
      frame.lines, extended ? CandidateKind::PiPlusVertexTriples : CandidateKind::PiPlanes);
  Plane3 plane = frame.rotation_index < 0
                     ? s.plane
                     : rotate_plane_xy(s.plane, frame.rotation_index, /*inverse=*/true);
  json j;
  j["plane"] = to_json(plane);
  j["count"] = s.count;
  json pairs = json::array();
  for (auto [a, b] : s.pairs) pairs.push_back(json::array({a, b}));
  j["pairs"] = pairs;
  if (frame.rotation_index >= 0) j["rotation_index"] = frame.rotation_index;
  std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_stab(const std::string& path, const std::string& plane_spec) {
  Instance inst = load_instance(path);
  if (inst.dim != 3 || inst.sets3.empty())
    throw Error(ErrorCode::BadInput, "stab needs a 3D instance with sets");
  json j;
  if (!plane_spec.empty()) {
    // --plane a,b,c,d
    std::vector<Scalar> c;
    std::string tok;
    for (char ch : plane_spec + ",") {
      if (ch == ',') {
        c.push_back(parse_scalar(tok));
        tok.clear();
      } else {
        tok += ch;
      }
    }
    if (c.size() != 4) throw Error(ErrorCode::BadInput, "--plane needs a,b,c,d");
    PlaneStab ps = best_line_in_plane(Plane3(c[0], c[1], c[2], c[3]), inst.sets3);
    j["line"] = to_json(ps.line);
    j["count"] = ps.count;
    j["crossed"] = ps.ids;
  } else {
    TransversalReport rep = run_pipeline(inst.sets3);
    j = to_json(rep);
  }
  std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_pipeline(const std::string& path, const std::string& report_path) {
  Instance inst = load_instance(path);
  if (inst.dim != 3 || inst.sets3.empty())
    throw Error(ErrorCode::BadInput, "pipeline needs a 3D instance with sets");
  TransversalReport rep = run_pipeline(inst.sets3);
  json j = to_json(rep);
  if (!report_path.empty()) save_json(report_path, j);
  std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_verify(const std::string& suite, int trials, uint64_t seed) {
  SuiteReport r = verify_suite(suite, trials, seed);
  json j;
  j["suite"] = r.name;
  j["trials"] = r.trials;
  j["passes"] = r.passes;
  j["seconds"] = r.seconds;
  json stats = json::object();
  for (const auto& [k, v] : r.stats) stats[k] = v;
  j["stats"] = stats;
  json fails = json::array();
  for (const auto& f : r.failures)
    fails.push_back(json{{"trial", f.trial}, {"seed", f.seed}, {"message", f.message}});
  j["failures"] = fails;
  std::cout << j.dump(2) << "\n";
  if (!r.ok()) {
    for (size_t i = 0; i < r.failures.size(); ++i) {
      if (r.failures[i].artifact.empty()) continue;
      std::string path = "counterexample_" + r.name + "_" + std::to_string(i) + ".json";
      std::ofstream out(path);
      out << r.failures[i].artifact << "\n";
      std::cerr << "counterexample written to " << path << "\n";
    }
    return 1;
  }
  return 0;
}

int cmd_render(const std::string& path, const std::string& svg_path) {
  Instance inst = load_instance(path);
  std::string svg = render_svg(inst);
  std::ofstream out(svg_path);
  if (!out) throw Error(ErrorCode::BadInput, "cannot write '" + svg_path + "'");
  out << svg;
  std::cout << "wrote " << svg_path << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"transversal-lab: exact predicates and searches for line transversals"};
  app.require_subcommand(1);

  std::string generator, instance_path, out_path, plane_spec, fatness = "1/10", height = "5",
                                                             eps = "1/1000", suite;
  int n = 6, target = 3, trials = 0;
  uint64_t seed = 1;
  bool extended = false;

  auto* gen = app.add_subcommand("gen", "generate an instance");
  gen->add_option("generator", generator,
                  "cap_family2 | monotone_lines3 | strict2_family3 | paraboloid")
      ->required();
  gen->add_option("--n", n, "family size");
  gen->add_option("--seed", seed, "random seed");
  gen->add_option("--fatness", fatness, "strip fatness (rational)");
  gen->add_option("--height", height, "vertical extension (rational)");
  gen->add_option("--eps", eps, "perturbation magnitude (rational)");
  gen->add_option("--out", out_path, "output file (stdout when omitted)");

  auto* chk = app.add_subcommand("check", "load and classify an instance");
  chk->add_option("instance", instance_path)->required();

  auto* rel = app.add_subcommand("realize", "extract a realizable subsequence");
  rel->add_option("instance", instance_path)->required();
  rel->add_option("--target", target, "required realization length");
  rel->add_option("--out", out_path, "write the realization JSON here");

  auto* sep = app.add_subcommand("separate", "best separating plane for the line family");
  sep->add_option("instance", instance_path)->required();
  sep->add_flag("--extended", extended, "include planes through foot triples");

  auto* stab = app.add_subcommand("stab", "best stabbing line (in a plane, or end to end)");
  stab->add_option("instance", instance_path)->required();
  stab->add_option("--plane", plane_spec, "a,b,c,d for ax+by+cz=d");

  auto* pipe = app.add_subcommand("pipeline", "run the full transversal pipeline");
  pipe->add_option("instance", instance_path)->required();
  pipe->add_option("--report", out_path, "write the report JSON here");

  auto* ver = app.add_subcommand("verify", "run a verification suite");
  ver->add_option("suite", suite, "suite name, or 'list'")->required();
  ver->add_option("--trials", trials, "trial count (suite default when 0)");
  ver->add_option("--seed", seed, "base seed");

  auto* ren = app.add_subcommand("render", "render an instance to SVG");
  ren->add_option("instance", instance_path)->required();
  ren->add_option("--svg", out_path, "output SVG path")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) return cmd_gen(generator, n, seed, fatness, height, eps, out_path);
    if (chk->parsed()) return cmd_check(instance_path);
    if (rel->parsed()) return cmd_realize(instance_path, target, out_path);
    if (sep->parsed()) return cmd_separate(instance_path, extended);
    if (stab->parsed()) return cmd_stab(instance_path, plane_spec);
    if (pipe->parsed()) return cmd_pipeline(instance_path, out_path);
    if (ver->parsed()) {
      if (suite == "list") {
        for (const auto& name : suite_names())
          std::cout << name << " (default trials: " << default_suite_trials(name) << ")\n";
        return 0;
      }
      return cmd_verify(suite, trials, seed);
    }
    if (ren->parsed()) return cmd_render(instance_path, out_path);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::VerifyFailed:
      case ErrorCode::GenFailed:
        return 1;
      default:
        return 2;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
