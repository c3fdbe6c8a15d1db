// hforge: build and verify finite Heisenberg-group algebra.
//
// Exit codes: 0 success, 1 violated property, 2 input/usage error.

#include <cstdlib>
#include <iostream>

#include "CLI11.hpp"
#include "hforge/json_io.hpp"
#include "hforge/verify.hpp"

namespace {

using namespace hforge;

Coord max_order_default() {
  if (const char* env = std::getenv("HFORGE_MAX_ORDER")) {
    Coord v = std::atoll(env);
    if (v > 0) return v;
  }
  return 256;
}

int cmd_build(const std::string& form_path, bool expanded,
              const std::string& out_path, Coord max_order) {
  BilinearForm b = form_from_json(load_json_file(form_path));
  if (b.torus.size() * b.g.size() * b.gamma.size() > max_order)
    throw std::invalid_argument("group order exceeds --max-order");
  json out;
  if (expanded) {
    ExpandedHeis x = heis_from_form_expanded(b);
    out = to_json(x.ext.total);
    out["torus_orders"] = x.ext.torus.orders;
    out["phase_orders"] = x.ext.phase.orders;
  } else {
    out = to_json(HeisGroup(b).realize());
  }
  if (out_path.empty())
    std::cout << out.dump(2) << "\n";
  else
    save_json_file(out_path, out);
  return 0;
}

int cmd_lattice(const std::string& form_path, const std::string& dot_path,
                const std::string& out_path, Coord max_order) {
  AlternatingForm f;
  json j = load_json_file(form_path);
  if (j.contains("values"))
    f = phase_form(form_from_json(j));
  else
    f = alternating_from_json(j);
  if (f.p.size() > max_order)
    throw std::invalid_argument("phase group exceeds --max-order");
  ClosedLattice lat = closed_lattice(f);
  std::string dot = lattice_to_dot(lat);
  if (!dot_path.empty()) {
    std::ofstream o(dot_path);
    if (!o) throw std::invalid_argument("cannot open " + dot_path);
    o << dot;
  }
  json out;
  out["closed_subgroups"] = json::array();
  for (size_t i = 0; i < lat.nodes.size(); ++i) {
    SubgroupClass c = classify(f, lat.nodes[i]);
    out["closed_subgroups"].push_back(
        {{"label", subgroup_label(lat.nodes[i])},
         {"order", lat.nodes[i].size()},
         {"perp", lat.perp[i]},
         {"isotropic", c.isotropic},
         {"coisotropic", c.coisotropic},
         {"lagrangian", c.lagrangian}});
  }
  out["covers"] = lat.covers;
  if (out_path.empty()) {
    if (dot_path.empty()) std::cout << dot;
  } else {
    save_json_file(out_path, out);
  }
  return 0;
}

int cmd_cohomology(const std::string& op, const std::string& path,
                   const std::string& path2, const std::string& out_path) {
  json result;
  if (op == "classify") {
    Cocycle g = cocycle_from_json(load_json_file(path));
    auto h = is_coboundary(g);
    result["normalization_adjusted"] = g.normalization_adjusted;
    result["symmetric"] = g.is_symmetric();
    result["coboundary"] = h.has_value();
    result["abelian_class"] = ext1_member(g);
    result["commutator_form_nondegenerate"] = is_nondegenerate(q_map(g));
  } else if (op == "equivalent") {
    if (path2.empty()) throw std::invalid_argument("--cocycle2 required");
    Cocycle g1 = cocycle_from_json(load_json_file(path));
    Cocycle g2 = cocycle_from_json(load_json_file(path2));
    CentralExtension e1 = extension_from_cocycle(g1);
    CentralExtension e2 = extension_from_cocycle(g2);
    result["equivalent"] = are_equivalent(e1, e2).has_value();
  } else if (op == "qmap") {
    Cocycle g = cocycle_from_json(load_json_file(path));
    result = to_json(q_map(g));
  } else if (op == "sqrt") {
    json j = load_json_file(path);
    AlternatingForm w;
    try {
      w = alternating_from_json(j);
    } catch (const std::exception&) {
      w = q_map(cocycle_from_json(j));  // accept a cocycle and take its form
    }
    std::optional<Cocycle> g;
    if (w.torus.size() % 2 == 1) {
      g = sqrt_section(w);
    } else if (auto r = make_partial_sqrt(w.torus)) {
      bool in_squares = true;
      for (Coord z = 0; z < w.p.size() && in_squares; ++z)
        for (Coord v = 0; v < w.p.size() && in_squares; ++v)
          in_squares = r->squares.contains(w.at(z, v));
      if (in_squares) g = partial_sqrt_section(w, *r);
    }
    result["found"] = g.has_value();
    if (g) result["cocycle"] = to_json(g->c2);
  } else {
    throw std::invalid_argument("unknown --op " + op);
  }
  if (out_path.empty())
    std::cout << result.dump(2) << "\n";
  else
    save_json_file(out_path, result);
  return 0;
}

int cmd_verify(const std::string& suite, uint64_t seed, Coord max_order,
               bool inject_literal) {
  std::vector<CorpusEntry> corpus = duality_corpus(max_order);
  if (corpus.empty()) {
    std::cerr << "error: empty corpus (max order " << max_order << ")\n";
    return 2;
  }
  bool all_pass = true;
  if (inject_literal) {
    // negative control: the verbatim "xi + x'" table is not a cocycle
    for (Coord n : {2, 3, 4}) {
      bool caught = false;
      std::string why;
      try {
        Cocycle bad(examples::literal_sum_cochain(n));
        (void)bad;
      } catch (const std::exception& ex) {
        caught = true;
        why = ex.what();
      }
      if (caught) {
        std::cout << "FAIL injected/literal-sum-cocycle N=" << n
                  << " rejected: " << why << "\n";
        all_pass = false;
      } else {
        std::cout << "PASS injected/literal-sum-cocycle N=" << n << "\n";
      }
    }
  }
  std::vector<CheckResult> results = run_suite(suite, corpus, seed);
  for (const auto& r : results) {
    std::cout << (r.pass ? "PASS " : "FAIL ") << r.tag;
    if (!r.pass) std::cout << " -- " << r.detail;
    std::cout << "\n";
    all_pass = all_pass && r.pass;
  }
  if (suite == "symplectic" || suite == "all") {
    auto hits = minimal_coisotropic_search(corpus);
    std::cout << "INFO minimal-coisotropic-but-not-Lagrangian search: "
              << hits.size() << " candidate(s)";
    for (size_t i = 0; i < hits.size() && i < 5; ++i)
      std::cout << "\n  " << hits[i];
    std::cout << "\n";
  }
  std::cout << "corpus: " << corpus.size() << " dualities, seed " << seed
            << "\n";
  return all_pass ? 0 : 1;
}

int cmd_example(const std::string& name, Coord param, std::string prefix) {
  if (prefix.empty()) prefix = name;
  auto emit = [&](const std::string& suffix, const json& j) {
    std::string path = prefix + "_" + suffix + ".json";
    save_json_file(path, j);
    std::cout << "wrote " << path << "\n";
  };
  if (name == "d4") {
    BilinearForm b = examples::d4_form();
    emit("form", to_json(b));
    emit("group", to_json(HeisGroup(b).realize()));
  } else if (name == "heis") {
    BilinearForm b = examples::heis_form(param);
    emit("form", to_json(b));
    emit("cocycle", to_json(examples::heis_cocycle(param).c2));
    emit("group", to_json(HeisGroup(b).realize()));
  } else if (name == "perturbed") {
    emit("gamma0", to_json(examples::heis_cocycle(param).c2));
    emit("alpha", to_json(examples::carry_cocycle(param).c2));
    emit("perturbed", to_json(examples::perturbed_cocycle(param).c2));
  } else if (name == "freenil3") {
    AlternatingForm w = examples::freenil3_form();
    emit("omega", to_json(w));
    std::cout << "lagrangian bisections: " << lagrangian_bisections(w).size()
              << "\n";
  } else {
    throw std::invalid_argument("unknown example " + name);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite Heisenberg-group algebra toolkit"};
  app.require_subcommand(1);
  Coord max_order = max_order_default();
  app.add_option("--max-order", max_order, "largest group order to construct");

  std::string form_path, out_path, dot_path, op, coc_path, coc2_path, suite,
      example_name;
  bool expanded = false, inject_literal = false;
  uint64_t seed = 0;
  Coord param = 2;

  CLI::App* build = app.add_subcommand("build", "construct H(beta) from a form");
  CLI::App* buildh = app.add_subcommand("build-heisenberg", "alias of build");
  for (CLI::App* c : {build, buildh}) {
    c->add_option("--form", form_path, "bilinear form JSON")->required();
    c->add_flag("--expanded", expanded, "enlarge the torus by the kernels");
    c->add_option("--out", out_path, "output group JSON (default: stdout)");
  }

  CLI::App* lattice =
      app.add_subcommand("lattice", "closed-subgroup lattice of a form");
  lattice->add_option("--form", form_path, "bilinear or alternating form JSON")
      ->required();
  lattice->add_option("--dot", dot_path, "write a DOT Hasse diagram");
  lattice->add_option("--out", out_path, "output lattice JSON");

  CLI::App* cohom = app.add_subcommand("cohomology", "cocycle operations");
  cohom->add_option("--op", op, "classify|equivalent|qmap|sqrt")->required();
  cohom->add_option("--cocycle", coc_path, "cocycle (or form, for sqrt) JSON")
      ->required();
  cohom->add_option("--cocycle2", coc2_path, "second cocycle JSON");
  cohom->add_option("--out", out_path, "output JSON (default: stdout)");

  CLI::App* verify = app.add_subcommand("verify", "run a property suite");
  verify
      ->add_option("--suite", suite,
                   "nil2|symplectic|heisenberg|cohomology|roundtrip|all")
      ->required();
  verify->add_option("--seed", seed, "seed for randomized checks");
  verify->add_flag("--inject-literal", inject_literal,
                   "also test the literal sum table (expected to fail)");

  CLI::App* example = app.add_subcommand("example", "emit a named instance");
  example->add_option("name", example_name, "d4|heis|perturbed|freenil3")
      ->required();
  example->add_option("--param", param, "N for heis/perturbed");
  example->add_option("--out", out_path, "output file prefix");

  CLI11_PARSE(app, argc, argv);

  try {
    if (build->parsed() || buildh->parsed())
      return cmd_build(form_path, expanded, out_path, max_order);
    if (lattice->parsed())
      return cmd_lattice(form_path, dot_path, out_path, max_order);
    if (cohom->parsed()) return cmd_cohomology(op, coc_path, coc2_path, out_path);
    if (verify->parsed())
      return cmd_verify(suite, seed, max_order, inject_literal);
    if (example->parsed()) return cmd_example(example_name, param, out_path);
  } catch (const std::invalid_argument& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  } catch (const std::exception& ex) {
    std::cerr << "violation: " << ex.what() << "\n";
    return 1;
  }
  return 2;
}
