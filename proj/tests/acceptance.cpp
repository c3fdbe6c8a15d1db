// Acceptance checks: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <iostream>

#include "hforge/verify.hpp"

using namespace hforge;

namespace {

int failures = 0;

void report(int num, const std::string& what, bool ok,
            const std::string& detail = "") {
  std::cout << (ok ? "PASS" : "FAIL") << " " << num << ". " << what;
  if (!detail.empty()) std::cout << " [" << detail << "]";
  std::cout << std::endl;
  if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

bool suite_passes(const std::vector<CheckResult>& rs,
                  const std::vector<std::string>& tags, std::string& why) {
  for (const auto& tag : tags) {
    bool found = false;
    for (const auto& r : rs)
      if (r.tag == tag) {
        found = true;
        if (!r.pass) {
          why = tag + ": " + r.detail;
          return false;
        }
      }
    if (!found) {
      why = tag + ": missing";
      return false;
    }
  }
  return true;
}

}  // namespace

int main() {
  std::vector<CorpusEntry> corpus = duality_corpus();
  std::string why;
  std::vector<CheckResult> rs_sym = suite_symplectic(corpus, 0);

  // 1. order-8 dictionary
  {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::string detail;
    try {
      HeisGroup h(examples::d4_form());
      const FiniteGroup& big = h.realize();
      FiniteGroup d4 = dihedral_table(4);
      auto idx = [&](Coord c, int x, int xi) {
        return static_cast<int>(h.index_of({AbElement{c}, x, xi}));
      };
      // 1<->+00, t<->-11, t2<->-00, t3<->+11, r<->+10, tr<->+01,
      // t2r<->-10, t3r<->-01
      std::vector<int> phi = {idx(0, 0, 0), idx(1, 1, 1), idx(1, 0, 0),
                              idx(0, 1, 1), idx(0, 1, 0), idx(0, 0, 1),
                              idx(1, 1, 0), idx(1, 0, 1)};
      for (int u = 0; u < 8 && ok; ++u)
        for (int v = 0; v < 8 && ok; ++v)
          ok = phi[d4.mul(u, v)] == big.mul(phi[u], phi[v]);
      ok = ok && find_isomorphism(d4, big).has_value();
      double dt = seconds_since(t0);
      ok = ok && dt < 1.0;
      detail = std::to_string(dt) + "s";
    } catch (const std::exception& ex) {
      ok = false;
      detail = ex.what();
    }
    report(1, "order-8 dihedral dictionary", ok, detail);
  }

  // 2. closed formulas vs brute force over the corpus
  {
    auto t0 = std::chrono::steady_clock::now();
    auto rs = suite_nil2(corpus, 0);
    bool ok = suite_passes(rs,
                           {"nil2/table-is-a-group", "nil2/inverse-formula",
                            "nil2/commutator-and-center-formulas"},
                           why);
    double dt = seconds_since(t0);
    ok = ok && corpus.size() >= 100 && dt < 60.0;
    report(2, "formula-vs-oracle on " + std::to_string(corpus.size()) +
               " corpus instances", ok,
           ok ? std::to_string(dt) + "s" : why);
  }

  // 3. eight-part subgroup correspondence
  {
    bool ok = true;
    std::string detail;
    try {
      HeisObject o = heis_extension(HeisGroup(examples::d4_form()));
      ok = enumerate_grp_subgroups(o.ext.total).size() == 10 &&
           enumerate_subgroups(o.ext.phase).size() == 5;
      if (!ok) detail = "dihedral subgroup counts off";
      if (ok && !suite_passes(rs_sym, {"sympl/subgroup-correspondence"}, why)) {
        ok = false;
        detail = why;
      }
    } catch (const std::exception& ex) {
      ok = false;
      detail = ex.what();
    }
    report(3, "subgroup correspondence (eight equivalences, full corpus)", ok,
           detail);
  }

  // 4.-5. lattice laws and Lagrangian extremality
  {
    const auto& rs = rs_sym;
    bool ok4 = suite_passes(rs,
                            {"sympl/galois-laws",
                             "sympl/strict-inclusion-instance-exists",
                             "sympl/closed-lattice"},
                            why);
    report(4, "Galois connection and closed-lattice laws", ok4,
           ok4 ? "" : why);
    bool ok5 = suite_passes(rs, {"sympl/lagrangian-extremality"}, why);
    report(5, "Lagrangian extremality", ok5, ok5 ? "" : why);
  }

  // 6.-8. cohomology criteria
  {
    auto rs = suite_cohomology(corpus, 0);
    bool ok6 = suite_passes(rs,
                            {"cohom/standard-cocycle",
                             "cohom/no-bilinear-coboundaries",
                             "cohom/bilinear-class-counts"},
                            why);
    report(6, "standard cocycles, coboundary exclusion, class counts", ok6,
           ok6 ? "" : why);

    bool ok7 = suite_passes(rs, {"cohom/perturbed-family"}, why);
    {
      // the timed budget covers the perturbed family alone
      auto t1 = std::chrono::steady_clock::now();
      for (Coord n : {2, 3, 4}) {
        Cocycle g0 = examples::heis_cocycle(n);
        Cocycle pert = examples::perturbed_cocycle(n);
        ok7 = ok7 && q_map(pert) == q_map(g0) &&
              !are_equivalent(extension_from_cocycle(g0),
                              extension_from_cocycle(pert));
      }
      double d1 = seconds_since(t1);
      ok7 = ok7 && d1 < 5.0;
      report(7, "perturbed non-injectivity for N in {2,3,4}", ok7,
             ok7 ? std::to_string(d1) + "s" : why);
    }

    bool ok8 = suite_passes(rs,
                            {"cohom/sqrt-sections-odd", "cohom/partial-sqrt",
                             "cohom/skewing-section"},
                            why);
    report(8, "square-root sections (odd, partial, skewing)", ok8,
           ok8 ? "" : why);
  }

  // 9. round trips
  {
    auto rs = suite_roundtrip(corpus, 0);
    bool ok = suite_passes(rs,
                           {"roundtrip/form-extension-form",
                            "roundtrip/reconstruct",
                            "roundtrip/splittings-reconstruct"},
                           why);
    bool exact = true;
    std::string detail;
    try {
      for (const auto& e : corpus)
        if (!(form_from_canonical_heis(HeisGroup(e.form)) == e.form)) {
          exact = false;
          detail = e.name;
          break;
        }
    } catch (const std::exception& ex) {
      exact = false;
      detail = ex.what();
    }
    report(9, "round trips (form, extension, splittings)", ok && exact,
           ok ? detail : why);
  }

  // 10. negative controls
  {
    bool ok = true;
    std::string detail;
    try {
      if (!lagrangian_bisections(examples::freenil3_form()).empty()) {
        ok = false;
        detail = "rank-3 form has a Lagrangian bisection";
      }
      for (const auto& s : find_splittings(quaternion_table()))
        if (s.kind == SplittingKind::Abelian) {
          ok = false;
          detail = "quaternion group split abelian";
        }
    } catch (const std::exception& ex) {
      ok = false;
      detail = ex.what();
    }
    report(10, "negative controls (rank-3 bisections, quaternion splitting)",
           ok, detail);
  }

  std::cout << (failures == 0 ? "ALL ACCEPTANCE CRITERIA PASS"
                              : std::to_string(failures) + " CRITERIA FAILED")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
