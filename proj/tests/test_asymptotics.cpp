#include "doctest.h"

#include "semiwell/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

using namespace semiwell;

namespace {

std::vector<SweepRecord> synthetic(const std::vector<int>& ns, double a0, double ah, double a1) {
  std::vector<SweepRecord> out;
  for (int n : ns) {
    const double dn = n;
    SweepRecord r;
    r.big_n = n;
    r.eigenvalues = {(a0 + ah / std::sqrt(dn) + a1 / dn) / dn};
    out.push_back(r);
  }
  return out;
}

FlatSymbol abs_z_squared() { return FlatSymbol::harmonic(1); }

}  // namespace

TEST_CASE("verdict names") {
  CHECK(to_string(Verdict::Pass) == "PASS");
  CHECK(to_string(Verdict::Fail) == "FAIL");
  CHECK(to_string(Verdict::Undecided) == "UNDECIDED");
}

TEST_CASE("sweep: exact bottom for 1 - Z^2, determinism and thread independence") {
  const std::vector<int> ns{8, 16, 32, 64};
  const auto a = sweep(symmetric_double_well(), ns, {.count = 3, .keep_ground = true, .threads = 1});
  const auto b = sweep(symmetric_double_well(), ns, {.count = 3, .keep_ground = true, .threads = 4});
  for (std::size_t i = 0; i < ns.size(); ++i) {
    const double n = ns[i];
    CHECK(std::abs(n * a[i].eigenvalues[0] - 4.0 * n * (n + 1.0) / ((n + 2.0) * (n + 3.0))) < 1e-12);
    CHECK(a[i].eigenvalues == b[i].eigenvalues);
    CHECK((*a[i].ground - *b[i].ground).cwiseAbs().maxCoeff() == 0.0);
  }
  CHECK_THROWS_AS(sweep(symmetric_double_well(), {16, 8}, {}), std::invalid_argument);
  CHECK_THROWS_AS(sweep(symmetric_double_well(), {}, {}), std::invalid_argument);
  CHECK_THROWS_AS(sweep(symmetric_double_well(), {4}, {.count = 6}), std::invalid_argument);
}

TEST_CASE("N lambda_min stays bounded across sweeps") {
  for (const auto& h : {symmetric_double_well(), asymmetric_double_well()}) {
    for (const auto& r : sweep(h, {16, 32, 64, 128}, {})) CHECK(r.big_n * r.eigenvalues[0] < 20.0);
  }
}

TEST_CASE("fit recovers its own model") {
  const auto recs = synthetic({20, 40, 80, 160, 320}, 9.0, -0.3, 2.5);
  const FitResult f = fit_bottom(recs);
  CHECK(std::abs(f.a0 - 9.0) < 1e-10);
  CHECK(std::abs(f.a_half + 0.3) < 1e-10);
  CHECK(std::abs(f.a1 - 2.5) < 1e-10);
  CHECK(f.residual < 1e-10);
  CHECK_THROWS_AS(fit_bottom(synthetic({1, 2, 3}, 1, 0, 0)), std::invalid_argument);
}

TEST_CASE("fit comparison prefers N + 2 for the exact 1 - Z^2 bottom") {
  std::vector<int> ns;
  for (int n = 32; n <= 256; n += 16) ns.push_back(n);
  const auto cmp = compare_fits(sweep(symmetric_double_well(), ns, {}));
  CHECK(std::abs(cmp.in_n.a0 - 4.0) < 0.02 * 4.0);
  CHECK(cmp.in_n_plus_2.offset == 2);
}

TEST_CASE("selection verdict for the asymmetric well") {
  const WellSet wells = find_wells(asymmetric_double_well(), {north_pole(), south_pole()});
  const auto rep = selection_verdict(asymmetric_double_well(), wells, {32, 64, 128}, {});
  CHECK(rep.verdict == Verdict::Pass);
  for (const auto& w : rep.wells) {
    if (w.minimal) CHECK(w.mass.back() > 0.9);
    else {
      CHECK(w.mass.back() < 1e-6);
      CHECK(w.mass[1] < w.mass[0]);
      CHECK(w.mass[2] < w.mass[1]);
    }
  }
}

TEST_CASE("selection with a tunnelling pair is undecided or balanced") {
  const WellSet wells = find_wells(symmetric_double_well(), {north_pole(), south_pole()});
  const auto rep = selection_verdict(symmetric_double_well(), wells, {32, 64}, {});
  CHECK(rep.verdict != Verdict::Fail);
}

TEST_CASE("gap verdict on synthetic and sphere data") {
  std::vector<SweepRecord> recs(2);
  recs[0].big_n = 10;
  recs[0].eigenvalues = {0.1, 0.9};
  recs[1].big_n = 20;
  recs[1].eigenvalues = {0.05, 0.45};
  CHECK(gap_verdict(recs, 8.0).verdict == Verdict::Pass);
  CHECK(gap_verdict(recs, 4.0).verdict == Verdict::Fail);
  CHECK_THROWS_AS(gap_verdict(recs, 8.0, 2), std::invalid_argument);

  const auto s = sweep(asymmetric_double_well(), {64, 128, 256}, {.count = 2});
  const auto g = gap_verdict(s, 8.0);
  CHECK(g.verdict == Verdict::Pass);
  CHECK(std::abs(g.scaled_gap.back() / 8.0 - 1.0) < 0.15);

  // symmetric well: tunnelling pair at 4, next pair at 8
  const auto sym = sweep(symmetric_double_well(), {64, 128, 256}, {.count = 3});
  CHECK(gap_verdict(sym, 4.0, 2).verdict == Verdict::Pass);
}

TEST_CASE("theorem B matching is order independent and counts the window") {
  const std::vector<double> eigs{4.01, 3.98, 8.1, 7.95, 11.9, 12.2};
  const std::vector<double> model{4, 4, 8, 8, 12, 12, 16};
  const auto a = theorem_b_match(eigs, model, 14.0, 14.7, 0.05);
  std::vector<double> e2 = eigs, m2 = model;
  std::reverse(e2.begin(), e2.end());
  std::shuffle(m2.begin(), m2.end(), std::mt19937(3));
  const auto b = theorem_b_match(e2, m2, 14.0, 14.7, 0.05);
  CHECK(a.verdict == Verdict::Pass);
  CHECK(b.verdict == a.verdict);
  REQUIRE(a.matches.size() == b.matches.size());
  for (std::size_t i = 0; i < a.matches.size(); ++i) {
    CHECK(a.matches[i].eigenvalue == b.matches[i].eigenvalue);
    CHECK(a.matches[i].model == b.matches[i].model);
  }
  // a missing eigenvalue fails
  CHECK(theorem_b_match({4.0, 8.0}, {4, 4, 8}, 10.0, 10.5, 0.05).verdict == Verdict::Fail);
  // an eigenvalue far from every model value fails
  CHECK(theorem_b_match({4.0, 6.0}, {4}, 10.0, 10.5, 0.05).verdict == Verdict::Fail);
}

TEST_CASE("theorem B on the sphere examples") {
  const auto sym = find_wells(symmetric_double_well(), {north_pole(), south_pole()});
  const auto r = theorem_b_verdict(symmetric_double_well(), sym, 14.0, 256);
  CHECK(r.verdict == Verdict::Pass);
  CHECK(r.scaled_eigenvalues.size() == 6);
  const auto asym = find_wells(asymmetric_double_well(), {north_pole(), south_pole()});
  CHECK(theorem_b_verdict(asymmetric_double_well(), asym, 20.0, 256).verdict == Verdict::Pass);
}

TEST_CASE("concentration profile") {
  const Well w = well_hessian(asymmetric_double_well(), north_pole());
  const auto recs = sweep(asymmetric_double_well(), {64, 128}, {.count = 1, .keep_ground = true});
  const auto p64 = concentration_profile(*recs[0].ground, w, 64, {0.0, 0.35});
  const auto p128 = concentration_profile(*recs[1].ground, w, 128, {0.0, 0.35});
  CHECK(p128[0].outside_mass < p64[0].outside_mass);
  CHECK(p128[1].outside_mass < p64[1].outside_mass);
  CHECK(p64[0].radius == doctest::Approx(1.0));
  CHECK_THROWS_AS(concentration_profile(*recs[0].ground, w, 64, {0.6}), std::invalid_argument);
}

TEST_CASE("perturbation crosscheck passes for quartic and cubic corrections") {
  FlatSymbol r4(1);
  r4.add_term({2}, {2}, 0.1);
  const auto q4 = perturbation_crosscheck(abs_z_squared(), FlatSymbol(1), r4, {16, 32, 64, 128}, 40);
  CHECK(q4.verdict == Verdict::Pass);
  for (const auto& row : q4.rows) CHECK(std::abs(row.residual) < 1e-10);

  FlatSymbol r3(1);
  r3.add_real_pair({3}, {0}, 0.1);
  const auto q3 = perturbation_crosscheck(abs_z_squared(), r3, FlatSymbol(1), {32, 64, 128, 256}, 60);
  CHECK(q3.verdict == Verdict::Pass);
  CHECK(std::abs(q3.rows.back().lambda2_estimate / -0.02 - 1.0) < 0.01);

  const auto none = perturbation_crosscheck(abs_z_squared(), FlatSymbol(1), FlatSymbol(1), {8, 16}, 20);
  for (const auto& row : none.rows) CHECK(row.scaled_bottom == doctest::Approx(1.0));
}
