/*******************************************************************************
 * Copyright (c) 2026 The qdec Authors.                                        *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/

// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails or exceeds its time budget.

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

#include "qdec/avgham.hpp"
#include "qdec/codes.hpp"
#include "qdec/errbasis.hpp"
#include "qdec/groups.hpp"
#include "qdec/io.hpp"
#include "qdec/oa.hpp"
#include "qdec/phasemat.hpp"
#include "support.hpp"

using namespace qdec;
using avgham::Duration;
using avgham::Rational;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string &what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", x);
  return buf;
}

oa::OrthogonalArray relabel(const oa::OrthogonalArray &a, std::mt19937 &rng) {
  std::vector<int> cols(a.runs()), rows(a.rows()), sym(a.levels());
  std::iota(cols.begin(), cols.end(), 0);
  std::iota(rows.begin(), rows.end(), 0);
  std::iota(sym.begin(), sym.end(), 0);
  std::shuffle(cols.begin(), cols.end(), rng);
  std::shuffle(rows.begin(), rows.end(), rng);
  std::vector<int> e;
  for (int k : rows) {
    std::shuffle(sym.begin(), sym.end(), rng);
    for (int j : cols)
      e.push_back(sym[a.at(k, j)]);
  }
  return oa::OrthogonalArray(a.rows(), a.runs(), a.levels(), std::move(e), 2);
}

Outcome hamming_pipeline() {
  Outcome o;
  const auto dir = std::filesystem::temp_directory_path() /
                   ("qdec_acceptance_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  const auto file = (dir / "oa.txt").string();
  const std::string cmd = std::string(QDEC_CLI_PATH) +
                          " gen-oa --q 4 --m 2 --dual -o " + file + " > " +
                          (dir / "out.txt").string();
  const int status = std::system(cmd.c_str());
  o.require(WIFEXITED(status) && WEXITSTATUS(status) == 0, "gen-oa failed");
  if (!o.ok)
    return o;
  const auto printed = io::read_file(dir / "out.txt");
  const auto a = io::read_oa(io::read_file(file));
  std::filesystem::remove_all(dir);
  o.require(printed == "OA(16,5,4,2) lambda=1\n", "printed " + printed);
  o.require(a.runs() == 16 && a.rows() == 5 && a.levels() == 4 &&
                a.strength() == 2 && a.index() == 1,
            "wrong parameters");
  const auto c = oa::verify_strength_counting(a, 2);
  o.require(c.ok && c.lambda == 1, "counting verifier rejects");
  o.require(oa::verify_strength_characters(a, groups::AbelianGroup({2, 2}), 2).ok,
            "character verifier rejects");
  o.detail = o.ok ? "OA(16,5,4,2) lambda=1, counting and characters ok" : o.detail;
  return o;
}

Outcome imported_artifacts() {
  Outcome o;
  const auto a = test::reference_oa();
  const auto c = oa::verify_strength_counting(a, 2);
  o.require(c.ok && c.lambda == 1, "table fails strength 2");
  o.require(oa::verify_strength_characters(a, groups::AbelianGroup({2, 2}), 2).ok,
            "table fails the character test");
  const auto f5 = phasemat::import_sign_triple(test::sign_triple("signs_5x16.txt"));
  o.require(phasemat::check_decoupling_conditions(f5).ok,
            "5x16 triple violates the orthogonality conditions");
  const auto f7 = phasemat::import_sign_triple(test::sign_triple("signs_7x8.txt"));
  const auto r7 = phasemat::check_decoupling_conditions(f7);
  o.require(!r7.ok && r7.witness && r7.witness->l >= 0,
            "7x8 triple does not fail the cross-row condition");
  if (o.ok) {
    std::ostringstream os;
    os << "table ok lambda=1; 5x16 closed and orthogonal; 7x8 closed, "
       << "cross-row witness rows (" << r7.witness->k + 1 << ","
       << r7.witness->l + 1 << ") elements (" << r7.witness->h << ","
       << r7.witness->h2 << ")";
    o.detail = os.str();
  }
  return o;
}

Outcome equivalence_round_trip() {
  Outcome o;
  const groups::AbelianGroup klein({2, 2});
  const auto tabulated = test::reference_oa();
  o.require(phasemat::oa_from_family(phasemat::family_from_oa(tabulated, klein)) == tabulated,
            "reference array does not round-trip");
  std::mt19937 rng(2718);
  const std::vector<std::pair<oa::OrthogonalArray, groups::AbelianGroup>> bases = {
      {tabulated, klein},
      {tabulated, groups::AbelianGroup({4})},
      {oa::oa_from_code(codes::dual_code(codes::hamming_code(3, 2))),
       groups::AbelianGroup({3})},
      {oa::oa_from_code(codes::dual_code(codes::hamming_code(9, 2))),
       groups::AbelianGroup({3, 3})},
      {oa::oa_from_code(codes::dual_code(codes::hamming_code(2, 3))),
       groups::AbelianGroup({2})}};
  for (int i = 0; i < 20 && o.ok; ++i) {
    const auto &[base, g] = bases[i % bases.size()];
    const auto a = relabel(base, rng);
    const auto f = phasemat::family_from_oa(a, g);
    o.require(phasemat::check_decoupling_conditions(f).ok,
              "relabelled array " + std::to_string(i) + " fails the conditions");
    o.require(phasemat::oa_from_family(f).entries() == a.entries(),
              "relabelled array " + std::to_string(i) + " does not round-trip");
  }
  if (o.ok)
    o.detail = "reference array + 20 relabelled arrays are fixed points";
  return o;
}

Outcome report_decoupling(const avgham::DecouplingReport &r, double tol) {
  Outcome o;
  o.require(r.max_residual <= tol, "max residual " + sci(r.max_residual));
  o.require(r.exhaustive.pass,
            "term certificate fails at " +
                (r.exhaustive.witness ? avgham::to_string(*r.exhaustive.witness)
                                      : std::string("?")));
  o.detail = "trials=" + std::to_string(r.trials) +
             " max residual=" + sci(r.max_residual) +
             " terms=" + std::to_string(r.exhaustive.terms_checked) +
             " term residual=" + sci(r.exhaustive.max_residual);
  return o;
}

Outcome qubit_decoupling() {
  const auto s = avgham::schedule_from_oa(test::reference_oa(), errbasis::pauli_basis());
  return report_decoupling(avgham::verify_decoupling(s, 2, 10, 20260101, 1e-10), 1e-10);
}

Outcome qudit_decoupling() {
  const auto a = oa::oa_from_code(codes::dual_code(codes::hamming_code(9, 2)));
  Outcome o;
  o.require(a.runs() == 81 && a.rows() == 10 && a.levels() == 9 &&
                a.strength() == 2,
            "dual Hamming array is not OA(81,10,9,2)");
  if (!o.ok)
    return o;
  const auto sub = a.select_rows(std::vector{0, 1, 2, 3});
  const auto s = avgham::schedule_from_oa(sub, errbasis::generalized_basis(3));
  return report_decoupling(avgham::verify_decoupling(s, 2, 4, 31337, 1e-9), 1e-9);
}

Outcome strength_three() {
  const auto s = avgham::schedule_from_oa(oa::full_factorial_oa(3, 4),
                                          errbasis::pauli_basis());
  return report_decoupling(avgham::verify_decoupling(s, 3, 10, 333, 1e-10), 1e-10);
}

Outcome nonregular() {
  Outcome o;
  const auto s = avgham::nonregular_schedule();
  const auto [t1, t2, t3, t4] = avgham::nonregular_lengths();
  const Duration quarter = s.total_duration() / Duration(Rational(4));
  for (int k = 0; k < 3; ++k)
    for (const auto &d : avgham::symbol_times(s, k))
      o.require(d == quarter, "symbol time " + d.to_string() + " on node " +
                                  std::to_string(k + 1));
  for (int k = 0; k < 3; ++k)
    for (int l = k + 1; l < 3; ++l)
      for (const auto &d : avgham::pair_times(s, k, l))
        o.require(d == t2, "pair time " + d.to_string());
  o.require(t3 + t4 == t2, "t3 + t4 != t2");
  o.require(!avgham::is_refinable_regular(s), "reported refinable");
  const auto r = avgham::verify_decoupling(s, 2, 10, 4242, 1e-9);
  o.require(r.pass, "residual " + sci(r.max_residual));
  const auto b = errbasis::pauli_basis();
  for (const auto &a :
       {test::reference_oa(), oa::full_factorial_oa(3, 4), oa::full_factorial_oa(2, 4)})
    o.require(avgham::is_refinable_regular(avgham::schedule_from_oa(a, b)),
              "array schedule reported non-refinable");
  if (o.ok)
    o.detail = "balanced exactly (pair weight " + t2.to_string() +
               "), max residual " + sci(r.max_residual) + ", not refinable";
  return o;
}

Outcome converse() {
  Outcome o;
  std::mt19937 rng(53);
  const auto b = errbasis::pauli_basis();
  const auto ff = oa::full_factorial_oa(2, 4);
  int disagreements = 0, arrays = 0;
  const int total = 240;
  for (int i = 0; i < total; ++i) {
    const int runs = std::vector{4, 8, 16}[i % 3];
    std::vector<int> e(2 * runs);
    if (runs == 16 && i % 2 == 0) {
      // A relabelled full factorial, sometimes with one entry disturbed.
      const auto a = relabel(ff, rng);
      e = a.entries();
      if (i % 4 == 0)
        e[rng() % e.size()] = static_cast<int>(rng() % 4);
    } else {
      for (auto &v : e)
        v = static_cast<int>(rng() % 4);
    }
    const oa::OrthogonalArray a(2, runs, 4, e);
    const bool is_oa = oa::verify_strength_counting(a, 2).ok;
    const bool decouples =
        avgham::exhaustive_term_check(avgham::schedule_from_oa(a, b), 2, 1e-10).pass;
    disagreements += is_oa != decouples;
    arrays += is_oa;
  }
  o.require(disagreements == 0, std::to_string(disagreements) + " disagreements");
  o.require(arrays > 0 && arrays < total, "sample lacks both outcomes");
  if (o.ok)
    o.detail = std::to_string(total) + " schedules, " + std::to_string(arrays) +
               " arrays, 0 disagreements";
  return o;
}

Outcome character_tables() {
  Outcome o;
  for (int d : {2, 3, 4, 5}) {
    const auto b = errbasis::generalized_basis(d);
    const auto r = errbasis::verify_character_table(b);
    o.require(r.ok, "d=" + std::to_string(d) + ": " + r.failure);
    if (!r.ok)
      continue;
    const groups::CharacterTable t(b.group());
    double worst = 0;
    for (int g = 0; g < b.size(); ++g)
      for (int h = 0; h < b.size(); ++h)
        worst = std::max(worst, std::abs(errbasis::conjugation_phase(b, g, h) -
                                          t.value(r.automorphism[g], h)));
    o.require(worst <= 1e-9, "d=" + std::to_string(d) + " deviation " + sci(worst));
  }
  const auto chi = errbasis::conjugation_phase_matrix(errbasis::pauli_basis());
  const int idx[4] = {errbasis::kPauliI, errbasis::kPauliX, errbasis::kPauliY,
                      errbasis::kPauliZ};
  const int signs[4][4] = {
      {1, 1, 1, 1}, {1, 1, -1, -1}, {1, -1, 1, -1}, {1, -1, -1, 1}};
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      o.require(chi(idx[r], idx[c]) == std::complex<double>(signs[r][c], 0),
                "Pauli sign table differs");
  if (o.ok)
    o.detail = "d=2..5 match up to automorphism; Pauli sign table exact";
  return o;
}

Outcome uniformity() {
  Outcome o;
  std::mt19937 rng(1009);
  const char *specs[] = {"Z2", "Z3", "Z4", "Z2xZ2", "Z5", "Z6",
                         "Z7", "Z8", "Z2xZ4", "Z2xZ2xZ2", "Z9", "Z3xZ3"};
  int disagreements = 0, uniform = 0;
  for (int i = 0; i < 200; ++i) {
    const auto g = groups::AbelianGroup::parse(specs[i % std::size(specs)]);
    std::uniform_int_distribution<int> w(-4, 4);
    std::vector<std::complex<double>> weights(g.size());
    if (i % 3 == 0) {
      std::fill(weights.begin(), weights.end(), w(rng));
      if (i % 2)
        weights[rng() % g.size()] += static_cast<double>(1 + rng() % 3);
    } else {
      for (auto &x : weights)
        x = w(rng);
    }
    const bool equal = std::all_of(weights.begin(), weights.end(),
                                   [&](auto x) { return x == weights[0]; });
    uniform += equal;
    disagreements += groups::is_uniform_group_ring_element(g, weights).uniform != equal;
  }
  o.require(disagreements == 0, std::to_string(disagreements) + " disagreements");
  if (o.ok)
    o.detail = "200 samples (" + std::to_string(uniform) + " uniform), 0 disagreements";
  return o;
}

Outcome selective() {
  Outcome o;
  const auto b = errbasis::pauli_basis();
  const auto s = avgham::selective_coupling_schedule(test::reference_oa(), b, 0, 1);
  const auto &g = b.group();
  int kept = 0;
  double worst = 0;
  for (const auto &t : avgham::basis_terms(5, 4, 2)) {
    const auto avg = avgham::term_average(s, t);
    const double scale = std::sqrt(double(avg.rows()));
    const bool keep = t.nodes == std::vector<int>{0, 1} &&
                      g.add(t.elements[0], t.elements[1]) == 0;
    const double r =
        (keep ? (avg - avgham::term_operator(b, t)).norm() : avg.norm()) / scale;
    worst = std::max(worst, r);
    kept += keep;
    o.require(r <= 1e-10, avgham::to_string(t) + " residual " + sci(r));
  }
  const auto trials = avgham::verify_selective_decoupling(s, 0, 1, 2, 5, 99, 1e-10);
  o.require(trials.pass, "random trials residual " + sci(trials.max_residual));
  if (o.ok)
    o.detail = std::to_string(kept) + " terms kept on (1,2), 102 removed, worst " +
               sci(std::max(worst, trials.max_residual));
  return o;
}

} // namespace

int main() {
  struct Criterion {
    const char *id;
    const char *name;
    double budget_s;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {"AC1", "Hamming pipeline gen-oa --q 4 --m 2 --dual", 1, hamming_pipeline},
      {"AC2", "imported table and sign triples", 1, imported_artifacts},
      {"AC3", "array <-> phase family round trip", 5, equivalence_round_trip},
      {"AC4", "qubit decoupling, 5 qubits, tol 1e-10", 10, qubit_decoupling},
      {"AC5", "qutrit decoupling, 4 qutrits, tol 1e-9", 60, qudit_decoupling},
      {"AC6", "strength-3 decoupling, 3 qubits, tol 1e-10", 10, strength_three},
      {"AC7", "non-regular 3-qubit schedule", 5, nonregular},
      {"AC8", "decoupling iff strength-2 array, 2 qubits", 60, converse},
      {"AC9", "conjugation phases are character tables", 5, character_tables},
      {"AC10", "uniformity test vs brute force", 5, uniformity},
      {"AC11", "selective coupling on rows (1,2)", 30, selective},
  };
  int failed = 0;
  for (const auto &c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception &e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.budget_s) {
      o.ok = false;
      o.detail += " (over time budget)";
    }
    failed += !o.ok;
    std::printf("%s %-4s %-44s %7.3fs/%gs  %s\n", o.ok ? "PASS" : "FAIL", c.id,
                c.name, secs, c.budget_s, o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", int(std::size(criteria)) - failed,
              std::size(criteria));
  return failed == 0 ? 0 : 1;
}
