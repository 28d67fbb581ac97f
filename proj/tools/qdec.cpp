/*******************************************************************************
 * Copyright (c) 2026 The qdec Authors.                                        *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/

#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "qdec/avgham.hpp"
#include "qdec/codes.hpp"
#include "qdec/io.hpp"
#include "qdec/oa.hpp"
#include "qdec/phasemat.hpp"

using namespace qdec;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

std::string join(const std::vector<int> &v, int offset = 0) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i)
    os << (i ? "," : "") << v[i] + offset;
  return os.str();
}

std::string complex_str(std::complex<double> z) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g%+.6gi", z.real(), z.imag());
  return buf;
}

std::string oa_params(const oa::OrthogonalArray &a) {
  std::ostringstream os;
  os << "OA(" << a.runs() << ',' << a.rows() << ',' << a.levels() << ','
     << a.strength() << ')';
  return os.str();
}

// "k,l" with 1-based indices; returns 0-based.
std::pair<int, int> parse_pair(const std::string &text, int rows) {
  int k = 0, l = 0;
  char comma = 0;
  std::istringstream in(text);
  std::string rest;
  if (!(in >> k >> comma >> l) || comma != ',' || (in >> rest))
    throw UsageError("--select expects k,l");
  if (k < 1 || l < 1 || k > rows || l > rows || k == l)
    throw UsageError("--select needs two distinct rows in 1.." +
                     std::to_string(rows));
  return {k - 1, l - 1};
}

groups::AbelianGroup group_or_default(const std::string &spec, int s) {
  if (spec.empty())
    return groups::AbelianGroup({s});
  auto g = groups::AbelianGroup::parse(spec);
  if (g.size() != s)
    throw UsageError("group " + g.to_string() + " has order " +
                     std::to_string(g.size()) + ", alphabet has " +
                     std::to_string(s) + " symbols");
  return g;
}

std::string decoupling_witness(const phasemat::DecouplingWitness &w) {
  std::ostringstream os;
  if (w.l < 0)
    os << "row " << w.k + 1 << " element " << w.h;
  else
    os << "rows (" << w.k + 1 << ',' << w.l + 1 << ") elements (" << w.h << ','
       << w.h2 << ')';
  os << " sum " << complex_str(w.sum);
  return os.str();
}

struct GenOa {
  int q = 0;
  int m = 0;
  bool dual = false;
  std::string out;

  int run() const {
    auto code = codes::hamming_code(q, m);
    if (dual)
      code = codes::dual_code(code);
    const auto a = oa::oa_from_code(code);
    io::write_file(out, io::write_oa(a));
    std::cout << oa_params(a) << " lambda=" << a.index() << '\n';
    return kPass;
  }
};

struct VerifyOa {
  std::string in;
  int t = 0;
  std::string method = "counting";
  std::string group;

  int run() const {
    const auto a = io::read_oa(io::read_file(in));
    if (method == "counting") {
      const auto r = oa::verify_strength_counting(a, t);
      if (r.ok) {
        std::cout << "ok t=" << t << " lambda=" << r.lambda << '\n';
        return kPass;
      }
      std::cout << "fail t=" << t;
      if (r.witness)
        std::cout << " rows (" << join(r.witness->rows, 1) << ") tuple ("
                  << join(r.witness->tuple) << ") count " << r.witness->count;
      std::cout << '\n';
      return kFail;
    }
    const auto g = group_or_default(group, a.levels());
    const auto r = oa::verify_strength_characters(a, g, t);
    if (r.ok) {
      long long st = 1;
      for (int i = 0; i < t; ++i)
        st *= a.levels();
      std::cout << "ok t=" << t << " lambda=" << a.runs() / st << '\n';
      return kPass;
    }
    std::cout << "fail t=" << t;
    if (r.witness)
      std::cout << " character (" << join(r.witness->v) << ") sum "
                << complex_str(r.witness->sum);
    std::cout << '\n';
    return kFail;
  }
};

struct GenScheme {
  std::string in;
  std::string signs;
  std::string basis = "pauli";
  std::string select;
  std::string out;

  int run() const {
    const auto b = errbasis::basis_from_name(basis);
    std::optional<avgham::PulseSchedule> s;
    if (!signs.empty()) {
      if (!select.empty())
        throw UsageError("--select needs an OA input");
      if (b.group().to_string() != "Z2xZ2")
        throw UsageError("sign triples need the pauli basis");
      const auto triple = io::read_sign_triple(io::read_file(signs));
      try {
        s = avgham::schedule_from_family(phasemat::import_sign_triple(triple), b);
      } catch (const phasemat::SchurError &e) {
        std::cout << "fail Schur closure at row " << e.row + 1 << " column "
                  << e.col + 1 << '\n';
        return kFail;
      }
    } else {
      const auto a = io::read_oa(io::read_file(in));
      if (a.levels() != b.size())
        throw UsageError("alphabet size " + std::to_string(a.levels()) +
                         " != basis size " + std::to_string(b.size()));
      if (select.empty()) {
        s = avgham::schedule_from_oa(a, b);
      } else {
        const auto [k, l] = parse_pair(select, a.rows());
        s = avgham::selective_coupling_schedule(a, b, k, l);
      }
    }
    io::write_file(out, io::write_schedule(*s));
    std::cout << "schedule n=" << s->nodes() << " d=" << s->dimension()
              << " slots=" << s->size() << " basis=" << b.name() << '\n';
    return kPass;
  }
};

struct VerifyDecoupling {
  std::string in;
  int t = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  double tol = 1e-10;
  std::string select;
  std::string out;

  int run() const {
    const auto s = io::read_schedule(io::read_file(in));
    avgham::DecouplingReport r;
    if (select.empty()) {
      r = avgham::verify_decoupling(s, t, trials, seed, tol);
    } else {
      const auto [k, l] = parse_pair(select, s.nodes());
      r = avgham::verify_selective_decoupling(s, k, l, t, trials, seed, tol);
    }
    if (!out.empty())
      io::write_file(out, io::write_report(r));
    std::cout << (r.pass ? "pass" : "fail") << " t=" << t
              << " trials=" << trials << " seed=" << seed
              << " max_residual=" << sci(r.max_residual)
              << " terms=" << r.exhaustive.terms_checked
              << " term_residual=" << sci(r.exhaustive.max_residual) << '\n';
    if (r.exhaustive.witness)
      std::cout << "witness " << avgham::to_string(*r.exhaustive.witness)
                << " residual " << sci(r.exhaustive.witness_residual) << '\n';
    return r.pass ? kPass : kFail;
  }
};

struct Convert {
  bool to_phases = false;
  bool to_oa = false;
  bool signs = false;
  std::string group;
  std::string in;
  std::string out;

  int run() const {
    if (to_phases == to_oa)
      throw UsageError("pick exactly one of --oa-to-phases, --phases-to-oa");
    return to_phases ? oa_to_phases() : phases_to_oa();
  }

  int oa_to_phases() const {
    const auto a = io::read_oa(io::read_file(in));
    const auto g = signs ? group_or_default("Z2xZ2", a.levels())
                         : group_or_default(group, a.levels());
    if (signs && !group.empty() && groups::AbelianGroup::parse(group) != g)
      throw UsageError("--signs implies Z2xZ2");
    const auto f = phasemat::family_from_oa(a, g);
    if (signs)
      io::write_file(out, io::write_sign_triple(phasemat::export_sign_triple(f)));
    else
      io::write_file(out, io::write_family(f, io::OaClaim{a.strength(), a.index()}));
    std::cout << "phases group=" << g.to_string() << " n=" << f.rows()
              << " N=" << f.runs() << '\n';
    return kPass;
  }

  int phases_to_oa() const {
    std::optional<phasemat::PhaseMatrixFamily> f;
    std::optional<io::OaClaim> claim;
    if (signs) {
      try {
        f = phasemat::import_sign_triple(
            io::read_sign_triple(io::read_file(in)));
      } catch (const phasemat::SchurError &e) {
        std::cout << "fail Schur closure at row " << e.row + 1 << " column "
                  << e.col + 1 << '\n';
        return kFail;
      }
    } else {
      auto file = io::read_family(io::read_file(in));
      f = std::move(file.family);
      claim = file.oa;
    }
    if (!group.empty() && groups::AbelianGroup::parse(group) != f->group())
      throw UsageError("--group differs from the family's group " +
                       f->group().to_string());
    const auto check = phasemat::check_decoupling_conditions(*f);
    if (!check.ok) {
      std::cout << "fail decoupling conditions";
      if (check.witness)
        std::cout << ": " << decoupling_witness(*check.witness);
      std::cout << '\n';
      return kFail;
    }
    auto a = phasemat::oa_from_family(*f);
    if (claim && claim->t != a.strength()) {
      const auto r = oa::verify_strength_counting(a, claim->t);
      if (!r.ok || r.lambda != claim->lambda) {
        std::cout << "fail recorded strength " << claim->t << " does not hold\n";
        return kFail;
      }
      a = a.with_strength(claim->t);
    }
    io::write_file(out, io::write_oa(a));
    std::cout << oa_params(a) << " lambda=" << a.index() << '\n';
    return kPass;
  }
};

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Decoupling schemes from orthogonal arrays"};
  app.require_subcommand(1);

  GenOa gen_oa;
  auto *c_gen = app.add_subcommand("gen-oa", "OA from a (dual) Hamming code");
  c_gen->add_option("--q", gen_oa.q, "Field order")->required();
  c_gen->add_option("--m", gen_oa.m, "Redundancy of the Hamming code")->required();
  c_gen->add_flag("--dual", gen_oa.dual, "Use the dual Hamming code");
  c_gen->add_option("-o,--output", gen_oa.out, "OA text file")->required();

  VerifyOa verify_oa;
  auto *c_vo = app.add_subcommand("verify-oa", "Check the strength of an OA");
  c_vo->add_option("-i,--input", verify_oa.in, "OA text file")->required();
  c_vo->add_option("--t", verify_oa.t, "Strength")->required()->check(
      CLI::NonNegativeNumber);
  c_vo->add_option("--method", verify_oa.method)
      ->check(CLI::IsMember({"counting", "characters"}));
  c_vo->add_option("--group", verify_oa.group, "Abelian group, e.g. Z2xZ2");

  GenScheme gen_scheme;
  auto *c_gs = app.add_subcommand("gen-scheme", "Pulse schedule from an OA");
  auto *gs_in = c_gs->add_option("-i,--input", gen_scheme.in, "OA text file");
  auto *gs_signs =
      c_gs->add_option("--signs", gen_scheme.signs, "Sign triple text file");
  gs_in->excludes(gs_signs);
  c_gs->add_option("--basis", gen_scheme.basis, "pauli or gen:<d>");
  c_gs->add_option("--select", gen_scheme.select, "Rows k,l to keep coupled");
  c_gs->add_option("-o,--output", gen_scheme.out, "Schedule JSON")->required();

  VerifyDecoupling verify_dec;
  auto *c_vd = app.add_subcommand("verify-decoupling",
                                  "Check that a schedule decouples t-local terms");
  c_vd->add_option("-i,--input", verify_dec.in, "Schedule JSON")->required();
  c_vd->add_option("--t", verify_dec.t, "Locality")->required()->check(
      CLI::PositiveNumber);
  c_vd->add_option("--trials", verify_dec.trials, "Random Hamiltonians")
      ->required()
      ->check(CLI::NonNegativeNumber);
  c_vd->add_option("--seed", verify_dec.seed, "RNG seed")->required();
  c_vd->add_option("--tol", verify_dec.tol, "Relative residual tolerance");
  c_vd->add_option("--select", verify_dec.select, "Rows k,l kept coupled");
  c_vd->add_option("-o,--output", verify_dec.out, "Report JSON");

  Convert convert;
  auto *c_cv = app.add_subcommand("convert", "OA <-> phase-matrix family");
  c_cv->add_flag("--oa-to-phases", convert.to_phases);
  c_cv->add_flag("--phases-to-oa", convert.to_oa);
  c_cv->add_option("--group", convert.group, "Abelian group, e.g. Z2xZ2");
  c_cv->add_flag("--signs", convert.signs, "Phase side is a sign triple");
  c_cv->add_option("-i,--input", convert.in)->required();
  c_cv->add_option("-o,--output", convert.out)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (c_gen->parsed())
      return gen_oa.run();
    if (c_vo->parsed())
      return verify_oa.run();
    if (c_gs->parsed()) {
      if (gen_scheme.in.empty() == gen_scheme.signs.empty())
        throw UsageError("gen-scheme needs -i or --signs");
      return gen_scheme.run();
    }
    if (c_vd->parsed())
      return verify_dec.run();
    return convert.run();
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}
