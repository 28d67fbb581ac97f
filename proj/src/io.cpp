/*******************************************************************************
 * Copyright (c) 2026 The qdec Authors.                                        *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/

#include "qdec/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace qdec::io {

using nlohmann::json;

namespace {

json parse_json(const std::string &text) {
  try {
    return json::parse(text);
  } catch (const json::exception &e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

// Runs `f`, turning JSON access errors and constructor rejections into
// ParseError so callers see a single failure type for bad files.
template <class F> auto guarded(F &&f) -> decltype(f()) {
  try {
    return f();
  } catch (const ParseError &) {
    throw;
  } catch (const json::exception &e) {
    throw ParseError(std::string("bad field: ") + e.what());
  } catch (const std::logic_error &e) {
    throw ParseError(e.what());
  } catch (const std::overflow_error &e) {
    throw ParseError(e.what());
  }
}

json rational_json(const avgham::Rational &r) { return {r.num(), r.den()}; }

avgham::Rational rational_from(const json &j) {
  if (!j.is_array() || j.size() != 2)
    throw ParseError("rational must be [num, den]");
  const auto den = j[1].get<std::int64_t>();
  if (den == 0)
    throw ParseError("zero denominator");
  return avgham::Rational(j[0].get<std::int64_t>(), den);
}

std::string dump(const json &j) { return j.dump(2) + "\n"; }

} // namespace

std::string write_oa(const oa::OrthogonalArray &a) {
  std::ostringstream os;
  os << "OA " << a.runs() << ' ' << a.rows() << ' ' << a.levels() << ' '
     << a.strength() << ' ' << a.index() << '\n';
  for (int k = 0; k < a.rows(); ++k) {
    for (int j = 0; j < a.runs(); ++j)
      os << (j ? " " : "") << a.at(k, j);
    os << '\n';
  }
  return os.str();
}

oa::OrthogonalArray read_oa(const std::string &text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      if (line.find_first_not_of(" \t\r") != std::string::npos)
        return true;
    }
    return false;
  };
  if (!next_line())
    throw ParseError("empty OA file");
  std::istringstream head(line);
  std::string tag;
  long long runs, rows, levels, t, lambda;
  if (!(head >> tag >> runs >> rows >> levels >> t >> lambda) || tag != "OA")
    throw ParseError("expected header 'OA N n s t lambda'", lineno);
  std::string rest;
  if (head >> rest)
    throw ParseError("trailing tokens in header", lineno);
  if (runs < 1 || rows < 1 || levels < 2 || t < 0 || runs > (1 << 24) ||
      rows > 4096 || levels > 4096 || runs * rows > (1LL << 26))
    throw ParseError("OA parameters out of range", lineno);
  std::vector<int> entries;
  entries.reserve(static_cast<std::size_t>(runs * rows));
  for (long long k = 0; k < rows; ++k) {
    if (!next_line())
      throw ParseError("expected " + std::to_string(rows) + " rows, got " +
                       std::to_string(k));
    std::istringstream row(line);
    long long v;
    long long count = 0;
    while (row >> v) {
      if (v < 0 || v >= levels)
        throw ParseError("symbol " + std::to_string(v) + " outside 0.." +
                             std::to_string(levels - 1),
                         lineno);
      entries.push_back(static_cast<int>(v));
      ++count;
    }
    if (!row.eof())
      throw ParseError("non-integer token", lineno);
    if (count != runs)
      throw ParseError("row has " + std::to_string(count) + " entries, expected " +
                           std::to_string(runs),
                       lineno);
  }
  if (next_line())
    throw ParseError("unexpected content after the last row", lineno);
  auto a = guarded([&] {
    return oa::OrthogonalArray(static_cast<int>(rows), static_cast<int>(runs),
                               static_cast<int>(levels), std::move(entries),
                               static_cast<int>(t));
  });
  if (a.index() != lambda)
    throw ParseError("header lambda " + std::to_string(lambda) +
                     " does not equal N/s^t = " + std::to_string(a.index()));
  return a;
}

std::string write_code(const codes::LinearCode &c) {
  const auto &f = c.field();
  json j;
  j["field"] = {{"p", f.characteristic()},
                {"m", f.degree()},
                {"modulus", f.modulus()},
                {"name", f.name()}};
  j["n"] = c.length();
  j["k"] = c.dimension();
  j["generator"] = c.generator();
  return dump(j);
}

codes::LinearCode read_code(const std::string &text) {
  const json j = parse_json(text);
  return guarded([&] {
    const auto &fj = j.at("field");
    auto field = gf::Field::create(fj.at("p").get<int>(), fj.at("m").get<int>());
    if (fj.contains("modulus") &&
        fj.at("modulus").get<std::vector<int>>() != field.modulus())
      throw ParseError("field modulus differs from the fixed table");
    auto gen = j.at("generator").get<codes::SymbolMatrix>();
    if (static_cast<int>(gen.size()) != j.at("k").get<int>())
      throw ParseError("generator row count != k");
    return codes::LinearCode(field, j.at("n").get<int>(), std::move(gen));
  });
}

std::string write_family(const phasemat::PhaseMatrixFamily &f,
                         const std::optional<OaClaim> &claim) {
  json j;
  j["group"] = f.group().to_string();
  j["n"] = f.rows();
  j["N"] = f.runs();
  json ex = json::object();
  for (int h = 0; h < f.group().size(); ++h) {
    json rows = json::array();
    for (int k = 0; k < f.rows(); ++k) {
      json row = json::array();
      for (int c = 0; c < f.runs(); ++c)
        row.push_back(f.exponent(h, k, c));
      rows.push_back(std::move(row));
    }
    ex[std::to_string(h)] = std::move(rows);
  }
  j["exponents"] = std::move(ex);
  if (claim)
    j["oa"] = {{"t", claim->t}, {"lambda", claim->lambda}};
  return dump(j);
}

FamilyFile read_family(const std::string &text) {
  const json j = parse_json(text);
  return guarded([&] {
    auto group = groups::AbelianGroup::parse(j.at("group").get<std::string>());
    const int n = j.at("n").get<int>();
    const int runs = j.at("N").get<int>();
    if (n < 1 || runs < 1)
      throw ParseError("n and N must be positive");
    const auto &ex = j.at("exponents");
    if (!ex.is_object() || static_cast<int>(ex.size()) != group.size())
      throw ParseError("exponents must hold one matrix per group element");
    std::vector<std::vector<int>> mats(group.size());
    for (int h = 0; h < group.size(); ++h) {
      const auto key = std::to_string(h);
      if (!ex.contains(key))
        throw ParseError("missing exponent matrix for element " + key);
      auto rows = ex.at(key).get<std::vector<std::vector<int>>>();
      if (static_cast<int>(rows.size()) != n)
        throw ParseError("matrix " + key + " has wrong row count");
      for (const auto &row : rows) {
        if (static_cast<int>(row.size()) != runs)
          throw ParseError("matrix " + key + " has wrong column count");
        mats[h].insert(mats[h].end(), row.begin(), row.end());
      }
    }
    FamilyFile out{phasemat::PhaseMatrixFamily(group, n, runs, std::move(mats)),
                   std::nullopt};
    if (j.contains("oa")) {
      const auto &c = j.at("oa");
      out.oa = OaClaim{c.at("t").get<int>(), c.at("lambda").get<long long>()};
    }
    return out;
  });
}

phasemat::SignMatrixTriple read_sign_triple(const std::string &text) {
  std::vector<phasemat::SignMatrix> blocks;
  phasemat::SignMatrix cur;
  auto flush = [&] {
    if (cur.rows > 0)
      blocks.push_back(std::move(cur));
    cur = {};
  };
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) {
      flush();
      continue;
    }
    if (line[first] == '#')
      continue;
    std::vector<int> row;
    std::istringstream tokens(line);
    std::string tok;
    while (tokens >> tok) {
      if (tok == "1" || tok == "+1") {
        row.push_back(1);
      } else if (tok == "-1") {
        row.push_back(-1);
      } else if (tok.find_first_not_of("+-") == std::string::npos) {
        for (char c : tok)
          row.push_back(c == '+' ? 1 : -1);
      } else {
        throw ParseError("unexpected token '" + tok + "'", lineno);
      }
    }
    if (cur.rows == 0)
      cur.cols = static_cast<int>(row.size());
    else if (static_cast<int>(row.size()) != cur.cols)
      throw ParseError("ragged sign matrix", lineno);
    cur.entries.insert(cur.entries.end(), row.begin(), row.end());
    ++cur.rows;
  }
  flush();
  if (blocks.size() != 3)
    throw ParseError("expected 3 sign matrices, found " +
                     std::to_string(blocks.size()));
  for (const auto &b : blocks)
    if (b.rows != blocks[0].rows || b.cols != blocks[0].cols)
      throw ParseError("sign matrices differ in shape");
  return {std::move(blocks[0]), std::move(blocks[1]), std::move(blocks[2])};
}

std::string write_sign_triple(const phasemat::SignMatrixTriple &t) {
  std::ostringstream os;
  const std::pair<const char *, const phasemat::SignMatrix *> parts[] = {
      {"Sx", &t.x}, {"Sy", &t.y}, {"Sz", &t.z}};
  bool first = true;
  for (const auto &[label, m] : parts) {
    if (!first)
      os << '\n';
    first = false;
    os << "# " << label << '\n';
    for (int k = 0; k < m->rows; ++k) {
      for (int j = 0; j < m->cols; ++j)
        os << (m->at(k, j) > 0 ? '+' : '-');
      os << '\n';
    }
  }
  return os.str();
}

std::string write_schedule(const avgham::PulseSchedule &s) {
  json j;
  j["n"] = s.nodes();
  j["d"] = s.dimension();
  j["basis"] = s.basis().name();
  json slots = json::array();
  for (const auto &slot : s.slots())
    slots.push_back(
        {{"dur",
          {{"a", rational_json(slot.duration.rational_part())},
           {"b", rational_json(slot.duration.sqrt2_part())}}},
         {"assign", slot.assignment}});
  j["slots"] = std::move(slots);
  return dump(j);
}

avgham::PulseSchedule read_schedule(const std::string &text) {
  const json j = parse_json(text);
  return guarded([&] {
    auto basis = errbasis::basis_from_name(j.at("basis").get<std::string>());
    if (j.at("d").get<int>() != basis.dimension())
      throw ParseError("d does not match the basis dimension");
    std::vector<avgham::Slot> slots;
    for (const auto &sj : j.at("slots")) {
      const auto &dur = sj.at("dur");
      avgham::Duration len(rational_from(dur.at("a")),
                           dur.contains("b") ? rational_from(dur.at("b"))
                                             : avgham::Rational());
      slots.push_back({len, sj.at("assign").get<std::vector<int>>()});
    }
    return avgham::PulseSchedule(std::move(basis), j.at("n").get<int>(),
                                 std::move(slots));
  });
}

std::string write_report(const avgham::DecouplingReport &r) {
  json j;
  j["pass"] = r.pass;
  j["t"] = r.t;
  j["trials"] = r.trials;
  j["seed"] = r.seed;
  j["tol"] = r.tol;
  j["max_residual"] = r.max_residual;
  j["residuals"] = r.residuals;
  json ex = {{"pass", r.exhaustive.pass},
             {"terms_checked", r.exhaustive.terms_checked},
             {"max_residual", r.exhaustive.max_residual}};
  if (r.exhaustive.witness) {
    ex["witness"] = {{"nodes", r.exhaustive.witness->nodes},
                     {"elements", r.exhaustive.witness->elements},
                     {"residual", r.exhaustive.witness_residual}};
  }
  j["exhaustive"] = std::move(ex);
  return dump(j);
}

std::string read_file(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw ParseError("cannot open " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::filesystem::path &path, const std::string &text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text))
    throw std::runtime_error("cannot write " + path.string());
}

} // namespace qdec::io
