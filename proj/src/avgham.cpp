/*******************************************************************************
 * Copyright (c) 2026 The qdec Authors.                                        *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/

#include "qdec/avgham.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

namespace qdec::avgham {

namespace {

int checked_dense_dimension(int d, int n) {
  long long dim = 1;
  for (int i = 0; i < n; ++i) {
    dim *= d;
    if (dim > kMaxDenseDimension)
      throw std::overflow_error("d^n exceeds the dense limit of " +
                                std::to_string(kMaxDenseDimension));
  }
  return static_cast<int>(dim);
}

// Uniform double in [0, 1) from the top 53 bits, independent of the
// standard library's distribution implementations.
double unit_uniform(std::mt19937_64 &rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// U_m^dagger U_h U_m for every (m, h).
std::vector<Matrix> conjugation_table(const errbasis::NiceErrorBasis &b) {
  const int n = b.size();
  std::vector<Matrix> out(static_cast<std::size_t>(n) * n);
  for (int m = 0; m < n; ++m)
    for (int h = 0; h < n; ++h)
      out[m * n + h] = b.unitary(m).adjoint() * b.unitary(h) * b.unitary(m);
  return out;
}

Matrix term_average_with(const PulseSchedule &s, const Term &t,
                         const std::vector<Matrix> &table) {
  const int size = s.basis().size();
  const int d = s.dimension();
  int dim = 1;
  for (std::size_t i = 0; i < t.nodes.size(); ++i)
    dim *= d;
  Matrix acc = Matrix::Zero(dim, dim);
  for (int j = 0; j < s.size(); ++j) {
    const auto &assign = s.slots()[j].assignment;
    Matrix prod = table[assign[t.nodes[0]] * size + t.elements[0]];
    for (std::size_t i = 1; i < t.nodes.size(); ++i)
      prod = kron(prod, table[assign[t.nodes[i]] * size + t.elements[i]]);
    acc += s.weight(j).to_double() * prod;
  }
  return acc;
}

void check_term(const Term &t, int nodes, int basis_size) {
  if (t.nodes.empty() || t.nodes.size() != t.elements.size())
    throw std::invalid_argument("malformed term");
  for (std::size_t i = 0; i < t.nodes.size(); ++i) {
    if (t.nodes[i] < 0 || t.nodes[i] >= nodes ||
        (i > 0 && t.nodes[i] <= t.nodes[i - 1]))
      throw std::invalid_argument("term nodes must be increasing and in range");
    if (t.elements[i] <= 0 || t.elements[i] >= basis_size)
      throw std::invalid_argument("term elements must be nonidentity");
  }
}

} // namespace

std::string to_string(const Term &t) {
  std::ostringstream os;
  for (std::size_t i = 0; i < t.nodes.size(); ++i) {
    if (i)
      os << ' ';
    os << 'U' << t.elements[i] << '@' << t.nodes[i];
  }
  return os.str();
}

std::vector<Term> basis_terms(int nodes, int basis_size, int t) {
  std::vector<Term> out;
  for (int s = 1; s <= std::min(t, nodes); ++s) {
    oa::for_each_subset(nodes, s, [&](std::span<const int> support) {
      std::vector<int> el(s, 1);
      while (true) {
        out.push_back({std::vector<int>(support.begin(), support.end()), el});
        int i = s - 1;
        while (i >= 0 && el[i] == basis_size - 1)
          el[i--] = 1;
        if (i < 0)
          break;
        ++el[i];
      }
      return true;
    });
  }
  return out;
}

Matrix kron(const Matrix &a, const Matrix &b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Matrix embed(const errbasis::NiceErrorBasis &b, int nodes, const Term &t) {
  check_term(t, nodes, b.size());
  const int d = b.dimension();
  Matrix out = Matrix::Identity(1, 1);
  std::size_t next = 0;
  for (int k = 0; k < nodes; ++k) {
    if (next < t.nodes.size() && t.nodes[next] == k)
      out = kron(out, b.unitary(t.elements[next++]));
    else
      out = kron(out, Matrix::Identity(d, d));
  }
  return out;
}

Matrix term_operator(const errbasis::NiceErrorBasis &b, const Term &t) {
  Matrix out = b.unitary(t.elements.at(0));
  for (std::size_t i = 1; i < t.elements.size(); ++i)
    out = kron(out, b.unitary(t.elements[i]));
  return out;
}

Hamiltonian::Hamiltonian(errbasis::NiceErrorBasis basis, int nodes,
                         int locality, std::vector<Coefficient> coefficients)
    : basis_(std::move(basis)), n_(nodes), t_(locality),
      coeffs_(std::move(coefficients)) {
  if (n_ < 1 || t_ < 1)
    throw std::invalid_argument("Hamiltonian needs n, t >= 1");
  for (const auto &c : coeffs_) {
    check_term(c.term, n_, basis_.size());
    if (static_cast<int>(c.term.nodes.size()) > t_)
      throw std::invalid_argument("term acts on more than t nodes");
  }
}

Matrix Hamiltonian::dense() const {
  const int dim = checked_dense_dimension(basis_.dimension(), n_);
  Matrix m = Matrix::Zero(dim, dim);
  for (const auto &c : coeffs_)
    m += c.value * embed(basis_, n_, c.term);
  return (m + m.adjoint()) / 2.0;
}

Hamiltonian random_tlocal_hamiltonian(const errbasis::NiceErrorBasis &b,
                                      int nodes, int t, std::uint64_t seed,
                                      const TermFilter &filter) {
  checked_dense_dimension(b.dimension(), nodes);
  std::mt19937_64 rng(seed);
  std::vector<Coefficient> coeffs;
  for (auto &term : basis_terms(nodes, b.size(), t)) {
    if (filter && !filter(term))
      continue;
    const double re = 2.0 * unit_uniform(rng) - 1.0;
    const double im = 2.0 * unit_uniform(rng) - 1.0;
    coeffs.push_back({std::move(term), {re, im}});
  }
  return Hamiltonian(b, nodes, t, std::move(coeffs));
}

PulseSchedule::PulseSchedule(errbasis::NiceErrorBasis basis, int nodes,
                             std::vector<Slot> slots)
    : basis_(std::move(basis)), n_(nodes), slots_(std::move(slots)) {
  if (n_ < 1)
    throw std::invalid_argument("schedule needs at least one node");
  if (slots_.empty())
    throw std::invalid_argument("schedule needs at least one slot");
  for (const auto &slot : slots_) {
    if (slot.duration.sign() <= 0)
      throw std::invalid_argument("slot durations must be positive");
    if (static_cast<int>(slot.assignment.size()) != n_)
      throw std::invalid_argument("slot assignment length != node count");
    for (int g : slot.assignment)
      if (g < 0 || g >= basis_.size())
        throw std::invalid_argument("slot assigns an element outside the basis");
    total_ = total_ + slot.duration;
  }
}

bool PulseSchedule::operator==(const PulseSchedule &other) const {
  if (basis_.name() != other.basis_.name() || n_ != other.n_ ||
      slots_.size() != other.slots_.size())
    return false;
  for (std::size_t j = 0; j < slots_.size(); ++j)
    if (!(slots_[j].duration == other.slots_[j].duration) ||
        slots_[j].assignment != other.slots_[j].assignment)
      return false;
  return true;
}

Matrix slot_unitary(const PulseSchedule &s, int j) {
  const auto &assign = s.slots().at(j).assignment;
  Matrix v = s.basis().unitary(assign[0]);
  for (int k = 1; k < s.nodes(); ++k)
    v = kron(v, s.basis().unitary(assign[k]));
  return v;
}

Matrix average_hamiltonian(const Matrix &h, const PulseSchedule &s) {
  const int dim = checked_dense_dimension(s.dimension(), s.nodes());
  if (h.rows() != dim || h.cols() != dim)
    throw std::invalid_argument("Hamiltonian dimension does not match schedule");
  Matrix acc = Matrix::Zero(dim, dim);
  for (int j = 0; j < s.size(); ++j) {
    const Matrix v = slot_unitary(s, j);
    acc.noalias() += s.weight(j).to_double() * (v.adjoint() * h * v);
  }
  return acc;
}

Matrix average_hamiltonian(const Hamiltonian &h, const PulseSchedule &s) {
  if (h.nodes() != s.nodes() || h.dimension() != s.dimension())
    throw std::invalid_argument("Hamiltonian and schedule shapes differ");
  return average_hamiltonian(h.dense(), s);
}

PulseSchedule schedule_from_oa(const oa::OrthogonalArray &a,
                               const errbasis::NiceErrorBasis &b) {
  if (a.levels() != b.size())
    throw std::invalid_argument("alphabet size " + std::to_string(a.levels()) +
                                " != basis size " + std::to_string(b.size()));
  std::vector<Slot> slots;
  slots.reserve(a.runs());
  const Duration len{Rational(1, a.runs())};
  for (int j = 0; j < a.runs(); ++j) {
    std::vector<int> assign(a.rows());
    for (int k = 0; k < a.rows(); ++k)
      assign[k] = a.at(k, j);
    slots.push_back({len, std::move(assign)});
  }
  return PulseSchedule(b, a.rows(), std::move(slots));
}

PulseSchedule selective_coupling_schedule(const oa::OrthogonalArray &a,
                                          const errbasis::NiceErrorBasis &b,
                                          int k, int l) {
  if (k == l)
    throw std::invalid_argument("selective coupling needs two distinct nodes");
  if (k < 0 || l < 0 || k >= a.rows() || l >= a.rows())
    throw std::out_of_range("selected node outside the array");
  const auto base = schedule_from_oa(a, b);
  auto slots = base.slots();
  for (auto &slot : slots)
    slot.assignment[l] = slot.assignment[k];
  return PulseSchedule(b, a.rows(), std::move(slots));
}

PulseSchedule schedule_from_family(const phasemat::PhaseMatrixFamily &f,
                                   const errbasis::NiceErrorBasis &b) {
  if (!(f.group() == b.group()))
    throw std::invalid_argument("family group " + f.group().to_string() +
                                " differs from basis group " +
                                b.group().to_string());
  const int size = b.size();
  const int e = b.group().exponent();
  std::map<std::vector<int>, int> lookup;
  for (int g = 0; g < size; ++g) {
    std::vector<int> row(size);
    for (int h = 0; h < size; ++h) {
      const auto chi = errbasis::conjugation_phase(b, g, h);
      const double turns = std::arg(chi) / (2.0 * M_PI) * e;
      const long long r = std::llround(turns);
      if (std::abs(chi - groups::root_of_unity(r, e)) > 1e-9)
        throw std::invalid_argument("conjugation phase is not an e(G)-th root");
      row[h] = static_cast<int>(((r % e) + e) % e);
    }
    lookup.emplace(std::move(row), g);
  }
  std::vector<Slot> slots;
  const Duration len{Rational(1, f.runs())};
  std::vector<int> v(size);
  for (int j = 0; j < f.runs(); ++j) {
    std::vector<int> assign(f.rows());
    for (int k = 0; k < f.rows(); ++k) {
      for (int h = 0; h < size; ++h)
        v[h] = f.exponent(h, k, j);
      auto it = lookup.find(v);
      if (it == lookup.end())
        throw std::invalid_argument("no basis element realises the phases at (" +
                                    std::to_string(k) + "," +
                                    std::to_string(j) + ")");
      assign[k] = it->second;
    }
    slots.push_back({len, std::move(assign)});
  }
  return PulseSchedule(b, f.rows(), std::move(slots));
}

PulseSchedule merge_timelines(const errbasis::NiceErrorBasis &b,
                              const std::vector<std::vector<Segment>> &rows) {
  if (rows.empty())
    throw std::invalid_argument("no timelines to merge");
  std::vector<Duration> totals;
  std::vector<Duration> cuts;
  for (const auto &row : rows) {
    Duration at;
    for (const auto &seg : row) {
      if (seg.length.sign() <= 0)
        throw std::invalid_argument("segment lengths must be positive");
      at = at + seg.length;
      cuts.push_back(at);
    }
    totals.push_back(at);
  }
  for (const auto &t : totals)
    if (!(t == totals.front()))
      throw std::invalid_argument("timelines have different total lengths");
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::vector<std::size_t> pos(rows.size(), 0);
  std::vector<Duration> seg_end(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    seg_end[r] = rows[r].front().length;
  std::vector<Slot> slots;
  Duration start;
  for (const auto &cut : cuts) {
    std::vector<int> assign(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      assign[r] = rows[r][pos[r]].element;
      if (seg_end[r] == cut && pos[r] + 1 < rows[r].size()) {
        ++pos[r];
        seg_end[r] = seg_end[r] + rows[r][pos[r]].length;
      }
    }
    slots.push_back({cut - start, std::move(assign)});
    start = cut;
  }
  return PulseSchedule(b, static_cast<int>(rows.size()), std::move(slots));
}

std::array<Duration, 4> nonregular_lengths() {
  const Duration t1{Rational(1, 4)};
  const Duration t2 = t1 / Duration(Rational(4));
  const Duration t3 = t2 / Duration::sqrt2();
  const Duration t4 = t2 * (Duration::sqrt2() - Duration(Rational(1))) /
                      Duration::sqrt2();
  return {t1, t2, t3, t4};
}

PulseSchedule nonregular_schedule() {
  const auto [t1, t2, t3, t4] = nonregular_lengths();
  // Symbols 1..4 stand for 1, X, Y, Z.
  const int sym[5] = {-1, errbasis::kPauliI, errbasis::kPauliX,
                      errbasis::kPauliY, errbasis::kPauliZ};
  auto seg = [&](int digit, const Duration &len) {
    return Segment{sym[digit], len};
  };
  std::vector<Segment> row1, row2, row3;
  for (int b = 1; b <= 4; ++b)
    row1.push_back(seg(b, t1));
  for (int b = 0; b < 4; ++b)
    for (int d = 1; d <= 4; ++d)
      row2.push_back(seg(d, t2));
  const std::vector<std::vector<Segment>> blocks = {
      {seg(1, t2), seg(2, t2), seg(3, t3), seg(4, t4), seg(3, t4), seg(4, t3)},
      {seg(3, t4), seg(4, t3), seg(1, t2), seg(2, t2), seg(3, t3), seg(4, t4)},
      {seg(3, t3), seg(4, t4), seg(3, t4), seg(4, t3), seg(1, t2), seg(2, t2)},
      {seg(2, t2), seg(3, t3), seg(4, t4), seg(3, t4), seg(4, t3), seg(1, t2)}};
  for (const auto &block : blocks)
    row3.insert(row3.end(), block.begin(), block.end());
  return merge_timelines(errbasis::pauli_basis(), {row1, row2, row3});
}

bool is_refinable_regular(const PulseSchedule &s) {
  const Duration &first = s.slots().front().duration;
  for (const auto &slot : s.slots())
    if (!commensurable(first, slot.duration))
      return false;
  return true;
}

PulseSchedule refine_two_nodes(const PulseSchedule &s) {
  if (s.nodes() < 2)
    throw std::invalid_argument("refinement needs at least two nodes");
  const auto &slots = s.slots();
  for (const auto &slot : slots)
    if (!(slot.duration == slots.front().duration))
      throw std::invalid_argument("refinement needs equal slot lengths");
  const int n = s.size();
  const Duration len =
      s.total_duration() / Duration(Rational(static_cast<std::int64_t>(n) * n));
  std::vector<Slot> out;
  out.reserve(static_cast<std::size_t>(n) * n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      auto assign = slots[j].assignment;
      assign[1] = slots[i].assignment[1];
      out.push_back({len, std::move(assign)});
    }
  return PulseSchedule(s.basis(), s.nodes(), std::move(out));
}

std::vector<Duration> symbol_times(const PulseSchedule &s, int node) {
  if (node < 0 || node >= s.nodes())
    throw std::out_of_range("node out of range");
  std::vector<Duration> out(s.basis().size());
  for (const auto &slot : s.slots())
    out[slot.assignment[node]] = out[slot.assignment[node]] + slot.duration;
  return out;
}

std::vector<Duration> pair_times(const PulseSchedule &s, int k, int l) {
  if (k < 0 || l < 0 || k >= s.nodes() || l >= s.nodes())
    throw std::out_of_range("node out of range");
  const int size = s.basis().size();
  std::vector<Duration> out(static_cast<std::size_t>(size) * size);
  for (const auto &slot : s.slots()) {
    auto &cell = out[slot.assignment[k] * size + slot.assignment[l]];
    cell = cell + slot.duration;
  }
  return out;
}

Matrix term_average(const PulseSchedule &s, const Term &t) {
  check_term(t, s.nodes(), s.basis().size());
  return term_average_with(s, t, conjugation_table(s.basis()));
}

ExhaustiveReport exhaustive_term_check(const PulseSchedule &s, int t,
                                       double tol, const TermFilter &filter) {
  const auto table = conjugation_table(s.basis());
  ExhaustiveReport out;
  for (const auto &term : basis_terms(s.nodes(), s.basis().size(), t)) {
    if (filter && !filter(term))
      continue;
    const Matrix avg = term_average_with(s, term, table);
    const double residual = avg.norm() / std::sqrt(double(avg.rows()));
    ++out.terms_checked;
    out.max_residual = std::max(out.max_residual, residual);
    if (residual > tol && !out.witness) {
      out.witness = term;
      out.witness_residual = residual;
    }
  }
  out.pass = !out.witness;
  return out;
}

namespace {

void check_pair(const PulseSchedule &s, int k, int l) {
  if (k == l || k < 0 || l < 0 || k >= s.nodes() || l >= s.nodes())
    throw std::invalid_argument("selective coupling needs two distinct nodes");
}

bool kept_term(const PulseSchedule &s, const std::vector<int> &pair,
               const Term &term) {
  return term.nodes == pair &&
         s.basis().group().add(term.elements[0], term.elements[1]) == 0;
}

// Fills the trial fields of `out`. `expected` maps a random Hamiltonian to
// the operator its average should equal.
void run_trials(const PulseSchedule &s, int t, int trials, std::uint64_t seed,
                const TermFilter &filter,
                const std::function<Matrix(const Hamiltonian &)> &expected,
                DecouplingReport &out) {
  if (t < 1)
    throw std::invalid_argument("locality must be >= 1");
  if (trials < 0)
    throw std::invalid_argument("trial count must be non-negative");
  out.t = t;
  out.trials = trials;
  out.seed = seed;
  if (trials == 0)
    return;
  const int dim = checked_dense_dimension(s.dimension(), s.nodes());
  std::mt19937_64 seeds(seed);
  std::vector<Matrix> hs;
  std::vector<Matrix> targets;
  std::vector<Matrix> acc(trials, Matrix::Zero(dim, dim));
  for (int i = 0; i < trials; ++i) {
    const auto h =
        random_tlocal_hamiltonian(s.basis(), s.nodes(), t, seeds(), filter);
    hs.push_back(h.dense());
    targets.push_back(expected ? expected(h) : Matrix::Zero(dim, dim));
  }
  for (int j = 0; j < s.size(); ++j) {
    const Matrix v = slot_unitary(s, j);
    const double p = s.weight(j).to_double();
    for (int i = 0; i < trials; ++i)
      acc[i].noalias() += p * (v.adjoint() * hs[i] * v);
  }
  for (int i = 0; i < trials; ++i) {
    const double norm = hs[i].norm();
    const double r = norm == 0 ? 0.0 : (acc[i] - targets[i]).norm() / norm;
    out.residuals.push_back(r);
    out.max_residual = std::max(out.max_residual, r);
  }
}

} // namespace

DecouplingReport verify_decoupling(const PulseSchedule &s, int t, int trials,
                                   std::uint64_t seed, double tol,
                                   const TermFilter &filter) {
  DecouplingReport out;
  out.tol = tol;
  run_trials(s, t, trials, seed, filter, {}, out);
  out.exhaustive = exhaustive_term_check(s, t, tol, filter);
  out.pass = out.max_residual <= tol && out.exhaustive.pass;
  return out;
}

DecouplingReport verify_selective_decoupling(const PulseSchedule &s, int k,
                                             int l, int t, int trials,
                                             std::uint64_t seed, double tol) {
  check_pair(s, k, l);
  const std::vector<int> pair = {std::min(k, l), std::max(k, l)};
  DecouplingReport out;
  out.tol = tol;
  auto expected = [&](const Hamiltonian &h) {
    std::vector<Coefficient> kept;
    for (const auto &c : h.coefficients())
      if (kept_term(s, pair, c.term))
        kept.push_back(c);
    return Hamiltonian(h.basis(), h.nodes(), h.locality(), std::move(kept))
        .dense();
  };
  run_trials(s, t, trials, seed, {}, expected, out);
  out.exhaustive = verify_selective_coupling(s, k, l, t, tol);
  out.pass = out.max_residual <= tol && out.exhaustive.pass;
  return out;
}

ExhaustiveReport verify_selective_coupling(const PulseSchedule &s, int k,
                                           int l, int t, double tol) {
  check_pair(s, k, l);
  const std::vector<int> pair = {std::min(k, l), std::max(k, l)};
  const auto table = conjugation_table(s.basis());
  ExhaustiveReport out;
  for (const auto &term : basis_terms(s.nodes(), s.basis().size(), t)) {
    const Matrix avg = term_average_with(s, term, table);
    const bool kept = kept_term(s, pair, term);
    const double scale = std::sqrt(double(avg.rows()));
    const double residual =
        (kept ? (avg - term_operator(s.basis(), term)).norm() : avg.norm()) /
        scale;
    ++out.terms_checked;
    out.max_residual = std::max(out.max_residual, residual);
    if (residual > tol && !out.witness) {
      out.witness = term;
      out.witness_residual = residual;
    }
  }
  out.pass = !out.witness;
  return out;
}

} // namespace qdec::avgham
