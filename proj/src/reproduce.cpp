#include "uebforge/reproduce.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "uebforge/catalog.hpp"
#include "uebforge/hadamard.hpp"
#include "uebforge/matrix.hpp"
#include "uebforge/obstructions.hpp"
#include "uebforge/qls.hpp"
#include "uebforge/rng.hpp"
#include "uebforge/ueb.hpp"

namespace uebforge {

namespace {

constexpr int kTrials = 100;

Matrix conj_by(const Matrix& u, const Matrix& a) {
  return compose(compose(u, a), adjoint(u));
}

Matrix random_monomial(Rng& rng, std::size_t n) {
  return compose(diag(rng.unit_diag(n)),
                 permutation_matrix(Permutation(rng.permutation(n))));
}

// Draws from the one-parameter order-4 family and scrambles it with a random
// equivalence move, so the suites do not only see the literal family shape.
HadamardMatrix random_h4(Rng& rng) {
  HadamardMatrix h = h_alpha(rng.uniform01() * 2.0 * std::numbers::pi);
  HadamardEquivalenceWitness w{rng.unit_diag(4), Permutation(rng.permutation(4)),
                               Permutation(rng.permutation(4)),
                               rng.unit_diag(4)};
  return apply_hadamard_equivalence(h, w);
}

std::vector<Complex> ones_diag(std::size_t n) {
  return std::vector<Complex>(n, Complex(1.0, 0.0));
}

CheckResult check_example_qls(const ReproOptions& o) {
  CheckResult r;
  r.measured = qls_deviation(example_qls().rows());
  r.tolerance = o.eps;
  r.pass = r.measured <= r.tolerance;
  r.detail =
      "largest row/column orthonormality residual of the embedded 4x4 square";
  return r;
}

CheckResult check_qsm_matches_m(const ReproOptions& o) {
  CheckResult r;
  std::vector<HadamardMatrix> hs(4, example_hadamard());
  UnitaryErrorBasis built = qsm(example_qls(), hs, Tolerance{o.eps});
  UnitaryErrorBasis stored = basis_M();
  double dev = 0.0;
  for (std::size_t k = 0; k < 16; ++k)
    dev = std::max(dev, max_abs_diff(built.element(k), stored.element(k)));
  r.measured = dev;
  r.tolerance = 1e-12;
  r.pass = r.measured <= r.tolerance;
  r.detail =
      "max entry deviation of qsm(example_qls, 4 x example_hadamard) from the "
      "16 stored elements";
  return r;
}

CheckResult check_m_is_ueb(const ReproOptions& o) {
  CheckResult r;
  UnitaryErrorBasis m = basis_M();
  r.measured = ueb_deviation(m.elements());
  r.tolerance = o.eps;
  r.pass = r.measured <= r.tolerance;
  r.detail =
      "largest unitarity / trace-orthogonality residual over 16 elements and "
      "120 distinct pairs";
  return r;
}

CheckResult check_commutator(const ReproOptions& o) {
  CheckResult r;
  UnitaryErrorBasis m = basis_M();
  Matrix a = power(m.element(0, 1), 12);
  Matrix b = power(m.element(0, 2), 12);
  Matrix comm = compose(a, b) - compose(b, a);

  const Complex i(0.0, 1.0);
  const double s = 12168.0 / 15625.0;
  Matrix expected = s * Matrix::from_rows({{-i, 0.0, 0.0, 2.0},
                                           {0.0, 0.0, 0.0, 0.0},
                                           {0.0, 0.0, 0.0, 0.0},
                                           {-2.0, 0.0, 0.0, i}});
  r.measured = max_abs_diff(comm, expected);
  r.tolerance = o.eps;

  double frob = frobenius(comm);
  double frob_expected = s * std::sqrt(10.0);
  bool frob_ok = std::abs(frob - frob_expected) <= 1e-6;

  ObstructionReport rep = mu_power_commutator_obstruction(
      m, NonzeroThreshold{o.theta}, Tolerance{o.eps});
  bool verdict_ok = rep.verdict == Verdict::obstructed && rep.witness_pair &&
                    rep.witness_pair->first == 1 && rep.witness_pair->second == 2;

  r.pass = r.measured <= r.tolerance && frob_ok && verdict_ok;
  std::ostringstream d;
  d << "[E01^12, E02^12] vs (12168/15625)*[[-i,0,0,2],...]; Frobenius norm "
    << frob << " (expected " << frob_expected << ", within 1e-6: "
    << (frob_ok ? "yes" : "no") << "); mu-power verdict "
    << verdict_name(rep.verdict) << " with witness elements (0,1),(0,2): "
    << (verdict_ok ? "yes" : "no");
  r.detail = d.str();
  return r;
}

CheckResult check_y_monomialization(const ReproOptions& o) {
  CheckResult r;
  Matrix y = matrix_Y();
  const double alphas[] = {0.0, 0.1, 0.5, 1.0, std::numbers::pi / 2.0};
  double dev = 0.0;
  int mono_ok = 0;
  for (double alpha : alphas) {
    UnitaryErrorBasis f = hadamard_basis(h_alpha(alpha), Tolerance{o.eps});
    if (monomializes(y, f.elements(), Tolerance{o.eps})) ++mono_ok;
    UnitaryErrorBasis listed = basis_F_prime(alpha);
    for (std::size_t k = 0; k < 16; ++k)
      dev = std::max(dev, max_abs_diff(conj_by(y, f.element(k)),
                                       listed.element(k)));
  }
  r.measured = dev;
  r.tolerance = o.eps;
  r.pass = r.measured <= r.tolerance && mono_ok == 5;
  std::ostringstream d;
  d << "Y-conjugates of hadamard_basis(h_alpha) match the stored monomial "
       "listing; monomial form confirmed at "
    << mono_ok << "/5 alpha values in {0, 0.1, 0.5, 1.0, pi/2}";
  r.detail = d.str();
  return r;
}

CheckResult check_adjoint_closure(const ReproOptions& o) {
  CheckResult r;
  Tolerance tol{o.eps};
  NonzeroThreshold th{o.theta};
  int violations = 0;

  ObstructionReport rm = adjoint_closure_obstruction(basis_M(), tol, th);
  if (rm.verdict != Verdict::obstructed || !rm.witness_element ||
      *rm.witness_element != 1)
    ++violations;

  ObstructionReport rc = adjoint_closure_obstruction(
      nice_error_basis(clock_shift_rep(4), tol), tol, th);
  if (rc.verdict != Verdict::not_obstructed) ++violations;

  ObstructionReport rp =
      adjoint_closure_obstruction(nice_error_basis(pauli_rep(), tol), tol, th);
  if (rp.verdict != Verdict::not_obstructed) ++violations;

  r.measured = violations;
  r.tolerance = 0.0;
  r.pass = violations == 0;
  r.detail =
      "stored 16-element basis obstructed with witness element 1 (grid slot "
      "(0,1)); order-4 clock-shift and order-2 Pauli bases not obstructed";
  return r;
}

CheckResult check_hadamard_to_qls(const ReproOptions& o) {
  CheckResult r;
  Tolerance tol{o.eps};
  double dev = 0.0;
  for (std::size_t n = 2; n <= 6; ++n) {
    QuantumLatinSquare q = qls_from_hadamard(fourier(n), tol);
    dev = std::max(dev, qls_deviation(q.rows()));
  }
  for (int k = 0; k < 10; ++k) {
    double alpha = 2.0 * std::numbers::pi * k / 10.0;
    QuantumLatinSquare q = qls_from_hadamard(h_alpha(alpha), tol);
    dev = std::max(dev, qls_deviation(q.rows()));
  }
  r.measured = dev;
  r.tolerance = o.eps;
  r.pass = r.measured <= r.tolerance;
  r.detail =
      "qls_from_hadamard valid for fourier(2..6) and a 10-point h_alpha grid; "
      "largest residual over all 15 squares";
  return r;
}

CheckResult check_containments(const ReproOptions& o) {
  CheckResult r;
  Tolerance tol{o.eps};

  const std::vector<std::vector<std::vector<int>>> grids = {
      {{0, 1}, {1, 0}},
      {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}},
      {{0, 1, 2}, {2, 0, 1}, {1, 2, 0}},
      {{0, 1, 2, 3}, {1, 2, 3, 0}, {2, 3, 0, 1}, {3, 0, 1, 2}},
      {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}}};
  double dev_sm = 0.0;
  for (const auto& g : grids) {
    ClassicalLatinSquare l = validate_latin(g);
    std::vector<HadamardMatrix> hs(l.size(), fourier(l.size()));
    UnitaryErrorBasis a = sm(l, hs, tol);
    UnitaryErrorBasis b = qsm(from_classical(l), hs, tol);
    for (std::size_t k = 0; k < a.elements().size(); ++k)
      dev_sm = std::max(dev_sm, max_abs_diff(a.element(k), b.element(k)));
  }

  double dev_h = 0.0;
  for (const HadamardMatrix& h : {fourier(4), h_alpha(0.3)}) {
    UnitaryErrorBasis direct = hadamard_basis(h, tol);
    HadamardMatrix ht = validate_hadamard(transpose(h.matrix()), tol);
    std::vector<HadamardMatrix> hs(4, ht);
    UnitaryErrorBasis through = qsm(qls_from_hadamard(h, tol), hs, tol);
    for (std::size_t k = 0; k < 16; ++k)
      dev_h = std::max(dev_h, max_abs_diff(direct.element(k),
                                           through.element(k)));
  }

  r.measured = std::max(dev_sm, dev_h);
  r.tolerance = 1e-12;
  r.pass = dev_sm == 0.0 && dev_h <= r.tolerance;
  std::ostringstream d;
  d << "sm equals qsm over the embedded square bit-exactly on 5 squares of "
       "orders 2..4 (deviation "
    << dev_sm
    << "); hadamard_basis factors through qls_from_hadamard with transposed "
       "copies for fourier(4) and h_alpha(0.3)";
  r.detail = d.str();
  return r;
}

CheckResult check_prop_diag_permutation(const ReproOptions& o) {
  CheckResult r;
  Rng rng(o.seed + 101);
  double dev = 0.0;
  for (int t = 0; t < kTrials; ++t) {
    Matrix d = diag(rng.unit_diag(4));
    Permutation p(rng.permutation(4));
    Matrix pm = permutation_matrix(p);
    dev = std::max(dev, max_abs_diff(compose(d, pm),
                                     compose(pm, conjugate_diag(d, p))));
  }
  r.measured = dev;
  r.tolerance = 1e-12;
  r.pass = r.measured <= r.tolerance;
  r.detail = "diagonal-permutation exchange D o P = P o D' over 100 draws";
  return r;
}

CheckResult check_prop_zero_diagonal(const ReproOptions& o) {
  CheckResult r;
  Rng rng(o.seed + 102);
  double dev = 0.0;
  int violations = 0;
  for (int t = 0; t < kTrials; ++t) {
    Matrix a(4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        a(i, j) = i == j ? Complex(0.0) : rng.gaussian_complex();
    std::vector<Complex> dd(4);
    for (auto& z : dd) z = rng.gaussian_complex();
    Matrix d = diag(dd);
    for (const Matrix& prod : {compose(d, a), compose(a, d)}) {
      if (!is_zero_diagonal(prod, Tolerance{o.eps})) ++violations;
      for (std::size_t i = 0; i < 4; ++i)
        dev = std::max(dev, std::abs(prod(i, i)));
    }
  }
  r.measured = dev;
  r.tolerance = 1e-12;
  r.pass = r.measured <= r.tolerance && violations == 0;
  r.detail =
      "left and right diagonal multiples of zero-diagonal matrices keep a "
      "zero diagonal over 100 draws";
  return r;
}

CheckResult check_prop_simmon(const ReproOptions& o) {
  CheckResult r;
  Rng rng(o.seed + 103);
  double worst = 0.0;
  for (int t = 0; t < kTrials; ++t) {
    Matrix u = random_unitary(4, rng.u64());
    Matrix a = conj_by(adjoint(u), random_monomial(rng, 4));
    Matrix b = conj_by(adjoint(u), random_monomial(rng, 4));
    Matrix a12 = power(a, mu(4));
    Matrix b12 = power(b, mu(4));
    worst = std::max(worst,
                     frobenius(compose(a12, b12) - compose(b12, a12)));
  }
  r.measured = worst;
  r.tolerance = 1e-8;
  r.pass = r.measured <= r.tolerance;
  r.detail =
      "12th powers of conjugated monomial pairs commute; largest commutator "
      "Frobenius norm over 100 draws";
  return r;
}

CheckResult check_prop_monomializer(const ReproOptions& o) {
  CheckResult r;
  Rng rng(o.seed + 104);
  double dev0 = 0.0;
  int violations = 0;
  for (int t = 0; t < kTrials; ++t) {
    Matrix u = random_unitary(4, rng.u64());
    std::vector<Matrix> family;
    std::vector<Complex> c;
    for (int k = 0; k < 8; ++k) {
      family.push_back(random_monomial(rng, 4));
      c.push_back(rng.unit_complex());
    }
    Matrix v = adjoint(c[0] * compose(u, family[0]));
    std::vector<Matrix> s;
    for (int k = 0; k < 8; ++k)
      s.push_back(c[k] * compose(compose(u, family[k]), v));
    dev0 = std::max(dev0, max_abs_diff(s[0], Matrix::identity(4)));
    if (!monomializes(adjoint(u), s, Tolerance{o.eps})) ++violations;
  }
  r.measured = dev0;
  r.tolerance = 1e-12;
  r.pass = r.measured <= r.tolerance && violations == 0;
  std::ostringstream d;
  d << "families c_k U T_k V with V = inverse(c_0 U T_0) are normalized "
       "(first element I, headline deviation) and monomialized by "
       "conjugation with adjoint(U) in "
    << (kTrials - violations) << "/" << kTrials << " draws";
  r.detail = d.str();
  return r;
}

CheckResult check_prop_monomial_closure(const ReproOptions& o) {
  CheckResult r;
  Rng rng(o.seed + 105);
  Tolerance tol{o.eps};
  double dev = 0.0;
  int violations = 0;
  for (int t = 0; t < kTrials; ++t) {
    Matrix a = random_monomial(rng, 4);
    Matrix b = random_monomial(rng, 4);
    if (!is_monomial(compose(a, b), tol)) ++violations;
    if (!is_monomial(adjoint(a), tol)) ++violations;
    if (!is_monomial(rng.unit_complex() * a, tol)) ++violations;
    auto md = monomial_decompose(a, tol);
    if (!md) {
      ++violations;
      continue;
    }
    dev = std::max(dev, max_abs_diff(compose(md->d, permutation_matrix(md->p)),
                                     a));
  }
  r.measured = dev;
  r.tolerance = 1e-12;
  r.pass = r.measured <= r.tolerance && violations == 0;
  r.detail =
      "products, adjoints and unit scalar multiples of monomials stay "
      "monomial; D o P decompositions recompose exactly (100 draws)";
  return r;
}

CheckResult check_prop_qls_pushforward(const ReproOptions& o) {
  CheckResult r;
  Rng rng(o.seed + 106);
  Tolerance tol{o.eps};
  double dev = 0.0;
  for (int t = 0; t < kTrials; ++t) {
    HadamardMatrix h = random_h4(rng);
    QuantumLatinSquare q = qls_from_hadamard(h, tol);

    Permutation p1(rng.permutation(4));
    Permutation p1_inv = p1.inverse();
    Matrix pm = permutation_matrix(p1);
    HadamardMatrix h_left = apply_hadamard_equivalence(
        h, {ones_diag(4), p1, Permutation::identity(4), ones_diag(4)}, tol);
    QuantumLatinSquare q_left = qls_from_hadamard(h_left, tol);
    for (std::size_t j = 0; j < 4; ++j)
      dev = std::max(dev, max_abs_diff(q_left.row(j),
                                       conj_by(pm, q.row(p1_inv(j)))));

    Permutation p2(rng.permutation(4));
    HadamardMatrix h_right = apply_hadamard_equivalence(
        h, {ones_diag(4), Permutation::identity(4), p2, ones_diag(4)}, tol);
    QuantumLatinSquare q_right = qls_from_hadamard(h_right, tol);
    for (std::size_t j = 0; j < 4; ++j)
      dev = std::max(dev, max_abs_diff(q_right.row(j), q.row(j)));
  }
  r.measured = dev;
  r.tolerance = o.eps;
  r.pass = r.measured <= r.tolerance;
  r.detail =
      "row-permuted Hadamards give conjugated, reindexed rows; "
      "column-permuted Hadamards leave every row unchanged (100 draws)";
  return r;
}

CheckResult check_prop_ueb_pushforward(const ReproOptions& o) {
  CheckResult r;
  Rng rng(o.seed + 107);
  Tolerance tol{o.eps};
  double dev = 0.0;
  for (int t = 0; t < kTrials; ++t) {
    HadamardMatrix h = random_h4(rng);
    UnitaryErrorBasis base = hadamard_basis(h, tol);

    Permutation p(rng.permutation(4));
    Permutation p_inv = p.inverse();
    Matrix pm = permutation_matrix(p);
    HadamardMatrix h_perm = apply_hadamard_equivalence(
        h, {ones_diag(4), p, Permutation::identity(4), ones_diag(4)}, tol);
    UnitaryErrorBasis permuted = hadamard_basis(h_perm, tol);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        dev = std::max(dev,
                       max_abs_diff(permuted.element(i, j),
                                    conj_by(pm, base.element(i, p_inv(j)))));

    std::vector<Complex> dd = rng.unit_diag(4);
    Matrix dm = diag(dd);
    HadamardMatrix h_scaled = apply_hadamard_equivalence(
        h, {dd, Permutation::identity(4), Permutation::identity(4),
            ones_diag(4)},
        tol);
    UnitaryErrorBasis scaled = hadamard_basis(h_scaled, tol);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        dev = std::max(
            dev, max_abs_diff(scaled.element(i, j),
                              std::conj(dd[j]) *
                                  compose(dm, base.element(i, j))));
  }
  r.measured = dev;
  r.tolerance = o.eps;
  r.pass = r.measured <= r.tolerance;
  r.detail =
      "row-permuted Hadamards conjugate and reindex the basis; a left "
      "diagonal d rescales element (i,j) by conj(d_j) and conjugates by "
      "diag(d) (100 draws)";
  return r;
}

CheckResult check_negative_controls(const ReproOptions& o) {
  CheckResult r;
  Tolerance tol{o.eps};
  int violations = 0;

  {
    std::vector<Matrix> rows = example_qls().rows();
    rows[0](0, 0) += 1e-3;
    try {
      validate_qls(std::move(rows), tol);
      ++violations;
    } catch (const ValidationError&) {
    }
  }
  {
    Matrix m = example_hadamard().matrix();
    m(0, 0) += 1e-3;
    try {
      validate_hadamard(m, tol);
      ++violations;
    } catch (const ValidationError&) {
    }
  }
  {
    std::vector<Matrix> els = basis_M().elements();
    els[0](0, 0) += 1e-3;
    try {
      validate_ueb(std::move(els), Provenance::manual, tol);
      ++violations;
    } catch (const ValidationError&) {
    }
  }

  UnitaryErrorBasis pauli = nice_error_basis(pauli_rep(), tol);
  if (adjoint_closure_obstruction(pauli, tol, NonzeroThreshold{o.theta})
          .verdict != Verdict::not_obstructed)
    ++violations;
  if (mu_power_commutator_obstruction(pauli, NonzeroThreshold{o.theta}, tol)
          .verdict != Verdict::not_obstructed)
    ++violations;

  r.measured = violations;
  r.tolerance = 0.0;
  r.pass = violations == 0;
  r.detail =
      "1e-3 single-entry perturbations rejected by the square, Hadamard and "
      "basis validators; both obstructions on the order-2 Pauli basis "
      "inconclusive";
  return r;
}

struct Entry {
  const char* name;
  const char* group;
  CheckResult (*fn)(const ReproOptions&);
};

constexpr Entry kChecks[] = {
    {"example-qls-valid", "qls-example", check_example_qls},
    {"qsm-matches-M", "qsm-reproduction", check_qsm_matches_m},
    {"M-is-UEB", "ueb-axioms", check_m_is_ueb},
    {"commutator", "commutator-obstruction", check_commutator},
    {"y-monomialization", "y-monomialization", check_y_monomialization},
    {"adjoint-closure", "adjoint-closure", check_adjoint_closure},
    {"hadamard-to-qls", "hadamard-to-qls", check_hadamard_to_qls},
    {"containments", "containments", check_containments},
    {"prop-diag-permutation", "property-suites", check_prop_diag_permutation},
    {"prop-zero-diagonal", "property-suites", check_prop_zero_diagonal},
    {"prop-simmon", "property-suites", check_prop_simmon},
    {"prop-monomializer", "property-suites", check_prop_monomializer},
    {"prop-monomial-closure", "property-suites", check_prop_monomial_closure},
    {"prop-qls-pushforward", "property-suites", check_prop_qls_pushforward},
    {"prop-ueb-pushforward", "property-suites", check_prop_ueb_pushforward},
    {"negative-controls", "negative-controls", check_negative_controls},
};

}  // namespace

const std::vector<std::string>& reproduction_check_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const Entry& e : kChecks) v.emplace_back(e.name);
    return v;
  }();
  return names;
}

std::vector<CheckResult> run_reproduction(const ReproOptions& opts) {
  if (opts.eps <= 0.0) throw std::invalid_argument("eps must be positive");
  if (opts.theta <= 0.0) throw std::invalid_argument("theta must be positive");
  if (!opts.only.empty()) {
    bool known = false;
    for (const Entry& e : kChecks)
      if (opts.only == e.name) known = true;
    if (!known)
      throw std::invalid_argument("unknown check \"" + opts.only + "\"");
  }

  std::vector<CheckResult> results;
  for (const Entry& e : kChecks) {
    if (!opts.only.empty() && opts.only != e.name) continue;
    CheckResult r;
    try {
      r = e.fn(opts);
    } catch (const std::exception& ex) {
      r.pass = false;
      r.measured = std::numeric_limits<double>::infinity();
      r.tolerance = 0.0;
      r.detail = std::string("raised: ") + ex.what();
    }
    r.name = e.name;
    r.group = e.group;
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace uebforge
