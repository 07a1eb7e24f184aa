#include "uebforge/ueb.hpp"

#include <cmath>
#include <numbers>

namespace uebforge {

std::string provenance_name(Provenance p) {
  switch (p) {
    case Provenance::qsm: return "qsm";
    case Provenance::sm: return "sm";
    case Provenance::hadamard: return "hadamard";
    case Provenance::nice: return "nice";
    case Provenance::manual: return "manual";
  }
  throw std::logic_error("unreachable provenance tag");
}

std::optional<Provenance> provenance_from_name(const std::string& s) {
  if (s == "qsm") return Provenance::qsm;
  if (s == "sm") return Provenance::sm;
  if (s == "hadamard") return Provenance::hadamard;
  if (s == "nice") return Provenance::nice;
  if (s == "manual") return Provenance::manual;
  return std::nullopt;
}

UnitaryErrorBasis validate_ueb(std::vector<Matrix> elements, Provenance prov,
                               Tolerance tol) {
  if (elements.empty()) throw std::invalid_argument("empty element family");
  std::size_t n = elements[0].size();
  if (elements.size() != n * n)
    throw std::invalid_argument("expected " + std::to_string(n * n) +
                                " elements of order " + std::to_string(n) +
                                ", got " + std::to_string(elements.size()));
  for (std::size_t a = 0; a < elements.size(); ++a) {
    if (elements[a].size() != n)
      throw std::invalid_argument("element " + std::to_string(a) +
                                  " has order " +
                                  std::to_string(elements[a].size()) +
                                  ", expected " + std::to_string(n));
    double dev = unitarity_deviation(elements[a]);
    if (dev > tol.eps)
      throw ValidationError("element " + std::to_string(a) +
                            " is not unitary (deviation " +
                            std::to_string(dev) + ")");
  }
  double nn = static_cast<double>(n);
  for (std::size_t a = 0; a < elements.size(); ++a)
    for (std::size_t b = a; b < elements.size(); ++b) {
      Complex ip = hs_inner(elements[a], elements[b]);
      Complex want = (a == b) ? Complex(nn, 0.0) : Complex(0.0, 0.0);
      if (std::abs(ip - want) > tol.eps)
        throw ValidationError("trace orthogonality violated for pair (" +
                              std::to_string(a) + ", " + std::to_string(b) +
                              "): inner product " + format_complex(ip));
    }
  return UnitaryErrorBasis(n, std::move(elements), prov);
}

double ueb_deviation(const std::vector<Matrix>& elements) {
  if (elements.empty()) return 0.0;
  std::size_t n = elements[0].size();
  double nn = static_cast<double>(n);
  double dev = 0.0;
  for (const auto& e : elements) dev = std::max(dev, unitarity_deviation(e));
  for (std::size_t a = 0; a < elements.size(); ++a)
    for (std::size_t b = a; b < elements.size(); ++b) {
      Complex want = (a == b) ? Complex(nn, 0.0) : Complex(0.0, 0.0);
      dev = std::max(dev,
                     std::abs(hs_inner(elements[a], elements[b]) - want));
    }
  return dev;
}

namespace {

std::vector<Matrix> qsm_elements(const QuantumLatinSquare& q,
                                 const std::vector<HadamardMatrix>& hs) {
  std::size_t n = q.size();
  if (hs.size() != n)
    throw std::invalid_argument("expected " + std::to_string(n) +
                                " Hadamard matrices, got " +
                                std::to_string(hs.size()));
  for (std::size_t j = 0; j < n; ++j)
    if (hs[j].size() != n)
      throw std::invalid_argument("Hadamard " + std::to_string(j) +
                                  " has order " +
                                  std::to_string(hs[j].size()) +
                                  ", expected " + std::to_string(n));
  std::vector<Matrix> elements;
  elements.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      elements.push_back(compose(q.row(j), diag_row(hs[j].matrix(), i)));
  return elements;
}

}  // namespace

UnitaryErrorBasis qsm(const QuantumLatinSquare& q,
                      const std::vector<HadamardMatrix>& hs, Tolerance tol) {
  return validate_ueb(qsm_elements(q, hs), Provenance::qsm, tol);
}

UnitaryErrorBasis sm(const ClassicalLatinSquare& l,
                     const std::vector<HadamardMatrix>& hs, Tolerance tol) {
  return validate_ueb(qsm_elements(from_classical(l), hs), Provenance::sm,
                      tol);
}

UnitaryErrorBasis hadamard_basis(const HadamardMatrix& h, Tolerance tol) {
  std::size_t n = h.size();
  const Matrix& m = h.matrix();
  Matrix hadj = adjoint(m);
  Matrix ht = transpose(m);
  Complex scale(1.0 / static_cast<double>(n), 0.0);
  std::vector<Matrix> elements;
  elements.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    Matrix right = diag_row(ht, i);
    for (std::size_t j = 0; j < n; ++j) {
      Matrix e = scale * compose(m, compose(adjoint(diag_row(m, j)),
                                            compose(hadj, right)));
      elements.push_back(std::move(e));
    }
  }
  return validate_ueb(std::move(elements), Provenance::hadamard, tol);
}

Group validate_group(std::vector<std::vector<std::size_t>> table) {
  std::size_t m = table.size();
  if (m == 0) throw std::invalid_argument("empty Cayley table");
  for (std::size_t g = 0; g < m; ++g) {
    if (table[g].size() != m)
      throw std::invalid_argument("Cayley table row " + std::to_string(g) +
                                  " has " + std::to_string(table[g].size()) +
                                  " entries, expected " + std::to_string(m));
    for (std::size_t h = 0; h < m; ++h)
      if (table[g][h] >= m)
        throw std::invalid_argument("Cayley table entry (" +
                                    std::to_string(g) + ", " +
                                    std::to_string(h) + ") out of range");
  }
  // Identity: a two-sided unit.
  std::size_t identity = m;
  for (std::size_t e = 0; e < m; ++e) {
    bool ok = true;
    for (std::size_t g = 0; g < m && ok; ++g)
      ok = table[e][g] == g && table[g][e] == g;
    if (ok) {
      identity = e;
      break;
    }
  }
  if (identity == m)
    throw ValidationError("Cayley table has no identity element");
  std::vector<std::size_t> inverse(m, m);
  for (std::size_t g = 0; g < m; ++g) {
    for (std::size_t h = 0; h < m; ++h)
      if (table[g][h] == identity && table[h][g] == identity) {
        inverse[g] = h;
        break;
      }
    if (inverse[g] == m)
      throw ValidationError("element " + std::to_string(g) +
                            " has no inverse");
  }
  for (std::size_t g = 0; g < m; ++g)
    for (std::size_t h = 0; h < m; ++h)
      for (std::size_t k = 0; k < m; ++k)
        if (table[table[g][h]][k] != table[g][table[h][k]])
          throw ValidationError("associativity fails at (" +
                                std::to_string(g) + ", " + std::to_string(h) +
                                ", " + std::to_string(k) + ")");
  return Group(std::move(table), identity, std::move(inverse));
}

Group direct_product_cyclic(std::size_t a, std::size_t b) {
  if (a == 0 || b == 0)
    throw std::invalid_argument("cyclic factors must be positive");
  std::size_t m = a * b;
  std::vector<std::vector<std::size_t>> table(m,
                                              std::vector<std::size_t>(m));
  for (std::size_t g = 0; g < m; ++g)
    for (std::size_t h = 0; h < m; ++h) {
      std::size_t x = (g / b + h / b) % a;
      std::size_t y = (g % b + h % b) % b;
      table[g][h] = x * b + y;
    }
  return validate_group(std::move(table));
}

ProjectiveRepresentation validate_projective_rep(Group group,
                                                 std::vector<Matrix> images,
                                                 Tolerance tol) {
  std::size_t m = group.order();
  if (images.size() != m)
    throw std::invalid_argument("expected " + std::to_string(m) +
                                " images, got " +
                                std::to_string(images.size()));
  std::size_t n = images[0].size();
  for (std::size_t g = 0; g < m; ++g) {
    if (images[g].size() != n)
      throw std::invalid_argument("image " + std::to_string(g) +
                                  " has order " +
                                  std::to_string(images[g].size()) +
                                  ", expected " + std::to_string(n));
    double dev = unitarity_deviation(images[g]);
    if (dev > tol.eps)
      throw ValidationError("image " + std::to_string(g) +
                            " is not unitary (deviation " +
                            std::to_string(dev) + ")");
  }
  double idev = max_abs_diff(images[group.identity()], Matrix::identity(n));
  if (idev > tol.eps)
    throw ValidationError(
        "image of the identity element deviates from I by " +
        std::to_string(idev));
  for (std::size_t g = 0; g < m; ++g)
    for (std::size_t h = 0; h < m; ++h) {
      Matrix prod = compose(images[g], images[h]);
      if (!proportional(prod, images[group.product(g, h)], tol))
        throw ValidationError("projective property fails at pair (" +
                              std::to_string(g) + ", " + std::to_string(h) +
                              "): rho(g) rho(h) is not proportional to "
                              "rho(gh)");
    }
  return ProjectiveRepresentation{std::move(group), std::move(images)};
}

ProjectiveRepresentation clock_shift_rep(std::size_t n) {
  if (n == 0) throw std::invalid_argument("dimension must be positive");
  Matrix shift(n);
  for (std::size_t k = 0; k < n; ++k) shift((k + 1) % n, k) = 1.0;
  Matrix clock(n);
  for (std::size_t k = 0; k < n; ++k) {
    double t = 2.0 * std::numbers::pi * static_cast<double>(k) /
               static_cast<double>(n);
    clock(k, k) = Complex(std::cos(t), std::sin(t));
  }
  Group group = direct_product_cyclic(n, n);
  std::vector<Matrix> images;
  images.reserve(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      images.push_back(compose(power(shift, a), power(clock, b)));
  return validate_projective_rep(std::move(group), std::move(images));
}

ProjectiveRepresentation pauli_rep() {
  Matrix x = Matrix::from_rows({{0, 1}, {1, 0}});
  Matrix y = Matrix::from_rows({{0, Complex(0, -1)}, {Complex(0, 1), 0}});
  Matrix z = Matrix::from_rows({{1, 0}, {0, -1}});
  // Index (a, b) = a*2 + b: (0,0) -> I, (1,0) -> X, (0,1) -> Z, (1,1) -> Y.
  return validate_projective_rep(
      direct_product_cyclic(2, 2),
      {Matrix::identity(2), z, x, y});
}

bool rho_adjoint_identity_check(const ProjectiveRepresentation& rep,
                                Tolerance tol) {
  for (std::size_t g = 0; g < rep.group.order(); ++g)
    if (!proportional(adjoint(rep.images[g]),
                      rep.images[rep.group.inverse(g)], tol))
      return false;
  return true;
}

UnitaryErrorBasis nice_error_basis(const ProjectiveRepresentation& rep,
                                   Tolerance tol) {
  ProjectiveRepresentation checked =
      validate_projective_rep(rep.group, rep.images, tol);
  std::size_t m = checked.group.order();
  std::size_t n = checked.images[0].size();
  if (m != n * n)
    throw std::invalid_argument("group order " + std::to_string(m) +
                                " does not equal dimension squared " +
                                std::to_string(n * n));
  for (std::size_t g = 0; g < m; ++g) {
    if (g == checked.group.identity()) continue;
    double t = std::abs(trace(checked.images[g]));
    if (t > tol.eps)
      throw ValidationError("image " + std::to_string(g) +
                            " has nonzero trace " + std::to_string(t));
  }
  return validate_ueb(checked.images, Provenance::nice, tol);
}

UebEquivalenceWitness UebEquivalenceWitness::identity(std::size_t n) {
  std::vector<std::size_t> pairing(n * n);
  for (std::size_t k = 0; k < n * n; ++k) pairing[k] = k;
  return {Matrix::identity(n), Matrix::identity(n),
          std::vector<Complex>(n * n, Complex(1.0, 0.0)), pairing};
}

UnitaryErrorBasis apply_ueb_equivalence(const UnitaryErrorBasis& b,
                                        const UebEquivalenceWitness& w,
                                        Tolerance tol) {
  std::size_t n = b.dim();
  std::size_t count = n * n;
  if (w.u.size() != n || w.v.size() != n)
    throw std::invalid_argument("witness order mismatch");
  if (!is_unitary(w.u, tol) || !is_unitary(w.v, tol))
    throw std::invalid_argument("witness matrices must be unitary");
  if (w.c.size() != count)
    throw std::invalid_argument("expected " + std::to_string(count) +
                                " scalars, got " + std::to_string(w.c.size()));
  for (std::size_t k = 0; k < count; ++k)
    if (std::abs(std::abs(w.c[k]) - 1.0) > tol.eps)
      throw std::invalid_argument("witness scalar " + std::to_string(k) +
                                  " is not unit modulus");
  if (w.pairing.size() != count)
    throw std::invalid_argument("pairing must have " + std::to_string(count) +
                                " entries");
  Permutation pairing(w.pairing);  // validates bijection
  std::vector<Matrix> elements;
  elements.reserve(count);
  for (std::size_t k = 0; k < count; ++k)
    elements.push_back(
        w.c[k] * compose(w.u, compose(b.element(pairing(k)), w.v)));
  return validate_ueb(std::move(elements), b.provenance(), tol);
}

}  // namespace uebforge
