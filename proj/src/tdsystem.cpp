#include "tdq/tdsystem.hpp"

#include <deque>
#include <optional>
#include <sstream>

#include "tdq/elimination.hpp"

namespace tdq {

namespace {

Matrix shifted(const Matrix& m, const Scalar& s) { return m - s * Matrix::identity(m.dim()); }

std::string idx(const char* name, int i) { return std::string(name) + "_" + std::to_string(i); }

}  // namespace

// ---------------------------------------------------------------- parameters

QRacahParams::QRacahParams(Scalar q, Scalar a, Scalar b, int d)
    : q_(std::move(q)), a_(std::move(a)), b_(std::move(b)), d_(d) {
  if (d_ < 1) throw std::invalid_argument("diameter d must be at least 1");
  if (q_.is_zero() || a_.is_zero() || b_.is_zero())
    throw std::invalid_argument("q, a, b must be nonzero");
  if (pow(q_, 4) == Scalar(1)) throw std::invalid_argument("q^4 must not be 1");
  for (int i = 1; i <= d_; ++i) {
    if (pow(q_, 2 * i) == Scalar(1))
      throw std::invalid_argument("q^" + std::to_string(2 * i) + " must not be 1");
  }
  const Scalar a2 = a_ * a_;
  const Scalar b2 = b_ * b_;
  for (int e = 2 * d_ - 2; e >= 2 - 2 * d_; e -= 2) {
    const Scalar qe = pow(q_, e);
    if (a2 == qe) throw std::invalid_argument("a^2 equals q^" + std::to_string(e));
    if (b2 == qe) throw std::invalid_argument("b^2 equals q^" + std::to_string(e));
  }
}

Spectra eigenvalues(const QRacahParams& p) {
  Spectra s;
  const int d = p.d();
  for (int i = 0; i <= d; ++i) {
    s.theta.push_back(p.a() * pow(p.q(), d - 2 * i) + p.a().inverse() * pow(p.q(), 2 * i - d));
    s.thetastar.push_back(p.b() * pow(p.q(), d - 2 * i) +
                          p.b().inverse() * pow(p.q(), 2 * i - d));
  }
  for (int i = 0; i <= d; ++i) {
    for (int j = i + 1; j <= d; ++j) {
      if (s.theta[i] == s.theta[j] || s.thetastar[i] == s.thetastar[j])
        throw std::logic_error("repeated eigenvalue for parameters that passed validation");
    }
  }
  return s;
}

// ---------------------------------------------------------------- idempotents

std::vector<Matrix> lagrange_idempotents(const Matrix& a, std::span<const Scalar> theta) {
  const std::size_t k = theta.size();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (theta[i] == theta[j]) throw std::invalid_argument("eigenvalues are not distinct");
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < k; ++i) {
    Matrix e = Matrix::identity(a.dim());
    for (std::size_t j = 0; j < k; ++j) {
      if (j == i) continue;
      e = e * shifted(a, theta[j]) / (theta[i] - theta[j]);
    }
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<Matrix> primitive_idempotents(const Matrix& a, std::span<const Scalar> theta) {
  auto es = lagrange_idempotents(a, theta);
  Matrix prod = Matrix::identity(a.dim());
  for (const auto& t : theta) prod = prod * shifted(a, t);
  if (!prod.is_zero())
    throw std::invalid_argument("prod (A - theta_i I) != 0: A is not diagonalizable with this spectrum");
  return es;
}

Subspace eigenspace_sum(std::span<const Matrix> idempotents, int from, int to) {
  Subspace s(idempotents.front().dim());
  for (int i = std::max(from, 0); i <= to && i < static_cast<int>(idempotents.size()); ++i)
    s = s + Subspace::image(idempotents[static_cast<std::size_t>(i)]);
  return s;
}

Matrix tridiagonal_violation(std::span<const Matrix> es, const Matrix& x) {
  Matrix total(x.dim());
  for (std::size_t i = 0; i < es.size(); ++i)
    for (std::size_t j = 0; j < es.size(); ++j)
      if (i > j + 1 || j > i + 1) total += es[i] * x * es[j];
  return total;
}

bool acts_tridiagonally(std::span<const Matrix> es, const Matrix& x) {
  for (std::size_t i = 0; i < es.size(); ++i)
    for (std::size_t j = 0; j < es.size(); ++j)
      if ((i > j + 1 || j > i + 1) && !(es[i] * x * es[j]).is_zero()) return false;
  return true;
}

// ---------------------------------------------------------------- axioms

namespace {

/// Dimension of the unital algebra generated by the given matrices.
std::size_t generated_algebra_dim(const Matrix& x, const Matrix& y) {
  const std::size_t n = x.dim();
  IncrementalBasis basis(n * n);
  std::deque<Matrix> queue;
  const Matrix id = Matrix::identity(n);
  basis.add(id.entries());
  queue.push_back(id);
  while (!queue.empty() && basis.size() < n * n) {
    Matrix m = std::move(queue.front());
    queue.pop_front();
    for (const Matrix* g : {&x, &y}) {
      Matrix next = *g * m;
      if (basis.add(next.entries())) queue.push_back(std::move(next));
    }
  }
  return basis.size();
}

/// Smallest subspace containing v and invariant under x and y.
std::vector<Vector> cyclic_span(const Vector& v, const Matrix& x, const Matrix& y) {
  IncrementalBasis basis(v.size());
  std::vector<Vector> kept;
  std::deque<Vector> queue;
  if (basis.add(v)) {
    kept.push_back(v);
    queue.push_back(v);
  }
  while (!queue.empty()) {
    Vector w = std::move(queue.front());
    queue.pop_front();
    for (const Matrix* g : {&x, &y}) {
      Vector next = *g * w;
      if (basis.add(next)) {
        kept.push_back(next);
        queue.push_back(std::move(next));
      }
    }
  }
  return kept;
}

bool multiplicity_free(std::span<const Matrix> es) {
  for (const auto& e : es)
    if (Subspace::image(e).dim() != 1) return false;
  return true;
}

}  // namespace

CheckReport verify_td_axioms(const Matrix& a, const Matrix& astar, const QRacahParams& params) {
  require_same_dim(a, astar, "verify_td_axioms");
  const auto sp = eigenvalues(params);
  const auto es = lagrange_idempotents(a, sp.theta);
  const auto estars = lagrange_idempotents(astar, sp.thetastar);
  const std::size_t n = a.dim();

  CheckReport report;

  {
    Checker ck;
    const struct {
      const char* name;
      const Matrix* m;
      const std::vector<Scalar>* theta;
      const std::vector<Matrix>* idem;
    } both[] = {{"A", &a, &sp.theta, &es}, {"A*", &astar, &sp.thetastar, &estars}};
    for (const auto& item : both) {
      Matrix prod = Matrix::identity(n);
      for (const auto& t : *item.theta) prod = prod * shifted(*item.m, t);
      ck.zero(std::string(item.name) + ": prod (X - theta_i I) = 0 (simple prescribed spectrum)",
              prod);
      for (std::size_t i = 0; i < item.idem->size(); ++i) {
        ck.holds(std::string(item.name) + ": eigenvalue " + std::to_string(i) + " occurs",
                 !(*item.idem)[i].is_zero());
      }
    }
    report.entries.push_back(ck.finish("i", "each of A, A* is diagonalizable"));
  }
  {
    Checker ck;
    for (std::size_t i = 0; i < es.size(); ++i)
      for (std::size_t j = 0; j < es.size(); ++j)
        if (i > j + 1 || j > i + 1)
          ck.zero("E_" + std::to_string(i) + " A* E_" + std::to_string(j) + " = 0",
                  es[i] * astar * es[j]);
    report.entries.push_back(ck.finish("ii", "A* V_i in V_{i-1} + V_i + V_{i+1}"));
  }
  {
    Checker ck;
    for (std::size_t i = 0; i < estars.size(); ++i)
      for (std::size_t j = 0; j < estars.size(); ++j)
        if (i > j + 1 || j > i + 1)
          ck.zero("E*_" + std::to_string(i) + " A E*_" + std::to_string(j) + " = 0",
                  estars[i] * a * estars[j]);
    report.entries.push_back(ck.finish("iii", "A V*_i in V*_{i-1} + V*_i + V*_{i+1}"));
  }
  {
    ReportEntry e;
    e.id = "iv";
    e.anchor = "no proper nonzero subspace invariant under both A and A*";
    e.assertions = 1;
    const std::size_t alg = generated_algebra_dim(a, astar);
    if (alg == n * n) {
      e.status = Status::Pass;
    } else {
      // Look for a common invariant subspace generated by a single vector.
      std::vector<Vector> seeds;
      for (const auto* family : {&es, &estars})
        for (const auto& p : *family) {
          const Subspace image = Subspace::image(p);
          seeds.insert(seeds.end(), image.basis().begin(), image.basis().end());
        }
      const Subspace everything = Subspace::full(n);
      seeds.insert(seeds.end(), everything.basis().begin(), everything.basis().end());
      std::optional<std::vector<Vector>> found;
      for (const auto& v : seeds) {
        auto span = cyclic_span(v, a, astar);
        if (span.size() < n) {
          found = std::move(span);
          break;
        }
      }
      const bool spectra_ok = report.entries[0].status == Status::Pass;
      if (found) {
        e.status = Status::Fail;
        e.detail = "common invariant subspace of dimension " + std::to_string(found->size()) +
                   " (generated algebra has dimension " + std::to_string(alg) + ")";
        e.witness = columns_as_matrix(n, *found);
      } else if (spectra_ok && (multiplicity_free(es) || multiplicity_free(estars))) {
        // Every invariant subspace contains an eigenvector, and each one generates V.
        e.status = Status::Pass;
        e.detail = "irreducible (every eigenvector generates V); generated algebra has dimension " +
                   std::to_string(alg);
      } else {
        e.status = Status::Inconclusive;
        e.detail = "generated algebra has dimension " + std::to_string(alg) + " < " +
                   std::to_string(n * n) + " and no invariant subspace was found";
      }
    }
    report.entries.push_back(std::move(e));
  }
  return report;
}

// ---------------------------------------------------------------- split form

std::pair<Matrix, Matrix> split_form_matrices(const QRacahParams& params,
                                              std::span<const Scalar> phi) {
  const int d = params.d();
  if (static_cast<int>(phi.size()) != d)
    throw std::invalid_argument("phi must have exactly d = " + std::to_string(d) + " entries");
  const auto sp = eigenvalues(params);
  const auto n = static_cast<std::size_t>(d + 1);
  Matrix a(n), astar(n);
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = sp.theta[i];
    astar(i, i) = sp.thetastar[i];
    if (i + 1 < n) {
      a(i + 1, i) = Scalar(1);
      astar(i, i + 1) = phi[i];
    }
  }
  return {a, astar};
}

bool SplitFormCandidate::valid() const { return axioms.count(Status::Pass) == axioms.entries.size(); }

SplitFormCandidate construct_split_form(const QRacahParams& params, std::span<const Scalar> phi) {
  for (std::size_t i = 0; i < phi.size(); ++i)
    if (phi[i].is_zero())
      throw std::invalid_argument("phi_" + std::to_string(i + 1) + " must be nonzero");
  auto [a, astar] = split_form_matrices(params, phi);
  SplitFormCandidate c{a, astar, verify_td_axioms(a, astar, params)};
  return c;
}

std::vector<Scalar> candidate_phi(const QRacahParams& p, const Scalar& c) {
  if (c.is_zero()) throw std::invalid_argument("c must be nonzero");
  const Scalar& q = p.q();
  const int d = p.d();
  const Scalar ab_inv = (p.a() * p.b()).inverse();
  std::vector<Scalar> phi;
  for (int i = 1; i <= d; ++i) {
    const Scalar s = pow(q, 2 * i - d - 1);
    phi.push_back(p.a() * p.b() * pow(q, 2 * d) * pow(q, 2 - 4 * i) *
                  (Scalar(1) - pow(q, 2 * i)) * (Scalar(1) - pow(q, 2 * i - 2 * d - 2)) *
                  (Scalar(1) - c * ab_inv * s) * (Scalar(1) - c.inverse() * ab_inv * s));
  }
  return phi;
}

namespace {

/// w^T A v / (phi_{k-1} phi_k), where w is the left eigenvector of the
/// split-form A* for thetastar_{k-2} (normalized at k-2) and v the right
/// eigenvector for thetastar_k (normalized at k). Affine in phi.
Scalar corner_entry(const QRacahParams& params, const std::vector<Scalar>& phi, int k) {
  const auto sp = eigenvalues(params);
  const auto& ts = sp.thetastar;
  const int n = params.d() + 1;
  auto phi_at = [&](int m) { return phi[static_cast<std::size_t>(m - 1)]; };  // 1-based
  Vector w(static_cast<std::size_t>(n), Scalar(0));
  Vector v(static_cast<std::size_t>(n), Scalar(0));
  w[static_cast<std::size_t>(k - 2)] = Scalar(1);
  for (int m = k - 1; m < n; ++m)
    w[m] = w[m - 1] * phi_at(m) / (ts[static_cast<std::size_t>(k - 2)] - ts[m]);
  v[static_cast<std::size_t>(k)] = Scalar(1);
  for (int m = k - 1; m >= 0; --m)
    v[m] = phi_at(m + 1) * v[m + 1] / (ts[static_cast<std::size_t>(k)] - ts[m]);
  const auto [a, unused] = split_form_matrices(params, phi);
  const Vector av = a * v;
  Scalar e(0);
  for (int m = 0; m < n; ++m) e += w[m] * av[m];
  return e / (phi_at(k - 1) * phi_at(k));
}

}  // namespace

std::vector<Scalar> solve_phi(const QRacahParams& params, const Scalar& phi1) {
  const int d = params.d();
  const auto du = static_cast<std::size_t>(d);
  if (d == 1) return {phi1};
  // Row 0 pins phi_1; row k-1 is corner_entry(k) = 0 for k = 2..d.
  Matrix system(du);
  Vector rhs(du, Scalar(0));
  system(0, 0) = Scalar(1);
  rhs[0] = phi1;
  const std::vector<Scalar> ones(du, Scalar(1));
  for (int k = 2; k <= d; ++k) {
    const auto row = static_cast<std::size_t>(k - 1);
    const Scalar base = corner_entry(params, ones, k);
    for (std::size_t j = 0; j < du; ++j) {
      auto bumped = ones;
      bumped[j] = Scalar(2);
      system(row, j) = corner_entry(params, bumped, k) - base;
    }
    Scalar constant = base;
    for (std::size_t j = 0; j < du; ++j) constant -= system(row, j);
    rhs[row] = -constant;
  }
  if (!system.invertible())
    throw TDSystemError("the constraints E*_{k-2} A E*_k = 0 do not determine phi from phi_1");
  return system.inverse() * rhs;
}

std::vector<Scalar> find_phi(const QRacahParams& params, const Scalar& c) {
  const auto failed_axioms = [](const CheckReport& r) {
    std::string s;
    for (const auto& e : r.entries)
      if (e.status != Status::Pass) s += (s.empty() ? "" : ", ") + e.id + " (" + to_string(e.status) + ")";
    return s;
  };
  const auto nonzero = [](const std::vector<Scalar>& phi) {
    for (const auto& x : phi)
      if (x.is_zero()) return false;
    return true;
  };

  std::vector<Scalar> candidate = candidate_phi(params, c);
  std::string why;
  if (nonzero(candidate)) {
    auto sf = construct_split_form(params, candidate);
    if (sf.valid()) return candidate;
    why = "candidate failed axiom(s) " + failed_axioms(sf.axioms);
  } else {
    why = "candidate has a zero entry";
  }

  const Scalar phi1 = candidate[0].is_zero() ? c : candidate[0];
  std::vector<Scalar> solved;
  try {
    solved = solve_phi(params, phi1);
  } catch (const TDSystemError& e) {
    throw TDSystemError("find_phi: " + why + "; " + e.what());
  }
  if (!nonzero(solved)) throw TDSystemError("find_phi: " + why + "; solver produced a zero phi");
  auto sf = construct_split_form(params, solved);
  if (!sf.valid()) {
    throw TDSystemError("find_phi: " + why + "; solver result failed axiom(s) " +
                            failed_axioms(sf.axioms),
                        sf.axioms);
  }
  return solved;
}

// ---------------------------------------------------------------- TDSystem

TDSystem::TDSystem(const Matrix& a, const Matrix& astar, const QRacahParams& params, bool verified)
    : params_(params), a_(a), astar_(astar), verified_(verified) {
  require_same_dim(a, astar, "TDSystem");
  if (a.dim() < static_cast<std::size_t>(params.d() + 1))
    throw DimensionError("dimension is smaller than d + 1");
  auto sp = eigenvalues(params);
  theta_ = std::move(sp.theta);
  thetastar_ = std::move(sp.thetastar);
  e_ = lagrange_idempotents(a_, theta_);
  estar_ = lagrange_idempotents(astar_, thetastar_);
}

TDSystem TDSystem::from_matrices(const Matrix& a, const Matrix& astar, const QRacahParams& params) {
  auto report = verify_td_axioms(a, astar, params);
  for (const auto& e : report.entries) {
    if (e.status != Status::Pass) {
      throw TDSystemError("TD axiom (" + e.id + ") " + to_string(e.status) +
                              (e.detail.empty() ? "" : ": " + e.detail),
                          report);
    }
  }
  return TDSystem(a, astar, params, true);
}

TDSystem TDSystem::unchecked(const Matrix& a, const Matrix& astar, const QRacahParams& params) {
  return TDSystem(a, astar, params, false);
}

TDSystem downarrow(const TDSystem& tds) {
  TDSystem down = tds.verified() ? TDSystem::from_matrices(tds.a(), tds.astar(), tds.params().reversed())
                                 : TDSystem::unchecked(tds.a(), tds.astar(), tds.params().reversed());
  const int d = tds.d();
  for (int i = 0; i <= d; ++i) {
    const auto fi = static_cast<std::size_t>(i);
    const auto ri = static_cast<std::size_t>(d - i);
    if (down.theta()[fi] != tds.theta()[ri] || down.e()[fi] != tds.e()[ri])
      throw std::logic_error("downarrow: reversed bookkeeping does not match E_{d-i}");
  }
  return down;
}

// ---------------------------------------------------------------- split decompositions

Matrix SplitDecomposition::basis_matrix() const {
  std::vector<Vector> cols;
  for (const auto& p : parts)
    for (const auto& v : p.basis()) cols.push_back(v);
  const std::size_t n = parts.front().ambient_dim();
  if (cols.size() != n) throw TDSystemError("split decomposition is not a basis of V");
  return Matrix::from_columns(cols);
}

SplitDecomposition split_parts(const TDSystem& tds, SplitFlavor flavor) {
  SplitDecomposition s;
  s.flavor = flavor;
  const int d = tds.d();
  for (int i = 0; i <= d; ++i) {
    const Subspace lower = eigenspace_sum(tds.estar(), 0, i);
    const Subspace upper = flavor == SplitFlavor::First ? eigenspace_sum(tds.e(), i, d)
                                                        : eigenspace_sum(tds.e(), 0, d - i);
    s.parts.push_back(intersect(lower, upper));
  }
  return s;
}

void check_split_decomposition(const TDSystem& tds, const SplitDecomposition& split, Checker& ck) {
  const int d = tds.d();
  const std::size_t n = tds.dim();
  const bool first = split.flavor == SplitFlavor::First;
  const char* u = first ? "U" : "U^down";
  auto part = [&](int i) {
    if (i < 0 || i > d) return Subspace(n);
    return split.parts[static_cast<std::size_t>(i)];
  };
  for (int i = 0; i <= d; ++i) ck.holds(idx(u, i) + " != 0", !part(i).is_zero());
  ck.holds(std::string(u) + " is a direct sum decomposition of V",
           is_direct_sum_decomposition(split.parts));
  for (int i = 0; i <= d; ++i) {
    Subspace head(n), tail(n);
    for (int k = 0; k <= i; ++k) head = head + part(k);
    for (int k = i; k <= d; ++k) tail = tail + part(k);
    ck.subspace_equal(std::string(first ? "(s1)" : "(s3)") + " i=" + std::to_string(i), head,
                      eigenspace_sum(tds.estar(), 0, i));
    ck.subspace_equal(std::string(first ? "(s2)" : "(s4)") + " i=" + std::to_string(i), tail,
                      first ? eigenspace_sum(tds.e(), i, d) : eigenspace_sum(tds.e(), 0, d - i));
  }
  for (int i = 0; i <= d; ++i) {
    const Scalar& th = tds.theta()[static_cast<std::size_t>(first ? i : d - i)];
    const Scalar& ths = tds.thetastar()[static_cast<std::size_t>(i)];
    ck.maps_into("(A - theta I) " + idx(u, i) + " in " + idx(u, i + 1), shifted(tds.a(), th),
                 part(i), part(i + 1));
    ck.maps_into("(A* - theta*_i I) " + idx(u, i) + " in " + idx(u, i - 1),
                 shifted(tds.astar(), ths), part(i), part(i - 1));
  }
}

SplitDecomposition split_decomposition(const TDSystem& tds, SplitFlavor flavor) {
  auto s = split_parts(tds, flavor);
  Checker ck;
  check_split_decomposition(tds, s, ck);
  if (ck.failed()) throw TDSystemError("split decomposition check failed: " + ck.first_failure());
  return s;
}

bool confirm_standard_orderings(const TDSystem& tds) {
  std::vector<Matrix> rev_e(tds.e().rbegin(), tds.e().rend());
  std::vector<Matrix> rev_es(tds.estar().rbegin(), tds.estar().rend());
  return acts_tridiagonally(tds.e(), tds.astar()) && acts_tridiagonally(rev_e, tds.astar()) &&
         acts_tridiagonally(tds.estar(), tds.a()) && acts_tridiagonally(rev_es, tds.a());
}

}  // namespace tdq
